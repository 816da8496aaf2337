//! Algebras presented by generators and relations, with membership in the
//! two-sided ideal decided by exact linear algebra: the span of all
//! products word * relation * word within a degree (and optional level)
//! budget is echelonized once, then elements are reduced against it.

use super::echelon::Echelon;
use super::ncpoly::{NcPoly, Word};
use crate::scalars::Rf;

/// A generator of a presented algebra. The id of a generator is its index
/// in the algebra's generator list. Levels grade current algebras; they
/// are zero elsewhere.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub level: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>) -> Generator {
        Generator {
            name: name.into(),
            level: 0,
        }
    }

    pub fn with_level(name: impl Into<String>, level: i64) -> Generator {
        Generator {
            name: name.into(),
            level,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    pub gens: Vec<Generator>,
    pub relations: Vec<NcPoly>,
}

impl PresentedAlgebra {
    pub fn word_level(&self, w: &[u32]) -> i64 {
        w.iter().map(|&g| self.gens[g as usize].level).sum()
    }

    fn poly_level(&self, p: &NcPoly) -> i64 {
        p.iter().map(|(w, _)| self.word_level(w)).max().unwrap_or(0)
    }
}

/// Identifies one spanning vector w1 * relation * w2.
#[derive(Clone, Debug)]
pub struct SpanVector {
    pub relation: usize,
    pub left: Word,
    pub right: Word,
}

pub struct IdealReducer {
    ech: Echelon,
    /// Spanning vectors by insertion tag, kept only when tracking.
    pub span: Vec<SpanVector>,
}

/// Words over `gens` generators with length <= max_len and level (per
/// `level_of`) <= max_level, paired with their levels.
fn words_up_to(
    gens: u32,
    max_len: usize,
    max_level: Option<i64>,
    level_of: &dyn Fn(u32) -> i64,
) -> Vec<(Word, i64)> {
    let mut out = vec![(Vec::new(), 0)];
    let mut frontier = vec![(Vec::<u32>::new(), 0i64)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, lev) in &frontier {
            for g in 0..gens {
                let l = lev + level_of(g);
                if max_level.is_some_and(|cap| l > cap) {
                    continue;
                }
                let mut e = w.clone();
                e.push(g);
                next.push((e, l));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

impl IdealReducer {
    /// Echelonizes every w1 * relation * w2 whose total degree stays
    /// within `max_degree` (relations count with their top word length)
    /// and, when given, whose total level stays within `max_level`.
    pub fn new(
        alg: &PresentedAlgebra,
        max_degree: usize,
        max_level: Option<i64>,
        track: bool,
    ) -> IdealReducer {
        let mut ech = Echelon::new(track);
        let mut span = Vec::new();
        let mut next_tag = 0usize;
        let n = alg.gens.len() as u32;
        let level_of = |g: u32| alg.gens[g as usize].level;
        for (ri, rel) in alg.relations.iter().enumerate() {
            let d = rel.degree();
            let l = alg.poly_level(rel);
            if d > max_degree {
                continue;
            }
            let rem_deg = max_degree - d;
            let rem_lev = max_level.map(|cap| cap - l);
            if rem_lev.is_some_and(|r| r < 0) {
                continue;
            }
            let lefts = words_up_to(n, rem_deg, rem_lev, &level_of);
            for (w1, l1) in &lefts {
                let rights = words_up_to(
                    n,
                    rem_deg - w1.len(),
                    rem_lev.map(|r| r - l1),
                    &level_of,
                );
                for (w2, _) in rights {
                    let v = NcPoly::term(w1.clone(), Rf::one())
                        .mul(rel)
                        .mul(&NcPoly::term(w2.clone(), Rf::one()));
                    if v.is_zero() {
                        continue;
                    }
                    let tag = next_tag;
                    next_tag += 1;
                    if track {
                        span.push(SpanVector {
                            relation: ri,
                            left: w1.clone(),
                            right: w2,
                        });
                    }
                    ech.insert(v, tag);
                }
            }
        }
        IdealReducer { ech, span }
    }

    pub fn basis_size(&self) -> usize {
        self.ech.num_rows()
    }

    /// Canonical residual modulo the echelonized span.
    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        self.ech.reduce(p)
    }

    /// Residual together with the combination of spanning vectors that
    /// was subtracted; requires tracking.
    pub fn reduce_with_certificate(&self, p: &NcPoly) -> (NcPoly, Vec<(usize, Rf)>) {
        self.ech.reduce_with_certificate(p)
    }

    /// True when `p` lies in the echelonized part of the ideal. A false
    /// answer only means membership was not established within the
    /// budget.
    pub fn contains(&self, p: &NcPoly) -> bool {
        self.reduce(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    fn rf(s: &str) -> Rf {
        parse_scalar(s).unwrap()
    }

    fn commutative_two_gens() -> PresentedAlgebra {
        // x y - y x = 0 with x = 0, y = 1
        let rel = NcPoly::term(vec![0, 1], Rf::one()).sub(&NcPoly::term(vec![1, 0], Rf::one()));
        PresentedAlgebra {
            gens: vec![Generator::new("x"), Generator::new("y")],
            relations: vec![rel],
        }
    }

    #[test]
    fn commutator_ideal_membership() {
        let alg = commutative_two_gens();
        let red = IdealReducer::new(&alg, 4, None, false);
        // x y x y - y x y x is in the ideal at degree 4
        let p = NcPoly::term(vec![0, 1, 0, 1], Rf::one())
            .sub(&NcPoly::term(vec![1, 0, 1, 0], Rf::one()));
        assert!(red.contains(&p));
        // x y - y y is not
        let q = NcPoly::term(vec![0, 1], Rf::one()).sub(&NcPoly::term(vec![1, 1], Rf::one()));
        assert!(!red.contains(&q));
    }

    #[test]
    fn residual_plus_certificate_reconstructs() {
        let alg = commutative_two_gens();
        let red = IdealReducer::new(&alg, 3, None, true);
        let p = NcPoly::term(vec![1, 0, 0], rf("q"))
            .add(&NcPoly::term(vec![0, 1], rf("u")));
        let (res, cert) = red.reduce_with_certificate(&p);
        let mut back = res;
        for (tag, c) in &cert {
            let sv = &red.span[*tag];
            let v = NcPoly::term(sv.left.clone(), Rf::one())
                .mul(&alg.relations[sv.relation])
                .mul(&NcPoly::term(sv.right.clone(), Rf::one()));
            back = back.add(&v.scale(c));
        }
        assert_eq!(back, p);
    }

    #[test]
    fn level_budget_restricts_span() {
        // one generator of level 1, relation g g = 0
        let rel = NcPoly::term(vec![0, 0], Rf::one());
        let alg = PresentedAlgebra {
            gens: vec![Generator::with_level("g", 1)],
            relations: vec![rel],
        };
        let narrow = IdealReducer::new(&alg, 4, Some(2), false);
        let wide = IdealReducer::new(&alg, 4, Some(4), false);
        assert!(wide.basis_size() > narrow.basis_size());
        let p = NcPoly::term(vec![0, 0, 0], Rf::one());
        assert!(!narrow.contains(&p));
        assert!(wide.contains(&p));
    }

    #[test]
    fn reduction_is_canonical() {
        let alg = commutative_two_gens();
        let red = IdealReducer::new(&alg, 3, None, false);
        // two representatives of the same coset reduce identically
        let p = NcPoly::term(vec![0, 1, 1], rf("3"));
        let shifted = p.add(
            &NcPoly::gen(1).mul(&alg.relations[0]).scale(&rf("q/(q-1)")),
        );
        assert_eq!(red.reduce(&p), red.reduce(&shifted));
        assert_eq!(red.reduce(&red.reduce(&p)), red.reduce(&p));
    }
}
