//! Fully reduced linear echelon over the word-indexed vector space, with
//! optional tracking of each row as a combination of the inserted
//! vectors. All pivots are monic; reduction yields a canonical projection
//! onto the complement of the span.

use super::ncpoly::{word_cmp, NcPoly, Word};
use crate::scalars::Rf;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct EchelonRow {
    pub poly: NcPoly,
    /// Linear combination of input tags producing this row.
    pub combo: Vec<(usize, Rf)>,
}

pub struct Echelon {
    rows: Vec<EchelonRow>,
    by_pivot: BTreeMap<Word, usize>,
    track: bool,
}

fn merge_combo(into: &mut Vec<(usize, Rf)>, from: &[(usize, Rf)], scale: &Rf) {
    for (tag, c) in from {
        let add = c.mul(scale);
        if add.is_zero() {
            continue;
        }
        match into.iter_mut().find(|(t, _)| t == tag) {
            Some((_, existing)) => *existing = existing.add(&add),
            None => into.push((*tag, add)),
        }
    }
    into.retain(|(_, c)| !c.is_zero());
}

impl Echelon {
    pub fn new(track: bool) -> Echelon {
        Echelon {
            rows: Vec::new(),
            by_pivot: BTreeMap::new(),
            track,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.by_pivot.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &EchelonRow> {
        self.by_pivot.values().map(|&i| &self.rows[i])
    }

    fn reduce_internal(&self, p: &NcPoly, combo: Option<&mut Vec<(usize, Rf)>>) -> NcPoly {
        let mut out = p.clone();
        let mut combo = combo;
        // pivots visited in decreasing order; row tails contain no pivot
        // words, so one pass is complete
        for (pivot, &idx) in self.by_pivot.iter().rev() {
            let c = out.coeff(pivot);
            if c.is_zero() {
                continue;
            }
            let row = &self.rows[idx];
            out = out.sub(&row.poly.scale(&c));
            if let Some(ref mut combo) = combo {
                merge_combo(combo, &row.combo, &c);
            }
        }
        out
    }

    /// Canonical residual of `p` modulo the span.
    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        self.reduce_internal(p, None)
    }

    /// Residual plus the combination of inserted vectors that was
    /// subtracted: p = residual + sum_i c_i * input_i.
    pub fn reduce_with_certificate(&self, p: &NcPoly) -> (NcPoly, Vec<(usize, Rf)>) {
        assert!(self.track);
        let mut combo = Vec::new();
        let res = self.reduce_internal(p, Some(&mut combo));
        (res, combo)
    }

    /// Inserts a vector tagged with `tag`; returns false if it was
    /// already in the span.
    pub fn insert(&mut self, p: NcPoly, tag: usize) -> bool {
        let mut combo = Vec::new();
        let reduced = self.reduce_internal(&p, if self.track { Some(&mut combo) } else { None });
        let Some((pivot, lead)) = reduced.leading().map(|(w, c)| (w.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().unwrap();
        let monic = reduced.scale(&inv);
        if self.track {
            // combo currently expresses the subtracted part; the row is
            // (p - subtracted)/lead = (tag - combo)/lead
            for (_, c) in combo.iter_mut() {
                *c = c.neg().mul(&inv);
            }
            merge_combo(&mut combo, &[(tag, Rf::one())], &inv);
        }
        let row = EchelonRow { poly: monic, combo };
        // back-substitute the new pivot out of existing rows
        let new_idx = self.rows.len();
        for &idx in self.by_pivot.values() {
            let c = self.rows[idx].poly.coeff(&pivot);
            if c.is_zero() {
                continue;
            }
            let updated = self.rows[idx].poly.sub(&row.poly.scale(&c));
            if self.track {
                let row_combo = row.combo.clone();
                merge_combo(&mut self.rows[idx].combo, &row_combo, &c.neg());
            }
            self.rows[idx].poly = updated;
        }
        debug_assert!(word_cmp(&pivot, &pivot).is_eq());
        self.rows.push(row);
        self.by_pivot.insert(pivot, new_idx);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    fn rf(s: &str) -> Rf {
        parse_scalar(s).unwrap()
    }

    #[test]
    fn span_membership() {
        let mut e = Echelon::new(false);
        let a = NcPoly::gen(1).sub(&NcPoly::gen(2));
        let b = NcPoly::gen(2).sub(&NcPoly::gen(3));
        assert!(e.insert(a.clone(), 0));
        assert!(e.insert(b.clone(), 1));
        // g1 - g3 is in the span
        let p = NcPoly::gen(1).sub(&NcPoly::gen(3));
        assert!(e.reduce(&p).is_zero());
        // g1 alone is not
        assert!(!e.reduce(&NcPoly::gen(1)).is_zero());
        // duplicates rejected
        assert!(!e.insert(a.scale(&rf("q")), 2));
    }

    #[test]
    fn certificate_reconstructs_input() {
        let mut e = Echelon::new(true);
        let v0 = NcPoly::gen(1).add(&NcPoly::gen(2).scale(&rf("q")));
        let v1 = NcPoly::gen(2).sub(&NcPoly::gen(3));
        e.insert(v0.clone(), 0);
        e.insert(v1.clone(), 1);
        let p = v0.scale(&rf("u")).add(&v1.scale(&rf("1/(q-1)")));
        let (res, cert) = e.reduce_with_certificate(&p);
        assert!(res.is_zero());
        let mut back = NcPoly::zero();
        for (tag, c) in &cert {
            let v = if *tag == 0 { &v0 } else { &v1 };
            back = back.add(&v.scale(c));
        }
        assert_eq!(back, p);
    }

    #[test]
    fn certificate_of_partial_reduction() {
        let mut e = Echelon::new(true);
        let v0 = NcPoly::gen(2).add(&NcPoly::gen(1));
        e.insert(v0.clone(), 7);
        let p = NcPoly::gen(2).scale(&rf("3")).add(&NcPoly::gen(4));
        let (res, cert) = e.reduce_with_certificate(&p);
        let mut back = res;
        for (tag, c) in &cert {
            assert_eq!(*tag, 7);
            back = back.add(&v0.scale(c));
        }
        assert_eq!(back, p);
    }
}
