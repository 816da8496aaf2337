//! Formal sums of words in abstract generators with rational-function
//! coefficients: the ambient free algebra for every identity check.

use crate::rmatrix::Coeff;
use crate::scalars::Rf;
use std::collections::BTreeMap;
use std::fmt;

/// A word in generator ids; the empty word is the unit.
pub type Word = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct NcPoly {
    terms: BTreeMap<Word, Rf>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        NcPoly::from_scalar(Rf::one())
    }

    pub fn from_scalar(s: Rf) -> Self {
        let mut p = NcPoly::zero();
        if !s.is_zero() {
            p.terms.insert(Vec::new(), s);
        }
        p
    }

    pub fn gen(id: u32) -> Self {
        NcPoly::term(vec![id], Rf::one())
    }

    pub fn term(word: Word, coeff: Rf) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rf)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[u32]) -> Rf {
        self.terms.get(word).cloned().unwrap_or_else(Rf::zero)
    }

    pub fn add_term(&mut self, word: Word, coeff: Rf) {
        if coeff.is_zero() {
            return;
        }
        let new = match self.terms.get(&word) {
            Some(old) => old.add(&coeff),
            None => coeff,
        };
        if new.is_zero() {
            self.terms.remove(&word);
        } else {
            self.terms.insert(word, new);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rf) -> Self {
        if s.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.mul(s)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.mul(c2));
            }
        }
        out
    }

    /// The leading word under degree-then-lexicographic order (longer
    /// words first), with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Rf)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| word_cmp(a, b))
    }
}

/// Degree-lexicographic word comparison: longer words are larger; equal
/// lengths compare lexicographically on generator ids.
pub fn word_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl Coeff for NcPoly {
    fn zero() -> Self {
        NcPoly::zero()
    }
    fn one() -> Self {
        NcPoly::one()
    }
    fn is_zero(&self) -> bool {
        NcPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        NcPoly::add(self, o)
    }
    fn neg(&self) -> Self {
        NcPoly::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        NcPoly::mul(self, o)
    }
    fn scale(&self, s: &Rf) -> Self {
        NcPoly::scale(self, s)
    }
    fn from_scalar(s: Rf) -> Self {
        NcPoly::from_scalar(s)
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_empty() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})", c)?;
                for g in w {
                    write!(f, "*g{}", g)?;
                }
            }
        }
        Ok(())
    }
}
