//! Sparse operators on tensor powers of V. An entry keyed by
//! (lower, upper) multi-indices is the coefficient of x_upper in the image
//! of x_lower, matching the index conventions used throughout: lower
//! indices label inputs, and the matrix product (AB)_i^j = A_i^k B_k^j
//! keeps the left factor's coefficients on the left.

use crate::scalars::Rf;
use std::collections::BTreeMap;

/// Coefficient ring for operator entries: the scalar field itself, or a
/// noncommutative polynomial ring over it.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, s: &Rf) -> Self;
    fn from_scalar(s: Rf) -> Self;
}

impl Coeff for Rf {
    fn zero() -> Self {
        Rf::zero()
    }
    fn one() -> Self {
        Rf::one()
    }
    fn is_zero(&self) -> bool {
        Rf::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Rf::add(self, o)
    }
    fn neg(&self) -> Self {
        Rf::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        Rf::mul(self, o)
    }
    fn scale(&self, s: &Rf) -> Self {
        Rf::mul(self, s)
    }
    fn from_scalar(s: Rf) -> Self {
        s
    }
}

pub type MultiIndex = Vec<u8>;

/// A sparse operator on V^{⊗legs}, dim V = dim. Indices are 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct LegOperator<T> {
    pub dim: usize,
    pub legs: usize,
    entries: BTreeMap<(MultiIndex, MultiIndex), T>,
}

impl<T: Coeff> LegOperator<T> {
    pub fn zero(dim: usize, legs: usize) -> Self {
        LegOperator {
            dim,
            legs,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize, legs: usize) -> Self {
        let mut op = LegOperator::zero(dim, legs);
        for idx in multi_indices(dim, legs) {
            op.entries.insert((idx.clone(), idx), T::one());
        }
        op
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, low: MultiIndex, up: MultiIndex, value: T) {
        debug_assert_eq!(low.len(), self.legs);
        debug_assert_eq!(up.len(), self.legs);
        if value.is_zero() {
            self.entries.remove(&(low, up));
        } else {
            self.entries.insert((low, up), value);
        }
    }

    pub fn add_to(&mut self, low: MultiIndex, up: MultiIndex, value: T) {
        if value.is_zero() {
            return;
        }
        let key = (low, up);
        let new = match self.entries.get(&key) {
            Some(old) => old.add(&value),
            None => value,
        };
        if new.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, new);
        }
    }

    pub fn get(&self, low: &[u8], up: &[u8]) -> T {
        self.entries
            .get(&(low.to_vec(), up.to_vec()))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &T)> {
        self.entries.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.dim, self.legs), (o.dim, o.legs));
        let mut out = self.clone();
        for ((low, up), v) in &o.entries {
            out.add_to(low.clone(), up.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg())
    }

    pub fn scale(&self, s: &Rf) -> Self {
        if s.is_zero() {
            return LegOperator::zero(self.dim, self.legs);
        }
        self.map(|v| v.scale(s))
    }

    pub fn map<F: Fn(&T) -> T>(&self, f: F) -> Self {
        let mut out = LegOperator::zero(self.dim, self.legs);
        for ((low, up), v) in &self.entries {
            out.set(low.clone(), up.clone(), f(v));
        }
        out
    }

    /// Changes the coefficient ring entrywise.
    pub fn map_into<S: Coeff, F: Fn(&T) -> S>(&self, f: F) -> LegOperator<S> {
        let mut out = LegOperator::zero(self.dim, self.legs);
        for ((low, up), v) in &self.entries {
            out.set(low.clone(), up.clone(), f(v));
        }
        out
    }

    /// The matrix product: (AB)_i^j = Σ_k A_i^k B_k^j with A's
    /// coefficients kept on the left.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!((self.dim, self.legs), (o.dim, o.legs));
        let mut by_low: BTreeMap<&MultiIndex, Vec<(&MultiIndex, &T)>> = BTreeMap::new();
        for ((low, up), v) in &o.entries {
            by_low.entry(low).or_default().push((up, v));
        }
        let mut out = LegOperator::zero(self.dim, self.legs);
        for ((low, mid), a) in &self.entries {
            if let Some(row) = by_low.get(mid) {
                for (up, b) in row {
                    out.add_to(low.clone(), (*up).clone(), a.mul(b));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = LegOperator::identity(self.dim, self.legs);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Places the operator at legs position…position+legs−1 of a
    /// `total`-leg space, identity elsewhere.
    pub fn embed(&self, position: usize, total: usize) -> Self {
        assert!(position >= 1 && position + self.legs - 1 <= total);
        let mut out = LegOperator::zero(self.dim, total);
        let outer = total - self.legs;
        for ctx in multi_indices(self.dim, outer) {
            for ((low, up), v) in &self.entries {
                let mut full_low = Vec::with_capacity(total);
                let mut full_up = Vec::with_capacity(total);
                full_low.extend_from_slice(&ctx[..position - 1]);
                full_low.extend_from_slice(low);
                full_low.extend_from_slice(&ctx[position - 1..]);
                full_up.extend_from_slice(&ctx[..position - 1]);
                full_up.extend_from_slice(up);
                full_up.extend_from_slice(&ctx[position - 1..]);
                out.set(full_low, full_up, v.clone());
            }
        }
        out
    }

    /// Contracts the listed legs (1-based, strictly increasing). With a
    /// weight W (an N×N one-leg operator over the scalar field), each leg
    /// is traced as Tr_s(W_s · M); without it, as the plain trace.
    pub fn trace_legs(&self, legs: &[usize], weight: Option<&LegOperator<Rf>>) -> Self {
        assert!(!legs.is_empty());
        assert!(legs.windows(2).all(|w| w[0] < w[1]));
        assert!(legs.iter().all(|&s| s >= 1 && s <= self.legs));
        let keep: Vec<usize> = (1..=self.legs).filter(|s| !legs.contains(s)).collect();
        let mut out = LegOperator::zero(self.dim, keep.len());
        for ((low, up), v) in &self.entries {
            // Tr_s(W_s M) = Σ_{a,k} W_a^k M[low_s=k][up_s=a]
            let mut factor = Rf::one();
            let mut vanished = false;
            for &s in legs {
                let k = low[s - 1];
                let a = up[s - 1];
                let w = match weight {
                    Some(w) => w.get(&[a], &[k]),
                    None => {
                        if a == k {
                            Rf::one()
                        } else {
                            Rf::zero()
                        }
                    }
                };
                if w.is_zero() {
                    vanished = true;
                    break;
                }
                factor = factor.mul(&w);
            }
            if vanished {
                continue;
            }
            let rlow: MultiIndex = keep.iter().map(|&s| low[s - 1]).collect();
            let rup: MultiIndex = keep.iter().map(|&s| up[s - 1]).collect();
            out.add_to(rlow, rup, v.scale(&factor));
        }
        out
    }

    /// The full (weighted) trace: all legs contracted.
    pub fn full_trace(&self, weight: Option<&LegOperator<Rf>>) -> T {
        let legs: Vec<usize> = (1..=self.legs).collect();
        let traced = self.trace_legs(&legs, weight);
        traced.get(&[], &[])
    }

    /// Dense row-major matrix with rows indexed by lower multi-indices.
    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let size = self.dim.pow(self.legs as u32);
        let mut rows = vec![vec![T::zero(); size]; size];
        for ((low, up), v) in &self.entries {
            rows[flatten(low, self.dim)][flatten(up, self.dim)] = v.clone();
        }
        rows
    }

    /// A witness string for the first nonzero entry, if any.
    pub fn first_entry_witness(&self) -> Option<String>
    where
        T: std::fmt::Display,
    {
        self.entries
            .iter()
            .next()
            .map(|((low, up), v)| format!("entry {:?}->{:?}: {}", low, up, v))
    }
}

fn flatten(idx: &[u8], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + (i as usize - 1))
}

/// All multi-indices of the given length with 1-based components.
pub fn multi_indices(dim: usize, legs: usize) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for _ in 0..legs {
        let mut next = Vec::with_capacity(out.len() * dim);
        for idx in &out {
            for i in 1..=dim as u8 {
                let mut e = idx.clone();
                e.push(i);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    fn flip(dim: usize) -> LegOperator<Rf> {
        let mut p = LegOperator::zero(dim, 2);
        for i in 1..=dim as u8 {
            for j in 1..=dim as u8 {
                p.set(vec![i, j], vec![j, i], Rf::one());
            }
        }
        p
    }

    #[test]
    fn flip_squares_to_identity() {
        let p = flip(3);
        assert_eq!(p.mul(&p), LegOperator::identity(3, 2));
    }

    #[test]
    fn embed_positions() {
        let p = flip(2);
        let p12 = p.embed(1, 3);
        let p23 = p.embed(2, 3);
        // braid relation for the flip
        let lhs = p12.mul(&p23).mul(&p12);
        let rhs = p23.mul(&p12).mul(&p23);
        assert_eq!(lhs, rhs);
        // P12 P23 P12 is the 1<->3 transposition
        assert_eq!(lhs.get(&[1, 2, 2], &[2, 2, 1]), Rf::one());
    }

    #[test]
    fn plain_trace() {
        let id: LegOperator<Rf> = LegOperator::identity(2, 2);
        let t = id.trace_legs(&[2], None);
        assert_eq!(t, LegOperator::identity(2, 1).scale(&parse_scalar("2").unwrap()));
        assert_eq!(id.full_trace(None), parse_scalar("4").unwrap());
    }

    #[test]
    fn weighted_trace_matches_definition() {
        // Tr_s(W_s M) with M = flip: Tr_2(W_2 P) should give W placed on leg 1
        // transposed appropriately: (Tr_2 W_2 P)_i^j = Σ_{a,k} W_a^k P_{ik}^{ja}
        // = W_i^j since P_{ik}^{ja} = δ_i^a δ_k^j.
        let mut w = LegOperator::zero(2, 1);
        w.set(vec![1], vec![1], parse_scalar("q").unwrap());
        w.set(vec![2], vec![2], parse_scalar("q^-1").unwrap());
        w.set(vec![1], vec![2], parse_scalar("t").unwrap());
        let p = flip(2);
        let traced = p.trace_legs(&[2], Some(&w));
        assert_eq!(traced, w);
    }

    #[test]
    fn trace_order_independence() {
        let mut w = LegOperator::zero(2, 1);
        w.set(vec![1], vec![1], parse_scalar("q").unwrap());
        w.set(vec![2], vec![1], parse_scalar("u").unwrap());
        w.set(vec![2], vec![2], parse_scalar("1").unwrap());
        let p = flip(2).embed(1, 3);
        let both = p.trace_legs(&[1, 3], Some(&w));
        let one_then_other = p
            .trace_legs(&[3], Some(&w))
            .trace_legs(&[1], Some(&w));
        assert_eq!(both, one_then_other);
    }
}
