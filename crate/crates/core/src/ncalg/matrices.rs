//! Braided copies of a matrix with noncommutative entries across tensor
//! legs: the first copy sits on leg 1 and successive copies are
//! conjugated along, while the reversed chain starts from the last leg.

use super::ncpoly::NcPoly;
use crate::rmatrix::{Braiding, LegOperator};

/// Reinterprets a scalar operator as one with constant noncommutative
/// entries.
pub fn lift(op: &LegOperator<crate::scalars::Rf>) -> LegOperator<NcPoly> {
    op.map_into(|v| NcPoly::from_scalar(v.clone()))
}

/// The chain M_1bar = M_1, M_kbar = R_{k-1} M_{k-1}bar R_{k-1}^{-1} on
/// `total` legs, returned for k = 1..=count.
pub fn overline_copies(
    b: &Braiding,
    m: &LegOperator<NcPoly>,
    count: usize,
    total: usize,
) -> Vec<LegOperator<NcPoly>> {
    assert_eq!(m.legs, 1);
    assert!(count >= 1 && count <= total);
    let mut out = vec![m.embed(1, total)];
    for k in 2..=count {
        let r = lift(&b.r.embed(k - 1, total));
        let r_inv = lift(&b.r_inv.embed(k - 1, total));
        let prev = out.last().unwrap();
        out.push(r.mul(prev).mul(&r_inv));
    }
    out
}

/// The reversed chain M_munder = M_m, M_kunder = R_k^{-1} M_{k+1}under R_k
/// on `total` legs, returned for k = 1..=count (index 0 holds M_1under).
pub fn underline_copies(
    b: &Braiding,
    m: &LegOperator<NcPoly>,
    count: usize,
    total: usize,
) -> Vec<LegOperator<NcPoly>> {
    assert_eq!(m.legs, 1);
    assert!(count >= 1 && count <= total);
    let mut rev = vec![m.embed(count, total)];
    for k in (1..count).rev() {
        let r = lift(&b.r.embed(k, total));
        let r_inv = lift(&b.r_inv.embed(k, total));
        let prev = rev.last().unwrap();
        rev.push(r_inv.mul(prev).mul(&r));
    }
    rev.reverse();
    rev
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::generic_matrix;

    #[test]
    fn flip_copies_are_plain_placements() {
        let b = Braiding::flip(2);
        let l = generic_matrix(2);
        let over = overline_copies(&b, &l, 3, 3);
        let under = underline_copies(&b, &l, 3, 3);
        for k in 1..=3usize {
            assert_eq!(over[k - 1], l.embed(k, 3));
            assert_eq!(under[k - 1], l.embed(k, 3));
        }
    }

    #[test]
    fn conjugation_chain() {
        let b = Braiding::drinfeld_jimbo(2);
        let l = generic_matrix(2);
        let over = overline_copies(&b, &l, 2, 2);
        let r = lift(&b.r);
        let r_inv = lift(&b.r_inv);
        assert_eq!(over[0], l.embed(1, 2));
        assert_eq!(over[1], r.mul(&over[0]).mul(&r_inv));
        let under = underline_copies(&b, &l, 2, 2);
        assert_eq!(under[1], l.embed(2, 2));
        assert_eq!(under[0], r_inv.mul(&under[1]).mul(&r));
    }
}
