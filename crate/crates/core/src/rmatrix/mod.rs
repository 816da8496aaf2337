//! Braidings on V⊗V: built-in families, file input, skew-inverse
//! computation, the B/C trace operators, R-traces, trace-identity
//! verification, and Baxterized current R-matrices.

mod baxter;
mod file;
mod legop;

pub use baxter::{CurrentForm, CurrentRMatrix};
pub use file::braiding_from_toml;
pub use legop::{multi_indices, Coeff, LegOperator, MultiIndex};

use crate::linalg::solve_dense;
use crate::ncalg::NcPoly;
use crate::report::Report;
use crate::scalars::{q_int, Rf, ScalarError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RMatrixError {
    #[error("braid relation violated: {0}")]
    BraidRelation(String),
    #[error("operator is neither an involutive nor a Hecke symmetry")]
    NotASymmetry,
    #[error("operator is not skew-invertible")]
    NotSkewInvertible,
    #[error("current Yang-Baxter equation failed: {0}")]
    CurrentYangBaxter(String),
    #[error("bad operator file: {0}")]
    File(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidingKind {
    Involutive,
    Hecke,
}

/// A validated braiding with its cached skew-inverse data. Immutable
/// after construction.
#[derive(Clone, Debug)]
pub struct Braiding {
    pub dim: usize,
    pub kind: BraidingKind,
    pub r: LegOperator<Rf>,
    pub r_inv: LegOperator<Rf>,
    pub psi: LegOperator<Rf>,
    pub b: LegOperator<Rf>,
    pub c: LegOperator<Rf>,
}

impl Braiding {
    /// Validates the braid relation and the symmetry condition, then
    /// computes the skew-inverse and the B/C operators.
    pub fn from_operator(r: LegOperator<Rf>) -> Result<Braiding, RMatrixError> {
        assert_eq!(r.legs, 2);
        let dim = r.dim;
        let r1 = r.embed(1, 3);
        let r2 = r.embed(2, 3);
        let braid = r1.mul(&r2).mul(&r1).sub(&r2.mul(&r1).mul(&r2));
        if let Some(w) = braid.first_entry_witness() {
            return Err(RMatrixError::BraidRelation(w));
        }
        let id = LegOperator::identity(dim, 2);
        let (kind, r_inv) = if r.mul(&r) == id {
            (BraidingKind::Involutive, r.clone())
        } else {
            let q = Rf::q();
            let hecke = id
                .scale(&q)
                .sub(&r)
                .mul(&id.scale(&q.inv().unwrap()).add(&r));
            if !hecke.is_zero() {
                return Err(RMatrixError::NotASymmetry);
            }
            // R^{-1} = R - (q - q^{-1})I from the Hecke condition
            let shift = q.sub(&q.inv().unwrap());
            (BraidingKind::Hecke, r.sub(&id.scale(&shift)))
        };
        let psi = solve_skew_inverse(&r).ok_or(RMatrixError::NotSkewInvertible)?;
        let b = psi.trace_legs(&[1], None);
        let c = psi.trace_legs(&[2], None);
        let braiding = Braiding {
            dim,
            kind,
            r,
            r_inv,
            psi,
            b,
            c,
        };
        debug_assert!(braiding.skew_inverse_witness().is_none());
        Ok(braiding)
    }

    /// The permutation operator P.
    pub fn flip(n: usize) -> Braiding {
        Braiding::from_operator(flip_operator(n)).unwrap()
    }

    /// The signed flip on a Z2-graded space with m even and n odd basis
    /// vectors: x_i⊗x_j -> (-1)^{p(i)p(j)} x_j⊗x_i.
    pub fn superflip(m: usize, n: usize) -> Braiding {
        let dim = m + n;
        let mut op = LegOperator::zero(dim, 2);
        for i in 1..=dim as u8 {
            for j in 1..=dim as u8 {
                let odd = |x: u8| (x as usize) > m;
                let sign = if odd(i) && odd(j) {
                    Rf::from_int(-1)
                } else {
                    Rf::one()
                };
                op.set(vec![i, j], vec![j, i], sign);
            }
        }
        Braiding::from_operator(op).unwrap()
    }

    /// The standard Hecke symmetry deforming the flip: q on matching
    /// diagonal pairs, a flip part off the diagonal, and the q - q^{-1}
    /// correction above it.
    pub fn drinfeld_jimbo(n: usize) -> Braiding {
        let q = Rf::q();
        let shift = q.sub(&q.inv().unwrap());
        let mut op = LegOperator::zero(n, 2);
        for i in 1..=n as u8 {
            for j in 1..=n as u8 {
                if i == j {
                    op.set(vec![i, i], vec![i, i], q.clone());
                } else {
                    op.set(vec![i, j], vec![j, i], Rf::one());
                    if i < j {
                        op.set(vec![i, j], vec![i, j], shift.clone());
                    }
                }
            }
        }
        Braiding::from_operator(op).unwrap()
    }

    /// Residual of the defining skew-inverse contraction: Tr_2 of
    /// R_12 Psi_23 minus the 1-3 permutation. None means it holds.
    pub fn skew_inverse_witness(&self) -> Option<String> {
        let lhs = self
            .r
            .embed(1, 3)
            .mul(&self.psi.embed(2, 3))
            .trace_legs(&[2], None);
        let mut p13 = LegOperator::zero(self.dim, 2);
        for i in 1..=self.dim as u8 {
            for j in 1..=self.dim as u8 {
                p13.set(vec![i, j], vec![j, i], Rf::one());
            }
        }
        lhs.sub(&p13).first_entry_witness()
    }

    /// Residual of the braid relation on three legs. None means it holds.
    pub fn braid_witness(&self) -> Option<String> {
        let r1 = self.r.embed(1, 3);
        let r2 = self.r.embed(2, 3);
        r1.mul(&r2)
            .mul(&r1)
            .sub(&r2.mul(&r1).mul(&r2))
            .first_entry_witness()
    }

    /// Residual of the kind relation: R^2 - I (involutive) or the Hecke
    /// product (qI - R)(q^{-1}I + R). None means it holds.
    pub fn kind_witness(&self) -> Option<String> {
        let id = LegOperator::identity(self.dim, 2);
        let res = match self.kind {
            BraidingKind::Involutive => self.r.mul(&self.r).sub(&id),
            BraidingKind::Hecke => {
                let q = Rf::q();
                id.scale(&q)
                    .sub(&self.r)
                    .mul(&id.scale(&q.inv().unwrap()).add(&self.r))
            }
        };
        res.first_entry_witness()
    }

    /// The left R-trace of a one-leg matrix over any coefficient ring:
    /// Tr(CM).
    pub fn r_trace<T: Coeff>(&self, m: &LegOperator<T>) -> T {
        assert_eq!(m.legs, 1);
        m.full_trace(Some(&self.c))
    }

    /// R-traces over the listed legs of a multi-leg operator (left
    /// convention, weight C).
    pub fn partial_r_trace<T: Coeff>(&self, op: &LegOperator<T>, legs: &[usize]) -> LegOperator<T> {
        op.trace_legs(legs, Some(&self.c))
    }

    /// Right-convention partial R-trace (weight B), used by the
    /// right-sided variants.
    pub fn partial_r_trace_right<T: Coeff>(
        &self,
        op: &LegOperator<T>,
        legs: &[usize],
    ) -> LegOperator<T> {
        op.trace_legs(legs, Some(&self.b))
    }
}

pub fn flip_operator(n: usize) -> LegOperator<Rf> {
    let mut op = LegOperator::zero(n, 2);
    for i in 1..=n as u8 {
        for j in 1..=n as u8 {
            op.set(vec![i, j], vec![j, i], Rf::one());
        }
    }
    op
}

/// Solves the defining linear system of the skew-inverse exactly:
/// R_ij^kl Psi_lp^jq = delta_i^q delta_p^k. One N^2 x N^2 matrix shared
/// by all N^2 right-hand sides.
fn solve_skew_inverse(r: &LegOperator<Rf>) -> Option<LegOperator<Rf>> {
    let n = r.dim;
    let nn = n * n;
    let pairs: Vec<(u8, u8)> = (1..=n as u8)
        .flat_map(|a| (1..=n as u8).map(move |b| (a, b)))
        .collect();
    // rows indexed by (i,k); unknown columns by (l,j); rhs columns by (p,q)
    let mut a = vec![vec![Rf::zero(); nn]; nn];
    for (row, &(i, k)) in pairs.iter().enumerate() {
        for (col, &(l, j)) in pairs.iter().enumerate() {
            a[row][col] = r.get(&[i, j], &[k, l]);
        }
    }
    let mut rhs = vec![vec![Rf::zero(); nn]; nn];
    for (row, &(i, k)) in pairs.iter().enumerate() {
        for (col, &(p, q)) in pairs.iter().enumerate() {
            if i == q && p == k {
                rhs[row][col] = Rf::one();
            }
        }
    }
    let x = solve_dense(&a, &rhs)?;
    let mut psi = LegOperator::zero(n, 2);
    for (urow, &(l, j)) in pairs.iter().enumerate() {
        for (ucol, &(p, q)) in pairs.iter().enumerate() {
            psi.set(vec![l, p], vec![j, q], x[urow][ucol].clone());
        }
    }
    Some(psi)
}

/// A generic N x N matrix with abstract noncommuting entries, generator
/// id = (i-1)*N + (j-1) for the entry in row i, column j.
pub fn generic_matrix(n: usize) -> LegOperator<NcPoly> {
    let mut m = LegOperator::zero(n, 1);
    for i in 1..=n as u8 {
        for j in 1..=n as u8 {
            let id = (i as u32 - 1) * n as u32 + (j as u32 - 1);
            m.set(vec![i], vec![j], NcPoly::gen(id));
        }
    }
    m
}

/// Residual of the R-trace projection identity: the R-trace over the
/// second leg of R_1 M_1 R_1^{-1} (and of R_1^{-1} M_1 R_1) must equal
/// I times the R-trace of M, for a fully symbolic M.
pub fn ogievetsky_witness(b: &Braiding) -> Option<String> {
    let m = generic_matrix(b.dim);
    let lift = |op: &LegOperator<Rf>| op.map_into(|v| NcPoly::from_scalar(v.clone()));
    let r1 = lift(&b.r).embed(1, 2);
    let r1_inv = lift(&b.r_inv).embed(1, 2);
    let m1 = m.embed(1, 2);
    let tr_m = b.r_trace(&m);
    let expected =
        LegOperator::<NcPoly>::identity(b.dim, 1).map(|v| v.mul(&tr_m));
    for (label, conj) in [
        ("R M R^-1", r1.mul(&m1).mul(&r1_inv)),
        ("R^-1 M R", r1_inv.mul(&m1).mul(&r1)),
    ] {
        let traced = b.partial_r_trace(&conj, &[2]);
        if let Some(w) = traced.sub(&expected).first_entry_witness() {
            return Some(format!("{}: {}", label, w));
        }
    }
    None
}

/// Collects the witnesses for the trace identities: both B/C partial
/// trace identities, commutation of R with B_1 B_2 and C_1 C_2, the
/// BC and Tr B = Tr C formulas for the given bi-rank, and the R-trace
/// projection identity for a symbolic matrix.
pub fn trace_identity_witnesses(b: &Braiding, bi_rank: (i64, i64)) -> Vec<(String, String)> {
    let mut bad = Vec::new();
    let mut push = |name: &str, w: Option<String>| {
        if let Some(w) = w {
            bad.push((name.to_string(), w));
        }
    };
    let id1 = LegOperator::identity(b.dim, 1);
    // Tr_1 B_1 R_12 = I_2 and Tr_2 C_2 R_12 = I_1
    push(
        "tr1-b1-r",
        b.b.embed(1, 2)
            .mul(&b.r)
            .trace_legs(&[1], None)
            .sub(&id1)
            .first_entry_witness(),
    );
    push(
        "tr2-c2-r",
        b.c.embed(2, 2)
            .mul(&b.r)
            .trace_legs(&[2], None)
            .sub(&id1)
            .first_entry_witness(),
    );
    // R B_1 B_2 = B_1 B_2 R, same for C
    for (name, w) in [("b", &b.b), ("c", &b.c)] {
        let w12 = w.embed(1, 2).mul(&w.embed(2, 2));
        push(
            &format!("r-commutes-{}", name),
            b.r.mul(&w12).sub(&w12.mul(&b.r)).first_entry_witness(),
        );
    }
    // BC = q^{2(n-m)} I and Tr B = Tr C = q^{n-m} (m-n)_q; for an
    // involutive symmetry all formulas specialize at q = 1
    let (m, n) = bi_rank;
    let scale = match b.kind {
        BraidingKind::Hecke => Rf::q_pow(2 * (n - m)),
        BraidingKind::Involutive => Rf::one(),
    };
    push(
        "bc-scalar",
        b.b.mul(&b.c)
            .sub(&id1.scale(&scale))
            .first_entry_witness(),
    );
    let expected_tr = match b.kind {
        BraidingKind::Hecke => Rf::q_pow(n - m).mul(&q_int(m - n)),
        BraidingKind::Involutive => Rf::from_int(m - n),
    };
    let tr_b = b.b.full_trace(None);
    let tr_c = b.c.full_trace(None);
    push(
        "tr-b",
        (tr_b != expected_tr).then(|| format!("Tr B = {}", tr_b)),
    );
    push(
        "tr-c",
        (tr_c != expected_tr).then(|| format!("Tr C = {}", tr_c)),
    );
    push("r-trace-projection", ogievetsky_witness(b));
    bad
}

pub fn check_trace_identities(b: &Braiding, bi_rank: (i64, i64), family: &str) -> Report {
    Report::run(
        "trace-identities",
        &[
            ("family", family.to_string()),
            ("n", b.dim.to_string()),
            ("biRank", format!("({}|{})", bi_rank.0, bi_rank.1)),
        ],
        || {
            let bad = trace_identity_witnesses(b, bi_rank);
            if bad.is_empty() {
                Ok(())
            } else {
                Err(bad
                    .iter()
                    .map(|(n, w)| format!("{}: {}", n, w))
                    .collect::<Vec<_>>()
                    .join("; "))
            }
        },
    )
}
