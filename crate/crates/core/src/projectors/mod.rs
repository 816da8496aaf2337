//! Skew-symmetrizers built by the projector recursion, exact rank data
//! for the skew tower, bi-rank determination from the rank generating
//! series, and the partial R-trace reduction of the top projector.

use crate::linalg::{rank_dense, solve_dense};
use crate::report::Report;
use crate::rmatrix::{Braiding, BraidingKind, LegOperator};
use crate::scalars::{q_int, Rf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProjectorError {
    #[error("rank fit not confirmed within kMax = {k_max}; increase it")]
    InsufficientKMax { k_max: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BiRank {
    pub m: usize,
    pub n: usize,
}

/// The q-integer for a Hecke symmetry, its q = 1 limit for an involutive
/// one.
pub fn kind_int(b: &Braiding, k: i64) -> Rf {
    match b.kind {
        BraidingKind::Hecke => q_int(k),
        BraidingKind::Involutive => Rf::from_int(k),
    }
}

pub fn kind_q_pow(b: &Braiding, e: i64) -> Rf {
    match b.kind {
        BraidingKind::Hecke => Rf::q_pow(e),
        BraidingKind::Involutive => Rf::one(),
    }
}

pub fn kind_factorial(b: &Braiding, k: i64) -> Rf {
    let mut acc = Rf::one();
    for j in 1..=k {
        acc = acc.mul(&kind_int(b, j));
    }
    acc
}

/// The tower of skew-symmetrizers P^(1)…P^(kMax); P^(k) acts on k legs.
pub struct SkewSymmetrizerTower {
    pub projectors: Vec<LegOperator<Rf>>,
}

impl SkewSymmetrizerTower {
    pub fn new(b: &Braiding, k_max: usize) -> SkewSymmetrizerTower {
        assert!(k_max >= 1);
        let mut projectors = vec![LegOperator::identity(b.dim, 1)];
        for k in 2..=k_max {
            let prev = projectors.last().unwrap().embed(1, k);
            let rk = b.r.embed(k - 1, k);
            let id = LegOperator::identity(b.dim, k);
            let middle = id
                .scale(&kind_q_pow(b, k as i64 - 1))
                .sub(&rk.scale(&kind_int(b, k as i64 - 1)));
            let p = prev
                .mul(&middle)
                .mul(&prev)
                .scale(&kind_int(b, k as i64).inv().unwrap());
            projectors.push(p);
        }
        SkewSymmetrizerTower { projectors }
    }

    pub fn projector(&self, k: usize) -> &LegOperator<Rf> {
        &self.projectors[k - 1]
    }
}

pub fn skew_symmetrizer(b: &Braiding, k: usize) -> LegOperator<Rf> {
    SkewSymmetrizerTower::new(b, k).projectors.pop().unwrap()
}

/// Exact ranks of P^(1)…P^(kMax) over the function field.
pub fn poincare_ranks(b: &Braiding, k_max: usize) -> Vec<usize> {
    let tower = SkewSymmetrizerTower::new(b, k_max);
    tower
        .projectors
        .iter()
        .map(|p| rank_dense(&p.to_dense()))
        .collect()
}

/// Determines the bi-rank (m|n) as the numerator/denominator degrees of
/// the minimal rational function fitting the rank generating series,
/// requiring the fit to be confirmed on at least two terms beyond those
/// used for solving.
pub fn bi_rank(b: &Braiding, k_max: usize) -> Result<BiRank, ProjectorError> {
    let mut series: Vec<i64> = vec![1];
    series.extend(poincare_ranks(b, k_max).iter().map(|&r| r as i64));
    let err = ProjectorError::InsufficientKMax { k_max };
    for total in 0..series.len() {
        for dn in 0..=total {
            let dm = total - dn;
            // solving uses terms dm+1..=dm+dn; confirmation needs two more
            if dm + dn + 2 > k_max {
                continue;
            }
            if let Some(den) = fit_denominator(&series, dm, dn) {
                if confirm_fit(&series, dm, &den) {
                    return Ok(BiRank { m: dm, n: dn });
                }
            }
        }
    }
    Err(err)
}

/// Solves for monic denominator coefficients d_1..d_dn of a rational
/// function with numerator degree dm, from the recurrence
/// r_k + sum_j d_j r_{k-j} = 0 for k > dm.
fn fit_denominator(series: &[i64], dm: usize, dn: usize) -> Option<Vec<Rf>> {
    if dn == 0 {
        return Some(Vec::new());
    }
    let at = |k: i64| -> Rf {
        if k < 0 || k as usize >= series.len() {
            Rf::zero()
        } else {
            Rf::from_int(series[k as usize])
        }
    };
    let mut a = vec![vec![Rf::zero(); dn]; dn];
    let mut rhs = vec![vec![Rf::zero(); 1]; dn];
    for (row, k) in (dm + 1..=dm + dn).enumerate() {
        for j in 1..=dn {
            a[row][j - 1] = at(k as i64 - j as i64);
        }
        rhs[row][0] = at(k as i64).neg();
    }
    let x = solve_dense(&a, &rhs)?;
    Some(x.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

fn confirm_fit(series: &[i64], dm: usize, den: &[Rf]) -> bool {
    let dn = den.len();
    let at = |k: i64| -> Rf {
        if k < 0 || k as usize >= series.len() {
            Rf::zero()
        } else {
            Rf::from_int(series[k as usize])
        }
    };
    let mut confirmed = 0;
    for k in dm + 1..series.len() {
        let mut acc = at(k as i64);
        for (j, d) in den.iter().enumerate() {
            acc = acc.add(&d.mul(&at(k as i64 - j as i64 - 1)));
        }
        if !acc.is_zero() {
            return false;
        }
        if k > dm + dn {
            confirmed += 1;
        }
    }
    confirmed >= 2
}

/// Residual of the trace reduction: partially R-tracing the top
/// projector over legs k+1..m must reproduce P^(k) times the explicit
/// q-binomial scalar. None means it holds.
pub fn skew_trace_reduction_witness(
    b: &Braiding,
    tower: &SkewSymmetrizerTower,
    m: usize,
    k: usize,
) -> Option<String> {
    assert!(k <= m);
    if k == m {
        return None;
    }
    let legs: Vec<usize> = (k + 1..=m).collect();
    let lhs = b.partial_r_trace(tower.projector(m), &legs);
    let scalar = kind_q_pow(b, -((m * (m - k)) as i64))
        .mul(&kind_factorial(b, k as i64))
        .mul(&kind_factorial(b, (m - k) as i64))
        .div(&kind_factorial(b, m as i64))
        .unwrap();
    let rhs = if k == 0 {
        let mut unit = LegOperator::zero(b.dim, 0);
        unit.set(vec![], vec![], Rf::one());
        unit.scale(&scalar)
    } else {
        tower.projector(k).scale(&scalar)
    };
    lhs.sub(&rhs).first_entry_witness()
}

pub fn check_skew_trace_reduction(b: &Braiding, m: usize, k: usize, family: &str) -> Report {
    Report::run(
        "skew-trace-reduction",
        &[
            ("family", family.to_string()),
            ("m", m.to_string()),
            ("k", k.to_string()),
        ],
        || {
            let tower = SkewSymmetrizerTower::new(b, m);
            match skew_trace_reduction_witness(b, &tower, m, k) {
                None => Ok(()),
                Some(w) => Err(w),
            }
        },
    )
}
