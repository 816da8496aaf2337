//! The braided Lie structure carried by the modified algebra: bracket and
//! braiding on End(V) extracted by exact linear solves, concrete
//! representations, the braided Jacobi identity, and the affinization
//! cocycle.

use super::{re_algebra, REError, Side};
use crate::linalg::solve_dense;
use crate::ncalg::{lift, overline_copies, NcPoly};
use crate::report::Report;
use crate::rmatrix::{generic_matrix, Braiding, BraidingKind, LegOperator};
use crate::scalars::Rf;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    Vector,
    Covector,
    Adjoint,
}

pub struct BraidedLieData {
    pub dim: usize,
    /// bracket[g1 * N^2 + g2][h]: the h-component of [l_{g1}, l_{g2}].
    pub bracket: Vec<Vec<Rf>>,
    /// qq[g1 * N^2 + g2][h1 * N^2 + h2]: the braiding on End(V)^{(x)2}.
    pub qq: Vec<Vec<Rf>>,
    /// pairing[g1][g2] = B_k^j d_i^l for g1 = l_i^j, g2 = l_k^l.
    pub pairing: Vec<Vec<Rf>>,
}

/// Solves for the bracket and the End-space braiding from their defining
/// matrix identities on the braided copies of the generating matrix.
pub fn braided_lie_data(b: &Braiding) -> Result<BraidedLieData, REError> {
    let n = b.dim;
    let n2 = n * n;
    let l = generic_matrix(n);
    let copies = overline_copies(b, &l, 2, 2);
    let t = copies[0].mul(&copies[1]);
    // the same pattern matrix serves both unknowns: its columns are the
    // length-two words of t's entries
    let mut rows = Vec::new();
    let mut full_entries = Vec::new();
    for i in 1..=n as u8 {
        for k in 1..=n as u8 {
            for j in 1..=n as u8 {
                for m in 1..=n as u8 {
                    full_entries.push((vec![i, k], vec![j, m]));
                }
            }
        }
    }
    let word_index = |w: &[u32]| (w[0] as usize) * n2 + w[1] as usize;
    for (low, up) in &full_entries {
        let entry = t.get(low, up);
        let mut row = vec![Rf::zero(); n2 * n2];
        for (w, c) in entry.iter() {
            assert_eq!(w.len(), 2);
            row[word_index(w)] = c.clone();
        }
        rows.push(row);
    }
    // right-hand sides: the bracket identity and the conjugated tensor
    let rhs_bracket = copies[0].mul(&lift(&b.r)).sub(&lift(&b.r).mul(&copies[0]));
    let rhs_q = lift(&b.r_inv).mul(&t).mul(&lift(&b.r));
    let mut cols = Vec::new();
    for (low, up) in &full_entries {
        let mut col = vec![Rf::zero(); n2 + n2 * n2];
        for (w, c) in rhs_bracket.get(low, up).iter() {
            assert_eq!(w.len(), 1);
            col[w[0] as usize] = c.clone();
        }
        for (w, c) in rhs_q.get(low, up).iter() {
            assert_eq!(w.len(), 2);
            col[n2 + word_index(w)] = c.clone();
        }
        cols.push(col);
    }
    let x = solve_dense(&rows, &cols).ok_or(REError::Singular)?;
    let bracket = (0..n2 * n2)
        .map(|pair| x[pair][..n2].to_vec())
        .collect();
    let qq = (0..n2 * n2)
        .map(|pair| x[pair][n2..].to_vec())
        .collect();
    let mut pairing = vec![vec![Rf::zero(); n2]; n2];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for lu in 0..n {
                    if i == lu {
                        pairing[i * n + j][k * n + lu] =
                            b.b.get(&[k as u8 + 1], &[j as u8 + 1]);
                    }
                }
            }
        }
    }
    Ok(BraidedLieData {
        dim: n,
        bracket,
        qq,
        pairing,
    })
}

/// Evaluates a word of generators as a left-module composition: later
/// letters act first.
fn eval_word(matrices: &[LegOperator<Rf>], w: &[u32], dim: usize) -> LegOperator<Rf> {
    let mut acc = LegOperator::identity(dim, 1);
    for &g in w {
        acc = matrices[g as usize].mul(&acc);
    }
    acc
}

fn eval_poly(matrices: &[LegOperator<Rf>], p: &NcPoly, dim: usize) -> LegOperator<Rf> {
    let mut out = LegOperator::zero(dim, 1);
    for (w, c) in p.iter() {
        out = out.add(&eval_word(matrices, w, dim).scale(c));
    }
    out
}

/// Concrete matrices of the chosen representation, indexed like the
/// generators l_i^j.
pub fn representation_matrices(
    b: &Braiding,
    which: Representation,
) -> Result<Vec<LegOperator<Rf>>, REError> {
    let n = b.dim;
    match which {
        Representation::Vector => {
            let mut out = Vec::new();
            for i in 1..=n as u8 {
                for j in 1..=n as u8 {
                    let mut m = LegOperator::zero(n, 1);
                    for k in 1..=n as u8 {
                        m.add_to(vec![k], vec![i], b.b.get(&[k], &[j]));
                    }
                    out.push(m);
                }
            }
            Ok(out)
        }
        Representation::Covector => {
            let mut out = Vec::new();
            for i in 1..=n as u8 {
                for j in 1..=n as u8 {
                    let mut m = LegOperator::zero(n, 1);
                    for k in 1..=n as u8 {
                        for lu in 1..=n as u8 {
                            m.add_to(vec![k], vec![lu], b.r.get(&[lu, i], &[k, j]).neg());
                        }
                    }
                    out.push(m);
                }
            }
            Ok(out)
        }
        Representation::Adjoint => {
            let data = braided_lie_data(b)?;
            let n2 = n * n;
            let mut out = Vec::new();
            for g in 0..n2 {
                let mut m = LegOperator::zero(n2, 1);
                for g2 in 0..n2 {
                    for (h, c) in data.bracket[g * n2 + g2].iter().enumerate() {
                        m.add_to(vec![g2 as u8 + 1], vec![h as u8 + 1], c.clone());
                    }
                }
                out.push(m);
            }
            Ok(out)
        }
    }
}

/// Substitutes the representation matrices into every defining relation
/// of the modified algebra and demands exact zeros.
pub fn representation_check(b: &Braiding, which: Representation) -> Result<Report, REError> {
    let matrices = representation_matrices(b, which)?;
    let dim = matrices[0].dim;
    let ctx = re_algebra(b, true, Side::Left)?;
    let which_name = match which {
        Representation::Vector => "vector",
        Representation::Covector => "covector",
        Representation::Adjoint => "adjoint",
    };
    let params = [
        ("n", b.dim.to_string()),
        ("representation", which_name.to_string()),
    ];
    Ok(Report::run("representation", &params, || {
        for (idx, rel) in ctx.algebra.relations.iter().enumerate() {
            let value = eval_poly(&matrices, rel, dim);
            if !value.is_zero() {
                return Err(format!(
                    "relation {} violated: {}",
                    idx,
                    value.first_entry_witness().unwrap()
                ));
            }
        }
        Ok(())
    }))
}

type PairVec = Vec<Rf>;

fn apply_q(data: &BraidedLieData, state: &[Rf], slot: usize) -> Vec<Rf> {
    // state over triples g1 g2 g3; the braiding acts on (slot, slot+1)
    let n2 = data.dim * data.dim;
    let mut out = vec![Rf::zero(); n2 * n2 * n2];
    for (idx, c) in state.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let g = [idx / (n2 * n2), (idx / n2) % n2, idx % n2];
        let pair = g[slot] * n2 + g[slot + 1];
        for (hp, qc) in data.qq[pair].iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            let mut h = g;
            h[slot] = hp / n2;
            h[slot + 1] = hp % n2;
            let to = h[0] * n2 * n2 + h[1] * n2 + h[2];
            out[to] = out[to].add(&c.mul(qc));
        }
    }
    out
}

fn bracket_slots(data: &BraidedLieData, state: &[Rf], first: usize) -> PairVec {
    // contracts (first, first+1) of a triple state into one slot
    let n2 = data.dim * data.dim;
    let mut out = vec![Rf::zero(); n2 * n2];
    for (idx, c) in state.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let g = [idx / (n2 * n2), (idx / n2) % n2, idx % n2];
        let spectator = if first == 0 { g[2] } else { g[0] };
        let pair = g[first] * n2 + g[first + 1];
        for (h, bc) in data.bracket[pair].iter().enumerate() {
            if bc.is_zero() {
                continue;
            }
            let to = if first == 0 {
                h * n2 + spectator
            } else {
                spectator * n2 + h
            };
            out[to] = out[to].add(&c.mul(bc));
        }
    }
    out
}

/// The braided Jacobi identity for involutive symmetries: the double
/// bracket of the cyclic-symmetrized triple tensor vanishes.
pub fn braided_jacobi_check(b: &Braiding) -> Result<Report, REError> {
    if b.kind != BraidingKind::Involutive {
        return Err(REError::NotInvolutive);
    }
    let data = braided_lie_data(b)?;
    let n2 = b.dim * b.dim;
    let params = [("n", b.dim.to_string())];
    Ok(Report::run("braided-jacobi", &params, || {
        for g1 in 0..n2 {
            for g2 in 0..n2 {
                for g3 in 0..n2 {
                    let mut e = vec![Rf::zero(); n2 * n2 * n2];
                    e[g1 * n2 * n2 + g2 * n2 + g3] = Rf::one();
                    let q12 = apply_q(&data, &apply_q(&data, &e, 1), 0);
                    let q21 = apply_q(&data, &apply_q(&data, &e, 0), 1);
                    let mut sym = e;
                    for (i, v) in q12.iter().enumerate() {
                        sym[i] = sym[i].add(v);
                    }
                    for (i, v) in q21.iter().enumerate() {
                        sym[i] = sym[i].add(v);
                    }
                    let pair = bracket_slots(&data, &sym, 0);
                    // final bracket on the remaining two slots
                    let mut total = vec![Rf::zero(); n2];
                    for (idx, c) in pair.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (h, bc) in data.bracket[idx].iter().enumerate() {
                            total[h] = total[h].add(&c.mul(bc));
                        }
                    }
                    if total.iter().any(|v| !v.is_zero()) {
                        return Err(format!(
                            "fails on basis triple ({}, {}, {})",
                            g1, g2, g3
                        ));
                    }
                }
            }
        }
        Ok(())
    }))
}

/// The cocycle property of the affinization term: paired against the
/// bracket of the cyclic-symmetrized labeled triple it vanishes.
pub fn affine_cocycle_check(
    b: &Braiding,
    samples: &[(i64, i64, i64)],
) -> Result<Report, REError> {
    if b.kind != BraidingKind::Involutive {
        return Err(REError::NotInvolutive);
    }
    let data = braided_lie_data(b)?;
    let n2 = b.dim * b.dim;
    let sample_desc = samples
        .iter()
        .map(|(a, bb, c)| format!("({},{},{})", a, bb, c))
        .collect::<Vec<_>>()
        .join(" ");
    let params = [("n", b.dim.to_string()), ("degrees", sample_desc)];
    Ok(Report::run("affine-cocycle", &params, || {
        // labeled terms: indices with degree labels and a coefficient
        type Term = ([usize; 3], [i64; 3], Rf);
        let apply_q_labeled = |terms: &[Term], slot: usize| -> Vec<Term> {
            let mut out: Vec<Term> = Vec::new();
            for (g, l, c) in terms {
                let pair = g[slot] * n2 + g[slot + 1];
                for (hp, qc) in data.qq[pair].iter().enumerate() {
                    if qc.is_zero() {
                        continue;
                    }
                    let mut h = *g;
                    let mut hl = *l;
                    h[slot] = hp / n2;
                    h[slot + 1] = hp % n2;
                    hl.swap(slot, slot + 1);
                    out.push((h, hl, c.mul(qc)));
                }
            }
            out
        };
        for &(da, db, dc) in samples {
            for g1 in 0..n2 {
                for g2 in 0..n2 {
                    for g3 in 0..n2 {
                        let start: Vec<Term> =
                            vec![([g1, g2, g3], [da, db, dc], Rf::one())];
                        let mut terms = start.clone();
                        terms.extend(apply_q_labeled(&apply_q_labeled(&start, 1), 0));
                        terms.extend(apply_q_labeled(&apply_q_labeled(&start, 0), 1));
                        // bracket on slots 2,3 then the cocycle pairing
                        let mut total = Rf::zero();
                        for (g, l, c) in &terms {
                            if l[0] + l[1] + l[2] != 0 {
                                continue;
                            }
                            let pair = g[1] * n2 + g[2];
                            for (h, bc) in data.bracket[pair].iter().enumerate() {
                                if bc.is_zero() {
                                    continue;
                                }
                                let w = data.pairing[g[0]][h].clone();
                                if w.is_zero() {
                                    continue;
                                }
                                total = total
                                    .add(&c.mul(bc).mul(&w).mul(&Rf::from_int(l[0])));
                            }
                        }
                        if !total.is_zero() {
                            return Err(format!(
                                "fails at degrees ({},{},{}) triple ({},{},{}): {}",
                                da, db, dc, g1, g2, g3, total
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }))
}
