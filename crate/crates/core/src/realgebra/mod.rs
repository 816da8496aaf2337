//! Reflection-equation algebras, plain and modified, left and right:
//! quantum elementary symmetric polynomials, centrality, Cayley-Hamilton
//! identities, the characteristic polynomial in its several forms, and
//! the classical limit with integer shifts.

mod braidedlie;

pub use braidedlie::{
    affine_cocycle_check, braided_jacobi_check, braided_lie_data, representation_check,
    BraidedLieData, Representation,
};

use crate::ncalg::{lift, overline_copies, underline_copies, Generator, IdealReducer, NcPoly,
    PbwAlgebra, PresentedAlgebra};
use crate::projectors::{bi_rank, kind_factorial, kind_int, kind_q_pow, skew_symmetrizer, BiRank,
    ProjectorError};
use crate::rmatrix::{generic_matrix, Braiding, BraidingKind, LegOperator};
use crate::scalars::{Rf, VAR_T};
use crate::report::Report;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum REError {
    #[error("right-sided contexts exist only in modified form")]
    InvalidCombination,
    #[error("symmetric polynomial index {k} outside 0..={m}")]
    KOutOfRange { k: usize, m: usize },
    #[error("operation requires a Hecke symmetry")]
    NotHecke,
    #[error("operation requires an involutive symmetry")]
    NotInvolutive,
    #[error("operation requires bi-rank (m|0), found ({m}|{n})")]
    BiRankNotRow { m: usize, n: usize },
    #[error("bi-rank has m = n; the R-trace of the unit is zero")]
    EqualBiRank,
    #[error("structure-constant system is singular")]
    Singular,
    #[error(transparent)]
    Projector(#[from] ProjectorError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharPolyForm {
    Sum,
    ProductTrace,
    Modified,
}

pub struct REContext {
    pub braiding: Braiding,
    pub modified: bool,
    pub side: Side,
    pub algebra: PresentedAlgebra,
    pub l: LegOperator<NcPoly>,
    pub bi_rank: BiRank,
}

/// The defining relations as a two-leg operator over the free algebra on
/// the entries of `matrix`.
pub fn relation_operator(
    b: &Braiding,
    matrix: &LegOperator<NcPoly>,
    modified: bool,
    side: Side,
) -> LegOperator<NcPoly> {
    let r = lift(&b.r);
    let pos = match side {
        Side::Left => 1,
        Side::Right => 2,
    };
    let l1 = matrix.embed(pos, 2);
    let quad = r.mul(&l1).mul(&r).mul(&l1).sub(&l1.mul(&r).mul(&l1).mul(&r));
    if modified {
        quad.sub(&r.mul(&l1).sub(&l1.mul(&r)))
    } else {
        quad
    }
}

fn operator_entries(op: &LegOperator<NcPoly>) -> Vec<NcPoly> {
    op.iter().map(|(_, v)| v.clone()).collect()
}

/// Builds the RE (or modified RE) context for a braiding, including its
/// bi-rank and the presented algebra on N^2 generators.
pub fn re_algebra(b: &Braiding, modified: bool, side: Side) -> Result<REContext, REError> {
    if side == Side::Right && !modified {
        return Err(REError::InvalidCombination);
    }
    let rank = bi_rank(b, b.dim + 4)?;
    let n = b.dim;
    let l = generic_matrix(n);
    let gens = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| Generator::new(format!("l[{},{}]", i, j))))
        .collect();
    let relations = operator_entries(&relation_operator(b, &l, modified, side));
    Ok(REContext {
        braiding: b.clone(),
        modified,
        side,
        algebra: PresentedAlgebra { gens, relations },
        l,
        bi_rank: rank,
    })
}

impl REContext {
    pub fn reducer(&self, max_degree: usize) -> IdealReducer {
        IdealReducer::new(&self.algebra, max_degree, None, false)
    }

    fn copies(&self, count: usize, total: usize) -> Vec<LegOperator<NcPoly>> {
        match self.side {
            Side::Left => overline_copies(&self.braiding, &self.l, count, total),
            Side::Right => underline_copies(&self.braiding, &self.l, count, total),
        }
    }

    fn trace_weight(&self) -> &LegOperator<Rf> {
        match self.side {
            Side::Left => &self.braiding.c,
            Side::Right => &self.braiding.b,
        }
    }

    /// Weighted trace over all legs of a k-leg operator.
    fn r_trace_all(&self, op: &LegOperator<NcPoly>) -> NcPoly {
        op.full_trace(Some(self.trace_weight()))
    }
}

/// e_k(L): the weighted trace of the skew-symmetrizer against the first k
/// braided copies of the generating matrix; e_0 = 1.
pub fn elementary_symmetric(ctx: &REContext, k: usize) -> Result<NcPoly, REError> {
    let BiRank { m, n } = ctx.bi_rank;
    if n != 0 {
        return Err(REError::BiRankNotRow { m, n });
    }
    if k > m {
        return Err(REError::KOutOfRange { k, m });
    }
    if k == 0 {
        return Ok(NcPoly::one());
    }
    let p = lift(&skew_symmetrizer(&ctx.braiding, k));
    let mut acc = p;
    for copy in ctx.copies(k, k) {
        acc = acc.mul(&copy);
    }
    Ok(ctx.r_trace_all(&acc))
}

/// The power sum p_k = Tr_R L^k.
pub fn power_sum(ctx: &REContext, k: usize) -> NcPoly {
    ctx.r_trace_all(&ctx.l.pow(k))
}

/// Checks that `element` commutes with every generator modulo the
/// relation ideal.
pub fn check_centrality(ctx: &REContext, element: &NcPoly, label: &str) -> Report {
    let params = [
        ("element", label.to_string()),
        ("n", ctx.braiding.dim.to_string()),
    ];
    let red = ctx.reducer(element.degree() + 1);
    Report::run("centrality", &params, || {
        for (id, g) in ctx.algebra.gens.iter().enumerate() {
            let x = NcPoly::gen(id as u32);
            let res = red.reduce(&element.mul(&x).sub(&x.mul(element)));
            if !res.is_zero() {
                return Err(format!("[{}, {}] residual: {}", label, g.name, res));
            }
        }
        Ok(())
    })
}

fn minus_q(b: &Braiding) -> Rf {
    kind_q_pow(b, 1).neg()
}

/// The Cayley-Hamilton identity: the alternating q-weighted sum of
/// L^{m-k} e_k reduces to zero entrywise.
pub fn check_cayley_hamilton(ctx: &REContext) -> Report {
    let params = [
        ("n", ctx.braiding.dim.to_string()),
        ("m", ctx.bi_rank.m.to_string()),
    ];
    Report::run("cayley-hamilton", &params, || {
        if ctx.modified {
            return Err("stated for the plain context".into());
        }
        let BiRank { m, n } = ctx.bi_rank;
        if n != 0 {
            return Err(format!("bi-rank ({}|{}) is not of row type", m, n));
        }
        let mq = minus_q(&ctx.braiding);
        let mut ch = LegOperator::zero(ctx.braiding.dim, 1);
        let mut coeff = Rf::one();
        for k in 0..=m {
            let ek = elementary_symmetric(ctx, k).map_err(|e| e.to_string())?;
            let term = ctx.l.pow(m - k).map(|v| v.mul(&ek)).scale(&coeff);
            ch = ch.add(&term);
            coeff = coeff.mul(&mq);
        }
        // the plain relations are homogeneous and the identity has degree
        // m, so membership at degree m decides it
        let red = ctx.reducer(m);
        for ((low, up), v) in ch.iter() {
            let res = red.reduce(v);
            if !res.is_zero() {
                return Err(format!("entry {:?}->{:?} residual: {}", low, up, res));
            }
        }
        Ok(())
    })
}

/// The characteristic polynomial in the chosen form, with the central
/// indeterminate t carried inside the scalar field.
pub fn characteristic_poly(ctx: &REContext, form: CharPolyForm) -> Result<NcPoly, REError> {
    let BiRank { m, n } = ctx.bi_rank;
    if n != 0 {
        return Err(REError::BiRankNotRow { m, n });
    }
    match (form, ctx.modified) {
        (CharPolyForm::Modified, false) => return Err(REError::InvalidCombination),
        (CharPolyForm::Sum | CharPolyForm::ProductTrace, true) => {
            return Err(REError::InvalidCombination)
        }
        _ => {}
    }
    let b = &ctx.braiding;
    let t = Rf::var(VAR_T);
    match form {
        CharPolyForm::Sum => {
            let mq = minus_q(b);
            let mut out = NcPoly::zero();
            let mut coeff = Rf::one();
            for k in 0..=m {
                let ek = elementary_symmetric(ctx, k)?;
                out = out.add(&ek.scale(&coeff.mul(&Rf::var_pow(VAR_T, (m - k) as i64))));
                coeff = coeff.mul(&mq);
            }
            Ok(out)
        }
        CharPolyForm::ProductTrace | CharPolyForm::Modified => {
            let copies = ctx.copies(m, m);
            let mut acc = lift(&skew_symmetrizer(b, m));
            for k in 1..=m {
                let shift = match form {
                    CharPolyForm::ProductTrace => kind_q_pow(b, 2 * (k as i64 - 1)).mul(&t),
                    CharPolyForm::Modified => kind_q_pow(b, 2 * (k as i64 - 1)).mul(
                        &t.sub(&kind_q_pow(b, -(k as i64 - 1)).mul(&kind_int(b, k as i64 - 1))),
                    ),
                    CharPolyForm::Sum => unreachable!(),
                };
                let factor = lift(&LegOperator::identity(b.dim, m).scale(&shift))
                    .sub(&copies[k - 1]);
                acc = acc.mul(&factor);
            }
            Ok(ctx.r_trace_all(&acc).scale(&kind_q_pow(b, m as i64)))
        }
    }
}

/// Coefficients of the central indeterminate t, constant term first.
pub fn t_coefficients(p: &NcPoly) -> Vec<NcPoly> {
    let deg = p
        .iter()
        .map(|(_, c)| c.numerator().dense_coeffs_in(VAR_T).len())
        .max()
        .unwrap_or(1)
        .max(1);
    let mut out = vec![NcPoly::zero(); deg];
    for (w, c) in p.iter() {
        assert!(
            c.denominator().dense_coeffs_in(VAR_T).len() <= 1,
            "denominator depends on t"
        );
        let den = Rf::from_poly(c.denominator().clone());
        for (j, num) in c.numerator().dense_coeffs_in(VAR_T).into_iter().enumerate() {
            let coeff = Rf::from_poly(num).div(&den).unwrap();
            if !coeff.is_zero() {
                out[j] = out[j].add(&NcPoly::term(w.clone(), coeff));
            }
        }
    }
    out
}

/// Elementary symmetric polynomial of given scalars.
fn sigma(values: &[Rf], k: usize) -> Rf {
    // e-polynomials via the Newton-free recurrence: prod (1 + x v)
    let mut coeffs = vec![Rf::one()];
    for v in values {
        let mut next = vec![Rf::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] = next[i].add(c);
            next[i + 1] = next[i + 1].add(&c.mul(v));
        }
        coeffs = next;
    }
    coeffs.get(k).cloned().unwrap_or_else(Rf::zero)
}

/// The three ingredients of the product-trace form: coefficient-wise
/// agreement with the alternating sum, the scalar sigma identity, and the
/// shift-left property of braided copies under the full R-trace.
pub fn check_char_poly_forms(ctx: &REContext) -> Report {
    let params = [
        ("n", ctx.braiding.dim.to_string()),
        ("m", ctx.bi_rank.m.to_string()),
    ];
    Report::run("char-poly-forms", &params, || {
        let BiRank { m, n } = ctx.bi_rank;
        if n != 0 || ctx.modified {
            return Err("needs a plain context of bi-rank (m|0)".into());
        }
        let b = &ctx.braiding;
        let sum = characteristic_poly(ctx, CharPolyForm::Sum).map_err(|e| e.to_string())?;
        let prod =
            characteristic_poly(ctx, CharPolyForm::ProductTrace).map_err(|e| e.to_string())?;
        let red = ctx.reducer(m);
        let res = red.reduce(&sum.sub(&prod));
        if !res.is_zero() {
            return Err(format!("sum vs product-trace residual: {}", res));
        }
        // sigma_k(t, q^2 t, ..., q^{2(m-1)} t) in closed form
        let t = Rf::var(VAR_T);
        let values: Vec<Rf> = (0..m)
            .map(|j| kind_q_pow(b, 2 * j as i64).mul(&t))
            .collect();
        for k in 0..=m {
            let lhs = sigma(&values, k);
            let binom = kind_factorial(b, m as i64)
                .div(&kind_factorial(b, k as i64).mul(&kind_factorial(b, (m - k) as i64)))
                .unwrap();
            let rhs = kind_q_pow(b, (k * (m - 1)) as i64)
                .mul(&binom)
                .mul(&Rf::var_pow(VAR_T, k as i64));
            if lhs != rhs {
                return Err(format!("sigma identity fails at k = {}", k));
            }
        }
        // shift-left: any ordered subset of copies matches the initial
        // segment under the traced skew-symmetrizer
        let p = lift(&skew_symmetrizer(b, m));
        let copies = ctx.copies(m, m);
        for mask in 1u32..(1 << m) {
            let subset: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
            let k = subset.len();
            let mut lhs = p.clone();
            for &s in &subset {
                lhs = lhs.mul(&copies[s]);
            }
            let mut rhs = p.clone();
            for copy in copies.iter().take(k) {
                rhs = rhs.mul(copy);
            }
            let diff = ctx.r_trace_all(&lhs).sub(&ctx.r_trace_all(&rhs));
            let res = ctx.reducer(k).reduce(&diff);
            if !res.is_zero() {
                return Err(format!("shift-left fails for subset {:?}: {}", subset, res));
            }
        }
        Ok(())
    })
}

/// The generating matrix of U(gl(N)) annihilates its classical
/// characteristic polynomial with integer shifts.
pub fn capelli_check(n: u8) -> Report {
    Report::run("capelli", &[("n", n.to_string())], || {
        let b = Braiding::flip(n as usize);
        let pbw = PbwAlgebra::enveloping_gl(n, 1);
        let mut m = LegOperator::zero(n as usize, 1);
        for i in 1..=n {
            for j in 1..=n {
                m.set(vec![i], vec![j], NcPoly::gen(crate::ncalg::gl_gen(n, 0, i, j)));
            }
        }
        let t = Rf::var(VAR_T);
        let nn = n as usize;
        let mut acc = lift(&skew_symmetrizer(&b, nn));
        for k in 1..=nn {
            let shift = t.sub(&Rf::from_int(k as i64 - 1));
            let factor = lift(&LegOperator::identity(nn, nn).scale(&shift))
                .sub(&m.embed(k, nn));
            acc = acc.mul(&factor);
        }
        let q_t = acc.full_trace(None);
        let coeffs = t_coefficients(&q_t);
        let mut value = LegOperator::zero(nn, 1);
        for (j, c) in coeffs.iter().enumerate() {
            value = value.add(&m.pow(j).map(|v| v.mul(c)));
        }
        for ((low, up), v) in value.iter() {
            let res = pbw.reduce(v);
            if !res.is_zero() {
                return Err(format!("entry {:?}->{:?} normal form: {}", low, up, res));
            }
        }
        Ok(())
    })
}

/// The linear shift between the modified and plain algebras maps each
/// relation system into the other ideal.
pub fn check_shift_isomorphism(b: &Braiding) -> Result<Report, REError> {
    if b.kind != BraidingKind::Hecke {
        return Err(REError::NotHecke);
    }
    let params = [("n", b.dim.to_string())];
    Ok(Report::run("shift-isomorphism", &params, || {
        let plain = re_algebra(b, false, Side::Left).map_err(|e| e.to_string())?;
        let modified = re_algebra(b, true, Side::Left).map_err(|e| e.to_string())?;
        let c = Rf::one()
            .div(&Rf::q().sub(&Rf::q_pow(-1)))
            .unwrap();
        let shift_id = |s: &Rf| lift(&LegOperator::identity(b.dim, 1).scale(s));
        // modified relations in the shifted matrix fall into the plain ideal
        let shifted = generic_matrix(b.dim).add(&shift_id(&c));
        let red = plain.reducer(2);
        for rel in operator_entries(&relation_operator(b, &shifted, true, Side::Left)) {
            let res = red.reduce(&rel);
            if !res.is_zero() {
                return Err(format!("forward residual: {}", res));
            }
        }
        // and conversely with the opposite shift
        let unshifted = generic_matrix(b.dim).sub(&shift_id(&c));
        let red = modified.reducer(2);
        for rel in operator_entries(&relation_operator(b, &unshifted, false, Side::Left)) {
            let res = red.reduce(&rel);
            if !res.is_zero() {
                return Err(format!("backward residual: {}", res));
            }
        }
        Ok(())
    }))
}

pub struct SlProjection {
    /// Traceless combinations f_i^j, indexed like the generators.
    pub f: Vec<NcPoly>,
    /// The scalar tr_R of the R-trace element.
    pub tr_r_ell: Rf,
}

/// Traceless generators f_i^j = l_i^j - d_i^j ell / tr_R(ell); defined
/// only when the bi-rank has m != n.
pub fn sl_projection(ctx: &REContext) -> Result<SlProjection, REError> {
    let BiRank { m, n } = ctx.bi_rank;
    if m == n {
        return Err(REError::EqualBiRank);
    }
    let dim = ctx.braiding.dim;
    let c = &ctx.braiding.c;
    // ell = Tr(CL) as a linear element; tr_R ell is the trace of C
    let mut ell = NcPoly::zero();
    let mut tr_r_ell = Rf::zero();
    for k in 1..=dim as u8 {
        for i in 1..=dim as u8 {
            let w = c.get(&[i], &[k]);
            if !w.is_zero() {
                ell = ell.add(&NcPoly::gen((k as u32 - 1) * dim as u32 + (i as u32 - 1))
                    .scale(&w));
            }
        }
        tr_r_ell = tr_r_ell.add(&c.get(&[k], &[k]));
    }
    let scaled = ell.scale(&Rf::one().div(&tr_r_ell).map_err(|_| REError::EqualBiRank)?);
    let mut f = Vec::new();
    for i in 1..=dim as u8 {
        for j in 1..=dim as u8 {
            let mut g = NcPoly::gen((i as u32 - 1) * dim as u32 + (j as u32 - 1));
            if i == j {
                g = g.sub(&scaled);
            }
            f.push(g);
        }
    }
    Ok(SlProjection { f, tr_r_ell })
}

/// The linear functional sending l_i^j to d_i^j, defined on elements of
/// degree at most one.
pub fn tr_r_linear(dim: usize, p: &NcPoly) -> Rf {
    let mut out = Rf::zero();
    for (w, c) in p.iter() {
        assert!(w.len() <= 1);
        if let [g] = w[..] {
            let (i, j) = (g / dim as u32, g % dim as u32);
            if i == j {
                out = out.add(c);
            }
        }
    }
    out
}

/// Verifies the classical limit of the modified characteristic
/// polynomial: with the flip it coincides with the integer-shift form.
pub fn check_classical_charpoly_limit(n: u8) -> Report {
    Report::run("charpoly-classical-limit", &[("n", n.to_string())], || {
        let b = Braiding::flip(n as usize);
        let ctx = re_algebra(&b, true, Side::Left).map_err(|e| e.to_string())?;
        let modified =
            characteristic_poly(&ctx, CharPolyForm::Modified).map_err(|e| e.to_string())?;
        // the integer-shift polynomial over the same generators
        let nn = n as usize;
        let t = Rf::var(VAR_T);
        let mut acc = lift(&skew_symmetrizer(&b, nn));
        for k in 1..=nn {
            let shift = t.sub(&Rf::from_int(k as i64 - 1));
            let factor = lift(&LegOperator::identity(nn, nn).scale(&shift))
                .sub(&ctx.l.embed(k, nn));
            acc = acc.mul(&factor);
        }
        let classical = acc.full_trace(None);
        let diff = modified.sub(&classical);
        if !diff.is_zero() {
            return Err(format!("difference: {}", diff));
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests;
