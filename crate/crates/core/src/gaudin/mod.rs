//! The classical degeneration of the braided current algebra: the
//! trigonometric current Lie algebra and its deformation-parameter
//! limit check, Talalaev-type commuting elements built from a
//! multiplicative derivative, site evaluation into tensor powers of
//! U(gl(N)), and the classical Poisson counterpart with a rational
//! structure kernel.

use std::collections::BTreeMap;

use crate::ncalg::{gl_gen, lift, Echelon, NcPoly, PbwAlgebra};
use crate::projectors::skew_symmetrizer;
use crate::report::Report;
use crate::rmatrix::{flip_operator, Braiding, BraidingKind, CurrentRMatrix, LegOperator};
use crate::scalars::{h_expand, Rf, ScalarError, VAR_NAMES, VAR_U, VAR_V};
use crate::yangian::{
    bethe_element, relation_buckets, BetheKind, YangianContext, YangianFlavor,
};

#[derive(Debug, thiserror::Error)]
pub enum GaudinError {
    #[error("k = {k} outside 1..={m}")]
    KOutOfRange { k: usize, m: usize },
    #[error("invalid evaluation sites: {0}")]
    InvalidSites(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Generator id of the current coefficient at level s >= 1, row i,
/// column j (1-based).
pub fn trig_gen(n: usize, s: usize, i: usize, j: usize) -> u32 {
    ((s - 1) * n * n + (i - 1) * n + (j - 1)) as u32
}

fn trig_decode(n: usize, id: u32) -> (usize, usize, usize) {
    let id = id as usize;
    (id / (n * n) + 1, (id % (n * n)) / n + 1, id % n + 1)
}

/// The trigonometric current Lie algebra on levels 1..=d: brackets add
/// levels with gl(N) structure constants, and levels beyond the cutoff
/// are dropped, which quotients by an ideal.
pub struct TrigLieContext {
    pub n: usize,
    pub cutoff: usize,
    pub algebra: PbwAlgebra,
}

impl TrigLieContext {
    /// The generating matrix with entries summed against inverse powers
    /// of the chosen variable.
    pub fn matrix(&self, var: u8) -> LegOperator<NcPoly> {
        let mut op = LegOperator::zero(self.n, 1);
        for s in 1..=self.cutoff {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    op.add_to(
                        vec![i as u8],
                        vec![j as u8],
                        NcPoly::gen(trig_gen(self.n, s, i, j))
                            .scale(&Rf::var_pow(var, -(s as i64))),
                    );
                }
            }
        }
        op
    }
}

/// [x[a]_i^j, x[b]_k^l] = d_k^j x[a+b]_i^l - d_i^l x[a+b]_k^j, truncated
/// past the level cutoff.
pub fn trig_algebra(n: usize, d: usize) -> TrigLieContext {
    assert!(n >= 2 && d >= 1);
    let total = (d * n * n) as u32;
    let mut alg = PbwAlgebra::new(total);
    for a in 0..total {
        for b in 0..a {
            let (sa, ia, ja) = trig_decode(n, a);
            let (sb, ib, jb) = trig_decode(n, b);
            let s = sa + sb;
            if s > d {
                continue;
            }
            let mut tail = NcPoly::zero();
            if ja == ib {
                tail = tail.add(&NcPoly::gen(trig_gen(n, s, ia, jb)));
            }
            if ia == jb {
                tail = tail.sub(&NcPoly::gen(trig_gen(n, s, ib, ja)));
            }
            alg.set_commutator(a, b, tail);
        }
    }
    TrigLieContext {
        n,
        cutoff: d,
        algebra: alg,
    }
}

/// Bracket of two elements of degree <= 1, extended bilinearly from the
/// generator commutators; constants are central.
pub fn lie_bracket(alg: &PbwAlgebra, p: &NcPoly, q: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (wp, cp) in p.iter() {
        for (wq, cq) in q.iter() {
            if wp.len() == 1 && wq.len() == 1 {
                out = out.add(&alg.commutator(wp[0], wq[0]).scale(&cp.mul(cq)));
            }
        }
    }
    out
}

/// The coefficient buckets of the defining current identity of the
/// trigonometric Lie algebra, cleared of the spectral denominator. Keys
/// are exponent pairs, matching the truncated current extraction.
pub fn trig_relation_buckets(
    ctx: &TrigLieContext,
) -> BTreeMap<(i64, i64), LegOperator<NcPoly>> {
    let n = ctx.n;
    let d = ctx.cutoff as i64;
    let p = lift(&flip_operator(n));
    let level = |s: i64| -> LegOperator<NcPoly> {
        if s < 1 || s > d {
            return LegOperator::zero(n, 1);
        }
        let mut op = LegOperator::zero(n, 1);
        for i in 1..=n {
            for j in 1..=n {
                op.set(
                    vec![i as u8],
                    vec![j as u8],
                    NcPoly::gen(trig_gen(n, s as usize, i, j)),
                );
            }
        }
        op
    };
    let mut buckets = BTreeMap::new();
    // coefficient of u^{-x} v^{-y} in (u-v)[L1(u), L2(v)] - [P, uL1(u) + vL2(v)]
    for x in 0..=d {
        for y in 0..=d {
            if x + y + 1 > d {
                continue;
            }
            let comm = |a: i64, b: i64| -> LegOperator<NcPoly> {
                let la = level(a).embed(1, 2);
                let lb = level(b).embed(2, 2);
                la.mul(&lb).sub(&lb.mul(&la))
            };
            let mut op = comm(x + 1, y).sub(&comm(x, y + 1));
            if y == 0 {
                let l1 = level(x + 1).embed(1, 2);
                op = op.sub(&p.mul(&l1).sub(&l1.mul(&p)));
            }
            if x == 0 {
                let l2 = level(y + 1).embed(2, 2);
                op = op.sub(&p.mul(&l2).sub(&l2.mul(&p)));
            }
            if !op.is_zero() {
                buckets.insert((-x, -y), op);
            }
        }
    }
    buckets
}

fn family_label(b: &Braiding) -> String {
    format!("dim {} {:?}", b.dim, b.kind)
}

/// Substitutes the rescaled basis into the braided current relations and
/// verifies their deformation expansion: the relations carry an overall
/// factor of the deformation prefactor, so orders zero and one vanish
/// identically, the leading second order reduces to zero against the
/// classical brackets, and conversely every classical pair relation
/// within the cutoff lies in the span of the leading coefficients.
pub fn check_trig_limit(b: &Braiding, d: usize) -> Report {
    let params = [("family", family_label(b)), ("d", d.to_string())];
    Report::run("trig-limit", &params, || {
        if b.kind != BraidingKind::Hecke {
            return Err("requires a Hecke symmetry".into());
        }
        let rc = CurrentRMatrix::new(b.clone(), Rf::one()).map_err(|e| e.to_string())?;
        let n = b.dim;
        let trig = trig_algebra(n, d);
        let g = Rf::q().sub(&Rf::q().inv().unwrap());
        let mut coeffs = vec![LegOperator::zero(n, 1); d + 1];
        coeffs[0] = LegOperator::identity(n, 1);
        for s in 1..=d {
            let mut op = LegOperator::zero(n, 1);
            for i in 1..=n {
                for j in 1..=n {
                    op.set(
                        vec![i as u8],
                        vec![j as u8],
                        NcPoly::gen(trig_gen(n, s, i, j)).scale(&g),
                    );
                }
            }
            coeffs[s] = op;
        }
        let buckets = relation_buckets(&rc, &coeffs, YangianFlavor::Braided, false);
        let mut span = Echelon::new(false);
        let mut tag = 0usize;
        for ((x, y), op) in &buckets {
            for ((low, up), poly) in op.iter() {
                let mut h0 = NcPoly::zero();
                let mut h1 = NcPoly::zero();
                let mut leading = NcPoly::zero();
                for (w, c) in poly.iter() {
                    let series = h_expand(c, 2).map_err(|e| e.to_string())?;
                    h0.add_term(w.clone(), series.coeffs[0].clone());
                    h1.add_term(w.clone(), series.coeffs[1].clone());
                    leading.add_term(w.clone(), series.coeffs[2].clone());
                }
                if !h0.is_zero() || !h1.is_zero() {
                    return Err(format!(
                        "sub-leading order survives in bucket ({x},{y}) entry \
                         {low:?} -> {up:?}"
                    ));
                }
                if !trig.algebra.reduce(&leading).is_zero() {
                    return Err(format!(
                        "leading order of bucket ({x},{y}) entry {low:?} -> {up:?} \
                         is not a classical consequence"
                    ));
                }
                span.insert(leading, tag);
                tag += 1;
            }
        }
        for a in 0..trig.algebra.num_gens {
            for bg in 0..a {
                let (sa, _, _) = trig_decode(n, a);
                let (sb, _, _) = trig_decode(n, bg);
                if sa + sb > d {
                    continue;
                }
                let rel = NcPoly::term(vec![a, bg], Rf::one())
                    .sub(&NcPoly::term(vec![bg, a], Rf::one()))
                    .sub(&trig.algebra.commutator(a, bg));
                if !span.reduce(&rel).is_zero() {
                    return Err(format!(
                        "classical relation for generators {a}, {bg} is not in \
                         the first-order span"
                    ));
                }
            }
        }
        Ok(())
    })
}

fn binom(n: usize, k: usize) -> i64 {
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n - j) as i64 / (j + 1) as i64;
    }
    acc
}

/// The alternating binomial combination of the hatted elementary
/// symmetric elements, at the argument rescaled by the square of the
/// deformation parameter, in the rescaled basis: all expansion orders
/// below k must vanish after canonical reduction in the truncation.
pub fn tau_leading_order(ctx: &YangianContext, k: usize, h_order: usize) -> Report {
    let params = [
        ("family", family_label(ctx.braiding())),
        ("k", k.to_string()),
        ("d", ctx.cutoff.to_string()),
        ("hOrder", h_order.to_string()),
    ];
    Report::run("tau-leading-order", &params, || {
        let b = ctx.braiding();
        let m = ctx.bi_rank.m;
        if b.kind != BraidingKind::Hecke || ctx.flavor != YangianFlavor::Braided {
            return Err("requires the braided algebra of a Hecke symmetry".into());
        }
        if k > m {
            return Err(GaudinError::KOutOfRange { k, m }.to_string());
        }
        let order = h_order.max(k);
        let e0 = skew_symmetrizer(b, m).full_trace(Some(&b.c));
        let mut tau = vec![NcPoly::zero(); ctx.cutoff + 1];
        for p in 0..=k {
            let sign = if (k - p) % 2 == 0 { 1 } else { -1 };
            let c = Rf::from_int(sign * binom(k, p));
            if p == 0 {
                tau[0] = tau[0].add(&NcPoly::from_scalar(c.mul(&e0)));
            } else {
                let e = bethe_element(ctx, BetheKind::EHat, p).map_err(|e| e.to_string())?;
                for (s, coeff) in e.coeffs.iter().enumerate() {
                    tau[s] = tau[s].add(&coeff.scale(&c));
                }
            }
        }
        let red = ctx.reducer();
        let g = Rf::q().sub(&Rf::q().inv().unwrap());
        for (s, coeff) in tau.iter().enumerate() {
            let rescaled = coeff.scale(&Rf::q_pow(2 * s as i64));
            let nf = red.reduce(&rescaled);
            for (w, c) in nf.iter() {
                let cg = c.mul(&g.pow(w.len() as i64).unwrap());
                let series = h_expand(&cg, order).map_err(|e| e.to_string())?;
                for (r, val) in series.coeffs.iter().take(k).enumerate() {
                    if !val.is_zero() {
                        return Err(format!(
                            "order {r} survives at level {s}, word {w:?}"
                        ));
                    }
                }
            }
        }
        Ok(())
    })
}

/// A polynomial in the multiplicative derivative d = u d/du with matrix
/// coefficients; d f(u) = f(u) d + u f'(u).
pub struct DiffOpPoly {
    pub var: u8,
    pub coeffs: Vec<LegOperator<NcPoly>>,
}

fn mult_derivative(op: &LegOperator<NcPoly>, var: u8) -> LegOperator<NcPoly> {
    let x = Rf::var(var);
    op.map(|p| {
        let mut out = NcPoly::zero();
        for (w, c) in p.iter() {
            out.add_term(w.clone(), c.derivative(var).mul(&x));
        }
        out
    })
}

impl DiffOpPoly {
    pub fn identity(dim: usize, legs: usize, var: u8) -> DiffOpPoly {
        DiffOpPoly {
            var,
            coeffs: vec![LegOperator::identity(dim, legs)],
        }
    }

    /// Right multiplication by f - d, normal ordering the derivative
    /// symbols to the right.
    pub fn mul_factor(&self, f: &LegOperator<NcPoly>) -> DiffOpPoly {
        let top = self.coeffs.len() - 1;
        let mut derivs = vec![f.clone()];
        for _ in 0..top {
            derivs.push(mult_derivative(derivs.last().unwrap(), self.var));
        }
        let mut out = vec![LegOperator::zero(f.dim, f.legs); self.coeffs.len() + 1];
        for (p, a) in self.coeffs.iter().enumerate() {
            // a d^p (f - d) = sum_j C(p,j) a (D^j f) d^{p-j} - a d^{p+1}
            for j in 0..=p {
                let term = a.mul(&derivs[j]).scale(&Rf::from_int(binom(p, j)));
                out[p - j] = out[p - j].add(&term);
            }
            out[p + 1] = out[p + 1].sub(a);
        }
        DiffOpPoly {
            var: self.var,
            coeffs: out,
        }
    }

    /// Evaluation on the constant 1 drops every positive derivative
    /// power.
    pub fn apply_to_one(&self) -> LegOperator<NcPoly> {
        self.coeffs[0].clone()
    }
}

/// The k-th commuting element: the classical trace against the
/// classical skew-symmetrizer on m legs of the ordered product of the
/// factors (matrix at leg i) - (derivative), applied to 1. Coefficients
/// are rational in the chosen variable.
pub fn qh_element(
    n: usize,
    m: usize,
    k: usize,
    lmat: &LegOperator<NcPoly>,
    var: u8,
) -> Result<NcPoly, GaudinError> {
    if k < 1 || k > m {
        return Err(GaudinError::KOutOfRange { k, m });
    }
    let mut acc = DiffOpPoly::identity(n, m, var);
    for i in 1..=k {
        acc = acc.mul_factor(&lmat.embed(i, m));
    }
    let p_minus = lift(&skew_symmetrizer(&Braiding::flip(n), m));
    Ok(p_minus.mul(&acc.apply_to_one()).full_trace(None))
}

/// Pairwise distinct nonzero rational points carrying one copy of
/// U(gl(N)) each.
pub struct EvaluationData {
    pub n: usize,
    pub sites: Vec<Rf>,
}

impl EvaluationData {
    pub fn new(n: usize, sites: Vec<Rf>) -> Result<EvaluationData, GaudinError> {
        for (a, s) in sites.iter().enumerate() {
            if s.is_zero() {
                return Err(GaudinError::InvalidSites("site 0 is not allowed".into()));
            }
            for v in 0..VAR_NAMES.len() as u8 {
                if !s.derivative(v).is_zero() {
                    return Err(GaudinError::InvalidSites(format!(
                        "site {} is not a rational constant",
                        a + 1
                    )));
                }
            }
            for t in &sites[..a] {
                if s.sub(t).is_zero() {
                    return Err(GaudinError::InvalidSites("coincident sites".into()));
                }
            }
        }
        Ok(EvaluationData { n, sites })
    }

    pub fn num_sites(&self) -> usize {
        self.sites.len()
    }

    pub fn algebra(&self) -> PbwAlgebra {
        PbwAlgebra::enveloping_gl(self.n as u8, self.sites.len() as u32)
    }

    fn site_matrix(&self, var: u8, trig: bool) -> LegOperator<NcPoly> {
        let x = Rf::var(var);
        let mut op = LegOperator::zero(self.n, 1);
        for (a, point) in self.sites.iter().enumerate() {
            let num = if trig { point.clone() } else { Rf::one() };
            let factor = num.div(&x.sub(point)).unwrap();
            for i in 1..=self.n {
                for j in 1..=self.n {
                    op.add_to(
                        vec![i as u8],
                        vec![j as u8],
                        NcPoly::gen(gl_gen(self.n as u8, a as u32, i as u8, j as u8))
                            .scale(&factor),
                    );
                }
            }
        }
        op
    }

    /// The image of the trigonometric generating matrix: each site
    /// contributes its point times the simple pole at that point.
    pub fn trig_matrix(&self, var: u8) -> LegOperator<NcPoly> {
        self.site_matrix(var, true)
    }

    /// The rational counterpart with plain simple poles.
    pub fn rational_matrix(&self, var: u8) -> LegOperator<NcPoly> {
        self.site_matrix(var, false)
    }
}

/// Verifies the site evaluation is a Lie algebra morphism: the images
/// satisfy the defining current identity of the trigonometric Lie
/// algebra as an exact rational-function identity in two variables.
pub fn check_site_evaluation(data: &EvaluationData) -> Report {
    let params = [
        ("n", data.n.to_string()),
        ("sites", site_label(data)),
    ];
    Report::run("site-evaluation", &params, || {
        let alg = data.algebra();
        let p = lift(&flip_operator(data.n));
        let a = data.trig_matrix(VAR_U).embed(1, 2);
        let b = data.trig_matrix(VAR_V).embed(2, 2);
        let comm = a.mul(&b).sub(&b.mul(&a));
        let uv = Rf::var(VAR_U).sub(&Rf::var(VAR_V));
        let x = a.scale(&Rf::var(VAR_U)).add(&b.scale(&Rf::var(VAR_V)));
        let diff = comm.scale(&uv).sub(&p.mul(&x).sub(&x.mul(&p)));
        for ((low, up), poly) in diff.iter() {
            if !alg.reduce(poly).is_zero() {
                return Err(format!("entry {low:?} -> {up:?} violates the bracket"));
            }
        }
        Ok(())
    })
}

fn site_label(data: &EvaluationData) -> String {
    data.sites
        .iter()
        .map(|s| format!("{s}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// [QH_k(u), QH_l(v)] reduces to zero in the evaluated enveloping
/// algebra, as a rational-function identity in both variables.
pub fn check_qh_commute(data: &EvaluationData, k: usize, l: usize) -> Report {
    let params = [
        ("n", data.n.to_string()),
        ("k", k.to_string()),
        ("l", l.to_string()),
        ("sites", site_label(data)),
    ];
    Report::run("qh-commute", &params, || {
        let n = data.n;
        let a = qh_element(n, n, k, &data.trig_matrix(VAR_U), VAR_U)
            .map_err(|e| e.to_string())?;
        let b = qh_element(n, n, l, &data.trig_matrix(VAR_V), VAR_V)
            .map_err(|e| e.to_string())?;
        let alg = data.algebra();
        let nf = alg.reduce(&a.mul(&b).sub(&b.mul(&a)));
        match nf.leading() {
            None => Ok(()),
            Some((w, _)) => Err(format!("normal form survives with word {w:?}")),
        }
    })
}

/// The Leibniz extension of the site-wise gl(N) brackets to the
/// symmetric algebra; words are kept sorted as commutative monomials.
pub fn poisson_bracket(alg: &PbwAlgebra, p: &NcPoly, q: &NcPoly) -> NcPoly {
    let flat = PbwAlgebra::new(alg.num_gens);
    let mut out = NcPoly::zero();
    for (wp, cp) in p.iter() {
        for (wq, cq) in q.iter() {
            for (i, x) in wp.iter().enumerate() {
                for (j, y) in wq.iter().enumerate() {
                    let br = alg.commutator(*x, *y);
                    if br.is_zero() {
                        continue;
                    }
                    let mut rest: Vec<u32> = Vec::with_capacity(wp.len() + wq.len() - 2);
                    rest.extend(wp.iter().take(i).chain(wp.iter().skip(i + 1)));
                    rest.extend(wq.iter().take(j).chain(wq.iter().skip(j + 1)));
                    let term = NcPoly::term(rest, cp.mul(cq)).mul(&br);
                    out = out.add(&term);
                }
            }
        }
    }
    flat.reduce(&out)
}

/// The classical integrability statement for the rational evaluated
/// matrix: the linear bracket has the permutation kernel over the
/// spectral difference, is skew-symmetric, and the traces of matrix
/// powers Poisson-commute as exact rational functions.
pub fn check_classical_poisson(data: &EvaluationData, k: usize, l: usize) -> Report {
    let params = [
        ("n", data.n.to_string()),
        ("k", k.to_string()),
        ("l", l.to_string()),
        ("sites", site_label(data)),
    ];
    Report::run("classical-poisson", &params, || {
        let alg = data.algebra();
        let flat = PbwAlgebra::new(alg.num_gens);
        for a in 0..alg.num_gens {
            for b in 0..a {
                if !alg.commutator(a, b).add(&alg.commutator(b, a)).is_zero() {
                    return Err(format!("bracket of {a}, {b} is not skew"));
                }
            }
        }
        let n = data.n;
        let lu = data.rational_matrix(VAR_U);
        let lv = data.rational_matrix(VAR_V);
        // entry-wise bracket operator {L1(u), L2(v)} on two legs
        let mut pb = LegOperator::zero(n, 2);
        for ((la, ua), pa) in lu.iter() {
            for ((lb, ub), qb) in lv.iter() {
                let br = poisson_bracket(&alg, pa, qb);
                if !br.is_zero() {
                    pb.add_to(vec![la[0], lb[0]], vec![ua[0], ub[0]], br);
                }
            }
        }
        let p = lift(&flip_operator(n));
        let uv = Rf::var(VAR_U).sub(&Rf::var(VAR_V));
        let x = lu.embed(1, 2).add(&lv.embed(2, 2));
        let rhs = p.mul(&x).sub(&x.mul(&p));
        let diff = pb.scale(&uv).sub(&rhs);
        for ((low, up), poly) in diff.iter() {
            if !flat.reduce(poly).is_zero() {
                return Err(format!(
                    "linear bracket mismatch at entry {low:?} -> {up:?}"
                ));
            }
        }
        let tk = flat.reduce(&lu.pow(k).full_trace(None));
        let tl = flat.reduce(&lv.pow(l).full_trace(None));
        let br = poisson_bracket(&alg, &tk, &tl);
        match br.leading() {
            None => Ok(()),
            Some((w, _)) => Err(format!("trace bracket survives with word {w:?}")),
        }
    })
}

#[cfg(test)]
mod tests;
