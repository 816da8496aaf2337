use super::*;
use crate::report::Status;
use crate::scalars::{expand_at_infinity, VAR_T};
use crate::yangian::braided_yangian;

fn dj2() -> Braiding {
    Braiding::drinfeld_jimbo(2)
}

fn sites(n: usize, points: &[i64]) -> EvaluationData {
    EvaluationData::new(n, points.iter().map(|&p| Rf::from_int(p)).collect()).unwrap()
}

#[test]
fn trig_brackets_match_current_expansion() {
    // Oracle: the closed-form brackets must kill every coefficient bucket
    // of the defining current identity, extracted independently.
    for (n, d) in [(2, 3), (3, 2)] {
        let ctx = trig_algebra(n, d);
        let buckets = trig_relation_buckets(&ctx);
        assert!(!buckets.is_empty());
        for ((x, y), op) in buckets {
            for (_, poly) in op.iter() {
                assert!(
                    ctx.algebra.reduce(poly).is_zero(),
                    "bucket ({x},{y}) survives for n = {n}, d = {d}"
                );
            }
        }
    }
}

#[test]
fn trig_bracket_antisymmetry_and_jacobi() {
    let ctx = trig_algebra(2, 2);
    let total = ctx.algebra.num_gens;
    for a in 0..total {
        for b in 0..total {
            assert!(ctx
                .algebra
                .commutator(a, b)
                .add(&ctx.algebra.commutator(b, a))
                .is_zero());
        }
    }
    for a in 0..total {
        for b in 0..total {
            for c in 0..total {
                let jac = lie_bracket(&ctx.algebra, &ctx.algebra.commutator(a, b), &NcPoly::gen(c))
                    .add(&lie_bracket(
                        &ctx.algebra,
                        &ctx.algebra.commutator(b, c),
                        &NcPoly::gen(a),
                    ))
                    .add(&lie_bracket(
                        &ctx.algebra,
                        &ctx.algebra.commutator(c, a),
                        &NcPoly::gen(b),
                    ));
                assert!(jac.is_zero(), "Jacobi fails on {a}, {b}, {c}");
            }
        }
    }
}

#[test]
fn level_one_brackets_are_gl_current_type() {
    let ctx = trig_algebra(2, 2);
    let x = |s, i, j| trig_gen(2, s, i, j);
    let expect = |p: NcPoly, q: NcPoly| {
        assert_eq!(p, q);
    };
    expect(
        ctx.algebra.commutator(x(1, 1, 2), x(1, 2, 1)),
        NcPoly::gen(x(2, 1, 1)).sub(&NcPoly::gen(x(2, 2, 2))),
    );
    expect(
        ctx.algebra.commutator(x(1, 1, 1), x(1, 1, 2)),
        NcPoly::gen(x(2, 1, 2)),
    );
    expect(
        ctx.algebra.commutator(x(1, 1, 1), x(1, 2, 2)),
        NcPoly::zero(),
    );
    // brackets landing past the cutoff are truncated away
    assert!(ctx.algebra.commutator(x(2, 1, 2), x(1, 2, 1)).is_zero());
}

#[test]
fn trig_limit_reproduces_the_classical_relations() {
    let rep = check_trig_limit(&dj2(), 2);
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
    let rep = check_trig_limit(&Braiding::drinfeld_jimbo(3), 2);
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
}

#[test]
fn trig_limit_requires_a_hecke_symmetry() {
    let rep = check_trig_limit(&Braiding::flip(2), 2);
    assert_eq!(rep.status, Status::Fail);
    assert!(rep.witness.unwrap().contains("Hecke"));
}

#[test]
fn trig_limit_is_independent_of_the_symmetry() {
    // A twisted Hecke symmetry, distinct from the standard one, with the
    // same classical limit: the flip entries are deformed by q.
    let q = Rf::q();
    let mut op = LegOperator::zero(2, 2);
    op.set(vec![1, 1], vec![1, 1], q.clone());
    op.set(vec![2, 2], vec![2, 2], q.clone());
    op.set(vec![1, 2], vec![2, 1], q.clone());
    op.set(vec![2, 1], vec![1, 2], q.inv().unwrap());
    op.set(vec![1, 2], vec![1, 2], q.sub(&q.inv().unwrap()));
    let twisted = Braiding::from_operator(op).unwrap();
    assert_eq!(twisted.kind, BraidingKind::Hecke);
    assert!(!twisted.r.sub(&dj2().r).is_zero());
    let rep = check_trig_limit(&twisted, 2);
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
}

#[test]
fn deformation_prefactor_expansion() {
    let g = Rf::q().sub(&Rf::q().inv().unwrap());
    let series = h_expand(&g, 3).unwrap();
    assert!(series.coeffs[0].is_zero());
    assert!(series.coeffs[1].is_one());
    assert!(series.coeffs[2].is_zero());
    assert_eq!(
        series.coeffs[3],
        Rf::from_int(1).div(&Rf::from_int(24)).unwrap()
    );
}

#[test]
fn tau_expansion_starts_at_leading_order() {
    let ctx = braided_yangian(&dj2(), 2).unwrap();
    for k in 0..=2 {
        let rep = tau_leading_order(&ctx, k, k.max(1));
        assert_eq!(rep.status, Status::Pass, "k = {k}: {:?}", rep.witness);
    }
}

#[test]
fn tau_rejects_bad_inputs() {
    let ctx = braided_yangian(&dj2(), 2).unwrap();
    let rep = tau_leading_order(&ctx, 3, 3);
    assert_eq!(rep.status, Status::Fail);
    assert!(rep.witness.unwrap().contains("outside"));
    let flip_ctx = braided_yangian(&Braiding::flip(2), 2).unwrap();
    let rep = tau_leading_order(&flip_ctx, 1, 1);
    assert_eq!(rep.status, Status::Fail);
    assert!(rep.witness.unwrap().contains("Hecke"));
}

#[test]
fn qh_one_is_proportional_to_the_trace() {
    let data = sites(2, &[1]);
    let qh = qh_element(2, 2, 1, &data.trig_matrix(VAR_U), VAR_U).unwrap();
    let half_trace = data
        .trig_matrix(VAR_U)
        .full_trace(None)
        .scale(&Rf::from_int(1).div(&Rf::from_int(2)).unwrap());
    assert_eq!(qh, half_trace);
    assert!(matches!(
        qh_element(2, 2, 0, &data.trig_matrix(VAR_U), VAR_U),
        Err(GaudinError::KOutOfRange { .. })
    ));
    assert!(matches!(
        qh_element(2, 2, 3, &data.trig_matrix(VAR_U), VAR_U),
        Err(GaudinError::KOutOfRange { .. })
    ));
}

#[test]
fn qh_two_matches_a_hand_expansion() {
    // (L1 - d)(L2 - d)1 = L1 L2 - u d/du L2: the cross-term produces the
    // multiplicative derivative of the rational coefficients.
    let data = sites(2, &[1]);
    let lmat = data.trig_matrix(VAR_U);
    let qh = qh_element(2, 2, 2, &lmat, VAR_U).unwrap();
    let l1 = lmat.embed(1, 2);
    let l2 = lmat.embed(2, 2);
    let inner = l1.mul(&l2).sub(&mult_derivative(&l2, VAR_U));
    let p_minus = lift(&skew_symmetrizer(&Braiding::flip(2), 2));
    let expected = p_minus.mul(&inner).full_trace(None);
    assert_eq!(qh, expected);
    // the degree-1 part carries u/(2(u-1)^2) against the trace generators
    let u = Rf::var(VAR_U);
    let weight = u
        .div(&u.sub(&Rf::one()).pow(2).unwrap())
        .unwrap()
        .div(&Rf::from_int(2))
        .unwrap();
    for i in 1..=2u8 {
        assert_eq!(qh.coeff(&[gl_gen(2, 0, i, i)]), weight);
    }
}

#[test]
fn site_evaluation_is_a_morphism() {
    for points in [&[1i64][..], &[1, 2][..], &[][..]] {
        let data = sites(2, points);
        let rep = check_site_evaluation(&data);
        assert_eq!(rep.status, Status::Pass, "{points:?}: {:?}", rep.witness);
    }
    let rep = check_site_evaluation(&sites(3, &[2, -1]));
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
}

#[test]
fn evaluation_data_is_validated() {
    assert!(matches!(
        EvaluationData::new(2, vec![Rf::one(), Rf::one()]),
        Err(GaudinError::InvalidSites(_))
    ));
    assert!(matches!(
        EvaluationData::new(2, vec![Rf::zero()]),
        Err(GaudinError::InvalidSites(_))
    ));
    assert!(matches!(
        EvaluationData::new(2, vec![Rf::var(VAR_T)]),
        Err(GaudinError::InvalidSites(_))
    ));
    let half = Rf::from_int(1).div(&Rf::from_int(2)).unwrap();
    assert!(EvaluationData::new(2, vec![half, Rf::from_int(3)]).is_ok());
}

#[test]
fn qh_elements_commute() {
    let one_site = sites(2, &[1]);
    let two_sites = sites(2, &[1, 2]);
    for (data, k, l) in [
        (&one_site, 1, 1),
        (&one_site, 1, 2),
        (&two_sites, 1, 2),
        (&two_sites, 2, 2),
    ] {
        let rep = check_qh_commute(data, k, l);
        assert_eq!(
            rep.status,
            Status::Pass,
            "k = {k}, l = {l}: {:?}",
            rep.witness
        );
    }
}

#[test]
fn classical_poisson_traces_commute() {
    let data = sites(2, &[1, 2]);
    for (k, l) in [(1, 2), (2, 2), (2, 3)] {
        let rep = check_classical_poisson(&data, k, l);
        assert_eq!(
            rep.status,
            Status::Pass,
            "k = {k}, l = {l}: {:?}",
            rep.witness
        );
    }
}

/// The image of one abstract generator under the site evaluation.
fn evaluated_gen(data: &EvaluationData, n: usize, id: u32) -> NcPoly {
    let (s, i, j) = trig_decode(n, id);
    let mut out = NcPoly::zero();
    for (a, point) in data.sites.iter().enumerate() {
        out = out.add(
            &NcPoly::gen(gl_gen(n as u8, a as u32, i as u8, j as u8))
                .scale(&point.pow(s as i64).unwrap()),
        );
    }
    out
}

fn evaluate_words(data: &EvaluationData, n: usize, p: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w, c) in p.iter() {
        let mut term = NcPoly::from_scalar(c.clone());
        for id in w {
            term = term.mul(&evaluated_gen(data, n, *id));
        }
        out = out.add(&term);
    }
    out
}

fn assert_agree_to_depth(alg: &PbwAlgebra, a: &NcPoly, b: &NcPoly, depth: usize) {
    let diff = alg.reduce(&a.sub(b));
    for (w, c) in diff.iter() {
        let tail = expand_at_infinity(c, VAR_U, depth).unwrap();
        for (s, coeff) in tail.iter().enumerate() {
            assert!(
                coeff.is_zero(),
                "word {w:?} disagrees at inverse power {s}"
            );
        }
    }
}

#[test]
fn qh_abstract_evaluation_naturality() {
    // Computing in the truncated abstract algebra and then evaluating
    // agrees with computing in the evaluated target, to the truncation
    // depth.
    let d = 3;
    let trig = trig_algebra(2, d);
    for points in [&[2i64][..], &[1, 2][..]] {
        let data = sites(2, points);
        let alg = data.algebra();
        for k in 1..=2 {
            let abstract_qh = qh_element(2, 2, k, &trig.matrix(VAR_U), VAR_U).unwrap();
            let mapped = evaluate_words(&data, 2, &abstract_qh);
            let direct = qh_element(2, 2, k, &data.trig_matrix(VAR_U), VAR_U).unwrap();
            assert_agree_to_depth(&alg, &mapped, &direct, d);
        }
    }
}

#[test]
fn tau_leading_term_matches_qh() {
    // The leading expansion coefficient of the alternating combination,
    // in the rescaled basis, is the abstract commuting element.
    let d = 2;
    let ctx = braided_yangian(&dj2(), d).unwrap();
    let b = ctx.braiding();
    let m = ctx.bi_rank.m;
    let trig = trig_algebra(2, d);
    let red = ctx.reducer();
    let g = Rf::q().sub(&Rf::q().inv().unwrap());
    for k in 1..=2usize {
        let e0 = skew_symmetrizer(b, m).full_trace(Some(&b.c));
        let mut tau = vec![NcPoly::zero(); d + 1];
        for p in 0..=k {
            let sign = if (k - p) % 2 == 0 { 1 } else { -1 };
            let c = Rf::from_int(sign * binom(k, p));
            if p == 0 {
                tau[0] = tau[0].add(&NcPoly::from_scalar(c.mul(&e0)));
            } else {
                let e = bethe_element(&ctx, BetheKind::EHat, p).unwrap();
                for (s, coeff) in e.coeffs.iter().enumerate() {
                    tau[s] = tau[s].add(&coeff.scale(&c));
                }
            }
        }
        let mut leading = NcPoly::zero();
        for (s, coeff) in tau.iter().enumerate() {
            let nf = red.reduce(&coeff.scale(&Rf::q_pow(2 * s as i64)));
            for (w, c) in nf.iter() {
                let cg = c.mul(&g.pow(w.len() as i64).unwrap());
                let series = h_expand(&cg, k).unwrap();
                leading.add_term(
                    w.clone(),
                    series.coeffs[k].mul(&Rf::var_pow(VAR_U, -(s as i64))),
                );
            }
        }
        let qh = qh_element(2, 2, k, &trig.matrix(VAR_U), VAR_U).unwrap();
        assert_agree_to_depth(&trig.algebra, &leading, &qh, d);
    }
}
