use super::*;
use crate::ncalg::{gl_gen, Echelon};
use crate::report::Status;
use crate::scalars::{parse_scalar, q_int};

fn rf(s: &str) -> Rf {
    parse_scalar(s).unwrap()
}

/// Translates row-major generator ids into the PBW ordering of
/// `enveloping_gl`.
fn to_gl_ids(n: u8, p: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w, c) in p.iter() {
        let nw: Vec<u32> = w
            .iter()
            .map(|&g| {
                let i = (g / n as u32) as u8 + 1;
                let j = (g % n as u32) as u8 + 1;
                gl_gen(n, 0, i, j)
            })
            .collect();
        out.add_term(nw, c.clone());
    }
    out
}

#[test]
fn flip_modified_is_enveloping_gl() {
    let b = Braiding::flip(2);
    let ctx = re_algebra(&b, true, Side::Left).unwrap();
    let pbw = PbwAlgebra::enveloping_gl(2, 1);
    let mut ech = Echelon::new(false);
    for (i, rel) in ctx.algebra.relations.iter().enumerate() {
        assert!(pbw.reduce(&to_gl_ids(2, rel)).is_zero(), "relation {}", i);
        ech.insert(rel.clone(), i);
    }
    // the span has one relation per unordered generator pair
    assert_eq!(ech.num_rows(), 6);
}

#[test]
fn flip_plain_is_commutative() {
    let b = Braiding::flip(2);
    let ctx = re_algebra(&b, false, Side::Left).unwrap();
    let red = ctx.reducer(2);
    for a in 0..4u32 {
        for c in 0..4u32 {
            let p = NcPoly::gen(a).mul(&NcPoly::gen(c));
            let q = NcPoly::gen(c).mul(&NcPoly::gen(a));
            assert!(red.reduce(&p.sub(&q)).is_zero());
        }
    }
}

#[test]
fn dj2_modified_relation_count_and_sanity() {
    let b = Braiding::drinfeld_jimbo(2);
    let ctx = re_algebra(&b, true, Side::Left).unwrap();
    // 12 of the 16 matrix entries are nonzero in the free algebra
    assert_eq!(ctx.algebra.relations.len(), 12);
    assert!(ctx.algebra.relations.iter().any(|r| r.degree() == 2
        && r.iter().any(|(w, _)| w.len() == 1)));
    let red = ctx.reducer(2);
    for rel in &ctx.algebra.relations {
        assert!(red.reduce(rel).is_zero());
    }
}

#[test]
fn right_side_requires_modified() {
    let b = Braiding::drinfeld_jimbo(2);
    assert!(matches!(
        re_algebra(&b, false, Side::Right),
        Err(REError::InvalidCombination)
    ));
    assert!(re_algebra(&b, true, Side::Right).is_ok());
}

#[test]
fn elementary_symmetric_basics() {
    let b = Braiding::drinfeld_jimbo(2);
    let ctx = re_algebra(&b, false, Side::Left).unwrap();
    assert_eq!(elementary_symmetric(&ctx, 0).unwrap(), NcPoly::one());
    // e_1 = Tr_R L = sum C_i^k l_k^i
    let e1 = elementary_symmetric(&ctx, 1).unwrap();
    let mut expected = NcPoly::zero();
    for i in 1..=2u8 {
        for k in 1..=2u8 {
            let c = ctx.braiding.c.get(&[i], &[k]);
            expected = expected.add(&NcPoly::gen((k as u32 - 1) * 2 + i as u32 - 1).scale(&c));
        }
    }
    assert_eq!(e1, expected);
    assert!(matches!(
        elementary_symmetric(&ctx, 3),
        Err(REError::KOutOfRange { .. })
    ));
}

#[test]
fn flip_e2_is_classical() {
    let b = Braiding::flip(2);
    let ctx = re_algebra(&b, false, Side::Left).unwrap();
    let e2 = elementary_symmetric(&ctx, 2).unwrap();
    // (Tr L)^2 - Tr L^2 halved
    let tr = power_sum(&ctx, 1);
    let tr2 = power_sum(&ctx, 2);
    let classical = tr.mul(&tr).sub(&tr2).scale(&rf("1/2"));
    let red = ctx.reducer(2);
    assert!(red.reduce(&e2.sub(&classical)).is_zero());
}

#[test]
fn centrality_dj2() {
    let b = Braiding::drinfeld_jimbo(2);
    let ctx = re_algebra(&b, false, Side::Left).unwrap();
    for k in 1..=2usize {
        let ek = elementary_symmetric(&ctx, k).unwrap();
        let rep = check_centrality(&ctx, &ek, &format!("e{}", k));
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
    }
}

#[test]
fn cayley_hamilton_small() {
    for b in [Braiding::drinfeld_jimbo(2), Braiding::flip(2)] {
        let ctx = re_algebra(&b, false, Side::Left).unwrap();
        let rep = check_cayley_hamilton(&ctx);
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
    }
}

#[test]
fn charpoly_sum_expanded() {
    let b = Braiding::drinfeld_jimbo(2);
    let ctx = re_algebra(&b, false, Side::Left).unwrap();
    let q = characteristic_poly(&ctx, CharPolyForm::Sum).unwrap();
    let e1 = elementary_symmetric(&ctx, 1).unwrap();
    let e2 = elementary_symmetric(&ctx, 2).unwrap();
    let expected = NcPoly::from_scalar(rf("t^2"))
        .sub(&e1.scale(&rf("q*t")))
        .add(&e2.scale(&rf("q^2")));
    assert_eq!(q, expected);
}

#[test]
fn charpoly_forms_agree_dj2() {
    let b = Braiding::drinfeld_jimbo(2);
    let ctx = re_algebra(&b, false, Side::Left).unwrap();
    let rep = check_char_poly_forms(&ctx);
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
}

#[test]
fn charpoly_form_preconditions() {
    let b = Braiding::drinfeld_jimbo(2);
    let plain = re_algebra(&b, false, Side::Left).unwrap();
    let modified = re_algebra(&b, true, Side::Left).unwrap();
    assert!(characteristic_poly(&plain, CharPolyForm::Modified).is_err());
    assert!(characteristic_poly(&modified, CharPolyForm::Sum).is_err());
    assert!(characteristic_poly(&modified, CharPolyForm::Modified).is_ok());
}

#[test]
fn capelli_n1_and_n2() {
    for n in [1u8, 2] {
        let rep = capelli_check(n);
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
    }
}

#[test]
fn capelli_n3() {
    let rep = capelli_check(3);
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
}

#[test]
fn classical_charpoly_limit() {
    let rep = check_classical_charpoly_limit(2);
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
}

#[test]
fn shift_isomorphism() {
    let rep = check_shift_isomorphism(&Braiding::drinfeld_jimbo(2)).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
    assert!(matches!(
        check_shift_isomorphism(&Braiding::flip(2)),
        Err(REError::NotHecke)
    ));
}

#[test]
fn representations_pass() {
    let dj = Braiding::drinfeld_jimbo(2);
    for which in [
        Representation::Vector,
        Representation::Covector,
        Representation::Adjoint,
    ] {
        let rep = representation_check(&dj, which).unwrap();
        assert_eq!(rep.status, Status::Pass, "{:?} {:?}", which, rep.witness);
    }
    let rep = representation_check(&Braiding::flip(2), Representation::Vector).unwrap();
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
}

#[test]
fn bracket_matches_relations_span() {
    // the defining relations span the same space as the rewriting
    // x y - braided image - bracket over all generator pairs
    for b in [Braiding::drinfeld_jimbo(2), Braiding::flip(2)] {
        let data = braided_lie_data(&b).unwrap();
        let ctx = re_algebra(&b, true, Side::Left).unwrap();
        let n2 = b.dim * b.dim;
        let mut assembled = Vec::new();
        for g1 in 0..n2 {
            for g2 in 0..n2 {
                let pair = g1 * n2 + g2;
                let mut p = NcPoly::term(vec![g1 as u32, g2 as u32], Rf::one());
                for (hp, c) in data.qq[pair].iter().enumerate() {
                    p = p.sub(&NcPoly::term(
                        vec![(hp / n2) as u32, (hp % n2) as u32],
                        c.clone(),
                    ));
                }
                for (h, c) in data.bracket[pair].iter().enumerate() {
                    p = p.sub(&NcPoly::gen(h as u32).scale(c));
                }
                assembled.push(p);
            }
        }
        let mut rel_ech = Echelon::new(false);
        for (i, r) in ctx.algebra.relations.iter().enumerate() {
            rel_ech.insert(r.clone(), i);
        }
        let mut asm_ech = Echelon::new(false);
        for (i, p) in assembled.iter().enumerate() {
            asm_ech.insert(p.clone(), i);
        }
        for p in &assembled {
            assert!(rel_ech.reduce(p).is_zero());
        }
        for r in &ctx.algebra.relations {
            assert!(asm_ech.reduce(r).is_zero());
        }
    }
}

#[test]
fn braided_jacobi() {
    for b in [Braiding::flip(2), Braiding::superflip(1, 1)] {
        let rep = braided_jacobi_check(&b).unwrap();
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
    }
    assert!(matches!(
        braided_jacobi_check(&Braiding::drinfeld_jimbo(2)),
        Err(REError::NotInvolutive)
    ));
}

#[test]
fn affine_cocycle() {
    let degrees = [(1, -1, 0), (-1, 0, 1), (0, 1, -1), (2, -1, -1), (1, 1, 1)];
    for b in [Braiding::flip(2), Braiding::superflip(1, 1)] {
        let rep = affine_cocycle_check(&b, &degrees).unwrap();
        assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
    }
}

#[test]
fn sl_projection_examples() {
    let dj = Braiding::drinfeld_jimbo(2);
    let ctx = re_algebra(&dj, false, Side::Left).unwrap();
    let sl = sl_projection(&ctx).unwrap();
    assert_eq!(sl.tr_r_ell, rf("q^-2").mul(&q_int(2)));
    for f in &sl.f {
        assert!(tr_r_linear(2, f).is_zero());
    }
    // the flip gives the classical traceless part
    let flip_ctx = re_algebra(&Braiding::flip(2), false, Side::Left).unwrap();
    let sl = sl_projection(&flip_ctx).unwrap();
    assert_eq!(sl.tr_r_ell, rf("2"));
    for f in &sl.f {
        assert!(tr_r_linear(2, f).is_zero());
    }
    // equal bi-rank is rejected
    let sf_ctx = re_algebra(&Braiding::superflip(1, 1), false, Side::Left).unwrap();
    assert!(matches!(sl_projection(&sf_ctx), Err(REError::EqualBiRank)));
}

#[test]
fn right_sided_cayley_hamilton_ingredients() {
    // the right-sided modified context produces well-formed relations and
    // B-weighted symmetric functions
    let b = Braiding::drinfeld_jimbo(2);
    let ctx = re_algebra(&b, true, Side::Right).unwrap();
    let red = ctx.reducer(2);
    for rel in &ctx.algebra.relations {
        assert!(red.reduce(rel).is_zero());
    }
    let e1 = elementary_symmetric(&ctx, 1).unwrap();
    assert_eq!(e1.degree(), 1);
    let rep = check_char_poly_forms(&ctx);
    assert_eq!(rep.status, Status::Fail);
}

#[test]
fn cayley_hamilton_dj3() {
    let ctx = re_algebra(&Braiding::drinfeld_jimbo(3), false, Side::Left).unwrap();
    let rep = check_cayley_hamilton(&ctx);
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witness);
}
