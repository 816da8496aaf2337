//! Exact arithmetic in multivariate rational-function fields, q-integers
//! and q-factorials, and truncated expansion around q = 1.

mod hseries;
mod parse;
mod poly;
mod rational;

pub use hseries::{expand_at_infinity, h_expand, HSeries};
pub use parse::parse_scalar;
pub use poly::{var_index, MPoly, VAR_H, VAR_NAMES, VAR_Q, VAR_T, VAR_U, VAR_V, VAR_W};
pub use rational::Rf;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScalarError {
    #[error("syntax error at position {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },
    #[error("division by exact zero")]
    DivisionByZero,
    #[error("pole at q = 1 of order {order}")]
    PoleAtOne { order: usize },
    #[error("expression grows at infinity with order {order}")]
    GrowthAtInfinity { order: usize },
    #[error("negative argument to q-factorial")]
    NegativeFactorial,
}

/// The symmetric q-integer k_q = (q^k - q^{-k}) / (q - q^{-1}).
pub fn q_int(k: i64) -> Rf {
    if k == 0 {
        return Rf::zero();
    }
    if k < 0 {
        return q_int(-k).neg();
    }
    // k_q = q^{k-1} + q^{k-3} + ... + q^{1-k}
    let mut acc = Rf::zero();
    let mut e = k - 1;
    for _ in 0..k {
        acc = acc.add(&Rf::q_pow(e));
        e -= 2;
    }
    acc
}

/// k_q! = 1_q 2_q ... k_q, with 0_q! = 1.
pub fn q_factorial(k: i64) -> Result<Rf, ScalarError> {
    if k < 0 {
        return Err(ScalarError::NegativeFactorial);
    }
    let mut acc = Rf::one();
    for j in 1..=k {
        acc = acc.mul(&q_int(j));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(s: &str) -> Rf {
        parse_scalar(s).unwrap()
    }

    #[test]
    fn q_int_small_values() {
        assert_eq!(q_int(2), rf("q + q^-1"));
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(-3), q_int(3).neg());
    }

    #[test]
    fn q_int_shift_identity() {
        // q^a b_q - q^b a_q = (b - a)_q, at (a, b) = (1, 2)
        let lhs = Rf::q_pow(1)
            .mul(&q_int(2))
            .sub(&Rf::q_pow(2).mul(&q_int(1)));
        assert_eq!(lhs, q_int(1));
    }

    #[test]
    fn q_factorial_values() {
        assert!(q_factorial(0).unwrap().is_one());
        assert_eq!(q_factorial(2).unwrap(), rf("q + q^-1"));
        assert_eq!(
            q_factorial(3).unwrap(),
            rf("(q + q^-1) * (q^2 + 1 + q^-2)")
        );
        assert!(q_factorial(-1).is_err());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(rf("q - q^-1"), Rf::q().sub(&Rf::q_pow(-1)));
        assert_eq!(rf("(q^2-q^-2)/(q-q^-1)"), rf("q + q^-1"));
        assert!(matches!(
            parse_scalar("1/0"),
            Err(ScalarError::Syntax { .. })
        ));
        assert!(parse_scalar("q +").is_err());
        assert!(parse_scalar("bogusvar").is_err());
    }

    #[test]
    fn h_expand_exponential() {
        // q -> 1 + h/2 + h^2/8
        let s = h_expand(&Rf::q(), 2).unwrap();
        assert_eq!(s.coeffs[0], Rf::one());
        assert_eq!(s.coeffs[1], rf("1/2"));
        assert_eq!(s.coeffs[2], rf("1/4/2"));
    }

    #[test]
    fn h_expand_two_sinh() {
        // oracle: q - q^-1 = 2 sinh(h/2) = h + h^3/24 + ...
        let s = h_expand(&rf("q - q^-1"), 2).unwrap();
        assert!(s.coeffs[0].is_zero());
        assert_eq!(s.coeffs[1], Rf::one());
        assert!(s.coeffs[2].is_zero());
        let s3 = h_expand(&rf("q - q^-1"), 3).unwrap();
        assert_eq!(s3.coeffs[3], rf("1/24"));
    }

    #[test]
    fn h_expand_pole_reported() {
        match h_expand(&rf("1/(q-1)"), 2) {
            Err(ScalarError::PoleAtOne { order: 1 }) => {}
            other => panic!("expected pole of order 1, got {:?}", other),
        }
        // removable singularity is fine
        let s = h_expand(&rf("(q^2-1)/(q-1)"), 1).unwrap();
        assert_eq!(s.coeffs[0], rf("2"));
    }

    #[test]
    fn expand_at_infinity_basic() {
        // u/(u - 1) = 1 + u^-1 + u^-2 + ...
        let f = rf("u/(u-1)");
        let c = expand_at_infinity(&f, VAR_U, 3).unwrap();
        for x in &c {
            assert!(x.is_one());
        }
        assert!(expand_at_infinity(&rf("u^2/(u-1)"), VAR_U, 2).is_err());
    }

    #[test]
    fn gcd_cancellation_multivariate() {
        let a = rf("(q*u - u) * (q + 1)");
        let b = rf("(q*u - u)");
        assert_eq!(a.div(&b).unwrap(), rf("q + 1"));
    }

    fn arb_rf() -> impl Strategy<Value = Rf> {
        // small random Laurent-style rational functions in q and u
        let leaf = prop_oneof![
            (-4i64..5).prop_map(Rf::from_int),
            (-3i64..4).prop_map(Rf::q_pow),
            Just(Rf::var(VAR_U)),
        ];
        leaf.prop_recursive(3, 24, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.add(&b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.mul(&b)),
                (inner.clone(), inner).prop_map(|(a, b)| a.sub(&b)),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), Rf::one());
            }
        }

        #[test]
        fn q_int_addition_rule(a in -6i64..7, b in -6i64..7) {
            // (a+b)_q = q^b a_q + q^{-a} b_q
            let lhs = q_int(a + b);
            let rhs = Rf::q_pow(b).mul(&q_int(a)).add(&Rf::q_pow(-a).mul(&q_int(b)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn h_expand_is_ring_morphism(a in arb_rf(), b in arb_rf()) {
            let order = 3;
            let fa = h_expand(&a, order);
            let fb = h_expand(&b, order);
            if let (Ok(fa), Ok(fb)) = (fa, fb) {
                if let Ok(fab) = h_expand(&a.mul(&b), order) {
                    prop_assert_eq!(fab, fa.mul(&fb));
                }
                if let Ok(fab) = h_expand(&a.add(&b), order) {
                    prop_assert_eq!(fab, fa.add(&fb));
                }
            }
        }
    }
}
