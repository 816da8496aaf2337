//! Truncated series expansions: the deformation-parameter expansion around
//! q = 1 (with q = exp(h/2)) and expansions at infinity in a parameter.

use super::poly::{MPoly, VAR_Q};
use super::rational::Rf;
use super::ScalarError;
use num_bigint::BigInt;
use num_traits::One;

/// A series truncated after `h^order`, with h-free coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct HSeries {
    pub order: usize,
    pub coeffs: Vec<Rf>, // coeffs[j] multiplies h^j; len == order + 1
}

impl HSeries {
    pub fn zero(order: usize) -> HSeries {
        HSeries {
            order,
            coeffs: vec![Rf::zero(); order + 1],
        }
    }

    pub fn constant(c: Rf, order: usize) -> HSeries {
        let mut s = HSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rf::is_zero)
    }

    pub fn add(&self, o: &HSeries) -> HSeries {
        assert_eq!(self.order, o.order);
        HSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> HSeries {
        HSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(Rf::neg).collect(),
        }
    }

    pub fn mul(&self, o: &HSeries) -> HSeries {
        assert_eq!(self.order, o.order);
        let mut out = vec![Rf::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j > self.order || b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        HSeries {
            order: self.order,
            coeffs: out,
        }
    }
}

/// Truncated series division of dense coefficient lists (constant term of
/// `den` must be nonzero).
fn series_div(num: &[Rf], den: &[Rf], order: usize) -> Result<Vec<Rf>, ScalarError> {
    let d0 = &den[0];
    if d0.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    let inv0 = d0.inv()?;
    let mut out = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.get(k).cloned().unwrap_or_else(Rf::zero);
        for j in 1..=k {
            if let Some(dj) = den.get(j) {
                acc = acc.sub(&dj.mul(&out[k - j]));
            }
        }
        out.push(acc.mul(&inv0));
    }
    Ok(out)
}

/// Expand `f` (a rational function with no pole at q = 1) under the
/// substitution q = exp(h/2), truncated after `h^order`.
pub fn h_expand(f: &Rf, order: usize) -> Result<HSeries, ScalarError> {
    // strip common (q - 1) factors, detecting a genuine pole
    let qm1 = MPoly::var(VAR_Q).sub(&MPoly::one());
    let mut num = f.numerator().clone();
    let mut den = f.denominator().clone();
    let mut pole = 0usize;
    while den.eval_at_one(VAR_Q).is_zero() && !den.is_zero() {
        den = den.exact_div(&qm1).unwrap();
        if num.eval_at_one(VAR_Q).is_zero() && !num.is_zero() {
            num = num.exact_div(&qm1).unwrap();
        } else {
            pole += 1;
        }
    }
    if pole > 0 {
        return Err(ScalarError::PoleAtOne { order: pole });
    }
    // Taylor coefficients in eps = q - 1
    let nt: Vec<Rf> = num
        .taylor_at_one(VAR_Q, order + 1)
        .into_iter()
        .map(Rf::from_poly)
        .collect();
    let dt: Vec<Rf> = den
        .taylor_at_one(VAR_Q, order + 1)
        .into_iter()
        .map(Rf::from_poly)
        .collect();
    let eps_series = series_div(&nt, &dt, order)?;
    // eps(h) = exp(h/2) - 1, truncated
    let mut eps = HSeries::zero(order);
    let mut fact = BigInt::one();
    let mut two_pow = BigInt::one();
    for j in 1..=order {
        fact *= BigInt::from(j);
        two_pow *= BigInt::from(2);
        eps.coeffs[j] = Rf::from_ratio(BigInt::one(), &fact * &two_pow)?;
    }
    // Horner composition
    let mut acc = HSeries::zero(order);
    for c in eps_series.iter().rev() {
        acc = acc.mul(&eps).add(&HSeries::constant(c.clone(), order));
    }
    Ok(acc)
}

/// Coefficients of `x^{-s}`, s = 0..=order, of the expansion of `f` at
/// infinity in the variable `x`. Errors if `f` grows at infinity
/// (numerator degree exceeding denominator degree in `x`).
pub fn expand_at_infinity(f: &Rf, x: u8, order: usize) -> Result<Vec<Rf>, ScalarError> {
    let num = f.numerator();
    let den = f.denominator();
    let dn = num.dense_coeffs_in(x).len() - 1;
    let dd = den.dense_coeffs_in(x).len() - 1;
    if dn > dd {
        return Err(ScalarError::GrowthAtInfinity { order: dn - dd });
    }
    // reverse coefficients: w^dd * p(1/w) with w = 1/x
    let rev = |p: &MPoly, pad: usize| -> Vec<Rf> {
        let cs = p.dense_coeffs_in(x);
        let mut out = vec![Rf::zero(); pad + 1];
        for (i, c) in cs.iter().enumerate() {
            out[pad - i] = Rf::from_poly(c.clone());
        }
        out
    };
    let nrev = rev(num, dd);
    let drev = rev(den, dd);
    series_div(&nrev, &drev, order)
}
