//! Exact rational functions over the integers: the universal coefficient
//! field for every construction in this crate.

use super::poly::{MPoly, VAR_Q};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

use crate::scalars::ScalarError;

/// A GCD-reduced fraction of integer polynomials with a positive-leading
/// denominator. Immutable; all operations produce new values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rf {
    num: MPoly,
    den: MPoly,
}

impl Rf {
    fn reduced(num: MPoly, den: MPoly) -> Rf {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Rf {
                num,
                den: MPoly::one(),
            };
        }
        let g = MPoly::gcd(&num, &den);
        let mut num = num.exact_div(&g).unwrap();
        let mut den = den.exact_div(&g).unwrap();
        if den.lead_int().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Rf { num, den }
    }

    pub fn zero() -> Rf {
        Rf {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Rf {
        Rf {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Rf {
        Rf {
            num: MPoly::from_int(n),
            den: MPoly::one(),
        }
    }

    pub fn from_poly(p: MPoly) -> Rf {
        Rf {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn from_ratio(num: BigInt, den: BigInt) -> Result<Rf, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rf::reduced(MPoly::from_bigint(num), MPoly::from_bigint(den)))
    }

    pub fn var(v: u8) -> Rf {
        Rf::from_poly(MPoly::var(v))
    }

    pub fn q() -> Rf {
        Rf::var(VAR_Q)
    }

    /// q^e for any integer exponent.
    pub fn q_pow(e: i64) -> Rf {
        Rf::var_pow(VAR_Q, e)
    }

    pub fn var_pow(v: u8, e: i64) -> Rf {
        let p = MPoly::var(v).pow(e.unsigned_abs() as usize);
        if e >= 0 {
            Rf::from_poly(p)
        } else {
            Rf {
                num: MPoly::one(),
                den: p,
            }
        }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn neg(&self) -> Rf {
        Rf {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Rf) -> Rf {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let g = MPoly::gcd(&self.den, &o.den);
        let da = self.den.exact_div(&g).unwrap();
        let db = o.den.exact_div(&g).unwrap();
        let num = self.num.mul(&db).add(&o.num.mul(&da));
        let den = self.den.mul(&db);
        Rf::reduced(num, den)
    }

    pub fn sub(&self, o: &Rf) -> Rf {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rf) -> Rf {
        if self.is_zero() || o.is_zero() {
            return Rf::zero();
        }
        // cross-reduce before multiplying
        let g1 = MPoly::gcd(&self.num, &o.den);
        let g2 = MPoly::gcd(&o.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = o.den.exact_div(&g1).unwrap();
        let n2 = o.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.lead_int().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Rf { num, den }
    }

    pub fn div(&self, o: &Rf) -> Result<Rf, ScalarError> {
        if o.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.mul(&Rf {
            num: o.den.clone(),
            den: o.num.clone(),
        }
        .normalized()))
    }

    fn normalized(self) -> Rf {
        if self.den.lead_int().is_negative() {
            Rf {
                num: self.num.neg(),
                den: self.den.neg(),
            }
        } else {
            self
        }
    }

    pub fn inv(&self) -> Result<Rf, ScalarError> {
        Rf::one().div(self)
    }

    pub fn pow(&self, e: i64) -> Result<Rf, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Rf::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn derivative(&self, var: u8) -> Rf {
        let n = self.num.derivative(var).mul(&self.den);
        let d = self.num.mul(&self.den.derivative(var));
        Rf::reduced(n.sub(&d), self.den.mul(&self.den))
    }

    /// Substitute `var := num/den` exactly.
    pub fn substitute_rational(&self, var: u8, num: &BigInt, den: &BigInt) -> Result<Rf, ScalarError> {
        let (pn, kn) = self.num.substitute_rational(var, num, den);
        let (pd, kd) = self.den.substitute_rational(var, num, den);
        if pd.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // self = (pn / den^kn) / (pd / den^kd)
        let mut n = pn;
        let mut d = pd;
        if kd > kn {
            n = n.mul(&MPoly::from_bigint(den.pow((kd - kn) as u32)));
        } else {
            d = d.mul(&MPoly::from_bigint(den.pow((kn - kd) as u32)));
        }
        Ok(Rf::reduced(n, d))
    }
}

impl fmt::Display for Rf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
