//! Multivariate polynomials over the integers in a fixed, globally ordered
//! set of indeterminates, stored recursively dense by variable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Global variable table. The index of a name is its position in the fixed
/// monomial order; smaller index = outer (main) variable.
pub const VAR_NAMES: &[&str] = &[
    "q", "u", "v", "w", "t", "h", "u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8",
];

pub const VAR_Q: u8 = 0;
pub const VAR_U: u8 = 1;
pub const VAR_V: u8 = 2;
pub const VAR_W: u8 = 3;
pub const VAR_T: u8 = 4;
pub const VAR_H: u8 = 5;

pub fn var_index(name: &str) -> Option<u8> {
    VAR_NAMES.iter().position(|n| *n == name).map(|i| i as u8)
}

/// Recursive dense polynomial: either an integer constant or a dense
/// polynomial in its smallest variable, with coefficients in strictly
/// larger variables only.
///
/// Canonical form: a `Poly` node has at least two coefficients, a nonzero
/// leading coefficient, and every coefficient's main variable is larger
/// than `var`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MPoly {
    Const(BigInt),
    Poly { var: u8, coeffs: Vec<MPoly> },
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::Const(BigInt::zero())
    }

    pub fn one() -> Self {
        MPoly::Const(BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        MPoly::Const(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        MPoly::Const(n)
    }

    pub fn var(v: u8) -> Self {
        MPoly::Poly {
            var: v,
            coeffs: vec![MPoly::zero(), MPoly::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, MPoly::Const(c) if c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, MPoly::Const(c) if c.is_one())
    }

    pub fn is_const(&self) -> bool {
        matches!(self, MPoly::Const(_))
    }

    /// Smallest variable index occurring, or `None` for constants.
    pub fn main_var(&self) -> Option<u8> {
        match self {
            MPoly::Const(_) => None,
            MPoly::Poly { var, .. } => Some(*var),
        }
    }

    /// Build a polynomial in `var` from dense coefficients, restoring the
    /// canonical form (trailing zeros trimmed, degree 0 collapsed).
    pub fn build(var: u8, mut coeffs: Vec<MPoly>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return MPoly::zero();
        }
        if coeffs.len() == 1 {
            return coeffs.pop().unwrap();
        }
        debug_assert!(coeffs.iter().all(|c| c.main_var().map_or(true, |v| v > var)));
        MPoly::Poly { var, coeffs }
    }

    /// Dense coefficient view of `self` as a univariate polynomial in `var`.
    /// Valid when `var <= self.main_var()` (always true for the main variable).
    pub fn coeffs_in(&self, var: u8) -> Vec<MPoly> {
        match self {
            MPoly::Poly { var: v, coeffs } if *v == var => coeffs.clone(),
            _ => vec![self.clone()],
        }
    }

    pub fn degree_in(&self, var: u8) -> usize {
        match self {
            MPoly::Poly { var: v, coeffs } if *v == var => coeffs.len() - 1,
            _ => 0,
        }
    }

    pub fn leading_coeff_in(&self, var: u8) -> MPoly {
        match self {
            MPoly::Poly { var: v, coeffs } if *v == var => coeffs.last().unwrap().clone(),
            _ => self.clone(),
        }
    }

    /// Sign-carrying integer coefficient of the recursive leading term.
    pub fn lead_int(&self) -> BigInt {
        match self {
            MPoly::Const(c) => c.clone(),
            MPoly::Poly { coeffs, .. } => coeffs.last().unwrap().lead_int(),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            MPoly::Const(c) => MPoly::Const(-c),
            MPoly::Poly { var, coeffs } => MPoly::Poly {
                var: *var,
                coeffs: coeffs.iter().map(|c| c.neg()).collect(),
            },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (MPoly::Const(a), MPoly::Const(b)) => MPoly::Const(a + b),
            _ => {
                let va = self.main_var().unwrap_or(u8::MAX);
                let vb = other.main_var().unwrap_or(u8::MAX);
                let v = va.min(vb);
                let a = self.coeffs_in(v);
                let b = other.coeffs_in(v);
                let n = a.len().max(b.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let x = match (a.get(i), b.get(i)) {
                        (Some(x), Some(y)) => x.add(y),
                        (Some(x), None) => x.clone(),
                        (None, Some(y)) => y.clone(),
                        (None, None) => unreachable!(),
                    };
                    out.push(x);
                }
                MPoly::build(v, out)
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        match (self, other) {
            (MPoly::Const(a), MPoly::Const(b)) => MPoly::Const(a * b),
            _ => {
                let va = self.main_var().unwrap_or(u8::MAX);
                let vb = other.main_var().unwrap_or(u8::MAX);
                let v = va.min(vb);
                let a = self.coeffs_in(v);
                let b = other.coeffs_in(v);
                let mut out = vec![MPoly::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        out[i + j] = out[i + j].add(&x.mul(y));
                    }
                }
                MPoly::build(v, out)
            }
        }
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        self.mul(&MPoly::Const(n.clone()))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        match other {
            MPoly::Const(d) => self.map_ints(&|c: &BigInt| {
                let (q, r) = c.div_rem(d);
                if r.is_zero() {
                    Some(q)
                } else {
                    None
                }
            }),
            MPoly::Poly { var: dv, .. } => {
                let fv = self.main_var().unwrap_or(u8::MAX);
                if fv < *dv {
                    // divisor free of the main variable: divide each coefficient
                    let coeffs = self.coeffs_in(fv);
                    let mut out = Vec::with_capacity(coeffs.len());
                    for c in &coeffs {
                        out.push(c.exact_div(other)?);
                    }
                    return Some(MPoly::build(fv, out));
                }
                if fv > *dv {
                    return None; // deg 0 in dv, divisor has positive degree
                }
                let x = *dv;
                let mut rem = self.coeffs_in(x);
                let d = other.coeffs_in(x);
                let dd = d.len() - 1;
                if rem.len() - 1 < dd {
                    return None;
                }
                let mut quot = vec![MPoly::zero(); rem.len() - dd];
                for k in (0..quot.len()).rev() {
                    let lead = rem[k + dd].clone();
                    if lead.is_zero() {
                        continue;
                    }
                    let qc = lead.exact_div(&d[dd])?;
                    for (j, dj) in d.iter().enumerate() {
                        rem[k + j] = rem[k + j].sub(&qc.mul(dj));
                    }
                    quot[k] = qc;
                }
                if rem.iter().all(|c| c.is_zero()) {
                    Some(MPoly::build(x, quot))
                } else {
                    None
                }
            }
        }
    }

    fn map_ints(&self, f: &impl Fn(&BigInt) -> Option<BigInt>) -> Option<Self> {
        match self {
            MPoly::Const(c) => f(c).map(MPoly::Const),
            MPoly::Poly { var, coeffs } => {
                let mut out = Vec::with_capacity(coeffs.len());
                for c in coeffs {
                    out.push(c.map_ints(f)?);
                }
                Some(MPoly::build(*var, out))
            }
        }
    }

    /// Content with respect to `var`: gcd of the dense coefficients.
    pub fn content_in(&self, var: u8) -> MPoly {
        let coeffs = self.coeffs_in(var);
        let mut g = MPoly::zero();
        for c in &coeffs {
            g = MPoly::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn normalize_sign(p: MPoly) -> MPoly {
        if p.lead_int().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Pseudo-remainder of `a` by `b` in variable `x` (deg_x a >= deg_x b > 0).
    fn prem(a: &[MPoly], b: &[MPoly], x: u8) -> Vec<MPoly> {
        let mut rem: Vec<MPoly> = a.to_vec();
        let db = b.len() - 1;
        let lb = &b[db];
        while rem.len() > db && !rem.iter().all(|c| c.is_zero()) {
            while rem.len() > 1 && rem.last().unwrap().is_zero() {
                rem.pop();
            }
            if rem.len() - 1 < db {
                break;
            }
            let dr = rem.len() - 1;
            let lr = rem[dr].clone();
            if lr.is_zero() {
                break;
            }
            // rem := lb*rem - lr * x^(dr-db) * b
            for c in rem.iter_mut() {
                *c = c.mul(lb);
            }
            for (j, bj) in b.iter().enumerate() {
                rem[dr - db + j] = rem[dr - db + j].sub(&lr.mul(bj));
            }
            debug_assert!(rem[dr].is_zero());
            rem.pop();
        }
        let _ = x;
        rem
    }

    /// GCD, normalized to positive recursive leading coefficient.
    pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_zero() {
            return Self::normalize_sign(b.clone());
        }
        if b.is_zero() {
            return Self::normalize_sign(a.clone());
        }
        match (a, b) {
            (MPoly::Const(x), MPoly::Const(y)) => MPoly::Const(x.gcd(y)),
            _ => {
                let va = a.main_var().unwrap_or(u8::MAX);
                let vb = b.main_var().unwrap_or(u8::MAX);
                let x = va.min(vb);
                if va != vb {
                    // one operand is free of x: gcd against the other's content
                    let (free, bound) = if va > vb { (a, b) } else { (b, a) };
                    return MPoly::gcd(free, &bound.content_in(x));
                }
                let ca = a.content_in(x);
                let cb = b.content_in(x);
                let c = MPoly::gcd(&ca, &cb);
                let pa = a.exact_div(&ca).unwrap().coeffs_in(x);
                let pb = b.exact_div(&cb).unwrap().coeffs_in(x);
                let (mut f, mut g) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
                // primitive PRS
                loop {
                    let r = Self::prem(&f, &g, x);
                    if r.iter().all(|c| c.is_zero()) {
                        let gp = MPoly::build(x, g);
                        let cont = gp.content_in(x);
                        let prim = gp.exact_div(&cont).unwrap();
                        return Self::normalize_sign(c.mul(&prim));
                    }
                    let rp = MPoly::build(x, r);
                    if rp.degree_in(x) == 0 {
                        // gcd free of x
                        return Self::normalize_sign(c);
                    }
                    let cont = rp.content_in(x);
                    let prim = rp.exact_div(&cont).unwrap();
                    f = g;
                    g = prim.coeffs_in(x);
                }
            }
        }
    }

    pub fn derivative(&self, var: u8) -> MPoly {
        match self {
            MPoly::Const(_) => MPoly::zero(),
            MPoly::Poly { var: v, coeffs } => {
                if *v == var {
                    let mut out = Vec::with_capacity(coeffs.len().saturating_sub(1));
                    for (i, c) in coeffs.iter().enumerate().skip(1) {
                        out.push(c.mul_int(&BigInt::from(i)));
                    }
                    MPoly::build(var, out)
                } else if *v < var {
                    let out = coeffs.iter().map(|c| c.derivative(var)).collect();
                    MPoly::build(*v, out)
                } else {
                    MPoly::zero()
                }
            }
        }
    }

    /// Substitute `var := num/den`; returns `(p_num, k)` with
    /// `p(var = num/den) = p_num / den^k`.
    pub fn substitute_rational(&self, var: u8, num: &BigInt, den: &BigInt) -> (MPoly, usize) {
        let coeffs = self.subst_coeffs(var);
        let d = coeffs.len() - 1;
        let mut acc = MPoly::zero();
        let mut num_pow = BigInt::one();
        for (i, c) in coeffs.iter().enumerate() {
            let den_pow = den.pow((d - i) as u32);
            acc = acc.add(&c.mul_int(&(&num_pow * den_pow)));
            num_pow *= num;
        }
        (acc, d)
    }

    /// Dense coefficients in `var` even when `var` is not the main variable
    /// (coefficients may then involve smaller variables).
    pub fn dense_coeffs_in(&self, var: u8) -> Vec<MPoly> {
        self.subst_coeffs(var)
    }

    fn subst_coeffs(&self, var: u8) -> Vec<MPoly> {
        match self {
            MPoly::Const(_) => vec![self.clone()],
            MPoly::Poly { var: v, coeffs } => {
                if *v == var {
                    coeffs.clone()
                } else if *v < var {
                    // distribute the substitution into the coefficients
                    let subbed: Vec<Vec<MPoly>> =
                        coeffs.iter().map(|c| c.subst_coeffs(var)).collect();
                    let deg = subbed.iter().map(|s| s.len()).max().unwrap();
                    let mut out = vec![MPoly::zero(); deg];
                    // re-pad each coefficient's expansion to a common degree is wrong:
                    // substitute_rational needs a common denominator power, so expand
                    // through build instead.
                    for (j, slot) in out.iter_mut().enumerate() {
                        let col: Vec<MPoly> = subbed
                            .iter()
                            .map(|s| s.get(j).cloned().unwrap_or_else(MPoly::zero))
                            .collect();
                        *slot = MPoly::build(*v, col);
                    }
                    out
                } else {
                    vec![self.clone()]
                }
            }
        }
    }

    /// Coefficients of the expansion in powers of `(var - 1)`, lowest first,
    /// up to and including order `terms - 1`.
    pub fn taylor_at_one(&self, var: u8, terms: usize) -> Vec<MPoly> {
        let mut coeffs = self.coeffs_in(var);
        let mut out = Vec::with_capacity(terms);
        for _ in 0..terms {
            if coeffs.len() == 1 {
                out.push(coeffs[0].clone());
                coeffs[0] = MPoly::zero();
                continue;
            }
            // synthetic division by (var - 1)
            let mut quot = vec![MPoly::zero(); coeffs.len() - 1];
            let mut carry = MPoly::zero();
            for i in (0..coeffs.len()).rev() {
                let cur = coeffs[i].add(&carry);
                if i == 0 {
                    out.push(cur);
                } else {
                    quot[i - 1] = cur.clone();
                    carry = cur;
                }
            }
            coeffs = quot;
        }
        out
    }

    /// Evaluate at `var = 1`.
    pub fn eval_at_one(&self, var: u8) -> MPoly {
        let coeffs = self.coeffs_in(var);
        let mut acc = MPoly::zero();
        for c in &coeffs {
            acc = acc.add(c);
        }
        acc
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MPoly::Const(c) => write!(f, "{}", c),
            MPoly::Poly { var, coeffs } => {
                let name = VAR_NAMES[*var as usize];
                let mut first = true;
                for (i, c) in coeffs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let needs_paren = !c.is_const();
                    if i == 0 {
                        write!(f, "{}", c)?;
                    } else {
                        if needs_paren {
                            write!(f, "({})", c)?;
                        } else if !c.is_one() {
                            write!(f, "{}*", c)?;
                        }
                        if i == 1 {
                            write!(f, "{}", name)?;
                        } else {
                            write!(f, "{}^{}", name, i)?;
                        }
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}
