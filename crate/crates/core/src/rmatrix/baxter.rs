//! Yang-Baxterization: current R-matrices built from a constant symmetry,
//! with the current Yang-Baxter equation verified at construction.

use super::{Braiding, BraidingKind, LegOperator, RMatrixError};
use crate::scalars::Rf;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurrentForm {
    /// R - a/(u-v) I, for involutive symmetries.
    Rational,
    /// R - (q-q^{-1})u/(u-v) I, for Hecke symmetries.
    TrigRational,
}

#[derive(Clone, Debug)]
pub struct CurrentRMatrix {
    pub base: Braiding,
    pub form: CurrentForm,
    pub a: Rf,
}

impl CurrentRMatrix {
    /// Baxterizes the symmetry; the form is fixed by its kind. The free
    /// constant `a` only enters the rational form.
    pub fn new(base: Braiding, a: Rf) -> Result<CurrentRMatrix, RMatrixError> {
        let form = match base.kind {
            BraidingKind::Involutive => CurrentForm::Rational,
            BraidingKind::Hecke => CurrentForm::TrigRational,
        };
        let cur = CurrentRMatrix { base, form, a };
        if let Some(w) = cur.current_ybe_witness() {
            return Err(RMatrixError::CurrentYangBaxter(w));
        }
        Ok(cur)
    }

    /// The matrix R(x,y) with the spectral parameters given as scalar
    /// variables.
    pub fn at(&self, x: u8, y: u8) -> LegOperator<Rf> {
        let xv = Rf::var(x);
        let yv = Rf::var(y);
        let den = xv.sub(&yv);
        let coeff = match self.form {
            CurrentForm::Rational => self.a.div(&den).unwrap(),
            CurrentForm::TrigRational => {
                let q = Rf::q();
                q.sub(&q.inv().unwrap()).mul(&xv).div(&den).unwrap()
            }
        };
        self.base
            .r
            .sub(&LegOperator::identity(self.base.dim, 2).scale(&coeff))
    }

    /// Residual of R_12(u,v) R_23(u,w) R_12(v,w) = R_23(v,w) R_12(u,w) R_23(u,v)
    /// as an exact rational function in u, v, w.
    pub fn current_ybe_witness(&self) -> Option<String> {
        use crate::scalars::{VAR_U, VAR_V, VAR_W};
        let r = |x, y| self.at(x, y);
        let e1 = |op: &LegOperator<Rf>| op.embed(1, 3);
        let e2 = |op: &LegOperator<Rf>| op.embed(2, 3);
        let lhs = e1(&r(VAR_U, VAR_V))
            .mul(&e2(&r(VAR_U, VAR_W)))
            .mul(&e1(&r(VAR_V, VAR_W)));
        let rhs = e2(&r(VAR_V, VAR_W))
            .mul(&e1(&r(VAR_U, VAR_W)))
            .mul(&e2(&r(VAR_U, VAR_V)));
        lhs.sub(&rhs).first_entry_witness()
    }
}
