//! Free associative algebras over the scalar field, quotient strategies,
//! and noncommutative matrices.

mod echelon;
mod matrices;
mod ncpoly;
mod pbw;
mod presented;

pub use echelon::Echelon;
pub use matrices::{lift, overline_copies, underline_copies};
pub use ncpoly::{word_cmp, NcPoly, Word};
pub use pbw::{gl_gen, PbwAlgebra};
pub use presented::{Generator, IdealReducer, PresentedAlgebra, SpanVector};
