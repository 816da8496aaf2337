//! Exact symbolic verification engine for braided matrix algebras:
//! skew-invertible symmetries, reflection-equation algebras, braided
//! Yangians, and their classical degenerations. All identities are checked
//! as exact zeros over multivariate rational-function fields.

pub mod gaudin;
pub mod linalg;
pub mod ncalg;
pub mod projectors;
pub mod realgebra;
pub mod report;
pub mod rmatrix;
pub mod scalars;
pub mod yangian;

pub use ncalg::NcPoly;
pub use report::{Report, Status};
pub use rmatrix::{Braiding, BraidingKind, Coeff, CurrentRMatrix, LegOperator};
pub use scalars::{Rf, ScalarError};
