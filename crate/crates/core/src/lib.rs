//! Numerical semigroup rings, their fractional ideals, and Cohen-Macaulay
//! types of idealizations `R ⋉ I`.

pub mod error;
pub mod exactalg;
pub mod relideal;
pub mod semigroup;
pub mod serieside;
pub mod typecalc;
pub mod constructions;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{CoeffMatrix, FieldSpec, Scalar};
pub use relideal::RelativeIdeal;
pub use semigroup::{NumericalSemigroup, SemigroupInvariants};
pub use serieside::{FractionalIdeal, TruncatedSeries};
pub use typecalc::{classify, AnyIdeal, IdealOps, IdealReport, Monomial, Verdict, VerdictStatus};
