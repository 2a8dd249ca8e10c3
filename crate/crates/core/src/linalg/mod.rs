//! Exact linear algebra over the rationals.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod span;

pub use matrix::{Echelon, Matrix};
pub use poly::Polynomial;
pub use scalar::{format_scalar, int, parse_scalar, ratio, Scalar};
pub use span::{characteristic_polynomial, invertible_in_span};
