//! Exact linear algebra over words: polynomials and tensors with rational
//! coefficients.

mod json;
mod poly;
mod tensor;

use num_rational::BigRational;

pub use crate::terms::parse_scalar;
pub use json::{PolyTermJson, TensorTermJson};
pub use poly::Poly;
pub use tensor::TensorPoly;

/// Exact rational coefficient, always in lowest terms.
pub type Scalar = BigRational;

/// `num` or `num/den`.
pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}
