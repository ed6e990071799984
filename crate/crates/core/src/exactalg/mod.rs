//! Exact coefficient arithmetic: rational scalars and sparse graded
//! polynomials in the generators `CP_i, h_i, p_i, e_i, b`.

mod generator;
mod poly;
mod scalar;

pub use generator::{Family, Generator};
pub use poly::{poly_arith, Monomial, MultiPoly, PolyOp};
pub(crate) use poly::render_sum;
pub use scalar::{format_rational, parse_rational, Scalar};
