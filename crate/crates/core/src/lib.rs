//! Exact formal-group-law calculus for complex cobordism.
//!
//! The core is generic over an exact [`Scalar`] field; the aliases below fix
//! it to arbitrary-precision rationals, which is what the CLI and the
//! verification suites use. [`SmallRational`] (`i128` fractions) is faster
//! but can overflow at high orders.

pub mod check;
pub mod error;
pub mod exactalg;
pub mod fgl;
pub mod hurewicz;
pub mod partitions;
pub mod series;
pub mod symfunc;

pub use check::{CheckReport, Discrepancy, Location};
pub use error::Error;
pub use exactalg::{Family, Generator, Monomial, MultiPoly, PolyOp, Scalar};
pub use hurewicz::DividedExpr;
pub use partitions::{enumerate_partitions, Partition};
pub use series::{BiTruncSeries, BiVar, InversionStrategy, TruncSeries};

/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
/// Fixed-width rational; exact until it overflows.
pub type SmallRational = num_rational::Ratio<i128>;

pub type Poly = MultiPoly<Rational>;
pub type Series = TruncSeries<Rational>;
pub type BiSeries = BiTruncSeries<Rational>;
pub type Divided = DividedExpr<Rational>;
pub type Report = CheckReport<Rational>;
pub type Twist = hurewicz::TwistExpansion<Rational>;
