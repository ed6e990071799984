//! Truncated power series engine over polynomial coefficients.

mod bi;
mod expansion;
mod uni;

pub use bi::{bi_lift, bi_substitute, compose_into_bi, BiTruncSeries, BiVar};
pub use expansion::exp_partition_expansion;
pub use uni::{InversionStrategy, TruncSeries};
