//! Characteristic numbers: the Hurewicz image `𝔥` of cobordism classes in
//! `S_* = Z[h_1, h_2, ...]`.
//!
//! Generators `CP_n` map to the coefficient of `z^n` in
//! `(1 + h_1 z + h_2 z^2 + ...)^{-(n+1)}` (normal-bundle convention). The
//! classes `b^MU_n` map into `S_* ⊗ Z[b_(*)]` by the partition formula
//!
//! ```text
//! 𝔥(b^MU_n) = Σ_{|π|=n} (r over r_*) Π_k (𝔥(CP_{k-1}) / k)^{r_k} · b_(r)
//! ```

mod chern;
mod cumulants;
mod divided;
mod twist;

use std::collections::BTreeMap;

use num_bigint::BigInt;

pub use chern::{chern_oracle_cp, monomial_pairing};
pub use cumulants::{cumulants_to_moments, moments_via_series};
pub use divided::DividedExpr;
pub use twist::{twist_expansion, twist_expansion_symbolic, TwistExpansion};

use crate::check::{CheckReport, Location};
use crate::error::Error;
use crate::exactalg::{Family, Generator, MultiPoly, Scalar};
use crate::fgl::{miscenko_log, orientation_series};
use crate::partitions::enumerate_partitions;
use crate::series::{BiTruncSeries, TruncSeries};

/// `𝔥(CP_n)`: the `z^n` coefficient of `(1 + h_1 z + ... + h_n z^n)^{-(n+1)}`.
pub fn hurewicz_cp<S: Scalar>(n: u32) -> MultiPoly<S> {
    if n == 0 {
        return MultiPoly::one();
    }
    let order = n as usize;
    let series = orientation_series::<S>(order + 1);
    // B(z)/z = 1 + h_1 z + ...
    let quotient = TruncSeries::new(order, series.coeffs()[1..].to_vec());
    let exponent = S::from_i64(-(i64::from(n) + 1));
    quotient.pow_scalar(&exponent).expect("constant term is 1").coeff(order).clone()
}

/// `𝔥(CP_{k-1}) / k`, which is integral.
pub fn hurewicz_cp_over_k<S: Scalar>(k: u32) -> Result<MultiPoly<S>, Error> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    hurewicz_cp::<S>(k - 1).exact_div_int(u64::from(k))
}

/// Substitution `CP_k ↦ 𝔥(CP_k)` with memoized images.
#[derive(Clone, Debug)]
pub struct HurewiczMap<S> {
    images: BTreeMap<u32, MultiPoly<S>>,
}

impl<S: Scalar> HurewiczMap<S> {
    /// Precomputes images of `CP_1 ... CP_max`; larger indices are computed
    /// on demand.
    pub fn new(max: u32) -> Self {
        HurewiczMap { images: (1..=max).map(|k| (k, hurewicz_cp(k))).collect() }
    }

    fn image(&self, g: Generator) -> Option<MultiPoly<S>> {
        (g.family() == Family::CP)
            .then(|| self.images.get(&g.index()).cloned().unwrap_or_else(|| hurewicz_cp(g.index())))
    }

    pub fn apply_poly(&self, p: &MultiPoly<S>) -> MultiPoly<S> {
        p.substitute(|g| self.image(g))
    }

    pub fn apply(&self, s: &TruncSeries<S>) -> TruncSeries<S> {
        s.substitute(|g| self.image(g))
    }

    pub fn apply_bi(&self, s: &BiTruncSeries<S>) -> BiTruncSeries<S> {
        s.substitute(|g| self.image(g))
    }

    pub fn apply_divided(&self, d: &DividedExpr<S>) -> DividedExpr<S> {
        d.substitute(|g| self.image(g))
    }
}

/// Partition-sum weights `(r over r_*) Π_k c_k^{r_k}` grouped by `r = r(π)`.
pub(crate) fn partition_sum<S: Scalar>(n: u32, c: &[MultiPoly<S>]) -> DividedExpr<S> {
    let mut entries = Vec::new();
    for pi in enumerate_partitions(n) {
        let mut term = MultiPoly::one();
        for (k, r) in pi.multiplicities() {
            term = &term * &c[k as usize - 1].pow(r);
        }
        let weight = S::from_bigint(&BigInt::from(pi.multinomial())).expect("multinomial exceeds scalar range");
        entries.push((pi.length(), term.scale(&weight)));
    }
    DividedExpr::from_entries(entries)
}

/// `𝔥(b^MU_n)` in `S_* ⊗ Z[b_(*)]` by the partition formula.
pub fn hurewicz_bmu<S: Scalar>(n: u32) -> Result<DividedExpr<S>, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let c = (1..=n)
        .map(|k| {
            hurewicz_cp_over_k::<S>(k).map_err(|_| Error::IntegralityViolation {
                n,
                detail: format!("h(CP{}) not divisible by {k}", k - 1),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let out = partition_sum(n, &c);
    out.try_integrality(n)?;
    Ok(out)
}

/// `𝔥(b^MU_n)` from the series engine: the `z^n` coefficient of
/// `exp(b · 𝔥(log_MU)(z))`, rewritten with `b^r = r! · b_(r)`.
pub fn hurewicz_bmu_via_series<S: Scalar>(n: u32) -> Result<DividedExpr<S>, Error> {
    let order = n as usize;
    let log = HurewiczMap::new(n).apply(&miscenko_log::<S>(order)?);
    let series = log.scale(&MultiPoly::b()).exp()?;
    Ok(DividedExpr::from_ordinary_b(series.coeff(order)))
}

/// Cycle map `ε`: sends `h_i ↦ 0`.
pub fn cycle_map<S: Scalar>(e: &DividedExpr<S>) -> DividedExpr<S> {
    e.cycle_map()
}

/// `true` iff `𝔥(CP_{k-1})` is divisible by `k` over the integers.
pub fn divisibility_check(k: u32) -> bool {
    k >= 1 && hurewicz_cp::<num_rational::BigRational>(k - 1).is_divisible_over_z(u64::from(k))
}

/// Lagrange inversion against the normal-bundle oracle for `n <= max_n`.
pub fn oracle_check<S: Scalar>(max_n: u32) -> CheckReport<S> {
    let mut report = CheckReport::new(format!("h(CP_n) matches Chern oracle, n <= {max_n}"));
    for n in 0..=max_n {
        report.compare(Location::Case(format!("n={n}")), &hurewicz_cp(n), &chern_oracle_cp(n));
    }
    report
}

/// Integrality of `𝔥(b^MU_n)` for `1 <= n <= max_n`. A failing case reports
/// the offending coefficient against zero.
pub fn integrality_check<S: Scalar>(max_n: u32) -> CheckReport<S> {
    let mut report = CheckReport::new(format!("integrality of h(b^MU_n), n <= {max_n}"));
    for n in 1..=max_n {
        let c = (1..=n).map(|k| hurewicz_cp::<S>(k - 1).div_int(i64::from(k))).collect::<Vec<_>>();
        let expr = partition_sum(n, &c);
        let bad = expr.first_non_integral().map(|(r, c)| (r, c.clone()));
        let location = Location::Case(match &bad {
            Some((r, _)) => format!("n={n}, b({r})"),
            None => format!("n={n}"),
        });
        let lhs = bad.map(|(_, c)| c).unwrap_or_default();
        report.record(lhs.is_zero(), location, lhs, MultiPoly::zero());
    }
    report
}

/// `divisibility_check(k)` for `1 <= k <= max_k`; a failing case reports
/// `𝔥(CP_{k-1})` against `k`.
pub fn divisibility_report<S: Scalar>(max_k: u32) -> CheckReport<S> {
    let mut report = CheckReport::new(format!("h(CP_(k-1)) divisible by k, k <= {max_k}"));
    for k in 1..=max_k {
        let value = hurewicz_cp::<S>(k - 1);
        let ok = value.is_divisible_over_z(u64::from(k));
        report.record(ok, Location::Case(format!("k={k}")), value, MultiPoly::integer(i64::from(k)));
    }
    report
}
