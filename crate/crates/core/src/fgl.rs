//! The formal group law of complex cobordism, modeled rationally in the
//! classes `CP_i`.
//!
//! The logarithm is `Σ_{k≥1} CP_{k-1}/k · z^k`, the exponential is its
//! compositional inverse, and the group sum is
//! `F(z0, z1) = exp(log z0 + log z1)`.

use crate::check::{CheckReport, Location};
use crate::error::Error;
use crate::exactalg::{MultiPoly, Scalar};
use crate::hurewicz::HurewiczMap;
use crate::series::{bi_lift, compose_into_bi, BiTruncSeries, BiVar, TruncSeries};

fn require_order(order: usize) -> Result<(), Error> {
    if order == 0 {
        Err(Error::InvalidArgument("order must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Logarithm, exponential and their truncation order, computed once.
#[derive(Clone, Debug)]
pub struct FglContext<S> {
    order: usize,
    log_series: TruncSeries<S>,
    exp_series: TruncSeries<S>,
}

impl<S: Scalar> FglContext<S> {
    pub fn new(order: usize) -> Result<Self, Error> {
        let log_series = miscenko_log(order)?;
        let exp_series = log_series.inverse()?;
        Ok(FglContext { order, log_series, exp_series })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn log_series(&self) -> &TruncSeries<S> {
        &self.log_series
    }

    pub fn exp_series(&self) -> &TruncSeries<S> {
        &self.exp_series
    }

    /// `exp(log z0 + log z1)`.
    pub fn sum(&self) -> BiTruncSeries<S> {
        let sum_of_logs = bi_lift(&self.log_series, BiVar::Z0)
            .add(&bi_lift(&self.log_series, BiVar::Z1))
            .expect("equal orders");
        compose_into_bi(&self.exp_series, &sum_of_logs).expect("logarithm has no constant term")
    }

    /// Checks `log∘exp = z = exp∘log`.
    pub fn roundtrip_check(&self) -> CheckReport<S> {
        let mut report = CheckReport::new(format!("roundtrip log/exp, order {}", self.order));
        let z = TruncSeries::variable(self.order);
        let forward = self.log_series.compose(&self.exp_series).expect("curve");
        let backward = self.exp_series.compose(&self.log_series).expect("curve");
        for k in 0..=self.order {
            report.compare(Location::Case(format!("log(exp(z)) at z^{k}")), forward.coeff(k), z.coeff(k));
        }
        for k in 0..=self.order {
            report.compare(Location::Case(format!("exp(log(z)) at z^{k}")), backward.coeff(k), z.coeff(k));
        }
        report
    }

    /// `log F(z0, z1) = log z0 + log z1` coefficientwise. This linearization
    /// certifies associativity without a three-variable series.
    pub fn linearization_check(&self) -> CheckReport<S> {
        let mut report = CheckReport::new(format!("log linearizes the group sum, order {}", self.order));
        let lhs = compose_into_bi(&self.log_series, &self.sum()).expect("sum has no constant term");
        let rhs = bi_lift(&self.log_series, BiVar::Z0)
            .add(&bi_lift(&self.log_series, BiVar::Z1))
            .expect("equal orders");
        compare_bi(&mut report, &lhs, &rhs);
        report
    }
}

/// `Σ_{k=1}^{N} CP_{k-1}/k · z^k`.
pub fn miscenko_log<S: Scalar>(order: usize) -> Result<TruncSeries<S>, Error> {
    require_order(order)?;
    let coeffs = (0..=order)
        .map(|k| if k == 0 { MultiPoly::zero() } else { MultiPoly::cp(k as u32 - 1).div_int(k as i64) })
        .collect();
    Ok(TruncSeries::new(order, coeffs))
}

/// Compositional inverse of [`miscenko_log`].
pub fn fgl_exp<S: Scalar>(order: usize) -> Result<TruncSeries<S>, Error> {
    miscenko_log::<S>(order)?.inverse()
}

/// The formal group sum `z0 +_MU z1`, truncated at total degree `order`.
pub fn fgl_sum<S: Scalar>(order: usize) -> Result<BiTruncSeries<S>, Error> {
    Ok(FglContext::new(order)?.sum())
}

/// `b^MU(z) = exp(b · log(z))` over `Q[CP_*, b]`.
pub fn bmu_series<S: Scalar>(order: usize) -> Result<TruncSeries<S>, Error> {
    miscenko_log::<S>(order)?.scale(&MultiPoly::b()).exp()
}

/// Both sides of `b(z0) · b(z1) = b(F(z0, z1))` as bivariate series.
pub fn hopf_sides<S: Scalar>(order: usize) -> Result<(BiTruncSeries<S>, BiTruncSeries<S>), Error> {
    let ctx = FglContext::new(order)?;
    let bmu = ctx.log_series().scale(&MultiPoly::b()).exp()?;
    let lhs = bi_lift(&bmu, BiVar::Z0).mul(&bi_lift(&bmu, BiVar::Z1))?;
    let rhs = compose_into_bi(&bmu, &ctx.sum())?;
    Ok((lhs, rhs))
}

pub(crate) fn compare_bi<S: Scalar>(report: &mut CheckReport<S>, lhs: &BiTruncSeries<S>, rhs: &BiTruncSeries<S>) {
    for (i, j, a) in lhs.iter() {
        report.compare(Location::Powers(i, j), a, rhs.coeff_ref(i, j));
    }
}

/// Compares two bivariate series coefficientwise in total-degree order.
pub fn compare_bivariate<S: Scalar>(
    name: &str,
    lhs: &BiTruncSeries<S>,
    rhs: &BiTruncSeries<S>,
) -> Result<CheckReport<S>, Error> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch { left: lhs.order(), right: rhs.order() });
    }
    let mut report = CheckReport::new(name);
    compare_bi(&mut report, lhs, rhs);
    Ok(report)
}

/// The Hopf relation `b(z0) · b(z1) = b(z0 +_MU z1)` up to total degree `order`.
pub fn hopf_check<S: Scalar>(order: usize) -> Result<CheckReport<S>, Error> {
    let (lhs, rhs) = hopf_sides(order)?;
    compare_bivariate(&format!("hopf relation, total degree {order}"), &lhs, &rhs)
}

/// Hurewicz image of the group sum against `B(B^{-1}(z0) + B^{-1}(z1))` for
/// the orientation series `B(z) = z + h_1 z^2 + h_2 z^3 + ...`.
pub fn additive_image_check<S: Scalar>(order: usize) -> Result<CheckReport<S>, Error> {
    let image = HurewiczMap::<S>::new(order as u32);
    let lhs = image.apply_bi(&fgl_sum(order)?);
    let orientation = orientation_series::<S>(order);
    let inverse = orientation.inverse()?;
    let sum = bi_lift(&inverse, BiVar::Z0).add(&bi_lift(&inverse, BiVar::Z1))?;
    let rhs = compose_into_bi(&orientation, &sum)?;
    compare_bivariate(&format!("additive image, total degree {order}"), &lhs, &rhs)
}

/// `B(z) = z + h_1 z^2 + ... + h_{N-1} z^N`.
pub fn orientation_series<S: Scalar>(order: usize) -> TruncSeries<S> {
    let coeffs = (0..=order)
        .map(|k| match k {
            0 => MultiPoly::zero(),
            1 => MultiPoly::one(),
            _ => MultiPoly::h(k as u32 - 1),
        })
        .collect();
    TruncSeries::new(order, coeffs)
}
