use num_bigint::BigInt;

use crate::error::Error;
use crate::exactalg::{MultiPoly, Scalar};
use crate::partitions::factorial;
use crate::series::{exp_partition_expansion, TruncSeries};

fn factorial_scalar<S: Scalar>(n: usize) -> S {
    S::from_bigint(&BigInt::from(factorial(n as u32))).expect("factorial exceeds scalar range")
}

/// Moments `m_0 ... m_N` from cumulants `κ_1 ... κ_N`: with
/// `K(z) = Σ κ_k z^k / k!`, `m_n = n! [z^n] exp(K(z))` (complete Bell
/// polynomials). `m_0 = 1`.
pub fn cumulants_to_moments<S: Scalar>(kappa: &[S]) -> Vec<S> {
    let c: Vec<MultiPoly<S>> = kappa
        .iter()
        .enumerate()
        .map(|(i, k)| MultiPoly::constant(k.clone() / factorial_scalar::<S>(i + 1)))
        .collect();
    exp_partition_expansion(&c)
        .iter()
        .enumerate()
        .map(|(n, p)| p.constant_term() * factorial_scalar::<S>(n))
        .collect()
}

/// The same moments through the series exponential.
pub fn moments_via_series<S: Scalar>(kappa: &[S]) -> Result<Vec<S>, Error> {
    let order = kappa.len();
    let mut coeffs = vec![MultiPoly::zero()];
    coeffs.extend(kappa.iter().enumerate().map(|(i, k)| MultiPoly::constant(k.clone() / factorial_scalar::<S>(i + 1))));
    let series = TruncSeries::new(order, coeffs).exp()?;
    Ok(series.coeffs().iter().enumerate().map(|(n, p)| p.constant_term() * factorial_scalar::<S>(n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    #[test]
    fn zero_cumulants() {
        let m = cumulants_to_moments(&[q(0), q(0), q(0)]);
        assert_eq!(m, vec![q(1), q(0), q(0), q(0)]);
    }

    #[test]
    fn point_mass() {
        let c = BigRational::new(3.into(), 2.into());
        let m = cumulants_to_moments(&[c.clone(), q(0), q(0), q(0)]);
        for (n, v) in m.iter().enumerate() {
            let mut expect = q(1);
            for _ in 0..n {
                expect *= c.clone();
            }
            assert_eq!(*v, expect);
        }
    }

    #[test]
    fn gaussian() {
        let sigma = q(5);
        let m = cumulants_to_moments(&[q(0), sigma.clone(), q(0), q(0)]);
        assert_eq!(m[2], sigma);
        assert_eq!(m[3], q(0));
        assert_eq!(m[4], q(3) * sigma.clone() * sigma);
    }

    #[test]
    fn empty_input() {
        assert_eq!(cumulants_to_moments::<BigRational>(&[]), vec![q(1)]);
        assert_eq!(moments_via_series::<BigRational>(&[]).unwrap(), vec![q(1)]);
    }
}
