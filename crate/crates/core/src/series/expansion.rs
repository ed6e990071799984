use std::collections::HashMap;

use num_bigint::BigInt;

use crate::exactalg::{MultiPoly, Scalar};
use crate::partitions::{enumerate_partitions, factorial};

/// Coefficients of `exp(Σ_{k≥1} c_k z^k)` up to `z^N`, written as partition
/// sums: the coefficient of `z^n` is `Σ_{|π|=n} Π_k c_k^{r_k} / r_k!`.
///
/// `c[0]` holds `c_1`, so `N = c.len()`. The output has `N + 1` entries and
/// starts with 1.
pub fn exp_partition_expansion<S: Scalar>(c: &[MultiPoly<S>]) -> Vec<MultiPoly<S>> {
    let max = c.len();
    let mut powers: HashMap<(u32, u32), MultiPoly<S>> = HashMap::new();
    let mut out = Vec::with_capacity(max + 1);
    out.push(MultiPoly::one());
    for n in 1..=max as u32 {
        let mut total = MultiPoly::zero();
        'partition: for pi in enumerate_partitions(n) {
            let mut term = MultiPoly::one();
            let mut denominator = BigInt::from(1);
            for (k, r) in pi.multiplicities() {
                let ck = &c[k as usize - 1];
                if ck.is_zero() {
                    continue 'partition;
                }
                let pow = powers.entry((k, r)).or_insert_with(|| ck.pow(r));
                term = &term * &*pow;
                denominator *= BigInt::from(factorial(r));
            }
            let d = S::from_bigint(&denominator).expect("factorial exceeds scalar range");
            total += &term.scale(&(S::one() / d));
        }
        out.push(total);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    #[test]
    fn vanishing_input() {
        let out = exp_partition_expansion(&vec![P::zero(); 5]);
        assert_eq!(out[0], P::one());
        assert!(out[1..].iter().all(P::is_zero));
    }

    #[test]
    fn single_variable_exponential() {
        // exp(x z) has coefficients x^n / n!
        let out = exp_partition_expansion(&[P::b(), P::zero(), P::zero(), P::zero()]);
        assert_eq!(out[3], P::b().pow(3).div_int(6));
        assert_eq!(out[4], P::b().pow(4).div_int(24));
    }
}
