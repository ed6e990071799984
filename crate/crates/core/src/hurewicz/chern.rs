//! Characteristic numbers of `CP_n` computed directly from the normal bundle.
//!
//! In `H^*(CP_n) = Z[x]/(x^{n+1})` the stable normal bundle has total Chern
//! class `(1+x)^{-(n+1)}`. Power sums of its Chern roots follow from Newton's
//! identities, monomial symmetric functions from Möbius inversion over set
//! partitions, and each `m_λ` is paired against the fundamental class by
//! reading off the coefficient of `x^n`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactalg::{Monomial, MultiPoly, Scalar};
use crate::exactalg::Generator;
use crate::partitions::{enumerate_partitions, factorial, Partition};

/// `c_i(ν)` as the integer coefficient of `x^i`, for `0 <= i <= n`.
fn normal_chern_classes(n: u32) -> Vec<BigInt> {
    (0..=n)
        .map(|i| {
            let c = binomial(BigInt::from(n + i), BigInt::from(i));
            if i % 2 == 0 { c } else { -c }
        })
        .collect()
}

/// Power sums `p_k` of the normal Chern roots (coefficient of `x^k`), from
/// `p_k = Σ_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k`.
fn normal_power_sums(n: u32) -> Vec<BigInt> {
    let c = normal_chern_classes(n);
    let mut p = vec![BigInt::zero(); n as usize + 1];
    for k in 1..=n as usize {
        let mut acc = BigInt::zero();
        for i in 1..k {
            let t = &c[i] * &p[k - i];
            if i % 2 == 1 { acc += t } else { acc -= t }
        }
        let last = &c[k] * BigInt::from(k);
        if k % 2 == 1 { acc += last } else { acc -= last }
        p[k] = acc;
    }
    p
}

/// Calls `visit` with the block sums of `parts` for every set partition of
/// the index set, paired with the Möbius weight `Π (-1)^{|B|-1} (|B|-1)!`.
fn for_each_set_partition(parts: &[u32], visit: &mut dyn FnMut(&[u32], &BigInt)) {
    // blocks[b] = (sum of parts, size)
    fn go(parts: &[u32], i: usize, blocks: &mut Vec<(u32, u32)>, visit: &mut dyn FnMut(&[u32], &BigInt)) {
        if i == parts.len() {
            let mut weight = BigInt::one();
            for &(_, size) in blocks.iter() {
                weight *= BigInt::from(factorial(size - 1));
                if size % 2 == 0 {
                    weight = -weight;
                }
            }
            let sums: Vec<u32> = blocks.iter().map(|b| b.0).collect();
            visit(&sums, &weight);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].0 += parts[i];
            blocks[b].1 += 1;
            go(parts, i + 1, blocks, visit);
            blocks[b].0 -= parts[i];
            blocks[b].1 -= 1;
        }
        blocks.push((parts[i], 1));
        go(parts, i + 1, blocks, visit);
        blocks.pop();
    }
    go(parts, 0, &mut Vec::new(), visit);
}

/// `⟨m_λ(ν), [CP_n]⟩` for `|λ| = n`.
pub fn monomial_pairing(n: u32, lambda: &Partition) -> BigRational {
    assert_eq!(lambda.weight(), n);
    let p = normal_power_sums(n);
    let mut augmented = BigInt::zero();
    for_each_set_partition(&lambda.parts(), &mut |sums, weight| {
        let mut term = weight.clone();
        for &s in sums {
            term *= &p[s as usize];
        }
        augmented += term;
    });
    let symmetry: BigInt = lambda.reps().iter().map(|&r| BigInt::from(factorial(r))).product();
    BigRational::new(augmented, symmetry)
}

/// `𝔥(CP_n) = Σ_{|λ|=n} ⟨m_λ(ν), [CP_n]⟩ · h_λ`, computed without series.
pub fn chern_oracle_cp<S: Scalar>(n: u32) -> MultiPoly<S> {
    if n == 0 {
        return MultiPoly::one();
    }
    let mut out = MultiPoly::zero();
    for lambda in enumerate_partitions(n) {
        let pairing = monomial_pairing(n, &lambda);
        let c = S::from_bigrational(&pairing).expect("pairing exceeds scalar range");
        let h_lambda = Monomial::from_factors(lambda.multiplicities().map(|(k, r)| (Generator::h(k), r)));
        out += &MultiPoly::term(c, h_lambda);
    }
    out
}
