//! Integer partitions in repetition-vector form `1^{r_1} 2^{r_2} ...`.

use num_bigint::BigUint;
use num_traits::One;

/// A partition of `n`, stored by its repetition vector: `reps[k-1]` is the
/// number of parts equal to `k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: u32,
    reps: Vec<u32>,
    length: u32,
}

impl Partition {
    /// Builds a partition from a repetition vector; the weight is derived.
    pub fn from_reps(mut reps: Vec<u32>) -> Self {
        while reps.last() == Some(&0) {
            reps.pop();
        }
        let n = reps.iter().enumerate().map(|(i, r)| (i as u32 + 1) * r).sum();
        let length = reps.iter().sum();
        Partition { n, reps, length }
    }

    /// Builds a partition from its parts in any order. Zero parts are ignored.
    pub fn from_parts(parts: &[u32]) -> Self {
        let max = parts.iter().copied().max().unwrap_or(0) as usize;
        let mut reps = vec![0; max];
        for &p in parts.iter().filter(|&&p| p > 0) {
            reps[p as usize - 1] += 1;
        }
        Self::from_reps(reps)
    }

    /// The weight `|π| = Σ k r_k`.
    pub fn weight(&self) -> u32 {
        self.n
    }

    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    /// `r_k`, the multiplicity of the part `k` (zero when absent).
    pub fn rep(&self, k: u32) -> u32 {
        if k == 0 {
            return 0;
        }
        self.reps.get(k as usize - 1).copied().unwrap_or(0)
    }

    /// `r(π) = Σ r_k`, the number of parts.
    pub fn length(&self) -> u32 {
        self.length
    }

    /// `(k, r_k)` for every part size that occurs.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.reps.iter().enumerate().filter(|(_, r)| **r > 0).map(|(i, r)| (i as u32 + 1, *r))
    }

    /// Parts in weakly decreasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.length as usize);
        for (k, r) in self.multiplicities().collect::<Vec<_>>().into_iter().rev() {
            out.extend(std::iter::repeat_n(k, r as usize));
        }
        out
    }

    /// The multinomial `r(π)! / Π r_k!`.
    pub fn multinomial(&self) -> BigUint {
        let mut num = factorial(self.length);
        for &r in &self.reps {
            num /= factorial(r);
        }
        num
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Every partition of `n` exactly once, in decreasing lexicographic order of
/// the repetition vector: `1^n` first and `n^1` last.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut reps = Vec::new();
    fill(1, n, &mut reps, &mut out);
    out
}

fn fill(k: u32, remaining: u32, reps: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_reps(reps.clone()));
        return;
    }
    if k > remaining {
        return;
    }
    for r in (0..=remaining / k).rev() {
        reps.push(r);
        fill(k + 1, remaining - k * r, reps, out);
        reps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_partition() {
        let ps = enumerate_partitions(0);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].weight(), 0);
        assert_eq!(ps[0].length(), 0);
        assert_eq!(ps[0].multinomial(), BigUint::one());
    }

    #[test]
    fn partitions_of_four_in_order() {
        let parts: Vec<Vec<u32>> = enumerate_partitions(4).iter().map(Partition::parts).collect();
        assert_eq!(parts, vec![vec![1, 1, 1, 1], vec![2, 1, 1], vec![3, 1], vec![2, 2], vec![4]]);
    }

    #[test]
    fn multinomials() {
        let ones = Partition::from_reps(vec![3]);
        assert_eq!((ones.length(), ones.multinomial()), (3, BigUint::from(1u32)));
        let single = Partition::from_reps(vec![0, 0, 0, 1]);
        assert_eq!((single.length(), single.multinomial()), (1, BigUint::from(1u32)));
        assert_eq!(Partition::from_parts(&[1, 2]).multinomial(), BigUint::from(2u32));
        assert_eq!(Partition::from_parts(&[1, 1, 2, 3]).multinomial(), BigUint::from(12u32));
    }

    #[test]
    fn reps_are_trimmed() {
        let p = Partition::from_reps(vec![1, 0, 0]);
        assert_eq!(p.reps(), &[1]);
        assert_eq!(p.rep(7), 0);
        assert_eq!(p, Partition::from_parts(&[1, 0]));
    }
}
