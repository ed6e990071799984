use std::fmt;

use super::uni::{power_label, TruncSeries};
use crate::error::Error;
use crate::exactalg::{render_sum, Generator, MultiPoly, Scalar};

/// Which variable of a bivariate series a univariate one is lifted into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiVar {
    Z0,
    Z1,
}

/// A power series in `z0, z1` truncated at total degree `N`.
///
/// Stored as a triangle: `rows[i][j]` is the coefficient of `z0^i z1^j`,
/// with `i + j <= N`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiTruncSeries<S> {
    order: usize,
    rows: Vec<Vec<MultiPoly<S>>>,
}

impl<S: Scalar> BiTruncSeries<S> {
    pub fn zero(order: usize) -> Self {
        let rows = (0..=order).map(|i| vec![MultiPoly::zero(); order - i + 1]).collect();
        BiTruncSeries { order, rows }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.rows[0][0] = MultiPoly::one();
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `z0^i z1^j`; zero beyond the truncation.
    pub fn coeff(&self, i: usize, j: usize) -> MultiPoly<S> {
        if i + j > self.order {
            MultiPoly::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    pub fn coeff_ref(&self, i: usize, j: usize) -> &MultiPoly<S> {
        &self.rows[i][j]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: MultiPoly<S>) {
        assert!(i + j <= self.order, "({i},{j}) beyond total degree {}", self.order);
        self.rows[i][j] = c;
    }

    /// `(i, j, coefficient)` in order of total degree, then decreasing `i`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &MultiPoly<S>)> + '_ {
        (0..=self.order).flat_map(move |d| (0..=d).rev().map(move |i| (i, d - i, &self.rows[i][d - i])))
    }

    fn check_order(&self, other: &Self) -> Result<(), Error> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order, right: other.order })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip<F: Fn(&MultiPoly<S>, &MultiPoly<S>) -> MultiPoly<S>>(&self, other: &Self, f: F) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| f(a, b)).collect())
            .collect();
        BiTruncSeries { order: self.order, rows }
    }

    pub fn map<F: FnMut(&MultiPoly<S>) -> MultiPoly<S>>(&self, mut f: F) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect();
        BiTruncSeries { order: self.order, rows }
    }

    pub fn substitute<F>(&self, mut image: F) -> Self
    where
        F: FnMut(Generator) -> Option<MultiPoly<S>>,
    {
        self.map(|c| c.substitute(&mut image))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order;
        let mut out = Self::zero(n);
        for (i, j, a) in self.iter() {
            if a.is_zero() {
                continue;
            }
            for (k, l, b) in other.iter() {
                if i + j + k + l > n {
                    break;
                }
                if !b.is_zero() {
                    out.rows[i + k][j + l] += &(a * b);
                }
            }
        }
        out
    }

    pub fn has_zero_constant_term(&self) -> bool {
        self.rows[0][0].is_zero()
    }

    /// Swaps `z0` and `z1`.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (i, j, c) in self.iter() {
            out.rows[j][i] = c.clone();
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(i, j, c)| c == &self.rows[j][i])
    }

    /// `true` iff the `(i, j)` coefficient has degree `total + 2(i + j)`.
    pub fn is_homogeneous(&self, total: i64) -> bool {
        self.iter().all(|(i, j, c)| c.degree_check(total + 2 * (i + j) as i64))
    }

    /// First `(i, j)` in [`Self::iter`] order where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let n = self.order.max(other.order);
        (0..=n)
            .flat_map(|d| (0..=d).rev().map(move |i| (i, d - i)))
            .find(|&(i, j)| self.coeff(i, j) != other.coeff(i, j))
    }

    /// Restriction to `z1 = 0`.
    pub fn restrict_z1_zero(&self) -> TruncSeries<S> {
        TruncSeries::new(self.order, (0..=self.order).map(|i| self.rows[i][0].clone()).collect())
    }

    pub fn render(&self) -> String {
        let parts: Vec<(&MultiPoly<S>, String)> = self
            .iter()
            .map(|(i, j, c)| {
                let label = match (power_label("z0", i), power_label("z1", j)) {
                    (a, b) if a.is_empty() => b,
                    (a, b) if b.is_empty() => a,
                    (a, b) => format!("{a}·{b}"),
                };
                (c, label)
            })
            .collect();
        render_sum(&parts)
    }
}

impl<S: Scalar> fmt::Display for BiTruncSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Embeds a univariate series as a series in `z0` or `z1`.
pub fn bi_lift<S: Scalar>(f: &TruncSeries<S>, which: BiVar) -> BiTruncSeries<S> {
    let mut out = BiTruncSeries::zero(f.order());
    for (k, c) in f.coeffs().iter().enumerate() {
        match which {
            BiVar::Z0 => out.rows[k][0] = c.clone(),
            BiVar::Z1 => out.rows[0][k] = c.clone(),
        }
    }
    out
}

/// `F(g0(z), g1(z))`, truncated at the common order.
pub fn bi_substitute<S: Scalar>(
    big_f: &BiTruncSeries<S>,
    g0: &TruncSeries<S>,
    g1: &TruncSeries<S>,
) -> Result<TruncSeries<S>, Error> {
    let n = big_f.order();
    for g in [g0, g1] {
        if g.order() != n {
            return Err(Error::OrderMismatch { left: n, right: g.order() });
        }
        if !g.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
    }
    let powers = |g: &TruncSeries<S>| {
        let mut out = vec![TruncSeries::one(n)];
        for k in 1..=n {
            let next = out[k - 1].mul(g).expect("equal orders");
            out.push(next);
        }
        out
    };
    let p0 = powers(g0);
    let p1 = powers(g1);
    let mut acc = TruncSeries::zero(n);
    for (i, j, c) in big_f.iter() {
        if c.is_zero() {
            continue;
        }
        let term = p0[i].mul(&p1[j]).expect("equal orders").scale(c);
        acc = acc.add(&term).expect("equal orders");
    }
    Ok(acc)
}

/// `f(G(z0, z1))` for a bivariate `G` with zero constant term.
pub fn compose_into_bi<S: Scalar>(
    f: &TruncSeries<S>,
    g: &BiTruncSeries<S>,
) -> Result<BiTruncSeries<S>, Error> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch { left: f.order(), right: g.order() });
    }
    if !g.has_zero_constant_term() {
        return Err(Error::NonzeroConstantTerm);
    }
    let n = f.order();
    let mut acc = BiTruncSeries::zero(n);
    acc.rows[0][0] = f.coeff(n).clone();
    for c in f.coeffs().iter().rev().skip(1) {
        acc = acc.mul_unchecked(g);
        acc.rows[0][0] += c;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;
    type T = TruncSeries<BigRational>;
    type B = BiTruncSeries<BigRational>;

    fn z0_plus_z1(n: usize) -> B {
        bi_lift(&T::variable(n), BiVar::Z0).add(&bi_lift(&T::variable(n), BiVar::Z1)).unwrap()
    }

    #[test]
    fn lift_variable() {
        let z0 = bi_lift(&T::variable(4), BiVar::Z0);
        assert_eq!(z0.coeff(1, 0), P::one());
        assert_eq!(z0.iter().filter(|(_, _, c)| !c.is_zero()).count(), 1);
        assert_eq!(z0.to_string(), "z0");
    }

    #[test]
    fn substitution_examples() {
        let g = T::new(4, vec![P::zero(), P::one(), P::h(1), P::b()]);
        let out = bi_substitute(&z0_plus_z1(4), &g, &T::zero(4)).unwrap();
        assert_eq!(out, g);

        let mut prod = B::zero(4);
        prod.set_coeff(1, 1, P::one());
        let z = T::variable(4);
        assert_eq!(bi_substitute(&prod, &z, &z).unwrap(), T::monomial(4, 2, P::one()));
        assert_eq!(bi_substitute(&prod, &T::one(4), &z), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn compose_then_restrict() {
        // exp(z0 + z1) = exp(z0) exp(z1)
        let n = 5;
        let exp_minus_one = T::variable(n).exp().unwrap().sub(&T::one(n)).unwrap();
        let e = T::variable(n).exp().unwrap();
        let lhs = compose_into_bi(&e, &z0_plus_z1(n)).unwrap();
        let rhs = bi_lift(&e, BiVar::Z0).mul(&bi_lift(&e, BiVar::Z1)).unwrap();
        assert_eq!(lhs, rhs);
        assert!(lhs.is_symmetric());
        assert_eq!(lhs.restrict_z1_zero(), e);
        assert!(compose_into_bi(&exp_minus_one, &B::one(n)).is_err());
    }

    #[test]
    fn rendering() {
        let mut s = B::zero(2);
        s.set_coeff(1, 0, P::one());
        s.set_coeff(0, 1, P::one());
        s.set_coeff(1, 1, -P::cp(1));
        assert_eq!(s.to_string(), "z0 + z1 - CP1·z0·z1");
        assert_eq!(s.first_difference(&s.transpose()), None);
        assert_eq!(s.first_difference(&B::zero(2)), Some((1, 0)));
    }
}
