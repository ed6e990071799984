use std::fmt;

use crate::error::Error;
use crate::exactalg::{render_sum, Generator, MultiPoly, Scalar};

/// How [`TruncSeries::inverse_with`] solves for the compositional inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InversionStrategy {
    /// Solve `f(g(z)) = z` one degree at a time from a table of powers of `g`.
    Degreewise,
    /// Newton iteration `g <- g - (f(g) - z) / f'(g)`, doubling precision.
    Newton,
}

/// A power series `c_0 + c_1 z + ... + c_N z^N` with polynomial coefficients,
/// truncated at order `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<S> {
    coeffs: Vec<MultiPoly<S>>,
}

impl<S: Scalar> TruncSeries<S> {
    /// Builds a series of order `order`; missing coefficients are zero and
    /// coefficients past the order are discarded.
    pub fn new(order: usize, mut coeffs: Vec<MultiPoly<S>>) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, MultiPoly::one())
    }

    pub fn constant(order: usize, c: MultiPoly<S>) -> Self {
        Self::new(order, vec![c])
    }

    /// The formal variable `z`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(order, 1, MultiPoly::one())
    }

    /// `c · z^k`.
    pub fn monomial(order: usize, k: usize, c: MultiPoly<S>) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly<S> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly<S>] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: MultiPoly<S>) {
        self.coeffs[k] = c;
    }

    pub fn into_coeffs(self) -> Vec<MultiPoly<S>> {
        self.coeffs
    }

    /// Re-truncates explicitly at a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    fn check_order(&self, other: &Self) -> Result<(), Error> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
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
        TruncSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn scale(&self, c: &MultiPoly<S>) -> Self {
        self.map(|a| a * c)
    }

    pub fn map<F: FnMut(&MultiPoly<S>) -> MultiPoly<S>>(&self, f: F) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Applies a generator substitution to every coefficient.
    pub fn substitute<F>(&self, mut image: F) -> Self
    where
        F: FnMut(Generator) -> Option<MultiPoly<S>>,
    {
        self.map(|c| c.substitute(&mut image))
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![MultiPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// `f(g(z))` by Horner's rule. `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self, Error> {
        self.check_order(g)?;
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = Self::constant(self.order(), self.coeffs[self.order()].clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul_unchecked(g);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    fn check_normalized(&self) -> Result<(), Error> {
        let linear_is_one = self.order() < 1 || self.coeffs[1].is_one();
        if self.coeffs[0].is_zero() && linear_is_one {
            Ok(())
        } else {
            Err(Error::NotNormalized)
        }
    }

    /// Compositional inverse of a curve `z + O(z^2)`.
    pub fn inverse(&self) -> Result<Self, Error> {
        self.inverse_with(InversionStrategy::Degreewise)
    }

    pub fn inverse_with(&self, strategy: InversionStrategy) -> Result<Self, Error> {
        self.check_normalized()?;
        Ok(match strategy {
            InversionStrategy::Degreewise => self.inverse_degreewise(),
            InversionStrategy::Newton => self.inverse_newton(),
        })
    }

    fn inverse_degreewise(&self) -> Self {
        let n = self.order();
        let zero = MultiPoly::zero();
        let mut g = vec![zero.clone(); n + 1];
        if n == 0 {
            return TruncSeries { coeffs: g };
        }
        g[1] = MultiPoly::one();
        // powers[k][m] = [z^m] g^k
        let mut powers = vec![vec![zero; n + 1]; n + 1];
        powers[1][1] = MultiPoly::one();
        for m in 2..=n {
            let mut rest = MultiPoly::zero();
            for k in 2..=m {
                let mut acc = MultiPoly::zero();
                for j in 1..=m - k + 1 {
                    let lower = &powers[k - 1][m - j];
                    if !g[j].is_zero() && !lower.is_zero() {
                        acc += &(&g[j] * lower);
                    }
                }
                if !self.coeffs[k].is_zero() && !acc.is_zero() {
                    rest += &(&self.coeffs[k] * &acc);
                }
                powers[k][m] = acc;
            }
            g[m] = -rest;
            powers[1][m] = g[m].clone();
        }
        TruncSeries { coeffs: g }
    }

    fn inverse_newton(&self) -> Self {
        let n = self.order();
        let mut g = Self::variable(n.min(1));
        let mut precision = 1;
        while precision < n {
            // g is exact through z^precision; one step doubles that
            let work = (2 * precision + 1).min(n);
            let f = self.truncate(work);
            let g_work = Self::new(work, g.coeffs);
            let residual = f.compose_unchecked(&g_work).sub_unchecked(&Self::variable(work));
            let slope = f.derivative().compose_unchecked(&g_work);
            let step = residual.mul_unchecked(&slope.reciprocal_unchecked());
            g = g_work.sub_unchecked(&step);
            precision = work;
        }
        Self::new(n, g.coeffs)
    }

    fn compose_unchecked(&self, g: &Self) -> Self {
        self.compose(g).expect("orders and constant term checked by caller")
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    /// Formal derivative, keeping the order (the top coefficient becomes zero).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = vec![MultiPoly::zero(); n + 1];
        for k in 1..=n {
            out[k - 1] = self.coeffs[k].scale_int(k as i64);
        }
        TruncSeries { coeffs: out }
    }

    /// `1/f` for a series with constant term 1.
    pub fn reciprocal(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        Ok(self.reciprocal_unchecked())
    }

    fn reciprocal_unchecked(&self) -> Self {
        let n = self.order();
        let mut r: Vec<MultiPoly<S>> = vec![MultiPoly::zero(); n + 1];
        r[0] = MultiPoly::one();
        for m in 1..=n {
            let mut acc = MultiPoly::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !r[m - k].is_zero() {
                    acc += &(&self.coeffs[k] * &r[m - k]);
                }
            }
            r[m] = -acc;
        }
        TruncSeries { coeffs: r }
    }

    /// `exp(f)` for `f` with zero constant term, from `n g_n = Σ k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut g: Vec<MultiPoly<S>> = vec![MultiPoly::zero(); n + 1];
        g[0] = MultiPoly::one();
        for m in 1..=n {
            let mut acc = MultiPoly::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !g[m - k].is_zero() {
                    acc += &(&self.coeffs[k] * &g[m - k]).scale_int(k as i64);
                }
            }
            g[m] = acc.div_int(m as i64);
        }
        Ok(TruncSeries { coeffs: g })
    }

    /// `log(f)` for `f` with constant term 1.
    pub fn log(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut g: Vec<MultiPoly<S>> = vec![MultiPoly::zero(); n + 1];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale_int(m as i64);
            for k in 1..m {
                if !g[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    acc -= &(&g[k] * &self.coeffs[m - k]).scale_int(k as i64);
                }
            }
            g[m] = acc.div_int(m as i64);
        }
        Ok(TruncSeries { coeffs: g })
    }

    /// `f^alpha` for `f` with constant term 1 and any scalar exponent, via
    /// `n a_n = Σ ((alpha + 1) k - n) f_k a_{n-k}`.
    pub fn pow_scalar(&self, alpha: &S) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut a: Vec<MultiPoly<S>> = vec![MultiPoly::zero(); n + 1];
        a[0] = MultiPoly::one();
        let alpha1 = alpha.clone() + S::one();
        for m in 1..=n {
            let mut acc = MultiPoly::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() || a[m - k].is_zero() {
                    continue;
                }
                let w = alpha1.clone() * S::from_i64(k as i64) - S::from_i64(m as i64);
                acc += &(&self.coeffs[k] * &a[m - k]).scale(&w);
            }
            a[m] = acc.div_int(m as i64);
        }
        Ok(TruncSeries { coeffs: a })
    }

    /// `true` iff the coefficient of `z^k` is homogeneous of degree
    /// `total + 2k`, i.e. the series has degree `total` with `z` in degree -2.
    pub fn is_homogeneous(&self, total: i64) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| c.degree_check(total + 2 * k as i64))
    }

    /// First power at which two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().max(other.order());
        let zero = MultiPoly::zero();
        (0..=n).find(|&k| self.coeffs.get(k).unwrap_or(&zero) != other.coeffs.get(k).unwrap_or(&zero))
    }

    /// Renders with the given variable name.
    pub fn render(&self, variable: &str) -> String {
        let parts: Vec<(&MultiPoly<S>, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (c, power_label(variable, k)))
            .collect();
        render_sum(&parts)
    }
}

pub(crate) fn power_label(variable: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => variable.to_string(),
        _ => format!("{variable}^{k}"),
    }
}

impl<S: Scalar> fmt::Display for TruncSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}
