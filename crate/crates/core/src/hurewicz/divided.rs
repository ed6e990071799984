use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::Error;
use crate::exactalg::{render_sum, Family, Generator, Monomial, MultiPoly, Scalar};
use crate::partitions::factorial;

/// An element `Σ_r a_r · b_(r)` of `S_* ⊗ Z[b_(*)]`, where `b_(r) = b^r / r!`
/// is the `r`-th divided power and each `a_r` is a polynomial free of `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct DividedExpr<S> {
    entries: BTreeMap<u32, MultiPoly<S>>,
}

impl<S: Scalar> Default for DividedExpr<S> {
    fn default() -> Self {
        Self::zero()
    }
}

fn scalar_factorial<S: Scalar>(r: u32) -> S {
    S::from_bigint(&BigInt::from(factorial(r))).expect("factorial exceeds scalar range")
}

impl<S: Scalar> DividedExpr<S> {
    pub fn zero() -> Self {
        DividedExpr { entries: BTreeMap::new() }
    }

    /// `b_(r)`.
    pub fn divided(r: u32) -> Self {
        Self::term(r, MultiPoly::one())
    }

    /// `coeff · b_(r)`.
    pub fn term(r: u32, coeff: MultiPoly<S>) -> Self {
        let mut out = Self::zero();
        out.add_entry(r, &coeff);
        out
    }

    pub fn from_entries<I: IntoIterator<Item = (u32, MultiPoly<S>)>>(entries: I) -> Self {
        let mut out = Self::zero();
        for (r, c) in entries {
            out.add_entry(r, &c);
        }
        out
    }

    fn add_entry(&mut self, r: u32, c: &MultiPoly<S>) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(r).or_default();
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&r);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries `(r, a_r)` in increasing `r`.
    pub fn entries(&self) -> impl DoubleEndedIterator<Item = (u32, &MultiPoly<S>)> + '_ {
        self.entries.iter().map(|(r, c)| (*r, c))
    }

    pub fn coeff(&self, r: u32) -> MultiPoly<S> {
        self.entries.get(&r).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &other.entries {
            out.add_entry(*r, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &other.entries {
            out.add_entry(*r, &-c);
        }
        out
    }

    /// Product with `b_(i) · b_(j) = C(i+j, i) · b_(i+j)`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                let binom = factorial(i + j) / (factorial(*i) * factorial(*j));
                let w = S::from_bigint(&BigInt::from(binom)).expect("binomial exceeds scalar range");
                out.add_entry(i + j, &(a * b).scale(&w));
            }
        }
        out
    }

    pub fn map<F: FnMut(u32, &MultiPoly<S>) -> MultiPoly<S>>(&self, mut f: F) -> Self {
        Self::from_entries(self.entries.iter().map(|(r, c)| (*r, f(*r, c))))
    }

    pub fn substitute<F>(&self, mut image: F) -> Self
    where
        F: FnMut(Generator) -> Option<MultiPoly<S>>,
    {
        self.map(|_, c| c.substitute(&mut image))
    }

    /// Augmentation `h_i ↦ 0` on every coefficient.
    pub fn cycle_map(&self) -> Self {
        self.kill_family(Family::H)
    }

    pub fn kill_family(&self, family: Family) -> Self {
        self.map(|_, c| c.kill_family(family))
    }

    /// Multiplies the `b_(r)` entry by `t^r`.
    pub fn weight_by_power(&self, t: &S) -> Self {
        self.map(|r, c| {
            let mut w = S::one();
            for _ in 0..r {
                w *= t.clone();
            }
            c.scale(&w)
        })
    }

    /// Rewrites an ordinary polynomial in `b` via `b^r = r! · b_(r)`.
    pub fn from_ordinary_b(poly: &MultiPoly<S>) -> Self {
        let b = Generator::b();
        let mut out = Self::zero();
        for (m, c) in poly.terms() {
            let r = m.exponent(b);
            let coeff = MultiPoly::term(c.clone() * scalar_factorial::<S>(r), m.without(b));
            out.add_entry(r, &coeff);
        }
        out
    }

    /// Inverse of [`Self::from_ordinary_b`]: `b_(r) = b^r / r!`.
    pub fn to_ordinary_b(&self) -> MultiPoly<S> {
        let mut out = MultiPoly::zero();
        for (r, c) in &self.entries {
            let scale = S::one() / scalar_factorial::<S>(*r);
            out += &c.mul_monomial(&Monomial::from_factors([(Generator::b(), *r)])).scale(&scale);
        }
        out
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.entries.values().all(MultiPoly::has_integer_coefficients)
    }

    /// First entry with a non-integral coefficient.
    pub fn first_non_integral(&self) -> Option<(u32, &MultiPoly<S>)> {
        self.entries().find(|(_, c)| !c.has_integer_coefficients())
    }

    /// Homogeneity with `deg b_(r) = 2r`.
    pub fn is_homogeneous(&self, degree: i64) -> bool {
        self.entries.iter().all(|(r, c)| c.degree_check(degree - 2 * i64::from(*r)))
    }

    /// Renders in decreasing divided index, labeling `b_(r)` with `label(r)`.
    pub fn render_with<F: Fn(u32) -> String>(&self, label: F) -> String {
        let parts: Vec<(&MultiPoly<S>, String)> =
            self.entries.iter().rev().map(|(r, c)| (c, if *r == 0 { String::new() } else { label(*r) })).collect();
        render_sum(&parts)
    }

    pub fn try_integrality(&self, n: u32) -> Result<(), Error> {
        match self.first_non_integral() {
            None => Ok(()),
            Some((r, c)) => Err(Error::IntegralityViolation { n, detail: format!("({c})·b({r})") }),
        }
    }
}

impl<S: Scalar> fmt::Display for DividedExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|r| format!("b({r})")))
    }
}
