use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;

use super::generator::{Family, Generator};
use super::scalar::{divisible_integer, Scalar};
use crate::error::Error;

/// A product of generators with positive exponents, kept sorted by generator.
///
/// Monomials order by graded degree first; within a degree the exponent
/// vectors (in generator order) compare lexicographically, larger first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Collects factors, merging repeats and dropping zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (Generator, u32)>>(factors: I) -> Self {
        let mut merged: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in factors {
            if e > 0 {
                *merged.entry(g).or_insert(0) += e;
            }
        }
        Monomial(merged.into_iter().collect())
    }

    pub fn generator(g: Generator) -> Self {
        Monomial(vec![(g, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(g, e)| g.degree() * e).sum()
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.0.iter().find(|(h, _)| *h == g).map_or(0, |(_, e)| *e)
    }

    /// This monomial with every factor of `g` removed.
    pub fn without(&self, g: Generator) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(h, _)| *h != g).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        self.degree().cmp(&other.degree()).then_with(|| {
            // within a degree, a larger exponent on an earlier generator sorts first
            for (a, b) in self.0.iter().zip(&other.0) {
                match a.0.cmp(&b.0) {
                    Ordering::Equal => match b.1.cmp(&a.1) {
                        Ordering::Equal => continue,
                        unequal => return unequal,
                    },
                    unequal => return unequal,
                }
            }
            other.0.len().cmp(&self.0.len())
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over `S` in the graded generators `CP_i, h_i, p_i, e_i, b`.
///
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Default for MultiPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> MultiPoly<S> {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(S::from_i64(c))
    }

    pub fn term(c: S, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(S::one(), Monomial::generator(g))
    }

    /// The class `CP_i`; `CP_0` is the unit.
    pub fn cp(i: u32) -> Self {
        if i == 0 {
            Self::one()
        } else {
            Self::generator(Generator::cp(i))
        }
    }

    pub fn h(i: u32) -> Self {
        Self::generator(Generator::h(i))
    }

    pub fn p(i: u32) -> Self {
        Self::generator(Generator::p(i))
    }

    pub fn e(i: u32) -> Self {
        Self::generator(Generator::e(i))
    }

    pub fn b() -> Self {
        Self::generator(Generator::b())
    }

    /// Sums arbitrary (possibly repeated, possibly zero) terms into normal form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, S)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// Rebuilds the canonical form. Stored polynomials are already canonical,
    /// so this is the identity on them.
    pub fn normalized(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&Monomial::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&S::from_i64(c))
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(Scalar::is_integer)
    }

    /// `true` iff every coefficient is an integer divisible by `k`.
    pub fn is_divisible_over_z(&self, k: u64) -> bool {
        k >= 1 && self.terms.values().all(|c| divisible_integer(&c.to_bigrational(), k))
    }

    /// Divides by a positive integer. An integer-coefficient polynomial must
    /// be divisible by `k` over the integers, otherwise `NotDivisible`; a
    /// polynomial with a fractional coefficient is divided exactly over `S`.
    pub fn exact_div_int(&self, k: u64) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        if self.has_integer_coefficients() && !self.is_divisible_over_z(k) {
            return Err(Error::NotDivisible { k });
        }
        let divisor = S::from_bigint(&BigInt::from(k)).ok_or(Error::ScalarOverflow)?;
        Ok(MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() / divisor.clone())).collect(),
        })
    }

    /// Divides by a nonzero integer over `S` with no integrality requirement.
    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "division by zero");
        let d = S::from_i64(k);
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() / d.clone())).collect(),
        }
    }

    /// `true` iff every term has graded degree exactly `d`.
    pub fn degree_check(&self, d: i64) -> bool {
        self.terms.keys().all(|m| i64::from(m.degree()) == d)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn families(&self) -> Vec<Family> {
        let mut out: Vec<Family> =
            self.terms.keys().flat_map(|m| m.factors().iter().map(|(g, _)| g.family())).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Ring homomorphism fixing scalars: each generator is replaced by
    /// `image(g)`, or kept when `image` returns `None`.
    pub fn substitute<F>(&self, mut image: F) -> Self
    where
        F: FnMut(Generator) -> Option<MultiPoly<S>>,
    {
        let mut cache: BTreeMap<Generator, Option<MultiPoly<S>>> = BTreeMap::new();
        let mut powers: BTreeMap<(Generator, u32), MultiPoly<S>> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(c.clone());
            for &(g, e) in m.factors() {
                let img = cache.entry(g).or_insert_with(|| image(g));
                match img {
                    None => kept.push((g, e)),
                    Some(p) => {
                        let pe = powers.entry((g, e)).or_insert_with(|| p.pow(e));
                        acc = &acc * &*pe;
                    }
                }
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                continue;
            }
            let acc = acc.mul_monomial(&Monomial::from_factors(kept));
            out += &acc;
        }
        out
    }

    /// Sends every generator of `family` to zero.
    pub fn kill_family(&self, family: Family) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.factors().iter().all(|(g, _)| g.family() != family))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at scalar values for every generator.
    pub fn evaluate<F: FnMut(Generator) -> S>(&self, mut value: F) -> S {
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(g, e) in m.factors() {
                let v = value(g);
                for _ in 0..e {
                    t *= v.clone();
                }
            }
            total += t;
        }
        total
    }

    /// Applies `f` to every coefficient, dropping ones that become zero.
    pub fn map_coeffs<T: Scalar, F: FnMut(&S) -> T>(&self, mut f: F) -> MultiPoly<T> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Converts to another scalar type, failing if a coefficient does not fit.
    pub fn try_convert<T: Scalar>(&self) -> Result<MultiPoly<T>, Error> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let v = T::from_bigrational(&c.to_bigrational()).ok_or(Error::ScalarOverflow)?;
            out.add_term(m.clone(), v);
        }
        Ok(out)
    }
}

impl<S: Scalar> AddAssign<&MultiPoly<S>> for MultiPoly<S> {
    fn add_assign(&mut self, rhs: &MultiPoly<S>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<S: Scalar> SubAssign<&MultiPoly<S>> for MultiPoly<S> {
    fn sub_assign(&mut self, rhs: &MultiPoly<S>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<S: Scalar> Add for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn add(self, rhs: &MultiPoly<S>) -> MultiPoly<S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<S: Scalar> Sub for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn sub(self, rhs: &MultiPoly<S>) -> MultiPoly<S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<S: Scalar> Mul for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn mul(self, rhs: &MultiPoly<S>) -> MultiPoly<S> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<S: Scalar> $tr for MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $f(self, rhs: MultiPoly<S>) -> MultiPoly<S> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl<S: Scalar> Neg for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        -&self
    }
}

/// Kind of binary ring operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith<S: Scalar>(a: &MultiPoly<S>, b: &MultiPoly<S>, kind: PolyOp) -> MultiPoly<S> {
    match kind {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

// Rendering helpers shared by the series and divided-power displays.

fn scalar_text<S: Scalar>(c: &S, standalone: bool) -> String {
    let q = c.to_bigrational();
    let text = super::scalar::format_rational(&q);
    if standalone || q.is_integer() {
        text
    } else {
        format!("({text})")
    }
}

/// One signed summand: `(negative, body)`.
fn term_text<S: Scalar>(c: &S, m: &Monomial, suffix: &str) -> (bool, String) {
    let negative = c.is_negative();
    let abs = c.abs();
    let mut factors: Vec<String> = Vec::new();
    let unit = abs.is_one();
    if !m.is_one() {
        factors.push(m.to_string());
    }
    if !suffix.is_empty() {
        factors.push(suffix.to_string());
    }
    let body = if factors.is_empty() {
        scalar_text(&abs, true)
    } else if unit {
        factors.join("·")
    } else {
        format!("{}·{}", scalar_text(&abs, false), factors.join("·"))
    };
    (negative, body)
}

/// Renders `Σ poly_i · suffix_i` with merged signs. Multi-term coefficients
/// multiplying a nonempty suffix are parenthesized.
pub(crate) fn render_sum<S: Scalar>(parts: &[(&MultiPoly<S>, String)]) -> String {
    let mut pieces: Vec<(bool, String)> = Vec::new();
    for (poly, suffix) in parts {
        if poly.is_zero() {
            continue;
        }
        if suffix.is_empty() || poly.len() == 1 {
            for (m, c) in poly.terms() {
                pieces.push(term_text(c, m, suffix));
            }
        } else {
            pieces.push((false, format!("({})·{}", render_sum(&[(*poly, String::new())]), suffix)));
        }
    }
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in pieces.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

impl<S: Scalar> fmt::Display for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(&[(self, String::new())]))
    }
}
