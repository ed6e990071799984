//! Complete (`h`), elementary (`e`) and power-sum (`p`) symmetric functions.
//!
//! The conversions come from `H(t) = exp(Σ p_k t^k / k)`, Newton's identity
//! `p_n = n h_n - Σ_{i<n} p_i h_{n-i}`, and `E(t) H(-t) = 1`, i.e.
//! `Σ_{i=0}^{n} (-1)^i e_i h_{n-i} = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::check::{CheckReport, Location};
use crate::error::Error;
use crate::exactalg::{Family, Generator, MultiPoly, Scalar};
use crate::series::{exp_partition_expansion, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    H,
    E,
    P,
}

impl Basis {
    pub fn family(self) -> Family {
        match self {
            Basis::H => Family::H,
            Basis::E => Family::E,
            Basis::P => Family::P,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family().prefix())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "p" => Ok(Basis::P),
            _ => Err(Error::InvalidArgument(format!("unknown basis `{s}`"))),
        }
    }
}

fn generator<S: Scalar>(basis: Basis, n: u32) -> MultiPoly<S> {
    MultiPoly::generator(Generator::new(basis.family(), n).expect("index >= 1"))
}

/// A symmetric function written in a single basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymExpr<S> {
    basis: Basis,
    value: MultiPoly<S>,
}

impl<S: Scalar> SymExpr<S> {
    /// Fails if `value` uses generators outside `basis`.
    pub fn new(basis: Basis, value: MultiPoly<S>) -> Result<Self, Error> {
        if value.families().iter().all(|f| *f == basis.family()) {
            Ok(SymExpr { basis, value })
        } else {
            Err(Error::InvalidArgument(format!("expression is not written in the {basis} basis")))
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn value(&self) -> &MultiPoly<S> {
        &self.value
    }

    /// Rewrites in another basis.
    pub fn convert(&self, to: Basis) -> Result<Self, Error> {
        if to == self.basis {
            return Ok(self.clone());
        }
        let from = self.basis;
        let value = self.value.substitute(|g| {
            (g.family() == from.family()).then(|| express(from, to, g.index()).expect("index >= 1"))
        });
        SymExpr::new(to, value)
    }
}

fn require_degree(n: u32) -> Result<(), Error> {
    if n == 0 {
        Err(Error::InvalidArgument("degree must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `h_n` written in power sums: `Σ_{|π|=n} Π_k (p_k/k)^{r_k} / r_k!`.
pub fn p_to_h<S: Scalar>(n: u32) -> Result<MultiPoly<S>, Error> {
    require_degree(n)?;
    Ok(h_in_p_table::<S>(n).pop().expect("nonempty"))
}

fn h_in_p_table<S: Scalar>(max: u32) -> Vec<MultiPoly<S>> {
    let c: Vec<MultiPoly<S>> = (1..=max).map(|k| generator::<S>(Basis::P, k).div_int(i64::from(k))).collect();
    exp_partition_expansion(&c)
}

/// `p_n` written in complete symmetric functions, by Newton's recurrence.
pub fn h_to_p<S: Scalar>(n: u32) -> Result<MultiPoly<S>, Error> {
    require_degree(n)?;
    Ok(p_in_h_table::<S>(n).pop().expect("nonempty"))
}

/// `table[n] = p_n` in the `h` basis, `table[0] = 0`.
fn p_in_h_table<S: Scalar>(max: u32) -> Vec<MultiPoly<S>> {
    let mut p: Vec<MultiPoly<S>> = vec![MultiPoly::zero()];
    for n in 1..=max {
        let mut acc = generator::<S>(Basis::H, n).scale_int(i64::from(n));
        for i in 1..n {
            acc -= &(&p[i as usize] * &generator::<S>(Basis::H, n - i));
        }
        p.push(acc);
    }
    p
}

/// `e_n` written in complete symmetric functions.
pub fn e_from_h<S: Scalar>(n: u32) -> Result<MultiPoly<S>, Error> {
    require_degree(n)?;
    Ok(dual_table::<S>(n, Basis::H).pop().expect("nonempty"))
}

/// `h_n` written in elementary symmetric functions.
pub fn h_from_e<S: Scalar>(n: u32) -> Result<MultiPoly<S>, Error> {
    require_degree(n)?;
    Ok(dual_table::<S>(n, Basis::E).pop().expect("nonempty"))
}

/// Solves `Σ_{i=0}^{n} (-1)^i x_i y_{n-i} = 0` for `x_n` in the `y` basis,
/// where `{x, y} = {e, h}`. The relation is symmetric in `e` and `h`.
fn dual_table<S: Scalar>(max: u32, source: Basis) -> Vec<MultiPoly<S>> {
    let mut x: Vec<MultiPoly<S>> = vec![MultiPoly::one()];
    for n in 1..=max {
        // (-1)^n x_n = -Σ_{i<n} (-1)^i x_i y_{n-i}
        let mut acc = MultiPoly::zero();
        for i in 0..n {
            let t = &x[i as usize] * &generator::<S>(source, n - i);
            if i % 2 == 0 { acc -= &t } else { acc += &t }
        }
        if n % 2 == 1 {
            acc = -acc;
        }
        x.push(acc);
    }
    x
}

/// The degree-`n` generator of `from`, written in the `to` basis.
pub fn express<S: Scalar>(from: Basis, to: Basis, n: u32) -> Result<MultiPoly<S>, Error> {
    require_degree(n)?;
    let in_h = match from {
        Basis::H => generator::<S>(Basis::H, n),
        Basis::P => h_to_p(n)?,
        Basis::E => e_from_h(n)?,
    };
    let h_image = |k: u32| -> MultiPoly<S> {
        match to {
            Basis::H => generator(Basis::H, k),
            Basis::P => p_to_h(k).expect("k >= 1"),
            Basis::E => h_from_e(k).expect("k >= 1"),
        }
    };
    Ok(in_h.substitute(|g| (g.family() == Family::H).then(|| h_image(g.index()))))
}

/// The three conversion tables checked by [`verify_symfunc_tables`]; index
/// `n` holds the degree-`n` entry.
#[derive(Clone, Debug)]
pub struct SymfuncTables<S> {
    /// `h_n` in the `p` basis.
    pub h_in_p: Vec<MultiPoly<S>>,
    /// `p_n` in the `h` basis.
    pub p_in_h: Vec<MultiPoly<S>>,
    /// `e_n` in the `h` basis.
    pub e_in_h: Vec<MultiPoly<S>>,
}

impl<S: Scalar> SymfuncTables<S> {
    pub fn compute(max: u32) -> Self {
        SymfuncTables { h_in_p: h_in_p_table(max), p_in_h: p_in_h_table(max), e_in_h: dual_table(max, Basis::H) }
    }
}

/// All symmetric-function identities to degree `max`.
pub fn verify_symfunc<S: Scalar>(max: u32) -> CheckReport<S> {
    verify_symfunc_tables(max, &SymfuncTables::compute(max))
}

pub fn verify_symfunc_tables<S: Scalar>(max: u32, tables: &SymfuncTables<S>) -> CheckReport<S> {
    let mut report = CheckReport::new(format!("symmetric functions, degree <= {max}"));
    let p_image = |g: Generator| (g.family() == Family::P).then(|| tables.p_in_h[g.index() as usize].clone());
    let h_image = |g: Generator| (g.family() == Family::H).then(|| tables.h_in_p[g.index() as usize].clone());

    for n in 1..=max {
        let ni = n as usize;
        let h = generator::<S>(Basis::H, n);
        let p = generator::<S>(Basis::P, n);
        report.compare(case("h -> p -> h", n), &tables.h_in_p[ni].substitute(p_image), &h);
        report.compare(case("p -> h -> p", n), &tables.p_in_h[ni].substitute(h_image), &p);

        let mut convolution = MultiPoly::zero();
        for i in 0..=ni {
            let t = &tables.e_in_h[i] * &generator_or_one::<S>(Basis::H, (ni - i) as u32);
            if i % 2 == 0 { convolution += &t } else { convolution -= &t }
        }
        report.compare(case("sum (-1)^i e_i h_(n-i)", n), &convolution, &MultiPoly::zero());
    }

    let c: Vec<MultiPoly<S>> = (1..=max).map(|k| generator::<S>(Basis::P, k).div_int(i64::from(k))).collect();
    let by_partitions = exp_partition_expansion(&c);
    let mut log_h = vec![MultiPoly::zero()];
    log_h.extend(c.iter().cloned());
    let by_series = TruncSeries::new(max as usize, log_h).exp().expect("zero constant term");
    for n in 1..=max as usize {
        report.compare(case("H = exp(sum p_k/k) (partitions)", n as u32), &tables.h_in_p[n], &by_partitions[n]);
        report.compare(case("H = exp(sum p_k/k) (series)", n as u32), &tables.h_in_p[n], by_series.coeff(n));
    }

    for m in 1..=4u32 {
        finite_model(&mut report, max, m, tables);
    }
    report
}

fn case(name: &str, n: u32) -> Location {
    Location::Case(format!("{name}, n={n}"))
}

fn generator_or_one<S: Scalar>(basis: Basis, n: u32) -> MultiPoly<S> {
    if n == 0 { MultiPoly::one() } else { generator(basis, n) }
}

fn binom<S: Scalar>(n: u32, k: u32) -> S {
    if k > n {
        return S::zero();
    }
    S::from_bigint(&binomial(BigInt::from(n), BigInt::from(k))).expect("binomial exceeds scalar range")
}

/// Specialization `x_1 = ... = x_m = 1`: `h_n ↦ C(m+n-1, n)`, `e_n ↦ C(m, n)`,
/// `p_n ↦ m`.
fn finite_model<S: Scalar>(report: &mut CheckReport<S>, max: u32, m: u32, tables: &SymfuncTables<S>) {
    let value = |g: Generator| -> S {
        let n = g.index();
        match g.family() {
            Family::H => binom(m + n - 1, n),
            Family::E => binom(m, n),
            Family::P => S::from_i64(i64::from(m)),
            _ => unreachable!("symmetric functions only"),
        }
    };
    for n in 1..=max {
        let ni = n as usize;
        let label = |what: &str| case(&format!("finite model m={m}: {what}"), n);
        let checks = [
            ("h_n from p", tables.h_in_p[ni].evaluate(value), value(Generator::h(n))),
            ("p_n from h", tables.p_in_h[ni].evaluate(value), value(Generator::p(n))),
            ("e_n from h", tables.e_in_h[ni].evaluate(value), value(Generator::e(n))),
        ];
        for (what, got, want) in checks {
            report.compare(label(what), &MultiPoly::constant(got), &MultiPoly::constant(want));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    #[test]
    fn h_in_power_sums() {
        assert_eq!(p_to_h::<BigRational>(1).unwrap(), P::p(1));
        assert_eq!(p_to_h::<BigRational>(2).unwrap(), &P::p(1).pow(2).div_int(2) + &P::p(2).div_int(2));
        let three = &(&P::p(1).pow(3).div_int(6) + &(&P::p(1) * &P::p(2)).div_int(2)) + &P::p(3).div_int(3);
        assert_eq!(p_to_h::<BigRational>(3).unwrap(), three);
        assert!(p_to_h::<BigRational>(0).is_err());
    }

    #[test]
    fn power_sums_in_h() {
        assert_eq!(h_to_p::<BigRational>(1).unwrap(), P::h(1));
        assert_eq!(h_to_p::<BigRational>(2).unwrap(), &P::h(2).scale_int(2) - &P::h(1).pow(2));
        let three = &(&P::h(3).scale_int(3) - &(&P::h(1) * &P::h(2)).scale_int(3)) + &P::h(1).pow(3);
        assert_eq!(h_to_p::<BigRational>(3).unwrap(), three);
    }

    #[test]
    fn elementary_in_h() {
        assert_eq!(e_from_h::<BigRational>(1).unwrap(), P::h(1));
        assert_eq!(e_from_h::<BigRational>(2).unwrap(), &P::h(1).pow(2) - &P::h(2));
        let three = &(&P::h(1).pow(3) - &(&P::h(1) * &P::h(2)).scale_int(2)) + &P::h(3);
        assert_eq!(e_from_h::<BigRational>(3).unwrap(), three);
        // the relation is symmetric under e <-> h
        assert_eq!(h_from_e::<BigRational>(2).unwrap(), &P::e(1).pow(2) - &P::e(2));
    }

    #[test]
    fn express_roundtrips() {
        for (from, to) in [(Basis::E, Basis::P), (Basis::P, Basis::E), (Basis::H, Basis::E)] {
            for n in 1..=5 {
                let forward = SymExpr::new(to, express::<BigRational>(from, to, n).unwrap()).unwrap();
                let back = forward.convert(from).unwrap();
                assert_eq!(back.value(), &generator::<BigRational>(from, n), "{from}->{to} n={n}");
            }
        }
        // e_2 = (p_1^2 - p_2)/2
        let e2 = express::<BigRational>(Basis::E, Basis::P, 2).unwrap();
        assert_eq!(e2, (&P::p(1).pow(2) - &P::p(2)).div_int(2));
        assert!(SymExpr::new(Basis::H, P::p(1)).is_err());
    }

    #[test]
    fn triangularity() {
        for n in 1..=7u32 {
            let p = h_to_p::<BigRational>(n).unwrap();
            let top = crate::exactalg::Monomial::generator(Generator::h(n));
            assert_eq!(p.coeff(&top), BigRational::from_i64(i64::from(n)));
            let h = p_to_h::<BigRational>(n).unwrap();
            let ones = crate::exactalg::Monomial::from_factors([(Generator::p(1), n)]);
            let fact: i64 = (1..=i64::from(n)).product();
            assert_eq!(h.coeff(&ones), BigRational::new(1.into(), fact.into()));
            let single = crate::exactalg::Monomial::generator(Generator::p(n));
            assert_eq!(h.coeff(&single), BigRational::new(1.into(), i64::from(n).into()));
        }
    }

    #[test]
    fn suite_passes() {
        assert!(verify_symfunc::<BigRational>(6).passed());
    }

    #[test]
    fn flipped_newton_sign_is_caught() {
        let max = 6;
        let mut tables = SymfuncTables::<BigRational>::compute(max);
        // p_n = n h_n + Σ p_i h_{n-i}
        let mut faulty: Vec<P> = vec![P::zero()];
        for n in 1..=max {
            let mut acc = P::h(n).scale_int(i64::from(n));
            for i in 1..n {
                acc += &(&faulty[i as usize] * &P::h(n - i));
            }
            faulty.push(acc);
        }
        tables.p_in_h = faulty;
        let report = verify_symfunc_tables(max, &tables);
        assert!(!report.passed());
    }

    #[test]
    fn one_variable_model() {
        let tables = SymfuncTables::<BigRational>::compute(5);
        let mut report = CheckReport::new("m=1");
        finite_model(&mut report, 5, 1, &tables);
        assert!(report.passed());
    }
}
