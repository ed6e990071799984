//! Pass/fail reports for the identity checks.

use std::fmt;

use crate::exactalg::{MultiPoly, Scalar};

/// Where a check first failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    /// Coefficient of `z^k`.
    Power(usize),
    /// Coefficient of `z0^i z1^j`.
    Powers(usize, usize),
    /// A named sub-check, such as `"roundtrip h->p->h, n=3"`.
    Case(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Power(k) => write!(f, "z^{k}"),
            Location::Powers(i, j) => write!(f, "z0^{i}·z1^{j}"),
            Location::Case(name) => f.write_str(name),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy<S> {
    pub location: Location,
    pub lhs: MultiPoly<S>,
    pub rhs: MultiPoly<S>,
}

/// Outcome of one verification: how many cases were compared and the first
/// failing one, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport<S> {
    pub name: String,
    pub cases: usize,
    pub failure: Option<Discrepancy<S>>,
}

impl<S: Scalar> CheckReport<S> {
    pub(crate) fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), cases: 0, failure: None }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Records one comparison; only the first failure is kept.
    pub(crate) fn compare(&mut self, location: Location, lhs: &MultiPoly<S>, rhs: &MultiPoly<S>) {
        self.cases += 1;
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(Discrepancy { location, lhs: lhs.clone(), rhs: rhs.clone() });
        }
    }

    /// Records one case that failed or passed by a predicate rather than an
    /// equality; `lhs` and `rhs` document the failing values.
    pub(crate) fn record(&mut self, ok: bool, location: Location, lhs: MultiPoly<S>, rhs: MultiPoly<S>) {
        self.cases += 1;
        if self.failure.is_none() && !ok {
            self.failure = Some(Discrepancy { location, lhs, rhs });
        }
    }
}

impl<S: Scalar> fmt::Display for CheckReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "ok {} ({} cases)", self.name, self.cases),
            Some(d) => write!(
                f,
                "FAIL {} at {}: lhs = {}, rhs = {}",
                self.name, d.location, d.lhs, d.rhs
            ),
        }
    }
}
