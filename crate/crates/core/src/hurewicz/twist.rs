use std::fmt;

use super::{partition_sum, DividedExpr};
use crate::error::Error;
use crate::exactalg::{MultiPoly, Scalar};

/// The class of `CP_n` with its symplectic form scaled by `t`, expanded as
/// `Σ_{|π|=n} (r over r_*) Π_k (CP_{k-1}/k)^{r_k} · t^{r(π)} · vol(CP_r, ω)`.
///
/// The divided power `b_(r)` plays the role of `vol(CP_r, ω)`. Because the
/// power of `t` always equals `r`, the symbolic form stores only the
/// `t`-free coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistExpansion<S> {
    pub n: u32,
    /// `None` for symbolic `t`.
    pub t: Option<S>,
    /// Coefficients of `vol(CP_r, ω)`, already multiplied by `t^r` when `t`
    /// is given.
    pub expr: DividedExpr<S>,
}

impl<S: Scalar> TwistExpansion<S> {
    /// Coefficient of `vol(CP_r, ω)`, excluding the symbolic `t^r`.
    pub fn coeff(&self, r: u32) -> MultiPoly<S> {
        self.expr.coeff(r)
    }

    /// Substitutes a value for symbolic `t`.
    pub fn at(&self, t: &S) -> Self {
        assert!(self.t.is_none(), "t already fixed");
        TwistExpansion { n: self.n, t: Some(t.clone()), expr: self.expr.weight_by_power(t) }
    }

    /// `CP_i ↦ 0` for `i > 0`: the leading volume term.
    pub fn leading_term(&self) -> DividedExpr<S> {
        self.expr.kill_family(crate::exactalg::Family::CP)
    }
}

pub fn twist_expansion_symbolic<S: Scalar>(n: u32) -> Result<TwistExpansion<S>, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let c: Vec<MultiPoly<S>> = (1..=n).map(|k| MultiPoly::cp(k - 1).div_int(i64::from(k))).collect();
    Ok(TwistExpansion { n, t: None, expr: partition_sum(n, &c) })
}

/// Expansion at a positive rational `t`.
pub fn twist_expansion<S: Scalar>(n: u32, t: &S) -> Result<TwistExpansion<S>, Error> {
    if !t.is_positive() {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    Ok(twist_expansion_symbolic(n)?.at(t))
}

impl<S: Scalar> fmt::Display for TwistExpansion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbolic = self.t.is_none();
        let text = self.expr.render_with(|r| {
            let vol = format!("vol(CP_{r},w)");
            match (symbolic, r) {
                (false, _) => vol,
                (true, 1) => format!("t·{vol}"),
                (true, _) => format!("t^{r}·{vol}"),
            }
        });
        write!(f, "CP{}(t·w) = {text}", self.n)
    }
}
