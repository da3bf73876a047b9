//! C-fraction extraction: rewrites a power series as
//! `c_0 + a_1 x/(b_1 + a_2 x/(b_2 + ...))` with integer `a_k` and rational
//! `b_k`, by repeated shifted reciprocals.
//!
//! Step `k` takes the residual `r_{k-1}` (with `r_0 = f`), subtracts its
//! constant term `b_{k-1}`, and requires the difference to vanish to order
//! exactly one; `a_k` is the numerator of the lowest-terms leading
//! coefficient `p/q` of that difference, and `r_k = a_k x / (r_{k-1} -
//! b_{k-1})` is the next residual, whose constant term is exactly `q`. Each
//! step consumes one order of truncation, so `depth` steps need the input
//! known through `x^(2 depth + 2)` to certify every extracted pair.

use crate::error::{Error, Result};
use crate::numerics::{Integer, Rational};
use crate::poly::Poly;
use crate::series::{Series, Valuation};

/// One extracted level: partial numerator `a x`, partial denominator `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepPair {
    pub a: Integer,
    pub b: Rational,
}

/// Extracted fraction `c0 + a_1 x/(b_1 + a_2 x/(b_2 + ...))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CFraction {
    pub c0: Rational,
    pub steps: Vec<StepPair>,
    /// true when a residual became exactly zero, i.e. the input is a
    /// rational function fully captured by the extracted levels
    pub terminated: bool,
}

impl CFraction {
    pub fn depth(&self) -> usize {
        self.steps.len()
    }
}

/// Extracts `depth` levels from `f`.
///
/// Errors with `InsufficientOrder` when `f` carries fewer than
/// `2 depth + 2` coefficients, and with `ResidualOrderTooHigh` when a
/// residual vanishes to order two or more (the series has no expansion of
/// this shape, e.g. an even series).
pub fn expand_cfraction(f: &Series, depth: usize) -> Result<CFraction> {
    let needed = 2 * depth + 2;
    if f.order() < needed {
        return Err(Error::InsufficientOrder {
            order: f.order(),
            depth,
            needed,
        });
    }
    let c0 = f.coeff(0);
    let mut residual = f.clone();
    let mut b_prev = c0.clone();
    let mut steps = Vec::with_capacity(depth);
    for step in 1..=depth {
        // rho = r_{k-1} - b_{k-1}; its constant term is zero by construction.
        let rho = residual.add_rational(&-&b_prev);
        if rho.is_zero() {
            return Ok(CFraction {
                c0,
                steps,
                terminated: true,
            });
        }
        match rho.valuation() {
            Valuation::Finite(1) => {}
            Valuation::Finite(order) => {
                return Err(Error::ResidualOrderTooHigh { step, order });
            }
            Valuation::AtLeast(_) => unreachable!("nonzero series has a finite valuation"),
        }
        let lead = rho.coeff(1);
        let a = lead.numer().clone();
        // r_k = a_k x / rho; constant term q = denom(lead) exactly.
        residual = rho
            .div_x()
            .reciprocal()?
            .mul_rational(&Rational::from_integer(a.clone()));
        let b = residual.coeff(0);
        steps.push(StepPair { a, b: b.clone() });
        b_prev = b;
    }
    Ok(CFraction {
        c0,
        steps,
        terminated: false,
    })
}

/// Evaluates the fraction bottom-up as a series to the requested order.
///
/// Degenerate hand-built inputs whose level denominator has no series
/// inverse are reported with the 1-based offending level.
pub fn reconstruct(cf: &CFraction, order: usize) -> Result<Series> {
    let mut tail = Series::zero(order);
    for (i, step) in cf.steps.iter().enumerate().rev() {
        let den = tail.add_rational(&step.b);
        let inv = den
            .reciprocal()
            .map_err(|_| Error::ZeroDenominatorLevel { level: i + 1 })?;
        tail = inv.mul_poly(&Poly::monomial(
            Rational::from_integer(step.a.clone()),
            1,
        ));
    }
    Ok(tail.add_rational(&cf.c0))
}
