//! Grid verification of bound pairs and gap measurements.
//!
//! A point passes when the oracle sits inside the pair by more than the sum
//! of the documented evaluation errors at that point. Grid points are
//! evaluated in parallel; the reduction runs in index order, so reports are
//! bit-identical from run to run.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::bounds::{wilker_bounds, wilker_gap_constant, BoundPair};
use crate::error::{Error, Result};
use crate::exact::{pi_eval, pi_sign};
use crate::oracle::{eval_target, TargetFn, MIN_PRECISION};
use crate::scalar::{BigFloat, Real};
use crate::Target;

/// Oracle error contract, in ulps of the oracle value.
const ORACLE_ULPS: i64 = 16;

/// Extra bits used for bound evaluation beyond the requested precision.
const BOUND_GUARD_BITS: u32 = 32;

/// Points in the coarse scan that seeds [`max_gap`].
const GAP_SCAN_POINTS: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Verified,
    Indeterminate,
    Violated,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Indeterminate => "indeterminate",
            Status::Violated => "violated",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub target: Target,
    pub order: usize,
    pub grid_points: usize,
    pub precision_bits: u32,
    /// `min(oracle − lower)` over the grid.
    pub min_lower_margin: BigFloat,
    /// `min(upper − oracle)` over the grid.
    pub min_upper_margin: BigFloat,
    pub max_gap: BigFloat,
    pub argmax_x: BigFloat,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ErrorTableRow {
    pub m: usize,
    pub sup_gap: BigFloat,
}

struct PointCheck {
    x: BigFloat,
    lower_margin: BigFloat,
    lower_budget: BigFloat,
    upper_margin: BigFloat,
    upper_budget: BigFloat,
    gap: BigFloat,
}

impl PointCheck {
    fn passes(&self) -> bool {
        self.lower_margin > self.lower_budget && self.upper_margin > self.upper_budget
    }

    fn violates(&self) -> bool {
        self.lower_margin < -self.lower_budget.clone()
            || self.upper_margin < -self.upper_budget.clone()
    }
}

/// `16·ulp(y)`, the oracle's error allowance.
fn oracle_budget(y: &BigFloat) -> BigFloat {
    y.ulp() * BigFloat::from_integer(ORACLE_ULPS, 64)
}

/// Checks `lower < f < upper` at `grid_points` uniformly spaced interior
/// points `x_i = b·i/(grid_points + 1)`.
pub fn verify_pair(
    pair: &BoundPair,
    grid_points: usize,
    precision: u32,
) -> Result<VerificationReport> {
    if grid_points < 2 {
        return Err(Error::InvalidArgument("grid must be ≥ 2".into()));
    }
    if precision < MIN_PRECISION {
        return Err(Error::InvalidArgument(format!(
            "precision must be ≥ {MIN_PRECISION} bits"
        )));
    }
    let f = TargetFn::for_target(pair.target);
    let working = precision + BOUND_GUARD_BITS;
    let lower = pair.lower.materialize(working);
    let upper = pair.upper.materialize(working);
    let b = pi_eval(&pair.target.domain().value(), working + 64);
    let denom = BigFloat::from_integer(grid_points as i64 + 1, 64);

    let checks = (1..=grid_points)
        .into_par_iter()
        .map(|i| {
            let x = (b.clone() * BigFloat::from_integer(i as i64, 64) / denom.clone())
                .round_to(precision);
            let y = eval_target(f, &x, precision)?;
            let y_err = oracle_budget(&y);
            let (lo, lo_err) = lower.eval(&x);
            let (up, up_err) = upper.eval(&x);
            let lower_margin = y.clone() - lo.clone();
            let upper_margin = up.clone() - y;
            Ok(PointCheck {
                lower_budget: y_err.clone() + lo_err + lower_margin.ulp(),
                upper_budget: y_err + up_err + upper_margin.ulp(),
                lower_margin,
                upper_margin,
                gap: up - lo,
                x,
            })
        })
        .collect::<Result<Vec<PointCheck>>>()?;

    let mut all_pass = true;
    let mut any_violation = false;
    let mut min_lower = checks[0].lower_margin.clone();
    let mut min_upper = checks[0].upper_margin.clone();
    let mut best = &checks[0];
    for c in &checks {
        all_pass &= c.passes();
        any_violation |= c.violates();
        if c.lower_margin < min_lower {
            min_lower = c.lower_margin.clone();
        }
        if c.upper_margin < min_upper {
            min_upper = c.upper_margin.clone();
        }
        if c.gap > best.gap {
            best = c;
        }
    }
    let status = if any_violation {
        Status::Violated
    } else if all_pass {
        Status::Verified
    } else {
        Status::Indeterminate
    };
    Ok(VerificationReport {
        target: pair.target,
        order: pair.order,
        grid_points,
        precision_bits: precision,
        min_lower_margin: min_lower,
        min_upper_margin: min_upper,
        max_gap: best.gap.clone(),
        argmax_x: best.x.clone(),
        status,
    })
}

/// Repeats [`verify_pair`] with doubled precision while the result is
/// indeterminate, up to `max_precision`.
pub fn verify_pair_escalating(
    pair: &BoundPair,
    grid_points: usize,
    precision: u32,
    max_precision: u32,
) -> Result<VerificationReport> {
    let mut bits = precision;
    loop {
        let report = verify_pair(pair, grid_points, bits)?;
        if report.status != Status::Indeterminate || bits.saturating_mul(2) > max_precision {
            return Ok(report);
        }
        bits *= 2;
    }
}

/// Gap `(upper − lower)(x)` including the shared denominator.
fn gap_at(gap: &crate::PolyBig, pair: &BoundPair, x: &BigFloat) -> BigFloat {
    let num = gap.eval(x);
    num / pair.upper.denominator.eval(x)
}

/// Maximizes `upper − lower` over `[0, b]`: a 1024-interval scan picks the
/// best grid point, then golden-section search refines within its two
/// neighbouring intervals to a tolerance of `2^(-precision/2)·b`.
pub fn max_gap(pair: &BoundPair, precision: u32) -> (BigFloat, BigFloat) {
    let working = precision + BOUND_GUARD_BITS;
    let like = BigFloat::zero(working);
    let gap = pair.gap_poly().materialize(&like);
    let b = pi_eval(&pair.target.domain().value(), working);
    let n = BigFloat::from_integer(GAP_SCAN_POINTS as i64, 64);
    let grid_x = |i: usize| b.clone() * BigFloat::from_integer(i as i64, 64) / n.clone();

    let mut best_i = 0;
    let mut best = gap_at(&gap, pair, &grid_x(0));
    for i in 1..=GAP_SCAN_POINTS {
        let g = gap_at(&gap, pair, &grid_x(i));
        if g > best {
            best = g;
            best_i = i;
        }
    }
    let mut best_x = grid_x(best_i);

    let mut lo = grid_x(best_i.saturating_sub(1));
    let mut hi = grid_x((best_i + 1).min(GAP_SCAN_POINTS));
    let tol = b.clone() * BigFloat::exp2(-((precision / 2) as i32), 64);
    let five = BigFloat::from_integer(5, working);
    let inv_phi =
        (five.sqrt() - BigFloat::from_integer(1, working)) / BigFloat::from_integer(2, working);
    let mut c = hi.clone() - inv_phi.clone() * (hi.clone() - lo.clone());
    let mut d = lo.clone() + inv_phi.clone() * (hi.clone() - lo.clone());
    let mut gc = gap_at(&gap, pair, &c);
    let mut gd = gap_at(&gap, pair, &d);
    while hi.clone() - lo.clone() > tol {
        if gc > gd {
            hi = d;
            d = c;
            gd = gc;
            c = hi.clone() - inv_phi.clone() * (hi.clone() - lo.clone());
            gc = gap_at(&gap, pair, &c);
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo.clone() + inv_phi.clone() * (hi.clone() - lo.clone());
            gd = gap_at(&gap, pair, &d);
        }
    }
    for (x, g) in [(c, gc), (d, gd)] {
        if g > best {
            best = g;
            best_x = x;
        }
    }
    (best_x.round_to(precision), best.round_to(precision))
}

/// `sup R_m` over `(0, π/2)` for each order.
///
/// With a positive gap constant `G`, `R_m(x) = G·(2x/π)^(2m+1)` increases
/// towards `x = π/2`, so the supremum is `G` itself. The sign of `G` is
/// certified first; [`max_gap`] is the fallback.
pub fn wilker_error_table(orders: &[usize], precision: u32) -> Result<Vec<ErrorTableRow>> {
    orders
        .iter()
        .map(|&m| {
            let g = wilker_gap_constant(m)?;
            let sup_gap = match pi_sign(&g)? {
                Ordering::Greater => pi_eval(&g, precision),
                _ => max_gap(&wilker_bounds(m)?, precision).1,
            };
            Ok(ErrorTableRow { m, sup_gap })
        })
        .collect()
}
