use std::cmp::Ordering;

use num_traits::Signed;

use super::PiConstant;
use crate::error::{Error, Result};
use crate::scalar::{BigFloat, Real};

/// Default working-precision ceiling for [`pi_sign`].
pub const DEFAULT_PRECISION_CAP: u32 = 1 << 20;

/// Guard bits carried by every π evaluation.
const PI_GUARD_BITS: u32 = 32;

/// π at `bits + 32` bits.
///
/// The sole source of π in the crate. MPFR rounds its constant to nearest, so
/// the relative error is at most `2^-(bits + 32)`.
pub(crate) fn pi_with_guard(bits: u32) -> BigFloat {
    BigFloat::pi(bits + PI_GUARD_BITS)
}

/// Evaluates `c` at a working precision of `bits` and returns the value with a
/// rigorous bound on its absolute error.
///
/// Each term `q·π^e` picks up at most `(|e| + 3)` units of `2^-w` relative
/// error (π itself, the power, the rational conversion, the product); the
/// running sum adds one unit per addition relative to `Σ|term|`. The bound
/// doubles the first-order total to absorb higher-order terms.
pub fn pi_eval_with_error(c: &PiConstant, bits: u32) -> (BigFloat, BigFloat) {
    if c.is_empty() {
        return (BigFloat::zero(bits), BigFloat::zero(32));
    }
    let pi = pi_with_guard(bits);
    let w = pi.prec();
    let mut value = BigFloat::zero(w);
    let mut magnitude = BigFloat::zero(64);
    let mut max_exp = 0u32;
    for (e, q) in c.terms() {
        let term = BigFloat::from_rational(q, w) * pi.powi(e);
        magnitude = magnitude + term.abs().round_to(64);
        value = value + term;
        max_exp = max_exp.max(e.unsigned_abs());
    }
    let units = 2 * (max_exp + 3 + c.len() as u32);
    let err =
        magnitude * BigFloat::from_integer(units as i64, 64) * BigFloat::exp2(-(w as i32), 64);
    (value, err)
}

/// `Σ q_e·π^e` rounded to `bits` bits, within 4 ulp of the exact value.
///
/// Working precision doubles until the error bound from
/// [`pi_eval_with_error`] drops below half an ulp of the result, then the value
/// is rounded once more. A nonzero input always converges; the loop gives up at
/// [`DEFAULT_PRECISION_CAP`] and returns the last value.
pub fn pi_eval(c: &PiConstant, bits: u32) -> BigFloat {
    if c.is_empty() {
        return BigFloat::zero(bits);
    }
    if let Some(q) = c.as_rational() {
        return BigFloat::from_rational(&q, bits);
    }
    let mut working = bits;
    loop {
        let (value, err) = pi_eval_with_error(c, working);
        let half_ulp = value.abs() * BigFloat::exp2(-(bits as i32) - 1, 64);
        if err <= half_ulp || working >= DEFAULT_PRECISION_CAP {
            return value.round_to(bits);
        }
        working = working.saturating_mul(2);
    }
}

/// Exact sign of `c` under the default precision cap.
pub fn pi_sign(c: &PiConstant) -> Result<Ordering> {
    pi_sign_with_cap(c, DEFAULT_PRECISION_CAP)
}

/// Exact sign of `c`, escalating precision until the error interval excludes 0.
///
/// A single-term constant `q·π^e` has the sign of `q`. With two or more terms
/// the value is nonzero (π is transcendental), so escalation terminates given
/// enough bits; `cap` bounds the effort.
pub fn pi_sign_with_cap(c: &PiConstant, cap: u32) -> Result<Ordering> {
    if c.is_empty() {
        return Ok(Ordering::Equal);
    }
    if c.len() == 1 {
        let (_, q) = c.terms().next().expect("one term");
        return Ok(if q.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        });
    }
    let mut bits = 64u32;
    while bits <= cap {
        let (value, err) = pi_eval_with_error(c, bits);
        if value.abs() > err {
            return Ok(value.cmp0().expect("finite"));
        }
        bits = bits.saturating_mul(2);
    }
    Err(Error::PrecisionCapExceeded { cap })
}

impl PiConstant {
    /// Convenience for `pi_sign(self) == Greater`, treating cap overflow as not positive.
    pub fn is_certainly_positive(&self) -> bool {
        matches!(pi_sign(self), Ok(Ordering::Greater))
    }
}
