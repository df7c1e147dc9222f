//! Exact arithmetic: rationals, Bernoulli numbers and constants of the form
//! `Σ q_e·π^e`.

mod bernoulli;
mod decimal;
mod numeric;
mod pi_constant;
mod text;

pub use bernoulli::{bernoulli, binomial, factorial};
pub use decimal::{format_decimal, format_rational_decimal};
pub use numeric::{pi_eval, pi_eval_with_error, pi_sign, pi_sign_with_cap, DEFAULT_PRECISION_CAP};
pub use pi_constant::PiConstant;

#[cfg(test)]
use num_bigint::BigInt;

#[cfg(test)]
use crate::Rational;

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
