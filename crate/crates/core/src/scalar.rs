//! Numeric carriers.
//!
//! Everything that evaluates a polynomial or a target function is written
//! against [`Real`], which is implemented for every `num_traits::Float`
//! (so `f32` and `f64`) and for the multiprecision [`BigFloat`]. Values carry
//! their own precision, so constructors take a `like` argument instead of a
//! bit count.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Float, FloatConst, ToPrimitive};
use rug::float::{Constant, Round};
use rug::integer::Order;
use rug::ops::Pow;
use rug::{Float as MpFloat, Integer};

use crate::exact::PiConstant;
use crate::Rational;

/// A real-number carrier with the elementary functions the target functions need.
pub trait Real:
    Clone
    + PartialOrd
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Mantissa bits carried by this value.
    fn precision(&self) -> u32;

    fn from_rational_like(q: &Rational, like: &Self) -> Self;

    fn pi_like(like: &Self) -> Self;

    /// Value of `Σ q_e·π^e` in the carrier of `like`.
    fn from_pi_constant_like(c: &PiConstant, like: &Self) -> Self {
        let zero = Self::from_rational_like(&Rational::from_integer(0.into()), like);
        let pi = Self::pi_like(like);
        c.terms().fold(zero, |acc, (e, q)| {
            acc + Self::from_rational_like(q, like) * pi.powi(e)
        })
    }

    fn powi(&self, e: i32) -> Self;
    fn sqrt(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn asin(&self) -> Self;
    fn abs(&self) -> Self;

    /// `2^-precision` in the carrier of `self`.
    fn unit_roundoff(&self) -> Self;

    fn to_f64(&self) -> f64;

    fn is_negative(&self) -> bool;
}

impl<F> Real for F
where
    F: Float + FloatConst + fmt::Debug + Send + Sync,
{
    fn precision(&self) -> u32 {
        (-F::epsilon().log2()).to_u32().unwrap_or(0) + 1
    }

    fn from_rational_like(q: &Rational, _like: &Self) -> Self {
        F::from(q.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan)
    }

    fn pi_like(_like: &Self) -> Self {
        F::PI()
    }

    fn powi(&self, e: i32) -> Self {
        Float::powi(*self, e)
    }

    fn sqrt(&self) -> Self {
        Float::sqrt(*self)
    }

    fn sin(&self) -> Self {
        Float::sin(*self)
    }

    fn cos(&self) -> Self {
        Float::cos(*self)
    }

    fn asin(&self) -> Self {
        Float::asin(*self)
    }

    fn abs(&self) -> Self {
        Float::abs(*self)
    }

    fn unit_roundoff(&self) -> Self {
        F::epsilon() / (F::one() + F::one())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negative(&self) -> bool {
        self.is_sign_negative() && !self.is_zero()
    }
}

/// Arbitrary-precision binary float backed by MPFR.
///
/// Every primitive operation is correctly rounded to nearest (at most 0.5 ulp
/// of error). Binary operations produce a result at the larger of the two
/// operand precisions.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigFloat(MpFloat);

impl BigFloat {
    pub fn with_precision(bits: u32, value: f64) -> Self {
        BigFloat(MpFloat::with_val(bits, value))
    }

    pub fn zero(bits: u32) -> Self {
        BigFloat(MpFloat::new(bits))
    }

    /// Nearest `bits`-bit float to the exact rational `q`.
    pub fn from_rational(q: &Rational, bits: u32) -> Self {
        let r = rug::Rational::from((to_integer(q.numer()), to_integer(q.denom())));
        BigFloat(MpFloat::with_val(bits, r))
    }

    pub fn from_integer(n: i64, bits: u32) -> Self {
        BigFloat(MpFloat::with_val(bits, n))
    }

    /// π to nearest at the given precision.
    pub fn pi(bits: u32) -> Self {
        BigFloat(MpFloat::with_val(bits, Constant::Pi))
    }

    /// Exact power of two `2^exp`.
    pub fn exp2(exp: i32, bits: u32) -> Self {
        BigFloat(MpFloat::with_val(bits, MpFloat::u_exp(1, exp)))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Same value rounded to nearest at `bits` of precision.
    pub fn round_to(&self, bits: u32) -> Self {
        BigFloat(MpFloat::with_val(bits, &self.0))
    }

    /// Exact rational value of this float, or `None` for NaN and infinities.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.0.is_zero() {
            return Some(Rational::from_integer(0.into()));
        }
        let (mantissa, exp) = self.0.to_integer_exp()?;
        let m = from_integer(&mantissa);
        let two = BigInt::from(2u8);
        Some(if exp >= 0 {
            Rational::from_integer(m * num_traits::pow(two, exp as usize))
        } else {
            Rational::new(m, num_traits::pow(two, exp.unsigned_abs() as usize))
        })
    }

    /// Size of one unit in the last place, `2^(exponent - precision)`; zero for zero.
    pub fn ulp(&self) -> BigFloat {
        match self.0.get_exp() {
            Some(e) => BigFloat::exp2(e - self.0.prec() as i32, 32),
            None => BigFloat::zero(32),
        }
    }

    /// Binary exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        self.0.get_exp()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    /// Sign of the value; `None` for NaN.
    pub fn cmp0(&self) -> Option<Ordering> {
        self.0.cmp0()
    }

    pub fn mul_2si(&self, e: i32) -> BigFloat {
        let mut out = self.0.clone();
        out <<= e;
        BigFloat(out)
    }

    pub fn max(self, other: BigFloat) -> BigFloat {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: BigFloat) -> BigFloat {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Decimal text with `digits` significant digits, MPFR round-to-nearest.
    pub fn to_string_digits(&self, digits: usize) -> String {
        self.0
            .to_string_radix_round(10, Some(digits), Round::Nearest)
    }

    pub fn as_mpfr(&self) -> &MpFloat {
        &self.0
    }

    fn binary(
        &self,
        rhs: &BigFloat,
        f: impl FnOnce(&MpFloat, &MpFloat, u32) -> MpFloat,
    ) -> BigFloat {
        let bits = self.0.prec().max(rhs.0.prec());
        BigFloat(f(&self.0, &rhs.0, bits))
    }
}

impl From<MpFloat> for BigFloat {
    fn from(value: MpFloat) -> Self {
        BigFloat(value)
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}]",
            self.0.to_string_radix(10, Some(24)),
            self.0.prec()
        )
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                self.binary(rhs, |a, b, bits| MpFloat::with_val(bits, a $op b))
            }
        }
        impl $trait<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                (&self).$method(rhs)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);
impl_binop!(Mul, mul, *);
impl_binop!(Div, div, /);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(-self.0)
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(MpFloat::with_val(self.0.prec(), -&self.0))
    }
}

impl Real for BigFloat {
    fn precision(&self) -> u32 {
        self.0.prec()
    }

    fn from_rational_like(q: &Rational, like: &Self) -> Self {
        BigFloat::from_rational(q, like.prec())
    }

    fn pi_like(like: &Self) -> Self {
        BigFloat::pi(like.prec())
    }

    fn from_pi_constant_like(c: &PiConstant, like: &Self) -> Self {
        crate::exact::pi_eval(c, like.prec())
    }

    fn powi(&self, e: i32) -> Self {
        BigFloat(MpFloat::with_val(self.0.prec(), (&self.0).pow(e)))
    }

    fn sqrt(&self) -> Self {
        BigFloat(MpFloat::with_val(self.0.prec(), self.0.sqrt_ref()))
    }

    fn sin(&self) -> Self {
        BigFloat(MpFloat::with_val(self.0.prec(), self.0.sin_ref()))
    }

    fn cos(&self) -> Self {
        BigFloat(MpFloat::with_val(self.0.prec(), self.0.cos_ref()))
    }

    fn asin(&self) -> Self {
        BigFloat(MpFloat::with_val(self.0.prec(), self.0.asin_ref()))
    }

    fn abs(&self) -> Self {
        BigFloat(MpFloat::with_val(self.0.prec(), self.0.abs_ref()))
    }

    fn unit_roundoff(&self) -> Self {
        BigFloat::exp2(-(self.0.prec() as i32), 32)
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn is_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }
}

pub(crate) fn to_integer(n: &BigInt) -> Integer {
    let (sign, digits) = n.to_u32_digits();
    let magnitude = Integer::from_digits(&digits, Order::Lsf);
    if sign == Sign::Minus {
        -magnitude
    } else {
        magnitude
    }
}

pub(crate) fn from_integer(n: &Integer) -> BigInt {
    let magnitude = BigUint::new(n.to_digits::<u32>(Order::Lsf));
    let sign = if n.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    BigInt::from_biguint(sign, magnitude)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_conversion_round_trips() {
        for s in [
            "0",
            "1",
            "-1",
            "123456789012345678901234567890",
            "-98765432109876543210",
        ] {
            let n: BigInt = s.parse().unwrap();
            assert_eq!(from_integer(&to_integer(&n)), n);
        }
    }

    #[test]
    fn rational_round_trip_is_exact_for_dyadics() {
        let q = Rational::new(BigInt::from(-13), BigInt::from(64));
        let f = BigFloat::from_rational(&q, 64);
        assert_eq!(f.to_rational().unwrap(), q);
    }

    #[test]
    fn f64_reports_53_bits() {
        assert_eq!(Real::precision(&1.0f64), 53);
        assert_eq!(Real::precision(&1.0f32), 24);
    }

    #[test]
    fn ulp_of_one() {
        let one = BigFloat::with_precision(64, 1.0);
        assert_eq!(one.ulp(), BigFloat::exp2(-63, 32));
    }
}
