use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{pi_eval_with_error, PiConstant, DEFAULT_PRECISION_CAP};
use crate::scalar::BigFloat;
use crate::Rational;

/// Decimal exponents outside this range switch to scientific notation.
const POSITIONAL_RANGE: std::ops::RangeInclusive<i64> = -20..=20;

fn pow10(k: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10u8), k.unsigned_abs() as usize);
    if k >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// `floor(log10(a))` for `a > 0`.
fn decimal_exponent(a: &Rational) -> i64 {
    let log2 = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = (log2 as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while pow10(e) > *a {
        e -= 1;
    }
    while pow10(e + 1) <= *a {
        e += 1;
    }
    e
}

fn round_half_even(q: &Rational) -> BigInt {
    let (quot, rem) = q.numer().div_mod_floor(q.denom());
    let twice: BigInt = rem * 2u32;
    match twice.cmp(q.denom()) {
        std::cmp::Ordering::Less => quot,
        std::cmp::Ordering::Greater => quot + 1,
        std::cmp::Ordering::Equal if quot.is_odd() => quot + 1,
        std::cmp::Ordering::Equal => quot,
    }
}

/// Exact decimal rendering of `q` with exactly `digits` significant digits,
/// rounding half to even.
pub fn format_rational_decimal(q: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if q.is_zero() {
        return "0".to_string();
    }
    let a = q.abs();
    let mut e10 = decimal_exponent(&a);
    let mut n = round_half_even(&(&a * pow10(digits as i64 - 1 - e10)));
    if n == num_traits::pow(BigInt::from(10u8), digits) {
        n /= 10;
        e10 += 1;
    }
    let s = n.to_string();
    let sign = if q.is_negative() { "-" } else { "" };
    let body = if !POSITIONAL_RANGE.contains(&e10) {
        if digits == 1 {
            format!("{s}e{e10}")
        } else {
            format!("{}.{}e{e10}", &s[..1], &s[1..])
        }
    } else if e10 >= digits as i64 - 1 {
        format!("{s}{}", "0".repeat((e10 - digits as i64 + 1) as usize))
    } else if e10 >= 0 {
        let split = (e10 + 1) as usize;
        format!("{}.{}", &s[..split], &s[split..])
    } else {
        format!("0.{}{s}", "0".repeat((-e10 - 1) as usize))
    };
    format!("{sign}{body}")
}

/// Decimal rendering of an exact constant with `digits` significant digits.
///
/// The working precision doubles until both ends of the evaluation error
/// interval render identically, so the printed digits are correctly rounded.
pub fn format_decimal(c: &PiConstant, digits: usize) -> String {
    if let Some(q) = c.as_rational() {
        return format_rational_decimal(&q, digits);
    }
    let mut bits = (digits as u32) * 4 + 64;
    loop {
        let (v, err) = pi_eval_with_error(c, bits);
        let v = v.to_rational().expect("finite");
        let err = err.to_rational().expect("finite");
        let lo = format_rational_decimal(&(&v - &err), digits);
        if lo == format_rational_decimal(&(&v + &err), digits) || bits >= DEFAULT_PRECISION_CAP {
            return lo;
        }
        bits *= 2;
    }
}

impl BigFloat {
    /// Decimal rendering of the exact binary value with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        match self.to_rational() {
            Some(q) => format_rational_decimal(&q, digits),
            None => self.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn significant_digits() {
        assert_eq!(
            format_rational_decimal(&rat(16, 14175), 10),
            "0.001128747795"
        );
        assert_eq!(format_rational_decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(format_rational_decimal(&rat(-2, 3), 3), "-0.667");
        assert_eq!(format_rational_decimal(&rat(12345, 1), 3), "12300");
        assert_eq!(format_rational_decimal(&rat(12345, 100), 4), "123.4");
        assert_eq!(format_rational_decimal(&rat(1, 1), 3), "1.00");
        assert_eq!(format_rational_decimal(&rat(0, 1), 5), "0");
    }

    #[test]
    fn ties_go_to_even() {
        assert_eq!(format_rational_decimal(&rat(125, 1000), 2), "0.12");
        assert_eq!(format_rational_decimal(&rat(135, 1000), 2), "0.14");
        assert_eq!(format_rational_decimal(&rat(25, 1), 1), "20");
    }

    #[test]
    fn carry_into_new_digit() {
        assert_eq!(format_rational_decimal(&rat(9999, 1000), 3), "10.0");
        assert_eq!(
            format_rational_decimal(&rat(-99996, 1_000_000), 4),
            "-0.1000"
        );
    }

    #[test]
    fn scientific_far_from_one() {
        let tiny = Rational::new(BigInt::from(3), num_traits::pow(BigInt::from(10u8), 30));
        assert_eq!(format_rational_decimal(&tiny, 3), "3.00e-30");
        let big = Rational::from_integer(num_traits::pow(BigInt::from(10u8), 25) * 7);
        assert_eq!(format_rational_decimal(&big, 1), "7e25");
    }

    #[test]
    fn pi_constants() {
        let c = PiConstant::from_terms([(1, rat(1, 2)), (0, rat(-3, 2))]);
        assert_eq!(format_decimal(&c, 12), "0.0707963267949");
    }
}
