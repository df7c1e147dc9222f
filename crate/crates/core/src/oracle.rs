//! Multiprecision reference values of the bounded functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bounds::{Endpoint, Target};
use crate::error::{Error, Result};
use crate::exact::{factorial, pi_eval, PiConstant, DEFAULT_PRECISION_CAP};
use crate::scalar::{BigFloat, Real};
use crate::Rational;

/// Guard bits added on top of the cancellation allowance.
const GUARD_BITS: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetFn {
    /// `1/x + sin 2x/(2x²) − 2 cot x − 8x³/45 + 8x⁵/945` on `(0, π/2)`.
    Wilker,
    /// `arcsin x − 3x/(2 + √(1−x²))` on `(0, 1)`.
    SfD3,
    /// `arcsin x − πx/(2 + √(1−x²))` on `(0, 1)`.
    SfDpi,
    /// Same function as [`TargetFn::SfD3`], compared against denominator-form bounds.
    SfELhs,
}

impl TargetFn {
    pub fn for_target(target: Target) -> Self {
        match target {
            Target::Wilker => TargetFn::Wilker,
            Target::SfD3 => TargetFn::SfD3,
            Target::SfDpi => TargetFn::SfDpi,
            Target::SfE => TargetFn::SfELhs,
        }
    }

    pub fn domain(self) -> Endpoint {
        match self {
            TargetFn::Wilker => Endpoint::HalfPi,
            _ => Endpoint::One,
        }
    }

    /// The defining formula evaluated directly in the carrier of `x`.
    ///
    /// No cancellation control: in `f64` the Wilker expression loses all
    /// accuracy below x ≈ 0.01. Use [`eval_target`] for reference values.
    pub fn eval_in<R: Real>(self, x: &R) -> R {
        let q = |n: i64, d: i64| R::from_rational_like(&Rational::new(n.into(), d.into()), x);
        match self {
            TargetFn::Wilker => {
                let x2 = x.clone() * x.clone();
                let x3 = x2.clone() * x.clone();
                let x5 = x3.clone() * x2.clone();
                let two_x = q(2, 1) * x.clone();
                let cot = x.cos() / x.sin();
                q(1, 1) / x.clone() + two_x.sin() / (q(2, 1) * x2) - q(2, 1) * cot - q(8, 45) * x3
                    + q(8, 945) * x5
            }
            TargetFn::SfD3 | TargetFn::SfDpi | TargetFn::SfELhs => {
                let k = if self == TargetFn::SfDpi {
                    R::pi_like(x)
                } else {
                    q(3, 1)
                };
                let den = q(2, 1) + (q(1, 1) - x.clone() * x.clone()).sqrt();
                x.asin() - k * x.clone() / den
            }
        }
    }

    /// Bits lost to cancellation when evaluating at `x`.
    ///
    /// The Wilker terms are `O(1/x)` while the value is `O(x⁷)`; the `k = 3`
    /// Shafer–Fink terms are `O(x)` while the value is `O(x⁵)`. Near `x = 1`
    /// forming `1 − x²` costs `log2(1/(1−x))` bits.
    fn cancellation_bits(self, x: &BigFloat) -> u32 {
        let below_one = |v: &BigFloat| v.exponent().map_or(0, |e| (1 - e).max(0) as u32);
        let small = below_one(x);
        let near_one = || {
            let one = BigFloat::from_integer(1, x.prec() + 2);
            below_one(&(one - x.clone()))
        };
        match self {
            TargetFn::Wilker => 8 * small,
            TargetFn::SfD3 | TargetFn::SfELhs => 4 * small + near_one(),
            TargetFn::SfDpi => near_one(),
        }
    }
}

/// Smallest precision [`eval_target`] accepts.
pub const MIN_PRECISION: u32 = 32;

/// `f(x)` rounded to `precision` bits, within 16 ulp.
///
/// The formula is evaluated at `precision + 64 + cancellation` bits (see
/// [`TargetFn`]), with every MPFR primitive correctly rounded, then rounded
/// once to `precision`. `x` must lie strictly inside the domain.
pub fn eval_target(f: TargetFn, x: &BigFloat, precision: u32) -> Result<BigFloat> {
    if precision < MIN_PRECISION {
        return Err(Error::InvalidArgument(format!(
            "precision must be ≥ {MIN_PRECISION} bits"
        )));
    }
    let b = pi_eval(&f.domain().value(), x.prec() + 64);
    if !x.is_finite() || x.is_negative() || x.is_zero() || *x >= b {
        return Err(Error::DomainViolation {
            x: x.to_string(),
            domain: format!("(0, {})", f.domain().name()),
        });
    }
    let working = precision as u64 + GUARD_BITS as u64 + f.cancellation_bits(x) as u64;
    if working > DEFAULT_PRECISION_CAP as u64 {
        return Err(Error::PrecisionCapExceeded {
            cap: DEFAULT_PRECISION_CAP,
        });
    }
    let xw = x.round_to((working as u32).max(x.prec()));
    Ok(f.eval_in(&xw).round_to(precision))
}

/// The first `terms` odd Taylor coefficients of the Wilker function at 0
/// (index `k` is the coefficient of `x^(2k+1)`).
///
/// Built without Bernoulli numbers: `x·cot x` comes from dividing the cosine
/// series by the series of `sin x / x`, and `sin 2x/(2x)` from its own series.
pub fn taylor_head(terms: usize) -> Vec<PiConstant> {
    let len = terms + 1;
    let sign = |j: usize| {
        if j % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let sinc: Vec<Rational> = (0..len)
        .map(|j| Rational::new(sign(j), factorial(2 * j + 1)))
        .collect();
    let cos: Vec<Rational> = (0..len)
        .map(|j| Rational::new(sign(j), factorial(2 * j)))
        .collect();
    // x·cot x = cos x / (sin x / x), as series in t = x².
    let mut xcot: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = cos[n].clone();
        for i in 1..=n {
            acc -= &sinc[i] * &xcot[n - i];
        }
        xcot.push(acc);
    }
    // x·f(x) = 1 + sin 2x/(2x) − 2x·cot x − 8x⁴/45 + 8x⁶/945 = Σ d_j t^j
    let d = |j: usize| -> Rational {
        let mut v = Rational::new(
            sign(j) * num_traits::pow(BigInt::from(4), j),
            factorial(2 * j + 1),
        );
        v -= &xcot[j] * Rational::from_integer(2.into());
        match j {
            0 => v += Rational::one(),
            2 => v -= Rational::new(8.into(), 45.into()),
            3 => v += Rational::new(8.into(), 945.into()),
            _ => {}
        }
        v
    };
    debug_assert!(d(0).is_zero());
    (0..terms).map(|k| PiConstant::rational(d(k + 1))).collect()
}
