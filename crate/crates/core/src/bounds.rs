//! Two-sided odd-polynomial bounds.
//!
//! For a function with Taylor expansion `Σ c_k x^(2k+1)` on `(0, b)` whose
//! coefficients are nonnegative apart from finitely many negative ones, the
//! order-`n` pair is
//!
//! ```text
//! lower(x) = Σ_{k≤n} C_k x^(2k+1) + Σ_{j∈J} c_j x^(2j+1)
//! upper(x) = Σ_{k<n} C_k x^(2k+1) + Σ_{j∈J} c_j x^(2j+1)
//!          + (f(b−) − Σ_{k<n} C_k b^(2k+1) − Σ_{j∈J} c_j b^(2j+1))·(x/b)^(2n+1)
//! ```
//!
//! where `C_k` is `c_k` with negative entries zeroed and `J` indexes the
//! negative entries. All coefficients stay exact [`PiConstant`]s.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{pi_eval, pi_sign, PiConstant};
use crate::scalar::{BigFloat, Real};
use crate::series::{split_nonneg, CoeffSeq, Kappa, SeqId, SplitSeries};
use crate::{ExactPoly, PolyBig, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Lower,
    Upper,
}

/// Right endpoint `b` of a bound's domain `[0, b]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    HalfPi,
    One,
}

impl Endpoint {
    pub fn value(self) -> PiConstant {
        match self {
            Endpoint::HalfPi => PiConstant::monomial(Rational::new(1.into(), 2.into()), 1),
            Endpoint::One => PiConstant::one(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Endpoint::HalfPi => "pi/2",
            Endpoint::One => "1",
        }
    }
}

/// What the polynomial is divided by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Denominator {
    One,
    /// `2 + √(1 − x²)`
    TwoPlusSqrt,
}

impl Denominator {
    pub fn name(self) -> &'static str {
        match self {
            Denominator::One => "1",
            Denominator::TwoPlusSqrt => "2 + sqrt(1 - x^2)",
        }
    }

    pub fn eval<R: Real>(self, x: &R) -> R {
        let one = R::from_rational_like(&Rational::one(), x);
        match self {
            Denominator::One => one,
            Denominator::TwoPlusSqrt => {
                let two = one.clone() + one.clone();
                two + (one - x.clone() * x.clone()).sqrt()
            }
        }
    }
}

/// The function family a bound pair encloses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// `1/x + sin 2x/(2x²) − 2 cot x − 8x³/45 + 8x⁵/945` on `(0, π/2)`.
    Wilker,
    /// `arcsin x − 3x/(2 + √(1−x²))` on `(0, 1)`.
    SfD3,
    /// `arcsin x − πx/(2 + √(1−x²))` on `(0, 1)`.
    SfDpi,
    /// `arcsin x − 3x/(2 + √(1−x²))` against bounds of the form `p(x)/(2 + √(1−x²))`.
    SfE,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Wilker, Target::SfD3, Target::SfDpi, Target::SfE];

    pub fn name(self) -> &'static str {
        match self {
            Target::Wilker => "wilker",
            Target::SfD3 => "sf-d3",
            Target::SfDpi => "sf-dpi",
            Target::SfE => "sf-e",
        }
    }

    pub fn min_order(self) -> usize {
        match self {
            Target::Wilker => 3,
            Target::SfD3 | Target::SfDpi => 1,
            Target::SfE => 2,
        }
    }

    pub fn domain(self) -> Endpoint {
        match self {
            Target::Wilker => Endpoint::HalfPi,
            _ => Endpoint::One,
        }
    }

    pub fn denominator(self) -> Denominator {
        match self {
            Target::SfE => Denominator::TwoPlusSqrt,
            _ => Denominator::One,
        }
    }

    pub fn bounds(self, order: usize) -> Result<BoundPair> {
        match self {
            Target::Wilker => wilker_bounds(order),
            Target::SfD3 => sf_d_bounds(Kappa::Three, order),
            Target::SfDpi => sf_d_bounds(Kappa::Pi, order),
            Target::SfE => sf_e_bounds(order),
        }
    }

    fn check_order(self, order: usize) -> Result<()> {
        if order < self.min_order() {
            return Err(Error::OrderTooSmall {
                target: self.name(),
                order,
                min: self.min_order(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown target {s:?}")))
    }
}

/// Odd polynomial `Σ c_i x^(d_i)` with strictly increasing odd degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct OddPoly<C> {
    terms: Vec<(u32, C)>,
}

impl<C> Default for OddPoly<C> {
    fn default() -> Self {
        OddPoly { terms: Vec::new() }
    }
}

impl<C> OddPoly<C> {
    pub fn from_terms(terms: Vec<(u32, C)>) -> Result<Self> {
        let odd = terms.iter().all(|(d, _)| d % 2 == 1);
        let increasing = terms.windows(2).all(|w| w[0].0 < w[1].0);
        if !odd || !increasing {
            return Err(Error::InvalidArgument(
                "degrees must be odd and strictly increasing".into(),
            ));
        }
        Ok(OddPoly { terms })
    }

    pub fn terms(&self) -> &[(u32, C)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(d, _)| *d)
    }

    pub fn map<D>(&self, mut f: impl FnMut(&C) -> D) -> OddPoly<D> {
        OddPoly {
            terms: self.terms.iter().map(|(d, c)| (*d, f(c))).collect(),
        }
    }
}

impl<C> OddPoly<C>
where
    C: Clone + Add<Output = C> + Sub<Output = C> + Mul<Output = C>,
{
    /// Horner evaluation in `t = x²`, skipping absent degrees.
    pub fn eval(&self, x: &C) -> C {
        let t = x.clone() * x.clone();
        let mut iter = self.terms.iter().rev();
        let Some((top_degree, top)) = iter.next() else {
            return x.clone() - x.clone();
        };
        let mut acc = top.clone();
        let mut degree = *top_degree;
        for (d, c) in iter {
            for _ in 0..(degree - d) / 2 {
                acc = acc * t.clone();
            }
            acc = acc + c.clone();
            degree = *d;
        }
        for _ in 0..(degree - 1) / 2 {
            acc = acc * t.clone();
        }
        acc * x.clone()
    }

    /// Rounded operations on the longest Horner path.
    fn op_count(&self) -> u32 {
        self.degree().unwrap_or(0) + self.terms.len() as u32
    }
}

impl OddPoly<PiConstant> {
    /// Builds from a dense list where index `m` is the coefficient of `x^(2m+1)`;
    /// zero coefficients are dropped.
    pub fn from_dense(coeffs: &[PiConstant]) -> Self {
        OddPoly {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_empty())
                .map(|(m, c)| (2 * m as u32 + 1, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `x^degree`.
    pub fn coeff(&self, degree: u32) -> PiConstant {
        self.terms
            .iter()
            .find(|(d, _)| *d == degree)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Dense coefficient list, index `m` for `x^(2m+1)`.
    pub fn to_dense(&self) -> Vec<PiConstant> {
        let len = self.degree().map_or(0, |d| (d as usize).div_ceil(2));
        let mut out = vec![PiConstant::zero(); len];
        for (d, c) in &self.terms {
            out[(*d as usize - 1) / 2] = c.clone();
        }
        out
    }

    pub fn difference(&self, rhs: &Self) -> Self {
        let mut a = self.to_dense();
        let b = rhs.to_dense();
        if a.len() < b.len() {
            a.resize(b.len(), PiConstant::zero());
        }
        for (i, c) in b.iter().enumerate() {
            a[i] -= c;
        }
        OddPoly::from_dense(&a)
    }

    /// Coefficients evaluated in the carrier of `like`.
    pub fn materialize<R: Real>(&self, like: &R) -> OddPoly<R> {
        self.map(|c| R::from_pi_constant_like(c, like))
    }
}

/// One side of a certified enclosure.
#[derive(Clone, Debug, PartialEq)]
pub struct OddPolyBound {
    pub poly: ExactPoly,
    pub side: Side,
    pub domain: Endpoint,
    pub denominator: Denominator,
}

impl OddPolyBound {
    /// Exact value at a point `x` that is itself an exact constant; only
    /// available without the square-root denominator.
    pub fn eval_exact_at(&self, x: &PiConstant) -> Option<PiConstant> {
        match self.denominator {
            Denominator::One => Some(self.poly.eval(x)),
            Denominator::TwoPlusSqrt => None,
        }
    }

    /// Exact value at a rational point, when `√(1 − x²)` is rational too.
    pub fn eval_exact(&self, x: &Rational) -> Option<PiConstant> {
        let numerator = self.poly.eval(&PiConstant::rational(x.clone()));
        match self.denominator {
            Denominator::One => Some(numerator),
            Denominator::TwoPlusSqrt => {
                let root = rational_sqrt(&(Rational::one() - x * x))?;
                let den = Rational::from_integer(2.into()) + root;
                Some(numerator.scale(&den.recip()))
            }
        }
    }

    /// Coefficients rounded to `bits`, ready for repeated numeric evaluation.
    pub fn materialize(&self, bits: u32) -> MaterializedBound {
        let like = BigFloat::zero(bits);
        let poly = self.poly.materialize(&like);
        let majorant = poly.map(|c| c.abs());
        MaterializedBound {
            ops: self.poly.op_count(),
            poly,
            majorant,
            denominator: self.denominator,
            bits,
        }
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// A bound whose coefficients have been rounded to a working precision.
#[derive(Clone, Debug)]
pub struct MaterializedBound {
    poly: PolyBig,
    majorant: PolyBig,
    denominator: Denominator,
    ops: u32,
    bits: u32,
}

impl MaterializedBound {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Value at `x` together with a bound on its absolute error.
    ///
    /// With `u = 2^-w` at working precision `w`, each coefficient carries at
    /// most 8u relative error, and Horner adds at most `2·ops·u·Σ|c_i||x|^(d_i)`.
    /// The denominator `2 + √(1−x²) ≥ 2` contributes a few more units relative
    /// to the quotient.
    pub fn eval(&self, x: &BigFloat) -> (BigFloat, BigFloat) {
        let x = x.round_to(self.bits.max(x.prec()));
        let numerator = self.poly.eval(&x);
        let scale = self.majorant.eval(&x.abs()).round_to(64);
        let units = BigFloat::from_integer(2 * (self.ops as i64 + 8), 64);
        let u = BigFloat::exp2(-(self.bits as i32), 64);
        let num_err = scale * units * u.clone();
        match self.denominator {
            Denominator::One => (numerator, num_err),
            Denominator::TwoPlusSqrt => {
                let den = self.denominator.eval(&x);
                let value = numerator / den.clone();
                let den64 = den.round_to(64);
                let err =
                    num_err / den64 + value.abs().round_to(64) * BigFloat::from_integer(8, 64) * u;
                (value, err)
            }
        }
    }
}

/// A lower/upper pair for one target and order.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundPair {
    pub target: Target,
    pub order: usize,
    pub lower: OddPolyBound,
    pub upper: OddPolyBound,
}

impl BoundPair {
    /// `upper − lower` as an exact polynomial (shared denominator).
    pub fn gap_poly(&self) -> ExactPoly {
        self.upper.poly.difference(&self.lower.poly)
    }

    fn assemble(target: Target, order: usize, lower: ExactPoly, upper: ExactPoly) -> Self {
        let side = |poly, side| OddPolyBound {
            poly,
            side,
            domain: target.domain(),
            denominator: target.denominator(),
        };
        BoundPair {
            target,
            order,
            lower: side(lower, Side::Lower),
            upper: side(upper, Side::Upper),
        }
    }
}

/// Lower and upper polynomials from [`wd_bound_pair`].
#[derive(Clone, Debug, PartialEq)]
pub struct WdBounds {
    pub lower: ExactPoly,
    pub upper: ExactPoly,
    pub split: SplitSeries,
}

/// Builds the order-`n` pair for `f(x) = Σ coeffs[k]·x^(2k+1)` on `(0, b)`.
///
/// Every supplied coefficient is sign-checked; negative ones are carried on
/// both sides unchanged. `endpoint_value` is `f(b−)` and `b` must be a
/// positive single-term constant such as `π/2` or `1`.
pub fn wd_bound_pair(
    coeffs: &[PiConstant],
    n: usize,
    endpoint_value: &PiConstant,
    b: &PiConstant,
) -> Result<WdBounds> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    if coeffs.len() <= n {
        return Err(Error::InsufficientCoefficients {
            needed: n,
            available: coeffs.len(),
        });
    }
    let b_inv = b
        .monomial_inverse()
        .ok_or_else(|| Error::NonMonomialEndpoint(b.to_string()))?;
    if pi_sign(b)? != Ordering::Greater {
        return Err(Error::InvalidArgument(format!(
            "endpoint {b} must be positive"
        )));
    }
    let split = split_nonneg(coeffs)?;
    let b_pow = |m: usize| b.pow(2 * m as u32 + 1);

    let mut lower = split.nonneg[..=n].to_vec();
    let mut upper = split.nonneg[..n].to_vec();

    let mut tail = endpoint_value.clone();
    for (k, c) in split.nonneg[..n].iter().enumerate() {
        tail -= &(c * &b_pow(k));
    }
    for (j, c) in &split.negative_terms {
        tail -= &(c * &b_pow(*j));
    }
    upper.push(&tail * &b_inv.pow(2 * n as u32 + 1));

    let reach = split
        .negative_indices()
        .max()
        .map_or(n + 1, |j| (j + 1).max(n + 1));
    lower.resize(reach, PiConstant::zero());
    upper.resize(reach, PiConstant::zero());
    for (j, c) in &split.negative_terms {
        lower[*j] += c;
        upper[*j] += c;
    }

    Ok(WdBounds {
        lower: OddPoly::from_dense(&lower),
        upper: OddPoly::from_dense(&upper),
        split,
    })
}

/// `f(π/2−)` for the Wilker target: `2/π − π³/45 + π⁵/3780`.
pub fn wilker_endpoint_value() -> PiConstant {
    // sin(π) and cot(π/2) vanish, leaving 1/b − 8b³/45 + 8b⁵/945 at b = π/2.
    let b = Endpoint::HalfPi.value();
    let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
    &(&b.monomial_inverse().expect("monomial") - &b.pow(3).scale(&q(8, 45)))
        + &b.pow(5).scale(&q(8, 945))
}

/// Order-`m` Wilker pair, `m ≥ 3`.
pub fn wilker_bounds(m: usize) -> Result<BoundPair> {
    Target::Wilker.check_order(m)?;
    let coeffs = CoeffSeq::shared(SeqId::WilkerC).prefix(m + 1);
    let wd = wd_bound_pair(
        &coeffs,
        m,
        &wilker_endpoint_value(),
        &Endpoint::HalfPi.value(),
    )?;
    Ok(BoundPair::assemble(Target::Wilker, m, wd.lower, wd.upper))
}

/// `f_k(1) = π/2 − k/2`.
fn sf_d_endpoint_value(kappa: Kappa) -> PiConstant {
    let half = Rational::new(1.into(), 2.into());
    (&PiConstant::pi() - &kappa.as_constant()).scale(&half)
}

/// Order-`n` Shafer–Fink pair built on `D_k(m)`, `n ≥ 1`.
pub fn sf_d_bounds(kappa: Kappa, n: usize) -> Result<BoundPair> {
    let (target, seq) = match kappa {
        Kappa::Three => (Target::SfD3, SeqId::SfD3),
        Kappa::Pi => (Target::SfDpi, SeqId::SfDpi),
    };
    target.check_order(n)?;
    let coeffs = CoeffSeq::shared(seq).prefix(n + 1);
    let wd = wd_bound_pair(&coeffs, n, &sf_d_endpoint_value(kappa), &PiConstant::one())?;
    Ok(BoundPair::assemble(target, n, wd.lower, wd.upper))
}

/// Order-`n` Shafer–Fink pair in denominator form built on `E(m)`, `n ≥ 2`.
///
/// The numerators come from `h(x) = (2 + √(1−x²))·arcsin x = Σ E(m) x^(2m+1)`
/// with `h(1) = π`, after removing the common `3x` term from both sides.
pub fn sf_e_bounds(n: usize) -> Result<BoundPair> {
    Target::SfE.check_order(n)?;
    let coeffs = CoeffSeq::shared(SeqId::SfE).prefix(n + 1);
    let wd = wd_bound_pair(&coeffs, n, &PiConstant::pi(), &PiConstant::one())?;
    let drop_linear = |poly: &ExactPoly| {
        let mut dense = poly.to_dense();
        dense[0] -= &PiConstant::from(3);
        debug_assert!(dense[0].is_empty());
        OddPoly::from_dense(&dense)
    };
    Ok(BoundPair::assemble(
        Target::SfE,
        n,
        drop_linear(&wd.lower),
        drop_linear(&wd.upper),
    ))
}

/// Evaluates a bound at `x ∈ [0, b]`, rounded to `precision` bits.
pub fn eval_bound(bound: &OddPolyBound, x: &BigFloat, precision: u32) -> Result<BigFloat> {
    check_closed_domain(bound.domain, x)?;
    let (value, _) = bound.materialize(precision + 32).eval(x);
    Ok(value.round_to(precision))
}

pub(crate) fn check_closed_domain(domain: Endpoint, x: &BigFloat) -> Result<()> {
    let b = pi_eval(&domain.value(), x.prec() + 64);
    if x.is_negative() || *x > b || !x.is_finite() {
        return Err(Error::DomainViolation {
            x: x.to_string(),
            domain: format!("[0, {}]", domain.name()),
        });
    }
    Ok(())
}

/// `f(π/2) − Σ_{k=3}^{m} c_k (π/2)^(2k+1)`, the coefficient `G` in
/// `upper_m(x) − lower_m(x) = G·(2x/π)^(2m+1)`.
pub fn wilker_gap_constant(m: usize) -> Result<PiConstant> {
    Target::Wilker.check_order(m)?;
    let b = Endpoint::HalfPi.value();
    let coeffs = CoeffSeq::shared(SeqId::WilkerC).prefix(m + 1);
    let mut gap = wilker_endpoint_value();
    for (k, c) in coeffs.iter().enumerate().skip(3) {
        gap -= &(c * &b.pow(2 * k as u32 + 1));
    }
    Ok(gap)
}
