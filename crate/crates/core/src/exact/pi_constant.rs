use std::collections::BTreeMap;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// An exact real `Σ q_e·π^e` with rational `q_e` and integer exponents `e`.
///
/// The term map never stores a zero coefficient, so structural equality is
/// numeric equality (π is transcendental).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PiConstant {
    terms: BTreeMap<i32, Rational>,
}

impl PiConstant {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(q: Rational) -> Self {
        Self::monomial(q, 0)
    }

    /// `q·π^e`.
    pub fn monomial(q: Rational, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(e, q);
        }
        PiConstant { terms }
    }

    /// `π^e`.
    pub fn pi_pow(e: i32) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn pi() -> Self {
        Self::pi_pow(1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut out = PiConstant::zero();
        for (e, q) in terms {
            out.add_term(e, q);
        }
        out
    }

    fn add_term(&mut self, e: i32, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> + '_ {
        self.terms.iter().map(|(e, q)| (*e, q))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The rational value, if this constant has no π dependence.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn exponents(&self) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().copied()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return PiConstant::zero();
        }
        PiConstant {
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    /// Multiply by `π^k`.
    pub fn shift_pi(&self, k: i32) -> Self {
        PiConstant {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Inverse of a single-term constant `q·π^e`, i.e. `q⁻¹·π^-e`.
    pub fn monomial_inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((e, q)) if self.terms.len() == 1 => Some(Self::monomial(q.recip(), -e)),
            _ => None,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = PiConstant::rational(Rational::one());
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Integer power for single-term constants, including negative exponents.
    pub fn monomial_powi(&self, n: i32) -> Option<Self> {
        if self.terms.len() > 1 {
            return None;
        }
        let base = if n < 0 {
            self.monomial_inverse()?
        } else {
            self.clone()
        };
        Some(base.pow(n.unsigned_abs()))
    }

    /// `Σ |q_e|`; a crude magnitude proxy useful in error estimates.
    pub fn abs_coeff_sum(&self) -> Rational {
        self.terms.values().map(|q| q.abs()).sum()
    }
}

impl From<Rational> for PiConstant {
    fn from(q: Rational) -> Self {
        PiConstant::rational(q)
    }
}

impl From<i64> for PiConstant {
    fn from(n: i64) -> Self {
        PiConstant::rational(Rational::from_integer(n.into()))
    }
}

impl Add<&PiConstant> for &PiConstant {
    type Output = PiConstant;
    fn add(self, rhs: &PiConstant) -> PiConstant {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&PiConstant> for PiConstant {
    fn add_assign(&mut self, rhs: &PiConstant) {
        for (e, q) in &rhs.terms {
            self.add_term(*e, q.clone());
        }
    }
}

impl SubAssign<&PiConstant> for PiConstant {
    fn sub_assign(&mut self, rhs: &PiConstant) {
        for (e, q) in &rhs.terms {
            self.add_term(*e, -q.clone());
        }
    }
}

impl Sub<&PiConstant> for &PiConstant {
    type Output = PiConstant;
    fn sub(self, rhs: &PiConstant) -> PiConstant {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&PiConstant> for &PiConstant {
    type Output = PiConstant;
    fn mul(self, rhs: &PiConstant) -> PiConstant {
        let mut out = PiConstant::zero();
        for (ea, qa) in &self.terms {
            for (eb, qb) in &rhs.terms {
                out.add_term(ea + eb, qa * qb);
            }
        }
        out
    }
}

impl Neg for &PiConstant {
    type Output = PiConstant;
    fn neg(self) -> PiConstant {
        PiConstant {
            terms: self.terms.iter().map(|(e, q)| (*e, -q.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<PiConstant> for PiConstant {
            type Output = PiConstant;
            fn $method(self, rhs: PiConstant) -> PiConstant {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PiConstant> for PiConstant {
            type Output = PiConstant;
            fn $method(self, rhs: &PiConstant) -> PiConstant {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PiConstant {
    type Output = PiConstant;
    fn neg(self) -> PiConstant {
        -&self
    }
}

impl Zero for PiConstant {
    fn zero() -> Self {
        PiConstant::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PiConstant {
    fn one() -> Self {
        PiConstant::rational(Rational::one())
    }
}

impl Sum for PiConstant {
    fn sum<I: Iterator<Item = PiConstant>>(iter: I) -> Self {
        iter.fold(PiConstant::zero(), |mut acc, c| {
            acc += &c;
            acc
        })
    }
}

impl<'a> Sum<&'a PiConstant> for PiConstant {
    fn sum<I: Iterator<Item = &'a PiConstant>>(iter: I) -> Self {
        iter.fold(PiConstant::zero(), |mut acc, c| {
            acc += c;
            acc
        })
    }
}
