//! Exact coefficient sequences of the bounded functions.
//!
//! Index `m` of every sequence is the coefficient of `x^(2m+1)`.
//!
//! * [`wilker_c`]: Taylor coefficients of
//!   `1/x + sin 2x/(2x²) − 2 cot x − 8x³/45 + 8x⁵/945`, built from Bernoulli numbers.
//! * [`sf_d`]: coefficients `D_k(m)` of `arcsin x − kx/(2 + √(1−x²))`-type
//!   lower sums, for `k = 3` and `k = π`.
//! * [`sf_e`]: coefficients `E(m)` of `(2 + √(1−x²))·arcsin x`, which give
//!   the denominator-form bounds.

use std::cmp::Ordering;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::Result;
use crate::exact::{bernoulli, binomial, factorial, pi_sign, PiConstant};
use crate::Rational;

/// The multiplier `k` in `kx/(2 + √(1−x²))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kappa {
    Three,
    Pi,
}

impl Kappa {
    pub fn as_constant(self) -> PiConstant {
        match self {
            Kappa::Three => PiConstant::from(3),
            Kappa::Pi => PiConstant::pi(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqId {
    WilkerC,
    SfD3,
    SfDpi,
    SfE,
}

impl SeqId {
    pub const ALL: [SeqId; 4] = [SeqId::WilkerC, SeqId::SfD3, SeqId::SfDpi, SeqId::SfE];

    /// The `m`-th value, computed directly without memoization.
    pub fn value(self, m: usize) -> PiConstant {
        match self {
            SeqId::WilkerC => wilker_c(m),
            SeqId::SfD3 => sf_d(Kappa::Three, m),
            SeqId::SfDpi => sf_d(Kappa::Pi, m),
            SeqId::SfE => sf_e(m),
        }
    }
}

fn pow_int(base: u32, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

fn ratio(numer: BigInt, denom: BigInt) -> Rational {
    Rational::new(numer, denom)
}

/// Wilker coefficient `c_k`: zero for `k ≤ 2`, otherwise
/// `2^(2k+2)·((4k+6)·|B_(2k+2)| + (−1)^(k+1)) / (2k+3)!`.
pub fn wilker_c(k: usize) -> PiConstant {
    if k <= 2 {
        return PiConstant::zero();
    }
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let inner = Rational::from_integer(BigInt::from(4 * k + 6)) * bernoulli(2 * k + 2).abs()
        + Rational::from_integer(BigInt::from(sign));
    let value = inner * Rational::from_integer(pow_int(2, 2 * k + 2))
        / Rational::from_integer(factorial(2 * k + 3));
    PiConstant::rational(value)
}

/// Rational parts `(A, P)` with `D_k(m) = A − k·P`, where
/// `A = C(2m, m)/((2m+1)·4^m)` and
/// `P = (−1)^m/3^(m+1) + Σ_{i<m} (−1)^(m−1−i)·Cat(i)/(2^(2i+1)·3^(m−i))`.
fn sf_d_parts(m: usize) -> (Rational, Rational) {
    let a = ratio(binomial(2 * m, m), BigInt::from(2 * m + 1) * pow_int(4, m));
    // Accumulate P over the common denominator 2^(2m+1)·3^(m+1).
    let signed = |e: usize, v: BigInt| if e % 2 == 0 { v } else { -v };
    let mut numer = signed(m, pow_int(2, 2 * m + 1));
    let mut catalan = BigInt::one();
    for i in 0..m {
        numer += signed(m - 1 - i, &catalan * pow_int(4, m - i) * pow_int(3, i + 1));
        catalan = catalan * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 2);
    }
    let p = ratio(numer, pow_int(2, 2 * m + 1) * pow_int(3, m + 1));
    (a, p)
}

/// `D_k(m)`, taken literally from its closed form for every `m ≥ 0`.
///
/// For `k = 3` indices 0 and 1 vanish; for `k = π` they are `1 − π/3` and
/// `1/6 − π/18`, both negative.
pub fn sf_d(kappa: Kappa, m: usize) -> PiConstant {
    let (a, p) = sf_d_parts(m);
    &PiConstant::rational(a) - &kappa.as_constant().scale(&p)
}

/// `E(m)`, with `E(0) = 3` and `E(1) = 0`.
///
/// These are the Taylor coefficients of `(2 + √(1−x²))·arcsin x`, whose
/// expansion starts `3x + 0·x³ + x⁵/60 + …`.
pub fn sf_e(m: usize) -> PiConstant {
    match m {
        0 => PiConstant::from(3),
        1 => PiConstant::zero(),
        _ => {
            let mf = factorial(m);
            let m1f = factorial(m - 1);
            let first = ratio(
                BigInt::from(m) * factorial(2 * m - 1),
                BigInt::from(2 * m + 1) * pow_int(2, 2 * m - 2) * &mf * &mf,
            );
            let second = ratio(
                BigInt::from(2 * m) * pow_int(2, 2 * m - 2) * &m1f * &m1f,
                factorial(2 * m + 1),
            );
            PiConstant::rational(first - second)
        }
    }
}

/// A lazily extended, memoized coefficient sequence.
#[derive(Debug)]
pub struct CoeffSeq {
    id: SeqId,
    values: RwLock<Vec<PiConstant>>,
}

impl CoeffSeq {
    pub fn new(id: SeqId) -> Self {
        CoeffSeq {
            id,
            values: RwLock::new(Vec::new()),
        }
    }

    /// Process-wide instance for `id`.
    pub fn shared(id: SeqId) -> &'static CoeffSeq {
        static SEQS: [OnceLock<CoeffSeq>; 4] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        let slot = match id {
            SeqId::WilkerC => 0,
            SeqId::SfD3 => 1,
            SeqId::SfDpi => 2,
            SeqId::SfE => 3,
        };
        SEQS[slot].get_or_init(|| CoeffSeq::new(id))
    }

    pub fn id(&self) -> SeqId {
        self.id
    }

    pub fn get(&self, m: usize) -> PiConstant {
        self.prefix(m + 1).pop().expect("nonempty prefix")
    }

    /// The first `len` values.
    pub fn prefix(&self, len: usize) -> Vec<PiConstant> {
        {
            let values = self.values.read().unwrap();
            if values.len() >= len {
                return values[..len].to_vec();
            }
        }
        let mut values = self.values.write().unwrap();
        while values.len() < len {
            let m = values.len();
            values.push(self.id.value(m));
        }
        values[..len].to_vec()
    }
}

/// A coefficient list split into its nonnegative part and the finitely many
/// negative terms that are carried separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSeries {
    /// `C_k = c_k` when `c_k > 0`, else 0.
    pub nonneg: Vec<PiConstant>,
    /// `(j, c_j)` for every index with `c_j < 0`, ascending in `j`.
    pub negative_terms: Vec<(usize, PiConstant)>,
}

impl SplitSeries {
    pub fn negative_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.negative_terms.iter().map(|(j, _)| *j)
    }

    /// The original list, `nonneg[i] + c_i·[i ∈ J]`.
    pub fn reassemble(&self) -> Vec<PiConstant> {
        let mut out = self.nonneg.clone();
        for (j, c) in &self.negative_terms {
            out[*j] += c;
        }
        out
    }
}

/// Splits `coeffs` by exact sign.
pub fn split_nonneg(coeffs: &[PiConstant]) -> Result<SplitSeries> {
    let mut nonneg = Vec::with_capacity(coeffs.len());
    let mut negative_terms = Vec::new();
    for (j, c) in coeffs.iter().enumerate() {
        match pi_sign(c)? {
            Ordering::Greater => nonneg.push(c.clone()),
            Ordering::Equal => nonneg.push(PiConstant::zero()),
            Ordering::Less => {
                nonneg.push(PiConstant::zero());
                negative_terms.push((j, c.clone()));
            }
        }
    }
    Ok(SplitSeries {
        nonneg,
        negative_terms,
    })
}
