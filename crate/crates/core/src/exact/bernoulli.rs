use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use crate::scalar::from_integer;
use crate::Rational;

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static FACTORIAL: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// Largest index served by the memoized recurrence.
const RECURRENCE_LIMIT: usize = 200;

/// Largest `n` whose `n!` is memoized.
const FACTORIAL_MEMO_LIMIT: usize = 2048;

/// Bernoulli number `B_n` with the convention `B_1 = -1/2`.
///
/// Up to index 200 values come from the recurrence
/// `Σ_{j=0}^{m} C(m+1, j)·B_j = 0` and are memoized process-wide. Larger even
/// indices use `|B_2k| = 2·(2k)!·ζ(2k)/(2π)^(2k)` with the exact denominator
/// from von Staudt–Clausen, evaluated with enough bits to round the numerator.
pub fn bernoulli(n: usize) -> Rational {
    if n > RECURRENCE_LIMIT {
        return if n % 2 == 1 {
            Rational::zero()
        } else {
            bernoulli_zeta(n)
        };
    }
    if let Some(b) = BERNOULLI.read().unwrap().get(n) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().unwrap();
    while table.len() <= n {
        let m = table.len();
        let next = match m {
            0 => Rational::one(),
            1 => Rational::new((-1).into(), 2.into()),
            _ if m % 2 == 1 => Rational::zero(),
            _ => {
                // B_m = -(1/(m+1)) Σ_{j<m} C(m+1, j) B_j
                let mut binom = BigInt::one();
                let mut sum = Rational::zero();
                for (j, b) in table.iter().enumerate() {
                    if !b.is_zero() {
                        sum += b * Rational::from_integer(binom.clone());
                    }
                    binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
                }
                -sum / Rational::from_integer(BigInt::from(m + 1))
            }
        };
        table.push(next);
    }
    table[n].clone()
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `Π p` over primes with `(p − 1) | n`, the denominator of `B_n` for even `n ≥ 2`.
fn staudt_denominator(n: usize) -> Integer {
    (1..=n)
        .filter(|d| n % d == 0 && is_prime(d + 1))
        .fold(Integer::from(1), |acc, d| acc * (d as u32 + 1))
}

/// `ζ(n)` for large `n` via the Euler product truncated where `p^(−n) < 2^(−prec−8)`.
///
/// Each factor `p^(−n)` is formed at only the precision its size needs.
fn zeta_even(n: u32, prec: u32) -> Float {
    let mut inverse = Float::with_val(prec, 1u32);
    for p in (2u32..).filter(|&p| is_prime(p as usize)) {
        let magnitude_bits = (n as f64 * (p as f64).log2()).floor() as u32;
        if magnitude_bits > prec + 8 {
            break;
        }
        let w = prec.saturating_sub(magnitude_bits).max(32) + 16;
        let term = Float::with_val(w, Float::u_pow_u(p, n)).recip();
        inverse *= Float::with_val(prec, 1u32) - term;
    }
    inverse.recip()
}

fn bernoulli_zeta(n: usize) -> Rational {
    let denom = staudt_denominator(n);
    let fact = Integer::from(Integer::factorial(n as u32));
    let index_bits = usize::BITS - n.leading_zeros();
    // log2|numerator| ≤ log2(2·n!·denom) − n·log2(2π) + 1
    let two_pi_bits = (n as f64 * std::f64::consts::TAU.log2()).floor() as i64;
    let estimate =
        fact.significant_bits() as i64 + denom.significant_bits() as i64 + 2 - two_pi_bits;
    let prec = (estimate.max(0) as u32) + 96 + 2 * index_bits;

    let zeta = zeta_even(n as u32, prec);
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    let scale = Float::with_val(prec, two_pi.pow(n as u32));
    let magnitude = Float::with_val(prec, Integer::from(&fact * &denom)) * zeta * 2u32 / scale;
    let (numer, _) = magnitude
        .to_integer_round(rug::float::Round::Nearest)
        .expect("finite");
    let numer = if n % 4 == 0 { -numer } else { numer };
    Rational::new(from_integer(&numer), from_integer(&denom))
}

/// `n!`, memoized for small `n`.
pub fn factorial(n: usize) -> BigInt {
    if n > FACTORIAL_MEMO_LIMIT {
        return from_integer(&Integer::from(Integer::factorial(n as u32)));
    }
    if let Some(f) = FACTORIAL.read().unwrap().get(n) {
        return f.clone();
    }
    let mut table = FACTORIAL.write().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    from_integer(&Integer::from(Integer::binomial_u(n as u32, k as u32)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::scalar::to_integer;

    /// Akiyama–Tanigawa: an independent route to the same numbers
    /// (it yields B_1 = +1/2, so only n != 1 is compared).
    fn akiyama_tanigawa(n: usize) -> Vec<Rational> {
        let mut row: Vec<Rational> = Vec::new();
        let mut out = Vec::new();
        for m in 0..=n {
            row.push(Rational::new(1.into(), BigInt::from(m + 1)));
            for j in (1..=m).rev() {
                row[j - 1] = Rational::from_integer(BigInt::from(j)) * (&row[j - 1] - &row[j]);
            }
            out.push(row[0].clone());
        }
        out
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn agrees_with_akiyama_tanigawa() {
        let oracle = akiyama_tanigawa(60);
        for (n, expected) in oracle.iter().enumerate() {
            if n != 1 {
                assert_eq!(&bernoulli(n), expected, "B_{n}");
            }
        }
    }

    #[test]
    fn odd_indices_vanish() {
        for n in (3..=151).step_by(2) {
            assert!(bernoulli(n).is_zero());
        }
    }

    #[test]
    fn defining_recurrence_holds_to_200() {
        for m in 1..=200 {
            let sum: Rational = (0..=m)
                .map(|j| bernoulli(j) * Rational::from_integer(binomial(m + 1, j)))
                .sum();
            assert!(sum.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn large_indices_satisfy_recurrence() {
        // Every B_j with 200 < j ≤ 400 comes from the zeta route.
        for m in (202..=400).step_by(2) {
            let sum: Rational = (0..=m)
                .map(|j| bernoulli(j) * Rational::from_integer(binomial(m + 1, j)))
                .sum();
            assert!(sum.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn zeta_route_matches_recurrence_where_both_apply() {
        for n in (40..=200).step_by(2) {
            assert_eq!(bernoulli_zeta(n), bernoulli(n), "B_{n}");
        }
    }

    #[test]
    fn euler_product_matches_mpfr_zeta() {
        for (n, prec) in [(202u32, 1000u32), (400, 3000), (1000, 9000)] {
            let ours = zeta_even(n, prec);
            let reference = Float::with_val(prec, Float::zeta_u(n));
            let diff = Float::with_val(prec, &ours - &reference).abs();
            assert!(
                diff <= Float::with_val(64, Float::u_exp(1, 8 - prec as i32)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn large_index_has_staudt_denominator() {
        let b = bernoulli(20_002);
        assert_eq!(to_integer(b.denom()), staudt_denominator(20_002));
        assert!(b.numer() > &BigInt::zero());
    }

    #[test]
    fn concurrent_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || bernoulli(40 + 2 * t)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), bernoulli(40 + 2 * t));
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(factorial(3000), &factorial(2999) * BigInt::from(3000));
    }
}
