//! Canonical text form of [`PiConstant`].
//!
//! Terms appear in ascending π-exponent order. A rational prints as `a/b`
//! (or `a` when the denominator is 1); a π term prints as `q*pi^e`, with the
//! `q*` omitted when `|q| = 1`. The first term carries a bare leading `-`
//! when negative; later terms are joined by ` + ` or ` - `. Zero prints as
//! `0`. The parser also accepts `pi` for `pi^1` and surrounding whitespace.
//!
//! ```text
//! 1 - 1/3*pi^1
//! -181/60 + pi^1
//! 2*pi^-1 - 1/45*pi^3 + 1/3780*pi^5
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::PiConstant;
use crate::error::Error;
use crate::Rational;

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for PiConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, q)) in self.terms().enumerate() {
            let magnitude = q.abs();
            match (i, q.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write_rational(f, &magnitude)?;
            } else {
                if !magnitude.is_one() {
                    write_rational(f, &magnitude)?;
                    f.write_str("*")?;
                }
                write!(f, "pi^{e}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{} at byte {}", reason.into(), self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.input[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.input[start..self.pos])
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        let d = self.digits().ok_or_else(|| self.error("expected digits"))?;
        d.parse().map_err(|_| self.error("bad integer"))
    }

    fn exponent(&mut self) -> Result<i32, Error> {
        if !self.eat("^") {
            return Ok(1);
        }
        let negative = self.eat("-");
        let d = self
            .digits()
            .ok_or_else(|| self.error("expected exponent"))?;
        let e: i32 = d.parse().map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -e } else { e })
    }

    /// One unsigned term: `a`, `a/b`, `pi^e`, or `a/b*pi^e`.
    fn term(&mut self) -> Result<(i32, Rational), Error> {
        if self.eat("pi") {
            return Ok((self.exponent()?, Rational::one()));
        }
        let numer = self.integer()?;
        let denom = if self.eat("/") {
            self.integer()?
        } else {
            BigInt::one()
        };
        if denom.is_zero() {
            return Err(self.error("zero denominator"));
        }
        let q = Rational::new(numer, denom);
        if self.eat("*") {
            if !self.eat("pi") {
                return Err(self.error("expected pi after '*'"));
            }
            Ok((self.exponent()?, q))
        } else {
            Ok((0, q))
        }
    }
}

impl FromStr for PiConstant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser {
            input: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let mut out = PiConstant::zero();
        p.skip_ws();
        let mut negative = p.eat("-");
        loop {
            p.skip_ws();
            let (e, q) = p.term()?;
            out += &PiConstant::monomial(if negative { -q } else { q }, e);
            p.skip_ws();
            if p.pos == p.bytes.len() {
                return Ok(out);
            }
            negative = if p.eat("+") {
                false
            } else if p.eat("-") {
                true
            } else {
                return Err(p.error("expected '+' or '-'"));
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(PiConstant::zero().to_string(), "0");
        let c = PiConstant::from_terms([(0, rat(1, 1)), (1, rat(-1, 3))]);
        assert_eq!(c.to_string(), "1 - 1/3*pi^1");
        let c = PiConstant::from_terms([(0, rat(-181, 60)), (1, rat(1, 1))]);
        assert_eq!(c.to_string(), "-181/60 + pi^1");
        let c = PiConstant::from_terms([(-1, rat(2, 1)), (3, rat(-1, 45)), (5, rat(1, 3780))]);
        assert_eq!(c.to_string(), "2*pi^-1 - 1/45*pi^3 + 1/3780*pi^5");
        assert_eq!(PiConstant::monomial(rat(-1, 1), 2).to_string(), "-pi^2");
    }

    #[test]
    fn lenient_parsing() {
        let c: PiConstant = "1 - pi".parse().unwrap();
        assert_eq!(c, PiConstant::from_terms([(0, rat(1, 1)), (1, rat(-1, 1))]));
        let c: PiConstant = "  -2/4*pi^-2+3 ".parse().unwrap();
        assert_eq!(
            c,
            PiConstant::from_terms([(-2, rat(-1, 2)), (0, rat(3, 1))])
        );
        assert_eq!("0".parse::<PiConstant>().unwrap(), PiConstant::zero());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "1 +", "pi^", "2*x", "1 2", "--1"] {
            assert!(bad.parse::<PiConstant>().is_err(), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(terms in prop::collection::vec((-6i32..=6, -1000i64..=1000, 1i64..=999), 0..5)) {
            let c = PiConstant::from_terms(terms.into_iter().map(|(e, n, d)| (e, rat(n, d))));
            let text = c.to_string();
            let back: PiConstant = text.parse().unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
