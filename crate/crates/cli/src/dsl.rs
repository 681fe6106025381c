//! Ring-spec language.
//!
//! ```text
//! spec := term ("+" term)*
//! term := "Z/" INT | "GF(" INT ")" | "N(" INT "," INT ")"
//! INT  := DIGITS ("^" DIGITS)?
//! ```
//!
//! `Z/n` expands to `Z/p1^e1 + Z/p2^e2 + ...` in increasing prime order;
//! composite moduli that are not prime powers are factored by trial division.
//! `GF(q)` needs a prime power `q`, and `N(q,e)` is `GF(q)[x]/(x^e)`. Whitespace between tokens is ignored.

use std::fmt;

use exunit_core::arith::prime_power;
use exunit_core::{LocalRingSpec, RingSpec};

use crate::factor::{factor, MAX_FACTORABLE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.offset + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_ascii_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(self.pos, format!("expected `{token}`"))
        }
    }

    fn digits(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.error(start, "expected an integer");
        }
        self.pos += len;
        self.text[start..self.pos]
            .parse()
            .or_else(|_| self.error(start, "integer does not fit in 64 bits"))
    }

    fn int(&mut self) -> Result<(usize, u64), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let base = self.digits()?;
        if !self.eat("^") {
            return Ok((start, base));
        }
        let exp = self.digits()?;
        let value = u32::try_from(exp)
            .ok()
            .and_then(|e| base.checked_pow(e))
            .map_or_else(|| self.error(start, "integer does not fit in 64 bits"), Ok)?;
        Ok((start, value))
    }

    fn prime_power(&self, offset: usize, q: u64) -> Result<(u64, u32), ParseError> {
        prime_power(q).map_or_else(|| self.error(offset, format!("{q} is not a prime power")), Ok)
    }

    fn local(&self, offset: usize, spec: exunit_core::Result<LocalRingSpec>) -> Result<LocalRingSpec, ParseError> {
        spec.or_else(|e| self.error(offset, e.to_string()))
    }

    fn term(&mut self, out: &mut Vec<LocalRingSpec>) -> Result<(), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("Z/") {
            let (at, n) = self.int()?;
            if n < 2 {
                return self.error(at, format!("Z/{n} is not a valid modulus (need n >= 2)"));
            }
            if let Some((p, e)) = prime_power(n) {
                out.push(self.local(at, LocalRingSpec::zpe(p, e))?);
                return Ok(());
            }
            if n > MAX_FACTORABLE {
                return self.error(at, format!("Z/{n}: modulus larger than {MAX_FACTORABLE}"));
            }
            for (p, e) in factor(n).expect("2 <= n <= MAX_FACTORABLE") {
                out.push(self.local(at, LocalRingSpec::zpe(p, e))?);
            }
        } else if self.eat("GF(") {
            let (at, q) = self.int()?;
            let (p, d) = self.prime_power(at, q)?;
            self.expect(")")?;
            out.push(self.local(at, LocalRingSpec::gf(p, d))?);
        } else if self.eat("N(") {
            let (at, q) = self.int()?;
            let (p, d) = self.prime_power(at, q)?;
            self.expect(",")?;
            let (eat, e) = self.int()?;
            if e == 0 || e > u32::MAX as u64 {
                return self.error(eat, "nilpotency exponent must be at least 1");
            }
            self.expect(")")?;
            out.push(self.local(at, LocalRingSpec::nilext(p, d, e as u32))?);
        } else {
            return self.error(start, "expected `Z/`, `GF(` or `N(`");
        }
        Ok(())
    }
}

pub fn parse_ring(text: &str) -> Result<RingSpec, ParseError> {
    let mut parser = Parser { text, pos: 0 };
    let mut components = Vec::new();
    parser.term(&mut components)?;
    while !parser.at_end() {
        let at = parser.pos;
        if !parser.eat("+") {
            return parser.error(at, "expected `+` or end of input");
        }
        parser.term(&mut components)?;
    }
    Ok(RingSpec::new(components).expect("at least one term"))
}

/// Canonical text of a ring; `parse_ring(&format_ring(r)) == r`.
pub fn format_ring(ring: &RingSpec) -> String {
    ring.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exunit_core::LocalKind;

    fn kinds(r: &RingSpec) -> Vec<(LocalKind, u64, u32, u32)> {
        r.components()
            .iter()
            .map(|c| (c.kind(), c.characteristic_prime(), c.degree(), c.exponent()))
            .collect()
    }

    #[test]
    fn z_n_expands() {
        let r = parse_ring("Z/12").unwrap();
        assert_eq!(kinds(&r), vec![(LocalKind::Zpe, 2, 1, 2), (LocalKind::Zpe, 3, 1, 1)]);
        assert_eq!(format_ring(&r), "Z/4+Z/3");
    }

    #[test]
    fn mixed_terms() {
        let r = parse_ring("GF(9)+N(4,2)").unwrap();
        assert_eq!(kinds(&r), vec![(LocalKind::Gf, 3, 2, 1), (LocalKind::NilExt, 2, 2, 2)]);
        let r = parse_ring("  GF( 3 ) + Z/ 5 ").unwrap();
        assert_eq!(format_ring(&r), "GF(3)+Z/5");
        assert_eq!(parse_ring("Z/10^7").unwrap().order_saturating(), 10_000_000);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ring("GF(6)").unwrap_err();
        assert_eq!(e.offset, 3);
        assert!(e.message.contains("not a prime power"));
        assert_eq!(parse_ring("Z/1").unwrap_err().offset, 2);
        assert_eq!(parse_ring("Z/0").unwrap_err().offset, 2);
        assert_eq!(parse_ring("Z/4 * Z/3").unwrap_err().offset, 4);
        assert_eq!(parse_ring("").unwrap_err().offset, 0);
        assert_eq!(parse_ring("GF(4").unwrap_err().offset, 4);
        assert_eq!(parse_ring("N(4,0)").unwrap_err().offset, 4);
        assert_eq!(parse_ring("Z/4+").unwrap_err().offset, 4);
        assert!(parse_ring("GF(2^64)").is_err());
        assert!(parse_ring("Z/99999999999999999999").is_err());
    }
}
