//! Recursive-descent parser for ring specs:
//!
//! ```text
//! spec := atom ("*" atom)*
//! atom := "Z/" NAT | "GF(" NAT ")" | base "[x]/(" poly ")" | "Z/4[x]/(2x,x^2-2)"
//! base := "Z/" PRIME | "GF(" PRIMEPOWER ")"
//! poly := term ("+" term)*     term := NAT | NAT? "x" ("^" NAT)?
//! ```
//!
//! Whitespace is ignored between tokens.

use std::fmt;

use super::spec::{Base, RingSpec};
use super::RingError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at position {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn found(&mut self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(c) => format!("'{c}'"),
        }
    }

    fn error(&mut self, expected: impl Into<String>) -> ParseError {
        let found = self.found();
        ParseError {
            position: self.pos,
            expected: expected.into(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("'{c}'")))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<(), ParseError> {
        for c in s.chars() {
            self.expect(c)?;
        }
        Ok(())
    }

    /// Consumes `s` token by token, or restores the position and fails.
    fn try_str(&mut self, s: &str) -> bool {
        let saved = self.pos;
        if self.expect_str(s).is_ok() {
            true
        } else {
            self.pos = saved;
            false
        }
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if digits.is_empty() {
            return Err(self.error("a natural number"));
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| ParseError {
            position: start,
            expected: "a number that fits in 64 bits".into(),
            found: digits,
        })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn spec(&mut self) -> Result<RingSpec, RingError> {
        let mut atoms = vec![self.atom()?];
        while self.eat('*') {
            atoms.push(self.atom()?);
        }
        if !self.at_end() {
            return Err(self.error("'*' or end of input").into());
        }
        RingSpec::product(atoms)
    }

    fn atom(&mut self) -> Result<RingSpec, RingError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let base = match self.peek() {
            Some('Z') => {
                self.expect_str("Z/")?;
                let n = self.nat()?;
                if !self.try_str("[x]/(") {
                    return RingSpec::zmod(n).map_err(|e| self.locate(start, e));
                }
                if n == 4 {
                    if self.try_str("2x,x^2-2)") {
                        return Ok(RingSpec::Ps6);
                    }
                    return Err(self
                        .error("'2x,x^2-2)' (the only supported quotient of Z/4[x])")
                        .into());
                }
                Base::ZMod(n)
            }
            Some('G') => {
                self.expect_str("GF(")?;
                let q = self.nat()?;
                self.expect(')')?;
                if !self.try_str("[x]/(") {
                    return RingSpec::gf(q).map_err(|e| self.locate(start, e));
                }
                Base::Gf(q)
            }
            _ => return Err(self.error("'Z/' or 'GF('").into()),
        };
        let poly_start = {
            self.skip_ws();
            self.pos
        };
        let p = match crate::nt::as_prime_power(base.order()) {
            Some((p, _)) if matches!(base, Base::Gf(_)) || p == base.order() => p,
            _ => {
                return Err(self.locate(
                    start,
                    RingError::InvalidInput(format!(
                        "{base}[x] quotients need a prime (Z/p) or prime-power (GF(q)) base"
                    )),
                ))
            }
        };
        let modulus = self.poly(p)?;
        self.expect(')')?;
        RingSpec::poly_quot(base, modulus).map_err(|e| self.locate(poly_start, e))
    }

    fn locate(&self, position: usize, err: RingError) -> RingError {
        match err {
            RingError::InvalidInput(msg) => RingError::Parse(ParseError {
                position,
                expected: msg,
                found: self.src[position..].chars().take(16).collect(),
            }),
            other => other,
        }
    }

    /// Coefficients (lowest degree first) reduced modulo `p`.
    fn poly(&mut self, p: u64) -> Result<Vec<u64>, ParseError> {
        let mut coeffs: Vec<u64> = Vec::new();
        loop {
            let (c, e) = self.term()?;
            let e = usize::try_from(e)
                .ok()
                .filter(|&e| e <= 4096)
                .ok_or(ParseError {
                    position: self.pos,
                    expected: "an exponent of at most 4096".into(),
                    found: e.to_string(),
                })?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = ((coeffs[e] as u128 + (c % p) as u128) % p as u128) as u64;
            if !self.eat('+') {
                break;
            }
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(coeffs)
    }

    fn term(&mut self) -> Result<(u64, u64), ParseError> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.nat()?),
            Some('x') => None,
            _ => return Err(self.error("a term (NAT, x or x^NAT)")),
        };
        if !self.eat('x') {
            return Ok((coeff.expect("digits were read"), 0));
        }
        let exp = if self.eat('^') { self.nat()? } else { 1 };
        Ok((coeff.unwrap_or(1), exp))
    }
}

/// Parses a ring spec such as `"Z/2 * GF(9)"` or `"GF(2)[x]/(x^3)"`.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec, RingError> {
    Parser::new(text).spec()
}

/// Parses a polynomial with the ring-spec term grammar, reducing
/// coefficients modulo the prime `p`.
pub fn parse_poly(text: &str, p: u64) -> Result<Vec<u64>, ParseError> {
    let mut parser = Parser::new(text);
    let coeffs = parser.poly(p)?;
    if !parser.at_end() {
        return Err(parser.error("'+' or end of input"));
    }
    Ok(coeffs)
}
