//! Reading and printing polynomials in `x`, `y`, `t`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := 'x' | 'y' | 't' | number | '(' expr ')' | '-' factor
//! number := digits ('/' digits)?
//! ```
//!
//! Whitespace is ignored between tokens. The only juxtaposition accepted is
//! a number directly followed by a variable, so `3x` is `3*x` but `3yt` and
//! `xy` are rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::MultiIndex;
use crate::{Poly3, Rational, DEFAULT_MAX_DEGREE};

/// Largest exponent accepted on a constant base.
const MAX_CONST_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    DivisionByZero,
    /// Result degree above the configured maximum.
    DegreeOverflow {
        degree: u64,
        max: u32,
    },
    ExponentTooLarge,
}

/// A syntax error at byte `offset` of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected '{c}' at offset {}", self.offset)?,
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input at offset {}", self.offset)?,
            ParseErrorKind::DivisionByZero => write!(f, "zero denominator at offset {}", self.offset)?,
            ParseErrorKind::DegreeOverflow { degree, max } => {
                write!(f, "degree {degree} exceeds maximum {max} at offset {}", self.offset)?
            }
            ParseErrorKind::ExponentTooLarge => write!(f, "exponent too large at offset {}", self.offset)?,
        }
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug)]
pub struct ParseOptions {
    /// Maximum Heisenberg degree of any intermediate or final result.
    pub max_degree: u32,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self { max_degree: DEFAULT_MAX_DEGREE }
    }
}

pub fn parse(s: &str) -> Result<Poly3, ParseError> {
    parse_with(s, ParseOptions::default())
}

pub fn parse_with(s: &str, opts: ParseOptions) -> Result<Poly3, ParseError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, opts };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    opts: ParseOptions,
}

const BASE_START: &[&str] = &["'x'", "'y'", "'t'", "number", "'('", "'-'"];

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        let kind = match std::str::from_utf8(&self.src[self.pos..]).ok().and_then(|s| s.chars().next()) {
            Some(c) => ParseErrorKind::UnexpectedChar(c),
            None if self.pos < self.src.len() => ParseErrorKind::UnexpectedChar(char::REPLACEMENT_CHARACTER),
            None => ParseErrorKind::UnexpectedEnd,
        };
        ParseError { offset: self.pos, kind, expected: expected.to_vec() }
    }

    fn error_at(&self, offset: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { offset, kind, expected: Vec::new() }
    }

    fn check_degree(&self, p: &Poly3, offset: usize) -> Result<(), ParseError> {
        match p.max_heisenberg_degree() {
            Some(d) if d > self.opts.max_degree => Err(self
                .error_at(offset, ParseErrorKind::DegreeOverflow { degree: u64::from(d), max: self.opts.max_degree })),
            _ => Ok(()),
        }
    }

    fn expr(&mut self) -> Result<Poly3, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly3, ParseError> {
        let start = self.pos;
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = &acc * &rhs;
            self.check_degree(&acc, start)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly3, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        self.exponent(base)
    }

    fn exponent(&mut self, base: Poly3) -> Result<Poly3, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits().ok_or_else(|| self.unexpected(&["unsigned integer"]))?;
        let too_large = || self.error_at(at, ParseErrorKind::ExponentTooLarge);
        let e: u32 = digits.parse().map_err(|_| too_large())?;
        match base.max_heisenberg_degree() {
            Some(d) if d > 0 => {
                let degree = u64::from(d) * u64::from(e);
                if degree > u64::from(self.opts.max_degree) {
                    return Err(self.error_at(at, ParseErrorKind::DegreeOverflow { degree, max: self.opts.max_degree }));
                }
            }
            Some(_) if e > MAX_CONST_EXPONENT => return Err(too_large()),
            _ => {}
        }
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn variable(&mut self) -> Option<Poly3> {
        let idx = match self.src.get(self.pos)? {
            b'x' => MultiIndex::new(1, 0, 0),
            b'y' => MultiIndex::new(0, 1, 0),
            b't' => MultiIndex::new(0, 0, 1),
            _ => return None,
        };
        self.pos += 1;
        Some(Poly3::monomial(idx, Rational::one()))
    }

    fn base(&mut self) -> Result<Poly3, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.unexpected(&["')'", "'+'", "'-'", "'*'", "'^'"]));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let c = self.number()?;
                // Coefficient directly before a single variable: `3x`, `1/2t^2`.
                match self.variable() {
                    Some(v) => {
                        let v = self.exponent(v)?;
                        let out = v.scale(&c);
                        self.check_degree(&out, start)?;
                        Ok(out)
                    }
                    None => Ok(Poly3::constant(c)),
                }
            }
            Some(_) => self.variable().ok_or_else(|| self.unexpected(BASE_START)),
            None => Err(self.unexpected(BASE_START)),
        }
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let num: BigInt = self.digits().expect("caller checked a digit").parse().unwrap();
        if self.src.get(self.pos) != Some(&b'/') {
            return Ok(Rational::from_integer(num));
        }
        self.pos += 1;
        let at = self.pos;
        let den: BigInt = self.digits().ok_or_else(|| self.unexpected(&["digits"]))?.parse().unwrap();
        if den.is_zero() {
            return Err(self.error_at(at, ParseErrorKind::DivisionByZero));
        }
        Ok(Rational::new(num, den))
    }
}

fn format_monomial(m: &MultiIndex) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("x", m.b1), ("y", m.b2), ("t", m.b3)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical text: terms by descending Heisenberg degree, then descending
/// exponents of x, y, t.
pub fn format(p: &Poly3) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        let mono = format_monomial(m);
        if mono.is_empty() {
            out.push_str(&format_rational(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&a));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_counterexample() {
        let p = parse("x - 3*y*t - 2*x^3").unwrap();
        let expected = Poly3::from_terms([
            (MultiIndex::new(1, 0, 0), q(1, 1)),
            (MultiIndex::new(0, 1, 1), q(-3, 1)),
            (MultiIndex::new(3, 0, 0), q(-2, 1)),
        ]);
        assert_eq!(p, expected);
        assert_eq!(format(&p), "-2*x^3 - 3*y*t + x");
    }

    #[test]
    fn zero_and_expansion() {
        assert!(parse("0").unwrap().is_zero());
        assert_eq!(format(&Poly3::zero()), "0");
        assert_eq!(parse("(x+y)^2").unwrap(), parse("x^2 + 2*x*y + y^2").unwrap());
        assert_eq!(format(&Poly3::monomial(MultiIndex::new(0, 0, 1), q(1, 2))), "1/2*t");
    }

    #[test]
    fn unary_minus_and_rationals() {
        assert_eq!(parse("-x^2").unwrap(), parse("-1*x*x").unwrap());
        assert_eq!(parse("--x").unwrap(), parse("x").unwrap());
        assert_eq!(parse("2/4*t").unwrap(), parse("1/2*t").unwrap());
        assert_eq!(parse("-2^2").unwrap(), parse("-4").unwrap());
        assert_eq!(parse(" x -\t-y ").unwrap(), parse("x+y").unwrap());
    }

    #[test]
    fn coefficient_juxtaposition() {
        assert_eq!(parse("3x").unwrap(), parse("3*x").unwrap());
        assert_eq!(parse("1/2t^2").unwrap(), parse("1/2*t^2").unwrap());
        let e = parse("3yt").unwrap_err();
        assert_eq!(e.offset, 2);
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar('t'));
        assert!(parse("xy").is_err());
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse("").unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(parse("x +").unwrap_err().offset, 3);
        assert_eq!(parse("(x").unwrap_err().offset, 2);
        let e = parse("x $").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.expected.contains(&"'+'"));
        assert_eq!(parse("x^").unwrap_err().expected, vec!["unsigned integer"]);
        assert_eq!(parse("1/0").unwrap_err().kind, ParseErrorKind::DivisionByZero);
        assert_eq!(parse("3.5").unwrap_err().offset, 1);
    }

    #[test]
    fn degree_limits() {
        assert!(parse("t^4").is_ok());
        assert!(matches!(parse("t^5").unwrap_err().kind, ParseErrorKind::DegreeOverflow { .. }));
        assert!(matches!(parse("x^5*x^5").unwrap_err().kind, ParseErrorKind::DegreeOverflow { .. }));
        assert!(parse("x^99999999999").is_err());
        assert!(parse("2^64").is_ok());
        assert_eq!(parse("2^65").unwrap_err().kind, ParseErrorKind::ExponentTooLarge);
        assert!(parse("(x-x)^100").is_ok());
        assert!(parse_with("x^12", ParseOptions { max_degree: 12 }).is_ok());
    }

    #[test]
    fn display_uses_canonical_format() {
        let p = parse("1/3 - x*y + 2*t").unwrap();
        assert_eq!(p.to_string(), "-x*y + 2*t + 1/3");
    }
}
