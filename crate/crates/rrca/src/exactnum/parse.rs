//! Parsing and rendering of cyclotomic literals.
//!
//! Grammar:
//!   expression := term (('+'|'-') term)*
//!   term       := rational ['*' 'z' ['^' integer]] | 'z' ['^' integer]
//!   rational   := integer ['/' positive-integer]
//! where `z` denotes zeta_N for the ambient order N.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::cyclotomic::{CycloField, Cyclotomic};
use super::{rational_to_string, ExactNumError, Integer, Rational};

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<Integer, ExactNumError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.bytes.get(self.pos), Some(b'+') | Some(b'-')) {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(ExactNumError::Parse(format!(
                "expected an integer at position {start}"
            )));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse()
            .map_err(|_| ExactNumError::Parse(format!("invalid integer `{text}`")))
    }

    fn rational(&mut self) -> Result<Rational, ExactNumError> {
        let n = self.integer()?;
        if self.eat(b'/') {
            let d = self.integer()?;
            if d <= Integer::zero() {
                return Err(ExactNumError::Parse(
                    "denominator must be a positive integer".into(),
                ));
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }
}

/// Parses a cyclotomic literal in the ambient field, e.g. `"1/2"`, `"z^3"`,
/// `"-2*z"`, `"1-z+3/4*z^2"`.
pub fn parse_cyclotomic(field: &CycloField, input: &str) -> Result<Cyclotomic, ExactNumError> {
    let mut lex = Lexer::new(input);
    let mut acc = field.zero();
    if lex.peek().is_none() {
        return Err(ExactNumError::Parse("empty cyclotomic literal".into()));
    }
    let mut sign = if lex.eat(b'-') {
        -Rational::one()
    } else {
        let _ = lex.eat(b'+');
        Rational::one()
    };
    loop {
        let term = parse_term(field, &mut lex)?;
        acc = &acc + &term.scale(&sign);
        match lex.peek() {
            None => break,
            Some(b'+') => {
                lex.bump();
                sign = Rational::one();
            }
            Some(b'-') => {
                lex.bump();
                sign = -Rational::one();
            }
            Some(c) => {
                return Err(ExactNumError::Parse(format!(
                    "unexpected character `{}` in cyclotomic literal",
                    c as char
                )));
            }
        }
    }
    Ok(acc)
}

fn parse_term(field: &CycloField, lex: &mut Lexer) -> Result<Cyclotomic, ExactNumError> {
    if lex.eat(b'z') {
        return parse_zeta_power(field, lex, Rational::one());
    }
    let coeff = lex.rational()?;
    if lex.eat(b'*') {
        if !lex.eat(b'z') {
            return Err(ExactNumError::Parse("expected `z` after `*`".into()));
        }
        return parse_zeta_power(field, lex, coeff);
    }
    Ok(field.from_rational(coeff))
}

fn parse_zeta_power(
    field: &CycloField,
    lex: &mut Lexer,
    coeff: Rational,
) -> Result<Cyclotomic, ExactNumError> {
    let exp = if lex.eat(b'^') {
        let e = lex.integer()?;
        i64::try_from(e.clone())
            .map_err(|_| ExactNumError::Parse(format!("exponent `{e}` out of range")))?
    } else {
        1
    };
    Ok(field.zeta_pow(exp).scale(&coeff))
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if k == 0 {
                rational_to_string(&mag)
            } else {
                let z = if k == 1 { "z".to_string() } else { format!("z^{k}") };
                if mag.is_one() {
                    z
                } else {
                    format!("{}*{}", rational_to_string(&mag), z)
                }
            };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, "-{body}")?;
            } else {
                write!(f, "+{body}")?;
            }
        }
        Ok(())
    }
}
