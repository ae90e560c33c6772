//! Complex-valued arithmetic expressions such as `-2+3i`, `1057pi^2` or
//! `sqrt(2)/2`.

use std::f64::consts::{E, PI, SQRT_2, TAU};
use std::fmt;

use hyperphase::cplx::C64;

#[derive(Clone, Debug, PartialEq)]
pub struct ParseError {
    /// Byte offset into the full input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Cursor over an input string; `offset` shifts reported positions when
/// the text is a slice of a larger argument.
pub struct Parser<'a> {
    text: &'a str,
    pos: usize,
    offset: usize,
}

impl<'a> Parser<'a> {
    pub fn new(text: &'a str, offset: usize) -> Self {
        Parser { text, pos: 0, offset }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.offset + self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let message = match self.peek() {
                Some(found) => format!("expected '{c}', found '{found}'"),
                None => format!("expected '{c}', found end of input"),
            };
            Err(self.error(message))
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    /// Consumes a run of identifier characters.
    pub fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(_, c)| !(c.is_alphanumeric() || c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += len;
        &rest[..len]
    }

    pub fn expr(&mut self) -> Result<C64, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_implicit_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == '(' || c.is_alphabetic())
    }

    fn term(&mut self) -> Result<C64, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc *= self.unary()?;
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary()?;
                if d == C64::new(0.0, 0.0) {
                    self.pos = at;
                    return Err(self.error("division by zero"));
                }
                acc /= d;
            } else if self.starts_implicit_factor() {
                // implicit multiplication: 2pi, 3i, 2(1+i)
                acc *= self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<C64, ParseError> {
        if self.eat('-') {
            // 0 − v keeps a +0 imaginary part, so sqrt(-4) = 2i
            Ok(C64::new(0.0, 0.0) - self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<C64, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let exponent = self.unary()?;
        if exponent.im != 0.0 {
            return Err(self.error("exponents must be real"));
        }
        let n = exponent.re;
        if n.fract() == 0.0 && n.abs() <= i32::MAX as f64 {
            Ok(base.powi(n as i32))
        } else {
            Ok(base.powf(n))
        }
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        let rest = self.rest();
        let bytes = rest.as_bytes();
        let mut len = 0;
        while len < bytes.len() && (bytes[len].is_ascii_digit() || bytes[len] == b'.') {
            len += 1;
        }
        // scientific notation only when digits follow the 'e'
        if len < bytes.len() && (bytes[len] == b'e' || bytes[len] == b'E') {
            let mut k = len + 1;
            if k < bytes.len() && (bytes[k] == b'+' || bytes[k] == b'-') {
                k += 1;
            }
            if k < bytes.len() && bytes[k].is_ascii_digit() {
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                len = k;
            }
        }
        let value = rest[..len].parse::<f64>().map_err(|_| self.error(format!("bad number '{}'", &rest[..len])))?;
        self.pos += len;
        Ok(value)
    }

    fn atom(&mut self) -> Result<C64, ParseError> {
        let Some(c) = self.peek() else {
            return Err(self.error("expected a number, found end of input"));
        };
        if c.is_ascii_digit() || c == '.' {
            return Ok(C64::new(self.number()?, 0.0));
        }
        if self.eat('(') {
            let v = self.expr()?;
            self.expect(')')?;
            return Ok(v);
        }
        if c.is_alphabetic() {
            let start = self.pos;
            let name = self.ident();
            let value = match name {
                "i" => C64::i(),
                "pi" | "π" => C64::new(PI, 0.0),
                "tau" => C64::new(TAU, 0.0),
                "e" => C64::new(E, 0.0),
                "sqrt2" => C64::new(SQRT_2, 0.0),
                "sqrt3" => C64::new(3f64.sqrt(), 0.0),
                "sqrt" => {
                    self.expect('(')?;
                    let v = self.expr()?;
                    self.expect(')')?;
                    v.sqrt()
                }
                _ => {
                    self.pos = start;
                    return Err(self.error(format!("unknown name '{name}'")));
                }
            };
            return Ok(value);
        }
        Err(self.error(format!("unexpected '{c}'")))
    }
}

/// Parses a whole string as one complex expression.
pub fn parse_complex(text: &str) -> Result<C64, ParseError> {
    let mut p = Parser::new(text, 0);
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// Parses a real-valued expression.
pub fn parse_real(text: &str) -> Result<f64, ParseError> {
    let v = parse_complex(text)?;
    if v.im != 0.0 {
        return Err(ParseError {
            position: 0,
            message: format!("expected a real number, got {v}"),
        });
    }
    Ok(v.re)
}

/// Parses `a:b` into an ordered pair of reals.
pub fn parse_range(text: &str) -> Result<(f64, f64), ParseError> {
    let Some((a, b)) = text.split_once(':') else {
        return Err(ParseError {
            position: 0,
            message: "expected a range 'a:b'".into(),
        });
    };
    let lo = parse_real(a)?;
    let hi = parse_real(b).map_err(|e| ParseError {
        position: e.position + a.len() + 1,
        ..e
    })?;
    Ok((lo, hi))
}
