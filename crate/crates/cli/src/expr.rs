//! Multivector expression parser.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! expr  := ('+'|'-')? term (('+'|'-') term)*
//! term  := coeff ('*'? blade)? | blade
//! coeff := integer | integer '/' integer | decimal
//! blade := 'e' digit+          (digits strictly ascending, each in 1..n)
//! ```
//!
//! `e13` is the canonical blade e₁e₃; `e31` is rejected. Repeated blades
//! accumulate, and in rational mode every literal (decimals included) is
//! converted exactly.

use std::fmt;

use clifford_sylvester::{Multivector, Scalar, Signature};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_multivector<S: Scalar>(
    text: &str,
    sig: Signature,
) -> Result<Multivector<S>, ParseError> {
    Parser { text: text.as_bytes(), pos: 0, sig }.parse()
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    sig: Signature,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position, message: message.into() })
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse<S: Scalar>(mut self) -> Result<Multivector<S>, ParseError> {
        let mut acc = Multivector::zero(self.sig);
        self.skip_ws();
        if self.peek().is_none() {
            return self.error(self.pos, "empty expression");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = if first {
                if self.eat(b'-') {
                    true
                } else {
                    self.eat(b'+');
                    false
                }
            } else if self.eat(b'+') {
                false
            } else if self.eat(b'-') {
                true
            } else {
                return self.error(self.pos, "expected '+' or '-' between terms");
            };
            first = false;
            self.skip_ws();
            let (coeff, mask) = self.parse_term::<S>()?;
            acc.add_term(mask, if negative { -coeff } else { coeff });
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(acc);
            }
        }
    }

    fn parse_term<S: Scalar>(&mut self) -> Result<(S, usize), ParseError> {
        match self.peek() {
            Some(b'e') => Ok((S::one(), self.parse_blade()?)),
            Some(d) if d.is_ascii_digit() => {
                let coeff = self.parse_coeff::<S>()?;
                self.skip_ws();
                let mask = if self.eat(b'*') {
                    self.skip_ws();
                    if self.peek() != Some(b'e') {
                        return self.error(self.pos, "expected a blade after '*'");
                    }
                    self.parse_blade()?
                } else if self.peek() == Some(b'e') {
                    self.parse_blade()?
                } else {
                    0
                };
                Ok((coeff, mask))
            }
            Some(c) => self.error(
                self.pos,
                format!("expected a coefficient or blade, found '{}'", c as char),
            ),
            None => self.error(self.pos, "expected a coefficient or blade, found end of input"),
        }
    }

    fn digit_run(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.text[start..self.pos]).into_owned()
    }

    fn parse_coeff<S: Scalar>(&mut self) -> Result<S, ParseError> {
        let start = self.pos;
        let int_part = self.digit_run();
        if self.eat(b'.') {
            let frac_start = self.pos;
            let frac = self.digit_run();
            if frac.is_empty() {
                return self.error(frac_start, "expected digits after '.'");
            }
            return S::from_decimal_str(&format!("{int_part}.{frac}"))
                .ok_or_else(|| ParseError {
                    position: start,
                    message: "invalid decimal literal".into(),
                });
        }
        let save = self.pos;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let den_start = self.pos;
            let den = self.digit_run();
            if den.is_empty() {
                return self.error(den_start, "expected an integer denominator");
            }
            let numer = S::from_integer_str(&int_part).ok_or_else(|| ParseError {
                position: start,
                message: "invalid integer literal".into(),
            })?;
            let denom = S::from_integer_str(&den).ok_or_else(|| ParseError {
                position: den_start,
                message: "invalid integer literal".into(),
            })?;
            if denom.is_zero() {
                return self.error(den_start, "zero denominator");
            }
            return Ok(numer / denom);
        }
        self.pos = save;
        S::from_integer_str(&int_part).ok_or_else(|| ParseError {
            position: start,
            message: "invalid integer literal".into(),
        })
    }

    fn parse_blade(&mut self) -> Result<usize, ParseError> {
        debug_assert_eq!(self.peek(), Some(b'e'));
        self.pos += 1;
        let n = self.sig.n();
        let mut mask = 0usize;
        let mut last = 0u32;
        let mut count = 0;
        while let Some(d) = self.peek() {
            if !d.is_ascii_digit() {
                break;
            }
            let idx = u32::from(d - b'0');
            if idx == 0 || idx > n {
                return self.error(
                    self.pos,
                    format!("generator index {idx} out of range for {} (valid: 1..={n})", self.sig),
                );
            }
            if idx <= last {
                return self.error(
                    self.pos,
                    format!("generator indices must be strictly ascending, got e{last} then e{idx}"),
                );
            }
            mask |= 1 << (idx - 1);
            last = idx;
            count += 1;
            self.pos += 1;
        }
        if count == 0 {
            return self.error(self.pos, "expected generator digits after 'e'");
        }
        Ok(mask)
    }
}
