use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational};
use crate::{Error, Result};

/// Recursive-descent parser for the polynomial text grammar:
///
/// ```text
/// expr   := ['-'] term (('+'|'-') term)*
/// term   := coeff ('*' factor)* | factor ('*' factor)*
/// factor := 'x'INT ('^'INT)?
/// coeff  := INT | INT'/'INT
/// ```
///
/// Whitespace is ignored; there is no implicit multiplication. Parsing the
/// printer's output reproduces the polynomial exactly.
pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        n,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let (coeff, mut exponents) = match self.peek() {
            Some(b) if b.is_ascii_digit() => (self.coeff()?, vec![0u32; self.n]),
            Some(b'x') => {
                let mut e = vec![0u32; self.n];
                self.factor(&mut e)?;
                (Rational::one(), e)
            }
            _ => return Err(self.error("expected a coefficient or a variable")),
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exponents)?;
        }
        Ok(Polynomial::monomial(self.n, Monomial::new(exponents), coeff))
    }

    fn factor(&mut self, exponents: &mut [u32]) -> Result<()> {
        match self.peek() {
            Some(b'x') => self.pos += 1,
            _ => return Err(self.error("expected a variable factor `x<i>`")),
        }
        let idx_pos = self.pos;
        let idx = self.integer()? as usize;
        if idx < 1 || idx > self.n {
            return Err(Error::Parse {
                pos: idx_pos,
                msg: format!("variable index {idx} out of 1..{}", self.n),
            });
        }
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            exp = self.integer()? as u32;
        }
        exponents[idx - 1] += exp;
        Ok(())
    }

    fn coeff(&mut self) -> Result<Rational> {
        let numer = self.big_integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom_pos = self.pos;
            let denom = self.big_integer()?;
            if denom.is_zero() {
                return Err(Error::Parse {
                    pos: denom_pos,
                    msg: "zero denominator".to_string(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<u64> {
        let pos = self.pos;
        self.digits()?.parse().map_err(|_| Error::Parse {
            pos,
            msg: "integer too large".to_string(),
        })
    }

    fn big_integer(&mut self) -> Result<BigInt> {
        Ok(self.digits()?.parse().expect("digits parse as BigInt"))
    }
}
