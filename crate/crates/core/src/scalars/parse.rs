//! Expression grammar for scalars: integers, named variables, `+ - * /`,
//! `^` with integer exponents, and parentheses. This is the single text
//! format for scalar values in operator files and CLI arguments.

use super::poly::var_index;
use super::rational::Rf;
use super::ScalarError;
use num_bigint::BigInt;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse_scalar(text: &str) -> Result<Rf, ScalarError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ScalarError::Syntax {
            pos: p.pos,
            expected: "end of input".into(),
        });
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Rf, ScalarError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Rf, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let pos = self.pos;
                    let d = self.factor()?;
                    acc = acc.div(&d).map_err(|_| ScalarError::Syntax {
                        pos,
                        expected: "nonzero divisor".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Rf, ScalarError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let e = self.int_literal()?;
                    base.pow(e).map_err(|_| ScalarError::Syntax {
                        pos: self.pos,
                        expected: "invertible base for negative exponent".into(),
                    })
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Rf, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(ScalarError::Syntax {
                        pos: self.pos,
                        expected: "')'".into(),
                    });
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int_literal()?;
                Ok(Rf::from_int(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let name = name.replace('_', "");
                match var_index(&name) {
                    Some(v) => Ok(Rf::var(v)),
                    None => Err(ScalarError::Syntax {
                        pos: start,
                        expected: "known variable name".into(),
                    }),
                }
            }
            _ => Err(ScalarError::Syntax {
                pos: self.pos,
                expected: "integer, variable, or '('".into(),
            }),
        }
    }

    fn int_literal(&mut self) -> Result<i64, ScalarError> {
        self.skip_ws();
        let mut sign = 1i64;
        if self.src.get(self.pos) == Some(&b'-') {
            sign = -1;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ScalarError::Syntax {
                pos: self.pos,
                expected: "integer".into(),
            });
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let n: BigInt = s.parse().unwrap();
        let n: i64 = (&n).try_into().map_err(|_| ScalarError::Syntax {
            pos: start,
            expected: "integer within i64 range".into(),
        })?;
        Ok(sign * n)
    }
}
