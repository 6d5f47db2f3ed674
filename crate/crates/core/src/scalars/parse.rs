//! Parser for the canonical string form of [`Scalar`].
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! scalar := poly | "(" poly ")" "/" "(" poly ")"
//! poly   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := integer | var [ "^" exp ]
//! var    := "p" | "q"
//! exp    := ["-"] integer | "(" ["-"] integer ["/2"] ")"
//! ```

use num_bigint::BigInt;
use num_traits::One;

use super::{LaurentPoly, Monomial, Scalar};
use crate::error::{Error, Result};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn small_int(&mut self) -> Result<i32> {
        let neg = self.eat(b'-');
        let v: i32 = self.digits()?.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// Doubled exponent.
    fn exponent(&mut self) -> Result<i32> {
        if self.eat(b'(') {
            let v = self.small_int()?;
            let e = if self.eat(b'/') {
                if self.digits()? != "2" {
                    return Err(self.err("only halves are allowed"));
                }
                v
            } else {
                2 * v
            };
            self.expect(b')')?;
            Ok(e)
        } else {
            Ok(2 * self.small_int()?)
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut m = Monomial::ONE;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let d: BigInt = self.digits()?.parse().unwrap();
                    coeff *= d;
                }
                Some(v @ (b'p' | b'q')) => {
                    self.pos += 1;
                    let e = if self.eat(b'^') { self.exponent()? } else { 2 };
                    if v == b'p' {
                        m.p += e;
                    } else {
                        m.q += e;
                    }
                }
                _ => return Err(self.err("expected a factor")),
            }
            if !self.eat(b'*') {
                return Ok((m, coeff));
            }
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(LaurentPoly::from_terms(terms));
            }
        }
    }
}

pub(super) fn parse_scalar(s: &str) -> Result<Scalar> {
    let cleaned: Vec<u8> = s.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
    let mut cur = Cursor { s: &cleaned, pos: 0 };
    let result = if cur.peek() == Some(b'(') {
        cur.pos += 1;
        let num = cur.poly()?;
        cur.expect(b')')?;
        cur.expect(b'/')?;
        cur.expect(b'(')?;
        let den = cur.poly()?;
        cur.expect(b')')?;
        Scalar::new(num, den)?
    } else {
        Scalar::from_poly(cur.poly()?)
    };
    if cur.pos != cleaned.len() {
        return Err(cur.err("trailing input"));
    }
    Ok(result)
}
