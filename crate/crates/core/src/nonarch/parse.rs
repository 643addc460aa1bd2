//! Text syntax for Laurent elements.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | 't' | 'eps' | 'sqrt1p' '(' expr ')' | '(' expr ')'
//! ```
//!
//! `sqrt1p(x)` is `sqrt(1 + x)` for infinitesimal `x`, expanded through the
//! requested precision; everything else stays an exact rational function.

use num_bigint::BigInt;

use super::LaurentElem;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    prec: i64,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
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
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.peek();
        let end = self.pos + kw.len();
        let matches = self.src.get(self.pos..end) == Some(kw.as_bytes())
            && !self.src.get(end).is_some_and(u8::is_ascii_alphanumeric);
        if matches {
            self.pos = end;
        }
        matches
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.peek();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number, 't', 'eps' or '('"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("nonempty digit run"))
    }

    fn expr(&mut self) -> Result<LaurentElem> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentElem> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.div(&d).map_err(|e| match e {
                    Error::DivideByZero => Error::parse(at, "division by zero"),
                    e => e,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentElem> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<LaurentElem> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let at = self.pos;
        let e: i64 = self
            .integer()?
            .try_into()
            .map_err(|_| Error::parse(at, "exponent too large"))?;
        if e > 10_000 {
            return Err(Error::parse(at, "exponent too large"));
        }
        base.pow(if neg { -e } else { e })
            .map_err(|_| Error::parse(at, "negative power of zero"))
    }

    fn atom(&mut self) -> Result<LaurentElem> {
        if self.eat(b'(') {
            let v = self.expr()?;
            self.expect(b')')?;
            return Ok(v);
        }
        if self.keyword("sqrt1p") {
            self.expect(b'(')?;
            let at = self.pos;
            let arg = self.expr()?;
            self.expect(b')')?;
            return arg
                .sqrt1p(self.prec)
                .map_err(|e| Error::parse(at, format!("sqrt1p: {e}")));
        }
        if self.keyword("eps") {
            return Ok(LaurentElem::eps());
        }
        if self.keyword("t") {
            return Ok(LaurentElem::t());
        }
        Ok(LaurentElem::from_int(self.integer()?))
    }
}

/// Parses an element, expanding `sqrt1p(...)` through `eps^prec`.
pub fn parse_with_precision(s: &str, prec: i64) -> Result<LaurentElem> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        prec,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(v)
}
