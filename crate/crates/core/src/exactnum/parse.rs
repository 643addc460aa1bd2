//! Text syntax for [`ExactReal`]: `p`, `p/q`, `sqrt(d)`, `b*sqrt(d)`,
//! `a+b*sqrt(d)` and `(a+b*sqrt(d))/c`, each with an optional sign.
//! Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use super::real::ExactReal;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
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
            Err(self.unexpected(&format!("expected '{}'", c as char)))
        }
    }

    fn unexpected(&mut self, what: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos, format!("{what}, found '{}'", c as char)),
            None => Error::parse(self.pos, format!("{what}, found end of input")),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("nonempty digit string"))
    }

    fn sqrt_call(&mut self) -> Result<BigInt> {
        self.expect(b'(')?;
        let d = self.integer()?;
        self.expect(b')')?;
        Ok(d)
    }

    /// `INT ['*' sqrt(INT)] | sqrt(INT)`
    fn term(&mut self) -> Result<ExactReal> {
        if self.keyword("sqrt") {
            let d = self.sqrt_call()?;
            return ExactReal::quadratic(0, 1, 1, d);
        }
        let n = self.integer()?;
        if self.eat(b'*') {
            if !self.keyword("sqrt") {
                return Err(self.unexpected("expected 'sqrt'"));
            }
            let d = self.sqrt_call()?;
            return ExactReal::quadratic(BigInt::zero(), n, 1, d);
        }
        Ok(ExactReal::from_int(n))
    }

    /// `[+|-] term ((+|-) term)*`; returns the value and the number of terms.
    fn sum(&mut self) -> Result<(ExactReal, usize)> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        let mut terms = 1;
        loop {
            let at = self.pos;
            let minus = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            let t = if minus { t.neg() } else { t };
            acc = acc.add(&t).map_err(|e| Error::parse(at, e.to_string()))?;
            terms += 1;
        }
        Ok((acc, terms))
    }
}

pub(crate) fn parse_real(input: &str) -> Result<ExactReal> {
    let mut cur = Cursor {
        src: input.as_bytes(),
        pos: 0,
    };
    let mut negate = false;
    if cur.eat(b'-') {
        negate = true;
    } else {
        cur.eat(b'+');
    }
    let (numer, grouped) = if cur.eat(b'(') {
        let (v, _) = cur.sum()?;
        cur.expect(b')')?;
        (v, true)
    } else {
        let (v, terms) = cur.sum()?;
        (v, terms == 1)
    };
    let mut value = if negate { numer.neg() } else { numer };
    if cur.peek() == Some(b'/') {
        if !grouped {
            return Err(Error::parse(
                cur.pos,
                "a multi-term numerator must be parenthesized before '/'",
            ));
        }
        cur.pos += 1;
        let at = cur.pos;
        let den = cur.integer()?;
        if den.is_zero() {
            return Err(Error::parse(at, "zero denominator"));
        }
        value = value.mul_rational(&super::Rational::new(1.into(), den));
    }
    if cur.peek().is_some() {
        return Err(cur.unexpected("expected end of input"));
    }
    Ok(value)
}
