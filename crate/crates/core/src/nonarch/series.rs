//! Truncated Laurent series in `eps = 1/t`.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::write_terms;
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Sign};

/// `sum_{start <= i <= prec} c_i eps^i + O(eps^(prec+1))`.
///
/// `start` is the index of the first nonzero known coefficient, or `prec + 1`
/// when every known coefficient vanishes. Coefficients below `start` are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    start: i64,
    coeffs: Vec<Rational>,
    prec: i64,
}

impl Series {
    /// Coefficients for `eps^start, eps^(start+1), ...`, known through `eps^prec`.
    pub fn new(start: i64, mut coeffs: Vec<Rational>, prec: i64) -> Series {
        let known = (prec - start + 1).max(0) as usize;
        coeffs.truncate(known);
        coeffs.resize(known, Rational::zero());
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(z) => {
                coeffs.drain(..z);
                Series {
                    start: start + z as i64,
                    coeffs,
                    prec,
                }
            }
            None => Series {
                start: prec.max(start - 1) + 1,
                coeffs: Vec::new(),
                prec: prec.max(start - 1),
            },
        }
    }

    /// Index of the first nonzero known coefficient (or `prec + 1`).
    pub fn start(&self) -> i64 {
        self.start
    }

    /// Last known index.
    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Coefficient of `eps^i`; `None` beyond the precision.
    pub fn coeff(&self, i: i64) -> Option<Rational> {
        if i > self.prec {
            None
        } else if i < self.start {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[(i - self.start) as usize].clone())
        }
    }

    pub fn is_known_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn sign(&self) -> Result<Sign> {
        match self.coeffs.first() {
            Some(c) => Ok(Sign::of_rational(c)),
            None => Err(Error::IndeterminateSign(format!(
                "all coefficients through eps^{} vanish",
                self.prec
            ))),
        }
    }

    /// Sign of the part strictly after index `i`.
    pub fn tail_sign(&self, i: i64) -> Result<Sign> {
        let first = (i + 1).max(self.start);
        for j in first..=self.prec {
            let c = &self.coeffs[(j - self.start) as usize];
            if !c.is_zero() {
                return Ok(Sign::of_rational(c));
            }
        }
        Err(Error::IndeterminateSign(format!(
            "coefficients eps^{}..eps^{} all vanish",
            i + 1,
            self.prec
        )))
    }

    pub fn neg(&self) -> Series {
        Series {
            start: self.start,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }

    pub fn add(&self, o: &Series) -> Series {
        let prec = self.prec.min(o.prec);
        let start = self.start.min(o.start).min(prec + 1);
        let coeffs = (start..=prec)
            .map(|i| self.coeff(i).unwrap() + o.coeff(i).unwrap())
            .collect();
        Series::new(start, coeffs, prec)
    }

    pub fn sub(&self, o: &Series) -> Series {
        self.add(&o.neg())
    }

    /// Coefficient `n` of a product is known when every pairing of possibly
    /// nonzero factors is known, which gives `min(px + sy, py + sx)`.
    pub fn mul(&self, o: &Series) -> Series {
        let start = self.start + o.start;
        let prec = (self.prec + o.start).min(o.prec + self.start);
        let n = (prec - start + 1).max(0) as usize;
        let mut v = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j < n {
                    v[i + j] += a * b;
                }
            }
        }
        Series::new(start, v, prec)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        if c.is_zero() {
            return Series::new(0, Vec::new(), self.prec);
        }
        Series {
            start: self.start,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            prec: self.prec,
        }
    }

    /// The reciprocal keeps the relative precision.
    pub fn recip(&self) -> Result<Series> {
        let Some(c0) = self.coeffs.first() else {
            return Err(Error::Precision(format!(
                "cannot invert: no nonzero coefficient through eps^{}",
                self.prec
            )));
        };
        let n = self.coeffs.len();
        let inv0 = c0.recip();
        let mut q: Vec<Rational> = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = if j == 0 { Rational::one() } else { Rational::zero() };
            for i in 1..=j {
                acc -= &self.coeffs[i] * &q[j - i];
            }
            q.push(acc * &inv0);
        }
        Ok(Series::new(-self.start, q, self.prec - 2 * self.start))
    }

    /// `sqrt(1 + x)` for infinitesimal `x` by the binomial series.
    pub fn sqrt1p(&self) -> Result<Series> {
        if self.start < 1 {
            return Err(Error::domain("sqrt1p needs an infinitesimal argument"));
        }
        let one = Series::new(0, vec![Rational::one()], self.prec);
        let half = Rational::new(1.into(), 2.into());
        let mut out = one.clone();
        let mut power = one;
        let mut binom = Rational::one();
        let mut k = 1i64;
        while k * self.start <= self.prec {
            binom =
                binom * (&half - Rational::from_integer((k - 1).into())) / Rational::from_integer(k.into());
            power = power.mul(self);
            out = out.add(&power.scale(&binom));
            k += 1;
        }
        Ok(out)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.coeffs.is_empty() {
            let terms = self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| (self.start + j as i64, c));
            write_terms(f, terms, "eps")?;
            write!(f, " + ")?;
        }
        write!(f, "O(eps^{})", self.prec + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn normalizes_leading_zeros() {
        let s = Series::new(-1, vec![q(0, 1), q(0, 1), q(3, 1)], 5);
        assert_eq!(s.start(), 1);
        assert_eq!(s.coeff(0), Some(q(0, 1)));
        assert_eq!(s.coeff(4), Some(q(0, 1)));
        assert_eq!(s.coeff(6), None);
        assert!(Series::new(0, vec![q(0, 1)], 3).is_known_zero());
    }

    #[test]
    fn geometric_inverse() {
        // 1 + eps, inverted
        let s = Series::new(0, vec![q(1, 1), q(1, 1)], 10);
        let inv = s.recip().unwrap();
        for i in 0..=10 {
            assert_eq!(inv.coeff(i).unwrap(), q(if i % 2 == 0 { 1 } else { -1 }, 1));
        }
        let back = s.mul(&inv);
        assert_eq!(back.coeff(0), Some(q(1, 1)));
        assert_eq!(back.tail_sign(0).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn binomial() {
        let eps = Series::new(1, vec![q(1, 1)], 8);
        let r = eps.sqrt1p().unwrap();
        assert_eq!(r.coeff(1), Some(q(1, 2)));
        assert_eq!(r.coeff(2), Some(q(-1, 8)));
        assert_eq!(r.coeff(3), Some(q(1, 16)));
        let sq = r.mul(&r);
        assert_eq!(sq.precision(), 8);
        assert!(sq.sub(&Series::new(0, vec![q(1, 1), q(1, 1)], 8)).is_known_zero());
    }

    #[test]
    fn display() {
        let s = Series::new(0, vec![q(1, 1), q(1, 2), q(-1, 8)], 2);
        assert_eq!(s.to_string(), "1 + 1/2*eps - 1/8*eps^2 + O(eps^3)");
    }
}
