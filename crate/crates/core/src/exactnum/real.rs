use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::{squarefree_split, DEFAULT_SQUARE_BOUND};
use super::sign::{radical_sign, sign_one_radical, Sign};
use super::Rational;
use crate::error::{Error, Result};

/// A quadratic irrational `(a + b*sqrt(d)) / c`.
///
/// Always canonical: `b != 0`, `c > 0`, `d >= 2` squarefree and
/// `gcd(a, b, c) = 1`. Values are only built through [`ExactReal`], which
/// demotes anything rational-valued to the rational tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadIrr {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl QuadIrr {
    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// Rational part `a/c`.
    pub fn rational_part(&self) -> Rational {
        Rational::new(self.a.clone(), self.c.clone())
    }

    /// Coefficient of `sqrt(d)`, i.e. `b/c`.
    pub fn radical_coeff(&self) -> Rational {
        Rational::new(self.b.clone(), self.c.clone())
    }

    /// Partial quotients `a0, a1, ...` of the (infinite) continued fraction.
    pub fn partial_quotients(&self) -> PartialQuotients {
        // (a + b sqrt(d))/c = (P + sqrt(D))/Q with Q | D - P^2
        let c2 = &self.c * &self.c;
        let big_d = &self.b * &self.b * &self.d * &c2;
        let (p, q) = if self.b.is_positive() {
            (&self.a * &self.c, c2)
        } else {
            (-(&self.a * &self.c), -c2)
        };
        PartialQuotients {
            s: big_d.sqrt(),
            big_d,
            p,
            q,
        }
    }

    /// `floor(b * sqrt(d))`, using that `b^2 d` is never a perfect square.
    fn floor_radical(&self) -> BigInt {
        let n = &self.b * &self.b * &self.d;
        let s = n.sqrt();
        if self.b.is_positive() {
            s
        } else {
            -s - 1
        }
    }
}

/// Continued fraction expansion of a quadratic irrational by the classical
/// `(P, Q)` recurrence. The state stays `O(sqrt(D))`, so each step is cheap.
#[derive(Clone, Debug)]
pub struct PartialQuotients {
    big_d: BigInt,
    s: BigInt,
    p: BigInt,
    q: BigInt,
}

impl Iterator for PartialQuotients {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        // sqrt(D) is irrational, so floor((P + sqrt(D))/m) = floor((P + s)/m) for m > 0
        let a = if self.q.is_positive() {
            (&self.p + &self.s).div_floor(&self.q)
        } else {
            -(&self.p + &self.s).div_floor(&-&self.q) - 1
        };
        let p = &a * &self.q - &self.p;
        self.q = (&self.big_d - &p * &p) / &self.q;
        self.p = p;
        Some(a)
    }
}

/// An exact number: a reduced rational or a canonical quadratic irrational.
///
/// Structural equality coincides with numerical equality because both
/// payloads are canonical. The total order is exact and also handles two
/// different radicands through [`radical_sign`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactReal {
    Rational(Rational),
    Quad(QuadIrr),
}

/// `r + s*sqrt(d)`; `s = 0` for rationals (then `d` is 1).
#[derive(Clone, Debug)]
pub(crate) struct Parts {
    pub r: Rational,
    pub s: Rational,
    pub d: BigInt,
}

impl Parts {
    fn rational(r: Rational) -> Parts {
        Parts {
            r,
            s: Rational::zero(),
            d: BigInt::one(),
        }
    }

    fn common_radicand(&self, other: &Parts) -> Result<BigInt> {
        match (self.s.is_zero(), other.s.is_zero()) {
            (true, true) => Ok(BigInt::one()),
            (false, true) => Ok(self.d.clone()),
            (true, false) => Ok(other.d.clone()),
            (false, false) if self.d == other.d => Ok(self.d.clone()),
            _ => Err(Error::Unsupported(format!(
                "arithmetic mixing sqrt({}) and sqrt({})",
                self.d, other.d
            ))),
        }
    }

    pub(crate) fn sign(&self) -> Sign {
        sign_one_radical(&self.r, &self.s, &self.d)
    }

    /// Rebuilds the canonical value; `d` must already be squarefree.
    fn into_real(self) -> ExactReal {
        if self.s.is_zero() || self.d.is_one() {
            let s = if self.d.is_one() { self.s } else { Rational::zero() };
            return ExactReal::Rational(self.r + s);
        }
        let c = self.r.denom().lcm(self.s.denom());
        let a = self.r.numer() * (&c / self.r.denom());
        let b = self.s.numer() * (&c / self.s.denom());
        let g = a.gcd(&b).gcd(&c);
        ExactReal::Quad(QuadIrr {
            a: a / &g,
            b: b / &g,
            c: c / &g,
            d: self.d,
        })
    }
}

impl ExactReal {
    pub fn from_int(n: impl Into<BigInt>) -> ExactReal {
        ExactReal::Rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(r: Rational) -> ExactReal {
        ExactReal::Rational(r)
    }

    /// `num/den` as a rational; `den` must be nonzero.
    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<ExactReal> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivideByZero);
        }
        Ok(ExactReal::Rational(Rational::new(num.into(), den)))
    }

    /// `(a + b*sqrt(d)) / c`, canonicalized. Square factors of `d` are
    /// extracted with the default trial-division bound.
    pub fn quadratic(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<ExactReal> {
        Self::quadratic_with_bound(a.into(), b.into(), c.into(), d.into(), DEFAULT_SQUARE_BOUND)
    }

    pub fn quadratic_with_bound(
        a: BigInt,
        b: BigInt,
        c: BigInt,
        d: BigInt,
        square_bound: u64,
    ) -> Result<ExactReal> {
        if c.is_zero() {
            return Err(Error::DivideByZero);
        }
        if d.is_negative() {
            return Err(Error::domain(format!("sqrt({d}) is not real")));
        }
        if d.is_zero() || b.is_zero() {
            return Ok(ExactReal::Rational(Rational::new(a, c)));
        }
        let (root, core) = squarefree_split(&d, square_bound)?;
        let parts = Parts {
            r: Rational::new(a, c.clone()),
            s: Rational::new(b * root, c),
            d: core,
        };
        Ok(parts.into_real())
    }

    /// `sqrt(n)` for `n >= 0`.
    pub fn sqrt(n: impl Into<BigInt>) -> Result<ExactReal> {
        Self::quadratic(0, 1, 1, n)
    }

    /// The golden ratio `(1 + sqrt 5)/2`.
    pub fn golden_ratio() -> ExactReal {
        Self::quadratic(1, 1, 2, 5).expect("canonical constant")
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ExactReal::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactReal::Rational(r) => Some(r),
            ExactReal::Quad(_) => None,
        }
    }

    /// Radicand of the irrational part, `None` for rationals.
    pub fn radicand(&self) -> Option<&BigInt> {
        match self {
            ExactReal::Rational(_) => None,
            ExactReal::Quad(q) => Some(&q.d),
        }
    }

    pub(crate) fn parts(&self) -> Parts {
        match self {
            ExactReal::Rational(r) => Parts::rational(r.clone()),
            ExactReal::Quad(q) => Parts {
                r: q.rational_part(),
                s: q.radical_coeff(),
                d: q.d.clone(),
            },
        }
    }

    pub fn signum(&self) -> Sign {
        match self {
            ExactReal::Rational(r) => Sign::of_rational(r),
            ExactReal::Quad(_) => self.parts().sign(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Sign::Positive
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExactReal::Rational(r) if r.is_zero())
    }

    /// `floor(x)`: the integer `a` with `a <= x < a + 1`.
    pub fn floor(&self) -> BigInt {
        match self {
            ExactReal::Rational(r) => r.floor().to_integer(),
            ExactReal::Quad(q) => (&q.a + q.floor_radical()).div_floor(&q.c),
        }
    }

    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    /// `x - floor(x)`, in `[0, 1)`.
    pub fn frac(&self) -> ExactReal {
        self.sub_rational(&Rational::from_integer(self.floor()))
    }

    pub fn neg(&self) -> ExactReal {
        match self {
            ExactReal::Rational(r) => ExactReal::Rational(-r),
            ExactReal::Quad(q) => ExactReal::Quad(QuadIrr {
                a: -&q.a,
                b: -&q.b,
                c: q.c.clone(),
                d: q.d.clone(),
            }),
        }
    }

    pub fn add(&self, other: &ExactReal) -> Result<ExactReal> {
        let (x, y) = (self.parts(), other.parts());
        let d = x.common_radicand(&y)?;
        Ok(Parts {
            r: x.r + y.r,
            s: x.s + y.s,
            d,
        }
        .into_real())
    }

    pub fn sub(&self, other: &ExactReal) -> Result<ExactReal> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ExactReal) -> Result<ExactReal> {
        let (x, y) = (self.parts(), other.parts());
        let d = x.common_radicand(&y)?;
        let d_r = Rational::from_integer(d.clone());
        Ok(Parts {
            r: &x.r * &y.r + &x.s * &y.s * d_r,
            s: &x.r * &y.s + &x.s * &y.r,
            d,
        }
        .into_real())
    }

    pub fn recip(&self) -> Result<ExactReal> {
        if self.is_zero() {
            return Err(Error::DivideByZero);
        }
        let x = self.parts();
        // (r - s sqrt d) / (r^2 - s^2 d)
        let norm = &x.r * &x.r - &x.s * &x.s * Rational::from_integer(x.d.clone());
        Ok(Parts {
            r: &x.r / &norm,
            s: -(&x.s / &norm),
            d: x.d,
        }
        .into_real())
    }

    pub fn div(&self, other: &ExactReal) -> Result<ExactReal> {
        self.mul(&other.recip()?)
    }

    pub fn add_rational(&self, r: &Rational) -> ExactReal {
        let mut x = self.parts();
        x.r += r;
        x.into_real()
    }

    pub fn sub_rational(&self, r: &Rational) -> ExactReal {
        self.add_rational(&-r)
    }

    pub fn mul_rational(&self, r: &Rational) -> ExactReal {
        let x = self.parts();
        Parts {
            r: x.r * r,
            s: x.s * r,
            d: x.d,
        }
        .into_real()
    }

    pub fn mul_int(&self, n: &BigInt) -> ExactReal {
        self.mul_rational(&Rational::from_integer(n.clone()))
    }

    /// `self - r` compared with zero, for a rational `r`.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            ExactReal::Rational(x) => x.cmp(r),
            ExactReal::Quad(_) => self.sub_rational(r).signum().to_ordering(),
        }
    }

    /// Exact comparison, valid across different radicands.
    pub fn compare(&self, other: &ExactReal) -> Ordering {
        let (x, y) = (self.parts(), other.parts());
        if x.s.is_zero() || y.s.is_zero() || x.d == y.d {
            let d = if x.s.is_zero() { y.d.clone() } else { x.d.clone() };
            return sign_one_radical(&(&x.r - &y.r), &(&x.s - &y.s), &d).to_ordering();
        }
        radical_sign(&(&x.r - &y.r), &x.s, &x.d, &(-&y.s), &y.d).to_ordering()
    }

    /// Truncated decimal expansion `floor(x * 10^digits) / 10^digits`, for display.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = self.mul_int(&scale).floor();
        let negative = scaled.is_negative();
        let mag = scaled.abs();
        let (int_part, frac_part) = mag.div_rem(&scale);
        let sign = if negative { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{int_part}");
        }
        format!(
            "{sign}{int_part}.{:0>width$}",
            frac_part.to_string(),
            width = digits as usize
        )
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<Rational> for ExactReal {
    fn from(r: Rational) -> Self {
        ExactReal::Rational(r)
    }
}

impl From<BigInt> for ExactReal {
    fn from(n: BigInt) -> Self {
        ExactReal::from_int(n)
    }
}

impl From<i64> for ExactReal {
    fn from(n: i64) -> Self {
        ExactReal::from_int(n)
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactReal::Rational(r) => write!(f, "{r}"),
            ExactReal::Quad(q) => {
                let op = if q.b.is_negative() { '-' } else { '+' };
                write!(f, "({}{}{}*sqrt({}))/{}", q.a, op, q.b.abs(), q.d, q.c)
            }
        }
    }
}

impl FromStr for ExactReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExactReal> {
        super::parse::parse_real(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> ExactReal {
        ExactReal::quadratic(a, b, c, d).unwrap()
    }
    fn rat(n: i64, d: i64) -> ExactReal {
        ExactReal::ratio(n, d).unwrap()
    }

    #[test]
    fn floor_examples() {
        assert_eq!(rat(7, 2).floor(), BigInt::from(3));
        assert_eq!(q(0, 1, 1, 2).floor(), BigInt::from(1));
        assert_eq!(ExactReal::golden_ratio().floor(), BigInt::from(1));
        assert_eq!(q(0, -1, 1, 2).floor(), BigInt::from(-2));
        assert_eq!(q(-7, 3, 4, 11).floor(), BigInt::from(0));
        assert_eq!(rat(-7, 2).floor(), BigInt::from(-4));
    }

    #[test]
    fn continued_fractions() {
        let cf = |x: ExactReal, n| match x {
            ExactReal::Quad(q) => q.partial_quotients().take(n).collect::<Vec<_>>(),
            _ => unreachable!(),
        };
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cf(q(0, 1, 1, 2), 5), big(&[1, 2, 2, 2, 2]));
        assert_eq!(cf(ExactReal::golden_ratio(), 4), big(&[1, 1, 1, 1]));
        assert_eq!(cf(q(0, 1, 1, 7), 5), big(&[2, 1, 1, 1, 4]));
        assert_eq!(cf(q(0, -1, 1, 2), 4), big(&[-2, 1, 1, 2]));
        assert_eq!(cf(q(-7, 3, 4, 11), 3), big(&[0, 1, 2]));
    }

    #[test]
    fn compare_examples() {
        let sqrt2 = q(0, 1, 1, 2);
        assert_eq!(sqrt2.compare(&rat(3, 2)), Ordering::Less);
        let phi = ExactReal::golden_ratio();
        assert_eq!(phi.compare(&phi.clone()), Ordering::Equal);
        assert_eq!(q(1, 1, 1, 2).compare(&rat(12, 5)), Ordering::Greater);
        // cross-radicand: sqrt(2) < sqrt(3) - 1/4
        assert_eq!(sqrt2.compare(&q(-1, 4, 4, 3)), Ordering::Less);
    }

    #[test]
    fn canonicalization_demotes_rationals() {
        assert_eq!(q(3, 0, 2, 5), rat(3, 2));
        assert_eq!(q(1, 2, 3, 9), rat(7, 3));
        assert_eq!(q(2, 2, 4, 8), q(1, 2, 2, 2));
        assert_eq!(q(2, 4, -2, 3), q(-1, -2, 1, 3));
        assert!(
            matches!(q(0, 1, 1, 12), ExactReal::Quad(ref x) if x.d() == &BigInt::from(3) && x.b() == &BigInt::from(2))
        );
    }

    #[test]
    fn field_arithmetic() {
        let sqrt2 = q(0, 1, 1, 2);
        assert_eq!(sqrt2.mul(&sqrt2).unwrap(), rat(2, 1));
        let inv = q(2, 1, 1, 2).recip().unwrap();
        assert_eq!(inv, q(2, -1, 2, 2));
        let phi = ExactReal::golden_ratio();
        let phi2 = phi.mul(&phi).unwrap();
        assert_eq!(phi2, phi.add_rational(&Rational::one()));
        assert!(sqrt2.add(&q(0, 1, 1, 3)).is_err());
        assert_eq!(ExactReal::from_int(0).recip(), Err(Error::DivideByZero));
    }

    #[test]
    fn display_round_trip() {
        for x in [
            q(1, 1, 2, 5),
            q(0, 1, 1, 2),
            q(3, -5, 7, 6),
            rat(-9, 4),
            rat(5, 1),
        ] {
            let s = x.to_string();
            assert_eq!(s.parse::<ExactReal>().unwrap(), x, "{s}");
        }
        assert_eq!(ExactReal::golden_ratio().to_string(), "(1+1*sqrt(5))/2");
    }

    #[test]
    fn decimal_display() {
        assert_eq!(q(0, 1, 1, 2).to_decimal(5), "1.41421");
        assert_eq!(rat(-1, 8).to_decimal(2), "-0.13");
        assert_eq!(rat(1, 20).to_decimal(3), "0.050");
    }
}
