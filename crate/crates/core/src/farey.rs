//! Farey series: ordered enumeration, Bezout-shift neighbours, mediants,
//! the `phi_N` embedding and bracketing of irrationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ext_gcd, ExactReal, Rational};

/// A reduced fraction `h/k` in `[0, 1]` viewed as a term of the Farey series of order `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyFraction {
    h: BigInt,
    k: BigInt,
    n: BigInt,
}

impl FareyFraction {
    pub fn new(h: impl Into<BigInt>, k: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        let (h, k, n) = (h.into(), k.into(), n.into());
        if !k.is_positive() || h.is_negative() || h > k || k > n {
            return Err(Error::domain(format!(
                "{h}/{k} is not a term of the Farey series of order {n}"
            )));
        }
        if !h.gcd(&k).is_one() {
            return Err(Error::domain(format!("{h}/{k} is not reduced")));
        }
        Ok(FareyFraction { h, k, n })
    }

    fn raw(h: BigInt, k: BigInt, n: &BigInt) -> Self {
        debug_assert!(h.gcd(&k).is_one() && k <= *n);
        FareyFraction { h, k, n: n.clone() }
    }

    pub fn zero(n: &BigInt) -> Self {
        Self::raw(BigInt::zero(), BigInt::one(), n)
    }

    pub fn one(n: &BigInt) -> Self {
        Self::raw(BigInt::one(), BigInt::one(), n)
    }

    pub fn h(&self) -> &BigInt {
        &self.h
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn order(&self) -> &BigInt {
        &self.n
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.h.clone(), self.k.clone())
    }

    /// `k*h' - h*k'` for `self = h/k` and `other = h'/k'`.
    pub fn cross(&self, other: &FareyFraction) -> BigInt {
        &self.k * &other.h - &self.h * &other.k
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.h == self.k
    }
}

impl PartialOrd for FareyFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FareyFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.h * &other.k)
            .cmp(&(&other.h * &self.k))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl fmt::Display for FareyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.h, self.k)
    }
}

/// Two consecutive terms `lo < hi` of a Farey series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FareyBracket {
    pub lo: FareyFraction,
    pub hi: FareyFraction,
}

impl FareyBracket {
    pub fn mediant(&self) -> Mediant {
        mediant(&self.lo, &self.hi).expect("bracket is ordered")
    }
}

fn check_order(n: &BigInt) -> Result<()> {
    if n.is_positive() {
        Ok(())
    } else {
        Err(Error::domain(format!("Farey order must be at least 1, got {n}")))
    }
}

/// Terms of the Farey series of order `n`, in increasing order.
#[derive(Clone, Debug)]
pub struct FareyIter {
    n: BigInt,
    prev: Option<FareyFraction>,
    cur: Option<FareyFraction>,
}

impl Iterator for FareyIter {
    type Item = FareyFraction;

    fn next(&mut self) -> Option<FareyFraction> {
        let cur = self.cur.take()?;
        if !cur.is_one() {
            let next = match &self.prev {
                None => FareyFraction::raw(BigInt::one(), self.n.clone(), &self.n),
                Some(p) => {
                    let j = (&self.n + &p.k).div_floor(&cur.k);
                    FareyFraction::raw(&j * &cur.h - &p.h, &j * &cur.k - &p.k, &self.n)
                }
            };
            self.cur = Some(next);
        }
        self.prev = Some(cur.clone());
        Some(cur)
    }
}

/// The Farey series of order `n`, from `0/1` to `1/1`.
pub fn enumerate(n: &BigInt) -> Result<FareyIter> {
    check_order(n)?;
    Ok(FareyIter {
        n: n.clone(),
        prev: None,
        cur: Some(FareyFraction::zero(n)),
    })
}

/// The right neighbour of `f` in its Farey series.
///
/// Solves `b*x - a*y = 1` for `f = a/b` and shifts the solution along
/// `(a, b)` until `n - b < y <= n`.
pub fn successor(f: &FareyFraction) -> Result<FareyFraction> {
    if f.is_one() {
        return Err(Error::NoSuccessor(f.to_string()));
    }
    let (a, b, n) = (&f.h, &f.k, &f.n);
    let (_, s, t) = ext_gcd(b, a)?;
    let (x0, y0) = (s, -t);
    let r = (n - &y0).div_floor(b);
    Ok(FareyFraction::raw(x0 + &r * a, y0 + &r * b, n))
}

/// The left neighbour of `f` in its Farey series; the mirror of [`successor`].
pub fn predecessor(f: &FareyFraction) -> Result<FareyFraction> {
    if f.is_zero() {
        return Err(Error::NoPredecessor(f.to_string()));
    }
    let (a, b, n) = (&f.h, &f.k, &f.n);
    let (_, s, t) = ext_gcd(b, a)?;
    // b*x0 - a*y0 = 1; the predecessor solves b*x - a*y = -1.
    let (x0, y0) = (s, -t);
    let r = (n + &y0).div_floor(b);
    Ok(FareyFraction::raw(&r * a - x0, &r * b - y0, n))
}

/// `(h+h')/(k+k')` with the unreduced numerator and denominator kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mediant {
    pub num: BigInt,
    pub den: BigInt,
    pub value: Rational,
}

pub fn mediant(f: &FareyFraction, g: &FareyFraction) -> Result<Mediant> {
    if f.value() >= g.value() {
        return Err(Error::domain(format!("mediant needs {f} < {g}")));
    }
    let num = &f.h + &g.h;
    let den = &f.k + &g.k;
    let value = Rational::new(num.clone(), den.clone());
    Ok(Mediant { num, den, value })
}

/// `floor(n^2 * h / k)`.
pub fn phi_embed(f: &FareyFraction) -> BigInt {
    (&f.n * &f.n * &f.h).div_floor(&f.k)
}

/// The greatest term `x/y` of the Farey series of order `n` with
/// `phi_embed(x/y) < m`, or `<= m` when `strict` is false.
///
/// Scans every denominator `y <= n` once: the largest admissible numerator
/// is `ceil(m*y / n^2) - 1`, clamped to `[0, y]`.
pub fn greatest_below(n: &BigInt, m: &BigInt, strict: bool) -> Result<FareyFraction> {
    check_order(n)?;
    let n2 = n * n;
    if *m < BigInt::one() {
        return Err(Error::NotFound(format!(
            "no Farey term of order {n} has phi below {m}"
        )));
    }
    if *m > n2 {
        return Err(Error::domain(format!("m = {m} exceeds n^2 = {n2}")));
    }
    let bound: BigInt = if strict { m.clone() } else { m + 1 };
    let mut best = Rational::zero();
    let mut y = BigInt::one();
    while y <= *n {
        let x: BigInt = Integer::div_ceil(&(&bound * &y), &n2) - 1;
        let x = x.clamp(BigInt::zero(), y.clone());
        let cand = Rational::new(x, y.clone());
        if cand > best {
            best = cand;
        }
        y += 1;
    }
    Ok(FareyFraction::raw(best.numer().clone(), best.denom().clone(), n))
}

/// The consecutive terms `lo < alpha < hi` of the Farey series of order `n`.
///
/// Stern-Brocot descent where each run of same-direction steps is taken in
/// one jump, capped so that no denominator exceeds `n`.
pub fn bracket(alpha: &ExactReal, n: &BigInt) -> Result<FareyBracket> {
    check_order(n)?;
    if alpha.is_rational() {
        return Err(Error::RationalInput(alpha.to_string()));
    }
    if !alpha.is_positive() || alpha >= &ExactReal::from_int(1) {
        return Err(Error::domain(format!("bracket needs 0 < alpha < 1, got {alpha}")));
    }
    let ExactReal::Quad(x) = alpha else {
        unreachable!("rational input rejected above");
    };
    // Convergents p/q of alpha = [0; a1, a2, ...]; the bracket is the last
    // convergent of denominator <= n and the largest semiconvergent after it.
    let mut quotients = x.partial_quotients();
    quotients.next();
    let (mut pp, mut qp) = (BigInt::one(), BigInt::zero());
    let (mut pc, mut qc) = (BigInt::zero(), BigInt::one());
    let mut below = true;
    loop {
        let a = quotients.next().expect("infinite expansion");
        let qn = &a * &qc + &qp;
        if qn > *n {
            break;
        }
        let pn = &a * &pc + &pp;
        (pp, qp) = (std::mem::replace(&mut pc, pn), std::mem::replace(&mut qc, qn));
        below = !below;
    }
    let j = (n - &qp).div_floor(&qc);
    let semi = (&pp + &j * &pc, &qp + &j * &qc);
    let ((lh, lk), (hh, hk)) = if below { ((pc, qc), semi) } else { (semi, (pc, qc)) };
    let out = FareyBracket {
        lo: FareyFraction::raw(lh, lk, n),
        hi: FareyFraction::raw(hh, hk, n),
    };
    let lo_ok = ExactReal::from_rational(out.lo.value()) < *alpha;
    let hi_ok = ExactReal::from_rational(out.hi.value()) > *alpha;
    if !out.lo.cross(&out.hi).is_one() || !lo_ok || !hi_ok {
        return Err(Error::Internal(format!(
            "bracket ({}, {}) fails validation for {alpha}",
            out.lo, out.hi
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ff(h: i64, k: i64, n: i64) -> FareyFraction {
        FareyFraction::new(h, k, n).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn terms(n: i64) -> Vec<String> {
        enumerate(&big(n)).unwrap().map(|f| f.to_string()).collect()
    }

    #[test]
    fn small_series() {
        assert_eq!(terms(1), ["0/1", "1/1"]);
        assert_eq!(
            terms(5),
            ["0/1", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1/1"]
        );
        assert_eq!(terms(7).len(), 19);
        assert!(enumerate(&big(0)).is_err());
    }

    #[test]
    fn neighbours() {
        assert_eq!(successor(&ff(1, 3, 5)).unwrap(), ff(2, 5, 5));
        assert_eq!(successor(&ff(2, 5, 5)).unwrap(), ff(1, 2, 5));
        assert_eq!(predecessor(&ff(1, 2, 5)).unwrap(), ff(2, 5, 5));
        assert_eq!(predecessor(&ff(1, 4, 5)).unwrap(), ff(1, 5, 5));
        for n in 1..12 {
            assert_eq!(successor(&ff(0, 1, n)).unwrap(), ff(1, n, n));
            assert_eq!(predecessor(&ff(1, 1, n)).unwrap(), ff(n - 1, n, n));
        }
        assert!(matches!(successor(&ff(1, 1, 5)), Err(Error::NoSuccessor(_))));
        assert!(matches!(predecessor(&ff(0, 1, 5)), Err(Error::NoPredecessor(_))));
    }

    #[test]
    fn mediants_and_phi() {
        let m = mediant(&ff(1, 3, 5), &ff(2, 5, 5)).unwrap();
        assert_eq!((m.num, m.den), (big(3), big(8)));
        assert_eq!(
            mediant(&ff(0, 1, 1), &ff(1, 1, 1)).unwrap().value,
            Rational::new(big(1), big(2))
        );
        assert_eq!(
            mediant(&ff(2, 5, 7), &ff(3, 7, 7)).unwrap().value,
            Rational::new(big(5), big(12))
        );
        assert!(mediant(&ff(1, 2, 5), &ff(1, 3, 5)).is_err());
        assert_eq!(phi_embed(&ff(2, 5, 5)), big(10));
        assert_eq!(phi_embed(&ff(0, 1, 5)), big(0));
        assert_eq!(phi_embed(&ff(1, 3, 5)), big(8));
    }

    #[test]
    fn greatest_below_examples() {
        assert_eq!(greatest_below(&big(5), &big(9), true).unwrap(), ff(1, 3, 5));
        assert_eq!(greatest_below(&big(5), &big(1), true).unwrap(), ff(0, 1, 5));
        assert_eq!(greatest_below(&big(5), &big(25), true).unwrap(), ff(4, 5, 5));
        assert_eq!(greatest_below(&big(5), &big(25), false).unwrap(), ff(1, 1, 5));
        assert_eq!(greatest_below(&big(5), &big(10), false).unwrap(), ff(2, 5, 5));
        assert!(matches!(
            greatest_below(&big(5), &big(0), true),
            Err(Error::NotFound(_))
        ));
        assert!(greatest_below(&big(5), &big(26), true).is_err());
    }

    #[test]
    fn bracket_examples() {
        let r2m1 = ExactReal::quadratic(-1, 1, 1, 2).unwrap();
        let b = bracket(&r2m1, &big(5)).unwrap();
        assert_eq!((b.lo, b.hi), (ff(2, 5, 5), ff(1, 2, 5)));
        let b = bracket(&r2m1, &big(10)).unwrap();
        assert_eq!((b.lo, b.hi), (ff(2, 5, 10), ff(3, 7, 10)));
        let phim1 = ExactReal::golden_ratio().sub_rational(&Rational::one());
        let b = bracket(&phim1, &big(3)).unwrap();
        assert_eq!((b.lo, b.hi), (ff(1, 2, 3), ff(2, 3, 3)));
        assert!(matches!(
            bracket(&ExactReal::ratio(1, 3).unwrap(), &big(5)),
            Err(Error::RationalInput(_))
        ));
        assert!(bracket(&ExactReal::sqrt(2).unwrap(), &big(5)).is_err());
    }

    #[test]
    fn bracket_large_order() {
        let r2m1 = ExactReal::quadratic(-1, 1, 1, 2).unwrap();
        let n = BigInt::from(10u64).pow(30);
        let b = bracket(&r2m1, &n).unwrap();
        assert!(b.lo.k() + b.hi.k() > n);
    }

    proptest! {
        #[test]
        fn neighbours_invert(n in 2i64..200, seed in 0u64..1_000_000) {
            let k = 1 + (seed as i64) % n;
            let h = (seed as i64 / 7) % (k + 1);
            let g = BigInt::from(h).gcd(&BigInt::from(k));
            let f = ff(h / i64::try_from(&g).unwrap(), k / i64::try_from(&g).unwrap(), n);
            if !f.is_one() {
                let s = successor(&f).unwrap();
                prop_assert!(f.cross(&s).is_one());
                prop_assert!(f.k() + s.k() > big(n));
                prop_assert_eq!(predecessor(&s).unwrap(), f.clone());
            }
            if !f.is_zero() {
                let p = predecessor(&f).unwrap();
                prop_assert!(p.cross(&f).is_one());
                prop_assert_eq!(successor(&p).unwrap(), f);
            }
        }

        #[test]
        fn bracket_is_consecutive(d in prop::sample::select(vec![2i64, 3, 5, 6, 7, 10, 11]), n in 1i64..300) {
            // frac(sqrt(d)) lies strictly inside (0, 1)
            let s = ExactReal::sqrt(d).unwrap();
            let x = s.sub_rational(&Rational::from_integer(s.floor()));
            let b = bracket(&x, &big(n)).unwrap();
            prop_assert_eq!(successor(&b.lo).unwrap(), b.hi.clone());
        }
    }
}
