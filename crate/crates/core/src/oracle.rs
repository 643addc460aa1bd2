//! Brute-force reference implementations for tests.
//!
//! These deliberately avoid the optimized modules: Farey terms are plain
//! `i64` pairs, and quadratic irrationals are compared against rationals
//! with a local squaring test rather than through `ExactReal`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ExactReal, Rational};

pub const FAREY_GUARD: i64 = 1_000;
pub const DIRICHLET_GUARD: i64 = 1_000;
pub const BEATTY_GUARD: i64 = 100_000;

fn guard(name: &str, value: &BigInt, max: i64) -> Result<()> {
    if *value > BigInt::from(max) {
        Err(Error::Guard(format!(
            "{name} = {value} exceeds the oracle guard {max}"
        )))
    } else {
        Ok(())
    }
}

/// All reduced `h/k` in `[0, 1]` with `k <= n`, sorted.
pub fn farey_naive(n: i64) -> Result<Vec<(i64, i64)>> {
    guard("N", &BigInt::from(n), FAREY_GUARD)?;
    if n < 1 {
        return Err(Error::domain(format!("N must be at least 1, got {n}")));
    }
    let mut out: Vec<(i64, i64)> = (1..=n)
        .flat_map(|k| (0..=k).map(move |h| (h, k)))
        .filter(|&(h, k)| h.gcd(&k) == 1)
        .collect();
    out.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    Ok(out)
}

/// `(a + b*sqrt(d))/c` with `c > 0`, or a rational; copied out of `ExactReal`.
enum Val {
    Rat(Rational),
    Quad(BigInt, BigInt, BigInt, BigInt),
}

impl Val {
    fn of(x: &ExactReal) -> Val {
        match x {
            ExactReal::Rational(r) => Val::Rat(r.clone()),
            ExactReal::Quad(q) => Val::Quad(q.a().clone(), q.b().clone(), q.c().clone(), q.d().clone()),
        }
    }

    fn scale(&self, n: &BigInt) -> Val {
        match self {
            Val::Rat(r) => Val::Rat(r * Rational::from_integer(n.clone())),
            Val::Quad(a, b, c, d) => Val::Quad(a * n, b * n, c.clone(), d.clone()),
        }
    }

    /// Compares the value with `p/q`, `q > 0`.
    fn cmp_frac(&self, p: &BigInt, q: &BigInt) -> Ordering {
        match self {
            Val::Rat(r) => r.cmp(&Rational::new(p.clone(), q.clone())),
            Val::Quad(a, b, c, d) => {
                // sign of (q*a - p*c) + q*b*sqrt(d)
                let u = q * a - p * c;
                let v = q * b;
                match (u.signum(), v.signum()) {
                    (su, sv) if su >= BigInt::zero() && sv >= BigInt::zero() => {
                        if u.is_zero() && v.is_zero() {
                            Ordering::Equal
                        } else {
                            Ordering::Greater
                        }
                    }
                    (su, sv) if su <= BigInt::zero() && sv <= BigInt::zero() => Ordering::Less,
                    _ => {
                        let lhs = &u * &u;
                        let rhs = &v * &v * d;
                        // the bigger square wins the sign
                        let bigger_is_u = lhs.cmp(&rhs);
                        let sign_u = if u.is_positive() {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                        match bigger_is_u {
                            Ordering::Greater => sign_u,
                            Ordering::Less => sign_u.reverse(),
                            Ordering::Equal => Ordering::Equal,
                        }
                    }
                }
            }
        }
    }

    fn floor(&self) -> BigInt {
        match self {
            Val::Rat(r) => r.floor().to_integer(),
            Val::Quad(a, b, c, d) => {
                let one = BigInt::one();
                let span: BigInt = (a.abs() + b.abs() * d) / c + 2;
                let (mut lo, mut hi) = (-span.clone(), span);
                // invariant: lo <= x < hi
                while &hi - &lo > one {
                    let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
                    if self.cmp_frac(&mid, &one) == Ordering::Less {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                lo
            }
        }
    }
}

/// Every `(p, q)` with `q <= Q`, `gcd(p, q) = 1` and `|alpha - p/q| <= 1/(qQ)`.
pub fn dirichlet_naive(alpha: &ExactReal, big_q: i64) -> Result<Vec<(BigInt, BigInt)>> {
    guard("Q", &BigInt::from(big_q), DIRICHLET_GUARD)?;
    let v = Val::of(alpha);
    let bq = BigInt::from(big_q);
    let mut out = Vec::new();
    for q in 1..=big_q {
        let q = BigInt::from(q);
        let base = v.scale(&q).floor();
        for p in [&base - 1, base.clone(), &base + 1, &base + 2] {
            if !p.gcd(&q).is_one() {
                continue;
            }
            // p/q - 1/(qQ) <= alpha <= p/q + 1/(qQ), over the denominator qQ
            let den = &q * &bq;
            let lo = &p * &bq - 1;
            let hi = &p * &bq + 1;
            if v.cmp_frac(&lo, &den) != Ordering::Less && v.cmp_frac(&hi, &den) != Ordering::Greater {
                out.push((p, q.clone()));
            }
        }
    }
    Ok(out)
}

/// `{ floor(n*alpha) : n >= 0 } ∩ [0, M]` by direct enumeration.
pub fn beatty_naive(alpha: &ExactReal, bound: &BigInt) -> Result<BTreeSet<BigInt>> {
    guard("M", bound, BEATTY_GUARD)?;
    let v = Val::of(alpha);
    if v.cmp_frac(&BigInt::zero(), &BigInt::one()) != Ordering::Greater {
        return Err(Error::domain(format!("alpha must be positive, got {alpha}")));
    }
    let mut out = BTreeSet::new();
    let mut n = BigInt::zero();
    loop {
        let t = v.scale(&n).floor();
        if t > *bound {
            return Ok(out);
        }
        out.insert(t);
        n += 1;
    }
}
