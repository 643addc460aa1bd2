use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Exact sign of a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(r: &Rational) -> Sign {
        Sign::from(r.cmp(&Rational::zero()))
    }

    pub fn of_int(n: &BigInt) -> Sign {
        Sign::from(n.cmp(&BigInt::zero()))
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl From<Ordering> for Sign {
    fn from(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "NEG",
            Sign::Zero => "ZERO",
            Sign::Positive => "POS",
        })
    }
}

/// Sign of `p + q*sqrt(n)` for `n >= 0`. No squarefree assumption on `n`.
pub(crate) fn sign_one_radical(p: &Rational, q: &Rational, n: &BigInt) -> Sign {
    let sp = Sign::of_rational(p);
    let sq = if n.is_zero() {
        Sign::Zero
    } else {
        Sign::of_rational(q)
    };
    match (sp, sq) {
        (s, Sign::Zero) => s,
        (Sign::Zero, s) => s,
        (a, b) if a == b => a,
        // opposite signs: compare p^2 with q^2 n
        (a, _) => {
            let lhs = p * p;
            let rhs = q * q * Rational::from_integer(n.clone());
            match lhs.cmp(&rhs) {
                Ordering::Greater => a,
                Ordering::Equal => Sign::Zero,
                Ordering::Less => a.flip(),
            }
        }
    }
}

/// The expression `u + v*sqrt(d) + w*sqrt(e)` with rational `u, v, w` and
/// positive integers `d, e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalExpr {
    pub u: Rational,
    pub v: Rational,
    pub d: BigInt,
    pub w: Rational,
    pub e: BigInt,
}

impl RadicalExpr {
    pub fn new(u: Rational, v: Rational, d: BigInt, w: Rational, e: BigInt) -> Result<Self> {
        if !d.is_positive() || !e.is_positive() {
            return Err(Error::domain(format!(
                "radicands must be positive integers, got d={d}, e={e}"
            )));
        }
        Ok(RadicalExpr { u, v, d, w, e })
    }

    /// Exact sign by double squaring.
    ///
    /// `S = v*sqrt(d) + w*sqrt(e)` is signed first (compare `v^2 d` with
    /// `w^2 e`). When `u` and `S` disagree in sign, `|S|` is compared with
    /// `|u|` through `S^2 - u^2 = (v^2 d + w^2 e - u^2) + 2vw*sqrt(de)`, whose
    /// sign is one more squaring away.
    pub fn sign(&self) -> Sign {
        radical_sign(&self.u, &self.v, &self.d, &self.w, &self.e)
    }
}

/// Sign of `u + v*sqrt(d) + w*sqrt(e)`; see [`RadicalExpr::sign`].
pub fn radical_sign(u: &Rational, v: &Rational, d: &BigInt, w: &Rational, e: &BigInt) -> Sign {
    let d_r = Rational::from_integer(d.clone());
    let e_r = Rational::from_integer(e.clone());
    let v2d = v * v * &d_r;
    let w2e = w * w * &e_r;
    let s_sign = {
        let sv = Sign::of_rational(v);
        let sw = Sign::of_rational(w);
        match (sv, sw) {
            (s, Sign::Zero) | (Sign::Zero, s) => s,
            (a, b) if a == b => a,
            (a, _) => match v2d.cmp(&w2e) {
                Ordering::Greater => a,
                Ordering::Equal => Sign::Zero,
                Ordering::Less => a.flip(),
            },
        }
    };
    let su = Sign::of_rational(u);
    match (su, s_sign) {
        (s, Sign::Zero) | (Sign::Zero, s) => s,
        (a, b) if a == b => a,
        (a, b) => {
            // sign(|S| - |u|) = sign(S^2 - u^2), with S^2 = v^2 d + w^2 e + 2vw sqrt(de)
            let p = &v2d + &w2e - u * u;
            let q = Rational::from_integer(BigInt::from(2)) * v * w;
            match sign_one_radical(&p, &q, &(d * e)) {
                Sign::Positive => b,
                Sign::Zero => Sign::Zero,
                Sign::Negative => a,
            }
        }
    }
}
