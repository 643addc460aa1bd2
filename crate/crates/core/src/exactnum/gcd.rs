use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(a, b) > 0` and
/// `a*x + b*y = g`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("ext_gcd(0, 0) is undefined"));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    Ok((old_r, old_s, old_t))
}

/// Default trial-division bound used when extracting square factors.
pub const DEFAULT_SQUARE_BOUND: u64 = 1 << 20;

/// Splits `n > 0` as `n = root^2 * core` with `core` squarefree.
///
/// Trial division runs up to `bound`. A cofactor left over without small prime
/// factors is accepted when it is a perfect square or below `bound^3` (then it
/// has at most two prime factors and is not a square, hence squarefree).
pub fn squarefree_split(n: &BigInt, bound: u64) -> Result<(BigInt, BigInt)> {
    if !n.is_positive() {
        return Err(Error::domain(format!("squarefree_split needs n > 0, got {n}")));
    }
    let mut rest = n.clone();
    let mut root = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2u32);
    let bound_big = BigInt::from(bound.max(2));
    while &p * &p <= rest && p <= bound_big {
        let p2 = &p * &p;
        while rest.is_multiple_of(&p2) {
            rest /= &p2;
            root *= &p;
        }
        if rest.is_multiple_of(&p) {
            rest /= &p;
            core *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if &p * &p > rest {
        core *= rest;
        return Ok((root, core));
    }
    let s = rest.sqrt();
    if &s * &s == rest {
        return Ok((root * s, core));
    }
    if rest < bound_big.pow(3) {
        core *= rest;
        return Ok((root, core));
    }
    Err(Error::domain(format!(
        "cannot certify the squarefree part of {n} with trial division up to {bound}"
    )))
}

/// `Some(r)` when `n = r^2` for an integer `r >= 0`.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bezout_examples() {
        let (g, x, y) = ext_gcd(&big(5), &big(3)).unwrap();
        assert_eq!((g, x, y), (big(1), big(-1), big(2)));
        assert_eq!(ext_gcd(&big(7), &big(0)).unwrap(), (big(7), big(1), big(0)));
        let (g, x, y) = ext_gcd(&big(12), &big(18)).unwrap();
        assert_eq!(g, big(6));
        assert_eq!(big(12) * x + big(18) * y, big(6));
    }

    #[test]
    fn bezout_negative_inputs_give_positive_gcd() {
        for (a, b) in [(-12, 18), (12, -18), (-7, -21), (0, -5)] {
            let (g, x, y) = ext_gcd(&big(a), &big(b)).unwrap();
            assert!(g.is_positive());
            assert_eq!(big(a) * x + big(b) * y, g);
        }
    }

    #[test]
    fn both_zero_is_a_domain_error() {
        assert!(matches!(ext_gcd(&big(0), &big(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_split(&big(12), 100).unwrap(), (big(2), big(3)));
        assert_eq!(squarefree_split(&big(49), 100).unwrap(), (big(7), big(1)));
        assert_eq!(squarefree_split(&big(2), 100).unwrap(), (big(1), big(2)));
        assert_eq!(squarefree_split(&big(360), 100).unwrap(), (big(6), big(10)));
    }

    #[test]
    fn squarefree_large_cofactors() {
        // 1009 is prime and above the bound; 1009^2 is detected as a square.
        assert_eq!(
            squarefree_split(&big(1009 * 1009 * 3), 10).unwrap(),
            (big(1009), big(3))
        );
        // 1009 * 1013 with bound 10 exceeds bound^3 and cannot be certified.
        assert!(squarefree_split(&big(1009 * 1013), 10).is_err());
        assert_eq!(
            squarefree_split(&big(1009 * 1013), 200).unwrap(),
            (big(1), big(1009 * 1013))
        );
    }
}
