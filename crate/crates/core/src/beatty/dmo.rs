//! Bounded searches for fractional parts in windows, residues of Beatty
//! terms, p-th roots and agreement radii.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ExactReal, Rational};

/// Result of a bounded search over `n = 1..=limit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(BigInt),
    /// Nothing up to the limit; says nothing about larger `n`.
    Exhausted(BigInt),
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&BigInt> {
        match self {
            SearchOutcome::Found(n) => Some(n),
            SearchOutcome::Exhausted(_) => None,
        }
    }
}

fn irrational_positive(alpha: &ExactReal) -> Result<()> {
    if alpha.is_rational() {
        return Err(Error::RationalInput(alpha.to_string()));
    }
    if !alpha.is_positive() {
        return Err(Error::domain(format!("alpha must be positive, got {alpha}")));
    }
    Ok(())
}

fn unit_interval(l: &Rational, r: &Rational) -> Result<()> {
    if l.is_negative() || l >= r || *r > Rational::one() {
        return Err(Error::domain(format!("need 0 <= l < r <= 1, got ({l}, {r})")));
    }
    Ok(())
}

fn search(limit: &BigInt, mut hit: impl FnMut(&BigInt) -> bool) -> SearchOutcome {
    let mut n = BigInt::one();
    while n <= *limit {
        if hit(&n) {
            return SearchOutcome::Found(n);
        }
        n += 1;
    }
    SearchOutcome::Exhausted(limit.clone())
}

fn frac_between(x: &ExactReal, l: &Rational, r: &Rational) -> bool {
    let f = x.frac();
    f.cmp_rational(l).is_gt() && f.cmp_rational(r).is_lt()
}

/// Least `n <= limit` with `l < frac(n*alpha) < r`.
pub fn dmo_window_search(
    alpha: &ExactReal,
    l: &Rational,
    r: &Rational,
    limit: &BigInt,
) -> Result<SearchOutcome> {
    irrational_positive(alpha)?;
    unit_interval(l, r)?;
    Ok(search(limit, |n| frac_between(&alpha.mul_int(n), l, r)))
}

/// Least `n <= limit` with `floor(n*m*alpha) = k (mod m)`.
///
/// Exactly the `n` with `k/m < frac(n*alpha) < (k+1)/m`.
pub fn residue_search(alpha: &ExactReal, m: &BigInt, k: &BigInt, limit: &BigInt) -> Result<SearchOutcome> {
    irrational_positive(alpha)?;
    if !m.is_positive() || k.is_negative() || k >= m {
        return Err(Error::domain(format!("need 0 <= k < m, got m = {m}, k = {k}")));
    }
    let ma = alpha.mul_int(m);
    Ok(search(limit, |n| ma.mul_int(n).floor().mod_floor(m) == *k))
}

/// An axis-parallel box `(l1, r1) x (l2, r2)` in the unit square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub l1: Rational,
    pub r1: Rational,
    pub l2: Rational,
    pub r2: Rational,
}

/// Least `n <= limit` with `frac(n*alpha)` in `(l1, r1)` and `frac(n*beta)` in `(l2, r2)`.
pub fn kronecker_search(
    alpha: &ExactReal,
    beta: &ExactReal,
    rect: &Rect,
    limit: &BigInt,
) -> Result<SearchOutcome> {
    irrational_positive(alpha)?;
    irrational_positive(beta)?;
    unit_interval(&rect.l1, &rect.r1)?;
    unit_interval(&rect.l2, &rect.r2)?;
    Ok(search(limit, |n| {
        frac_between(&alpha.mul_int(n), &rect.l1, &rect.r1)
            && frac_between(&beta.mul_int(n), &rect.l2, &rect.r2)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PthRootWitness {
    /// The radicand.
    pub big_m: BigInt,
    /// `floor(big_m^(1/p))`.
    pub n: BigInt,
    /// The `n` from which an integer radicand is guaranteed.
    pub n_bound: BigInt,
}

/// Integers `M, n` with `l < M^(1/p) - n < r`.
///
/// Scans `n` upward for the least integer `M >= 1` in `((n+l)^p, (n+r)^p)`.
/// The scan stops by `n0 = floor((t/p)^(1/(p-1))) + 1` with `t = ceil(2/(r-l))`:
/// from there on the interval is longer than 1.
pub fn pth_root_dmo_witness(p: &BigInt, l: &Rational, r: &Rational) -> Result<PthRootWitness> {
    let pu = p
        .to_u32()
        .filter(|&p| p >= 2)
        .ok_or_else(|| Error::domain(format!("p must be an integer >= 2, got {p}")))?;
    if l.is_negative() || l >= r || *r >= Rational::one() {
        return Err(Error::domain(format!("need 0 <= l < r < 1, got ({l}, {r})")));
    }
    let t = (Rational::from_integer(2.into()) / (r - l)).ceil().to_integer();
    let n_bound = (&t / p).nth_root(pu - 1) + 1;
    let mut n = BigInt::zero();
    while n <= n_bound {
        let nr = Rational::from_integer(n.clone());
        let lo = (&nr + l).pow(pu as i32);
        let hi = (&nr + r).pow(pu as i32);
        let cand = (lo.floor() + Rational::one()).to_integer().max(BigInt::one());
        if Rational::from_integer(cand.clone()) < hi {
            // (n+l)^p < M < (n+r)^p with 0 <= l < r < 1 gives floor(M^(1/p)) = n.
            debug_assert!(cand.nth_root(pu) == n);
            return Ok(PthRootWitness {
                big_m: cand,
                n,
                n_bound,
            });
        }
        n += 1;
    }
    Err(Error::Internal(format!(
        "no radicand found up to n = {n_bound} for p = {p}, ({l}, {r})"
    )))
}

/// `1/m'^2` with `m'` the least multiple of the denominator of `rho` that is `>= m`.
///
/// Any `alpha` with `0 < alpha - rho < 1/m'^2` has the same Beatty terms
/// below `m` as `rho`.
pub fn agreement_radius(rho: &Rational, m: &BigInt) -> Result<Rational> {
    if *rho <= Rational::one() {
        return Err(Error::domain(format!("rho must exceed 1, got {rho}")));
    }
    if !m.is_positive() {
        return Err(Error::domain(format!("m must be positive, got {m}")));
    }
    let q = rho.denom();
    let mm = Integer::div_ceil(m, q) * q;
    Ok(Rational::new(BigInt::one(), &mm * &mm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beatty::window;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn q(a: i64, b: i64) -> Rational {
        Rational::new(big(a), big(b))
    }
    fn sqrt(n: i64) -> ExactReal {
        ExactReal::sqrt(n).unwrap()
    }

    #[test]
    fn window_searches() {
        let r2 = sqrt(2);
        assert_eq!(
            dmo_window_search(&r2, &q(1, 3), &q(1, 2), &big(100)).unwrap(),
            SearchOutcome::Found(big(1))
        );
        assert_eq!(
            dmo_window_search(&r2, &q(9, 10), &q(19, 20), &big(100)).unwrap(),
            SearchOutcome::Found(big(24))
        );
        let phi = ExactReal::golden_ratio();
        let n = dmo_window_search(&phi, &q(0, 1), &q(1, 100), &big(100_000)).unwrap();
        let n = n.found().unwrap().clone();
        assert!(phi.mul_int(&n).frac().cmp_rational(&q(1, 100)).is_lt());
        assert_eq!(
            dmo_window_search(&r2, &q(9, 10), &q(19, 20), &big(10)).unwrap(),
            SearchOutcome::Exhausted(big(10))
        );
        assert!(dmo_window_search(&r2, &q(1, 2), &q(1, 3), &big(10)).is_err());
    }

    #[test]
    fn residues() {
        let r2 = sqrt(2);
        assert_eq!(
            residue_search(&r2, &big(3), &big(1), &big(100)).unwrap().found(),
            Some(&big(1))
        );
        assert_eq!(
            residue_search(&r2, &big(2), &big(0), &big(100)).unwrap().found(),
            Some(&big(1))
        );
        let phi = ExactReal::golden_ratio();
        let n = residue_search(&phi, &big(5), &big(4), &big(1000))
            .unwrap()
            .found()
            .unwrap()
            .clone();
        assert_eq!(phi.mul_int(&(n * 5)).floor().mod_floor(&big(5)), big(4));
        assert!(residue_search(&r2, &big(3), &big(3), &big(10)).is_err());
    }

    #[test]
    fn residues_match_windows() {
        for alpha in [sqrt(2), sqrt(3), ExactReal::golden_ratio(), sqrt(7)] {
            for m in 1..9i64 {
                for k in 0..m {
                    let a = residue_search(&alpha, &big(m), &big(k), &big(500)).unwrap();
                    let b = dmo_window_search(&alpha, &q(k, m), &q(k + 1, m), &big(500)).unwrap();
                    assert_eq!(a, b, "{alpha} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn kronecker() {
        let rect = Rect {
            l1: q(2, 5),
            r1: q(1, 2),
            l2: q(7, 10),
            r2: q(4, 5),
        };
        assert_eq!(
            kronecker_search(&sqrt(2), &sqrt(3), &rect, &big(100))
                .unwrap()
                .found(),
            Some(&big(1))
        );
        let full = Rect {
            l1: q(0, 1),
            r1: q(1, 1),
            l2: q(0, 1),
            r2: q(1, 1),
        };
        assert_eq!(
            kronecker_search(&sqrt(2), &sqrt(3), &full, &big(10))
                .unwrap()
                .found(),
            Some(&big(1))
        );
        let b = ExactReal::quadratic(1, 1, 1, 2).unwrap();
        let apart = Rect {
            l1: q(0, 1),
            r1: q(1, 2),
            l2: q(1, 2),
            r2: q(1, 1),
        };
        assert!(kronecker_search(&sqrt(2), &b, &apart, &big(300))
            .unwrap()
            .found()
            .is_none());
    }

    #[test]
    fn pth_roots() {
        for (p, l, r) in [
            (2, q(1, 3), q(1, 2)),
            (2, q(2, 5), q(1, 2)),
            (3, q(1, 4), q(1, 2)),
        ] {
            let w = pth_root_dmo_witness(&big(p), &l, &r).unwrap();
            assert_eq!((w.big_m.clone(), w.n.clone()), (big(2), big(1)));
        }
        let w = pth_root_dmo_witness(&big(5), &q(0, 1), &q(1, 1000)).unwrap();
        let n = Rational::from_integer(w.n.clone());
        let m = Rational::from_integer(w.big_m.clone());
        assert!(n.pow(5) < m && m < (n + q(1, 1000)).pow(5));
        assert!(w.n <= w.n_bound);
        assert!(pth_root_dmo_witness(&big(1), &q(0, 1), &q(1, 2)).is_err());
    }

    #[test]
    fn radius() {
        assert_eq!(agreement_radius(&q(3, 2), &big(10)).unwrap(), q(1, 100));
        assert_eq!(agreement_radius(&q(3, 2), &big(9)).unwrap(), q(1, 100));
        assert_eq!(agreement_radius(&q(2, 1), &big(5)).unwrap(), q(1, 25));
        assert!(agreement_radius(&q(1, 1), &big(5)).is_err());
    }

    #[test]
    fn radius_agreement_on_samples() {
        for (rho, m) in [(q(3, 2), 10), (q(7, 3), 20), (q(2, 1), 5), (q(11, 7), 30)] {
            let delta = agreement_radius(&rho, &big(m)).unwrap();
            let bound = big(m - 1);
            let base = window(&ExactReal::from_rational(rho.clone()), &bound).unwrap();
            for d in [2, 3, 5, 7] {
                // 0 < (sqrt(d) - floor(sqrt(d))) * delta < delta
                let s = sqrt(d);
                let nudge = s.frac().mul_rational(&delta);
                let alpha = nudge.add_rational(&rho);
                let w = window(&alpha, &bound).unwrap();
                assert_eq!(
                    base.values().collect::<Vec<_>>(),
                    w.values().collect::<Vec<_>>(),
                    "{rho} {alpha}"
                );
            }
        }
    }
}
