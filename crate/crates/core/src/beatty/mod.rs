//! Beatty sequences `N_alpha = { floor(n*alpha) : n >= 0 }` on finite windows.

mod cert;
mod dmo;
mod sets;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ExactReal, Rational};

pub use cert::{certificate_search, verify_implication, CertKind, Certificate, ImplicationReport, Verdict};
pub use dmo::{
    agreement_radius, dmo_window_search, kronecker_search, pth_root_dmo_witness, residue_search,
    PthRootWitness, Rect, SearchOutcome,
};
pub use sets::{
    ap_decomposition, claim51_check, common_elements, partition_check, separation_witness, ApDecomposition,
    ArithProgression, Claim51Report, Claim51Status, CommonReport, PartitionReport, SeparationWitness,
};

fn positive(alpha: &ExactReal) -> Result<()> {
    if alpha.is_positive() {
        Ok(())
    } else {
        Err(Error::domain(format!("alpha must be positive, got {alpha}")))
    }
}

fn nonnegative(name: &str, n: &BigInt) -> Result<()> {
    if n.is_negative() {
        Err(Error::domain(format!("{name} must be nonnegative, got {n}")))
    } else {
        Ok(())
    }
}

/// `floor(n*alpha)`
pub fn beatty_term(alpha: &ExactReal, n: &BigInt) -> Result<BigInt> {
    positive(alpha)?;
    nonnegative("n", n)?;
    Ok(alpha.mul_int(n).floor())
}

/// The least `n` with `floor(n*alpha) = k`, if any.
///
/// `n0 = ceil(k/alpha)` is the least `n` with `n*alpha >= k`, so `k` is a
/// member exactly when `n0*alpha < k + 1`.
pub fn member(alpha: &ExactReal, k: &BigInt) -> Result<Option<BigInt>> {
    positive(alpha)?;
    nonnegative("k", k)?;
    let n0 = alpha.recip()?.mul_int(k).ceil();
    let hit = alpha
        .mul_int(&n0)
        .cmp_rational(&Rational::from_integer(k + 1))
        .is_lt();
    Ok(hit.then_some(n0))
}

/// `|{ n >= 1 : floor(n*alpha) <= h }| = ceil((h+1)/alpha) - 1`
pub fn mu(alpha: &ExactReal, h: &BigInt) -> Result<BigInt> {
    positive(alpha)?;
    nonnegative("h", h)?;
    Ok(alpha.recip()?.mul_int(&(h + 1)).ceil() - 1)
}

/// `N_alpha` restricted to `[0, M]`, each member with its least witness `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeattyWindow {
    pub alpha: ExactReal,
    pub bound: BigInt,
    pub members: BTreeMap<BigInt, BigInt>,
}

impl BeattyWindow {
    pub fn contains(&self, k: &BigInt) -> bool {
        self.members.contains_key(k)
    }

    pub fn witness(&self, k: &BigInt) -> Option<&BigInt> {
        self.members.get(k)
    }

    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.members.keys()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn window(alpha: &ExactReal, bound: &BigInt) -> Result<BeattyWindow> {
    positive(alpha)?;
    nonnegative("M", bound)?;
    let mut members = BTreeMap::new();
    if alpha > &ExactReal::from_int(1) {
        let mut n = BigInt::zero();
        loop {
            let k = alpha.mul_int(&n).floor();
            if k > *bound {
                break;
            }
            members.insert(k, n.clone());
            n += 1;
        }
    } else {
        // Every k is hit; walking k keeps the cost linear in M for small alpha.
        let mut k = BigInt::zero();
        while k <= *bound {
            let n = member(alpha, &k)?
                .ok_or_else(|| Error::Internal(format!("{k} missing from N_{alpha} although alpha <= 1")))?;
            members.insert(k.clone(), n);
            k += 1;
        }
    }
    Ok(BeattyWindow {
        alpha: alpha.clone(),
        bound: bound.clone(),
        members,
    })
}

/// Largest `m >= 0` with `m*(a - b) <= 1`, i.e. `floor(1/(a - b))` for `a > b`.
///
/// Works through comparisons only, so `a` and `b` may lie in different
/// quadratic fields.
pub(crate) fn floor_recip_gap(a: &ExactReal, b: &ExactReal) -> BigInt {
    debug_assert!(a > b);
    let fits = |m: &BigInt| a.mul_int(m) <= b.mul_int(m).add_rational(&Rational::one());
    let mut hi = BigInt::one();
    while fits(&hi) {
        hi *= 2;
    }
    let mut lo = &hi / 2; // fits(lo) holds (lo = 0 trivially)
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi) / 2;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn phi() -> ExactReal {
        ExactReal::golden_ratio()
    }
    fn vals(w: &BeattyWindow) -> Vec<i64> {
        w.values().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn terms() {
        let r2 = ExactReal::sqrt(2).unwrap();
        assert_eq!(beatty_term(&r2, &big(5)).unwrap(), big(7));
        assert_eq!(beatty_term(&r2, &big(0)).unwrap(), big(0));
        assert_eq!(
            beatty_term(&ExactReal::ratio(3, 2).unwrap(), &big(7)).unwrap(),
            big(10)
        );
        assert!(beatty_term(&r2, &big(-1)).is_err());
    }

    #[test]
    fn membership() {
        let r2 = ExactReal::sqrt(2).unwrap();
        assert_eq!(member(&r2, &big(9)).unwrap(), Some(big(7)));
        assert_eq!(member(&r2, &big(3)).unwrap(), None);
        assert_eq!(member(&r2, &big(0)).unwrap(), Some(big(0)));
        let n = member(&ExactReal::ratio(1, 2).unwrap(), &big(5))
            .unwrap()
            .unwrap();
        assert!(n == big(10) || n == big(11));
    }

    #[test]
    fn windows() {
        assert_eq!(
            vals(&window(&phi(), &big(12)).unwrap()),
            [0, 1, 3, 4, 6, 8, 9, 11, 12]
        );
        let phi2 = phi().add_rational(&Rational::one());
        assert_eq!(vals(&window(&phi2, &big(13)).unwrap()), [0, 2, 5, 7, 10, 13]);
        assert_eq!(
            vals(&window(&ExactReal::from_int(1), &big(5)).unwrap()),
            [0, 1, 2, 3, 4, 5]
        );
        let w = window(&ExactReal::ratio(1, 3).unwrap(), &big(4)).unwrap();
        assert_eq!(vals(&w), [0, 1, 2, 3, 4]);
        assert_eq!(w.witness(&big(4)), Some(&big(12)));
    }

    #[test]
    fn counting() {
        let phi2 = phi().add_rational(&Rational::one());
        assert_eq!(mu(&phi(), &big(10)).unwrap(), big(6));
        assert_eq!(mu(&phi2, &big(10)).unwrap(), big(4));
        assert_eq!(mu(&ExactReal::from_int(2), &big(4)).unwrap(), big(2));
    }

    #[test]
    fn recip_gap() {
        let a = ExactReal::sqrt(3).unwrap();
        let b = ExactReal::sqrt(2).unwrap();
        // 1/(sqrt 3 - sqrt 2) = sqrt 3 + sqrt 2 ~ 3.146
        assert_eq!(floor_recip_gap(&a, &b), big(3));
        assert_eq!(
            floor_recip_gap(&ExactReal::from_int(5), &ExactReal::from_int(2)),
            big(0)
        );
        assert_eq!(
            floor_recip_gap(&ExactReal::ratio(5, 2).unwrap(), &ExactReal::from_int(2)),
            big(2)
        );
    }

    proptest! {
        #[test]
        fn witness_and_mu_agree(num in 1i64..400, den in 1i64..100, d in 2i64..30, k in 0i64..300) {
            for alpha in [ExactReal::ratio(num, den).unwrap(), ExactReal::quadratic(num, 1, den, d).unwrap()] {
                if !alpha.is_positive() { continue; }
                let kb = big(k);
                match member(&alpha, &kb).unwrap() {
                    Some(n) => prop_assert_eq!(alpha.mul_int(&n).floor(), kb.clone()),
                    None => {
                        let n = alpha.recip().unwrap().mul_int(&kb).floor();
                        prop_assert!(alpha.mul_int(&n).floor() < kb);
                        prop_assert!(alpha.mul_int(&(n + 1)).floor() > kb);
                    }
                }
                let count = (1..=k + 1).filter(|&n| alpha.mul_int(&big(n)).floor() <= kb).count();
                if alpha >= ExactReal::from_int(1) {
                    prop_assert_eq!(mu(&alpha, &kb).unwrap(), big(count as i64));
                }
            }
        }
    }
}
