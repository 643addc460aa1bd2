//! Beatty sequences inside the Laurent model.

use num_bigint::BigInt;
use num_traits::One;

use super::{IpElem, LaurentElem};
use crate::error::{Error, Result};
use crate::exactnum::Sign;

fn check_alpha(alpha: &LaurentElem) -> Result<()> {
    if alpha.is_positive()? {
        Ok(())
    } else {
        Err(Error::domain(format!("alpha must be positive, got {alpha}")))
    }
}

fn check_nonneg(name: &str, n: &IpElem) -> Result<()> {
    if n.sign() == Sign::Negative {
        Err(Error::domain(format!("{name} must be nonnegative, got {n}")))
    } else {
        Ok(())
    }
}

/// `floor(n*alpha)` in `I`.
pub fn beatty_nonarch(alpha: &LaurentElem, n: &IpElem) -> Result<IpElem> {
    check_alpha(alpha)?;
    check_nonneg("n", n)?;
    n.to_laurent().mul(alpha).floor_ip()
}

/// The least `n` in `I` with `floor(n*alpha) = k`, if one exists.
///
/// `n = ceil(k/alpha)` is the least element with `n*alpha >= k`.
pub fn member_nonarch(alpha: &LaurentElem, k: &IpElem) -> Result<Option<IpElem>> {
    check_alpha(alpha)?;
    check_nonneg("k", k)?;
    let n = k.to_laurent().div(alpha)?.ceil_ip()?;
    Ok((beatty_nonarch(alpha, &n)? == *k).then_some(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinfReport {
    /// `separator = floor((k+1)*sigma)` lies strictly between the
    /// consecutive terms `floor(k*rho)` and `floor((k+1)*rho)`.
    Separated {
        m: BigInt,
        k: BigInt,
        separator: IpElem,
        below: IpElem,
        above: IpElem,
    },
    Inapplicable(String),
}

/// Separates `N_sigma` from `N_rho` for `1 <= sigma < rho < 2` whose
/// difference is not infinitesimal.
///
/// `m = floor(1/(rho - sigma))` is then a standard integer and
/// `(m+1)*sigma + 1 < (m+1)*rho`, so some `1 <= k <= m` has
/// `floor(k*rho) = floor(k*sigma)` and `floor((k+1)*rho) > floor((k+1)*sigma)`.
pub fn linf_experiment(sigma: &LaurentElem, rho: &LaurentElem, limit: &BigInt) -> Result<LinfReport> {
    let one = LaurentElem::from_int(1);
    let two = LaurentElem::from_int(2);
    for (name, v) in [("sigma", sigma), ("rho", rho)] {
        if v.try_cmp(&one)?.is_lt() || v.try_cmp(&two)?.is_ge() {
            return Err(Error::domain(format!("{name} = {v} must lie in [1, 2)")));
        }
    }
    if sigma.try_cmp(rho)?.is_ge() {
        return Err(Error::domain(format!("need sigma < rho, got {sigma} >= {rho}")));
    }
    let gap = rho.sub(sigma);
    if gap.is_infinitesimal()? {
        return Ok(LinfReport::Inapplicable(format!(
            "rho - sigma = {gap} is infinitesimal"
        )));
    }
    let m = gap
        .recip()?
        .floor_ip()?
        .as_integer()
        .ok_or_else(|| Error::Internal(format!("floor(1/({gap})) is not a standard integer")))?;
    let floor_at = |x: &LaurentElem, k: &BigInt| beatty_nonarch(x, &IpElem::from_int(k.clone()));
    let mut k = BigInt::one();
    let mut below = floor_at(rho, &k)?;
    loop {
        if k > m {
            return Err(Error::Internal(format!("no disagreement for k <= m = {m}")));
        }
        if k > *limit {
            return Err(Error::ResourceLimit(format!(
                "scan stopped at k = {limit} below m = {m}"
            )));
        }
        let next = &k + 1;
        let above = floor_at(rho, &next)?;
        let separator = floor_at(sigma, &next)?;
        if above > separator {
            if !(below < separator) {
                return Err(Error::Internal(format!(
                    "{separator} is not above floor({k}*rho) = {below}"
                )));
            }
            return Ok(LinfReport::Separated {
                m,
                k,
                separator,
                below,
                above,
            });
        }
        below = above;
        k = next;
    }
}
