//! Rational approximation with exactly verified bounds: Dirichlet, large
//! denominators, the asymmetric Segre bound, Hurwitz and one-sided bounds.
//!
//! All searches reduce to bracketing `frac(alpha)` between consecutive
//! Farey terms. No continued fractions are used.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{radical_sign, ExactReal, Rational, Sign};
use crate::farey::{bracket, FareyBracket};

/// Default cap on the number of order doublings in [`segre`].
pub const DEFAULT_MAX_ROUNDS: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `p/q > alpha`
    Above,
    /// `p/q < alpha`
    Below,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Above => "ABOVE",
            Side::Below => "BELOW",
        })
    }
}

/// The inequality an [`Approximation`] claims. `q` below is the denominator
/// of the approximation and `Q` the parameter carried by the variant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `q <= Q` and `|alpha - p/q| <= 1/(qQ)`
    Dirichlet(BigInt),
    /// `q > Q` and `|alpha - p/q| < 1/q^2`
    Square(BigInt),
    /// `q > Q` and `-1/(s q^2) < alpha - p/q < tau/(s q^2)` with `s = sqrt(1+4 tau)`
    Segre { tau: Rational, min_q: BigInt },
    /// `q > Q` and `|alpha - p/q| < 1/(sqrt(5) q^2)`
    Hurwitz(BigInt),
    /// `q > Q` and `0 < |alpha - p/q| < 1/q^2` on the given side
    OneSided { side: Side, min_q: BigInt },
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Dirichlet(q) => write!(f, "DIRICHLET({q})"),
            BoundKind::Square(q) => write!(f, "SQUARE({q})"),
            BoundKind::Segre { tau, min_q } => write!(f, "SEGRE({tau}, {min_q})"),
            BoundKind::Hurwitz(q) => write!(f, "HURWITZ({q})"),
            BoundKind::OneSided { side, min_q } => write!(f, "ONE_SIDED({side}, {min_q})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    pub p: BigInt,
    pub q: BigInt,
    pub kind: BoundKind,
    pub verified: bool,
}

impl Approximation {
    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone())
    }

    /// The bound on `alpha - p/q` as exact values `(lower, upper)`; `lower`
    /// is the negated upper bound for the symmetric kinds.
    pub fn bounds(&self) -> (ExactReal, ExactReal) {
        let q2 = Rational::from_integer(&self.q * &self.q);
        let sym = |x: ExactReal| (x.neg(), x);
        match &self.kind {
            BoundKind::Dirichlet(big_q) => sym(ExactReal::from_rational(Rational::new(
                BigInt::one(),
                &self.q * big_q,
            ))),
            BoundKind::Square(_) => sym(ExactReal::from_rational(q2.recip())),
            BoundKind::OneSided { side, .. } => {
                let b = ExactReal::from_rational(q2.recip());
                match side {
                    Side::Above => (b.neg(), ExactReal::from_int(0)),
                    Side::Below => (ExactReal::from_int(0), b),
                }
            }
            BoundKind::Hurwitz(_) => {
                sym(inv_sqrt(&Rational::from_integer(5.into())).mul_rational(&q2.recip()))
            }
            BoundKind::Segre { tau, .. } => {
                let s = inv_sqrt(&(Rational::one() + Rational::from_integer(4.into()) * tau))
                    .mul_rational(&q2.recip());
                (s.neg(), s.mul_rational(tau))
            }
        }
    }
}

impl fmt::Display for Approximation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} [{}]", self.p, self.q, self.kind)
    }
}

/// `1/sqrt(x)` for a positive rational `x = n/m`, written as `sqrt(nm)/n`.
fn inv_sqrt(x: &Rational) -> ExactReal {
    let (n, m) = (x.numer(), x.denom());
    ExactReal::sqrt(n * m)
        .expect("positive radicand")
        .mul_rational(&Rational::new(BigInt::one(), n.clone()))
}

fn check_inputs(alpha: &ExactReal, big_q: &BigInt) -> Result<()> {
    if alpha.is_rational() {
        return Err(Error::RationalInput(alpha.to_string()));
    }
    if !alpha.is_positive() {
        return Err(Error::domain(format!("alpha must be positive, got {alpha}")));
    }
    if *big_q < BigInt::one() {
        return Err(Error::domain(format!("Q must be at least 1, got {big_q}")));
    }
    Ok(())
}

/// `(frac(alpha), floor(alpha))`
fn split(alpha: &ExactReal) -> (ExactReal, BigInt) {
    let fl = alpha.floor();
    (alpha.sub_rational(&Rational::from_integer(fl.clone())), fl)
}

/// `q*alpha - p`
fn offset(alpha: &ExactReal, p: &BigInt, q: &BigInt) -> ExactReal {
    alpha.mul_int(q).sub_rational(&Rational::from_integer(p.clone()))
}

fn abs(x: ExactReal) -> ExactReal {
    if x.signum() == Sign::Negative {
        x.neg()
    } else {
        x
    }
}

fn finish(alpha: &ExactReal, p: BigInt, q: BigInt, kind: BoundKind) -> Result<Approximation> {
    let mut out = Approximation {
        p,
        q,
        kind,
        verified: false,
    };
    if !verify(alpha, &out) {
        return Err(Error::Internal(format!("{out} fails its own bound for {alpha}")));
    }
    out.verified = true;
    Ok(out)
}

/// Candidates `lo, mediant, hi` of a bracket of `frac(alpha)`, shifted back by `floor(alpha)`.
fn candidates(b: &FareyBracket, fl: &BigInt) -> [(BigInt, BigInt); 3] {
    let m = b.mediant();
    let shift = |h: &BigInt, k: &BigInt| (h + fl * k, k.clone());
    [
        shift(b.lo.h(), b.lo.k()),
        shift(&m.num, &m.den),
        shift(b.hi.h(), b.hi.k()),
    ]
}

/// `p/q` with `1 <= q <= Q` and `|alpha - p/q| <= 1/(qQ)`.
///
/// Brackets `frac(alpha)` in the Farey series of order `Q` and keeps the
/// endpoint on the same side of the mediant as `frac(alpha)`.
pub fn dirichlet(alpha: &ExactReal, big_q: &BigInt) -> Result<Approximation> {
    check_inputs(alpha, big_q)?;
    let (frac, fl) = split(alpha);
    let b = bracket(&frac, big_q)?;
    let below_mediant = frac < ExactReal::from_rational(b.mediant().value);
    let f = if below_mediant { &b.lo } else { &b.hi };
    let p = f.h() + &fl * f.k();
    finish(alpha, p, f.k().clone(), BoundKind::Dirichlet(big_q.clone()))
}

/// The order `floor(2/eps) + 1`, `eps` the distance from `frac(alpha)` to
/// the nearer of its neighbours in the Farey series of order `Q`.
fn refined_order(frac: &ExactReal, big_q: &BigInt) -> Result<BigInt> {
    let b = bracket(frac, big_q)?;
    let dl = frac.sub_rational(&b.lo.value());
    let dh = frac.neg().add_rational(&b.hi.value());
    let eps = dl.min(dh);
    Ok(eps.recip()?.mul_int(&BigInt::from(2)).floor() + 1)
}

/// `h/k` with `k > Q` and `|alpha - h/k| < 1/k^2`.
pub fn large_denominator(alpha: &ExactReal, big_q: &BigInt) -> Result<Approximation> {
    check_inputs(alpha, big_q)?;
    let (frac, fl) = split(alpha);
    let n = refined_order(&frac, big_q)?;
    let b = bracket(&frac, &n)?;
    for (p, q) in candidates(&b, &fl) {
        let kind = BoundKind::Square(big_q.clone());
        let cand = Approximation {
            p,
            q,
            kind,
            verified: false,
        };
        if verify(alpha, &cand) {
            return finish(alpha, cand.p, cand.q, cand.kind);
        }
    }
    Err(Error::Internal(format!(
        "no candidate of order {n} passes the square bound for {alpha}"
    )))
}

/// `h/k` with `k > Q` and `-1/(s k^2) < alpha - h/k < tau/(s k^2)`, `s = sqrt(1+4 tau)`.
pub fn segre(alpha: &ExactReal, tau: &Rational, big_q: &BigInt) -> Result<Approximation> {
    segre_with_rounds(alpha, tau, big_q, DEFAULT_MAX_ROUNDS)
}

/// [`segre`] with an explicit cap on the number of order doublings.
pub fn segre_with_rounds(
    alpha: &ExactReal,
    tau: &Rational,
    big_q: &BigInt,
    max_rounds: u32,
) -> Result<Approximation> {
    check_inputs(alpha, big_q)?;
    if tau.is_negative() {
        return Err(Error::domain(format!("tau must be nonnegative, got {tau}")));
    }
    let kind = BoundKind::Segre {
        tau: tau.clone(),
        min_q: big_q.clone(),
    };
    let (frac, fl) = split(alpha);
    let mut n = refined_order(&frac, big_q)?;
    for _ in 0..max_rounds {
        let b = bracket(&frac, &n)?;
        for (p, q) in candidates(&b, &fl) {
            if q > *big_q && segre_holds(alpha, tau, &p, &q) {
                return finish(alpha, p, q, kind);
            }
        }
        n *= 2;
    }
    Err(Error::ResourceLimit(format!(
        "segre bound not met for {alpha} with tau = {tau} after {max_rounds} rounds"
    )))
}

/// [`segre`] with `tau = 1`, reported as a Hurwitz bound.
pub fn hurwitz(alpha: &ExactReal, big_q: &BigInt) -> Result<Approximation> {
    let s = segre(alpha, &Rational::one(), big_q)?;
    finish(alpha, s.p, s.q, BoundKind::Hurwitz(big_q.clone()))
}

/// `p/q` with `q > Q` and `0 < p/q - alpha < 1/q^2` (above) or
/// `0 < alpha - p/q < 1/q^2` (below).
///
/// Above is [`segre`] with `tau = 0`; below applies the same search to
/// `ceil(alpha) - alpha` and reflects the result.
pub fn one_sided(alpha: &ExactReal, big_q: &BigInt, side: Side) -> Result<Approximation> {
    check_inputs(alpha, big_q)?;
    let kind = BoundKind::OneSided {
        side,
        min_q: big_q.clone(),
    };
    let tau = Rational::zero();
    match side {
        Side::Above => {
            let s = segre(alpha, &tau, big_q)?;
            finish(alpha, s.p, s.q, kind)
        }
        Side::Below => {
            let c = alpha.ceil();
            let mirror = alpha.neg().add_rational(&Rational::from_integer(c.clone()));
            let s = segre(&mirror, &tau, big_q)?;
            let p = &c * &s.q - &s.p;
            finish(alpha, p, s.q, kind)
        }
    }
}

/// `-1/s < E < tau/s` for `E = k^2 alpha - hk`, `s = sqrt(1+4 tau)`.
///
/// With `1 + 4 tau = n/m`, `1/s = sqrt(nm)/n`, so both sides are signs of
/// expressions `u + v sqrt(d) + w sqrt(nm)`.
pub fn segre_holds(alpha: &ExactReal, tau: &Rational, h: &BigInt, k: &BigInt) -> bool {
    let e = offset(alpha, h, k).mul_int(k).parts();
    let s2 = Rational::one() + Rational::from_integer(4.into()) * tau;
    let (n, m) = (s2.numer().clone(), s2.denom().clone());
    let nm = &n * &m;
    let inv_n = Rational::new(BigInt::one(), n);
    let lower = radical_sign(&e.r, &e.s, &e.d, &inv_n, &nm);
    let upper = radical_sign(&-&e.r, &-&e.s, &e.d, &(tau * &inv_n), &nm);
    lower == Sign::Positive && upper == Sign::Positive
}

/// `5 q^4 (alpha - p/q)^2 < 1`, the Hurwitz bound without the Segre route.
pub fn hurwitz_holds(alpha: &ExactReal, p: &BigInt, q: &BigInt) -> bool {
    let x = offset(alpha, p, q).mul_int(q);
    let Ok(sq) = x.mul(&x) else { return false };
    sq.mul_int(&BigInt::from(5)) < ExactReal::from_int(1)
}

/// Re-checks every condition of `appr.kind` exactly.
pub fn verify(alpha: &ExactReal, appr: &Approximation) -> bool {
    let (p, q) = (&appr.p, &appr.q);
    if !q.is_positive() || !p.gcd(q).is_one() {
        return false;
    }
    let off = offset(alpha, p, q);
    let qr = Rational::from_integer(q.clone());
    match &appr.kind {
        BoundKind::Dirichlet(big_q) => {
            q <= big_q && abs(off) <= ExactReal::from_rational(Rational::new(BigInt::one(), big_q.clone()))
        }
        BoundKind::Square(big_q) => q > big_q && abs(off) < ExactReal::from_rational(qr.recip()),
        BoundKind::Segre { tau, min_q } => !tau.is_negative() && q > min_q && segre_holds(alpha, tau, p, q),
        BoundKind::Hurwitz(big_q) => {
            q > big_q && segre_holds(alpha, &Rational::one(), p, q) && hurwitz_holds(alpha, p, q)
        }
        BoundKind::OneSided { side, min_q } => {
            let toward = match side {
                Side::Above => off.neg(),
                Side::Below => off,
            };
            q > min_q && toward.is_positive() && toward < ExactReal::from_rational(qr.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn sqrt(n: i64) -> ExactReal {
        ExactReal::sqrt(n).unwrap()
    }
    fn phi() -> ExactReal {
        ExactReal::golden_ratio()
    }
    fn pq(a: &Approximation) -> (i64, i64) {
        (i64::try_from(&a.p).unwrap(), i64::try_from(&a.q).unwrap())
    }
    fn with(p: i64, q: i64, kind: BoundKind) -> Approximation {
        Approximation {
            p: big(p),
            q: big(q),
            kind,
            verified: false,
        }
    }

    #[test]
    fn dirichlet_examples() {
        let r2m1 = sqrt(2).sub_rational(&Rational::one());
        assert_eq!(pq(&dirichlet(&r2m1, &big(10)).unwrap()), (2, 5));
        assert_eq!(pq(&dirichlet(&sqrt(2), &big(5)).unwrap()), (7, 5));
        let a = dirichlet(&phi(), &big(1)).unwrap();
        assert!(a.verified && a.q == big(1));
        assert!(matches!(
            dirichlet(&ExactReal::ratio(3, 7).unwrap(), &big(5)),
            Err(Error::RationalInput(_))
        ));
        assert!(dirichlet(&sqrt(2), &big(0)).is_err());
        assert!(dirichlet(&sqrt(2).neg(), &big(5)).is_err());
    }

    #[test]
    fn dirichlet_bound_text() {
        let a = dirichlet(&sqrt(2), &big(5)).unwrap();
        assert_eq!(a.bounds().1.to_string(), "1/25");
    }

    #[test]
    fn large_denominator_contract() {
        for (alpha, big_q) in [(sqrt(2), 2), (phi(), 2), (sqrt(3), 4)] {
            let a = large_denominator(&alpha, &big(big_q)).unwrap();
            assert!(a.q > big(big_q), "{a}");
            assert!(verify(&alpha, &a));
        }
        // 7/4 is within 1/16 of sqrt(3) but its denominator is not above 4.
        assert!(!verify(&sqrt(3), &with(7, 4, BoundKind::Square(big(4)))));
        assert!(verify(&sqrt(3), &with(26, 15, BoundKind::Square(big(4)))));
    }

    #[test]
    fn segre_examples() {
        let tau0 = Rational::zero();
        let a = segre(&sqrt(2), &tau0, &big(1)).unwrap();
        assert!(a.value() > Rational::new(big(1414), big(1000)));
        let seg = |p, q| {
            with(
                p,
                q,
                BoundKind::Segre {
                    tau: Rational::from_integer(big(2)),
                    min_q: big(1),
                },
            )
        };
        assert!(verify(
            &sqrt(2),
            &with(
                3,
                2,
                BoundKind::Segre {
                    tau: tau0,
                    min_q: big(1)
                }
            )
        ));
        assert!(!verify(&phi(), &seg(5, 3)));
        assert!(verify(&phi(), &seg(8, 5)));
        let a = segre(&phi(), &Rational::from_integer(big(2)), &big(1)).unwrap();
        assert!(
            a.q > big(1)
                && verify(
                    &phi(),
                    &seg(i64::try_from(&a.p).unwrap(), i64::try_from(&a.q).unwrap())
                )
        );
        assert!(segre(&phi(), &Rational::from_integer(big(-1)), &big(1)).is_err());
    }

    #[test]
    fn hurwitz_examples() {
        let h = |p, q| with(p, q, BoundKind::Hurwitz(big(10)));
        assert!(!verify(&phi(), &h(21, 13)));
        assert!(verify(&phi(), &h(34, 21)));
        assert!(verify(&sqrt(2), &with(3, 2, BoundKind::Hurwitz(big(1)))));
        let a = hurwitz(&phi(), &big(10)).unwrap();
        assert!(a.q > big(10) && a.verified);
        let a = hurwitz(&phi(), &big(1)).unwrap();
        assert!(a.q > big(1));
    }

    #[test]
    fn segre_routes_agree_at_tau_one() {
        let tau = Rational::one();
        for alpha in [
            sqrt(2),
            sqrt(3),
            phi(),
            sqrt(7).mul_rational(&Rational::new(big(3), big(5))),
        ] {
            for q in 1..60i64 {
                let qb = big(q);
                let c = alpha.mul_int(&qb).floor();
                for p in [c.clone(), c + 1] {
                    assert_eq!(
                        segre_holds(&alpha, &tau, &p, &qb),
                        hurwitz_holds(&alpha, &p, &qb),
                        "{alpha} {p}/{q}"
                    );
                }
            }
        }
    }

    #[test]
    fn one_sided_examples() {
        let a = one_sided(&sqrt(2), &big(1), Side::Below).unwrap();
        assert_eq!(pq(&a), (7, 5));
        let a = one_sided(&sqrt(2), &big(1), Side::Above).unwrap();
        assert!(a.value() > Rational::new(big(1415), big(1000)) && a.q > big(1));
        let a = one_sided(&phi(), &big(3), Side::Below).unwrap();
        assert!(a.q > big(3) && a.verified);
        let above = |p, q| {
            with(
                p,
                q,
                BoundKind::OneSided {
                    side: Side::Above,
                    min_q: big(1),
                },
            )
        };
        assert!(verify(&sqrt(2), &above(3, 2)));
        assert!(!verify(&sqrt(2), &above(7, 5)));
    }

    #[test]
    fn verify_examples() {
        assert!(verify(&sqrt(2), &with(7, 5, BoundKind::Dirichlet(big(5)))));
        assert!(!verify(&sqrt(2), &with(3, 2, BoundKind::Square(big(2)))));
        assert!(verify(&phi(), &with(34, 21, BoundKind::Hurwitz(big(10)))));
        assert!(!verify(&sqrt(2), &with(14, 10, BoundKind::Dirichlet(big(10)))));
    }

    #[test]
    fn bounds_are_exact_expressions() {
        let a = with(34, 21, BoundKind::Hurwitz(big(10)));
        assert_eq!(a.bounds().1.to_string(), "(0+1*sqrt(5))/2205");
        let s = with(
            8,
            5,
            BoundKind::Segre {
                tau: Rational::from_integer(big(2)),
                min_q: big(1),
            },
        );
        let (lo, hi) = s.bounds();
        assert_eq!(
            (lo.to_string(), hi.to_string()),
            ("-1/75".to_string(), "2/75".to_string())
        );
    }

    #[test]
    fn rounds_guard() {
        let err = segre_with_rounds(&sqrt(2), &Rational::one(), &big(1), 0).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }
}
