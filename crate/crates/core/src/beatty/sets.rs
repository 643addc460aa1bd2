//! Set relations between Beatty sequences: partitions, progressions,
//! common elements and separating witnesses.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{floor_recip_gap, member, window};
use crate::error::{Error, Result};
use crate::exactnum::{ExactReal, Rational};

fn one() -> ExactReal {
    ExactReal::from_int(1)
}

fn two() -> ExactReal {
    ExactReal::from_int(2)
}

fn above_one(name: &str, x: &ExactReal) -> Result<()> {
    if x > &one() {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must exceed 1, got {x}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    pub bound: BigInt,
    /// First `k >= 1` in both windows, with its witnesses.
    pub first_overlap: Option<(BigInt, BigInt, BigInt)>,
    /// First `k >= 1` in neither window.
    pub first_gap: Option<BigInt>,
}

impl PartitionReport {
    pub fn pass(&self) -> bool {
        self.first_overlap.is_none() && self.first_gap.is_none()
    }
}

/// Checks on `[1, M]` that `N_alpha` and `N_beta` are disjoint and cover.
pub fn partition_check(alpha: &ExactReal, beta: &ExactReal, bound: &BigInt) -> Result<PartitionReport> {
    above_one("alpha", alpha)?;
    above_one("beta", beta)?;
    let wa = window(alpha, bound)?;
    let wb = window(beta, bound)?;
    let mut report = PartitionReport {
        bound: bound.clone(),
        first_overlap: None,
        first_gap: None,
    };
    let mut k = BigInt::one();
    while k <= *bound && !(report.first_overlap.is_some() && report.first_gap.is_some()) {
        match (wa.witness(&k), wb.witness(&k)) {
            (Some(n), Some(m)) if report.first_overlap.is_none() => {
                report.first_overlap = Some((k.clone(), n.clone(), m.clone()));
            }
            (None, None) if report.first_gap.is_none() => report.first_gap = Some(k.clone()),
            _ => {}
        }
        k += 1;
    }
    Ok(report)
}

/// `m*N + k`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArithProgression {
    pub modulus: BigInt,
    pub residue: BigInt,
}

impl ArithProgression {
    pub fn new(modulus: impl Into<BigInt>, residue: impl Into<BigInt>) -> Result<Self> {
        let (modulus, residue) = (modulus.into(), residue.into());
        if !modulus.is_positive() || residue.is_negative() || residue >= modulus {
            return Err(Error::domain(format!(
                "need 0 <= k < m for the progression m*N + k, got m = {modulus}, k = {residue}"
            )));
        }
        Ok(ArithProgression { modulus, residue })
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        !x.is_negative() && x.mod_floor(&self.modulus) == self.residue
    }
}

impl fmt::Display for ArithProgression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}N+{}", self.modulus, self.residue)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApDecomposition {
    pub p: BigInt,
    pub q: BigInt,
    pub progressions: Vec<ArithProgression>,
    /// The union of the progressions equals the window on `[0, M]`.
    pub union_matches: bool,
    /// No member is congruent to `p - 1` mod `p`.
    pub top_residue_absent: bool,
}

/// `N_{p/q}` as the union of `p*N + floor(p*r/q)` over `0 <= r < q`.
pub fn ap_decomposition(p: &BigInt, q: &BigInt, bound: &BigInt) -> Result<ApDecomposition> {
    if !q.is_positive() {
        return Err(Error::domain(format!("q must be positive, got {q}")));
    }
    let r = Rational::new(p.clone(), q.clone());
    if r <= Rational::one() {
        return Err(Error::domain(format!("p/q must exceed 1, got {r}")));
    }
    let (p, q) = (r.numer().clone(), r.denom().clone());
    let mut progressions = Vec::new();
    let mut i = BigInt::zero();
    while i < q {
        progressions.push(ArithProgression::new(p.clone(), (&p * &i).div_floor(&q))?);
        i += 1;
    }
    let w = window(&ExactReal::from_rational(r), bound)?;
    let mut union_matches = true;
    let mut k = BigInt::zero();
    while k <= *bound && union_matches {
        union_matches = progressions.iter().any(|a| a.contains(&k)) == w.contains(&k);
        k += 1;
    }
    let top = &p - 1;
    let top_residue_absent = w.values().all(|v| v.mod_floor(&p) != top);
    Ok(ApDecomposition {
        p,
        q,
        progressions,
        union_matches,
        top_residue_absent,
    })
}

/// Increasing terms of `N_alpha` strictly above a start value.
struct Terms<'a> {
    alpha: &'a ExactReal,
    n: BigInt,
    last: Option<BigInt>,
}

impl<'a> Terms<'a> {
    fn above(alpha: &'a ExactReal, start: &BigInt) -> Result<Self> {
        let n = alpha.recip()?.mul_int(&(start + 1)).ceil().max(BigInt::zero());
        Ok(Terms { alpha, n, last: None })
    }

    fn next_term(&mut self) -> BigInt {
        loop {
            let v = self.alpha.mul_int(&self.n).floor();
            self.n += 1;
            if self.last.as_ref() != Some(&v) {
                self.last = Some(v.clone());
                return v;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonReport {
    pub elements: Vec<BigInt>,
    /// The scan stopped at `scanned_to` before `count` elements were found.
    pub exhausted: bool,
    pub scanned_to: BigInt,
}

/// The first `count` elements of `N_alpha` and `N_beta` above `start`,
/// scanning values up to `start + limit`.
pub fn common_elements(
    alpha: &ExactReal,
    beta: &ExactReal,
    start: &BigInt,
    count: usize,
    limit: &BigInt,
) -> Result<CommonReport> {
    above_one("alpha", alpha)?;
    above_one("beta", beta)?;
    let stop = start + limit;
    let mut ta = Terms::above(alpha, start)?;
    let mut tb = Terms::above(beta, start)?;
    let (mut a, mut b) = (ta.next_term(), tb.next_term());
    let mut elements = Vec::new();
    while elements.len() < count {
        if a > stop || b > stop {
            return Ok(CommonReport {
                elements,
                exhausted: true,
                scanned_to: stop,
            });
        }
        match a.cmp(&b) {
            std::cmp::Ordering::Less => a = ta.next_term(),
            std::cmp::Ordering::Greater => b = tb.next_term(),
            std::cmp::Ordering::Equal => {
                elements.push(a.clone());
                a = ta.next_term();
                b = tb.next_term();
            }
        }
    }
    let scanned_to = elements.last().cloned().unwrap_or_else(|| start.clone());
    Ok(CommonReport {
        elements,
        exhausted: false,
        scanned_to,
    })
}

/// An element of one Beatty sequence missing from the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub x: BigInt,
    /// `x` is in `N_inside` ...
    pub inside: ExactReal,
    /// ... and not in `N_outside`.
    pub outside: ExactReal,
    /// `n` with `floor(n*inside) = x`.
    pub n: BigInt,
    pub trace: Vec<String>,
}

/// The separating element for `a > b >= 2`: `floor((m+1)*b)` for
/// `m = floor(1/(a-b)) > 0`, `floor(b)` for `m = 0`. It lies in `N_b` and not in `N_a`.
fn separate_above_two(a: &ExactReal, b: &ExactReal, trace: &mut Vec<String>) -> BigInt {
    let m = floor_recip_gap(a, b);
    trace.push(format!("m = floor(1/({a} - {b})) = {m}"));
    let x = if m.is_zero() {
        b.floor()
    } else {
        b.mul_int(&(m + 1)).floor()
    };
    trace.push(format!("x = {x} lies in N_{b} and not in N_{a}"));
    x
}

/// `x / (x - 1)`
fn conjugate(x: &ExactReal) -> Result<ExactReal> {
    x.div(&x.sub_rational(&Rational::one()))
}

/// An element in exactly one of `N_alpha`, `N_beta`, for distinct `alpha, beta > 1`.
///
/// Returns `Unsupported` only in the case `1 < beta < rho < 2` with `rho`
/// rational, `beta` irrational and `(m+1) rho/(rho-1)` integral, after the
/// [`claim51_check`] probe has failed to separate.
pub fn separation_witness(alpha: &ExactReal, beta: &ExactReal) -> Result<SeparationWitness> {
    above_one("alpha", alpha)?;
    above_one("beta", beta)?;
    if alpha == beta {
        return Err(Error::domain(format!("alpha = beta = {alpha}")));
    }
    let (big, small) = if alpha > beta {
        (alpha, beta)
    } else {
        (beta, alpha)
    };
    let mut trace = Vec::new();
    let (x, inside, outside) = if small >= &two() {
        trace.push("both values are at least 2".into());
        (separate_above_two(big, small, &mut trace), small, big)
    } else if big >= &two() {
        trace.push(format!("1 < {small} < 2 <= {big}: x = 1"));
        (BigInt::one(), small, big)
    } else {
        return separate_below_two(big, small);
    };
    finish(x, inside, outside, trace)
}

fn finish(
    x: BigInt,
    inside: &ExactReal,
    outside: &ExactReal,
    trace: Vec<String>,
) -> Result<SeparationWitness> {
    let n = member(inside, &x)?;
    let missing = member(outside, &x)?.is_none();
    match n {
        Some(n) if missing => Ok(SeparationWitness {
            x,
            inside: inside.clone(),
            outside: outside.clone(),
            n,
            trace,
        }),
        _ => Err(Error::Internal(format!(
            "constructed x = {x} does not separate N_{inside} from N_{outside}; trace: {}",
            trace.join("; ")
        ))),
    }
}

/// Both values in `(1, 2)`, `big > small`.
fn separate_below_two(big: &ExactReal, small: &ExactReal) -> Result<SeparationWitness> {
    let mut trace = Vec::new();
    match (big.as_rational(), small.as_rational()) {
        (None, None) => {
            // N_{x/(x-1)} is the complement of N_x, and the conjugates are above 2
            // in reversed order.
            let (cb, cs) = (conjugate(big)?, conjugate(small)?);
            trace.push(format!("conjugates {cs} > {cb} > 2"));
            let x = separate_above_two(&cs, &cb, &mut trace);
            trace.push(format!("x in N_{cb} \\ N_{cs} means x in N_{small} \\ N_{big}"));
            finish(x, small, big, trace)
        }
        (Some(p), Some(q)) => {
            // Both sequences are periodic mod the lcm of the numerators.
            let period = p.numer().lcm(q.numer());
            trace.push(format!("rational pair, scanning one period [1, {period}]"));
            let mut x = BigInt::one();
            while x <= period {
                let in_big = member(big, &x)?.is_some();
                let in_small = member(small, &x)?.is_some();
                if in_big != in_small {
                    let (i, o) = if in_small { (small, big) } else { (big, small) };
                    return finish(x, i, o, trace);
                }
                x += 1;
            }
            Err(Error::Internal(format!(
                "N_{big} and N_{small} agree on a full period"
            )))
        }
        (Some(_), None) => {
            // rho = big rational, beta = small irrational
            let (rho, beta) = (big, small);
            let m = mixed_m(beta, rho)?;
            let y = conjugate(rho)?.mul_int(&(&m + 1));
            trace.push(format!(
                "m = floor((beta-1)(rho-1)/(rho-beta)) = {m}, (m+1) rho/(rho-1) = {y}"
            ));
            if y.is_rational() && y.floor() == y.ceil() {
                trace.push("integral case; probing the claim".into());
                let rho_q = rho.as_rational().expect("rational").clone();
                let rep = claim51_check(&rho_q, beta)?;
                if let (Claim51Status::Holds, Some(sep)) = (rep.status, rep.separator.clone()) {
                    trace.push(format!("claim holds with separator {sep}"));
                    return finish(sep, rho, beta, trace);
                }
                return Err(Error::Unsupported(format!(
                    "no separating construction for rho = {rho}, beta = {beta}: \
                     (m+1) rho/(rho-1) = {y} is integral and the claim probe did not separate"
                )));
            }
            let x = y.floor();
            trace.push(format!(
                "x = floor({y}) = {x} lies in N_{beta} and not in N_{rho}"
            ));
            finish(x, beta, rho, trace)
        }
        (None, Some(_)) => {
            // beta = big irrational, rho = small rational
            let (beta, rho) = (big, small);
            let m = mixed_m(rho, beta)?;
            let x = conjugate(beta)?.mul_int(&(&m + 1)).floor();
            trace.push(format!(
                "m = floor((rho-1)(beta-1)/(beta-rho)) = {m}, x = floor((m+1) beta/(beta-1)) = {x}"
            ));
            finish(x, rho, beta, trace)
        }
    }
}

/// `floor((lo-1)(hi-1)/(hi-lo))` for `1 < lo < hi`, one of them rational.
fn mixed_m(lo: &ExactReal, hi: &ExactReal) -> Result<BigInt> {
    let num = lo
        .sub_rational(&Rational::one())
        .mul(&hi.sub_rational(&Rational::one()))?;
    Ok(num.div(&hi.sub(lo)?)?.floor())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim51Status {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Claim51Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim51Status::Holds => "HOLDS",
            Claim51Status::Fails => "FAILS",
            Claim51Status::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim51Report {
    pub status: Claim51Status,
    pub m: Option<BigInt>,
    /// `(m+1) rho/(rho-1)`
    pub y: Option<ExactReal>,
    /// `(m+1)/(rho-1)`
    pub k: Option<Rational>,
    /// `k*rho + 1` when it separates.
    pub separator: Option<BigInt>,
    pub notes: Vec<String>,
}

/// Probes the claim that `floor((k+1) rho) = k rho + 1` lies in
/// `N_rho \ N_beta` when `1 < beta < rho < 2`, `beta` irrational and
/// `y = (m+1) rho/(rho-1)` is an integer, `m = floor((beta-1)(rho-1)/(rho-beta))`,
/// `k = (m+1)/(rho-1)`.
pub fn claim51_check(rho: &Rational, beta: &ExactReal) -> Result<Claim51Report> {
    let rho_x = ExactReal::from_rational(rho.clone());
    let mut rep = Claim51Report {
        status: Claim51Status::NotApplicable,
        m: None,
        y: None,
        k: None,
        separator: None,
        notes: Vec::new(),
    };
    if beta.is_rational() {
        rep.notes.push(format!("beta = {beta} is rational"));
        return Ok(rep);
    }
    if !(&one() < beta && beta < &rho_x && rho_x < two()) {
        rep.notes.push(format!(
            "needs 1 < beta < rho < 2, got beta = {beta}, rho = {rho}"
        ));
        return Ok(rep);
    }
    let m = mixed_m(beta, &rho_x)?;
    let rho_m1 = rho - Rational::one();
    let y = rho / &rho_m1 * Rational::from_integer(&m + 1);
    rep.m = Some(m.clone());
    rep.y = Some(ExactReal::from_rational(y.clone()));
    if !y.is_integer() {
        rep.notes
            .push(format!("(m+1) rho/(rho-1) = {y} is not an integer"));
        return Ok(rep);
    }
    let y = y.to_integer();
    let k = Rational::from_integer(&m + 1) / &rho_m1;
    rep.k = Some(k.clone());
    rep.status = Claim51Status::Fails;
    let conj = ExactReal::from_rational(rho / &rho_m1);
    for (name, seq) in [("rho", &rho_x), ("beta", beta), ("rho/(rho-1)", &conj)] {
        let inside = member(seq, &y)?.is_some();
        rep.notes.push(format!("{y} in N_{name}: {inside}"));
    }
    if !k.is_integer() {
        rep.notes.push(format!("k = {k} is not an integer"));
        return Ok(rep);
    }
    let s = (&k * rho).to_integer() + 1;
    let lhs = ((&k + Rational::one()) * rho).floor().to_integer();
    rep.notes
        .push(format!("floor((k+1) rho) = {lhs}, k rho + 1 = {s}"));
    let in_rho = member(&rho_x, &s)?;
    let in_beta = member(beta, &s)?;
    rep.notes.push(format!(
        "{s} in N_rho: {}, in N_beta: {}",
        in_rho.is_some(),
        in_beta.is_some()
    ));
    if lhs == s && in_rho.is_some() && in_beta.is_none() {
        rep.status = Claim51Status::Holds;
        rep.separator = Some(s);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::beatty_naive;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn q(a: i64, b: i64) -> ExactReal {
        ExactReal::ratio(a, b).unwrap()
    }
    fn sqrt(n: i64) -> ExactReal {
        ExactReal::sqrt(n).unwrap()
    }
    fn phi() -> ExactReal {
        ExactReal::golden_ratio()
    }

    #[test]
    fn partitions() {
        let phi2 = phi().add_rational(&Rational::one());
        assert!(partition_check(&phi(), &phi2, &big(2000)).unwrap().pass());
        let b = ExactReal::quadratic(2, 1, 1, 2).unwrap();
        assert!(partition_check(&sqrt(2), &b, &big(1000)).unwrap().pass());
        let r = partition_check(&q(3, 2), &ExactReal::from_int(3), &big(100)).unwrap();
        assert_eq!(r.first_overlap, Some((big(3), big(2), big(1))));
        assert_eq!(r.first_gap, Some(big(2)));
        assert!(!r.pass());
    }

    #[test]
    fn progressions() {
        let d = ap_decomposition(&big(7), &big(3), &big(50)).unwrap();
        let res: Vec<_> = d.progressions.iter().map(|a| a.to_string()).collect();
        assert_eq!(res, ["7N+0", "7N+2", "7N+4"]);
        assert!(d.union_matches && d.top_residue_absent);
        let d = ap_decomposition(&big(2), &big(1), &big(20)).unwrap();
        assert_eq!(d.progressions, [ArithProgression::new(2, 0).unwrap()]);
        let d = ap_decomposition(&big(6), &big(4), &big(30)).unwrap();
        assert_eq!((d.p.clone(), d.q.clone()), (big(3), big(2)));
        assert_eq!(d.progressions.len(), 2);
        assert!(d.union_matches && d.top_residue_absent);
        assert!(ap_decomposition(&big(3), &big(3), &big(10)).is_err());
    }

    #[test]
    fn common() {
        let limit = big(10_000);
        let b = ExactReal::quadratic(1, 1, 1, 2).unwrap();
        let r = common_elements(&sqrt(2), &b, &big(0), 3, &limit).unwrap();
        assert_eq!(r.elements, [big(2), big(4), big(7)]);
        assert!(!r.exhausted);
        let phi2 = phi().add_rational(&Rational::one());
        let r = common_elements(&phi(), &phi2, &big(0), 1, &limit).unwrap();
        assert!(r.elements.is_empty() && r.exhausted);
        let r = common_elements(&q(3, 2), &q(5, 2), &big(0), 2, &limit).unwrap();
        assert_eq!(r.elements, [big(7), big(10)]);
        let r = common_elements(&q(3, 2), &q(5, 2), &big(0), 40, &limit).unwrap();
        let fifteen = big(15);
        let multiples: Vec<_> = r.elements.iter().filter(|x| x.is_multiple_of(&fifteen)).collect();
        assert!(multiples.len() >= 3 && r.elements.contains(&big(15)) && r.elements.contains(&big(30)));
    }

    fn separates(a: &ExactReal, b: &ExactReal) -> SeparationWitness {
        let w = separation_witness(a, b).unwrap_or_else(|e| panic!("{a} vs {b}: {e}"));
        let na = beatty_naive(a, &w.x).unwrap();
        let nb = beatty_naive(b, &w.x).unwrap();
        assert_ne!(na.contains(&w.x), nb.contains(&w.x), "{a} vs {b}: {}", w.x);
        w
    }

    #[test]
    fn separation_examples() {
        let w = separates(&ExactReal::from_int(3), &q(5, 2));
        assert_eq!(w.x, big(7));
        assert_eq!(w.inside, q(5, 2));
        separates(&phi(), &phi().add_rational(&Rational::new(big(1), big(10))));
        separates(&sqrt(3), &sqrt(2));
        separates(&q(3, 2), &q(5, 4));
        separates(&q(5, 4), &sqrt(2));
        separates(&sqrt(5), &ExactReal::from_int(2));
        separates(&q(7, 4), &sqrt(2));
        let w = separates(&q(3, 2), &sqrt(2));
        assert_eq!(w.x, big(10));
        assert!(separation_witness(&sqrt(2), &sqrt(2)).is_err());
    }

    #[test]
    fn separation_sweep() {
        let rationals: Vec<_> = (5..40)
            .flat_map(|p| (p / 2 + 1..p).map(move |q| (p, q)))
            .collect();
        let irrationals = [
            sqrt(2),
            sqrt(3),
            phi(),
            sqrt(7).sub_rational(&Rational::one()),
            sqrt(5).sub_rational(&Rational::one()),
        ];
        for &(p, r) in &rationals {
            let rho = q(p, r);
            for beta in &irrationals {
                match separation_witness(&rho, beta) {
                    Ok(w) => {
                        let ins = beatty_naive(&w.inside, &w.x).unwrap();
                        let out = beatty_naive(&w.outside, &w.x).unwrap();
                        assert!(ins.contains(&w.x) && !out.contains(&w.x));
                    }
                    Err(Error::Unsupported(_)) => {}
                    Err(e) => panic!("{rho} vs {beta}: {e}"),
                }
            }
        }
    }

    #[test]
    fn claim51() {
        let rep = claim51_check(&Rational::new(big(3), big(2)), &sqrt(2)).unwrap();
        assert_eq!(rep.status, Claim51Status::Holds);
        assert_eq!(rep.m, Some(big(2)));
        assert_eq!(rep.y, Some(ExactReal::from_int(9)));
        assert_eq!(rep.k, Some(Rational::from_integer(big(6))));
        assert_eq!(rep.separator, Some(big(10)));
        let rep = claim51_check(&Rational::new(big(7), big(4)), &sqrt(3)).unwrap();
        assert_ne!(rep.status, Claim51Status::Holds);
        let rep = claim51_check(&Rational::new(big(3), big(2)), &phi()).unwrap();
        assert_eq!(rep.status, Claim51Status::NotApplicable);
    }
}
