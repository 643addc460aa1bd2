//! Integer linear relations between `alpha^-1`, `beta^-1` and their
//! complements `1 - alpha^-1`, `1 - beta^-1`.
//!
//! Quadratic pairs over one `sqrt(d)` are solved by splitting the relation
//! over the basis `{1, sqrt(d)}`; rational pairs by clearing denominators and
//! parametrizing the Bezout solutions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::ext_gcd;
use super::real::ExactReal;
use super::Rational;
use crate::error::{Error, Result};

/// Which function of the input enters the relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// `x^-1`
    Inverse,
    /// `1 - x^-1`
    Complement,
}

impl Term {
    pub fn apply(self, x: &ExactReal) -> Result<ExactReal> {
        let inv = x.recip()?;
        Ok(match self {
            Term::Inverse => inv,
            Term::Complement => inv.neg().add_rational(&Rational::one()),
        })
    }
}

/// Right hand side of `a*X + b*Y = c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rhs {
    /// `c = 1`
    One,
    /// `c` is an unknown integer.
    Free,
}

/// Side conditions on the integer solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRule {
    /// `a, b > 0`
    Positive,
    /// `a*b < 0` and `c != 0`
    OppositeSigns,
    /// `a, b, c > 0`, `c > 1` and `gcd(a, b, c) = 1`
    PositiveCoprimeAboveOne,
}

/// The relation `a*left(alpha) + b*right(beta) = c` with its side conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub left: Term,
    pub right: Term,
    pub rhs: Rhs,
    pub rule: CoefficientRule,
}

impl LinearForm {
    pub const fn new(left: Term, right: Term, rhs: Rhs, rule: CoefficientRule) -> Self {
        LinearForm {
            left,
            right,
            rhs,
            rule,
        }
    }

    /// Checks `a*left(alpha) + b*right(beta) = c` and the side conditions exactly.
    pub fn holds(&self, alpha: &ExactReal, beta: &ExactReal, sol: &LinearSolution) -> Result<bool> {
        if self.rhs == Rhs::One && !sol.c.is_one() {
            return Ok(false);
        }
        if !self.rule.admits(&sol.a, &sol.b, &sol.c) {
            return Ok(false);
        }
        let x = self.left.apply(alpha)?;
        let y = self.right.apply(beta)?;
        let lhs = x.mul_int(&sol.a).add(&y.mul_int(&sol.b))?;
        Ok(lhs == ExactReal::from_int(sol.c.clone()))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = |t: Term, v: &str| match t {
            Term::Inverse => format!("{v}^-1"),
            Term::Complement => format!("(1-{v}^-1)"),
        };
        let rhs = match self.rhs {
            Rhs::One => "1",
            Rhs::Free => "c",
        };
        let rule = match self.rule {
            CoefficientRule::Positive => "a,b>0",
            CoefficientRule::OppositeSigns => "ab<0, c!=0",
            CoefficientRule::PositiveCoprimeAboveOne => "a,b,c>0, c>1, gcd(a,b,c)=1",
        };
        write!(
            f,
            "a*{} + b*{} = {rhs}; {rule}",
            t(self.left, "alpha"),
            t(self.right, "beta")
        )
    }
}

impl CoefficientRule {
    pub fn admits(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
        match self {
            CoefficientRule::Positive => a.is_positive() && b.is_positive(),
            CoefficientRule::OppositeSigns => (a * b).is_negative() && !c.is_zero(),
            CoefficientRule::PositiveCoprimeAboveOne => {
                a.is_positive() && b.is_positive() && *c > BigInt::one() && a.gcd(b).gcd(c).is_one()
            }
        }
    }
}

/// Integer solution `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSolution {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl LinearSolution {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        LinearSolution {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }
}

impl fmt::Display for LinearSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Outcome of [`linear_relation_solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    Found(LinearSolution),
    None(String),
}

fn within(bound: &BigInt, sol: &LinearSolution) -> bool {
    sol.a.abs() <= *bound && sol.b.abs() <= *bound && sol.c.abs() <= *bound
}

/// Solves `a*X + b*Y = c` for `X = left(alpha)`, `Y = right(beta)`.
///
/// Requires `alpha, beta > 1`, both rational or both quadratic over the same
/// radicand. Among several admissible solutions the rational path returns
/// the one with the smallest `b`; the free right hand side is searched with
/// growing `|a|, |b|`, positive `a` first.
pub fn linear_relation_solve(
    alpha: &ExactReal,
    beta: &ExactReal,
    form: &LinearForm,
    bound: &BigInt,
) -> Result<Solve> {
    let one = ExactReal::from_int(1);
    if alpha <= &one || beta <= &one {
        return Err(Error::domain(format!(
            "linear relations need alpha, beta > 1, got {alpha} and {beta}"
        )));
    }
    let x = form.left.apply(alpha)?.parts();
    let y = form.right.apply(beta)?.parts();
    let found = match (alpha.radicand(), beta.radicand()) {
        (None, None) => solve_rational(&x.r, &y.r, form, bound)?,
        (Some(d), Some(e)) if d == e => solve_quadratic((&x.r, &x.s), (&y.r, &y.s), form, bound),
        (Some(d), Some(e)) => {
            return Err(Error::Unsupported(format!(
                "linear relation between Q(sqrt({d})) and Q(sqrt({e}))"
            )))
        }
        _ => {
            return Err(Error::Unsupported(
                "linear relation between a rational and an irrational value".into(),
            ))
        }
    };
    Ok(match found {
        Some(sol) => {
            if !form.holds(alpha, beta, &sol)? {
                return Err(Error::Internal(format!("solution {sol} fails {form}")));
            }
            Solve::Found(sol)
        }
        None => Solve::None(format!("no integer solution of {form} within bound {bound}")),
    })
}

fn integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// Scales a rational vector to the primitive integer vector with the same direction.
fn primitive(u: &Rational, v: &Rational) -> (BigInt, BigInt) {
    let l = u.denom().lcm(v.denom());
    let a = u.numer() * (&l / u.denom());
    let b = v.numer() * (&l / v.denom());
    let g = a.gcd(&b);
    (a / &g, b / &g)
}

fn solve_quadratic(
    (x0, x1): (&Rational, &Rational),
    (y0, y1): (&Rational, &Rational),
    form: &LinearForm,
    bound: &BigInt,
) -> Option<LinearSolution> {
    match form.rhs {
        Rhs::One => {
            // a x0 + b y0 = 1, a x1 + b y1 = 0
            let det = x0 * y1 - y0 * x1;
            if det.is_zero() {
                return None;
            }
            let a = integer(&(y1 / &det))?;
            let b = integer(&(-(x1 / &det)))?;
            let sol = LinearSolution::new(a, b, 1);
            (within(bound, &sol) && form.rule.admits(&sol.a, &sol.b, &sol.c)).then_some(sol)
        }
        Rhs::Free => {
            // (a, b) = t * (y1, -x1), c = t * (dir . (x0, y0)) must be integral
            let (da, db) = primitive(y1, &-x1);
            let r = Rational::from_integer(da.clone()) * x0 + Rational::from_integer(db.clone()) * y0;
            let step = r.denom().clone();
            let mut j = BigInt::one();
            loop {
                let mut any_inside = false;
                for t in [&j * &step, -(&j * &step)] {
                    let sol = LinearSolution {
                        a: &da * &t,
                        b: &db * &t,
                        c: (&r * Rational::from_integer(t.clone())).to_integer(),
                    };
                    if !within(bound, &sol) {
                        continue;
                    }
                    any_inside = true;
                    if form.rule.admits(&sol.a, &sol.b, &sol.c) {
                        return Some(sol);
                    }
                }
                if !any_inside {
                    return None;
                }
                j += 1;
            }
        }
    }
}

fn solve_rational(
    x: &Rational,
    y: &Rational,
    form: &LinearForm,
    bound: &BigInt,
) -> Result<Option<LinearSolution>> {
    match form.rhs {
        Rhs::One => {
            // A a + B b = L with A = xL, B = yL, L = lcm of denominators
            let l = x.denom().lcm(y.denom());
            let big_a = (x * Rational::from_integer(l.clone())).to_integer();
            let big_b = (y * Rational::from_integer(l.clone())).to_integer();
            let (g, s, t) = ext_gcd(&big_a, &big_b)?;
            if !l.is_multiple_of(&g) {
                return Ok(None);
            }
            let k = &l / &g;
            let (a0, b0) = (s * &k, t * &k);
            let (sa, sb) = (&big_b / &g, &big_a / &g);
            // a = a0 + sa*u, b = b0 - sb*u; A, B > 0 so b decreases in u.
            // Start from the largest u with b >= 1 and walk down (b increasing).
            let mut u = (&b0 - BigInt::one()).div_floor(&sb);
            loop {
                let sol = LinearSolution {
                    a: &a0 + &sa * &u,
                    b: &b0 - &sb * &u,
                    c: BigInt::one(),
                };
                if !sol.a.is_positive() || sol.b.abs() > *bound {
                    return Ok(None);
                }
                if within(bound, &sol) && form.rule.admits(&sol.a, &sol.b, &sol.c) {
                    return Ok(Some(sol));
                }
                u -= 1;
            }
        }
        Rhs::Free => {
            // Shells of growing max(|a|, |b|); inside a shell a runs downward.
            let mut m = BigInt::one();
            while m <= *bound {
                let mut a = m.clone();
                while a >= -m.clone() {
                    let mut b = -m.clone();
                    while b <= m {
                        if a.abs() == m || b.abs() == m {
                            let c =
                                Rational::from_integer(a.clone()) * x + Rational::from_integer(b.clone()) * y;
                            if let Some(c) = integer(&c) {
                                let sol = LinearSolution {
                                    a: a.clone(),
                                    b: b.clone(),
                                    c,
                                };
                                if within(bound, &sol) && form.rule.admits(&sol.a, &sol.b, &sol.c) {
                                    return Ok(Some(sol));
                                }
                            }
                        }
                        b += 1;
                    }
                    a -= 1;
                }
                m += 1;
            }
            Ok(None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> ExactReal {
        ExactReal::quadratic(a, b, c, d).unwrap()
    }
    const DISJOINT: LinearForm =
        LinearForm::new(Term::Inverse, Term::Inverse, Rhs::One, CoefficientRule::Positive);
    const FACT_C: LinearForm = LinearForm::new(
        Term::Inverse,
        Term::Inverse,
        Rhs::Free,
        CoefficientRule::OppositeSigns,
    );

    fn bound() -> BigInt {
        BigInt::from(100)
    }

    #[test]
    fn partition_pair_over_sqrt2() {
        let got = linear_relation_solve(&q(2, 1, 1, 2), &q(0, 1, 1, 2), &DISJOINT, &bound()).unwrap();
        assert_eq!(got, Solve::Found(LinearSolution::new(1, 1, 1)));
    }

    #[test]
    fn opposite_sign_relation() {
        let got = linear_relation_solve(&q(0, 1, 1, 2), &q(1, 1, 1, 2), &FACT_C, &bound()).unwrap();
        assert_eq!(got, Solve::Found(LinearSolution::new(2, -1, 1)));
    }

    #[test]
    fn equal_irrationals_have_no_positive_relation() {
        let phi = ExactReal::golden_ratio();
        let got = linear_relation_solve(&phi, &phi, &DISJOINT, &bound()).unwrap();
        assert!(matches!(got, Solve::None(_)));
    }

    #[test]
    fn rational_subset_relation_prefers_small_b() {
        let form = LinearForm::new(
            Term::Inverse,
            Term::Complement,
            Rhs::One,
            CoefficientRule::Positive,
        );
        let rho = ExactReal::from_int(3);
        let sigma = ExactReal::ratio(3, 2).unwrap();
        let got = linear_relation_solve(&rho, &sigma, &form, &bound()).unwrap();
        assert_eq!(got, Solve::Found(LinearSolution::new(2, 1, 1)));
    }

    #[test]
    fn mixed_and_cross_field_pairs_are_unsupported() {
        let r = ExactReal::ratio(3, 2).unwrap();
        assert!(matches!(
            linear_relation_solve(&r, &q(0, 1, 1, 2), &DISJOINT, &bound()),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            linear_relation_solve(&q(0, 1, 1, 3), &q(0, 1, 1, 2), &DISJOINT, &bound()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn fact_d_style_relation() {
        let form = LinearForm::new(
            Term::Inverse,
            Term::Inverse,
            Rhs::Free,
            CoefficientRule::PositiveCoprimeAboveOne,
        );
        // alpha^-1 = 1 - sqrt(2)/2, beta^-1 = (4 + sqrt(2))/14
        let got = linear_relation_solve(&q(2, 1, 1, 2), &q(4, -1, 1, 2), &form, &bound()).unwrap();
        assert_eq!(got, Solve::Found(LinearSolution::new(1, 7, 3)));
    }
}
