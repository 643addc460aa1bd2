//! Linear certificates between `alpha^-1` and `beta^-1` and the set
//! relations they imply, checked on windows.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::window;
use crate::error::{Error, Result};
use crate::exactnum::{
    linear_relation_solve, CoefficientRule, ExactReal, LinearForm, LinearSolution, Rhs, Solve, Term,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertKind {
    /// `a/alpha + b/beta = 1`, `a, b > 0`: `N_alpha` and `N_beta` meet only in 0.
    Disjoint,
    /// `a(1 - 1/alpha) + b(1 - 1/beta) = 1`: together they cover every integer.
    Cover,
    /// `a/alpha + b(1 - 1/beta) = 1`: `N_alpha` is contained in `N_beta`.
    Subset,
    /// `1/alpha + 1/beta = 1`: disjoint and covering.
    Partition,
    /// `a/alpha + b/beta = c`, `ab < 0`, `c != 0`: infinitely many common elements.
    FactC,
    /// `a/alpha + b/beta = c`, `a, b, c > 0`, `c > 1`, `gcd(a, b, c) = 1`: infinitely many common elements.
    FactD,
    /// The subset relation for rational `alpha = rho`, `beta = sigma`.
    FactFPrime,
}

impl CertKind {
    pub const ALL: [CertKind; 7] = [
        CertKind::Disjoint,
        CertKind::Cover,
        CertKind::Subset,
        CertKind::Partition,
        CertKind::FactC,
        CertKind::FactD,
        CertKind::FactFPrime,
    ];

    pub fn form(self) -> LinearForm {
        use CoefficientRule::*;
        use Term::*;
        match self {
            CertKind::Disjoint | CertKind::Partition => LinearForm::new(Inverse, Inverse, Rhs::One, Positive),
            CertKind::Cover => LinearForm::new(Complement, Complement, Rhs::One, Positive),
            CertKind::Subset | CertKind::FactFPrime => {
                LinearForm::new(Inverse, Complement, Rhs::One, Positive)
            }
            CertKind::FactC => LinearForm::new(Inverse, Inverse, Rhs::Free, OppositeSigns),
            CertKind::FactD => LinearForm::new(Inverse, Inverse, Rhs::Free, PositiveCoprimeAboveOne),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CertKind::Disjoint => "DISJOINT",
            CertKind::Cover => "COVER",
            CertKind::Subset => "SUBSET",
            CertKind::Partition => "PARTITION",
            CertKind::FactC => "FACT_C",
            CertKind::FactD => "FACT_D",
            CertKind::FactFPrime => "FACT_F_PRIME",
        }
    }
}

impl fmt::Display for CertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CertKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase().replace('-', "_");
        CertKind::ALL
            .into_iter()
            .find(|k| k.name() == up)
            .ok_or_else(|| Error::parse(0, format!("unknown certificate kind '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertKind,
    pub coefficients: LinearSolution,
}

impl Certificate {
    /// The defining relation of the kind holds exactly for `(alpha, beta)`.
    pub fn holds(&self, alpha: &ExactReal, beta: &ExactReal) -> Result<bool> {
        if self.kind == CertKind::Partition && self.coefficients != LinearSolution::new(1, 1, 1) {
            return Ok(false);
        }
        self.kind.form().holds(alpha, beta, &self.coefficients)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.coefficients)
    }
}

/// Searches integer coefficients for `kind` with `|a|, |b|, |c| <= bound`.
pub fn certificate_search(
    kind: CertKind,
    alpha: &ExactReal,
    beta: &ExactReal,
    bound: &BigInt,
) -> Result<Option<Certificate>> {
    if kind == CertKind::FactFPrime && !(alpha.is_rational() && beta.is_rational()) {
        return Err(Error::domain(format!("{kind} needs two rationals")));
    }
    if kind == CertKind::Partition {
        let sol = LinearSolution::new(1, 1, 1);
        let cert = Certificate {
            kind,
            coefficients: sol,
        };
        let one = ExactReal::from_int(1);
        if alpha <= &one || beta <= &one {
            return Err(Error::domain("certificates need alpha, beta > 1"));
        }
        return Ok(cert.holds(alpha, beta)?.then_some(cert));
    }
    match linear_relation_solve(alpha, beta, &kind.form(), bound)? {
        Solve::Found(coefficients) => {
            let cert = Certificate { kind, coefficients };
            if !cert.holds(alpha, beta)? {
                return Err(Error::Internal(format!("{cert} fails its relation")));
            }
            Ok(Some(cert))
        }
        Solve::None(_) => Ok(None),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationReport {
    pub verdict: Verdict,
    pub relation: String,
    /// First value contradicting the relation, if any.
    pub counterexample: Option<BigInt>,
    /// A common element, for the kinds that promise them.
    pub common: Option<BigInt>,
    pub note: Option<String>,
}

/// Checks the set relation implied by `cert` on `[0, M]`.
///
/// For the common-element kinds the check asks for a common element in
/// `(M/2, M]`, a finite stand-in for "infinitely many".
pub fn verify_implication(
    alpha: &ExactReal,
    beta: &ExactReal,
    cert: &Certificate,
    bound: &BigInt,
) -> Result<ImplicationReport> {
    if !cert.holds(alpha, beta)? {
        return Err(Error::Certificate(format!(
            "{cert} does not hold for alpha = {alpha}, beta = {beta}"
        )));
    }
    let rational_pair = alpha.is_rational() || beta.is_rational();
    let relation = match cert.kind {
        CertKind::Disjoint => "N_alpha and N_beta meet only in 0",
        CertKind::Cover => "N_alpha and N_beta cover [0, M]",
        CertKind::Partition => "N_alpha and N_beta partition [1, M]",
        CertKind::Subset | CertKind::FactFPrime => "N_alpha is contained in N_beta",
        CertKind::FactC | CertKind::FactD => "N_alpha and N_beta share an element in (M/2, M]",
    }
    .to_string();
    let mut rep = ImplicationReport {
        verdict: Verdict::Pass,
        relation,
        counterexample: None,
        common: None,
        note: None,
    };
    if rational_pair
        && matches!(
            cert.kind,
            CertKind::Disjoint | CertKind::Cover | CertKind::Partition
        )
    {
        rep.verdict = Verdict::NotApplicable;
        rep.note = Some("the implication is stated for irrational pairs only".into());
        return Ok(rep);
    }
    let wa = window(alpha, bound)?;
    let wb = window(beta, bound)?;
    let mut k = BigInt::one();
    let half = bound.div_floor(&BigInt::from(2));
    while k <= *bound {
        let (ia, ib) = (wa.contains(&k), wb.contains(&k));
        let bad = match cert.kind {
            CertKind::Disjoint => ia && ib,
            CertKind::Cover => !ia && !ib,
            CertKind::Partition => ia == ib,
            CertKind::Subset | CertKind::FactFPrime => ia && !ib,
            CertKind::FactC | CertKind::FactD => {
                if ia && ib && k > half {
                    rep.common = Some(k.clone());
                    break;
                }
                false
            }
        };
        if bad {
            rep.verdict = Verdict::Fail;
            rep.counterexample = Some(k);
            return Ok(rep);
        }
        k += 1;
    }
    if matches!(cert.kind, CertKind::FactC | CertKind::FactD) && rep.common.is_none() {
        rep.verdict = Verdict::Fail;
    }
    Ok(rep)
}
