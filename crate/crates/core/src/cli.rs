//! Command line front end.
//!
//! Every command prints either an envelope of exact strings (`--format json`)
//! or `key: value` lines. The envelope echoes a canonical `argv` that
//! reproduces the same payload when run again.
//!
//! Exit codes: 0 success, 1 a checked relation failed, 2 usage or input
//! error, 3 a resource limit or guard was hit.

use std::ffi::OsString;
use std::fmt::Display;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::approx::{self, Approximation, BoundKind, Side};
use crate::beatty::{self, CertKind, Certificate, Claim51Status, Rect, SearchOutcome, Verdict};
use crate::error::{Error, Result};
use crate::exactnum::{ExactReal, LinearSolution, Rational};
use crate::farey::{self, FareyFraction};
use crate::nonarch::{self, IpElem, LaurentElem, LinfReport};
use crate::oracle;

pub const DEFAULT_LIST_LIMIT: u64 = 1_000_000;
pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000;
pub const DEFAULT_CERT_BOUND: u64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "diophant",
    version,
    about = "Exact Diophantine approximation, Farey series and Beatty sequences"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Top,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Scan or output limit for the command; see each command's help
    #[arg(long, global = true)]
    limit: Option<String>,
    /// Series precision for nonarch commands (coefficients through eps^P)
    #[arg(long, global = true)]
    precision: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum Top {
    /// Farey series
    #[command(subcommand)]
    Farey(FareyCmd),
    /// Rational approximation with exact bounds
    #[command(subcommand)]
    Approx(ApproxCmd),
    /// Beatty sequences on finite windows
    #[command(subcommand)]
    Beatty(BeattyCmd),
    /// The Laurent-series model with integer part Z + tQ[t]
    #[command(subcommand)]
    Nonarch(NonarchCmd),
    /// Brute-force reference computations (small inputs only)
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Subcommand, Debug)]
enum FareyCmd {
    /// All terms of the series of order N (--limit caps the count)
    List { n: String },
    /// Right neighbour of h/k in the series of order N
    Succ { f: String, n: String },
    /// Left neighbour of h/k in the series of order N
    Pred { f: String, n: String },
    /// Mediant of two fractions f < g
    Mediant { f: String, g: String },
    /// floor(N^2 h/k)
    Phi { f: String, n: String },
    /// Greatest term with phi < m (or <= m with --non-strict)
    Greatest {
        n: String,
        m: String,
        #[arg(long)]
        non_strict: bool,
    },
    /// Consecutive terms around an irrational in (0, 1)
    Bracket {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        n: String,
    },
}

#[derive(Subcommand, Debug)]
enum ApproxCmd {
    /// q <= Q and |alpha - p/q| <= 1/(qQ)
    Dirichlet { alpha: String, q: String },
    /// q > Q and |alpha - p/q| < 1/q^2
    Large { alpha: String, q: String },
    /// Asymmetric bound with parameter tau (--limit caps the doubling rounds)
    Segre { alpha: String, tau: String, q: String },
    /// |alpha - p/q| < 1/(sqrt(5) q^2) with q > Q
    Hurwitz { alpha: String, q: String },
    /// One-sided approximation, SIDE is above or below
    Onesided { alpha: String, q: String, side: String },
    /// Re-check a claimed bound: KIND is dirichlet Q | square Q | segre TAU Q | hurwitz Q | onesided SIDE Q
    Verify {
        alpha: String,
        frac: String,
        kind: String,
        params: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum BeattyCmd {
    /// floor(n alpha)
    Term { alpha: String, n: String },
    /// N_alpha on [0, M] with witnesses (--limit caps M)
    Window { alpha: String, m: String },
    /// Least n with floor(n alpha) = k
    Member { alpha: String, k: String },
    /// |{ n >= 1 : floor(n alpha) <= h }|
    Mu { alpha: String, h: String },
    /// Disjointness and covering on [1, M]
    Partition { alpha: String, beta: String, m: String },
    /// N_{p/q} as a union of progressions, checked on [0, M]
    Apdecomp { p: String, q: String, m: String },
    /// An element in exactly one of N_alpha, N_beta
    Separate { alpha: String, beta: String },
    /// Search certificate coefficients (--limit bounds |a|, |b|, |c|)
    Cert {
        kind: String,
        alpha: String,
        beta: String,
    },
    /// Check the set relation a certificate implies on [0, M]
    Imply {
        kind: String,
        alpha: String,
        beta: String,
        m: String,
        /// Coefficients a,b,c; searched when absent
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
    },
    /// First COUNT common elements above START (--limit caps the scanned range)
    Common {
        alpha: String,
        beta: String,
        start: String,
        count: String,
    },
    /// Least n <= limit with l < frac(n alpha) < r
    Dmo { alpha: String, l: String, r: String },
    /// Least n <= limit with floor(n m alpha) = k mod m
    Residue { alpha: String, m: String, k: String },
    /// Integers M, n with l < M^(1/p) - n < r
    Pthroot { p: String, l: String, r: String },
    /// Least n <= limit with frac(n alpha), frac(n beta) in a box
    Kronecker {
        alpha: String,
        beta: String,
        l1: String,
        r1: String,
        l2: String,
        r2: String,
    },
    /// delta such that N_alpha agrees with N_rho below m for 0 < alpha - rho < delta
    Radius { rho: String, m: String },
    /// Probe of the separation claim for rational rho and irrational beta
    Claim51 { rho: String, beta: String },
}

#[derive(Subcommand, Debug)]
enum NonarchCmd {
    /// The integer part of an element
    Floor {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Evaluate an element and report its order data
    Arith {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// floor(n alpha) for each listed n in I
    Beatty {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(required = true)]
        n: Vec<String>,
    },
    /// Separate N_sigma from N_rho, 1 <= sigma < rho < 2 (--limit caps the scan)
    Linf {
        #[arg(allow_hyphen_values = true)]
        sigma: String,
        #[arg(allow_hyphen_values = true)]
        rho: String,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Generate-and-sort Farey series, N <= 1000
    Farey { n: String },
    /// Every pair satisfying the Dirichlet bound, Q <= 1000
    Dirichlet { alpha: String, q: String },
    /// Direct enumeration of N_alpha on [0, M], M <= 100000
    Beatty { alpha: String, m: String },
}

/// Everything a command run produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: String,
    argv: Vec<String>,
    inputs: Map<String, Value>,
    result: Map<String, Value>,
    verification: Map<String, Value>,
    resources: Map<String, Value>,
    code: i32,
}

impl Report {
    fn new(path: &[&str]) -> Report {
        Report {
            command: path.join(" "),
            argv: path.iter().map(|s| s.to_string()).collect(),
            inputs: Map::new(),
            result: Map::new(),
            verification: Map::new(),
            resources: Map::new(),
            code: 0,
        }
    }

    fn input(&mut self, name: &str, v: impl Display) {
        let s = v.to_string();
        self.argv.push(s.clone());
        self.inputs.insert(name.into(), Value::String(s));
    }

    fn option(&mut self, flag: &str, name: &str, v: impl Display) {
        let s = v.to_string();
        self.argv.push(format!("--{flag}"));
        self.argv.push(s.clone());
        self.inputs.insert(name.into(), Value::String(s));
    }

    fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.result.insert(key.into(), v.into());
    }

    fn check(&mut self, key: &str, ok: bool) {
        self.verification.insert(key.into(), Value::Bool(ok));
        if !ok && self.code == 0 {
            self.code = 1;
        }
    }

    fn resource(&mut self, key: &str, v: impl Into<Value>) {
        self.resources.insert(key.into(), v.into());
    }

    /// Stderr summary for runs that complete with a nonzero code.
    fn diagnostics(&self) -> String {
        match self.code {
            1 => {
                let failed: Vec<&str> = self
                    .verification
                    .iter()
                    .filter(|(_, v)| v.as_bool() != Some(true))
                    .map(|(k, _)| k.as_str())
                    .collect();
                format!("{}: check failed: {}\n", self.command, failed.join(", "))
            }
            3 => {
                let res: Vec<String> = self
                    .resources
                    .iter()
                    .map(|(k, v)| format!("{k} = {}", plain(v)))
                    .collect();
                format!("{}: resource limit reached ({})\n", self.command, res.join(", "))
            }
            _ => String::new(),
        }
    }

    fn render(mut self, format: Format) -> (i32, String) {
        match format {
            Format::Json => {
                self.argv.push("--format".into());
                self.argv.push("json".into());
                let mut env = Map::new();
                env.insert("command".into(), Value::String(self.command));
                env.insert("argv".into(), self.argv.into_iter().map(Value::String).collect());
                env.insert("inputs".into(), Value::Object(self.inputs));
                env.insert("result".into(), Value::Object(self.result));
                env.insert("verification".into(), Value::Object(self.verification));
                env.insert("resources".into(), Value::Object(self.resources));
                (self.code, Value::Object(env).to_string() + "\n")
            }
            Format::Plain => {
                let mut out = String::new();
                for (k, v) in &self.result {
                    out += &format!("{k}: {}\n", plain(v));
                }
                for (k, v) in &self.verification {
                    let ok = v.as_bool() == Some(true);
                    out += &format!("check {k}: {}\n", if ok { "ok" } else { "FAILED" });
                }
                for (k, v) in &self.resources {
                    out += &format!("{k}: {}\n", plain(v));
                }
                (self.code, out)
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(a) => a.iter().map(plain).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn s(v: impl Display) -> Value {
    Value::String(v.to_string())
}

fn opt(v: Option<impl Display>) -> Value {
    v.map_or(Value::Null, s)
}

fn list<T: Display>(it: impl IntoIterator<Item = T>) -> Value {
    Value::Array(it.into_iter().map(s).collect())
}

fn int(name: &str, src: &str) -> Result<BigInt> {
    src.trim()
        .parse()
        .map_err(|_| Error::parse(0, format!("{name}: expected an integer, got '{src}'")))
}

fn real(name: &str, src: &str) -> Result<ExactReal> {
    src.parse().map_err(|e| match e {
        Error::Parse { pos, msg } => Error::parse(pos, format!("{name}: {msg}")),
        e => e,
    })
}

fn rational(name: &str, src: &str) -> Result<Rational> {
    match real(name, src)? {
        ExactReal::Rational(r) => Ok(r),
        x => Err(Error::domain(format!("{name} must be rational, got {x}"))),
    }
}

/// `h/k` or `h` without reduction.
fn pair(name: &str, src: &str) -> Result<(BigInt, BigInt)> {
    match src.split_once('/') {
        Some((h, k)) => Ok((int(name, h)?, int(name, k)?)),
        None => Ok((int(name, src)?, BigInt::one())),
    }
}

fn laurent(name: &str, src: &str, prec: i64) -> Result<LaurentElem> {
    nonarch::parse_with_precision(src, prec).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::parse(pos, format!("{name}: {msg}")),
        e => e,
    })
}

/// Canonical echo of a Laurent input: exact elements print exactly, series
/// keep their source text.
fn laurent_echo(src: &str, x: &LaurentElem) -> String {
    if x.is_exact() {
        x.to_string()
    } else {
        src.split_whitespace().collect::<Vec<_>>().join(" ")
    }
}

struct Ctx {
    limit: Option<BigInt>,
    precision: Option<i64>,
}

impl Ctx {
    fn limit(&self, rep: &mut Report, default: u64) -> BigInt {
        let l = self.limit.clone().unwrap_or_else(|| BigInt::from(default));
        rep.option("limit", "limit", &l);
        rep.resource("limit", s(&l));
        l
    }

    fn precision(&self, rep: &mut Report) -> Result<i64> {
        let p = self.precision.unwrap_or(nonarch::DEFAULT_PRECISION);
        if !(0..=10_000).contains(&p) {
            return Err(Error::domain(format!(
                "precision must lie in [0, 10000], got {p}"
            )));
        }
        rep.option("precision", "precision", p);
        Ok(p)
    }
}

fn cap(name: &str, value: &BigInt, limit: &BigInt) -> Result<()> {
    if value > limit {
        Err(Error::ResourceLimit(format!(
            "{name} = {value} exceeds --limit {limit}"
        )))
    } else {
        Ok(())
    }
}

fn approx_result(rep: &mut Report, alpha: &ExactReal, a: &Approximation) {
    rep.set("p", s(&a.p));
    rep.set("q", s(&a.q));
    let (lo, hi) = a.bounds();
    if lo == hi.neg() {
        rep.set("bound", s(&hi));
    } else {
        rep.set("lower", s(&lo));
        rep.set("upper", s(&hi));
    }
    rep.set("verified", a.verified);
    rep.set("kind", s(&a.kind));
    rep.check("bound", approx::verify(alpha, a));
}

fn side(src: &str) -> Result<Side> {
    match src.to_ascii_lowercase().as_str() {
        "above" => Ok(Side::Above),
        "below" => Ok(Side::Below),
        _ => Err(Error::parse(
            0,
            format!("side must be above or below, got '{src}'"),
        )),
    }
}

fn rounds(ctx: &Ctx, rep: &mut Report) -> Result<u32> {
    let l = ctx.limit(rep, approx::DEFAULT_MAX_ROUNDS as u64);
    l.to_u32()
        .filter(|&r| r >= 1)
        .ok_or_else(|| Error::domain(format!("--limit (rounds) must lie in [1, 2^32), got {l}")))
}

fn farey(cmd: FareyCmd, ctx: &Ctx) -> Result<Report> {
    Ok(match cmd {
        FareyCmd::List { n } => {
            let mut rep = Report::new(&["farey", "list"]);
            let n = int("N", &n)?;
            rep.input("N", &n);
            let limit = ctx.limit(&mut rep, DEFAULT_LIST_LIMIT);
            let mut terms = Vec::new();
            let mut hit = false;
            let mut identity = true;
            let mut prev: Option<FareyFraction> = None;
            for f in farey::enumerate(&n)? {
                if BigInt::from(terms.len()) >= limit {
                    hit = true;
                    break;
                }
                if let Some(p) = &prev {
                    identity &= p.cross(&f).is_one();
                }
                terms.push(f.to_string());
                prev = Some(f);
            }
            rep.set("order", s(&n));
            rep.set("count", s(terms.len()));
            rep.set("terms", list(terms));
            rep.check("neighbour_identity", identity);
            rep.resource("limit_hit", hit);
            if hit {
                rep.code = 3;
            }
            rep
        }
        FareyCmd::Succ { f, n } => neighbour(&f, &n, true)?,
        FareyCmd::Pred { f, n } => neighbour(&f, &n, false)?,
        FareyCmd::Mediant { f, g } => {
            let mut rep = Report::new(&["farey", "mediant"]);
            let (fh, fk) = pair("f", &f)?;
            let (gh, gk) = pair("g", &g)?;
            let order = (&fk).max(&gk).clone();
            let f = FareyFraction::new(fh, fk, order.clone())?;
            let g = FareyFraction::new(gh, gk, order)?;
            rep.input("f", &f);
            rep.input("g", &g);
            let m = farey::mediant(&f, &g)?;
            rep.set("num", s(&m.num));
            rep.set("den", s(&m.den));
            rep.set("value", s(&m.value));
            rep.check("strictly_between", f.value() < m.value && m.value < g.value());
            rep
        }
        FareyCmd::Phi { f, n } => {
            let mut rep = Report::new(&["farey", "phi"]);
            let (h, k) = pair("f", &f)?;
            let n = int("N", &n)?;
            let f = FareyFraction::new(h, k, n.clone())?;
            rep.input("f", &f);
            rep.input("N", &n);
            rep.set("phi", s(farey::phi_embed(&f)));
            rep
        }
        FareyCmd::Greatest { n, m, non_strict } => {
            let mut rep = Report::new(&["farey", "greatest"]);
            let n = int("N", &n)?;
            let m = int("m", &m)?;
            rep.input("N", &n);
            rep.input("m", &m);
            if non_strict {
                rep.argv.push("--non-strict".into());
                rep.inputs.insert("strict".into(), Value::Bool(false));
            }
            let f = farey::greatest_below(&n, &m, !non_strict)?;
            let phi = farey::phi_embed(&f);
            rep.set("fraction", s(&f));
            rep.set("phi", s(&phi));
            let below = |x: &BigInt| if non_strict { *x <= m } else { *x < m };
            let maximal = farey::successor(&f).map_or(true, |g| !below(&farey::phi_embed(&g)));
            rep.check("below_m", below(&phi));
            rep.check("greatest", maximal);
            rep
        }
        FareyCmd::Bracket { alpha, n } => {
            let mut rep = Report::new(&["farey", "bracket"]);
            let a = real("alpha", &alpha)?;
            let n = int("N", &n)?;
            rep.input("alpha", &a);
            rep.input("N", &n);
            let b = farey::bracket(&a, &n)?;
            rep.set("lo", s(&b.lo));
            rep.set("hi", s(&b.hi));
            rep.set("mediant", s(b.mediant().value));
            rep.check("neighbour_identity", b.lo.cross(&b.hi).is_one());
            let inside = a.cmp_rational(&b.lo.value()).is_gt() && a.cmp_rational(&b.hi.value()).is_lt();
            rep.check("brackets_alpha", inside);
            rep
        }
    })
}

fn neighbour(f: &str, n: &str, next: bool) -> Result<Report> {
    let mut rep = Report::new(&["farey", if next { "succ" } else { "pred" }]);
    let (h, k) = pair("f", f)?;
    let n = int("N", n)?;
    let f = FareyFraction::new(h, k, n.clone())?;
    rep.input("f", &f);
    rep.input("N", &n);
    let g = if next {
        farey::successor(&f)?
    } else {
        farey::predecessor(&f)?
    };
    rep.set(if next { "successor" } else { "predecessor" }, s(&g));
    let (lo, hi) = if next { (&f, &g) } else { (&g, &f) };
    rep.check("neighbour_identity", lo.cross(hi).is_one());
    rep.check("denominator_sum", lo.k() + hi.k() > n);
    Ok(rep)
}

fn approx_cmd(cmd: ApproxCmd, ctx: &Ctx) -> Result<Report> {
    Ok(match cmd {
        ApproxCmd::Dirichlet { alpha, q } => {
            let mut rep = Report::new(&["approx", "dirichlet"]);
            let a = real("alpha", &alpha)?;
            let q = int("Q", &q)?;
            rep.input("alpha", &a);
            rep.input("Q", &q);
            let r = approx::dirichlet(&a, &q)?;
            approx_result(&mut rep, &a, &r);
            rep
        }
        ApproxCmd::Large { alpha, q } => {
            let mut rep = Report::new(&["approx", "large"]);
            let a = real("alpha", &alpha)?;
            let q = int("Q", &q)?;
            rep.input("alpha", &a);
            rep.input("Q", &q);
            let r = approx::large_denominator(&a, &q)?;
            approx_result(&mut rep, &a, &r);
            rep
        }
        ApproxCmd::Segre { alpha, tau, q } => {
            let mut rep = Report::new(&["approx", "segre"]);
            let a = real("alpha", &alpha)?;
            let tau = rational("tau", &tau)?;
            let q = int("Q", &q)?;
            rep.input("alpha", &a);
            rep.input("tau", &tau);
            rep.input("Q", &q);
            let rounds = rounds(ctx, &mut rep)?;
            let r = approx::segre_with_rounds(&a, &tau, &q, rounds)?;
            approx_result(&mut rep, &a, &r);
            rep
        }
        ApproxCmd::Hurwitz { alpha, q } => {
            let mut rep = Report::new(&["approx", "hurwitz"]);
            let a = real("alpha", &alpha)?;
            let q = int("Q", &q)?;
            rep.input("alpha", &a);
            rep.input("Q", &q);
            let r = approx::hurwitz(&a, &q)?;
            approx_result(&mut rep, &a, &r);
            rep.check("hurwitz_squaring", approx::hurwitz_holds(&a, &r.p, &r.q));
            rep
        }
        ApproxCmd::Onesided { alpha, q, side: sd } => {
            let mut rep = Report::new(&["approx", "onesided"]);
            let a = real("alpha", &alpha)?;
            let q = int("Q", &q)?;
            let sd = side(&sd)?;
            rep.input("alpha", &a);
            rep.input("Q", &q);
            rep.input("side", sd.to_string().to_ascii_lowercase());
            let r = approx::one_sided(&a, &q, sd)?;
            approx_result(&mut rep, &a, &r);
            rep
        }
        ApproxCmd::Verify {
            alpha,
            frac,
            kind,
            params,
        } => {
            let mut rep = Report::new(&["approx", "verify"]);
            let a = real("alpha", &alpha)?;
            let (p, q) = pair("p/q", &frac)?;
            rep.input("alpha", &a);
            rep.input("p/q", format!("{p}/{q}"));
            let want = |n: usize| -> Result<()> {
                if params.len() == n {
                    Ok(())
                } else {
                    Err(Error::parse(
                        0,
                        format!("{kind} takes {n} parameter(s), got {}", params.len()),
                    ))
                }
            };
            let kind_lc = kind.to_ascii_lowercase();
            rep.input("kind", &kind_lc);
            let bk = match kind_lc.as_str() {
                "dirichlet" | "square" | "hurwitz" => {
                    want(1)?;
                    let big_q = int("Q", &params[0])?;
                    rep.input("Q", &big_q);
                    match kind_lc.as_str() {
                        "dirichlet" => BoundKind::Dirichlet(big_q),
                        "square" => BoundKind::Square(big_q),
                        _ => BoundKind::Hurwitz(big_q),
                    }
                }
                "segre" => {
                    want(2)?;
                    let tau = rational("tau", &params[0])?;
                    let big_q = int("Q", &params[1])?;
                    rep.input("tau", &tau);
                    rep.input("Q", &big_q);
                    BoundKind::Segre { tau, min_q: big_q }
                }
                "onesided" => {
                    want(2)?;
                    let sd = side(&params[0])?;
                    let big_q = int("Q", &params[1])?;
                    rep.input("side", sd.to_string().to_ascii_lowercase());
                    rep.input("Q", &big_q);
                    BoundKind::OneSided {
                        side: sd,
                        min_q: big_q,
                    }
                }
                _ => return Err(Error::parse(0, format!("unknown bound kind '{kind}'"))),
            };
            let appr = Approximation {
                p,
                q,
                kind: bk,
                verified: false,
            };
            let ok = approx::verify(&a, &appr);
            rep.set("holds", ok);
            rep.set("kind", s(&appr.kind));
            rep.check("bound", ok);
            rep
        }
    })
}

fn outcome(rep: &mut Report, o: &SearchOutcome) {
    match o {
        SearchOutcome::Found(n) => {
            rep.set("n", s(n));
            rep.resource("exhausted", false);
        }
        SearchOutcome::Exhausted(_) => {
            rep.set("n", Value::Null);
            rep.resource("exhausted", true);
        }
    }
}

fn cert_value(c: &Certificate) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), s(c.kind));
    m.insert("a".into(), s(&c.coefficients.a));
    m.insert("b".into(), s(&c.coefficients.b));
    m.insert("c".into(), s(&c.coefficients.c));
    Value::Object(m)
}

fn beatty_cmd(cmd: BeattyCmd, ctx: &Ctx) -> Result<Report> {
    Ok(match cmd {
        BeattyCmd::Term { alpha, n } => {
            let mut rep = Report::new(&["beatty", "term"]);
            let a = real("alpha", &alpha)?;
            let n = int("n", &n)?;
            rep.input("alpha", &a);
            rep.input("n", &n);
            rep.set("value", s(beatty::beatty_term(&a, &n)?));
            rep
        }
        BeattyCmd::Window { alpha, m } => {
            let mut rep = Report::new(&["beatty", "window"]);
            let a = real("alpha", &alpha)?;
            let m = int("M", &m)?;
            rep.input("alpha", &a);
            rep.input("M", &m);
            let limit = ctx.limit(&mut rep, DEFAULT_LIST_LIMIT);
            cap("M", &m, &limit)?;
            let w = beatty::window(&a, &m)?;
            rep.set("count", s(w.len()));
            rep.set("members", list(w.values()));
            let wit: Map<String, Value> = w.members.iter().map(|(k, n)| (k.to_string(), s(n))).collect();
            rep.set("witnesses", Value::Object(wit));
            let sound = w.members.iter().all(|(k, n)| a.mul_int(n).floor() == *k);
            rep.check("witnesses", sound);
            rep
        }
        BeattyCmd::Member { alpha, k } => {
            let mut rep = Report::new(&["beatty", "member"]);
            let a = real("alpha", &alpha)?;
            let k = int("k", &k)?;
            rep.input("alpha", &a);
            rep.input("k", &k);
            let w = beatty::member(&a, &k)?;
            rep.set("member", w.is_some());
            rep.set("witness", opt(w.as_ref()));
            if let Some(n) = &w {
                rep.check("witness", a.mul_int(n).floor() == k);
            }
            rep
        }
        BeattyCmd::Mu { alpha, h } => {
            let mut rep = Report::new(&["beatty", "mu"]);
            let a = real("alpha", &alpha)?;
            let h = int("h", &h)?;
            rep.input("alpha", &a);
            rep.input("h", &h);
            rep.set("mu", s(beatty::mu(&a, &h)?));
            rep
        }
        BeattyCmd::Partition { alpha, beta, m } => {
            let mut rep = Report::new(&["beatty", "partition"]);
            let a = real("alpha", &alpha)?;
            let b = real("beta", &beta)?;
            let m = int("M", &m)?;
            rep.input("alpha", &a);
            rep.input("beta", &b);
            rep.input("M", &m);
            let limit = ctx.limit(&mut rep, DEFAULT_LIST_LIMIT);
            cap("M", &m, &limit)?;
            let r = beatty::partition_check(&a, &b, &m)?;
            rep.set("verdict", if r.pass() { "PASS" } else { "FAIL" });
            rep.set(
                "first_overlap",
                r.first_overlap
                    .as_ref()
                    .map_or(Value::Null, |(k, na, nb)| list([k, na, nb])),
            );
            rep.set("first_gap", opt(r.first_gap.as_ref()));
            rep.check("disjoint", r.first_overlap.is_none());
            rep.check("cover", r.first_gap.is_none());
            rep
        }
        BeattyCmd::Apdecomp { p, q, m } => {
            let mut rep = Report::new(&["beatty", "apdecomp"]);
            let p = int("p", &p)?;
            let q = int("q", &q)?;
            let m = int("M", &m)?;
            rep.input("p", &p);
            rep.input("q", &q);
            rep.input("M", &m);
            let limit = ctx.limit(&mut rep, DEFAULT_LIST_LIMIT);
            cap("M", &m, &limit)?;
            let d = beatty::ap_decomposition(&p, &q, &m)?;
            rep.set("p", s(&d.p));
            rep.set("q", s(&d.q));
            rep.set("progressions", list(&d.progressions));
            rep.check("union_matches_window", d.union_matches);
            rep.check("top_residue_absent", d.top_residue_absent);
            rep
        }
        BeattyCmd::Separate { alpha, beta } => {
            let mut rep = Report::new(&["beatty", "separate"]);
            let a = real("alpha", &alpha)?;
            let b = real("beta", &beta)?;
            rep.input("alpha", &a);
            rep.input("beta", &b);
            let w = beatty::separation_witness(&a, &b)?;
            rep.set("x", s(&w.x));
            rep.set("inside", s(&w.inside));
            rep.set("outside", s(&w.outside));
            rep.set("n", s(&w.n));
            rep.set("trace", list(&w.trace));
            rep.check("in_inside", beatty::member(&w.inside, &w.x)?.is_some());
            rep.check("not_in_outside", beatty::member(&w.outside, &w.x)?.is_none());
            rep
        }
        BeattyCmd::Cert { kind, alpha, beta } => {
            let mut rep = Report::new(&["beatty", "cert"]);
            let kind: CertKind = kind.parse()?;
            let a = real("alpha", &alpha)?;
            let b = real("beta", &beta)?;
            rep.input("kind", kind);
            rep.input("alpha", &a);
            rep.input("beta", &b);
            let bound = ctx.limit(&mut rep, DEFAULT_CERT_BOUND);
            let c = beatty::certificate_search(kind, &a, &b, &bound)?;
            rep.set("found", c.is_some());
            rep.set("certificate", c.as_ref().map_or(Value::Null, cert_value));
            if let Some(c) = &c {
                rep.check("relation", c.holds(&a, &b)?);
            }
            rep
        }
        BeattyCmd::Imply {
            kind,
            alpha,
            beta,
            m,
            coeffs,
        } => {
            let mut rep = Report::new(&["beatty", "imply"]);
            let kind: CertKind = kind.parse()?;
            let a = real("alpha", &alpha)?;
            let b = real("beta", &beta)?;
            let m = int("M", &m)?;
            rep.input("kind", kind);
            rep.input("alpha", &a);
            rep.input("beta", &b);
            rep.input("M", &m);
            let limit = ctx.limit(&mut rep, DEFAULT_LIST_LIMIT);
            cap("M", &m, &limit)?;
            let cert = match coeffs {
                Some(src) => {
                    let parts: Vec<&str> = src.split(',').collect();
                    if parts.len() != 3 {
                        return Err(Error::parse(0, format!("--coeffs takes a,b,c, got '{src}'")));
                    }
                    let sol =
                        LinearSolution::new(int("a", parts[0])?, int("b", parts[1])?, int("c", parts[2])?);
                    rep.option("coeffs", "coeffs", format!("{},{},{}", sol.a, sol.b, sol.c));
                    Certificate {
                        kind,
                        coefficients: sol,
                    }
                }
                None => beatty::certificate_search(kind, &a, &b, &BigInt::from(DEFAULT_CERT_BOUND))?
                    .ok_or_else(|| {
                        Error::NotFound(format!(
                            "no {kind} certificate with coefficients up to {DEFAULT_CERT_BOUND}"
                        ))
                    })?,
            };
            rep.set("certificate", cert_value(&cert));
            let r = beatty::verify_implication(&a, &b, &cert, &m)?;
            rep.set("verdict", s(r.verdict));
            rep.set("relation", s(&r.relation));
            rep.set("counterexample", opt(r.counterexample.as_ref()));
            rep.set("common", opt(r.common.as_ref()));
            rep.set("note", opt(r.note.as_ref()));
            rep.check("implication", r.verdict != Verdict::Fail);
            rep
        }
        BeattyCmd::Common {
            alpha,
            beta,
            start,
            count,
        } => {
            let mut rep = Report::new(&["beatty", "common"]);
            let a = real("alpha", &alpha)?;
            let b = real("beta", &beta)?;
            let start = int("start", &start)?;
            let count_b = int("count", &count)?;
            rep.input("alpha", &a);
            rep.input("beta", &b);
            rep.input("start", &start);
            rep.input("count", &count_b);
            let count = count_b
                .to_usize()
                .filter(|&c| c <= 1_000_000)
                .ok_or_else(|| Error::domain(format!("count must lie in [0, 1000000], got {count_b}")))?;
            let limit = ctx.limit(&mut rep, DEFAULT_LIST_LIMIT);
            let r = beatty::common_elements(&a, &b, &start, count, &limit)?;
            rep.set("elements", list(&r.elements));
            rep.check(
                "common",
                r.elements.iter().try_fold(true, |acc, x| -> Result<bool> {
                    Ok(acc && beatty::member(&a, x)?.is_some() && beatty::member(&b, x)?.is_some())
                })?,
            );
            rep.resource("exhausted", r.exhausted);
            rep.resource("scanned_to", s(&r.scanned_to));
            rep
        }
        BeattyCmd::Dmo { alpha, l, r } => {
            let mut rep = Report::new(&["beatty", "dmo"]);
            let a = real("alpha", &alpha)?;
            let l = rational("l", &l)?;
            let r = rational("r", &r)?;
            rep.input("alpha", &a);
            rep.input("l", &l);
            rep.input("r", &r);
            let limit = ctx.limit(&mut rep, DEFAULT_SEARCH_LIMIT);
            let o = beatty::dmo_window_search(&a, &l, &r, &limit)?;
            outcome(&mut rep, &o);
            if let Some(n) = o.found() {
                let f = a.mul_int(n).frac();
                rep.set("frac", s(&f));
                rep.check(
                    "in_window",
                    f.cmp_rational(&l).is_gt() && f.cmp_rational(&r).is_lt(),
                );
            }
            rep
        }
        BeattyCmd::Residue { alpha, m, k } => {
            let mut rep = Report::new(&["beatty", "residue"]);
            let a = real("alpha", &alpha)?;
            let m = int("m", &m)?;
            let k = int("k", &k)?;
            rep.input("alpha", &a);
            rep.input("m", &m);
            rep.input("k", &k);
            let limit = ctx.limit(&mut rep, DEFAULT_SEARCH_LIMIT);
            let o = beatty::residue_search(&a, &m, &k, &limit)?;
            outcome(&mut rep, &o);
            if let Some(n) = o.found() {
                let v = a.mul_int(&(&m * n)).floor();
                rep.set("value", s(&v));
                rep.check("residue", v.mod_floor(&m) == k);
            }
            rep
        }
        BeattyCmd::Pthroot { p, l, r } => {
            let mut rep = Report::new(&["beatty", "pthroot"]);
            let p = int("p", &p)?;
            let l = rational("l", &l)?;
            let r = rational("r", &r)?;
            rep.input("p", &p);
            rep.input("l", &l);
            rep.input("r", &r);
            let w = beatty::pth_root_dmo_witness(&p, &l, &r)?;
            rep.set("M", s(&w.big_m));
            rep.set("n", s(&w.n));
            rep.set("n_bound", s(&w.n_bound));
            let e = p.to_i32().expect("validated exponent");
            let n = Rational::from_integer(w.n.clone());
            let mm = Rational::from_integer(w.big_m.clone());
            rep.check("power_bracket", (&n + &l).pow(e) < mm && mm < (&n + &r).pow(e));
            rep
        }
        BeattyCmd::Kronecker {
            alpha,
            beta,
            l1,
            r1,
            l2,
            r2,
        } => {
            let mut rep = Report::new(&["beatty", "kronecker"]);
            let a = real("alpha", &alpha)?;
            let b = real("beta", &beta)?;
            let rect = Rect {
                l1: rational("l1", &l1)?,
                r1: rational("r1", &r1)?,
                l2: rational("l2", &l2)?,
                r2: rational("r2", &r2)?,
            };
            rep.input("alpha", &a);
            rep.input("beta", &b);
            rep.input("l1", &rect.l1);
            rep.input("r1", &rect.r1);
            rep.input("l2", &rect.l2);
            rep.input("r2", &rect.r2);
            let limit = ctx.limit(&mut rep, DEFAULT_SEARCH_LIMIT);
            let o = beatty::kronecker_search(&a, &b, &rect, &limit)?;
            outcome(&mut rep, &o);
            rep
        }
        BeattyCmd::Radius { rho, m } => {
            let mut rep = Report::new(&["beatty", "radius"]);
            let rho = rational("rho", &rho)?;
            let m = int("m", &m)?;
            rep.input("rho", &rho);
            rep.input("m", &m);
            rep.set("delta", s(beatty::agreement_radius(&rho, &m)?));
            rep
        }
        BeattyCmd::Claim51 { rho, beta } => {
            let mut rep = Report::new(&["beatty", "claim51"]);
            let rho = rational("rho", &rho)?;
            let b = real("beta", &beta)?;
            rep.input("rho", &rho);
            rep.input("beta", &b);
            let r = beatty::claim51_check(&rho, &b)?;
            rep.set("status", s(r.status));
            rep.set("m", opt(r.m.as_ref()));
            rep.set("y", opt(r.y.as_ref()));
            rep.set("k", opt(r.k.as_ref()));
            rep.set("separator", opt(r.separator.as_ref()));
            rep.set("notes", list(&r.notes));
            if let (Claim51Status::Holds, Some(x)) = (r.status, &r.separator) {
                let rx = ExactReal::from_rational(rho.clone());
                rep.check(
                    "separator",
                    beatty::member(&rx, x)?.is_some() && beatty::member(&b, x)?.is_none(),
                );
            }
            rep
        }
    })
}

fn nonarch_cmd(cmd: NonarchCmd, ctx: &Ctx) -> Result<Report> {
    Ok(match cmd {
        NonarchCmd::Floor { x } => {
            let mut rep = Report::new(&["nonarch", "floor"]);
            let prec = ctx.precision(&mut rep)?;
            let v = laurent("x", &x, prec)?;
            rep.input("x", laurent_echo(&x, &v));
            let a = v.floor_ip()?;
            rep.set("floor", s(&a));
            rep.set("value", s(&v));
            let lo = v.sub(&a.to_laurent()).sign()?;
            let hi = a.to_laurent().add(&LaurentElem::from_int(1)).sub(&v).sign()?;
            rep.check(
                "bracket",
                lo != crate::exactnum::Sign::Negative && hi == crate::exactnum::Sign::Positive,
            );
            rep.check("integral_constant_term", a.poly().coeff(0).is_integer());
            rep
        }
        NonarchCmd::Arith { x } => {
            let mut rep = Report::new(&["nonarch", "arith"]);
            let prec = ctx.precision(&mut rep)?;
            let v = laurent("x", &x, prec)?;
            rep.input("x", laurent_echo(&x, &v));
            rep.set("value", s(&v));
            rep.set("exact", v.is_exact());
            rep.set("sign", s(v.sign()?));
            let finite = v.is_finite()?;
            rep.set("finite", finite);
            rep.set("infinitesimal", v.is_infinitesimal()?);
            rep.set("std_part", if finite { s(v.std_part()?) } else { Value::Null });
            rep.set("precision", opt(v.precision()));
            rep
        }
        NonarchCmd::Beatty { alpha, n } => {
            let mut rep = Report::new(&["nonarch", "beatty"]);
            let prec = ctx.precision(&mut rep)?;
            let a = laurent("alpha", &alpha, prec)?;
            rep.input("alpha", laurent_echo(&alpha, &a));
            let mut terms = Vec::new();
            for (i, src) in n.iter().enumerate() {
                let ni: IpElem = src.parse()?;
                rep.input(&format!("n{}", i + 1), &ni);
                let f = nonarch::beatty_nonarch(&a, &ni)?;
                let mut m = Map::new();
                m.insert("n".into(), s(&ni));
                m.insert("floor".into(), s(&f));
                terms.push(Value::Object(m));
            }
            rep.set("terms", Value::Array(terms));
            rep
        }
        NonarchCmd::Linf { sigma, rho } => {
            let mut rep = Report::new(&["nonarch", "linf"]);
            let prec = ctx.precision(&mut rep)?;
            let sg = laurent("sigma", &sigma, prec)?;
            let rh = laurent("rho", &rho, prec)?;
            rep.input("sigma", laurent_echo(&sigma, &sg));
            rep.input("rho", laurent_echo(&rho, &rh));
            let limit = ctx.limit(&mut rep, DEFAULT_LIST_LIMIT);
            match nonarch::linf_experiment(&sg, &rh, &limit)? {
                LinfReport::Separated {
                    m,
                    k,
                    separator,
                    below,
                    above,
                } => {
                    rep.set("status", "SEPARATED");
                    rep.set("m", s(&m));
                    rep.set("k", s(&k));
                    rep.set("separator", s(&separator));
                    rep.set("below", s(&below));
                    rep.set("above", s(&above));
                    rep.check("in_sigma", nonarch::member_nonarch(&sg, &separator)?.is_some());
                    rep.check("not_in_rho", nonarch::member_nonarch(&rh, &separator)?.is_none());
                }
                LinfReport::Inapplicable(why) => {
                    rep.set("status", "INAPPLICABLE");
                    rep.set("reason", why);
                }
            }
            rep
        }
    })
}

fn oracle_cmd(cmd: OracleCmd) -> Result<Report> {
    Ok(match cmd {
        OracleCmd::Farey { n } => {
            let mut rep = Report::new(&["oracle", "farey"]);
            let n = int("N", &n)?;
            rep.input("N", &n);
            let n = n
                .to_i64()
                .ok_or_else(|| Error::Guard(format!("N = {n} exceeds the oracle guard")))?;
            let terms = oracle::farey_naive(n)?;
            rep.set("count", s(terms.len()));
            rep.set("terms", list(terms.iter().map(|(h, k)| format!("{h}/{k}"))));
            rep
        }
        OracleCmd::Dirichlet { alpha, q } => {
            let mut rep = Report::new(&["oracle", "dirichlet"]);
            let a = real("alpha", &alpha)?;
            let q = int("Q", &q)?;
            rep.input("alpha", &a);
            rep.input("Q", &q);
            let q = q
                .to_i64()
                .ok_or_else(|| Error::Guard(format!("Q = {q} exceeds the oracle guard")))?;
            let pairs = oracle::dirichlet_naive(&a, q)?;
            rep.set("count", s(pairs.len()));
            rep.set("pairs", list(pairs.iter().map(|(p, q)| format!("{p}/{q}"))));
            rep
        }
        OracleCmd::Beatty { alpha, m } => {
            let mut rep = Report::new(&["oracle", "beatty"]);
            let a = real("alpha", &alpha)?;
            let m = int("M", &m)?;
            rep.input("alpha", &a);
            rep.input("M", &m);
            let set = oracle::beatty_naive(&a, &m)?;
            rep.set("count", s(set.len()));
            rep.set("members", list(&set));
            rep
        }
    })
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let format = cli.global.format;
    let ctx = match cli.global.limit.as_deref().map(|l| int("--limit", l)).transpose() {
        Ok(limit) if limit.as_ref().is_some_and(|l| l.is_negative() || l.is_zero()) => {
            return failure(Error::domain("--limit must be positive"));
        }
        Ok(limit) => Ctx {
            limit,
            precision: cli.global.precision,
        },
        Err(e) => return failure(e),
    };
    let rep = match cli.cmd {
        Top::Farey(c) => farey(c, &ctx),
        Top::Approx(c) => approx_cmd(c, &ctx),
        Top::Beatty(c) => beatty_cmd(c, &ctx),
        Top::Nonarch(c) => nonarch_cmd(c, &ctx),
        Top::Oracle(c) => oracle_cmd(c),
    };
    match rep {
        Ok(rep) => {
            let stderr = rep.diagnostics();
            let (code, stdout) = rep.render(format);
            Outcome { code, stdout, stderr }
        }
        Err(e) => failure(e),
    }
}

fn failure(e: Error) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}
