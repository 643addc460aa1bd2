//! Exact arithmetic on rationals and real quadratic irrationals.

mod gcd;
mod linear;
mod parse;
mod real;
mod sign;

pub type Rational = num_rational::BigRational;

pub use gcd::{exact_sqrt, ext_gcd, squarefree_split, DEFAULT_SQUARE_BOUND};
pub use linear::{linear_relation_solve, CoefficientRule, LinearForm, LinearSolution, Rhs, Solve, Term};
pub use real::{ExactReal, PartialQuotients, QuadIrr};
pub use sign::{radical_sign, RadicalExpr, Sign};
