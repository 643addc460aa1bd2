//! Exact Diophantine approximation, Farey sequences and Beatty sequences.

pub mod approx;
pub mod beatty;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod farey;
pub mod nonarch;
pub mod oracle;

pub use error::{Error, Result};
pub use exactnum::{ExactReal, Rational};
