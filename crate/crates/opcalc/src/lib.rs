//! Expression language, command-line front end and identity-suite runner for
//! the planar Landau operator algebra.
//!
//! ```
//! use landau_core::{ParameterSet, radical::int};
//! use opcalc::eval_str;
//!
//! let p = ParameterSet::unit(int(2)).unwrap();
//! assert!(eval_str("comm(J3, J1) - i*hbar*J2", &p).unwrap().is_zero());
//! ```

pub mod ast;
pub mod cli;
pub mod error;
pub mod eval;
pub mod json;
pub mod parser;
pub mod suite;

pub use ast::{Expr, Param};
pub use error::{Error, Result};
pub use eval::{eval_ast, eval_str, print_canonical};
pub use parser::parse;
pub use suite::{run_identity_suite, run_identity_suite_with, run_suite_on, sample_parameters, VerificationReport};
