//! Batch front end for cyclotomic oper computations: problem files in,
//! exact reports out.

pub mod commands;
pub mod error;
pub mod problem;
pub mod report;

pub use commands::{run, run_command, Command};
pub use error::CliError;
pub use problem::{load, parse_instantiation, parse_problem, Loaded, Problem, ProblemFile, Scalar};
pub use report::{Entry, Report, Section, Value};
