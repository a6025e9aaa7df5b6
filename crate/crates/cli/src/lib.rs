//! Command-line front end for `qubit-mobius`: gate expressions, state
//! specifications, trajectory files and plots.

pub mod commands;
pub mod error;
pub mod expr;
pub mod state;
pub mod svg;
pub mod text;
pub mod trajectory;

pub use error::{CliError, Result};
pub use expr::GateExpression;
pub use trajectory::{OutputFormat, TrajectoryFile};
