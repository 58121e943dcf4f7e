//! Command-line front end: the algebra file format, report rendering and
//! subcommand dispatch.

pub mod error;
pub mod export;
pub mod parse;
pub mod report;
pub mod run;

pub use error::{CliError, Pos};
pub use export::export_algebra;
pub use parse::{parse_algebra_file, parse_alpha_file, parse_map_file, parse_scalar, AlphaFile};
pub use report::{emit_report, Format, ReportDocument};
pub use run::run;
