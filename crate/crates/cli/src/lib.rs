//! File formats and command implementations behind the `foldbound` binary.

pub mod catalog;
pub mod error;
pub mod report;
pub mod svg;

pub use catalog::{parse_catalog, parse_tau, SystemRecord, BUNDLED_CATALOG};
pub use error::CliError;
pub use report::{verify_levels, LevelRecord, LevelRun};
pub use svg::{render_svg, SvgOptions};
