//! File formats, JSON envelopes, parallel drivers, SVG plots and the `bettikit`
//! command line on top of [`bettikit_core`].

pub mod cli;
pub mod envelope;
pub mod error;
pub mod io;
pub mod parallel;
pub mod plot;

pub use bettikit_core as core;
pub use error::{CliError, CliResult};
