use std::path::{Path, PathBuf};

use bettikit_core::Error as CoreError;

/// Exit code for malformed input, bad arguments and failed preconditions.
pub const EXIT_INPUT: i32 = 2;
/// Exit code for exceeded resource budgets.
pub const EXIT_BUDGET: i32 = 3;
/// Exit code for internal failures (I/O on output, integrity checks).
pub const EXIT_INTERNAL: i32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
  #[error("{}: {source}", path.display())]
  Read { path: PathBuf, source: std::io::Error },

  #[error("{}: {source}", path.display())]
  Write { path: PathBuf, source: std::io::Error },

  #[error("{}:{line}: {message}", path.display())]
  Parse { path: PathBuf, line: usize, message: String },

  #[error("{}: {message}", path.display())]
  Format { path: PathBuf, message: String },

  #[error("{0}")]
  Usage(String),

  #[error("{0}")]
  Core(#[from] CoreError),
}

impl CliError {
  pub fn exit_code(&self) -> i32 {
    match self {
      CliError::Read { .. } | CliError::Parse { .. } | CliError::Format { .. } | CliError::Usage(_) => EXIT_INPUT,
      CliError::Write { .. } => EXIT_INTERNAL,
      CliError::Core(e) => match e {
        CoreError::Budget { .. } => EXIT_BUDGET,
        CoreError::Integrity(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
      },
    }
  }

  /// Attaches a file name to errors raised while interpreting that file's contents.
  pub fn in_file(path: &Path, e: CoreError) -> Self {
    match e {
      CoreError::Parse { line, message } => CliError::Parse { path: path.to_path_buf(), line, message },
      CoreError::Input(message) => CliError::Format { path: path.to_path_buf(), message },
      other => CliError::Core(other),
    }
  }
}

pub type CliResult<T> = Result<T, CliError>;
