use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
  #[error("invalid input: {0}")]
  Input(String),

  #[error("line {line}: {message}")]
  Parse { line: usize, message: String },

  /// A configured resource budget would be exceeded.
  #[error("budget `{budget}` exceeded (limit {limit}): {hint}")]
  Budget { budget: &'static str, limit: u64, hint: String },

  #[error("dimension {0} contains no simplices")]
  EmptyDimension(usize),

  /// The requested quantity depends on data that was not enumerated.
  #[error("state error: {0}")]
  State(String),

  /// Two independent computations disagreed.
  #[error("numeric integrity failure: {0}")]
  Integrity(String),

  #[error("precondition failed: {0}")]
  Precondition(String),
}

impl Error {
  pub fn input(msg: impl Into<String>) -> Self { Error::Input(msg.into()) }

  pub fn parse(line: usize, msg: impl Into<String>) -> Self {
    Error::Parse { line, message: msg.into() }
  }

  pub fn budget(budget: &'static str, limit: u64, hint: impl Into<String>) -> Self {
    Error::Budget { budget, limit, hint: hint.into() }
  }

  /// True for errors caused by a resource budget.
  pub fn is_budget(&self) -> bool { matches!(self, Error::Budget { .. }) }
}
