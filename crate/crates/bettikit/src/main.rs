use std::process::ExitCode;

use bettikit::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
  let cli = match Cli::try_parse() {
    Ok(cli) => cli,
    Err(e) => {
      let _ = e.print();
      return ExitCode::from(if e.use_stderr() { bettikit::error::EXIT_INPUT as u8 } else { 0 });
    },
  };
  match run(&cli) {
    Ok(()) => ExitCode::SUCCESS,
    Err(e) => {
      eprintln!("bettikit: {e}");
      ExitCode::from(e.exit_code() as u8)
    },
  }
}
