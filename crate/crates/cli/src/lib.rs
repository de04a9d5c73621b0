//! File formats and command dispatch for the `skewbrace` binary.
//!
//! Exit codes: `0` success or a true predicate, `1` a false predicate, `2`
//! invalid input, `3` a size bound exceeded. The bound on brace orders can
//! be raised with `--max-order` or the `BRACE_MAX_ORDER` variable.

pub mod cli;
pub mod commands;
pub mod error;
pub mod io;

use clap::Parser;
use cli::{Cli, Command};
use skewbrace::Bounds;
use std::io::Write;

pub use error::CliError;

/// Runs one command, writing its report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let bounds = cli.max_order.map(Bounds::with_max_order).unwrap_or_default();
    let result = match &cli.command {
        Command::Verify { file } => commands::verify(file, out),
        Command::Analyze { file, format } => commands::analyze(file, *format, &bounds, out),
        Command::Dedekind { file } => commands::dedekind(file, &bounds, out),
        Command::Construct(args) => commands::construct(args, &bounds, out),
        Command::Enumerate(args) => commands::enumerate(args, &bounds, out),
        Command::Iso { first, second } => commands::iso(first, second, out),
        Command::Ybe(command) => commands::ybe(command, out),
        Command::Rational(args) => commands::rational(args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
