//! `lpair`: construct, verify, search, and report on Legendre array pairs
//! over finite abelian groups.
//!
//! Exit codes: 0 success or predicate true; 1 predicate false, pair not
//! found, or table mismatch; 2 input or usage error; 3 undecided within the
//! given budget.

mod construct;
mod equiv;
mod field;
mod formats;
mod hadamard;
mod record;
mod report;
mod search;
mod verify;

use anyhow::{ensure, Context, Result};
use clap::{Parser, Subcommand};

pub(crate) const EXIT_TRUE: i32 = 0;
pub(crate) const EXIT_FALSE: i32 = 1;
pub(crate) const EXIT_INPUT: i32 = 2;
pub(crate) const EXIT_UNDECIDED: i32 = 3;

pub(crate) const THREADS_ENV: &str = "LPAIR_THREADS";

#[derive(Parser)]
#[command(
    name = "lpair",
    version,
    about = "Legendre array pairs over finite abelian groups",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a construction family and emit a result record.
    Construct(construct::ConstructCmd),
    /// Check a predicate against array, pair, or matrix files.
    Verify(verify::VerifyCmd),
    /// Exhaustive or randomized pair searches on cyclic groups.
    Search(search::SearchCmd),
    /// Regenerate an existence table and compare it cell by cell.
    Report(report::ReportCmd),
    /// Assemble a bordered Hadamard matrix from a Legendre pair file.
    Hadamard(hadamard::HadamardCmd),
    /// Decide whether two pair files are equivalent.
    Equiv(equiv::EquivCmd),
    /// Inspect a finite field: modulus, generator, cyclotomic data.
    Field(field::FieldCmd),
}

/// Resolves the worker-thread count: an explicit flag wins, then the
/// `LPAIR_THREADS` environment variable, then the library default.
pub(crate) fn thread_count(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(THREADS_ENV) {
        Ok(value) => {
            let n: usize = value
                .trim()
                .parse()
                .with_context(|| format!("{THREADS_ENV} must be a positive integer"))?;
            ensure!(n > 0, "{THREADS_ENV} must be a positive integer");
            Ok(Some(n))
        }
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(err) => Err(err).context(THREADS_ENV),
    }
}

/// Restores default `SIGPIPE` handling so a downstream reader closing the
/// pipe (for example `lpair ... | head`) terminates the process silently
/// instead of panicking on a failed write to stdout.
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(cmd) => cmd.run(),
        Command::Verify(cmd) => cmd.run(),
        Command::Search(cmd) => cmd.run(),
        Command::Report(cmd) => cmd.run(),
        Command::Hadamard(cmd) => cmd.run(),
        Command::Equiv(cmd) => cmd.run(),
        Command::Field(cmd) => cmd.run(),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(EXIT_INPUT);
        }
    }
}
