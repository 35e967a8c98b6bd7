//! `lpair search`: exhaustive Yamada-Pott and typed Legendre searches with
//! checkpointed resumption, and a seeded stochastic search.

use crate::record::{print_record, search_json};
use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand};
use lpair_core::search::space_descriptor;
use lpair_core::{
    search_legendre_random, search_typed_legendre, search_yamada_pott, Checkpoint,
    ExhaustiveOptions, SearchOutcome, SearchStatus, SymmetryType,
};
use std::path::{Path, PathBuf};

const DEFAULT_RANDOM_BUDGET: u64 = 20_000_000;

#[derive(Args)]
pub struct SearchCmd {
    #[command(subcommand)]
    mode: Mode,
    /// Candidate positions (or stochastic steps) allowed in this run.
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Worker threads (default: LPAIR_THREADS, then the pool default).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Resume from and save to this checkpoint file.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,
    /// Write the result record here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Prune first-side multiplier orbits (the census then undercounts).
    #[arg(long, global = true)]
    prune: bool,
    /// Allow unconstrained searches beyond n = 15.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Subcommand)]
enum Mode {
    /// Symmetric x skew-symmetric {0,1} pairs on Z_n.
    Yp {
        #[arg(short)]
        n: u32,
    },
    /// {0,1} Legendre pairs on Z_n with prescribed symmetry types.
    Typed {
        #[arg(short)]
        n: u32,
        /// First-component type: S, Sk, or N.
        #[arg(long, default_value = "N")]
        a: String,
        /// Second-component type: S, Sk, or N.
        #[arg(long, default_value = "N")]
        b: String,
    },
    /// Seeded stochastic local search for {-1,1} Legendre pairs on Z_n.
    Random {
        #[arg(short)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn load_checkpoint(path: &Path, descriptor: &str) -> Result<Option<Checkpoint>> {
    if !path.exists() {
        return Ok(None);
    }
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let ckpt = Checkpoint::parse(&text)?;
    if ckpt.descriptor != descriptor {
        bail!(
            "checkpoint {} belongs to space '{}', this search is '{descriptor}'",
            path.display(),
            ckpt.descriptor
        );
    }
    Ok(Some(ckpt))
}

fn settle_checkpoint(path: &Path, outcome: &SearchOutcome) -> Result<()> {
    match outcome.checkpoint() {
        Some(ckpt) => crate::formats::write_text(path, &ckpt.to_text()),
        None => {
            if path.exists() {
                std::fs::remove_file(path)
                    .with_context(|| format!("removing {}", path.display()))?;
            }
            Ok(())
        }
    }
}

impl SearchCmd {
    pub fn run(self) -> Result<i32> {
        let threads = crate::thread_count(self.threads)?;
        let (mode, outcome) = match &self.mode {
            Mode::Yp { n } => {
                let descriptor =
                    space_descriptor(*n, SymmetryType::Symmetric, SymmetryType::SkewSymmetric);
                let options = self.exhaustive_options(threads, &descriptor)?;
                ("yp", search_yamada_pott(*n, &options)?)
            }
            Mode::Typed { n, a, b } => {
                let (ta, tb) = (SymmetryType::parse(a)?, SymmetryType::parse(b)?);
                let descriptor = space_descriptor(*n, ta, tb);
                let options = self.exhaustive_options(threads, &descriptor)?;
                ("typed", search_typed_legendre(*n, ta, tb, &options)?)
            }
            Mode::Random { n, seed } => {
                if self.checkpoint.is_some() {
                    bail!("the random mode does not use checkpoints");
                }
                let budget = match self.budget {
                    Some(b) => u64::try_from(b).context("budget too large for random mode")?,
                    None => DEFAULT_RANDOM_BUDGET,
                };
                ("random", search_legendre_random(*n, *seed, budget)?)
            }
        };
        if let Some(path) = &self.checkpoint {
            settle_checkpoint(path, &outcome)?;
        }
        print_record(&search_json(mode, &outcome), self.out.as_deref())?;
        Ok(match outcome.status {
            SearchStatus::Found => crate::EXIT_TRUE,
            SearchStatus::ExhaustedNone => crate::EXIT_FALSE,
            SearchStatus::BudgetExceeded => crate::EXIT_UNDECIDED,
        })
    }

    fn exhaustive_options(
        &self,
        threads: Option<usize>,
        descriptor: &str,
    ) -> Result<ExhaustiveOptions> {
        let mut options = ExhaustiveOptions {
            budget: self.budget,
            threads,
            force: self.force,
            prune_multipliers: self.prune,
            ..ExhaustiveOptions::default()
        };
        if let Some(path) = &self.checkpoint {
            if let Some(ckpt) = load_checkpoint(path, descriptor)? {
                options.start_token = ckpt.token;
                options.prior_census = ckpt.census;
            }
        }
        Ok(options)
    }
}
