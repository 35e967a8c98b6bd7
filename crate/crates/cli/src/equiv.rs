//! `lpair equiv`: decide whether two pair files lie in one orbit of the
//! shift-and-multiplier action, printing the preserved invariants of both.

use crate::formats::read_pair;
use anyhow::Result;
use clap::Args;
use lpair_core::{pairs_equivalent, Equivalence, EquivalenceOptions, PairRecord};
use std::path::PathBuf;

#[derive(Args)]
pub struct EquivCmd {
    first: PathBuf,
    second: PathBuf,
    /// Cap on element comparisons for the orbit scan.
    #[arg(long)]
    budget: Option<u64>,
}

fn summarize(label: &str, pair: &PairRecord) {
    let inv = pair.invariants();
    let dist = |d: &[(i64, usize)]| {
        d.iter()
            .map(|(v, c)| format!("{v}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!(
        "{label}: {} energies=({}, {}) peaks=({}, {})",
        pair.group().spec_string(),
        inv.energies.0,
        inv.energies.1,
        inv.peaks.0,
        inv.peaks.1
    );
    println!("{label} a distribution: {}", dist(&inv.distributions.0));
    println!("{label} b distribution: {}", dist(&inv.distributions.1));
}

impl EquivCmd {
    pub fn run(self) -> Result<i32> {
        let p1 = read_pair(&self.first)?;
        let p2 = read_pair(&self.second)?;
        summarize("first", &p1);
        summarize("second", &p2);
        let options = match self.budget {
            Some(op_budget) => EquivalenceOptions { op_budget },
            None => EquivalenceOptions::default(),
        };
        match pairs_equivalent(&p1, &p2, options)? {
            Equivalence::Equivalent(witness) => {
                println!(
                    "equivalent: swapped={} tau=({:?} shift {}) beta=({:?} shift {})",
                    witness.swapped, witness.tau.0, witness.tau.1, witness.beta.0, witness.beta.1
                );
                Ok(crate::EXIT_TRUE)
            }
            Equivalence::NotEquivalent => {
                println!("not equivalent");
                Ok(crate::EXIT_FALSE)
            }
            Equivalence::Undecided => {
                println!("undecided within budget");
                Ok(crate::EXIT_UNDECIDED)
            }
        }
    }
}
