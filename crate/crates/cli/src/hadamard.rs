//! `lpair hadamard`: assemble and verify a bordered Hadamard matrix of
//! order 2n + 2 from a Legendre pair file.

use crate::formats::{read_pair, write_text};
use anyhow::Result;
use clap::Args;
use lpair_core::hadamard::{build_bordered, BorderVariant};
use lpair_core::PairRecord;
use std::path::PathBuf;

#[derive(Args)]
pub struct HadamardCmd {
    /// Pair file: two array records on one group.
    input: PathBuf,
    /// Border variant: sym or skew.
    #[arg(long, default_value = "sym")]
    variant: String,
    /// Write the matrix text here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl HadamardCmd {
    pub fn run(self) -> Result<i32> {
        let pair: PairRecord = read_pair(&self.input)?;
        let variant = BorderVariant::parse(&self.variant)?;
        let matrix = build_bordered(&pair, variant)?;
        eprintln!(
            "order {} from {}: symmetric={}, skew-type={}",
            matrix.order(),
            matrix.source_group,
            matrix.matrix.is_symmetric(),
            matrix.matrix.is_skew_type()
        );
        let text = matrix.matrix.to_text();
        match &self.out {
            Some(path) => write_text(path, &text)?,
            None => print!("{text}"),
        }
        Ok(crate::EXIT_TRUE)
    }
}
