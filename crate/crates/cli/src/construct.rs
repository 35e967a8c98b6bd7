//! `lpair construct`: run one construction family, emit the result as a
//! JSON record or as bare array lines.

use crate::formats::{array_line, write_text};
use crate::record::{construction_json, cyclic_form, print_record};
use anyhow::{bail, Result};
use clap::{Args, Subcommand};
use lpair_core::construct::{
    backup_yp_pair, baumert_pair, dhm_array, ex57_pair, paley_pair, slce_array, szekeres_pair,
    szekeres_whiteman_pair, yamada_pair, yp_to_perfect, ConstructionReport, LiftComplement,
};
use lpair_core::Alphabet;
use std::path::PathBuf;

#[derive(Args)]
pub struct ConstructCmd {
    #[command(subcommand)]
    family: Family,
    /// Output format: `json` record or bare `arr` lines.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Component to emit with `--format arr`: a, b, pair, array, or lift.
    #[arg(long, global = true)]
    select: Option<String>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// Balanced array from the squares and zero of GF(q), odd prime power q.
    Slce {
        #[arg(long)]
        q: u64,
        /// Generator element (default: smallest primitive element).
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, default_value = "zo")]
        alphabet: String,
    },
    /// Perfect array on Z2 x GF(q)+ from quartic class unions, q = 5 mod 8.
    Dhm {
        #[arg(long)]
        q: u64,
        /// Class selection: 1, 2 (need t^2 = 1), or 3 (needs s = 1).
        #[arg(long)]
        class: u8,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, default_value = "zo")]
        alphabet: String,
    },
    /// Symmetric/skew Yamada-Pott pair of length (q-1)/2, q = 3 mod 4.
    Yamada {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, default_value = "zo")]
        alphabet: String,
    },
    /// Halved-log pair of length (q-1)/2 with its perfect lift, q = 3 mod 4.
    BackupYp {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        alpha: Option<usize>,
    },
    /// Skew/skew pair from quartic classes of GF(q), q = 5 mod 8.
    Szekeres {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, default_value = "zo")]
        alphabet: String,
    },
    /// Octic-class pair over GF(p^m), p = 5 mod 8 with even m.
    SzekeresWhiteman {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, default_value = "zo")]
        alphabet: String,
    },
    /// Quadratic-residue pair on GF(q)+, odd prime power q.
    Paley {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, default_value = "zo")]
        alphabet: String,
    },
    /// Twin-prime-power pair on GF(q) x GF(q+2).
    Baumert {
        #[arg(long)]
        q1: u64,
        #[arg(long)]
        q2: u64,
        #[arg(long)]
        alpha1: Option<usize>,
        #[arg(long)]
        alpha2: Option<usize>,
        #[arg(long, default_value = "zo")]
        alphabet: String,
    },
    /// The order-57 coset-selection pair on Z3 x Z19.
    Ex57,
    /// Lift a Yamada-Pott pair file to a perfect array on Z2 x H.
    YpLift {
        /// Pair file ({0,1} records on one group).
        input: PathBuf,
        /// Complement a component inside H first: none, a, or b.
        #[arg(long, default_value = "none")]
        complement: String,
    },
}

impl Family {
    fn build(self) -> Result<ConstructionReport> {
        Ok(match self {
            Family::Slce { q, alpha, alphabet } => {
                slce_array(q, alpha, Alphabet::parse(&alphabet)?)?
            }
            Family::Dhm {
                q,
                class,
                alpha,
                alphabet,
            } => dhm_array(q, alpha, class, Alphabet::parse(&alphabet)?)?,
            Family::Yamada { q, alpha, alphabet } => {
                yamada_pair(q, alpha, Alphabet::parse(&alphabet)?)?
            }
            Family::BackupYp { q, alpha } => backup_yp_pair(q, alpha)?,
            Family::Szekeres { q, alpha, alphabet } => {
                szekeres_pair(q, alpha, Alphabet::parse(&alphabet)?)?
            }
            Family::SzekeresWhiteman { q, alpha, alphabet } => {
                szekeres_whiteman_pair(q, alpha, Alphabet::parse(&alphabet)?)?
            }
            Family::Paley { q, alpha, alphabet } => {
                paley_pair(q, alpha, Alphabet::parse(&alphabet)?)?
            }
            Family::Baumert {
                q1,
                q2,
                alpha1,
                alpha2,
                alphabet,
            } => baumert_pair(q1, q2, alpha1, alpha2, Alphabet::parse(&alphabet)?)?,
            Family::Ex57 => ex57_pair()?,
            Family::YpLift { input, complement } => {
                let pair = crate::formats::read_pair(&input)?;
                yp_to_perfect(&pair, LiftComplement::parse(&complement)?)?
            }
        })
    }
}

fn arr_lines(report: &ConstructionReport, select: Option<&str>) -> Result<Vec<String>> {
    let pair = report.pair();
    let missing = |what: &str| anyhow::anyhow!("this construction has no {what} component");
    Ok(match select {
        None | Some("pair") => match (pair, report.array()) {
            (Some(p), _) => vec![array_line(p.a()), array_line(p.b())],
            (None, Some(a)) => vec![array_line(a)],
            (None, None) => bail!("construction produced no arrays"),
        },
        Some("a") => vec![array_line(pair.ok_or_else(|| missing("pair"))?.a())],
        Some("b") => vec![array_line(pair.ok_or_else(|| missing("pair"))?.b())],
        Some("array") => vec![array_line(report.array().ok_or_else(|| missing("array"))?)],
        Some("lift") => vec![array_line(report.lift().ok_or_else(|| missing("lift"))?)],
        Some("cyclic") => match (pair, report.array()) {
            (Some(p), _) => {
                let (ca, cb) = (cyclic_form(p.a()), cyclic_form(p.b()));
                match (ca, cb) {
                    (Some(ca), Some(cb)) => vec![array_line(&ca), array_line(&cb)],
                    _ => bail!("no cyclic realignment exists for this group"),
                }
            }
            (None, Some(a)) => match cyclic_form(a) {
                Some(c) => vec![array_line(&c)],
                None => bail!("no cyclic realignment exists for this group"),
            },
            (None, None) => bail!("construction produced no arrays"),
        },
        Some(other) => {
            bail!("unknown selection '{other}' (expected a, b, pair, array, lift, or cyclic)")
        }
    })
}

impl ConstructCmd {
    pub fn run(self) -> Result<i32> {
        let report = self.family.build()?;
        match self.format.as_str() {
            "json" => print_record(&construction_json(&report), self.out.as_deref())?,
            "arr" => {
                let text = format!(
                    "{}\n",
                    arr_lines(&report, self.select.as_deref())?.join("\n")
                );
                match &self.out {
                    Some(path) => write_text(path, &text)?,
                    None => print!("{text}"),
                }
            }
            other => bail!("unknown format '{other}' (expected json or arr)"),
        }
        Ok(crate::EXIT_TRUE)
    }
}
