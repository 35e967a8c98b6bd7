//! Exhaustive and randomized searches for Legendre and Yamada-Pott pairs
//! on cyclic groups, with restartable enumeration and checkpointing.

mod enumerate;
mod exhaustive;
mod random;
pub mod tables;

pub use enumerate::SideSpace;
pub use exhaustive::{search_typed_legendre, search_yamada_pott, ExhaustiveOptions};
pub use random::search_legendre_random;

use crate::array::SymmetryType;
use crate::error::{Error, Result};
use crate::pair::PairRecord;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    BudgetExceeded,
}

impl SearchStatus {
    pub fn name(self) -> &'static str {
        match self {
            SearchStatus::Found => "found",
            SearchStatus::ExhaustedNone => "exhausted-none",
            SearchStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

/// Result of one search run.
///
/// `census` counts candidate positions covered, accumulated across resumed
/// runs; with pruning off it equals the number of candidates examined, and
/// on exhaustion it equals `cardinality`.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub certificate: Option<PairRecord>,
    pub census: u128,
    pub cardinality: u128,
    pub found_token: Option<u128>,
    pub next_token: Option<u128>,
    pub descriptor: String,
}

impl SearchOutcome {
    pub fn checkpoint(&self) -> Option<Checkpoint> {
        self.next_token.map(|token| Checkpoint {
            descriptor: self.descriptor.clone(),
            token,
            census: self.census,
        })
    }
}

pub fn space_descriptor(n: u32, type_a: SymmetryType, type_b: SymmetryType) -> String {
    format!("typed n={n} a={} b={}", type_a.name(), type_b.name())
}

/// Resume state for an exhaustive search: the space it belongs to, the next
/// enumeration token, and the census so far.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Checkpoint {
    pub descriptor: String,
    pub token: u128,
    pub census: u128,
}

const CHECKPOINT_HEADER: &str = "lpair-checkpoint v1";

impl Checkpoint {
    pub fn to_text(&self) -> String {
        format!(
            "{CHECKPOINT_HEADER}\nspace: {}\ntoken: {}\ncensus: {}\n",
            self.descriptor, self.token, self.census
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or("");
        if header.trim() != CHECKPOINT_HEADER {
            return Err(Error::Parse {
                what: "checkpoint",
                detail: format!("unsupported header '{}'", header.trim()),
            });
        }
        let mut descriptor = None;
        let mut token = None;
        let mut census = None;
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or(Error::Parse {
                what: "checkpoint",
                detail: format!("expected 'key: value', got '{line}'"),
            })?;
            let value = value.trim();
            match key.trim() {
                "space" => descriptor = Some(value.to_string()),
                "token" => token = Some(parse_u128("token", value)?),
                "census" => census = Some(parse_u128("census", value)?),
                other => {
                    return Err(Error::Parse {
                        what: "checkpoint",
                        detail: format!("unknown field '{other}'"),
                    })
                }
            }
        }
        match (descriptor, token, census) {
            (Some(descriptor), Some(token), Some(census)) => Ok(Self {
                descriptor,
                token,
                census,
            }),
            _ => Err(Error::Parse {
                what: "checkpoint",
                detail: "missing one of space/token/census".into(),
            }),
        }
    }
}

fn parse_u128(what: &'static str, value: &str) -> Result<u128> {
    value.parse().map_err(|_| Error::Parse {
        what,
        detail: format!("bad integer '{value}'"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoint_round_trip() {
        let ck = Checkpoint {
            descriptor: space_descriptor(17, SymmetryType::Neither, SymmetryType::SkewSymmetric),
            token: 123_456,
            census: 123_456,
        };
        let text = ck.to_text();
        assert_eq!(Checkpoint::parse(&text).unwrap(), ck);
        assert!(text.starts_with("lpair-checkpoint v1\n"));
    }

    #[test]
    fn checkpoint_rejects_bad_input() {
        assert!(Checkpoint::parse("nonsense").is_err());
        assert!(Checkpoint::parse("lpair-checkpoint v1\nspace: x\ntoken: y\ncensus: 1").is_err());
        assert!(Checkpoint::parse("lpair-checkpoint v1\ntoken: 3\ncensus: 1").is_err());
    }
}
