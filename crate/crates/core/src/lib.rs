//! Arrays over finite abelian groups with two-level alphabets: periodic
//! autocorrelation analysis, difference-set and Legendre-pair predicates,
//! the classical construction families, bordered Hadamard assembly, and
//! exhaustive or randomized pair searches.
//!
//! All arithmetic is exact. The `parallel` feature (on by default) runs
//! searches and matrix verification on a rayon pool; without it the same
//! interfaces run sequentially.

#![forbid(unsafe_code)]

pub mod array;
pub mod construct;
pub mod error;
pub mod field;
pub mod group;
pub mod hadamard;
pub mod pair;
pub mod search;

pub use array::{
    cross_correlation, crt_transport, is_almost_difference_set, is_difference_set,
    is_legendre_pair, is_supplementary_difference_sets, is_yamada_pott_pair, Alphabet,
    Distribution, GArray, SymmetryType,
};
pub use error::{Error, Result};
pub use field::{CyclotomicClasses, FiniteField, ProperRepresentation};
pub use group::{FiniteAbelianGroup, GroupRingElement};
pub use hadamard::{build_h_skew, build_h_sym, develop, BorderVariant, HadamardMatrix, PmMatrix};
pub use pair::{pairs_equivalent, Equivalence, EquivalenceOptions, PairInvariants, PairRecord};
pub use search::{
    search_legendre_random, search_typed_legendre, search_yamada_pott, Checkpoint,
    ExhaustiveOptions, SearchOutcome, SearchStatus, SideSpace,
};
