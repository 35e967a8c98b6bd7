//! Exhaustive pair search over bit-packed candidates: both row-sum cases,
//! shift-and-popcount correlation with early exit, block-level feasibility
//! filtering, deterministic lowest-token certificates, and budgeted
//! windows that resume from checkpoints.

use crate::array::{is_legendre_pair, is_yamada_pott_pair, Alphabet, GArray, SymmetryType};
use crate::error::{domain_err, Error, Result};
use crate::group::{gcd, FiniteAbelianGroup};
use crate::pair::PairRecord;
use crate::search::enumerate::{mask_ones, mask_symmetry, SideSpace};
use crate::search::{space_descriptor, SearchOutcome, SearchStatus};
use std::sync::atomic::{AtomicU64, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

const TOKEN_LIMIT: u128 = 1 << 63;
const INNER_TABLE_CAP: u128 = 1 << 22;

#[derive(Clone, Debug, Default)]
pub struct ExhaustiveOptions {
    /// Maximum candidate positions to cover in this run; None = unlimited.
    pub budget: Option<u128>,
    /// Global token to resume from.
    pub start_token: u128,
    /// Census carried over from the checkpoint being resumed.
    pub prior_census: u128,
    /// Worker threads; None uses the ambient rayon pool. Ignored by the
    /// sequential build.
    pub threads: Option<usize>,
    /// Permit unconstrained x unconstrained searches beyond n = 15.
    pub force: bool,
    /// Skip first-side candidates that are not minimal in their unit
    /// multiplier orbit. Off by default so that the census counts every
    /// candidate examined.
    pub prune_multipliers: bool,
}

#[inline]
fn rot(mask: u64, t: u32, n: u32) -> u64 {
    ((mask << t) | (mask >> (n - t))) & ((1u64 << n) - 1)
}

fn lambda_for(n: u32, k: u32) -> i32 {
    if k == n.div_ceil(2) {
        n.div_ceil(2) as i32
    } else {
        ((n - 3) / 2) as i32
    }
}

struct Case {
    k: u32,
    lambda: i32,
    a: SideSpace,
    b: SideSpace,
    b_card: u128,
    size: u128,
    base: u128,
}

struct CaseScan<'a> {
    case: &'a Case,
    n: u32,
    half: u32,
    d_lo: i32,
    d_hi: i32,
    b_table: Option<Vec<u64>>,
    strict_a: bool,
    strict_b: bool,
    units: Vec<u32>,
    from: u64,
    to: u64,
    found: AtomicU64,
}

impl CaseScan<'_> {
    fn canonical(&self, mask: u64) -> bool {
        let n = self.n;
        for &u in &self.units {
            let mut image = 0u64;
            for g in 0..n {
                if mask >> g & 1 == 1 {
                    image |= 1u64 << ((g as u64 * u as u64) % n as u64);
                }
            }
            if image < mask {
                return false;
            }
        }
        true
    }

    fn scan_block(&self, blk: u64) {
        let b_card = self.case.b_card as u64;
        let block_base = self.case.base as u64 + blk * b_card;
        if self.found.load(Ordering::Relaxed) <= block_base {
            return;
        }
        let lo = self.from.max(block_base) - block_base;
        let hi = self.to.min(block_base + b_card) - block_base;
        if lo >= hi {
            return;
        }
        let n = self.n;
        let a_mask = self.case.a.mask_at(blk as u128);
        if self.strict_a && mask_symmetry(a_mask, n) != SymmetryType::Neither {
            return;
        }
        if !self.units.is_empty() && !self.canonical(a_mask) {
            return;
        }
        let mut need = [0i32; 32];
        for t in 1..=self.half {
            let d = (a_mask & rot(a_mask, t, n)).count_ones() as i32;
            let nd = self.case.lambda - d;
            if nd < self.d_lo || nd > self.d_hi {
                return;
            }
            need[t as usize] = nd;
        }
        let emit = |idx: u64, b_mask: u64| -> bool {
            for t in 1..=self.half {
                if (b_mask & rot(b_mask, t, n)).count_ones() as i32 != need[t as usize] {
                    return false;
                }
            }
            if self.strict_b && mask_symmetry(b_mask, n) != SymmetryType::Neither {
                return false;
            }
            self.found.fetch_min(block_base + idx, Ordering::Relaxed);
            true
        };
        match &self.b_table {
            Some(table) => {
                for (off, &b_mask) in table[lo as usize..hi as usize].iter().enumerate() {
                    let idx = lo + off as u64;
                    if idx & 1023 == 0 && self.found.load(Ordering::Relaxed) <= block_base {
                        return;
                    }
                    if emit(idx, b_mask) {
                        return;
                    }
                }
            }
            None => {
                let count = (hi - lo) as usize;
                for (off, b_mask) in self.case.b.iter_from(lo as u128).take(count).enumerate() {
                    let idx = lo + off as u64;
                    if idx & 1023 == 0 && self.found.load(Ordering::Relaxed) <= block_base {
                        return;
                    }
                    if emit(idx, b_mask) {
                        return;
                    }
                }
            }
        }
    }
}

fn scan_case(scan: &CaseScan<'_>) -> Option<u64> {
    let b_card = scan.case.b_card as u64;
    let base = scan.case.base as u64;
    let ab0 = (scan.from - base) / b_card;
    let ab1 = (scan.to - base - 1) / b_card;
    #[cfg(feature = "parallel")]
    {
        (ab0..=ab1)
            .into_par_iter()
            .for_each(|blk| scan.scan_block(blk));
    }
    #[cfg(not(feature = "parallel"))]
    {
        for blk in ab0..=ab1 {
            scan.scan_block(blk);
            if scan.found.load(Ordering::Relaxed) != u64::MAX {
                break;
            }
        }
    }
    match scan.found.load(Ordering::Relaxed) {
        u64::MAX => None,
        tok => Some(tok),
    }
}

fn type_matches(arr: &GArray, want: SymmetryType) -> bool {
    arr.symmetry_type() == want
}

/// Exhaustive search for a Legendre {0,1} pair on Z_n whose sides have
/// exactly the requested symmetry types (`Neither` meaning strictly
/// neither). Both row-sum cases k = (n+1)/2 then k = (n−1)/2 are scanned
/// in one global token order; outcomes are deterministic for fixed
/// options regardless of thread count.
pub fn search_typed_legendre(
    n: u32,
    type_a: SymmetryType,
    type_b: SymmetryType,
    options: &ExhaustiveOptions,
) -> Result<SearchOutcome> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(domain_err!("search requires odd n >= 3, got {n}"));
    }
    if type_a == SymmetryType::Neither
        && type_b == SymmetryType::Neither
        && n > 15
        && !options.force
    {
        return Err(Error::Infeasible(format!(
            "unconstrained pair space at n = {n} needs an explicit force override"
        )));
    }
    let descriptor = space_descriptor(n, type_a, type_b);
    let mut cases = Vec::new();
    let mut base = 0u128;
    for k in [n.div_ceil(2), (n - 1) / 2] {
        let a = SideSpace::new(n, k, type_a)?;
        let b = SideSpace::new(n, k, type_b)?;
        let b_card = b.cardinality();
        let size = a.cardinality() * b_card;
        cases.push(Case {
            k,
            lambda: lambda_for(n, k),
            a,
            b,
            b_card,
            size,
            base,
        });
        base += size;
    }
    let cardinality = base;
    if cardinality >= TOKEN_LIMIT {
        return Err(Error::Infeasible(format!(
            "search space of {cardinality} tokens exceeds the supported limit"
        )));
    }
    if options.start_token > cardinality {
        return Err(domain_err!(
            "start token {} beyond space cardinality {cardinality}",
            options.start_token
        ));
    }
    let start = options.start_token;
    let end = match options.budget {
        Some(b) => cardinality.min(start.saturating_add(b)),
        None => cardinality,
    };

    let units: Vec<u32> = if options.prune_multipliers {
        (2..n).filter(|&u| gcd(u as u64, n as u64) == 1).collect()
    } else {
        Vec::new()
    };
    let mut found_global: Option<u64> = None;
    for case in &cases {
        let lo = start.max(case.base);
        let hi = end.min(case.base + case.size);
        if lo >= hi || case.size == 0 {
            continue;
        }
        let b_table = if case.b_card <= INNER_TABLE_CAP {
            Some(case.b.collect_masks())
        } else {
            None
        };
        let scan = CaseScan {
            case,
            n,
            half: (n - 1) / 2,
            d_lo: (2 * case.k as i32 - n as i32).max(0),
            d_hi: case.k as i32,
            b_table,
            strict_a: type_a == SymmetryType::Neither,
            strict_b: type_b == SymmetryType::Neither,
            units: units.clone(),
            from: lo as u64,
            to: hi as u64,
            found: AtomicU64::new(u64::MAX),
        };
        let hit = run_with_threads(options.threads, || scan_case(&scan));
        if let Some(tok) = hit {
            found_global = Some(tok);
            break;
        }
    }

    match found_global {
        Some(tok) => {
            let case = cases
                .iter()
                .rev()
                .find(|c| (tok as u128) >= c.base)
                .expect("token below first case base");
            let within = tok as u128 - case.base;
            let a_mask = case.a.mask_at(within / case.b_card);
            let b_mask = case.b.mask_at(within % case.b_card);
            let certificate = certify(n, a_mask, b_mask, type_a, type_b)?;
            Ok(SearchOutcome {
                status: SearchStatus::Found,
                certificate: Some(certificate),
                census: options.prior_census + (tok as u128 - start) + 1,
                cardinality,
                found_token: Some(tok as u128),
                next_token: None,
                descriptor,
            })
        }
        None if end == cardinality => Ok(SearchOutcome {
            status: SearchStatus::ExhaustedNone,
            certificate: None,
            census: options.prior_census + (end - start),
            cardinality,
            found_token: None,
            next_token: None,
            descriptor,
        }),
        None => Ok(SearchOutcome {
            status: SearchStatus::BudgetExceeded,
            certificate: None,
            census: options.prior_census + (end - start),
            cardinality,
            found_token: None,
            next_token: Some(end),
            descriptor,
        }),
    }
}

/// Searches for a Yamada-Pott pair on Z_n: symmetric first side, skew-
/// symmetric second side, equal weights, both row-sum cases.
pub fn search_yamada_pott(n: u32, options: &ExhaustiveOptions) -> Result<SearchOutcome> {
    let outcome = search_typed_legendre(
        n,
        SymmetryType::Symmetric,
        SymmetryType::SkewSymmetric,
        options,
    )?;
    if let Some(pair) = &outcome.certificate {
        if !is_yamada_pott_pair(pair.a(), pair.b())? {
            return Err(domain_err!(
                "search certificate failed Yamada-Pott re-verification"
            ));
        }
    }
    Ok(outcome)
}

fn certify(
    n: u32,
    a_mask: u64,
    b_mask: u64,
    type_a: SymmetryType,
    type_b: SymmetryType,
) -> Result<PairRecord> {
    let group = FiniteAbelianGroup::cyclic(n as u64)?;
    let a = GArray::from_one_set(group.clone(), Alphabet::ZeroOne, &mask_ones(a_mask))?;
    let b = GArray::from_one_set(group, Alphabet::ZeroOne, &mask_ones(b_mask))?;
    if !is_legendre_pair(&a, &b)? || !type_matches(&a, type_a) || !type_matches(&b, type_b) {
        return Err(domain_err!(
            "search certificate failed independent re-verification"
        ));
    }
    PairRecord::new(a, b)
}

#[cfg(feature = "parallel")]
fn run_with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool construction")
            .install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_with_threads<T>(_threads: Option<usize>, f: impl FnOnce() -> T) -> T {
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yp_found_on_z3() {
        let out = search_yamada_pott(3, &ExhaustiveOptions::default()).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        let pair = out.certificate.unwrap();
        assert_eq!(pair.a().symmetry_type(), SymmetryType::Symmetric);
        assert_eq!(pair.b().symmetry_type(), SymmetryType::SkewSymmetric);
    }

    #[test]
    fn yp_exhausts_z7() {
        let out = search_yamada_pott(7, &ExhaustiveOptions::default()).unwrap();
        assert_eq!(out.status, SearchStatus::ExhaustedNone);
        assert_eq!(out.cardinality, 48);
        assert_eq!(out.census, 48);
    }

    #[test]
    fn budget_and_resume_reach_the_same_token() {
        let full = search_yamada_pott(9, &ExhaustiveOptions::default()).unwrap();
        assert_eq!(full.status, SearchStatus::Found);
        let first = search_yamada_pott(
            9,
            &ExhaustiveOptions {
                budget: Some(3),
                ..ExhaustiveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(first.status, SearchStatus::BudgetExceeded);
        assert_eq!(first.next_token, Some(3));
        assert_eq!(first.census, 3);
        let resumed = search_yamada_pott(
            9,
            &ExhaustiveOptions {
                start_token: first.next_token.unwrap(),
                prior_census: first.census,
                ..ExhaustiveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(resumed.status, SearchStatus::Found);
        assert_eq!(resumed.found_token, full.found_token);
        assert_eq!(resumed.census, full.census);
    }

    #[test]
    fn zero_budget_covers_nothing() {
        let out = search_yamada_pott(
            11,
            &ExhaustiveOptions {
                budget: Some(0),
                ..ExhaustiveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert_eq!(out.census, 0);
        assert_eq!(out.next_token, Some(0));
    }

    #[test]
    fn typed_both_symmetric_finds_paley_like_pair() {
        let out = search_typed_legendre(
            5,
            SymmetryType::Symmetric,
            SymmetryType::Symmetric,
            &ExhaustiveOptions::default(),
        )
        .unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        let pair = out.certificate.unwrap();
        assert_eq!(pair.a().symmetry_type(), SymmetryType::Symmetric);
        assert_eq!(pair.b().symmetry_type(), SymmetryType::Symmetric);
    }

    #[test]
    fn typed_strict_neither_exhausts_on_z7() {
        let out = search_typed_legendre(
            7,
            SymmetryType::Neither,
            SymmetryType::Symmetric,
            &ExhaustiveOptions::default(),
        )
        .unwrap();
        assert_eq!(out.status, SearchStatus::ExhaustedNone);
        assert_eq!(out.census, out.cardinality);
    }

    #[test]
    fn unconstrained_large_space_needs_force() {
        let err = search_typed_legendre(
            17,
            SymmetryType::Neither,
            SymmetryType::Neither,
            &ExhaustiveOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Infeasible(_)));
    }

    #[test]
    fn pruning_preserves_the_verdict() {
        let plain = search_yamada_pott(9, &ExhaustiveOptions::default()).unwrap();
        let pruned = search_yamada_pott(
            9,
            &ExhaustiveOptions {
                prune_multipliers: true,
                ..ExhaustiveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(plain.status, SearchStatus::Found);
        assert_eq!(pruned.status, SearchStatus::Found);
        let none_plain = search_yamada_pott(7, &ExhaustiveOptions::default()).unwrap();
        let none_pruned = search_yamada_pott(
            7,
            &ExhaustiveOptions {
                prune_multipliers: true,
                ..ExhaustiveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(none_plain.status, SearchStatus::ExhaustedNone);
        assert_eq!(none_pruned.status, SearchStatus::ExhaustedNone);
        assert_eq!(none_pruned.census, none_pruned.cardinality);
    }

    #[test]
    fn explicit_thread_count_matches_default() {
        let default = search_yamada_pott(11, &ExhaustiveOptions::default()).unwrap();
        let forced = search_yamada_pott(
            11,
            &ExhaustiveOptions {
                threads: Some(2),
                ..ExhaustiveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(default.found_token, forced.found_token);
        assert_eq!(default.census, forced.census);
    }
}
