//! Candidate one-set enumeration for one side of a pair search: symmetric,
//! skew-symmetric, or unconstrained k-subsets of Z_n as bit masks, in a
//! fixed order with exact unranking for restarts.

use crate::array::SymmetryType;
use crate::error::{domain_err, Result};

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Unranks the colexicographically `rank`-th k-subset of `0..n` as a mask.
/// Colex order on subsets coincides with numeric order on masks.
fn unrank_colex(n: u32, k: u32, mut rank: u128) -> u64 {
    let mut mask = 0u64;
    for size in (1..=k as u64).rev() {
        let mut c = size - 1;
        while c + 1 < n as u64 && binomial(c + 1, size) <= rank {
            c += 1;
        }
        mask |= 1u64 << c;
        rank -= binomial(c, size);
    }
    mask
}

/// Next k-subset mask in numeric order (Gosper's hack).
fn next_subset(mask: u64) -> u64 {
    let c = mask & mask.wrapping_neg();
    let r = mask + c;
    r | (((mask ^ r) >> 2) / c)
}

/// All one-sets of size `k` on Z_n with the given symmetry constraint
/// (`Neither` means unconstrained), as bit masks over `0..n`.
///
/// Symmetric sets are determined by a choice of negation pairs {x, −x}
/// plus 0-membership forced by the parity of k; skew-symmetric sets choose
/// exactly one element from each pair, so k must be (n±1)/2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SideSpace {
    n: u32,
    k: u32,
    constraint: SymmetryType,
}

impl SideSpace {
    pub fn new(n: u32, k: u32, constraint: SymmetryType) -> Result<Self> {
        if n == 0 || n.is_multiple_of(2) {
            return Err(domain_err!("n must be odd and positive, got {n}"));
        }
        if n > 63 {
            return Err(domain_err!(
                "bit-packed enumeration supports n <= 63, got {n}"
            ));
        }
        if k > n {
            return Err(domain_err!("k = {k} exceeds n = {n}"));
        }
        Ok(Self { n, k, constraint })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn constraint(&self) -> SymmetryType {
        self.constraint
    }

    fn pair_count(&self) -> u32 {
        (self.n - 1) / 2
    }

    /// Chosen negation pairs for a symmetric set of size k.
    fn sym_pairs(&self) -> u32 {
        self.k / 2
    }

    fn zero_in(&self) -> bool {
        match self.constraint {
            SymmetryType::Symmetric => self.k % 2 == 1,
            SymmetryType::SkewSymmetric => self.k == self.n.div_ceil(2),
            SymmetryType::Neither => unreachable!(),
        }
    }

    pub fn cardinality(&self) -> u128 {
        let p = self.pair_count() as u64;
        match self.constraint {
            SymmetryType::Symmetric => binomial(p, self.sym_pairs() as u64),
            SymmetryType::SkewSymmetric => {
                if self.k == self.n.div_ceil(2) || self.k == (self.n - 1) / 2 {
                    1u128 << p
                } else {
                    0
                }
            }
            SymmetryType::Neither => binomial(self.n as u64, self.k as u64),
        }
    }

    /// Expands per-pair choice state into a one-set mask. For symmetric
    /// spaces `state` selects which pairs are present; for skew spaces bit
    /// i selects n−(i+1) over i+1.
    fn expand(&self, state: u64) -> u64 {
        let n = self.n;
        match self.constraint {
            SymmetryType::Symmetric => {
                let mut mask = if self.zero_in() { 1u64 } else { 0 };
                let mut s = state;
                while s != 0 {
                    let i = s.trailing_zeros();
                    mask |= (1u64 << (i + 1)) | (1u64 << (n - i - 1));
                    s &= s - 1;
                }
                mask
            }
            SymmetryType::SkewSymmetric => {
                let mut mask = if self.zero_in() { 1u64 } else { 0 };
                for i in 0..self.pair_count() {
                    if state >> i & 1 == 1 {
                        mask |= 1u64 << (n - i - 1);
                    } else {
                        mask |= 1u64 << (i + 1);
                    }
                }
                mask
            }
            SymmetryType::Neither => state,
        }
    }

    pub fn mask_at(&self, rank: u128) -> u64 {
        debug_assert!(rank < self.cardinality());
        match self.constraint {
            SymmetryType::Symmetric => {
                self.expand(unrank_colex(self.pair_count(), self.sym_pairs(), rank))
            }
            SymmetryType::SkewSymmetric => self.expand(rank as u64),
            SymmetryType::Neither => unrank_colex(self.n, self.k, rank),
        }
    }

    pub fn iter(&self) -> SideIter<'_> {
        self.iter_from(0)
    }

    pub fn iter_from(&self, rank: u128) -> SideIter<'_> {
        let remaining = self.cardinality().saturating_sub(rank);
        let state = if remaining == 0 {
            0
        } else {
            match self.constraint {
                SymmetryType::Symmetric => unrank_colex(self.pair_count(), self.sym_pairs(), rank),
                SymmetryType::SkewSymmetric => rank as u64,
                SymmetryType::Neither => unrank_colex(self.n, self.k, rank),
            }
        };
        SideIter {
            space: self,
            state,
            remaining,
        }
    }

    /// Materializes every mask; intended for small inner-loop sides.
    pub fn collect_masks(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

pub struct SideIter<'a> {
    space: &'a SideSpace,
    state: u64,
    remaining: u128,
}

impl Iterator for SideIter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mask = self.space.expand(self.state);
        if self.remaining > 0 {
            self.state = match self.space.constraint {
                SymmetryType::SkewSymmetric => self.state + 1,
                _ => {
                    if self.state == 0 {
                        0
                    } else {
                        next_subset(self.state)
                    }
                }
            };
        }
        Some(mask)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

pub(crate) fn mask_ones(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Symmetry type of the one-set `mask` on Z_n, by the mirrored mask.
pub(crate) fn mask_symmetry(mask: u64, n: u32) -> SymmetryType {
    if n == 1 {
        return SymmetryType::Symmetric;
    }
    let mut mirror = mask & 1;
    for g in 1..n {
        if mask >> g & 1 == 1 {
            mirror |= 1u64 << (n - g);
        }
    }
    if mirror == mask {
        return SymmetryType::Symmetric;
    }
    let all = (1u64 << n) - 1;
    if mask & mirror & !1 == 0 && (mask | mirror) & !1 == all & !1 {
        return SymmetryType::SkewSymmetric;
    }
    SymmetryType::Neither
}
