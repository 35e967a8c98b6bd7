//! Pairs of arrays with cached invariants, and exact pair equivalence under
//! the shift-and-multiplier action.

use crate::array::{
    check_compatible, is_legendre_pair, is_yamada_pott_pair, Distribution, GArray, SymmetryType,
};
use crate::error::Result;
use crate::group::FiniteAbelianGroup;

/// Invariants of a pair that are preserved by the equivalence action (the
/// unordered pair of distributions; energies and peaks derive from them).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairInvariants {
    pub row_sums: (i64, i64),
    pub symmetry: (SymmetryType, SymmetryType),
    pub distributions: (Distribution, Distribution),
    pub energies: (i64, i64),
    pub peaks: (i64, i64),
}

impl PairInvariants {
    pub fn compute(a: &GArray, b: &GArray) -> Self {
        Self {
            row_sums: (a.row_sum(), b.row_sum()),
            symmetry: (a.symmetry_type(), b.symmetry_type()),
            distributions: (
                a.autocorrelation_distribution(),
                b.autocorrelation_distribution(),
            ),
            energies: (a.correlation_energy(false), b.correlation_energy(false)),
            peaks: (a.peak_correlation(), b.peak_correlation()),
        }
    }

    /// The distributions as an unordered (sorted) pair.
    fn distribution_multiset(&self) -> [&Vec<(i64, usize)>; 2] {
        let (x, y) = (&self.distributions.0, &self.distributions.1);
        if x <= y {
            [x, y]
        } else {
            [y, x]
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairRecord {
    a: GArray,
    b: GArray,
    invariants: PairInvariants,
}

impl PairRecord {
    pub fn new(a: GArray, b: GArray) -> Result<Self> {
        check_compatible(&a, &b)?;
        let invariants = PairInvariants::compute(&a, &b);
        Ok(Self { a, b, invariants })
    }

    pub fn a(&self) -> &GArray {
        &self.a
    }

    pub fn b(&self) -> &GArray {
        &self.b
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        self.a.group()
    }

    pub fn invariants(&self) -> &PairInvariants {
        &self.invariants
    }

    /// Recomputes the cached invariants and compares.
    pub fn verify_cached(&self) -> bool {
        self.invariants == PairInvariants::compute(&self.a, &self.b)
    }

    pub fn is_legendre(&self) -> Result<bool> {
        is_legendre_pair(&self.a, &self.b)
    }

    pub fn is_yamada_pott(&self) -> Result<bool> {
        is_yamada_pott_pair(&self.a, &self.b)
    }
}

/// One transformation `g ↦ m·g + s` per side, witnessing equivalence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivalenceWitness {
    /// Whether the second pair was swapped before matching.
    pub swapped: bool,
    /// Multiplier tuple and shift taking the (possibly swapped) first
    /// component of the second pair onto `a` of the first.
    pub tau: (Vec<u64>, usize),
    /// Same for the second component onto `b`.
    pub beta: (Vec<u64>, usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equivalence {
    Equivalent(Box<EquivalenceWitness>),
    NotEquivalent,
    /// The orbit scan would exceed the operation budget.
    Undecided,
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent(_))
    }
}

#[derive(Copy, Clone, Debug)]
pub struct EquivalenceOptions {
    /// Cap on element-comparison operations for the orbit scan; an estimate
    /// above the cap yields `Undecided` rather than a partial answer.
    pub op_budget: u64,
}

impl Default for EquivalenceOptions {
    fn default() -> Self {
        Self {
            op_budget: 10_000_000_000,
        }
    }
}

/// Decides whether two pairs lie in one orbit of the action
/// `(a, b) ↦ (τa, βb)` with unit multiplier tuples linked by `τ* = ±β*`
/// (one sign for the whole tuple: flipping individual coordinates would not
/// preserve the Legendre property on product groups), independent shifts,
/// and an optional component swap. Rejection by the preserved invariants is
/// exact and cheap; otherwise the full orbit is scanned.
pub fn pairs_equivalent(
    p1: &PairRecord,
    p2: &PairRecord,
    options: EquivalenceOptions,
) -> Result<Equivalence> {
    check_compatible(p1.a(), p2.a())?;
    if p1.invariants.distribution_multiset() != p2.invariants.distribution_multiset() {
        return Ok(Equivalence::NotEquivalent);
    }

    let group = p1.group();
    let n = group.order();
    let units = group.unit_tuples();
    let estimate = units.len() as u128 * 2 * 2 * 2 * (n as u128) * (n as u128);
    if estimate > options.op_budget as u128 {
        return Ok(Equivalence::Undecided);
    }

    let factors = group.factors().to_vec();
    for beta_mul in &units {
        let negated: Vec<u64> = beta_mul
            .iter()
            .zip(&factors)
            .map(|(&m, &f)| (f - m % f) % f)
            .collect();
        for tau_mul in [beta_mul.clone(), negated] {
            for swapped in [false, true] {
                let (src_a, src_b) = if swapped {
                    (p2.b(), p2.a())
                } else {
                    (p2.a(), p2.b())
                };
                let Some(sa) = translate_match(p1.a(), src_a, &tau_mul)? else {
                    continue;
                };
                let Some(sb) = translate_match(p1.b(), src_b, beta_mul)? else {
                    continue;
                };
                return Ok(Equivalence::Equivalent(Box::new(EquivalenceWitness {
                    swapped,
                    tau: (tau_mul, sa),
                    beta: (beta_mul.clone(), sb),
                })));
            }
        }
    }
    Ok(Equivalence::NotEquivalent)
}

/// The shift `s` with `target = (src under g ↦ m·g) translated by s`,
/// if one exists.
fn translate_match(target: &GArray, src: &GArray, m: &[u64]) -> Result<Option<usize>> {
    let moved = src.transformed(m, 0)?;
    let group = target.group();
    let n = group.order();
    'shift: for s in 0..n {
        for h in 0..n {
            if target.value(h) != moved.value(group.sub(h, s)) {
                continue 'shift;
            }
        }
        return Ok(Some(s));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::Alphabet;

    fn record(n: u64, a: &[usize], b: &[usize]) -> PairRecord {
        let g = FiniteAbelianGroup::cyclic(n).unwrap();
        PairRecord::new(
            GArray::from_one_set(g.clone(), Alphabet::ZeroOne, a).unwrap(),
            GArray::from_one_set(g, Alphabet::ZeroOne, b).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn pair_record_caches_and_verifies() {
        let p = record(7, &[1, 2, 4], &[1, 2, 4]);
        assert!(p.verify_cached());
        assert!(p.is_legendre().unwrap());
        assert_eq!(p.invariants().energies.0, p.invariants().energies.1);
    }

    #[test]
    fn pair_is_equivalent_to_itself_and_its_shift() {
        let p = record(7, &[1, 2, 4], &[1, 2, 4]);
        let same = pairs_equivalent(&p, &p, EquivalenceOptions::default()).unwrap();
        assert!(same.is_equivalent());

        let g = FiniteAbelianGroup::cyclic(7).unwrap();
        let shifted = PairRecord::new(
            GArray::from_one_set(g.clone(), Alphabet::ZeroOne, &[1, 2, 4])
                .unwrap()
                .translated(5),
            GArray::from_one_set(g, Alphabet::ZeroOne, &[1, 2, 4]).unwrap(),
        )
        .unwrap();
        let eq = pairs_equivalent(&p, &shifted, EquivalenceOptions::default()).unwrap();
        let Equivalence::Equivalent(w) = eq else {
            panic!("expected equivalent")
        };
        assert_eq!(w.tau.0, vec![1]);
    }

    #[test]
    fn swap_and_multiplier_orbits_are_found() {
        // b-component is a multiplier image of a, offered in swapped order.
        let g = FiniteAbelianGroup::cyclic(7).unwrap();
        let a = GArray::from_one_set(g.clone(), Alphabet::ZeroOne, &[1, 2, 4]).unwrap();
        let b = GArray::from_one_set(g, Alphabet::ZeroOne, &[3, 5, 6]).unwrap();
        let p = PairRecord::new(a.clone(), b.clone()).unwrap();
        let q = PairRecord::new(b, a).unwrap();
        let eq = pairs_equivalent(&p, &q, EquivalenceOptions::default()).unwrap();
        let Equivalence::Equivalent(w) = eq else {
            panic!("expected equivalent")
        };
        assert!(w.swapped);
    }

    #[test]
    fn distribution_prescreen_rejects() {
        // {1,2,4} is a DS; {1,2,3} is not, so the distributions differ.
        let p = record(7, &[1, 2, 4], &[1, 2, 4]);
        let q = record(7, &[1, 2, 3], &[1, 2, 4]);
        assert_eq!(
            pairs_equivalent(&p, &q, EquivalenceOptions::default()).unwrap(),
            Equivalence::NotEquivalent
        );
    }

    #[test]
    fn budget_cap_yields_undecided() {
        let p = record(7, &[1, 2, 4], &[1, 2, 4]);
        let q = record(7, &[2, 4, 1], &[4, 2, 1]);
        assert_eq!(
            pairs_equivalent(&p, &q, EquivalenceOptions { op_budget: 10 }).unwrap(),
            Equivalence::Undecided
        );
    }

    #[test]
    fn inequivalent_same_distribution_pair_is_scanned() {
        // Both pairs use the same two one-sets, so the prescreen passes and
        // the orbit scan must decide. {1,2,4} and its complement-of-zero
        // twin {3,5,6} lie in one array orbit, so these are equivalent.
        let p = record(7, &[1, 2, 4], &[3, 5, 6]);
        let q = record(7, &[3, 5, 6], &[1, 2, 4]);
        assert!(pairs_equivalent(&p, &q, EquivalenceOptions::default())
            .unwrap()
            .is_equivalent());
    }
}
