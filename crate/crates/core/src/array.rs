//! Arrays over finite abelian groups with `{0,1}` or `{−1,1}` entries, their
//! correlation functions, and the difference-family predicates built on them.

use crate::error::{domain_err, Error, Result};
use crate::group::FiniteAbelianGroup;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Alphabet {
    /// Entries in `{0, 1}`.
    ZeroOne,
    /// Entries in `{−1, 1}`.
    PlusMinus,
}

impl Alphabet {
    pub fn name(self) -> &'static str {
        match self {
            Alphabet::ZeroOne => "zo",
            Alphabet::PlusMinus => "pm1",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "zo" => Ok(Alphabet::ZeroOne),
            "pm1" => Ok(Alphabet::PlusMinus),
            other => Err(Error::Parse {
                what: "alphabet",
                detail: format!("expected 'zo' or 'pm1', got '{other}'"),
            }),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum SymmetryType {
    Symmetric,
    SkewSymmetric,
    Neither,
}

impl SymmetryType {
    pub fn name(self) -> &'static str {
        match self {
            SymmetryType::Symmetric => "S",
            SymmetryType::SkewSymmetric => "Sk",
            SymmetryType::Neither => "N",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "S" | "sym" | "symmetric" => Ok(SymmetryType::Symmetric),
            "Sk" | "skew" | "skew-symmetric" => Ok(SymmetryType::SkewSymmetric),
            "N" | "neither" => Ok(SymmetryType::Neither),
            other => Err(Error::Parse {
                what: "symmetry type",
                detail: format!("expected S, Sk, or N, got '{other}'"),
            }),
        }
    }
}

/// Sorted `(value, multiplicity)` census of an autocorrelation profile.
pub type Distribution = Vec<(i64, usize)>;

/// An array `(a_g)` over a finite abelian group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GArray {
    group: FiniteAbelianGroup,
    alphabet: Alphabet,
    values: Vec<i8>,
}

impl GArray {
    pub fn new(group: FiniteAbelianGroup, alphabet: Alphabet, values: Vec<i8>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::LengthMismatch {
                got: values.len(),
                want: group.order(),
            });
        }
        let ok = match alphabet {
            Alphabet::ZeroOne => values.iter().all(|&v| v == 0 || v == 1),
            Alphabet::PlusMinus => values.iter().all(|&v| v == -1 || v == 1),
        };
        if !ok {
            return Err(Error::InvalidValues(alphabet.name()));
        }
        Ok(Self {
            group,
            alphabet,
            values,
        })
    }

    /// Array with value 1 exactly on `one_set` (0 or −1 elsewhere).
    pub fn from_one_set(
        group: FiniteAbelianGroup,
        alphabet: Alphabet,
        one_set: &[usize],
    ) -> Result<Self> {
        let off = match alphabet {
            Alphabet::ZeroOne => 0i8,
            Alphabet::PlusMinus => -1i8,
        };
        let mut values = vec![off; group.order()];
        for &g in one_set {
            if g >= group.order() {
                return Err(domain_err!("one-set element {g} out of range"));
            }
            if values[g] == 1 {
                return Err(domain_err!("one-set element {g} repeated"));
            }
            values[g] = 1;
        }
        Ok(Self {
            group,
            alphabet,
            values,
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn value(&self, g: usize) -> i64 {
        self.values[g] as i64
    }

    /// Indices where the value is 1, ascending.
    pub fn one_set(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&g| self.values[g] == 1)
            .collect()
    }

    pub fn ones_count(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1).count()
    }

    pub fn row_sum(&self) -> i64 {
        self.values.iter().map(|&v| v as i64).sum()
    }

    /// `{0,1} → {−1,1}` via `a_g ↦ 2a_g − 1`.
    pub fn to_pm1(&self) -> Result<GArray> {
        match self.alphabet {
            Alphabet::ZeroOne => Ok(GArray {
                group: self.group.clone(),
                alphabet: Alphabet::PlusMinus,
                values: self.values.iter().map(|&v| 2 * v - 1).collect(),
            }),
            Alphabet::PlusMinus => Err(Error::WrongAlphabet {
                want: "zo",
                got: "pm1",
            }),
        }
    }

    /// `{−1,1} → {0,1}` via `a_g ↦ (a_g + 1)/2`.
    pub fn to_zo(&self) -> Result<GArray> {
        match self.alphabet {
            Alphabet::PlusMinus => Ok(GArray {
                group: self.group.clone(),
                alphabet: Alphabet::ZeroOne,
                values: self.values.iter().map(|&v| (v + 1) / 2).collect(),
            }),
            Alphabet::ZeroOne => Err(Error::WrongAlphabet {
                want: "pm1",
                got: "zo",
            }),
        }
    }

    /// The array in the requested alphabet, converting when necessary.
    pub fn in_alphabet(&self, alphabet: Alphabet) -> GArray {
        if self.alphabet == alphabet {
            self.clone()
        } else {
            match alphabet {
                Alphabet::PlusMinus => self.to_pm1().expect("source is zo"),
                Alphabet::ZeroOne => self.to_zo().expect("source is pm1"),
            }
        }
    }

    /// Negates a `{−1,1}` array.
    pub fn negated(&self) -> Result<GArray> {
        if self.alphabet != Alphabet::PlusMinus {
            return Err(Error::WrongAlphabet {
                want: "pm1",
                got: self.alphabet.name(),
            });
        }
        Ok(GArray {
            group: self.group.clone(),
            alphabet: self.alphabet,
            values: self.values.iter().map(|&v| -v).collect(),
        })
    }

    /// Translate by `s`: the result takes value `a_g` at `g + s` (the
    /// one-set moves to `D + s`).
    pub fn translated(&self, s: usize) -> GArray {
        let mut values = vec![0i8; self.values.len()];
        for g in 0..self.values.len() {
            values[self.group.add(g, s)] = self.values[g];
        }
        GArray {
            group: self.group.clone(),
            alphabet: self.alphabet,
            values,
        }
    }

    /// Applies `g ↦ m·g + s` with a per-coordinate unit multiplier tuple.
    pub fn transformed(&self, m: &[u64], s: usize) -> Result<GArray> {
        let mut values = vec![0i8; self.values.len()];
        for g in 0..self.values.len() {
            values[self.group.add(self.group.scale_tuple(m, g)?, s)] = self.values[g];
        }
        Ok(GArray {
            group: self.group.clone(),
            alphabet: self.alphabet,
            values,
        })
    }

    /// Autocorrelation `C(t) = Σ_g a_{g+t} a_g` for every `t`.
    pub fn autocorrelation(&self) -> Vec<i64> {
        let n = self.values.len();
        let mut out = vec![0i64; n];
        for (t, slot) in out.iter_mut().enumerate() {
            let mut acc = 0i64;
            for g in 0..n {
                acc += self.values[self.group.add(g, t)] as i64 * self.values[g] as i64;
            }
            *slot = acc;
        }
        out
    }

    /// `d_D(t) = |(D + t) ∩ D|` for the one-set `D`.
    pub fn difference_function(&self, t: usize) -> usize {
        let one_set = self.one_set();
        one_set
            .iter()
            .filter(|&&d| self.values[self.group.add(d, t)] == 1)
            .count()
    }

    /// Row-sum balance: sum 0 (even order) or ±1 (odd) for `{−1,1}`;
    /// weight `n/2` or `(n±1)/2` for `{0,1}`.
    pub fn is_balanced(&self) -> bool {
        let n = self.values.len() as i64;
        match self.alphabet {
            Alphabet::PlusMinus => {
                let s = self.row_sum();
                if n % 2 == 0 {
                    s == 0
                } else {
                    s.abs() == 1
                }
            }
            Alphabet::ZeroOne => {
                let k = self.ones_count() as i64;
                if n % 2 == 0 {
                    2 * k == n
                } else {
                    (2 * k - n).abs() == 1
                }
            }
        }
    }

    /// One step away from balanced: sum ±2 (even order) or ±3 (odd) for
    /// `{−1,1}`; weight `(n±2)/2` or `(n±3)/2` for `{0,1}`.
    pub fn is_almost_balanced(&self) -> bool {
        let n = self.values.len() as i64;
        let dev = match self.alphabet {
            Alphabet::PlusMinus => self.row_sum().abs(),
            Alphabet::ZeroOne => (2 * self.ones_count() as i64 - n).abs(),
        };
        if n % 2 == 0 {
            dev == 2
        } else {
            dev == 3
        }
    }

    /// Whether every off-peak autocorrelation attains the minimum possible
    /// magnitude for the group order: 0, 1, ±2, or −1 as `n ≡ 0, 1, 2, 3
    /// (mod 4)` in `{−1,1}` terms, with the matching `d_D` values for
    /// `{0,1}`.
    pub fn is_perfect(&self) -> bool {
        let n = self.values.len() as i64;
        let auto = self.autocorrelation();
        match self.alphabet {
            Alphabet::PlusMinus => auto.iter().enumerate().skip(1).all(|(_, &c)| match n % 4 {
                0 => c == 0,
                1 => c == 1,
                2 => c.abs() == 2,
                _ => c == -1,
            }),
            Alphabet::ZeroOne => {
                let k = self.ones_count() as i64;
                auto.iter().enumerate().skip(1).all(|(_, &d)| match n % 4 {
                    0 => 4 * d == 4 * k - n,
                    1 => 4 * d == 4 * k - (n - 1),
                    2 => 4 * d == 4 * k - (n - 2) || 4 * d == 4 * k - (n + 2),
                    _ => 4 * d == 4 * k - (n + 1),
                })
            }
        }
    }

    /// Classifies the one-set `D`: symmetric when `D = −D`, skew-symmetric
    /// when `D ∩ −D ⊆ {e}` and `D ∪ −D ⊇ G∖{e}`. The trivial group is
    /// symmetric.
    pub fn symmetry_type(&self) -> SymmetryType {
        let n = self.values.len();
        if n == 1 {
            return SymmetryType::Symmetric;
        }
        let in_d = |g: usize| self.values[g] == 1;
        let symmetric = (0..n).all(|g| in_d(g) == in_d(self.group.neg(g)));
        if symmetric {
            return SymmetryType::Symmetric;
        }
        let skew = (1..n).all(|g| {
            let m = in_d(g);
            let mn = in_d(self.group.neg(g));
            (m || mn) && !(m && mn)
        });
        if skew {
            SymmetryType::SkewSymmetric
        } else {
            SymmetryType::Neither
        }
    }

    /// Sorted `(value, multiplicity)` census of `C(t)` over `t ≠ e`.
    pub fn autocorrelation_distribution(&self) -> Distribution {
        let auto = self.autocorrelation();
        let mut counts = std::collections::BTreeMap::new();
        for &c in &auto[1..] {
            *counts.entry(c).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    /// `Σ_t C(t)²` over `t ≠ e`; `include_identity` adds `C(e)²`.
    pub fn correlation_energy(&self, include_identity: bool) -> i64 {
        let auto = self.autocorrelation();
        let skip = usize::from(!include_identity);
        auto.iter().skip(skip).map(|&c| c * c).sum()
    }

    /// `max_{t ≠ e} |C(t)|`.
    pub fn peak_correlation(&self) -> i64 {
        self.autocorrelation()[1..]
            .iter()
            .map(|&c| c.abs())
            .max()
            .unwrap_or(0)
    }
}

/// Cross-correlation `C_{a,b}(t) = Σ_g a_{g+t} b_g` for every `t`.
pub fn cross_correlation(a: &GArray, b: &GArray) -> Result<Vec<i64>> {
    check_compatible(a, b)?;
    let n = a.values.len();
    let mut out = vec![0i64; n];
    for (t, slot) in out.iter_mut().enumerate() {
        let mut acc = 0i64;
        for g in 0..n {
            acc += a.values[a.group.add(g, t)] as i64 * b.values[g] as i64;
        }
        *slot = acc;
    }
    Ok(out)
}

pub(crate) fn check_compatible(a: &GArray, b: &GArray) -> Result<()> {
    if a.group != b.group {
        return Err(Error::GroupMismatch(
            a.group.spec_string(),
            b.group.spec_string(),
        ));
    }
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch(
            a.alphabet.name(),
            b.alphabet.name(),
        ));
    }
    Ok(())
}

/// Relabels `a` along the canonical coprime-factor isomorphism onto
/// `target`; correlations, distributions, and all predicates carry over.
pub fn crt_transport(a: &GArray, target: &FiniteAbelianGroup) -> Result<GArray> {
    let map = crate::group::crt_element_map(a.group(), target)?;
    let mut values = vec![0i8; target.order()];
    for g in 0..a.values.len() {
        values[map[g]] = a.values[g];
    }
    GArray::new(target.clone(), a.alphabet, values)
}

fn census_matches(
    group: &FiniteAbelianGroup,
    set: &[usize],
    check: impl Fn(usize, usize) -> bool,
) -> Result<bool> {
    let mut member = vec![false; group.order()];
    for &g in set {
        if g >= group.order() {
            return Err(domain_err!("set element {g} out of range"));
        }
        if member[g] {
            return Err(domain_err!("set element {g} repeated"));
        }
        member[g] = true;
    }
    for t in 1..group.order() {
        let d = set.iter().filter(|&&x| member[group.add(x, t)]).count();
        if !check(t, d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(v, k, λ)` difference set test: every `t ≠ e` has exactly `λ`
/// representations as a difference of elements of `D`. Parameter mismatches
/// (wrong `v` or `k`) are errors, distinct from a failed census.
pub fn is_difference_set(
    group: &FiniteAbelianGroup,
    set: &[usize],
    v: usize,
    k: usize,
    lambda: usize,
) -> Result<bool> {
    if v != group.order() {
        return Err(domain_err!(
            "v = {v} does not match group order {}",
            group.order()
        ));
    }
    if k != set.len() {
        return Err(domain_err!("k = {k} does not match |D| = {}", set.len()));
    }
    census_matches(group, set, |_, d| d == lambda)
}

/// `(v, k, λ, t)` almost difference set test: `d_D` takes the value `λ` at
/// exactly `t` non-identity elements and `λ + 1` at the rest.
pub fn is_almost_difference_set(
    group: &FiniteAbelianGroup,
    set: &[usize],
    v: usize,
    k: usize,
    lambda: usize,
    t_count: usize,
) -> Result<bool> {
    if v != group.order() {
        return Err(domain_err!(
            "v = {v} does not match group order {}",
            group.order()
        ));
    }
    if k != set.len() {
        return Err(domain_err!("k = {k} does not match |D| = {}", set.len()));
    }
    let at_lambda = std::cell::Cell::new(0usize);
    let ok = census_matches(group, set, |_, d| {
        if d == lambda {
            at_lambda.set(at_lambda.get() + 1);
        }
        d == lambda || d == lambda + 1
    })?;
    Ok(ok && at_lambda.get() == t_count)
}

/// Supplementary difference sets: `Σ_i d_{D_i}(t) = λ` for every `t ≠ e`.
pub fn is_supplementary_difference_sets(
    group: &FiniteAbelianGroup,
    sets: &[Vec<usize>],
    lambda: usize,
) -> Result<bool> {
    if sets.is_empty() {
        return Err(domain_err!("need at least one set"));
    }
    let mut members = Vec::new();
    for set in sets {
        let mut m = vec![false; group.order()];
        for &g in set {
            if g >= group.order() {
                return Err(domain_err!("set element {g} out of range"));
            }
            if m[g] {
                return Err(domain_err!("set element {g} repeated"));
            }
            m[g] = true;
        }
        members.push(m);
    }
    for t in 1..group.order() {
        let total: usize = sets
            .iter()
            .zip(&members)
            .map(|(set, m)| set.iter().filter(|&&x| m[group.add(x, t)]).count())
            .sum();
        if total != lambda {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Legendre pair test. In `{−1,1}` terms: equal row sums in `{−1,1}` and
/// `C_a(t) + C_b(t) = −2` for every `t ≠ e`. In `{0,1}` terms: equal weights
/// `k ∈ {(n±1)/2}` and `d_A(t) + d_B(t)` constantly `(n+1)/2` (when
/// `k = (n+1)/2`) or `(n−3)/2` (when `k = (n−1)/2`). The two routes agree
/// under the alphabet conversion.
pub fn is_legendre_pair(a: &GArray, b: &GArray) -> Result<bool> {
    check_compatible(a, b)?;
    let n = a.len() as i64;
    match a.alphabet {
        Alphabet::PlusMinus => {
            let (sa, sb) = (a.row_sum(), b.row_sum());
            if sa != sb || sa.abs() != 1 {
                return Ok(false);
            }
            let ca = a.autocorrelation();
            let cb = b.autocorrelation();
            Ok(ca[1..].iter().zip(&cb[1..]).all(|(x, y)| x + y == -2))
        }
        Alphabet::ZeroOne => {
            let (ka, kb) = (a.ones_count() as i64, b.ones_count() as i64);
            if ka != kb {
                return Ok(false);
            }
            let lambda = if 2 * ka == n + 1 {
                (n + 1) / 2
            } else if 2 * ka == n - 1 {
                (n - 3) / 2
            } else {
                return Ok(false);
            };
            let ca = a.autocorrelation();
            let cb = b.autocorrelation();
            Ok(ca[1..].iter().zip(&cb[1..]).all(|(x, y)| x + y == lambda))
        }
    }
}

/// Yamada-Pott pair test: a Legendre `{0,1}` pair with `|A| = |B|`, `a`
/// symmetric, and `b` skew-symmetric. `{−1,1}` inputs are converted.
pub fn is_yamada_pott_pair(a: &GArray, b: &GArray) -> Result<bool> {
    check_compatible(a, b)?;
    let (a, b) = (
        a.in_alphabet(Alphabet::ZeroOne),
        b.in_alphabet(Alphabet::ZeroOne),
    );
    Ok(is_legendre_pair(&a, &b)?
        && a.ones_count() == b.ones_count()
        && a.symmetry_type() == SymmetryType::Symmetric
        && b.symmetry_type() == SymmetryType::SkewSymmetric)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n).unwrap()
    }

    fn zo(n: u64, set: &[usize]) -> GArray {
        GArray::from_one_set(z(n), Alphabet::ZeroOne, set).unwrap()
    }

    #[test]
    fn quadratic_residues_mod_7_form_a_difference_set() {
        let d = [1usize, 2, 4];
        let g = z(7);
        assert!(is_difference_set(&g, &d, 7, 3, 1).unwrap());
        assert!(!is_difference_set(&g, &[1, 2, 3], 7, 3, 1).unwrap());
        assert!(is_difference_set(&g, &d, 8, 3, 1).is_err());
        assert!(is_difference_set(&g, &d, 7, 4, 1).is_err());
    }

    #[test]
    fn difference_function_and_autocorrelation_agree() {
        let a = zo(7, &[1, 2, 4]);
        let auto = a.autocorrelation();
        for (t, &v) in auto.iter().enumerate() {
            assert_eq!(v, a.difference_function(t) as i64);
        }
        let p = a.to_pm1().unwrap();
        let pauto = p.autocorrelation();
        let k = a.ones_count() as i64;
        for t in 1..7 {
            assert_eq!(pauto[t], 7 - 4 * (k - auto[t]));
        }
    }

    #[test]
    fn paley_z7_array_is_perfect_and_skew() {
        let a = zo(7, &[1, 2, 4]);
        assert!(a.is_perfect());
        assert!(a.is_balanced());
        assert_eq!(a.symmetry_type(), SymmetryType::SkewSymmetric);
        let p = a.to_pm1().unwrap();
        assert!(p.is_perfect());
        assert_eq!(p.autocorrelation()[1..], [-1, -1, -1, -1, -1, -1]);
    }

    #[test]
    fn alphabet_round_trip() {
        let a = zo(9, &[0, 2, 3, 7]);
        let back = a.to_pm1().unwrap().to_zo().unwrap();
        assert_eq!(a, back);
        assert!(a.to_zo().is_err());
    }

    #[test]
    fn symmetry_classification() {
        // {1, 6} is symmetric in Z_7, {0, 1, 2, 4} is skew with e included.
        assert_eq!(zo(7, &[1, 6]).symmetry_type(), SymmetryType::Symmetric);
        assert_eq!(
            zo(7, &[0, 1, 2, 4]).symmetry_type(),
            SymmetryType::SkewSymmetric
        );
        assert_eq!(zo(7, &[1, 2, 6]).symmetry_type(), SymmetryType::Neither);
        assert_eq!(zo(1, &[0]).symmetry_type(), SymmetryType::Symmetric);
        // Non-cyclic: inverses act coordinatewise.
        let g = FiniteAbelianGroup::new(&[3, 3]).unwrap();
        let idx = |a: u64, b: u64| g.index_of(&[a, b]).unwrap();
        let d = [idx(1, 0), idx(2, 0), idx(0, 1), idx(0, 2)];
        let arr = GArray::from_one_set(g.clone(), Alphabet::ZeroOne, &d).unwrap();
        assert_eq!(arr.symmetry_type(), SymmetryType::Symmetric);
    }

    #[test]
    fn balance_deviation_bands() {
        assert!(zo(7, &[1, 2, 4]).is_balanced());
        assert!(zo(7, &[1, 2, 4, 5]).is_balanced());
        assert!(!zo(7, &[1, 2]).is_balanced());
        assert!(zo(7, &[1, 2]).is_almost_balanced());
        assert!(zo(8, &[0, 1, 2, 3]).is_balanced());
        assert!(zo(8, &[0, 1, 2]).is_almost_balanced());
        assert!(!zo(8, &[0, 1]).is_almost_balanced());
    }

    #[test]
    fn legendre_routes_agree_on_paley_pair() {
        let a = zo(7, &[1, 2, 4]);
        let b = a.clone();
        assert!(is_legendre_pair(&a, &b).unwrap());
        let (pa, pb) = (a.to_pm1().unwrap(), b.to_pm1().unwrap());
        assert!(is_legendre_pair(&pa, &pb).unwrap());
        // Unequal weights fail.
        let c = zo(7, &[1, 2, 4, 5]);
        assert!(!is_legendre_pair(&a, &c).unwrap());
    }

    #[test]
    fn yamada_pott_pair_on_z3() {
        // a = {0} (symmetric), b = {1} (skew): the unique weights-1 instance.
        let a = zo(3, &[0]);
        let b = zo(3, &[1]);
        assert!(is_yamada_pott_pair(&a, &b).unwrap());
        assert!(!is_yamada_pott_pair(&b, &a).unwrap());
    }

    #[test]
    fn sds_census_for_legendre_pair() {
        let a = zo(7, &[1, 2, 4]);
        let g = z(7);
        // k = 3 = (n−1)/2, so λ = (n−3)/2 = 2.
        assert!(is_supplementary_difference_sets(&g, &[a.one_set(), a.one_set()], 2).unwrap());
        assert!(!is_supplementary_difference_sets(&g, &[a.one_set(), a.one_set()], 3).unwrap());
    }

    #[test]
    fn ads_census_detects_parameters() {
        // {1, 2, 4} ⊂ Z_8 has d values {1, 0, 1, 0, 1, 0, 1}: λ = 0 at 3
        // elements, λ+1 at 4. Checked by hand from the eight rotations.
        let g = z(8);
        let d = [1usize, 2, 4];
        let counts: Vec<usize> = (1..8)
            .map(|t| d.iter().filter(|&&x| d.contains(&((x + t) % 8))).count())
            .collect();
        let zeros = counts.iter().filter(|&&c| c == 0).count();
        assert!(is_almost_difference_set(&g, &d, 8, 3, 0, zeros).unwrap());
        assert!(!is_almost_difference_set(&g, &d, 8, 3, 0, zeros + 1).unwrap());
    }

    #[test]
    fn energy_and_peak() {
        let a = zo(7, &[1, 2, 4]).to_pm1().unwrap();
        // All off-peak correlations are −1: energy 6, peak 1.
        assert_eq!(a.correlation_energy(false), 6);
        assert_eq!(a.correlation_energy(true), 6 + 49);
        assert_eq!(a.peak_correlation(), 1);
        assert_eq!(a.autocorrelation_distribution(), vec![(-1, 6)]);
    }

    #[test]
    fn transport_preserves_correlations() {
        let src = FiniteAbelianGroup::new(&[3, 5]).unwrap();
        let dst = z(15);
        let a =
            GArray::from_one_set(src.clone(), Alphabet::PlusMinus, &[0, 1, 2, 7, 9, 14]).unwrap();
        let b = crt_transport(&a, &dst).unwrap();
        let mut da = a.autocorrelation_distribution();
        let mut db = b.autocorrelation_distribution();
        da.sort();
        db.sort();
        assert_eq!(da, db);
        assert_eq!(a.row_sum(), b.row_sum());
    }

    #[test]
    fn translate_and_transform() {
        let a = zo(7, &[1, 2, 4]);
        let t = a.translated(3);
        let mut expect: Vec<usize> = a.one_set().iter().map(|&g| (g + 3) % 7).collect();
        expect.sort_unstable();
        assert_eq!(t.one_set(), expect);
        let m = a.transformed(&[2], 0).unwrap();
        assert_eq!(m.one_set(), vec![1, 2, 4]);
        assert!(a.transformed(&[0], 0).is_err());
    }
}
