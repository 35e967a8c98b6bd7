//! Finite abelian groups in invariant-factor form, their integral group
//! rings, correlations, and transport along coprime-factor isomorphisms.
//!
//! A group is a product `Z_{s_1} × … × Z_{s_r}`. Elements are flat indices
//! into the mixed-radix expansion of the factor tuple with the last factor
//! varying fastest, so `Z_3 × Z_19` stores `(g_1, g_2)` at `g_1·19 + g_2`.

use crate::error::{domain_err, Error, Result};

/// `Z_{s_1} × … × Z_{s_r}` with every `s_i ≥ 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    strides: Vec<usize>,
    order: usize,
}

impl FiniteAbelianGroup {
    /// Builds the group from its factor list. Factors of 1 are dropped
    /// (Z_1 × H has the same flat indices as H); the empty product is the
    /// one-element group.
    pub fn new(factors: &[u64]) -> Result<Self> {
        let mut kept = Vec::with_capacity(factors.len());
        let mut order: usize = 1;
        for &s in factors {
            if s == 0 {
                return Err(Error::InvalidFactor(s));
            }
            if s == 1 {
                continue;
            }
            kept.push(s);
            order = order
                .checked_mul(usize::try_from(s).map_err(|_| Error::OrderOverflow)?)
                .ok_or(Error::OrderOverflow)?;
        }
        if order > 1 << 26 {
            return Err(Error::OrderOverflow);
        }
        let mut strides = vec![1usize; kept.len()];
        for i in (0..kept.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * kept[i + 1] as usize;
        }
        Ok(Self {
            factors: kept,
            strides,
            order,
        })
    }

    /// Cyclic group `Z_n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Least common multiple of the factors (the group exponent).
    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1u64, |acc, &s| lcm(acc, s))
    }

    /// Canonical text form, e.g. `Z3xZ19` or `Z2xZ5^2` (runs compressed).
    pub fn spec_string(&self) -> String {
        if self.factors.is_empty() {
            return "Z1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.factors.len() {
            let mut j = i;
            while j + 1 < self.factors.len() && self.factors[j + 1] == self.factors[i] {
                j += 1;
            }
            if !out.is_empty() {
                out.push('x');
            }
            out.push('Z');
            out.push_str(&self.factors[i].to_string());
            if j > i {
                out.push('^');
                out.push_str(&(j - i + 1).to_string());
            }
            i = j + 1;
        }
        out
    }

    /// Parses the `spec_string` grammar: `Z<n>` terms joined with `x`,
    /// each optionally raised to a repetition count with `^`.
    pub fn parse_spec(s: &str) -> Result<Self> {
        let bad = |detail: String| Error::Parse {
            what: "group spec",
            detail,
        };
        let mut factors = Vec::new();
        for term in s.split('x') {
            let term = term.trim();
            let rest = term
                .strip_prefix('Z')
                .ok_or_else(|| bad(format!("term '{term}' must start with Z")))?;
            let (base, reps) = match rest.split_once('^') {
                Some((b, e)) => {
                    let reps: usize = e
                        .parse()
                        .map_err(|_| bad(format!("bad exponent in '{term}'")))?;
                    if reps == 0 {
                        return Err(bad(format!("zero exponent in '{term}'")));
                    }
                    (b, reps)
                }
                None => (rest, 1),
            };
            let n: u64 = base
                .parse()
                .map_err(|_| bad(format!("bad order in '{term}'")))?;
            factors.extend(std::iter::repeat_n(n, reps));
        }
        Self::new(&factors)
    }

    pub fn zero(&self) -> usize {
        0
    }

    /// Residue tuple of a flat index.
    pub fn tuple_of(&self, mut idx: usize) -> Vec<u64> {
        debug_assert!(idx < self.order);
        let mut t = Vec::with_capacity(self.factors.len());
        for i in 0..self.factors.len() {
            t.push((idx / self.strides[i]) as u64);
            idx %= self.strides[i];
        }
        t
    }

    /// Flat index of a residue tuple.
    pub fn index_of(&self, tuple: &[u64]) -> Result<usize> {
        if tuple.len() != self.factors.len() {
            return Err(domain_err!(
                "tuple rank {} does not match group rank {}",
                tuple.len(),
                self.factors.len()
            ));
        }
        let mut idx = 0usize;
        for (i, &g) in tuple.iter().enumerate() {
            if g >= self.factors[i] {
                return Err(domain_err!(
                    "residue {g} out of range for Z{}",
                    self.factors[i]
                ));
            }
            idx += g as usize * self.strides[i];
        }
        Ok(idx)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut out = 0usize;
        for i in 0..self.factors.len() {
            let s = self.factors[i] as usize;
            let x = a / self.strides[i] % s;
            let y = b / self.strides[i] % s;
            out += (x + y) % s * self.strides[i];
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut out = 0usize;
        for i in 0..self.factors.len() {
            let s = self.factors[i] as usize;
            let x = a / self.strides[i] % s;
            out += (s - x) % s * self.strides[i];
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `t · g` with the integer `t` acting componentwise.
    pub fn scale(&self, t: i64, g: usize) -> usize {
        let mut out = 0usize;
        for i in 0..self.factors.len() {
            let s = self.factors[i] as i64;
            let x = (g / self.strides[i]) as i64 % s;
            out += (t.rem_euclid(s) * x % s) as usize * self.strides[i];
        }
        out
    }

    /// Applies a per-coordinate multiplier tuple; each `m_i` must be a unit
    /// modulo `s_i`.
    pub fn scale_tuple(&self, m: &[u64], g: usize) -> Result<usize> {
        if m.len() != self.factors.len() {
            return Err(domain_err!(
                "multiplier rank {} vs group rank {}",
                m.len(),
                self.rank()
            ));
        }
        let mut out = 0usize;
        for ((&mul, &s), &stride) in m.iter().zip(&self.factors).zip(&self.strides) {
            if gcd(mul.rem_euclid(s), s) != 1 {
                return Err(domain_err!("multiplier {} is not a unit mod {}", mul, s));
            }
            let x = (g / stride) as u64 % s;
            out += (mul.rem_euclid(s) * x % s) as usize * stride;
        }
        Ok(out)
    }

    /// Units modulo each factor, as tuples, in lexicographic order.
    pub fn unit_tuples(&self) -> Vec<Vec<u64>> {
        let mut units: Vec<Vec<u64>> = vec![Vec::new()];
        for &s in &self.factors {
            let mut next = Vec::new();
            for u in units {
                for m in 1..s {
                    if gcd(m, s) == 1 {
                        let mut v = u.clone();
                        v.push(m);
                        next.push(v);
                    }
                }
            }
            units = next;
        }
        units
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Element of the integral group ring `Z[G]`, stored as one coefficient per
/// group element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupRingElement {
    group: FiniteAbelianGroup,
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(group: &FiniteAbelianGroup) -> Self {
        Self {
            group: group.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    pub fn from_coeffs(group: &FiniteAbelianGroup, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::LengthMismatch {
                got: coeffs.len(),
                want: group.order(),
            });
        }
        Ok(Self {
            group: group.clone(),
            coeffs,
        })
    }

    /// The basis element `g` (coefficient 1 at `g`, 0 elsewhere).
    pub fn basis(group: &FiniteAbelianGroup, g: usize) -> Self {
        let mut w = Self::zero(group);
        w.coeffs[g] = 1;
        w
    }

    /// `Σ_{g ∈ S} g` for a subset `S`.
    pub fn from_one_set(group: &FiniteAbelianGroup, set: &[usize]) -> Self {
        let mut w = Self::zero(group);
        for &g in set {
            w.coeffs[g] += 1;
        }
        w
    }

    /// `Σ_{g ∈ G} g`, the all-ones element.
    pub fn all_ones(group: &FiniteAbelianGroup) -> Self {
        Self {
            group: group.clone(),
            coeffs: vec![1; group.order()],
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> i64 {
        self.coeffs[g]
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                self.group.spec_string(),
                other.group.spec_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (x, y) in self.coeffs.iter().zip(&other.coeffs) {
            coeffs.push(x.checked_add(*y).ok_or(Error::Overflow("group ring add"))?);
        }
        Ok(Self {
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (x, y) in self.coeffs.iter().zip(&other.coeffs) {
            coeffs.push(x.checked_sub(*y).ok_or(Error::Overflow("group ring sub"))?);
        }
        Ok(Self {
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn scalar_mul(&self, c: i64) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(
                x.checked_mul(c)
                    .ok_or(Error::Overflow("group ring scalar"))?,
            );
        }
        Ok(Self {
            group: self.group.clone(),
            coeffs,
        })
    }

    /// Convolution: the coefficient of `t` in `U·V` is `Σ_{g·h = t} u_g v_h`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![0i64; n];
        for g in 0..n {
            let ug = self.coeffs[g];
            if ug == 0 {
                continue;
            }
            for h in 0..n {
                let vh = other.coeffs[h];
                if vh == 0 {
                    continue;
                }
                let t = self.group.add(g, h);
                let prod = ug
                    .checked_mul(vh)
                    .ok_or(Error::Overflow("group ring mul"))?;
                coeffs[t] = coeffs[t]
                    .checked_add(prod)
                    .ok_or(Error::Overflow("group ring mul"))?;
            }
        }
        Ok(Self {
            group: self.group.clone(),
            coeffs,
        })
    }

    /// `W^(t) = Σ_g a_g g^t`; coefficients of colliding images accumulate.
    pub fn power(&self, t: i64) -> Result<Self> {
        let mut coeffs = vec![0i64; self.coeffs.len()];
        for (g, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let img = self.group.scale(t, g);
                coeffs[img] = coeffs[img]
                    .checked_add(c)
                    .ok_or(Error::Overflow("group ring power"))?;
            }
        }
        Ok(Self {
            group: self.group.clone(),
            coeffs,
        })
    }

    /// `|W| = Σ_g |a_g|`.
    pub fn norm_abs(&self) -> i64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

/// Decomposes each factor into prime-power components; used to decide and
/// realize isomorphisms `Z_{mn} ≅ Z_m × Z_n` for coprime `m, n`, recursively.
fn primary_components(factors: &[u64]) -> Vec<(u64, u64, usize)> {
    // (prime, prime power, owning factor position)
    let mut comps = Vec::new();
    for (pos, &s) in factors.iter().enumerate() {
        let mut rem = s;
        let mut p = 2u64;
        while p * p <= rem {
            if rem % p == 0 {
                let mut pe = 1u64;
                while rem % p == 0 {
                    rem /= p;
                    pe *= p;
                }
                comps.push((p, pe, pos));
            }
            p += 1;
        }
        if rem > 1 {
            comps.push((rem, rem, pos));
        }
    }
    comps.sort();
    comps
}

/// Modular inverse for u64 moduli (assumes `gcd(a, m) = 1`).
fn mod_inv(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_s.rem_euclid(m as i128)) as u64
}

/// The canonical element bijection `source → target` when the two groups are
/// isomorphic by coprime cyclic realignment, as a lookup table.
///
/// Both factor lists must split into the same multiset of prime powers
/// (`Z_4` and `Z_2 × Z_2` do not qualify). Each source element maps through
/// its prime-power residues and is reassembled in the target by the Chinese
/// remainder theorem; for `Z_57 → Z_3 × Z_19` this is `i ↦ (i mod 3, i mod 19)`.
pub fn crt_element_map(
    source: &FiniteAbelianGroup,
    target: &FiniteAbelianGroup,
) -> Result<Vec<usize>> {
    let sc = primary_components(source.factors());
    let tc = primary_components(target.factors());
    let mismatch = || Error::NotCrtIsomorphic(source.spec_string(), target.spec_string());
    if sc.len() != tc.len() {
        return Err(mismatch());
    }
    for (a, b) in sc.iter().zip(&tc) {
        if (a.0, a.1) != (b.0, b.1) {
            return Err(mismatch());
        }
    }
    let mut map = Vec::with_capacity(source.order());
    for g in 0..source.order() {
        let src_tuple = source.tuple_of(g);
        // Residues of g at each primary component, in the sorted order.
        let residues: Vec<u64> = sc.iter().map(|&(_, pe, pos)| src_tuple[pos] % pe).collect();
        // Reassemble per target factor by CRT over its primary components.
        let mut tgt_tuple = vec![0u64; target.rank()];
        for (ci, &(_, pe, pos)) in tc.iter().enumerate() {
            let m = target.factors()[pos];
            let rest = m / pe;
            // x ≡ residues[ci] (mod pe) contributes residue·rest·(rest^{-1} mod pe).
            let coef = rest % pe;
            let term = residues[ci] % pe * (rest % m) % m * mod_inv(coef, pe) % m;
            tgt_tuple[pos] = (tgt_tuple[pos] + term) % m;
        }
        map.push(target.index_of(&tgt_tuple)?);
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_string_round_trips() {
        for s in ["Z57", "Z3xZ19", "Z2xZ5^2", "Z2xZ3xZ3xZ7"] {
            let g = FiniteAbelianGroup::parse_spec(s).unwrap();
            let h = FiniteAbelianGroup::parse_spec(&g.spec_string()).unwrap();
            assert_eq!(g, h);
        }
        assert_eq!(
            FiniteAbelianGroup::parse_spec("Z2xZ5^2").unwrap().factors(),
            &[2, 5, 5]
        );
        let trivial = FiniteAbelianGroup::parse_spec("Z1").unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.spec_string(), "Z1");
        assert!(FiniteAbelianGroup::parse_spec("Z0xZ3").is_err());
        assert!(FiniteAbelianGroup::parse_spec("5").is_err());
    }

    #[test]
    fn flat_index_order_last_factor_fastest() {
        let g = FiniteAbelianGroup::new(&[3, 19]).unwrap();
        assert_eq!(g.index_of(&[1, 0]).unwrap(), 19);
        assert_eq!(g.index_of(&[0, 5]).unwrap(), 5);
        assert_eq!(g.tuple_of(40), vec![2, 2]);
        assert_eq!(g.order(), 57);
        assert_eq!(g.exponent(), 57);
    }

    #[test]
    fn arithmetic_matches_componentwise_rules() {
        let g = FiniteAbelianGroup::new(&[4, 6]).unwrap();
        let a = g.index_of(&[3, 5]).unwrap();
        let b = g.index_of(&[2, 4]).unwrap();
        assert_eq!(g.tuple_of(g.add(a, b)), vec![1, 3]);
        assert_eq!(g.tuple_of(g.neg(a)), vec![1, 1]);
        assert_eq!(g.add(a, g.neg(a)), g.zero());
        assert_eq!(g.tuple_of(g.scale(-1, a)), vec![1, 1]);
        assert_eq!(g.tuple_of(g.scale(7, b)), vec![2, 4]);
    }

    #[test]
    fn convolution_on_z4_example() {
        // (1 + g) · (1 - g) over Z_4 with g the generator: 1 + g - g^2 - g^3
        // after collecting, i.e. coefficients (1, 0, -1, 0)·… computed naively.
        let g = FiniteAbelianGroup::cyclic(4).unwrap();
        let u = GroupRingElement::from_coeffs(&g, vec![1, 1, 0, 0]).unwrap();
        let v = GroupRingElement::from_coeffs(&g, vec![1, -1, 0, 0]).unwrap();
        let w = u.mul(&v).unwrap();
        assert_eq!(w.coeffs(), &[1, 0, -1, 0]);
    }

    #[test]
    fn power_accumulates_collisions() {
        // Over Z_6, squaring the elements {1, 4} collides 1·2 = 2 and 4·2 = 2.
        let g = FiniteAbelianGroup::cyclic(6).unwrap();
        let w = GroupRingElement::from_one_set(&g, &[1, 4]);
        let sq = w.power(2).unwrap();
        assert_eq!(sq.coeffs(), &[0, 0, 2, 0, 0, 0]);
        assert_eq!(w.norm_abs(), 2);
    }

    #[test]
    fn inverse_power_is_involutive() {
        let g = FiniteAbelianGroup::new(&[3, 5]).unwrap();
        let w = GroupRingElement::from_coeffs(&g, (0..15).map(|i| i - 7).collect()).unwrap();
        let back = w.power(-1).unwrap().power(-1).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn crt_map_z57_is_residue_map() {
        let z57 = FiniteAbelianGroup::cyclic(57).unwrap();
        let z3z19 = FiniteAbelianGroup::new(&[3, 19]).unwrap();
        let map = crt_element_map(&z57, &z3z19).unwrap();
        for (i, &m) in map.iter().enumerate() {
            let t = z3z19.tuple_of(m);
            assert_eq!(t, vec![(i % 3) as u64, (i % 19) as u64]);
        }
        // And the inverse direction composes to the identity.
        let inv = crt_element_map(&z3z19, &z57).unwrap();
        for i in 0..57 {
            assert_eq!(inv[map[i]], i);
        }
    }

    #[test]
    fn crt_map_rejects_z4_vs_z2z2() {
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        let z22 = FiniteAbelianGroup::new(&[2, 2]).unwrap();
        assert!(matches!(
            crt_element_map(&z4, &z22),
            Err(Error::NotCrtIsomorphic(..))
        ));
    }

    #[test]
    fn crt_map_is_group_isomorphism() {
        let src = FiniteAbelianGroup::new(&[6, 35]).unwrap();
        let dst = FiniteAbelianGroup::new(&[10, 21]).unwrap();
        let map = crt_element_map(&src, &dst).unwrap();
        let mut seen = vec![false; dst.order()];
        for x in 0..src.order() {
            assert!(!seen[map[x]]);
            seen[map[x]] = true;
            for y in 0..src.order() {
                assert_eq!(map[src.add(x, y)], dst.add(map[x], map[y]));
            }
        }
    }
}
