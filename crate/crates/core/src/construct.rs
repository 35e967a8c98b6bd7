//! Construction families for perfect arrays and Legendre pairs built from
//! cyclotomy, each returning a report whose verification checks must all
//! pass.

use crate::array::{
    is_almost_difference_set, is_difference_set, is_legendre_pair,
    is_supplementary_difference_sets, is_yamada_pott_pair, Alphabet, GArray, SymmetryType,
};
use crate::error::{domain_err, Error, Result};
use crate::field::{proper_representation, t_alpha, CyclotomicClasses, FiniteField};
use crate::group::FiniteAbelianGroup;
use crate::pair::PairRecord;
use std::collections::BTreeSet;
use std::fmt::Display;

/// One verification predicate with its expected and actual rendering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub got: String,
}

impl Check {
    fn of<T: Display>(name: &'static str, expected: T, got: T) -> Self {
        Self {
            name,
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    /// A check whose failure rendering carries extra diagnosis text.
    fn diagnosed(name: &'static str, pass: bool, diagnosis: Option<String>) -> Self {
        let got = match (pass, diagnosis) {
            (false, Some(d)) => format!("false ({d})"),
            (p, _) => p.to_string(),
        };
        Self {
            name,
            expected: "true".into(),
            got,
        }
    }

    pub fn passed(&self) -> bool {
        self.got == self.expected
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstructionOutput {
    Array(GArray),
    Pair(PairRecord),
    PairWithLift { pair: PairRecord, lift: GArray },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstructionReport {
    pub family: &'static str,
    pub parameters: Vec<(String, String)>,
    pub output: ConstructionOutput,
    pub checks: Vec<Check>,
}

impl ConstructionReport {
    fn finish(self) -> Result<Self> {
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.got))
            .collect();
        if failed.is_empty() {
            Ok(self)
        } else {
            Err(Error::ConstructionFailed {
                family: self.family.to_string(),
                failed,
            })
        }
    }

    pub fn array(&self) -> Option<&GArray> {
        match &self.output {
            ConstructionOutput::Array(a) => Some(a),
            _ => None,
        }
    }

    pub fn pair(&self) -> Option<&PairRecord> {
        match &self.output {
            ConstructionOutput::Pair(p) | ConstructionOutput::PairWithLift { pair: p, .. } => {
                Some(p)
            }
            _ => None,
        }
    }

    pub fn lift(&self) -> Option<&GArray> {
        match &self.output {
            ConstructionOutput::PairWithLift { lift, .. } => Some(lift),
            _ => None,
        }
    }
}

fn param<T: Display>(name: &str, value: T) -> (String, String) {
    (name.to_string(), value.to_string())
}

fn field_params(field: &FiniteField) -> Vec<(String, String)> {
    let mut out = vec![param("q", field.q()), param("alpha", field.alpha())];
    if field.m() > 1 {
        out.push(param("modulus", field.modulus_string()));
    }
    out
}

/// Field elements as one-set indices of the additive group.
fn additive_set(field: &FiniteField, elems: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = elems.iter().map(|&x| field.additive_index(x)).collect();
    out.sort_unstable();
    out
}

fn class_union(cyc: &CyclotomicClasses, indices: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for &i in indices {
        out.extend(cyc.class(i));
    }
    out
}

/// Legendre check carrying the first census violation on failure.
fn legendre_check(a: &GArray, b: &GArray) -> Result<Check> {
    let ok = is_legendre_pair(a, b)?;
    if ok {
        return Ok(Check::diagnosed("legendre", true, None));
    }
    let diagnosis = match a.alphabet() {
        Alphabet::PlusMinus => {
            let (sa, sb) = (a.row_sum(), b.row_sum());
            if sa != sb || sa.abs() != 1 {
                format!("row sums {sa} and {sb}")
            } else {
                let (ca, cb) = (a.autocorrelation(), b.autocorrelation());
                (1..a.len())
                    .find(|&t| ca[t] + cb[t] != -2)
                    .map(|t| format!("C_a+C_b at t={t} is {}, want -2", ca[t] + cb[t]))
                    .unwrap_or_else(|| "unknown".into())
            }
        }
        Alphabet::ZeroOne => {
            format!(
                "weights {} and {}, or census mismatch",
                a.ones_count(),
                b.ones_count()
            )
        }
    };
    Ok(Check::diagnosed("legendre", false, Some(diagnosis)))
}

fn sds_check(a: &GArray, b: &GArray, lambda: usize) -> Result<Check> {
    let (za, zb) = (
        a.in_alphabet(Alphabet::ZeroOne),
        b.in_alphabet(Alphabet::ZeroOne),
    );
    let ok = is_supplementary_difference_sets(a.group(), &[za.one_set(), zb.one_set()], lambda)?;
    Ok(Check::of("supplementary-difference-census", true, ok))
}

/// Sidelnikov-Lempel-Cohn-Eastman array on the cyclic group of order
/// `q − 1`: entry `i` is 1 exactly when `α^i = α^{2j+1} − 1` for some `j`.
/// Balanced for every odd prime power `q`; perfect exactly when
/// `q ≡ 3 (mod 4)`.
pub fn slce_array(q: u64, alpha: Option<usize>, alphabet: Alphabet) -> Result<ConstructionReport> {
    if q < 5 || q.is_multiple_of(2) {
        return Err(domain_err!(
            "order {q} is not an odd prime power of at least 5"
        ));
    }
    let field = FiniteField::of_order_with_alpha(q, alpha)?;
    let n = field.q() - 1;
    let mut in_s = vec![false; field.q()];
    for i in 0..n / 2 {
        in_s[field.sub(field.alpha_pow(2 * i as u64 + 1), field.one())] = true;
    }
    let one_set: Vec<usize> = (0..n)
        .filter(|&i| in_s[field.alpha_pow(i as u64)])
        .collect();
    let group = FiniteAbelianGroup::cyclic(q - 1)?;
    let arr = GArray::from_one_set(group, Alphabet::ZeroOne, &one_set)?.in_alphabet(alphabet);
    let checks = vec![
        Check::of("balanced", true, arr.is_balanced()),
        Check::of("perfect-iff-order-3-mod-4", q % 4 == 3, arr.is_perfect()),
    ];
    ConstructionReport {
        family: "slce",
        parameters: field_params(&field),
        output: ConstructionOutput::Array(arr),
        checks,
    }
    .finish()
}

fn quartic_regime(q: u64, alpha: Option<usize>) -> Result<FiniteField> {
    if q % 8 != 5 {
        return Err(domain_err!("order {q} is not 5 modulo 8"));
    }
    FiniteField::of_order_with_alpha(q, alpha)
}

/// The two quartic-class index-set pairs of the Ding-Helleseth-Martinsen
/// family: `(C₀∪C₁, C₁∪C₃)` for class 1 and `(C₀∪C₂, C₂∪C₃)` for class 2.
fn dhm_component_sets(cyc: &CyclotomicClasses, class_index: u8) -> (Vec<usize>, Vec<usize>) {
    match class_index {
        1 => (class_union(cyc, &[0, 1]), class_union(cyc, &[1, 3])),
        _ => (class_union(cyc, &[0, 2]), class_union(cyc, &[2, 3])),
    }
}

/// The `{0,1}` pair on the additive group whose one-sets are the
/// Ding-Helleseth-Martinsen class-1 or class-2 quartic unions, in the
/// order the family lists them (first component `C₀∪C_i`). Defined for
/// every `q ≡ 5 (mod 8)` regardless of the `t² = 1` condition.
pub fn dhm_component_pair(q: u64, alpha: Option<usize>, class_index: u8) -> Result<PairRecord> {
    if !(1..=2).contains(&class_index) {
        return Err(domain_err!("component class index must be 1 or 2"));
    }
    let field = quartic_regime(q, alpha)?;
    let cyc = CyclotomicClasses::new(&field, 4)?;
    let (a_set, b_set) = dhm_component_sets(&cyc, class_index);
    let group = field.additive_group();
    let a = GArray::from_one_set(
        group.clone(),
        Alphabet::ZeroOne,
        &additive_set(&field, &a_set),
    )?;
    let b = GArray::from_one_set(group, Alphabet::ZeroOne, &additive_set(&field, &b_set))?;
    PairRecord::new(a, b)
}

/// Ding-Helleseth-Martinsen array on `Z₂ × Z_p^m` for `q = p^m ≡ 5 (mod
/// 8)`: the one-set places `A_i` in the zero coset and `B_i` in the other.
/// Classes 1 and 2 exist when `t² = 1` in the proper representation
/// `q = s² + 4t²`; class 3 when `s = 1`. Always almost balanced; perfect
/// exactly for class 3 or when `t(α) = (−1)^{i+1}`.
pub fn dhm_array(
    q: u64,
    alpha: Option<usize>,
    class_index: u8,
    alphabet: Alphabet,
) -> Result<ConstructionReport> {
    let field = quartic_regime(q, alpha)?;
    let rep = proper_representation(q)?;
    let (a_set, b_set) = match class_index {
        1 | 2 => {
            if rep.t_abs != 1 {
                return Err(domain_err!(
                    "classes 1 and 2 need t**2 = 1 in q = s**2 + 4t**2, got t**2 = {}",
                    rep.t_abs * rep.t_abs
                ));
            }
            let cyc = CyclotomicClasses::new(&field, 4)?;
            dhm_component_sets(&cyc, class_index)
        }
        3 => {
            if rep.s != 1 {
                return Err(domain_err!(
                    "class 3 needs s = 1 in q = s**2 + 4t**2, got s = {}",
                    rep.s
                ));
            }
            let cyc = CyclotomicClasses::new(&field, 4)?;
            (class_union(&cyc, &[0, 1]), class_union(&cyc, &[0, 3]))
        }
        other => return Err(domain_err!("class index must be 1, 2, or 3, got {other}")),
    };
    let ta = t_alpha(&field, rep)?;
    let expect_perfect = class_index == 3 || ta == if class_index == 1 { 1 } else { -1 };

    let add = field.additive_group();
    let mut factors = vec![2u64];
    factors.extend_from_slice(add.factors());
    let group = FiniteAbelianGroup::new(&factors)?;
    let mut ones = Vec::with_capacity(a_set.len() + b_set.len());
    for (eps, set) in [(0u64, &a_set), (1u64, &b_set)] {
        for &x in set {
            let mut tuple = vec![eps];
            tuple.extend(add.tuple_of(field.additive_index(x)));
            ones.push(group.index_of(&tuple)?);
        }
    }
    let arr = GArray::from_one_set(group, Alphabet::ZeroOne, &ones)?.in_alphabet(alphabet);
    let checks = vec![
        Check::of("almost-balanced", true, arr.is_almost_balanced()),
        Check::of(
            "perfect-iff-class-criterion",
            expect_perfect,
            arr.is_perfect(),
        ),
    ];
    let mut parameters = field_params(&field);
    parameters.push(param("class", class_index));
    parameters.push(param("s", rep.s));
    parameters.push(param("t_alpha", ta));
    ConstructionReport {
        family: "dhm",
        parameters,
        output: ConstructionOutput::Array(arr),
        checks,
    }
    .finish()
}

/// Shared shape of the Yamada-Pott pair checks: Legendre, symmetric first
/// component, skew-symmetric second, with the joint difference census.
fn yp_checks(pair: &PairRecord, lambda: usize) -> Result<Vec<Check>> {
    let (a, b) = (pair.a(), pair.b());
    Ok(vec![
        legendre_check(a, b)?,
        Check::of(
            "first-symmetric",
            SymmetryType::Symmetric.name(),
            a.symmetry_type().name(),
        ),
        Check::of(
            "second-skew-symmetric",
            SymmetryType::SkewSymmetric.name(),
            b.symmetry_type().name(),
        ),
        sds_check(a, b, lambda)?,
        Check::of("yamada-pott", true, is_yamada_pott_pair(a, b)?),
    ])
}

/// Yamada pair on the cyclic group of order `(q − 1)/2` for
/// `q ≡ 3 (mod 4)`, `q ≥ 7`: one-sets `M = {a : α^{2a} + 1 ∈ C₀²}` and
/// `N = {a : α^{2a} − 1 ∈ C₀²}` with `a` ranging over `[0, (q−1)/2)`.
/// Yields a Yamada-Pott pair with `|M| = |N| = (q − 3)/4`.
pub fn yamada_pair(q: u64, alpha: Option<usize>, alphabet: Alphabet) -> Result<ConstructionReport> {
    if q < 7 || q % 4 != 3 {
        return Err(domain_err!("order {q} is not 3 modulo 4 and at least 7"));
    }
    let field = FiniteField::of_order_with_alpha(q, alpha)?;
    let cyc = CyclotomicClasses::new(&field, 2)?;
    let h = (field.q() - 1) / 2;
    let m_set: Vec<usize> = (0..h)
        .filter(|&a| cyc.contains(0, field.add(field.alpha_pow(2 * a as u64), field.one())))
        .collect();
    let n_set: Vec<usize> = (0..h)
        .filter(|&a| cyc.contains(0, field.sub(field.alpha_pow(2 * a as u64), field.one())))
        .collect();
    let group = FiniteAbelianGroup::cyclic(h as u64)?;
    let a = GArray::from_one_set(group.clone(), Alphabet::ZeroOne, &m_set)?;
    let b = GArray::from_one_set(group, Alphabet::ZeroOne, &n_set)?;
    let pair = PairRecord::new(a, b)?;
    let k = ((q - 3) / 4) as usize;
    let mut checks = vec![
        Check::of("first-weight", k, pair.a().ones_count()),
        Check::of("second-weight", k, pair.b().ones_count()),
    ];
    checks.extend(yp_checks(&pair, ((q - 7) / 4) as usize)?);
    let pair = PairRecord::new(
        pair.a().in_alphabet(alphabet),
        pair.b().in_alphabet(alphabet),
    )?;
    ConstructionReport {
        family: "yamada",
        parameters: field_params(&field),
        output: ConstructionOutput::Pair(pair),
        checks,
    }
    .finish()
}

/// The one-set `{0} × A ∪ {1} × B'` on `Z₂ × H`, optionally complementing
/// either component inside `H`.
fn lift_array(a: &GArray, b: &GArray, complement_a: bool, complement_b: bool) -> Result<GArray> {
    let h = a.group();
    let mut factors = vec![2u64];
    factors.extend_from_slice(h.factors());
    let group = FiniteAbelianGroup::new(&factors)?;
    let mut ones = Vec::new();
    for (eps, arr, comp) in [(0u64, a, complement_a), (1u64, b, complement_b)] {
        for g in 0..h.order() {
            if (arr.value(g) == 1) != comp {
                let mut tuple = vec![eps];
                tuple.extend(h.tuple_of(g));
                ones.push(group.index_of(&tuple)?);
            }
        }
    }
    GArray::from_one_set(group, Alphabet::ZeroOne, &ones)
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum LiftComplement {
    None,
    A,
    B,
}

impl LiftComplement {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Self::None),
            "a" | "A" => Ok(Self::A),
            "b" | "B" => Ok(Self::B),
            other => Err(Error::Parse {
                what: "complement",
                detail: format!("expected none, a, or b, got '{other}'"),
            }),
        }
    }
}

/// Lifts a Yamada-Pott pair on `H` to a perfect `{0,1}` array on `Z₂ × H`.
/// Without complementing, the array is almost balanced and its one-set is
/// an almost difference set; complementing either component inside `H`
/// yields a balanced perfect array instead.
pub fn yp_to_perfect(pair: &PairRecord, complement: LiftComplement) -> Result<ConstructionReport> {
    let a = pair.a().in_alphabet(Alphabet::ZeroOne);
    let b = pair.b().in_alphabet(Alphabet::ZeroOne);
    if !is_yamada_pott_pair(&a, &b)? {
        return Err(domain_err!("input is not a Yamada-Pott pair"));
    }
    let u = a.len();
    let lifted = lift_array(
        &a,
        &b,
        complement == LiftComplement::A,
        complement == LiftComplement::B,
    )?;
    let mut checks = vec![Check::of("perfect", true, lifted.is_perfect())];
    match complement {
        LiftComplement::None => {
            checks.push(Check::of(
                "almost-balanced",
                true,
                lifted.is_almost_balanced(),
            ));
            let (k, lambda) = if b.value(0) == 1 {
                (u + 1, u.div_ceil(2))
            } else {
                (u - 1, (u - 3) / 2)
            };
            let t_count = 3 * (u - 1) / 2;
            let ads = is_almost_difference_set(
                lifted.group(),
                &lifted.one_set(),
                2 * u,
                k,
                lambda,
                t_count,
            )?;
            checks.push(Check::of(
                "almost-difference-set",
                format!("ADS({}, {k}, {lambda}, {t_count})", 2 * u),
                if ads {
                    format!("ADS({}, {k}, {lambda}, {t_count})", 2 * u)
                } else {
                    "census mismatch".into()
                },
            ));
        }
        LiftComplement::A | LiftComplement::B => {
            checks.push(Check::of("balanced", true, lifted.is_balanced()));
        }
    }
    ConstructionReport {
        family: "yp-lift",
        parameters: vec![
            param("group", pair.group().spec_string()),
            param("complement", format!("{complement:?}").to_lowercase()),
        ],
        output: ConstructionOutput::Array(lifted),
        checks,
    }
    .finish()
}

/// Yamada-Pott pair on the cyclic group of order `(q − 1)/2` from halved
/// discrete logarithms: `A` collects `log x mod (q−1)/2` over
/// `x ∈ (C₀² − 1) ∩ C₀²`, and `B` the same over `x ∈ (C₀² − 1) ∩ C₁²`.
/// Also emits the lifted perfect array on the doubled group.
pub fn backup_yp_pair(q: u64, alpha: Option<usize>) -> Result<ConstructionReport> {
    if q < 7 || q % 4 != 3 {
        return Err(domain_err!("order {q} is not 3 modulo 4 and at least 7"));
    }
    let field = FiniteField::of_order_with_alpha(q, alpha)?;
    let cyc = CyclotomicClasses::new(&field, 2)?;
    let h = (field.q() - 1) / 2;
    let mut a_set = BTreeSet::new();
    let mut b_set = BTreeSet::new();
    for c in cyc.class(0) {
        let x = field.sub(c, field.one());
        if x == field.zero() {
            continue;
        }
        let log = (field.dlog(x)? as usize) % h;
        match cyc.class_index(x) {
            Some(0) => a_set.insert(log),
            Some(_) => b_set.insert(log),
            None => unreachable!("nonzero element lies in a class"),
        };
    }
    let a_set: Vec<usize> = a_set.into_iter().collect();
    let b_set: Vec<usize> = b_set.into_iter().collect();
    let group = FiniteAbelianGroup::cyclic(h as u64)?;
    let a = GArray::from_one_set(group.clone(), Alphabet::ZeroOne, &a_set)?;
    let b = GArray::from_one_set(group, Alphabet::ZeroOne, &b_set)?;
    let pair = PairRecord::new(a, b)?;
    let mut checks = vec![Check::of(
        "second-weight",
        ((q - 3) / 4) as usize,
        b_set.len(),
    )];
    checks.extend(yp_checks(&pair, yp_lambda(h, pair.a().ones_count()))?);
    let lift = lift_array(pair.a(), pair.b(), false, false)?;
    checks.push(Check::of("lift-perfect", true, lift.is_perfect()));
    checks.push(Check::of(
        "lift-almost-balanced",
        true,
        lift.is_almost_balanced(),
    ));
    ConstructionReport {
        family: "backup-yp",
        parameters: field_params(&field),
        output: ConstructionOutput::PairWithLift { pair, lift },
        checks,
    }
    .finish()
}

/// The constant joint difference count of a Legendre `{0,1}` pair on an
/// order-`n` group with common weight `k ∈ {(n±1)/2}`.
fn yp_lambda(n: usize, k: usize) -> usize {
    if 2 * k == n + 1 {
        n.div_ceil(2)
    } else {
        (n - 3) / 2
    }
}

fn skew_pair_checks(pair: &PairRecord, q: u64) -> Result<Vec<Check>> {
    let (a, b) = (pair.a(), pair.b());
    Ok(vec![
        legendre_check(a, b)?,
        Check::of(
            "first-skew-symmetric",
            SymmetryType::SkewSymmetric.name(),
            a.symmetry_type().name(),
        ),
        Check::of(
            "second-skew-symmetric",
            SymmetryType::SkewSymmetric.name(),
            b.symmetry_type().name(),
        ),
        sds_check(a, b, ((q - 3) / 2) as usize)?,
    ])
}

fn quartic_class_pair(
    field: &FiniteField,
    d: u64,
    a_classes: &[u64],
    b_classes: &[u64],
    alphabet: Alphabet,
) -> Result<PairRecord> {
    let cyc = CyclotomicClasses::new(field, d)?;
    let a_set = additive_set(field, &class_union(&cyc, a_classes));
    let b_set = additive_set(field, &class_union(&cyc, b_classes));
    let group = field.additive_group();
    let a = GArray::from_one_set(group.clone(), Alphabet::ZeroOne, &a_set)?.in_alphabet(alphabet);
    let b = GArray::from_one_set(group, Alphabet::ZeroOne, &b_set)?.in_alphabet(alphabet);
    PairRecord::new(a, b)
}

/// Szekeres pair on the additive group of `F_q` for `q ≡ 5 (mod 8)`:
/// one-sets `C₀⁴ ∪ C₁⁴` and `C₀⁴ ∪ C₃⁴`, both skew-symmetric.
pub fn szekeres_pair(
    q: u64,
    alpha: Option<usize>,
    alphabet: Alphabet,
) -> Result<ConstructionReport> {
    let field = quartic_regime(q, alpha)?;
    let pair = quartic_class_pair(&field, 4, &[0, 1], &[0, 3], alphabet)?;
    let checks = skew_pair_checks(&pair, q)?;
    ConstructionReport {
        family: "szekeres",
        parameters: field_params(&field),
        output: ConstructionOutput::Pair(pair),
        checks,
    }
    .finish()
}

/// Szekeres-Whiteman pair on the additive group of `F_{p^m}` for
/// `p ≡ 5 (mod 8)` and even `m ≥ 2`: octic one-sets `C₀⁸∪C₁⁸∪C₂⁸∪C₃⁸` and
/// `C₀⁸∪C₁⁸∪C₆⁸∪C₇⁸`, both skew-symmetric.
pub fn szekeres_whiteman_pair(
    q: u64,
    alpha: Option<usize>,
    alphabet: Alphabet,
) -> Result<ConstructionReport> {
    let field = FiniteField::of_order_with_alpha(q, alpha)?;
    if field.p() % 8 != 5 || field.m() % 2 != 0 {
        return Err(domain_err!(
            "order {q} does not factor as p**m with p = 5 modulo 8 and even m"
        ));
    }
    let pair = quartic_class_pair(&field, 8, &[0, 1, 2, 3], &[0, 1, 6, 7], alphabet)?;
    let checks = skew_pair_checks(&pair, q)?;
    ConstructionReport {
        family: "szekeres-whiteman",
        parameters: field_params(&field),
        output: ConstructionOutput::Pair(pair),
        checks,
    }
    .finish()
}

/// Paley pair on the additive group of `F_q`: both one-sets are the
/// quadratic residues when `q ≡ 3 (mod 4)` (both skew-symmetric); the
/// non-residues paired with the residues when `q ≡ 1 (mod 4)` (both
/// symmetric).
pub fn paley_pair(q: u64, alpha: Option<usize>, alphabet: Alphabet) -> Result<ConstructionReport> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(domain_err!(
            "order {q} is not an odd prime power of at least 3"
        ));
    }
    let field = FiniteField::of_order_with_alpha(q, alpha)?;
    let (a_classes, b_classes): (&[u64], &[u64]) = if q % 4 == 3 {
        (&[0], &[0])
    } else {
        (&[1], &[0])
    };
    let pair = quartic_class_pair(&field, 2, a_classes, b_classes, alphabet)?;
    let want = if q % 4 == 3 {
        SymmetryType::SkewSymmetric
    } else {
        SymmetryType::Symmetric
    };
    let checks = vec![
        legendre_check(pair.a(), pair.b())?,
        Check::of(
            "first-symmetry",
            want.name(),
            pair.a().symmetry_type().name(),
        ),
        Check::of(
            "second-symmetry",
            want.name(),
            pair.b().symmetry_type().name(),
        ),
        sds_check(pair.a(), pair.b(), ((q - 3) / 2) as usize)?,
    ];
    ConstructionReport {
        family: "paley",
        parameters: field_params(&field),
        output: ConstructionOutput::Pair(pair),
        checks,
    }
    .finish()
}

/// Baumert pair on the product of the additive groups of `F_{q₁}` and
/// `F_{q₂}` for twin prime powers `q₂ = q₁ + 2`: both one-sets are
/// `(C₀×C₀) ∪ (C₁×C₁) ∪ (F_{q₁}×{0})`, a difference set; the arrays are
/// neither symmetric nor skew-symmetric.
pub fn baumert_pair(
    q1: u64,
    q2: u64,
    alpha1: Option<usize>,
    alpha2: Option<usize>,
    alphabet: Alphabet,
) -> Result<ConstructionReport> {
    if q1 + 2 != q2 {
        return Err(domain_err!(
            "orders {q1} and {q2} are not twin (q2 = q1 + 2)"
        ));
    }
    if q1 < 3 || q1.is_multiple_of(2) || q2.is_multiple_of(2) {
        return Err(domain_err!("orders must be odd prime powers of at least 3"));
    }
    let f1 = FiniteField::of_order_with_alpha(q1, alpha1)?;
    let f2 = FiniteField::of_order_with_alpha(q2, alpha2)?;
    let (add1, add2) = (f1.additive_group(), f2.additive_group());
    let mut factors = add1.factors().to_vec();
    factors.extend_from_slice(add2.factors());
    let group = FiniteAbelianGroup::new(&factors)?;
    let index = |x: usize, y: usize| -> Result<usize> {
        let mut tuple = add1.tuple_of(f1.additive_index(x));
        tuple.extend(add2.tuple_of(f2.additive_index(y)));
        group.index_of(&tuple)
    };
    let c1 = CyclotomicClasses::new(&f1, 2)?;
    let c2 = CyclotomicClasses::new(&f2, 2)?;
    let mut ones = Vec::new();
    for i in 0..2u64 {
        for x in c1.class(i) {
            for y in c2.class(i) {
                ones.push(index(x, y)?);
            }
        }
    }
    for x in 0..f1.q() {
        ones.push(index(x, f2.zero())?);
    }
    let a = GArray::from_one_set(group.clone(), Alphabet::ZeroOne, &ones)?;
    let b = a.clone();
    let v = (q1 * q2) as usize;
    let k = ((q1 * q1 + 2 * q1 - 1) / 2) as usize;
    let lambda = ((q1 - 1) * (q1 + 3) / 4) as usize;
    let ds = is_difference_set(&group, &a.one_set(), v, k, lambda)?;
    let pair = PairRecord::new(a.in_alphabet(alphabet), b.in_alphabet(alphabet))?;
    let checks = vec![
        Check::of(
            "difference-set",
            format!("DS({v}, {k}, {lambda})"),
            if ds {
                format!("DS({v}, {k}, {lambda})")
            } else {
                "census mismatch".into()
            },
        ),
        legendre_check(pair.a(), pair.b())?,
        Check::of(
            "first-symmetry",
            SymmetryType::Neither.name(),
            pair.a().symmetry_type().name(),
        ),
        Check::of(
            "second-symmetry",
            SymmetryType::Neither.name(),
            pair.b().symmetry_type().name(),
        ),
        sds_check(pair.a(), pair.b(), 2 * lambda)?,
    ];
    ConstructionReport {
        family: "baumert",
        parameters: vec![
            param("q1", q1),
            param("q2", q2),
            param("alpha1", f1.alpha()),
            param("alpha2", f2.alpha()),
        ],
        output: ConstructionOutput::Pair(pair),
        checks,
    }
    .finish()
}

/// The four halved-logarithm sets connecting the quadratic-coset pair
/// constructions on orders `(q − 1)/2` and `q − 1`, with their two
/// unconditional identities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BridgeRecord {
    pub a1: Vec<usize>,
    pub b1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b2: Vec<usize>,
    pub checks: Vec<Check>,
}

/// Builds, for `q ≡ 3 (mod 4)`, the halved-log images of
/// `(C₀²+1)∩C₀²`, `(C₀²−1)∩C₀²`, `(C₁²−1)∩C₀²`, and `(C₁²−1)∩C₁²`, and
/// verifies that the first equals the fourth while the second and third
/// partition the index range.
pub fn slce_yamada_bridge(q: u64, alpha: Option<usize>) -> Result<BridgeRecord> {
    if q < 7 || q % 4 != 3 {
        return Err(domain_err!("order {q} is not 3 modulo 4 and at least 7"));
    }
    let field = FiniteField::of_order_with_alpha(q, alpha)?;
    let cyc = CyclotomicClasses::new(&field, 2)?;
    let h = (field.q() - 1) / 2;
    let log_image = |source: u64, offset_plus: bool, target: u64| -> Result<Vec<usize>> {
        let mut out = BTreeSet::new();
        for c in cyc.class(source) {
            let x = if offset_plus {
                field.add(c, field.one())
            } else {
                field.sub(c, field.one())
            };
            if x != field.zero() && cyc.class_index(x) == Some(target) {
                out.insert(field.dlog(x)? as usize % h);
            }
        }
        Ok(out.into_iter().collect())
    };
    let a1 = log_image(0, true, 0)?;
    let b1 = log_image(0, false, 0)?;
    let a2 = log_image(1, false, 0)?;
    let b2 = log_image(1, false, 1)?;
    let complement_of_a2: Vec<usize> = (0..h).filter(|g| !a2.contains(g)).collect();
    let checks = vec![
        Check::of("first-equals-fourth", format!("{a1:?}"), format!("{b2:?}")),
        Check::of(
            "second-complements-third",
            format!("{b1:?}"),
            format!("{complement_of_a2:?}"),
        ),
    ];
    let record = BridgeRecord {
        a1,
        b1,
        a2,
        b2,
        checks,
    };
    let failed: Vec<String> = record
        .checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.got))
        .collect();
    if failed.is_empty() {
        Ok(record)
    } else {
        Err(Error::ConstructionFailed {
            family: "bridge".into(),
            failed,
        })
    }
}

/// Which of the two quartic component pairs is Yamada-Pott, decided by the
/// sign of `t(α)`; only defined when `t² = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DhmSelection {
    pub class_index: u8,
    pub t_alpha: i64,
    /// The selected pair, ordered symmetric component first.
    pub pair: PairRecord,
    /// The other class's pair in the same ordering; not a Yamada-Pott pair.
    pub rejected: PairRecord,
    pub checks: Vec<Check>,
}

/// For `q ≡ 5 (mod 8)` with `t² = 1`, picks the component class
/// (1 when `t(α) = 1`, 2 when `t(α) = −1`) whose pair is Yamada-Pott once
/// the symmetric component is put first, and verifies the other class
/// fails the pair condition.
pub fn dhm_yp_selector(q: u64, alpha: Option<usize>) -> Result<DhmSelection> {
    let field = quartic_regime(q, alpha)?;
    let rep = proper_representation(q)?;
    if rep.t_abs != 1 {
        return Err(domain_err!(
            "selector needs t**2 = 1 in q = s**2 + 4t**2, got t**2 = {}",
            rep.t_abs * rep.t_abs
        ));
    }
    let ta = t_alpha(&field, rep)?;
    let alpha = Some(field.alpha());
    let ordered = |class_index: u8| -> Result<PairRecord> {
        let raw = dhm_component_pair(q, alpha, class_index)?;
        if class_index == 1 {
            PairRecord::new(raw.b().clone(), raw.a().clone())
        } else {
            Ok(raw)
        }
    };
    let class_index = if ta == 1 { 1 } else { 2 };
    let pair = ordered(class_index)?;
    let rejected = ordered(3 - class_index)?;
    let checks = vec![
        Check::of("selected-yamada-pott", true, pair.is_yamada_pott()?),
        Check::of("rejected-yamada-pott", false, rejected.is_yamada_pott()?),
    ];
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.got))
        .collect();
    if !failed.is_empty() {
        return Err(Error::ConstructionFailed {
            family: "dhm-selector".into(),
            failed,
        });
    }
    Ok(DhmSelection {
        class_index,
        t_alpha: ta,
        pair,
        rejected,
        checks,
    })
}

/// Names, for one value of the leading coordinate, which cyclotomic
/// classes (and optionally the zero element) contribute one-entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CosetSelection {
    pub coset: u64,
    pub with_zero: bool,
    pub classes: Vec<u64>,
}

/// Builds a pair on `Z_c × F_q⁺` whose one-sets are unions of cyclotomic
/// classes of order `d` placed in leading-coordinate cosets, and checks
/// the Legendre condition.
pub fn cyclotomic_coset_pair(
    c: u64,
    q: u64,
    alpha: Option<usize>,
    d: u64,
    x_selection: &[CosetSelection],
    y_selection: &[CosetSelection],
    alphabet: Alphabet,
) -> Result<ConstructionReport> {
    if c < 2 {
        return Err(domain_err!("leading factor must be at least 2, got {c}"));
    }
    let field = FiniteField::of_order_with_alpha(q, alpha)?;
    let cyc = CyclotomicClasses::new(&field, d)?;
    let add = field.additive_group();
    let mut factors = vec![c];
    factors.extend_from_slice(add.factors());
    let group = FiniteAbelianGroup::new(&factors)?;
    let build = |selection: &[CosetSelection]| -> Result<GArray> {
        let mut ones = BTreeSet::new();
        for sel in selection {
            if sel.coset >= c {
                return Err(domain_err!("coset {} out of range for Z_{c}", sel.coset));
            }
            let mut elems: Vec<usize> = Vec::new();
            if sel.with_zero {
                elems.push(field.zero());
            }
            for &i in &sel.classes {
                if i >= d {
                    return Err(domain_err!("class index {i} out of range for order {d}"));
                }
                elems.extend(cyc.class(i));
            }
            for x in elems {
                let mut tuple = vec![sel.coset];
                tuple.extend(add.tuple_of(field.additive_index(x)));
                if !ones.insert(group.index_of(&tuple)?) {
                    return Err(domain_err!(
                        "selection repeats an element in coset {}",
                        sel.coset
                    ));
                }
            }
        }
        let ones: Vec<usize> = ones.into_iter().collect();
        Ok(GArray::from_one_set(group.clone(), Alphabet::ZeroOne, &ones)?.in_alphabet(alphabet))
    };
    let x = build(x_selection)?;
    let y = build(y_selection)?;
    let checks = vec![legendre_check(&x, &y)?];
    let pair = PairRecord::new(x, y)?;
    ConstructionReport {
        family: "coset-pair",
        parameters: vec![
            param("group", pair.group().spec_string()),
            param("q", q),
            param("alpha", field.alpha()),
            param("d", d),
        ],
        output: ConstructionOutput::Pair(pair),
        checks,
    }
    .finish()
}

fn sel(coset: u64, with_zero: bool, classes: &[u64]) -> CosetSelection {
    CosetSelection {
        coset,
        with_zero,
        classes: classes.to_vec(),
    }
}

/// The sextic-class selections over `Z₃ × F₁₉⁺` giving the order-57
/// Legendre pair with correlation energy 1112.
pub fn ex57_pair() -> Result<ConstructionReport> {
    let x_selection = [
        sel(0, true, &[0, 1, 2]),
        sel(1, false, &[0, 2, 3, 4]),
        sel(2, false, &[3, 4]),
    ];
    let y_selection = [
        sel(0, true, &[0, 4, 5]),
        sel(1, false, &[0, 3, 5]),
        sel(2, false, &[0, 1, 3]),
    ];
    cyclotomic_coset_pair(
        3,
        19,
        None,
        6,
        &x_selection,
        &y_selection,
        Alphabet::PlusMinus,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::crt_transport;
    use crate::pair::{pairs_equivalent, Equivalence, EquivalenceOptions};

    #[test]
    fn slce_small_orders() {
        let r = slce_array(7, Some(3), Alphabet::ZeroOne).unwrap();
        assert_eq!(r.array().unwrap().one_set(), vec![2, 4, 5]);
        assert!(r.array().unwrap().is_perfect());

        let r9 = slce_array(9, None, Alphabet::ZeroOne).unwrap();
        assert!(r9.array().unwrap().is_balanced());
        assert!(!r9.array().unwrap().is_perfect());

        let r11 = slce_array(11, None, Alphabet::PlusMinus).unwrap();
        assert!(r11.array().unwrap().is_perfect());

        assert!(slce_array(8, None, Alphabet::ZeroOne).is_err());
        assert!(slce_array(13, None, Alphabet::ZeroOne)
            .unwrap()
            .array()
            .unwrap()
            .is_balanced());
    }

    #[test]
    fn dhm_classes_for_q5() {
        // 5 = 1 + 4: both s = 1 and t**2 = 1, so all classes exist.
        for class in 1..=3u8 {
            let r = dhm_array(5, Some(2), class, Alphabet::ZeroOne).unwrap();
            let arr = r.array().unwrap();
            assert!(arr.is_almost_balanced());
            // t(2) = -1 picks class 2; class 3 is unconditional.
            assert_eq!(arr.is_perfect(), class >= 2, "class {class}");
        }
    }

    #[test]
    fn dhm_class_availability() {
        // 13 = 9 + 4: t**2 = 1 but s = -3, so class 3 is out of regime.
        assert!(dhm_array(13, None, 1, Alphabet::ZeroOne).is_ok());
        assert!(dhm_array(13, None, 3, Alphabet::ZeroOne).is_err());
        // 37 = 1 + 36: s = 1 but t**2 = 9.
        assert!(dhm_array(37, None, 3, Alphabet::ZeroOne).is_ok());
        assert!(dhm_array(37, None, 1, Alphabet::ZeroOne).is_err());
        assert!(dhm_array(17, None, 3, Alphabet::ZeroOne).is_err());
    }

    #[test]
    fn dhm_selector_tracks_t_alpha_sign() {
        let s5 = dhm_yp_selector(5, Some(2)).unwrap();
        assert_eq!((s5.class_index, s5.t_alpha), (2, -1));
        let s13 = dhm_yp_selector(13, Some(2)).unwrap();
        assert_eq!((s13.class_index, s13.t_alpha), (2, -1));
        // Some primitive root of F_13 gives the opposite sign.
        let field = FiniteField::of_order(13).unwrap();
        let plus = field
            .primitive_elements()
            .into_iter()
            .find(|&g| {
                t_alpha(
                    &FiniteField::of_order_with_alpha(13, Some(g)).unwrap(),
                    proper_representation(13).unwrap(),
                )
                .unwrap()
                    == 1
            })
            .expect("both signs occur over primitive roots");
        let s = dhm_yp_selector(13, Some(plus)).unwrap();
        assert_eq!((s.class_index, s.t_alpha), (1, 1));
        assert!(dhm_yp_selector(37, None).is_err());
    }

    #[test]
    fn yamada_q7_is_the_unit_pair() {
        let r = yamada_pair(7, Some(3), Alphabet::ZeroOne).unwrap();
        let p = r.pair().unwrap();
        assert_eq!(p.a().one_set(), vec![0]);
        assert_eq!(p.b().one_set(), vec![1]);
        assert!(p.is_yamada_pott().unwrap());
        assert!(yamada_pair(13, None, Alphabet::ZeroOne).is_err());
    }

    #[test]
    fn backup_q7_and_lift() {
        let r = backup_yp_pair(7, Some(3)).unwrap();
        let p = r.pair().unwrap();
        assert!(p.is_yamada_pott().unwrap());
        assert_eq!(p.b().ones_count(), 1);
        let lift = r.lift().unwrap();
        assert_eq!(lift.len(), 6);
        assert!(lift.is_perfect() && lift.is_almost_balanced());
    }

    #[test]
    fn lift_complement_balances() {
        let r = backup_yp_pair(11, None).unwrap();
        let pair = r.pair().unwrap().clone();
        let lifted = yp_to_perfect(&pair, LiftComplement::A).unwrap();
        let arr = lifted.array().unwrap();
        assert!(arr.is_balanced() && arr.is_perfect());
        let plain = yp_to_perfect(&pair, LiftComplement::None).unwrap();
        assert!(plain.array().unwrap().is_almost_balanced());
        // A non-Yamada-Pott input is a domain error.
        let g = FiniteAbelianGroup::cyclic(7).unwrap();
        let bad = PairRecord::new(
            GArray::from_one_set(g.clone(), Alphabet::ZeroOne, &[1, 2, 4]).unwrap(),
            GArray::from_one_set(g, Alphabet::ZeroOne, &[1, 2, 4]).unwrap(),
        )
        .unwrap();
        assert!(yp_to_perfect(&bad, LiftComplement::None).is_err());
    }

    #[test]
    fn szekeres_q5_sets() {
        let r = szekeres_pair(5, Some(2), Alphabet::ZeroOne).unwrap();
        let p = r.pair().unwrap();
        assert_eq!(p.a().one_set(), vec![1, 2]);
        assert_eq!(p.b().one_set(), vec![1, 3]);
        assert!(szekeres_pair(13, None, Alphabet::ZeroOne).is_ok());
        assert!(szekeres_pair(17, None, Alphabet::ZeroOne).is_err());
    }

    #[test]
    fn szekeres_whiteman_q25() {
        let r = szekeres_whiteman_pair(25, None, Alphabet::ZeroOne).unwrap();
        let p = r.pair().unwrap();
        assert_eq!(p.group().factors(), &[5, 5]);
        assert_eq!(p.a().symmetry_type(), SymmetryType::SkewSymmetric);
        assert!(szekeres_whiteman_pair(5, None, Alphabet::ZeroOne).is_err());
    }

    #[test]
    fn paley_parity_cases() {
        let r7 = paley_pair(7, None, Alphabet::ZeroOne).unwrap();
        let p = r7.pair().unwrap();
        assert_eq!(p.a().one_set(), vec![1, 2, 4]);
        assert_eq!(p.a().symmetry_type(), SymmetryType::SkewSymmetric);
        let r9 = paley_pair(9, None, Alphabet::ZeroOne).unwrap();
        assert_eq!(
            r9.pair().unwrap().a().symmetry_type(),
            SymmetryType::Symmetric
        );
    }

    #[test]
    fn baumert_twin_3_5() {
        let r = baumert_pair(3, 5, None, None, Alphabet::ZeroOne).unwrap();
        let p = r.pair().unwrap();
        assert_eq!(p.a().ones_count(), 7);
        assert!(is_difference_set(p.group(), &p.a().one_set(), 15, 7, 3).unwrap());
        assert!(baumert_pair(3, 7, None, None, Alphabet::ZeroOne).is_err());
    }

    #[test]
    fn bridge_identities_hold() {
        for q in [7, 23, 31] {
            let r = slce_yamada_bridge(q, None).unwrap();
            assert_eq!(r.a1, r.b2, "q = {q}");
        }
    }

    #[test]
    fn class3_data_matches_szekeres_sets() {
        for q in [5u64, 37] {
            let dhm = dhm_array(q, None, 3, Alphabet::ZeroOne).unwrap();
            let sz = szekeres_pair(q, None, Alphabet::ZeroOne).unwrap();
            let p = sz.pair().unwrap();
            let arr = dhm.array().unwrap();
            let group = arr.group();
            let mut a_part = Vec::new();
            let mut b_part = Vec::new();
            for g in arr.one_set() {
                let tuple = group.tuple_of(g);
                let inner: Vec<u64> = tuple[1..].to_vec();
                let idx = p.group().index_of(&inner).unwrap();
                if tuple[0] == 0 {
                    a_part.push(idx);
                } else {
                    b_part.push(idx);
                }
            }
            a_part.sort_unstable();
            b_part.sort_unstable();
            assert_eq!(a_part, p.a().one_set(), "q = {q}");
            assert_eq!(b_part, p.b().one_set(), "q = {q}");
        }
    }

    #[test]
    fn ex57_preset_verifies() {
        let r = ex57_pair().unwrap();
        let p = r.pair().unwrap();
        assert_eq!(p.a().ones_count(), 28);
        assert_eq!(p.b().ones_count(), 28);
        assert_eq!(p.a().row_sum(), -1);
        assert!(p.is_legendre().unwrap());
        assert_eq!(p.invariants().energies, (1112, 1112));
        let z57 = FiniteAbelianGroup::cyclic(57).unwrap();
        let a2 = crt_transport(p.a(), &z57).unwrap();
        let b2 = crt_transport(p.b(), &z57).unwrap();
        assert!(is_legendre_pair(&a2, &b2).unwrap());
    }

    #[test]
    fn selector_pairs_inequivalent_orbits() {
        // The two component pairs for q = 13 share no orbit: one is a
        // Legendre pair and the other is not.
        let s = dhm_yp_selector(13, Some(2)).unwrap();
        assert!(!s.rejected.is_legendre().unwrap());
        let eq = pairs_equivalent(&s.pair, &s.rejected, EquivalenceOptions::default()).unwrap();
        assert_eq!(eq, Equivalence::NotEquivalent);
    }

    #[test]
    fn coset_pair_rejects_bad_selection() {
        assert!(cyclotomic_coset_pair(
            3,
            19,
            None,
            6,
            &[sel(0, false, &[6])],
            &[],
            Alphabet::PlusMinus
        )
        .is_err());
        assert!(cyclotomic_coset_pair(
            3,
            19,
            None,
            6,
            &[sel(3, false, &[0])],
            &[],
            Alphabet::PlusMinus
        )
        .is_err());
        assert!(cyclotomic_coset_pair(
            3,
            19,
            None,
            6,
            &[sel(0, false, &[0]), sel(0, false, &[0])],
            &[],
            Alphabet::PlusMinus
        )
        .is_err());
    }
}
