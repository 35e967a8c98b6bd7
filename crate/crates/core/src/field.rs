//! Finite fields `GF(p^m)` with full exponent/logarithm tables, cyclotomic
//! classes and numbers, and quartic-residue data.
//!
//! Elements are encoded as integers in `[0, q)`: the polynomial
//! `c_0 + c_1 x + … + c_{m-1} x^{m-1}` is stored as `c_0 + c_1 p + … +
//! c_{m-1} p^{m-1}`, so the integers 0, 1, …, p−1 are the prime subfield.
//! Arrays over the additive group `Z_p × … × Z_p` use the coefficient tuple
//! `(c_0, …, c_{m-1})` with the low-degree coordinate first; `additive_index`
//! converts an element to that flat index.

use crate::error::{domain_err, Error, Result};
use crate::group::{gcd, FiniteAbelianGroup};

pub const DEFAULT_TABLE_CAP: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    m: u32,
    q: usize,
    /// Monic modulus; coefficient of `x^i` at position `i`, length `m + 1`.
    modulus: Vec<u64>,
    alpha: usize,
    exp: Vec<u32>,
    log: Vec<u32>,
}

const LOG_ZERO: u32 = u32::MAX;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q = p^m`; errors if `q` is not one.
pub fn split_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(domain_err!("{q} is not a prime power"));
    }
    let ps = prime_divisors(q);
    if ps.len() != 1 {
        return Err(domain_err!("{q} is not a prime power"));
    }
    let p = ps[0];
    let mut m = 0u32;
    let mut rem = q;
    while rem > 1 {
        rem /= p;
        m += 1;
    }
    Ok((p, m))
}

impl FiniteField {
    /// `GF(p^m)` with the lexicographically smallest monic irreducible
    /// modulus (coefficients compared low degree first) and the smallest
    /// primitive element in encoding order.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_options(p, m, None, DEFAULT_TABLE_CAP)
    }

    /// Same field, but with a caller-chosen primitive element.
    pub fn with_alpha(p: u64, m: u32, alpha: usize) -> Result<Self> {
        Self::with_options(p, m, Some(alpha), DEFAULT_TABLE_CAP)
    }

    pub fn of_order(q: u64) -> Result<Self> {
        let (p, m) = split_prime_power(q)?;
        Self::new(p, m)
    }

    pub fn of_order_with_alpha(q: u64, alpha: Option<usize>) -> Result<Self> {
        let (p, m) = split_prime_power(q)?;
        Self::with_options(p, m, alpha, DEFAULT_TABLE_CAP)
    }

    pub fn with_options(p: u64, m: u32, alpha: Option<usize>, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(domain_err!("extension degree must be positive"));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= cap)
            .ok_or(Error::FieldTooLarge {
                q: p.checked_pow(m).unwrap_or(u64::MAX),
                cap,
            })? as usize;

        let modulus = smallest_irreducible(p, m);
        let mut field = Self {
            p,
            m,
            q,
            modulus,
            alpha: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };

        let alpha = match alpha {
            Some(a) => {
                if a >= q {
                    return Err(domain_err!("alpha {a} out of range for field of order {q}"));
                }
                let ord = field.multiplicative_order(a);
                if ord != q as u64 - 1 {
                    return Err(Error::NotPrimitive {
                        elem: a as u64,
                        order: ord,
                        want: q as u64 - 1,
                    });
                }
                a
            }
            None => (1..q)
                .find(|&a| field.multiplicative_order(a) == q as u64 - 1)
                .expect("every finite field has a primitive element"),
        };
        field.alpha = alpha;

        let mut exp = Vec::with_capacity(q - 1);
        let mut log = vec![LOG_ZERO; q];
        let mut x = 1usize;
        for k in 0..q - 1 {
            exp.push(x as u32);
            debug_assert_eq!(log[x], LOG_ZERO);
            log[x] = k as u32;
            x = field.mul_poly(x, alpha);
        }
        debug_assert_eq!(x, 1);
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Modulus rendered as a polynomial in `x`, highest degree first.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for i in (0..=self.m as usize).rev() {
            let c = self.modulus[i];
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }

    /// The additive group `(Z_p)^m`; see `additive_index` for the layout.
    pub fn additive_group(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(&vec![self.p; self.m as usize]).expect("valid factors")
    }

    /// Flat index of the coefficient tuple `(c_0, …, c_{m-1})` in the
    /// additive group, low-degree coordinate first.
    pub fn additive_index(&self, x: usize) -> usize {
        let mut idx = 0u64;
        let mut rem = x as u64;
        for _ in 0..self.m {
            idx = idx * self.p + rem % self.p;
            rem /= self.p;
        }
        idx as usize
    }

    /// Inverse of `additive_index`.
    pub fn from_additive_index(&self, idx: usize) -> usize {
        let mut x = 0u64;
        let mut rem = idx as u64;
        for _ in 0..self.m {
            x = x * self.p + rem % self.p;
            rem /= self.p;
        }
        x as usize
    }

    /// Coefficients `(c_0, …, c_{m-1})`, low degree first.
    pub fn coeffs(&self, x: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.m as usize];
        let mut rem = x as u64;
        for c in out.iter_mut() {
            *c = rem % self.p;
            rem /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> usize {
        debug_assert_eq!(coeffs.len(), self.m as usize);
        let mut x = 0u64;
        for &c in coeffs.iter().rev() {
            debug_assert!(c < self.p);
            x = x * self.p + c;
        }
        x as usize
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        1
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (mut x, mut y) = (x as u64, y as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.m {
            out += (x + y) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out as usize
    }

    pub fn neg(&self, x: usize) -> usize {
        let mut x = x as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.m {
            out += (self.p - x % self.p) % self.p * place;
            x /= self.p;
            place *= self.p;
        }
        out as usize
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// Polynomial product modulo the field modulus; table-free, used to
    /// bootstrap the tables and the primitivity test.
    fn mul_poly(&self, x: usize, y: usize) -> usize {
        let m = self.m as usize;
        let a = self.coeffs(x);
        let b = self.coeffs(y);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // Reduce by the monic modulus.
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..m {
                let sub = c * self.modulus[i] % self.p;
                prod[d - m + i] = (prod[d - m + i] + self.p * self.p - sub) % self.p;
            }
        }
        prod.truncate(m);
        self.from_coeffs(&prod)
    }

    fn pow_poly(&self, mut x: usize, mut e: u64) -> usize {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, x);
            }
            x = self.mul_poly(x, x);
            e >>= 1;
        }
        acc
    }

    pub fn multiplicative_order(&self, x: usize) -> u64 {
        if x == 0 {
            return 0;
        }
        let mut ord = self.q as u64 - 1;
        for r in prime_divisors(self.q as u64 - 1) {
            while ord.is_multiple_of(r) && self.pow_poly(x, ord / r) == self.one() {
                ord /= r;
            }
        }
        ord
    }

    pub fn is_primitive(&self, x: usize) -> bool {
        x != 0 && self.multiplicative_order(x) == self.q as u64 - 1
    }

    /// All primitive elements, in encoding order.
    pub fn primitive_elements(&self) -> Vec<usize> {
        (0..self.q as u64 - 1)
            .filter(|&k| gcd(k, self.q as u64 - 1) == 1)
            .map(|k| self.exp[k as usize] as usize)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        if x == 0 || y == 0 {
            return 0;
        }
        let k = self.log[x] as u64 + self.log[y] as u64;
        self.exp[(k % (self.q as u64 - 1)) as usize] as usize
    }

    pub fn inv(&self, x: usize) -> Result<usize> {
        if x == 0 {
            return Err(domain_err!("0 has no multiplicative inverse"));
        }
        let k = (self.q as u64 - 1 - self.log[x] as u64) % (self.q as u64 - 1);
        Ok(self.exp[k as usize] as usize)
    }

    pub fn pow(&self, x: usize, e: u64) -> usize {
        if x == 0 {
            return if e == 0 { self.one() } else { 0 };
        }
        let k = self.log[x] as u64 * (e % (self.q as u64 - 1)) % (self.q as u64 - 1);
        self.exp[k as usize] as usize
    }

    /// `α^k`.
    pub fn alpha_pow(&self, k: u64) -> usize {
        self.exp[(k % (self.q as u64 - 1)) as usize] as usize
    }

    /// Discrete logarithm base `α`; errors on 0.
    pub fn dlog(&self, x: usize) -> Result<u64> {
        if x == 0 {
            return Err(domain_err!("0 has no discrete logarithm"));
        }
        Ok(self.log[x] as u64)
    }
}

/// Lexicographically smallest monic irreducible of degree `m` over `Z_p`,
/// with coefficient tuples `(c_0, c_1, …)` compared low degree first.
fn smallest_irreducible(p: u64, m: u32) -> Vec<u64> {
    let m = m as usize;
    let total = p.pow(m as u32);
    'cand: for code in 0..total {
        // Decode with c_0 as the most significant digit so that increasing
        // `code` enumerates tuples in low-degree-first lexicographic order.
        let mut cand = vec![0u64; m + 1];
        cand[m] = 1;
        let mut rem = code;
        for i in (0..m).rev() {
            cand[i] = rem % p;
            rem /= p;
        }
        if is_irreducible(&cand, p) {
            return cand;
        }
        continue 'cand;
    }
    unreachable!("irreducible polynomials of every degree exist")
}

fn poly_deg(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

/// Remainder of `f` modulo monic-normalizable `g` over `Z_p`.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let dg = poly_deg(g).expect("nonzero divisor");
    let lead_inv = mod_pow_u64(g[dg], p - 2, p);
    let mut r = f.to_vec();
    while let Some(dr) = poly_deg(&r) {
        if dr < dg {
            break;
        }
        let c = r[dr] * lead_inv % p;
        for i in 0..=dg {
            let sub = c * g[i] % p;
            r[dr - dg + i] = (r[dr - dg + i] + p - sub) % p;
        }
    }
    r
}

fn mod_pow_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Trial division by all monic polynomials of degree up to `deg(f)/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let df = poly_deg(f).unwrap_or(0);
    if df == 0 {
        return false;
    }
    if df == 1 {
        return true;
    }
    for dd in 1..=df / 2 {
        let total = p.pow(dd as u32);
        for code in 0..total {
            let mut g = vec![0u64; dd + 1];
            g[dd] = 1;
            let mut rem = code;
            for c in g.iter_mut().take(dd) {
                *c = rem % p;
                rem /= p;
            }
            if poly_deg(&poly_rem(f, &g, p)).is_none() {
                return false;
            }
        }
    }
    true
}

/// Cyclotomic classes `C_i^{(d, q, α)} = α^i ⟨α^d⟩` for `d | q − 1`.
#[derive(Clone, Debug)]
pub struct CyclotomicClasses<'f> {
    field: &'f FiniteField,
    d: u64,
}

impl<'f> CyclotomicClasses<'f> {
    pub fn new(field: &'f FiniteField, d: u64) -> Result<Self> {
        if d == 0 || !(field.q() as u64 - 1).is_multiple_of(d) {
            return Err(Error::NotADivisor(d, field.q() as u64 - 1));
        }
        Ok(Self { field, d })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Class size `f = (q − 1)/d`.
    pub fn class_size(&self) -> u64 {
        (self.field.q() as u64 - 1) / self.d
    }

    /// Index of the class containing `x`, or `None` for `x = 0`.
    pub fn class_index(&self, x: usize) -> Option<u64> {
        if x == 0 {
            None
        } else {
            Some(self.field.log[x] as u64 % self.d)
        }
    }

    pub fn contains(&self, i: u64, x: usize) -> bool {
        self.class_index(x) == Some(i % self.d)
    }

    /// Elements of `C_i`, ascending in the element encoding.
    pub fn class(&self, i: u64) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.class_size())
            .map(|k| self.field.alpha_pow(i % self.d + k * self.d))
            .collect();
        out.sort_unstable();
        out
    }

    /// Cyclotomic number `(i, j)^d = |(C_i + 1) ∩ C_j|`.
    pub fn number(&self, i: u64, j: u64) -> u64 {
        let mut count = 0u64;
        for k in 0..self.class_size() {
            let x = self.field.alpha_pow(i % self.d + k * self.d);
            let y = self.field.add(x, self.field.one());
            if y != 0 && self.class_index(y) == Some(j % self.d) {
                count += 1;
            }
        }
        count
    }
}

/// The proper representation `q = s² + 4t²` with `s ≡ 1 (mod 4)` and
/// `gcd(s, q) = 1`; `t_abs = |t|`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct ProperRepresentation {
    pub s: i64,
    pub t_abs: u64,
}

pub fn proper_representation(q: u64) -> Result<ProperRepresentation> {
    if q % 4 != 1 {
        return Err(Error::NoProperRepresentation(q));
    }
    let mut found = None;
    let mut s_abs = 1u64;
    while s_abs * s_abs <= q {
        let rem = q - s_abs * s_abs;
        if rem.is_multiple_of(4) {
            let t2 = rem / 4;
            let t = (t2 as f64).sqrt().round() as u64;
            let t = [t.saturating_sub(1), t, t + 1]
                .into_iter()
                .find(|&c| c * c == t2);
            if let Some(t_abs) = t {
                if gcd(s_abs, q) == 1 {
                    let s = if s_abs % 4 == 1 {
                        s_abs as i64
                    } else {
                        -(s_abs as i64)
                    };
                    if found.is_some() {
                        return Err(domain_err!(
                            "q = {q} has more than one proper representation"
                        ));
                    }
                    found = Some(ProperRepresentation { s, t_abs });
                }
            }
        }
        s_abs += 2;
    }
    found.ok_or(Error::NoProperRepresentation(q))
}

/// `t(α) = (16·(0,3)⁴_{q,α} − q − 1 − 2s)/8`, the quartic-residue invariant
/// distinguishing primitive elements; always `±t_abs`, with exact division.
pub fn t_alpha(field: &FiniteField, rep: ProperRepresentation) -> Result<i64> {
    let q = field.q() as i64;
    if q % 4 != 1 {
        return Err(domain_err!("t(alpha) needs q ≡ 1 (mod 4), got q = {q}"));
    }
    let classes = CyclotomicClasses::new(field, 4)?;
    let n03 = classes.number(0, 3) as i64;
    let numerator = 16 * n03 - q - 1 - 2 * rep.s;
    if numerator % 8 != 0 {
        return Err(domain_err!(
            "quartic census inconsistent: 16·(0,3) − q − 1 − 2s = {numerator} is not divisible by 8"
        ));
    }
    let t = numerator / 8;
    if t.unsigned_abs() != rep.t_abs {
        return Err(domain_err!(
            "t(alpha) = {t} does not match |t| = {} from the proper representation",
            rep.t_abs
        ));
    }
    Ok(t)
}
