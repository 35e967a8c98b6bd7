//! Group-developed matrices and the two bordered Hadamard assemblies, with
//! exact orthogonality verification.

use crate::array::{is_legendre_pair, Alphabet, GArray};
use crate::error::{domain_err, Error, Result};
use crate::pair::PairRecord;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A square `{−1,1}` matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PmMatrix {
    rows: Vec<Vec<i8>>,
}

impl PmMatrix {
    pub fn from_rows(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(domain_err!("matrix must be nonempty"));
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    got: row.len(),
                    want: n,
                });
            }
            if row.iter().any(|&v| v != 1 && v != -1) {
                return Err(Error::InvalidValues("pm1"));
            }
        }
        Ok(Self { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j] as i64
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    fn row_orthogonal(&self, i: usize) -> bool {
        let n = self.order();
        for j in i..n {
            let dot: i64 = (0..n).map(|k| self.entry(i, k) * self.entry(j, k)).sum();
            let want = if i == j { n as i64 } else { 0 };
            if dot != want {
                return false;
            }
        }
        true
    }

    /// Exact `H·Hᵀ = N·I` over the integers.
    pub fn is_hadamard(&self) -> bool {
        #[cfg(feature = "parallel")]
        {
            (0..self.order())
                .into_par_iter()
                .all(|i| self.row_orthogonal(i))
        }
        #[cfg(not(feature = "parallel"))]
        {
            (0..self.order()).all(|i| self.row_orthogonal(i))
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Unit diagonal and anti-symmetric off-diagonal part.
    pub fn is_skew_type(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| self.rows[i][i] == 1)
            && (0..n).all(|i| (i + 1..n).all(|j| self.rows[i][j] == -self.rows[j][i]))
    }

    /// One line of `+`/`-` per row, newline terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.order() * (self.order() + 1));
        for row in &self.rows {
            for &v in row {
                out.push(if v == 1 { '+' } else { '-' });
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<i8> = line
                .chars()
                .map(|c| match c {
                    '+' => Ok(1i8),
                    '-' => Ok(-1i8),
                    other => Err(Error::Parse {
                        what: "matrix",
                        detail: format!("unexpected character '{other}'"),
                    }),
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }
}

/// Develops an array into the matrix whose entry at `(g, h)` is
/// `a_{h−g}`; row zero is the array itself and every row is a translate.
pub fn develop(a: &GArray) -> PmMatrix {
    let a = a.in_alphabet(Alphabet::PlusMinus);
    let group = a.group();
    let n = group.order();
    let rows: Vec<Vec<i8>> = (0..n)
        .map(|g| (0..n).map(|h| a.value(group.sub(h, g)) as i8).collect())
        .collect();
    PmMatrix { rows }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum BorderVariant {
    Sym,
    Skew,
}

impl BorderVariant {
    pub fn name(self) -> &'static str {
        match self {
            BorderVariant::Sym => "sym",
            BorderVariant::Skew => "skew",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sym" => Ok(Self::Sym),
            "skew" => Ok(Self::Skew),
            other => Err(Error::Parse {
                what: "variant",
                detail: format!("expected 'sym' or 'skew', got '{other}'"),
            }),
        }
    }
}

/// A verified Hadamard matrix with the pair and border variant it came
/// from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HadamardMatrix {
    pub matrix: PmMatrix,
    pub variant: BorderVariant,
    pub source_group: String,
}

impl HadamardMatrix {
    pub fn order(&self) -> usize {
        self.matrix.order()
    }
}

/// Assembles the bordered matrix of order `2n + 2` from a Legendre
/// `{−1,1}` pair: two border rows and columns around the developed blocks
/// `A` and `B` with transposed twins. Row sums are normalized to `+1` by
/// negating both arrays when needed; the result is verified before return.
pub fn build_bordered(pair: &PairRecord, variant: BorderVariant) -> Result<HadamardMatrix> {
    let a = pair.a().in_alphabet(Alphabet::PlusMinus);
    let b = pair.b().in_alphabet(Alphabet::PlusMinus);
    if !is_legendre_pair(&a, &b)? {
        return Err(domain_err!("input pair fails the Legendre condition"));
    }
    let (a, b) = if a.row_sum() == -1 {
        (a.negated()?, b.negated()?)
    } else {
        (a, b)
    };
    let am = develop(&a);
    let bm = develop(&b);
    let n = a.len();
    let order = 2 * n + 2;
    let mut rows = vec![vec![0i8; order]; order];

    let (r0c0, r0c1) = match variant {
        BorderVariant::Sym => (-1i8, -1i8),
        BorderVariant::Skew => (1, 1),
    };
    rows[0][0] = r0c0;
    rows[0][1] = r0c1;
    rows[1][0] = -1;
    rows[1][1] = 1;
    for k in 0..n {
        rows[0][2 + k] = 1;
        rows[0][2 + n + k] = 1;
        rows[1][2 + k] = 1;
        rows[1][2 + n + k] = -1;
    }
    let (top_border, bottom_border): ([i8; 2], [i8; 2]) = match variant {
        BorderVariant::Sym => ([1, 1], [1, -1]),
        BorderVariant::Skew => ([-1, -1], [-1, 1]),
    };
    for i in 0..n {
        rows[2 + i][0] = top_border[0];
        rows[2 + i][1] = top_border[1];
        rows[2 + n + i][0] = bottom_border[0];
        rows[2 + n + i][1] = bottom_border[1];
        for j in 0..n {
            rows[2 + i][2 + j] = am.rows[i][j];
            rows[2 + i][2 + n + j] = bm.rows[i][j];
            match variant {
                BorderVariant::Sym => {
                    rows[2 + n + i][2 + j] = bm.rows[j][i];
                    rows[2 + n + i][2 + n + j] = -am.rows[j][i];
                }
                BorderVariant::Skew => {
                    rows[2 + n + i][2 + j] = -bm.rows[j][i];
                    rows[2 + n + i][2 + n + j] = am.rows[j][i];
                }
            }
        }
    }
    let matrix = PmMatrix::from_rows(rows)?;
    if !matrix.is_hadamard() {
        return Err(Error::ConstructionFailed {
            family: "hadamard".into(),
            failed: vec!["orthogonality: H times its transpose is not N times identity".into()],
        });
    }
    Ok(HadamardMatrix {
        matrix,
        variant,
        source_group: pair.group().spec_string(),
    })
}

pub fn build_h_sym(pair: &PairRecord) -> Result<HadamardMatrix> {
    build_bordered(pair, BorderVariant::Sym)
}

pub fn build_h_skew(pair: &PairRecord) -> Result<HadamardMatrix> {
    build_bordered(pair, BorderVariant::Skew)
}
