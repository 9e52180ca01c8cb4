//! Polynomial realization of packed matrices over finite ordered alphabets
//! and its numeric evaluation on rational grids.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::{parse_rational, Basis, LinComb, Rational};
use crate::hopfpack::HPackElem;
use crate::matrices::{Matrix, PackedMatrix};

/// A monomial `Π t_{i,j}^{e_{i,j}}` in the commuting indeterminates `t_{i,j}`,
/// indices 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial2 {
    exponents: BTreeMap<(usize, usize), u64>,
}

impl Monomial2 {
    /// Zero exponents are dropped.
    pub fn new(exponents: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, e) in exponents {
            if e > 0 {
                *map.entry(k).or_insert(0) += e;
            }
        }
        Self { exponents: map }
    }

    pub fn exponents(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.exponents.values().sum()
    }
}

impl fmt::Display for Monomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        for (n, ((i, j), e)) in self.exponents.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "t_{{{i},{j}}}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Basis for Monomial2 {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(usize, usize, u64)> = self
            .exponents
            .iter()
            .map(|(&(i, j), &e)| (i, j, e))
            .collect();
        v.serialize(s)
    }
}

/// Calls `f` on every strictly increasing `k`-tuple from `[n]` (1-based).
fn for_each_increasing(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for v in start..=n + 1 - need {
            cur.push(v);
            rec(v + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        rec(1, n, k, &mut Vec::with_capacity(k), &mut f);
    }
}

/// `Φ_M` over the alphabets `[m]` and `[n]`:
/// `Σ_{i_1<…<i_k, j_1<…<j_l} Π t_{i_r, j_s}^{M_{r,s}}`.
///
/// Matrices with more rows than `m` or more columns than `n` realize to 0.
pub fn phi_formal(mat: &PackedMatrix, m: usize, n: usize) -> LinComb<Monomial2> {
    let mut out = LinComb::zero();
    for_each_increasing(m, mat.rows(), |is| {
        for_each_increasing(n, mat.cols(), |js| {
            let mono = Monomial2::new(
                (0..mat.rows())
                    .flat_map(|r| (0..mat.cols()).map(move |s| ((is[r], js[s]), mat.get(r, s)))),
            );
            out.add_term(mono, Rational::one());
        });
    });
    out
}

/// `ς(P)`: the packed matrix of exponents, rows and columns indexed by the
/// used row and column indices in increasing order.
pub fn classify(p: &Monomial2) -> PackedMatrix {
    let mut rows: Vec<usize> = p.exponents.keys().map(|&(i, _)| i).collect();
    let mut cols: Vec<usize> = p.exponents.keys().map(|&(_, j)| j).collect();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    let mut entries = vec![0; rows.len() * cols.len()];
    for (&(i, j), &e) in &p.exponents {
        let r = rows.binary_search(&i).unwrap();
        let s = cols.binary_search(&j).unwrap();
        entries[r * cols.len() + s] = e;
    }
    PackedMatrix::new_unchecked(Matrix::from_parts_unchecked(
        rows.len(),
        cols.len(),
        entries,
    ))
}

/// A nonempty `rows × cols` grid of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Grid {
    rows: usize,
    cols: usize,
    values: Vec<Rational>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Cell {
    Text(String),
    Int(i64),
}

#[derive(Deserialize)]
struct GridFile {
    rows: usize,
    cols: usize,
    values: Vec<Vec<Cell>>,
}

impl Grid {
    pub fn new(rows: usize, cols: usize, values: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::malformed("grid dimensions must be positive"));
        }
        if values.len() != rows * cols {
            return Err(Error::malformed(format!(
                "{} values given for a {rows}x{cols} grid",
                values.len()
            )));
        }
        Ok(Self { rows, cols, values })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::malformed(format!("ragged row at row {}", i + 1)));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Reads `{"rows": m, "cols": n, "values": [["p/q", …], …]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GridFile = serde_json::from_str(text)
            .map_err(|e| Error::parse(text, e.column(), e.to_string()))?;
        if file.values.len() != file.rows {
            return Err(Error::malformed(format!(
                "grid declares {} rows but lists {}",
                file.rows,
                file.values.len()
            )));
        }
        let mut rows = Vec::with_capacity(file.rows);
        for (i, row) in file.values.into_iter().enumerate() {
            if row.len() != file.cols {
                return Err(Error::malformed(format!(
                    "grid row {} has {} values, expected {}",
                    i + 1,
                    row.len(),
                    file.cols
                )));
            }
            let parsed = row
                .into_iter()
                .map(|c| match c {
                    Cell::Text(s) => parse_rational(&s),
                    Cell::Int(v) => Ok(Rational::from_integer(v.into())),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 1-based access.
    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.values[(i - 1) * self.cols + (j - 1)]
    }

    pub fn transpose(&self) -> Grid {
        let mut values = Vec::with_capacity(self.values.len());
        for j in 1..=self.cols {
            for i in 1..=self.rows {
                values.push(self.at(i, j).clone());
            }
        }
        Grid {
            rows: self.cols,
            cols: self.rows,
            values,
        }
    }

    /// `diag(g₁, g₂)` with zero off-diagonal blocks.
    pub fn block_diag(&self, other: &Grid) -> Grid {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut values = vec![Rational::zero(); rows * cols];
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                values[(i - 1) * cols + (j - 1)] = self.at(i, j).clone();
            }
        }
        for i in 1..=other.rows {
            for j in 1..=other.cols {
                values[(self.rows + i - 1) * cols + (self.cols + j - 1)] = other.at(i, j).clone();
            }
        }
        Grid { rows, cols, values }
    }

    /// `g[(i₁,i₂),(j₁,j₂)] = u[i₁,j₁] v[i₂,j₂]`, pairs in lexicographic order.
    pub fn kronecker(&self, other: &Grid) -> Grid {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut values = Vec::with_capacity(rows * cols);
        for i1 in 1..=self.rows {
            for i2 in 1..=other.rows {
                for j1 in 1..=self.cols {
                    for j2 in 1..=other.cols {
                        values.push(self.at(i1, j1) * other.at(i2, j2));
                    }
                }
            }
        }
        Grid { rows, cols, values }
    }
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (1..=self.rows)
            .map(|i| (1..=self.cols).map(|j| self.at(i, j).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

impl Serialize for Grid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (1..=self.rows)
            .map(|i| (1..=self.cols).map(|j| self.at(i, j).to_string()).collect())
            .collect();
        serde_json::json!({ "rows": self.rows, "cols": self.cols, "values": rows }).serialize(s)
    }
}

/// `Φ_M` with `t_{i,j} := g[i][j]`; zero when the grid is too small.
///
/// For each increasing column tuple, the sum over increasing row tuples is
/// accumulated row by row, so the cost is `C(n, col(M))·m·row(M)` products.
pub fn evaluate(mat: &PackedMatrix, g: &Grid) -> Rational {
    let (k, l) = (mat.rows(), mat.cols());
    if k == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for_each_increasing(g.cols(), l, |js| {
        // dp[r] = sum over i_1 < … < i_r among the rows seen so far.
        let mut dp = vec![Rational::zero(); k + 1];
        dp[0] = Rational::one();
        for i in 1..=g.rows() {
            for r in (1..=k.min(i)).rev() {
                if dp[r - 1].is_zero() {
                    continue;
                }
                let mut w = Rational::one();
                for (s, &j) in js.iter().enumerate() {
                    let e = mat.get(r - 1, s);
                    if e > 0 {
                        w *= Pow::pow(g.at(i, j), e as u32);
                    }
                }
                let add = &dp[r - 1] * w;
                dp[r] += add;
            }
        }
        total += &dp[k];
    });
    total
}

pub fn evaluate_lincomb(a: &HPackElem, g: &Grid) -> Rational {
    a.eval(|m| evaluate(m, g))
}
