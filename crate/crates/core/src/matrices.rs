//! Matrix carriers: arbitrary nonnegative integer matrices, packed matrices and
//! compositions, together with packing, transposition, the reading word and the
//! 0/1 matrices of maps between finite sets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::Basis;

/// A `rows × cols` matrix of nonnegative integers, stored row-major.
///
/// The only matrix with zero extent is the empty matrix `1` (0×0); shapes
/// such as 0×3 are rejected at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    weight: u64,
    entries: Vec<u64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        if (rows == 0) != (cols == 0) {
            return Err(Error::malformed(format!(
                "{rows}x{cols} shape: only the empty matrix may have zero rows or columns"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::malformed(format!(
                "{} entries given for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let weight = entries
            .iter()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .ok_or_else(|| Error::malformed("matrix weight overflows u64"))?;
        Ok(Self {
            rows,
            cols,
            weight,
            entries,
        })
    }

    /// Builds a matrix from its rows; all rows must have the same length.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::malformed(format!("ragged row at row {}", i + 1)));
            }
            entries.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, entries)
    }

    /// The empty matrix, unit of `↘`.
    pub fn empty() -> Self {
        Self {
            rows: 0,
            cols: 0,
            weight: 0,
            entries: Vec::new(),
        }
    }

    /// The zero matrix `0_{k,l}`.
    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0; rows * cols])
    }

    pub(crate) fn from_parts_unchecked(rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        debug_assert_eq!(rows == 0, cols == 0);
        let weight = entries.iter().sum();
        Self {
            rows,
            cols,
            weight,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    /// `ω(M)`, the sum of all entries.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_entry(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// No zero row and no zero column.
    pub fn is_packed(&self) -> bool {
        self.row_sums().iter().all(|&s| s > 0) && self.col_sums().iter().all(|&s| s > 0)
    }

    /// The packing map `p`: deletes zero rows and zero columns.
    pub fn pack(&self) -> PackedMatrix {
        let keep_rows: Vec<usize> = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|&e| e > 0))
            .collect();
        let keep_cols: Vec<usize> = (0..self.cols)
            .filter(|&j| (0..self.rows).any(|i| self.get(i, j) > 0))
            .collect();
        if keep_rows.len() == self.rows && keep_cols.len() == self.cols {
            return PackedMatrix(self.clone());
        }
        let mut entries = Vec::with_capacity(keep_rows.len() * keep_cols.len());
        for &i in &keep_rows {
            for &j in &keep_cols {
                entries.push(self.get(i, j));
            }
        }
        PackedMatrix(Self {
            rows: keep_rows.len(),
            cols: keep_cols.len(),
            weight: self.weight,
            entries,
        })
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            weight: self.weight,
            entries,
        }
    }

    /// `Comp(M)`: the row-major reading word with zeros removed.
    pub fn comp(&self) -> Composition {
        Composition(self.entries.iter().copied().filter(|&e| e > 0).collect())
    }

    /// Block-diagonal concatenation `M ↘ M'`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut entries = vec![0; rows * cols];
        for i in 0..self.rows {
            entries[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
        }
        for i in 0..other.rows {
            let start = (self.rows + i) * cols + self.cols;
            entries[start..start + other.cols].copy_from_slice(other.row(i));
        }
        Self {
            rows,
            cols,
            weight: self.weight + other.weight,
            entries,
        }
    }

    /// Ordinary matrix product; `None` when the inner dimensions disagree.
    pub fn matmul(&self, other: &Matrix) -> Option<Matrix> {
        if self.cols != other.rows {
            return None;
        }
        let (r, c) = (self.rows, other.cols);
        if r == 0 || c == 0 {
            // A k×0 times 0×l product, or anything involving an empty factor.
            return if r == 0 && c == 0 {
                Some(Matrix::empty())
            } else {
                Matrix::zero(r, c).ok()
            };
        }
        let mut entries = vec![0; r * c];
        for i in 0..r {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..c {
                    entries[i * c + j] += a * other.get(k, j);
                }
            }
        }
        Some(Matrix::from_parts_unchecked(r, c, entries))
    }

    /// `μ(σ) M μ(τ)ᵀ` for maps given as 1-based words: row `i` of `M` is added
    /// into row `row_map[i]` of a `row_target × col_target` result, and
    /// likewise for columns.
    pub fn sandwich(
        &self,
        row_map: &[usize],
        row_target: usize,
        col_map: &[usize],
        col_target: usize,
    ) -> Matrix {
        debug_assert_eq!(row_map.len(), self.rows);
        debug_assert_eq!(col_map.len(), self.cols);
        let mut entries = vec![0; row_target * col_target];
        for (i, &ri) in row_map.iter().enumerate() {
            for (j, &cj) in col_map.iter().enumerate() {
                entries[(ri - 1) * col_target + (cj - 1)] += self.get(i, j);
            }
        }
        Matrix::from_parts_unchecked(row_target, col_target, entries)
    }
}

/// `μ(α)` for a map `α: [k] → [target]` given as a 1-based word:
/// the `target × k` matrix with `μ(α)_{i,j} = δ_{i, α(j)}`.
pub fn map_matrix(word: &[usize], target: usize) -> Result<Matrix> {
    let k = word.len();
    if let Some(&bad) = word.iter().find(|&&v| v == 0 || v > target) {
        return Err(Error::malformed(format!(
            "map value {bad} outside [1, {target}]"
        )));
    }
    let mut entries = vec![0; target * k];
    for (j, &v) in word.iter().enumerate() {
        entries[(v - 1) * k + j] = 1;
    }
    Matrix::new(target, k, entries)
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: weight, then rows, then columns, then row-major entries.
impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then(self.rows.cmp(&other.rows))
            .then(self.cols.cmp(&other.cols))
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Basis for Matrix {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vecs().serialize(s)
    }
}

/// A matrix without zero rows or zero columns; the empty matrix is packed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedMatrix(Matrix);

impl PackedMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if m.is_packed() {
            Ok(Self(m))
        } else {
            Err(Error::malformed(format!("{m} has a zero row or column")))
        }
    }

    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn empty() -> Self {
        Self(Matrix::empty())
    }

    /// The 1×1 matrix `(a)`, `a ≥ 1`.
    pub fn scalar(a: u64) -> Self {
        assert!(a > 0, "(0) is not packed");
        Self(Matrix::from_parts_unchecked(1, 1, vec![a]))
    }

    pub(crate) fn new_unchecked(m: Matrix) -> Self {
        debug_assert!(m.is_packed(), "{m} is not packed");
        Self(m)
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn transpose(&self) -> PackedMatrix {
        Self(self.0.transpose())
    }

    pub fn block_diag(&self, other: &PackedMatrix) -> PackedMatrix {
        Self(self.0.block_diag(&other.0))
    }

    /// `μ(σ) M μ(τ)ᵀ` for surjective row and column maps; packed by construction.
    pub fn sandwich_surj(
        &self,
        row_map: &[usize],
        row_target: usize,
        col_map: &[usize],
        col_target: usize,
    ) -> PackedMatrix {
        Self::new_unchecked(self.0.sandwich(row_map, row_target, col_map, col_target))
    }
}

impl Deref for PackedMatrix {
    type Target = Matrix;
    fn deref(&self) -> &Matrix {
        &self.0
    }
}

impl TryFrom<Matrix> for PackedMatrix {
    type Error = Error;
    fn try_from(m: Matrix) -> Result<Self> {
        Self::new(m)
    }
}

impl From<PackedMatrix> for Matrix {
    fn from(p: PackedMatrix) -> Matrix {
        p.0
    }
}

impl fmt::Display for PackedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for PackedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Basis for PackedMatrix {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for PackedMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// If `M` is square with zero off-diagonal entries, its diagonal.
///
/// The empty matrix is diagonal with empty diagonal. For a packed matrix the
/// diagonal entries are then automatically positive.
pub fn diag_of(m: &PackedMatrix) -> Option<Composition> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            if i != j && m.get(i, j) != 0 {
                return None;
            }
        }
    }
    Some(Composition((0..n).map(|i| m.get(i, i)).collect()))
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u64>);

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::malformed(format!(
                "composition {parts:?} has a zero part"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Drops zero parts (the packing of a generalised composition).
    pub fn packed_from(parts: impl IntoIterator<Item = u64>) -> Self {
        Self(parts.into_iter().filter(|&p| p > 0).collect())
    }

    pub(crate) fn new_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(!parts.contains(&0));
        Self(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|μ|`, the sum of the parts.
    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// The diagonal packed matrix `diag(μ_1, …, μ_k)`.
    pub fn diag_matrix(&self) -> PackedMatrix {
        let n = self.0.len();
        let mut entries = vec![0; n * n];
        for (i, &p) in self.0.iter().enumerate() {
            entries[i * n + i] = p;
        }
        PackedMatrix::new_unchecked(Matrix::from_parts_unchecked(n, n, entries))
    }

    /// The packed row matrix `(μ_1 … μ_k)`.
    pub fn row_matrix(&self) -> PackedMatrix {
        let n = self.0.len();
        PackedMatrix::new_unchecked(Matrix::from_parts_unchecked(n.min(1), n, self.0.clone()))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: weight, then length, then lexicographic.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Basis for Composition {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// All compositions of `n`, in canonical order.
pub fn compositions_of(n: u64) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    // Subsets of the n-1 cut points, via bitmasks.
    let mut out: Vec<Composition> = (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition(parts)
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u64]]) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Matrix::empty().weight(), 0);
        assert_eq!(m(&[&[1, 0], &[0, 2]]).weight(), 3);
        assert_eq!(Matrix::zero(2, 2).unwrap().weight(), 0);
    }

    #[test]
    fn pack_examples() {
        let p = m(&[&[1, 0], &[0, 0], &[0, 2]]).pack();
        assert_eq!(*p.as_matrix(), m(&[&[1, 0], &[0, 2]]));
        assert!(Matrix::zero(3, 2).unwrap().pack().is_empty());
        let q = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(*q.pack(), q);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(m(&[&[1, 2]]).transpose(), m(&[&[1], &[2]]));
        assert_eq!(Matrix::empty().transpose(), Matrix::empty());
    }

    #[test]
    fn comp_examples() {
        assert_eq!(m(&[&[1, 0], &[0, 2]]).comp().parts(), &[1, 2]);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).comp().parts(), &[1, 1]);
        assert!(Matrix::empty().comp().is_empty());
    }

    #[test]
    fn map_matrix_examples() {
        assert_eq!(map_matrix(&[1], 1).unwrap(), m(&[&[1]]));
        assert_eq!(map_matrix(&[2, 1], 2).unwrap(), m(&[&[0, 1], &[1, 0]]));
        assert_eq!(map_matrix(&[1, 1], 1).unwrap(), m(&[&[1, 1]]));
        assert!(map_matrix(&[3], 2).is_err());
        // μ(α) is packed iff α is surjective.
        assert!(!map_matrix(&[1, 1], 2).unwrap().is_packed());
    }

    #[test]
    fn diag_examples() {
        let d = PackedMatrix::from_rows(&[[1, 0], [0, 2]]).unwrap();
        assert_eq!(diag_of(&d).unwrap().parts(), &[1, 2]);
        let a = PackedMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert!(diag_of(&a).is_none());
        assert!(diag_of(&PackedMatrix::empty()).unwrap().is_empty());
    }

    #[test]
    fn rejects_degenerate_shapes() {
        assert!(Matrix::new(0, 2, vec![]).is_err());
        assert!(Matrix::new(2, 0, vec![]).is_err());
        assert!(Matrix::new(2, 2, vec![1, 2, 3]).is_err());
        let err = Matrix::from_rows(&[vec![1, 0], vec![2]]).unwrap_err();
        assert_eq!(err, Error::Malformed("ragged row at row 2".into()));
        assert!(Matrix::new(1, 2, vec![u64::MAX, 1]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn canonical_order() {
        let a = m(&[&[2]]);
        let b = m(&[&[1, 1]]);
        let c = m(&[&[1], &[1]]);
        let d = m(&[&[0, 1], &[1, 0]]);
        let e = m(&[&[1, 0], &[0, 1]]);
        let mut v = vec![e.clone(), d.clone(), c.clone(), b.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![a, b, c, d, e]);
    }

    #[test]
    fn compositions_enumeration() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        assert_eq!(compositions_of(4).len(), 8);
        assert_eq!(compositions_of(3)[0].parts(), &[3]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        pub(crate) fn arb_matrix() -> impl Strategy<Value = Matrix> {
            (1usize..4, 1usize..4)
                .prop_flat_map(|(r, c)| {
                    proptest::collection::vec(0u64..3, r * c).prop_map(move |e| (r, c, e))
                })
                .prop_map(|(r, c, e)| Matrix::new(r, c, e).unwrap())
        }

        fn arb_word(k: usize, target: usize) -> impl Strategy<Value = Vec<usize>> {
            proptest::collection::vec(1..=target, k)
        }

        proptest! {
            #[test]
            fn pack_invariants(mat in arb_matrix()) {
                let p = mat.pack();
                prop_assert_eq!(p.weight(), mat.weight());
                prop_assert!(p.is_packed());
                prop_assert_eq!(p.pack(), p.clone());
                prop_assert_eq!(p.comp(), mat.comp());
                prop_assert_eq!(mat.comp().weight(), mat.weight());
                prop_assert_eq!(mat.transpose().pack(), p.transpose());
                prop_assert_eq!(mat.transpose().transpose(), mat);
            }

            #[test]
            fn map_matrix_is_functorial(
                (alpha, beta) in (1usize..4, 1usize..4, 1usize..4)
                    .prop_flat_map(|(k, l, n)| (arb_word(k, l).prop_map(move |a| (a, l)), arb_word(l, n).prop_map(move |b| (b, n))))
            ) {
                let (alpha, l) = alpha;
                let (beta, n) = beta;
                let composed: Vec<usize> = alpha.iter().map(|&a| beta[a - 1]).collect();
                let lhs = map_matrix(&composed, n).unwrap();
                let rhs = map_matrix(&beta, n).unwrap().matmul(&map_matrix(&alpha, l).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn sandwich_matches_matmul(
                mat in arb_matrix(),
                seed in proptest::collection::vec(1usize..4, 8)
            ) {
                let rt = mat.rows();
                let ct = mat.cols();
                let rmap: Vec<usize> = (0..mat.rows()).map(|i| 1 + (seed[i] - 1) % rt).collect();
                let cmap: Vec<usize> = (0..mat.cols()).map(|j| 1 + (seed[4 + j] - 1) % ct).collect();
                let direct = mat.sandwich(&rmap, rt, &cmap, ct);
                let via = map_matrix(&rmap, rt).unwrap()
                    .matmul(&mat).unwrap()
                    .matmul(&map_matrix(&cmap, ct).unwrap().transpose()).unwrap();
                prop_assert_eq!(direct, via);
            }
        }
    }
}
