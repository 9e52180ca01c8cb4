//! NSym in the `D_μ` basis and QSym in the monomial basis, the Hilbert
//! polynomials, and the two products on permutations.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::{bilinear, Basis, LinComb, Rational};
use crate::limits::Limits;
use crate::matrices::{compositions_of, map_matrix, Composition, Matrix, PackedMatrix};
use crate::surjections::{qsh_cached, sh_cached};

/// Element of NSym, on the basis `D_μ`.
pub type NSymElem = LinComb<Composition>;
/// Element of QSym, on the monomial basis `M_ν`.
pub type QSymElem = LinComb<Composition>;
/// Element of a two-fold tensor power of NSym or QSym.
pub type Comp2 = LinComb<(Composition, Composition)>;

/// `D_μ ∗ D_ν = D_{μν}`.
pub fn nsym_concat(a: &Composition, b: &Composition) -> Composition {
    a.concat(b)
}

pub fn nsym_product(a: &NSymElem, b: &NSymElem) -> NSymElem {
    bilinear(a, b, |x, y| LinComb::basis(x.concat(y)))
}

/// `▲(D_μ) = Π_i Σ_{j=0}^{μ_i} D_(j) ⊗ D_(μ_i - j)`, with `D_(0)` the unit.
pub fn nsym_coproduct(mu: &Composition) -> Comp2 {
    let mut terms: HashMap<(Vec<u64>, Vec<u64>), u64> = HashMap::new();
    terms.insert((Vec::new(), Vec::new()), 1);
    for &n in mu.parts() {
        let mut next = HashMap::new();
        for ((a, b), c) in terms {
            for j in 0..=n {
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                if j > 0 {
                    a2.push(j);
                }
                if j < n {
                    b2.push(n - j);
                }
                *next.entry((a2, b2)).or_insert(0) += c;
            }
        }
        terms = next;
    }
    terms
        .into_iter()
        .map(|((a, b), c)| {
            (
                (Composition::new_unchecked(a), Composition::new_unchecked(b)),
                Rational::from_integer(c.into()),
            )
        })
        .collect()
}

pub fn nsym_coproduct_lin(a: &NSymElem) -> Comp2 {
    a.flat_map(nsym_coproduct)
}

/// Calls `f` on every nonnegative integer matrix (row-major) with the given
/// row sums and column sums.
pub fn for_each_contingency_table(rows: &[u64], cols: &[u64], mut f: impl FnMut(&[u64])) {
    if rows.iter().sum::<u64>() != cols.iter().sum::<u64>() {
        return;
    }
    let mut grid = vec![0u64; rows.len() * cols.len()];
    let mut remaining = cols.to_vec();
    fill_row(0, rows, &mut remaining, &mut grid, &mut f);
}

fn fill_row(
    i: usize,
    rows: &[u64],
    remaining: &mut [u64],
    grid: &mut [u64],
    f: &mut impl FnMut(&[u64]),
) {
    if i == rows.len() {
        f(grid);
        return;
    }
    let l = remaining.len();
    if i + 1 == rows.len() {
        // The last row is forced by the column sums.
        grid[i * l..(i + 1) * l].copy_from_slice(remaining);
        f(grid);
        return;
    }
    fill_cell(i, 0, rows[i], rows, remaining, grid, f);
}

fn fill_cell(
    i: usize,
    j: usize,
    left: u64,
    rows: &[u64],
    remaining: &mut [u64],
    grid: &mut [u64],
    f: &mut impl FnMut(&[u64]),
) {
    let l = remaining.len();
    if j + 1 == l {
        if left > remaining[j] {
            return;
        }
        grid[i * l + j] = left;
        remaining[j] -= left;
        fill_row(i + 1, rows, remaining, grid, f);
        remaining[j] += left;
        return;
    }
    let room_after: u64 = remaining[j + 1..].iter().sum();
    let lo = left.saturating_sub(room_after);
    for v in lo..=left.min(remaining[j]) {
        grid[i * l + j] = v;
        remaining[j] -= v;
        fill_cell(i, j + 1, left - v, rows, remaining, grid, f);
        remaining[j] += v;
    }
}

/// `D_β ∘ D_μ = Σ D_{Comp(ν)}` over matrices `ν` with row sums `β` and column
/// sums `μ`; zero when `|β| ≠ |μ|`.
pub fn internal_product(beta: &Composition, mu: &Composition) -> NSymElem {
    let mut out = LinComb::zero();
    for_each_contingency_table(beta.parts(), mu.parts(), |grid| {
        out.add_term(
            Composition::packed_from(grid.iter().copied()),
            Rational::one(),
        );
    });
    out
}

pub fn internal_product_lin(a: &NSymElem, b: &NSymElem) -> NSymElem {
    bilinear(a, b, internal_product)
}

/// The degree-`n` component of `log(Σ_{k≥0} D_(k))`, from the series
/// `log(1 + x) = Σ_j (-1)^{j+1} x^j / j` with `x = Σ_{k≥1} D_(k)`.
pub fn eulerian_idempotent(n: u64) -> NSymElem {
    if n == 0 {
        return LinComb::zero();
    }
    // x truncated at degree n, then its powers kept homogeneous by degree.
    let x: Vec<NSymElem> = (0..=n)
        .map(|k| {
            if k == 0 {
                LinComb::zero()
            } else {
                LinComb::basis(Composition::new_unchecked(vec![k]))
            }
        })
        .collect();
    let mut power = x.clone();
    let mut out = LinComb::zero();
    for j in 1..=n {
        let c = Rational::new(
            BigInt::from(if j % 2 == 1 { 1 } else { -1 }),
            BigInt::from(j),
        );
        out.add_scaled(&c, &power[n as usize]);
        let mut next = vec![LinComb::zero(); n as usize + 1];
        for (d1, p) in power.iter().enumerate() {
            for (d2, q) in x.iter().enumerate().skip(1) {
                if d1 + d2 <= n as usize && !p.is_zero() {
                    next[d1 + d2] += nsym_product(p, q);
                }
            }
        }
        power = next;
    }
    out
}

/// `ν ⧆ ν' = Σ_{σ∈qsh(k,l)} (Σ_{σ(i)=1} ν_i, …)` on the concatenation `νν'`.
pub fn qsym_quasi_shuffle(a: &Composition, b: &Composition) -> QSymElem {
    let word = a.concat(b);
    let mut out = LinComb::zero();
    for s in qsh_cached(a.len(), b.len()).iter() {
        let mut parts = vec![0u64; s.target()];
        for (i, &v) in s.word().iter().enumerate() {
            parts[v - 1] += word.parts()[i];
        }
        out.add_term(Composition::new_unchecked(parts), Rational::one());
    }
    out
}

pub fn qsym_quasi_shuffle_lin(a: &QSymElem, b: &QSymElem) -> QSymElem {
    bilinear(a, b, qsym_quasi_shuffle)
}

/// All prefix/suffix splittings.
pub fn qsym_deconcat(nu: &Composition) -> Comp2 {
    let p = nu.parts();
    (0..=p.len())
        .map(|i| {
            (
                (
                    Composition::new_unchecked(p[..i].to_vec()),
                    Composition::new_unchecked(p[i..].to_vec()),
                ),
                Rational::one(),
            )
        })
        .collect()
}

pub fn qsym_deconcat_lin(a: &QSymElem) -> Comp2 {
    a.flat_map(qsym_deconcat)
}

type DeltaTable = HashMap<Composition, Comp2>;

fn delta_table(n: u64) -> Arc<DeltaTable> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<DeltaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let comps = compositions_of(n);
    let mut table: DeltaTable = HashMap::new();
    for beta in &comps {
        for mu in &comps {
            for (nu, c) in internal_product(beta, mu) {
                table
                    .entry(nu)
                    .or_default()
                    .add_term((beta.clone(), mu.clone()), c);
            }
        }
    }
    let table = Arc::new(table);
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(table))
}

/// The coproduct of QSym dual to the internal product:
/// `δ(ν) = Σ_{β,μ ⊨ |ν|} ⟨D_β ∘ D_μ, ν⟩ β ⊗ μ`.
///
/// The degree-`n` table costs `4^(n-1)` internal products and is cached.
pub fn qsym_delta(nu: &Composition, limits: &Limits) -> Result<Comp2> {
    limits.check_qsym_delta(nu.weight())?;
    Ok(delta_table(nu.weight())
        .get(nu)
        .cloned()
        .unwrap_or_default())
}

pub fn qsym_delta_lin(a: &QSymElem, limits: &Limits) -> Result<Comp2> {
    a.try_flat_map(|nu| qsym_delta(nu, limits))
}

/// `ε_δ(ν) = 1` iff `ν` has at most one part.
pub fn qsym_counit_delta(nu: &Composition) -> Rational {
    if nu.len() <= 1 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `ε_Δ(ν) = 1` iff `ν` is empty.
pub fn qsym_counit_deconcat(nu: &Composition) -> Rational {
    if nu.is_empty() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// A univariate polynomial in `X` with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial1 {
    coeffs: Vec<Rational>,
}

impl Polynomial1 {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &Polynomial1 {
    type Output = Polynomial1;
    fn add(self, other: &Polynomial1) -> Polynomial1 {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial1::new((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }
}

impl Sub for &Polynomial1 {
    type Output = Polynomial1;
    fn sub(self, other: &Polynomial1) -> Polynomial1 {
        self + &(-other)
    }
}

impl Neg for &Polynomial1 {
    type Output = Polynomial1;
    fn neg(self) -> Polynomial1 {
        Polynomial1::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial1 {
    type Output = Polynomial1;
    fn mul(self, other: &Polynomial1) -> Polynomial1 {
        if self.is_zero() || other.is_zero() {
            return Polynomial1::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial1::new(out)
    }
}

impl fmt::Display for Polynomial1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match d {
                0 => {}
                1 => f.write_str("X")?,
                _ => write!(f, "X^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Polynomial1 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

/// `H_n(X) = X(X-1)…(X-n+1)/n!`.
pub fn hilbert_poly(n: u64) -> Polynomial1 {
    let mut out = Polynomial1::constant(Rational::one());
    for i in 0..n {
        let factor = Polynomial1::new(vec![
            Rational::from_integer(-BigInt::from(i)),
            Rational::one(),
        ]);
        out = &out * &factor;
    }
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    out.scale(&Rational::new(BigInt::one(), fact))
}

/// `H_n(x)`, evaluated directly.
pub fn hilbert_eval(n: u64, x: &Rational) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc = acc * (x - Rational::from_integer(i.into())) / Rational::from_integer((i + 1).into());
    }
    acc
}

/// `φ(ν) = H_{ℓ(ν)}(X)`.
pub fn phi_qsym(nu: &Composition) -> Polynomial1 {
    hilbert_poly(nu.len() as u64)
}

pub fn phi_qsym_lin(a: &QSymElem) -> Polynomial1 {
    a.iter().fold(Polynomial1::zero(), |acc, (nu, c)| {
        &acc + &phi_qsym(nu).scale(c)
    })
}

/// A permutation of `[n]` in one-line notation.
///
/// Ordered by size, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::malformed(format!("{word:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Self(word))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Self(other.0.iter().map(|&v| self.0[v - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self(inv)
    }

    /// `σ ⊗ τ`, acting as `σ` on `[k]` and as shifted `τ` on the rest.
    pub fn tensor(&self, other: &Permutation) -> Permutation {
        let k = self.0.len();
        let mut w = self.0.clone();
        w.extend(other.0.iter().map(|&v| v + k));
        Self(w)
    }

    /// The permutation matrix `μ(σ)`, with a 1 at `(σ(j), j)`.
    pub fn to_matrix(&self) -> PackedMatrix {
        let m: Matrix = map_matrix(&self.0, self.0.len()).expect("permutation words are in range");
        PackedMatrix::new_unchecked(m)
    }

    /// Inverse of [`Permutation::to_matrix`]; `None` unless `m` is a permutation matrix.
    pub fn from_matrix(m: &Matrix) -> Option<Permutation> {
        if !crate::hopfpack::is_permutation_matrix(m) {
            return None;
        }
        let n = m.cols();
        let word = (0..n)
            .map(|j| (0..n).find(|&i| m.get(i, j) == 1).map(|i| i + 1))
            .collect::<Option<Vec<_>>>()?;
        Some(Self(word))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Basis for Permutation {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

fn shuffle_perms(k: usize, l: usize) -> Vec<Permutation> {
    sh_cached(k, l)
        .iter()
        .map(|s| Permutation(s.word().to_vec()))
        .collect()
}

/// `σ ★ τ = Σ_{α∈sh(k,l)} α ∘ (σ⊗τ) ∘ α⁻¹`.
pub fn star_product(sigma: &Permutation, tau: &Permutation) -> LinComb<Permutation> {
    let mid = sigma.tensor(tau);
    let mut out = LinComb::zero();
    for a in shuffle_perms(sigma.len(), tau.len()) {
        out.add_term(a.compose(&mid).compose(&a.inverse()), Rational::one());
    }
    out
}

/// `σ ⧧ τ = Σ_{α,β∈sh(k,l)} α ∘ (σ⊗τ) ∘ β⁻¹`.
pub fn perm_shuffle(sigma: &Permutation, tau: &Permutation) -> LinComb<Permutation> {
    let mid = sigma.tensor(tau);
    let sh = shuffle_perms(sigma.len(), tau.len());
    let mut out = LinComb::zero();
    for a in &sh {
        let left = a.compose(&mid);
        for b in &sh {
            out.add_term(left.compose(&b.inverse()), Rational::one());
        }
    }
    out
}
