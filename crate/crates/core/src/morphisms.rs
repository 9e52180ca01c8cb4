//! Maps between packed matrices, NSym, QSym and `ℚ[X]`.

use num_bigint::BigInt;
use num_traits::One;

use crate::counts::{enumerate_pack, packed_supports};
use crate::error::Result;
use crate::exactlin::{LinComb, Rational};
use crate::hopfpack::{block_cuts, split_at_cut, HMatElem, HPackElem};
use crate::limits::Limits;
use crate::matrices::{diag_of, Composition, Matrix, PackedMatrix};
use crate::nsymqsym::{hilbert_eval, hilbert_poly, NSymElem, Polynomial1, QSymElem};
use crate::surjections::inc_cached;

/// The parameters `(x, y)` of `K_{x,y}` and `κ_{x,y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPair {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPair {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    /// `H_{row(M)}(x) H_{col(M)}(y)`.
    fn weight_of(&self, m: &Matrix) -> Rational {
        hilbert_eval(m.rows() as u64, &self.x) * hilbert_eval(m.cols() as u64, &self.y)
    }
}

/// `Θ(M) = D_{Comp(M)}`.
pub fn theta_big(m: &PackedMatrix) -> NSymElem {
    LinComb::basis(m.comp())
}

pub fn theta_big_lin(a: &HPackElem) -> NSymElem {
    a.flat_map(theta_big)
}

fn searrow_mat(a: &HMatElem, b: &HMatElem) -> HMatElem {
    crate::exactlin::bilinear(a, b, |x, y| LinComb::basis(x.block_diag(y)))
}

/// `K'_{k,l}(a) = W(a_1) ↘ … ↘ W(a_n)` where `W(m)` is the sum of all
/// `k×l` matrices of weight `m` (so `W(0) = 0_{k,l}`).
pub fn kprime(k: usize, l: usize, a: &[u64], limits: &Limits) -> Result<HMatElem> {
    let mut out = LinComb::basis(Matrix::empty());
    for &part in a {
        limits.check_shell("max-weight", part)?;
        let mut shell = LinComb::zero();
        for_each_weighted_grid(k * l, part, |e| {
            shell.add_term(
                Matrix::from_parts_unchecked(k, l, e.to_vec()),
                Rational::one(),
            );
        });
        out = searrow_mat(&out, &shell);
    }
    Ok(out)
}

fn for_each_weighted_grid(cells: usize, weight: u64, mut f: impl FnMut(&[u64])) {
    fn rec(e: &mut Vec<u64>, cells: usize, left: u64, f: &mut impl FnMut(&[u64])) {
        if e.len() + 1 == cells {
            e.push(left);
            f(e);
            e.pop();
            return;
        }
        for v in 0..=left {
            e.push(v);
            rec(e, cells, left - v, f);
            e.pop();
        }
    }
    if cells > 0 {
        rec(&mut Vec::with_capacity(cells), cells, weight, &mut f);
    }
}

/// `K_{x,y}(a) = Σ Π H_{row(M_i)}(x) H_{col(M_i)}(y) M_1 ↘ … ↘ M_n`
/// over `M_i ∈ Pack` with `ω(M_i) = a_i`.
pub fn k_xy(p: &RationalPair, a: &Composition, limits: &Limits) -> Result<HPackElem> {
    let mut out = LinComb::basis(PackedMatrix::empty());
    for &part in a.parts() {
        let shell: HPackElem = enumerate_pack(part, limits)?
            .iter()
            .map(|m| (m.clone(), p.weight_of(m)))
            .collect();
        out = crate::hopfpack::searrow(&out, &shell);
    }
    Ok(out)
}

pub fn k_xy_lin(p: &RationalPair, a: &NSymElem, limits: &Limits) -> Result<HPackElem> {
    a.try_flat_map(|c| k_xy(p, c, limits))
}

/// `θ(ν) = Σ_{M ∈ Pack, Comp(M) = ν} M`.
///
/// Built from the packed 0/1 supports with `ℓ(ν)` ones, filled with the
/// parts of `ν` in reading order.
pub fn theta_q(nu: &Composition, limits: &Limits) -> Result<HPackElem> {
    let supports = packed_supports(nu.len() as u64, limits)?;
    let mut out = LinComb::zero();
    for s in supports.iter() {
        let mut parts = nu.parts().iter();
        let entries = s
            .entries()
            .iter()
            .map(|&e| if e == 1 { *parts.next().unwrap() } else { 0 })
            .collect();
        let m = Matrix::from_parts_unchecked(s.rows(), s.cols(), entries);
        out.add_term(PackedMatrix::new_unchecked(m), Rational::one());
    }
    Ok(out)
}

pub fn theta_q_lin(a: &QSymElem, limits: &Limits) -> Result<HPackElem> {
    a.try_flat_map(|nu| theta_q(nu, limits))
}

/// `κ_{x,y}(M) = Σ_{M = M_1 ↘ … ↘ M_k} Π H_{row(M_i)}(x) H_{col(M_i)}(y) (ω(M_1), …, ω(M_k))`
/// over factorizations into nonempty blocks.
pub fn kappa_xy(p: &RationalPair, m: &PackedMatrix) -> QSymElem {
    let mut out = LinComb::zero();
    kappa_rec(p, m, Vec::new(), Rational::one(), &mut out);
    out
}

fn kappa_rec(
    p: &RationalPair,
    rest: &PackedMatrix,
    mut prefix: Vec<u64>,
    coeff: Rational,
    out: &mut QSymElem,
) {
    if rest.is_empty() {
        out.add_term(Composition::new_unchecked(prefix), coeff);
        return;
    }
    // The first block is cut at an interior point, or is everything that is left.
    for cut in block_cuts(rest) {
        let (head, tail) = split_at_cut(rest, cut);
        let mut next = prefix.clone();
        next.push(head.weight());
        kappa_rec(p, &tail, next, &coeff * p.weight_of(&head), out);
    }
    let c = &coeff * p.weight_of(rest);
    prefix.push(rest.weight());
    out.add_term(Composition::new_unchecked(prefix), c);
}

pub fn kappa_xy_lin(p: &RationalPair, a: &HPackElem) -> QSymElem {
    a.flat_map(|m| kappa_xy(p, m))
}

/// `Υ(M) = Σ_{σ∈inc(row(M)), τ∈inc(col(M))} μ(σ) M μ(τ)ᵀ / (σ! τ!)`.
pub fn upsilon(m: &PackedMatrix) -> HPackElem {
    let rows = inc_cached(m.rows());
    let cols = inc_cached(m.cols());
    let mut out = LinComb::zero();
    for s in rows.iter() {
        for t in cols.iter() {
            let key = m.sandwich_surj(s.word(), s.target(), t.word(), t.target());
            out.add_term(
                key,
                Rational::new(BigInt::one(), s.factorial() * t.factorial()),
            );
        }
    }
    out
}

pub fn upsilon_lin(a: &HPackElem) -> HPackElem {
    a.flat_map(upsilon)
}

/// `φ(M) = H_{row(M)}(X)` for diagonal `M`, and 0 otherwise.
pub fn phi_hpack(m: &PackedMatrix) -> Polynomial1 {
    match diag_of(m) {
        Some(_) => hilbert_poly(m.rows() as u64),
        None => Polynomial1::zero(),
    }
}

pub fn phi_hpack_lin(a: &HPackElem) -> Polynomial1 {
    a.iter().fold(Polynomial1::zero(), |acc, (m, c)| {
        &acc + &phi_hpack(m).scale(c)
    })
}

/// `T`, transposing every key.
pub fn transpose_morphism(a: &HPackElem) -> HPackElem {
    a.map_keys(|m| m.transpose())
}
