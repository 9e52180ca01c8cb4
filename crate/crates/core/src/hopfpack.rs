//! Products, coproducts, counits and the antipode on packed matrices.
//!
//! `↘` is block-diagonal concatenation, `▲` splits entries, `Δ` cuts
//! block-diagonal factorizations, `⧆` and `⧧` sandwich `M ↘ M'` between
//! quasi-shuffle and shuffle matrices, and `δ` sandwiches `M` between
//! admissible pairs on rows and columns.

use std::collections::HashMap;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{LinComb, Rational};
use crate::limits::Limits;
use crate::matrices::{Matrix, PackedMatrix};
use crate::surjections::{adm_cached, qsh_cached, sh_cached, Surjection};

/// An element of the algebra spanned by packed matrices.
pub type HPackElem = LinComb<PackedMatrix>;
/// An element of the algebra spanned by all matrices (no packing quotient).
pub type HMatElem = LinComb<Matrix>;
/// An element of `H_Pack ⊗ H_Pack`.
pub type HPack2 = LinComb<(PackedMatrix, PackedMatrix)>;

/// `a ↘ b`, extended bilinearly.
pub fn searrow(a: &HPackElem, b: &HPackElem) -> HPackElem {
    crate::exactlin::bilinear(a, b, |x, y| LinComb::basis(x.block_diag(y)))
}

/// Calls `f(M')` for every entrywise splitting `M = M' + M''`.
pub(crate) fn for_each_split(m: &Matrix, mut f: impl FnMut(&[u64])) {
    let bounds = m.entries();
    let mut cur = vec![0u64; bounds.len()];
    loop {
        f(&cur);
        // Mixed-radix increment with digit i in 0..=bounds[i].
        let mut i = 0;
        loop {
            if i == cur.len() {
                return;
            }
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

fn split_pair(m: &Matrix, first: &[u64]) -> (Matrix, Matrix) {
    let second = m.entries().iter().zip(first).map(|(a, b)| a - b).collect();
    (
        Matrix::from_parts_unchecked(m.rows(), m.cols(), first.to_vec()),
        Matrix::from_parts_unchecked(m.rows(), m.cols(), second),
    )
}

/// `▲(M) = Σ_{M = M' + M''} p(M') ⊗ p(M'')`.
///
/// Visits `Π (m_ij + 1)` splittings; refused above `limits.coproduct_weight`.
pub fn coproduct_black(m: &PackedMatrix, limits: &Limits) -> Result<HPack2> {
    limits.check_coproduct(m.weight())?;
    let mut out = LinComb::zero();
    for_each_split(m, |first| {
        let (a, b) = split_pair(m, first);
        out.add_term((a.pack(), b.pack()), Rational::one());
    });
    Ok(out)
}

/// The terms of `▲(M)` whose legs have `row(M') + row(M'') = row(M)` and
/// `col(M') + col(M'') = col(M)`.
pub fn coproduct_black_res(m: &PackedMatrix, limits: &Limits) -> Result<HPack2> {
    let (r, c) = (m.rows(), m.cols());
    let full = coproduct_black(m, limits)?;
    Ok(full
        .into_iter()
        .filter(|((a, b), _)| a.rows() + b.rows() == r && a.cols() + b.cols() == c)
        .collect())
}

/// `▲` on arbitrary matrices, without packing: `Σ_{M = M' + M''} M' ⊗ M''`.
pub fn coproduct_black_mat(m: &Matrix, limits: &Limits) -> Result<LinComb<(Matrix, Matrix)>> {
    limits.check_coproduct(m.weight())?;
    let mut out = LinComb::zero();
    for_each_split(m, |first| {
        out.add_term(split_pair(m, first), Rational::one());
    });
    Ok(out)
}

/// Interior cut points `(r, c)`, `0 < r < row(M)`, `0 < c < col(M)`, at which
/// both off-diagonal blocks vanish.
pub fn block_cuts(m: &Matrix) -> Vec<(usize, usize)> {
    let (k, l) = (m.rows(), m.cols());
    let mut cuts = Vec::new();
    for r in 1..k {
        for c in 1..l {
            let upper_right = (0..r).all(|i| m.row(i)[c..].iter().all(|&e| e == 0));
            let lower_left = (r..k).all(|i| m.row(i)[..c].iter().all(|&e| e == 0));
            if upper_right && lower_left {
                cuts.push((r, c));
            }
        }
    }
    cuts
}

/// The diagonal blocks `(M', M'')` of `M` at cut `(r, c)`.
pub fn split_at_cut(m: &PackedMatrix, (r, c): (usize, usize)) -> (PackedMatrix, PackedMatrix) {
    let (k, l) = (m.rows(), m.cols());
    let mut top = Vec::with_capacity(r * c);
    for i in 0..r {
        top.extend_from_slice(&m.row(i)[..c]);
    }
    let mut bottom = Vec::with_capacity((k - r) * (l - c));
    for i in r..k {
        bottom.extend_from_slice(&m.row(i)[c..]);
    }
    (
        PackedMatrix::new_unchecked(Matrix::from_parts_unchecked(r, c, top)),
        PackedMatrix::new_unchecked(Matrix::from_parts_unchecked(k - r, l - c, bottom)),
    )
}

/// `Δ(M) = Σ_{M = M' ↘ M''} M' ⊗ M''`, including the two trivial terms.
pub fn deconcat(m: &PackedMatrix) -> HPack2 {
    let mut out = LinComb::zero();
    out.add_term((PackedMatrix::empty(), m.clone()), Rational::one());
    if !m.is_empty() {
        out.add_term((m.clone(), PackedMatrix::empty()), Rational::one());
    }
    for cut in block_cuts(m) {
        out.add_term(split_at_cut(m, cut), Rational::one());
    }
    out
}

/// No factorization `M = N ↘ N'` with both factors nonempty.
pub fn is_indecomposable(m: &PackedMatrix) -> bool {
    !m.is_empty() && block_cuts(m).is_empty()
}

fn sandwich_sum(
    a: &PackedMatrix,
    b: &PackedMatrix,
    rows: &[Surjection],
    cols: &[Surjection],
) -> HPackElem {
    let block = a.block_diag(b);
    let mut out = LinComb::zero();
    for s in rows {
        for t in cols {
            let key = block.sandwich_surj(s.word(), s.target(), t.word(), t.target());
            out.add_term(key, Rational::one());
        }
    }
    out
}

/// `M ⧆ M' = Σ_{σ∈qsh(k,k'), τ∈qsh(l,l')} μ(σ)(M↘M')μ(τ)ᵀ`.
pub fn quasi_shuffle(a: &PackedMatrix, b: &PackedMatrix) -> HPackElem {
    let rows = qsh_cached(a.rows(), b.rows());
    let cols = qsh_cached(a.cols(), b.cols());
    sandwich_sum(a, b, &rows, &cols)
}

/// `M ⧧ M'`: as `⧆` with shuffles in place of quasi-shuffles.
pub fn shuffle(a: &PackedMatrix, b: &PackedMatrix) -> HPackElem {
    let rows = sh_cached(a.rows(), b.rows());
    let cols = sh_cached(a.cols(), b.cols());
    sandwich_sum(a, b, &rows, &cols)
}

pub fn quasi_shuffle_lin(a: &HPackElem, b: &HPackElem) -> HPackElem {
    crate::exactlin::bilinear(a, b, quasi_shuffle)
}

pub fn shuffle_lin(a: &HPackElem, b: &HPackElem) -> HPackElem {
    crate::exactlin::bilinear(a, b, shuffle)
}

/// `δ(M) = Σ μ(σ′)Mμ(τ′)ᵀ ⊗ μ(σ″)Mμ(τ″)ᵀ` over admissible pairs on rows and columns.
pub fn second_coproduct(m: &PackedMatrix) -> HPack2 {
    let rows = adm_cached(m.rows());
    let cols = adm_cached(m.cols());
    let mut out = LinComb::zero();
    for r in rows.iter() {
        for c in cols.iter() {
            let left = m.sandwich_surj(
                r.first.word(),
                r.first.target(),
                c.first.word(),
                c.first.target(),
            );
            let right = m.sandwich_surj(
                r.second.word(),
                r.second.target(),
                c.second.word(),
                c.second.target(),
            );
            out.add_term((left, right), Rational::one());
        }
    }
    out
}

/// Which of the three coproducts a counit belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounitKind {
    Black,
    Deconcat,
    Delta,
}

impl FromStr for CounitKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "black" => Ok(Self::Black),
            "deconcat" => Ok(Self::Deconcat),
            "delta" => Ok(Self::Delta),
            other => Err(Error::Usage(format!(
                "unknown counit `{other}` (expected black, deconcat or delta)"
            ))),
        }
    }
}

/// `ε_▲(M) = [ω(M) = 0]`, `ε_Δ(M) = [M = 1]`, `ε_δ(M) = [M is 1×1]`.
///
/// `ε_▲` and `ε_Δ` agree on packed matrices. `ε_δ` also sends the empty matrix
/// to 1, as `δ(1) = 1 ⊗ 1` forces.
pub fn counit(kind: CounitKind, m: &PackedMatrix) -> Rational {
    let hit = match kind {
        CounitKind::Black => m.weight() == 0,
        CounitKind::Deconcat => m.is_empty(),
        CounitKind::Delta => m.is_empty() || (m.rows() == 1 && m.cols() == 1),
    };
    if hit {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub fn counit_lin(kind: CounitKind, a: &HPackElem) -> Rational {
    a.eval(|m| counit(kind, m))
}

/// The antipode of `(H_Pack, ↘, ▲)`:
/// `S(M) = Σ_k (-1)^k Σ_{M = M_1 + … + M_k, ω(M_i) ≠ 0} p(M_1) ↘ … ↘ p(M_k)`.
///
/// Evaluated by peeling off the first summand,
/// `S(M) = -Σ_{0 ≠ M_1 ≤ M} p(M_1) ↘ S(p(M - M_1))`, memoized on packed inputs.
pub fn antipode(m: &PackedMatrix, limits: &Limits) -> Result<HPackElem> {
    limits.check_coproduct(m.weight())?;
    let mut memo = HashMap::new();
    Ok(antipode_memo(m, &mut memo))
}

fn antipode_memo(m: &PackedMatrix, memo: &mut HashMap<PackedMatrix, HPackElem>) -> HPackElem {
    if m.is_empty() {
        return LinComb::basis(PackedMatrix::empty());
    }
    if let Some(v) = memo.get(m) {
        return v.clone();
    }
    let mut splits = Vec::new();
    for_each_split(m, |first| {
        if first.iter().any(|&e| e > 0) {
            let (a, b) = split_pair(m, first);
            splits.push((a.pack(), b.pack()));
        }
    });
    let mut out = LinComb::zero();
    for (head, rest) in splits {
        let tail = antipode_memo(&rest, memo);
        for (t, c) in tail.iter() {
            out.add_term(head.block_diag(t), -c.clone());
        }
    }
    memo.insert(m.clone(), out.clone());
    out
}

pub fn antipode_lin(a: &HPackElem, limits: &Limits) -> Result<HPackElem> {
    limits.check_coproduct(a.keys().map(|m| m.weight()).max().unwrap_or(0))?;
    let mut memo = HashMap::new();
    Ok(a.flat_map(|m| antipode_memo(m, &mut memo)))
}

/// Every entry at most `n`.
pub fn in_truncation(m: &Matrix, n: u64) -> bool {
    m.max_entry() <= n
}

/// Square, with exactly one nonzero entry, equal to 1, in each row and column.
pub fn is_permutation_matrix(m: &Matrix) -> bool {
    m.rows() == m.cols()
        && m.entries().iter().all(|&e| e <= 1)
        && m.row_sums().iter().all(|&s| s == 1)
        && m.col_sums().iter().all(|&s| s == 1)
}

/// Applies `f` leg by leg: `(a ⊗ b, c ⊗ d) ↦ f(a, c) ⊗ f(b, d)`.
pub fn legwise<K: Ord + Clone>(
    x: &LinComb<(K, K)>,
    y: &LinComb<(K, K)>,
    mut f: impl FnMut(&K, &K) -> LinComb<K>,
) -> LinComb<(K, K)> {
    crate::exactlin::bilinear(x, y, |(a, b), (c, d)| {
        crate::exactlin::tensor(&f(a, c), &f(b, d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn p(rows: &[&[u64]]) -> PackedMatrix {
        PackedMatrix::from_rows(rows).unwrap()
    }

    fn one() -> PackedMatrix {
        PackedMatrix::empty()
    }

    fn lc(terms: &[(i64, PackedMatrix)]) -> HPackElem {
        let mut out = LinComb::zero();
        for (c, k) in terms {
            out.add_term(k.clone(), int(*c));
        }
        out
    }

    fn lc2(terms: &[(i64, PackedMatrix, PackedMatrix)]) -> HPack2 {
        let mut out = LinComb::zero();
        for (c, a, b) in terms {
            out.add_term((a.clone(), b.clone()), int(*c));
        }
        out
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn searrow_examples() {
        let a = lc(&[(1, p(&[&[1]]))]);
        let b = lc(&[(1, p(&[&[2]]))]);
        assert_eq!(searrow(&a, &b), lc(&[(1, p(&[&[1, 0], &[0, 2]]))]));
        let m = lc(&[(1, p(&[&[0, 1], &[1, 0]]))]);
        assert_eq!(searrow(&LinComb::basis(one()), &m), m);
        let sum = lc(&[(1, p(&[&[1]])), (1, p(&[&[2]]))]);
        assert_eq!(
            searrow(&sum, &a),
            lc(&[(1, p(&[&[1, 0], &[0, 1]])), (1, p(&[&[2, 0], &[0, 1]]))])
        );
    }

    #[test]
    fn black_examples() {
        assert_eq!(
            coproduct_black(&p(&[&[1]]), &lim()).unwrap(),
            lc2(&[(1, p(&[&[1]]), one()), (1, one(), p(&[&[1]]))])
        );
        assert_eq!(
            coproduct_black(&p(&[&[2]]), &lim()).unwrap(),
            lc2(&[
                (1, p(&[&[2]]), one()),
                (1, one(), p(&[&[2]])),
                (1, p(&[&[1]]), p(&[&[1]]))
            ])
        );
        assert_eq!(
            coproduct_black(&one(), &lim()).unwrap(),
            lc2(&[(1, one(), one())])
        );
        let guard = Limits {
            coproduct_weight: 2,
            ..Limits::default()
        };
        assert!(matches!(
            coproduct_black(&p(&[&[3]]), &guard),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn black_res_examples() {
        let id2 = p(&[&[1, 0], &[0, 1]]);
        // Unit legs keep the bigrade: (0,0) + (k,l) = (k,l).
        assert_eq!(
            coproduct_black_res(&id2, &lim()).unwrap(),
            lc2(&[
                (1, id2.clone(), one()),
                (1, one(), id2.clone()),
                (2, p(&[&[1]]), p(&[&[1]]))
            ])
        );
        assert_eq!(
            coproduct_black_res(&p(&[&[1]]), &lim()).unwrap(),
            lc2(&[(1, p(&[&[1]]), one()), (1, one(), p(&[&[1]]))])
        );
        // [2] = [1] + [1] packs to bigrade (2,2), not (1,1).
        assert_eq!(
            coproduct_black_res(&p(&[&[2]]), &lim()).unwrap(),
            lc2(&[(1, p(&[&[2]]), one()), (1, one(), p(&[&[2]]))])
        );
        assert_eq!(
            coproduct_black_res(&one(), &lim()).unwrap(),
            lc2(&[(1, one(), one())])
        );
    }

    #[test]
    fn deconcat_examples() {
        let m = p(&[&[1, 0], &[0, 2]]);
        assert_eq!(
            deconcat(&m),
            lc2(&[
                (1, m.clone(), one()),
                (1, one(), m.clone()),
                (1, p(&[&[1]]), p(&[&[2]]))
            ])
        );
        let a = p(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            deconcat(&a),
            lc2(&[(1, a.clone(), one()), (1, one(), a.clone())])
        );
        assert_eq!(deconcat(&one()), lc2(&[(1, one(), one())]));
    }

    #[test]
    fn quasi_shuffle_examples() {
        let got = quasi_shuffle(&p(&[&[1]]), &p(&[&[2]]));
        let expected = lc(&[
            (1, p(&[&[1, 0], &[0, 2]])),
            (1, p(&[&[0, 2], &[1, 0]])),
            (1, p(&[&[2, 0], &[0, 1]])),
            (1, p(&[&[0, 1], &[2, 0]])),
            (1, p(&[&[1, 2]])),
            (1, p(&[&[1], &[2]])),
            (1, p(&[&[2, 1]])),
            (1, p(&[&[2], &[1]])),
            (1, p(&[&[3]])),
        ]);
        assert_eq!(got, expected);
        assert_eq!(
            quasi_shuffle(&p(&[&[1]]), &p(&[&[1]])),
            lc(&[
                (2, p(&[&[1, 0], &[0, 1]])),
                (2, p(&[&[0, 1], &[1, 0]])),
                (2, p(&[&[1, 1]])),
                (2, p(&[&[1], &[1]])),
                (1, p(&[&[2]])),
            ])
        );
        let m = p(&[&[1, 2], &[0, 1]]);
        assert_eq!(quasi_shuffle(&one(), &m), LinComb::basis(m.clone()));
    }

    #[test]
    fn shuffle_examples() {
        let got = shuffle(&p(&[&[1]]), &p(&[&[0, 1], &[1, 0]]));
        let expected = lc(&[
            (1, p(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])),
            (2, p(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])),
            (3, p(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])),
            (2, p(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])),
            (1, p(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])),
        ]);
        assert_eq!(got, expected);
        assert_eq!(
            shuffle(&p(&[&[1]]), &p(&[&[1]])),
            lc(&[(2, p(&[&[1, 0], &[0, 1]])), (2, p(&[&[0, 1], &[1, 0]]))])
        );
        let m = p(&[&[2, 1]]);
        assert_eq!(shuffle(&one(), &m), LinComb::basis(m));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            second_coproduct(&p(&[&[3]])),
            lc2(&[(1, p(&[&[3]]), p(&[&[3]]))])
        );
        let ab = p(&[&[1, 1]]);
        assert_eq!(
            second_coproduct(&ab),
            lc2(&[
                (1, p(&[&[2]]), ab.clone()),
                (2, ab.clone(), ab.clone()),
                (1, ab.clone(), p(&[&[2]]))
            ])
        );
        assert_eq!(second_coproduct(&one()), lc2(&[(1, one(), one())]));
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(CounitKind::Delta, &p(&[&[5]])), int(1));
        assert_eq!(counit(CounitKind::Delta, &p(&[&[1, 1]])), int(0));
        assert_eq!(counit(CounitKind::Deconcat, &one()), int(1));
        assert_eq!(counit(CounitKind::Black, &p(&[&[1]])), int(0));
        assert!(matches!("nope".parse::<CounitKind>(), Err(Error::Usage(_))));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(
            antipode(&p(&[&[1]]), &lim()).unwrap(),
            lc(&[(-1, p(&[&[1]]))])
        );
        assert_eq!(
            antipode(&p(&[&[2]]), &lim()).unwrap(),
            lc(&[(-1, p(&[&[2]])), (1, p(&[&[1, 0], &[0, 1]]))])
        );
        assert_eq!(antipode(&one(), &lim()).unwrap(), LinComb::basis(one()));
        // Σ S(M⁽¹⁾) ↘ M⁽²⁾ over ▲([2]).
        let cop = coproduct_black(&p(&[&[2]]), &lim()).unwrap();
        let mut conv = LinComb::zero();
        for ((a, b), c) in cop.iter() {
            let s = antipode(a, &lim()).unwrap();
            conv.add_scaled(c, &searrow(&s, &LinComb::basis(b.clone())));
        }
        assert!(conv.is_zero());
    }

    // Ordered decompositions M = M_1 + … + M_k with nonzero summands.
    fn explicit_antipode(m: &PackedMatrix) -> HPackElem {
        fn rec(rest: &Matrix, acc: PackedMatrix, sign: i64, out: &mut HPackElem) {
            if rest.weight() == 0 {
                out.add_term(acc, int(sign));
                return;
            }
            for_each_split(rest, |first| {
                if first.iter().any(|&e| e > 0) {
                    let (a, b) = split_pair(rest, first);
                    rec(&b, acc.block_diag(&a.pack()), -sign, out);
                }
            });
        }
        let mut out = LinComb::zero();
        rec(m, PackedMatrix::empty(), 1, &mut out);
        out
    }

    #[test]
    fn antipode_matches_ordered_decompositions() {
        for m in [
            p(&[&[1, 1]]),
            p(&[&[3]]),
            p(&[&[1, 0], &[1, 1]]),
            p(&[&[2, 1]]),
            p(&[&[0, 1], &[1, 0]]),
        ] {
            assert_eq!(antipode(&m, &lim()).unwrap(), explicit_antipode(&m), "{m}");
        }
    }

    #[test]
    fn indecomposable_examples() {
        assert!(is_indecomposable(&p(&[&[0, 1], &[1, 0]])));
        assert!(!is_indecomposable(&p(&[&[1, 0], &[0, 1]])));
        assert!(is_indecomposable(&p(&[&[1, 1], &[0, 1]])));
    }

    #[test]
    fn truncation_and_permutations() {
        assert!(in_truncation(&p(&[&[1, 0], &[0, 1]]), 1));
        assert!(!in_truncation(&p(&[&[2]]), 1));
        assert!(in_truncation(&one(), 1));
        assert!(is_permutation_matrix(&p(&[&[0, 1], &[1, 0]])));
        assert!(!is_permutation_matrix(&p(&[&[1, 1]])));
        assert!(is_permutation_matrix(&one()));
    }

    #[test]
    fn packing_is_a_coalgebra_map() {
        let samples = [
            Matrix::from_rows(&[[1, 0], [0, 0], [2, 1]]).unwrap(),
            Matrix::from_rows(&[[0, 0], [0, 0]]).unwrap(),
            Matrix::from_rows(&[[0, 2, 0]]).unwrap(),
        ];
        for m in samples {
            let raw = coproduct_black_mat(&m, &lim()).unwrap();
            let packed = raw.map_keys(|(a, b)| (a.pack(), b.pack()));
            assert_eq!(packed, coproduct_black(&m.pack(), &lim()).unwrap(), "{m}");
        }
    }
}
