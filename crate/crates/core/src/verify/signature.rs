//! Numerical identities of the polynomial realization on random grids.

use std::collections::HashMap;

use rand::Rng;

use super::{for_all, random_rational, show, Check, Ctx, IdentityFn};
use crate::error::Result;
use crate::exactlin::{LinComb, Rational};
use crate::hopfpack::{deconcat, quasi_shuffle, second_coproduct, HPack2, HPackElem};
use crate::matrices::PackedMatrix;
use crate::realization::{classify, evaluate, phi_formal, Grid, Monomial2};

pub(super) fn identities() -> Vec<(&'static str, IdentityFn)> {
    vec![
        ("Φ_M Φ_M' = Φ_(M⧆M')", multiplicative),
        ("block-diagonal grids realize Δ", block_deconcat),
        ("Kronecker grids realize δ", kronecker_delta),
        ("Φ_M is the sum of its classify fiber", classify_fibers),
        ("Φ_(Mᵀ)(gᵀ) = Φ_M(g)", transpose),
    ]
}

fn random_grid(rng: &mut impl Rng, max_side: usize) -> Grid {
    let (r, c) = (rng.gen_range(1..=max_side), rng.gen_range(1..=max_side));
    let values = (0..r * c).map(|_| random_rational(rng)).collect();
    Grid::new(r, c, values).expect("nonempty grid")
}

/// Evaluations on one grid, memoized per matrix.
struct Evaluator<'a> {
    grid: &'a Grid,
    memo: HashMap<PackedMatrix, Rational>,
}

impl<'a> Evaluator<'a> {
    fn new(grid: &'a Grid) -> Self {
        Self {
            grid,
            memo: HashMap::new(),
        }
    }

    fn at(&mut self, m: &PackedMatrix) -> Rational {
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        let v = evaluate(m, self.grid);
        self.memo.insert(m.clone(), v.clone());
        v
    }

    fn lin(&mut self, a: &HPackElem) -> Rational {
        a.iter().map(|(m, c)| c * self.at(m)).sum()
    }
}

fn multiplicative(ctx: &Ctx) -> Result<Check> {
    let mut rng = ctx.rng();
    let grids: Vec<Grid> = (0..50).map(|_| random_grid(&mut rng, 4)).collect();
    let products: Vec<(PackedMatrix, PackedMatrix, HPackElem)> = ctx
        .pack_pairs(ctx.w)?
        .into_iter()
        .map(|(a, b)| {
            let p = quasi_shuffle(&a, &b);
            (a, b, p)
        })
        .collect();
    for_all(&grids, |g, c| {
        let mut ev = Evaluator::new(g);
        for (a, b, p) in &products {
            let lhs = ev.at(a) * ev.at(b);
            let rhs = ev.lin(p);
            c.eq(&lhs, &rhs, || vec![show(a), show(b), format!("{g:?}")]);
            if c.failed() {
                break;
            }
        }
        Ok(())
    })
}

/// `Σ c Φ_a(u) Φ_b(v)` over `t = Σ c a ⊗ b`.
fn split_eval(t: &HPack2, u: &mut Evaluator, v: &mut Evaluator) -> Rational {
    t.iter().map(|((a, b), c)| c * u.at(a) * v.at(b)).sum()
}

fn grid_pairs(ctx: &Ctx, n: usize) -> Vec<(Grid, Grid)> {
    let mut rng = ctx.rng();
    (0..n)
        .map(|_| (random_grid(&mut rng, 3), random_grid(&mut rng, 3)))
        .collect()
}

fn block_deconcat(ctx: &Ctx) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    let samples = grid_pairs(ctx, 20);
    for_all(&samples, |(g1, g2), c| {
        let g = g1.block_diag(g2);
        let (mut u, mut v) = (Evaluator::new(g1), Evaluator::new(g2));
        for m in &all {
            let lhs = evaluate(m, &g);
            let rhs = split_eval(&deconcat(m), &mut u, &mut v);
            c.eq(&lhs, &rhs, || {
                vec![show(m), format!("{g1:?}"), format!("{g2:?}")]
            });
        }
        Ok(())
    })
}

fn kronecker_delta(ctx: &Ctx) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    let samples = grid_pairs(ctx, 5);
    for_all(&samples, |(g1, g2), c| {
        let g = g1.kronecker(g2);
        let (mut u, mut v) = (Evaluator::new(g1), Evaluator::new(g2));
        for m in &all {
            let lhs = evaluate(m, &g);
            let rhs = split_eval(&second_coproduct(m), &mut u, &mut v);
            c.eq(&lhs, &rhs, || {
                vec![show(m), format!("{g1:?}"), format!("{g2:?}")]
            });
        }
        Ok(())
    })
}

/// Every monomial of degree `d` in the variables `t_{i,j}`, `i ≤ m`, `j ≤ n`.
fn monomials(m: usize, n: usize, d: u64) -> Vec<Monomial2> {
    let vars: Vec<(usize, usize)> = (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u64; vars.len()];
    fn rec(
        idx: usize,
        left: u64,
        exps: &mut [u64],
        vars: &[(usize, usize)],
        out: &mut Vec<Monomial2>,
    ) {
        if idx + 1 == exps.len() {
            exps[idx] = left;
            out.push(Monomial2::new(
                vars.iter()
                    .copied()
                    .zip(exps.iter().copied())
                    .filter(|&(_, e)| e > 0),
            ));
            exps[idx] = 0;
            return;
        }
        for e in 0..=left {
            exps[idx] = e;
            rec(idx + 1, left - e, exps, vars, out);
        }
        exps[idx] = 0;
    }
    rec(0, d, &mut exps, &vars, &mut out);
    out
}

fn classify_fibers(ctx: &Ctx) -> Result<Check> {
    let mut shapes = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            for d in 0..=ctx.w {
                shapes.push((m, n, d));
            }
        }
    }
    let limits = &ctx.limits;
    for_all(&shapes, |&(m, n, d), c| {
        let mut fibers: LinComb<(PackedMatrix, Monomial2)> = LinComb::zero();
        for mono in monomials(m, n, d) {
            fibers.add_term((classify(&mono), mono), Rational::from_integer(1.into()));
        }
        let mut formal: LinComb<(PackedMatrix, Monomial2)> = LinComb::zero();
        for mat in crate::counts::enumerate_pack(d, limits)?.iter() {
            formal += &phi_formal(mat, m, n).map_keys(|mono| (mat.clone(), mono.clone()));
        }
        super::compare_tables(c, &fibers, &formal, |(mat, mono)| {
            vec![format!("{m}×{n}"), show(mat), show(mono)]
        });
        Ok(())
    })
}

fn transpose(ctx: &Ctx) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    let mut rng = ctx.rng();
    let grids: Vec<Grid> = (0..20).map(|_| random_grid(&mut rng, 4)).collect();
    for_all(&grids, |g, c| {
        let gt = g.transpose();
        for m in &all {
            c.eq(&evaluate(&m.transpose(), &gt), &evaluate(m, g), || {
                vec![show(m), format!("{g:?}")]
            });
        }
        Ok(())
    })
}
