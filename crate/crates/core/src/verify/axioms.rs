//! Linear structure, matrices, surjections, the packed-matrix bialgebras and
//! NSym/QSym.

use std::collections::HashMap;

use rand::Rng;
use rayon::prelude::*;

use super::{
    apply_left, apply_right, for_all, m1324, random_rational, show, Check, Ctx, IdentityFn,
};
use crate::error::Result;
use crate::exactlin::{pairing, tensor, LinComb, Rational};
use crate::hopfpack::{
    antipode, coproduct_black, coproduct_black_mat, counit, deconcat, is_permutation_matrix,
    legwise, quasi_shuffle, searrow, second_coproduct, CounitKind, HPack2, HPackElem,
};
use crate::matrices::{compositions_of, map_matrix, Composition, Matrix, PackedMatrix};
use crate::nsymqsym::{
    eulerian_idempotent, hilbert_eval, internal_product, nsym_concat, nsym_coproduct,
    nsym_coproduct_lin, nsym_product, phi_qsym, phi_qsym_lin, qsym_deconcat, qsym_delta,
    qsym_quasi_shuffle,
};
use crate::surjections::{
    enumerate_adm, enumerate_inc, enumerate_qsh, enumerate_sh, hoffman_sides, AdmPair,
};

pub(super) fn identities() -> Vec<(&'static str, IdentityFn)> {
    vec![
        ("linear combinations form a vector space", linear_laws),
        ("pack preserves weight and is idempotent", pack_laws),
        ("comp commutes with pack", comp_pack),
        ("transpose commutes with pack", transpose_pack),
        ("map_matrix is functorial", map_matrix_functorial),
        ("|sh(k,l)| = C(k+l,k)", sh_count),
        ("|inc(k)| = 2^(k-1)", inc_count),
        ("sh(k,l) is contained in qsh(k,l)", sh_in_qsh),
        ("Adm(k) pairs are admissible and distinct", adm_valid),
        ("Hoffman identity", hoffman),
        ("▲ coassociative", coassoc_black),
        ("Δ coassociative", coassoc_deconcat),
        ("δ coassociative", coassoc_delta),
        ("▲ multiplicative for ↘", black_multiplicative),
        ("δ multiplicative for ⧆", delta_multiplicative),
        ("antipode convolution", antipode_axiom),
        ("ε_▲ counit", counit_black),
        ("ε_Δ counit", counit_deconcat),
        ("ε_δ counit", counit_delta),
        ("infinitesimal bialgebra (↘, Δ)", infinitesimal),
        ("double bialgebra (⧆, Δ, δ)", double_bialgebra),
        ("transpose commutes with ⧆ and δ", transpose_equivariance),
        ("truncations and permutation matrices closed", closure),
        ("packing is a biideal for ▲", biideal),
        ("∘ distributes over ∗", internal_distributive),
        ("▲ multiplicative for ∘", internal_coproduct),
        ("(n) is the ∘ unit", internal_unit),
        ("∘ associative", internal_associative),
        ("QSym double bialgebra (⧆, Δ, δ)", qsym_double_bialgebra),
        ("φ_QSym multiplicative", phi_qsym_multiplicative),
        ("H_n(x+y) = Σ H_i(x) H_(n-i)(y)", hilbert_binomial),
        ("Eulerian idempotent primitive", eulerian_primitive),
        ("generator truncations ▲-closed", generator_truncation),
    ]
}

fn empty() -> PackedMatrix {
    PackedMatrix::empty()
}

fn random_elem(rng: &mut impl Rng, pool: &[PackedMatrix]) -> HPackElem {
    let mut out = LinComb::zero();
    for _ in 0..rng.gen_range(0..=4) {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        // Coefficients may cancel, which exercises normalization.
        out.add_term(m, Rational::from_integer(rng.gen_range(-2i64..=2).into()));
    }
    out
}

fn random_matrix(rng: &mut impl Rng, max_side: usize, max_entry: u64) -> Matrix {
    let (r, c) = (rng.gen_range(1..=max_side), rng.gen_range(1..=max_side));
    let entries = (0..r * c)
        .map(|_| {
            if rng.gen_bool(0.5) {
                0
            } else {
                rng.gen_range(1..=max_entry)
            }
        })
        .collect();
    Matrix::new(r, c, entries).expect("small matrix")
}

fn linear_laws(ctx: &Ctx) -> Result<Check> {
    let pool = ctx.pack_upto(ctx.w.min(3))?;
    let mut rng = ctx.rng();
    let mut c = Check::default();
    for _ in 0..50 {
        let (a, b, d) = (
            random_elem(&mut rng, &pool),
            random_elem(&mut rng, &pool),
            random_elem(&mut rng, &pool),
        );
        let (r, s) = (random_rational(&mut rng), random_rational(&mut rng));
        let inputs = || vec![show(&a), show(&b), show(&d), show(&r), show(&s)];
        c.eq(&((&a + &b) + d.clone()), &(a.clone() + (&b + &d)), inputs);
        c.eq(&(&a + &b), &(&b + &a), inputs);
        c.eq(&(&a + &b).scale(&r), &(a.scale(&r) + b.scale(&r)), inputs);
        c.eq(&a.scale(&(&r * &s)), &a.scale(&s).scale(&r), inputs);
        c.eq(&pairing(&a, &b), &pairing(&b, &a), inputs);
        c.eq(
            &pairing(&(a.scale(&r) + b.clone()), &d),
            &(&r * pairing(&a, &d) + pairing(&b, &d)),
            inputs,
        );
        let cancel = &(&a + &b) - &(&b + &a);
        for x in [
            &a + &b,
            cancel,
            a.scale(&Rational::from_integer(0.into())),
            searrow(&a, &b),
        ] {
            c.holds(x.is_normalized(), inputs, || {
                (show(&x), "normalized".into())
            });
        }
    }
    Ok(c)
}

fn pack_laws(ctx: &Ctx) -> Result<Check> {
    let mut rng = ctx.rng();
    let mut c = Check::default();
    for _ in 0..300 {
        let m = random_matrix(&mut rng, 4, 3);
        let p = m.pack();
        c.eq(&p.weight(), &m.weight(), || vec![show(&m)]);
        c.eq(&p.as_matrix().pack(), &p, || vec![show(&m)]);
    }
    Ok(c)
}

fn comp_pack(ctx: &Ctx) -> Result<Check> {
    let mut rng = ctx.rng();
    let mut c = Check::default();
    for _ in 0..300 {
        let m = random_matrix(&mut rng, 4, 3);
        c.eq(&m.pack().comp(), &m.comp(), || vec![show(&m)]);
    }
    Ok(c)
}

fn transpose_pack(ctx: &Ctx) -> Result<Check> {
    let mut rng = ctx.rng();
    let mut c = Check::default();
    for _ in 0..300 {
        let m = random_matrix(&mut rng, 4, 3);
        c.eq(&m.pack().transpose(), &m.transpose().pack(), || {
            vec![show(&m)]
        });
    }
    Ok(c)
}

fn map_matrix_functorial(ctx: &Ctx) -> Result<Check> {
    let mut rng = ctx.rng();
    let mut c = Check::default();
    for _ in 0..300 {
        let (n, m, p) = (
            rng.gen_range(1..=5),
            rng.gen_range(1..=5),
            rng.gen_range(1..=5),
        );
        let alpha: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=m)).collect();
        let beta: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=p)).collect();
        let composed: Vec<usize> = alpha.iter().map(|&a| beta[a - 1]).collect();
        let lhs = map_matrix(&composed, p)?;
        let rhs = map_matrix(&beta, p)?
            .matmul(&map_matrix(&alpha, m)?)
            .expect("compatible shapes");
        c.eq(&lhs, &rhs, || {
            vec![format!("{alpha:?}"), format!("{beta:?}")]
        });
    }
    Ok(c)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn sh_count(_: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for k in 0..=8 {
        for l in 0..=8 {
            c.eq(&enumerate_sh(k, l).len(), &binomial(k + l, k), || {
                vec![k.to_string(), l.to_string()]
            });
        }
    }
    Ok(c)
}

fn inc_count(_: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for k in 1..=8 {
        c.eq(&enumerate_inc(k).len(), &(1usize << (k - 1)), || {
            vec![k.to_string()]
        });
    }
    Ok(c)
}

fn sh_in_qsh(_: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for k in 0..=5 {
        for l in 0..=5 {
            let qsh = enumerate_qsh(k, l);
            for s in enumerate_sh(k, l) {
                c.holds(
                    qsh.binary_search(&s).is_ok(),
                    || vec![k.to_string(), l.to_string()],
                    || (show(&s), "missing from qsh".into()),
                );
            }
        }
    }
    Ok(c)
}

fn adm_valid(_: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for k in 0..=6 {
        let adm = enumerate_adm(k);
        for p in &adm {
            let ok = p.first.len() == k
                && p.first.is_weakly_increasing()
                && AdmPair::is_admissible(&p.first, &p.second);
            c.holds(
                ok,
                || vec![k.to_string()],
                || (show(&p.first), show(&p.second)),
            );
        }
        let mut sorted = adm.clone();
        sorted.sort();
        sorted.dedup();
        c.eq(&sorted.len(), &adm.len(), || vec![k.to_string()]);
    }
    Ok(c)
}

fn hoffman(_: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for k in 0..=4 {
        for l in 0..=4 {
            let (lhs, rhs) = hoffman_sides(k, l);
            c.eq(&lhs, &rhs, || vec![k.to_string(), l.to_string()]);
        }
    }
    Ok(c)
}

fn coassoc(ctx: &Ctx, cop: impl Fn(&PackedMatrix) -> Result<HPack2> + Sync) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    for_all(&all, |m, c| {
        let t = cop(m)?;
        let lhs = apply_left(&t, &cop)?;
        let rhs = apply_right(&t, &cop)?;
        c.eq(&lhs, &rhs, || vec![show(m)]);
        Ok(())
    })
}

fn coassoc_black(ctx: &Ctx) -> Result<Check> {
    coassoc(ctx, |m| coproduct_black(m, &ctx.limits))
}

fn coassoc_deconcat(ctx: &Ctx) -> Result<Check> {
    coassoc(ctx, |m| Ok(deconcat(m)))
}

/// Exact up to weight 3. Above that the triple tensor of a 4×4 matrix runs to
/// millions of terms, so both sides are evaluated under three seeded random
/// linear functionals `f ⊗ g ⊗ h` instead, with `(f ⊗ g)∘δ` and `(g ⊗ h)∘δ`
/// memoized per matrix.
fn coassoc_delta(ctx: &Ctx) -> Result<Check> {
    let small = Ctx {
        w: ctx.w.min(3),
        ..ctx.clone()
    };
    let mut c = coassoc(&small, |m| Ok(second_coproduct(m)))?;
    if ctx.w <= 3 {
        return Ok(c);
    }
    let all = ctx.pack_upto(ctx.w)?;
    let mut rng = ctx.rng();
    let mut functional = || -> HashMap<PackedMatrix, Rational> {
        all.iter()
            .map(|m| {
                (
                    m.clone(),
                    Rational::from_integer(rng.gen_range(-1_000_000i64..=1_000_000).into()),
                )
            })
            .collect()
    };
    let (f, g, h) = (functional(), functional(), functional());
    let contract = |x: &HashMap<PackedMatrix, Rational>, y: &HashMap<PackedMatrix, Rational>| {
        all.par_iter()
            .map(|m| {
                let v: Rational = second_coproduct(m)
                    .iter()
                    .map(|((a, b), c)| c * &x[a] * &y[b])
                    .sum();
                (m.clone(), v)
            })
            .collect::<HashMap<_, _>>()
    };
    let (fg, gh) = (contract(&f, &g), contract(&g, &h));
    let heavy: Vec<PackedMatrix> = all.into_iter().filter(|m| m.weight() > 3).collect();
    c.absorb(for_all(&heavy, |m, c| {
        let t = second_coproduct(m);
        let lhs: Rational = t.iter().map(|((a, b), k)| k * &fg[a] * &h[b]).sum();
        let rhs: Rational = t.iter().map(|((a, b), k)| k * &f[a] * &gh[b]).sum();
        c.eq(&lhs, &rhs, || vec![show(m), "(f⊗g⊗h) evaluation".into()]);
        Ok(())
    })?);
    Ok(c)
}

fn block(a: &PackedMatrix, b: &PackedMatrix) -> HPackElem {
    LinComb::basis(a.block_diag(b))
}

fn black_multiplicative(ctx: &Ctx) -> Result<Check> {
    let pairs = ctx.pack_pairs(ctx.w)?;
    for_all(&pairs, |(a, b), c| {
        let lhs = coproduct_black(&a.block_diag(b), &ctx.limits)?;
        let rhs = legwise(
            &coproduct_black(a, &ctx.limits)?,
            &coproduct_black(b, &ctx.limits)?,
            block,
        );
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })
}

fn delta_multiplicative(ctx: &Ctx) -> Result<Check> {
    let pairs = ctx.pack_pairs(ctx.w)?;
    for_all(&pairs, |(a, b), c| {
        let lhs = quasi_shuffle(a, b).flat_map(second_coproduct);
        let rhs = legwise(&second_coproduct(a), &second_coproduct(b), quasi_shuffle);
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })
}

fn antipode_axiom(ctx: &Ctx) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    for_all(&all, |m, c| {
        let t = coproduct_black(m, &ctx.limits)?;
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), k) in t.iter() {
            left.add_scaled(
                k,
                &searrow(&antipode(a, &ctx.limits)?, &LinComb::basis(b.clone())),
            );
            right.add_scaled(
                k,
                &searrow(&LinComb::basis(a.clone()), &antipode(b, &ctx.limits)?),
            );
        }
        let unit = LinComb::term(empty(), counit(CounitKind::Black, m));
        c.eq(&left, &unit, || vec![show(m)]);
        c.eq(&right, &unit, || vec![show(m)]);
        Ok(())
    })
}

fn counit_law(
    ctx: &Ctx,
    kind: CounitKind,
    cop: impl Fn(&PackedMatrix) -> Result<HPack2> + Sync,
) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    for_all(&all, |m, c| {
        let t = cop(m)?;
        let left: HPackElem = t.flat_map(|(a, b)| LinComb::term(b.clone(), counit(kind, a)));
        let right: HPackElem = t.flat_map(|(a, b)| LinComb::term(a.clone(), counit(kind, b)));
        let id = LinComb::basis(m.clone());
        c.eq(&left, &id, || vec![show(m)]);
        c.eq(&right, &id, || vec![show(m)]);
        Ok(())
    })
}

fn counit_black(ctx: &Ctx) -> Result<Check> {
    counit_law(ctx, CounitKind::Black, |m| coproduct_black(m, &ctx.limits))
}

fn counit_deconcat(ctx: &Ctx) -> Result<Check> {
    counit_law(ctx, CounitKind::Deconcat, |m| Ok(deconcat(m)))
}

fn counit_delta(ctx: &Ctx) -> Result<Check> {
    counit_law(ctx, CounitKind::Delta, |m| Ok(second_coproduct(m)))
}

fn infinitesimal(ctx: &Ctx) -> Result<Check> {
    let pairs = ctx.pack_pairs(ctx.w)?;
    for_all(&pairs, |(a, b), c| {
        let lhs = deconcat(&a.block_diag(b));
        let rhs = legwise(&deconcat(a), &LinComb::basis((empty(), b.clone())), block)
            + legwise(&LinComb::basis((a.clone(), empty())), &deconcat(b), block)
            - LinComb::basis((a.clone(), b.clone()));
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })
}

fn double_bialgebra(ctx: &Ctx) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    for_all(&all, |m, c| {
        let lhs = apply_left(&second_coproduct(m), |x| Ok(deconcat(x)))?;
        let rhs = m1324(&deconcat(m), |x| Ok(second_coproduct(x)), quasi_shuffle)?;
        c.eq(&lhs, &rhs, || vec![show(m)]);
        Ok(())
    })
}

fn transpose_equivariance(ctx: &Ctx) -> Result<Check> {
    let pairs = ctx.pack_pairs(ctx.w)?;
    let mut out = for_all(&pairs, |(a, b), c| {
        let lhs = quasi_shuffle(a, b).map_keys(|m| m.transpose());
        let rhs = quasi_shuffle(&a.transpose(), &b.transpose());
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })?;
    let all = ctx.pack_upto(ctx.w)?;
    out.absorb(for_all(&all, |m, c| {
        let lhs = second_coproduct(m).map_keys(|(x, y)| (x.transpose(), y.transpose()));
        let rhs = second_coproduct(&m.transpose());
        c.eq(&lhs, &rhs, || vec![show(m)]);
        Ok(())
    })?);
    Ok(out)
}

fn closure(ctx: &Ctx) -> Result<Check> {
    let pairs = ctx.pack_pairs(ctx.w)?;
    for_all(&pairs, |(a, b), c| {
        let n = a.max_entry().max(b.max_entry());
        let s = a.block_diag(b);
        c.holds(
            s.max_entry() <= n,
            || vec![show(a), show(b)],
            || (show(&s), format!("max entry {n}")),
        );
        if b.is_empty() {
            for (x, y) in coproduct_black(a, &ctx.limits)?.keys() {
                let ok = x.max_entry() <= a.max_entry() && y.max_entry() <= a.max_entry();
                c.holds(
                    ok,
                    || vec![show(a)],
                    || (format!("{x} ⊗ {y}"), format!("max entry {}", a.max_entry())),
                );
                if is_permutation_matrix(a) {
                    let ok = [x, y]
                        .iter()
                        .all(|z| z.is_empty() || is_permutation_matrix(z));
                    c.holds(
                        ok,
                        || vec![show(a)],
                        || (format!("{x} ⊗ {y}"), "permutation legs".into()),
                    );
                }
            }
        }
        Ok(())
    })
}

fn biideal(ctx: &Ctx) -> Result<Check> {
    let mut rng = ctx.rng();
    let samples: Vec<Matrix> = (0..200).map(|_| random_matrix(&mut rng, 3, 2)).collect();
    for_all(&samples, |m, c| {
        let lhs: HPack2 = coproduct_black_mat(m, &ctx.limits)?
            .flat_map(|(a, b)| LinComb::basis((a.pack(), b.pack())));
        let rhs = coproduct_black(&m.pack(), &ctx.limits)?;
        c.eq(&lhs, &rhs, || vec![show(m)]);
        Ok(())
    })
}

fn comps_of_weight_upto(w: u64) -> Vec<Composition> {
    (0..=w).flat_map(compositions_of).collect()
}

fn internal_distributive(ctx: &Ctx) -> Result<Check> {
    let all = comps_of_weight_upto(ctx.w);
    let mut triples = Vec::new();
    for cc in &all {
        for a in &all {
            for b in &all {
                if a.weight() + b.weight() == cc.weight() {
                    triples.push((a.clone(), b.clone(), cc.clone()));
                }
            }
        }
    }
    for_all(&triples, |(a, b, cc), c| {
        let lhs = internal_product(&nsym_concat(a, b), cc);
        let mut rhs = LinComb::zero();
        for ((c1, c2), k) in nsym_coproduct(cc).iter() {
            rhs.add_scaled(
                k,
                &nsym_product(&internal_product(a, c1), &internal_product(b, c2)),
            );
        }
        c.eq(&lhs, &rhs, || vec![show(a), show(b), show(cc)]);
        Ok(())
    })
}

fn same_degree_pairs(w: u64) -> Vec<(Composition, Composition)> {
    (0..=w)
        .flat_map(|n| {
            let cs = compositions_of(n);
            cs.iter()
                .flat_map(|a| cs.iter().map(move |b| (a.clone(), b.clone())))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn internal_coproduct(ctx: &Ctx) -> Result<Check> {
    let pairs = same_degree_pairs(ctx.w);
    for_all(&pairs, |(a, b), c| {
        let lhs = nsym_coproduct_lin(&internal_product(a, b));
        let rhs = legwise(&nsym_coproduct(a), &nsym_coproduct(b), internal_product);
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })
}

fn internal_unit(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for mu in comps_of_weight_upto(ctx.w.max(6)) {
        let n = mu.weight();
        let unit = if n == 0 {
            Composition::empty()
        } else {
            Composition::new(vec![n])?
        };
        let id = LinComb::basis(mu.clone());
        c.eq(&internal_product(&unit, &mu), &id, || vec![show(&mu)]);
        c.eq(&internal_product(&mu, &unit), &id, || vec![show(&mu)]);
    }
    Ok(c)
}

fn internal_associative(ctx: &Ctx) -> Result<Check> {
    let mut triples = Vec::new();
    for n in 0..=ctx.w {
        let cs = compositions_of(n);
        for a in &cs {
            for b in &cs {
                for d in &cs {
                    triples.push((a.clone(), b.clone(), d.clone()));
                }
            }
        }
    }
    for_all(&triples, |(a, b, d), c| {
        let lhs = internal_product(a, b).flat_map(|x| internal_product(x, d));
        let rhs = internal_product(b, d).flat_map(|x| internal_product(a, x));
        c.eq(&lhs, &rhs, || vec![show(a), show(b), show(d)]);
        Ok(())
    })
}

fn qsym_double_bialgebra(ctx: &Ctx) -> Result<Check> {
    let all = comps_of_weight_upto(ctx.w);
    for_all(&all, |nu, c| {
        let lhs = apply_left(&qsym_delta(nu, &ctx.limits)?, |x| Ok(qsym_deconcat(x)))?;
        let rhs = m1324(
            &qsym_deconcat(nu),
            |x| qsym_delta(x, &ctx.limits),
            qsym_quasi_shuffle,
        )?;
        c.eq(&lhs, &rhs, || vec![show(nu)]);
        Ok(())
    })
}

fn phi_qsym_multiplicative(ctx: &Ctx) -> Result<Check> {
    let pairs = ctx.comp_pairs(ctx.w);
    for_all(&pairs, |(a, b), c| {
        let lhs = phi_qsym_lin(&qsym_quasi_shuffle(a, b));
        let rhs = &phi_qsym(a) * &phi_qsym(b);
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })
}

fn hilbert_binomial(ctx: &Ctx) -> Result<Check> {
    let mut rng = ctx.rng();
    let mut c = Check::default();
    for _ in 0..20 {
        let (x, y) = (random_rational(&mut rng), random_rational(&mut rng));
        for n in 0..=6u64 {
            let lhs = hilbert_eval(n, &(&x + &y));
            let rhs: Rational = (0..=n)
                .map(|i| hilbert_eval(i, &x) * hilbert_eval(n - i, &y))
                .sum();
            c.eq(&lhs, &rhs, || vec![n.to_string(), show(&x), show(&y)]);
        }
    }
    Ok(c)
}

fn eulerian_primitive(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for n in 1..=ctx.w.max(4) {
        let e = eulerian_idempotent(n);
        let one = LinComb::basis(Composition::empty());
        let lhs = nsym_coproduct_lin(&e);
        let rhs = tensor(&e, &one) + tensor(&one, &e);
        c.eq(&lhs, &rhs, || vec![n.to_string()]);
    }
    Ok(c)
}

fn generator_truncation(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for nu in comps_of_weight_upto(ctx.w.max(5)) {
        let n = nu.parts().iter().copied().max().unwrap_or(0);
        for (x, y) in nsym_coproduct(&nu).keys() {
            let ok = x.parts().iter().chain(y.parts()).all(|&p| p <= n);
            c.holds(
                ok,
                || vec![show(&nu)],
                || (format!("{x} ⊗ {y}"), format!("parts at most {n}")),
            );
        }
    }
    Ok(c)
}
