//! Morphism identities for Θ, K_xy, θ, κ_xy, Υ, φ and T, and the
//! permutation shuffle.

use num_traits::{One, Pow, Zero};

use super::{for_all, random_pair, show, Check, Ctx, IdentityFn};
use crate::error::Result;
use crate::exactlin::{map_tensor2, tensor, LinComb, Rational};
use crate::hopfpack::{
    coproduct_black, counit, deconcat, quasi_shuffle, quasi_shuffle_lin, second_coproduct, shuffle,
    CounitKind, HPackElem,
};
use crate::matrices::{Composition, PackedMatrix};
use crate::morphisms::{
    k_xy, kappa_xy, phi_hpack, theta_big, theta_q, theta_q_lin, transpose_morphism, upsilon,
    upsilon_lin, RationalPair,
};
use crate::nsymqsym::{
    nsym_concat, nsym_coproduct, nsym_coproduct_lin, nsym_product, perm_shuffle, phi_qsym_lin,
    qsym_counit_delta, qsym_deconcat, qsym_deconcat_lin, qsym_delta, qsym_delta_lin,
    qsym_quasi_shuffle, Permutation,
};

pub(super) fn identities() -> Vec<(&'static str, IdentityFn)> {
    vec![
        ("Θ(M↘M') = Θ(M)∗Θ(M')", theta_big_multiplicative),
        ("(Θ⊗Θ)∘▲ = ▲∘Θ", theta_big_comultiplicative),
        ("K_xy is a bialgebra morphism", k_bialgebra),
        ("θ(a⧆b) = θ(a)⧆θ(b)", theta_multiplicative),
        ("(θ⊗θ)∘Δ = Δ∘θ", theta_deconcat),
        ("(θ⊗θ)∘δ_QSym = δ∘θ", theta_delta),
        ("κ_xy(a⧆b) = κ_xy(a)⧆κ_xy(b)", kappa_multiplicative),
        ("(κ_xy⊗κ_xy)∘Δ = Δ∘κ_xy", kappa_deconcat),
        ("κ_xy triangular on diagonal matrices", kappa_triangular),
        ("κ_11 intertwines δ and ε_δ", kappa_delta),
        ("κ_12 breaks ε_δ on [1 1]", kappa_negative_control),
        ("Υ(M⧧M') = Υ(M)⧆Υ(M')", upsilon_multiplicative),
        ("(Υ⊗Υ)∘Δ = Δ∘Υ", upsilon_deconcat),
        ("φ = φ_QSym∘κ_11", phi_factorization),
        (
            "T is a bialgebra automorphism for (↘, ▲)",
            transpose_bialgebra,
        ),
        (
            "permutation shuffle matches matrix shuffle",
            perm_shuffle_matches,
        ),
    ]
}

fn each_pairs(ctx: &Ctx) -> Result<Vec<(PackedMatrix, PackedMatrix)>> {
    let all = ctx.pack_upto(ctx.w)?;
    Ok(all
        .iter()
        .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
        .collect())
}

fn theta_big_multiplicative(ctx: &Ctx) -> Result<Check> {
    // Cheap enough to run over every pair with each factor up to the bound.
    let pairs = each_pairs(ctx)?;
    for_all(&pairs, |(a, b), c| {
        let lhs = theta_big(&a.block_diag(b));
        let rhs = nsym_product(&theta_big(a), &theta_big(b));
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })
}

fn theta_big_comultiplicative(ctx: &Ctx) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    for_all(&all, |m, c| {
        let lhs = map_tensor2(&coproduct_black(m, &ctx.limits)?, theta_big, theta_big);
        let rhs = nsym_coproduct_lin(&theta_big(m));
        c.eq(&lhs, &rhs, || vec![show(m)]);
        Ok(())
    })
}

fn params(ctx: &Ctx, n: usize) -> Vec<RationalPair> {
    let mut rng = ctx.rng();
    (0..n).map(|_| random_pair(&mut rng)).collect()
}

fn label(p: &RationalPair) -> String {
    format!("x = {}, y = {}", p.x, p.y)
}

fn k_bialgebra(ctx: &Ctx) -> Result<Check> {
    let ps = params(ctx, 10);
    let comps = ctx.comps_upto(ctx.w);
    let pairs = ctx.comp_pairs(ctx.w);
    for_all(&ps, |p, c| {
        let k = |nu: &Composition| k_xy(p, nu, &ctx.limits);
        for nu in &comps {
            let image = k(nu)?;
            let lhs = image.try_flat_map(|m| coproduct_black(m, &ctx.limits))?;
            let rhs = nsym_coproduct(nu)
                .try_flat_map(|(a, b)| Ok::<_, crate::Error>(tensor(&k(a)?, &k(b)?)))?;
            c.eq(&lhs, &rhs, || vec![label(p), show(nu)]);
            c.eq(
                &crate::hopfpack::counit_lin(CounitKind::Black, &image),
                &if nu.is_empty() {
                    Rational::one()
                } else {
                    Rational::zero()
                },
                || vec![label(p), show(nu)],
            );
        }
        for (a, b) in &pairs {
            let lhs = k(&nsym_concat(a, b))?;
            let rhs = crate::hopfpack::searrow(&k(a)?, &k(b)?);
            c.eq(&lhs, &rhs, || vec![label(p), show(a), show(b)]);
        }
        Ok(())
    })
}

fn theta_multiplicative(ctx: &Ctx) -> Result<Check> {
    let pairs = ctx.comp_pairs(ctx.w);
    for_all(&pairs, |(a, b), c| {
        let lhs = theta_q_lin(&qsym_quasi_shuffle(a, b), &ctx.limits)?;
        let rhs = quasi_shuffle_lin(&theta_q(a, &ctx.limits)?, &theta_q(b, &ctx.limits)?);
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })
}

fn theta_pair(
    t: &LinComb<(Composition, Composition)>,
    ctx: &Ctx,
) -> Result<LinComb<(PackedMatrix, PackedMatrix)>> {
    t.try_flat_map(|(a, b)| Ok(tensor(&theta_q(a, &ctx.limits)?, &theta_q(b, &ctx.limits)?)))
}

fn theta_deconcat(ctx: &Ctx) -> Result<Check> {
    let comps = ctx.comps_upto(ctx.w);
    for_all(&comps, |nu, c| {
        let lhs = theta_pair(&qsym_deconcat(nu), ctx)?;
        let rhs = theta_q(nu, &ctx.limits)?.flat_map(deconcat);
        c.eq(&lhs, &rhs, || vec![show(nu)]);
        Ok(())
    })
}

fn theta_delta(ctx: &Ctx) -> Result<Check> {
    let comps = ctx.comps_upto(ctx.w);
    for_all(&comps, |nu, c| {
        let lhs = theta_pair(&qsym_delta(nu, &ctx.limits)?, ctx)?;
        let rhs = theta_q(nu, &ctx.limits)?.flat_map(second_coproduct);
        c.eq(&lhs, &rhs, || vec![show(nu)]);
        Ok(())
    })
}

fn kappa_multiplicative(ctx: &Ctx) -> Result<Check> {
    let ps = params(ctx, 5);
    let pairs = ctx.pack_pairs(ctx.w)?;
    for_all(&ps, |p, c| {
        for (a, b) in &pairs {
            let lhs = quasi_shuffle(a, b).flat_map(|m| kappa_xy(p, m));
            let rhs = crate::nsymqsym::qsym_quasi_shuffle_lin(&kappa_xy(p, a), &kappa_xy(p, b));
            c.eq(&lhs, &rhs, || vec![label(p), show(a), show(b)]);
        }
        Ok(())
    })
}

fn kappa_deconcat(ctx: &Ctx) -> Result<Check> {
    let ps = params(ctx, 5);
    let all = ctx.pack_upto(ctx.w)?;
    for_all(&ps, |p, c| {
        for m in &all {
            let lhs = map_tensor2(&deconcat(m), |a| kappa_xy(p, a), |b| kappa_xy(p, b));
            let rhs = qsym_deconcat_lin(&kappa_xy(p, m));
            c.eq(&lhs, &rhs, || vec![label(p), show(m)]);
        }
        Ok(())
    })
}

/// The coefficient of `ν` in `κ_xy(diag ν)` is `(xy)^ℓ(ν)` and every other
/// term is shorter, so `κ_xy` is onto when `xy ≠ 0`. When `xy = 0` it kills
/// every nonempty matrix.
fn kappa_triangular(ctx: &Ctx) -> Result<Check> {
    let mut ps = params(ctx, 5);
    ps.push(RationalPair::new(
        Rational::zero(),
        Rational::new(3.into(), 2.into()),
    ));
    ps.push(RationalPair::new(
        Rational::new((-2).into(), 5.into()),
        Rational::zero(),
    ));
    let comps = ctx.comps_upto(ctx.w.max(4));
    let mats = ctx.pack_upto(ctx.w)?;
    for_all(&ps, |p, c| {
        let xy = &p.x * &p.y;
        if xy.is_zero() {
            for m in mats.iter().filter(|m| !m.is_empty()) {
                c.eq(&kappa_xy(p, m), &LinComb::zero(), || {
                    vec![label(p), show(m)]
                });
            }
            return Ok(());
        }
        for nu in &comps {
            let image = kappa_xy(p, &nu.diag_matrix());
            let lead = Pow::pow(&xy, nu.len() as u32);
            c.eq(&image.coeff(nu), &lead, || vec![label(p), show(nu)]);
            let shorter = image.keys().all(|k| k == nu || k.len() < nu.len());
            c.holds(
                shorter,
                || vec![label(p), show(nu)],
                || (show(&image), format!("terms shorter than {nu}")),
            );
        }
        Ok(())
    })
}

fn one_one() -> RationalPair {
    RationalPair::new(Rational::one(), Rational::one())
}

fn kappa_delta(ctx: &Ctx) -> Result<Check> {
    let p = one_one();
    let all = ctx.pack_upto(ctx.w)?;
    for_all(&all, |m, c| {
        let image = kappa_xy(&p, m);
        let lhs = map_tensor2(
            &second_coproduct(m),
            |a| kappa_xy(&p, a),
            |b| kappa_xy(&p, b),
        );
        let rhs = qsym_delta_lin(&image, &ctx.limits)?;
        c.eq(&lhs, &rhs, || vec![show(m)]);
        c.eq(
            &image.eval(qsym_counit_delta),
            &counit(CounitKind::Delta, m),
            || vec![show(m)],
        );
        Ok(())
    })
}

fn kappa_negative_control(_: &Ctx) -> Result<Check> {
    let p = RationalPair::new(Rational::one(), Rational::from_integer(2.into()));
    let m = PackedMatrix::from_rows(&[[1u64, 1]])?;
    let lhs = kappa_xy(&p, &m).eval(qsym_counit_delta);
    let rhs = counit(CounitKind::Delta, &m);
    let mut c = Check::default();
    c.holds(
        lhs != rhs,
        || vec![label(&p), show(&m)],
        || {
            (
                format!("ε_δ(κ(M)) = {lhs}"),
                format!("ε_δ(M) = {rhs}, expected to differ"),
            )
        },
    );
    Ok(c)
}

fn upsilon_multiplicative(ctx: &Ctx) -> Result<Check> {
    let pairs = ctx.pack_pairs(ctx.w)?;
    for_all(&pairs, |(a, b), c| {
        let lhs = upsilon_lin(&shuffle(a, b));
        let rhs = quasi_shuffle_lin(&upsilon(a), &upsilon(b));
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })
}

fn upsilon_deconcat(ctx: &Ctx) -> Result<Check> {
    let all = ctx.pack_upto(ctx.w)?;
    for_all(&all, |m, c| {
        let lhs = map_tensor2(&deconcat(m), upsilon, upsilon);
        let rhs = upsilon(m).flat_map(deconcat);
        c.eq(&lhs, &rhs, || vec![show(m)]);
        Ok(())
    })
}

fn phi_factorization(ctx: &Ctx) -> Result<Check> {
    let p = one_one();
    let all = ctx.pack_upto(ctx.w.max(4))?;
    for_all(&all, |m, c| {
        c.eq(&phi_hpack(m), &phi_qsym_lin(&kappa_xy(&p, m)), || {
            vec![show(m)]
        });
        Ok(())
    })
}

fn transpose_bialgebra(ctx: &Ctx) -> Result<Check> {
    let t = |m: &PackedMatrix| -> HPackElem { LinComb::basis(m.transpose()) };
    let pairs = ctx.pack_pairs(ctx.w)?;
    let mut out = for_all(&pairs, |(a, b), c| {
        let lhs = transpose_morphism(&LinComb::basis(a.block_diag(b)));
        let rhs = LinComb::basis(a.transpose().block_diag(&b.transpose()));
        c.eq(&lhs, &rhs, || vec![show(a), show(b)]);
        Ok(())
    })?;
    let all = ctx.pack_upto(ctx.w)?;
    out.absorb(for_all(&all, |m, c| {
        let lhs = map_tensor2(&coproduct_black(m, &ctx.limits)?, t, t);
        let rhs = coproduct_black(&m.transpose(), &ctx.limits)?;
        c.eq(&lhs, &rhs, || vec![show(m)]);
        let twice = transpose_morphism(&transpose_morphism(&LinComb::basis(m.clone())));
        c.eq(&twice, &LinComb::basis(m.clone()), || vec![show(m)]);
        Ok(())
    })?);
    Ok(out)
}

fn permutations(n: usize) -> Vec<Permutation> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == used.len() {
            out.push(Permutation::new(cur.clone()).expect("permutation"));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v + 1);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn perm_shuffle_matches(ctx: &Ctx) -> Result<Check> {
    let bound = ctx.w.max(4) as usize;
    let perms: Vec<Permutation> = (0..=bound).flat_map(permutations).collect();
    let pairs: Vec<(Permutation, Permutation)> = perms
        .iter()
        .flat_map(|a| perms.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| a.len() + b.len() <= bound)
        .collect();
    for_all(&pairs, |(s, t), c| {
        let lhs = perm_shuffle(s, t).map_keys(|p| p.to_matrix());
        let rhs = shuffle(&s.to_matrix(), &t.to_matrix());
        c.eq(&lhs, &rhs, || vec![show(s), show(t)]);
        Ok(())
    })
}
