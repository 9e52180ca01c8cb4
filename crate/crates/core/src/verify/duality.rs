//! Adjunctions between products and coproducts under the delta pairing.

use super::{
    compare_tables, coproduct_table, describe3, product_table, random_pair, show, Check, Ctx,
    IdentityFn,
};
use crate::error::Result;
use crate::exactlin::LinComb;
use crate::hopfpack::{coproduct_black, coproduct_black_res, deconcat, quasi_shuffle, shuffle};
use crate::matrices::{compositions_of, Composition, PackedMatrix};
use crate::morphisms::{k_xy, kappa_xy, theta_big, theta_q};
use crate::nsymqsym::{
    internal_product, nsym_concat, nsym_coproduct, qsym_deconcat, qsym_delta, qsym_quasi_shuffle,
};

pub(super) fn identities() -> Vec<(&'static str, IdentityFn)> {
    vec![
        ("⟨a⧆b, N⟩ = ⟨a⊗b, ▲N⟩", qsh_black),
        ("⟨a↘b, N⟩ = ⟨a⊗b, ΔN⟩", searrow_deconcat),
        ("⟨a⧧b, N⟩ = ⟨a⊗b, ▲_res N⟩", shuffle_black_res),
        ("⟨K_xy(c), M⟩ = ⟨c, κ_xy(M)⟩", k_kappa),
        ("⟨Θ(M), ν⟩ = ⟨M, θ(ν)⟩", theta_adjoint),
        ("QSym ⧆ dual to NSym ▲", qsym_qsh_nsym_black),
        ("QSym Δ dual to NSym ∗", qsym_deconcat_nsym_concat),
        ("QSym δ dual to NSym ∘", qsym_delta_internal),
    ]
}

fn pack_adjunction(
    ctx: &Ctx,
    mul: impl Fn(&PackedMatrix, &PackedMatrix) -> LinComb<PackedMatrix> + Sync,
    cop: impl Fn(&PackedMatrix) -> Result<LinComb<(PackedMatrix, PackedMatrix)>> + Sync,
) -> Result<Check> {
    let left = product_table(&ctx.pack_pairs(ctx.w)?, mul);
    let right = coproduct_table(&ctx.pack_upto(ctx.w)?, cop)?;
    let mut c = Check::default();
    compare_tables(&mut c, &left, &right, describe3);
    Ok(c)
}

fn qsh_black(ctx: &Ctx) -> Result<Check> {
    pack_adjunction(ctx, quasi_shuffle, |n| coproduct_black(n, &ctx.limits))
}

fn searrow_deconcat(ctx: &Ctx) -> Result<Check> {
    pack_adjunction(
        ctx,
        |a, b| LinComb::basis(a.block_diag(b)),
        |n| Ok(deconcat(n)),
    )
}

fn shuffle_black_res(ctx: &Ctx) -> Result<Check> {
    pack_adjunction(ctx, shuffle, |n| coproduct_black_res(n, &ctx.limits))
}

fn k_kappa(ctx: &Ctx) -> Result<Check> {
    let mut rng = ctx.rng();
    let comps = ctx.comps_upto(ctx.w);
    let mats = ctx.pack_upto(ctx.w)?;
    let mut c = Check::default();
    for _ in 0..5 {
        let p = random_pair(&mut rng);
        let mut left: LinComb<(Composition, PackedMatrix)> = LinComb::zero();
        for comp in &comps {
            let image = k_xy(&p, comp, &ctx.limits)?;
            left += &image.map_keys(|m| (comp.clone(), m.clone()));
        }
        let mut right: LinComb<(Composition, PackedMatrix)> = LinComb::zero();
        for m in &mats {
            right += &kappa_xy(&p, m).map_keys(|comp| (comp.clone(), m.clone()));
        }
        compare_tables(&mut c, &left, &right, |(comp, m)| {
            vec![format!("x = {}, y = {}", p.x, p.y), show(comp), show(m)]
        });
    }
    Ok(c)
}

fn theta_adjoint(ctx: &Ctx) -> Result<Check> {
    let mut left: LinComb<(Composition, PackedMatrix)> = LinComb::zero();
    for m in ctx.pack_upto(ctx.w)? {
        left += &theta_big(&m).map_keys(|nu| (nu.clone(), m.clone()));
    }
    let mut right: LinComb<(Composition, PackedMatrix)> = LinComb::zero();
    for nu in ctx.comps_upto(ctx.w) {
        right += &theta_q(&nu, &ctx.limits)?.map_keys(|m| (nu.clone(), m.clone()));
    }
    let mut c = Check::default();
    compare_tables(&mut c, &left, &right, |(nu, m)| vec![show(nu), show(m)]);
    Ok(c)
}

fn qsym_qsh_nsym_black(ctx: &Ctx) -> Result<Check> {
    let left = product_table(&ctx.comp_pairs(ctx.w), qsym_quasi_shuffle);
    let right = coproduct_table(&ctx.comps_upto(ctx.w), |n| Ok(nsym_coproduct(n)))?;
    let mut c = Check::default();
    compare_tables(&mut c, &left, &right, describe3);
    Ok(c)
}

fn qsym_deconcat_nsym_concat(ctx: &Ctx) -> Result<Check> {
    let left = product_table(&ctx.comp_pairs(ctx.w), |a, b| {
        LinComb::basis(nsym_concat(a, b))
    });
    let right = coproduct_table(&ctx.comps_upto(ctx.w), |n| Ok(qsym_deconcat(n)))?;
    let mut c = Check::default();
    compare_tables(&mut c, &left, &right, describe3);
    Ok(c)
}

fn qsym_delta_internal(ctx: &Ctx) -> Result<Check> {
    let pairs: Vec<(Composition, Composition)> = (0..=ctx.w)
        .flat_map(|n| {
            let cs = compositions_of(n);
            cs.iter()
                .flat_map(|a| cs.iter().map(move |b| (a.clone(), b.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    let left = product_table(&pairs, internal_product);
    let right = coproduct_table(&ctx.comps_upto(ctx.w), |n| qsym_delta(n, &ctx.limits))?;
    let mut c = Check::default();
    compare_tables(&mut c, &left, &right, describe3);
    Ok(c)
}
