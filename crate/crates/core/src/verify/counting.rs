//! Counting sequences against their reference tables, and shell sanity.

use num_bigint::BigInt;

use super::{for_all, show, Check, Ctx, IdentityFn};
use crate::counts::{count_pack, count_qn, enumerate_pack, generator_counts, primitive_dims};
use crate::error::Result;
use crate::hopfpack::is_indecomposable;
use crate::morphisms::theta_q;
use crate::parse::parse_packed;

/// `|Pack_n|`, `n = 0..=6`.
pub const PACK_TABLE: [u64; 7] = [1, 1, 5, 33, 281, 2961, 37277];
/// Primitive dimensions, `n = 1..=5`.
pub const PRIMITIVE_TABLE: [u64; 5] = [1, 4, 24, 204, 2224];
/// Free generator counts, `n = 1..=5`.
pub const GENERATOR_TABLE: [u64; 5] = [1, 4, 28, 238, 2568];
/// `q_n`, `n = 1..=5`.
pub const QN_TABLE: [u64; 5] = [1, 4, 24, 196, 2016];

pub(super) fn identities() -> Vec<(&'static str, IdentityFn)> {
    vec![
        ("|Pack_n| table", pack_table),
        ("primitive dimension table", primitive_table),
        ("generator count table", generator_table),
        ("q_n table", qn_table),
        (
            "primitives are the ↘-indecomposables",
            primitives_indecomposable,
        ),
        ("q_n independent of the composition", qn_independent),
        ("shells distinct and packed", shells_valid),
        ("parse inverts print on shells", round_trip),
    ]
}

fn compare_series(c: &mut Check, got: &[BigInt], table: &[u64], offset: usize) {
    for (i, want) in table.iter().enumerate() {
        if let Some(v) = got.get(i + offset) {
            c.eq(v, &BigInt::from(*want), || {
                vec![format!("n = {}", i + offset)]
            });
        }
    }
}

fn pack_table(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    compare_series(
        &mut c,
        &count_pack(ctx.w.min(6), &ctx.limits)?,
        &PACK_TABLE,
        0,
    );
    Ok(c)
}

fn primitive_table(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    compare_series(
        &mut c,
        &primitive_dims(ctx.w.min(5), &ctx.limits)?,
        &PRIMITIVE_TABLE,
        1,
    );
    Ok(c)
}

fn generator_table(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    compare_series(
        &mut c,
        &generator_counts(ctx.w.min(5), &ctx.limits)?,
        &GENERATOR_TABLE,
        1,
    );
    Ok(c)
}

fn qn_table(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    let got = (0..=ctx.w.min(5))
        .map(|n| count_qn(n, &ctx.limits))
        .collect::<Result<Vec<_>>>()?;
    compare_series(&mut c, &got, &QN_TABLE, 1);
    Ok(c)
}

fn primitives_indecomposable(ctx: &Ctx) -> Result<Check> {
    let upto = ctx.w.min(5);
    let p = primitive_dims(upto, &ctx.limits)?;
    let mut c = Check::default();
    for n in 1..=upto {
        let count = enumerate_pack(n, &ctx.limits)?
            .iter()
            .filter(|m| is_indecomposable(m))
            .count();
        c.eq(&BigInt::from(count), &p[n as usize], || {
            vec![format!("n = {n}")]
        });
    }
    Ok(c)
}

fn qn_independent(ctx: &Ctx) -> Result<Check> {
    let comps = ctx.comps_upto(ctx.w);
    for_all(&comps, |nu, c| {
        let terms = BigInt::from(theta_q(nu, &ctx.limits)?.len());
        c.eq(&terms, &count_qn(nu.len() as u64, &ctx.limits)?, || {
            vec![show(nu)]
        });
        Ok(())
    })
}

fn shells_valid(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for n in 0..=ctx.w {
        let shell = enumerate_pack(n, &ctx.limits)?;
        for w in shell.windows(2) {
            c.holds(
                w[0] < w[1],
                || vec![format!("n = {n}")],
                || (show(&w[0]), show(&w[1])),
            );
        }
        for m in shell.iter() {
            c.holds(
                m.is_packed() && m.weight() == n,
                || vec![format!("n = {n}")],
                || (show(m), "packed of weight n".into()),
            );
        }
    }
    Ok(c)
}

fn round_trip(ctx: &Ctx) -> Result<Check> {
    let mut c = Check::default();
    for m in ctx.pack_upto(ctx.w)? {
        let back = parse_packed(&m.to_string())?;
        c.eq(&back, &m, || vec![show(&m)]);
    }
    Ok(c)
}
