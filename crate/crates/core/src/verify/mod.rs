//! Checks of the algebraic identities over every small input, plus seeded
//! random parameters where an identity has them.
//!
//! A suite is a fixed list of named identities. Single-input identities run
//! over every input of weight at most `max_weight`; two-input identities run
//! over every pair of total weight at most `max_weight`. Each identity stops
//! at its first counterexample, reported with both sides.

mod axioms;
mod counting;
mod duality;
mod maps;
mod signature;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::counts::enumerate_pack;
use crate::error::{Error, Result};
use crate::exactlin::{LinComb, Rational};
use crate::limits::Limits;
use crate::matrices::{compositions_of, Composition, PackedMatrix};
use crate::morphisms::RationalPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Duality,
    Morphisms,
    Realization,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Axioms,
        Suite::Duality,
        Suite::Morphisms,
        Suite::Realization,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Duality => "duality",
            Suite::Morphisms => "morphisms",
            Suite::Realization => "realization",
            Suite::Counts => "counts",
        }
    }

    /// Identity names in run order.
    pub fn identities(self) -> Vec<&'static str> {
        table(self).into_iter().map(|(n, _)| n).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "unknown suite `{s}` (expected axioms, duality, morphisms, realization or counts)"
                ))
            })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_weight: u64,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_weight: 3,
            seed: 0,
            limits: Limits::default(),
        }
    }
}

/// The inputs and both sides of a violated identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub passed: bool,
    /// Number of instances checked.
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_weight: u64,
    pub seed: u64,
    pub identities: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityReport> {
        self.identities.iter().find(|r| !r.passed)
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityReport> {
        self.identities.iter().find(|r| r.identity == name)
    }
}

/// Runs every identity of `suite`.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    run_selected(suite, cfg, |_| true)
}

/// Runs the identities of `suite` whose names pass `select`, in suite order.
pub fn run_selected(
    suite: Suite,
    cfg: &VerifyConfig,
    select: impl Fn(&str) -> bool,
) -> Result<SuiteReport> {
    let ctx = Ctx::new(cfg);
    let chosen: Vec<(usize, &'static str, IdentityFn)> = table(suite)
        .into_iter()
        .enumerate()
        .filter(|(_, (name, _))| select(name))
        .map(|(i, (name, f))| (i, name, f))
        .collect();
    let identities = chosen
        .par_iter()
        .map(|&(i, name, f)| {
            let check = f(&ctx.with_stream(i as u64))?;
            Ok(IdentityReport {
                identity: name.to_string(),
                passed: check.failure.is_none(),
                cases: check.cases,
                counterexample: check.failure,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        suite,
        max_weight: cfg.max_weight,
        seed: cfg.seed,
        identities,
    })
}

type IdentityFn = fn(&Ctx) -> Result<Check>;

fn table(suite: Suite) -> Vec<(&'static str, IdentityFn)> {
    match suite {
        Suite::Axioms => axioms::identities(),
        Suite::Duality => duality::identities(),
        Suite::Morphisms => maps::identities(),
        Suite::Realization => signature::identities(),
        Suite::Counts => counting::identities(),
    }
}

/// What an identity sees: the weight bound, its own random stream and the
/// resource limits.
#[derive(Clone)]
pub(crate) struct Ctx {
    w: u64,
    seed: u64,
    stream: u64,
    limits: Limits,
}

impl Ctx {
    fn new(cfg: &VerifyConfig) -> Self {
        let mut limits = cfg.limits;
        limits.max_weight = limits.max_weight.max(cfg.max_weight);
        Self {
            w: cfg.max_weight,
            seed: cfg.seed,
            stream: 0,
            limits,
        }
    }

    fn with_stream(&self, stream: u64) -> Self {
        Self { stream, ..*self }
    }

    fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }

    /// Packed matrices of weight `0..=w`.
    fn pack_upto(&self, w: u64) -> Result<Vec<PackedMatrix>> {
        let mut out = Vec::new();
        for n in 0..=w {
            out.extend(enumerate_pack(n, &self.limits)?.iter().cloned());
        }
        Ok(out)
    }

    /// Pairs of packed matrices with total weight at most `w`.
    fn pack_pairs(&self, w: u64) -> Result<Vec<(PackedMatrix, PackedMatrix)>> {
        let all = self.pack_upto(w)?;
        Ok(pairs_by_weight(&all, w, |m| m.weight()))
    }

    fn comps_upto(&self, w: u64) -> Vec<Composition> {
        (0..=w).flat_map(compositions_of).collect()
    }

    fn comp_pairs(&self, w: u64) -> Vec<(Composition, Composition)> {
        pairs_by_weight(&self.comps_upto(w), w, |c| c.weight())
    }
}

fn pairs_by_weight<T: Clone>(all: &[T], w: u64, weight: impl Fn(&T) -> u64) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for a in all {
        for b in all {
            if weight(a) + weight(b) <= w {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// A rational with numerator in `-9..=9` and denominator in `1..=6`.
fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(
        rng.gen_range(-9i64..=9).into(),
        rng.gen_range(1i64..=6).into(),
    )
}

fn random_pair(rng: &mut impl Rng) -> RationalPair {
    RationalPair::new(random_rational(rng), random_rational(rng))
}

/// Outcome of one identity: instances checked and the first failure.
#[derive(Debug, Default)]
pub(crate) struct Check {
    cases: usize,
    failure: Option<Counterexample>,
}

impl Check {
    /// Records one instance of `lhs = rhs`.
    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        lhs: &T,
        rhs: &T,
        inputs: impl FnOnce() -> Vec<String>,
    ) {
        self.cases += 1;
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(Counterexample {
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Records one instance of a predicate, with the two sides shown on failure.
    fn holds(
        &mut self,
        ok: bool,
        inputs: impl FnOnce() -> Vec<String>,
        sides: impl FnOnce() -> (String, String),
    ) {
        self.cases += 1;
        if self.failure.is_none() && !ok {
            let (lhs, rhs) = sides();
            self.failure = Some(Counterexample {
                inputs: inputs(),
                lhs,
                rhs,
            });
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn absorb(&mut self, other: Check) {
        self.cases += other.cases;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

/// Runs `f` on every item, in parallel, keeping the first failure in item order.
fn for_all<I: Sync>(items: &[I], f: impl Fn(&I, &mut Check) -> Result<()> + Sync) -> Result<Check> {
    let parts = items
        .par_iter()
        .map(|item| {
            let mut c = Check::default();
            f(item, &mut c)?;
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = Check::default();
    for c in parts {
        out.absorb(c);
    }
    Ok(out)
}

fn show<T: fmt::Display>(x: &T) -> String {
    x.to_string()
}

/// `Σ c f(a) ⊗ b` for `t = Σ c a ⊗ b`, flattened to a triple tensor.
fn apply_left<K: Ord + Clone>(
    t: &LinComb<(K, K)>,
    mut f: impl FnMut(&K) -> Result<LinComb<(K, K)>>,
) -> Result<LinComb<(K, K, K)>> {
    t.try_flat_map(|(a, b)| Ok(f(a)?.map_keys(|(x, y)| (x.clone(), y.clone(), b.clone()))))
}

/// `Σ c a ⊗ f(b)` for `t = Σ c a ⊗ b`, flattened to a triple tensor.
fn apply_right<K: Ord + Clone>(
    t: &LinComb<(K, K)>,
    mut f: impl FnMut(&K) -> Result<LinComb<(K, K)>>,
) -> Result<LinComb<(K, K, K)>> {
    t.try_flat_map(|(a, b)| Ok(f(b)?.map_keys(|(x, y)| (a.clone(), x.clone(), y.clone()))))
}

/// `m_{1,3,24}∘(δ⊗δ)` applied to `t = Δ(x)`, where
/// `m_{1,3,24}(a⊗b⊗c⊗d) = a⊗c⊗(b·d)`.
fn m1324<K: Ord + Clone>(
    t: &LinComb<(K, K)>,
    mut delta: impl FnMut(&K) -> Result<LinComb<(K, K)>>,
    mut mul: impl FnMut(&K, &K) -> LinComb<K>,
) -> Result<LinComb<(K, K, K)>> {
    t.try_flat_map(|(x, y)| {
        let (dx, dy) = (delta(x)?, delta(y)?);
        let mut out = LinComb::zero();
        for ((a, b), c1) in dx.iter() {
            for ((c, d), c2) in dy.iter() {
                let prod = mul(b, d).map_keys(|bd| (a.clone(), c.clone(), bd.clone()));
                out.add_scaled(&(c1 * c2), &prod);
            }
        }
        Ok(out)
    })
}

/// Triples `(a, b, N)` weighted by the coefficient of `N` in `a·b`, over all
/// given pairs.
fn product_table<K: Ord + Clone + Send + Sync>(
    pairs: &[(K, K)],
    mul: impl Fn(&K, &K) -> LinComb<K> + Sync,
) -> LinComb<(K, K, K)> {
    pairs
        .par_iter()
        .map(|(a, b)| mul(a, b).map_keys(|n| (a.clone(), b.clone(), n.clone())))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(LinComb::zero(), |acc, x| acc + x)
}

/// Triples `(a, b, N)` weighted by the coefficient of `a⊗b` in `Δ(N)`, over
/// all given `N`.
fn coproduct_table<K: Ord + Clone + Send + Sync>(
    inputs: &[K],
    cop: impl Fn(&K) -> Result<LinComb<(K, K)>> + Sync,
) -> Result<LinComb<(K, K, K)>> {
    let parts = inputs
        .par_iter()
        .map(|n| Ok(cop(n)?.map_keys(|(a, b)| (a.clone(), b.clone(), n.clone()))))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(LinComb::zero(), |acc, x| acc + x))
}

/// Compares two tables key by key; the first differing key is the
/// counterexample.
fn compare_tables<K: Ord + Clone>(
    c: &mut Check,
    left: &LinComb<K>,
    right: &LinComb<K>,
    describe: impl Fn(&K) -> Vec<String>,
) {
    let keys: std::collections::BTreeSet<&K> = left.keys().chain(right.keys()).collect();
    for k in keys {
        c.eq(&left.coeff(k), &right.coeff(k), || describe(k));
        if c.failed() {
            return;
        }
    }
}

fn describe3<K: fmt::Display>(k: &(K, K, K)) -> Vec<String> {
    vec![k.0.to_string(), k.1.to_string(), k.2.to_string()]
}
