//! One line per acceptance criterion. Every comparison is exact.
//!
//! Runs without the libtest harness so the lines reach the terminal under a
//! plain `cargo test`. Exits nonzero when a criterion fails for any reason
//! other than the refuted identity listed in `REFUTED`.

mod common;

use std::time::Instant;

use num_bigint::BigInt;
use packmat::counts::{count_pack, count_qn, generator_counts, primitive_dims};
use packmat::surjections::check_hoffman_identity;
use packmat::verify::{run_selected, IdentityReport, Suite, VerifyConfig};
use packmat::Limits;

use common::{golden_examples, permutation_examples};

/// Identities that are false as stated, with a hand-checked counterexample at
/// ν = (1,2): the left side has `[1 2] ⊗ [2;1]` with coefficient 1, the right
/// side has it with coefficient 0. They are still run and reported.
const REFUTED: &[&str] = &["(θ⊗θ)∘δ_QSym = δ∘θ"];

struct Outcome {
    ok: bool,
    detail: String,
    /// Failures, all of which are in `REFUTED`.
    refuted_only: bool,
}

impl Outcome {
    fn pass(detail: String) -> Self {
        Self {
            ok: true,
            detail,
            refuted_only: false,
        }
    }
}

fn cfg(w: u64) -> VerifyConfig {
    VerifyConfig {
        max_weight: w,
        seed: 0,
        limits: Limits::default(),
    }
}

fn from_reports(reports: &[IdentityReport]) -> Outcome {
    let failed: Vec<&IdentityReport> = reports.iter().filter(|r| !r.passed).collect();
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    if failed.is_empty() {
        return Outcome::pass(format!("{} identities, {cases} cases", reports.len()));
    }
    let refuted_only = failed
        .iter()
        .all(|r| REFUTED.contains(&r.identity.as_str()));
    let detail = failed
        .iter()
        .map(|r| {
            let cx = r
                .counterexample
                .as_ref()
                .expect("failure has a counterexample");
            format!("`{}` fails on {}", r.identity, cx.inputs.join(", "))
        })
        .collect::<Vec<_>>()
        .join("; ");
    Outcome {
        ok: false,
        detail,
        refuted_only,
    }
}

fn suite(s: Suite, w: u64, select: impl Fn(&str) -> bool) -> Outcome {
    match run_selected(s, &cfg(w), select) {
        Ok(report) => from_reports(&report.identities),
        Err(e) => Outcome {
            ok: false,
            detail: format!("error: {e}"),
            refuted_only: false,
        },
    }
}

fn series_matches(got: &[BigInt], want: &[u64]) -> bool {
    got.len() == want.len() && got.iter().zip(want).all(|(g, w)| *g == BigInt::from(*w))
}

fn counting_tables() -> Outcome {
    let lim = Limits::default();
    let pack = count_pack(6, &lim).expect("within limits");
    let prim = primitive_dims(5, &lim).expect("within limits");
    let gen = generator_counts(5, &lim).expect("within limits");
    let qn: Vec<BigInt> = (1..=5)
        .map(|n| count_qn(n, &lim).expect("within limits"))
        .collect();
    let checks = [
        (
            "|Pack_n|",
            series_matches(&pack, &[1, 1, 5, 33, 281, 2961, 37277]),
        ),
        (
            "primitives",
            series_matches(&prim[1..], &[1, 4, 24, 204, 2224]),
        ),
        (
            "generators",
            series_matches(&gen[1..], &[1, 4, 28, 238, 2568]),
        ),
        ("q_n", series_matches(&qn, &[1, 4, 24, 196, 2016])),
    ];
    let bad: Vec<&str> = checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    if bad.is_empty() {
        Outcome::pass("4 tables".into())
    } else {
        Outcome {
            ok: false,
            detail: format!("mismatch in {}", bad.join(", ")),
            refuted_only: false,
        }
    }
}

fn goldens() -> Outcome {
    let all = golden_examples();
    let bad: Vec<String> = all
        .iter()
        .filter(|g| !g.ok)
        .map(|g| format!("{}: got {} want {}", g.name, g.got, g.want))
        .collect();
    if bad.is_empty() {
        Outcome::pass(format!("{} instantiated displays", all.len()))
    } else {
        Outcome {
            ok: false,
            detail: bad.join("; "),
            refuted_only: false,
        }
    }
}

fn cross_theory() -> Outcome {
    let mut reports = Vec::new();
    for (s, w, name) in [
        (Suite::Morphisms, 3, "(θ⊗θ)∘δ_QSym = δ∘θ"),
        (Suite::Axioms, 4, "Eulerian idempotent primitive"),
        (
            Suite::Morphisms,
            4,
            "permutation shuffle matches matrix shuffle",
        ),
    ] {
        match run_selected(s, &cfg(w), |n| n == name) {
            Ok(r) => reports.extend(r.identities),
            Err(e) => {
                return Outcome {
                    ok: false,
                    detail: format!("error: {e}"),
                    refuted_only: false,
                }
            }
        }
    }
    let mut out = from_reports(&reports);
    let hoffman_bad: Vec<String> = (0..=4)
        .flat_map(|k| (0..=4).map(move |l| (k, l)))
        .filter(|&(k, l)| !check_hoffman_identity(k, l))
        .map(|(k, l)| format!("Hoffman fails at k={k} l={l}"))
        .collect();
    let perm_bad: Vec<String> = permutation_examples()
        .into_iter()
        .filter(|g| !g.ok)
        .map(|g| format!("{}: got {} want {}", g.name, g.got, g.want))
        .collect();
    if !hoffman_bad.is_empty() || !perm_bad.is_empty() {
        let extra = [hoffman_bad, perm_bad].concat().join("; ");
        out = Outcome {
            ok: false,
            detail: if out.ok {
                extra
            } else {
                format!("{}; {extra}", out.detail)
            },
            refuted_only: false,
        };
    } else if out.ok {
        out.detail = format!("{}; Hoffman k,l ≤ 4; (1)⧧(21) and (1)★(21)", out.detail);
    }
    out
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "counting tables, n ≤ 6 and n ≤ 5",
            Box::new(counting_tables),
        ),
        (
            "golden examples at (1,2,3,4) and (1,1,1,1)",
            Box::new(goldens),
        ),
        (
            "axiom suite, weight ≤ 4 (δ coassociativity at weight 4 by seeded functionals)",
            Box::new(|| suite(Suite::Axioms, 4, |_| true)),
        ),
        (
            "duality suite, total weight ≤ 4",
            Box::new(|| suite(Suite::Duality, 4, |_| true)),
        ),
        (
            "morphism suite, weight ≤ 3",
            Box::new(|| suite(Suite::Morphisms, 3, |_| true)),
        ),
        (
            "realization suite, weight ≤ 3",
            Box::new(|| suite(Suite::Realization, 3, |_| true)),
        ),
        ("cross-theory checks", Box::new(cross_theory)),
    ];
    let mut unexpected = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let status = if o.ok { "PASS" } else { "FAIL" };
        let note = if !o.ok && o.refuted_only {
            " [refuted identity, see README]"
        } else {
            ""
        };
        println!(
            "criterion {}: {status} {label} (exact; {secs:.1}s) {}{note}",
            i + 1,
            o.detail
        );
        if !o.ok && !o.refuted_only {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
