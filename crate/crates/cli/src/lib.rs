//! Argument handling and dispatch for the `packmat` binary.
//!
//! [`run`] never exits the process, so tests drive it directly.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use packmat::counts::{count_pack, count_qn, enumerate_pack, generator_counts, primitive_dims};
use packmat::exactlin::{pairing, parse_rational};
use packmat::hopfpack::{
    antipode_lin, coproduct_black, coproduct_black_res, deconcat, quasi_shuffle_lin, searrow,
    second_coproduct, shuffle_lin,
};
use packmat::morphisms::{
    k_xy_lin, kappa_xy_lin, phi_hpack_lin, theta_big_lin, theta_q_lin, transpose_morphism,
    upsilon_lin,
};
use packmat::parse::{parse_composition, parse_lincomb, parse_packed};
use packmat::realization::evaluate_lincomb;
use packmat::verify::{run_suite, Suite, VerifyConfig};
use packmat::{Error, Grid, HPackElem, Limits, NSymElem, RationalPair};

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "packmat",
    version,
    about = "Exact computations with packed integer matrices"
)]
struct Cli {
    /// Print JSON instead of canonical text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Weight bound: the shell guard, or the verification weight for `verify` (default 3).
    #[arg(long, global = true)]
    max_weight: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Multiply two linear combinations of packed matrices.
    Mul {
        #[arg(long, value_enum)]
        op: MulOp,
        a: String,
        b: String,
    },
    /// Apply a coproduct.
    Cop {
        #[arg(long, value_enum)]
        op: CopOp,
        m: String,
    },
    /// Apply the antipode.
    Antipode { m: String },
    /// The delta pairing of two linear combinations.
    Pair { a: String, b: String },
    /// Apply a morphism.
    Morph {
        #[arg(long, value_enum)]
        name: Morphism,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        input: String,
    },
    /// Evaluate the realization on a grid read from a JSON file.
    Sig {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        grid: std::path::PathBuf,
    },
    /// Print a counting sequence as TSV.
    Count {
        #[arg(long, value_enum)]
        seq: Sequence,
        #[arg(long)]
        upto: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// List the packed matrices of a given weight.
    Enum {
        #[arg(long)]
        weight: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MulOp {
    Searrow,
    Qsh,
    Shuffle,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CopOp {
    Black,
    BlackRes,
    Deconcat,
    Delta,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Morphism {
    ThetaBig,
    Theta,
    KappaXy,
    KXy,
    Upsilon,
    Phi,
    Transpose,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Sequence {
    Pack,
    Prim,
    Gen,
    Qn,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } => 3,
        _ => 2,
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}

fn limits(cli: &Cli) -> packmat::Result<Limits> {
    let mut l = Limits::from_env()?;
    if let Some(w) = cli.max_weight {
        l.max_weight = w;
    }
    Ok(l)
}

fn packed(text: &str) -> packmat::Result<HPackElem> {
    parse_lincomb(text, parse_packed)
}

fn comps(text: &str) -> packmat::Result<NSymElem> {
    parse_lincomb(text, parse_composition)
}

/// Canonical text, or the JSON form, followed by a newline.
fn render<T: std::fmt::Display + serde::Serialize>(cli: &Cli, value: &T) -> String {
    if cli.json {
        format!("{}\n", serde_json::to_string(value).expect("serializable"))
    } else {
        format!("{value}\n")
    }
}

fn render_scalar(cli: &Cli, value: &packmat::Rational) -> String {
    if cli.json {
        format!("{}\n", json!({ "value": value.to_string() }))
    } else {
        format!("{value}\n")
    }
}

fn dispatch(cli: &Cli) -> packmat::Result<Outcome> {
    match &cli.cmd {
        Cmd::Mul { op, a, b } => {
            let (a, b) = (packed(a)?, packed(b)?);
            let out = match op {
                MulOp::Searrow => searrow(&a, &b),
                MulOp::Qsh => quasi_shuffle_lin(&a, &b),
                MulOp::Shuffle => shuffle_lin(&a, &b),
            };
            Ok(ok(render(cli, &out)))
        }
        Cmd::Cop { op, m } => {
            let m = packed(m)?;
            let lim = limits(cli)?;
            let out = match op {
                CopOp::Black => m.try_flat_map(|x| coproduct_black(x, &lim))?,
                CopOp::BlackRes => m.try_flat_map(|x| coproduct_black_res(x, &lim))?,
                CopOp::Deconcat => m.flat_map(deconcat),
                CopOp::Delta => m.flat_map(second_coproduct),
            };
            Ok(ok(render(cli, &out)))
        }
        Cmd::Antipode { m } => {
            let out = antipode_lin(&packed(m)?, &limits(cli)?)?;
            Ok(ok(render(cli, &out)))
        }
        Cmd::Pair { a, b } => Ok(ok(render_scalar(cli, &pairing(&packed(a)?, &packed(b)?)))),
        Cmd::Morph { name, x, y, input } => morph(cli, *name, x.as_deref(), y.as_deref(), input),
        Cmd::Sig { matrix, grid } => {
            let m = packed(matrix)?;
            let text = std::fs::read_to_string(grid).map_err(|e| {
                Error::Usage(format!("cannot read grid file {}: {e}", grid.display()))
            })?;
            let g = Grid::from_json(&text)?;
            Ok(ok(render_scalar(cli, &evaluate_lincomb(&m, &g))))
        }
        Cmd::Count { seq, upto } => count(cli, *seq, *upto),
        Cmd::Verify { suite } => verify(cli, suite),
        Cmd::Enum { weight } => {
            let shell = enumerate_pack(*weight, &limits(cli)?)?;
            if cli.json {
                return Ok(ok(format!(
                    "{}\n",
                    serde_json::to_string(&*shell).expect("serializable")
                )));
            }
            let mut s = String::new();
            for m in shell.iter() {
                writeln!(s, "{m}").unwrap();
            }
            Ok(ok(s))
        }
    }
}

fn params(x: Option<&str>, y: Option<&str>) -> packmat::Result<RationalPair> {
    match (x, y) {
        (Some(x), Some(y)) => Ok(RationalPair::new(parse_rational(x)?, parse_rational(y)?)),
        _ => Err(Error::Usage("this morphism needs both --x and --y".into())),
    }
}

fn morph(
    cli: &Cli,
    name: Morphism,
    x: Option<&str>,
    y: Option<&str>,
    input: &str,
) -> packmat::Result<Outcome> {
    let lim = limits(cli)?;
    let text = match name {
        Morphism::ThetaBig => render(cli, &theta_big_lin(&packed(input)?)),
        Morphism::Theta => render(cli, &theta_q_lin(&comps(input)?, &lim)?),
        Morphism::KXy => render(cli, &k_xy_lin(&params(x, y)?, &comps(input)?, &lim)?),
        Morphism::KappaXy => render(cli, &kappa_xy_lin(&params(x, y)?, &packed(input)?)),
        Morphism::Upsilon => render(cli, &upsilon_lin(&packed(input)?)),
        Morphism::Transpose => render(cli, &transpose_morphism(&packed(input)?)),
        Morphism::Phi => {
            let p = phi_hpack_lin(&packed(input)?);
            if cli.json {
                format!("{}\n", json!({ "polynomial": p }))
            } else {
                format!("{p}\n")
            }
        }
    };
    Ok(ok(text))
}

fn count(cli: &Cli, seq: Sequence, upto: u64) -> packmat::Result<Outcome> {
    let lim = limits(cli)?;
    let rows: Vec<(u64, String)> = match seq {
        Sequence::Pack => count_pack(upto, &lim)?
            .iter()
            .enumerate()
            .map(|(n, v)| (n as u64, v.to_string()))
            .collect(),
        Sequence::Prim | Sequence::Gen => {
            let s = if matches!(seq, Sequence::Prim) {
                primitive_dims(upto, &lim)?
            } else {
                generator_counts(upto, &lim)?
            };
            s.iter()
                .enumerate()
                .skip(1)
                .map(|(n, v)| (n as u64, v.to_string()))
                .collect()
        }
        Sequence::Qn => (1..=upto)
            .map(|n| Ok((n, count_qn(n, &lim)?.to_string())))
            .collect::<packmat::Result<_>>()?,
    };
    if cli.json {
        let arr: Vec<_> = rows
            .iter()
            .map(|(n, v)| json!({ "n": n, "value": v }))
            .collect();
        return Ok(ok(format!("{}\n", serde_json::Value::Array(arr))));
    }
    let mut s = String::new();
    for (n, v) in rows {
        writeln!(s, "{n}\t{v}").unwrap();
    }
    Ok(ok(s))
}

fn verify(cli: &Cli, suite: &str) -> packmat::Result<Outcome> {
    let suite: Suite = suite.parse()?;
    let cfg = VerifyConfig {
        max_weight: cli.max_weight.unwrap_or(3),
        seed: cli.seed,
        limits: Limits::from_env()?,
    };
    let report = run_suite(suite, &cfg)?;
    let code = if report.passed() { 0 } else { 1 };
    if cli.json {
        let text = format!(
            "{}\n",
            serde_json::to_string(&report).expect("serializable")
        );
        return Ok(Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        });
    }
    let mut s = String::new();
    for r in &report.identities {
        let status = if r.passed { "ok  " } else { "FAIL" };
        writeln!(s, "{status} {} ({} cases)", r.identity, r.cases).unwrap();
    }
    let mut stderr = String::new();
    if let Some(bad) = report.first_failure() {
        let cx = bad
            .counterexample
            .as_ref()
            .expect("failed identity has a counterexample");
        let payload = json!({
            "suite": suite.name(),
            "identity": bad.identity,
            "inputs": cx.inputs,
            "lhs": cx.lhs,
            "rhs": cx.rhs,
        });
        writeln!(s, "{payload}").unwrap();
        writeln!(stderr, "verify: identity `{}` failed", bad.identity).unwrap();
    }
    Ok(Outcome {
        code,
        stdout: s,
        stderr,
    })
}
