//! Command-line front end.
//!
//! Inputs are JSON documents given either as a file path or inline. A variety
//! can also be written as a dimension list (`"[1,2]"`) and a line bundle as a
//! degree list (`"[3]"`).

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::calculus::{compose_graded, diagonal_class, transpose, GradedCorrespondence};
use crate::classes::{
    chern_character, line_bundle, sqrt_todd, tangent_class, todd_class, BundleClass,
};
use crate::error::{Error, Result};
use crate::json::{parse_value, Interchange};
use crate::kshadow::{euler_characteristic, identity_kernel, k_compose, mu, KClass, KKernel};
use crate::motive::{
    compatibility_check, motive_of, orbit_compose, orlov_pipeline, split_idempotent, Motive,
    MotiveMorphism, OrbitMorphism, OrlovVerdict,
};
use crate::rational::format_rational;
use crate::ring::{make_variety, Cycle, Variety};
use crate::verify::run_suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "chowkit", version, about = "Exact Chow ring, K-theory and motive computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BundleInput {
    /// BundleClass JSON (file or inline).
    pub input: Option<String>,
    /// Variety as a dimension list, e.g. "[1,2]".
    #[arg(long)]
    pub variety: Option<String>,
    /// Line bundle degrees, e.g. "[3]"; used with --variety.
    #[arg(long = "line-bundle")]
    pub line_bundle: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum RingOp {
    /// Product of two cycles.
    Intersect { a: String, b: String },
    /// Sum of two cycles.
    Add { a: String, b: String },
    /// Degree of a cycle.
    Degree { a: String },
    /// Codimension-k part of a cycle.
    Graded {
        a: String,
        #[arg(long)]
        codim: u32,
    },
    /// Normalizes a cycle.
    Show { a: String },
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Operations in the Chow ring.
    Ring {
        #[command(subcommand)]
        op: RingOp,
    },
    /// Composite g o f of graded correspondences f: X -> Y, g: Y -> Z.
    Compose { f: String, g: String },
    /// Transpose of a graded correspondence.
    Transpose { f: String },
    /// Diagonal correspondence of a variety.
    Diagonal {
        #[arg(long)]
        variety: String,
    },
    /// Chern character of a bundle.
    ChernCharacter(BundleInput),
    /// Todd class of a bundle.
    Todd(BundleInput),
    /// Square root of the Todd class of a variety.
    SqrtTodd {
        #[arg(long)]
        variety: String,
    },
    /// Tangent bundle class of a variety.
    Tangent {
        #[arg(long)]
        variety: String,
    },
    /// Euler characteristic of a K-class or bundle.
    Euler {
        /// KClass or BundleClass JSON.
        input: Option<String>,
        #[arg(long)]
        variety: Option<String>,
        #[arg(long = "line-bundle")]
        line_bundle: Option<String>,
    },
    /// Graded correspondence mu(E) of a kernel.
    Mu { kernel: String },
    /// Composite F o E of kernels E: X -> Y, F: Y -> Z.
    KCompose { e: String, f: String },
    /// Kernel of the identity functor.
    IdentityKernel {
        #[arg(long)]
        variety: String,
    },
    /// Motive of a variety, or validates a motive given as JSON.
    Motive {
        input: Option<String>,
        #[arg(long)]
        variety: Option<String>,
        #[arg(long, default_value_t = 0)]
        twist: i64,
    },
    /// Splits a projector (cycle on X x X) on a motive.
    Split { motive: String, projector: String },
    /// Composite g o f of orbit-category morphisms.
    OrbitCompose { f: String, g: String },
    /// Kernel pair E: X -> Y, F: Y -> X through the motive pipeline.
    Orlov { e: String, f: String },
    /// Compares the Chow and noncommutative routes on a kernel.
    Compat { kernel: String },
    /// Runs the built-in verification suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok((code, mut stdout)) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Reads a file if `arg` names one, otherwise treats `arg` as inline JSON.
fn load(arg: &str) -> Result<Value> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg)
            .map_err(|e| Error::InvalidInput(format!("cannot read {arg}: {e}")))?
    } else {
        return Err(Error::InvalidInput(format!("{arg}: no such file and not JSON")));
    };
    parse_value(&text)
}

fn load_as<T: Interchange>(arg: &str) -> Result<T> {
    T::from_value(load(arg)?)
}

fn int_list(arg: &str, what: &str) -> Result<Vec<i64>> {
    serde_json::from_value(parse_value(arg)?)
        .map_err(|_| Error::Parse(format!("{what} must be a list of integers, got {arg}")))
}

/// A variety written as a dimension list or as Variety JSON.
fn variety_arg(arg: &str) -> Result<Variety> {
    let v = load(arg)?;
    if v.is_array() {
        make_variety(&int_list(arg, "variety")?)
    } else {
        Variety::from_value(v)
    }
}

fn bundle_arg(b: &BundleInput) -> Result<BundleClass> {
    match (&b.input, &b.variety, &b.line_bundle) {
        (Some(input), None, None) => load_as(input),
        (None, Some(v), Some(l)) => line_bundle(&variety_arg(v)?, &int_list(l, "line bundle")?),
        (None, Some(v), None) => Ok(tangent_class(&variety_arg(v)?)),
        _ => Err(Error::InvalidInput(
            "give a BundleClass JSON, or --variety with optional --line-bundle".into(),
        )),
    }
}

fn emit<T: Interchange>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => value.to_json_pretty(),
        Format::Text => text(value),
    }
}

fn cycle_out(format: Format, c: &Cycle) -> String {
    emit(format, c, |c| c.to_string())
}

fn corr_text(c: &GradedCorrespondence) -> String {
    format!("{} -> {}: {}", c.source(), c.target(), c.cycle())
}

fn corr_out(format: Format, c: &GradedCorrespondence) -> String {
    emit(format, c, corr_text)
}

fn kernel_out(format: Format, k: &KKernel) -> String {
    emit(format, k, |k| format!("{} -> {}: ch = {}", k.source(), k.target(), k.ch()))
}

fn morphism_value(m: &MotiveMorphism) -> Value {
    json!({
        "source": m.source().to_value(),
        "target": m.target().to_value(),
        "corr": m.corr().to_value(),
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Ring { op } => match op {
            RingOp::Intersect { a, b } => {
                let (a, b): (Cycle, Cycle) = (load_as(a)?, load_as(b)?);
                cycle_out(fmt, &a.try_intersect(&b)?)
            }
            RingOp::Add { a, b } => {
                let (a, b): (Cycle, Cycle) = (load_as(a)?, load_as(b)?);
                cycle_out(fmt, &a.try_add(&b)?)
            }
            RingOp::Degree { a } => {
                let a: Cycle = load_as(a)?;
                scalar(fmt, "degree", &format_rational(&a.degree()))
            }
            RingOp::Graded { a, codim } => cycle_out(fmt, &load_as::<Cycle>(a)?.graded_component(*codim)),
            RingOp::Show { a } => cycle_out(fmt, &load_as::<Cycle>(a)?),
        },
        Command::Compose { f, g } => {
            let (f, g): (GradedCorrespondence, GradedCorrespondence) = (load_as(f)?, load_as(g)?);
            corr_out(fmt, &compose_graded(&f, &g)?)
        }
        Command::Transpose { f } => corr_out(fmt, &transpose(&load_as(f)?)),
        Command::Diagonal { variety } => {
            let x = variety_arg(variety)?;
            corr_out(fmt, &GradedCorrespondence::new(&x, &x, diagonal_class(&x))?)
        }
        Command::ChernCharacter(b) => cycle_out(fmt, &chern_character(&bundle_arg(b)?)),
        Command::Todd(b) => cycle_out(fmt, &todd_class(&bundle_arg(b)?)),
        Command::SqrtTodd { variety } => cycle_out(fmt, &sqrt_todd(&variety_arg(variety)?)),
        Command::Tangent { variety } => {
            let t = tangent_class(&variety_arg(variety)?);
            emit(fmt, &t, |t| format!("rank {}: c = {}", t.rank(), t.total_chern()))
        }
        Command::Euler {
            input,
            variety,
            line_bundle: lb,
        } => {
            let class = match (input, variety, lb) {
                (Some(input), None, None) => {
                    let v = load(input)?;
                    if v.get("total_chern").is_some() {
                        KClass::from_bundle(&BundleClass::from_value(v)?)
                    } else {
                        KClass::from_value(v)?
                    }
                }
                (None, Some(v), Some(l)) => {
                    let x = variety_arg(v)?;
                    KClass::from_bundle(&line_bundle(&x, &int_list(l, "line bundle")?)?)
                }
                (None, Some(v), None) => KClass::structure_sheaf(&variety_arg(v)?),
                _ => {
                    return Err(Error::InvalidInput(
                        "give a KClass or BundleClass JSON, or --variety with optional --line-bundle"
                            .into(),
                    ))
                }
            };
            scalar(fmt, "euler_characteristic", &format_rational(&euler_characteristic(&class)))
        }
        Command::Mu { kernel } => corr_out(fmt, &mu(&load_as(kernel)?)),
        Command::KCompose { e, f } => {
            let (e, f): (KKernel, KKernel) = (load_as(e)?, load_as(f)?);
            kernel_out(fmt, &k_compose(&e, &f)?)
        }
        Command::IdentityKernel { variety } => kernel_out(fmt, &identity_kernel(&variety_arg(variety)?)),
        Command::Motive {
            input,
            variety,
            twist,
        } => {
            let m = match (input, variety) {
                (Some(input), None) => load_as::<Motive>(input)?,
                (None, Some(v)) => crate::motive::tate_twist(&motive_of(&variety_arg(v)?), -*twist),
                _ => {
                    return Err(Error::InvalidInput(
                        "give a Motive JSON or --variety".into(),
                    ))
                }
            };
            emit(fmt, &m, |m| m.to_string())
        }
        Command::Split { motive, projector } => {
            let m: Motive = load_as(motive)?;
            let p: Cycle = load_as(projector)?;
            let x = m.variety().clone();
            let p = MotiveMorphism::new(&m, &m, GradedCorrespondence::new(&x, &x, p)?)?;
            let (image, s, t) = split_idempotent(&m, &p)?;
            match fmt {
                Format::Json => pretty(&json!({
                    "image": image.to_value(),
                    "section": morphism_value(&s),
                    "retraction": morphism_value(&t),
                })),
                Format::Text => format!(
                    "image: {image}\nsection: {}\nretraction: {}",
                    corr_text(s.corr()),
                    corr_text(t.corr())
                ),
            }
        }
        Command::OrbitCompose { f, g } => {
            let (f, g): (OrbitMorphism, OrbitMorphism) = (load_as(f)?, load_as(g)?);
            let h = orbit_compose(&f, &g)?;
            emit(fmt, &h, |h| {
                let mut lines = vec![format!("{} -> {}", h.source(), h.target())];
                for (i, c) in h.components() {
                    lines.push(format!("[{i}] {}", c.cycle()));
                }
                lines.join("\n")
            })
        }
        Command::Orlov { e, f } => {
            let (e, f): (KKernel, KKernel) = (load_as(e)?, load_as(f)?);
            let r = orlov_pipeline(&e, &f)?;
            let verdict = match &r.verdict {
                OrlovVerdict::NotEquivalent => "not-equivalent",
                OrlovVerdict::TateTwistOnly => "tate-twist-only",
                OrlovVerdict::ChowIsomorphism { .. } => "chow-isomorphism",
            };
            match fmt {
                Format::Json => {
                    let mut v = json!({
                        "verdict": verdict,
                        "dimension": r.dimension,
                        "mutually_inverse": r.mutually_inverse,
                        "forward": r.forward.to_value(),
                        "backward": r.backward.to_value(),
                        "forward_support_floor": floor_value(r.forward_support_floor),
                        "backward_support_floor": floor_value(r.backward_support_floor),
                    });
                    if let OrlovVerdict::ChowIsomorphism { forward, backward } = &r.verdict {
                        v["rigidified"] = json!({
                            "forward": morphism_value(forward),
                            "backward": morphism_value(backward),
                        });
                    }
                    pretty(&v)
                }
                Format::Text => {
                    let mut lines = vec![
                        format!("verdict: {verdict}"),
                        format!("mu(E) = {}", r.forward.cycle()),
                        format!("mu(F) = {}", r.backward.cycle()),
                    ];
                    if let OrlovVerdict::ChowIsomorphism { forward, backward } = &r.verdict {
                        lines.push(format!("degree 0 forward: {}", forward.corr().cycle()));
                        lines.push(format!("degree 0 backward: {}", backward.corr().cycle()));
                    }
                    lines.join("\n")
                }
            }
        }
        Command::Compat { kernel } => {
            let ok = compatibility_check(&load_as(kernel)?);
            match fmt {
                Format::Json => pretty(&json!({ "compatible": ok })),
                Format::Text => ok.to_string(),
            }
        }
        Command::Verify { seed, samples } => {
            let report = run_suite(*seed, *samples);
            let code = if report.all_passed() { 0 } else { 1 };
            let text = match fmt {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
                Format::Text => report.to_string(),
            };
            return Ok((code, text));
        }
    };
    Ok((0, out))
}

fn floor_value(f: u32) -> Value {
    if f == crate::kshadow::NO_SUPPORT {
        Value::Null
    } else {
        json!(f)
    }
}

fn scalar(fmt: Format, key: &str, value: &str) -> String {
    match fmt {
        Format::Json => pretty(&json!({ key: value })),
        Format::Text => value.to_string(),
    }
}
