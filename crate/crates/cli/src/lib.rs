//! Command-line front end for `hns-core`.
//!
//! Every command prints one JSON object on standard output. Failures print
//! `{"error": {...}}` and exit with 1 for domain errors (no unit, no real
//! transition, singular input) or 2 for parse and usage errors.

pub mod document;

use std::ffi::OsString;
use std::fs;

use clap::{Parser, Subcommand, ValueEnum};
use hns_core::classify::{classify, normal_form};
use hns_core::transforms::{diagonal_reduce, family_5, family_sol2, gamma5_chain, gamma5_to_gamma7};
use hns_core::verify::{verify_isomorphism_seeded, DEFAULT_SAMPLES, DEFAULT_SEED};
use hns_core::{
    multiply, unit_element, BasisTransform, Element, HnsError, IsoReport, StructuralConstants, Tolerance, UnitSolution,
};
use serde_json::{json, Value};

pub use document::{parse_system, ParseError, SystemDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hns", version, about = "Two-dimensional hypercomplex number systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a system as Complex, Dual, Double or NonUnital
    Classify { file: String },
    /// Solve for the unit element
    Unit { file: String },
    /// Multiply two elements given by their coordinates
    #[command(allow_negative_numbers = true)]
    Multiply { file: String, m1: f64, m2: f64, n1: f64, n2: f64 },
    /// Generate a system from one of the unital families
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Build the transition from a Γ5-shaped system to a Γ7-shaped system
    Transform {
        src: String,
        dst: String,
        #[arg(long, value_enum, default_value_t = Via::Rr)]
        via: Via,
    },
    /// Check that a basis transform is an isomorphism between two systems
    #[command(allow_negative_numbers = true)]
    Verify {
        src: String,
        dst: String,
        t11: f64,
        t12: f64,
        t21: f64,
        t22: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// b11 = a12 = 0, b12 = a11
    #[command(allow_negative_numbers = true)]
    Five {
        a11: f64,
        a22: f64,
        b22: f64,
        #[arg(long)]
        name: Option<String>,
    },
    /// b11 = a12 = 0, a11 = b12 = b22
    #[command(allow_negative_numbers = true)]
    Sol2 {
        a22: f64,
        b22: f64,
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    /// Through R⊕R, listing both links
    Rr,
    /// Only the composite operator
    Direct,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
    key: Option<String>,
}

impl Failure {
    fn usage(kind: &'static str, message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, kind, message: message.into(), key: None }
    }

    fn domain(kind: &'static str, message: impl Into<String>) -> Self {
        Self { code: EXIT_DOMAIN, kind, message: message.into(), key: None }
    }
}

impl From<HnsError> for Failure {
    fn from(e: HnsError) -> Self {
        let kind = match e {
            HnsError::NonUnitalSystem | HnsError::NoConstantUnit => "non-unital",
            HnsError::NonPositiveDiscriminant(_) => "non-positive-discriminant",
            HnsError::SingularTransform(_) => "singular-transform",
            HnsError::ZeroParameter(_) => "zero-parameter",
            HnsError::NotDiagonal { .. } => "shape",
            _ => "domain",
        };
        Failure::domain(kind, e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure { code: EXIT_USAGE, kind: "parse", message: e.to_string(), key: Some(e.key) }
    }
}

/// Round to 12 significant digits for display.
pub fn display_number(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn num(x: f64) -> Value {
    json!(display_number(x))
}

fn pair(e: Element) -> Value {
    json!([display_number(e.m1), display_number(e.m2)])
}

fn matrix(t: &BasisTransform) -> Value {
    json!([[num(t.t11), num(t.t12)], [num(t.t21), num(t.t22)]])
}

fn report_json(r: &IsoReport) -> Value {
    json!({
        "passed": r.passed,
        "max_residual": num(r.max_residual),
        "basis_residuals": r.basis_residuals.iter().map(|v| num(*v)).collect::<Vec<_>>(),
        "samples_checked": r.samples_checked,
        "tolerance": num(r.tolerance),
    })
}

fn load(path: &str) -> Result<SystemDocument, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::usage("io", format!("{path}: {e}")))?;
    parse_system(&bytes).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{path}: {}", f.message);
        f
    })
}

pub fn classify_json(doc: &SystemDocument) -> Value {
    let class = classify(&doc.constants);
    match normal_form(&doc.constants) {
        Ok(nf) => json!({
            "system": doc.name,
            "class": class.as_str(),
            "discriminant": num(nf.discriminant()),
            "normal_form": {"p": num(nf.p), "q": num(nf.q)},
        }),
        Err(_) => json!({
            "system": doc.name,
            "class": class.as_str(),
            "discriminant": Value::Null,
            "normal_form": Value::Null,
        }),
    }
}

/// `(a22, b22)` of a table shaped `f1 | f2 / f2 | a22 b22 f1 + b22 f2`.
fn gamma5_parameters(t: &StructuralConstants) -> Option<(f64, f64)> {
    let tol = Tolerance::default();
    let shaped = tol.eq(t.a11, 1.0)
        && tol.is_zero(t.a12, 1.0)
        && tol.is_zero(t.b11, 1.0)
        && tol.eq(t.b12, 1.0)
        && !tol.is_zero(t.b22, 1.0);
    shaped.then(|| (t.a22 / t.b22, t.b22))
}

fn transform_json(src: &SystemDocument, dst: &SystemDocument, via: Via) -> Result<Value, Failure> {
    let (a22, b22) = gamma5_parameters(&src.constants).ok_or_else(|| {
        Failure::domain("shape", format!("{}: not of the form f1 | f2 / f2 | p f1 + q f2 with q ≠ 0", src.name))
    })?;
    let g7 = diagonal_reduce(&dst.constants).map_err(|e| {
        Failure::domain("shape", format!("{}: not of the form α11 f1 | 0 / 0 | β22 f2 ({e})", dst.name))
    })?;
    let (alpha11, beta22) = (g7.a11, g7.b22);

    let mut out = json!({
        "via": match via { Via::Rr => "rr", Via::Direct => "direct" },
        "source": src.name,
        "target": dst.name,
        "parameters": {"a22": num(a22), "b22": num(b22), "alpha11": num(alpha11), "beta22": num(beta22)},
    });
    let composite = match via {
        Via::Rr => {
            let chain = gamma5_chain(a22, b22, alpha11, beta22)?;
            out["links"] = chain
                .links()
                .iter()
                .map(|l| json!({"source": l.source, "target": l.target, "matrix": matrix(&l.transform)}))
                .collect();
            chain.composite()
        }
        Via::Direct => gamma5_to_gamma7(a22, b22, alpha11, beta22)?,
    };
    let report = verify_isomorphism_seeded(&src.constants, &dst.constants, &composite, DEFAULT_SAMPLES, DEFAULT_SEED)?;
    out["matrix"] = matrix(&composite);
    out["inverse"] = matrix(&composite.inverse()?);
    out["report"] = report_json(&report);
    Ok(out)
}

fn execute(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Classify { file } => Ok(classify_json(&load(&file)?)),
        Command::Unit { file } => {
            let doc = load(&file)?;
            Ok(match unit_element(&doc.constants) {
                UnitSolution::Constant(x) => json!({"unit": pair(x)}),
                UnitSolution::ProbeDependent => json!({"unit": Value::Null, "reason": "probe-dependent"}),
                UnitSolution::Degenerate => json!({"unit": Value::Null, "reason": "degenerate"}),
            })
        }
        Command::Multiply { file, m1, m2, n1, n2 } => {
            let doc = load(&file)?;
            let product = multiply(&doc.constants, Element::new(m1, m2), Element::new(n1, n2));
            Ok(json!({"product": pair(product)}))
        }
        Command::Family { family } => {
            let doc = match family {
                Family::Five { a11, a22, b22, name } => SystemDocument::new(
                    name.unwrap_or_else(|| "family-5".into()),
                    family_5(a11, a22, b22)?,
                )
                .with_description(format!("family 5 with a11 = {a11}, a22 = {a22}, b22 = {b22}; unit E1/a11")),
                Family::Sol2 { a22, b22, name } => {
                    SystemDocument::new(name.unwrap_or_else(|| "solution-2".into()), family_sol2(a22, b22)?)
                        .with_description(format!("solution 2 with a22 = {a22}, b22 = {b22}; unit E1/b22"))
                }
            };
            Ok(serde_json::from_str(&doc.to_json()).expect("document is valid JSON"))
        }
        Command::Transform { src, dst, via } => transform_json(&load(&src)?, &load(&dst)?, via),
        Command::Verify { src, dst, t11, t12, t21, t22, samples, seed } => {
            let (src, dst) = (load(&src)?, load(&dst)?);
            let t = BasisTransform::new(t11, t12, t21, t22);
            let report = verify_isomorphism_seeded(&src.constants, &dst.constants, &t, samples, seed)?;
            Ok(report_json(&report))
        }
    }
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON value serializes");
    s.push('\n');
    s
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() };
            }
            return failure(Failure::usage("usage", e.kind().to_string()), e.to_string());
        }
    };
    match execute(cli.command) {
        Ok(value) => Outcome { code: EXIT_OK, stdout: render(&value), stderr: String::new() },
        Err(f) => {
            let diagnostic = format!("error: {}\n", f.message);
            failure(f, diagnostic)
        }
    }
}

fn failure(f: Failure, diagnostic: String) -> Outcome {
    let mut error = json!({"kind": f.kind, "message": f.message});
    if let Some(key) = f.key {
        error["key"] = json!(key);
    }
    Outcome { code: f.code, stdout: render(&json!({"error": error})), stderr: diagnostic }
}
