//! Command-line front end: constants tables, constants for custom
//! parameters, and zero-count verification sweeps.
//!
//! Exit codes: 0 success, 1 other failure, 2 a verification bound was
//! violated, 3 numerical non-convergence, 64 usage error.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use zerobound::constants::{
    d_constants_with, render_table_with, table_json_with, theorem_one_with, Accuracy,
};
use zerobound::zerocount::{verify_with, CountOptions, Subject, TheoremBound, ZeroCountReport};
use zerobound::{
    derive_params, enumerate_characters, BoundParameters, Error, EvalTolerance, PRule, TableFormat,
    Theorem,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

const PUBLISHED_ETA_GRID: &str = "0.05:0.50:0.05";

#[derive(Debug, Parser)]
#[command(
    name = "zerobound",
    version,
    about = "Explicit zero-counting constants and their numerical verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate the constants over a grid of eta, one column group per T0.
    ConstantsTable(TableArgs),
    /// Evaluate the constants (rounded up and exact) for given parameters.
    ConstantsEval(EvalArgs),
    /// Count zeros of L(s, chi) for every primitive nonprincipal chi mod k
    /// and check them against the Dirichlet bound.
    VerifyDirichlet(DirichletArgs),
    /// Count zeros of zeta_K for K = Q (disc 1) or a quadratic field and
    /// check them against the Dedekind bound.
    VerifyDedekind(DedekindArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Md => TableFormat::Markdown,
            Format::Csv => TableFormat::Csv,
            Format::Json => TableFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Lower bound parameter T0 (repeatable).
    #[arg(long = "t0", default_value = "1")]
    t0: Vec<f64>,
    /// Rule for p: `eta-over-7` or `fixed:<value>` with -eta <= value < 0.
    #[arg(long, default_value = "eta-over-7", value_parser = parse_p_rule)]
    p_rule: PRule,
    /// Absolute tolerance of the arc integrals.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct EtaArgs {
    /// Value of eta (repeatable).
    #[arg(long, conflicts_with = "eta_grid")]
    eta: Vec<f64>,
    /// Inclusive grid `start:stop:step`.
    #[arg(long, value_parser = parse_grid)]
    eta_grid: Option<Grid>,
}

#[derive(Debug, Clone)]
struct Grid(Vec<f64>);

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value = "1", value_parser = clap::value_parser!(u8).range(1..=2))]
    theorem: u8,
    #[command(flatten)]
    eta: EtaArgs,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, default_value = "1", value_parser = clap::value_parser!(u8).range(1..=2))]
    theorem: u8,
    #[command(flatten)]
    eta: EtaArgs,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Height T of the counting rectangle (repeatable).
    #[arg(long = "T", default_value = "10")]
    t: Vec<f64>,
    /// eta of the constants checked against.
    #[arg(long, default_value = "0.25")]
    eta: f64,
    /// Lower bound parameter T0 of the constants checked against.
    #[arg(long = "t0", default_value = "1")]
    t0: f64,
    #[arg(long, default_value = "eta-over-7", value_parser = parse_p_rule)]
    p_rule: PRule,
    /// Absolute tolerance of the L-function evaluations.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct DirichletArgs {
    /// Modulus k >= 3 (repeatable).
    #[arg(long, required = true)]
    modulus: Vec<u64>,
    #[command(flatten)]
    sweep: SweepArgs,
}

#[derive(Debug, Args)]
struct DedekindArgs {
    /// Fundamental discriminant, or 1 for the rationals (repeatable).
    #[arg(long, required = true, allow_hyphen_values = true)]
    quadratic_disc: Vec<i64>,
    #[command(flatten)]
    sweep: SweepArgs,
}

fn parse_p_rule(s: &str) -> Result<PRule, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<f64> = s
        .split(':')
        .map(str::parse::<f64>)
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad grid {s:?}: {e}"))?;
    let [start, stop, step] = parts[..] else {
        return Err(format!("grid must be start:stop:step, got {s:?}"));
    };
    if !(step > 0.0) || stop < start {
        return Err(format!("grid {s:?} needs step > 0 and stop >= start"));
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    if n > 10_000 {
        return Err(format!("grid {s:?} has more than 10000 points"));
    }
    // rounded to 12 decimals so 0.05:0.50:0.05 yields exactly 0.3 etc.
    Ok(Grid(
        (0..=n)
            .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
            .collect(),
    ))
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonConvergence(_) | Error::BoundaryZero { .. } | Error::NonFinite(_) => {
                EXIT_NONCONVERGENCE
            }
            Error::Domain(_) | Error::NotPrimitive { .. } | Error::NotFundamental(_) => EXIT_USAGE,
            Error::Pole(_) => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

struct Output {
    text: String,
    code: i32,
}

/// Parse `args` (including the program name), run the command, write
/// results to `out` and diagnostics to `err`, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::ConstantsTable(a) => constants_table(a),
        Command::ConstantsEval(a) => constants_eval(a),
        Command::VerifyDirichlet(a) => verify_dirichlet(a),
        Command::VerifyDedekind(a) => verify_dedekind(a),
    };
    match result {
        Ok(output) => {
            if out.write_all(output.text.as_bytes()).is_err() {
                return EXIT_FAILURE;
            }
            if output.code == EXIT_VIOLATION {
                let _ = writeln!(err, "zerobound: at least one count exceeds its bound");
            }
            output.code
        }
        Err(f) => {
            let _ = writeln!(err, "zerobound: {}", f.message);
            f.code
        }
    }
}

fn accuracy(tol: Option<f64>) -> Result<Accuracy, Failure> {
    let mut acc = Accuracy::default();
    if let Some(t) = tol {
        if !(t > 0.0 && t < 1.0) {
            return Err(usage(format!("--tol must lie in (0, 1), got {t}")));
        }
        acc.quad_tol = t;
    }
    Ok(acc)
}

fn eta_values(eta: &EtaArgs, default: &str) -> Result<Vec<f64>, Failure> {
    if let Some(grid) = &eta.eta_grid {
        return Ok(grid.0.clone());
    }
    if !eta.eta.is_empty() {
        return Ok(eta.eta.clone());
    }
    parse_grid(default).map(|g| g.0).map_err(usage)
}

/// Validate every parameter combination before any computation.
fn check_params(etas: &[f64], params: &ParamArgs) -> Result<(), Failure> {
    for &eta in etas {
        for &t0 in &params.t0 {
            derive_params(eta, params.p_rule, t0)?;
        }
    }
    Ok(())
}

fn envelope(command: &str, params: Value, rows: Value) -> String {
    let v = json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "params": params,
        "rows": rows,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("envelope serializes");
    s.push('\n');
    s
}

fn constants_table(a: TableArgs) -> Result<Output, Failure> {
    let theorem = Theorem::try_from(a.theorem)?;
    let etas = eta_values(&a.eta, PUBLISHED_ETA_GRID)?;
    check_params(&etas, &a.params)?;
    let acc = accuracy(a.params.tol)?;
    let t0s = &a.params.t0;

    let table = table_json_with(theorem, t0s, &etas, a.params.p_rule, &acc)?;
    let failed = table
        .as_array()
        .into_iter()
        .flatten()
        .flat_map(|env| env["rows"].as_array().cloned().unwrap_or_default())
        .any(|row| row.get("error").is_some());
    let code = if failed { EXIT_NONCONVERGENCE } else { EXIT_OK };
    let text = match a.format {
        Format::Json => envelope(
            "constants-table",
            json!({
                "theorem": a.theorem,
                "t0": t0s,
                "eta": etas,
                "p_rule": a.params.p_rule.to_string(),
                "tol": acc.quad_tol,
            }),
            table,
        ),
        f => render_table_with(theorem, t0s, &etas, a.params.p_rule, f.into(), &acc)?,
    };
    Ok(Output { text, code })
}

fn eval_row(theorem: Theorem, params: &BoundParameters, acc: &Accuracy) -> Result<Value, Failure> {
    let base = json!({"eta": params.eta, "T0": params.t0, "p": params.p});
    let extra = match theorem {
        Theorem::One => {
            let c = theorem_one_with(params, acc)?;
            let r = c.rounded_up();
            json!({"C1": r.c1, "C2": r.c2, "C1_exact": c.c1, "C2_exact": c.c2})
        }
        Theorem::Two => {
            let d = d_constants_with(params, acc)?;
            let r = d.rounded_up();
            json!({
                "D1": r.d1, "D2": r.d2, "D3": r.d3,
                "D1_exact": d.d1, "D2_exact": d.d2, "D3_exact": d.d3,
            })
        }
    };
    let mut row = base;
    row.as_object_mut()
        .expect("object")
        .extend(extra.as_object().expect("object").clone());
    Ok(row)
}

/// Renders a list of flat JSON objects as markdown or CSV, columns in the
/// given order.
fn render_rows(rows: &[Value], columns: &[&str], format: Format) -> String {
    let cell = |v: &Value| match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => format!("{x}"),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        other => other.to_string(),
    };
    let mut out = String::new();
    match format {
        Format::Md => {
            writeln!(out, "| {} |", columns.join(" | ")).unwrap();
            writeln!(out, "|{}", "---|".repeat(columns.len())).unwrap();
            for row in rows {
                let fields: Vec<String> = columns.iter().map(|c| cell(&row[*c])).collect();
                writeln!(out, "| {} |", fields.join(" | ")).unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "{}", columns.join(",")).unwrap();
            for row in rows {
                let fields: Vec<String> = columns
                    .iter()
                    .map(|c| {
                        let s = cell(&row[*c]);
                        if s.contains(',') || s.contains('"') {
                            format!("\"{}\"", s.replace('"', "\"\""))
                        } else {
                            s
                        }
                    })
                    .collect();
                writeln!(out, "{}", fields.join(",")).unwrap();
            }
        }
        Format::Json => unreachable!("json handled by the envelope"),
    }
    out
}

fn constants_eval(a: EvalArgs) -> Result<Output, Failure> {
    let theorem = Theorem::try_from(a.theorem)?;
    let etas = eta_values(&a.eta, "0.25:0.25:1")?;
    check_params(&etas, &a.params)?;
    let acc = accuracy(a.params.tol)?;
    let combos: Vec<BoundParameters> = etas
        .iter()
        .flat_map(|&eta| a.params.t0.iter().map(move |&t0| (eta, t0)))
        .map(|(eta, t0)| derive_params(eta, a.params.p_rule, t0))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Value> = combos
        .par_iter()
        .map(|p| eval_row(theorem, p, &acc))
        .collect::<Result<_, _>>()?;
    let text = match a.format {
        Format::Json => envelope(
            "constants-eval",
            json!({
                "theorem": a.theorem,
                "t0": a.params.t0,
                "eta": etas,
                "p_rule": a.params.p_rule.to_string(),
                "tol": acc.quad_tol,
            }),
            Value::Array(rows),
        ),
        f => {
            let columns: &[&str] = match theorem {
                Theorem::One => &["eta", "T0", "p", "C1", "C2", "C1_exact", "C2_exact"],
                Theorem::Two => &[
                    "eta", "T0", "p", "D1", "D2", "D3", "D1_exact", "D2_exact", "D3_exact",
                ],
            };
            render_rows(&rows, columns, f)
        }
    };
    Ok(Output {
        text,
        code: EXIT_OK,
    })
}

fn count_options(tol: Option<f64>) -> Result<CountOptions, Failure> {
    let mut opts = CountOptions::default();
    if let Some(t) = tol {
        opts.tol = EvalTolerance::new(t, opts.tol.max_terms())?;
    }
    Ok(opts)
}

fn sweep(
    command: &str,
    subjects: Vec<Subject>,
    bound: TheoremBound,
    s: &SweepArgs,
    mut params: Value,
) -> Result<Output, Failure> {
    let opts = count_options(s.tol)?;
    let jobs: Vec<(usize, f64)> = (0..subjects.len())
        .flat_map(|i| s.t.iter().map(move |&t| (i, t)))
        .collect();
    let reports: Vec<ZeroCountReport> = jobs
        .par_iter()
        .map(|&(i, t)| verify_with(&subjects[i], t, bound, &opts))
        .collect::<Result<_, _>>()?;
    let code = if reports.iter().any(|r| r.violated) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| serde_json::to_value(r).expect("report serializes"))
        .collect();
    let text = match s.format {
        Format::Json => {
            let obj = params.as_object_mut().expect("object");
            obj.insert("T".into(), json!(s.t));
            obj.insert("tol".into(), json!(opts.tol.abs_tol()));
            envelope(command, params, Value::Array(rows))
        }
        f => render_rows(
            &rows,
            &[
                "subject",
                "T",
                "perturbed_T",
                "N",
                "main_term",
                "bound",
                "slack",
                "winding_residual",
                "violated",
            ],
            f,
        ),
    };
    Ok(Output { text, code })
}

fn sweep_params(s: &SweepArgs) -> Result<BoundParameters, Failure> {
    for &t in &s.t {
        if !(t >= s.t0.max(1.0)) || !t.is_finite() {
            return Err(usage(format!(
                "--T {t} must be finite and at least max(1, T0 = {})",
                s.t0
            )));
        }
    }
    Ok(derive_params(s.eta, s.p_rule, s.t0)?)
}

fn verify_dirichlet(a: DirichletArgs) -> Result<Output, Failure> {
    let params = sweep_params(&a.sweep)?;
    let constants = theorem_one_with(&params, &Accuracy::default())?.rounded_up();
    let mut subjects = Vec::new();
    for &k in &a.modulus {
        let chars = enumerate_characters(k)?;
        let before = subjects.len();
        for chi in chars
            .into_iter()
            .filter(|c| c.is_primitive() && !c.is_principal())
        {
            subjects.push(Subject::dirichlet(chi)?);
        }
        if subjects.len() == before {
            return Err(usage(format!(
                "no primitive nonprincipal character mod {k}"
            )));
        }
    }
    let info = json!({
        "modulus": a.modulus,
        "eta": params.eta,
        "t0": params.t0,
        "p_rule": a.sweep.p_rule.to_string(),
        "C1": constants.c1,
        "C2": constants.c2,
    });
    sweep(
        "verify-dirichlet",
        subjects,
        TheoremBound::One(constants),
        &a.sweep,
        info,
    )
}

fn verify_dedekind(a: DedekindArgs) -> Result<Output, Failure> {
    let params = sweep_params(&a.sweep)?;
    let constants = d_constants_with(&params, &Accuracy::default())?.rounded_up();
    let subjects = a
        .quadratic_disc
        .iter()
        .map(|&d| Subject::quadratic(d))
        .collect::<Result<Vec<_>, _>>()?;
    let info = json!({
        "quadratic_disc": a.quadratic_disc,
        "eta": params.eta,
        "t0": params.t0,
        "p_rule": a.sweep.p_rule.to_string(),
        "D1": constants.d1,
        "D2": constants.d2,
        "D3": constants.d3,
    });
    sweep(
        "verify-dedekind",
        subjects,
        TheoremBound::Two(constants),
        &a.sweep,
        info,
    )
}
