//! Command-line front end: parse instances and solutions, dispatch to the
//! solver, and render text or JSON reports.
//!
//! Exit codes: 0 = success / affirmative answer; 1 = well-formed negative
//! answer (not minimal, infeasible membership, counterexample found);
//! 2 = invalid input; 3 = search budget exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use minsol::decompose::{
    caratheodory_reduce, decompose, membership, trace, ConvexCertificate, Membership, Trace,
};
use minsol::fundamental::{
    completely_fundamental_set, extreme_points_check_with, genfun_denominator,
    is_cf_bruteforce_with,
};
use minsol::graver::{
    f_sets, graver_basis_with, orthant_instance, verify_containment_with, SignedVector,
};
use minsol::hilbert::{
    as_partition_identity, check_bounds, hilbert_basis_with, is_minimal, BoundsReport, SearchBox,
    DEFAULT_NODE_BUDGET,
};
use minsol::{Error, Instance, Rational, Solution};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "minsol",
    version,
    about = "Exact solver for a.x = b.y over nonnegative integers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Hilbert basis: every minimal solution, canonically sorted.
    Hilbert(InstanceArgs),
    /// Write a minimal solution as a convex combination of generators.
    Decompose(DecomposeArgs),
    /// Show the forward pivot pass and reverse coefficient pass, level by level.
    Trace(SolutionArgs),
    /// Decide exact membership of a solution in the hull of a vertex set and the origin.
    Membership(MembershipArgs),
    /// Single-row Graver basis with generator sets and containment certificates.
    Graver(GraverArgs),
    /// Completely fundamental solutions: list them, or check one by bounded search.
    Cfs(CfsArgs),
    /// Denominator of the solution-counting generating function.
    Genfun(InstanceArgs),
    /// Validate a pair (x, y): equation, minimality, norm bounds, identity.
    Check(SolutionArgs),
    /// Extreme points of the basis hull, for coprime instances.
    Extreme(InstanceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Limit on explored search nodes for all enumerations.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    max_nodes: u64,
}

#[derive(Args)]
struct InstanceArgs {
    /// Comma-separated positive integers for the left side.
    #[arg(long)]
    a: Option<String>,
    /// Comma-separated positive integers for the right side.
    #[arg(long)]
    b: Option<String>,
    /// JSON input file {"a":[...],"b":[...],"x":[...],"y":[...]} (x, y optional).
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct SolutionArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Comma-separated nonnegative integers for x.
    #[arg(long)]
    x: Option<String>,
    /// Comma-separated nonnegative integers for y.
    #[arg(long)]
    y: Option<String>,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    solution: SolutionArgs,
    /// Rewrite the certificate to use at most n+m-1 generators.
    #[arg(long)]
    reduce: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VertexChoice {
    /// All generators g(i, j).
    Generators,
    /// The scaled minimal generators (1/d) g(i, j).
    MinimalGenerators,
    /// The Hilbert basis.
    Hilbert,
}

#[derive(Args)]
struct MembershipArgs {
    #[command(flatten)]
    solution: SolutionArgs,
    /// Vertex set for the hull query (the origin is always included).
    #[arg(long, value_enum, default_value = "generators")]
    vertices: VertexChoice,
}

#[derive(Args)]
struct GraverArgs {
    /// Comma-separated signed integers for the row vector.
    #[arg(long)]
    alpha: String,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct CfsArgs {
    #[command(flatten)]
    solution: SolutionArgs,
    /// Bound on the multiplier k for the brute-force check.
    #[arg(long, default_value_t = 4)]
    k_max: u32,
}

enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CmdResult = Result<(String, i32), CliError>;

/// An instance plus the optional (x, y) vectors found next to it in a file.
type LoadedInstance = (Instance, Option<(Vec<BigInt>, Vec<BigInt>)>);

/// Parses and runs one invocation. Output goes to `out`, diagnostics to
/// `err`; the return value is the process exit code.
pub fn run<O: Write, E: Write>(args: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            } else {
                let _ = write!(err, "{rendered}");
                EXIT_INVALID
            };
        }
    };
    let result = match cli.command {
        Command::Hilbert(args) => cmd_hilbert(&args),
        Command::Decompose(args) => cmd_decompose(&args),
        Command::Trace(args) => cmd_trace(&args),
        Command::Membership(args) => cmd_membership(&args),
        Command::Graver(args) => cmd_graver(&args),
        Command::Cfs(args) => cmd_cfs(&args),
        Command::Genfun(args) => cmd_genfun(&args),
        Command::Check(args) => cmd_check(&args),
        Command::Extreme(args) => cmd_extreme(&args),
    };
    match result {
        Ok((output, code)) => {
            let _ = write!(out, "{output}");
            code
        }
        Err(CliError::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::SearchBudgetExceeded { .. } => EXIT_BUDGET,
                Error::NotMinimal => EXIT_NEGATIVE,
                _ => EXIT_INVALID,
            }
        }
    }
}

fn parse_int_list(name: &str, text: &str) -> Result<Vec<BigInt>, CliError> {
    text.split(',')
        .map(|tok| {
            BigInt::from_str(tok.trim()).map_err(|_| {
                CliError::Input(format!("--{name}: {:?} is not an integer", tok.trim()))
            })
        })
        .collect()
}

/// Instance (and optional solution vectors) from either --input or flags.
fn load_instance(args: &InstanceArgs) -> Result<LoadedInstance, CliError> {
    if let Some(path) = &args.input {
        if args.a.is_some() || args.b.is_some() {
            return Err(CliError::Input(
                "--input cannot be combined with --a/--b".into(),
            ));
        }
        return parse_instance_file(path);
    }
    let (Some(a), Some(b)) = (&args.a, &args.b) else {
        return Err(CliError::Input(
            "either --input or both --a and --b are required".into(),
        ));
    };
    let a = parse_int_list("a", a)?;
    let b = parse_int_list("b", b)?;
    Ok((Instance::new(a, b)?, None))
}

/// Reads `{"a":[...],"b":[...]}` with optional `"x"`/`"y"` arrays, validating
/// the instance on the way in.
fn parse_instance_file(path: &PathBuf) -> Result<LoadedInstance, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: malformed JSON: {e}", path.display())))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Input(format!("{}: expected a JSON object", path.display())))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "a" | "b" | "x" | "y") {
            return Err(CliError::Input(format!(
                "{}: unknown field {key:?}",
                path.display()
            )));
        }
    }
    let field = |key: &str| -> Result<Vec<BigInt>, CliError> {
        let arr = obj
            .get(key)
            .ok_or_else(|| CliError::Input(format!("{}: missing field {key:?}", path.display())))?;
        value_to_ints(key, arr)
    };
    let inst = Instance::new(field("a")?, field("b")?)?;
    let solution = match (obj.contains_key("x"), obj.contains_key("y")) {
        (true, true) => Some((field("x")?, field("y")?)),
        (false, false) => None,
        _ => return Err(CliError::Input("x and y must appear together".into())),
    };
    Ok((inst, solution))
}

fn value_to_ints(name: &str, value: &Value) -> Result<Vec<BigInt>, CliError> {
    let arr = value
        .as_array()
        .ok_or_else(|| CliError::Input(format!("field {name:?} must be an array of integers")))?;
    arr.iter()
        .map(|v| match v {
            Value::Number(n) => BigInt::from_str(&n.to_string())
                .map_err(|_| CliError::Input(format!("field {name:?}: {n} is not an integer"))),
            other => Err(CliError::Input(format!(
                "field {name:?}: {other} is not an integer"
            ))),
        })
        .collect()
}

/// The instance plus a validated solution, from flags or the input file.
fn load_solution(args: &SolutionArgs) -> Result<(Instance, Solution), CliError> {
    let (inst, file_solution) = load_instance(&args.instance)?;
    let (x, y) = match (&args.x, &args.y, file_solution) {
        (Some(x), Some(y), None) => (parse_int_list("x", x)?, parse_int_list("y", y)?),
        (None, None, Some(pair)) => pair,
        (None, None, None) => {
            return Err(CliError::Input(
                "this command needs --x and --y (or an input file with x, y)".into(),
            ))
        }
        _ => {
            return Err(CliError::Input(
                "give the solution either as --x/--y or in the input file".into(),
            ))
        }
    };
    let solution = inst.solution(x, y)?;
    Ok((inst, solution))
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn int_value(v: &BigInt) -> Value {
    Value::Number(minsol::jsonnum::to_number(v))
}

fn ints_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

fn vecs_value(vs: &[SignedVector]) -> Value {
    Value::Array(vs.iter().map(|v| ints_value(v)).collect())
}

fn rat_list(lambda: &[Rational]) -> String {
    let parts: Vec<String> = lambda.iter().map(Rational::to_string).collect();
    format!("({})", parts.join(", "))
}

fn signed_str(v: &[BigInt]) -> String {
    if v.iter().all(|e| e == &BigInt::from(0)) {
        return "0".into();
    }
    let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(","))
}

/// Braces with the zero vector listed first, then the canonical order.
fn signed_set_str(set: &[SignedVector]) -> String {
    let mut parts = Vec::with_capacity(set.len());
    for v in set {
        if signed_str(v) == "0" {
            parts.insert(0, "0".to_string());
        } else {
            parts.push(signed_str(v));
        }
    }
    format!("{{{}}}", parts.join(", "))
}

fn cmd_hilbert(args: &InstanceArgs) -> CmdResult {
    let (inst, _) = load_instance(args)?;
    let search = SearchBox::lambert(&inst).with_hard_cap(args.common.max_nodes);
    let basis = hilbert_basis_with(&inst, &search)?;
    let output = match args.common.format {
        Format::Json => pretty(&basis),
        Format::Text => {
            let mut text = String::new();
            for s in &basis {
                let _ = writeln!(text, "{}", as_partition_identity(&inst, s)?);
            }
            text
        }
    };
    Ok((output, EXIT_OK))
}

fn render_certificate_text(inst: &Instance, point: &Solution, cert: &ConvexCertificate) -> String {
    let terms: Vec<String> = cert
        .generators()
        .iter()
        .map(|t| {
            let g = inst.generator(t.i, t.j).expect("index in range");
            format!("{} * {}", t.coef, g.vector())
        })
        .collect();
    let mut text = format!("{point} = {}\n", terms.join(" + "));
    let _ = writeln!(text, "slack (coefficient of the origin): {}", cert.slack());
    let _ = writeln!(text, "nonzero generators: {}", cert.nonzero_count());
    text
}

fn cmd_decompose(args: &DecomposeArgs) -> CmdResult {
    let (inst, solution) = load_solution(&args.solution)?;
    let mut cert = decompose(&inst, &solution)?;
    if args.reduce {
        cert = caratheodory_reduce(&inst, &cert)?;
    }
    let output = match args.solution.instance.common.format {
        Format::Json => pretty(&cert),
        Format::Text => render_certificate_text(&inst, &solution, &cert),
    };
    Ok((output, EXIT_OK))
}

/// Text rendering of a trace: the forward pivot table and the reverse
/// coefficient pass. The binary solution column is recovered from each
/// level's table (a copy position is active iff its row or column is
/// nonzero).
pub fn render_trace(tr: &Trace, format_json: bool) -> String {
    if format_json {
        return pretty(tr);
    }
    let active = |level: &minsol::decompose::TraceLevel| -> (Vec<usize>, Vec<usize>) {
        let rows: Vec<usize> = (0..level.lambdas.len())
            .filter(|&i| level.lambdas[i].iter().any(|v| !v.is_zero()))
            .collect();
        let cols: Vec<usize> = (0..level.lambdas.first().map_or(0, Vec::len))
            .filter(|&j| level.lambdas.iter().any(|row| !row[j].is_zero()))
            .collect();
        (rows, cols)
    };
    let mut text = String::from("forward pass:\n");
    for level in &tr.levels {
        let (rows, cols) = active(level);
        let ones = |count: usize| vec!["1"; count].join(",");
        let _ = writeln!(
            text,
            "  level {}: (({}),({})) | {} | a_{}={}, b_{}={}",
            level.record.level,
            ones(rows.len()),
            ones(cols.len()),
            level.record.identity,
            level.record.s + 1,
            level.record.a_s,
            level.record.t + 1,
            level.record.b_t,
        );
    }
    text.push_str("reverse pass:\n");
    for level in tr.levels.iter().rev() {
        let (rows, cols) = active(level);
        let mut cells = Vec::new();
        for &i in &rows {
            for &j in &cols {
                cells.push(format!(
                    "lambda[{},{}] = {}",
                    i + 1,
                    j + 1,
                    level.lambdas[i][j]
                ));
            }
        }
        let _ = writeln!(
            text,
            "  level {}: {} | {}",
            level.record.level,
            level.record.identity,
            cells.join(", ")
        );
    }
    text
}

fn cmd_trace(args: &SolutionArgs) -> CmdResult {
    let (inst, solution) = load_solution(args)?;
    let tr = trace(&inst, &solution)?;
    Ok((
        render_trace(&tr, args.instance.common.format == Format::Json),
        EXIT_OK,
    ))
}

fn cmd_membership(args: &MembershipArgs) -> CmdResult {
    let (inst, file_solution) = load_instance(&args.solution.instance)?;
    let (x, y) = match (&args.solution.x, &args.solution.y, file_solution) {
        (Some(x), Some(y), None) => (parse_int_list("x", x)?, parse_int_list("y", y)?),
        (None, None, Some(pair)) => pair,
        (None, None, None) => {
            return Err(CliError::Input(
                "membership needs --x and --y (or an input file with x, y)".into(),
            ))
        }
        _ => {
            return Err(CliError::Input(
                "give the point either as --x/--y or in the input file".into(),
            ))
        }
    };
    let format = args.solution.instance.common.format;
    let point = match inst.solution(x, y) {
        Ok(point) => point,
        Err(Error::NotASolution) => {
            // A well-formed point off the hyperplane is simply outside the hull.
            let output = match format {
                Format::Json => pretty(&json!({
                    "feasible": false,
                    "reason": "the point is not a solution of the equation",
                })),
                Format::Text => "infeasible: the point is not a solution of the equation\n".into(),
            };
            return Ok((output, EXIT_NEGATIVE));
        }
        Err(e) => return Err(e.into()),
    };
    let vertices: Vec<Solution> = match args.vertices {
        VertexChoice::Generators => inst
            .generators()
            .iter()
            .map(|g| g.vector().clone())
            .collect(),
        VertexChoice::MinimalGenerators => inst
            .generators()
            .iter()
            .map(|g| g.minimal_vector())
            .collect(),
        VertexChoice::Hilbert => {
            let search =
                SearchBox::lambert(&inst).with_hard_cap(args.solution.instance.common.max_nodes);
            hilbert_basis_with(&inst, &search)?
        }
    };
    match membership(&inst, &point, &vertices)? {
        Membership::Feasible { lambda } => {
            let sum: Rational = lambda.iter().sum();
            let output = match format {
                Format::Json => pretty(&json!({
                    "feasible": true,
                    "lambda": lambda.iter().map(Rational::to_string).collect::<Vec<_>>(),
                    "sum": sum.to_string(),
                })),
                Format::Text => format!("feasible: lambda = {}, sum {}\n", rat_list(&lambda), sum),
            };
            Ok((output, EXIT_OK))
        }
        Membership::Infeasible { forced } => {
            let output = match format {
                Format::Json => pretty(&json!({
                    "feasible": false,
                    "forced": forced.as_ref().map(|f| json!({
                        "lambda": f.lambda.iter().map(Rational::to_string).collect::<Vec<_>>(),
                        "sum": f.sum.to_string(),
                    })),
                })),
                Format::Text => match &forced {
                    Some(f) => {
                        let reason = if f.sum > Rational::one() {
                            format!("sum {} > 1", f.sum)
                        } else {
                            "negative coefficient".to_string()
                        };
                        format!("infeasible: forced {}, {}\n", rat_list(&f.lambda), reason)
                    }
                    None => "infeasible: no nonnegative combination with sum <= 1 exists\n".into(),
                },
            };
            Ok((output, EXIT_NEGATIVE))
        }
    }
}

fn cmd_graver(args: &GraverArgs) -> CmdResult {
    let alpha = parse_int_list("alpha", &args.alpha)?;
    let basis = graver_basis_with(&alpha, args.common.max_nodes)?;
    let sets = f_sets(&alpha)?;
    let containment = verify_containment_with(&alpha, args.common.max_nodes)?;
    match args.common.format {
        Format::Json => {
            let mut f_map = serde_json::Map::new();
            for (tau, set) in &sets.by_orientation {
                f_map.insert(tau.to_string(), vecs_value(set));
            }
            let certs: Vec<Value> = containment
                .certificates
                .iter()
                .map(|c| {
                    json!({
                        "element": ints_value(&c.element),
                        "orientation": c.orientation.to_string(),
                        "terms": c.terms.iter().map(|(v, coef)| json!({
                            "vector": ints_value(v),
                            "coef": coef.to_string(),
                        })).collect::<Vec<_>>(),
                        "sum": c.lambda_sum.to_string(),
                    })
                })
                .collect();
            let mut root = serde_json::Map::new();
            root.insert("graver".into(), vecs_value(&basis.elements));
            root.insert("f_sets".into(), Value::Object(f_map));
            root.insert("f_union".into(), vecs_value(&sets.union));
            root.insert("certificates".into(), Value::Array(certs));
            if !basis.zero_coordinates.is_empty() {
                root.insert(
                    "zero_coordinates".into(),
                    Value::Array(
                        basis
                            .zero_coordinates
                            .iter()
                            .map(|&i| json!(i + 1))
                            .collect(),
                    ),
                );
            }
            Ok((pretty(&Value::Object(root)), EXIT_OK))
        }
        Format::Text => {
            let mut text = String::new();
            if !basis.zero_coordinates.is_empty() {
                let coords: Vec<String> = basis
                    .zero_coordinates
                    .iter()
                    .map(|&i| format!("{}", i + 1))
                    .collect();
                let _ = writeln!(
                    text,
                    "warning: zero coefficients at positions {}; their unit vectors are Graver elements with no generator pairs",
                    coords.join(", ")
                );
            }
            text.push_str("orthant equations and generator sets:\n");
            for (tau, set) in &sets.by_orientation {
                let split = orthant_instance(&alpha, tau)?;
                let braces = signed_set_str(set);
                let fset = if set.len() == 1 {
                    braces
                } else {
                    format!("+-{braces}")
                };
                let _ = writeln!(text, "  {} | +-({}) | {}", split.equation(), tau, fset);
            }
            let _ = writeln!(text, "graver basis ({} elements):", basis.elements.len());
            for v in &basis.elements {
                let _ = writeln!(text, "  {}", signed_str(v));
            }
            let _ = writeln!(text, "f union: {}", signed_set_str(&sets.union));
            text.push_str("containment certificates:\n");
            for c in &containment.certificates {
                let terms: Vec<String> = c
                    .terms
                    .iter()
                    .map(|(v, coef)| format!("{} * {}", coef, signed_str(v)))
                    .collect();
                let _ = writeln!(
                    text,
                    "  {} = {}   [sum {}]",
                    signed_str(&c.element),
                    terms.join(" + "),
                    c.lambda_sum
                );
            }
            Ok((text, EXIT_OK))
        }
    }
}

fn cmd_cfs(args: &CfsArgs) -> CmdResult {
    let (inst, file_solution) = load_instance(&args.solution.instance)?;
    let format = args.solution.instance.common.format;
    let cf_set = completely_fundamental_set(&inst);
    let has_point =
        args.solution.x.is_some() || args.solution.y.is_some() || file_solution.is_some();
    if !has_point {
        let output = match format {
            Format::Json => pretty(&cf_set),
            Format::Text => {
                let mut text = String::new();
                for s in &cf_set {
                    let _ = writeln!(text, "{s}");
                }
                text
            }
        };
        return Ok((output, EXIT_OK));
    }
    let (x, y) = match (&args.solution.x, &args.solution.y, file_solution) {
        (Some(x), Some(y), None) => (parse_int_list("x", x)?, parse_int_list("y", y)?),
        (None, None, Some(pair)) => pair,
        _ => {
            return Err(CliError::Input(
                "give the solution either as --x/--y or in the input file".into(),
            ))
        }
    };
    let solution = inst.solution(x, y)?;
    let report = is_cf_bruteforce_with(
        &inst,
        &solution,
        args.k_max,
        args.solution.instance.common.max_nodes,
    )?;
    let closed_form = cf_set.contains(&solution);
    let negative = !closed_form || report.witness.is_some();
    let output = match format {
        Format::Json => pretty(&json!({
            "closed_form": closed_form,
            "k_max": args.k_max,
            "witness": report.witness.as_ref().map(|w| json!({
                "k": w.k,
                "left": serde_json::to_value(&w.left).expect("serializable"),
                "right": serde_json::to_value(&w.right).expect("serializable"),
            })),
        })),
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(
                text,
                "closed form: {}",
                if closed_form {
                    "completely fundamental (scaled generator)"
                } else {
                    "not completely fundamental"
                }
            );
            match &report.witness {
                Some(w) => {
                    let total = solution.scale(&BigInt::from(w.k));
                    let _ = writeln!(
                        text,
                        "brute force: counterexample at k = {}: {} = {} + {}",
                        w.k, total, w.left, w.right
                    );
                }
                None => {
                    let _ = writeln!(
                        text,
                        "brute force: no counterexample up to k = {}",
                        args.k_max
                    );
                }
            }
            text
        }
    };
    Ok((output, if negative { EXIT_NEGATIVE } else { EXIT_OK }))
}

fn cmd_genfun(args: &InstanceArgs) -> CmdResult {
    let (inst, _) = load_instance(args)?;
    let den = genfun_denominator(&inst);
    let output = match args.common.format {
        Format::Json => pretty(&den),
        Format::Text => format!("{}\n", den.render()),
    };
    Ok((output, EXIT_OK))
}

fn bounds_value(report: &BoundsReport) -> Value {
    json!({
        "x_norm": int_value(&report.x_norm),
        "y_norm": int_value(&report.y_norm),
        "lambert_x_bound": int_value(&report.lambert_x_bound),
        "lambert_y_bound": int_value(&report.lambert_y_bound),
        "refined_x_bound": report.refined_x_bound.to_string(),
        "refined_y_bound": report.refined_y_bound.to_string(),
        "lambert_x_ok": report.lambert_x_ok,
        "lambert_y_ok": report.lambert_y_ok,
        "refined_x_ok": report.refined_x_ok,
        "refined_y_ok": report.refined_y_ok,
    })
}

fn cmd_check(args: &SolutionArgs) -> CmdResult {
    let (inst, file_solution) = load_instance(&args.instance)?;
    let (x, y) = match (&args.x, &args.y, file_solution) {
        (Some(x), Some(y), None) => (parse_int_list("x", x)?, parse_int_list("y", y)?),
        (None, None, Some(pair)) => pair,
        (None, None, None) => {
            return Err(CliError::Input(
                "check needs --x and --y (or an input file with x, y)".into(),
            ))
        }
        _ => {
            return Err(CliError::Input(
                "give the solution either as --x/--y or in the input file".into(),
            ))
        }
    };
    let format = args.instance.common.format;
    let is_sol = inst.is_solution(&x, &y)?;
    if !is_sol {
        let output = match format {
            Format::Json => pretty(&json!({"solution": false})),
            Format::Text => "solution: no\n".into(),
        };
        return Ok((output, EXIT_NEGATIVE));
    }
    let solution = inst.solution(x, y).expect("checked above");
    if solution.is_zero() {
        let output = match format {
            Format::Json => pretty(&json!({"solution": true, "zero": true, "minimal": false})),
            Format::Text => {
                "solution: yes (zero)\nminimal: no (the zero solution is excluded)\n".into()
            }
        };
        return Ok((output, EXIT_NEGATIVE));
    }
    let minimal = is_minimal(&inst, &solution)?;
    let report = check_bounds(&inst, &solution)?;
    let identity = as_partition_identity(&inst, &solution)?;
    let output = match format {
        Format::Json => pretty(&json!({
            "solution": true,
            "zero": false,
            "minimal": minimal,
            "identity": identity,
            "bounds": bounds_value(&report),
        })),
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "solution: yes");
            let _ = writeln!(text, "identity: {identity}");
            let _ = writeln!(text, "minimal: {}", if minimal { "yes" } else { "no" });
            let ok = |b: bool| if b { "ok" } else { "VIOLATED" };
            let _ = writeln!(
                text,
                "lambert bounds: ||x||_1 = {} <= {} {}; ||y||_1 = {} <= {} {}",
                report.x_norm,
                report.lambert_x_bound,
                ok(report.lambert_x_ok),
                report.y_norm,
                report.lambert_y_bound,
                ok(report.lambert_y_ok),
            );
            let _ = writeln!(
                text,
                "refined bounds: ||x||_1 = {} <= {} {}; ||y||_1 = {} <= {} {}",
                report.x_norm,
                report.refined_x_bound,
                ok(report.refined_x_ok),
                report.y_norm,
                report.refined_y_bound,
                ok(report.refined_y_ok),
            );
            text
        }
    };
    Ok((output, if minimal { EXIT_OK } else { EXIT_NEGATIVE }))
}

fn cmd_extreme(args: &InstanceArgs) -> CmdResult {
    let (inst, _) = load_instance(args)?;
    let report = extreme_points_check_with(&inst, args.common.max_nodes)?;
    let output = match args.common.format {
        Format::Json => pretty(&json!({
            "extreme": serde_json::to_value(&report.extreme).expect("serializable"),
            "non_extreme": serde_json::to_value(&report.non_extreme).expect("serializable"),
            "predicted": serde_json::to_value(&report.predicted).expect("serializable"),
            "matches": report.matches,
        })),
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "extreme points ({}):", report.extreme.len());
            for s in &report.extreme {
                let _ = writeln!(text, "  {s}");
            }
            let _ = writeln!(
                text,
                "non-extreme basis elements ({}):",
                report.non_extreme.len()
            );
            for s in &report.non_extreme {
                let _ = writeln!(text, "  {s}");
            }
            let _ = writeln!(
                text,
                "matches predicted set (origin + generators): {}",
                if report.matches { "yes" } else { "no" }
            );
            text
        }
    };
    Ok((
        output,
        if report.matches {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        },
    ))
}
