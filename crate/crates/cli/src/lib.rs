//! Command-line front end for `fibword`.
//!
//! [`run`] parses an argument list, executes one subcommand and returns the
//! exit code together with everything that would be written to stdout and
//! stderr, so the binary and the tests share one code path.

use std::io::Read;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use fibword::factorize::{factorize, CancelToken, Method};
use fibword::identities::{
    catalog, deluca_minimality_check, verify_algorithmic_match, verify_all, verify_identity,
    IdentityId, MinimalityOutcome, VerificationReport, VerificationStatus, DEFAULT_CHECK_LENGTH,
};
use fibword::numeration::{from_zeckendorf, zeck_enumerate, zeckendorf, FibNat, ZeckRep};
use fibword::sturmian::{slope_with_bound, standard_sequence, sturmian_prefix, Directives};
use fibword::words::{
    central_word, christoffel_lower, christoffel_path, christoffel_upper, cofibonacci_word,
    fibonacci_prefix, fibonacci_word, singular_word, LetterOrder, PathKind, Word,
};
use serde_json::{json, Value};

pub mod plot;

pub use plot::{emit_ascii, emit_svg};

/// Widest table `zeck table` will print (`F_32` rows).
pub const MAX_TABLE_WIDTH: usize = 30;

const SLOPE_DIGITS: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "fibword", version, about = "Fibonacci word toolkit")]
struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a word of one of the standard families, or a prefix of f.
    Gen(GenArgs),
    /// Zeckendorf numeration.
    Zeck {
        #[command(subcommand)]
        action: ZeckAction,
    },
    /// Factorize a binary word.
    Factorize(FactorizeArgs),
    /// Check the factorization identities, algorithm outputs or minimality.
    Verify(VerifyArgs),
    /// Standard Sturmian words from a directive sequence.
    Sturmian(SturmianArgs),
    /// Draw a Christoffel lattice path.
    Plot(PlotArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Fib,
    Central,
    Cofib,
    Singular,
    ChristoffelLower,
    ChristoffelUpper,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["family", "stream"])))]
struct GenArgs {
    #[arg(long, requires = "index")]
    family: Option<Family>,
    #[arg(long)]
    index: Option<usize>,
    /// Print the first `--length` letters of f.
    #[arg(long, requires = "length", conflicts_with = "index")]
    stream: bool,
    #[arg(long)]
    length: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum ZeckAction {
    /// Integer to Zeckendorf digits.
    Encode { n: FibNat },
    /// Zeckendorf digits to integer.
    Decode { bits: String },
    /// All representations of the given width, in increasing order.
    Table {
        #[arg(long)]
        width: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    #[value(alias = "lz-paper")]
    Lz,
    Lyndon,
    Crochemore,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    #[value(name = "01")]
    ZeroLess,
    #[value(name = "10")]
    OneLess,
}

#[derive(Debug, Args)]
struct FactorizeArgs {
    #[arg(long)]
    method: MethodArg,
    /// Letter order for the Lyndon factorization.
    #[arg(long)]
    order: Option<OrderArg>,
    /// A word, `-` for stdin, or `fib:K` for the first K letters of f.
    #[arg(long, allow_hyphen_values = true)]
    input: String,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("check").required(true).args(["identity", "algorithm", "deluca"])))]
struct VerifyArgs {
    /// `I1`..`I16` or `all`.
    #[arg(long)]
    identity: Option<String>,
    /// `lz`, `lyndon-01`, `lyndon-10` or `crochemore`.
    #[arg(long)]
    algorithm: Option<String>,
    /// Number of leading factors whose transpositions are tried.
    #[arg(long)]
    deluca: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CHECK_LENGTH, conflicts_with = "deluca")]
    length: usize,
    /// Probe length for `--deluca`.
    #[arg(long, default_value_t = 100_000, requires = "deluca")]
    probe: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["length", "level", "slope"])))]
struct SturmianArgs {
    /// Comma-separated directives, each at least 1.
    #[arg(long)]
    dirs: String,
    /// Repeat the directive list indefinitely.
    #[arg(long)]
    cycle: bool,
    #[arg(long)]
    length: Option<usize>,
    #[arg(long)]
    level: Option<usize>,
    #[arg(long, requires = "depth")]
    slope: bool,
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Ascii,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[arg(long)]
    christoffel: usize,
    #[arg(long, value_enum, default_value_t = KindArg::Lower)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// 0 success, 1 a verification failed, 2 usage or domain error.
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// What a subcommand produced: the text payload, the JSON `result`, the
/// JSON `inputs` and whether every check passed.
struct Payload {
    text: String,
    inputs: Value,
    result: Value,
    ok: bool,
}

impl Payload {
    fn new(text: String, inputs: Value, result: Value) -> Self {
        Payload {
            text,
            inputs,
            result,
            ok: true,
        }
    }
}

type CmdResult = Result<Payload, String>;

/// Runs one invocation, reading stdin only when `--input -` is given.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_stdin(args, &mut std::io::stdin())
}

pub fn run_with_stdin<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(rendered)
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let name = command_name(&cli.command);
    let payload = match dispatch(cli.command, stdin) {
        Ok(p) => p,
        Err(message) => return Outcome::usage(format!("error: {message}\n")),
    };
    let stdout = if cli.json {
        let doc = json!({
            "command": name,
            "inputs": payload.inputs,
            "result": payload.result,
        });
        format!(
            "{}\n",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )
    } else {
        payload.text
    };
    Outcome {
        code: if payload.ok { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Gen(_) => "gen",
        Command::Zeck { .. } => "zeck",
        Command::Factorize(_) => "factorize",
        Command::Verify(_) => "verify",
        Command::Sturmian(_) => "sturmian",
        Command::Plot(_) => "plot",
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> CmdResult {
    match cmd {
        Command::Gen(a) => gen(a),
        Command::Zeck { action } => zeck(action),
        Command::Factorize(a) => factorize_cmd(a, stdin),
        Command::Verify(a) => verify(a),
        Command::Sturmian(a) => sturmian(a),
        Command::Plot(a) => plot_cmd(a),
    }
}

fn flag_err(flag: &str, value: impl std::fmt::Display, e: impl std::fmt::Display) -> String {
    format!("{flag} '{value}': {e}")
}

fn gen(a: GenArgs) -> CmdResult {
    if a.stream {
        let k = a.length.expect("enforced by clap");
        let w = fibonacci_prefix(k).to_string();
        return Ok(Payload::new(
            format!("{w}\n"),
            json!({ "stream": true, "length": k }),
            json!(w),
        ));
    }
    let family = a.family.expect("enforced by clap");
    let n = a.index.expect("enforced by clap");
    let generate = match family {
        Family::Fib => fibonacci_word,
        Family::Central => central_word,
        Family::Cofib => cofibonacci_word,
        Family::Singular => singular_word,
        Family::ChristoffelLower => christoffel_lower,
        Family::ChristoffelUpper => christoffel_upper,
    };
    let w = generate(n)
        .map_err(|e| flag_err("--index", n, e))?
        .to_string();
    let name = family.to_possible_value().expect("no skipped variants");
    Ok(Payload::new(
        format!("{w}\n"),
        json!({ "family": name.get_name(), "index": n }),
        json!(w),
    ))
}

fn zeck(action: ZeckAction) -> CmdResult {
    match action {
        ZeckAction::Encode { n } => {
            let bits = zeckendorf(&n).to_string();
            Ok(Payload::new(
                format!("{bits}\n"),
                json!({ "action": "encode", "n": n.to_string() }),
                json!(bits),
            ))
        }
        ZeckAction::Decode { bits } => {
            let rep: ZeckRep = bits.parse().map_err(|e| flag_err("bits", &bits, e))?;
            let value = from_zeckendorf(rep.bits())
                .map_err(|e| flag_err("bits", &bits, e))?
                .to_string();
            Ok(Payload::new(
                format!("{value}\n"),
                json!({ "action": "decode", "bits": bits }),
                json!(value),
            ))
        }
        ZeckAction::Table { width } => {
            if width > MAX_TABLE_WIDTH {
                return Err(flag_err(
                    "--width",
                    width,
                    format!("at most {MAX_TABLE_WIDTH} is supported"),
                ));
            }
            let rows = zeck_enumerate(width).map_err(|e| flag_err("--width", width, e))?;
            let mut text = String::new();
            let mut result = Vec::with_capacity(rows.len());
            for (value, bits) in rows.into_iter().enumerate() {
                text.push_str(&format!("{bits} {value}\n"));
                result.push(json!({ "bits": bits, "value": value }));
            }
            Ok(Payload::new(
                text,
                json!({ "action": "table", "width": width }),
                Value::Array(result),
            ))
        }
    }
}

fn read_input(spec: &str, stdin: &mut dyn Read) -> Result<Word, String> {
    if spec == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| format!("--input '-': cannot read stdin: {e}"))?;
        return buf.parse().map_err(|e| flag_err("--input", "-", e));
    }
    if let Some(len) = spec.strip_prefix("fib:") {
        let k: usize = len
            .parse()
            .map_err(|e| flag_err("--input", spec, format!("bad length: {e}")))?;
        return Ok(fibonacci_prefix(k));
    }
    spec.parse().map_err(|e| flag_err("--input", spec, e))
}

fn factorize_cmd(a: FactorizeArgs, stdin: &mut dyn Read) -> CmdResult {
    let method = match (a.method, a.order) {
        (MethodArg::Lz, None) => Method::Lz,
        (MethodArg::Crochemore, None) => Method::Crochemore,
        (MethodArg::Lyndon, None | Some(OrderArg::ZeroLess)) => {
            Method::Lyndon(LetterOrder::ZeroLess)
        }
        (MethodArg::Lyndon, Some(OrderArg::OneLess)) => Method::Lyndon(LetterOrder::OneLess),
        (_, Some(_)) => return Err("--order applies only to --method lyndon".to_string()),
    };
    let word = read_input(&a.input, stdin)?;
    let fz = factorize(method, &word, &CancelToken::new())
        .map_err(|e| flag_err("--input", &a.input, e))?;
    let mut text = String::new();
    let mut factors = Vec::with_capacity(fz.len());
    for f in &fz.factors {
        let s = Word::new(f.span.of(&word).to_vec())
            .expect("slice of a word")
            .to_string();
        text.push_str(&s);
        text.push('\n');
        factors.push(json!({
            "start": f.span.start,
            "len": f.span.len,
            "word": s,
            "complete": f.complete,
        }));
    }
    Ok(Payload::new(
        text,
        json!({ "method": method.name(), "input": a.input, "length": word.len() }),
        json!({ "method": method.name(), "factors": factors }),
    ))
}

fn report_json(r: &VerificationReport, formula: Option<&str>) -> Value {
    let (status, position) = match r.status {
        VerificationStatus::Pass => ("pass", None),
        VerificationStatus::Fail { position } => ("fail", Some(position)),
    };
    json!({
        "id": r.id,
        "status": status,
        "mismatch_position": position,
        "checked_length": r.checked_length,
        "factors_consumed": r.factors_consumed,
        "formula": formula,
    })
}

fn report_line(r: &VerificationReport, formula: Option<&str>) -> String {
    let status = match r.status {
        VerificationStatus::Pass => "PASS".to_string(),
        VerificationStatus::Fail { position } => format!("FAIL@{position}"),
    };
    let mut line = format!(
        "{:<11} {:<10} length={} factors={}",
        r.id, status, r.checked_length, r.factors_consumed
    );
    if let Some(f) = formula {
        line.push_str("  ");
        line.push_str(f);
    }
    line.push('\n');
    line
}

fn verify(a: VerifyArgs) -> CmdResult {
    if let Some(k) = a.deluca {
        let outcome =
            deluca_minimality_check(k, a.probe).map_err(|e| flag_err("--deluca", k, e))?;
        let (status, text, detail) = match outcome {
            MinimalityOutcome::Confirmed { transpositions } => (
                "confirmed",
                format!(
                    "deluca k={k} probe={} CONFIRMED transpositions={transpositions}\n",
                    a.probe
                ),
                json!({ "transpositions": transpositions }),
            ),
            MinimalityOutcome::Violated { i, j } => (
                "violated",
                format!("deluca k={k} probe={} VIOLATED swap={i},{j}\n", a.probe),
                json!({ "swap": [i, j] }),
            ),
            MinimalityOutcome::Inconclusive { i, j } => (
                "inconclusive",
                format!("deluca k={k} probe={} INCONCLUSIVE swap={i},{j}\n", a.probe),
                json!({ "swap": [i, j] }),
            ),
        };
        let mut p = Payload::new(
            text,
            json!({ "deluca": k, "probe": a.probe }),
            json!({ "k": k, "probe": a.probe, "status": status, "detail": detail }),
        );
        p.ok = outcome.holds();
        return Ok(p);
    }

    let length = a.length;
    let (inputs, reports, formulas): (Value, Vec<VerificationReport>, Vec<Option<&str>>) =
        if let Some(id) = a.identity {
            if id.eq_ignore_ascii_case("all") {
                let specs = catalog();
                let reports = verify_all(length).map_err(|e| flag_err("--length", length, e))?;
                let formulas = specs.iter().map(|s| Some(s.formula)).collect();
                (
                    json!({ "identity": "all", "length": length }),
                    reports,
                    formulas,
                )
            } else {
                let parsed: IdentityId = id.parse().map_err(|e| flag_err("--identity", &id, e))?;
                let report =
                    verify_identity(parsed, length).map_err(|e| flag_err("--length", length, e))?;
                let formula = catalog()[usize::from(parsed.number()) - 1].formula;
                (
                    json!({ "identity": id, "length": length }),
                    vec![report],
                    vec![Some(formula)],
                )
            }
        } else {
            let name = a.algorithm.expect("enforced by clap");
            let method: Method = name
                .parse()
                .map_err(|e| flag_err("--algorithm", &name, e))?;
            let report = verify_algorithmic_match(method, length)
                .map_err(|e| flag_err("--length", length, e))?;
            (
                json!({ "algorithm": name, "length": length }),
                vec![report],
                vec![None],
            )
        };

    let mut text = String::new();
    let mut rows = Vec::with_capacity(reports.len());
    for (r, f) in reports.iter().zip(&formulas) {
        text.push_str(&report_line(r, *f));
        rows.push(report_json(r, *f));
    }
    let all_passed = reports.iter().all(VerificationReport::passed);
    let mut p = Payload::new(
        text,
        inputs,
        json!({ "all_passed": all_passed, "reports": rows }),
    );
    p.ok = all_passed;
    Ok(p)
}

/// `p/q` (non-negative) as a decimal truncated to `digits` places.
fn decimal(p: &impl std::fmt::Display, q: &impl std::fmt::Display, digits: usize) -> String {
    let num: FibNat = p.to_string().parse().expect("non-negative integer");
    let den: FibNat = q.to_string().parse().expect("positive integer");
    let mut rem = &num % &den;
    let mut out = format!("{}.", &num / &den);
    for _ in 0..digits {
        rem *= 10u32;
        out.push_str(&(&rem / &den).to_string());
        rem %= &den;
    }
    out
}

fn sturmian(a: SturmianArgs) -> CmdResult {
    let values: Vec<u64> = a
        .dirs
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| flag_err("--dirs", t.trim(), e))
        })
        .collect::<Result<_, _>>()?;
    let mut dirs = Directives::new(values, false).map_err(|e| flag_err("--dirs", &a.dirs, e))?;
    if a.cycle {
        dirs = dirs.cycled();
    }
    let base = json!({ "dirs": dirs.values(), "cycle": a.cycle });
    let with = |key: &str, v: Value| {
        let mut obj = base.clone();
        obj[key] = v;
        obj
    };

    if let Some(k) = a.length {
        let w = sturmian_prefix(&dirs, k)
            .map_err(|e| flag_err("--dirs", &a.dirs, e))?
            .to_string();
        return Ok(Payload::new(
            format!("{w}\n"),
            with("length", json!(k)),
            json!(w),
        ));
    }
    if let Some(n) = a.level {
        let w = standard_sequence(&dirs, n)
            .map_err(|e| flag_err("--level", n, e))?
            .to_string();
        return Ok(Payload::new(
            format!("{w}\n"),
            with("level", json!(n)),
            json!(w),
        ));
    }
    let depth = a.depth.expect("enforced by clap");
    let (value, bound) =
        slope_with_bound(&dirs, depth).map_err(|e| flag_err("--depth", depth, e))?;
    let (p, q) = (value.numer().to_string(), value.denom().to_string());
    let dec = decimal(value.numer(), value.denom(), SLOPE_DIGITS);
    Ok(Payload::new(
        format!("{p}/{q} {dec}\n"),
        with("depth", json!(depth)),
        json!({
            "numerator": p,
            "denominator": q,
            "decimal": dec,
            "error_bound": bound.to_string(),
        }),
    ))
}

fn plot_cmd(a: PlotArgs) -> CmdResult {
    let kind = match a.kind {
        KindArg::Lower => PathKind::Lower,
        KindArg::Upper => PathKind::Upper,
    };
    let n = a.christoffel;
    let path = christoffel_path(n, kind).map_err(|e| flag_err("--christoffel", n, e))?;
    let (doc, format) = match a.format {
        FormatArg::Svg => (emit_svg(&path, n), "svg"),
        FormatArg::Ascii => (emit_ascii(&path), "ascii"),
    };
    let kind_name = match a.kind {
        KindArg::Lower => "lower",
        KindArg::Upper => "upper",
    };
    let (x, y) = path.end();
    Ok(Payload::new(
        doc.clone(),
        json!({ "christoffel": n, "kind": kind_name, "format": format }),
        json!({
            "word": path.word().to_string(),
            "steps": path.steps(),
            "end": [x, y],
            "document": doc,
        }),
    ))
}
