//! Command-line front end: computes transforms by the continued-fraction
//! pipeline or the two comparison methods, sweeps frequencies, and emits
//! CSV/JSON rows with reference errors and evaluation counts.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperft::baselines::{BaselineMethod, OouraMoriParams, SugiharaParams};
use hyperft::functions::RegisteredFunction;
use hyperft::numerics::{BigComplex, BigReal, PrecisionContext};
use hyperft::persist::{load_transform, save_transform, TransformHeader};
use hyperft::quadrature::DeRuleSpec;
use hyperft::transform::{
    build_transform, defining_fixture, evaluate_with_proxy, exact_reference, FixtureKind,
    FourierHyperfunction, DEFAULT_TAYLOR_TERMS,
};

#[derive(Parser)]
#[command(
    name = "hyperft",
    version,
    about = "Multiprecision Fourier transforms of slowly decaying functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one transform and evaluate it over a frequency sweep.
    Run(Box<RunArgs>),
    /// Evaluation-count matrix over the four standard centers and functions.
    Table1(Table1Args),
    /// Sample a fixture defining function over a complex grid.
    FixtureGrid(FixtureGridArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Hyper,
    OouraMori,
    Sugihara,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Hyper => "hyper",
            MethodArg::OouraMori => "ooura-mori",
            MethodArg::Sugihara => "sugihara",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Csv,
    Json,
}

#[derive(Args)]
struct RunArgs {
    /// Registered function: runge, tanh_pi, log_abs, abs_val, const_one.
    #[arg(long)]
    function: Option<String>,

    #[arg(long, value_enum, default_value_t = MethodArg::Hyper)]
    method: MethodArg,

    /// Expansion center pair "a+bi,c-di"; shorthands like "+i,-i" work.
    #[arg(long, default_value = "+i,-i", allow_hyphen_values = true)]
    centers: String,

    /// Working decimal precision.
    #[arg(long, env = "HYPERFT_DIGITS", default_value_t = 100)]
    digits: u32,

    /// Taylor terms per branch.
    #[arg(long = "taylor-terms", default_value_t = DEFAULT_TAYLOR_TERMS)]
    taylor_terms: usize,

    /// Continued-fraction evaluation depth (default: all available terms).
    #[arg(long)]
    depth: Option<usize>,

    /// Base mesh of the coefficient quadrature.
    #[arg(long)]
    mesh: Option<String>,

    /// Truncation threshold of the coefficient quadrature.
    #[arg(long = "quad-eps")]
    quad_eps: Option<String>,

    /// Node cap per side of the coefficient quadrature.
    #[arg(long = "max-nodes")]
    max_nodes: Option<usize>,

    /// Comma-separated frequency list.
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,

    /// Frequency grid start:stop:step (stop inclusive).
    #[arg(long = "xi-grid", allow_hyphen_values = true)]
    xi_grid: Option<String>,

    /// Mesh of the shifted-node oscillatory rule.
    #[arg(long = "om-mesh")]
    om_mesh: Option<String>,

    /// Term threshold of the shifted-node oscillatory rule.
    #[arg(long = "om-trunc")]
    om_trunc: Option<String>,

    /// Damping levels of the extrapolated method.
    #[arg(long = "sugihara-levels")]
    sugihara_levels: Option<usize>,

    #[arg(long, value_enum, default_value_t = Emit::Csv)]
    emit: Emit,

    /// Output path (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Persist the built transform for later evaluation-only runs.
    #[arg(long = "save-transform")]
    save_transform: Option<PathBuf>,

    /// Load a persisted transform instead of building one.
    #[arg(long = "load-transform")]
    load_transform: Option<PathBuf>,
}

#[derive(Args)]
struct Table1Args {
    #[arg(long, env = "HYPERFT_DIGITS", default_value_t = 100)]
    digits: u32,

    #[arg(long = "taylor-terms", default_value_t = DEFAULT_TAYLOR_TERMS)]
    taylor_terms: usize,

    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FixtureGridArgs {
    /// Fixture kind: delta or step.
    #[arg(long)]
    kind: String,

    /// Real-part range "a:b".
    #[arg(long = "re-range", allow_hyphen_values = true)]
    re_range: String,

    /// Imaginary-part range "a:b" (must not cross the real axis).
    #[arg(long = "im-range", allow_hyphen_values = true)]
    im_range: String,

    /// Grid size "NxM" (N points along re, M along im).
    #[arg(long)]
    grid: String,

    #[arg(long, env = "HYPERFT_DIGITS", default_value_t = 100)]
    digits: u32,

    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures carrying the exit status contract: 2 for configuration
/// problems, 1 for method failures.
enum CliError {
    Usage(String),
    Method(String),
}

impl From<hyperft::Error> for CliError {
    fn from(e: hyperft::Error) -> Self {
        CliError::Method(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(*args),
        Command::Table1(args) => table1(args),
        Command::FixtureGrid(args) => fixture_grid(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Method(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Lenient center syntax: "+i", "-2i", "1+i", "-1-i", "0.5-2.25i", ...
fn parse_center(text: &str, ctx: &PrecisionContext) -> Result<BigComplex, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = s
        .strip_suffix(['i', 'I'])
        .ok_or_else(|| usage(format!("center {text:?} must end in 'i'")))?;
    let bytes = body.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    let (re_text, sign, mag_text) = match split {
        Some(at) => (
            &body[..at],
            if bytes[at] == b'-' { -1i64 } else { 1 },
            &body[at + 1..],
        ),
        None => {
            // no real part: the whole body is a signed imaginary magnitude
            match body.as_bytes().first() {
                Some(b'-') => ("", -1i64, &body[1..]),
                Some(b'+') => ("", 1, &body[1..]),
                _ => ("", 1, body),
            }
        }
    };
    let re = if re_text.is_empty() {
        ctx.zero()
    } else {
        ctx.parse_real(re_text)
            .map_err(|_| usage(format!("bad center real part in {text:?}")))?
    };
    let mag = if mag_text.is_empty() {
        ctx.one()
    } else {
        ctx.parse_real(mag_text)
            .map_err(|_| usage(format!("bad center imaginary part in {text:?}")))?
    };
    Ok(ctx.complex(re, &mag * &ctx.from_i64(sign)))
}

fn parse_center_pair(
    text: &str,
    ctx: &PrecisionContext,
) -> Result<(BigComplex, BigComplex), CliError> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| usage(format!("centers {text:?} must be a comma-separated pair")))?;
    Ok((parse_center(a, ctx)?, parse_center(b, ctx)?))
}

fn parse_positive_real(
    text: &str,
    what: &str,
    ctx: &PrecisionContext,
) -> Result<BigReal, CliError> {
    let v = ctx
        .parse_real(text)
        .map_err(|_| usage(format!("bad {what} {text:?}")))?;
    if v.is_zero() || v.is_sign_negative() {
        return Err(usage(format!("{what} must be positive, got {text}")));
    }
    Ok(v)
}

fn sweep_frequencies(args: &RunArgs, ctx: &PrecisionContext) -> Result<Vec<BigReal>, CliError> {
    match (&args.xi, &args.xi_grid) {
        (Some(_), Some(_)) => Err(usage("give either --xi or --xi-grid, not both")),
        (Some(list), None) => list
            .split(',')
            .map(|s| {
                ctx.parse_real(s.trim())
                    .map_err(|_| usage(format!("bad frequency {s:?}")))
            })
            .collect(),
        (None, grid) => {
            let spec = grid.as_deref().unwrap_or("0.25:4:0.25");
            let mut parts = spec.splitn(3, ':');
            let (s, e, st) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), Some(c)) => (a, b, c),
                _ => return Err(usage(format!("bad grid {spec:?}, expected start:stop:step"))),
            };
            let start = ctx
                .parse_real(s)
                .map_err(|_| usage(format!("bad grid start {s:?}")))?;
            let stop = ctx
                .parse_real(e)
                .map_err(|_| usage(format!("bad grid stop {e:?}")))?;
            let step = parse_positive_real(st, "grid step", ctx)?;
            let mut xs = Vec::new();
            let fuzz = &step / &ctx.from_u64(2);
            let mut k = 0u64;
            loop {
                let x = &start + &(&step * &ctx.from_u64(k));
                if x > &stop + &fuzz {
                    break;
                }
                xs.push(x);
                k += 1;
                if k > 1_000_000 {
                    return Err(usage("grid has more than a million points"));
                }
            }
            Ok(xs)
        }
    }
}

struct ResultRow {
    xi: String,
    re: String,
    im: String,
    exact_re: String,
    exact_im: String,
    abs_error: String,
    n_evals: usize,
    depth_error_proxy: String,
    method: &'static str,
    center: String,
}

const CSV_HEADER: &str = "xi,re,im,exact_re,exact_im,abs_error,n_evals,depth_error_proxy,method,center";

fn emit_rows(rows: &[ResultRow], emit: Emit, out: Option<&PathBuf>) -> Result<(), CliError> {
    let text = match emit {
        Emit::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in rows {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    r.xi,
                    r.re,
                    r.im,
                    r.exact_re,
                    r.exact_im,
                    r.abs_error,
                    r.n_evals,
                    r.depth_error_proxy,
                    r.method,
                    r.center
                ));
            }
            s
        }
        Emit::Json => {
            #[derive(serde::Serialize)]
            struct JsonRow<'a> {
                xi: &'a str,
                re: &'a str,
                im: &'a str,
                exact_re: &'a str,
                exact_im: &'a str,
                abs_error: &'a str,
                n_evals: usize,
                depth_error_proxy: &'a str,
                method: &'a str,
                center: &'a str,
            }
            let view: Vec<JsonRow> = rows
                .iter()
                .map(|r| JsonRow {
                    xi: &r.xi,
                    re: &r.re,
                    im: &r.im,
                    exact_re: &r.exact_re,
                    exact_im: &r.exact_im,
                    abs_error: &r.abs_error,
                    n_evals: r.n_evals,
                    depth_error_proxy: &r.depth_error_proxy,
                    method: r.method,
                    center: &r.center,
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&view)
                .map_err(|e| CliError::Method(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    write_output(&text, out)
}

fn write_output(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Method(e.to_string())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn quad_spec(args: &RunArgs, ctx: &PrecisionContext) -> Result<DeRuleSpec, CliError> {
    let default = DeRuleSpec::for_context(ctx);
    let mesh = match &args.mesh {
        Some(m) => parse_positive_real(m, "mesh", ctx)?,
        None => default.mesh().clone(),
    };
    let eps = match &args.quad_eps {
        Some(e) => parse_positive_real(e, "quadrature threshold", ctx)?,
        None => default.eps().clone(),
    };
    let max_nodes = args.max_nodes.unwrap_or(default.max_nodes_per_side());
    DeRuleSpec::new(mesh, eps, max_nodes).map_err(|e| usage(e.to_string()))
}

fn run(args: RunArgs) -> Result<(), CliError> {
    let ctx = PrecisionContext::new(args.digits).map_err(|e| usage(e.to_string()))?;
    let sig_digits = (args.digits as usize).min(40);
    let frequencies = sweep_frequencies(&args, &ctx)?;
    if frequencies.is_empty() {
        return Err(usage("empty frequency sweep"));
    }

    let function: Option<RegisteredFunction> = match &args.function {
        Some(name) => Some(
            RegisteredFunction::from_str(name).map_err(|e| usage(e.to_string()))?,
        ),
        None => None,
    };

    let mut rows = Vec::with_capacity(frequencies.len());
    let mut truncation_clean = true;

    match args.method {
        MethodArg::Hyper => {
            let (fh, label, reference) = hyper_transform(&args, function, &ctx)?;
            let depth = match args.depth {
                Some(d) => {
                    if d == 0 || d > args.taylor_terms {
                        return Err(usage(format!(
                            "depth {d} outside 1..={}",
                            args.taylor_terms
                        )));
                    }
                    d.min(fh.max_depth())
                }
                None => fh.max_depth(),
            };
            for xi in &frequencies {
                if xi.is_zero() {
                    eprintln!(
                        "note: evaluating at xi = 0; references are singular there and any \
                         delta component is invisible to pointwise evaluation"
                    );
                }
                let (value, proxy) = evaluate_with_proxy(&fh, xi, depth, &ctx)?;
                rows.push(make_row(
                    xi,
                    &value,
                    proxy.to_string_sig(8),
                    reference,
                    fh.total_evals(),
                    "hyper",
                    label.clone(),
                    sig_digits,
                    &ctx,
                )?);
            }
        }
        MethodArg::OouraMori | MethodArg::Sugihara => {
            let func = function.ok_or_else(|| usage("--function is required"))?;
            let method = baseline_method(&args, &ctx)?;
            for xi in &frequencies {
                let r = hyperft::baselines::full_transform_via_half_integrals(
                    |x| func.eval(x, &ctx),
                    func.parity(),
                    xi,
                    &method,
                    &ctx,
                )?;
                if let Some(w) = &r.warning {
                    truncation_clean = false;
                    eprintln!("warning: xi = {}: {w}", xi.to_string_sig(8));
                }
                rows.push(make_row(
                    xi,
                    &r.value,
                    String::new(),
                    func.reference(),
                    r.n_evals,
                    args.method.name(),
                    String::new(),
                    sig_digits,
                    &ctx,
                )?);
            }
        }
    }

    emit_rows(&rows, args.emit, args.out.as_ref())?;
    if truncation_clean {
        Ok(())
    } else {
        Err(CliError::Method("truncation checks failed".into()))
    }
}

#[allow(clippy::too_many_arguments)]
fn make_row(
    xi: &BigReal,
    value: &BigComplex,
    depth_error_proxy: String,
    reference: Option<hyperft::functions::TestFunctionId>,
    n_evals: usize,
    method: &'static str,
    center: String,
    sig_digits: usize,
    ctx: &PrecisionContext,
) -> Result<ResultRow, CliError> {
    let (exact_re, exact_im, abs_error) = match reference {
        Some(id) if !xi.is_zero() => {
            let exact = exact_reference(id, xi, ctx)?;
            let err = (&value.re - &exact.re).hypot(&(&value.im - &exact.im));
            (
                exact.re.to_string_sig(sig_digits),
                exact.im.to_string_sig(sig_digits),
                err.to_string_sig(8),
            )
        }
        _ => (String::new(), String::new(), String::new()),
    };
    Ok(ResultRow {
        xi: xi.to_string_sig(sig_digits),
        re: value.re.to_string_sig(sig_digits),
        im: value.im.to_string_sig(sig_digits),
        exact_re,
        exact_im,
        abs_error,
        n_evals,
        depth_error_proxy,
        method,
        center,
    })
}

fn hyper_transform(
    args: &RunArgs,
    function: Option<RegisteredFunction>,
    ctx: &PrecisionContext,
) -> Result<
    (
        FourierHyperfunction,
        String,
        Option<hyperft::functions::TestFunctionId>,
    ),
    CliError,
> {
    if let Some(path) = &args.load_transform {
        let (fh, header, fctx) = load_transform(path)?;
        if fctx.decimal_digits() != ctx.decimal_digits() {
            return Err(usage(format!(
                "transform file carries {} digits but --digits is {}",
                fctx.decimal_digits(),
                ctx.decimal_digits()
            )));
        }
        let stored: Option<RegisteredFunction> = RegisteredFunction::from_str(&header.function).ok();
        if let (Some(requested), Some(in_file)) = (function, stored) {
            if requested != in_file {
                return Err(usage(format!(
                    "transform file holds {} but --function asks for {}",
                    in_file.name(),
                    requested.name()
                )));
            }
        }
        let label = format!(
            "{};{}",
            fh.cf_plus().center().to_canonical_string(),
            fh.cf_minus().center().to_canonical_string()
        );
        let reference = stored.and_then(|f| f.reference());
        return Ok((fh, label, reference));
    }

    let func = function.ok_or_else(|| usage("--function is required"))?;
    let (cp, cm) = parse_center_pair(&args.centers, ctx)?;
    if !cp.im.is_positive() || !(-&cm.im).is_positive() {
        return Err(usage(format!(
            "centers {} must sit in the upper/lower half-planes",
            args.centers
        )));
    }
    let spec = quad_spec(args, ctx)?;
    if args.taylor_terms == 0 {
        return Err(usage("--taylor-terms must be positive"));
    }
    let fh = build_transform(
        |x| func.eval(x, ctx),
        &cp,
        &cm,
        args.taylor_terms,
        &spec,
        ctx,
    )?;
    for retry in fh.retry_log() {
        eprintln!("note: {retry}");
    }
    if let Some(path) = &args.save_transform {
        let header = TransformHeader {
            function: func.name().to_string(),
            digits: ctx.decimal_digits(),
            taylor_terms: args.taylor_terms,
            total_evals: fh.total_evals(),
        };
        save_transform(&fh, &header, path)?;
    }
    let label = format!(
        "{};{}",
        cp.to_canonical_string(),
        cm.to_canonical_string()
    );
    Ok((fh, label, func.reference()))
}

fn baseline_method(args: &RunArgs, ctx: &PrecisionContext) -> Result<BaselineMethod, CliError> {
    match args.method {
        MethodArg::OouraMori => {
            let mut params = OouraMoriParams::for_context(ctx);
            if let Some(m) = &args.om_mesh {
                params.mesh = parse_positive_real(m, "oscillatory mesh", ctx)?;
            }
            if let Some(t) = &args.om_trunc {
                params.trunc_eps = parse_positive_real(t, "oscillatory threshold", ctx)?;
            }
            Ok(BaselineMethod::OouraMori(params))
        }
        MethodArg::Sugihara => {
            let mut params = SugiharaParams::for_context(ctx);
            if let Some(l) = args.sugihara_levels {
                if l < 2 {
                    return Err(usage("--sugihara-levels must be at least 2"));
                }
                params.levels = l;
            }
            Ok(BaselineMethod::Sugihara(params))
        }
        MethodArg::Hyper => unreachable!("hyper handled separately"),
    }
}

/// The four labeled center pairs of the benchmark matrix.
const TABLE1_CENTERS: [(&str, &str, &str); 4] = [
    ("+i", "+i", "-i"),
    ("+2i", "+2i", "-2i"),
    ("1+i", "1+i", "1-i"),
    ("-1+i", "-1+i", "-1-i"),
];

fn table1(args: Table1Args) -> Result<(), CliError> {
    let ctx = PrecisionContext::new(args.digits).map_err(|e| usage(e.to_string()))?;
    let spec = DeRuleSpec::for_context(&ctx);
    let mut text = String::from("function,+i,+2i,1+i,-1+i\n");
    for id in hyperft::functions::TestFunctionId::ALL {
        let mut counts = Vec::new();
        for (_, cp_text, cm_text) in TABLE1_CENTERS {
            let cp = parse_center(cp_text, &ctx)?;
            let cm = parse_center(cm_text, &ctx)?;
            let fh = build_transform(
                |x| id.eval(x, &ctx),
                &cp,
                &cm,
                args.taylor_terms,
                &spec,
                &ctx,
            )?;
            counts.push(fh.total_evals().to_string());
        }
        text.push_str(&format!("{},{}\n", id.name(), counts.join(",")));
    }
    write_output(&text, args.out.as_ref())
}

fn fixture_grid(args: FixtureGridArgs) -> Result<(), CliError> {
    let ctx = PrecisionContext::new(args.digits).map_err(|e| usage(e.to_string()))?;
    let sig_digits = (args.digits as usize).min(40);
    let kind = FixtureKind::from_str(&args.kind).map_err(|e| usage(e.to_string()))?;

    let parse_range = |text: &str, what: &str| -> Result<(BigReal, BigReal), CliError> {
        let (a, b) = text
            .split_once(':')
            .ok_or_else(|| usage(format!("bad {what} {text:?}, expected a:b")))?;
        let lo = ctx
            .parse_real(a)
            .map_err(|_| usage(format!("bad {what} start {a:?}")))?;
        let hi = ctx
            .parse_real(b)
            .map_err(|_| usage(format!("bad {what} stop {b:?}")))?;
        if !(&hi - &lo).is_positive() {
            return Err(usage(format!("{what} must be increasing")));
        }
        Ok((lo, hi))
    };
    let (re_lo, re_hi) = parse_range(&args.re_range, "re-range")?;
    let (im_lo, im_hi) = parse_range(&args.im_range, "im-range")?;

    let (n, m) = args
        .grid
        .split_once(['x', 'X'])
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
        .ok_or_else(|| usage(format!("bad grid {:?}, expected NxM", args.grid)))?;
    if n < 2 || m < 2 {
        return Err(usage("grid needs at least 2 points per side"));
    }

    let linspace = |lo: &BigReal, hi: &BigReal, count: usize| -> Vec<BigReal> {
        let step = &(hi - lo) / &ctx.from_u64((count - 1) as u64);
        (0..count)
            .map(|k| lo + &(&step * &ctx.from_u64(k as u64)))
            .collect()
    };
    let res = linspace(&re_lo, &re_hi, n);
    let ims = linspace(&im_lo, &im_hi, m);
    if ims.iter().any(|v| v.is_zero()) {
        return Err(usage("im-range grid touches the real axis"));
    }

    let mut text = String::from("re,im,value\n");
    for im in &ims {
        for re in &res {
            let z = ctx.complex(re.clone(), im.clone());
            let v = defining_fixture(kind, &z, &ctx)?;
            text.push_str(&format!(
                "{},{},{}\n",
                re.to_string_sig(sig_digits),
                im.to_string_sig(sig_digits),
                v.re.to_string_sig(sig_digits)
            ));
        }
    }
    write_output(&text, args.out.as_ref())
}
