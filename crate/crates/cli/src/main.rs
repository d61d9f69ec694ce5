//! Command-line front end: machine-readable reports for bound computation,
//! verification campaigns, and region maps of the piecewise sharp maximum.
//!
//! Exit codes: 0 success, 1 verification found a violation, 2 invalid input.

mod output;
mod report;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use report::{ComplexEcho, Document, InputEcho, SeriesDebugReport};
use std::path::PathBuf;
use std::process::ExitCode;
use subord_core::bounds::{eval_h, BoundsError, H_CLASSIFICATION_NOTE};
use subord_core::oracle::{
    verify_class_bounds, Functional, ParameterMode, SearchConfig, VerificationReport,
};
use subord_core::phi::{ClassParams, PhiSpec};
use subord_core::series::C64;
use subord_core::witness::{
    extremal, member_from_schwarz, membership_residual, profile, schur_to_schwarz, ExtremalKind,
};

#[derive(Parser)]
#[command(
    name = "subord",
    version,
    about = "Coefficient-functional bounds for a differential-subordination class, \
             with brute-force verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every closed-form bound for one (phi, alpha) pair.
    Bounds(BoundsArgs),
    /// Run verification campaigns and compare observed maxima to the bounds.
    Verify(VerifyArgs),
    /// Emit a CSV map of the piecewise sharp maximum H(q1, q2).
    Hmap(HmapArgs),
    /// Dump series-level diagnostics for one target and Schwarz sample.
    SeriesDebug(SeriesDebugArgs),
}

#[derive(Args)]
struct TargetArgs {
    /// Target: halfplane | exp | sqrt | janowski:A:B
    #[arg(long)]
    phi: Option<String>,
    /// JSON file with {"kind": ..., "params": ...} (alternative to --phi)
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Class parameter, "a" or "a+bi" with Re >= 0
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    alpha: String,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Table => "table",
        }
    }
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    target: TargetArgs,
    /// Radii for the distortion/growth intervals
    #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.5, 0.75])]
    r: Vec<f64>,
    /// Truncation order for partial sums and the a_n table
    #[arg(long, default_value_t = 32)]
    order: usize,
    /// Fekete-Szego parameters, each "a" or "a+bi"
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = ["0".to_string(), "1".to_string(), "2".to_string()])]
    mu: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    target: TargetArgs,
    /// an | gamma1 | gamma2 | gamma3 | a2 | a3 | a4 | fs | hankel2 | all
    #[arg(long, value_delimiter = ',', default_values_t = ["all".to_string()])]
    functional: Vec<String>,
    /// Coefficient index for the an functional
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Fekete-Szego parameters for the fs functional
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = ["0".to_string(), "1".to_string(), "2".to_string()])]
    mu: Vec<String>,
    #[arg(long, default_value_t = 2000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.01)]
    grid_step: f64,
    #[arg(long, default_value_t = 3)]
    refine_iters: usize,
    /// Sample complex Schur parameters instead of real ones
    #[arg(long)]
    complex_params: bool,
    /// Worker threads for the campaign fan-out (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct HmapArgs {
    /// q1 range "lo:hi"
    #[arg(long, default_value = "-5:5", allow_hyphen_values = true)]
    q1: String,
    /// q2 range "lo:hi"
    #[arg(long, default_value = "-5:5", allow_hyphen_values = true)]
    q2: String,
    #[arg(long, default_value_t = 0.1)]
    step: f64,
}

#[derive(Args)]
struct SeriesDebugArgs {
    #[command(flatten)]
    target: TargetArgs,
    #[arg(long, default_value_t = 16)]
    order: usize,
    /// Schur parameters, comma-separated, each "a" or "a+bi"
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    schur: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Hmap(args) => cmd_hmap(args),
        Command::SeriesDebug(args) => cmd_series_debug(args),
    }
}

fn parse_phi(target: &TargetArgs) -> Result<PhiSpec> {
    let spec = match (&target.phi, &target.spec) {
        (Some(_), Some(_)) => bail!("--phi and --spec are mutually exclusive"),
        (None, None) => bail!("one of --phi or --spec is required"),
        (Some(name), None) => {
            let lower = name.to_ascii_lowercase();
            if let Some(rest) = lower.strip_prefix("janowski:") {
                let parts: Vec<&str> = rest.split(':').collect();
                if parts.len() != 2 {
                    bail!("janowski target takes two parameters, e.g. janowski:0.5:-0.5");
                }
                PhiSpec::Janowski {
                    a: parts[0].parse().context("janowski A")?,
                    b: parts[1].parse().context("janowski B")?,
                }
            } else {
                match lower.as_str() {
                    "halfplane" | "half-plane" => PhiSpec::HalfPlane,
                    "exp" | "exponential" => PhiSpec::Exponential,
                    "sqrt" | "lemniscate" => PhiSpec::SqrtLemniscate,
                    other => bail!("unknown target {other:?}"),
                }
            }
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str(&text).context("parsing target spec JSON")?
        }
    };
    spec.validate()?;
    Ok(spec)
}

/// Parse "a" or "a+bi" / "a-bi" into a complex number.
fn parse_complex(text: &str) -> Result<C64> {
    let s = text.trim();
    if let Ok(re) = s.parse::<f64>() {
        return Ok(C64::new(re, 0.0));
    }
    let inner = s
        .strip_suffix('i')
        .ok_or_else(|| anyhow!("cannot parse {s:?} as a complex number"))?;
    // Split at the sign of the imaginary part, skipping a leading sign.
    let split = inner[1..]
        .rfind(['+', '-'])
        .map(|idx| idx + 1)
        .ok_or_else(|| anyhow!("cannot parse {s:?}: expected \"a+bi\""))?;
    let re: f64 = inner[..split].parse().context("real part")?;
    let imtext = &inner[split..];
    let im: f64 = if imtext == "+" {
        1.0
    } else if imtext == "-" {
        -1.0
    } else {
        imtext.parse().context("imaginary part")?
    };
    Ok(C64::new(re, im))
}

fn parse_params(target: &TargetArgs) -> Result<(PhiSpec, ClassParams)> {
    let spec = parse_phi(target)?;
    let alpha = parse_complex(&target.alpha)?;
    let params = ClassParams::new(alpha)?;
    Ok((spec, params))
}

fn parse_mu_list(mu: &[String]) -> Result<Vec<C64>> {
    mu.iter().map(|m| parse_complex(m)).collect()
}

fn cmd_bounds(args: BoundsArgs) -> Result<ExitCode> {
    let (spec, params) = parse_params(&args.target)?;
    for &r in &args.r {
        if !(r > 0.0 && r < 1.0) {
            return Err(BoundsError::RadiusOutOfRange(r).into());
        }
    }
    let mu = parse_mu_list(&args.mu)?;
    let mut notes = Vec::new();
    let bounds = report::build_bounds_report(&params, &spec, &args.r, args.order, &mu, &mut notes)?;
    let doc = Document {
        input: InputEcho {
            subcommand: "bounds".into(),
            phi: spec,
            alpha: params.alpha().into(),
            r_values: Some(args.r.clone()),
            order: Some(args.order),
            mu_values: Some(mu.iter().map(|&m| m.into()).collect()),
            functionals: None,
            trials: None,
            seed: None,
            parameter_mode: None,
            schur: None,
            format: args.format.name().into(),
        },
        bounds: Some(bounds),
        verification: Vec::new(),
        series_debug: None,
        notes,
    };
    output::emit(&doc, args.format)?;
    Ok(ExitCode::SUCCESS)
}

/// Expand the requested functional names, honoring availability at the given
/// alpha. Unavailable functionals inside "all" are skipped with a note;
/// requesting one explicitly is an input error.
fn resolve_functionals(
    names: &[String],
    n: usize,
    mu: &[C64],
    params: &ClassParams,
    notes: &mut Vec<String>,
) -> Result<Vec<Functional>> {
    let mut out = Vec::new();
    for name in names {
        match name.to_ascii_lowercase().as_str() {
            "an" => out.push(Functional::TaylorCoeff(n)),
            "gamma1" => out.push(Functional::Gamma1),
            "gamma2" => out.push(Functional::Gamma2),
            "gamma3" => out.push(Functional::Gamma3),
            "a2" => out.push(Functional::InverseA2),
            "a3" => out.push(Functional::InverseA3),
            "a4" => out.push(Functional::InverseA4),
            "fs" => out.extend(mu.iter().map(|&m| Functional::FeketeSzego(m))),
            "hankel2" => out.push(Functional::Hankel2),
            "all" => {
                out.push(Functional::TaylorCoeff(n));
                out.push(Functional::Gamma1);
                out.push(Functional::Gamma2);
                out.push(Functional::InverseA2);
                out.push(Functional::InverseA3);
                out.extend(mu.iter().map(|&m| Functional::FeketeSzego(m)));
                if params.is_real() {
                    out.push(Functional::Gamma3);
                    out.push(Functional::InverseA4);
                    out.push(Functional::Hankel2);
                } else {
                    notes.push(
                        "alpha is not real: gamma3, A4 and hankel2 campaigns skipped".into(),
                    );
                }
            }
            other => bail!("unknown functional {other:?}"),
        }
    }
    let needs_real = |f: &Functional| {
        matches!(
            f,
            Functional::Gamma3 | Functional::InverseA4 | Functional::Hankel2
        )
    };
    if !params.is_real() {
        if let Some(f) = out.iter().find(|f| needs_real(f)) {
            bail!("functional {} requires a real alpha", f.label());
        }
    }
    Ok(out)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let (spec, params) = parse_params(&args.target)?;
    if args.n < 2 {
        bail!("--n must be at least 2");
    }
    let mu = parse_mu_list(&args.mu)?;
    let mut notes = Vec::new();
    let functionals = resolve_functionals(&args.functional, args.n, &mu, &params, &mut notes)?;
    let cfg = SearchConfig {
        trials: args.trials,
        grid_step: args.grid_step,
        refine_iters: args.refine_iters,
        seed: args.seed,
        parameter_mode: if args.complex_params {
            ParameterMode::ComplexParams
        } else {
            ParameterMode::RealParams
        },
    };

    let run = || -> Result<Vec<VerificationReport>> {
        functionals
            .iter()
            .map(|&f| verify_class_bounds(&params, &spec, f, &cfg).map_err(Into::into))
            .collect()
    };
    let verification = match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .context("building worker pool")?
            .install(run),
        None => run(),
    }?;

    let violations: usize = verification.iter().map(|r| r.violations).sum();
    let doc = Document {
        input: InputEcho {
            subcommand: "verify".into(),
            phi: spec,
            alpha: params.alpha().into(),
            r_values: None,
            order: None,
            mu_values: Some(mu.iter().map(|&m| m.into()).collect()),
            functionals: Some(verification.iter().map(|r| r.functional.clone()).collect()),
            trials: Some(cfg.trials),
            seed: Some(cfg.seed),
            parameter_mode: Some(
                match cfg.parameter_mode {
                    ParameterMode::RealParams => "real",
                    ParameterMode::ComplexParams => "complex",
                }
                .into(),
            ),
            schur: None,
            format: args.format.name().into(),
        },
        bounds: None,
        verification,
        series_debug: None,
        notes,
    };
    output::emit(&doc, args.format)?;
    Ok(if violations == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn parse_range(text: &str) -> Result<(f64, f64)> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| anyhow!("range must be \"lo:hi\", got {text:?}"))?;
    let lo: f64 = lo.parse().context("range start")?;
    let hi: f64 = hi.parse().context("range end")?;
    if hi < lo {
        bail!("empty range {text:?}");
    }
    Ok((lo, hi))
}

fn cmd_hmap(args: HmapArgs) -> Result<ExitCode> {
    if !(args.step > 0.0) {
        bail!("--step must be positive");
    }
    let (q1_lo, q1_hi) = parse_range(&args.q1)?;
    let (q2_lo, q2_hi) = parse_range(&args.q2)?;
    let count = |lo: f64, hi: f64| ((hi - lo) / args.step).round() as usize;
    let n1 = count(q1_lo, q1_hi);
    let n2 = count(q2_lo, q2_hi);
    let mut unmatched = 0usize;
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    use std::io::Write;
    for i in 0..=n1 {
        let q1 = (q1_lo + i as f64 * args.step).min(q1_hi);
        for j in 0..=n2 {
            let q2 = (q2_lo + j as f64 * args.step).min(q2_hi);
            match eval_h(q1, q2) {
                Ok(h) => writeln!(
                    out,
                    "{},{},{},{}",
                    output::fmt5(q1),
                    output::fmt5(q2),
                    h.region,
                    output::fmt5(h.value)
                )?,
                Err(_) => {
                    unmatched += 1;
                    writeln!(out, "{},{},unmatched,nan", output::fmt5(q1), output::fmt5(q2))?;
                }
            }
        }
    }
    out.flush()?;
    eprintln!("note: {H_CLASSIFICATION_NOTE}");
    if unmatched > 0 {
        eprintln!("warning: {unmatched} grid points matched no region");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_series_debug(args: SeriesDebugArgs) -> Result<ExitCode> {
    let (spec, params) = parse_params(&args.target)?;
    if args.order < 4 {
        bail!("--order must be at least 4");
    }
    let phi_coefficients = spec.coefficients(args.order.min(spec.max_order()))?;
    let ext = extremal(&params, &spec, ExtremalKind::DistortionGrowth, args.order)?;
    let mut debug = SeriesDebugReport {
        phi_coefficients,
        extremal_coefficients: ext.coeffs().iter().map(|&c| c.into()).collect(),
        schwarz_coefficients: None,
        member_coefficients: None,
        gamma: None,
        inverse: None,
        hankel2: None,
        membership_residual: None,
    };
    let mut schur_echo = None;
    if let Some(ref raw) = args.schur {
        let sigma: Vec<C64> =
            raw.iter().map(|s| parse_complex(s)).collect::<Result<_>>()?;
        let w = schur_to_schwarz(&sigma, args.order)?;
        let f = member_from_schwarz(&params, &spec, &w, args.order)?;
        let prof = profile(&f)?;
        debug.schwarz_coefficients =
            Some(w.series.coeffs().iter().map(|&c| c.into()).collect());
        debug.member_coefficients = Some(f.coeffs().iter().map(|&c| c.into()).collect());
        debug.gamma = Some(prof.gamma.iter().map(|&g| g.into()).collect());
        debug.inverse = Some(prof.inv.iter().map(|&a| a.into()).collect());
        debug.hankel2 = Some(prof.h2.into());
        debug.membership_residual = Some(membership_residual(&params, &spec, &f, &w)?);
        schur_echo = Some(sigma.iter().map(|&s| ComplexEcho::from(s)).collect());
    }
    let doc = Document {
        input: InputEcho {
            subcommand: "series-debug".into(),
            phi: spec,
            alpha: params.alpha().into(),
            r_values: None,
            order: Some(args.order),
            mu_values: None,
            functionals: None,
            trials: None,
            seed: None,
            parameter_mode: None,
            schur: schur_echo,
            format: args.format.name().into(),
        },
        bounds: None,
        verification: Vec::new(),
        series_debug: Some(debug),
        notes: Vec::new(),
    };
    output::emit(&doc, args.format)?;
    Ok(ExitCode::SUCCESS)
}
