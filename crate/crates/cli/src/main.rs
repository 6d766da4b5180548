//! Command-line front door: generate family graphs, compute irregularity
//! measures, verify closed forms over parameter grids, and sweep Var − CS
//! gaps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad parameters,
//! 3 I/O or parse failure, 4 solver non-convergence.

mod config;
mod edgelist;
mod grid;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grid::GridSpec;
use molirr_core::formulas::errata_ledger;
use molirr_core::generators::{generate, Family, FamilySpec, GenerateError, ParamValues};
use molirr_core::indices::full_report;
use molirr_core::spectral::{DEFAULT_MAX_ITER, DEFAULT_TOL};
use molirr_core::verify::{
    compare_grid, conjecture_sweep, default_grid, default_sweep_grid, quick_grid, PointOutcome,
    SweepError,
};

#[derive(Parser)]
#[command(name = "molirr", version, about = "Irregularity measures of molecular structure graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and write it as a canonical edge list
    Generate(GenerateArgs),
    /// Compute irregularity measures of a family graph or an edge-list file
    Indices(IndicesArgs),
    /// Check the closed forms against graph computation over parameter grids
    Verify(VerifyArgs),
    /// Sweep the Var − CS gap along a growing parameter
    Sweep(SweepArgs),
    /// Print the ledger of closed-form corrections
    Errata,
}

/// Family and parameter flags shared by the spec-taking commands. Parameters
/// accept grid syntax (`4`, `2..8`, `2:80:5`, comma lists); commands that
/// need scalars enforce single values.
#[derive(Args, Default)]
struct SpecArgs {
    /// Family token: tuc4c8s | tuc4c8r | tuc4 | tuhc6 | tuvc6 | dendrimer |
    /// circumcoronene | mcycle | mpath
    #[arg(long)]
    family: Option<String>,
    #[arg(short, long)]
    p: Option<GridSpec>,
    #[arg(short, long)]
    q: Option<GridSpec>,
    #[arg(short, long)]
    k: Option<GridSpec>,
    #[arg(short, long)]
    d: Option<GridSpec>,
    #[arg(short, long)]
    n: Option<GridSpec>,
    /// key=value defaults for the flags above (flags win)
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Output path (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Csv,
}

#[derive(Args)]
struct IndicesArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Read the graph from an edge-list file instead of generating a family
    #[arg(long = "in", value_name = "FILE", conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Keep going when the eigensolver hits its iteration cap
    #[arg(long)]
    allow_unconverged: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Verify every family on its default grid
    #[arg(long, conflicts_with = "family")]
    all: bool,
    /// Compare against the uncorrected printed forms instead
    #[arg(long)]
    printed_forms: bool,
    /// Reduced grids
    #[arg(long)]
    quick: bool,
    /// Write a side-by-side CSV of graph vs closed values
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    /// Record unconverged points instead of failing
    #[arg(long)]
    allow_unconverged: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Verification,
    BadParams(String),
    Io(String),
    NotConverged(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::BadParams(_) => 2,
            CliError::Io(_) => 3,
            CliError::NotConverged(_) => 4,
        }
    }

    fn message(&self) -> Option<&str> {
        match self {
            CliError::Verification => None,
            CliError::BadParams(m) | CliError::Io(m) | CliError::NotConverged(m) => Some(m),
        }
    }
}

impl From<GenerateError> for CliError {
    fn from(e: GenerateError) -> CliError {
        CliError::BadParams(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("molirr: {msg}");
            }
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Generate(args) => cmd_generate(args),
        Command::Indices(args) => cmd_indices(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Errata => cmd_errata(),
    }
}

/// Family plus grid-valued parameters after merging flags over the config
/// file.
struct ResolvedSpec {
    family: Family,
    p: Option<GridSpec>,
    q: Option<GridSpec>,
    k: Option<GridSpec>,
    d: Option<GridSpec>,
    n: Option<GridSpec>,
}

fn resolve(args: &SpecArgs) -> Result<ResolvedSpec, CliError> {
    let cfg = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            config::parse(&text).map_err(CliError::Io)?
        }
        None => config::ConfigFile::default(),
    };
    let family_token = args
        .family
        .clone()
        .or(cfg.family)
        .ok_or_else(|| CliError::BadParams("missing --family".into()))?;
    let family = Family::from_token(&family_token)
        .ok_or_else(|| CliError::BadParams(format!("unknown family {family_token:?}")))?;
    Ok(ResolvedSpec {
        family,
        p: args.p.clone().or(cfg.p),
        q: args.q.clone().or(cfg.q),
        k: args.k.clone().or(cfg.k),
        d: args.d.clone().or(cfg.d),
        n: args.n.clone().or(cfg.n),
    })
}

/// Collapses grid parameters to scalars and builds one validated spec.
fn scalar_spec(r: &ResolvedSpec) -> Result<FamilySpec, CliError> {
    let single = |g: &Option<GridSpec>, name: &str| -> Result<Option<u32>, CliError> {
        g.as_ref()
            .map(|g| g.single().map_err(|e| CliError::BadParams(format!("-{name}: {e}"))))
            .transpose()
    };
    let params = ParamValues {
        p: single(&r.p, "p")?,
        q: single(&r.q, "q")?,
        k: single(&r.k, "k")?,
        d: single(&r.d, "d")?,
        n: single(&r.n, "n")?,
    };
    let spec = FamilySpec::from_params(r.family, params)?;
    spec.validate()?;
    Ok(spec)
}

fn write_out(out: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), CliError> {
    let spec = scalar_spec(&resolve(&args.spec)?)?;
    let g = generate(&spec)?;
    write_out(args.out.as_ref(), &edgelist::render(&g))
}

fn cmd_indices(args: IndicesArgs) -> Result<(), CliError> {
    let (label, spec, graph) = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let g = edgelist::parse(&text)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            ("edgelist".to_string(), None, g)
        }
        None => {
            let spec = scalar_spec(&resolve(&args.spec)?)?;
            let g = generate(&spec)?;
            (spec.family().to_string(), Some(spec), g)
        }
    };
    let report = full_report(&graph, args.tol, args.max_iter)
        .map_err(|e| CliError::BadParams(e.to_string()))?;
    if !report.converged && !args.allow_unconverged {
        return Err(CliError::NotConverged(format!(
            "eigensolver hit the iteration cap ({}); best λ₁ estimate {} (rerun with \
             --allow-unconverged to accept it)",
            report.iterations,
            report.lambda1.unwrap_or(f64::NAN),
        )));
    }
    let content = match args.format {
        Format::Pretty => render::indices_pretty(&label, spec.as_ref(), &report),
        Format::Csv => format!(
            "{}\n{}\n",
            render::INDICES_CSV_HEADER,
            render::indices_csv_row(&label, spec.as_ref(), &report)
        ),
    };
    write_out(args.out.as_ref(), &content)
}

/// Grid dimensions (with family-specific default ranges) for verify.
fn verify_points(r: &ResolvedSpec, quick: bool) -> Result<Vec<FamilySpec>, CliError> {
    let explicit =
        r.p.is_some() || r.q.is_some() || r.k.is_some() || r.d.is_some() || r.n.is_some();
    if !explicit {
        return Ok(if quick { quick_grid(r.family) } else { default_grid(r.family) });
    }
    let hi = if quick { 5 } else { 10 };
    let values = |g: &Option<GridSpec>, lo: u32, hi: u32| -> Vec<u32> {
        g.as_ref().map(|g| g.values().to_vec()).unwrap_or_else(|| (lo..=hi).collect())
    };
    let reject_for = |name: &str| {
        CliError::BadParams(format!("parameter {name} does not apply to family {}", r.family))
    };
    let mut points = Vec::new();
    match r.family {
        Family::Tuc4c8s | Family::Tuc4c8r | Family::Tuc4 | Family::Tuhc6 | Family::Tuvc6 => {
            if r.k.is_some() || r.d.is_some() {
                return Err(reject_for("k/d"));
            }
            if r.n.is_some() {
                return Err(reject_for("n"));
            }
            let (p_floor, q_floor) = match r.family {
                Family::Tuc4 => (3, 3),
                Family::Tuvc6 => (2, 3),
                _ => (2, 2),
            };
            for &p in &values(&r.p, p_floor, hi) {
                for &q in &values(&r.q, q_floor, hi) {
                    let params =
                        ParamValues { p: Some(p), q: Some(q), ..ParamValues::default() };
                    points.push(FamilySpec::from_params(r.family, params)?);
                }
            }
        }
        Family::Dendrimer => {
            if r.p.is_some() || r.q.is_some() || r.n.is_some() {
                return Err(reject_for("p/q/n"));
            }
            let d_hi = if quick { 2 } else { 4 };
            for &k in &values(&r.k, 3, if quick { 4 } else { 5 }) {
                for &d in &values(&r.d, 1, d_hi) {
                    points.push(FamilySpec::Dendrimer { k, d });
                }
            }
        }
        Family::Circumcoronene => {
            if r.p.is_some() || r.q.is_some() || r.d.is_some() || r.n.is_some() {
                return Err(reject_for("p/q/d/n"));
            }
            points.extend(values(&r.k, 1, hi).iter().map(|&k| FamilySpec::Circumcoronene { k }));
        }
        Family::MycielskiCycle | Family::MycielskiPath => {
            if r.p.is_some() || r.q.is_some() || r.k.is_some() || r.d.is_some() {
                return Err(reject_for("p/q/k/d"));
            }
            let myc_hi = if quick { 10 } else { 30 };
            for &n in &values(&r.n, 4, myc_hi) {
                points.push(match r.family {
                    Family::MycielskiCycle => FamilySpec::MycielskiCycle { n },
                    _ => FamilySpec::MycielskiPath { n },
                });
            }
        }
    }
    Ok(points)
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let mut results = Vec::new();
    if args.all {
        for family in Family::ALL {
            let grid = if args.quick { quick_grid(family) } else { default_grid(family) };
            results.extend(compare_grid(&grid, args.printed_forms));
        }
    } else {
        let resolved = resolve(&args.spec)?;
        let points = verify_points(&resolved, args.quick)?;
        results = compare_grid(&points, args.printed_forms);
    }

    print!("{}", render::verify_lines(&results, args.printed_forms));
    if let Some(out) = &args.out {
        write_out(Some(out), &render::verify_csv(&results))?;
    }
    if results.iter().any(|r| matches!(r.outcome, PointOutcome::Mismatch(_))) {
        return Err(CliError::Verification);
    }
    Ok(())
}

/// Sweep points: default grids per family, or explicit ones with exactly one
/// growing parameter.
fn sweep_points(r: &ResolvedSpec) -> Result<Vec<FamilySpec>, CliError> {
    if !r.family.in_conjecture_scope() {
        return Err(CliError::BadParams(format!(
            "family {} is outside the sweep scope (tubes and circumcoronene)",
            r.family
        )));
    }
    let explicit =
        r.p.is_some() || r.q.is_some() || r.k.is_some() || r.d.is_some() || r.n.is_some();
    if !explicit {
        return Ok(default_sweep_grid(r.family).expect("family is in scope"));
    }

    let dims: Vec<(&str, &Option<GridSpec>)> = match r.family {
        Family::Circumcoronene => vec![("k", &r.k)],
        _ => vec![("p", &r.p), ("q", &r.q)],
    };
    for (name, g) in [("k", &r.k), ("d", &r.d), ("n", &r.n), ("p", &r.p), ("q", &r.q)] {
        let applies = dims.iter().any(|(dim, _)| *dim == name);
        if g.is_some() && !applies {
            return Err(CliError::BadParams(format!(
                "parameter {name} does not apply to family {}",
                r.family
            )));
        }
    }
    let mut growing: Option<(&str, Vec<u32>)> = None;
    let mut fixed = ParamValues::default();
    for (name, g) in &dims {
        let g = g.as_ref().ok_or_else(|| {
            CliError::BadParams(format!("missing parameter {name} for family {}", r.family))
        })?;
        let values = g.values().to_vec();
        if values.len() > 1 {
            if growing.is_some() {
                return Err(CliError::BadParams(
                    "sweep takes exactly one growing parameter; the others must be single values"
                        .into(),
                ));
            }
            growing = Some((name, values));
        } else {
            let slot = match *name {
                "p" => &mut fixed.p,
                "q" => &mut fixed.q,
                "k" => &mut fixed.k,
                _ => unreachable!(),
            };
            *slot = Some(values[0]);
        }
    }
    let (grow_name, grow_values) = growing.unwrap_or(("", vec![]));
    let mut points = Vec::new();
    if grow_values.is_empty() {
        points.push(FamilySpec::from_params(r.family, fixed)?);
    } else {
        for v in grow_values {
            let mut params = fixed;
            match grow_name {
                "p" => params.p = Some(v),
                "q" => params.q = Some(v),
                "k" => params.k = Some(v),
                _ => unreachable!(),
            }
            points.push(FamilySpec::from_params(r.family, params)?);
        }
    }
    Ok(points)
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let resolved = resolve(&args.spec)?;
    let points = sweep_points(&resolved)?;
    let records = conjecture_sweep(&points, args.tol, args.max_iter, args.allow_unconverged)
        .map_err(|e| match e {
            SweepError::OutOfScope(_) | SweepError::Invalid(_) => {
                CliError::BadParams(e.to_string())
            }
            SweepError::NotConverged { .. } => CliError::NotConverged(e.to_string()),
        })?;
    write_out(args.out.as_ref(), &render::sweep_csv(&records))
}

fn cmd_errata() -> Result<(), CliError> {
    let mut out = String::new();
    for (i, e) in errata_ledger().iter().enumerate() {
        out.push_str(&format!(
            "[{}] {} {}\n    printed:   {}\n    corrected: {}\n    why: {}\n",
            i + 1,
            e.family,
            e.field,
            e.printed_form,
            e.corrected_form,
            e.justification
        ));
    }
    write_out(None, &out)
}
