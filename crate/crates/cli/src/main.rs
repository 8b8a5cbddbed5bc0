use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use weiltrace::curve::CurveSpec;
use weiltrace::symplectic::DEFAULT_DECOMPOSITION_SEED;
use weiltrace::verify::{
    check_curve, check_representation, decompose_matrix, emit_report, parse_matrix_json, run_sweep, Report,
    ReportFormat, SweepConfig, SweepMode, EXIT_INVALID, EXIT_MISMATCH, EXIT_PASS,
};
use weiltrace::{Error, DEFAULT_DIM_CAP};

/// Exact checks of Weil-representation traces and Gauss-sum path integrals
/// over finite fields.
#[derive(Parser)]
#[command(name = "weiltrace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write the full report as JSON.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write the report as CSV.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Largest representation dimension ℓⁿ built explicitly.
    #[arg(long = "dim-cap", value_name = "K", default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
}

#[derive(Args)]
struct Sweep {
    #[arg(long)]
    ell: u64,
    #[arg(long = "dim")]
    n: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form, brute-force and lemma traces of random symplectomorphisms.
    TraceCheck {
        #[command(flatten)]
        sweep: Sweep,
        /// Draw arbitrary symplectomorphisms instead of semisimple ones.
        #[arg(long = "any-g")]
        any_g: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Quadratic Gauss sums by enumeration against the closed form.
    GaussCheck {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// The trace / path-integral identity for random semisimple g.
    MainCheck {
        #[command(flatten)]
        sweep: Sweep,
        #[command(flatten)]
        out: Output,
    },
    /// Representation axioms, irreducibility and intertwiner properties.
    RepCheck {
        #[arg(long)]
        ell: u64,
        #[arg(long = "dim")]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Invariant symplectic decomposition of a matrix read from a JSON file.
    Decompose {
        #[arg(long)]
        ell: u64,
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DECOMPOSITION_SEED)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Frobenius on the ℓ-torsion of a curve, then every applicable check.
    Curve {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Mismatch(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn write(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), Failure> {
    if let Some(p) = path {
        let mut bytes = serde_json::to_vec_pretty(value).map_err(|e| Failure::Invalid(e.to_string()))?;
        bytes.push(b'\n');
        write(p, &bytes)?;
    }
    Ok(())
}

fn write_csv<T: Serialize>(path: &Option<PathBuf>, rows: &[T]) -> Result<(), Failure> {
    if let Some(p) = path {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in rows {
            w.serialize(r).map_err(|e| Failure::Invalid(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Failure::Invalid(e.to_string()))?;
        write(p, &bytes)?;
    }
    Ok(())
}

fn emit(report: &Report, out: &Output) -> Result<(), Failure> {
    if let Some(p) = &out.json {
        write(p, &emit_report(report, ReportFormat::Json)?)?;
    }
    if let Some(p) = &out.csv {
        write(p, &emit_report(report, ReportFormat::Csv)?)?;
    }
    Ok(())
}

fn count(report: &Report, f: impl Fn(&weiltrace::verify::TrialReport) -> Option<bool>) -> (usize, usize) {
    let checked: Vec<bool> = report.trials.iter().filter_map(&f).collect();
    (checked.iter().filter(|&&b| b).count(), checked.len())
}

fn print_line(label: &str, (ok, total): (usize, usize)) {
    println!("  {label:<22} {ok}/{total}");
}

fn sweep(mode: SweepMode, ell: u64, n: usize, trials: usize, seed: u64, out: &Output, main: bool) -> Outcome {
    let config = SweepConfig::new(mode, ell, n, trials, seed).with_dim_cap(out.dim_cap);
    let report = run_sweep(&config)?;
    emit(&report, out)?;
    let name = serde_json::to_value(mode).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    println!("{name}: ℓ = {ell}, n = {n}, {trials} trials, seed {seed}");
    match mode {
        SweepMode::GaussOnly => print_line("gauss brute = closed", count(&report, |t| t.gauss_equal)),
        _ => {
            print_line("brute = closed", count(&report, |t| t.brute_equal));
            print_line("lemma = brute", count(&report, |t| t.lemma_equal));
            if main {
                print_line("dimension identity", count(&report, |t| t.dimension_identity));
                print_line("main theorem", count(&report, |t| t.main_equal));
            }
        }
    }
    for t in report.trials.iter().filter(|t| !t.passed) {
        println!("  FAIL trial {} (seed {}){}", t.index, t.seed, t.error.as_deref().map(|e| format!(": {e}")).unwrap_or_default());
    }
    println!("pass {} fail {}", report.summary.pass, report.summary.fail);
    Ok(report.summary.fail == 0)
}

#[derive(Serialize)]
struct BlockRow {
    block: usize,
    kind: String,
    dim: usize,
    charpoly: String,
    basis: String,
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::TraceCheck { sweep: s, any_g, out } => {
            let mode = if any_g { SweepMode::RandomAny } else { SweepMode::RandomSemisimple };
            sweep(mode, s.ell, s.n, s.trials, s.seed, &out, false)
        }
        Command::GaussCheck { ell, size, trials, seed, out } => sweep(SweepMode::GaussOnly, ell, size, trials, seed, &out, false),
        Command::MainCheck { sweep: s, out } => sweep(SweepMode::RandomSemisimple, s.ell, s.n, s.trials, s.seed, &out, true),
        Command::RepCheck { ell, n, seed, out } => {
            let r = check_representation(ell, n, seed, out.dim_cap)?;
            write_json(&out.json, &r)?;
            write_csv(&out.csv, std::slice::from_ref(&r))?;
            println!("ℓ = {ell}, n = {n}, dimension {}", r.dim);
            println!("  homomorphism ({} pairs)  {}", r.homomorphism_pairs, r.homomorphism);
            println!("  central character        {}", r.central_character);
            match (&r.character_norm_sum, r.irreducible) {
                (Some(s), Some(ok)) => println!("  Σ|χ|² = {s}  irreducible {ok}"),
                _ => println!("  irreducibility sum skipped (group too large)"),
            }
            println!("  intertwiners equivariant {}", r.intertwiner_equivariant);
            println!("  intertwiners inverse     {}", r.intertwiner_inverse);
            println!("  intertwiner cocycle      {}", r.intertwiner_cocycle);
            println!("  ρ(g) covariant           {}", r.weil_covariant);
            Ok(r.passed)
        }
        Command::Decompose { ell, matrix, seed, out } => {
            let g = parse_matrix_json(ell, &read(&matrix)?)?;
            let r = decompose_matrix(&g, seed)?;
            write_json(&out.json, &r)?;
            let rows: Vec<BlockRow> = r
                .blocks
                .iter()
                .enumerate()
                .map(|(i, b)| BlockRow {
                    block: i,
                    kind: serde_json::to_value(b.kind).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
                    dim: b.dim,
                    charpoly: serde_json::to_string(&b.charpoly).unwrap_or_default(),
                    basis: serde_json::to_string(&b.basis).unwrap_or_default(),
                })
                .collect();
            write_csv(&out.csv, &rows)?;
            println!("{} blocks", r.blocks.len());
            for row in &rows {
                println!("  {:<11} dim {}  charpoly {}", row.kind, row.dim, row.charpoly);
            }
            for v in &r.violations {
                println!("  violation: {v}");
            }
            Ok(r.passed)
        }
        Command::Curve { input, out } => {
            let spec = CurveSpec::from_json(&read(&input)?)?;
            let (data, trial) = check_curve(&spec, out.dim_cap)?;
            let config = SweepConfig::new(SweepMode::Curve, spec.ell, 1, 1, spec.seed).with_dim_cap(out.dim_cap);
            let report = Report::from_trials(config, vec![trial.clone()]);
            emit(&report, &out)?;
            println!("y² = x³ + {}x + {} over F_{}^{}, ℓ = {}", spec.a, spec.b, spec.p, spec.e, spec.ell);
            println!("  #E(F_q) = {}, a = {}", data.point_count, data.trace_a);
            println!("  full ℓ-torsion over degree {}", data.torsion_field_degree);
            println!("  Frobenius matrix {:?}", data.frobenius_matrix.to_u64_rows());
            println!("  fixed points on E[ℓ]: {}", data.fixed_count);
            if let Some(tr) = &trial.trace {
                println!("  trace {tr}");
            }
            let show = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
            println!("  brute = closed {}", show(trial.brute_equal));
            println!("  lemma = brute  {}", show(trial.lemma_equal));
            println!("  main theorem   {}", show(trial.main_equal));
            if let Some(e) = &trial.error {
                println!("  error: {e}");
            }
            Ok(trial.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_MISMATCH,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            EXIT_MISMATCH
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INVALID
        }
    };
    ExitCode::from(code as u8)
}
