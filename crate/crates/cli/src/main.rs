//! Command-line front-end over the exact biorthogonal-polynomial library.
//!
//! Subcommands mirror the library pipeline: `quasidet`, `build`, `verify`,
//! `gram`, `synth-kernel`, `recurrence`, `favard`. All scalar I/O is exact
//! JSON (rationals as strings, quaternions as 4-arrays of strings); matrix
//! indices on the command line are 1-based to match the usual display
//! convention, while files and the library are 0-based.
//!
//! Exit codes: 0 success/PASS, 1 mathematical failure (verification FAIL,
//! genericity violation, degenerate normalization, singular input), 2
//! usage or I/O error. All randomness derives from `--seed` (fallback: the
//! `NCB_SEED` environment variable), so runs are byte-reproducible.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use ncbiortho::biortho::{verify_biortho, BiorthoSystem, Normalization};
use ncbiortho::favard::{favard_bimoments, favard_verify, FavardInput};
use ncbiortho::gen::{seeded_rng, RandomScalar};
use ncbiortho::json;
use ncbiortho::recurrence::{run_pipeline, synth_kernel_random, KernelData};
use ncbiortho::ring::{DivisionRing, Quat, Rat, RingTag};

const SEED_ENV: &str = "NCB_SEED";

#[derive(Parser)]
#[command(
    name = "ncb",
    about = "Exact noncommutative biorthogonal polynomials over division rings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the (i,j)-quasideterminant of a square matrix (1-based box).
    Quasidet(QuasidetArgs),
    /// Build a biorthogonal system from a bimoment table.
    Build(BuildArgs),
    /// Verify a system against a table; FAIL exits 1.
    Verify(VerifyArgs),
    /// Print the exact Gram array of a system against a table.
    Gram(GramArgs),
    /// Synthesize a bimoment table satisfying the kernel condition.
    SynthKernel(SynthKernelArgs),
    /// Run the full recurrence pipeline and verify every row exactly.
    Recurrence(RecurrenceArgs),
    /// Construct the unique bimoments making two sequences biorthogonal.
    Favard(FavardArgs),
}

#[derive(Args)]
struct QuasidetArgs {
    /// Matrix JSON: { "ring": ..., "entries": [[...]] }
    #[arg(long)]
    matrix: PathBuf,
    /// Boxed row, 1-based.
    #[arg(long)]
    row: usize,
    /// Boxed column, 1-based.
    #[arg(long)]
    col: usize,
}

#[derive(Args)]
struct BuildArgs {
    /// Bimoment table JSON.
    #[arg(long)]
    bimoments: PathBuf,
    /// Build p_0..p_{N-1}, q_0..q_{N-1}.
    #[arg(long)]
    upto: usize,
    /// "true" for the biorthonormal normalization, "false" for monic.
    #[arg(long, default_value = "false")]
    normalized: String,
    /// Output path for the system JSON.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// System JSON produced by `build`.
    #[arg(long)]
    system: PathBuf,
    /// Bimoment table JSON.
    #[arg(long)]
    bimoments: PathBuf,
    /// Optional path for the machine-readable Gram report.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct GramArgs {
    #[arg(long)]
    system: PathBuf,
    #[arg(long)]
    bimoments: PathBuf,
}

#[derive(Args)]
struct SynthKernelArgs {
    /// Kernel polynomial f(x) JSON: { "var": "x", "coeffs": [...] }.
    #[arg(long)]
    f: PathBuf,
    /// Kernel polynomial g(y) JSON: { "var": "y", "coeffs": [...] }.
    #[arg(long)]
    g: PathBuf,
    /// α sequence JSON: bare array of scalars.
    #[arg(long)]
    alpha: PathBuf,
    /// β sequence JSON: bare array of scalars.
    #[arg(long)]
    beta: PathBuf,
    /// Table size N (the output is N×N).
    #[arg(long)]
    size: usize,
    /// Ring override; inferred from the input files when omitted.
    #[arg(long)]
    ring: Option<String>,
    /// Genericity is verified up to this degree (default: N − max(deg f, deg g)).
    #[arg(long)]
    generic_upto: Option<usize>,
    /// Retry budget for random seeds.
    #[arg(long, default_value_t = ncbiortho::gen::DEFAULT_MAX_RETRIES)]
    retries: usize,
    /// RNG seed; falls back to $NCB_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct RecurrenceArgs {
    #[arg(long)]
    bimoments: PathBuf,
    #[arg(long)]
    f: PathBuf,
    #[arg(long)]
    g: PathBuf,
    #[arg(long)]
    alpha: PathBuf,
    #[arg(long)]
    beta: PathBuf,
    /// Verify recurrence rows k = 1..=K.
    #[arg(long)]
    upto: usize,
    /// Optional path for the machine-readable report.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct FavardArgs {
    /// JSON array of polynomials in x with deg p_n = n.
    #[arg(long)]
    p: PathBuf,
    /// JSON array of polynomials in y with deg q_n = n.
    #[arg(long)]
    q: PathBuf,
    /// JSON array of target diagonal pairings c_k.
    #[arg(long)]
    c: PathBuf,
    /// Construct the N×N table.
    #[arg(long)]
    size: usize,
    /// Ring override; inferred from the input files when omitted.
    #[arg(long)]
    ring: Option<String>,
    #[arg(long)]
    out: PathBuf,
}

/// Failures split by exit code: mathematical (1) vs usage/IO (2).
enum CliError {
    Core(ncbiortho::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<ncbiortho::Error> for CliError {
    fn from(e: ncbiortho::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_mathematical() => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed JSON in {}: {e}", path.display())))
}

fn write_json(path: &Path, v: &Value) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(v)
        .map_err(|e| CliError::Usage(format!("serialization failed: {e}")))?;
    text.push('\n');
    fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn parse_ring_flag(flag: &Option<String>) -> CliResult<Option<RingTag>> {
    match flag {
        None => Ok(None),
        Some(s) => RingTag::from_str(s)
            .map(Some)
            .map_err(|e| CliError::Usage(e.to_string())),
    }
}

/// Ring for files without a "ring" field: explicit flag wins, otherwise any
/// quaternion-shaped scalar anywhere selects the quaternion ring.
fn infer_ring_of(values: &[&Value], flag: &Option<String>) -> CliResult<RingTag> {
    if let Some(tag) = parse_ring_flag(flag)? {
        return Ok(tag);
    }
    Ok(
        if values
            .iter()
            .any(|v| json::infer_ring(v) == RingTag::Quaternion)
        {
            RingTag::Quaternion
        } else {
            RingTag::Rational
        },
    )
}

fn resolve_seed(flag: Option<u64>) -> CliResult<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("{SEED_ENV} must be a u64, got {text:?}"))),
        Err(_) => Ok(0),
    }
}

fn parse_bool(s: &str, flag: &str) -> CliResult<bool> {
    match s {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(CliError::Usage(format!(
            "--{flag} takes true|false, got {other:?}"
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Quasidet(args) => cmd_quasidet(args),
        Command::Build(args) => cmd_build(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gram(args) => cmd_gram(args),
        Command::SynthKernel(args) => cmd_synth_kernel(args),
        Command::Recurrence(args) => cmd_recurrence(args),
        Command::Favard(args) => cmd_favard(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

// ---------------------------------------------------------------------------
// Subcommands; each generic worker is dispatched on the runtime ring tag.
// ---------------------------------------------------------------------------

fn cmd_quasidet(args: &QuasidetArgs) -> CliResult<bool> {
    let v = read_json(&args.matrix)?;
    if args.row == 0 || args.col == 0 {
        return Err(CliError::Usage("--row and --col are 1-based".into()));
    }
    fn run<R>(v: &Value, row: usize, col: usize) -> CliResult<String>
    where
        R: DivisionRing + serde::Serialize + serde::de::DeserializeOwned,
    {
        let m = json::matrix_from_value::<R>(v)?;
        Ok(m.quasidet(row - 1, col - 1)?.to_string())
    }
    let printed = match json::value_ring_tag(&v)? {
        RingTag::Rational => run::<Rat>(&v, args.row, args.col)?,
        RingTag::Quaternion => run::<Quat>(&v, args.row, args.col)?,
    };
    println!("{printed}");
    Ok(true)
}

fn cmd_build(args: &BuildArgs) -> CliResult<bool> {
    let v = read_json(&args.bimoments)?;
    let normalization = if parse_bool(&args.normalized, "normalized")? {
        Normalization::Biorthonormal
    } else {
        Normalization::Monic
    };
    fn run<R>(v: &Value, upto: usize, normalization: Normalization) -> CliResult<Value>
    where
        R: DivisionRing + serde::Serialize + serde::de::DeserializeOwned,
    {
        let table = json::table_from_value::<R>(v)?;
        let sys = BiorthoSystem::build(&table, upto, normalization)?;
        Ok(json::system_to_value(&sys))
    }
    let out = match json::value_ring_tag(&v)? {
        RingTag::Rational => run::<Rat>(&v, args.upto, normalization)?,
        RingTag::Quaternion => run::<Quat>(&v, args.upto, normalization)?,
    };
    write_json(&args.out, &out)?;
    println!(
        "built {} system of {} degrees into {}",
        normalization,
        args.upto,
        args.out.display()
    );
    Ok(true)
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<bool> {
    let sys_v = read_json(&args.system)?;
    let table_v = read_json(&args.bimoments)?;
    let sys_tag = json::value_ring_tag(&sys_v)?;
    let table_tag = json::value_ring_tag(&table_v)?;
    if sys_tag != table_tag {
        return Err(ncbiortho::Error::RingMismatch {
            expected: sys_tag,
            found: table_tag,
        }
        .into());
    }
    fn run<R>(sys_v: &Value, table_v: &Value) -> CliResult<(bool, String, Value)>
    where
        R: DivisionRing + serde::Serialize + serde::de::DeserializeOwned,
    {
        let sys = json::system_from_value::<R>(sys_v)?;
        let table = json::table_from_value::<R>(table_v)?;
        let report = verify_biortho(&sys, &table)?;
        Ok((
            report.pass(),
            report.summary(),
            json::gram_report_to_value(&report),
        ))
    }
    let (pass, summary, report_v) = match sys_tag {
        RingTag::Rational => run::<Rat>(&sys_v, &table_v)?,
        RingTag::Quaternion => run::<Quat>(&sys_v, &table_v)?,
    };
    if let Some(path) = &args.report {
        write_json(path, &report_v)?;
    }
    println!("{summary}");
    Ok(pass)
}

fn cmd_gram(args: &GramArgs) -> CliResult<bool> {
    let sys_v = read_json(&args.system)?;
    let table_v = read_json(&args.bimoments)?;
    let sys_tag = json::value_ring_tag(&sys_v)?;
    let table_tag = json::value_ring_tag(&table_v)?;
    if sys_tag != table_tag {
        return Err(ncbiortho::Error::RingMismatch {
            expected: sys_tag,
            found: table_tag,
        }
        .into());
    }
    fn run<R>(sys_v: &Value, table_v: &Value) -> CliResult<Value>
    where
        R: DivisionRing + serde::Serialize + serde::de::DeserializeOwned,
    {
        let sys = json::system_from_value::<R>(sys_v)?;
        let table = json::table_from_value::<R>(table_v)?;
        let report = verify_biortho(&sys, &table)?;
        Ok(Value::Array(
            report
                .gram
                .iter()
                .map(|row| json::scalars_to_value(row))
                .collect(),
        ))
    }
    let gram = match sys_tag {
        RingTag::Rational => run::<Rat>(&sys_v, &table_v)?,
        RingTag::Quaternion => run::<Quat>(&sys_v, &table_v)?,
    };
    println!(
        "{}",
        serde_json::to_string(&gram).map_err(|e| CliError::Usage(e.to_string()))?
    );
    Ok(true)
}

fn cmd_synth_kernel(args: &SynthKernelArgs) -> CliResult<bool> {
    let f_v = read_json(&args.f)?;
    let g_v = read_json(&args.g)?;
    let alpha_v = read_json(&args.alpha)?;
    let beta_v = read_json(&args.beta)?;
    let tag = infer_ring_of(&[&f_v, &g_v, &alpha_v, &beta_v], &args.ring)?;
    let seed = resolve_seed(args.seed)?;
    fn run<R>(
        f_v: &Value,
        g_v: &Value,
        alpha_v: &Value,
        beta_v: &Value,
        args: &SynthKernelArgs,
        seed: u64,
    ) -> CliResult<Value>
    where
        R: RandomScalar + serde::Serialize + serde::de::DeserializeOwned,
    {
        let kd = KernelData::new(
            json::central_poly_from_value::<R>(f_v, "x")?,
            json::central_poly_from_value::<R>(g_v, "y")?,
            json::scalars_from_value::<R>(alpha_v)?,
            json::scalars_from_value::<R>(beta_v)?,
        )?;
        let generic_upto = args
            .generic_upto
            .unwrap_or_else(|| args.size.saturating_sub(kd.deg_f().max(kd.deg_g())));
        let mut rng = seeded_rng(seed);
        let table = synth_kernel_random(
            &kd,
            args.size,
            args.size,
            generic_upto,
            &mut rng,
            args.retries,
        )?;
        Ok(json::table_to_value(&table))
    }
    let out = match tag {
        RingTag::Rational => run::<Rat>(&f_v, &g_v, &alpha_v, &beta_v, args, seed)?,
        RingTag::Quaternion => run::<Quat>(&f_v, &g_v, &alpha_v, &beta_v, args, seed)?,
    };
    write_json(&args.out, &out)?;
    println!(
        "synthesized {0}x{0} conforming table into {1} (seed {2})",
        args.size,
        args.out.display(),
        seed
    );
    Ok(true)
}

fn cmd_recurrence(args: &RecurrenceArgs) -> CliResult<bool> {
    let table_v = read_json(&args.bimoments)?;
    let f_v = read_json(&args.f)?;
    let g_v = read_json(&args.g)?;
    let alpha_v = read_json(&args.alpha)?;
    let beta_v = read_json(&args.beta)?;
    fn run<R>(
        table_v: &Value,
        f_v: &Value,
        g_v: &Value,
        alpha_v: &Value,
        beta_v: &Value,
        upto: usize,
    ) -> CliResult<(bool, String, Value)>
    where
        R: DivisionRing + serde::Serialize + serde::de::DeserializeOwned,
    {
        let table = json::table_from_value::<R>(table_v)?;
        let kd = KernelData::new(
            json::central_poly_from_value::<R>(f_v, "x")?,
            json::central_poly_from_value::<R>(g_v, "y")?,
            json::scalars_from_value::<R>(alpha_v)?,
            json::scalars_from_value::<R>(beta_v)?,
        )?;
        let (_, report) = run_pipeline(&table, &kd, upto)?;
        Ok((
            report.pass(),
            report.summary(),
            json::recurrence_report_to_value(&report),
        ))
    }
    let (pass, summary, report_v) = match json::value_ring_tag(&table_v)? {
        RingTag::Rational => run::<Rat>(&table_v, &f_v, &g_v, &alpha_v, &beta_v, args.upto)?,
        RingTag::Quaternion => run::<Quat>(&table_v, &f_v, &g_v, &alpha_v, &beta_v, args.upto)?,
    };
    if let Some(path) = &args.report {
        write_json(path, &report_v)?;
    }
    print!("{summary}");
    Ok(pass)
}

fn cmd_favard(args: &FavardArgs) -> CliResult<bool> {
    let p_v = read_json(&args.p)?;
    let q_v = read_json(&args.q)?;
    let c_v = read_json(&args.c)?;
    let tag = infer_ring_of(&[&p_v, &q_v, &c_v], &args.ring)?;
    fn run<R>(p_v: &Value, q_v: &Value, c_v: &Value, size: usize) -> CliResult<Value>
    where
        R: DivisionRing + serde::Serialize + serde::de::DeserializeOwned,
    {
        let input = FavardInput {
            ps: json::left_polys_from_value::<R>(p_v)?,
            qs: json::right_polys_from_value::<R>(q_v)?,
            cs: json::scalars_from_value::<R>(c_v)?,
        };
        let table = favard_bimoments(&input, size)?;
        debug_assert!(favard_verify(&input, &table, size)?.pass());
        Ok(json::table_to_value(&table))
    }
    let out = match tag {
        RingTag::Rational => run::<Rat>(&p_v, &q_v, &c_v, args.size)?,
        RingTag::Quaternion => run::<Quat>(&p_v, &q_v, &c_v, args.size)?,
    };
    write_json(&args.out, &out)?;
    println!(
        "constructed the unique {0}x{0} bimoment table into {1}",
        args.size,
        args.out.display()
    );
    Ok(true)
}
