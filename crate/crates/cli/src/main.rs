//! `ucl`: exact Bell/derangement/Stirling computations and the verification
//! suites built on them, from the command line.
//!
//! Four subcommands share one report pipeline:
//!
//! * `compute` — evaluate a single number or polynomial exactly;
//! * `verify`  — run the identity/congruence/census suites over a grid;
//! * `sweep`   — chase one weighted Bell sum across every prime in range;
//! * `oracle`  — enumerate partitions/permutations and compare tallies
//!   against the closed forms.
//!
//! Exit codes: 0 when every verdict holds (excluded cells are fine), 1 when
//! any verdict fails, 2 for usage errors and unwritable output.

use std::collections::BTreeMap;
use std::env::VarError;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use ucl_core::bell::BellTables;
use ucl_core::combinat::EnumerationCaps;
use ucl_core::congruence::{
    run_suite, sweep_constant, sweep_expected_constant, verify_census, Params, Rendered,
    SuiteConfig, SuiteKind, SuiteReport, Verdict,
};
use ucl_core::numeric::primes_up_to;

mod report;
use report::{Format, Report};

/// Desk-scale ceilings. Past these the grids stop being a
/// seconds-to-minutes check, so the CLI refuses up front rather than stall.
const MAX_COMPUTE_INDEX: usize = 1000;
const MAX_SWEEP_M: usize = 1000;
const MAX_PMAX: u64 = 1000;
const MAX_NMAX: usize = 64;
const MAX_MMAX: usize = 128;
const MAX_PARTITION_CAP: usize = 12;
const MAX_PERMUTATION_CAP: usize = 10;

#[derive(Parser)]
#[command(
    name = "ucl",
    version,
    about = "Exact Bell/derangement/Stirling arithmetic and its verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one number or polynomial exactly.
    Compute(ComputeArgs),
    /// Run the verification suites over a parameter grid.
    Verify(VerifyArgs),
    /// Check the weighted Bell sum against its constant at every prime in
    /// range, for one weight index m.
    Sweep(SweepArgs),
    /// Enumerate set partitions and permutations, comparing every tally to
    /// its closed form.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Report format; defaults to UCL_DEFAULT_FORMAT, then to text.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report to this path instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    /// What to evaluate.
    #[arg(value_enum)]
    target: Target,
    /// Polynomial order / Stirling row (bell-poly, derangement-poly,
    /// stirling1, stirling2).
    #[arg(long)]
    m: Option<usize>,
    /// Set size (bell-number, derangement-number, v).
    #[arg(long)]
    n: Option<usize>,
    /// Stirling column (stirling1, stirling2).
    #[arg(long)]
    j: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Number of set partitions of an n-set.
    BellNumber,
    /// Partition-counting polynomial of order m, ascending coefficients.
    BellPoly,
    /// Number of fixed-point-free permutations of an n-set.
    DerangementNumber,
    /// Derangement polynomial of order m, ascending coefficients.
    DerangementPoly,
    /// Signed first-kind Stirling number s(m, j).
    Stirling1,
    /// Second-kind Stirling number S(m, j).
    Stirling2,
    /// Number of singleton-free partitions of an n-set.
    V,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::BellNumber => "bell-number",
            Target::BellPoly => "bell-poly",
            Target::DerangementNumber => "derangement-number",
            Target::DerangementPoly => "derangement-poly",
            Target::Stirling1 => "stirling1",
            Target::Stirling2 => "stirling2",
            Target::V => "v",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Which family of checks to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Largest shift index n in the shifted identities and congruences.
    #[arg(long = "nmax", default_value_t = 6)]
    nmax: usize,
    /// Largest weight index m.
    #[arg(long = "mmax", default_value_t = 10)]
    mmax: usize,
    /// Run the congruence checks at every prime up to this bound.
    #[arg(long = "pmax", default_value_t = 61)]
    pmax: u64,
    /// Enumerate partitions up to this set size in the census checks.
    #[arg(long = "partition-cap", default_value_t = 10)]
    partition_cap: usize,
    /// Enumerate permutations up to this set size in the census checks.
    #[arg(long = "permutation-cap", default_value_t = 9)]
    permutation_cap: usize,
    /// Deliberately corrupt one cached coefficient before running, to prove
    /// the checkers can fail. Test hook.
    #[arg(long = "inject-fault", hide = true)]
    inject_fault: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Identities,
    Congruences,
    Oracles,
}

impl Suite {
    fn kind(self) -> SuiteKind {
        match self {
            Suite::All => SuiteKind::All,
            Suite::Identities => SuiteKind::Identities,
            Suite::Congruences => SuiteKind::Congruences,
            Suite::Oracles => SuiteKind::Oracles,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Weight index m >= 1 of the swept sum.
    #[arg(long)]
    m: usize,
    /// Sweep every prime p <= pmax.
    #[arg(long = "pmax", default_value_t = 199)]
    pmax: u64,
    /// Include the k = 0 term (worth exactly 1) in the sum.
    #[arg(long = "include-k0", action = ArgAction::Set, default_value_t = true, value_name = "BOOL")]
    include_k0: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OracleArgs {
    /// Run the census at every size n = 0..=nmax.
    #[arg(long = "nmax", default_value_t = 11)]
    nmax: usize,
    /// Largest size whose partitions are enumerated.
    #[arg(long = "partition-cap", default_value_t = 11)]
    partition_cap: usize,
    /// Largest size whose permutations are enumerated.
    #[arg(long = "permutation-cap", default_value_t = 9)]
    permutation_cap: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write report to {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

fn ensure(condition: bool, message: impl Into<String>) -> Result<(), CliError> {
    if condition {
        Ok(())
    } else {
        Err(usage(message))
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Oracle(args) => cmd_oracle(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(2);
        }
    }
}

fn cmd_compute(args: ComputeArgs) -> Result<i32, CliError> {
    let format = resolve_format(args.output.format)?;
    let target = args.target;

    let want = |slot: Option<usize>, flag: &str| -> Result<usize, CliError> {
        let value = slot.ok_or_else(|| usage(format!("{} requires {flag}", target.name())))?;
        ensure(
            value <= MAX_COMPUTE_INDEX,
            format!("{flag} must be at most {MAX_COMPUTE_INDEX}"),
        )?;
        Ok(value)
    };
    let reject = |slot: Option<usize>, flag: &str| -> Result<(), CliError> {
        ensure(
            slot.is_none(),
            format!("{} does not take {flag}", target.name()),
        )
    };

    let started = Instant::now();
    let ctx = BellTables::new();
    let tables = ctx.tables();
    let mut config: BTreeMap<&'static str, String> = BTreeMap::new();
    config.insert("target", target.name().to_string());

    let (params, value) = match target {
        Target::BellNumber | Target::DerangementNumber | Target::V => {
            reject(args.m, "--m")?;
            reject(args.j, "--j")?;
            let n = want(args.n, "--n")?;
            config.insert("n", n.to_string());
            let value = match target {
                Target::BellNumber => tables.bell_number(n),
                Target::DerangementNumber => tables.derangement_number(n),
                _ => tables.singleton_free_count(n),
            };
            (
                Params::new().with("n", n as i64),
                Rendered::Value(value.to_string()),
            )
        }
        Target::BellPoly | Target::DerangementPoly => {
            reject(args.n, "--n")?;
            reject(args.j, "--j")?;
            let m = want(args.m, "--m")?;
            config.insert("m", m.to_string());
            let poly = match target {
                Target::BellPoly => ctx.bell_polynomial(m),
                _ => ctx.derangement_polynomial(m),
            };
            (
                Params::new().with("m", m as i64),
                Rendered::Coefficients(poly.to_decimal_strings()),
            )
        }
        Target::Stirling1 | Target::Stirling2 => {
            reject(args.n, "--n")?;
            let m = want(args.m, "--m")?;
            let j = want(args.j, "--j")?;
            config.insert("m", m.to_string());
            config.insert("j", j.to_string());
            let value = match target {
                Target::Stirling1 => tables.stirling_first(m, j),
                _ => tables.stirling_second(m, j),
            }
            .map_err(|error| usage(error.to_string()))?;
            (
                Params::new().with("m", m as i64).with("j", j as i64),
                Rendered::Value(value.to_string()),
            )
        }
    };

    let verdict = Verdict::computed(target.name(), params, value.clone());
    let report = Report::new(
        "compute",
        config,
        SuiteReport::from_verdicts(vec![verdict]),
        started.elapsed(),
    );
    let body = match format {
        // The bare value alone; scripts consume this directly.
        Format::Text => format!("{value}\n"),
        _ => report.render(format),
    };
    write_output(args.output.out.as_deref(), body)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let format = resolve_format(args.output.format)?;
    ensure(
        args.nmax <= MAX_NMAX,
        format!("--nmax must be at most {MAX_NMAX}"),
    )?;
    ensure(
        args.mmax <= MAX_MMAX,
        format!("--mmax must be at most {MAX_MMAX}"),
    )?;
    ensure(
        args.pmax <= MAX_PMAX,
        format!("--pmax must be at most {MAX_PMAX}"),
    )?;
    ensure(
        args.partition_cap <= MAX_PARTITION_CAP,
        format!("--partition-cap must be at most {MAX_PARTITION_CAP}"),
    )?;
    ensure(
        args.permutation_cap <= MAX_PERMUTATION_CAP,
        format!("--permutation-cap must be at most {MAX_PERMUTATION_CAP}"),
    )?;
    let suite = args.suite.kind();
    if matches!(suite, SuiteKind::All | SuiteKind::Congruences) {
        ensure(
            !primes_up_to(args.pmax).is_empty(),
            format!(
                "no primes at or below {}; the congruence checks need --pmax >= 2",
                args.pmax
            ),
        )?;
    }

    let started = Instant::now();
    let ctx = BellTables::new();
    if args.inject_fault {
        ctx.corrupt_bell_coefficient(2);
    }
    let suite_config = SuiteConfig {
        suite,
        n_max: args.nmax,
        m_max: args.mmax,
        p_max: args.pmax,
        caps: EnumerationCaps {
            partitions: args.partition_cap,
            permutations: args.permutation_cap,
        },
    };
    let outcome = run_suite(&ctx, &suite_config);

    let mut config = BTreeMap::new();
    config.insert("suite", suite.name().to_string());
    config.insert("n_max", args.nmax.to_string());
    config.insert("m_max", args.mmax.to_string());
    config.insert("p_max", args.pmax.to_string());
    config.insert("partition_cap", args.partition_cap.to_string());
    config.insert("permutation_cap", args.permutation_cap.to_string());
    if args.inject_fault {
        config.insert("inject_fault", "true".to_string());
    }
    let report = Report::new("verify", config, outcome, started.elapsed());
    write_output(args.output.out.as_deref(), report.render(format))?;
    Ok(report.exit_code())
}

fn cmd_sweep(args: SweepArgs) -> Result<i32, CliError> {
    let format = resolve_format(args.output.format)?;
    ensure(args.m >= 1, "--m must be at least 1")?;
    ensure(
        args.m <= MAX_SWEEP_M,
        format!("--m must be at most {MAX_SWEEP_M}"),
    )?;
    ensure(
        args.pmax >= 3,
        "--pmax must be at least 3; the swept constant lives at odd primes",
    )?;
    ensure(
        args.pmax <= MAX_PMAX,
        format!("--pmax must be at most {MAX_PMAX}"),
    )?;

    let started = Instant::now();
    let ctx = BellTables::new();
    let constant =
        sweep_expected_constant(&ctx, args.m, args.include_k0).expect("m >= 1 was checked");
    let outcome =
        sweep_constant(&ctx, args.m, args.pmax, args.include_k0).expect("m >= 1 was checked");

    let mut config = BTreeMap::new();
    config.insert("m", args.m.to_string());
    config.insert("p_max", args.pmax.to_string());
    config.insert("include_k0", args.include_k0.to_string());
    config.insert("constant", constant.to_string());
    let report = Report::new("sweep", config, outcome, started.elapsed());
    write_output(args.output.out.as_deref(), report.render(format))?;
    Ok(report.exit_code())
}

fn cmd_oracle(args: OracleArgs) -> Result<i32, CliError> {
    let format = resolve_format(args.output.format)?;
    ensure(
        args.partition_cap <= MAX_PARTITION_CAP,
        format!("--partition-cap must be at most {MAX_PARTITION_CAP}"),
    )?;
    ensure(
        args.permutation_cap <= MAX_PERMUTATION_CAP,
        format!("--permutation-cap must be at most {MAX_PERMUTATION_CAP}"),
    )?;
    ensure(
        args.nmax <= args.partition_cap,
        format!(
            "--nmax must be at most the partition cap ({})",
            args.partition_cap
        ),
    )?;

    let started = Instant::now();
    let ctx = BellTables::new();
    let caps = EnumerationCaps {
        partitions: args.partition_cap,
        permutations: args.permutation_cap,
    };
    let mut verdicts = Vec::with_capacity(args.nmax + 1);
    for n in 0..=args.nmax {
        verdicts.push(verify_census(&ctx, n, caps).expect("n is within the partition cap"));
    }
    let outcome = SuiteReport::from_verdicts(verdicts);

    let mut config = BTreeMap::new();
    config.insert("n_max", args.nmax.to_string());
    config.insert("partition_cap", args.partition_cap.to_string());
    config.insert("permutation_cap", args.permutation_cap.to_string());
    let report = Report::new("oracle", config, outcome, started.elapsed());
    write_output(args.output.out.as_deref(), report.render(format))?;
    Ok(report.exit_code())
}

/// Explicit flag, then the UCL_DEFAULT_FORMAT environment variable, then
/// text.
fn resolve_format(flag: Option<Format>) -> Result<Format, CliError> {
    if let Some(format) = flag {
        return Ok(format);
    }
    match std::env::var("UCL_DEFAULT_FORMAT") {
        Ok(value) => match value.as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(usage(format!(
                "UCL_DEFAULT_FORMAT must be one of text, json, csv (found {other:?})"
            ))),
        },
        Err(VarError::NotPresent) => Ok(Format::Text),
        Err(VarError::NotUnicode(_)) => {
            Err(usage("UCL_DEFAULT_FORMAT must be valid UTF-8".to_string()))
        }
    }
}

fn write_output(path: Option<&Path>, body: String) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}
