//! Command-line front end for the exact branching engine.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 on
//! success, 1 when a verification sweep reports failures, 2 on flag or
//! domain errors.

mod json;
mod table;

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use opqbranch_core::{
    compact_consistency, discrete_spectrum, multiplicity, multiplicity_with_o1,
    packet_multiplicity, verify_versions, BranchError, BranchingReport, GridSpec,
    HalfInt, OneChar, Rep, Sign, Signature, DEFAULT_MAX_ENTRIES,
};

#[derive(Parser)]
#[command(
    name = "opqbranch",
    version,
    about = "Exact branching laws for the orthogonal families on signatures (p, q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect single representations
    #[command(subcommand)]
    Rep(RepCommand),
    /// Branching multiplicities and discrete spectra
    #[command(subcommand)]
    Branch(BranchCommand),
    /// Packet-level branching
    #[command(subcommand)]
    Packet(PacketCommand),
    /// Exhaustive cross-check sweeps
    #[command(subcommand)]
    Sweep(SweepCommand),
    /// Independent compact-limit checks
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum RepCommand {
    /// Validate a representation and print its invariants
    Info(RepInfoArgs),
}

#[derive(Subcommand)]
enum BranchCommand {
    /// Multiplicity of one subgroup representation in a restriction
    Mult(BranchMultArgs),
    /// List the discrete spectrum of a restriction
    Spectrum(BranchSpectrumArgs),
}

#[derive(Subcommand)]
enum PacketCommand {
    /// Multiplicity of a subgroup parameter against a full packet
    Verify(PacketVerifyArgs),
}

#[derive(Subcommand)]
enum SweepCommand {
    /// Check multiplicity against interlacing and packet counts on a grid
    Versions(SweepVersionsArgs),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Compare the engine with the classical compact branching rule
    Compact(OracleCompactArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Args)]
struct OutputArg {
    /// Output format; only json is byte-stable
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Args)]
struct RepInfoArgs {
    /// First signature entry
    #[arg(long)]
    p: u32,
    /// Second signature entry
    #[arg(long)]
    q: u32,
    /// Family sign, "+" or "-"
    #[arg(long, allow_hyphen_values = true)]
    sign: Sign,
    /// Spectral parameter, "a" or "t/2"
    #[arg(long, allow_hyphen_values = true)]
    lambda: HalfInt,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Args)]
struct BranchMultArgs {
    /// First signature entry of the big group
    #[arg(long)]
    p: u32,
    /// Second signature entry of the big group
    #[arg(long)]
    q: u32,
    /// Family sign of the big representation
    #[arg(long, allow_hyphen_values = true)]
    big_sign: Sign,
    /// Parameter of the big representation
    #[arg(long, allow_hyphen_values = true)]
    lambda: HalfInt,
    /// Family sign of the subgroup representation
    #[arg(long, allow_hyphen_values = true)]
    small_sign: Sign,
    /// Parameter of the subgroup representation
    #[arg(long, allow_hyphen_values = true)]
    mu: HalfInt,
    /// Restrict to one rank-one character, "trivial" or "sgn"
    #[arg(long)]
    ochar: Option<OneChar>,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Args)]
struct BranchSpectrumArgs {
    /// First signature entry
    #[arg(long)]
    p: u32,
    /// Second signature entry
    #[arg(long)]
    q: u32,
    /// Family sign, "+" or "-"
    #[arg(long, allow_hyphen_values = true)]
    sign: Sign,
    /// Spectral parameter
    #[arg(long, allow_hyphen_values = true)]
    lambda: HalfInt,
    /// Prefix length for the infinite spectra of the "-" family
    #[arg(long, default_value_t = DEFAULT_MAX_ENTRIES)]
    max_entries: u32,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Args)]
struct PacketVerifyArgs {
    /// First signature entry (at least 3)
    #[arg(long)]
    p: u32,
    /// Second signature entry (at least 2)
    #[arg(long)]
    q: u32,
    /// Packet parameter on (p, q)
    #[arg(long, allow_hyphen_values = true)]
    lambda: HalfInt,
    /// Packet parameter on (p-1, q)
    #[arg(long, allow_hyphen_values = true)]
    mu: HalfInt,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Args)]
struct SweepVersionsArgs {
    /// Inclusive range of p, "A..B" with A >= 3
    #[arg(long)]
    p_range: InclusiveRange,
    /// Inclusive range of q, "C..D" with C >= 2
    #[arg(long)]
    q_range: InclusiveRange,
    /// Largest big-group parameter swept
    #[arg(long, allow_hyphen_values = true)]
    lambda_max: HalfInt,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Args)]
struct OracleCompactArgs {
    /// Largest rank parameter checked, between 3 and 10
    #[arg(long)]
    p_max: u32,
    /// Largest one-row weight checked for each rank
    #[arg(long)]
    ell_max: u32,
    #[command(flatten)]
    out: OutputArg,
}

/// Inclusive "A..B" range.
#[derive(Clone, Copy, Debug)]
struct InclusiveRange {
    lo: u32,
    hi: u32,
}

#[derive(Debug)]
struct ParseRangeError;

impl fmt::Display for ParseRangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected an inclusive range \"A..B\" with A <= B")
    }
}

impl std::error::Error for ParseRangeError {}

impl FromStr for InclusiveRange {
    type Err = ParseRangeError;

    fn from_str(s: &str) -> Result<Self, ParseRangeError> {
        let (lo, hi) = s.split_once("..").ok_or(ParseRangeError)?;
        let lo: u32 = lo.parse().map_err(|_| ParseRangeError)?;
        let hi: u32 = hi.parse().map_err(|_| ParseRangeError)?;
        if lo > hi {
            return Err(ParseRangeError);
        }
        Ok(InclusiveRange { lo, hi })
    }
}

/// A flag whose value survived parsing but fails a domain rule.
struct FlagError {
    flag: &'static str,
    message: String,
}

impl fmt::Display for FlagError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid value for {}: {}", self.flag, self.message)
    }
}

fn flag_err(flag: &'static str, e: impl fmt::Display) -> FlagError {
    FlagError {
        flag,
        message: e.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout; when the consumer has closed the stream (head,
/// broken pipe) exits quietly with the conventional SIGPIPE status
/// instead of panicking.
pub(crate) fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let done = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if done.is_err() {
        std::process::exit(141);
    }
}

fn run(command: Command) -> Result<ExitCode, FlagError> {
    match command {
        Command::Rep(RepCommand::Info(args)) => rep_info(args),
        Command::Branch(BranchCommand::Mult(args)) => branch_mult(args),
        Command::Branch(BranchCommand::Spectrum(args)) => branch_spectrum(args),
        Command::Packet(PacketCommand::Verify(args)) => packet_verify(args),
        Command::Sweep(SweepCommand::Versions(args)) => sweep_versions(args),
        Command::Oracle(OracleCommand::Compact(args)) => oracle_compact(args),
    }
}

fn build_sig(p: u32, q: u32) -> Result<Signature, FlagError> {
    Signature::new(p, q).map_err(|e| flag_err("--p", e))
}

fn build_rep(
    sig: Signature,
    sign: Sign,
    value: HalfInt,
    flag: &'static str,
) -> Result<Rep, FlagError> {
    Rep::new(sig, sign, value).map_err(|e| flag_err(flag, e))
}

fn report_exit(report: &BranchingReport) -> u8 {
    if report.passed() {
        0
    } else {
        1
    }
}

fn rep_info(args: RepInfoArgs) -> Result<ExitCode, FlagError> {
    let sig = build_sig(args.p, args.q)?;
    let rep = build_rep(sig, args.sign, args.lambda, "--lambda")?;
    match args.out.output {
        OutputFormat::Json => json::print_json(&json::RepJson::from(&rep)),
        OutputFormat::Table => {
            let mut rows: Vec<(&str, String)> = vec![
                ("signature", rep.sig().to_string()),
                ("sign", rep.sign().to_string()),
                ("lambda", rep.lambda().to_string()),
                ("zero", rep.is_zero().to_string()),
                ("regular", rep.is_regular().to_string()),
            ];
            if let Ok(chi) = rep.inf_char() {
                rows.push(("inf char", chi.to_string()));
            }
            if let Ok(k) = rep.minimal_k_type() {
                rows.push(("min K-type", format!("(a={}, b={})", k.a, k.b)));
            }
            emit(&table::key_values(&rows));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn branch_mult(args: BranchMultArgs) -> Result<ExitCode, FlagError> {
    let sig = build_sig(args.p, args.q)?;
    let sub = sig.subgroup().ok_or_else(|| {
        flag_err("--p", BranchError::SubgroupUndefined { sig })
    })?;
    let big = build_rep(sig, args.big_sign, args.lambda, "--lambda")?;
    let small = build_rep(sub, args.small_sign, args.mu, "--mu")?;
    let m = match args.ochar {
        Some(chi) => multiplicity_with_o1(&big, &small, chi),
        None => multiplicity(&big, &small),
    }
    .expect("small was built on the subgroup signature");
    match args.out.output {
        OutputFormat::Json => {
            json::print_json(&json::MultiplicityJson { multiplicity: m })
        }
        OutputFormat::Table => {
            emit(&table::key_values(&[("multiplicity", m.to_string())]));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn branch_spectrum(args: BranchSpectrumArgs) -> Result<ExitCode, FlagError> {
    let sig = build_sig(args.p, args.q)?;
    let big = build_rep(sig, args.sign, args.lambda, "--lambda")?;
    let spectrum =
        discrete_spectrum(&big, args.max_entries).map_err(|e| flag_err("--p", e))?;
    match args.out.output {
        OutputFormat::Json => json::print_json(&json::SpectrumJson::from(&spectrum)),
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = spectrum
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.n.to_string(),
                        e.rep.sign().to_string(),
                        e.rep.lambda().to_string(),
                        e.ochar.to_string(),
                    ]
                })
                .collect();
            emit(&table::columns(&["n", "sign", "mu", "ochar"], &rows));
            emit(&table::key_values(&[
                ("truncated", spectrum.truncated.to_string()),
                ("omitted zero reps", spectrum.omitted_zero_reps.to_string()),
            ]));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn packet_verify(args: PacketVerifyArgs) -> Result<ExitCode, FlagError> {
    let sig = build_sig(args.p, args.q)?;
    if !sig.in_theorem_range() {
        return Err(flag_err("--p/--q", BranchError::TheoremRange { sig }));
    }
    let sub = sig.subgroup().expect("p >= 3 has a subgroup");
    build_rep(sig, Sign::Plus, args.lambda, "--lambda")?;
    build_rep(sub, Sign::Plus, args.mu, "--mu")?;
    let branching = packet_multiplicity(sig, args.lambda, args.mu)
        .expect("parameters were validated");
    match args.out.output {
        OutputFormat::Json => json::print_json(&json::PacketJson::from(&branching)),
        OutputFormat::Table => {
            let mut rows: Vec<(&str, String)> = vec![
                ("multiplicity", branching.total().to_string()),
                (
                    "by pair (++ +- -+ --)",
                    format!(
                        "{} {} {} {}",
                        branching.by_pair[0],
                        branching.by_pair[1],
                        branching.by_pair[2],
                        branching.by_pair[3]
                    ),
                ),
            ];
            if let Some(w) = branching.witness() {
                rows.push(("witness", format!("({},{})", w.big_member, w.small_member)));
            }
            emit(&table::key_values(&rows));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &BranchingReport, output: OutputFormat) {
    match output {
        OutputFormat::Json => json::print_json(&json::ReportJson::from(report)),
        OutputFormat::Table => {
            emit(&table::key_values(&[
                (
                    "p range",
                    format!("{}..{}", report.grid.p_min, report.grid.p_max),
                ),
                (
                    "q range",
                    format!("{}..{}", report.grid.q_min, report.grid.q_max),
                ),
                ("lambda max", report.grid.lambda_max.to_string()),
                ("checks", report.checks_run.to_string()),
                ("failures", report.failures.len().to_string()),
            ]));
            if !report.failures.is_empty() {
                let rows: Vec<Vec<String>> = report
                    .failures
                    .iter()
                    .map(|f| {
                        vec![
                            f.check.clone(),
                            f.params.clone(),
                            f.expected.clone(),
                            f.got.clone(),
                        ]
                    })
                    .collect();
                emit(&table::columns(&["check", "params", "expected", "got"], &rows));
            }
        }
    }
}

fn sweep_versions(args: SweepVersionsArgs) -> Result<ExitCode, FlagError> {
    let pr = args.p_range;
    let qr = args.q_range;
    if pr.lo < 3 {
        return Err(FlagError {
            flag: "--p-range",
            message: format!("the sweep needs p >= 3, got {}", pr.lo),
        });
    }
    if qr.lo < 2 {
        return Err(FlagError {
            flag: "--q-range",
            message: format!("the sweep needs q >= 2, got {}", qr.lo),
        });
    }
    let mut merged = BranchingReport::new(GridSpec {
        p_min: pr.lo,
        p_max: pr.hi,
        q_min: qr.lo,
        q_max: qr.hi,
        lambda_max: args.lambda_max,
    });
    for p in pr.lo..=pr.hi {
        for q in qr.lo..=qr.hi {
            let sig = Signature::new(p, q).expect("p >= 3");
            let report =
                verify_versions(sig, args.lambda_max).expect("window was checked");
            merged.absorb(report);
        }
    }
    print_report(&merged, args.out.output);
    Ok(ExitCode::from(report_exit(&merged)))
}

fn oracle_compact(args: OracleCompactArgs) -> Result<ExitCode, FlagError> {
    if !(3..=10).contains(&args.p_max) {
        return Err(FlagError {
            flag: "--p-max",
            message: format!("supported rank parameters are 3..=10, got {}", args.p_max),
        });
    }
    let overall_max = HalfInt::from_twice(2 * args.ell_max as i64 + args.p_max as i64);
    let mut merged = BranchingReport::new(GridSpec {
        p_min: 3,
        p_max: args.p_max,
        q_min: 0,
        q_max: 0,
        lambda_max: overall_max,
    });
    for p in 3..=args.p_max {
        let lambda_max = HalfInt::from_twice(2 * args.ell_max as i64 + p as i64);
        let report = compact_consistency(p, lambda_max).expect("p range was checked");
        merged.absorb(report);
    }
    print_report(&merged, args.out.output);
    Ok(ExitCode::from(report_exit(&merged)))
}
