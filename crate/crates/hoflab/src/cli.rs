//! Command-line interface: `gen`, `verify`, `scatter`, `oeis-diff`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hoflab_core::oeis::{diff, DiffError, OffsetMap};
use hoflab_core::sequences::{BeattyPair, SequenceId, SequenceName};
use hoflab_core::verify::{all_passed, CheckKind, RunConfig};

use crate::fetch::{BFileStore, Mode};
use crate::{parallel, report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hoflab",
    version,
    about = "Slow Beatty, Wythoff and Hofstadter sequences, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print terms of a sequence.
    Gen(GenArgs),
    /// Run the identity checks.
    Verify(VerifyArgs),
    /// Emit (n, W(n)) points with the two predicted lines as CSV.
    Scatter(ScatterArgs),
    /// Compare a sequence against an OEIS b-file.
    OeisDiff(DiffArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct SequenceArgs {
    /// Sequence name, e.g. G, L, U, W, Wbar, f, z, m, a, b, Hk, H, R, W_pell, V.
    sequence: String,
    /// Order of the Hk family.
    #[arg(long)]
    k: Option<u32>,
}

impl SequenceArgs {
    fn id(&self) -> Result<SequenceId, String> {
        let name: SequenceName = self.sequence.parse().map_err(|e| format!("{e}"))?;
        SequenceId::new(name, self.k).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    seq: SequenceArgs,
    /// First index (default: the sequence's first index).
    #[arg(long)]
    from: Option<u64>,
    /// Last index.
    #[arg(long, default_value_t = 18)]
    to: u64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Upper index bound for the range checks.
    #[arg(long, default_value_t = RunConfig::default().max_n)]
    to: u64,
    /// Run only these checks (repeatable or comma-separated).
    #[arg(long, value_delimiter = ',', value_parser = parse_check)]
    check: Vec<CheckKind>,
    /// Largest k in the Fibonacci lemma and the exception laws.
    #[arg(long, default_value_t = RunConfig::default().fib_k)]
    fib_k: u32,
    /// Largest order in the Hk family check.
    #[arg(long, default_value_t = RunConfig::default().cr_k_max)]
    k_max: u32,
    /// Largest morphism level in the symbol-count check.
    #[arg(long, default_value_t = RunConfig::default().morphism_max)]
    morphism_max: u32,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug, Args)]
struct ScatterArgs {
    #[arg(long, default_value_t = 68)]
    to: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DiffArgs {
    #[command(flatten)]
    seq: SequenceArgs,
    /// A-number (default: the catalog entry for the sequence).
    #[arg(long)]
    id: Option<String>,
    /// Computed index n is compared with b-file index n + shift.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    shift: i64,
    /// Number of terms to compare (default: the whole overlap).
    #[arg(long)]
    limit: Option<u64>,
    /// Use fixtures and cache only (the default).
    #[arg(long, conflicts_with = "online")]
    offline: bool,
    /// Download the b-file when it is not available locally.
    #[arg(long)]
    online: bool,
    /// Directory holding bNNNNNN.txt fixtures.
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = CheckKind::ALL.iter().map(|c| c.as_str()).collect();
        format!("unknown check {s:?}; expected one of {}", names.join(", "))
    })
}

fn open_out<'a>(
    path: &Option<PathBuf>,
    stdout: &'a mut dyn Write,
) -> io::Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(stdout)),
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout),
        Command::Scatter(args) => cmd_scatter(args, stdout),
        Command::OeisDiff(args) => cmd_oeis_diff(args, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(stderr, "hoflab: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: message.into(),
    }
}

fn io_failure(e: io::Error) -> Failure {
    failure(e.to_string())
}

fn cmd_gen(args: GenArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let id = args.seq.id().map_err(usage)?;
    let from = args.from.unwrap_or(id.first_index());
    if from > args.to {
        return Err(usage(format!("--from {from} exceeds --to {}", args.to)));
    }
    let mut generator = id.generator().map_err(|e| usage(e.to_string()))?;
    let values = generator
        .terms(from, args.to)
        .map_err(|e| usage(e.to_string()))?;
    let mut out = open_out(&args.out, stdout).map_err(io_failure)?;
    let write = |out: &mut dyn Write| -> io::Result<()> {
        match args.format {
            Format::Plain => values.iter().try_for_each(|v| writeln!(out, "{v}")),
            Format::Csv => {
                writeln!(out, "n,value")?;
                (from..)
                    .zip(&values)
                    .try_for_each(|(n, v)| writeln!(out, "{n},{v}"))
            }
            Format::Json => {
                let pairs: Vec<(u64, u64)> = (from..).zip(values.iter().copied()).collect();
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&pairs).expect("serializable")
                )
            }
        }?;
        out.flush()
    };
    write(&mut out).map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if args.format == Format::Csv {
        return Err(usage("verify supports --format plain or json"));
    }
    let config = RunConfig {
        max_n: args.to,
        fib_k: args.fib_k,
        cr_k_max: args.k_max,
        morphism_max: args.morphism_max,
        checks: (!args.check.is_empty()).then_some(args.check),
        inject_fault: args.inject_fault,
    };
    let reports = parallel::run_all(&config, args.jobs.unwrap_or_else(parallel::default_jobs));
    let text = match args.format {
        Format::Json => report::to_json(&reports),
        _ => report::to_text(&reports),
    };
    let mut out = open_out(&args.out, stdout).map_err(io_failure)?;
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(io_failure)?;
    Ok(if all_passed(&reports) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

/// Header plus rows `n, W(n), ⌊γn⌋, ⌊φn⌋ + 1` for `n = 1..=to`.
pub fn scatter_csv(to: u64) -> String {
    let pair = BeattyPair::golden();
    let mut csv = String::from("n,W,lower_line,upper_line\n");
    for n in 1..=to {
        csv.push_str(&format!(
            "{n},{},{},{}\n",
            pair.swap(n),
            pair.gamma_floor(n),
            pair.lower(n) + 1
        ));
    }
    csv
}

fn cmd_scatter(args: ScatterArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let mut out = open_out(&args.out, stdout).map_err(io_failure)?;
    out.write_all(scatter_csv(args.to).as_bytes())
        .and_then(|_| out.flush())
        .map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_oeis_diff(
    args: DiffArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let id = args.seq.id().map_err(usage)?;
    let a_number = match args.id.as_deref().or(id.oeis()) {
        Some(a) => a.to_string(),
        None => return Err(usage(format!("{id} has no catalog A-number; pass --id"))),
    };
    let mode = if args.online {
        Mode::Online
    } else {
        Mode::Offline
    };
    let mut store = BFileStore::from_env();
    if let Some(dir) = args.fixtures {
        store = BFileStore::new(
            Some(dir),
            store.cache_dir().to_path_buf(),
            Box::new(crate::fetch::HttpTransport::default()),
        );
    }
    let bfile = store
        .fetch(&a_number, mode)
        .map_err(|e| failure(e.to_string()))?;
    let outcome = match diff(id, &bfile, OffsetMap::new(args.shift), args.limit) {
        Ok(o) => o,
        Err(e @ DiffError::EmptyOverlap { .. }) => return Err(usage(e.to_string())),
        Err(e) => return Err(failure(e.to_string())),
    };
    if let Some(t) = outcome.truncated {
        let _ = writeln!(
            stderr,
            "hoflab: warning: requested {} terms, only {} overlap; diff truncated",
            t.requested, t.available
        );
    }
    writeln!(stdout, "{}", outcome.report).map_err(io_failure)?;
    Ok(if outcome.report.is_pass() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}
