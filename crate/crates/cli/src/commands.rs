use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypertournament::{
    all_losing_sequences_bruteforce, check_losing_scores, check_score_scores, dual_sequence,
    enumerate_valid_sequences, random_hypertournament, realize, transform_to_target,
    LosingScoreSequence, Seed, Strategy, DEFAULT_BUDGET,
};

use crate::format::{
    join, parse_hypertournament, render_hypertournament, FormatError, SequenceFile,
};

#[derive(Debug, Parser)]
#[command(
    name = "hypertournament",
    version,
    about = "Losing-score sequences of k-hypertournaments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a sequence is a losing-score (or score) sequence.
    Check(CheckArgs),
    /// Build a hypertournament with the given losing scores.
    Realize(RealizeArgs),
    /// Validate a hypertournament file and print its scores.
    Verify(VerifyArgs),
    /// List every valid losing-score sequence for (n, k).
    Enumerate(EnumerateArgs),
    /// Write a random hypertournament.
    Random(RandomArgs),
    /// Convert between losing-score and score sequences.
    Convert(ConvertArgs),
    /// Move a hypertournament to per-vertex target losing scores by arc exchanges.
    Transform(TransformArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Sequence file.
    #[arg(required_unless_present = "inline", conflicts_with = "inline")]
    pub file: Option<PathBuf>,
    /// Space-separated entries given on the command line; needs --k.
    #[arg(long, requires = "k", allow_hyphen_values = true)]
    pub inline: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Treat the input as a score sequence.
    #[arg(long)]
    pub scores: bool,
    /// Sort the input before checking.
    #[arg(long)]
    pub sort: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Assignment,
    Recursive,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Assignment => Strategy::Assignment,
            StrategyArg::Recursive => Strategy::Recursive,
        }
    }
}

#[derive(Debug, Args)]
pub struct RealizeArgs {
    pub file: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value = "assignment")]
    pub strategy: StrategyArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Sequence file the sorted losing scores must equal.
    #[arg(long)]
    pub expect: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Cross-check against exhaustive enumeration of loser assignments.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub count_only: bool,
    /// State budget for --oracle.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConvertTo {
    Scores,
    Losing,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "scores")]
    pub to: ConvertTo,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    pub file: PathBuf,
    /// Sequence file with one target losing score per vertex (any order).
    #[arg(long)]
    pub target: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Move log file; stdout when omitted.
    #[arg(long)]
    pub log: Option<PathBuf>,
}

/// A command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Valid,
    Invalid,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Valid => 0,
            Outcome::Invalid => 1,
        }
    }
}

/// Usage, parse, I/O and budget failures (exit code 2).
#[derive(Debug)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

type CmdResult = Result<Outcome, CliError>;

pub fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Check(a) => check(a),
        Command::Realize(a) => realize_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Random(a) => random(a),
        Command::Convert(a) => convert(a),
        Command::Transform(a) => transform(a),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn read_sequence(path: &Path) -> Result<SequenceFile, CliError> {
    SequenceFile::parse(&read(path)?).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn check(a: CheckArgs) -> CmdResult {
    let mut seq = match (&a.file, &a.inline) {
        (Some(path), _) => {
            let s = read_sequence(path)?;
            if let Some(k) = a.k.filter(|&k| k != s.k) {
                return Err(CliError(format!(
                    "--k {k} disagrees with k={} in the file",
                    s.k
                )));
            }
            s
        }
        (None, Some(text)) => {
            let entries = text
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| CliError(format!("not an integer: {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if entries.is_empty() {
                return Err(CliError("empty sequence".into()));
            }
            SequenceFile {
                k: a.k.expect("clap enforces --k with --inline"),
                entries,
            }
        }
        (None, None) => unreachable!("clap requires a file or --inline"),
    };
    if a.sort {
        seq.entries.sort_unstable();
    }
    let report = if a.scores {
        check_score_scores(&seq.entries, seq.k)
    } else {
        check_losing_scores(&seq.entries, seq.k)
    }
    .map_err(|e| CliError(e.to_string()))?;
    println!("{report}");
    Ok(if report.is_valid() {
        Outcome::Valid
    } else {
        Outcome::Invalid
    })
}

fn realize_cmd(a: RealizeArgs) -> CmdResult {
    let seq = read_sequence(&a.file)?;
    let report = check_losing_scores(&seq.entries, seq.k).map_err(|e| CliError(e.to_string()))?;
    if !report.is_valid() {
        println!("{report}");
        return Ok(Outcome::Invalid);
    }
    let scores = seq.unsigned().expect("valid sequences are non-negative");
    let seq = LosingScoreSequence::new(seq.k, scores).map_err(|e| CliError(e.to_string()))?;
    let h = realize(&seq, a.strategy.into()).map_err(|e| CliError(e.to_string()))?;
    write(&a.output, &render_hypertournament(&h))?;
    println!("wrote {} arcs to {}", h.arcs().len(), a.output.display());
    Ok(Outcome::Valid)
}

fn verify(a: VerifyArgs) -> CmdResult {
    let text = read(&a.file)?;
    let h = match parse_hypertournament(&text) {
        Ok(h) => h,
        Err(e @ FormatError::Structure(_)) => {
            println!("{e}");
            return Ok(Outcome::Invalid);
        }
        Err(e) => return Err(CliError(format!("{}: {e}", a.file.display()))),
    };
    let expected = a.expect.as_deref().map(read_sequence).transpose()?;

    let losing = h.losing_score_vector();
    let sorted = h.losing_score_sequence();
    println!("n={} k={} arcs={}", h.n(), h.k(), h.arcs().len());
    println!("losing: {}", join(losing.iter()));
    println!("losing sorted: {}", join(sorted.scores().iter()));
    println!("scores: {}", join(h.score_vector().iter()));

    let Some(expected) = expected else {
        println!("ok");
        return Ok(Outcome::Valid);
    };
    let matches = expected.k == h.k()
        && expected.entries.len() == h.n()
        && expected
            .entries
            .iter()
            .zip(sorted.scores())
            .all(|(&e, &s)| e == s as i64);
    if matches {
        println!("matches expected sequence");
        Ok(Outcome::Valid)
    } else {
        println!(
            "expectation mismatch: expected k={} [{}], found k={} [{}]",
            expected.k,
            join(expected.entries.iter()),
            h.k(),
            join(sorted.scores().iter())
        );
        Ok(Outcome::Invalid)
    }
}

fn enumerate(a: EnumerateArgs) -> CmdResult {
    let set = enumerate_valid_sequences(a.n, a.k).map_err(|e| CliError(e.to_string()))?;
    let brute = a
        .oracle
        .then(|| all_losing_sequences_bruteforce(a.n, a.k, a.budget))
        .transpose()
        .map_err(|e| CliError(e.to_string()))?;
    if a.count_only {
        println!("{}", set.len());
    } else {
        for s in set.iter() {
            println!("{}", join(s.iter()));
        }
    }
    let Some(brute) = brute else {
        return Ok(Outcome::Valid);
    };
    if brute == set {
        eprintln!("oracle agrees: {} sequences", set.len());
        return Ok(Outcome::Valid);
    }
    for s in brute.sequences.difference(&set.sequences) {
        eprintln!("only in oracle: {}", join(s.iter()));
    }
    for s in set.sequences.difference(&brute.sequences) {
        eprintln!("only in enumeration: {}", join(s.iter()));
    }
    Ok(Outcome::Invalid)
}

fn random(a: RandomArgs) -> CmdResult {
    let h = random_hypertournament(a.n, a.k, Seed(a.seed)).map_err(|e| CliError(e.to_string()))?;
    write(&a.output, &render_hypertournament(&h))?;
    println!("wrote {} arcs to {}", h.arcs().len(), a.output.display());
    Ok(Outcome::Valid)
}

fn convert(a: ConvertArgs) -> CmdResult {
    let seq = read_sequence(&a.file)?;
    let Some(entries) = seq.unsigned() else {
        println!("negative entry in input");
        return Ok(Outcome::Invalid);
    };
    if entries.windows(2).any(|w| w[0] > w[1]) {
        println!("input is not sorted");
        return Ok(Outcome::Invalid);
    }
    // the map is its own inverse; `--to` only names the direction
    let _ = a.to;
    let dual = match dual_sequence(&entries, seq.k) {
        Ok(d) => d,
        Err(e) => {
            println!("{e}");
            return Ok(Outcome::Invalid);
        }
    };
    let out = SequenceFile {
        k: seq.k,
        entries: dual.into_iter().map(|x| x as i64).collect(),
    };
    match &a.output {
        Some(path) => write(path, &out.render())?,
        None => print!("{}", out.render()),
    }
    Ok(Outcome::Valid)
}

fn transform(a: TransformArgs) -> CmdResult {
    let h = match parse_hypertournament(&read(&a.file)?) {
        Ok(h) => h,
        Err(e @ FormatError::Structure(_)) => {
            println!("{e}");
            return Ok(Outcome::Invalid);
        }
        Err(e) => return Err(CliError(format!("{}: {e}", a.file.display()))),
    };
    let target = read_sequence(&a.target)?;
    if target.k != h.k() {
        return Err(CliError(format!(
            "target k={} but hypertournament k={}",
            target.k,
            h.k()
        )));
    }
    let Some(entries) = target.unsigned() else {
        println!("negative entry in target");
        return Ok(Outcome::Invalid);
    };
    let t = match transform_to_target(&h, &entries) {
        Ok(t) => t,
        Err(e) => {
            println!("{e}");
            return Ok(Outcome::Invalid);
        }
    };
    write(&a.output, &render_hypertournament(&t.result))?;
    let log: String = t.log.iter().map(|m| format!("{m}\n")).collect();
    match &a.log {
        Some(path) => write(path, &log)?,
        None => print!("{log}"),
    }
    eprintln!("applied {} moves", t.log.len());
    Ok(Outcome::Valid)
}
