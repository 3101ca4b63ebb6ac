use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::json;

use threehalves::config::Config;
use threehalves::fibs::{self, FibsError, Mode};
use threehalves::oeis::{self, Form, OeisError};
use threehalves::{divisibility, encode_integer, even_tree, BaseSpec, Numeral};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

/// Base 3/2 numerals and the sequences they generate.
#[derive(Parser)]
#[command(name = "threehalves", version)]
struct Cli {
    /// TOML file with default caps and bounds.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a nonnegative decimal integer in base 3/2.
    Encode { n: String },
    /// Exact value of a base 3/2 digit string.
    Decode { digits: String },
    /// Print the first terms of a registered sequence.
    Seq {
        name: String,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        form: Option<Form>,
        #[arg(long)]
        json: bool,
    },
    /// List registered sequences.
    List,
    /// Render the tree of even integers.
    Tree {
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Digit divisibility report for n.
    Divtest { n: String },
    /// Sorted and reverse-sorted fibs.
    Fibs {
        #[command(subcommand)]
        command: FibsCommand,
    },
    /// Compare a sequence with a local b-file.
    Verify {
        name: String,
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FibsCommand {
    /// Eventual behavior of one orbit, as JSON.
    Classify {
        #[arg(long)]
        mode: Mode,
        /// Two numerals separated by a comma.
        #[arg(long)]
        start: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Behavior counts over all canonical starts, as CSV.
    Sweep {
        #[arg(long)]
        mode: Mode,
        #[arg(long)]
        max_digits: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<OeisError> for Failure {
    fn from(e: OeisError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<FibsError> for Failure {
    fn from(e: FibsError) -> Self {
        match e {
            FibsError::NotCanonical { .. } | FibsError::InvalidProfile(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_decimal(s: &str) -> Result<BigUint, Failure> {
    s.parse()
        .map_err(|_| usage(format!("{s:?} is not a nonnegative decimal integer")))
}

fn parse_start(s: &str) -> Result<(Numeral, Numeral), Failure> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| usage("--start expects two numerals separated by a comma"))?;
    let x: Numeral = x.trim().parse().map_err(usage)?;
    let y: Numeral = y.trim().parse().map_err(usage)?;
    for w in [&x, &y] {
        w.decode_integer().map_err(usage)?;
    }
    Ok((x, y))
}

fn run(cli: Cli, out: &mut Vec<String>) -> Result<u8, Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(usage)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Encode { n } => {
            out.push(encode_integer(&parse_decimal(&n)?, BaseSpec::THREE_HALVES).to_string());
        }
        Command::Decode { digits } => {
            let n: Numeral = digits.parse().map_err(usage)?;
            out.push(n.decode().to_string());
        }
        Command::Seq {
            name,
            count,
            form,
            json,
        } => {
            let descriptor = oeis::lookup(&name)?;
            let form = match (form, &config.seq.form) {
                (Some(f), _) => f,
                (None, Some(f)) => f.parse().map_err(usage)?,
                (None, None) => descriptor.native_form,
            };
            let count = count.unwrap_or(config.seq.count);
            let terms = oeis::emit_sequence(&name, count, form)?;
            for (i, term) in terms.iter().enumerate() {
                if json {
                    let index = descriptor.offset + i as i64;
                    out.push(json!({ "index": index, "term": term }).to_string());
                } else {
                    out.push(term.clone());
                }
            }
        }
        Command::List => {
            for d in oeis::registry() {
                let aliases = d.aliases.join(",");
                out.push(format!(
                    "{}\t{}\t{}\t{}",
                    d.name, d.native_form, aliases, d.description
                ));
            }
        }
        Command::Tree { depth } => {
            let depth = depth.unwrap_or(config.tree.depth);
            if depth == 0 {
                return Err(usage("--depth must be at least 1"));
            }
            out.extend(
                even_tree::build_tree(depth)
                    .render()
                    .lines()
                    .map(String::from),
            );
        }
        Command::Divtest { n } => {
            let report = divisibility::report(&parse_decimal(&n)?).map_err(usage)?;
            out.push(serde_json::to_string(&report).expect("report serializes"));
            if !report.is_consistent() {
                return Err(Failure::Invariant(format!("digit tests disagree for {n}")));
            }
        }
        Command::Fibs { command } => match command {
            FibsCommand::Classify { mode, start, cap } => {
                let (x, y) = parse_start(&start)?;
                let cap = cap.or(config.fibs.cap);
                let behavior = fibs::classify_any(mode, &x, &y, cap)?;
                out.push(serde_json::to_string(&behavior).expect("behavior serializes"));
            }
            FibsCommand::Sweep {
                mode,
                max_digits,
                cap,
            } => {
                let max_digits = max_digits.unwrap_or(config.fibs.max_digits);
                let summary =
                    fibs::exhaustive_classification(mode, max_digits, cap.or(config.fibs.cap))?;
                out.extend(summary.to_csv().lines().map(String::from));
            }
        },
        Command::Verify { name, path, json } => {
            let report = oeis::verify_against_bfile(&name, &path)?;
            if json {
                out.push(serde_json::to_string(&report).expect("report serializes"));
            } else {
                match &report.mismatch {
                    None => out.push(format!("{}: {} rows match", report.name, report.matched)),
                    Some(m) => out.push(format!("{}: mismatch at index {}: b-file has {}, generated {} ({} rows matched before it)",
                        report.name, m.index, m.expected, m.found, report.matched)),
                }
            }
            if !report.is_ok() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Vec::new();
    let result = run(cli, &mut out);
    // a closed pipe downstream is not an error
    let mut stdout = std::io::stdout().lock();
    for line in &out {
        if writeln!(stdout, "{line}").is_err() {
            break;
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violated: {msg}");
            ExitCode::from(EXIT_INVARIANT)
        }
    }
}
