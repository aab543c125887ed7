//! Command-line front end for `lunefree`.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lunefree::codec::{self, CodecError, Record};
use lunefree::invariants::{weak13_invariant, Invariant};
use lunefree::moves::{self, MoveKind};
use lunefree::reduction::{self, ReductionMode};
use lunefree::{positive_resolution, PlanarCurve};

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const INPUT_ERROR: u8 = 2;
const INTERNAL_ERROR: u8 = 3;

/// Knot projections: (1,2) homotopy normal forms, positive resolution and
/// weak (1,3) triviality.
///
/// INPUT is a file path or an inline signed Gauss code such as
/// "a+ b- c+ a+ b- c+" ("" is the circle). Files hold either one code or a
/// corpus of `name: code` lines.
#[derive(Parser)]
#[command(name = "lunefree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModeArg {
    /// which moves: 1, 2 or 12
    #[arg(long, default_value = "12")]
    mode: ReductionMode,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a code describes a curve on the sphere
    Validate { input: String },
    /// Print the canonical code (identical for isotopic curves)
    Canon { input: String },
    /// Delete 1-gons and/or 2-gons until none remain
    Reduce {
        input: String,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Exit 0 if the two curves are equivalent, 1 otherwise
    Equiv {
        a: String,
        b: String,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Print the positive resolution as an extended Gauss code
    Resolve { input: String },
    /// Evaluate invariants of the positive resolution
    Invariants {
        input: String,
        /// comma-separated: tricolor, fox3, fox5, fox7, fox11, fox13, weak13trivial
        #[arg(long, value_delimiter = ',', default_value = "tricolor,fox3,fox5,fox7")]
        inv: Vec<Invariant>,
    },
    /// Decide triviality under 1-moves and weak triangle moves
    Trivial { input: String },
    /// List the curves one move away, by canonical code
    Neighbors {
        input: String,
        /// comma-separated: 1a, 1b, 2a, 2b, h3w, h3s
        #[arg(long, value_delimiter = ',', default_value = "1b,2b")]
        kinds: Vec<MoveKind>,
        #[arg(long)]
        max_crossings: Option<usize>,
    },
    /// Corpus files
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Check every expected value; exit 1 on any mismatch
    Run { file: String },
    /// Print the corpus with canonical labels
    Fmt { file: String },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<CodecError> for Failure {
    fn from(e: CodecError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

/// Named curves read from a file or an inline code.
fn load(input: &str) -> Result<Vec<(String, PlanarCurve)>, Failure> {
    let path = Path::new(input);
    if !input.is_empty() && path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        let is_corpus = text.lines().any(|l| l.split('#').next().unwrap().contains(':'));
        if is_corpus {
            let entries = codec::parse_corpus(&text).map_err(|e| Failure::Input(format!("{input}:{e}")))?;
            return Ok(entries.iter().map(|e| (e.name.clone(), e.curve())).collect());
        }
        let body: String = text.lines().map(|l| l.split('#').next().unwrap()).collect::<Vec<_>>().join(" ");
        let code = codec::parse_code(&body, 1, 1).map_err(|e| Failure::Input(format!("{input}:{e}")))?;
        let name = path.file_stem().map_or("input".into(), |s| s.to_string_lossy().into_owned());
        return Ok(vec![(name, PlanarCurve::from_signed_gauss_code(&code).expect("validated"))]);
    }
    let code = codec::parse_code(input, 1, 1).map_err(|e| Failure::Input(format!("input:{e}")))?;
    Ok(vec![("input".into(), PlanarCurve::from_signed_gauss_code(&code).expect("validated"))])
}

fn load_one(input: &str) -> Result<PlanarCurve, Failure> {
    let mut curves = load(input)?;
    if curves.len() != 1 {
        return Err(Failure::Input(format!("{input}: expected exactly one curve, found {}", curves.len())));
    }
    Ok(curves.pop().unwrap().1)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { input } => {
            for (name, c) in load(&input)? {
                println!("{name}\tcrossings\t{}", c.crossings());
            }
            Ok(OK)
        }
        Command::Canon { input } => {
            println!("{}", load_one(&input)?.canonical_code());
            Ok(OK)
        }
        Command::Reduce { input, mode } => {
            let c = load_one(&input)?;
            let trace = reduction::reduce(&c, mode.mode);
            for (i, s) in trace.steps.iter().enumerate() {
                println!("step\t{}\t{s}", i + 1);
            }
            println!("result\t{}", trace.result.canonical_code());
            Ok(OK)
        }
        Command::Equiv { a, b, mode } => {
            let (a, b) = (load_one(&a)?, load_one(&b)?);
            let eq = reduction::equivalent(&a, &b, mode.mode);
            println!("{eq}");
            Ok(if eq { OK } else { NEGATIVE })
        }
        Command::Resolve { input } => {
            let d = positive_resolution(&load_one(&input)?);
            if !d.is_positive() {
                return Err(Failure::Internal("positive resolution has a negative crossing".into()));
            }
            println!("{d}");
            Ok(OK)
        }
        Command::Invariants { input, inv } => {
            let mut records = Vec::new();
            for (name, c) in load(&input)? {
                for &i in &inv {
                    let v = weak13_invariant(&c, i);
                    records.push(Record { name: name.clone(), property: v.name, value: v.value.to_string() });
                }
            }
            print!("{}", codec::format_report(&records));
            Ok(OK)
        }
        Command::Trivial { input } => {
            println!("{}", lunefree::invariants::is_weak13_trivial(&load_one(&input)?));
            Ok(OK)
        }
        Command::Neighbors { input, kinds, max_crossings } => {
            let c = load_one(&input)?;
            for n in moves::neighbors(&c, &kinds, max_crossings.unwrap_or(usize::MAX)) {
                println!("{}", n.canonical_code());
            }
            Ok(OK)
        }
        Command::Corpus(CorpusCommand::Run { file }) => {
            let text = fs::read_to_string(&file).map_err(|e| Failure::Input(format!("{file}: {e}")))?;
            let entries = codec::parse_corpus(&text).map_err(|e| Failure::Input(format!("{file}:{e}")))?;
            let (records, mismatches) = codec::run_corpus(&entries);
            print!("{}", codec::format_report(&records));
            for m in &mismatches {
                eprintln!("{file}: {}: {} expected {} but got {}", m.name, m.property, m.expected, m.actual);
            }
            Ok(if mismatches.is_empty() { OK } else { NEGATIVE })
        }
        Command::Corpus(CorpusCommand::Fmt { file }) => {
            let text = fs::read_to_string(&file).map_err(|e| Failure::Input(format!("{file}: {e}")))?;
            let entries = codec::parse_corpus(&text).map_err(|e| Failure::Input(format!("{file}:{e}")))?;
            print!("{}", codec::serialize_corpus(&entries));
            Ok(OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { OK });
        }
    };
    let outcome = std::panic::catch_unwind(|| run(cli)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(Failure::Internal(msg))
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(INTERNAL_ERROR)
        }
    }
}
