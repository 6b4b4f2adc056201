//! `motrec`: generate classical infinite words, apply the k-to-k
//! letter-power substitution, measure factor/window complexity, and verify
//! the closed-form complexity formulas against brute-force measurement.

use std::io::Read;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use motrec_core::formulas::{eval_general, eval_sturmian, BranchedValue, FormulaError};
use motrec_core::{
    check_modulo_recurrence, compare, stabilize, stabilize_word, ComplexityProfile, Engine,
    FiniteWord, MrVerdict, Pipeline, SourceComplexity, SubstitutionSpec, WordSource,
    DEFAULT_PREFIX_CAP,
};

const PREFIX_CAP_ENV: &str = "MOTREC_PREFIX_CAP";

#[derive(Parser)]
#[command(name = "motrec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Naive,
    Automaton,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Naive => Engine::Naive,
            EngineArg::Automaton => Engine::Automaton,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    /// Closed form for a Sturmian source.
    Sturmian,
    /// Piecewise formula over the source's own complexity function.
    General,
}

#[derive(Args)]
struct TransformArgs {
    /// Substitution step: k symbols kept between substituted positions.
    #[arg(long)]
    k: usize,
    /// Power of the substituted letter.
    #[arg(long)]
    power: usize,
    /// The letter substituted in.
    #[arg(long)]
    letter: char,
    /// The letter belongs to the source alphabet.
    #[arg(long)]
    internal: bool,
}

#[derive(Args)]
struct OptionalTransformArgs {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    power: Option<usize>,
    #[arg(long)]
    letter: Option<char>,
    #[arg(long)]
    internal: bool,
}

impl OptionalTransformArgs {
    fn spec(&self) -> Result<Option<SubstitutionSpec>, String> {
        match (self.k, self.power, self.letter) {
            (None, None, None) => Ok(None),
            (Some(k), Some(power), Some(letter)) => {
                SubstitutionSpec::new(k, power, letter, self.internal)
                    .map(Some)
                    .map_err(|e| e.to_string())
            }
            _ => Err("--k, --power and --letter must be given together".to_string()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a prefix of a generated infinite word.
    Generate {
        /// Generator descriptor: fibonacci, sturmian:<d1,d2,...>,
        /// champernowne, periodic:<pattern>, morphic:<a=ab;b=a;seed=a>.
        /// Finite sturmian directives repeat their last entry forever.
        #[arg(long)]
        source: String,
        #[arg(long)]
        length: usize,
    },
    /// Apply the k-to-k letter-power substitution to a word.
    Transform {
        #[command(flatten)]
        transform: TransformArgs,
        /// Source generator; when omitted, a glyph string is read from stdin.
        #[arg(long)]
        source: Option<String>,
        /// Source prefix length (required with --source).
        #[arg(long)]
        length: Option<usize>,
    },
    /// Measure factor, first-difference and window complexity.
    Complexity {
        #[arg(long)]
        source: String,
        #[command(flatten)]
        transform: OptionalTransformArgs,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value = "auto")]
        engine: EngineArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        output: Option<String>,
    },
    /// Bounded modulo-recurrence check.
    CheckMr {
        #[arg(long)]
        source: String,
        #[command(flatten)]
        transform: OptionalTransformArgs,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long = "mod-max")]
        mod_max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<String>,
    },
    /// Compare a closed-form complexity formula against brute force.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        source: String,
        #[command(flatten)]
        transform: TransformArgs,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value = "auto")]
        engine: EngineArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<String>,
    },
}

fn prefix_cap() -> Result<usize, String> {
    match std::env::var(PREFIX_CAP_ENV) {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| format!("{PREFIX_CAP_ENV} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_PREFIX_CAP),
    }
}

fn emit(report: &str, output: Option<&str>) -> Result<(), String> {
    match output {
        None => {
            print!("{report}");
            Ok(())
        }
        Some(path) => std::fs::write(path, report).map_err(|e| format!("cannot write {path}: {e}")),
    }
}

#[derive(Serialize)]
struct ComplexityRow {
    n: usize,
    #[serde(rename = "P")]
    p: u64,
    #[serde(rename = "S")]
    s: i64,
    #[serde(rename = "Pf")]
    pf: u64,
}

#[derive(Serialize)]
struct ComplexityReport {
    source: String,
    prefix_len: usize,
    stable: bool,
    rows: Vec<ComplexityRow>,
}

#[derive(Serialize)]
struct MrRow {
    n: usize,
    factor: String,
    modulus: usize,
    verdict: &'static str,
    witness: Option<usize>,
}

#[derive(Serialize)]
struct VerifyRow {
    n: usize,
    branch: String,
    closed: u64,
    empirical: u64,
    #[serde(rename = "match")]
    matched: bool,
}

fn stabilized(
    source: &str,
    spec: Option<SubstitutionSpec>,
    n_max: usize,
    engine: Engine,
) -> Result<(FiniteWord, ComplexityProfile), String> {
    let source = WordSource::parse(source).map_err(|e| e.to_string())?;
    let pipeline = match spec {
        None => Pipeline::plain(source),
        Some(spec) => Pipeline::transformed(source, spec),
    };
    let (word, profile) =
        stabilize_word(&pipeline, n_max, engine, prefix_cap()?).map_err(|e| e.to_string())?;
    eprintln!(
        "stabilized: prefix_len={} stable={}",
        profile.prefix_len, profile.stable
    );
    Ok((word, profile))
}

/// The source complexity backend used by `verify --theorem general`.
/// Sturmian-family and Champernowne sources get exact analytic backends;
/// anything else is measured and stabilized.
fn source_complexity(
    source: &str,
    n_max: usize,
    engine: Engine,
) -> Result<SourceComplexity, String> {
    let parsed = WordSource::parse(source).map_err(|e| e.to_string())?;
    match parsed {
        WordSource::Fibonacci | WordSource::Sturmian(_) => Ok(SourceComplexity::Sturmian),
        WordSource::Champernowne => Ok(SourceComplexity::FullComplexity { alphabet_size: 2 }),
        _ => {
            let pipeline = Pipeline::plain(parsed);
            let profile = stabilize(&pipeline, n_max + 1, engine, prefix_cap()?)
                .map_err(|e| e.to_string())?;
            SourceComplexity::from_profile(&profile, source).map_err(|e| e.to_string())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate { source, length } => {
            let src = WordSource::parse(&source).map_err(|e| e.to_string())?;
            println!("{}", src.prefix(length));
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform { transform, source, length } => {
            let spec =
                SubstitutionSpec::new(transform.k, transform.power, transform.letter, transform.internal)
                    .map_err(|e| e.to_string())?;
            let word = match (source, length) {
                (Some(desc), Some(len)) => WordSource::parse(&desc).map_err(|e| e.to_string())?.prefix(len),
                (None, None) => {
                    let mut text = String::new();
                    std::io::stdin()
                        .read_to_string(&mut text)
                        .map_err(|e| e.to_string())?;
                    FiniteWord::parse(text.trim_end_matches('\n')).map_err(|e| e.to_string())?
                }
                _ => return Err("--source and --length must be given together".to_string()),
            };
            let v = motrec_core::substitute(&word, &spec).map_err(|e| e.to_string())?;
            println!("{v}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Complexity { source, transform, n_max, engine, format, output } => {
            let spec = transform.spec()?;
            // Measure one length beyond n_max so S(n) is defined on every row.
            let (_, profile) = stabilized(&source, spec, n_max + 1, engine.into())?;
            let rows: Vec<ComplexityRow> = (1..=n_max)
                .map(|n| ComplexityRow { n, p: profile.p(n), s: profile.s(n), pf: profile.pf(n) })
                .collect();
            let report = match format {
                Format::Csv => {
                    let mut text = String::from("n,P,S,Pf\n");
                    for r in &rows {
                        text.push_str(&format!("{},{},{},{}\n", r.n, r.p, r.s, r.pf));
                    }
                    text
                }
                Format::Json => {
                    let full = ComplexityReport {
                        source,
                        prefix_len: profile.prefix_len,
                        stable: profile.stable,
                        rows,
                    };
                    serde_json::to_string_pretty(&full).unwrap() + "\n"
                }
            };
            emit(&report, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckMr { source, transform, n_max, mod_max, format, output } => {
            let spec = transform.spec()?;
            let (word, _profile) = stabilized(&source, spec, n_max, Engine::Auto)?;
            let mr = check_modulo_recurrence(&word, n_max, mod_max).map_err(|e| e.to_string())?;
            let rows: Vec<MrRow> = mr
                .entries
                .iter()
                .map(|e| MrRow {
                    n: e.n,
                    factor: e.factor.clone(),
                    modulus: e.modulus,
                    verdict: match e.verdict {
                        MrVerdict::Pass => "pass",
                        MrVerdict::Fail => "fail",
                        MrVerdict::Inconclusive => "inconclusive",
                    },
                    witness: e.witness,
                })
                .collect();
            let report = match format {
                Format::Csv => {
                    let mut text = String::from("n,factor,modulus,verdict,witness\n");
                    for r in &rows {
                        let w = r.witness.map(|w| w.to_string()).unwrap_or_default();
                        text.push_str(&format!(
                            "{},{},{},{},{}\n",
                            r.n, r.factor, r.modulus, r.verdict, w
                        ));
                    }
                    text
                }
                Format::Json => serde_json::to_string_pretty(&rows).unwrap() + "\n",
            };
            emit(&report, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { theorem, source, transform, n_max, engine, format, output } => {
            let spec =
                SubstitutionSpec::new(transform.k, transform.power, transform.letter, transform.internal)
                    .map_err(|e| e.to_string())?;
            let (k, l) = (spec.k, spec.power);
            let (_, v_profile) = stabilized(&source, Some(spec), n_max, engine.into())?;
            let closed: Box<dyn Fn(usize) -> Result<BranchedValue, FormulaError>> = match theorem {
                Theorem::Sturmian => Box::new(move |n| eval_sturmian(n, k, l)),
                Theorem::General => {
                    let src = source_complexity(&source, n_max, engine.into())?;
                    Box::new(move |n| eval_general(n, k, l, &src))
                }
            };
            let range: RangeInclusive<usize> = 1..=n_max;
            let rows = compare(range, closed, &v_profile).map_err(|e| e.to_string())?;
            let rows: Vec<VerifyRow> = rows
                .into_iter()
                .map(|r| VerifyRow {
                    n: r.n,
                    branch: r.branch.to_string(),
                    closed: r.closed,
                    empirical: r.empirical,
                    matched: r.matched,
                })
                .collect();
            let all_match = rows.iter().all(|r| r.matched);
            let report = match format {
                Format::Csv => {
                    let mut text = String::from("n,branch,closed,empirical,match\n");
                    for r in &rows {
                        text.push_str(&format!(
                            "{},{},{},{},{}\n",
                            r.n, r.branch, r.closed, r.empirical, r.matched
                        ));
                    }
                    text
                }
                Format::Json => serde_json::to_string_pretty(&rows).unwrap() + "\n",
            };
            emit(&report, output.as_deref())?;
            if all_match {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            let _ = err.print();
            return ExitCode::FAILURE;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
