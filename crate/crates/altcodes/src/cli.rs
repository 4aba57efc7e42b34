//! Command-line front end. The binary is a thin wrapper around
//! [`run`], which is also driven directly by the integration tests.
//!
//! Exit codes: 0 = ran to completion, 2 = input error, 3 = budget or
//! timeout exceeded. With `--exit-status`, a negative principal verdict
//! (not a code, not alt-induced, no decompositions, not alternative)
//! exits 1 instead of 0.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::alt::{self, DEFAULT_EVIDENCE_CAP};
use crate::bench;
use crate::check;
use crate::fic::{self, SearchBudget};
use crate::gen;
use crate::io as langio;
use crate::lang::FiniteLanguage;
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// JSON report schema version.
pub const SCHEMA_VERSION: u64 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "altcodes",
    about = "Decision toolkit for variable-length codes and their factorizations",
    version
)]
pub struct Cli {
    /// Emit a machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    pub json: bool,

    /// Map the principal verdict to the exit code (0 positive, 1 negative).
    #[arg(long, global = true)]
    pub exit_status: bool,

    /// Candidate budget for the decomposition search.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// Wall-clock timeout in seconds for the decomposition search.
    #[arg(long, global = true)]
    pub timeout: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Property checks on languages.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Decide whether a finite code is induced by an alternative pair.
    Decide { file: PathBuf },
    /// List every inducing pair (X, Y), or only the strong ones.
    Enumerate {
        file: PathBuf,
        /// Keep only strong alternative pairs.
        #[arg(long)]
        strong: bool,
    },
    /// Independent brute-force enumeration for cross-validation.
    Oracle { file: PathBuf },
    /// Generate an instance and print it in the language file format.
    Gen(GenArgs),
    /// Run the scaling benchmark over a parameter grid, writing CSV.
    Bench {
        /// Semicolon-separated cells `k=K,size=N,maxlen=L,reps=R`.
        #[arg(long = "param-grid")]
        param_grid: String,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Sardinas–Patterson verdict with the remainder trace and a witness.
    Code { file: PathBuf },
    /// Prefix/suffix/bifix classification and maximality.
    Class { file: PathBuf },
    /// Unambiguity, alternative and strong verdicts for a pair of files.
    Product { xfile: PathBuf, yfile: PathBuf },
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// prefix | maximal-prefix | alt-induced | random-code
    #[arg(long)]
    pub kind: String,
    /// Alphabet size (letters a, b, c, …).
    #[arg(long)]
    pub alphabet: usize,
    /// Number of words.
    #[arg(long)]
    pub size: usize,
    /// Maximum word length.
    #[arg(long)]
    pub maxlen: usize,
    /// RNG seed; the output is a pure function of the parameters.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Parses `argv` and runs the command, writing reports to `out` and
/// warnings/errors to `err`. Returns the process exit code.
pub fn run(argv: &[&str], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit code 0
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let budget = SearchBudget {
        max_candidates: cli.budget.unwrap_or(SearchBudget::default().max_candidates),
        timeout: cli.timeout.map(Duration::from_secs),
    };
    match dispatch(&cli, &budget, out, err) {
        Ok(positive) => {
            if cli.exit_status && !positive {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_INPUT_ERROR,
            }
        }
    }
}

fn load(path: &Path, err: &mut impl Write) -> Result<FiniteLanguage> {
    let parsed = langio::read_language_file(path)?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(parsed.language)
}

/// Loads a pair of files onto a common alphabet: declared alphabets must
/// agree; inferred ones are unioned.
fn load_pair(
    xpath: &Path,
    ypath: &Path,
    err: &mut impl Write,
) -> Result<(FiniteLanguage, FiniteLanguage)> {
    let x = load(xpath, err)?;
    let y = load(ypath, err)?;
    let common = x.alphabet().union(y.alphabet());
    Ok((x.with_alphabet(common.clone())?, y.with_alphabet(common)?))
}

/// Runs one command. `Ok(positive)` reports the principal verdict for
/// `--exit-status`.
fn dispatch(
    cli: &Cli,
    budget: &SearchBudget,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<bool> {
    match &cli.command {
        Command::Check(CheckCommand::Code { file }) => {
            let z = load(file, err)?;
            let trace = check::sardinas_patterson(&z)?;
            let witness = if trace.is_code() {
                None
            } else {
                Some(check::ambiguity_witness(&z)?)
            };
            if cli.json {
                let report = json!({
                    "schema": SCHEMA_VERSION,
                    "command": "check code",
                    "verdict": trace.verdict,
                    "halting_reason": trace.halting_reason,
                    "u_sets": trace.u_sets,
                    "witness": witness,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "verdict: {:?} ({:?})", trace.verdict, trace.halting_reason)?;
                for (i, u) in trace.u_sets.iter().enumerate() {
                    writeln!(out, "U{} = {u}", i + 1)?;
                }
                if let Some(w) = &witness {
                    writeln!(out, "witness: {} = ({}) = ({})", w.word, join(&w.factorization_a), join(&w.factorization_b))?;
                }
            }
            Ok(trace.is_code())
        }
        Command::Check(CheckCommand::Class { file }) => {
            let z = load(file, err)?;
            let report = check::classify(&z)?;
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "command": "check class",
                    "report": report,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                writeln!(out, "code: {}", report.is_code)?;
                writeln!(
                    out,
                    "prefix: {}  suffix: {}  bifix: {}",
                    report.is_prefix, report.is_suffix, report.is_bifix
                )?;
                writeln!(
                    out,
                    "maximal prefix: {}  maximal suffix: {}  maximal bifix: {}",
                    report.is_maximal_prefix, report.is_maximal_suffix, report.is_maximal_bifix
                )?;
                if let Some(w) = &report.witness {
                    writeln!(out, "witness: {} = ({}) = ({})", w.word, join(&w.factorization_a), join(&w.factorization_b))?;
                }
            }
            Ok(report.is_code)
        }
        Command::Check(CheckCommand::Product { xfile, yfile }) => {
            let (x, y) = load_pair(xfile, yfile, err)?;
            let product = alt::check_unambiguous(&x, &y)?;
            let alternative = alt::check_alternative(&x, &y)?;
            let strong = alt::check_strong(&x, &y)?;
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "command": "check product",
                    "product_verdict": {
                        "unambiguous": product.unambiguous,
                        "overlap_set": evidence_json(&product.overlap_set),
                        "cardinality_check": product.cardinality_check,
                    },
                    "alt_verdict": {
                        "is_alternative": alternative.is_alternative,
                        "product_code": alternative.product_code.verdict,
                    },
                    "strong_verdict": {
                        "is_strong": strong.is_strong,
                        "condition1_violations": evidence_json(&strong.condition1_violations),
                        "condition2_violations": evidence_json(&strong.condition2_violations),
                        "char_route": strong.char_route,
                    },
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                writeln!(out, "unambiguous: {} (|XY| = {}, |X|·|Y| = {})", product.unambiguous, product.cardinality_check.0, product.cardinality_check.1)?;
                if !product.unambiguous {
                    writeln!(out, "overlap: {}", evidence_text(&product.overlap_set))?;
                }
                writeln!(out, "alternative: {}", alternative.is_alternative)?;
                writeln!(out, "strong: {}", strong.is_strong)?;
                if !strong.condition1_violations.is_empty() {
                    writeln!(out, "X⁻¹(XY) ⊈ Y: {}", evidence_text(&strong.condition1_violations))?;
                }
                if !strong.condition2_violations.is_empty() {
                    writeln!(out, "(XY)Y⁻¹ ⊈ X: {}", evidence_text(&strong.condition2_violations))?;
                }
            }
            Ok(alternative.is_alternative)
        }
        Command::Decide { file } => {
            let z = load(file, err)?;
            let report = fic::decide_alt_induced(&z, budget)?;
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "command": "decide",
                    "verdict": report.verdict,
                    "route": report.route,
                    "decomposition": report.decomposition,
                    "stats": report.stats,
                    "trace": report.trace,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                writeln!(out, "verdict: {:?} (route {:?})", report.verdict, report.route)?;
                if let Some(d) = &report.decomposition {
                    writeln!(out, "decomposition: {d}")?;
                }
                writeln!(
                    out,
                    "candidates: u={} Y={} X={}",
                    report.stats.u_tried, report.stats.y_tried, report.stats.x_tried
                )?;
            }
            Ok(report.is_alt_induced())
        }
        Command::Enumerate { file, strong } => {
            let z = load(file, err)?;
            let list = if *strong {
                fic::enumerate_strong_decompositions(&z, budget)?
            } else {
                fic::enumerate_decompositions(&z, budget)?
            };
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "command": "enumerate",
                    "strong": strong,
                    "count": list.len(),
                    "decompositions": list,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                writeln!(out, "{} decomposition(s)", list.len())?;
                for d in &list {
                    writeln!(out, "{d}")?;
                }
            }
            Ok(!list.is_empty())
        }
        Command::Oracle { file } => {
            let z = load(file, err)?;
            let result = crate::oracle::brute_force_decompositions(&z, &Default::default())?;
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "command": "oracle",
                    "is_code": result.is_code,
                    "witness": result.witness,
                    "count": result.decompositions.len(),
                    "decompositions": result.decompositions,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                writeln!(out, "code: {}", result.is_code)?;
                writeln!(out, "{} decomposition(s)", result.decompositions.len())?;
                for d in &result.decompositions {
                    writeln!(out, "{d}")?;
                }
            }
            Ok(!result.decompositions.is_empty())
        }
        Command::Gen(args) => {
            let params = gen::GenParams {
                kind: args.kind.parse()?,
                alphabet_size: args.alphabet,
                size: args.size,
                maxlen: args.maxlen,
                seed: args.seed,
            };
            let instance = gen::gen_instance(&params)?;
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "command": "gen",
                    "alphabet": instance.language.alphabet(),
                    "language": instance.language,
                    "planted": instance.planted,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                if let Some(planted) = &instance.planted {
                    writeln!(out, "# planted: {planted}")?;
                }
                write!(out, "{}", langio::render_language(&instance.language))?;
            }
            Ok(true)
        }
        Command::Bench { param_grid, out: out_path } => {
            let cells = bench::parse_grid(param_grid)?;
            let file = std::fs::File::create(out_path)?;
            let records = bench::bench_fic(&cells, budget, file)?;
            if cli.json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "command": "bench",
                    "records": records,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                writeln!(out, "{} run(s) written to {}", records.len(), out_path.display())?;
            }
            Ok(true)
        }
    }
}

fn join(words: &[crate::lang::Word]) -> String {
    words
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(")(")
}

fn evidence_json(lang: &FiniteLanguage) -> Value {
    let (words, truncated) = alt::cap_evidence(lang, DEFAULT_EVIDENCE_CAP);
    json!({
        "size": lang.len(),
        "words": words,
        "truncated": truncated,
    })
}

fn evidence_text(lang: &FiniteLanguage) -> String {
    let (words, truncated) = alt::cap_evidence(lang, DEFAULT_EVIDENCE_CAP);
    let mut s = format!(
        "{{{}}}",
        words
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    if truncated {
        s.push_str(&format!(" (+{} more)", lang.len() - words.len()));
    }
    s
}
