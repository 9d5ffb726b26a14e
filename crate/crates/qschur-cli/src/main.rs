//! `qschur` — build, apply, and verify the quantum Schur–Weyl transform.
//!
//! All machine output is JSON on stdout (or `--output`); diagnostics go to
//! stderr. Exit codes: 0 success, 1 verification failure, 2 usage or data
//! error.

use std::collections::HashMap;
use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qschur_core::insertion::{dual_rsk_word, q_insert, rsk_word};
use qschur_core::pieri::{insertion_amplitudes, pieri_matrix};
use qschur_core::schurweyl::{schur_apply, schur_transform_dense, Direction};
use qschur_core::tableaux::{Partition, SemiStandardTableau};
use qschur_core::QParam;

use qschur_cli::document::{self, q_tag, Format, MatrixDocument, Metadata, BASIS_ORDER};
use qschur_cli::verify::{self, Suite};

/// Quantum Schur–Weyl transform toolkit: insertion algorithms, Pieri and
/// Schur transforms, and an invariant verification harness.
#[derive(Parser)]
#[command(name = "qschur", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Mode {
    #[default]
    Matrix,
    Apply,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Dir {
    #[default]
    Forward,
    Inverse,
}

#[derive(Subcommand)]
enum Command {
    /// Row-insert a word; prints the insertion tableau P and recording
    /// tableau Q.
    Rsk {
        /// Comma-separated letters, e.g. "2,1,2".
        word: String,
        /// Column insertion (strict rows, weak columns) instead.
        #[arg(long)]
        dual: bool,
    },
    /// List every outcome of quantum insertion of a letter into a tableau,
    /// with its amplitude at the given q.
    Qinsert {
        /// Tableau text, rows joined by "/", e.g. "1,1,2/2,3"; "" is empty.
        tableau: String,
        /// Letter to insert (≥ 1).
        letter: usize,
        /// Quantum parameter: "zero", "infinity", or a positive decimal.
        #[arg(long, default_value = "1")]
        q: String,
    },
    /// Emit the Pieri transform for one source shape as a matrix document.
    PieriMatrix {
        /// Source shape, e.g. "[2,1]".
        #[arg(long)]
        lambda: String,
        /// Alphabet size.
        #[arg(long)]
        d: usize,
        /// Quantum parameter: "zero", "infinity", or a positive decimal.
        #[arg(long, default_value = "1")]
        q: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build the Schur–Weyl transform on words of length n over 1..=d, or
    /// stream it over a state vector.
    Schur {
        /// Word length.
        #[arg(long)]
        n: usize,
        /// Alphabet size.
        #[arg(long)]
        d: usize,
        /// Quantum parameter: "zero", "infinity", or a positive decimal.
        #[arg(long, default_value = "1")]
        q: String,
        /// `matrix` writes the dense transform; `apply` streams it over
        /// --state-file without materializing it.
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// JSON array of d^n amplitudes (apply mode).
        #[arg(long)]
        state_file: Option<PathBuf>,
        /// Apply the transform or its inverse (apply mode).
        #[arg(long, value_enum, default_value_t)]
        direction: Dir,
        /// Override the dense dimension cap (matrix mode; default 4096).
        #[arg(long)]
        cap: Option<usize>,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run invariant suites and print a JSON report; exits 1 if any
    /// residual exceeds the tolerance.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Word length / shape size for the suites.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Alphabet size.
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Comma-separated q values ("zero", "infinity", decimals).
        #[arg(long = "q-list", default_value = "0.5,1,2")]
        q_list: String,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    match cli.command {
        Command::Rsk { word, dual } => cmd_rsk(&word, dual),
        Command::Qinsert { tableau, letter, q } => cmd_qinsert(&tableau, letter, &q),
        Command::PieriMatrix { lambda, d, q, format, output } => {
            cmd_pieri_matrix(&lambda, d, &q, format, output.as_deref())
        }
        Command::Schur { n, d, q, mode, format, state_file, direction, cap, output } => {
            cmd_schur(n, d, &q, mode, format, state_file, direction, cap, output.as_deref())
        }
        Command::Verify { suite, n, d, q_list, tolerance, output } => {
            cmd_verify(suite, n, d, &q_list, tolerance, output.as_deref())
        }
    }
}

fn parse_word(text: &str) -> Result<Vec<usize>, Box<dyn Error>> {
    let mut word = Vec::new();
    for part in text.split(',') {
        let letter: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("word letter {part:?} is not a positive integer"))?;
        if letter == 0 {
            return Err("word letters start at 1".into());
        }
        word.push(letter);
    }
    Ok(word)
}

fn emit(output: Option<&std::path::Path>, payload: &str) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, format!("{payload}\n")),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{payload}") {
                // a closed pipe downstream is not our error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => other,
            }
        }
    }
}

#[derive(Serialize)]
struct RskOutput {
    word: Vec<usize>,
    dual: bool,
    p: String,
    q: String,
}

fn cmd_rsk(text: &str, dual: bool) -> Result<ExitCode, Box<dyn Error>> {
    let word = parse_word(text)?;
    let pair = if dual { dual_rsk_word(&word) } else { rsk_word(&word) };
    let out = RskOutput {
        word,
        dual,
        p: pair.p.to_string(),
        q: pair.q.to_string(),
    };
    emit(None, &serde_json::to_string_pretty(&out)?)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct QinsertOutcome {
    result: String,
    new_box_row: usize,
    sign: i8,
    amplitude: f64,
}

#[derive(Serialize)]
struct QinsertOutput {
    tableau: String,
    letter: usize,
    q: String,
    /// Alphabet the amplitudes were evaluated in: max(entries, letter).
    /// Amplitudes are independent of any larger choice.
    alphabet: usize,
    outcomes: Vec<QinsertOutcome>,
    norm_squared: f64,
}

fn cmd_qinsert(tableau: &str, letter: usize, q_text: &str) -> Result<ExitCode, Box<dyn Error>> {
    let t: SemiStandardTableau = tableau.parse()?;
    let q = QParam::<f64>::parse(q_text)?;
    let d = t.max_entry().max(letter);
    let amplitudes: HashMap<String, f64> = insertion_amplitudes(&t, letter, d, &q)?
        .into_iter()
        .map(|(s, a)| (s.to_string(), a))
        .collect();
    let outcomes: Vec<QinsertOutcome> = q_insert(&t, letter)
        .into_iter()
        .map(|o| {
            let result = o.result.to_string();
            let amplitude = amplitudes.get(&result).copied().unwrap_or(0.0);
            QinsertOutcome { result, new_box_row: o.new_box.row, sign: o.sign, amplitude }
        })
        .collect();
    let norm_squared = outcomes.iter().map(|o| o.amplitude * o.amplitude).sum();
    let out = QinsertOutput {
        tableau: t.to_string(),
        letter,
        q: q_tag(&q),
        alphabet: d,
        outcomes,
        norm_squared,
    };
    emit(None, &serde_json::to_string_pretty(&out)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_pieri_matrix(
    lambda_text: &str,
    d: usize,
    q_text: &str,
    format: Format,
    output: Option<&std::path::Path>,
) -> Result<ExitCode, Box<dyn Error>> {
    let lambda: Partition = lambda_text.parse()?;
    let q = QParam::<f64>::parse(q_text)?;
    let pm = pieri_matrix(&lambda, d, &q)?;
    let metadata = Metadata {
        n: lambda.size() + 1,
        d,
        q: q_tag(&q),
        lambda: Some(lambda.to_string()),
        tolerance: None,
        basis_order: BASIS_ORDER.to_string(),
    };
    let doc = MatrixDocument::from_matrix(metadata, &pm.matrix, format);
    emit(output, &serde_json::to_string_pretty(&doc)?)?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_schur(
    n: usize,
    d: usize,
    q_text: &str,
    mode: Mode,
    format: Format,
    state_file: Option<PathBuf>,
    direction: Dir,
    cap: Option<usize>,
    output: Option<&std::path::Path>,
) -> Result<ExitCode, Box<dyn Error>> {
    let q = QParam::<f64>::parse(q_text)?;
    match mode {
        Mode::Matrix => {
            let u = schur_transform_dense(n, d, &q, cap)?;
            let metadata = Metadata {
                n,
                d,
                q: q_tag(&q),
                lambda: None,
                tolerance: None,
                basis_order: BASIS_ORDER.to_string(),
            };
            let doc = MatrixDocument::from_matrix(metadata, &u.matrix, format);
            emit(output, &serde_json::to_string_pretty(&doc)?)?;
        }
        Mode::Apply => {
            let path = state_file.ok_or("apply mode needs --state-file")?;
            let state = document::read_state(&path)?;
            if state.len() > 1_000_000 {
                eprintln!(
                    "warning: streaming {} amplitudes through {n} stages; this may take a while",
                    state.len()
                );
            }
            let dir = match direction {
                Dir::Forward => Direction::Forward,
                Dir::Inverse => Direction::Inverse,
            };
            let (result, stats) = schur_apply(&state, dir, n, d, &q)?;
            eprintln!(
                "{} scalar multiplications across {} stages",
                stats.multiplications, stats.stages
            );
            emit(output, &serde_json::to_string(&result)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: Suite,
    n: usize,
    d: usize,
    q_list: &str,
    tolerance: f64,
    output: Option<&std::path::Path>,
) -> Result<ExitCode, Box<dyn Error>> {
    let qs: Vec<QParam<f64>> = q_list
        .split(',')
        .map(QParam::parse)
        .collect::<qschur_core::error::Result<_>>()?;
    let report = verify::run(suite, n, d, &qs, tolerance)?;
    emit(output, &serde_json::to_string_pretty(&report)?)?;
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
