//! `semiauto`: classify, decompose, verify and run semiautomata stored as
//! JSON files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use semiautomata::automata::{
    madic, parse_word, Automaton, DeterministicSA, GeneralizedSA, TransformTable,
};
use semiautomata::format;
use semiautomata::ratmat::{RMatrix, Rational};
use semiautomata::source::{
    factorize_with, verify_factorization, Counterexample, Factorization, Strategy,
};
use semiautomata::Error;

#[derive(Parser)]
#[command(
    name = "semiauto",
    version,
    about = "Exact-arithmetic semiautomata toolkit"
)]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the strongest class of an automaton and each symbol's matrix classes.
    Classify { file: PathBuf },
    /// Factor a GSA into a dependent source and a semideterministic machine.
    Decompose {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Use the minimal-entry greedy reduction for every symbol.
        #[arg(long)]
        force_greedy: bool,
    },
    /// Check a factorization against an automaton, symbol by symbol and word by word.
    Verify {
        gsa: PathBuf,
        factorization: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_word_len: usize,
    },
    /// Print the matrix (or map) of a word.
    Run {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Enumerate the transformation monoid of a deterministic semiautomaton.
    Monoid {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Form the sequential product of a source and a machine.
    Compose {
        source: PathBuf,
        machine: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate an example automaton.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// The two-state m-adic stochastic semiautomaton.
    Madic {
        #[arg(long)]
        m: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded(_) => Failure::Cap(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Input(m) => (2, m),
                Failure::Cap(m) => (3, m),
            };
            if cli.json {
                println!("{}", json!({ "error": message }));
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let out = Output { json: cli.json };
    match &cli.command {
        Command::Classify { file } => classify(&out, file),
        Command::Decompose {
            file,
            output,
            force_greedy,
        } => decompose(&out, file, output.as_deref(), *force_greedy),
        Command::Verify {
            gsa,
            factorization,
            max_word_len,
        } => verify(&out, gsa, factorization, *max_word_len),
        Command::Run { file, word } => run_word(&out, file, word),
        Command::Monoid { file, cap } => monoid(&out, file, *cap),
        Command::Compose {
            source,
            machine,
            output,
        } => compose(&out, source, machine, output.as_deref()),
        Command::Gen {
            kind: GenKind::Madic { m, output },
        } => gen_madic(&out, *m, output.as_deref()),
    }
}

struct Output {
    json: bool,
}

impl Output {
    /// Prints `text` normally, `value` under `--json`.
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&value()).expect("json values serialize")
            );
        } else {
            print!("{}", text());
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_automaton(path: &Path) -> Result<Automaton, Failure> {
    format::automaton_from_str(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Writes a document to `output`, or prints it when there is none.
/// Returns whether it went to a file.
fn deliver(output: Option<&Path>, document: &str) -> Result<bool, Failure> {
    match output {
        Some(path) => write(path, document).map(|()| true),
        None => {
            print!("{document}");
            Ok(false)
        }
    }
}

fn word_text(word: &[impl AsRef<str>]) -> String {
    if word.is_empty() {
        "ε".to_string()
    } else {
        word.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(" ")
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}

fn map_value(states: &[String], t: &TransformTable) -> Value {
    let map: Map<String, Value> = t
        .images()
        .iter()
        .zip(states)
        .map(|(image, s)| (s.clone(), image.map_or(Value::Null, |j| json!(states[j]))))
        .collect();
    Value::Object(map)
}

fn classify(out: &Output, file: &Path) -> Outcome {
    let a = load_automaton(file)?.to_generalized();
    let class = a.classify();
    let per_symbol: Vec<(String, Vec<&str>)> = a
        .alphabet()
        .iter()
        .zip(a.matrices())
        .map(|(x, q)| {
            (
                x.clone(),
                q.classify().into_iter().map(|c| c.label()).collect(),
            )
        })
        .collect();
    out.emit(
        || {
            let mut text = format!("{}\n", class.label());
            for (x, classes) in &per_symbol {
                text.push_str(&format!("  {x}: {}\n", classes.join(", ")));
            }
            text
        },
        || {
            let symbols: Map<String, Value> = per_symbol
                .iter()
                .map(|(x, c)| (x.clone(), json!(c)))
                .collect();
            json!({ "class": class.label(), "symbols": symbols })
        },
    );
    Ok(true)
}

fn decompose(out: &Output, file: &Path, output: Option<&Path>, force_greedy: bool) -> Outcome {
    let a = load_automaton(file)?.to_generalized();
    let strategy = if force_greedy {
        Strategy::Greedy
    } else {
        Strategy::Auto
    };
    let f = factorize_with(&a, strategy);
    let sums: Vec<(String, Rational)> = a
        .alphabet()
        .iter()
        .zip(f.source().table())
        .map(|(x, row)| (x.clone(), row.iter().sum()))
        .collect();
    let summary_text = || {
        let mut text = format!(
            "output symbols: {}\nmachine: {}\n",
            f.machine().alphabet().len(),
            f.machine_class().label()
        );
        for (x, s) in &sums {
            text.push_str(&format!("  sum of coefficients for {x}: {s}\n"));
        }
        text
    };
    let summary_value = || {
        let sums: Map<String, Value> = sums
            .iter()
            .map(|(x, s)| (x.clone(), format::rational_to_value(s)))
            .collect();
        json!({
            "output_symbols": f.machine().alphabet().len(),
            "machine_class": f.machine_class().label(),
            "coefficient_sums": sums,
        })
    };
    if deliver(output, &format::factorization_to_string(&f))? {
        out.emit(summary_text, summary_value);
    } else if !out.json {
        eprint!("{}", summary_text());
    }
    Ok(true)
}

fn load_factorization(path: &Path) -> Result<Factorization, Failure> {
    format::factorization_from_str(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn verify(out: &Output, gsa: &Path, fact: &Path, max_word_len: usize) -> Outcome {
    let a = load_automaton(gsa)?.to_generalized();
    let f = load_factorization(fact)?;
    let report = verify_factorization(&a, &f, max_word_len)?;
    let failure = report.failure.as_ref().map(|c| match c {
        Counterexample::Symbol {
            symbol,
            expected,
            actual,
        } => (
            format!("symbol {symbol}"),
            json!({ "symbol": symbol }),
            expected,
            actual,
        ),
        Counterexample::Word {
            word,
            expected,
            actual,
        } => (
            format!("word {}", word_text(word)),
            json!({ "word": word }),
            expected,
            actual,
        ),
    });
    out.emit(
        || match &failure {
            None => format!(
                "pass: {} symbols and {} words up to length {max_word_len}\n",
                report.symbols_checked, report.words_checked
            ),
            Some((at, _, expected, actual)) => format!(
                "fail at {at}\n  expected:\n{}  from factorization:\n{}",
                indent(&expected.to_string()),
                indent(&actual.to_string())
            ),
        },
        || {
            let counterexample = failure.as_ref().map_or(Value::Null, |(_, at, e, a)| {
                let mut at = at.clone();
                at["expected"] = format::matrix_to_value(e);
                at["actual"] = format::matrix_to_value(a);
                at
            });
            json!({
                "passed": report.passed(),
                "symbols_checked": report.symbols_checked,
                "words_checked": report.words_checked,
                "max_word_len": max_word_len,
                "counterexample": counterexample,
            })
        },
    );
    Ok(report.passed())
}

fn run_word(out: &Output, file: &Path, text: &str) -> Outcome {
    match load_automaton(file)? {
        Automaton::Deterministic(sa) => {
            let word = parse_word(sa.alphabet(), text)?;
            let t = sa.delta_word(&word)?;
            out.emit(
                || format!("{}: {}\n", word_text(&word), t.render(sa.states())),
                || json!({ "word": word, "map": map_value(sa.states(), &t) }),
            );
        }
        Automaton::Generalized(gsa) => {
            let word = parse_word(gsa.alphabet(), text)?;
            let q = gsa.q_word(&word)?;
            let stochastic = gsa.classify().is_stochastic();
            out.emit(
                || {
                    let mut text = format!("Q({})\n{q}\n", word_text(&word));
                    if stochastic {
                        text.push_str(&probabilities(gsa.states(), &word_text(&word), &q));
                    }
                    text
                },
                || {
                    json!({
                        "word": word,
                        "matrix": format::matrix_to_value(&q),
                        "stochastic": stochastic,
                    })
                },
            );
        }
    }
    Ok(true)
}

fn probabilities(states: &[String], word: &str, q: &RMatrix) -> String {
    let mut text = String::new();
    for (i, from) in states.iter().enumerate() {
        for (j, to) in states.iter().enumerate() {
            text.push_str(&format!("p({to} | {word}, {from}) = {}\n", q.get(i, j)));
        }
    }
    text
}

fn monoid(out: &Output, file: &Path, cap: usize) -> Outcome {
    let sa: DeterministicSA = match load_automaton(file)? {
        Automaton::Deterministic(sa) => sa,
        Automaton::Generalized(gsa) => gsa.extract()?,
    };
    let elements = sa.transformation_monoid(cap)?;
    out.emit(
        || {
            let mut text = String::new();
            for e in &elements {
                text.push_str(&format!(
                    "{}: {}\n",
                    word_text(&sa.symbols_of(&e.word)),
                    e.table.render(sa.states())
                ));
            }
            text.push_str(&format!("|T(A)| = {}\n", elements.len()));
            text
        },
        || {
            let listed: Vec<Value> = elements
                .iter()
                .map(|e| json!({ "word": sa.symbols_of(&e.word), "map": map_value(sa.states(), &e.table) }))
                .collect();
            json!({ "size": elements.len(), "elements": listed })
        },
    );
    Ok(true)
}

fn compose(out: &Output, source: &Path, machine: &Path, output: Option<&Path>) -> Outcome {
    let source = format::parse_json(&read(source)?)
        .and_then(format::source_from_value)
        .map_err(|e| Failure::Input(format!("{}: {e}", source.display())))?;
    let machine = load_machine(machine)?;
    let product = source.sequential_product(&machine)?;
    let class = product.classify();
    if deliver(
        output,
        &format::automaton_to_string(&Automaton::Generalized(product)),
    )? {
        out.emit(
            || format!("product: {}\n", class.label()),
            || json!({ "class": class.label() }),
        );
    }
    Ok(true)
}

/// An automaton file, or the machine of a factorization file.
fn load_machine(path: &Path) -> Result<GeneralizedSA, Failure> {
    let mut value = format::parse_json(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if let Some(machine) = value.get_mut("machine") {
        value = machine.take();
    }
    format::automaton_from_value(value)
        .map(|a| a.to_generalized())
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn gen_madic(out: &Output, m: u64, output: Option<&Path>) -> Outcome {
    let a = madic(m)?;
    if deliver(
        output,
        &format::automaton_to_string(&Automaton::Generalized(a)),
    )? {
        out.emit(
            || format!("{m}-adic: {} symbols\n", m),
            || json!({ "m": m, "symbols": m }),
        );
    }
    Ok(true)
}
