//! Command-line front end. Exit codes: 0 for success (or "equal"), 1 for a
//! failed verification or a `--exit-status` "distinct", 2 for usage, parse,
//! and I/O errors.
//!
//! All human-facing output on stdout is byte-stable across runs: timings go
//! to stderr and reports serialize without them.

use crate::cayley::{parse_edge, verify_classification};
use crate::homology::{
    act_word, max_weight, rank_check, verify_filtration, verify_strictness,
    verify_transition_basis, verify_w0, HomologyVector,
};
use crate::monogenic::{
    eval_word, normal_form, parse_word, to_gen_word, verify_identities, verify_normal_forms,
};
use crate::munn::{fim_equal, munn_tree};
use crate::render::{cayley_ascii, cayley_dot, cayley_json, munn_ascii, munn_dot};
use crate::report::VerificationReport;
use crate::words::{Alphabet, GenWord};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "fim",
    version,
    about = "Word problem, Cayley balls, and homology for the free monogenic inverse monoid"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a word over {x, y}
    Nf {
        /// Word in exponent syntax, e.g. "xxy" or "x^4 y^6 x^3"; "1" or "" is the identity
        word: String,
    },
    /// Decide whether two words name the same element
    Eq {
        /// Generators for general rank, e.g. "ab"; omit for the monogenic {x, y}
        #[arg(long)]
        alphabet: Option<String>,
        /// Encode the verdict in the exit code: 0 equal, 1 distinct
        #[arg(long)]
        exit_status: bool,
        word1: String,
        word2: String,
    },
    /// Run the verification suite
    Verify {
        /// Only "all" is accepted; equivalent to omitting it
        suite: Option<String>,
        /// Ball radius for the exhaustive checks
        #[arg(long, default_value_t = 8)]
        size: i64,
        /// Largest filtration weight to check
        #[arg(long, default_value_t = 12)]
        max_weight: i64,
        /// Run a single check by name
        #[arg(long, value_parser = CHECKS)]
        only: Option<String>,
        /// Write the JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads for the exhaustive checks
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Render the Munn tree of a word
    Munn {
        word: String,
        /// Generators for general rank; omit for the monogenic {x, y}
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Render a ball of the Cayley graph
    Cayley {
        /// Ball radius
        #[arg(long, default_value_t = 2)]
        size: i64,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Act on a homology basis element by a word
    Act {
        /// Non-tree edge as "<normal form>:<generator>", e.g. "y^1 x^1:x"
        edge: String,
        /// Word over {x, y} to act by; empty acts as the identity
        #[arg(long, default_value = "")]
        by: String,
        #[arg(long, value_enum, default_value_t = ActFormat::Text)]
        format: ActFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActFormat {
    Text,
    Json,
}

const CHECKS: [&str; 8] = [
    "identities",
    "normal-forms",
    "classification",
    "w0",
    "filtration",
    "strictness",
    "transition-basis",
    "rank",
];

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn execute(command: Command) -> Result<i32, String> {
    match command {
        Command::Nf { word } => {
            let m = eval_word(&parse_word(&word).map_err(|e| e.to_string())?);
            println!("{}", normal_form(m));
            println!("{m}");
            Ok(0)
        }
        Command::Eq { alphabet, exit_status, word1, word2 } => {
            let equal = match alphabet {
                Some(letters) => {
                    let alphabet = Alphabet::new(letters.chars()).map_err(|e| e.to_string())?;
                    let u = GenWord::parse(&word1, &alphabet).map_err(|e| e.to_string())?;
                    let v = GenWord::parse(&word2, &alphabet).map_err(|e| e.to_string())?;
                    fim_equal(&u, &v)
                }
                None => {
                    let u = parse_word(&word1).map_err(|e| e.to_string())?;
                    let v = parse_word(&word2).map_err(|e| e.to_string())?;
                    eval_word(&u) == eval_word(&v)
                }
            };
            println!("{}", if equal { "equal" } else { "distinct" });
            Ok(if !equal && exit_status { 1 } else { 0 })
        }
        Command::Verify { suite, size, max_weight, only, report, jobs } => {
            if let Some(s) = &suite {
                if s != "all" {
                    return Err(format!("unknown suite {s:?}; use \"all\" or --only <check>"));
                }
                if only.is_some() {
                    return Err("\"all\" conflicts with --only".to_string());
                }
            }
            if size < 1 {
                return Err("--size must be at least 1".to_string());
            }
            configure_jobs(jobs)?;
            let checks: Vec<&str> = match &only {
                Some(name) => vec![name.as_str()],
                None => CHECKS.to_vec(),
            };
            let mut reports = Vec::new();
            for check in checks {
                reports.extend(run_check(check, size, max_weight));
            }
            for r in &reports {
                println!("{}", summary_line(r));
                eprintln!("# {}: {} ms", label(r), r.elapsed_ms);
            }
            if let Some(path) = report {
                let body = serde_json::json!({"schema": 1, "reports": reports});
                let text = serde_json::to_string_pretty(&body).expect("reports serialize");
                std::fs::write(&path, text + "\n")
                    .map_err(|e| format!("writing {}: {e}", path.display()))?;
            }
            Ok(if reports.iter().all(|r| r.pass) { 0 } else { 1 })
        }
        Command::Munn { word, alphabet, format } => {
            let tree = match alphabet {
                Some(letters) => {
                    let alphabet = Alphabet::new(letters.chars()).map_err(|e| e.to_string())?;
                    munn_tree(&GenWord::parse(&word, &alphabet).map_err(|e| e.to_string())?)
                }
                None => munn_tree(&to_gen_word(&parse_word(&word).map_err(|e| e.to_string())?)),
            };
            match format {
                Format::Ascii => print!("{}", munn_ascii(&tree)),
                Format::Dot => print!("{}", munn_dot(&tree)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&tree.to_json()).expect("trees serialize")
                ),
            }
            Ok(0)
        }
        Command::Cayley { size, format } => {
            if size < 0 {
                return Err("--size must be nonnegative".to_string());
            }
            match format {
                Format::Ascii => print!("{}", cayley_ascii(size)),
                Format::Dot => print!("{}", cayley_dot(size)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&cayley_json(size)).expect("edges serialize")
                ),
            }
            Ok(0)
        }
        Command::Act { edge, by, format } => {
            let e = parse_edge(&edge).map_err(|e| e.to_string())?;
            let basis = HomologyVector::unit(e).map_err(|e| e.to_string())?;
            let word = parse_word(&by).map_err(|e| e.to_string())?;
            let result = act_word(&word, &basis);
            match format {
                ActFormat::Text => {
                    println!("{result}");
                    match max_weight(&result) {
                        Some(w) => println!("max weight: {w}"),
                        None => println!("max weight: none"),
                    }
                }
                ActFormat::Json => {
                    let body = serde_json::json!({
                        "vector": result.to_json(),
                        "max_weight": max_weight(&result),
                    });
                    println!("{}", serde_json::to_string_pretty(&body).expect("vectors serialize"));
                }
            }
            Ok(0)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_jobs(jobs: Option<usize>) -> Result<(), String> {
    match jobs {
        Some(n) if n >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string()),
        Some(_) => Err("--jobs must be at least 1".to_string()),
        None => Ok(()),
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_jobs(jobs: Option<usize>) -> Result<(), String> {
    if jobs.is_some() {
        eprintln!("# built without the \"parallel\" feature; --jobs ignored");
    }
    Ok(())
}

fn run_check(name: &str, size: i64, max_weight: i64) -> Vec<VerificationReport> {
    match name {
        "identities" => vec![verify_identities(max_weight)],
        "normal-forms" => vec![verify_normal_forms(size, (size + 2) as usize)],
        "classification" => vec![verify_classification(size)],
        "w0" => vec![verify_w0(size)],
        "filtration" => vec![verify_filtration(max_weight)],
        "strictness" => vec![verify_strictness(max_weight)],
        "transition-basis" => vec![verify_transition_basis(max_weight)],
        "rank" => (1..=size).map(rank_check).collect(),
        other => unreachable!("clap validated the check name {other:?}"),
    }
}

fn label(r: &VerificationReport) -> String {
    if r.check == "rank" {
        format!("rank N={}", r.params["size"])
    } else {
        r.check.clone()
    }
}

fn summary_line(r: &VerificationReport) -> String {
    if r.pass {
        format!("PASS {} (checked {})", label(r), r.checked)
    } else {
        format!(
            "FAIL {} (checked {}, {} counterexamples)",
            label(r),
            r.checked,
            r.counterexamples.len()
        )
    }
}
