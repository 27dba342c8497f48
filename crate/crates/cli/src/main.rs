//! Command-line interface to the operator-calculus engine: apply operators,
//! inspect recursion words and Laurent shadows, run equivalence checks, and
//! execute the named identity suite.
//!
//! Exit status is nonzero iff a non-conjecture check fails (or input is
//! invalid); conjecture experiments only report.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use plethys::error::Result;
use plethys::macdonald::Engine;
use plethys::negut::{negut_equivalence_check, negut_operator, negut_t_inverse_q_check,
    sss_operator_vanishes};
use plethys::partitions::partitions_of;
use plethys::qmn::{pi_shadow, q_coprime, q_general, split, DWord};
use plethys::suite::{run_suite, RunConfig, Verdict};
use plethys::symfunc::{Basis, SymFunc};
use plethys::textio::{parse_dword, parse_operator, parse_symfunc};

#[derive(Parser)]
#[command(
    name = "plethys",
    about = "Exact plethystic operator calculus for Macdonald polynomial theory",
    version
)]
struct Cli {
    /// Degree cap for symmetric-function computations.
    #[arg(long, global = true, default_value_t = 6)]
    degree: u32,
    /// Window padding for constant-term operators.
    #[arg(long, global = true, default_value_t = 8)]
    pad: i64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the suite (0 = automatic).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an operator expression to a symmetric-function expression.
    Apply {
        /// Operator, e.g. "(1/M)*[D[1],D[0]]" or "nabla*e[1]".
        operator: String,
        /// Input, e.g. "s[2,1] + q*m[3]".
        input: String,
    },
    /// Apply the elliptic-Hall operator Q_{m,n} built by the split recursion.
    Qapply { m: u32, n: u32, input: String },
    /// Apply the constant-term operator N_{m,n}.
    NegutApply { m: u32, n: u32, input: String },
    /// Show the split (a,b) + (c,d) of a co-prime pair.
    Split { m: u32, n: u32 },
    /// Show the D-letter word of Q_{m,n}.
    Qword { m: u32, n: u32 },
    /// Show the Laurent shadow of Q_{m,n}.
    Pi { m: u32, n: u32 },
    /// Verify the symmetrization certificate that N_{m,n} = Q_{m,n}.
    NegutCheck { m: u32, n: u32 },
    /// Verify the t = 1/q specialization of that certificate.
    TqCheck { m: u32, n: u32 },
    /// Decide whether a D-letter word expression acts as the zero operator.
    SssCheck {
        /// Word expression, e.g. "[D[1],[D[2],D[0]]]".
        word: String,
    },
    /// Run the named identity suite (all entries when no ids are given).
    Suite {
        /// Entry ids or aliases, e.g. "split-invariant".
        ids: Vec<String>,
        /// Additional entry ids (repeatable flag form).
        #[arg(long = "suite")]
        suite: Vec<String>,
    },
    /// Print the modified Macdonald basis through the given degree.
    DumpHtilde {
        /// Largest degree to print (defaults to --degree).
        max: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::FAILURE
        }
    }
}

/// Returns whether the command "passed" (always true for pure queries).
fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Apply { operator, input } => {
            let op = parse_operator(operator)?;
            let f = parse_symfunc(input)?;
            let engine = engine_for(cli, &f);
            emit_symfunc(cli, &op.apply(&engine, &f)?);
            Ok(true)
        }
        Command::Qapply { m, n, input } => {
            let op = q_general(*m, *n, None)?;
            let f = parse_symfunc(input)?;
            let engine = engine_for(cli, &f);
            emit_symfunc(cli, &op.apply(&engine, &f)?);
            Ok(true)
        }
        Command::NegutApply { m, n, input } => {
            let op = negut_operator(*m, *n, cli.pad);
            let f = parse_symfunc(input)?;
            let engine = engine_for(cli, &f);
            emit_symfunc(cli, &op.apply(&engine, &f)?);
            Ok(true)
        }
        Command::Split { m, n } => {
            let s = split(*m, *n)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "ab": s.ab, "cd": s.cd })
                );
            } else {
                println!(
                    "({},{}) = ({},{}) + ({},{})",
                    m, n, s.ab.0, s.ab.1, s.cd.0, s.cd.1
                );
            }
            Ok(true)
        }
        Command::Qword { m, n } => {
            let w = q_coprime(*m, *n)?;
            emit_text(cli, "word", &w.to_string());
            Ok(true)
        }
        Command::Pi { m, n } => {
            let p = pi_shadow(*m, *n)?;
            emit_text(cli, "shadow", &p.to_string());
            Ok(true)
        }
        Command::NegutCheck { m, n } => {
            let ok = negut_equivalence_check(*m, *n)?;
            emit_verdict(cli, "negut-check", ok);
            Ok(ok)
        }
        Command::TqCheck { m, n } => {
            let ok = negut_t_inverse_q_check(*m, *n)?;
            emit_verdict(cli, "tq-check", ok);
            Ok(ok)
        }
        Command::SssCheck { word } => {
            let w = parse_dword(word)?;
            let vanishes = sss_operator_vanishes(&bi_homogeneous_components(&w))?;
            if cli.json {
                println!("{}", serde_json::json!({ "vanishes": vanishes }));
            } else {
                println!("acts as zero: {}", vanishes);
            }
            Ok(true)
        }
        Command::Suite { ids, suite } => {
            let mut filter = ids.clone();
            filter.extend(suite.iter().cloned());
            let config = RunConfig {
                degree_cap: cli.degree,
                pad: cli.pad,
                filter,
                threads: cli.threads,
            };
            let report = run_suite(&config)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .expect("suite reports serialize")
                );
            } else {
                for e in &report.entries {
                    let verdict = match e.verdict {
                        Verdict::Pass => "pass",
                        Verdict::Fail => "FAIL",
                        Verdict::Reported => "reported",
                    };
                    println!(
                        "{:24} {:8} {:6} ms  {:4} checks  {}",
                        e.id, verdict, e.millis, e.terms, e.params
                    );
                }
            }
            Ok(report.all_passed())
        }
        Command::DumpHtilde { max } => {
            let cap = max.unwrap_or(cli.degree);
            let engine = Engine::new(cap);
            for d in 0..=cap {
                for mu in partitions_of(d) {
                    let h = engine.htilde(&mu)?.convert(Basis::Schur);
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "partition": mu.parts(),
                                "htilde": h.to_string(),
                            })
                        );
                    } else {
                        println!("H~{} = {}", mu, h);
                    }
                }
            }
            Ok(true)
        }
    }
}

/// An engine sized for the input: the degree flag, raised if the input is
/// already bigger so parsing round-trips never fail on their own input.
fn engine_for(cli: &Cli, f: &SymFunc) -> Engine {
    Engine::new(cli.degree.max(f.max_degree() + 2))
}

/// Group a word sum by (length, letter sum); each group is bi-homogeneous.
fn bi_homogeneous_components(w: &DWord) -> Vec<DWord> {
    let mut groups: std::collections::BTreeMap<(usize, i64), DWord> =
        std::collections::BTreeMap::new();
    for (letters, c) in w.terms() {
        let key = (letters.len(), letters.iter().sum());
        groups
            .entry(key)
            .or_insert_with(DWord::zero)
            .add_word(letters.clone(), c);
    }
    groups.into_values().collect()
}

fn emit_symfunc(cli: &Cli, f: &SymFunc) {
    emit_text(cli, "result", &f.to_string());
}

fn emit_text(cli: &Cli, key: &str, value: &str) {
    if cli.json {
        println!("{}", serde_json::json!({ key: value }));
    } else {
        println!("{}", value);
    }
}

fn emit_verdict(cli: &Cli, what: &str, ok: bool) {
    if cli.json {
        println!("{}", serde_json::json!({ "check": what, "pass": ok }));
    } else {
        println!("{}: {}", what, if ok { "pass" } else { "FAIL" });
    }
}
