use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ncrewrite::harness::{cancellation_probe, DecisionOutcome, EncodedMachine};
use ncrewrite::tm::Outcome;
use ncrewrite::verify::{audit_order, audit_orientation, find_ambiguities};
use ncrewrite::{
    minsky_utm, tm_run, Construction, Error, Letter, OrderKind, Polynomial, Presentation,
    Strategy, TmConfig, TmSpec, Word, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "ncrewrite", version, about = "Rewriting in algebras that simulate Turing machines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word (or polynomial) in a presentation.
    Normalize {
        #[arg(long)]
        presentation: PathBuf,
        /// Word tokens, or a polynomial `p/q * word + ...`.
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, value_parser = ["leftmost", "rightmost"], default_value = "leftmost")]
        strategy: String,
    },
    /// List overlap and inclusion ambiguities among the left-hand sides.
    Overlaps {
        #[arg(long)]
        presentation: PathBuf,
    },
    /// Exhaustively check the reduction-order axioms on short words.
    VerifyOrder {
        #[arg(long)]
        order: OrderKind,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Letters to enumerate over; defaults to a small sub-alphabet.
        #[arg(long)]
        letters: Option<String>,
    },
    /// Write the presentation generated from a machine.
    GenPresentation {
        /// Machine file, or `minsky` for the built-in universal machine.
        #[arg(long)]
        tm: String,
        #[arg(long)]
        construction: Construction,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a machine from a configuration.
    TmRun {
        #[arg(long)]
        tm: String,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Compare machine steps with left multiplication by `t`.
    Lockstep {
        #[arg(long)]
        tm: String,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        construction: Construction,
    },
    /// Search for n <= nmax with (tW)^n = 0.
    Nilpotent {
        #[arg(long)]
        tm: String,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        nmax: usize,
    },
    /// Search for N <= nmax with t^N W = 0.
    Annihilate {
        #[arg(long)]
        tm: String,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value = "nilpotency")]
        construction: Construction,
    },
    /// Search for a left annihilator t^N of the zero-divisor main word.
    Zerodivisor {
        #[arg(long)]
        tm: String,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        nmax: usize,
    },
    /// Check that X t^n and s^n X never vanish for sampled X != 0.
    CancellationProbe {
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "minsky")]
        tm: String,
    },
}

enum Failure {
    /// Exit 1: the command ran but found a divergence or violation.
    Check(String),
    /// Exit 2: bad input.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted { .. } => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_tm(arg: &str) -> Result<TmSpec, Failure> {
    if arg == "minsky" {
        return Ok(minsky_utm());
    }
    Ok(read(Path::new(arg))?.parse()?)
}

fn load_config(path: &Path, spec: &TmSpec) -> Result<TmConfig, Failure> {
    let c: TmConfig = read(path)?.parse()?;
    c.validate(spec)?;
    Ok(c)
}

fn print_decision(label: &str, outcome: DecisionOutcome) {
    match outcome {
        DecisionOutcome::Witnessed(w) => {
            println!("{label}: witnessed n={} ({} rewrites)", w.n, w.rewrite_steps)
        }
        DecisionOutcome::Unknown(bound) => println!("{label}: unknown up to {bound}"),
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Normalize {
            presentation,
            word,
            budget,
            strategy,
        } => {
            let p: Presentation = read(&presentation)?.parse()?;
            let x: Polynomial = if word.contains('*') || word.trim() == "0" {
                word.parse().map_err(Error::from)?
            } else {
                Polynomial::from(word.parse::<Word>().map_err(Error::from)?)
            };
            let strategy = if strategy == "rightmost" {
                Strategy::Rightmost
            } else {
                Strategy::Leftmost
            };
            let out = p.normalize_with(&x, strategy, budget)?;
            println!("{}", out.poly);
            println!("steps: {}", out.steps);
            Ok(true)
        }
        Command::Overlaps { presentation } => {
            let p: Presentation = read(&presentation)?.parse()?;
            let found = find_ambiguities(&p);
            for a in &found {
                println!("{a}");
            }
            eprintln!("{} rules, {} ambiguities", p.rules().len(), found.len());
            Ok(found.is_empty())
        }
        Command::VerifyOrder {
            order,
            max_len,
            letters,
        } => {
            let letters: Vec<Letter> = match letters {
                Some(text) => text.parse::<Word>().map_err(Error::from)?.into_letters(),
                None => match order {
                    OrderKind::Nilpotency => vec![Letter::T, Letter::Cell(0), Letter::RightEdge],
                    OrderKind::ZeroDivisor => vec![
                        Letter::T,
                        Letter::S,
                        Letter::Cell(0),
                        Letter::LeftEdge,
                        Letter::RightEdge,
                    ],
                },
            };
            if letters.is_empty() || max_len < 2 {
                return Err(Failure::Usage("need letters and --max-len >= 2".into()));
            }
            let report = audit_order(order, &letters, max_len)?;
            for v in &report.violations {
                println!("VIOLATION {v:?}");
            }
            println!(
                "{order}: {} words, {} pair checks, {} monotonicity checks, {} violations",
                report.words,
                report.pair_checks,
                report.monotonicity_checks,
                report.violations.len()
            );
            Ok(report.is_clean())
        }
        Command::GenPresentation {
            tm,
            construction,
            out,
        } => {
            let spec = load_tm(&tm)?;
            let p = construction.presentation(&spec);
            fs::write(&out, p.to_string())
                .map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            let misoriented = audit_orientation(&p);
            eprintln!("wrote {} rules to {}", p.rules().len(), out.display());
            Ok(misoriented.is_empty())
        }
        Command::TmRun {
            tm,
            config,
            budget,
            trace,
        } => {
            let spec = load_tm(&tm)?;
            let c = load_config(&config, &spec)?;
            let result = tm_run(&spec, &c, budget, trace);
            if let Some(trace) = &result.trace {
                for (i, c) in trace.iter().enumerate() {
                    println!(
                        "{i}: {}",
                        ncrewrite::encode_config(c, Construction::Nilpotency)
                    );
                }
            }
            match result.outcome {
                Outcome::Halted(k) => println!("halted after {k} steps"),
                Outcome::StillRunning(b) => println!("still running after {b} steps"),
            }
            print!("{}", result.config);
            Ok(true)
        }
        Command::Lockstep {
            tm,
            config,
            steps,
            construction,
        } => {
            if steps == 0 {
                return Err(Failure::Usage("--steps must be positive".into()));
            }
            let spec = load_tm(&tm)?;
            let c = load_config(&config, &spec)?;
            let machine = EncodedMachine::new(spec, construction);
            let report = machine.lockstep(&c, steps, DEFAULT_BUDGET)?;
            for r in &report.records {
                println!(
                    "step {}: {} -> {} [{}]",
                    r.step,
                    r.before,
                    r.after,
                    if r.matched { "match" } else { "DIVERGE" }
                );
            }
            match report.first_divergence {
                None if report.halted => println!("matched; machine halted"),
                None => println!("matched {} steps", report.steps_compared()),
                Some(step) => println!("diverged at step {step}"),
            }
            Ok(report.matched())
        }
        Command::Nilpotent { tm, config, nmax } => {
            let machine = decider(&tm, Construction::Nilpotency, nmax)?;
            let c = load_config(&config, machine.spec())?;
            print_decision("nilpotent", machine.nilpotent_bounded(&c, nmax, DEFAULT_BUDGET)?);
            Ok(true)
        }
        Command::Annihilate {
            tm,
            config,
            nmax,
            construction,
        } => {
            let machine = decider(&tm, construction, nmax)?;
            let c = load_config(&config, machine.spec())?;
            print_decision("annihilated", machine.annihilate_bounded(&c, nmax, DEFAULT_BUDGET)?);
            Ok(true)
        }
        Command::Zerodivisor { tm, config, nmax } => {
            let machine = decider(&tm, Construction::ZeroDivisor, nmax)?;
            let c = load_config(&config, machine.spec())?;
            print_decision(
                "zero divisor",
                machine.zerodivisor_witness_bounded(&c, nmax, DEFAULT_BUDGET)?,
            );
            Ok(true)
        }
        Command::CancellationProbe {
            samples,
            max_len,
            seed,
            tm,
        } => {
            if samples == 0 || max_len == 0 {
                return Err(Failure::Usage("--samples and --max-len must be positive".into()));
            }
            let machine = EncodedMachine::new(load_tm(&tm)?, Construction::ZeroDivisor);
            let report = cancellation_probe(&machine, samples, max_len, seed, DEFAULT_BUDGET)?;
            for v in &report.violations {
                println!("VIOLATION {:?} n={} word: {}", v.side, v.power, v.word);
            }
            println!(
                "tested {}, skipped {} (zero), {} violations",
                report.tested,
                report.skipped_zero,
                report.violations.len()
            );
            Ok(report.violations.is_empty())
        }
    }
}

fn decider(tm: &str, construction: Construction, nmax: usize) -> Result<EncodedMachine, Failure> {
    if nmax == 0 {
        return Err(Failure::Usage("--nmax must be positive".into()));
    }
    Ok(EncodedMachine::new(load_tm(tm)?, construction))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
