//! `bicheb`: exact bipartite Chebyshev polynomials and elementary
//! antiderivatives of `x/√(±p(x))` for monic quartics
//! `p = x^4 + c1 x^3 + c2 x^2 + c3 x + c4`.
//!
//! Quartics are always given as `c1,c2,c3,c4` in that order (the leading 1
//! is implicit). Exit codes: 0 decided yes, 3 decided no, 1 bad input or
//! internal error.

// `!(a < b)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod parse;
mod report;
mod samples;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use bicheb::bipartite::{build_solution, condition_aux, solve_c1, Normalization};
use bicheb::continuation::{continuation, continuation_all, Settings};
use bicheb::elliptic::{complete_coefficient, decide, Decision};
use bicheb::error::EllipticError;
use bicheb::fk::fk_table_recurrence;
use bicheb::multipartite::{integration_constant, MultipartiteSystem};
use bicheb::quartic::QuarticCoeffs;
use bicheb::render::{render, Format};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

/// Environment variable that turns on verbose output (any value but `0`).
const VERBOSE_ENV: &str = "BICHEB_VERBOSE";

#[derive(Parser, Debug)]
#[command(name = "bicheb", version, about = "Exact bipartite Chebyshev polynomials and elementary integrals of x/sqrt(±p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Common {
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Report every divisor and timing (also enabled by BICHEB_VERBOSE).
    #[arg(long)]
    verbose: bool,
    /// Accept decimal literals such as 0.01, converted exactly to fractions.
    #[arg(long)]
    rationalize: bool,
}

impl Common {
    fn verbose(&self) -> bool {
        self.verbose || std::env::var(VERBOSE_ENV).is_ok_and(|v| !v.is_empty() && v != "0")
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the F_k tables of an inner degree s.
    Fk {
        #[arg(long)]
        s: u32,
        /// Evaluate every F_k at c1,c2,c3,c4.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Build the degree-s inner polynomial u for each real c1 with F_1 = 0.
    Construct {
        #[arg(long)]
        s: u32,
        /// Use this c1 instead of solving F_1 = 0.
        #[arg(long, allow_hyphen_values = true)]
        c1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c2: String,
        #[arg(long, allow_hyphen_values = true)]
        c3: String,
        #[arg(long, allow_hyphen_values = true)]
        c4: String,
        #[arg(long, value_enum, default_value_t = Normalize::UnitLead)]
        normalize: Normalize,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether the integral is elementary for degree n.
    Decide {
        #[arg(long)]
        n: u32,
        /// Quartic as c1,c2,c3,c4.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decide and print the antiderivative.
    Integrate {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write CSV samples of the antiderivative to this file.
        #[arg(long)]
        emit_samples: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the closed form against quadrature on [a, b].
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        interval: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        emit_samples: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Solve F_1 = 0 for one coefficient given the other three.
    Complete {
        #[arg(long)]
        n: u32,
        /// Three fixed coefficients, e.g. c2=-5,c3=0,c4=4.
        #[arg(long, allow_hyphen_values = true)]
        fix: String,
        /// The coefficient to solve for (c1..c4).
        #[arg(long)]
        solve: String,
        /// Use this inner degree instead of the default admissible divisor.
        #[arg(long)]
        s: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Multipartite system for general outside data p, q.
    Multi {
        #[arg(long)]
        s: u32,
        /// Monic p as its lower coefficients, highest power first.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Monic q as its lower coefficients, highest power first (empty for q = 1).
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Prescribe m^2 instead of matching lowest-degree terms.
        #[arg(long, allow_hyphen_values = true)]
        m2: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Track the real roots c1 of F_1 as (c3, c4) moves from 0 to the targets.
    Perturb {
        #[arg(long)]
        s: u32,
        #[arg(long, allow_hyphen_values = true)]
        c2: String,
        #[arg(long, allow_hyphen_values = true)]
        target_c3: String,
        #[arg(long, allow_hyphen_values = true)]
        target_c4: String,
        /// 1-based index of the starting root; all roots when omitted.
        #[arg(long)]
        branch: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Normalize {
    UnitLead,
    UnitM,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutputFormat {
    Text,
    Latex,
    Json,
}

/// Whether the command's question was answered yes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Answer {
    Yes,
    No,
}

fn emit(common: &Common, json: impl FnOnce() -> Value, text: impl FnOnce() -> String) {
    if common.json {
        out(&serde_json::to_string_pretty(&json()).expect("serializable"));
    } else {
        out(text().trim_end_matches('\n'));
    }
}

fn decided(n: u32, c: &QuarticCoeffs, common: &Common) -> Result<Decision> {
    let start = Instant::now();
    let decision = decide(n, c)?;
    if common.verbose() {
        eprintln!("decide(n = {n}) took {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(decision)
}

fn answer(yes: bool) -> Answer {
    if yes {
        Answer::Yes
    } else {
        Answer::No
    }
}

fn run(cli: Cli) -> Result<Answer> {
    match cli.command {
        Command::Fk { s, eval, common } => {
            if s == 0 {
                bail!("s must be at least 1");
            }
            let table = fk_table_recurrence(s);
            let values = eval.map(|e| parse::quartic(&e, common.rationalize)).transpose()?.map(|c| table.eval(&c));
            emit(&common, || report::fk_json(&table, values.as_deref()), || report::fk_text(&table, values.as_deref()));
            Ok(Answer::Yes)
        }
        Command::Construct { s, c1, c2, c3, c4, normalize, common } => {
            let r = |t: &str| parse::rational(t, common.rationalize);
            let (c2, c3, c4) = (r(&c2)?, r(&c3)?, r(&c4)?);
            let norm = match normalize {
                Normalize::UnitLead => Normalization::UnitLeading,
                Normalize::UnitM => Normalization::UnitAmplitude,
            };
            let candidates: Vec<bicheb::roots::RealRoot> = match c1 {
                Some(t) => {
                    let v = r(&t)?;
                    vec![bicheb::roots::RealRoot { lo: v.clone(), hi: v.clone(), exact: Some(v), multiplicity: 1 }]
                }
                None => solve_c1(s, &c2, &c3, &c4),
            };
            let mut any = false;
            let mut json_items = Vec::new();
            let mut text = String::new();
            for root in &candidates {
                let mut item = report::root_json(root);
                text.push_str(&format!("c1 = {}\n", report::root_text(root)));
                let Some(v) = &root.exact else {
                    text.push_str("  irrational: not constructed (exact arithmetic only)\n");
                    json_items.push(item);
                    continue;
                };
                let c = QuarticCoeffs::new(v.clone(), c2.clone(), c3.clone(), c4.clone());
                match build_solution(s, &c, norm) {
                    Ok(sol) => {
                        any = true;
                        text.push_str(&report::solution_text(&sol));
                        item["solution"] = report::solution_json(&sol);
                    }
                    Err(e) => {
                        let aux = condition_aux(s, &c).ok();
                        text.push_str(&format!("  no solution: {e}\n"));
                        item["error"] = Value::String(e.to_string());
                        item["aux"] = aux.as_ref().map_or(Value::Null, |a| Value::String(report::rat(a)));
                    }
                }
                json_items.push(item);
            }
            if candidates.is_empty() {
                text.push_str("F_1 has no real root in c1\n");
            }
            emit(&common, || serde_json::json!({ "s": s, "candidates": json_items }), || text);
            Ok(answer(any))
        }
        Command::Decide { n, p, common } => {
            let c = parse::quartic(&p, common.rationalize)?;
            let d = decided(n, &c, &common)?;
            let verbose = common.verbose();
            emit(&common, || report::decision_json(n, &d, verbose), || report::decision_text(n, &d, verbose));
            Ok(answer(d.closed_form().is_some()))
        }
        Command::Integrate { n, p, format, emit_samples, common } => {
            let c = parse::quartic(&p, common.rationalize)?;
            let d = decided(n, &c, &common)?;
            let verbose = common.verbose();
            let Decision::Elementary(cf) = &d else {
                let common = Common { json: common.json || matches!(format, OutputFormat::Json), ..common };
                emit(&common, || report::decision_json(n, &d, verbose), || report::decision_text(n, &d, verbose));
                return Ok(Answer::No);
            };
            match format {
                OutputFormat::Text if !common.json => out(&render(cf, Format::Text)),
                OutputFormat::Latex if !common.json => out(&render(cf, Format::Latex)),
                _ => out(&serde_json::to_string_pretty(&report::closed_form_json(cf, verbose))?),
            }
            if let Some(path) = emit_samples {
                let rows = samples::emit(cf, &path)?;
                if verbose {
                    eprintln!("wrote {rows} samples to {}", path.display());
                }
            }
            Ok(Answer::Yes)
        }
        Command::Verify { n, p, interval, tol, emit_samples, common } => {
            let c = parse::quartic(&p, common.rationalize)?;
            let (a, b) = parse::interval(&interval)?;
            let d = decided(n, &c, &common)?;
            let Decision::Elementary(cf) = &d else {
                let verbose = common.verbose();
                emit(&common, || report::decision_json(n, &d, verbose), || report::decision_text(n, &d, verbose));
                return Ok(Answer::No);
            };
            let err = match cf.numeric_check(a, b) {
                Ok(err) => err,
                Err(EllipticError::IntervalNotValid) => {
                    bail!("[{a}, {b}] is not strictly inside a validity interval")
                }
                Err(e) => return Err(e.into()),
            };
            let ok = err <= tol;
            emit(
                &common,
                || serde_json::json!({ "n": n, "interval": [a, b], "max_error": err, "tol": tol, "pass": ok }),
                || format!("max error {err:.3e} on [{a}, {b}] (tol {tol:e}): {}\n", if ok { "PASS" } else { "FAIL" }),
            );
            if let Some(path) = emit_samples {
                samples::emit(cf, &path)?;
            }
            Ok(answer(ok))
        }
        Command::Complete { n, fix, solve, s, common } => {
            let (fixed, missing) = parse::fixed(&fix, common.rationalize)?;
            let target = parse::index(&solve)?;
            if target != missing {
                bail!("--solve c{target} but --fix leaves c{missing} unset");
            }
            let done = match complete_coefficient(n, &fixed, target, s) {
                Ok(done) => done,
                Err(EllipticError::ClassNotCovered(n)) => {
                    let msg = format!("every divisor of n = {n} is 1 mod 8; no completion is attempted");
                    emit(&common, || serde_json::json!({ "n": n, "status": "class-not-covered" }), || format!("{msg}\n"));
                    return Ok(Answer::No);
                }
                Err(e) => return Err(e.into()),
            };
            let verbose = common.verbose();
            emit(&common, || report::completion_json(&done, verbose), || report::completion_text(&done, verbose));
            let any = done.roots.iter().any(|r| r.decision.as_ref().is_some_and(|d| d.closed_form().is_some()));
            Ok(answer(any))
        }
        Command::Multi { s, p, q, m2, common } => {
            let p = parse::monic(&p, common.rationalize)?;
            let q = parse::monic(&q, common.rationalize)?;
            let m2 = m2.map(|t| parse::rational(&t, common.rationalize)).transpose()?;
            let sys = MultipartiteSystem::new(s, &p, &q)?;
            let constant =
                if sys.is_solvable() { integration_constant(s, &p, &q, &sys.u(), m2.as_ref()).ok() } else { None };
            emit(&common, || report::multi_json(&sys, constant.as_ref()), || report::multi_text(&sys, constant.as_ref()));
            Ok(answer(constant.is_some()))
        }
        Command::Perturb { s, c2, target_c3, target_c4, branch, common } => {
            let r = |t: &str| parse::rational(t, common.rationalize);
            let (c2, t3, t4) = (r(&c2)?, r(&target_c3)?, r(&target_c4)?);
            let settings = Settings::default();
            let paths = match branch {
                Some(k) => vec![continuation(s, &c2, &t3, &t4, k, &settings)?],
                None => continuation_all(s, &c2, &t3, &t4, &settings)?,
            };
            let tol = bicheb::rational::ratio(1, 1_000_000_000);
            let ok = !paths.is_empty()
                && paths.iter().all(|p| p.verification.as_ref().is_some_and(|v| v.passes(&tol)));
            emit(
                &common,
                || Value::Array(paths.iter().map(report::path_json).collect()),
                || paths.iter().map(report::path_text).collect(),
            );
            Ok(answer(ok))
        }
    }
}

/// Writes one block to stdout; a closed pipe ends the process quietly.
fn out(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if writeln!(stdout, "{text}").is_err() {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
