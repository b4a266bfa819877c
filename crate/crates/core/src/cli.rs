//! The `mockmod4` command line.
//!
//! Exit codes: 0 when everything requested passes, 1 when a check finds a
//! counterexample, 2 on usage errors or inapplicable inputs.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::arith::{kronecker, s_of};
use crate::error::{Error, Result};
use crate::heckerogers::{eval_double_sum, spec_by_name};
use crate::hurwitz::{genseries_h, hurwitz12_formula};
use crate::mocktheta::{series_by_name, u_series, v_series};
use crate::pell::{pell_count_bruteforce, pell_count_lovejoy};
use crate::series::{rank_build, RankKind};
use crate::verify::{
    self, check_classification, check_identity, congruence, identities, nptwid_hecke_check,
    Profile, VerifyReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mockmod4",
    version,
    about = "Exact q-series tools for mock theta functions modulo 4"
)]
pub struct Cli {
    /// Emit JSON (coefficients as decimal strings).
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one coefficient of a named series.
    Coeff { name: String, n: i64 },
    /// Dump a named series to precision N as JSON.
    Series { name: String, n: i64 },
    /// `hurwitz <N>` prints 12H(N); `hurwitz series <a> <b> <N>` dumps
    /// sum 12H(a n - b) q^n.
    Hurwitz {
        #[arg(num_args = 1..=4, required = true)]
        args: Vec<String>,
    },
    /// Count classes of solutions of u^2 - 6 v^2 = m, both ways.
    Pell { m: u64 },
    /// Evaluate a registered double sum to precision N.
    Dsum { name: String, n: i64 },
    /// Finite-depth verification; prints JSON reports.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Recompute explicit numerical values.
    Repro {
        #[arg(value_enum)]
        what: ReproTarget,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Check a registered identity on exponents below the depth.
    Identity {
        name: String,
        #[arg(long, env = "MOCKMOD4_DEPTH")]
        depth: Option<i64>,
    },
    /// Sweep a congruence theorem at one prime over indices below nmax.
    Congruence {
        name: String,
        #[arg(long)]
        prime: i64,
        #[arg(long, env = "MOCKMOD4_DEPTH")]
        nmax: Option<i64>,
        /// Restrict to one k.
        #[arg(long)]
        k: Option<i64>,
    },
    /// Compare a classification theorem with computed coefficients.
    Classify {
        family: String,
        #[arg(long)]
        nmax: Option<i64>,
    },
    /// Hecke-type relations for N_psi modulo 4 at a prime l >= 5.
    Nptwid {
        #[arg(long)]
        ell: i64,
        #[arg(long)]
        nmax: Option<i64>,
    },
    /// Run the whole registry and the standard sweeps.
    All {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
    },
    /// List identity, theorem and family names.
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ReproTarget {
    PaperNumbers,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> i32 {
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            }
            eprintln!("mockmod4: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, line: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{line}").map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))
}

fn emit_json(out: &mut dyn Write, v: &impl Serialize) -> Result<()> {
    emit(out, serde_json::to_string(v).expect("serialisable"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Coeff { name, n } => {
            let value = series_by_name(name, n + 1)?.coeff(*n);
            if cli.json {
                emit_json(
                    out,
                    &json!({ "name": name, "n": n, "value": value.to_string() }),
                )?;
            } else {
                emit(out, value)?;
            }
        }
        Command::Series { name, n } => emit_json(out, &series_by_name(name, *n)?)?,
        Command::Hurwitz { args } => hurwitz(cli.json, args, out)?,
        Command::Pell { m } => {
            if *m == 0 {
                return Err(Error::InvalidArgument("m must be positive".into()));
            }
            let (brute, formula) = (pell_count_bruteforce(*m), pell_count_lovejoy(*m));
            if cli.json {
                emit_json(
                    out,
                    &json!({ "m": m, "bruteforce": brute.count, "formula": formula.count }),
                )?;
            } else {
                emit(
                    out,
                    format!("bruteforce {}\nformula {}", brute.count, formula.count),
                )?;
            }
            if brute != formula {
                return Ok(EXIT_FAIL);
            }
        }
        Command::Dsum { name, n } => emit_json(out, &eval_double_sum(spec_by_name(name)?, *n)?)?,
        Command::Verify { what } => return verify_cmd(what, out),
        Command::Repro {
            what: ReproTarget::PaperNumbers,
        } => return repro(cli.json, out),
    }
    Ok(EXIT_PASS)
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::InvalidArgument(format!("not a number: {s}")))
}

fn hurwitz(json: bool, args: &[String], out: &mut dyn Write) -> Result<()> {
    match args {
        [n] => {
            let h = hurwitz12_formula(parse(n)?);
            if json {
                emit_json(
                    out,
                    &json!({ "n": parse::<u64>(n)?, "h12": h.value().to_string() }),
                )
            } else {
                emit(out, h.value())
            }
        }
        [cmd, a, b, n] if cmd == "series" => {
            emit_json(out, &genseries_h(parse(a)?, parse(b)?, parse(n)?)?)
        }
        _ => Err(Error::InvalidArgument(
            "usage: hurwitz <N> | hurwitz series <a> <b> <N>".into(),
        )),
    }
}

fn report_code(ok: bool) -> i32 {
    if ok {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn single(out: &mut dyn Write, r: VerifyReport) -> Result<i32> {
    emit(out, r.to_json())?;
    Ok(report_code(r.passed()))
}

fn verify_cmd(what: &VerifyCommand, out: &mut dyn Write) -> Result<i32> {
    match what {
        VerifyCommand::Identity { name, depth } => {
            let depth = match depth {
                Some(d) => *d,
                None => identities::identity(name)?.default_depth,
            };
            single(out, check_identity(name, depth)?)
        }
        VerifyCommand::Congruence {
            name,
            prime,
            nmax,
            k,
        } => {
            let depth = match nmax {
                Some(d) => *d,
                None => congruence::theorem(name)?.default_depth,
            };
            let sweep = congruence::Sweep {
                p: *prime,
                depth,
                k: *k,
            };
            single(out, congruence::check_congruence_k(name, sweep)?)
        }
        VerifyCommand::Classify { family, nmax } => {
            let n_max = match nmax {
                Some(n) => *n,
                None => verify::classify::Family::from_name(family)?.default_nmax(),
            };
            single(out, check_classification(family, n_max)?)
        }
        VerifyCommand::Nptwid { ell, nmax } => single(
            out,
            nptwid_hecke_check(*ell, nmax.unwrap_or(verify::nptwid::DEFAULT_NMAX))?,
        ),
        VerifyCommand::All { profile } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let entries = verify::verify_all(profile);
            for e in &entries {
                emit_json(out, e)?;
            }
            Ok(report_code(entries.iter().all(|e| e.passed())))
        }
        VerifyCommand::List => {
            let families: Vec<_> = verify::classify::FAMILIES.iter().map(|f| f.0).collect();
            emit_json(
                out,
                &json!({
                    "identities": identities::REGISTRY,
                    "congruences": congruence::THEOREMS,
                    "families": families,
                }),
            )?;
            Ok(EXIT_PASS)
        }
    }
}

/// A recomputed value next to its expected value.
#[derive(Debug, Serialize)]
pub struct Numeric {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Numeric {
    fn new(name: impl Into<String>, expected: &str, actual: impl ToString) -> Numeric {
        let actual = actual.to_string();
        Numeric {
            name: name.into(),
            pass: actual == expected,
            expected: expected.into(),
            actual,
        }
    }
}

/// The published values: `v(99)`, the rank-mod-4 counts of strongly
/// unimodal sequences of size 895 and the symbol `(21 | 457)`.
pub fn paper_numbers() -> Vec<Numeric> {
    const IDX: i64 = 895;
    let rank = rank_build(RankKind::U, IDX + 1);
    let part = |a: usize| rank.component(a).coeff(IDX);
    let mut v = vec![
        Numeric::new("v(99)", "81474897186", v_series(100).coeff(99)),
        Numeric::new("u(0,4;895)", "256203223294825619203431487908", part(0)),
        Numeric::new("u(1,4;895)", "256203223294825426775345978961", part(1)),
        Numeric::new("u(2,4;895)", "256203223294825234347260470016", part(2)),
        Numeric::new("u(3,4;895)", "256203223294825426775345978961", part(3)),
        Numeric::new(
            "u(895)",
            "1024812893179301707101383915846",
            u_series(IDX + 1).coeff(IDX),
        ),
        Numeric::new("(21|457)", "1", kronecker(21, 457)),
        Numeric::new("21*457 - s(457)", "895", 21 * 457 - s_of(457)),
    ];
    let total: BigInt = (0..4).map(part).sum();
    v.push(Numeric::new(
        "sum of u(a,4;895)",
        "1024812893179301707101383915846",
        total,
    ));
    v
}

fn repro(json: bool, out: &mut dyn Write) -> Result<i32> {
    let numbers = paper_numbers();
    for n in &numbers {
        if json {
            emit_json(out, n)?;
        } else {
            let tag = if n.pass { "PASS" } else { "FAIL" };
            emit(
                out,
                format!("{tag} {} = {} (expected {})", n.name, n.actual, n.expected),
            )?;
        }
    }
    Ok(report_code(numbers.iter().all(|n| n.pass)))
}

/// Entry point for the binary.
pub fn main_exit() -> i32 {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    run_from(std::env::args_os(), &mut lock)
}
