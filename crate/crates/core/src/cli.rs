//! The `ssg` command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input (unreadable file, parse or
//! validation failure, bad arguments), 2 resource limit (coin cap of
//! `solve`, strategy cap of `oracle`).
//!
//! Value output is one `value <id> <num>/<den>` line per position, shared by
//! `solve` and `oracle` so the two can be diffed. `timed` and `bench` write
//! CSV with a header row. Integer lists (`--t`, `--n`, `--r`) accept a single
//! value, a comma-separated list, or an inclusive range `a..b`.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::game::{parse_game, parse_raw, validate, Game};
use crate::generators::{Family, GeneratorSpec};
use crate::numeric::{Fraction, Rational};
use crate::oracle::{enumerate_values, fib_r_step, DEFAULT_STRATEGY_BITS};
use crate::solver::{
    default_precision, solve, write_values, BudgetMode, Rounding, SolveOptions, TimedValues, DEFAULT_R_CAP,
};

#[derive(Debug, Parser)]
#[command(name = "ssg", version, about = "Exact solver for simple stochastic games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Bound {
    Extremal,
    Direct,
}

impl From<Bound> for BudgetMode {
    fn from(b: Bound) -> BudgetMode {
        match b {
            Bound::Extremal => BudgetMode::Extremal,
            Bound::Direct => BudgetMode::Direct,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Extremal,
    Chain,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchKind {
    /// Gap to the true value against t, with the two convergence bounds.
    Gap,
    /// Wall-clock time of `solve` against (n, r).
    Timing,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a game exactly.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "extremal")]
        bound: Bound,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        precision_bits: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_R_CAP, value_parser = positive)]
        r_cap: usize,
        /// Also print optimal strategies.
        #[arg(long)]
        strategies: bool,
        /// Dump the value classes of the final deterministic solve to stderr.
        #[arg(long)]
        trace_dgg: bool,
    },
    /// Values by exhaustive strategy enumeration.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_STRATEGY_BITS, value_parser = positive)]
        oracle_cap: usize,
    },
    /// Generate an instance in `.ssg` format.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Max positions (random family); defaults to half the player positions.
        #[arg(long)]
        max_count: Option<usize>,
        /// Min positions (random family); defaults to the remaining player positions.
        #[arg(long)]
        min_count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Timed-game values as CSV (t,position,value).
    Timed {
        input: PathBuf,
        #[arg(long)]
        t: String,
        /// Exact averages instead of rounding down.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        precision_bits: Option<u32>,
    },
    /// Print the validation report of a game file.
    Check { input: PathBuf },
    /// Benchmarks and convergence curves as CSV.
    Bench {
        #[arg(long, value_enum, default_value = "gap")]
        kind: BenchKind,
        #[arg(long, value_enum, default_value = "extremal")]
        family: FamilyArg,
        /// Position counts; defaults to r for the extremal family.
        #[arg(long)]
        n: Option<String>,
        #[arg(long, default_value = "4")]
        r: String,
        #[arg(long, default_value = "0..64")]
        t: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "extremal")]
        bound: Bound,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Resource(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Resource(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Parses `a`, `a,b,c` or the inclusive range `a..b`.
pub fn parse_int_list(s: &str) -> Result<Vec<usize>, String> {
    let bad = || format!("expected a number, list or range, found `{s}`");
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(format!("empty range `{s}`"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
    }
}

fn load_game(path: &Path) -> Result<Game, Failure> {
    let text = read_input(path)?;
    parse_game(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

/// Runs the CLI with the given arguments (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Solve { input, bound, precision_bits, r_cap, strategies, trace_dgg } => {
            let game = load_game(&input)?;
            let options = SolveOptions { budget: bound.into(), precision_bits, r_cap };
            let solution = solve(&game, &options).map_err(|e| {
                if e.is_resource_limit() {
                    Failure::Resource(e.to_string())
                } else {
                    Failure::Invalid(e.to_string())
                }
            })?;
            if trace_dgg {
                for (i, (value, size)) in solution.dgg_classes.iter().enumerate() {
                    writeln!(err, "dgg class {i} value {value} size {size}")?;
                }
            }
            out.write_all(solution.to_text(strategies).as_bytes())?;
            Ok(0)
        }
        Command::Oracle { input, oracle_cap } => {
            let game = load_game(&input)?;
            let values = enumerate_values(&game, oracle_cap).map_err(|e| Failure::Resource(e.to_string()))?;
            out.write_all(write_values(&values).as_bytes())?;
            Ok(0)
        }
        Command::Gen { family, n, r, max_count, min_count, seed, output } => {
            let family = match family {
                FamilyArg::Extremal => Family::Extremal,
                FamilyArg::Chain => Family::Chain,
                FamilyArg::Random => {
                    let players = n.checked_sub(r).ok_or_else(|| Failure::Invalid(format!("r = {r} exceeds n = {n}")))?;
                    let (max_count, min_count) = match (max_count, min_count) {
                        (Some(a), Some(b)) => (a, b),
                        (Some(a), None) => (a, players.saturating_sub(a)),
                        (None, Some(b)) => (players.saturating_sub(b), b),
                        (None, None) => (players / 2, players - players / 2),
                    };
                    Family::Random { max_count, min_count, seed }
                }
            };
            let text = GeneratorSpec { family, n, r }.to_ssg().map_err(|e| Failure::Invalid(e.to_string()))?;
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Timed { input, t, exact, precision_bits } => {
            let game = load_game(&input)?;
            let ts = parse_int_list(&t).map_err(Failure::Invalid)?;
            let rounding = if exact {
                Rounding::Exact
            } else {
                Rounding::Floor(precision_bits.unwrap_or_else(|| default_precision(game.r())))
            };
            let last = *ts.iter().max().expect("non-empty list");
            writeln!(out, "t,position,value")?;
            for (step, v) in TimedValues::new(&game, rounding).take(last + 1).enumerate() {
                if ts.contains(&step) {
                    for (k, x) in v.to_rationals().iter().enumerate() {
                        writeln!(out, "{step},{k},{}", Fraction(x))?;
                    }
                }
            }
            Ok(0)
        }
        Command::Check { input } => {
            let text = read_input(&input)?;
            let raw = parse_raw(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", input.display())))?;
            let report = validate(&raw);
            write!(out, "{report}")?;
            Ok(if report.is_empty() { 0 } else { 1 })
        }
        Command::Bench { kind, family, n, r, t, seed, bound } => {
            let rs = parse_int_list(&r).map_err(Failure::Invalid)?;
            let ns = n.as_deref().map(parse_int_list).transpose().map_err(Failure::Invalid)?;
            match kind {
                BenchKind::Gap => {
                    let ts = parse_int_list(&t).map_err(Failure::Invalid)?;
                    bench_gap(family, ns, &rs, &ts, seed, bound.into(), out)
                }
                BenchKind::Timing => bench_timing(family, ns, &rs, seed, bound.into(), out),
            }?;
            Ok(0)
        }
    }
}

fn instances(family: FamilyArg, ns: Option<Vec<usize>>, rs: &[usize], seed: u64) -> Result<Vec<GeneratorSpec>, Failure> {
    let mut specs = Vec::new();
    for &r in rs {
        let ns = ns.clone().unwrap_or_else(|| vec![r.max(1)]);
        for &n in &ns {
            let family = match family {
                FamilyArg::Extremal => Family::Extremal,
                FamilyArg::Chain => Family::Chain,
                FamilyArg::Random => {
                    let players = n.saturating_sub(r);
                    Family::Random { max_count: players / 2, min_count: players - players / 2, seed }
                }
            };
            specs.push(GeneratorSpec { family, n, r });
        }
    }
    Ok(specs)
}

fn family_name(f: &Family) -> &'static str {
    match f {
        Family::Extremal => "extremal",
        Family::Chain => "chain",
        Family::Random { .. } => "random",
    }
}

fn seed_of(f: &Family) -> String {
    match f {
        Family::Random { seed, .. } => seed.to_string(),
        _ => String::new(),
    }
}

fn pow_rational(base: &Rational, e: usize) -> Rational {
    num_traits::pow(base.clone(), e)
}

fn bench_gap(
    family: FamilyArg,
    ns: Option<Vec<usize>>,
    rs: &[usize],
    ts: &[usize],
    seed: u64,
    budget: BudgetMode,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    writeln!(out, "family,n,r,seed,t,position,value,gap,closed_form,direct_bound,extremal_bound")?;
    let last = ts.iter().copied().max().unwrap_or(0);
    for spec in instances(family, ns, rs, seed)? {
        let game = spec.generate().map_err(|e| Failure::Invalid(e.to_string()))?;
        let r = game.r();
        let solution = solve(&game, &SolveOptions { budget, ..SolveOptions::default() })
            .map_err(|e| Failure::Resource(e.to_string()))?;
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let no_toss = Rational::one() - pow_rational(&half, r);
        let no_run = Rational::one() - pow_rational(&half, r + 1);
        for (t, v) in TimedValues::new(&game, Rounding::Exact).take(last + 1).enumerate() {
            if !ts.contains(&t) {
                continue;
            }
            let timed = v.to_rationals();
            let gaps: Vec<Rational> = solution.values.iter().zip(&timed).map(|(a, b)| a - b).collect();
            let position = match spec.family {
                Family::Extremal => r,
                _ => (0..gaps.len()).fold(0, |best, k| if gaps[k] > gaps[best] { k } else { best }),
            };
            let closed = match spec.family {
                Family::Extremal => {
                    Fraction(&Rational::new(fib_r_step(t as i64 + 2, r).into(), BigInt::one() << t)).to_string()
                }
                _ => String::new(),
            };
            let (direct, extremal) = if r == 0 {
                (String::new(), String::new())
            } else {
                let d = pow_rational(&no_toss, t / r);
                let e = pow_rational(&no_run, t) * Rational::from_integer(BigInt::from(2));
                (Fraction(&d).to_string(), Fraction(&e).to_string())
            };
            let gap = if gaps[position].is_zero() { Rational::zero() } else { gaps[position].clone() };
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                family_name(&spec.family),
                spec.n,
                r,
                seed_of(&spec.family),
                t,
                position,
                Fraction(&timed[position]),
                Fraction(&gap),
                closed,
                direct,
                extremal
            )?;
        }
    }
    Ok(())
}

fn bench_timing(
    family: FamilyArg,
    ns: Option<Vec<usize>>,
    rs: &[usize],
    seed: u64,
    budget: BudgetMode,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    writeln!(out, "family,n,r,seed,iterations,millis")?;
    for spec in instances(family, ns, rs, seed)? {
        let game = spec.generate().map_err(|e| Failure::Invalid(e.to_string()))?;
        let start = Instant::now();
        let solution = solve(&game, &SolveOptions { budget, ..SolveOptions::default() })
            .map_err(|e| Failure::Resource(e.to_string()))?;
        let millis = start.elapsed().as_millis();
        writeln!(
            out,
            "{},{},{},{},{},{}",
            family_name(&spec.family),
            spec.n,
            spec.r,
            seed_of(&spec.family),
            solution.iterations_run,
            millis
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_lists() {
        assert_eq!(parse_int_list("4..6").unwrap(), vec![4, 5, 6]);
        assert_eq!(parse_int_list("1,10, 100").unwrap(), vec![1, 10, 100]);
        assert_eq!(parse_int_list("7").unwrap(), vec![7]);
        assert!(parse_int_list("6..4").is_err());
        assert!(parse_int_list("x").is_err());
    }

    #[test]
    fn bad_arguments_exit_one() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["ssg", "solve"], &mut out, &mut err), 1);
        assert_eq!(run(["ssg", "frobnicate"], &mut out, &mut err), 1);
        assert_eq!(run(["ssg", "--help"], &mut out, &mut err), 0);
    }
}
