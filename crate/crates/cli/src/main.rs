mod custom;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use genocchi::admissible::enumerate_admissible;
use genocchi::contfrac::{expand, NamedFraction};
use genocchi::dellac::{enumerate_dellac, DellacWindow};
use genocchi::hanzeng::hanzeng_barc;
use genocchi::motzkin::{enumerate_motzkin, h_poly_laurent};
use genocchi::oracles::{count_dumont, count_triangle_pairs};
use genocchi::seidel::{genocchi_first_sequence, median_genocchi_sequence, normalized_h_sequence};
use genocchi::verify::{crosscheck_with, CrosscheckOptions, DEFAULT_SEED};
use genocchi::{Error, PowerSeries};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

const SEQ_MAX_COUNT: usize = 2000;
const POLY_MAX_N: usize = 40;
const SERIES_MAX_ORDER: usize = 100;
const MAX_N_ENV: &str = "GENOCCHI_MAX_N";

#[derive(Parser)]
#[command(name = "genocchi", version, about = "Normalized median Genocchi numbers and their q-analogues")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first terms of an integer sequence.
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print a single q-polynomial.
    Poly {
        #[arg(value_enum)]
        name: PolyName,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Stream combinatorial objects, one per line, then the total.
    Enumerate {
        #[arg(value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// Print at most this many objects; the total still counts all of them.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Count objects with a brute-force oracle.
    Count {
        #[arg(value_enum)]
        oracle: Oracle,
        #[arg(long)]
        n: usize,
    },
    /// Expand a continued fraction as a power series in s.
    Series {
        #[arg(value_enum)]
        fraction: Fraction,
        #[arg(long)]
        order: usize,
        /// TOML fraction description, required for `custom`.
        #[arg(long)]
        spec: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Compare every route against every other; exits 1 on any failure.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Shifts the upper edge of the Dellac band; nonzero values corrupt the model.
        #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
        dellac_upper_offset: isize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    /// h_0, h_1, ...
    #[value(name = "h")]
    LowerH,
    /// H_1, H_3, H_5, ...
    #[value(name = "H")]
    UpperH,
    /// G_1, G_2, ... (first kind)
    #[value(name = "genocchi1")]
    Genocchi1,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyName {
    /// h_n(q)
    Hq,
    /// q^{n(n-1)/2} h_n(1/q)
    Tildehq,
    /// Han-Zeng c̄_n(q)
    Barc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Dellac,
    Admissible,
    Motzkin,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Dumont,
    Triangles,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fraction {
    F1,
    F2,
    Hn,
    Viennot,
    Custom,
}

enum Failure {
    Usage(String),
    Limit(String),
    Checks,
    Internal(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) => Failure::Usage(e.to_string()),
            Error::ResourceLimit { .. } => Failure::Limit(e.to_string()),
            Error::InexactDivision(_) | Error::Inconsistency(_) => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

/// Applies the built-in cap and the optional `GENOCCHI_MAX_N` cap.
fn cap(what: &str, n: usize, builtin: usize) -> Result<(), Failure> {
    let env_cap = match std::env::var(MAX_N_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("{MAX_N_ENV} must be a non-negative integer, got `{v}`")))?,
        ),
        Err(_) => None,
    };
    let max = env_cap.map_or(builtin, |c| c.min(builtin));
    if n > max {
        return Err(Failure::Limit(format!("{what} supports at most {max}, got {n}")));
    }
    Ok(())
}

/// Canonical JSON: sorted keys, compact, integers as decimal strings.
fn emit_json(out: &mut Out, value: &impl Serialize) -> Result<(), Failure> {
    let v = serde_json::to_value(value).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{v}")?;
    Ok(())
}

fn join(values: &[BigInt]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn run_seq(out: &mut Out, name: SeqName, count: usize, as_json: bool) -> Result<(), Failure> {
    cap("seq --count", count, SEQ_MAX_COUNT)?;
    let (key, label, values) = match name {
        SeqName::LowerH => ("h", "h_n", normalized_h_sequence(count)?),
        SeqName::UpperH => ("H", "H_{2n-1}", median_genocchi_sequence(count)?),
        SeqName::Genocchi1 => ("genocchi1", "G_n", genocchi_first_sequence(count)?),
    };
    if as_json {
        emit_json(out, &json!({ "name": key, "label": label, "values": strings(&values) }))
    } else {
        writeln!(out, "{}", join(&values))?;
        Ok(())
    }
}

fn run_poly(out: &mut Out, name: PolyName, n: usize, as_json: bool) -> Result<(), Failure> {
    cap("poly --n", n, POLY_MAX_N)?;
    let (key, p) = match name {
        PolyName::Hq => ("hq", h_poly_laurent(n)?),
        PolyName::Tildehq => ("tildehq", h_poly_laurent(n)?.reverse(n * (n - 1) / 2)?),
        PolyName::Barc => ("barc", hanzeng_barc(n)?),
    };
    if as_json {
        emit_json(out, &json!({ "name": key, "n": n, "poly": p }))
    } else {
        writeln!(out, "{p}")?;
        Ok(())
    }
}

fn run_enumerate(out: &mut Out, model: Model, n: usize, limit: Option<u64>, as_json: bool) -> Result<(), Failure> {
    let mut shown = 0u64;
    let mut write_err: Option<io::Error> = None;
    let mut emit = |line: &dyn Fn() -> String| {
        if limit.is_some_and(|k| shown >= k) || write_err.is_some() {
            return;
        }
        shown += 1;
        if let Err(e) = writeln!(out, "{}", line()) {
            write_err = Some(e);
        }
    };
    fn json_line<T: Serialize>(obj: &T) -> String {
        serde_json::to_value(obj).map(|v| v.to_string()).unwrap_or_default()
    }
    let total = match model {
        Model::Dellac => enumerate_dellac(n, |d| {
            emit(&|| {
                if as_json {
                    json_line(d)
                } else {
                    let cols: Vec<String> = d.columns().iter().map(|(a, b)| format!("({a},{b})")).collect();
                    cols.join(" ")
                }
            })
        })?,
        Model::Admissible => {
            enumerate_admissible(n, |a| emit(&|| if as_json { json_line(a) } else { a.to_string() }))?
        }
        Model::Motzkin => enumerate_motzkin(n, |p| emit(&|| if as_json { json_line(p) } else { p.to_string() }))?,
    };
    if let Some(e) = write_err {
        return Err(e.into());
    }
    if as_json {
        emit_json(out, &json!({ "total": total.to_string() }))
    } else {
        writeln!(out, "total: {total}")?;
        Ok(())
    }
}

fn run_count(out: &mut Out, oracle: Oracle, n: usize) -> Result<(), Failure> {
    cap("count --n", n, usize::MAX)?;
    let c = match oracle {
        Oracle::Dumont => count_dumont(n)?,
        Oracle::Triangles => count_triangle_pairs(n)?,
    };
    writeln!(out, "{c}")?;
    Ok(())
}

fn print_series(out: &mut Out, s: &PowerSeries, as_json: bool) -> Result<(), Failure> {
    if as_json {
        return emit_json(out, s);
    }
    if s.is_integral() {
        writeln!(out, "{}", join(&s.at_q_one()))?;
    } else {
        for (k, c) in s.coeffs().iter().enumerate() {
            writeln!(out, "s^{k}: {c}")?;
        }
    }
    Ok(())
}

fn run_series(
    out: &mut Out,
    fraction: Fraction,
    order: usize,
    spec: Option<std::path::PathBuf>,
    as_json: bool,
) -> Result<(), Failure> {
    cap("series --order", order, SERIES_MAX_ORDER)?;
    let cf = match (fraction, spec) {
        (Fraction::Custom, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            custom::parse_spec(&text).map_err(Failure::Usage)?
        }
        (Fraction::Custom, None) => return Err(Failure::Usage("`series custom` needs --spec FILE".into())),
        (_, Some(_)) => return Err(Failure::Usage("--spec is only accepted by `series custom`".into())),
        (Fraction::F1, None) => NamedFraction::F1.spec(),
        (Fraction::F2, None) => NamedFraction::F2.spec(),
        (Fraction::Hn, None) => NamedFraction::Hn.spec(),
        (Fraction::Viennot, None) => NamedFraction::Viennot.spec(),
    };
    print_series(out, &expand(&cf, order)?, as_json)
}

fn run_verify(out: &mut Out, n_max: usize, seed: u64, as_json: bool, offset: isize) -> Result<(), Failure> {
    cap("verify --n-max", n_max, usize::MAX)?;
    let opts = CrosscheckOptions {
        seed,
        dellac_window: DellacWindow { upper_offset: offset },
        ..CrosscheckOptions::default()
    };
    let report = crosscheck_with(n_max, &opts)?;
    if as_json {
        emit_json(out, &report)?;
    } else {
        writeln!(out, "{report}")?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Seq { name, count, json } => run_seq(&mut out, name, count, json),
        Command::Poly { name, n, json } => run_poly(&mut out, name, n, json),
        Command::Enumerate { model, n, limit, json } => run_enumerate(&mut out, model, n, limit, json),
        Command::Count { oracle, n } => run_count(&mut out, oracle, n),
        Command::Series { fraction, order, spec, json } => run_series(&mut out, fraction, order, spec, json),
        Command::Verify {
            n_max,
            seed,
            json,
            dellac_upper_offset,
        } => run_verify(&mut out, n_max, seed, json, dellac_upper_offset),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_uppercase_sequence_name() {
        let cli = Cli::try_parse_from(["genocchi", "seq", "H", "--count", "3"]).unwrap();
        assert!(matches!(cli.command, Command::Seq { name: SeqName::UpperH, count: 3, .. }));
    }

    #[test]
    fn hidden_offset_accepts_negative() {
        let cli = Cli::try_parse_from(["genocchi", "verify", "--n-max", "3", "--dellac-upper-offset", "-1"]).unwrap();
        assert!(matches!(cli.command, Command::Verify { dellac_upper_offset: -1, .. }));
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let err = Cli::try_parse_from(["genocchi", "frobnicate"]).err().unwrap();
        assert_eq!(err.exit_code(), 2);
    }
}
