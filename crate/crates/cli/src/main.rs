//! Command-line front end: evaluate Roman factorials, tabulate and verify
//! the formulations against each other, sample the helper functions and
//! their Fourier approximations, and print the reference tables.
//!
//! Exit codes: 0 on success, 1 when verification finds an unexpected
//! mismatch, 2 on usage errors. Rationals print exactly (`p/q`, or `p` for
//! integers) everywhere except the `fourier` command, which prints decimals
//! with 12 significant digits. No configuration files or environment
//! variables; flags only, so identical invocations produce identical bytes.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use romanfact::exact::{ExactInt, ExactRational};
use romanfact::ff::{Epsilon, FfName};
use romanfact::fourier::{self, FourierConfig};
use romanfact::oracle::{self, VerificationReport};
use romanfact::roman::DefinitionKind;

const USAGE: &str = "usage: romanfact <command> [flags]

commands:
  eval <n> [--def KIND]                          one Roman factorial, exact
  table --from A --to B [--def KIND] [--format FMT]
                                                 a range of values
  verify --from A --to B [--format FMT]          cross-check all formulations
  ff --fn NAME --from X --to Y --step S [--eps E] [--format FMT]
                                                 sample a helper function
  fourier --fn {sawtooth|floor|delta} --terms K --from X --to Y --step S
                                                 sample a Fourier approximation
  patterns                                       output patterns of the helpers
  binary-table                                   helper outputs read as binary

KIND: piecewise | doubly-recursive | unified-recursive | first-gen
      | rising | falling | rising-alt | falling-alt   (default piecewise)
NAME: delta | theta | xi | xi_prime | eta | cap_theta | q | q_prime | psi | phi
FMT:  pretty | csv | tsv | json                        (default pretty)";

/// Largest number of integers a single table/verify invocation may span.
const MAX_RANGE_SPAN: i64 = 100_000;

/// Largest |n| accepted for factorial evaluation; matches the product-limit
/// cap in the library so no formulation can be driven past it.
const MAX_INPUT_MAGNITUDE: i64 = 1_000_000;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let (command, rest) = args.split_first().ok_or("missing command")?;
    match command.as_str() {
        "eval" => cmd_eval(rest),
        "table" => cmd_table(rest),
        "verify" => cmd_verify(rest),
        "ff" => cmd_ff(rest),
        "fourier" => cmd_fourier(rest),
        "patterns" => cmd_patterns(rest),
        "binary-table" => cmd_binary_table(rest),
        other => Err(format!("unknown command \"{other}\"")),
    }
}

// ---------------------------------------------------------------- flags

/// Splits arguments into `--flag value` pairs and bare positionals.
/// Anything that starts with `--` is a flag; a lone `-` or `-4` is a value.
struct Flags {
    pairs: Vec<(String, String)>,
    positionals: Vec<String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Self, String> {
        let mut pairs = Vec::new();
        let mut positionals = Vec::new();
        let mut iter = args.iter();
        while let Some(arg) = iter.next() {
            if let Some(name) = arg.strip_prefix("--") {
                let value = iter
                    .next()
                    .ok_or_else(|| format!("flag --{name} needs a value"))?;
                pairs.push((name.to_owned(), value.clone()));
            } else {
                positionals.push(arg.clone());
            }
        }
        Ok(Flags { pairs, positionals })
    }

    fn take(&mut self, name: &str) -> Option<String> {
        let index = self.pairs.iter().position(|(flag, _)| flag == name)?;
        Some(self.pairs.remove(index).1)
    }

    fn require(&mut self, name: &str) -> Result<String, String> {
        self.take(name).ok_or_else(|| format!("missing --{name}"))
    }

    /// Errors on anything not consumed.
    fn finish(self) -> Result<(), String> {
        if let Some((flag, _)) = self.pairs.first() {
            return Err(format!("unknown flag --{flag}"));
        }
        if let Some(extra) = self.positionals.first() {
            return Err(format!("unexpected argument \"{extra}\""));
        }
        Ok(())
    }
}

fn parse_int(s: &str) -> Result<ExactInt, String> {
    let n = ExactInt::from_str(s).map_err(|_| format!("\"{s}\" is not an integer"))?;
    if n.abs() > ExactInt::from(MAX_INPUT_MAGNITUDE) {
        return Err(format!("|{s}| exceeds the cap of {MAX_INPUT_MAGNITUDE}"));
    }
    Ok(n)
}

fn parse_rat(s: &str) -> Result<ExactRational, String> {
    ExactRational::from_str(s).map_err(|_| format!("\"{s}\" is not a rational number"))
}

fn parse_kind(s: &str) -> Result<DefinitionKind, String> {
    DefinitionKind::from_str(s).map_err(|e| e.to_string())
}

fn parse_epsilon(s: &str) -> Result<Epsilon, String> {
    Epsilon::new(parse_rat(s)?).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Pretty,
    Csv,
    Tsv,
    Json,
}

impl Format {
    fn parse(s: &str) -> Result<Self, String> {
        match s {
            "pretty" => Ok(Format::Pretty),
            "csv" => Ok(Format::Csv),
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format \"{other}\"")),
        }
    }

    fn delimiter(self) -> char {
        match self {
            Format::Csv => ',',
            Format::Tsv => '\t',
            _ => unreachable!("delimiter only for csv/tsv"),
        }
    }
}

fn take_format(flags: &mut Flags) -> Result<Format, String> {
    match flags.take("format") {
        Some(s) => Format::parse(&s),
        None => Ok(Format::Pretty),
    }
}

/// Ensures `from <= to` and the span stays within the runtime cap.
fn check_span(from: &ExactInt, to: &ExactInt) -> Result<(), String> {
    if from > to {
        return Err(format!("--from {from} exceeds --to {to}"));
    }
    let span = &(to - from) + &ExactInt::one();
    if span > ExactInt::from(MAX_RANGE_SPAN) {
        return Err(format!("range spans more than {MAX_RANGE_SPAN} integers"));
    }
    Ok(())
}

// ------------------------------------------------------------- commands

fn cmd_eval(args: &[String]) -> Result<ExitCode, String> {
    let mut flags = Flags::parse(args)?;
    let kind = match flags.take("def") {
        Some(s) => parse_kind(&s)?,
        None => DefinitionKind::PiecewiseClosed,
    };
    if flags.positionals.len() != 1 {
        return Err("eval takes exactly one integer".into());
    }
    let n = parse_int(&flags.positionals.remove(0))?;
    flags.finish()?;
    println!("{}", kind.evaluate(&n));
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: &[String]) -> Result<ExitCode, String> {
    let mut flags = Flags::parse(args)?;
    let from = parse_int(&flags.require("from")?)?;
    let to = parse_int(&flags.require("to")?)?;
    let kind = match flags.take("def") {
        Some(s) => parse_kind(&s)?,
        None => DefinitionKind::PiecewiseClosed,
    };
    let format = take_format(&mut flags)?;
    flags.finish()?;
    check_span(&from, &to)?;

    let rows: Vec<(ExactInt, ExactRational)> = from
        .range_inclusive(&to)
        .map(|n| {
            let value = kind.evaluate(&n);
            (n, value)
        })
        .collect();

    match format {
        Format::Pretty => {
            for (n, value) in &rows {
                println!("{n} -> {value}");
            }
        }
        Format::Csv | Format::Tsv => {
            let d = format.delimiter();
            println!("n{d}{kind}");
            for (n, value) in &rows {
                println!("{n}{d}{value}");
            }
        }
        Format::Json => {
            let mut body = String::new();
            for (i, (n, value)) in rows.iter().enumerate() {
                if i > 0 {
                    body.push(',');
                }
                let _ = write!(body, "{{\"n\":\"{n}\",\"value\":\"{value}\"}}");
            }
            println!("{{\"kind\":\"{kind}\",\"rows\":[{body}]}}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &[String]) -> Result<ExitCode, String> {
    let mut flags = Flags::parse(args)?;
    let from = parse_int(&flags.require("from")?)?;
    let to = parse_int(&flags.require("to")?)?;
    let format = take_format(&mut flags)?;
    flags.finish()?;
    check_span(&from, &to)?;

    let report = oracle::verify_range(&from, &to).map_err(|e| e.to_string())?;
    print_report(&report, format);
    if report.all_agreeing() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn print_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Pretty => {
            let status = if report.all_agreeing() {
                "all formulations agree (documented discrepancies aside)"
            } else {
                "UNEXPECTED MISMATCHES FOUND"
            };
            println!(
                "verified n in [{}, {}]: {} rows, {status}",
                report.from,
                report.to,
                report.rows.len()
            );
            for row in report.rows.iter().filter(|row| !row.agreeing) {
                let kinds: Vec<&str> = row
                    .mismatched_kinds
                    .iter()
                    .map(|kind| kind.as_str())
                    .collect();
                println!("  unexpected mismatch at n = {}: {}", row.n, kinds.join(", "));
            }
            println!("known discrepancies: {}", report.known_discrepancies.len());
            for d in &report.known_discrepancies {
                println!(
                    "  {} at n = {}: expected {}, got {}",
                    d.kind, d.n, d.expected, d.got
                );
            }
        }
        Format::Csv | Format::Tsv => {
            let d = format.delimiter();
            let mut header = String::from("n");
            for kind in DefinitionKind::ALL {
                let _ = write!(header, "{d}{kind}");
            }
            let _ = write!(header, "{d}agreeing{d}mismatched");
            println!("{header}");
            for row in &report.rows {
                let mut line = row.n.to_string();
                for (_, value) in &row.values {
                    let _ = write!(line, "{d}{value}");
                }
                let kinds: Vec<&str> = row
                    .mismatched_kinds
                    .iter()
                    .map(|kind| kind.as_str())
                    .collect();
                let _ = write!(line, "{d}{}{d}{}", row.agreeing, kinds.join(";"));
                println!("{line}");
            }
        }
        Format::Json => {
            let mut rows_json = String::new();
            for (i, row) in report.rows.iter().enumerate() {
                if i > 0 {
                    rows_json.push(',');
                }
                let mut values = String::new();
                for (j, (kind, value)) in row.values.iter().enumerate() {
                    if j > 0 {
                        values.push(',');
                    }
                    let _ = write!(values, "\"{kind}\":\"{value}\"");
                }
                let kinds: Vec<String> = row
                    .mismatched_kinds
                    .iter()
                    .map(|kind| format!("\"{kind}\""))
                    .collect();
                let _ = write!(
                    rows_json,
                    "{{\"n\":\"{}\",\"values\":{{{values}}},\"agreeing\":{},\"mismatched_kinds\":[{}]}}",
                    row.n,
                    row.agreeing,
                    kinds.join(",")
                );
            }
            let mut known = String::new();
            for (i, disc) in report.known_discrepancies.iter().enumerate() {
                if i > 0 {
                    known.push(',');
                }
                let _ = write!(
                    known,
                    "{{\"kind\":\"{}\",\"n\":\"{}\",\"expected\":\"{}\",\"got\":\"{}\"}}",
                    disc.kind, disc.n, disc.expected, disc.got
                );
            }
            println!(
                "{{\"from\":\"{}\",\"to\":\"{}\",\"agreeing\":{},\"rows\":[{rows_json}],\"known_discrepancies\":[{known}]}}",
                report.from,
                report.to,
                report.all_agreeing()
            );
        }
    }
}

fn cmd_ff(args: &[String]) -> Result<ExitCode, String> {
    let mut flags = Flags::parse(args)?;
    let name = FfName::from_str(&flags.require("fn")?).map_err(|e| e.to_string())?;
    let from = parse_rat(&flags.require("from")?)?;
    let to = parse_rat(&flags.require("to")?)?;
    let step = parse_rat(&flags.require("step")?)?;
    let eps = match flags.take("eps") {
        Some(s) => parse_epsilon(&s)?,
        None => Epsilon::half(),
    };
    let format = take_format(&mut flags)?;
    flags.finish()?;
    if !step.is_positive() {
        return Err("--step must be positive".into());
    }

    let mut rows: Vec<(ExactRational, ExactRational)> = Vec::new();
    let mut x = from;
    while x <= to {
        let value = name.eval(&x, &eps);
        rows.push((x.clone(), value));
        x = &x + &step;
    }

    match format {
        Format::Pretty => {
            for (x, value) in &rows {
                println!("{x} {value}");
            }
        }
        Format::Csv | Format::Tsv => {
            let d = format.delimiter();
            println!("x{d}{name}");
            for (x, value) in &rows {
                println!("{x}{d}{value}");
            }
        }
        Format::Json => {
            let mut body = String::new();
            for (i, (x, value)) in rows.iter().enumerate() {
                if i > 0 {
                    body.push(',');
                }
                let _ = write!(body, "{{\"x\":\"{x}\",\"value\":\"{value}\"}}");
            }
            println!("{{\"fn\":\"{name}\",\"rows\":[{body}]}}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_fourier(args: &[String]) -> Result<ExitCode, String> {
    let mut flags = Flags::parse(args)?;
    let name = flags.require("fn")?;
    let terms: u32 = flags
        .require("terms")?
        .parse()
        .map_err(|_| "--terms must be a positive integer".to_owned())?;
    let from: f64 = flags
        .require("from")?
        .parse()
        .map_err(|_| "--from must be a number".to_owned())?;
    let to: f64 = flags
        .require("to")?
        .parse()
        .map_err(|_| "--to must be a number".to_owned())?;
    let step: f64 = flags
        .require("step")?
        .parse()
        .map_err(|_| "--step must be a number".to_owned())?;
    flags.finish()?;
    if !(step > 0.0 && step.is_finite()) {
        return Err("--step must be positive".into());
    }
    if !from.is_finite() || !to.is_finite() {
        return Err("--from and --to must be finite".into());
    }
    let cfg = FourierConfig::with_terms(terms).map_err(|e| e.to_string())?;
    let sample: fn(f64, &FourierConfig) -> Result<f64, fourier::FourierError> = match name.as_str()
    {
        "sawtooth" => fourier::sawtooth_fourier,
        "floor" => fourier::floor_fourier,
        "delta" => fourier::delta_fourier,
        other => return Err(format!("unknown fourier function \"{other}\"")),
    };

    let mut i: u64 = 0;
    loop {
        let x = from + (i as f64) * step;
        if x > to + step * 1e-9 {
            break;
        }
        let value = sample(x, &cfg).map_err(|e| e.to_string())?;
        println!("{} {}", format_significant(x, 12), format_significant(value, 12));
        i += 1;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_patterns(args: &[String]) -> Result<ExitCode, String> {
    Flags::parse(args)?.finish()?;
    for (name, pattern) in oracle::ff_pattern_table(&Epsilon::half()) {
        println!("{name} {pattern}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_binary_table(args: &[String]) -> Result<ExitCode, String> {
    Flags::parse(args)?.finish()?;
    for row in oracle::ff_binary_table(&Epsilon::half()) {
        println!("{} {} {}", row.expression, row.bits_string(), row.decimal);
    }
    Ok(ExitCode::SUCCESS)
}

/// Decimal rendering with `digits` significant digits, trailing zeros
/// trimmed.
fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_owned();
    }
    s
}
