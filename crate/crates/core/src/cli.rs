//! Command-line front end. `run` does all the work and returns the exit
//! code; the `lucaslab` binary only forwards `std::env::args_os`.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::identities::{
    check_record_grid, find, records_csv, records_json, records_text, registry, reports_csv, reports_json,
    reports_text, Binding, CheckReport, Grid, IdentityRecord, Mode, NRange,
};
use crate::ring::{parse_expr, Ctx, RingElem, Var};
use crate::sequences::{lucas_u, lucas_uv_fast, lucas_v, named_term_with, Method, SeqKind, SeqParams};

#[derive(Parser, Debug)]
#[command(name = "lucaslab", version, about = "Exact generalized Lucas sequences and identity checking")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List registered identities.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print terms of a sequence.
    Seq(SeqArgs),
    /// Check identities over a parameter grid.
    Check(CheckArgs),
    /// Time naive against fast-doubling evaluation of an integer sequence.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symbolic,
    Numeric,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Impl {
    Naive,
    Fast,
    Both,
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    /// Sequence kind, e.g. fibonacci, lucasu, chebt, lucaspoly.
    pub kind: String,
    /// Index `n` or inclusive range `a..b`.
    pub range: String,
    /// Argument of polynomial families.
    #[arg(long, allow_hyphen_values = true)]
    pub arg: Option<String>,
    /// `y` for lucasu/lucasv (default symbolic).
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    /// `z` for lucasu/lucasv (default symbolic).
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Work in Q(w) with w^2 = d.
    #[arg(long = "ext-square", allow_hyphen_values = true)]
    pub ext_square: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Identity ids.
    pub ids: Vec<String>,
    /// Check every registered identity.
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    pub mode: ModeArg,
    /// Index range `a..b` or single `n` (default: per identity).
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// Comma-separated values for x, or `sym`.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Same as `--x`, for y.
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, default_value_t = Grid::default().seed)]
    pub seed: u64,
    /// Random points per grid point in numeric mode.
    #[arg(long, default_value_t = Grid::default().samples)]
    pub samples: usize,
    /// Parse bindings in Q(w) with w^2 = d.
    #[arg(long = "ext-square", allow_hyphen_values = true)]
    pub ext_square: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Report zero elapsed time so output is byte-for-byte reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Integer sequence kind: fibonacci, lucas, pell, pelllucas, jacobsthal, jacobsthallucas.
    pub kind: String,
    /// Index to evaluate.
    pub n: u64,
    #[arg(long = "impl", value_enum, default_value_t = Impl::Fast)]
    pub implementation: Impl,
    #[arg(long, default_value_t = 1)]
    pub repeat: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub no_timing: bool,
}

/// Usage errors exit with 2, failing checks with 1.
#[derive(Debug)]
enum Exit {
    Usage(String),
    Failed(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Exit {
    Exit::Usage(e.to_string())
}

pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("bad range '{s}', expected n or a..b");
    match s.find("..") {
        Some(i) => {
            let a = s[..i].trim().parse().map_err(|_| bad())?;
            let b = s[i + 2..].trim().parse().map_err(|_| bad())?;
            Ok((a, b))
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}

fn ctx_for(ext: Option<i64>) -> Ctx {
    ext.map_or(Ctx::RATIONAL, Ctx::with_ext)
}

fn parse_bindings(s: &str, ctx: Ctx) -> Result<Vec<Binding>, Exit> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            if part == "sym" {
                Ok(Binding::Symbolic)
            } else {
                parse_expr(part, ctx).map(Binding::Value).map_err(|e| usage(format!("'{part}': {e}")))
            }
        })
        .collect()
}

#[derive(Serialize)]
struct Term {
    n: i64,
    value: String,
}

fn seq_term(kind: SeqKind, arg: Option<&RingElem>, params: Option<&SeqParams>, n: i64) -> Result<RingElem, Exit> {
    let r = match params {
        Some(p) if n.abs() > 64 => lucas_uv_fast(p, n).map(|(u, v)| if kind == SeqKind::LucasU { u } else { v }),
        Some(p) if kind == SeqKind::LucasU => lucas_u(p, n),
        Some(p) => lucas_v(p, n),
        None => named_term_with(kind, arg, n, Method::Auto),
    };
    r.map_err(usage)
}

fn cmd_seq(a: &SeqArgs, out: &mut dyn Write) -> Result<(), Exit> {
    let kind: SeqKind = a.kind.parse().map_err(usage)?;
    let ctx = ctx_for(a.ext_square);
    let (lo, hi) = parse_range(&a.range).map_err(usage)?;
    if lo > hi {
        return Err(usage(format!("empty range {lo}..{hi}")));
    }
    let arg = match (&a.arg, kind.takes_argument()) {
        (Some(s), true) => Some(parse_expr(s, ctx).map_err(usage)?),
        (None, true) => return Err(usage(format!("{kind} needs --arg"))),
        (Some(_), false) => return Err(usage(format!("{kind} takes no --arg"))),
        (None, false) => None,
    };
    let lucas = matches!(kind, SeqKind::LucasU | SeqKind::LucasV);
    if !lucas && (a.y.is_some() || a.z.is_some()) {
        return Err(usage("--y and --z only apply to lucasu and lucasv"));
    }
    let params = if lucas {
        let get = |s: &Option<String>, v: Var| match s {
            Some(s) if s != "sym" => parse_expr(s, ctx).map_err(usage),
            _ => Ok(ctx.var(v)),
        };
        Some(SeqParams::new(get(&a.y, Var::Y)?, get(&a.z, Var::Z)?))
    } else {
        None
    };
    let mut terms = Vec::new();
    for n in lo..=hi {
        let v = seq_term(kind, arg.as_ref(), params.as_ref(), n)?;
        terms.push(Term { n, value: v.render() });
    }
    match a.format {
        Format::Text => terms.iter().try_for_each(|t| writeln!(out, "{} {}", t.n, t.value)),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&terms).unwrap()),
        Format::Csv => {
            writeln!(out, "n,value").and_then(|_| terms.iter().try_for_each(|t| writeln!(out, "{},{}", t.n, t.value)))
        }
    }
    .map_err(usage)
}

fn build_grid(a: &CheckArgs) -> Result<Grid, Exit> {
    let mut grid = Grid {
        mode: match a.mode {
            ModeArg::Symbolic => Mode::Symbolic,
            ModeArg::Numeric => Mode::Numeric,
            ModeArg::Both => Mode::Both,
        },
        seed: a.seed,
        samples: a.samples,
        ..Grid::default()
    };
    if let Some(s) = &a.n {
        let (lo, hi) = parse_range(s).map_err(usage)?;
        grid.n = Some(NRange::Fixed(lo, hi));
    }
    if let Some(s) = &a.c {
        grid.c = parse_range(s).map_err(usage)?;
    }
    if let Some(s) = &a.m {
        grid.m = parse_range(s).map_err(usage)?;
    }
    let ctx = ctx_for(a.ext_square);
    for (v, s) in [(Var::X, &a.x), (Var::Y, &a.y), (Var::Z, &a.z), (Var::R, &a.r)] {
        if let Some(s) = s {
            let bs = parse_bindings(s, ctx)?;
            if bs.iter().any(|b| matches!(b, Binding::Value(e) if e.is_zero())) {
                return Err(usage(format!("{v} must be nonzero")));
            }
            grid.overrides.insert(v, bs);
        }
    }
    Ok(grid)
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Exit> {
    let records: Vec<&IdentityRecord> = match (a.all, a.ids.is_empty()) {
        (true, true) => registry().iter().collect(),
        (true, false) => return Err(usage("give identity ids or --all, not both")),
        (false, true) => return Err(usage("no identities given (use ids or --all)")),
        (false, false) => a.ids.iter().map(|id| find(id)).collect::<Result<_, _>>().map_err(usage)?,
    };
    let grid = build_grid(a)?;
    let reports: Vec<CheckReport> = {
        use rayon::prelude::*;
        records.par_iter().map(|r| check_record_grid(r, &grid)).collect()
    };
    let reports: Vec<CheckReport> = reports
        .into_iter()
        .map(|mut r| {
            if a.no_timing {
                r.millis = 0;
            }
            r
        })
        .collect();
    let text = match a.format {
        Format::Text => reports_text(&reports),
        Format::Json => reports_json(&reports) + "\n",
        Format::Csv => reports_csv(&reports),
    };
    out.write_all(text.as_bytes()).map_err(usage)?;
    let failing: Vec<&str> = reports.iter().filter(|r| !r.ok()).map(|r| r.id.as_str()).collect();
    let attempted: usize = reports.iter().map(|r| r.attempted).sum();
    let passed: usize = reports.iter().map(|r| r.passed).sum();
    writeln!(err, "{passed}/{attempted} cases passed across {} identities", reports.len()).ok();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Exit::Failed(format!("failing identities: {}", failing.join(", "))))
    }
}

/// Decimal digit count plus the value itself when short, or its first and
/// last eight digits otherwise.
pub fn digest(v: &num_bigint::BigInt) -> (usize, String) {
    let s = v.magnitude().to_string();
    let sign = if v.sign() == num_bigint::Sign::Minus { "-" } else { "" };
    let d = if s.len() <= 16 { format!("{sign}{s}") } else { format!("{sign}{}...{}", &s[..8], &s[s.len() - 8..]) };
    (s.len(), d)
}

#[derive(Serialize)]
struct BenchRow {
    kind: String,
    n: u64,
    implementation: &'static str,
    millis: u64,
    digits: usize,
    digest: String,
}

fn bench_one(kind: SeqKind, n: u64, method: Method, repeat: u32) -> Result<(u64, num_bigint::BigInt), Exit> {
    let n = i64::try_from(n).map_err(usage)?;
    let mut best = u64::MAX;
    let mut value = None;
    for _ in 0..repeat.max(1) {
        let t = Instant::now();
        let v = named_term_with(kind, None, n, method).map_err(usage)?;
        best = best.min(t.elapsed().as_millis() as u64);
        value = Some(v);
    }
    let v = value.unwrap().as_integer().expect("integer sequence");
    Ok((best, v))
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<(), Exit> {
    let kind: SeqKind = a.kind.parse().map_err(usage)?;
    if kind.integer_params().is_none() {
        return Err(usage(format!("bench needs an integer sequence, not {kind}")));
    }
    let methods: &[(Method, &'static str)] = match a.implementation {
        Impl::Naive => &[(Method::Naive, "naive")],
        Impl::Fast => &[(Method::Fast, "fast")],
        Impl::Both => &[(Method::Naive, "naive"), (Method::Fast, "fast")],
    };
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for &(m, name) in methods {
        let (millis, v) = bench_one(kind, a.n, m, a.repeat)?;
        let (digits, digest) = digest(&v);
        rows.push(BenchRow {
            kind: kind.name().to_string(),
            n: a.n,
            implementation: name,
            millis: if a.no_timing { 0 } else { millis },
            digits,
            digest,
        });
        values.push(v);
    }
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Exit::Failed("naive and fast values differ".into()));
    }
    match a.format {
        Format::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "{} n={} impl={} millis={} digits={} value={}",
                    r.kind, r.n, r.implementation, r.millis, r.digits, r.digest
                )
                .map_err(usage)?;
            }
            if rows.len() == 2 {
                writeln!(out, "equal=true").map_err(usage)?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).unwrap()).map_err(usage)?,
        Format::Csv => {
            writeln!(out, "kind,n,impl,millis,digits,digest").map_err(usage)?;
            for r in &rows {
                writeln!(out, "{},{},{},{},{},{}", r.kind, r.n, r.implementation, r.millis, r.digits, r.digest)
                    .map_err(usage)?;
            }
        }
    }
    Ok(())
}

fn cmd_list(format: Format, out: &mut dyn Write) -> Result<(), Exit> {
    let text = match format {
        Format::Text => records_text(registry()),
        Format::Json => records_json(registry()) + "\n",
        Format::Csv => records_csv(registry()),
    };
    out.write_all(text.as_bytes()).map_err(usage)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let res = match &cli.command {
        Command::List { format } => cmd_list(*format, out),
        Command::Seq(a) => cmd_seq(a, out),
        Command::Check(a) => cmd_check(a, out, err),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match res {
        Ok(()) => 0,
        Err(Exit::Failed(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
        Err(Exit::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["lucaslab"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..10"), Ok((0, 10)));
        assert_eq!(parse_range("-4..-4"), Ok((-4, -4)));
        assert_eq!(parse_range("-3..2"), Ok((-3, 2)));
        assert_eq!(parse_range("7"), Ok((7, 7)));
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn digests() {
        assert_eq!(digest(&55.into()), (2, "55".to_string()));
        let big: num_bigint::BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(digest(&big), (30, "12345678...34567890".to_string()));
    }

    #[test]
    fn seq_fibonacci() {
        let (code, out, _) = call(&["seq", "fibonacci", "0..10"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("10 55"));
        assert_eq!(out.lines().count(), 11);
    }

    #[test]
    fn seq_polynomial_and_chebyshev() {
        let (_, out, _) = call(&["seq", "lucaspoly", "--arg", "x", "3"]);
        assert_eq!(out.trim(), "3 x^3 + 3*x");
        let (_, neg, _) = call(&["seq", "chebt", "--arg", "y", "--", "-4..-4"]);
        let (_, pos, _) = call(&["seq", "chebt", "--arg", "y", "4"]);
        assert_eq!(neg.split_once(' ').unwrap().1, pos.split_once(' ').unwrap().1);
    }

    #[test]
    fn seq_usage_errors() {
        assert_eq!(call(&["seq", "nosuch", "3"]).0, 2);
        assert_eq!(call(&["seq", "lucaspoly", "3"]).0, 2);
        assert_eq!(call(&["seq", "fibonacci", "--arg", "x", "3"]).0, 2);
        assert_eq!(call(&["seq", "lucasu", "--y", "2", "--z", "0", "--", "-1"]).0, 2);
        assert_eq!(call(&["seq", "lucasu", "--y", "w", "3"]).0, 2);
    }

    #[test]
    fn seq_lucas_with_params() {
        let (code, out, _) = call(&["seq", "lucasu", "--y", "1", "--z", "-1", "70"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "70 190392490709135");
    }

    #[test]
    fn check_counts_and_exit_codes() {
        let (code, out, _) = call(&["check", "EDG-1", "--n", "0..5", "--x", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("6/6 passed"), "{out}");
        assert_eq!(call(&["check", "NO-SUCH-ID"]).0, 2);
        assert_eq!(call(&["check"]).0, 2);
        assert_eq!(call(&["check", "EDG-1", "--x", "0"]).0, 2);
        assert_eq!(call(&["check", "EDG-1", "--bogus"]).0, 2);
    }

    #[test]
    fn check_json_is_deterministic() {
        let args = ["check", "THM1-A", "--n", "0..3", "--c", "-1..1", "--format", "json", "--no-timing"];
        let (c1, a, _) = call(&args);
        let (c2, b, _) = call(&args);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v[0]["id"], "THM1-A");
    }

    #[test]
    fn list_formats() {
        let (code, out, _) = call(&["list"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), registry().len());
        assert!(out.lines().any(|l| l.starts_with("EDG-1") && l.contains("Edgar")));
        let (_, json, _) = call(&["list", "--format", "json"]);
        assert!(serde_json::from_str::<serde_json::Value>(&json).unwrap().is_array());
    }

    #[test]
    fn bench_small() {
        let (code, out, _) = call(&["bench", "fibonacci", "10", "--impl", "naive"]);
        assert_eq!(code, 0);
        assert!(out.contains("value=55"), "{out}");
        let (_, out, _) = call(&["bench", "fibonacci", "0"]);
        assert!(out.contains("value=0"), "{out}");
        let (code, out, _) = call(&["bench", "lucas", "300", "--impl", "both"]);
        assert_eq!(code, 0);
        assert!(out.contains("equal=true"));
        assert_eq!(call(&["bench", "chebt", "5"]).0, 2);
    }
}
