//! `dstir`: exact tables, series, and identity verification for the
//! degenerate Stirling number families.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 identity/limit failure, 2 usage error. Output is deterministic:
//! identical invocations produce identical bytes.

mod output;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dstir_core::exactalg::{parse_rational, render_rat, render_value, LambdaPoly, Rat};
use dstir_core::identities::{check, CheckMode, IdentityId, IdentityReport};
use dstir_core::numbers::{r_stirling2_from, StirlingKind, Triangle};
use dstir_core::ring::Ring;
use dstir_core::series::{deg_exp, deg_log, exp_series, t_over_one_minus_t, TruncatedSeries};

use output::{write_json, Format, Table};

#[derive(Parser)]
#[command(
    name = "dstir",
    version,
    about = "Exact degenerate Stirling number tables, series, and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit one triangle as (n, k, value) rows.
    Table {
        /// Family: s1, s2, us1, lah, or rs2 (rs2 needs --r).
        #[arg(long)]
        kind: TableKind,
        /// Largest row index n.
        #[arg(long)]
        nmax: usize,
        /// Evaluate entries at this rational λ ("p/q" or integer)
        /// instead of printing λ-polynomials.
        #[arg(long, value_parser = parse_rat_arg)]
        lambda: Option<Rat>,
        /// Shift parameter for rs2: rows are the shifted entries
        /// indexed by (n, k).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run identity checks and report pass/fail with counterexamples.
    Verify {
        /// "all" or a comma-separated list of identity names (e.g.
        /// "T1,T13probe,RT_exp_log").
        #[arg(long, default_value = "all")]
        ids: String,
        /// Largest row index n scanned by each check.
        #[arg(long)]
        nmax: usize,
        /// defaults = per-identity mode; symbolic / sampled force one.
        #[arg(long, value_enum, default_value_t = ModeArg::Defaults)]
        mode: ModeArg,
        /// Seed extending the sampled λ grid (DSTIR_SEED overrides).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Emit series coefficients as (n, [t^n], n!·[t^n]) rows.
    Series {
        /// eexp = degenerate exponential, elog = degenerate logarithm,
        /// bell = exp(x(e_λ(t)-1)), lahgf = exp(x·t/(1-t)).
        #[arg(long)]
        which: SeriesWhich,
        /// Truncation order.
        #[arg(long)]
        order: usize,
        /// Evaluate coefficients at this rational λ instead of printing
        /// λ-polynomials (lahgf is λ-free either way).
        #[arg(long, value_parser = parse_rat_arg)]
        lambda: Option<Rat>,
        /// Rational parameter x for eexp, bell, and lahgf (default 1).
        #[arg(long, value_parser = parse_rat_arg)]
        x: Option<Rat>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare λ = 0 specializations against the classical triangles.
    Limit {
        /// Family: s1 or s2.
        #[arg(long)]
        kind: LimitKind,
        /// Largest row index n.
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    S1,
    S2,
    Us1,
    Lah,
    Rs2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesWhich {
    Eexp,
    Elog,
    Bell,
    Lahgf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Defaults,
    Symbolic,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LimitKind {
    S1,
    S2,
}

fn parse_rat_arg(s: &str) -> Result<Rat, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Table {
            kind,
            nmax,
            lambda,
            r,
            format,
        } => cmd_table(kind, nmax, lambda, r, format, &mut out),
        Command::Verify {
            ids,
            nmax,
            mode,
            seed,
            format,
        } => cmd_verify(&ids, nmax, mode, seed, format, &mut out),
        Command::Series {
            which,
            order,
            lambda,
            x,
            format,
        } => cmd_series(which, order, lambda, x, format, &mut out),
        Command::Limit { kind, nmax, format } => cmd_limit(kind, nmax, format, &mut out),
    }
}

fn cmd_table(
    kind: TableKind,
    nmax: usize,
    lambda: Option<Rat>,
    r: Option<usize>,
    format: Format,
    out: &mut impl std::io::Write,
) -> Result<u8, String> {
    let entry: Box<dyn Fn(usize, usize) -> LambdaPoly> = match kind {
        TableKind::Rs2 => {
            let r = r.ok_or("--kind rs2 requires --r")?;
            let s2 = Triangle::build(StirlingKind::S2Lambda, nmax);
            Box::new(move |n, k| r_stirling2_from(&s2, n, k, r))
        }
        _ => {
            if r.is_some() {
                return Err(String::from("--r only applies to --kind rs2"));
            }
            let family = match kind {
                TableKind::S1 => StirlingKind::S1Lambda,
                TableKind::S2 => StirlingKind::S2Lambda,
                TableKind::Us1 => StirlingKind::UnsignedS1Lambda,
                TableKind::Lah => StirlingKind::Lah,
                TableKind::Rs2 => unreachable!(),
            };
            let triangle = Triangle::build(family, nmax);
            Box::new(move |n, k| triangle.get(n, k))
        }
    };

    let mut table = Table::new(vec!["n", "k", "value"]);
    let mut json_rows = Vec::new();
    for n in 0..=nmax {
        for k in 0..=n {
            let value = render_value(&entry(n, k), lambda.as_ref());
            if format == Format::Json {
                json_rows.push(json!({"n": n, "k": k, "value": value}));
            } else {
                table.push(vec![n.to_string(), k.to_string(), value]);
            }
        }
    }
    emit(format, table, Value::Array(json_rows), out)?;
    Ok(0)
}

fn cmd_verify(
    ids: &str,
    nmax: usize,
    mode: ModeArg,
    seed: u64,
    format: Format,
    out: &mut impl std::io::Write,
) -> Result<u8, String> {
    let seed = match std::env::var("DSTIR_SEED") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| format!("DSTIR_SEED must be an unsigned integer, got {v:?}"))?,
        Err(_) => seed,
    };

    let selected: Vec<IdentityId> = if ids.trim() == "all" {
        IdentityId::ALL.to_vec()
    } else {
        let mut set = BTreeSet::new();
        for raw in ids.split(',') {
            let name = raw.trim();
            let id =
                IdentityId::parse(name).ok_or_else(|| format!("unknown identity id {name:?}"))?;
            set.insert(id);
        }
        // aggregation order is by identity, not input order
        IdentityId::ALL
            .iter()
            .copied()
            .filter(|id| set.contains(id))
            .collect()
    };

    let reports: Vec<IdentityReport> = selected
        .iter()
        .map(|&id| {
            let mode = match mode {
                ModeArg::Defaults => id.default_mode(seed),
                ModeArg::Symbolic => CheckMode::Symbolic,
                ModeArg::Sampled => CheckMode::sampled(seed),
            };
            check(id, nmax, mode)
        })
        .collect();

    let all_ok = reports.iter().all(IdentityReport::as_expected);

    if format == Format::Json {
        let rows: Vec<Value> = reports.iter().map(report_json).collect();
        write_json(&Value::Array(rows), out).map_err(|e| e.to_string())?;
    } else {
        let mut table = Table::new(vec![
            "id",
            "mode",
            "n_max",
            "status",
            "expected_fail",
            "params",
            "lhs",
            "rhs",
        ]);
        for r in &reports {
            let (params, lhs, rhs) = match &r.counterexample {
                Some(ce) => (
                    ce.params
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                    ce.lhs.clone(),
                    ce.rhs.clone(),
                ),
                None => (String::new(), String::new(), String::new()),
            };
            table.push(vec![
                r.id.name().to_string(),
                r.mode.label().to_string(),
                r.n_max.to_string(),
                if r.pass { "pass" } else { "fail" }.to_string(),
                r.id.expected_fail().to_string(),
                params,
                lhs,
                rhs,
            ]);
        }
        emit(format, table, Value::Null, out)?;
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn report_json(r: &IdentityReport) -> Value {
    let mut record = json!({
        "id": r.id.name(),
        "mode": r.mode.label(),
        "n_max": r.n_max,
        "r_max": r.r_max,
        "status": if r.pass { "pass" } else { "fail" },
        "expected_fail": r.id.expected_fail(),
    });
    if let Some(ce) = &r.counterexample {
        let params: serde_json::Map<String, Value> = ce
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
            .collect();
        record["counterexample"] = json!({
            "params": params,
            "lhs": ce.lhs,
            "rhs": ce.rhs,
        });
    }
    record
}

fn cmd_series(
    which: SeriesWhich,
    order: usize,
    lambda: Option<Rat>,
    x: Option<Rat>,
    format: Format,
    out: &mut impl std::io::Write,
) -> Result<u8, String> {
    let x = x.unwrap_or_else(|| dstir_core::exactalg::rat_int(1));
    let mut table = Table::new(vec!["n", "coeff", "egf"]);
    let mut json_rows = Vec::new();
    let mut push = |n: usize, coeff: String, egf: String| {
        if format == Format::Json {
            json_rows.push(json!({"n": n, "coeff": coeff, "egf": egf}));
        } else {
            table.push(vec![n.to_string(), coeff, egf]);
        }
    };

    match lambda {
        Some(lam) => {
            let s = numeric_series(which, order, &x, &lam);
            for n in 0..=order {
                push(n, render_rat(&s.coeff(n)), render_rat(&s.egf_coeff(n)));
            }
        }
        None => {
            let s = symbolic_series(which, order, &x);
            for n in 0..=order {
                push(n, s.coeff(n).to_string(), s.egf_coeff(n).to_string());
            }
        }
    }
    emit(format, table, Value::Array(json_rows), out)?;
    Ok(0)
}

fn symbolic_series(which: SeriesWhich, order: usize, x: &Rat) -> TruncatedSeries<LambdaPoly> {
    let lam = LambdaPoly::lambda();
    match which {
        SeriesWhich::Eexp => deg_exp(&LambdaPoly::constant(x.clone()), &lam, order),
        SeriesWhich::Elog => deg_log(&lam, order),
        SeriesWhich::Bell => {
            let g = deg_exp(&LambdaPoly::one(), &lam, order)
                .sub(&TruncatedSeries::one(order))
                .scale_rat(x);
            exp_series(&g).expect("zero constant term")
        }
        SeriesWhich::Lahgf => {
            let g = t_over_one_minus_t::<LambdaPoly>(order).scale_rat(x);
            exp_series(&g).expect("zero constant term")
        }
    }
}

fn numeric_series(which: SeriesWhich, order: usize, x: &Rat, lam: &Rat) -> TruncatedSeries<Rat> {
    match which {
        SeriesWhich::Eexp => deg_exp(x, lam, order),
        SeriesWhich::Elog => deg_log(lam, order),
        SeriesWhich::Bell => {
            let g = deg_exp(&Ring::one(), lam, order)
                .sub(&TruncatedSeries::one(order))
                .scale_rat(x);
            exp_series(&g).expect("zero constant term")
        }
        SeriesWhich::Lahgf => {
            let g = t_over_one_minus_t::<Rat>(order).scale_rat(x);
            exp_series(&g).expect("zero constant term")
        }
    }
}

fn cmd_limit(
    kind: LimitKind,
    nmax: usize,
    format: Format,
    out: &mut impl std::io::Write,
) -> Result<u8, String> {
    let (deg_kind, classical_kind) = match kind {
        LimitKind::S1 => (StirlingKind::S1Lambda, StirlingKind::S1Classical),
        LimitKind::S2 => (StirlingKind::S2Lambda, StirlingKind::S2Classical),
    };
    let deg = Triangle::build(deg_kind, nmax);
    let classical = Triangle::build(classical_kind, nmax);
    let zero = dstir_core::exactalg::rat_int(0);

    let mut all_match = true;
    let mut table = Table::new(vec!["n", "k", "lambda0", "classical", "match"]);
    let mut json_rows = Vec::new();
    for n in 0..=nmax {
        for k in 0..=n {
            let at_zero = deg.get(n, k).eval(&zero);
            let reference = classical.get(n, k).constant_term();
            let matches = at_zero == reference;
            all_match &= matches;
            if format == Format::Json {
                json_rows.push(json!({
                    "n": n,
                    "k": k,
                    "lambda0": render_rat(&at_zero),
                    "classical": render_rat(&reference),
                    "match": matches,
                }));
            } else {
                table.push(vec![
                    n.to_string(),
                    k.to_string(),
                    render_rat(&at_zero),
                    render_rat(&reference),
                    matches.to_string(),
                ]);
            }
        }
    }
    emit(format, table, Value::Array(json_rows), out)?;
    Ok(if all_match { 0 } else { 1 })
}

fn emit(
    format: Format,
    table: Table,
    json: Value,
    out: &mut impl std::io::Write,
) -> Result<(), String> {
    let result = match format {
        Format::Csv => table.write_csv(out),
        Format::Pretty => table.write_pretty(out),
        Format::Json => write_json(&json, out),
    };
    result.map_err(|e| e.to_string())
}
