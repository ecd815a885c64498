//! `starcob`: build the star algebras, verify their A∞ structures and the
//! cobar duality, and tabulate Hochschild cohomology.
//!
//! Exit codes: 0 success, 1 violations found, 2 configuration error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use starcob_core::ainfty::{check_ainfty, nonzero_ops, op_grading_check, AInfinity, StarA, StarB, SweepConfig};
use starcob_core::barcobar::{
    chained_strings, homotopy_defect, phi, render_elem, render_string, verify_homotopy, CobElem, CobarA, CobarB,
    HomotopyReport, HomotopyVariant, KoszulPair,
};
use starcob_core::gradegroup::{admissible_arities, check_multiplicativity};
use starcob_core::hochschild::{CohomologyCell, ModelA, ModelB, PairModel};
use starcob_core::staralg::{var_grading, AlgebraKind, PathAlgebra, A0, B0};
use starcob_core::{Error, Exec};

const SCHEMA: &str = "starcob/1";

#[derive(Parser, Debug)]
#[command(name = "starcob", version, about = "Star algebras, their A-infinity deformations and Hochschild cohomology")]
struct Cli {
    /// Number of points N (must be > 2).
    #[arg(long = "n", global = true, default_value_t = 3)]
    n: usize,
    /// Largest arity for relation sweeps [default: 2N+2 for A, N+2 for B].
    #[arg(long, global = true)]
    max_arity: Option<usize>,
    /// Bound on total length [default depends on the command].
    #[arg(long, global = true)]
    max_len: Option<u32>,
    /// Largest exponent of the coefficient variable in cohomology slices
    /// [default: smallest complete value].
    #[arg(long, global = true)]
    trunc: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Deliberate fault: `drop-mu2N[:k]` removes the k-th centered μ_2N
    /// component, `no-leading-block` breaks the homotopy operator.
    #[arg(long, global = true)]
    inject_fault: Option<String>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    A,
    B,
}

impl Side {
    fn kind(self) -> AlgebraKind {
        match self {
            Side::A => AlgebraKind::A0,
            Side::B => AlgebraKind::B0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    AinftyA,
    AinftyB,
    Homotopy,
    Grading,
    Arities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DumpKind {
    Basis,
    Strings,
    Ops,
    Cocycle,
    Sample,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators, grading tables and basis counts of A₀ and B₀.
    Build,
    /// Run a verification sweep; exit 1 on any violation.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        /// Check this many random strings of length exactly --max-len
        /// (homotopy only) in addition to the exhaustive sweep.
        #[arg(long)]
        samples: Option<usize>,
        /// Mirror statement (tCob(B₀) against A₀) for `homotopy`.
        #[arg(long)]
        mirror: bool,
    },
    /// Table of dim H^{n,j} for 2 < n ≤ n-max.
    Cohomology {
        #[arg(long, value_enum, default_value_t = Side::A)]
        algebra: Side,
        #[arg(long, allow_hyphen_values = true, default_value_t = -2)]
        j: i64,
        /// Largest n [default: 3N].
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Diagnostic listings.
    Dump {
        #[arg(value_enum)]
        what: DumpKind,
        #[arg(long, value_enum, default_value_t = Side::A)]
        algebra: Side,
    },
}

/// A configuration error (exit 2).
#[derive(Debug)]
struct ConfigError(String);

impl From<Error> for ConfigError {
    fn from(e: Error) -> Self {
        ConfigError(e.to_string())
    }
}

/// What a command produced: text for stdout plus whether it found violations.
struct Report {
    out: String,
    violations: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(r) => {
            print!("{}", r.out);
            ExitCode::from(u8::from(r.violations))
        }
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `STARCOB_THREADS` caps the worker pool.
fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("STARCOB_THREADS") else {
        return Ok(());
    };
    let k: usize = v.parse().map_err(|_| format!("STARCOB_THREADS must be a positive integer, got {v:?}"))?;
    if k == 0 {
        return Err("STARCOB_THREADS must be positive".into());
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(k).build_global().map_err(|e| e.to_string())?;
    Ok(())
}

fn run(cli: &Cli) -> Result<Report, ConfigError> {
    if cli.n < 3 {
        return Err(Error::InvalidN(cli.n).into());
    }
    let fault = Fault::parse(cli.inject_fault.as_deref(), cli.n)?;
    match &cli.cmd {
        Command::Build => cmd_build(cli),
        Command::Verify { kind, samples, mirror } => cmd_verify(cli, *kind, *samples, *mirror, fault),
        Command::Cohomology { algebra, j, n_max } => cmd_cohomology(cli, *algebra, *j, *n_max),
        Command::Dump { what, algebra } => cmd_dump(cli, *what, *algebra),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Fault {
    None,
    DropMu(usize),
    NoLeadingBlock,
}

impl Fault {
    fn parse(s: Option<&str>, n: usize) -> Result<Fault, ConfigError> {
        let Some(s) = s else { return Ok(Fault::None) };
        if s == "no-leading-block" {
            return Ok(Fault::NoLeadingBlock);
        }
        let rest = s
            .strip_prefix("drop-mu2N")
            .ok_or_else(|| ConfigError(format!("unknown fault {s:?} (expected drop-mu2N[:k] or no-leading-block)")))?;
        let k = match rest.strip_prefix(':') {
            None if rest.is_empty() => 0,
            Some(k) => k.parse::<usize>().map_err(|_| ConfigError(format!("bad rotation index in {s:?}")))?,
            None => return Err(ConfigError(format!("unknown fault {s:?}"))),
        };
        if k >= 2 * n {
            return Err(ConfigError(format!("rotation index {k} out of range 0..{}", 2 * n)));
        }
        Ok(Fault::DropMu(k))
    }
}

fn envelope(command: &str, n: usize, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command, "n": n });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    v
}

fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("serializable"))
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn cmd_build(cli: &Cli) -> Result<Report, ConfigError> {
    let n = cli.n;
    let a = A0::new(n)?;
    let b = B0::new(n)?;
    let max_len = cli.max_len.unwrap_or(4 * n as u32);
    let gens_a: Vec<_> = a.words_of_len(1);
    let gens_b: Vec<_> = b.words_of_len(1);
    let gen_rows = |alg: &dyn Fn() -> Vec<(String, i64, Vec<i64>, i64)>| alg();
    let rows_a = gen_rows(&|| {
        gens_a.iter().map(|&w| (a.render(w), a.grading(w).m, a.grading(w).alex, a.grading(w).len)).collect()
    });
    let rows_b = gen_rows(&|| {
        gens_b.iter().map(|&w| (b.render(w), b.grading(w).m, b.grading(w).alex, b.grading(w).len)).collect()
    });
    let vars: Vec<(String, i64, Vec<i64>, i64)> = [0, n + 1]
        .iter()
        .map(|&v| {
            let g = var_grading(n, v).expect("graded variable");
            (format!("V{v}"), g.m, g.alex, g.len)
        })
        .collect();
    let counts = |f: &dyn Fn(u32) -> usize| (0..=max_len).map(f).collect::<Vec<_>>();
    let counts_a = counts(&|l| a.words_of_len(l).len());
    let counts_b = counts(&|l| b.words_of_len(l).len());

    let out = match cli.format {
        Format::Json => {
            let table = |rows: &[(String, i64, Vec<i64>, i64)]| {
                rows.iter().map(|(w, m, al, l)| json!({"word": w, "m": m, "alexander": al, "len": l})).collect::<Vec<_>>()
            };
            pretty(&envelope(
                "build",
                n,
                json!({
                    "A0": {"generators": table(&rows_a), "basis_counts": counts_a},
                    "B0": {"generators": table(&rows_b), "basis_counts": counts_b},
                    "variables": table(&vars),
                }),
            ))
        }
        Format::Csv => {
            let mut s = String::from("table,algebra,name,m,alexander,len\n");
            for (alg, rows) in [("A0", &rows_a), ("B0", &rows_b), ("R", &vars)] {
                for (w, m, al, l) in rows.iter() {
                    let al: Vec<String> = al.iter().map(i64::to_string).collect();
                    let _ = writeln!(s, "grading,{alg},{w},{m},{},{l}", al.join(" "));
                }
            }
            for (alg, cs) in [("A0", &counts_a), ("B0", &counts_b)] {
                for (l, c) in cs.iter().enumerate() {
                    let _ = writeln!(s, "count,{alg},len{l},,,{c}");
                }
            }
            s
        }
        Format::Text => {
            let mut s = format!("N = {n}\n");
            for (title, rows) in [("A0 generators", &rows_a), ("B0 generators", &rows_b), ("variables", &vars)] {
                let _ = writeln!(s, "{title} ({}):", rows.len());
                for (w, m, al, l) in rows.iter() {
                    let _ = writeln!(s, "  {w:<6} m={m:<4} len={l:<3} A={al:?}");
                }
            }
            for (alg, cs) in [("A0", &counts_a), ("B0", &counts_b)] {
                let cs: Vec<String> = cs.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "{alg} basis words by length 0..={max_len}: {}", cs.join(" "));
            }
            s
        }
    };
    Ok(Report { out, violations: false })
}

fn cmd_verify(
    cli: &Cli,
    kind: VerifyKind,
    samples: Option<usize>,
    mirror: bool,
    fault: Fault,
) -> Result<Report, ConfigError> {
    let n = cli.n;
    match kind {
        VerifyKind::AinftyA => {
            let s = match fault {
                Fault::DropMu(k) => StarA::with_dropped(n, vec![k])?,
                _ => StarA::new(n)?,
            };
            let cfg = SweepConfig::new(cli.max_arity.unwrap_or(2 * n + 2), cli.max_len.unwrap_or(4 * n as u32));
            Ok(relation_report(cli, "verify ainfty-a", &s, cfg))
        }
        VerifyKind::AinftyB => {
            let s = StarB::new(n)?;
            let cfg = SweepConfig::new(cli.max_arity.unwrap_or(n + 2), cli.max_len.unwrap_or(3 * n as u32));
            Ok(relation_report(cli, "verify ainfty-b", &s, cfg))
        }
        VerifyKind::Homotopy => {
            let variant = match fault {
                Fault::NoLeadingBlock => HomotopyVariant::NoLeadingBlock,
                _ => HomotopyVariant::Standard,
            };
            let max_len = cli.max_len.unwrap_or(8);
            if mirror {
                Ok(homotopy_report(cli, &CobarB::new(n)?, max_len, variant, samples))
            } else {
                Ok(homotopy_report(cli, &CobarA::new(n)?, max_len, variant, samples))
            }
        }
        VerifyKind::Grading => grading_report(cli),
        VerifyKind::Arities => arities_report(cli),
    }
}

fn relation_report<S: AInfinity>(cli: &Cli, command: &str, s: &S, cfg: SweepConfig) -> Report {
    let r = check_ainfty(s, cfg);
    let mut out = String::new();
    for v in &r.violations {
        out += &json_line(&json!({"schema": SCHEMA, "violation": v}));
    }
    let summary = json!({
        "max_arity": cfg.max_arity,
        "max_len": cfg.max_total_len,
        "arities": r.arities,
        "tuples": r.tuples,
        "violations": r.violations.len(),
    });
    out += &summary_line(cli, command, summary);
    Report { out, violations: !r.violations.is_empty() }
}

fn summary_line(cli: &Cli, command: &str, body: Value) -> String {
    let v = envelope(command, cli.n, body);
    match cli.format {
        Format::Json => json_line(&v),
        Format::Csv => {
            let Value::Object(m) = &v else { unreachable!() };
            let keys: Vec<&String> = m.keys().collect();
            let vals: Vec<String> = m
                .values()
                .map(|x| match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string().replace(',', " "),
                })
                .collect();
            format!("{}\n{}\n", keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(","), vals.join(","))
        }
        Format::Text => {
            let Value::Object(m) = &v else { unreachable!() };
            let parts: Vec<String> =
                m.iter().filter(|(k, _)| *k != "schema").map(|(k, x)| format!("{k}={x}")).collect();
            format!("{}\n", parts.join(" "))
        }
    }
}

/// A random chained string with total length exactly `len`.
fn random_string<A: PathAlgebra>(alg: &A, len: u32, rng: &mut ChaCha8Rng) -> Vec<A::Word> {
    let mut v = rng.gen_range(1..=alg.rank()) as u16;
    let mut left = len;
    let mut out = Vec::new();
    while left > 0 {
        let l = rng.gen_range(1..=left);
        let choices = alg.words_from(v, l);
        let w = choices[rng.gen_range(0..choices.len())];
        v = alg.final_(w);
        out.push(w);
        left -= l;
    }
    out
}

fn homotopy_report<P: KoszulPair>(
    cli: &Cli,
    p: &P,
    max_len: u32,
    variant: HomotopyVariant,
    samples: Option<usize>,
) -> Report {
    let mut r: HomotopyReport = verify_homotopy(p, max_len, variant, Exec::Parallel);
    let mut sampled = 0;
    if let Some(k) = samples {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        for _ in 0..k {
            let s = random_string(p.x(), max_len, &mut rng);
            sampled += 1;
            if !homotopy_defect(p, &s, variant).is_zero() {
                r.failures.push(render_string(p, &s));
            }
        }
    }
    let mut out = String::new();
    for f in &r.failures {
        out += &json_line(&json!({"schema": SCHEMA, "violation": {"string": f}}));
    }
    let body = json!({
        "algebra": p.x().kind().to_string(),
        "max_len": max_len,
        "strings": r.strings,
        "sampled": sampled,
        "seed": cli.seed,
        "violations": r.failures.len(),
    });
    out += &summary_line(cli, "verify homotopy", body);
    Report { out, violations: !r.holds() }
}

fn grading_report(cli: &Cli) -> Result<Report, ConfigError> {
    let n = cli.n;
    let (sa, sb) = (StarA::new(n)?, StarB::new(n)?);
    let (aa, la) = (cli.max_arity.unwrap_or(2 * n + 2), cli.max_len.unwrap_or(4 * n as u32));
    let (ab, lb) = (cli.max_arity.unwrap_or(n + 2), cli.max_len.unwrap_or(3 * n as u32));
    let mut lines: Vec<Value> = Vec::new();
    let mut count = 0;
    for v in op_grading_check(&sa, aa, la, Exec::Parallel).into_iter().chain(op_grading_check(&sb, ab, lb, Exec::Parallel)) {
        lines.push(json!({"schema": SCHEMA, "violation": v}));
    }
    for v in check_multiplicativity(&sa, aa, la, Exec::Parallel)
        .into_iter()
        .chain(check_multiplicativity(&sb, ab, lb, Exec::Parallel))
    {
        lines.push(json!({"schema": SCHEMA, "violation": v}));
    }
    count += lines.len();
    let ops = nonzero_ops(&sa, aa, la, Exec::Parallel).len() + nonzero_ops(&sb, ab, lb, Exec::Parallel).len();
    let mut out: String = lines.iter().map(json_line).collect();
    let body = json!({
        "m_V0": var_grading(n, 0).expect("graded").m,
        "m_VN1": var_grading(n, n + 1).expect("graded").m,
        "operations": ops,
        "violations": count,
    });
    out += &summary_line(cli, "verify grading", body);
    Ok(Report { out, violations: count > 0 })
}

fn arities_report(cli: &Cli) -> Result<Report, ConfigError> {
    let n = cli.n;
    let hi = cli.max_arity.unwrap_or(4 * n);
    let a = admissible_arities(AlgebraKind::A0, n, 3, hi)?;
    let b = admissible_arities(AlgebraKind::B0, n, 3, hi)?;
    let below_a: Vec<usize> = a.iter().copied().filter(|&k| k < 2 * n).collect();
    let below_b: Vec<usize> = b.iter().copied().filter(|&k| k < n).collect();
    let violations = !below_a.is_empty() || !below_b.is_empty();
    let body = json!({"max_arity": hi, "A": a, "B": b, "violations": below_a.len() + below_b.len()});
    Ok(Report { out: summary_line(cli, "verify arities", body), violations })
}

fn cmd_cohomology(cli: &Cli, side: Side, j: i64, n_max: Option<u32>) -> Result<Report, ConfigError> {
    let n = cli.n;
    let n_max = n_max.unwrap_or(3 * n as u32);
    let cells: Vec<Result<CohomologyCell, Error>> = match side {
        Side::A => table(&ModelA::for_rank(n)?, j, n_max, cli.trunc),
        Side::B => table(&ModelB::for_rank(n)?, j, n_max, cli.trunc),
    };
    let alg = side.kind().to_string();
    let rows: Vec<(u32, Result<CohomologyCell, Error>)> = (3..=n_max).zip(cells).collect();
    let out = match cli.format {
        Format::Json => {
            let cells: Vec<Value> = rows
                .iter()
                .map(|(k, c)| match c {
                    Ok(c) => serde_json::to_value(c).expect("serializable"),
                    Err(e) => json!({"n": k, "j": j, "error": e.to_string()}),
                })
                .collect();
            pretty(&envelope("cohomology", n, json!({"algebra": alg, "j": j, "cells": cells})))
        }
        Format::Csv => {
            let mut s = String::from("algebra,N,n,j,dim,witness\n");
            for (k, c) in &rows {
                match c {
                    Ok(c) => {
                        let _ = writeln!(s, "{alg},{n},{k},{j},{},{}", c.dim, csv_field(&c.witnesses.join(" ; ")));
                    }
                    Err(e) => {
                        let _ = writeln!(s, "{alg},{n},{k},{j},,{}", csv_field(&format!("error: {e}")));
                    }
                }
            }
            s
        }
        Format::Text => {
            let mut s = format!("H^(n,{j}) of {alg}, N = {n}\n");
            for (k, c) in &rows {
                match c {
                    Ok(c) => {
                        let _ = writeln!(s, "  n={k:<3} dim={}", c.dim);
                        for w in &c.witnesses {
                            let _ = writeln!(s, "        {w}");
                        }
                    }
                    Err(e) => {
                        let _ = writeln!(s, "  n={k:<3} error: {e}");
                    }
                }
            }
            s
        }
    };
    Ok(Report { out, violations: false })
}

fn table<P: KoszulPair>(m: &PairModel<P>, j: i64, n_max: u32, trunc: Option<u32>) -> Vec<Result<CohomologyCell, Error>> {
    let ns: Vec<u32> = (3..=n_max).collect();
    Exec::Parallel.map(&ns, |&k| m.cohomology(k, j, trunc))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
struct Row {
    key: String,
    value: String,
}

fn emit_rows(cli: &Cli, command: &str, rows: &[Row]) -> String {
    match cli.format {
        Format::Json => pretty(&envelope(command, cli.n, json!({ "rows": rows }))),
        Format::Csv => {
            let mut s = String::from("key,value\n");
            for r in rows {
                let _ = writeln!(s, "{},{}", csv_field(&r.key), csv_field(&r.value));
            }
            s
        }
        Format::Text => rows.iter().map(|r| format!("{}\t{}\n", r.key, r.value)).collect(),
    }
}

fn cmd_dump(cli: &Cli, what: DumpKind, side: Side) -> Result<Report, ConfigError> {
    let n = cli.n;
    let rows = match (what, side) {
        (DumpKind::Basis, Side::A) => basis_rows(&A0::new(n)?, cli.max_len.unwrap_or(4)),
        (DumpKind::Basis, Side::B) => basis_rows(&B0::new(n)?, cli.max_len.unwrap_or(4)),
        (DumpKind::Strings, Side::A) => string_rows(&CobarA::new(n)?, cli.max_len.unwrap_or(3)),
        (DumpKind::Strings, Side::B) => string_rows(&CobarB::new(n)?, cli.max_len.unwrap_or(3)),
        (DumpKind::Ops, Side::A) => {
            op_rows(&StarA::new(n)?, cli.max_arity.unwrap_or(2 * n), cli.max_len.unwrap_or(2 * n as u32 + 1))
        }
        (DumpKind::Ops, Side::B) => op_rows(&StarB::new(n)?, cli.max_arity.unwrap_or(n), cli.max_len.unwrap_or(n as u32 + 1)),
        (DumpKind::Cocycle, Side::A) => cocycle_rows(&ModelA::for_rank(n)?),
        (DumpKind::Cocycle, Side::B) => cocycle_rows(&ModelB::for_rank(n)?),
        (DumpKind::Sample, Side::A) => sample_rows(&CobarA::new(n)?, cli.max_len.unwrap_or(6), cli.seed),
        (DumpKind::Sample, Side::B) => sample_rows(&CobarB::new(n)?, cli.max_len.unwrap_or(6), cli.seed),
    };
    Ok(Report { out: emit_rows(cli, "dump", &rows), violations: false })
}

fn basis_rows<A: PathAlgebra>(alg: &A, max_len: u32) -> Vec<Row> {
    alg.enumerate_basis(max_len)
        .into_iter()
        .map(|w| {
            let g = alg.grading(w);
            Row { key: alg.render(w), value: format!("m={} len={} A={:?}", g.m, g.len, g.alex) }
        })
        .collect()
}

fn string_rows<P: KoszulPair>(p: &P, max_len: u32) -> Vec<Row> {
    chained_strings(p.x(), max_len)
        .into_iter()
        .map(|s| {
            let image = phi(p, &CobElem::from_string(s.clone()));
            let value = match image.iter().next() {
                Some(&w) => p.y().render(w),
                None => "0".into(),
            };
            Row { key: render_string(p, &s), value }
        })
        .collect()
}

fn op_rows<S: AInfinity>(s: &S, max_arity: usize, max_len: u32) -> Vec<Row> {
    let alg = s.algebra();
    let var = alg.live_var();
    nonzero_ops(s, max_arity, max_len, Exec::Parallel)
        .into_iter()
        .filter(|(a, _)| a.len() > 2)
        .map(|(a, r)| {
            let m = r.value.expect("nonzero");
            let coeff = match m.v {
                0 => String::new(),
                1 => format!("V{var}*"),
                v => format!("V{var}^{v}*"),
            };
            let key = a.iter().map(|&w| alg.render(w)).collect::<Vec<_>>().join(", ");
            Row { key: format!("mu{}({key})", a.len()), value: format!("{coeff}{} [{:?}]", alg.render(m.w), r.case) }
        })
        .collect()
}

fn cocycle_rows<P: KoszulPair>(m: &PairModel<P>) -> Vec<Row> {
    let c = m.generating_cocycle();
    let mut rows: Vec<Row> = c
        .terms()
        .map(|t| {
            let d = m.bidegree(t).expect("graded");
            Row { key: m.render_term(t), value: format!("n={} j={}", d.n, d.j) }
        })
        .collect();
    rows.push(Row { key: "differential".into(), value: m.render(&m.twisted_diff(&c)) });
    rows
}

fn sample_rows<P: KoszulPair>(p: &P, len: u32, seed: u64) -> Vec<Row> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..8)
        .map(|_| {
            let s = random_string(p.x(), len, &mut rng);
            let defect = homotopy_defect(p, &s, HomotopyVariant::Standard);
            Row { key: render_string(p, &s), value: format!("defect={}", render_elem(p.x(), &defect)) }
        })
        .collect()
}
