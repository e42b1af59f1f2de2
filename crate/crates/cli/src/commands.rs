//! The five commands.

use std::io::Write;
use std::path::Path;

use cupsq::counting::{count_bounded, count_oracle, summand_table, REFERENCE_COUNTS};
use cupsq::cup::CupPlan;
use cupsq::steenrod::{CocycleCheck, SqPlan};
use cupsq::verify::is_coboundary_mod2;
use cupsq::{is_cocycle, Cochain, FormalSum, Ring, SimplicialComplex};
use serde_json::json;

use crate::error::{CliError, CliResult};
use crate::format::{read_json, to_json, CochainFile, ComplexFile, FormalSumFile, Loaded, SumLines};
use crate::parallel::sum_parts;
use crate::{Cli, Command};

pub fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Cup { complex, c, cprime, n } => cup(cli, complex, c, cprime, *n, out, err),
        Command::Sq { complex, c, i, check_class } => sq(cli, complex, c, *i, *check_class, out, err),
        Command::Count { p, q, n } => count(cli, *p, *q, *n, out),
        Command::Bench => bench(cli, out),
        Command::Verify { complex, c, class } => verify(cli, complex, c, *class, out, err),
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Invalid(format!("write failed: {e}"))
}

fn warn<T>(loaded: Loaded<T>, err: &mut dyn Write) -> CliResult<T> {
    for w in &loaded.warnings {
        writeln!(err, "warning: {w}").map_err(io)?;
    }
    Ok(loaded.value)
}

fn load_complex(path: &Path, err: &mut dyn Write) -> CliResult<SimplicialComplex> {
    let file: ComplexFile = read_json(path)?;
    warn(file.to_complex()?, err)
}

fn load_cochain(path: &Path, ring: Option<Ring>, err: &mut dyn Write) -> CliResult<Cochain> {
    let file: CochainFile = read_json(path)?;
    warn(file.to_cochain(ring)?, err)
}

fn print_sum(cli: &Cli, sum: &FormalSum, out: &mut dyn Write) -> CliResult<()> {
    if cli.json {
        writeln!(out, "{}", to_json(&FormalSumFile::from_sum(sum))).map_err(io)
    } else {
        write!(out, "{}", SumLines(sum)).map_err(io)
    }
}

fn cup(
    cli: &Cli,
    complex: &Path,
    c: &Path,
    cprime: &Path,
    n: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let ring = cli.ring_override()?;
    let k = load_complex(complex, err)?;
    let c = load_cochain(c, ring, err)?;
    let cp = load_cochain(cprime, ring, err)?;
    let plan = CupPlan::new(&c, &cp, n, &k)?;
    let sum = sum_parts(plan.ring(), plan.len(), cli.threads as usize, |r| plan.part(r));
    print_sum(cli, &sum, out)
}

fn sq(
    cli: &Cli,
    complex: &Path,
    c: &Path,
    i: usize,
    check_class: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let ring = cli.ring_override()?;
    let k = load_complex(complex, err)?;
    let c = load_cochain(c, ring, err)?;
    let sum = match SqPlan::new(i, &c, &k, CocycleCheck::Direct)? {
        SqPlan::Identity(sum) => sum,
        SqPlan::Pairs(plan) => sum_parts(Ring::Z2, plan.len(), cli.threads as usize, |r| plan.part(r)),
    };
    let coboundary = if check_class {
        let cochain = sum.clone().into_cochain(i + c.degree())?;
        Some(is_coboundary_mod2(&cochain, &k)?)
    } else {
        None
    };
    if cli.json {
        let mut doc = serde_json::to_value(FormalSumFile::from_sum(&sum)).expect("documents serialize");
        if let Some(b) = coboundary {
            doc["coboundary"] = json!(b);
        }
        writeln!(out, "{}", serde_json::to_string(&doc).expect("documents serialize")).map_err(io)
    } else {
        for x in sum.terms().keys() {
            writeln!(out, "{x}").map_err(io)?;
        }
        if let Some(b) = coboundary {
            writeln!(out, "coboundary: {b}").map_err(io)?;
        }
        Ok(())
    }
}

fn count(cli: &Cli, p: usize, q: usize, n: usize, out: &mut dyn Write) -> CliResult<()> {
    let full = count_oracle(p, q, n);
    let bounded = count_bounded(p, q, n);
    if cli.json {
        let doc = json!({"p": p, "q": q, "n": n, "full": full.to_string(), "bounded": bounded.to_string()});
        writeln!(out, "{}", serde_json::to_string(&doc).expect("documents serialize")).map_err(io)
    } else {
        writeln!(out, "full: {full}  bounded: {bounded}").map_err(io)
    }
}

fn bench(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let mut mismatches = Vec::new();
    let mut rows = Vec::new();
    let table = summand_table();
    for (row, &(_, _, _, full, bounded)) in table.iter().zip(REFERENCE_COUNTS.iter()) {
        let ok = row.full.to_string() == full && row.bounded.to_string() == bounded;
        if !ok {
            mismatches.push(row.label());
        }
        rows.push((row, full, bounded, ok));
    }
    if cli.json {
        let doc: Vec<_> = rows
            .iter()
            .map(|(row, full, bounded, ok)| {
                json!({
                    "p": row.p, "n": row.n, "q": row.q,
                    "full": row.full.to_string(), "bounded": row.bounded.to_string(),
                    "expected_full": full, "expected_bounded": bounded, "ok": ok,
                })
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string(&json!({"rows": doc})).expect("documents serialize"))
            .map_err(io)?;
    } else {
        for (row, full, bounded, ok) in &rows {
            let status = if *ok { "ok".to_string() } else { format!("MISMATCH (expected {full} / {bounded})") };
            writeln!(out, "{:<16}full: {:<24}bounded: {:<20}{status}", row.label(), row.full, row.bounded)
                .map_err(io)?;
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::TableMismatch(format!("mismatched rows: {}", mismatches.join(", "))))
    }
}

fn verify(cli: &Cli, complex: &Path, c: &Path, class: bool, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let ring = cli.ring_override()?;
    let k = load_complex(complex, err)?;
    let c = load_cochain(c, ring, err)?;
    let cocycle = is_cocycle(&c, &k)?;
    let coboundary = if class {
        if !c.ring().is_mod2() {
            return Err(CliError::Invalid(format!("--class needs Z_2 coefficients, got {}", c.ring())));
        }
        Some(cocycle && is_coboundary_mod2(&c, &k)?)
    } else {
        None
    };
    let yes = |b: bool| if b { "yes" } else { "no" };
    if cli.json {
        let mut doc = json!({"cocycle": cocycle});
        if let Some(b) = coboundary {
            doc["coboundary"] = json!(b);
        }
        writeln!(out, "{doc}").map_err(io)
    } else {
        match coboundary {
            None => writeln!(out, "cocycle: {}", yes(cocycle)),
            Some(b) => writeln!(out, "cocycle: {}, coboundary: {}", yes(cocycle), yes(b)),
        }
        .map_err(io)
    }
}
