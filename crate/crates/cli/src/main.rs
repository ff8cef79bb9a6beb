//! `hydromoments`: radial expectation values of D-dimensional hydrogenic
//! states from the command line.

mod args;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use hydromoments::record::{OutputRecord, RecordResult, Request};
use hydromoments::uncertainty;
use hydromoments::verify::{self, Grid};
use hydromoments::{expectation, make_state, Error, HydrogenicState};
use rayon::prelude::*;

use args::{Cli, Command, ComputeArgs, LimitsArgs, Regime, TableArgs, UncertaintyArgs, VerifyArgs};

/// Exit status for a domain or regime violation.
const EXIT_DOMAIN: u8 = 2;
/// Exit status for a numerical failure.
const EXIT_NUMERICAL: u8 = 3;
/// Exit status for a failed hard verification check.
const EXIT_VERIFY: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("HYDROMOMENTS_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring HYDROMOMENTS_THREADS={threads}"),
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Compute(a) => compute(&a, &mut out),
        Command::Table(a) => table(&a, &mut out),
        Command::Verify(a) => run_verify(&a, &mut out),
        Command::Limits(a) => limits(&a, &mut out),
        Command::Uncertainty(a) => run_uncertainty(&a, &mut out),
    };
    let flushed = out.flush();
    match (code, flushed) {
        (Ok(c), Ok(())) => ExitCode::from(c),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn exit_for(err: &Error) -> u8 {
    if err.is_domain_violation() {
        EXIT_DOMAIN
    } else {
        EXIT_NUMERICAL
    }
}

fn state_or_exit(d: i64, n: i64, l: i64, z: f64) -> Result<HydrogenicState, u8> {
    make_state(d, n, l, z).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_DOMAIN
    })
}

fn compute(a: &ComputeArgs, out: &mut impl Write) -> io::Result<u8> {
    let state = match state_or_exit(a.dim, a.n, a.l, a.z) {
        Ok(s) => s,
        Err(c) => return Ok(c),
    };
    let mut code = 0;
    let mut records = Vec::new();
    for &alpha in &a.alpha {
        match expectation(&state, a.space, alpha, a.mode) {
            Ok(r) => records.push(OutputRecord::moment("compute", &state, a.space, alpha, a.mode, &Ok(r))),
            Err(e) => {
                eprintln!("error: {e}");
                code = code.max(exit_for(&e));
            }
        }
    }
    let refs: Vec<&OutputRecord> = records.iter().collect();
    output::moments(out, a.format, &refs)?;
    Ok(code)
}

fn table(a: &TableArgs, out: &mut impl Write) -> io::Result<u8> {
    let mut tasks = Vec::new();
    for d in a.dims.values() {
        for n in a.ns.values() {
            let ls: Vec<i64> = match a.l.0 {
                Some(l) if l < n => vec![l],
                Some(_) => vec![],
                None => (0..n).collect(),
            };
            for l in ls {
                let state = match state_or_exit(d, n, l, a.z) {
                    Ok(s) => s,
                    Err(c) => return Ok(c),
                };
                for &alpha in &a.alpha {
                    tasks.push((state, alpha));
                }
            }
        }
    }
    let eval = |&(s, alpha): &(HydrogenicState, f64)| {
        OutputRecord::moment("table", &s, a.space, alpha, a.mode, &expectation(&s, a.space, alpha, a.mode))
    };
    // Collecting an indexed parallel iterator keeps the input order.
    let records: Vec<OutputRecord> =
        if a.parallel { tasks.par_iter().map(eval).collect() } else { tasks.iter().map(eval).collect() };
    let refs: Vec<&OutputRecord> = records.iter().collect();
    output::moments(out, a.format, &refs)?;
    Ok(0)
}

fn run_verify(a: &VerifyArgs, out: &mut impl Write) -> io::Result<u8> {
    let mut grid = Grid::of(a.grid);
    if let Some(d) = a.d_max {
        grid.d_max = d.max(grid.d_min);
    }
    if let Some(n) = a.n_max {
        grid.n_max = n.max(1);
    }
    if let Some(c) = a.cases {
        grid.random_cases = c;
    }
    if let Some(s) = a.seed {
        grid.seed = s;
    }
    let suites = match a.suite.0 {
        Some(s) => vec![s],
        None => verify::Suite::ALL.to_vec(),
    };
    let reports: Vec<verify::SuiteReport> = suites.iter().map(|&s| verify::run(s, &grid)).collect();
    output::verify(out, a.format, &reports, a.verbose)?;
    Ok(if reports.iter().all(|r| r.passed) { 0 } else { EXIT_VERIFY })
}

fn limits(a: &LimitsArgs, out: &mut impl Write) -> io::Result<u8> {
    let seq = match a.regime {
        Regime::Rydberg => a.n_seq.as_ref(),
        Regime::Highd => a.d_seq.as_ref(),
    };
    let Some(seq) = seq else {
        eprintln!(
            "error: --regime {} needs {}",
            a.regime.name(),
            if a.regime == Regime::Rydberg { "--n-seq" } else { "--D-seq" }
        );
        return Ok(EXIT_DOMAIN);
    };
    let mut rows = Vec::new();
    for p in seq.values() {
        let p = p as u32;
        let row = match a.regime {
            Regime::Rydberg => verify::rydberg_row(a.space, a.family, a.alpha, a.dim as u32, p, a.z),
            Regime::Highd => verify::high_d_row(a.space, a.alpha, p, a.n as u32, a.l as u32, a.z),
        };
        match row {
            Ok(r) => rows.push(r),
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(exit_for(&e));
            }
        }
    }
    output::limits(out, a.format, a.regime, &rows)?;
    Ok(0)
}

fn run_uncertainty(a: &UncertaintyArgs, out: &mut impl Write) -> io::Result<u8> {
    let state = match state_or_exit(a.dim, a.n, a.l, a.z) {
        Ok(s) => s,
        Err(c) => return Ok(c),
    };
    use args::Bound;
    let reports = match a.bound {
        Bound::Heisenberg => uncertainty::heisenberg_general(&state, a.a, a.b),
        Bound::PittBeckner => uncertainty::pitt_beckner(&state, a.alpha),
        Bound::DaubechiesThakkar => uncertainty::daubechies_thakkar(&state, a.k, a.q),
        Bound::Fermion => uncertainty::fermion_product(&state, a.alpha, a.k, a.q, a.particles),
    };
    match reports {
        Ok(reports) => {
            let records: Vec<OutputRecord> = reports
                .into_iter()
                .map(|r| {
                    OutputRecord::new(
                        Request { command: "uncertainty".into(), state: Some(state), order: None, mode: None },
                        RecordResult::Inequality(r),
                    )
                })
                .collect();
            output::inequalities(out, a.format, &records)?;
            Ok(0)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(exit_for(&e))
        }
    }
}
