use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::thread;

use fde_core::analysis::{eoc, error_report, exact_solution, ErrorReport};
use fde_core::{
    make_grid, solve, Bootstrap, LinearTestProblem, MemoryWindow, SchemeConfig, SchemeKind,
    Trajectory,
};

use crate::args::{Figure, Output, RunArgs, Scheme};
use crate::format::g17;
use crate::CliError;

/// Whether any run in a command diverged.
pub type Diverged = bool;

struct Csv(csv::Writer<Box<dyn Write>>);

impl Csv {
    fn open(out: &Output) -> Result<Self, CliError> {
        let sink: Box<dyn Write> = match &out.output {
            Some(path) => Box::new(BufWriter::new(create(path)?)),
            None => Box::new(io::stdout().lock()),
        };
        let w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(sink);
        Ok(Self(w))
    }

    fn row<I: IntoIterator<Item = S>, S: AsRef<[u8]>>(&mut self, fields: I) -> Result<(), CliError> {
        self.0.write_record(fields).map_err(csv_error)
    }

    fn finish(mut self) -> Result<(), CliError> {
        self.0.flush().map_err(CliError::Io)
    }
}

fn create(path: &Path) -> Result<File, CliError> {
    File::create(path).map_err(|e| CliError::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn csv_error(e: csv::Error) -> CliError {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => CliError::Io(e),
        other => CliError::Io(io::Error::other(format!("{other:?}"))),
    }
}

fn problem(run: &RunArgs) -> Result<LinearTestProblem, CliError> {
    for (name, v) in [("alpha", run.alpha), ("lambda", run.lambda), ("y0", run.y0), ("h", run.h), ("t-max", run.t_max)] {
        if !v.is_finite() {
            return Err(CliError::Usage(format!("--{name} must be finite")));
        }
    }
    if run.h <= 0.0 || run.t_max < run.h {
        return Err(CliError::Usage("need h > 0 and t-max >= h".into()));
    }
    Ok(LinearTestProblem::new(run.alpha, run.lambda, run.y0)?)
}

fn config(scheme: Scheme, run: &RunArgs) -> Result<SchemeConfig, CliError> {
    let kind = SchemeKind::from(scheme);
    let mut cfg = SchemeConfig::new(kind).with_bootstrap(Bootstrap::from(run.bootstrap));
    let window = match run.memory_time {
        Some(t) if !(t.is_finite() && t > 0.0) => {
            return Err(CliError::Usage("--memory-time must be positive".into()))
        }
        Some(t) => Some((t / run.h).round() as usize),
        None => run.memory_window,
    };
    match window {
        Some(_) if kind != SchemeKind::ShortMemory => {
            return Err(CliError::Usage("a memory window applies to --scheme short-memory only".into()))
        }
        Some(0) => return Err(CliError::Usage("the memory window must hold at least one node".into())),
        Some(l) => cfg = cfg.with_memory_window(MemoryWindow::Nodes(l)),
        None => {}
    }
    Ok(cfg)
}

fn run_one(p: &LinearTestProblem, h: f64, t_max: f64, cfg: &SchemeConfig) -> Result<(Trajectory, Trajectory, ErrorReport), CliError> {
    let grid = make_grid(h, t_max)?;
    let exact = exact_solution(p, &grid)?;
    let numeric = solve(&p.to_problem(), &grid, cfg)?;
    let report = error_report(&numeric, &exact)?;
    Ok((numeric, exact, report))
}

/// Runs `jobs` on scoped threads; results come back in input order.
fn parallel<T: Sync, R: Send>(jobs: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|j| s.spawn(|| f(j))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

pub fn solve_cmd(run: &RunArgs, scheme: Scheme, out: &Output) -> Result<Diverged, CliError> {
    let p = problem(run)?;
    let cfg = config(scheme, run)?;
    let mut csv = Csv::open(out)?;
    let (numeric, exact, report) = run_one(&p, run.h, run.t_max, &cfg)?;
    csv.row(["n", "t", "y_numeric", "y_exact", "abs_error"])?;
    for (n, (t, y)) in numeric.points().enumerate() {
        csv.row([n.to_string(), g17(t), g17(y), g17(exact.values()[n]), g17(report.abs_errors[n])])?;
    }
    csv.finish()?;
    Ok(report.diverged)
}

pub fn reproduce(figure: Figure, t_max: f64, out: &Output) -> Result<Diverged, CliError> {
    let run = RunArgs {
        alpha: 0.8,
        lambda: -2.0,
        y0: 2.0,
        h: 0.0625,
        t_max,
        memory_window: None,
        memory_time: None,
        bootstrap: crate::args::BootstrapArg::PiTrap,
    };
    let p = problem(&run)?;
    let cfg = config(Scheme::Flawed, &run)?;
    let mut csv = Csv::open(out)?;
    let (numeric, exact, report) = run_one(&p, run.h, run.t_max, &cfg)?;
    match figure {
        Figure::Fig1 => {
            csv.row(["t", "y_exact", "y_flawed"])?;
            for (n, (t, y)) in numeric.points().enumerate() {
                csv.row([g17(t), g17(exact.values()[n]), g17(y)])?;
            }
        }
        Figure::Fig2 => {
            csv.row(["t", "abs_error"])?;
            for (n, t) in numeric.grid().nodes().take(numeric.values().len()).enumerate() {
                csv.row([g17(t), g17(report.abs_errors[n])])?;
            }
        }
    }
    csv.finish()?;
    // the blow-up is the content of these figures, not a failure
    Ok(false)
}

fn check_halving(hs: &[f64]) -> Result<(), CliError> {
    if hs.is_empty() {
        return Err(CliError::Usage("--h-list is empty".into()));
    }
    if hs.iter().any(|&h| !(h.is_finite() && h > 0.0)) {
        return Err(CliError::Usage("--h-list entries must be positive".into()));
    }
    if hs.windows(2).any(|w| (2.0 * w[1] - w[0]).abs() > 1e-12 * w[0]) {
        return Err(CliError::Usage("--h-list must halve from one entry to the next".into()));
    }
    Ok(())
}

pub fn convergence(run: &RunArgs, scheme: Scheme, hs: &[f64], out: &Output) -> Result<Diverged, CliError> {
    check_halving(hs)?;
    let p = problem(&RunArgs { h: hs[0], ..run.clone() })?;
    let cfg = config(scheme, run)?;
    let mut csv = Csv::open(out)?;
    let reports = parallel(hs, |&h| run_one(&p, h, run.t_max, &cfg).map(|r| r.2))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    csv.row(["h", "max_error", "final_error", "eoc"])?;
    for (i, (h, r)) in hs.iter().zip(&reports).enumerate() {
        let order = match i {
            0 => String::new(),
            _ => eoc(reports[i - 1].max_error, r.max_error).map_or_else(|_| "nan".into(), g17),
        };
        csv.row([g17(*h), g17(r.max_error), g17(r.final_error), order])?;
    }
    csv.finish()?;
    Ok(reports.iter().any(|r| r.diverged))
}

fn parse_window(s: &str) -> Result<MemoryWindow, CliError> {
    match s.trim() {
        "full" => Ok(MemoryWindow::Full),
        n => match n.parse::<usize>() {
            Ok(l) if l > 0 => Ok(MemoryWindow::Nodes(l)),
            _ => Err(CliError::Usage(format!("bad window `{n}`: expected a positive integer or `full`"))),
        },
    }
}

pub fn short_memory_study(run: &RunArgs, windows: &[String], out: &Output) -> Result<Diverged, CliError> {
    if run.memory_window.is_some() || run.memory_time.is_some() {
        return Err(CliError::Usage("use --windows to choose window lengths".into()));
    }
    let p = problem(run)?;
    let ws = windows.iter().map(|w| parse_window(w)).collect::<Result<Vec<_>, _>>()?;
    let base = config(Scheme::ShortMemory, run)?;
    let mut csv = Csv::open(out)?;
    let reports = parallel(&ws, |&w| run_one(&p, run.h, run.t_max, &base.with_memory_window(w)).map(|r| r.2))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    csv.row(["window", "max_error", "final_error"])?;
    for (w, r) in ws.iter().zip(&reports) {
        let label = match w {
            MemoryWindow::Full => "full".to_string(),
            MemoryWindow::Nodes(l) => l.to_string(),
        };
        csv.row([label, g17(r.max_error), g17(r.final_error)])?;
    }
    csv.finish()?;
    Ok(reports.iter().any(|r| r.diverged))
}
