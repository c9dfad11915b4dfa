//! `twoline`: solve, generate, check, benchmark and draw two-slab covers.
//!
//! Exit codes: 0 success, 1 a check found uncovered points, 2 unreadable or
//! malformed input, 3 bad or inconsistent flags, 4 internal failure, 5 the
//! input has no points.

mod gen;
mod instance;
mod render;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::ResultDoc;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use twoline::geom::tolerance;
use twoline::{oracles, Error, Orientation, Point, PointSet, Solution};

#[derive(Parser)]
#[command(name = "twoline", version, about = "Cover a planar point set with two slabs of minimum width")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    General,
    OneFixed,
    TwoFixed,
    Parallel,
}

#[derive(clap::Args, Debug, Clone)]
struct SolverArgs {
    #[arg(long, value_enum)]
    variant: Variant,
    /// Approximation parameter; required except for `one-fixed --exact`.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Orientation of the first slab for `one-fixed`, in radians.
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    /// Orientations of the two slabs for `two-fixed`, in radians.
    #[arg(long, allow_negative_numbers = true)]
    theta1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    theta2: Option<f64>,
    /// Exact optimum (`one-fixed` only).
    #[arg(long)]
    exact: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and write a JSON result document.
    Solve {
        /// Instance file, `-` for standard input.
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: gen::Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recheck a result document against its instance: coverage, and the
    /// ratio to the brute-force optimum when the instance is small enough.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        result: PathBuf,
    },
    /// Time a solver on uniform instances of the given sizes; prints CSV.
    Bench {
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances timed concurrently. Results do not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Draw an instance, and optionally the slabs of a result, as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        result: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Flag(String),
    Internal(String),
    Empty,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Flag(_) => 3,
            Failure::Internal(_) => 4,
            Failure::Empty => 5,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Flag(m) => write!(f, "flag error: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
            Failure::Empty => write!(f, "input error: the instance has no points"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyPointSet => Failure::Empty,
            Error::InvalidParameter(_) | Error::UseParallelSolver | Error::NegativeWidth(_) => {
                Failure::Flag(e.to_string())
            }
            Error::NonFinite(_) => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

/// A validated solver request.
#[derive(Debug, Clone, Copy)]
enum Plan {
    General { eps: f64 },
    OneFixedExact { theta: Orientation },
    OneFixed { theta: Orientation, eps: f64 },
    TwoFixed { theta1: Orientation, theta2: Orientation, eps: f64 },
    Parallel { eps: f64 },
}

impl Plan {
    fn from_args(a: &SolverArgs) -> Result<Plan, Failure> {
        let flag = |m: &str| Err(Failure::Flag(m.to_string()));
        if let Some(e) = a.epsilon {
            if !(e > 0.0) || !e.is_finite() {
                return flag("--epsilon must be a positive number");
            }
        }
        for t in [a.theta, a.theta1, a.theta2].into_iter().flatten() {
            if !t.is_finite() {
                return flag("angles must be finite");
            }
        }
        if a.exact && a.variant != Variant::OneFixed {
            return flag("--exact is only available for --variant one-fixed");
        }
        if a.theta.is_some() && a.variant != Variant::OneFixed {
            return flag("--theta belongs to --variant one-fixed");
        }
        if (a.theta1.is_some() || a.theta2.is_some()) && a.variant != Variant::TwoFixed {
            return flag("--theta1/--theta2 belong to --variant two-fixed");
        }
        let need_eps =
            || a.epsilon.ok_or_else(|| Failure::Flag("--epsilon is required for approximate solving".into()));
        Ok(match a.variant {
            Variant::General => Plan::General { eps: need_eps()? },
            Variant::Parallel => Plan::Parallel { eps: need_eps()? },
            Variant::OneFixed => {
                let theta = Orientation::new(a.theta.ok_or_else(|| Failure::Flag("one-fixed needs --theta".into()))?);
                match (a.exact, a.epsilon) {
                    (true, Some(_)) => return flag("--exact and --epsilon exclude each other"),
                    (true, None) => Plan::OneFixedExact { theta },
                    (false, _) => Plan::OneFixed { theta, eps: need_eps()? },
                }
            }
            Variant::TwoFixed => {
                let (Some(t1), Some(t2)) = (a.theta1, a.theta2) else {
                    return flag("two-fixed needs --theta1 and --theta2");
                };
                Plan::TwoFixed { theta1: Orientation::new(t1), theta2: Orientation::new(t2), eps: need_eps()? }
            }
        })
    }

    fn epsilon(&self) -> Option<f64> {
        match *self {
            Plan::OneFixedExact { .. } => None,
            Plan::General { eps } | Plan::Parallel { eps } => Some(eps),
            Plan::OneFixed { eps, .. } | Plan::TwoFixed { eps, .. } => Some(eps),
        }
    }

    fn run(&self, pts: &[Point]) -> twoline::Result<Solution> {
        match *self {
            Plan::General { eps } => twoline::general::solve(pts, eps),
            Plan::OneFixedExact { theta } => twoline::one_fixed::exact(pts, theta),
            Plan::OneFixed { theta, eps } => twoline::one_fixed::approx(pts, theta, eps),
            Plan::TwoFixed { theta1, theta2, eps } => twoline::two_fixed::approx(pts, theta1, theta2, eps),
            Plan::Parallel { eps } => twoline::parallel::solve(pts, eps),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let read =
        if path.as_os_str() == "-" { std::io::read_to_string(std::io::stdin()) } else { std::fs::read_to_string(path) };
    read.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_points(path: &Path) -> Result<Vec<Point>, Failure> {
    instance::parse(&read_text(path)?).map_err(|e| match e {
        instance::ParseError::Empty => Failure::Empty,
        e => Failure::Input(format!("{}: {e}", path.display())),
    })
}

fn read_result(path: &Path) -> Result<ResultDoc, Failure> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Internal(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Failure::Internal(e.to_string()))
}

fn solve(input: &Path, args: &SolverArgs, output: Option<&Path>) -> Result<(), Failure> {
    let plan = Plan::from_args(args)?;
    let raw = read_points(input)?;
    let pts = PointSet::new(raw.clone())?;
    let start = Instant::now();
    let sol = plan.run(&pts)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    if !sol.covers(&raw, tolerance(&raw)) {
        return Err(Failure::Internal("the solver's pair misses an input point".into()));
    }
    write_out(output, &to_json(&ResultDoc::new(&sol, &raw, plan.epsilon(), elapsed_ms))?)
}

#[derive(serde::Serialize)]
struct CheckDoc {
    covered: bool,
    uncovered: usize,
    tolerance: f64,
    max_width: f64,
    oracle: Option<f64>,
    ratio: Option<f64>,
    note: Option<String>,
}

fn oracle_for(doc: &ResultDoc, pts: &[Point]) -> Result<f64, String> {
    let angle = |v: Option<f64>, name: &str| v.map(Orientation::new).ok_or(format!("result has no {name}"));
    let r = match doc.variant.as_str() {
        "general" => oracles::oracle_general(pts),
        "one-fixed" => oracles::oracle_one_fixed(pts, angle(doc.theta, "theta")?),
        "two-fixed" => oracles::oracle_two_fixed(pts, angle(doc.theta1, "theta1")?, angle(doc.theta2, "theta2")?),
        "parallel" => oracles::oracle_parallel(pts),
        other => return Err(format!("unknown variant {other:?}")),
    };
    r.map_err(|e| format!("oracle skipped: {e}"))
}

fn check(input: &Path, result: &Path) -> Result<bool, Failure> {
    let pts = read_points(input)?;
    let doc = read_result(result)?;
    let pair = doc.pair().ok_or_else(|| Failure::Input("the result must hold two slabs with lo <= hi".into()))?;
    let tol = tolerance(&pts);
    let uncovered = pts.iter().filter(|&&p| !pair.covers(&[p], tol)).count();
    let unique = PointSet::new(pts.clone())?;
    let (oracle, note) = match oracle_for(&doc, &unique) {
        Ok(v) => (Some(v), None),
        Err(m) => (None, Some(m)),
    };
    let ratio = oracle.filter(|&o| o > 0.0).map(|o| doc.max_width / o);
    let out =
        CheckDoc { covered: uncovered == 0, uncovered, tolerance: tol, max_width: doc.max_width, oracle, ratio, note };
    write_out(None, &to_json(&out)?)?;
    Ok(uncovered == 0)
}

fn bench(args: &SolverArgs, sizes: &[usize], seed: u64, jobs: usize) -> Result<(), Failure> {
    let plan = Plan::from_args(args)?;
    if jobs == 0 {
        return Err(Failure::Flag("--jobs must be at least 1".into()));
    }
    if sizes.contains(&0) {
        return Err(Failure::Flag("sizes must be positive".into()));
    }
    let time_one = |n: usize| -> Result<f64, Failure> {
        let pts = gen::generate(gen::Kind::Uniform, n, seed ^ n as u64).map_err(Failure::Flag)?;
        let start = Instant::now();
        plan.run(&pts)?;
        Ok(start.elapsed().as_secs_f64())
    };
    let mut secs: Vec<Option<Result<f64, Failure>>> = (0..sizes.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let chunk = sizes.len().div_ceil(jobs).max(1);
        for (ns, out) in sizes.chunks(chunk).zip(secs.chunks_mut(chunk)) {
            scope.spawn(move || {
                for (n, slot) in ns.iter().zip(out) {
                    *slot = Some(time_one(*n));
                }
            });
        }
    });
    let name = args.variant.to_possible_value().expect("named").get_name().to_string();
    let mut csv = String::from("n,variant,seconds\n");
    for (n, s) in sizes.iter().zip(secs) {
        let s = s.ok_or_else(|| Failure::Internal("a benchmark did not run".into()))??;
        csv.push_str(&format!("{n},{name},{s:.6}\n"));
    }
    write_out(None, &csv)
}

fn render(input: &Path, result: Option<&Path>, output: Option<&Path>) -> Result<(), Failure> {
    let pts = read_points(input)?;
    let slabs = match result {
        Some(r) => {
            let doc = read_result(r)?;
            doc.pair()
                .ok_or_else(|| Failure::Input("the result must hold two slabs with lo <= hi".into()))?
                .slabs()
                .to_vec()
        }
        None => Vec::new(),
    };
    write_out(output, &render::svg(&pts, &slabs))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Solve { input, solver, output } => solve(&input, &solver, output.as_deref())?,
        Command::Gen { kind, n, seed, output } => {
            let pts = gen::generate(kind, n, seed).map_err(Failure::Flag)?;
            let header = format!("kind {} n {n} seed {seed}", kind.to_possible_value().expect("named").get_name());
            write_out(output.as_deref(), &instance::emit(&pts, &header))?;
        }
        Command::Check { input, result } => {
            if !check(&input, &result)? {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench { solver, sizes, seed, jobs } => bench(&solver, &sizes, seed, jobs)?,
        Command::Render { input, result, output } => render(&input, result.as_deref(), output.as_deref())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("twoline: {f}");
            ExitCode::from(f.code())
        }
    }
}
