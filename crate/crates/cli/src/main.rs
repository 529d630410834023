use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cjt::genseries::{jt_det_e, jt_det_h};
use cjt::hpaths::{enumerate_p1, enumerate_phv, weighted_sum, PathTuple};
use cjt::regions::{enumerate_p, enumerate_p2, project, regions};
use cjt::render::render_svg;
use cjt::tableaux::{
    check_e, check_e2c, check_e_prime, check_h, check_v, config_regions, enumerate_tab, enumerate_tab_hv,
    find_lu_configurations, from_tableau, tab_sum, Tableau,
};
use cjt::universe::positive_skew_diagrams;
use cjt::verify::{check_diagram, global_checks, Suite};
use cjt::{Error, Partition, Polynomial, SkewDiagram};

#[derive(Parser)]
#[command(name = "cjt", version, about = "Type C Jacobi-Trudi determinants, paths and tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct Shape {
    /// rank n of C_n
    #[arg(long)]
    n: u32,
    /// outer partition, e.g. "3,2,1"; "" for the empty partition
    #[arg(long, default_value = "")]
    lambda: String,
    /// inner partition
    #[arg(long, default_value = "")]
    mu: String,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    /// determinant in the h-coefficients
    H,
    /// determinant in the e-coefficients
    E,
    /// signed sum over P₁
    PathsSigned,
    /// sum over P₂
    PathsPositive,
    /// sum over P
    PathsHv,
    /// sum over Tab
    Tableaux,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathSet {
    P1,
    Hv,
    P2,
    P,
}

#[derive(Subcommand)]
enum Command {
    /// Print χ computed by the chosen method.
    Chi {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = Form::H)]
        form: Form,
    },
    /// List Tab, or all (H)(V)-fillings with --all, or inspect one tableau with --check.
    Tableaux {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        all: bool,
        /// a tableau such as "1,2 / 2b" placed on the shape's inner partition
        #[arg(long)]
        check: Option<String>,
    },
    /// List the tuples of a path set.
    Paths {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = PathSet::P)]
        set: PathSet,
        /// also list the regions of each tuple
        #[arg(long)]
        regions: bool,
    },
    /// Check the identities on every positive skew diagram up to a size.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 4)]
        max_cells: usize,
        #[arg(long, default_value_t = 3)]
        max_rows: usize,
        #[arg(long, default_value_t = 3)]
        max_width: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Write an SVG of one tuple's half-pair.
    Render {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = PathSet::Hv)]
        set: PathSet,
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// take the tuple of this tableau instead of --set/--index
        #[arg(long)]
        tableau: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Identity(String),
    Positivity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Positivity { .. } => Failure::Positivity(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn diagram(s: &Shape) -> Result<SkewDiagram, Failure> {
    if s.n == 0 {
        return Err(Error::InvalidRank.into());
    }
    Ok(SkewDiagram::parse(&s.lambda, &s.mu)?)
}

fn print_poly(p: &Polynomial, out: Output) {
    match out {
        Output::Text => println!("{p}"),
        Output::Json => println!("{}", p.to_json_string()),
    }
}

fn path_set(d: &SkewDiagram, n: u32, set: PathSet) -> Result<Vec<PathTuple>, Failure> {
    Ok(match set {
        PathSet::P1 => enumerate_p1(d, n),
        PathSet::Hv => enumerate_phv(d, n),
        PathSet::P2 => enumerate_p2(d, n)?,
        PathSet::P => enumerate_p(d, n)?,
    })
}

fn cmd_chi(shape: &Shape, form: Form) -> Outcome {
    let d = diagram(shape)?;
    let n = shape.n;
    let p = match form {
        Form::H => jt_det_h(&d, n),
        Form::E => jt_det_e(&d, n),
        Form::PathsSigned => weighted_sum(enumerate_p1(&d, n).iter(), true),
        Form::PathsPositive => weighted_sum(enumerate_p2(&d, n)?.iter(), false),
        Form::PathsHv => weighted_sum(enumerate_p(&d, n)?.iter(), false),
        Form::Tableaux => tab_sum(&d, n)?,
    };
    print_poly(&p, shape.output);
    Ok(())
}

fn tableau_report(t: &Tableau) -> Result<Value, Failure> {
    let h = check_h(t);
    let v = check_v(t);
    let mut report = json!({ "tableau": t.to_json(), "H": h, "V": v });
    if h && v {
        report["E"] = json!(check_e(t)?);
        report["E_prime"] = json!(check_e_prime(t));
        if t.shape().columns() <= 2 {
            report["E_2C"] = json!(check_e2c(t)?);
        }
        report["configurations"] = find_lu_configurations(t).iter().map(|c| c.to_json()).collect();
        report["regions"] = config_regions(t)
            .iter()
            .map(|r| {
                json!({
                    "members": r.members.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                    "is_region": r.is_region,
                    "odd": r.is_odd(),
                })
            })
            .collect();
    }
    Ok(report)
}

fn cmd_tableaux(shape: &Shape, all: bool, check: Option<&str>) -> Outcome {
    let mu = shape.mu.parse::<Partition>()?;
    if let Some(text) = check {
        let t = Tableau::parse(shape.n, text, &mu)?;
        let report = tableau_report(&t)?;
        match shape.output {
            Output::Json => println!("{report}"),
            Output::Text => {
                println!("{t}");
                for key in ["H", "V", "E", "E_prime", "E_2C"] {
                    if let Some(b) = report.get(key) {
                        println!("{key}: {b}");
                    }
                }
                for c in find_lu_configurations(&t) {
                    println!("configuration: {}", c.to_json());
                }
            }
        }
        return Ok(());
    }
    let d = diagram(shape)?;
    let ts = if all {
        enumerate_tab_hv(&d, shape.n)
    } else {
        enumerate_tab(&d, shape.n)?
    };
    match shape.output {
        Output::Text => {
            for t in &ts {
                println!("{t}");
            }
        }
        Output::Json => {
            let v: Vec<Value> = ts.iter().map(|t| t.to_json()).collect();
            println!("{}", Value::Array(v));
        }
    }
    Ok(())
}

fn cmd_paths(shape: &Shape, set: PathSet, with_regions: bool) -> Outcome {
    let d = diagram(shape)?;
    let tuples = path_set(&d, shape.n, set)?;
    match shape.output {
        Output::Text => {
            for (k, p) in tuples.iter().enumerate() {
                println!("{k}: {p}");
                if with_regions {
                    for r in regions(&project(p)) {
                        println!("    {}", r.to_json());
                    }
                }
            }
        }
        Output::Json => {
            let v: Vec<Value> = tuples
                .iter()
                .map(|p| {
                    let mut j = p.to_json();
                    if with_regions {
                        j["regions"] = regions(&project(p)).iter().map(|r| r.to_json()).collect();
                    }
                    j
                })
                .collect();
            println!("{}", Value::Array(v));
        }
    }
    Ok(())
}

fn cmd_verify(n: u32, max_cells: usize, max_rows: usize, max_width: usize, suite: &str) -> Outcome {
    let suite: Suite = suite.parse()?;
    if n == 0 {
        return Err(Error::InvalidRank.into());
    }
    if let Err(f) = global_checks(n, suite) {
        return Err(Failure::Identity(format!("n={n} {f}")));
    }
    let diagrams = positive_skew_diagrams(n, max_cells, max_rows, max_width);
    let start = Instant::now();
    for d in &diagrams {
        let t0 = Instant::now();
        match check_diagram(d, n, suite) {
            Ok(counts) => {
                let counts: Vec<String> = counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!(
                    "ok   {d}  {}  {:.1} ms",
                    counts.join(" "),
                    t0.elapsed().as_secs_f64() * 1e3
                );
            }
            Err(f) => {
                return Err(Failure::Identity(format!(
                    "counterexample: n={n} lambda={:?} mu={:?}\n{f}",
                    d.lambda().parts(),
                    d.mu().parts()
                )));
            }
        }
    }
    println!(
        "{} diagrams passed suite {suite} for n={n} in {:.2} s",
        diagrams.len(),
        start.elapsed().as_secs_f64()
    );
    Ok(())
}

fn cmd_render(shape: &Shape, set: PathSet, index: usize, tableau: Option<&str>, out: &PathBuf) -> Outcome {
    let parent = out.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = parent {
        if !dir.is_dir() {
            return Err(Failure::Usage(format!("output directory {} does not exist", dir.display())));
        }
    }
    let p = match tableau {
        Some(text) => {
            let t = Tableau::parse(shape.n, text, &shape.mu.parse::<Partition>()?)?;
            from_tableau(&t)?
        }
        None => {
            let d = diagram(shape)?;
            let tuples = path_set(&d, shape.n, set)?;
            let len = tuples.len();
            tuples.into_iter().nth(index).ok_or_else(|| {
                Failure::from(Error::IndexOutOfRange {
                    k: index,
                    max: len.saturating_sub(1),
                })
            })?
        }
    };
    std::fs::write(out, render_svg(&project(&p))).map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Chi { shape, form } => cmd_chi(shape, *form),
        Command::Tableaux { shape, all, check } => cmd_tableaux(shape, *all, check.as_deref()),
        Command::Paths { shape, set, regions } => cmd_paths(shape, *set, *regions),
        Command::Verify {
            n,
            max_cells,
            max_rows,
            max_width,
            suite,
        } => cmd_verify(*n, *max_cells, *max_rows, *max_width, suite),
        Command::Render {
            shape,
            set,
            index,
            tableau,
            out,
        } => cmd_render(shape, *set, *index, tableau.as_deref(), out),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Positivity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
