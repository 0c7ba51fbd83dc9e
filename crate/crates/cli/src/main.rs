//! `qshilov`: verification suites, expression evaluation and principal
//! series reports on the command line.

mod eval;
mod model;
mod series;
mod svg;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qshilov_core::prinseries::{KVector, ParamPair};
use qshilov_core::scalars::ExactParam;

use model::Model;
use verify::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    An,
    Cn,
}

impl Algebra {
    fn name(self) -> &'static str {
        match self {
            Algebra::An => "an",
            Algebra::Cn => "cn",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Parser)]
#[command(name = "qshilov", version, about = "Quantum matrix balls and their degenerate principal series")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Rank {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
}

#[derive(Args)]
struct Params {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// `x` or `x+y*pi/h*i`, rational x and y.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites and report each check.
    Verify {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Word degree for serre, overlap degree for confluence, top degree for dimension.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate an expression in the localized algebra.
    Eval {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        expr: String,
    },
    /// Principal series: classification, intertwiner, checks.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Same as `series classify`.
    Classify(Params),
    /// Same as `series intertwiner`.
    Intertwiner(IntertwinerArgs),
    /// Wall diagram (SVG) for n = 2.
    Diagram {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Quantum matrices.
    #[command(subcommand)]
    An(AnCmd),
    /// Quantum symmetric matrices.
    #[command(subcommand)]
    Cn(CnCmd),
}

#[derive(Subcommand)]
enum SeriesCmd {
    Classify(Params),
    Intertwiner(IntertwinerArgs),
    /// Highest vectors, weights and the intertwiner on a window.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(0..))]
        window: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct IntertwinerArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Nonincreasing integers, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    k: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum AnCmd {
    Det(Rank),
    Star {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        elem: String,
    },
}

#[derive(Subcommand)]
enum CnCmd {
    Det(Rank),
    /// Module-algebra and confluence checks.
    VerifyRelations(Rank),
}

enum Failure {
    Usage(String),
    Check,
}

type Run = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(text: &str, output: &Option<PathBuf>) -> Run {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable") + "\n"
}

fn model(algebra: Algebra, n: u64) -> Result<Model, Failure> {
    Model::new(algebra, n as usize).map_err(usage)
}

fn param(s: &str, name: &str) -> Result<ExactParam, Failure> {
    s.parse().map_err(|e| usage(format!("--{name}: {e}")))
}

fn params(p: &Params) -> Result<ParamPair, Failure> {
    Ok(ParamPair::new(param(&p.alpha, "alpha")?, param(&p.beta, "beta")?))
}

fn verdict(ok: bool) -> Run {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn classify(p: &Params) -> Run {
    let pair = params(p)?;
    let r = series::report(&pair, p.n as usize).map_err(usage)?;
    let text = match p.format {
        Format::Text => series::report_text(&r),
        Format::Json => json(&r),
        Format::Svg => svg::diagram(&r).map_err(usage)?,
    };
    emit(&text, &p.output)
}

fn intertwiner(a: &IntertwinerArgs) -> Run {
    let k: KVector = a.k.parse().map_err(|e| usage(format!("--k: {e}")))?;
    if k.len() != a.n as usize {
        return Err(usage(format!("--k needs {} entries", a.n)));
    }
    let r = series::intertwiner(a.n as usize, &k).map_err(usage)?;
    match a.format {
        Format::Json => print!("{}", json(&r)),
        _ => {
            println!("a{} = {}", r.k, r.coefficient);
            for v in &r.violations {
                println!("FAIL {} component {}: {}", v.generator, v.component, v.residual);
            }
            if r.violations.is_empty() {
                println!("intertwining identity holds for E{n}, F{n}, K{n}", n = r.n);
            }
        }
    }
    verdict(r.violations.is_empty())
}

fn verify_out(r: &verify::VerifyReport, format: Format) -> Run {
    match format {
        Format::Json => print!("{}", json(r)),
        _ => print!("{}", r.text()),
    }
    verdict(r.ok())
}

fn print_det(algebra: Algebra, n: u64) -> Run {
    let m = model(algebra, n)?;
    println!("{}", m.pres().render(m.det()));
    Ok(())
}

fn run(cli: Cli) -> Run {
    match cli.cmd {
        Cmd::Verify { algebra, n, suite, degree, format } => {
            let m = model(algebra, n)?;
            let r = verify::run(&m, algebra.name(), suite, &verify::Options { degree });
            verify_out(&r, format)
        }
        Cmd::Eval { algebra, n, expr } => {
            let m = model(algebra, n)?;
            let x = eval::evaluate(&m, &expr).map_err(usage)?;
            println!("{}", m.render(&x));
            Ok(())
        }
        Cmd::Series(SeriesCmd::Classify(p)) | Cmd::Classify(p) => classify(&p),
        Cmd::Series(SeriesCmd::Intertwiner(a)) | Cmd::Intertwiner(a) => intertwiner(&a),
        Cmd::Series(SeriesCmd::Verify { n, window, format }) => {
            let r = series::verify(n as usize, window).map_err(usage)?;
            verify_out(&r, format)
        }
        Cmd::Diagram { alpha, beta, output } => classify(&Params {
            n: 2,
            alpha,
            beta,
            format: Format::Svg,
            output,
        }),
        Cmd::An(AnCmd::Det(r)) => print_det(Algebra::An, r.n),
        Cmd::Cn(CnCmd::Det(r)) => print_det(Algebra::Cn, r.n),
        Cmd::An(AnCmd::Star { rank, elem }) => {
            let m = model(Algebra::An, rank.n)?;
            let x = eval::evaluate(&m, &format!("star({elem})")).map_err(usage)?;
            println!("{}", m.render(&x));
            Ok(())
        }
        Cmd::Cn(CnCmd::VerifyRelations(r)) => {
            let m = model(Algebra::Cn, r.n)?;
            let mut a = verify::run(&m, "cn", Suite::ModuleAlgebra, &verify::Options { degree: None });
            let b = verify::run(&m, "cn", Suite::Confluence, &verify::Options { degree: None });
            a.checks.extend(b.checks);
            a.passed += b.passed;
            a.failed += b.failed;
            a.suite = "relations".into();
            verify_out(&a, Format::Text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = std::env::var("QSHILOV_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
