use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orbigeo::rational::parse_rational;
use orbigeo::scenario::{
    analyze, parse_scenario, parse_scenario_at, render_reports, render_request, run_request, AnalysisReport,
    AnalyzeOptions, Format, Request,
};
use orbigeo::{beta, geography, AdeType, ChernReport, Error, Rational, SpecialFiber};

#[derive(Parser)]
#[command(name = "orbigeo", version, about = "Exact orbifold Chern numbers and hyperbolicity criteria")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze scenario files
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        out: Output,
        /// Evaluate a parameterised scenario at one value, e.g. `k=7`
        #[arg(long, value_parser = parse_param)]
        param: Option<i64>,
        /// Warn when a component's removed count disagrees with its recorded incidences
        #[arg(long)]
        check_incidence: bool,
    },
    /// Chern numbers of the n-cyclic cover of P2 branched along a nodal degree-d curve
    Cover {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Isotropy order of an ADE point, e.g. `beta D4 2,2,3`
    Beta {
        ade: AdeType,
        #[arg(value_delimiter = ',')]
        mults: Vec<u32>,
    },
    /// Degree bounds for curves on cyclic covers
    GenusBound {
        #[command(subcommand)]
        target: GenusTarget,
    },
    /// Truncated defect relation arguments
    Defect {
        #[command(subcommand)]
        target: DefectTarget,
    },
    /// Noether, BMY, ball-quotient and Horikawa-line margins
    Geography {
        #[arg(long, value_parser = parse_rat)]
        c1sq: Rational,
        #[arg(long, value_parser = parse_rat)]
        c2: Rational,
    },
}

#[derive(Subcommand)]
enum GenusTarget {
    Plane {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
        #[arg(long = "degC")]
        deg_c: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    Hirzebruch {
        #[arg(long = "N")]
        big_n: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        c: i64,
        #[arg(long)]
        dd: i64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum DefectTarget {
    Cover {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: Output,
    },
    Product {
        #[arg(long, value_delimiter = ',', required = true)]
        fibers1: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        fibers2: Vec<u32>,
        /// A fibre with its own marks, e.g. `G1:2,2`; repeatable
        #[arg(long, value_parser = parse_special)]
        special: Vec<SpecialFiber>,
        #[command(flatten)]
        out: Output,
    },
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("expected an integer or p/q, got `{s}`"))
}

fn parse_param(s: &str) -> Result<i64, String> {
    s.strip_prefix("k=").and_then(|v| v.parse().ok()).ok_or_else(|| format!("expected k=<int>, got `{s}`"))
}

fn parse_special(s: &str) -> Result<SpecialFiber, String> {
    let (name, marks) = s.split_once(':').ok_or_else(|| format!("expected <name>:<marks>, got `{s}`"))?;
    let marks = if marks.is_empty() {
        Vec::new()
    } else {
        marks.split(',').map(|m| m.parse().map_err(|_| format!("invalid mark `{m}`"))).collect::<Result<_, _>>()?
    };
    Ok(SpecialFiber { name: name.to_string(), marks })
}

/// Writes to stdout; a closed pipe (`orbigeo .. | head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn analyze_file(path: &PathBuf, param: Option<i64>, opts: &AnalyzeOptions) -> Result<Vec<AnalysisReport>, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    let instances = match param {
        Some(k) => vec![parse_scenario_at(&text, k)?],
        None => parse_scenario(&text)?,
    };
    instances.iter().map(|inst| analyze(&name, inst, opts)).collect()
}

fn run_analyze(mut files: Vec<PathBuf>, format: Format, param: Option<i64>, opts: AnalyzeOptions) -> ExitCode {
    files.sort();
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = files.iter().map(|f| s.spawn(move || analyze_file(f, param, &opts))).collect();
        handles.into_iter().map(|h| h.join().expect("analysis thread panicked")).collect()
    });
    let mut reports = Vec::new();
    let mut code = 0;
    for (path, result) in files.iter().zip(results) {
        match result {
            Ok(rs) => reports.extend(rs),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                if code == 0 {
                    code = e.exit_code();
                }
            }
        }
    }
    if !reports.is_empty() {
        emit(&render_reports(&reports, format));
    }
    for r in reports.iter().filter(|r| !r.expectations_hold()) {
        for e in r.expectations.iter().filter(|e| !e.holds) {
            eprintln!("error: {}: expected {} = {}, computed {}", r.scenario, e.quantity, e.expected, e.actual);
        }
        if code == 0 {
            code = 1;
        }
    }
    ExitCode::from(code as u8)
}

fn request(req: Request, out: &Output) -> Result<(), Error> {
    emit(&render_request(&run_request(&req)?, out.format.into()));
    Ok(())
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Analyze { .. } => unreachable!("handled in main"),
        Command::Cover { d, n, out } => request(Request::Cover { d, n }, &out),
        Command::Beta { ade, mults } => {
            let b = beta(ade, &mults)?;
            emit(&format!("beta({ade}; {}) = {b}\n", mults.iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
            if let Some(note) = ade.beta_row().index_note(ade) {
                eprintln!("warning: {note}");
            }
            Ok(())
        }
        Command::GenusBound { target: GenusTarget::Plane { d, n, deg_c, out } } => {
            request(Request::GenusBoundPlane { d, n, deg_c }, &out)
        }
        Command::GenusBound { target: GenusTarget::Hirzebruch { big_n, a, b, n, c, dd, out } } => {
            request(Request::GenusBoundHirzebruch { big_n, a, b, n, c, dd }, &out)
        }
        Command::Defect { target: DefectTarget::Cover { dim, q, m, out } } => {
            request(Request::DefectCover { dim, q, m }, &out)
        }
        Command::Defect { target: DefectTarget::Product { fibers1, fibers2, special, out } } => {
            request(Request::DefectProduct { fibers1, fibers2, special }, &out)
        }
        Command::Geography { c1sq, c2 } => {
            let r = ChernReport::new(c1sq, c2);
            let mut text = format!("c1^2 = {}, c2 = {}, chi = {}\n", r.c1sq, r.c2, r.chi);
            for v in geography(&r) {
                text.push_str(&v.line());
                text.push('\n');
            }
            emit(&text);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Analyze { files, out, param, check_incidence } = cli.command {
        return run_analyze(files, out.format.into(), param, AnalyzeOptions { check_incidence });
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
