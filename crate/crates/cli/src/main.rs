use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use shi_core::bijection::{self, Kind};
use shi_core::verify::{self, Status};
use shi_core::{AffinePerm, NSet, ShiRegionRecord};

mod encode;
mod plot;

use encode::Encoding;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    Core(#[from] shi_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("verification failed")]
    Verification,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use shi_core::Error as E;
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Core(E::NotExtremal(_) | E::OutsideFundamentalSet { .. } | E::NotDominant) => 3,
            CliError::Core(_) => 2,
            CliError::Verification => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Minimal,
    Maximal,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Minimal => Kind::Minimal,
            KindArg::Maximal => Kind::Maximal,
        }
    }
}

#[derive(Parser)]
#[command(name = "shi", version, about = "Alcoves, cores and regions of the m-Shi arrangement")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between encodings of cores and affine permutations.
    Convert {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        from: Encoding,
        #[arg(long, value_enum)]
        to: Encoding,
        input: String,
    },
    /// Send an extremal alcove to its core, or a core to its alcove.
    Map {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "minimal")]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "nset")]
        word: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        nset: Option<String>,
        /// Read an n-set and return the alcove.
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write every extremal alcove as JSON lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "minimal")]
        kind: KindArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every claim against brute force.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Draw the arrangement for n = 3 as SVG.
    Plot {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Regions to outline, `;`-separated words; prefix `orbit:` for a whole orbit.
        #[arg(long)]
        highlight: Option<String>,
    },
}

fn desk_bounds(n: usize, m: usize) -> Result<(), CliError> {
    if !(3..=5).contains(&n) || !(1..=3).contains(&m) {
        return Err(CliError::Invalid(format!("need 3 <= n <= 5 and 1 <= m <= 3, got n={n} m={m}")));
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn map(n: usize, m: usize, kind: Kind, word: Option<String>, nset: Option<String>, inverse: bool, as_json: bool) -> Result<(), CliError> {
    let ctx = kind.context(n, m)?;
    let record = match (word, nset) {
        (Some(word), None) if !inverse => {
            let w = AffinePerm::from_word(&encode::parse_word(&word, n)?, n)?;
            ShiRegionRecord::from_alcove(&w, &ctx)?
        }
        (None, Some(s)) => {
            let s = NSet::new(&encode::parse_ints(&s)?)?;
            let w = bijection::core_to_alcove(&s, &ctx)?;
            ShiRegionRecord::from_alcove(&w, &ctx)?
        }
        (Some(_), None) => return Err(CliError::Invalid("--inverse takes --nset".into())),
        _ => return Err(CliError::Invalid("give one of --word or --nset".into())),
    };
    if as_json {
        println!("{}", encode::record_json(&record, m));
    } else {
        let word: Vec<String> = record.w.reduced_word().iter().map(|i| i.to_string()).collect();
        println!("alcove  {} word [{}]", record.w, word.join(" "));
        println!("core    {} {}", record.core, record.core.to_partition());
        println!("g       {}", record.g);
        println!("y       {}", record.y);
        println!("sigma   {}", record.sigma);
    }
    Ok(())
}

fn enumerate(n: usize, m: usize, kind: Kind, out: &Option<PathBuf>) -> Result<(), CliError> {
    desk_bounds(n, m)?;
    let records = bijection::enumerate_extremal(n, m, kind)?;
    let mut body = String::new();
    for r in &records {
        body.push_str(&encode::record_json(r, m).to_string());
        body.push('\n');
    }
    let t = kind.context(n, m)?.t();
    let summary = format!("{kind} n={n} m={m} t={t}: {} records", records.len());
    match out {
        Some(_) => {
            emit(out, &body)?;
            println!("{summary}");
        }
        None => {
            emit(out, &body)?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn run_verify(n: usize, m: usize, as_json: bool) -> Result<(), CliError> {
    desk_bounds(n, m)?;
    let checks = verify::run(n, m)?;
    if as_json {
        let report: Vec<_> = checks
            .iter()
            .map(|c| {
                json!({
                    "check_id": c.id,
                    "statement_ref": c.statement,
                    "status": c.status.to_string(),
                    "witness": c.witness,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        for c in &checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            println!("{tag} {:<34} {}", c.id, c.witness);
        }
    }
    if verify::all_pass(&checks) {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

fn run_plot(n: usize, m: usize, out: &Option<PathBuf>, highlight: Option<String>) -> Result<(), CliError> {
    if n != 3 {
        return Err(CliError::Invalid(format!("plot draws n = 3 only, got n={n}")));
    }
    desk_bounds(n, m)?;
    let mut highlights = Vec::new();
    for spec in highlight.iter().flat_map(|h| h.split(';')) {
        let (orbit, word) = match spec.trim().strip_prefix("orbit:") {
            Some(rest) => (true, rest),
            None => (false, spec),
        };
        let w = AffinePerm::from_word(&encode::parse_word(word, n)?, n)?;
        highlights.push(if orbit {
            plot::Highlight::Orbit(w)
        } else {
            plot::Highlight::Region(w)
        });
    }
    let p = plot::plot(m, &highlights)?;
    emit(out, &p.svg)?;
    if out.is_some() {
        println!("{} regions, {} outlined", p.regions, p.highlighted);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Convert { n, from, to, input } => {
            encode::convert(n, from, to, &input).map(|v| println!("{v}"))
        }
        Command::Map { n, m, kind, word, nset, inverse, json } => map(n, m, kind.into(), word, nset, inverse, json),
        Command::Enumerate { n, m, kind, out } => enumerate(n, m, kind.into(), &out),
        Command::Verify { n, m, json } => run_verify(n, m, json),
        Command::Plot { n, m, out, highlight } => run_plot(n, m, &out, highlight),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("shi: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
