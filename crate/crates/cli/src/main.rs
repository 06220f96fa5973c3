use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cranklab::config::Config;
use cranklab::error::CrankError;

mod commands;

#[derive(Debug, Parser)]
#[command(
    name = "cranklab",
    version,
    about = "Exact and asymptotic crank statistics"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Working precision in bits for floating-point evaluation.
    #[arg(long, global = true, env = "CRANKLAB_PRECISION", default_value_t = 256)]
    precision: u32,

    /// Output format.
    #[arg(long, global = true, env = "CRANKLAB_FORMAT", value_enum)]
    format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true, env = "CRANKLAB_OUT")]
    out: Option<PathBuf>,

    #[arg(
        long,
        global = true,
        env = "CRANKLAB_N_CAP_ENUMERATION",
        default_value_t = 45
    )]
    n_cap_enumeration: u64,

    #[arg(
        long,
        global = true,
        env = "CRANKLAB_N_CAP_DENSE",
        default_value_t = 500
    )]
    n_cap_dense: u64,

    #[arg(
        long,
        global = true,
        env = "CRANKLAB_N_CAP_RESIDUE",
        default_value_t = 5000
    )]
    n_cap_residue: u64,

    #[arg(
        long,
        global = true,
        env = "CRANKLAB_REALNESS_TOLERANCE",
        default_value_t = 1e-6
    )]
    realness_tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Crank, rank and the ingredients of both for one partition.
    Stat {
        /// Parts in any order.
        #[arg(required = true, allow_negative_numbers = true)]
        parts: Vec<i64>,
    },
    /// Exact residue counts M(r, Q; n) for 0 <= n <= n-max.
    Table {
        #[arg(long = "Q", env = "CRANKLAB_Q")]
        q: i64,
        #[arg(long, env = "CRANKLAB_N_MAX")]
        n_max: u64,
        /// Emit the full crank table M(m, n) instead (Q is ignored).
        #[arg(long)]
        crank: bool,
    },
    /// Circle-method estimate of M(r, Q; n) with its error budget.
    Estimate {
        #[arg(long, env = "CRANKLAB_R")]
        r: i64,
        #[arg(long = "Q", env = "CRANKLAB_Q")]
        q: i64,
        #[arg(long, env = "CRANKLAB_N")]
        n: i64,
    },
    /// Run a verification suite and emit its JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Equidistribution,
    Positivity,
    Lemma,
    Subadditivity,
    Congruences,
    Budget,
    Sufficiency,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long = "Q", env = "CRANKLAB_Q")]
    q: Option<i64>,
    #[arg(long, env = "CRANKLAB_N_MIN")]
    n_min: Option<u64>,
    #[arg(long, env = "CRANKLAB_N_MAX")]
    n_max: Option<u64>,
    #[arg(long, env = "CRANKLAB_L_MAX")]
    l_max: Option<u64>,
    #[arg(long)]
    a_min: Option<u64>,
    #[arg(long)]
    a_max: Option<u64>,
    #[arg(long)]
    b_min: Option<u64>,
    #[arg(long)]
    b_max: Option<u64>,
    /// Largest odd Q for the budget suite.
    #[arg(long)]
    q_max: Option<i64>,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification,
    Runtime(String),
}

impl From<CrankError> for Failure {
    fn from(e: CrankError) -> Self {
        match e {
            CrankError::Capacity {
                what,
                requested,
                cap,
            } => {
                let flag = match what {
                    "enumeration n" => "--n-cap-enumeration / CRANKLAB_N_CAP_ENUMERATION",
                    "crank table n_max" => "--n-cap-dense / CRANKLAB_N_CAP_DENSE",
                    _ => "--n-cap-residue / CRANKLAB_N_CAP_RESIDUE",
                };
                Failure::Usage(format!(
                    "{what} = {requested} is above the cap {cap}; raise it with {flag}"
                ))
            }
            CrankError::Domain(msg) => Failure::Usage(msg),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

pub struct Output {
    sink: Box<dyn Write>,
}

impl Output {
    fn open(path: Option<&PathBuf>) -> io::Result<Self> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Output { sink })
    }

    pub fn writer(&mut self) -> &mut dyn Write {
        &mut *self.sink
    }

    pub fn json(&mut self, value: &serde_json::Value) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut self.sink, value)?;
        writeln!(self.sink)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    let cfg = Config {
        precision_bits: g.precision,
        n_cap_enumeration: g.n_cap_enumeration,
        n_cap_dense: g.n_cap_dense,
        n_cap_residue: g.n_cap_residue,
        realness_tolerance: g.realness_tolerance,
        output_path: g.out.as_ref().map(|p| p.display().to_string()),
    };
    cfg.validate()?;
    let mut out = Output::open(g.out.as_ref())?;
    let result = match cli.command {
        Command::Stat { parts } => {
            commands::stat(&parts, g.format.unwrap_or(Format::Text), &mut out)
        }
        Command::Table { q, n_max, crank } => commands::table(
            q,
            n_max,
            crank,
            g.format.unwrap_or(Format::Csv),
            &cfg,
            &mut out,
        ),
        Command::Estimate { r, q, n } => commands::estimate(r, q, n, &cfg, &mut out),
        Command::Verify(args) => commands::verify(&args, &cfg, &mut out),
    };
    out.writer().flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
