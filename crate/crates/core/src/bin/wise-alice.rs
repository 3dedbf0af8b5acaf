use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wise_alice::report::{self, Format, ThetaRange};
use wise_alice::scenario::Scenario;
use wise_alice::simulation;
use wise_alice::{Error, Result};

#[derive(Parser)]
#[command(name = "wise-alice", version, about = "Quantum-logic analysis of the Wise Alice game")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Scenario file (`key = value` lines).
    #[arg(long)]
    scenario: PathBuf,
    /// Scan resolution in degrees; overrides the scenario.
    #[arg(long)]
    resolution: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn load(&self) -> Result<Scenario> {
        let mut s = Scenario::load(&self.scenario)?;
        if let Some(r) = self.resolution {
            s.scan_resolution_deg = r;
            s.validate()?;
        }
        Ok(s)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Pure, classical mixed and quantum analysis of a scenario.
    Analyze(Common),
    /// Quantum equilibria only.
    Equilibria(Common),
    /// Reaction curves as two CSV files and an SVG plot.
    Curves {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        resolution: Option<f64>,
        /// Output prefix; writes PREFIX.alice.csv, PREFIX.bob.csv, PREFIX.svg.
        #[arg(long, default_value = "curves")]
        out: PathBuf,
    },
    /// Equilibrium counts over a grid of frame angles.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Alice's frame angles, START:STOP in degrees.
        #[arg(long, default_value = "5:85")]
        theta_a: String,
        /// Bob's frame angles, START:STOP in degrees.
        #[arg(long, default_value = "5:85")]
        theta_b: String,
        #[arg(long, default_value_t = 5.0)]
        step: f64,
    },
    /// Monte Carlo play at a fixed strategy pair.
    Simulate {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long)]
        rounds: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the round-by-round transcript as CSV.
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
    /// Ortholattice laws, disjunction table and plane representation.
    LatticeCheck {
        #[arg(long, default_value_t = 45.0, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => report::write_file(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze(c) => {
            let r = report::analyze(&c.load()?)?;
            emit(c.out.as_deref(), &r.render(c.format.into()))
        }
        Command::Equilibria(c) => {
            let records: Vec<_> = report::equilibria(&c.load()?)?.iter().map(Into::into).collect();
            emit(c.out.as_deref(), &report::render_equilibria(&records, c.format.into()))
        }
        Command::Curves {
            scenario,
            resolution,
            out,
        } => {
            let c = Common {
                scenario,
                resolution,
                format: OutputFormat::Text,
                out: None,
            };
            let files = report::write_curves(&c.load()?, &out)?;
            emit(
                None,
                &format!(
                    "wrote {}\nwrote {}\nwrote {}\n",
                    files.alice_csv.display(),
                    files.bob_csv.display(),
                    files.svg.display()
                ),
            )
        }
        Command::Sweep {
            common,
            theta_a,
            theta_b,
            step,
        } => {
            let ta: ThetaRange = theta_a.parse()?;
            let tb: ThetaRange = theta_b.parse()?;
            let rows = report::sweep(&common.load()?, ta, tb, step)?;
            emit(common.out.as_deref(), &report::render_sweep(&rows, common.format.into()))
        }
        Command::Simulate {
            common,
            alpha,
            beta,
            rounds,
            seed,
            transcript,
        } => {
            let mut s = common.load()?;
            if let Some(r) = rounds {
                s.rounds = r;
            }
            if let Some(seed) = seed {
                s.seed = seed;
            }
            s.validate()?;
            let (r, config) = report::simulate(&s, alpha, beta)?;
            if let Some(path) = transcript {
                let mut buf = Vec::new();
                simulation::write_transcript_csv(&mut buf, &simulation::transcript(&config))
                    .expect("writing to memory");
                report::write_file(&path, &String::from_utf8(buf).expect("ascii csv"))?;
            }
            emit(common.out.as_deref(), &r.render(common.format.into()))
        }
        Command::LatticeCheck { theta, format, out } => {
            let r = report::lattice_check(theta)?;
            emit(out.as_deref(), &r.render(format.into())?)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
