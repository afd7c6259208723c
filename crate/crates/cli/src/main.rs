//! `erepr` — hydrogen observables under the entanglement charge-suppression
//! model, with machine-readable output.

mod commands;
mod output;
mod settings;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use erepr_core::Topology;
use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "erepr",
    version,
    about = "Hydrogen spectra, hyperfine transitions, entanglement entropies and \
             observational alpha bounds under the wormhole charge-suppression model",
    after_help = "Exit codes: 0 success, 1 computation/domain error, 2 usage error."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    /// Suppress the timestamp field for byte-identical reruns.
    #[arg(long, global = true)]
    reproducible: bool,

    /// Key-value config file presetting `dataset` and `topology`.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Constants dataset id (also via EREPR_CONSTANTS_DATASET).
    #[arg(long, global = true, value_name = "ID")]
    dataset: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Table => Format::Table,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TopologyArg {
    Nontraversable,
    Traversable,
}

impl From<TopologyArg> for Topology {
    fn from(t: TopologyArg) -> Self {
        match t {
            TopologyArg::Nontraversable => Topology::Nontraversable,
            TopologyArg::Traversable => Topology::Traversable,
        }
    }
}

/// Shared model parameters of a suppression point.
#[derive(Debug, Args)]
struct ModelArgs {
    /// Suppression strength parameter alpha (> 0).
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,

    /// Entanglement entropy in nats: a number or the token `ln2`.
    #[arg(long, value_parser = parse_entropy, default_value = "ln2", allow_hyphen_values = true)]
    entropy: f64,

    /// Wormhole topology; defaults to the config file value, else
    /// nontraversable.
    #[arg(long, value_enum)]
    topology: Option<TopologyArg>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Suppressed Bohr levels and the Bohr radius.
    Spectrum {
        /// Highest principal quantum number to print.
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// The three hyperfine transitions and the 21-cm line splitting.
    Hfs {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Lower bounds on alpha from precision measurements.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Residual effective charge of an entangled hydrogen atom.
    Charge {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Entanglement entropies driving the model.
    #[command(subcommand)]
    Entropy(EntropyCommand),
    /// Independent numerical radial eigensolver.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Print the bundled constants table.
    Constants,
}

#[derive(Debug, Subcommand)]
enum BoundCommand {
    /// Invert a relative hyperfine-splitting precision into alpha_min.
    Hyperfine {
        /// Relative precision of the splitting measurement (> 0).
        #[arg(long, allow_hyphen_values = true)]
        precision: f64,
        /// Entanglement entropy in nats: a number or `ln2`.
        #[arg(long, value_parser = parse_entropy, default_value = "ln2", allow_hyphen_values = true)]
        entropy: f64,
        #[arg(long, value_enum)]
        topology: Option<TopologyArg>,
    },
    /// Invert a neutrality limit (units of e) into alpha_min.
    Neutrality {
        /// Upper limit on the residual charge, in units of e.
        #[arg(long, allow_hyphen_values = true)]
        charge_limit: f64,
        /// Entanglement entropy in nats: a number or `ln2`.
        #[arg(long, value_parser = parse_entropy, default_value = "1", allow_hyphen_values = true)]
        entropy: f64,
        #[arg(long, value_enum)]
        topology: Option<TopologyArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QubitStateArg {
    Singlet,
    TripletZero,
    UpUp,
    DownDown,
    Custom,
}

#[derive(Debug, Subcommand)]
enum EntropyCommand {
    /// Von Neumann entropy of a two-qubit spin state.
    Qubit {
        #[arg(long, value_enum, default_value_t = QubitStateArg::Singlet)]
        state: QubitStateArg,
        /// With --state custom: eight comma-separated reals, re,im per
        /// amplitude in the order up-up, up-down, down-up, down-down.
        #[arg(long, allow_hyphen_values = true)]
        amplitudes: Option<String>,
    },
    /// Ground-state entropy of two charged particles in harmonic traps.
    Oscillator {
        /// Mass of particle 1 [kg].
        #[arg(long, required_unless_present = "demo", allow_hyphen_values = true)]
        mass1: Option<f64>,
        /// Mass of particle 2 [kg].
        #[arg(long, required_unless_present = "demo", allow_hyphen_values = true)]
        mass2: Option<f64>,
        /// Trap angular frequency of particle 1 [rad/s].
        #[arg(long, required_unless_present = "demo", allow_hyphen_values = true)]
        freq1: Option<f64>,
        /// Trap angular frequency of particle 2 [rad/s].
        #[arg(long, required_unless_present = "demo", allow_hyphen_values = true)]
        freq2: Option<f64>,
        /// Trap separation [m].
        #[arg(long, required_unless_present = "demo", allow_hyphen_values = true)]
        separation: Option<f64>,
        /// Charge of particle 1 [C].
        #[arg(long, required_unless_present = "demo", allow_hyphen_values = true)]
        charge1: Option<f64>,
        /// Charge of particle 2 [C].
        #[arg(long, required_unless_present = "demo", allow_hyphen_values = true)]
        charge2: Option<f64>,
        /// Use the documented near-critical electron-mass pair instead.
        #[arg(long, conflicts_with_all = ["mass1", "mass2", "freq1", "freq2", "separation", "charge1", "charge2"])]
        demo: bool,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Solve the radial problem and compare with the analytic spectrum.
    Solve {
        /// Dimensionless charge product e_A·e_B/e².
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        charge_product: f64,
        /// Orbital angular momentum quantum number.
        #[arg(long, default_value_t = 0)]
        l: u32,
        /// Number of levels to extract (1..=5).
        #[arg(long, default_value_t = 3)]
        levels: u32,
        /// Box radius in Bohr radii (>= 50).
        #[arg(long, default_value_t = 50.0)]
        rmax: f64,
        /// Number of interior grid points (>= 1000).
        #[arg(long, default_value_t = 12000)]
        points: usize,
        /// Optional reduced mass [kg]; default is the plain electron-mass
        /// convention.
        #[arg(long, allow_hyphen_values = true)]
        reduced_mass: Option<f64>,
    },
    /// Certify the suppression scaling numerically at a resolvable x.
    Verify {
        /// Suppression factor x in [1e-4, 1e-2].
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, value_enum)]
        topology: Option<TopologyArg>,
    },
}

fn parse_entropy(raw: &str) -> Result<f64, String> {
    match raw {
        "ln2" => Ok(std::f64::consts::LN_2),
        other => other
            .parse::<f64>()
            .map_err(|_| format!("expected a number or the token 'ln2', got {other:?}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = cli.format.into();

    let settings = match settings::Settings::resolve(cli.config.as_deref()) {
        Ok(mut s) => {
            if let Some(dataset) = &cli.dataset {
                s.dataset = dataset.clone();
            }
            s
        }
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };

    let command_name = commands::command_name(&cli.command);
    match commands::run(&cli, &settings) {
        Ok(mut records) => {
            if !cli.reproducible {
                let stamp = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
                for record in &mut records {
                    record.timestamp = Some(stamp.clone());
                }
            }
            print!("{}", output::render_records(&records, format));
            ExitCode::SUCCESS
        }
        Err(err) => {
            let record = output::ErrorRecord::from_core(&command_name, &err);
            print!("{}", output::render_error(&record, format));
            ExitCode::from(1)
        }
    }
}
