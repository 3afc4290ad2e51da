use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use solvext_core::models::{Level, ModelFamily};
use solvext_core::spectral::Grid;

pub const DEFAULT_TOL: f64 = 1e-3;
pub const DEFAULT_VERIFY_NMAX: u32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "solvext",
    version,
    about = "Rational extensions of the harmonic oscillator and Morse potentials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Check that a parameter set gives a nodeless deforming polynomial.
    Validate(CommonArgs),
    /// Tabulate the potential or one eigenfunction on a grid.
    Tabulate {
        #[arg(value_enum)]
        quantity: Quantity,
        /// `ground` or an excited index n.
        #[arg(long, default_value = "ground")]
        level: LevelArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Closed-form bound-state energies.
    Spectrum(CommonArgs),
    /// Cross-check the closed forms against numerical oracles.
    Verify(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub ell: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Highest excited index to include.
    #[arg(long)]
    pub nmax: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub xmin: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub xmax: Option<f64>,
    /// Number of grid points, boundaries included.
    #[arg(long = "n")]
    pub n_points: Option<usize>,
    /// Spectrum tolerance for `verify`.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(
        long,
        value_enum,
        env = "SOLVEXT_DEFAULT_FORMAT",
        default_value = "csv"
    )]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FamilyArg {
    Ho,
    Morse,
}

impl From<FamilyArg> for ModelFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Ho => ModelFamily::HarmonicRational,
            FamilyArg::Morse => ModelFamily::MorseRational,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Potential,
    Wavefunction,
}

/// `ground` or a non-negative excited index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LevelArg(pub Level);

impl FromStr for LevelArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ground" {
            return Ok(LevelArg(Level::Ground));
        }
        let digits = s.strip_prefix("n=").unwrap_or(s);
        digits
            .parse::<u32>()
            .map(|n| LevelArg(Level::Excited(n)))
            .map_err(|_| format!("expected `ground` or an excited index, got `{s}`"))
    }
}

impl TryFrom<String> for LevelArg {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<LevelArg> for String {
    fn from(l: LevelArg) -> Self {
        l.to_string()
    }
}

impl fmt::Display for LevelArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Level::Ground => f.write_str("ground"),
            Level::Excited(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Command {
    Validate,
    Tabulate { quantity: Quantity, level: LevelArg },
    Spectrum,
    Verify,
}

/// Fully parsed invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandConfig {
    pub command: Command,
    pub family: FamilyArg,
    pub ell: u32,
    pub alpha: Option<f64>,
    pub nmax: Option<u32>,
    pub xmin: Option<f64>,
    pub xmax: Option<f64>,
    pub n_points: Option<usize>,
    pub tol: f64,
    pub format: Format,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl CommandConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, UsageError> {
        let (command, args) = match cli.command {
            CliCommand::Validate(a) => (Command::Validate, a),
            CliCommand::Tabulate {
                quantity,
                level,
                common,
            } => (Command::Tabulate { quantity, level }, common),
            CliCommand::Spectrum(a) => (Command::Spectrum, a),
            CliCommand::Verify(a) => (Command::Verify, a),
        };
        let config = CommandConfig {
            command,
            family: args.family,
            ell: args.ell,
            alpha: args.alpha,
            nmax: args.nmax,
            xmin: args.xmin,
            xmax: args.xmax,
            n_points: args.n_points,
            tol: args.tol,
            format: args.format,
            output: args.output,
        };
        config.check()?;
        Ok(config)
    }

    /// Combination rules that clap cannot express.
    pub fn check(&self) -> Result<(), UsageError> {
        match (self.family, self.alpha) {
            (FamilyArg::Ho, Some(_)) => {
                return Err(UsageError(
                    "--alpha is not a parameter of the ho family".into(),
                ))
            }
            (FamilyArg::Morse, None) => {
                return Err(UsageError("--family morse requires --alpha".into()))
            }
            (FamilyArg::Morse, Some(a)) if !a.is_finite() => {
                return Err(UsageError("--alpha must be finite".into()))
            }
            _ => {}
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(UsageError("--tol must be positive".into()));
        }
        Ok(())
    }

    /// Default grid for the model with any `--xmin/--xmax/--n` overrides.
    pub fn grid(&self, default: Grid) -> Result<Grid, UsageError> {
        Grid::new(
            self.xmin.unwrap_or(default.xmin()),
            self.xmax.unwrap_or(default.xmax()),
            self.n_points.unwrap_or(default.n_points()),
        )
        .map_err(|e| UsageError(e.to_string()))
    }
}
