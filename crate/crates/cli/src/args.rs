//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};

use omega_lie::oracle::Sampler;
use omega_lie::{Field, Scalar, Tolerances};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "omegalie",
    version,
    about = "Validate, classify and compare 3-dimensional omega-Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the omega-Jacobi identity and print the induced omega.
    Validate {
        path: String,
        /// Absolute threshold is `tol · max(1, max |c|)²`.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = ConventionArg::Auto)]
        convention: ConventionArg,
        #[arg(long)]
        json: bool,
    },
    /// Classify one algebra and print the canonical class with its witness.
    Classify {
        path: String,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two algebras are isomorphic.
    Isomorphic {
        a: String,
        b: String,
        /// Also run the classifier-independent witness search.
        #[arg(long)]
        search: bool,
        /// Compare the complexifications.
        #[arg(long)]
        complexify: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        attempts: usize,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        json: bool,
    },
    /// List catalog entries or dump one as a document.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Classify every row of the real Bianchi-type table.
    Table1 {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run a randomized oracle experiment.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::Complex)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = SamplerArg::Gaussian)]
        sampler: SamplerArg,
        /// Upper bound on the condition number of random basis changes.
        #[arg(long, default_value_t = 100.0)]
        cond_cap: f64,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Names, parameters and fields of every entry.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print an entry as an algebra document.
    Show {
        name: String,
        /// `key=value`; complex values as `1.5-2i`.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, Scalar)>,
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        /// Which omega to write into the document.
        #[arg(long, value_enum, default_value_t = OmegaArg::Printed)]
        omega: OmegaArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Auto,
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Real,
    Complex,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Real => Field::Real,
            FieldArg::Complex => Field::Complex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SamplerArg {
    Gaussian,
    Integer,
}

impl From<SamplerArg> for Sampler {
    fn from(s: SamplerArg) -> Sampler {
        match s {
            SamplerArg::Gaussian => Sampler::Gaussian,
            SamplerArg::Integer => Sampler::Integer,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Completeness,
    Invariance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OmegaArg {
    /// The omega as published next to the entry.
    Printed,
    /// The omega induced by the brackets.
    Induced,
    /// No omega; readers induce it.
    None,
}

#[derive(Clone, Copy, Debug, Default, Args)]
pub struct TolArgs {
    /// Validation tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub tol_rank: Option<f64>,
    #[arg(long)]
    pub tol_spec: Option<f64>,
    #[arg(long)]
    pub tol_wit: Option<f64>,
}

pub fn check_tol(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(CliError::Input(format!(
            "--{name} must be positive and finite, got {x}"
        )))
    }
}

impl TolArgs {
    pub fn tolerances(&self) -> Result<Tolerances, CliError> {
        let d = Tolerances::default();
        let pick = |name: &str, v: Option<f64>, default: f64| v.map_or(Ok(default), |x| check_tol(name, x));
        Ok(Tolerances {
            val: pick("tol", self.tol, d.val)?,
            rank: pick("tol-rank", self.tol_rank, d.rank)?,
            spec: pick("tol-spec", self.tol_spec, d.spec)?,
            wit: pick("tol-wit", self.tol_wit, d.wit)?,
        })
    }
}

fn parse_param(s: &str) -> Result<(String, Scalar), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got `{s}`"))?;
    let value: Scalar = v.trim().parse().map_err(|_| format!("`{v}` is not a number"))?;
    Ok((k.trim().to_string(), value))
}

impl Command {
    /// Whether errors should also be reported as JSON on stdout.
    pub fn wants_json(&self) -> bool {
        match self {
            Command::Validate { json, .. }
            | Command::Classify { json, .. }
            | Command::Isomorphic { json, .. }
            | Command::Table1 { json, .. }
            | Command::Oracle { json, .. } => *json,
            Command::Catalog { command } => match command {
                CatalogCommand::List { json } => *json,
                CatalogCommand::Show { .. } => true,
            },
        }
    }
}
