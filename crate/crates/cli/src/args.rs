use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "froeberg", version, about = "Fröberg function, closure degree bounds and their finite-field checks")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Echoed into every report; drives all random draws.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate F(m) and F⁺(m) and report the smallest zero m0.
    Froeberg {
        #[command(flatten)]
        degrees: DegreeArgs,
        /// Last m to tabulate (default m0 + d + 1).
        #[arg(long)]
        through: Option<u64>,
    },
    /// All degree bounds for one degree type.
    Bounds {
        #[command(flatten)]
        degrees: DegreeArgs,
        /// a-invariant of a Cohen-Macaulay ring, enables the ideal bound.
        #[arg(long, allow_hyphen_values = true)]
        ainv: Option<i64>,
    },
    /// Koszul, semistable and generic tight-closure bounds side by side.
    Table {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        a: u32,
        /// Values of n such as `3..8,10,11`.
        #[arg(long)]
        n: String,
    },
    /// Finite-field checks of the predictions.
    Verify {
        #[command(subcommand)]
        check: Verify,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Hilbert functions of random forms against F⁺.
    Hilbert {
        #[command(flatten)]
        degrees: DegreeArgs,
        #[arg(long, env = "FROEBERG_PRIME", default_value_t = 32003)]
        p: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Worker threads for the trials.
        #[arg(long, env = "FROEBERG_WORKERS")]
        workers: Option<usize>,
    },
    /// R_m ⊆ I at m = m0 + d + 1 + a on a fixture ring.
    TheoremC {
        #[command(flatten)]
        ring: FixtureArgs,
        #[arg(long, allow_hyphen_values = true)]
        ainv: Option<i64>,
        /// Random draws allowed before giving up on a primary ideal.
        #[arg(long, default_value_t = 16)]
        draws: usize,
    },
    /// Search for q with b^q ∈ I^[q] for every basis element b of R at m0 + d + 1.
    TheoremB {
        #[command(flatten)]
        ring: FixtureArgs,
        /// Generators of I in the form-system text format.
        #[arg(long)]
        ideal_file: Option<PathBuf>,
        /// Largest q tried (default p^4).
        #[arg(long)]
        qmax: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct DegreeArgs {
    /// Projective dimension: the ring has dimension d + 1.
    #[arg(long)]
    pub d: u32,
    #[command(flatten)]
    pub shape: ShapeArgs,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    /// Number of generators of constant degree `--a`.
    #[arg(long, requires = "a", conflicts_with = "degrees")]
    pub n: Option<usize>,
    #[arg(long, requires = "n", conflicts_with = "degrees")]
    pub a: Option<u32>,
    /// Generator degrees, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    /// One of fermat-cubic, fermat-cubic-p2, fermat-cubic-p5,
    /// fermat-cubic-p7, fermat-quartic, polynomial-ring.
    #[arg(long)]
    pub fixture: String,
    /// Override the fixture's prime.
    #[arg(long)]
    pub p: Option<u64>,
    /// Defaults to the fixture's dimension minus one.
    #[arg(long)]
    pub d: Option<u32>,
    #[command(flatten)]
    pub shape: ShapeArgs,
}
