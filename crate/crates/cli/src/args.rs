use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_core::Regime;

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Exact Schubert-calculus counts of planes on hypersurfaces")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format; csv is only available for tables (asymptote, scan)
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Result cache directory
    #[arg(long, env = "SCHUBERT_CACHE", global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Neither read nor write the cache
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Quadrature / scan grid (nodes per axis); for counts, adds a numeric cross-check
    #[arg(long, global = true)]
    pub grid: Option<usize>,

    /// Include the root polynomial in canonical text form
    #[arg(long, global = true)]
    pub dump_poly: bool,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    Complex,
    Real,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Self {
        match r {
            RegimeArg::Complex => Regime::Complex,
            RegimeArg::Real => Regime::Real,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Real,
    Complex,
    Incidence,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count (k-1)-planes (complex) or (2k-1)-planes (real) on a degree-d hypersurface
    Count {
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(short, long)]
        d: u32,
        #[arg(short, long)]
        k: u32,
    },
    /// Planes meeting 2n generic subspaces along lines
    Incidence {
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(short, long)]
        n: u32,
    },
    /// Real 3-planes on a complete intersection of r cubics
    CubicCi {
        #[arg(short, long)]
        r: u32,
    },
    /// Schur polynomial of a partition, e.g. "(2,1,0)"
    Schur {
        #[arg(long, value_enum, default_value_t = RegimeArg::Complex)]
        regime: RegimeArg,
        #[arg(long)]
        partition: String,
    },
    /// Schur coefficient of a polynomial given in canonical text form
    Lambda {
        #[arg(long, value_enum, default_value_t = RegimeArg::Complex)]
        regime: RegimeArg,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        partition: String,
    },
    /// Torus scan of F_d = f_d / (x1 x2)^m for real 3-planes
    Scan {
        #[arg(short, long)]
        d: u32,
    },
    /// Log-scale trend table
    Asymptote {
        #[arg(long, value_enum)]
        family: Family,
        /// Degrees (real, complex) or n values (incidence), comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<u32>,
        /// Rank for the complex family
        #[arg(short, long, default_value_t = 2)]
        k: u32,
    },
    /// Divisibility and parity conditions for (d, k)
    Feasibility {
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(short, long)]
        d: u32,
        #[arg(short, long)]
        k: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Count { .. } => "count",
            Command::Incidence { .. } => "incidence",
            Command::CubicCi { .. } => "cubic-ci",
            Command::Schur { .. } => "schur",
            Command::Lambda { .. } => "lambda",
            Command::Scan { .. } => "scan",
            Command::Asymptote { .. } => "asymptote",
            Command::Feasibility { .. } => "feasibility",
        }
    }

    pub fn is_table(&self) -> bool {
        matches!(self, Command::Asymptote { .. } | Command::Scan { .. })
    }
}
