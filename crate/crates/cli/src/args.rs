use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hydromoments::verify::{Family, GridSize, Suite};
use hydromoments::{Mode, Space};

#[derive(Parser, Debug)]
#[command(name = "hydromoments", version, about = "Radial expectation values <r^α> and <p^α> of D-dimensional hydrogenic states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one or more moments of a single state.
    Compute(ComputeArgs),
    /// Sweep moments over a grid of states and orders.
    Table(TableArgs),
    /// Run verification suites; exits 1 if a hard check fails.
    Verify(VerifyArgs),
    /// Compare exact moments with their Rydberg or high-dimensional estimates.
    Limits(LimitsArgs),
    /// Evaluate position–momentum uncertainty inequalities for one state.
    Uncertainty(UncertaintyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

fn parse_space(s: &str) -> Result<Space, String> {
    match s {
        "r" | "position" => Ok(Space::Position),
        "p" | "momentum" => Ok(Space::Momentum),
        _ => Err(format!("unknown space '{s}' (expected r or p)")),
    }
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "auto" => Ok(Mode::Auto),
        "exact" => Ok(Mode::Exact),
        "float" => Ok(Mode::Float),
        "oracle" => Ok(Mode::Oracle),
        _ => Err(format!("unknown mode '{s}' (expected auto, exact, float or oracle)")),
    }
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long, value_parser = parse_space)]
    pub space: Space,
    /// Order α; several may be given, separated by commas.
    #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub alpha: Vec<f64>,
    #[arg(long = "D", visible_alias = "dim", default_value_t = 3)]
    pub dim: i64,
    #[arg(long)]
    pub n: i64,
    #[arg(long, default_value_t = 0)]
    pub l: i64,
    #[arg(long = "Z", visible_alias = "charge", default_value_t = 1.0)]
    pub z: f64,
    #[arg(long, value_parser = parse_mode, default_value = "auto")]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

/// An inclusive integer range written `a..b`, or a single value.
#[derive(Clone, Debug)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn values(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("'{t}': {e}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (lo, hi) = (parse(a)?, parse(b.trim_start_matches('='))?);
                if lo > hi {
                    return Err(format!("empty range {s}"));
                }
                Ok(IntRange { lo, hi })
            }
            None => {
                let v = parse(s)?;
                Ok(IntRange { lo: v, hi: v })
            }
        }
    }
}

/// A parameter sequence: a comma list `10,20,40`, or `a..b` doubling from `a`
/// up to and including `b`.
#[derive(Clone, Debug)]
pub struct Sequence(pub Vec<i64>);

impl Sequence {
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }
}

impl FromStr for Sequence {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("'{t}': {e}"));
        let vals = match s.split_once("..") {
            Some((a, b)) => {
                let (mut v, hi) = (parse(a)?, parse(b)?);
                if v < 1 {
                    return Err("doubling sequences start at 1 or above".into());
                }
                let mut out = Vec::new();
                while v <= hi {
                    out.push(v);
                    v *= 2;
                }
                out
            }
            None => s.split(',').map(parse).collect::<Result<_, _>>()?,
        };
        if vals.is_empty() || vals.iter().any(|&v| v < 1) {
            return Err(format!("sequence '{s}' must hold positive integers"));
        }
        Ok(Sequence(vals))
    }
}

/// `all` angular quantum numbers, or one.
#[derive(Clone, Copy, Debug)]
pub struct LSelect(pub Option<i64>);

impl FromStr for LSelect {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            Ok(LSelect(None))
        } else {
            s.parse::<i64>().map(|l| LSelect(Some(l))).map_err(|e| format!("'{s}': {e}"))
        }
    }
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_space)]
    pub space: Space,
    #[arg(long = "D-range", visible_alias = "dims", default_value = "3")]
    pub dims: IntRange,
    #[arg(long = "n-range", default_value = "1..3")]
    pub ns: IntRange,
    /// `all`, or a single angular quantum number.
    #[arg(long, default_value = "all")]
    pub l: LSelect,
    #[arg(long = "alpha-list", required = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub alpha: Vec<f64>,
    #[arg(long = "Z", visible_alias = "charge", default_value_t = 1.0)]
    pub z: f64,
    #[arg(long, value_parser = parse_mode, default_value = "auto")]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Evaluate rows on a worker pool (size from HYDROMOMENTS_THREADS).
    #[arg(long)]
    pub parallel: bool,
}

/// One suite, or `all`.
#[derive(Clone, Copy, Debug)]
pub struct SuiteSelect(pub Option<Suite>);

impl FromStr for SuiteSelect {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(SuiteSelect(Some(match s {
            "routes" => Suite::Routes,
            "reflection" => Suite::Reflection,
            "oracle" => Suite::Oracle,
            "asymptotics" => Suite::Asymptotics,
            "uncertainty" => Suite::Uncertainty,
            "all" => return Ok(SuiteSelect(None)),
            _ => return Err(format!("unknown suite '{s}'")),
        })))
    }
}

fn parse_grid(s: &str) -> Result<GridSize, String> {
    match s {
        "small" => Ok(GridSize::Small),
        "medium" => Ok(GridSize::Medium),
        "full" => Ok(GridSize::Full),
        _ => Err(format!("unknown grid '{s}' (expected small, medium or full)")),
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// routes, reflection, oracle, asymptotics, uncertainty or all.
    #[arg(long, default_value = "all")]
    pub suite: SuiteSelect,
    /// small (D ≤ 5, n ≤ 4), medium (D ≤ 10, n ≤ 6) or full (D ≤ 12, n ≤ 8).
    #[arg(long, value_parser = parse_grid, default_value = "medium")]
    pub grid: GridSize,
    #[arg(long = "D-max")]
    pub d_max: Option<u32>,
    #[arg(long = "n-max")]
    pub n_max: Option<u32>,
    /// Number of random real-order cases.
    #[arg(long)]
    pub cases: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// List every failure and finding instead of the first few.
    #[arg(long, short)]
    pub verbose: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Regime {
    Rydberg,
    Highd,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Rydberg => "rydberg",
            Regime::Highd => "highd",
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    match s {
        "ns" | "nS" | "s" => Ok(Family::NS),
        "circular" => Ok(Family::Circular),
        _ => Err(format!("unknown family '{s}' (expected ns or circular)")),
    }
}

#[derive(Args, Debug)]
pub struct LimitsArgs {
    #[arg(long, value_enum)]
    pub regime: Regime,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, value_parser = parse_space, default_value = "p")]
    pub space: Space,
    /// Rydberg sequences: `ns` (l = 0) or `circular` (l = n − 1).
    #[arg(long, value_parser = parse_family, default_value = "ns")]
    pub family: Family,
    /// Rydberg sequence of n: `10,20,40` or `10..320` (doubling).
    #[arg(long = "n-seq")]
    pub n_seq: Option<Sequence>,
    /// High-dimensional sequence of D: `16,32,64` or `16..128` (doubling).
    #[arg(long = "D-seq")]
    pub d_seq: Option<Sequence>,
    /// Dimension of a Rydberg sequence.
    #[arg(long = "D", visible_alias = "dim", default_value_t = 3)]
    pub dim: i64,
    /// Fixed n of a high-dimensional sequence.
    #[arg(long, default_value_t = 1)]
    pub n: i64,
    /// Fixed l of a high-dimensional sequence.
    #[arg(long, default_value_t = 0)]
    pub l: i64,
    #[arg(long = "Z", visible_alias = "charge", default_value_t = 1.0)]
    pub z: f64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Bound {
    Heisenberg,
    PittBeckner,
    DaubechiesThakkar,
    Fermion,
}

#[derive(Args, Debug)]
pub struct UncertaintyArgs {
    #[arg(long, value_enum)]
    pub bound: Bound,
    #[arg(long = "D", visible_alias = "dim", default_value_t = 3)]
    pub dim: i64,
    #[arg(long)]
    pub n: i64,
    #[arg(long, default_value_t = 0)]
    pub l: i64,
    #[arg(long = "Z", visible_alias = "charge", default_value_t = 1.0)]
    pub z: f64,
    /// Position order of the Heisenberg bound.
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub a: f64,
    /// Momentum order of the Heisenberg bound.
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub b: f64,
    /// Order of the Pitt–Beckner and fermion-product bounds.
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub alpha: f64,
    /// Momentum order of the Daubechies–Thakkar and fermion-product bounds.
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub k: f64,
    /// Spin degeneracy.
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Particle number.
    #[arg(long = "N", default_value_t = 1)]
    pub particles: u32,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}
