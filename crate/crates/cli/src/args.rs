use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hnsplit",
    version,
    about = "Splitting types and Harder-Narasimhan data of direct images of structure sheaves"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    AsciiPolygon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharacteristicArg {
    Zero,
    Positive,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting type of f_*O_X for a complete intersection in P^n projected to P^(n-r).
    Splitting {
        /// Ambient projective dimension.
        #[arg(short = 'n')]
        n: u32,
        /// Comma-separated hypersurface degrees.
        #[arg(short = 'd', value_delimiter = ',', required = true,
              value_parser = clap::value_parser!(u32).range(1..))]
        degrees: Vec<u32>,
    },

    /// HN filtration of Sym^m(B) for an unstable rank-two B with deg A = s > t = deg B/A.
    #[command(allow_negative_numbers = true)]
    HnSym {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 's')]
        s: i64,
        #[arg(short = 't')]
        t: i64,
    },

    /// HN filtration of (f_*O_Y)/O_X for Y in |O(n) ⊗ A| on a ruled surface P(E).
    #[command(allow_negative_numbers = true)]
    Ruled {
        /// Fiber degree of Y.
        #[arg(short = 'n')]
        n: u32,
        /// deg S for the maximal destabilizing S ⊂ E.
        #[arg(short = 's', required_unless_present = "semistable", conflicts_with = "semistable")]
        s: Option<i64>,
        /// deg E/S.
        #[arg(short = 't', required_unless_present = "semistable", conflicts_with = "semistable")]
        t: Option<i64>,
        /// deg A.
        #[arg(short = 'a', default_value_t = 0)]
        alpha: i64,
        /// E is semistable (strongly semistable in positive characteristic).
        #[arg(long)]
        semistable: bool,
        /// deg E, for semistable E.
        #[arg(short = 'e', required_if_eq("semistable", "true"), requires = "semistable")]
        e: Option<i64>,
        #[arg(long, value_enum, default_value_t = CharacteristicArg::Zero)]
        characteristic: CharacteristicArg,
    },

    /// Rank and degree presentation of (f_*O_Y)/O_X for two hypersurfaces in a P^2-bundle.
    #[command(allow_negative_numbers = true)]
    TwoHyp {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long, default_value_t = 0)]
        a1: i64,
        #[arg(long, default_value_t = 0)]
        a2: i64,
        /// deg E.
        #[arg(short = 'e')]
        e: i64,
    },

    /// Pushforward to P^1 of a bundle with vanishing H^0 and H^1.
    #[command(allow_negative_numbers = true)]
    Acyclic {
        /// Degree of the cover X -> P^1.
        #[arg(short = 'c')]
        cover_degree: u64,
        /// Rank of E.
        #[arg(short = 'r')]
        rank: u64,
        /// Degree of E.
        #[arg(long = "deg")]
        degree: i64,
        /// Genus of X.
        #[arg(short = 'g')]
        genus: u64,
    },

    /// Run `splitting` over a grid of ambient dimensions, codimensions and degrees.
    Sweep {
        /// Ambient dimensions, `a..=b` or a single value.
        #[arg(long = "n")]
        n: SpanArg,
        /// Codimensions, `a..=b` or a single value.
        #[arg(long = "r")]
        r: SpanArg,
        /// Range for every hypersurface degree, `a..=b` or a single value.
        #[arg(long = "d")]
        d: SpanArg,
    },
}

/// Inclusive integer range written `a..=b` (empty when `a > b`) or a single value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanArg(pub RangeInclusive<u32>);

impl FromStr for SpanArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| format!("invalid bound {x:?}: {e}"))
        };
        match s.split_once("..=") {
            Some((lo, hi)) => Ok(SpanArg(parse(lo)?..=parse(hi)?)),
            None => {
                let v = parse(s)?;
                Ok(SpanArg(v..=v))
            }
        }
    }
}
