//! Argument grammar. Comma lists and `LO..HI` ranges are newtypes with
//! `FromStr` impls so clap treats each as one value, not as repeats.

use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "monoid",
    version,
    about = "Numerical monoid calculator: length sets, Frobenius numbers, \
             and generator-omission analysis"
)]
pub struct Cli {
    /// Emit a single JSON object on stdout instead of prose
    #[arg(long, global = true)]
    pub json: bool,

    /// Omit timing fields so identical inputs give byte-identical output
    #[arg(long, global = true)]
    pub stable: bool,

    /// Worker threads for complex/scan-tightness/survey (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Largest integer outside the monoid
    Frobenius {
        #[command(flatten)]
        spec: MonoidSpec,
    },
    /// Length set of a single element
    Lenset {
        #[command(flatten)]
        spec: MonoidSpec,
        /// Element to query
        #[arg(long)]
        n: u64,
    },
    /// Length sets of every element up to a bound, gaps as null
    Lentable {
        #[command(flatten)]
        spec: MonoidSpec,
        /// Largest element to tabulate
        #[arg(long)]
        bound: u64,
    },
    /// Membership test
    Contains {
        #[command(flatten)]
        spec: MonoidSpec,
        #[arg(long)]
        n: u64,
    },
    /// Canonical coordinates n = c1*a + c2*d with 0 <= c2 < a
    Coords {
        #[command(flatten)]
        arith: ArithOnly,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Every factorization of an element (exhaustive search)
    Factorize {
        #[command(flatten)]
        spec: MonoidSpec,
        #[arg(long)]
        n: u64,
    },
    /// Apery set with respect to a member m
    Apery {
        #[command(flatten)]
        spec: MonoidSpec,
        #[arg(long)]
        m: u64,
    },
    /// Does omitting the indexed generators preserve the length sets
    /// and/or the Frobenius number?
    OmitCheck {
        #[command(flatten)]
        arith: ArithOnly,
        /// Indices to omit, comma separated; index i names a + i*d
        #[arg(long, value_name = "I1,I2,...")]
        omit: IndexList,
        /// Which equality to decide
        #[arg(long, value_enum, default_value_t = What::Both)]
        what: What,
    },
    /// The complex of length-preserving omission sets over {2, ..., w-2}
    Complex {
        #[command(flatten)]
        arith: ArithOnly,
        /// Decide every subset even when the a >= w^2 - 3w shortcut applies
        #[arg(long)]
        no_shortcut: bool,
        /// Prune supersets of non-faces (assumes downward closure; only for
        /// surveys where speed matters more than counterexample hunting)
        #[arg(long)]
        fast: bool,
    },
    /// Largest a with F(S) != F(S_*) for each (w, d) cell
    ScanTightness {
        /// w values, LO..HI inclusive or a single value
        #[arg(long, value_name = "LO..HI")]
        w: RangeArg,
        /// d values
        #[arg(long, value_name = "LO..HI")]
        d: RangeArg,
    },
    /// Omission-complex summaries over a parameter grid
    Survey {
        #[arg(long, value_name = "LO..HI")]
        a: RangeArg,
        #[arg(long, value_name = "LO..HI")]
        d: RangeArg,
        #[arg(long, value_name = "LO..HI")]
        w: RangeArg,
    },
}

/// Either an explicit generator list or arithmetical a,d,w parameters.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MonoidSpec {
    /// Generators, comma separated (e.g. 6,9,20)
    #[arg(long, value_name = "N1,N2,...")]
    pub gens: Option<GenList>,

    /// a,d,w for the progression <a, a+d, ..., a+wd>
    #[arg(long, value_name = "A,D,W")]
    pub arith: Option<ArithTriple>,
}

#[derive(Debug, Args)]
pub struct ArithOnly {
    /// a,d,w for the progression <a, a+d, ..., a+wd>
    #[arg(long, value_name = "A,D,W")]
    pub arith: ArithTriple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Lengths,
    Frobenius,
    Both,
}

impl What {
    pub fn name(self) -> &'static str {
        match self {
            What::Lengths => "lengths",
            What::Frobenius => "frobenius",
            What::Both => "both",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenList(pub Vec<u64>);

impl FromStr for GenList {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(GenList(parse_list(s, "generator")?))
    }
}

#[derive(Clone, Debug)]
pub struct IndexList(pub Vec<u64>);

impl FromStr for IndexList {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(IndexList(parse_list(s, "index")?))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ArithTriple {
    pub a: u64,
    pub d: u64,
    pub w: u64,
}

impl FromStr for ArithTriple {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_list(s, "parameter")?;
        match v[..] {
            [a, d, w] => Ok(ArithTriple { a, d, w }),
            _ => Err(format!("expected exactly a,d,w, got {} values", v.len())),
        }
    }
}

/// Inclusive range `LO..HI`; a bare `N` means `N..N`. `LO > HI` is empty.
#[derive(Clone, Copy, Debug)]
pub struct RangeArg {
    pub lo: u64,
    pub hi: u64,
}

impl RangeArg {
    pub fn iter(self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for RangeArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad range endpoint {t:?}: {e}"))
        };
        match s.split_once("..") {
            Some((lo, hi)) => Ok(RangeArg {
                lo: parse(lo)?,
                hi: parse(hi)?,
            }),
            None => {
                let v = parse(s)?;
                Ok(RangeArg { lo: v, hi: v })
            }
        }
    }
}

fn parse_list(s: &str, kind: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad {kind} {t:?}: {e}"))
        })
        .collect()
}
