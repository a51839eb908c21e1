use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "symprod", version, about = "Exact computations on symmetric products of curves")]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide special position for a configuration file.
    SpecposDecide {
        /// Configuration JSON file.
        #[arg(long)]
        config: PathBuf,
        /// Witness-search trials per excluded index.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Span dimension of a configuration against floor(kd/2) - 1.
    SpecposSpan {
        #[arg(long)]
        config: PathBuf,
    },
    /// Exhaustive special-position check over a prime field.
    SpecposOracle {
        #[arg(long)]
        config: PathBuf,
        /// Reduce a rational configuration modulo this prime.
        #[arg(long)]
        prime: Option<u32>,
    },
    /// Write a fixture configuration.
    Fixture(FixtureArgs),
    /// Plücker coordinates of every subspace in a configuration.
    Plucker {
        #[arg(long)]
        config: PathBuf,
    },
    /// Brill–Noether number and least degree of a g^r_d on a general curve.
    Bn {
        #[arg(long)]
        genus: u32,
        /// Projective dimension of the series.
        #[arg(long)]
        r: u32,
        /// Degree at which to evaluate rho; the least admissible degree is always reported.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Gonality and δ₂, δ₃ of a very general curve.
    Gonality {
        #[arg(long)]
        genus: u32,
    },
    /// Bounds on the degree of irrationality of C^(2).
    Degirr(ProfileArgs),
    /// Bounds on the degree of gonality of C^(k).
    Dego {
        #[command(flatten)]
        profile: ProfileArgs,
        /// Order k of the symmetric product.
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Verify a nef-cone slope certificate (a, b).
    NefconeVerify {
        /// Genus of the curve.
        #[arg(long)]
        g: u64,
        /// Integer coefficient of x.
        #[arg(long)]
        a: String,
        /// Integer coefficient of delta/2.
        #[arg(long)]
        b: String,
        /// Previously established slope, as a rational such as 9/4.
        #[arg(long = "tau-prev")]
        tau_prev: String,
        /// Gonality constant; defaults to the standard value for g.
        #[arg(long)]
        c: Option<u64>,
    },
    /// Search 1 <= b <= b_max for the certificate of least ratio.
    NefconeSearch {
        #[arg(long)]
        g: u64,
        #[arg(long = "tau-prev")]
        tau_prev: String,
        #[arg(long = "b-max")]
        b_max: u64,
        /// Gonality constant; defaults to the standard value for g.
        #[arg(long)]
        c: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pencil,
    QuadricRuling,
    Scroll,
    Triangle,
    RandomSkew,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Number of subspaces.
    #[arg(long)]
    pub d: Option<usize>,
    /// Ambient projective dimension (pencils and random skew lines).
    #[arg(long)]
    pub n: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    VeryGeneral,
    Hyperelliptic,
    NonHyperelliptic,
    Arbitrary,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long, value_enum, default_value_t = ClassArg::Arbitrary)]
    pub class: ClassArg,
    /// Known gonality of the curve.
    #[arg(long)]
    pub gonality: Option<u32>,
    /// Least degree of a birational map to the plane, if known.
    #[arg(long)]
    pub delta2: Option<u32>,
    /// Least degree of a birational map to P^3, if known.
    #[arg(long)]
    pub delta3: Option<u32>,
    /// Degree of a known covering of an elliptic curve.
    #[arg(long = "elliptic-cover")]
    pub elliptic_cover: Option<u32>,
    /// Declare Aut(C) trivial (true) or nontrivial (false).
    #[arg(long = "trivial-aut")]
    pub trivial_aut: Option<bool>,
}
