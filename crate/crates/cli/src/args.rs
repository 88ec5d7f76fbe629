use clap::{Args, Parser, Subcommand};

/// Seed for the randomized checks in `verify`.
pub const DEFAULT_SEED: u64 = 20_240_615;

#[derive(Debug, Parser)]
#[command(
    name = "handsaw",
    version,
    about = "Fixed points, Betti numbers and KL multiplicities for handsaw quiver varieties"
)]
pub struct Cli {
    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Worker threads (defaults to available parallelism)
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pyramid data
    #[command(subcommand)]
    Pyramid(PyramidCommand),

    /// List torus fixed points of Q(v, w)
    FixedPoints(QuiverArgs),

    /// Tangent character at one fixed point
    Tangent(TangentArgs),

    /// Check the smallness bound on a grid of dimension vectors
    Smallness(GridArgs),

    /// Compare both sides of the Poincaré series identity
    Betti(GridArgs),

    /// l-dominant strata of a Verma module
    Strata(SpectralArgs),

    /// Gelfand-Tsetlin character of a Verma module
    Character(SpectralArgs),

    /// Kazhdan-Lusztig polynomial P_{x,w}
    Kl(KlArgs),

    /// Composition multiplicities of a Verma module
    Multiplicity(SpectralArgs),

    /// Run the acceptance checks
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum PyramidCommand {
    /// Row lengths, shift matrix and generator count
    Info(PyramidArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PyramidArgs {
    /// Column heights, left to right
    #[arg(long, value_delimiter = ',')]
    pub columns: Option<Vec<u32>>,

    /// Row lengths p_1..p_n, top to bottom
    #[arg(long = "pyramid", value_delimiter = ',')]
    pub rows: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct QuiverArgs {
    #[arg(long)]
    pub n: usize,

    /// Framing w_1..w_n
    #[arg(long, value_delimiter = ',', required = true)]
    pub w: Vec<u32>,

    /// Dimension vector v_1..v_{n-1}
    #[arg(long, value_delimiter = ',')]
    pub v: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct TangentArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long, value_delimiter = ',', required = true)]
    pub w: Vec<u32>,

    /// Fixed point, e.g. "1.1:[2];2.1:[1]" (tier.line:[row lengths])
    #[arg(long)]
    pub tuple: String,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long, value_delimiter = ',', required = true)]
    pub w: Vec<u32>,

    /// Componentwise cutoff for v
    #[arg(long, value_delimiter = ',')]
    pub vmax: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct SpectralArgs {
    /// Row lengths p_1..p_n
    #[arg(long = "pyramid", value_delimiter = ',', required_unless_present = "columns", conflicts_with = "columns")]
    pub rows: Option<Vec<u32>>,

    /// Column heights instead of row lengths
    #[arg(long, value_delimiter = ',')]
    pub columns: Option<Vec<u32>>,

    /// Zeros of P_i(u), e.g. "1:2;2:0" (rationals allowed)
    #[arg(long)]
    pub zeros: String,

    /// Componentwise cutoff for v
    #[arg(long, value_delimiter = ',')]
    pub vmax: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct KlArgs {
    #[arg(long)]
    pub n: usize,

    /// One-line notation, e.g. 1234
    #[arg(long)]
    pub x: String,

    /// One-line notation, e.g. 3412
    #[arg(long)]
    pub w: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Smaller grids
    #[arg(long)]
    pub quick: bool,
}
