use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ringcode", version, about = "Constacyclic codes over F_q + uF_q and the quantum codes they give")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for distance computation and search.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Print a human-readable summary to stderr.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cyclotomic cosets and irreducible factors of x^n - beta.
    Factor(FieldArgs),
    /// Size, torsion/residue codes and standard form of a code.
    Code {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        dist: DistanceArgs,
        /// Also compute the minimum Hamming distance.
        #[arg(long)]
        distance: bool,
    },
    /// Hermitian dual of a code.
    Dual {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Gray image Phi_M(C) over F_q.
    Gray {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        gray: GrayArgs,
        /// Map the Hermitian dual instead of the code.
        #[arg(long)]
        dual: bool,
        #[command(flatten)]
        dist: DistanceArgs,
        /// Also compute the minimum distance of the image.
        #[arg(long)]
        distance: bool,
    },
    /// Quantum code from a Hermitian self-orthogonal code.
    Quantum {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = ConstructionArg::Symplectic)]
        construction: ConstructionArg,
        #[command(flatten)]
        gray: GrayArgs,
        #[command(flatten)]
        dist: DistanceArgs,
    },
    /// Rank the self-orthogonal codes of a coset structure by quantum parameters.
    Search {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = ConstructionArg::Symplectic)]
        construction: ConstructionArg,
        #[command(flatten)]
        gray: GrayArgs,
        #[command(flatten)]
        dist: DistanceArgs,
        /// Number of results to print.
        #[arg(long, default_value_t = 10)]
        top: usize,
        /// Largest exponent region to enumerate.
        #[arg(long, default_value_t = 1_000_000)]
        region_cap: u64,
    },
    /// Recompute the reference examples and table from first principles.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        dist: DistanceArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    pub p: u32,
    /// The alphabet is F_q with q = p^(2m).
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Unit alpha with alpha * conj(alpha) = 1, e.g. "w^4".
    #[arg(long)]
    pub alpha: String,
    /// Length N = p^e * n with gcd(n, p) = 1.
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub e: u32,
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    #[arg(long, required_unless_present = "descriptor")]
    pub p: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    #[arg(long, required_unless_present = "descriptor")]
    pub alpha: Option<String>,
    #[arg(long, required_unless_present = "descriptor")]
    pub n: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub e: u32,
    /// Exponents by coset representative, "rep=a,..."; absent cosets get 0.
    #[arg(long, conflicts_with = "descriptor")]
    pub exponents: Option<String>,
    /// Code descriptor JSON file, or "-" for stdin.
    #[arg(long)]
    pub descriptor: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct GrayArgs {
    /// Gray matrix "a,b;s,t"; defaults to b = 1, t = w, a = t*alpha, s = alpha.
    #[arg(long)]
    pub gray_matrix: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct DistanceArgs {
    /// Largest distance the column-rank engine searches for.
    #[arg(long, default_value_t = 8)]
    pub d_cap: usize,
    /// Largest number of codewords to enumerate exhaustively.
    #[arg(long, env = "RINGCODE_BUDGET", default_value_t = 1 << 26)]
    pub budget: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionArg {
    Hermitian,
    Symplectic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    #[value(name = "example4.7")]
    Example4_7,
    #[value(name = "example4.10")]
    Example4_10,
    #[value(name = "example4.13")]
    Example4_13,
    #[value(name = "example5.10")]
    Example5_10,
    #[value(name = "example5.11")]
    Example5_11,
    #[value(name = "table1")]
    Table1,
    #[value(name = "all")]
    All,
}
