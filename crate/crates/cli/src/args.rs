use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use weylpol_core::invariants::{ActionKind, GeneratorFamily};
use weylpol_core::{FieldSpec, Partition};

/// Exact experiments with partitions, Schur modules, GL-polarization and
/// invariant rings. Every command prints one JSON object.
#[derive(Debug, Parser)]
#[command(name = "weylpol", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Base field: `q` for the rationals or `fp:<p>`.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,
    /// Seed for randomized probes.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print an aligned `key  value` table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Worker threads for manifests; defaults to the available parallelism.
    #[arg(long, global = true, env = "WEYLPOL_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition arithmetic and the slicing decomposition.
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Semistandard tableaux, Littlewood-Richardson coefficients, Cauchy identity.
    #[command(subcommand)]
    Tableaux(TableauxCmd),
    /// Schur modules realized by bideterminants.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// GL-spans of Schur modules.
    #[command(subcommand)]
    Polarize(PolarizeCmd),
    /// Graded invariant spaces of concrete actions.
    #[command(subcommand)]
    Invariants(InvariantsCmd),
    /// Runs every job of a JSON manifest and checks expected results.
    Manifest(ManifestArgs),
}

#[derive(Debug, Subcommand)]
pub enum PartitionsCmd {
    /// Transposed diagram.
    Conjugate(LambdaArgs),
    /// Row-wise sum λ + μ.
    Concat(LambdaMuArgs),
    /// Slicing decomposition into pieces of bounded size, with its checks.
    Slice(SliceArgs),
    /// All partitions of d, optionally with bounded length.
    Enumerate(EnumerateArgs),
    /// `dim S_λ(K^m)` by the hook-content formula.
    Dim(LambdaMArgs),
}

#[derive(Debug, Subcommand)]
pub enum TableauxCmd {
    /// Counts semistandard tableaux and compares with the hook-content formula.
    Count(LambdaMArgs),
    /// One coefficient with `--nu`, otherwise the whole product expansion.
    Lr(LrArgs),
    /// Both sides of the Cauchy identity in degree d.
    Cauchy(CauchyArgs),
}

#[derive(Debug, Subcommand)]
pub enum SchurCmd {
    /// `dim S_λ(K^m)` by the hook-content formula.
    Dim(LambdaMArgs),
    /// Spans S_λ(K^m) by bideterminants and compares its dimension.
    Realize(LambdaMArgs),
    /// Whether S_λ(K^a) lands inside S_λ(K^b).
    EmbedCheck(LambdaABArgs),
    /// Rank and kernel of the projection S_λ ⊗ S_μ → S_{λ+μ}.
    ConcatCheck(ConcatArgs),
}

#[derive(Debug, Subcommand)]
pub enum PolarizeCmd {
    /// The GL_b-span of S_λ(K^a) with random-probe stability.
    Closure(ClosureArgs),
    /// Whether the GL_b-span of S_λ(K^a) equals S_λ(K^b).
    Check(LambdaABArgs),
    /// Polarization of every slice of λ.
    SlicingCheck(SlicingCheckArgs),
}

#[derive(Debug, Subcommand)]
pub enum InvariantsCmd {
    /// Dimension of the degree-d invariants, with decomposables.
    Space(SpaceArgs),
    /// Invariant and indecomposable dimensions up to --dmax.
    Beta(DmaxArgs),
    /// Whether invariants on b copies are the GL_b-span of those on a copies.
    WeylCheck(WeylArgs),
    /// Span of a classical generator family against the invariants.
    Gens(GensArgs),
    /// Invariant dimension against the sum over Schur invariants.
    Gfdim(DegreeArgs),
    /// Invariant dimensions over Q and over F_p up to --dmax.
    Hilbert(HilbertArgs),
    /// Compares a prime with the characteristic bound.
    Threshold(ThresholdArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LambdaArgs {
    #[arg(long)]
    pub lambda: Partition,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LambdaMuArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub mu: Partition,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SliceArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub d: usize,
    /// Longest allowed partition; unbounded by default.
    #[arg(long)]
    pub max_len: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LambdaMArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub m: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LrArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub nu: Option<Partition>,
    #[arg(long)]
    pub max_len: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CauchyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LambdaABArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ConcatArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub m: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ClosureArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
    /// Random group elements applied to the closure.
    #[arg(long, default_value_t = 4)]
    pub probes: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SlicingCheckArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub m: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ActionArgs {
    /// `conj:<n>`, `slsl:<n>`, `sl2vec` or `cyclic:<p>`.
    #[arg(long)]
    pub action: ActionKind,
    #[arg(long, default_value_t = 1)]
    pub copies: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpaceArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub action: ActionArgs,
    #[arg(long)]
    pub d: usize,
    /// Include a basis of the invariant space.
    #[arg(long)]
    pub basis: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DmaxArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub action: ActionArgs,
    #[arg(long)]
    pub dmax: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WeylArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub action: ActionArgs,
    /// Target number of copies; `--copies` is the source.
    #[arg(long)]
    pub b: usize,
    #[arg(long)]
    pub dmax: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GensArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub action: ActionArgs,
    /// `char_poly_traces`, `determinantal` or `pluecker`.
    #[arg(long)]
    pub family: GeneratorFamily,
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DegreeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub action: ActionArgs,
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct HilbertArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub action: ActionArgs,
    #[arg(long)]
    pub dmax: usize,
    /// Prime compared against the rationals; `--field` is not used.
    #[arg(long)]
    pub p: u32,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub n_dim: usize,
    /// `Q` as an integer, a fraction `a/b` or a decimal.
    #[arg(long)]
    pub q: String,
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ManifestArgs {
    pub path: PathBuf,
}
