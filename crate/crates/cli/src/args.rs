use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kaplansky_core::DEFAULT_BUDGET;

#[derive(Debug, Parser)]
#[command(
    name = "kaplansky",
    version,
    about = "Finite-scope probes of group rings over finite fields",
    long_about = "Searches group rings K[G] of finite groups over finite fields for \
                  witnesses of stable-finiteness failure, units, zero-divisors and \
                  idempotents; compiles those properties to first-order sentences; and \
                  checks cellular automata over finite groups.\n\n\
                  Exit codes: 0 nothing found, 10 witness found, 1 parse or usage \
                  error, 2 budget exceeded, 3 unsupported input, 4 internal error."
)]
pub struct Cli {
    /// Maximum number of enumeration steps.
    #[arg(
        long,
        global = true,
        env = "KAPLANSKY_BUDGET",
        default_value_t = DEFAULT_BUDGET,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub budget: u64,

    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..1025))]
    pub jobs: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search Mat_d(K[G]) for A, B supported in S with AB = 1 and BA != 1.
    Probe(ProbeArgs),
    /// Print the sentence expressing a property, in the chosen backend.
    Compile(CompileArgs),
    /// Evaluate one sentence over a range of finite fields GF(p^k).
    ScanFields(ScanArgs),
    /// Check a cellular automaton given by a matrix over K[G] or a rule table.
    Lca(LcaArgs),
    /// List units, zero-divisors or idempotents supported in S.
    Search(SearchArgs),
    /// Compare direct finiteness of K[G x H] with stable finiteness of K[G], d <= |H|.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    /// Group spec, e.g. cyclic:4, dihedral:3, symmetric:3, product(cyclic:2,cyclic:2).
    #[arg(long)]
    pub group: String,
    /// Field spec, GF(p) or GF(p^k).
    #[arg(long)]
    pub field: String,
    /// Matrix dimension.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub d: u64,
    /// "all" or comma-separated element labels.
    #[arg(long, default_value = "all")]
    pub support: String,
}

#[derive(Debug, Args)]
pub struct CompileArgs {
    #[arg(long)]
    pub group: String,
    /// stable:<d>, unit, zero-divisor or idempotent.
    #[arg(long)]
    pub property: String,
    #[arg(long, default_value = "all")]
    pub support: String,
    /// text, stats, or smtlib:<p> with p prime.
    #[arg(long, default_value = "text")]
    pub backend: String,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// File holding a sentence in text form; overrides --group/--property.
    #[arg(long, conflicts_with_all = ["group", "property"])]
    pub sentence: Option<PathBuf>,
    #[arg(long, requires = "property")]
    pub group: Option<String>,
    #[arg(long, requires = "group")]
    pub property: Option<String>,
    #[arg(long, default_value = "all")]
    pub support: String,
    /// Inclusive range of characteristics, e.g. 2-7; non-primes are skipped.
    #[arg(long)]
    pub p_range: String,
    /// Inclusive range of extension degrees.
    #[arg(long, default_value = "1")]
    pub k_range: String,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["matrix", "rule"])))]
pub struct LcaArgs {
    #[arg(long)]
    pub group: String,
    /// Required with --matrix.
    #[arg(long, required_unless_present = "rule")]
    pub field: Option<String>,
    /// Matrix source: lines `entry(i,j) = c1*label1 + c2*label2`.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Rule table: `alphabet:` and `memory:` headers, then `pattern -> label` lines.
    #[arg(long, conflicts_with = "field")]
    pub rule: Option<PathBuf>,
    /// Configurations sampled for the equivariance check.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Seed for sampled configurations.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchKind {
    Units,
    ZeroDivisors,
    Idempotents,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub field: String,
    #[arg(long, value_enum)]
    pub kind: SearchKind,
    #[arg(long, default_value = "all")]
    pub support: String,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long)]
    pub group: String,
    /// The second factor H.
    #[arg(long)]
    pub with: String,
    #[arg(long)]
    pub field: String,
}
