use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use limcom_core::Method;
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(
    name = "limcom",
    version,
    about = "Decide when finite limits commute with finite colimits in Set",
    after_help = "Categories are preset strings (terminal, empty, discrete:N, chain:N, span, cospan, \
parallel_pair, idempotent, group:NAME, jk:K:N) or paths to category JSON files. Groups are \
c1..c24, klein4, s3, s4, a4, d4, d5, q8, prod:A:B, or paths to group JSON files.\n\n\
Exit status: 0 when the computation finished (verdicts are in the report), 1 on usage, \
parse or validation errors, 2 when a size cap is exceeded."
)]
pub struct Cli {
    /// Output format. Text renders the same fields as JSON.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// JSON config file with keys `caps`, `seed`, `parallelism`, `format`, `budget`.
    #[arg(long, global = true, env = "LIMCOM_CONFIG")]
    pub config: Option<PathBuf>,

    /// Worker threads for engine work. Output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Seed for sampled searches.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Criterion,
    Orbits,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Criterion => Method::Criterion,
            MethodArg::Orbits => Method::Orbits,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural flags of a finite category.
    Classify {
        /// Preset string or category file.
        category: String,
    },
    /// Decide whether limits over G commute with colimits over H.
    CommuteGroups {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        /// Attach the least failing subgroup and its comparison map.
        #[arg(long)]
        witness: bool,
    },
    /// Build a counterexample bifunctor.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Comparison map of a bifunctor file.
    Compare { file: PathBuf },
    /// Subgroup lattice summary and quotient catalogs of a group.
    GroupInfo { group: String },
    /// Sample bifunctors on I x J and report the first non-bijective one.
    Search {
        i: String,
        j: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        max_carrier: Option<usize>,
    },
    /// Run the acceptance checks and report pass/fail for each.
    #[command(name = "verify-paper")]
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum WitnessCommand {
    /// Connected non-conical I against J with a span lacking a cocone.
    Foltz {
        i: String,
        j: String,
        /// `j0,j1,j2,beta,gamma` with beta: j0 -> j1 and gamma: j0 -> j2.
        /// Defaults to the least span of J without a cocone.
        #[arg(long)]
        span: Option<String>,
        /// Also write the bifunctor file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// I against J with a diagram of shape I^op in J lacking a cocone.
    Cone {
        i: String,
        j: String,
        /// Diagram file `{"objects": [...], "morphisms": [...]}`.
        /// Defaults to the least such diagram.
        #[arg(long)]
        diagram: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coset-action bifunctor of the least failing subgroup of G x H.
    Group {
        g: String,
        h: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
