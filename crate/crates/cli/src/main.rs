mod render;
mod run;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "pointed-hopf",
    version,
    about = "Verify structure and representations of pointed Hopf algebras over Z_n"
)]
pub struct Cli {
    /// Characteristic of the base field
    #[arg(long, global = true, default_value_t = 3)]
    pub p: u32,
    /// Exponent in n = p^s t
    #[arg(long, global = true, default_value_t = 1)]
    pub s: u32,
    /// Order of the root of unity (coprime to p)
    #[arg(long, global = true, default_value_t = 2)]
    pub t: u32,
    /// Scalar literal: an integer, or c0,c1,... over an extension field
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Associativity scan run by verify-algebra and report
    #[arg(long, global = true, value_enum, default_value_t = AssocArg::Sampled)]
    pub assoc: AssocArg,
    /// Triples checked in sampled mode
    #[arg(long, global = true, default_value_t = 10_000)]
    pub assoc_triples: usize,
    #[arg(long, global = true, hide = true, value_enum)]
    pub inject_fault: Option<FaultArg>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AssocArg {
    Off,
    Sampled,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    DropGroupCommutator,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Dimension, defining relations, commutation identities, associativity
    VerifyAlgebra,
    /// Coassociativity, counit and antipode on the full basis
    VerifyHopf,
    /// Integral spaces, unimodularity and symmetry
    Integrals,
    /// Central idempotents and the block decomposition
    Blocks,
    /// Simple modules
    Simples,
    /// Projective covers of the simples
    Projectives,
    /// Jacobson radical and its powers
    Radical,
    /// Ext¹ between simples
    Ext,
    /// Tensor product of two simples
    Tensor {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
    },
    /// Representation-type criterion per block
    Wildness,
    /// Every suite in dependency order
    Report,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::run(&cli) {
        Ok(out) => {
            print!("{}", render::render(&out, cli.format));
            ExitCode::from(if out.has_failure() { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!(
                "usage: pointed-hopf --p P --s S --t T [--lambda L] [--mu M] [--format json|md] [--seed N] <COMMAND>"
            );
            ExitCode::from(2)
        }
    }
}
