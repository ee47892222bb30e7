use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::workspace::Inputs;

#[derive(Debug, Parser)]
#[command(name = "tpcheck", version, about = "Exact checks for transposed Poisson Hopf modules")]
pub struct Cli {
    /// Seed for the sampled parts of the field and simplicity tests.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print canonical JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Objects to work on: an example name, files, or an example with some
/// objects replaced by files.
#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// Gallery example supplying every object not given as a file.
    pub example: Option<String>,
    #[arg(long)]
    pub hopf: Option<PathBuf>,
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    #[arg(long)]
    pub module: Option<PathBuf>,
    #[arg(long)]
    pub phi: Option<PathBuf>,
}

impl InputArgs {
    pub fn inputs(&self) -> Inputs {
        Inputs {
            fixture: self.example.clone(),
            hopf: self.hopf.clone(),
            algebra: self.algebra.clone(),
            module: self.module.clone(),
            phi: self.phi.clone(),
            subalgebra: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Algebra,
    Hopf,
    Tp,
    Comodule,
    Module,
    HopfModule,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the axioms of one object.
    Check {
        kind: CheckKind,
        /// A file of the matching kind, or an example name.
        target: String,
        /// Hopf algebra for `comodule` and `hopf-module` files.
        #[arg(long)]
        hopf: Option<PathBuf>,
        /// Algebra for `module` and `hopf-module` files.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Compute an invariant subspace or structure map.
    Compute {
        #[command(subcommand)]
        what: Compute,
    },
    /// Certificate for α: A⊗_B M^AcoH → M and its inverse.
    Fundamental {
        #[command(flatten)]
        inputs: InputArgs,
        /// `auto` for B = A^AcoH, or a subalgebra file.
        #[arg(long = "B", visible_alias = "b", default_value = "auto")]
        b: String,
    },
    /// Check the hom-set bijection and triangle identities for A⊗_B - and (-)^AcoH.
    Adjunction {
        #[command(flatten)]
        inputs: InputArgs,
        /// B-modules N: `zero`, `free:K` or `scalar:K` (repeatable).
        #[arg(long = "n", value_name = "N")]
        n: Vec<String>,
        #[arg(long = "B", visible_alias = "b", default_value = "auto")]
        b: String,
    },
    /// List gallery examples, or verify one and optionally write its files.
    Example {
        name: Option<String>,
        /// Directory to write hopf.json, algebra.json, module.json and phi.json into.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Compute {
    /// The transposed Poisson center A^A.
    Center(InputArgs),
    /// A^coH and M^coH.
    Coinvariants(InputArgs),
    /// M^A and M^AcoH.
    LieInvariants(InputArgs),
    /// B = A^AcoH with the field and simplicity tests.
    #[command(name = "B", visible_alias = "b")]
    B(InputArgs),
    /// The projection p_M onto M^coH.
    P(InputArgs),
    /// The splitting λ: M⊗H → M of the coaction.
    Lambda(InputArgs),
    /// The least Poisson H-ideal containing the given vectors.
    IdealClosure {
        #[command(flatten)]
        inputs: InputArgs,
        /// Generators as `c,c,...;c,c,...` in A's coordinates.
        #[arg(long)]
        seed: String,
    },
}
