pub mod bitset;
pub mod dag;
pub mod error;
pub mod quadrature;
pub mod reductions;
pub mod rna;
pub mod rng;
pub mod sensitivity;
pub mod solution;
pub mod stable;

pub use dag::{sum_opt_drop, AntichainFamily, ChainSolution, FamilyMode, SubUniverse, TransitiveDag};
pub use error::{Error, Result};
pub use reductions::{build_reduction, exact_oracle, Caps, ProblemInstance, Reduction};
pub use rng::StreamKey;
pub use solution::Solution;
pub use stable::{mwc, MwcOutcome, StableSolverConfig};
