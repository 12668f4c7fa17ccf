//! Reductions of dynamic programs to maximum weight chain.
//!
//! Every builder returns a [`Reduction`]: the transitive DAG, the
//! potentially-missing sets (one per deletable input element, in
//! [`ProblemInstance::deletions`] order), and per-vertex decode data. A chain
//! decodes to the union of its vertices' items.

mod instance;
mod knapsack;
mod lcs;
mod lis;
mod lps;
pub mod oracle;

pub use instance::{Deletion, GraphInstance, IntervalItem, ProblemInstance};
pub use knapsack::knapsack_graph;
pub use lcs::lcs_graph;
pub use lis::{interval_graph, lis_graph};
pub use lps::lps_graph;
pub use oracle::{exact_oracle, OracleResult};

use crate::bitset::Bitset;
use crate::dag::{AntichainFamily, ChainSolution, FamilyMode, TransitiveDag, DEFAULT_DENSE_CAP};
use crate::error::{Error, Result};
use crate::solution::Solution;

/// Size limits applied before any graph is materialized.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Caps {
    /// Bound on `Π |A_i|` for common subsequence.
    pub lcs_product: u64,
    /// Bound on `n · C` for knapsack.
    pub knapsack_cells: u64,
    /// Bound on the RNA string length.
    pub rna_length: usize,
    /// Bound on the vertex count of any built graph.
    pub max_vertices: usize,
    pub dense_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { lcs_product: 1_000_000, knapsack_cells: 1_000_000, rna_length: 14, max_vertices: 20_000, dense_cap: DEFAULT_DENSE_CAP }
    }
}

impl Caps {
    /// Every cap set to `limit` (vertex-based caps included).
    pub fn uniform(limit: u64) -> Self {
        Caps {
            lcs_product: limit,
            knapsack_cells: limit,
            rna_length: limit as usize,
            max_vertices: limit as usize,
            dense_cap: DEFAULT_DENSE_CAP.max(limit as usize),
        }
    }

    pub(crate) fn check_vertices(&self, count: usize) -> Result<()> {
        if count > self.max_vertices {
            return Err(Error::InstanceTooLarge { what: "vertex count", size: count as u64, cap: self.max_vertices as u64 });
        }
        Ok(())
    }
}

/// Graph, missing sets and decode data for one problem instance.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub dag: TransitiveDag,
    pub family: AntichainFamily,
    /// Items each vertex contributes to the decoded solution.
    pub vertex_items: Vec<Vec<Vec<usize>>>,
    /// Index-valued vertex description used for isomorphism checks.
    pub labels: Vec<Vec<i64>>,
}

/// Parts every builder fills in; assembled by [`Reduction::assemble`].
pub(crate) struct Blueprint {
    pub weights: Vec<f64>,
    pub labels: Vec<Vec<i64>>,
    pub vertex_items: Vec<Vec<Vec<usize>>>,
    pub sets: Vec<Vec<usize>>,
    pub bound: usize,
    pub mode: FamilyMode,
}

impl Reduction {
    pub(crate) fn assemble(bp: Blueprint, less: impl Fn(usize, usize) -> bool + Sync, caps: &Caps) -> Result<Reduction> {
        caps.check_vertices(bp.weights.len())?;
        let dag = TransitiveDag::from_relation(bp.weights, less, caps.dense_cap)?;
        let family = AntichainFamily::new(&dag, bp.sets, bp.bound, bp.mode)?;
        Ok(Reduction { dag, family, vertex_items: bp.vertex_items, labels: bp.labels })
    }

    pub fn decode_vertices(&self, vertices: &[usize]) -> Solution {
        Solution::new(vertices.iter().flat_map(|&v| self.vertex_items[v].iter().cloned()).collect())
    }

    pub fn decode(&self, chain: &ChainSolution) -> Solution {
        self.decode_vertices(&chain.vertices)
    }

    /// Vertex set `V \ S_i` as a mask.
    pub fn surviving(&self, set: usize) -> Bitset {
        let mut keep = Bitset::from_indices(self.dag.len(), 0..self.dag.len());
        keep.difference_with(self.family.mask(set));
        keep
    }
}

/// Builds the reduction for any instance. `rna_list_bound` is the real list
/// length bound `B` used only for RNA instances.
pub fn build_reduction(instance: &ProblemInstance, caps: &Caps, rna_list_bound: f64) -> Result<Reduction> {
    instance.validate()?;
    match instance {
        ProblemInstance::Lis { sequence } => lis_graph(sequence, caps),
        ProblemInstance::Intervals { items } => interval_graph(items, caps),
        ProblemInstance::Lcs { strings } => lcs_graph(strings, caps),
        ProblemInstance::Lps { string } => lps_graph(string, caps),
        ProblemInstance::Knapsack { costs, weights, capacity } => knapsack_graph(costs, weights, *capacity, caps),
        ProblemInstance::Rna { string, relation } => {
            crate::rna::build_rna_graph(&crate::rna::RnaInstance::new(string, relation), rna_list_bound, caps).map(|g| g.reduction)
        }
    }
}
