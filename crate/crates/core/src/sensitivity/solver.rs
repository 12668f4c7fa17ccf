use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::Result;
use crate::reductions::{build_reduction, exact_oracle, Caps, ProblemInstance};
use crate::rna::{build_rna_graph, sample_list_bound, RnaInstance};
use crate::solution::Solution;
use crate::stable::{mwc, StableSolverConfig};

/// A randomized algorithm on problem instances, sampled at given seeds.
pub trait Solver: Sync {
    /// One output per seed, in seed order.
    fn sample(&self, instance: &ProblemInstance, seeds: &[u64]) -> Result<Vec<Solution>>;
}

/// Reduction followed by the stable maximum weight chain solver.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StableSolver {
    pub delta: f64,
    pub eps_override: Option<f64>,
    pub caps: Caps,
}

impl StableSolver {
    pub fn new(delta: f64, caps: Caps) -> Self {
        StableSolver { delta, eps_override: None, caps }
    }

    fn config(&self, seed: u64) -> Result<StableSolverConfig> {
        let config = StableSolverConfig { delta: self.delta, seed, record_trace: false, eps_override: self.eps_override };
        config.validate()?;
        Ok(config)
    }
}

impl Solver for StableSolver {
    fn sample(&self, instance: &ProblemInstance, seeds: &[u64]) -> Result<Vec<Solution>> {
        instance.validate()?;
        if let ProblemInstance::Rna { string, relation } = instance {
            let inst = RnaInstance::new(string, relation);
            if inst.len() < 2 {
                return Ok(vec![Solution::empty(); seeds.len()]);
            }
            // The graph depends on B only through ⌊B⌋.
            let mut graphs = BTreeMap::new();
            return seeds
                .iter()
                .map(|&seed| {
                    let bound = sample_list_bound(inst.len(), seed).max(1.0).floor() as usize;
                    let graph = match graphs.entry(bound) {
                        Entry::Occupied(e) => e.into_mut(),
                        Entry::Vacant(e) => e.insert(build_rna_graph(&inst, bound as f64, &self.caps)?),
                    };
                    let chain = mwc(&graph.reduction.dag, &self.config(seed)?)?.chain;
                    Ok(Solution::new(graph.decode(&chain)?.into_iter().map(|(l, r)| vec![l, r]).collect()))
                })
                .collect();
        }
        let reduction = build_reduction(instance, &self.caps, 1.0)?;
        seeds
            .iter()
            .map(|&seed| Ok(reduction.decode(&mwc(&reduction.dag, &self.config(seed)?)?.chain)))
            .collect()
    }
}

/// The deterministic textbook DP; every seed gives the same output.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NaiveSolver {
    pub caps: Caps,
}

impl Solver for NaiveSolver {
    fn sample(&self, instance: &ProblemInstance, seeds: &[u64]) -> Result<Vec<Solution>> {
        let solution = exact_oracle(instance, &self.caps)?.solution;
        Ok(vec![solution; seeds.len()])
    }
}

/// Returns a fixed solution regardless of the input.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantSolver(pub Solution);

impl Solver for ConstantSolver {
    fn sample(&self, _instance: &ProblemInstance, seeds: &[u64]) -> Result<Vec<Solution>> {
        Ok(vec![self.0.clone(); seeds.len()])
    }
}
