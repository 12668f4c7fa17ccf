//! Average sensitivity, approximation ratios and their reports.

mod em;
mod solver;

pub use em::{empirical_em, exact_em, sym_diff_distance, ExplicitDistribution, DEFAULT_SUPPORT_CAP};
pub use solver::{ConstantSolver, NaiveSolver, Solver, StableSolver};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::reductions::{build_reduction, exact_oracle, ProblemInstance};
use crate::rna::sample_list_bound;
use crate::rng::StreamKey;
use crate::solution::Solution;

/// Seeds of the `m` runs drawn for one distribution.
pub fn sample_seeds(seed: u64, m: usize) -> Vec<u64> {
    let root = StreamKey::new(seed).child(0);
    (0..m as u64).map(|j| root.child(j).raw()).collect()
}

/// Per-deletion earth mover's estimates and their mean.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SensitivityMeasure {
    pub per_deletion: Vec<f64>,
    pub average: f64,
}

/// Estimates `(1/n) Σ_i EM(Alg(I), Alg(I^i))` over all single-element
/// deletions. Both distributions are sampled at the same `m` seeds; outputs on
/// `I^i` are lifted back to `I`'s indices before comparison.
pub fn average_sensitivity(instance: &ProblemInstance, solver: &dyn Solver, m: usize, seed: u64) -> Result<SensitivityMeasure> {
    if m == 0 {
        return Err(Error::InvalidParameter("sample count m must be at least 1".into()));
    }
    let seeds = sample_seeds(seed, m);
    let base = solver.sample(instance, &seeds)?;
    let per_deletion = instance
        .deletions()
        .into_par_iter()
        .map(|d| {
            let deleted = instance.delete(d);
            let lifted: Vec<Solution> =
                solver.sample(&deleted, &seeds)?.iter().map(|s| instance.lift_solution(s, d)).collect();
            empirical_em(&base, &lifted)
        })
        .collect::<Result<Vec<f64>>>()?;
    let average = if per_deletion.is_empty() { 0.0 } else { per_deletion.iter().sum::<f64>() / per_deletion.len() as f64 };
    Ok(SensitivityMeasure { per_deletion, average })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RatioStats {
    pub mean: f64,
    pub sem: f64,
    pub min: f64,
    pub trials: usize,
}

impl RatioStats {
    pub fn from_values(values: &[f64]) -> Result<Self> {
        let t = values.len();
        if t == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        let mean = values.iter().sum::<f64>() / t as f64;
        let sem = if t > 1 {
            let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (t - 1) as f64;
            (var / t as f64).sqrt()
        } else {
            0.0
        };
        Ok(RatioStats { mean, sem, min: values.iter().copied().fold(f64::INFINITY, f64::min), trials: t })
    }
}

/// Achieved objective over the exact optimum across `trials` seeds; an
/// instance with optimum 0 counts as ratio 1.
pub fn approximation_experiment(instance: &ProblemInstance, solver: &StableSolver, trials: usize, seed: u64) -> Result<RatioStats> {
    let opt = exact_oracle(instance, &solver.caps)?.objective;
    let root = StreamKey::new(seed).child(1);
    let seeds: Vec<u64> = (0..trials as u64).map(|t| root.child(t).raw()).collect();
    let ratios: Vec<f64> = solver
        .sample(instance, &seeds)?
        .iter()
        .map(|s| if opt > 0.0 { instance.objective(s) / opt } else { 1.0 })
        .collect();
    RatioStats::from_values(&ratios)
}

/// `54 · K · δ⁻¹ · ln³|V|`, reported for reference only.
pub fn sensitivity_bound(k: usize, vertex_count: usize, delta: f64) -> Option<f64> {
    (vertex_count > 0).then(|| 54.0 * k as f64 / delta * (vertex_count as f64).ln().powi(3))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SensitivityReport {
    pub problem: String,
    pub n: usize,
    pub delta: f64,
    pub eps: Option<f64>,
    pub m: usize,
    pub per_deletion: Vec<f64>,
    pub average: f64,
    pub paper_bound: Option<f64>,
    pub ratio_stats: Option<RatioStats>,
    pub seed: u64,
    pub runtime_ms: Option<u64>,
}

impl SensitivityReport {
    pub const CSV_HEADER: &'static str =
        "problem,n,delta,eps,m,average,paper_bound,ratio_mean,ratio_sem,ratio_min,ratio_trials,seed,runtime_ms";

    /// Header plus one row of the flat fields.
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        let r = self.ratio_stats;
        let row = [
            self.problem.clone(),
            self.n.to_string(),
            self.delta.to_string(),
            opt(self.eps.map(|e| e.to_string())),
            self.m.to_string(),
            self.average.to_string(),
            opt(self.paper_bound.map(|b| b.to_string())),
            opt(r.map(|r| r.mean.to_string())),
            opt(r.map(|r| r.sem.to_string())),
            opt(r.map(|r| r.min.to_string())),
            opt(r.map(|r| r.trials.to_string())),
            self.seed.to_string(),
            opt(self.runtime_ms.map(|t| t.to_string())),
        ];
        format!("{}\n{}\n", Self::CSV_HEADER, row.join(","))
    }
}

/// Sensitivity of `solver` on `instance`, with the stable solver's
/// parameters and bound, plus approximation ratios when `trials > 0`.
pub fn sensitivity_report(
    instance: &ProblemInstance,
    solver: &dyn Solver,
    stable: &StableSolver,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<SensitivityReport> {
    let measure = average_sensitivity(instance, solver, m, seed)?;
    let bound_b = sample_list_bound(instance.size(), seed).max(1.0);
    let reduction = build_reduction(instance, &stable.caps, bound_b)?;
    let ratio_stats = if trials > 0 { Some(approximation_experiment(instance, stable, trials, seed)?) } else { None };
    Ok(SensitivityReport {
        problem: instance.name().to_string(),
        n: instance.size(),
        delta: stable.delta,
        eps: stable.eps_override,
        m,
        per_deletion: measure.per_deletion,
        average: measure.average,
        paper_bound: sensitivity_bound(reduction.family.bound(), reduction.dag.len(), stable.delta),
        ratio_stats,
        seed,
        runtime_ms: None,
    })
}

/// Reports for the textbook DP and the stable solver on identical deletions
/// and seeds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    pub naive: SensitivityReport,
    pub stable: SensitivityReport,
}

pub fn naive_vs_stable_comparison(instance: &ProblemInstance, stable: &StableSolver, m: usize, seed: u64) -> Result<Comparison> {
    let naive = NaiveSolver { caps: stable.caps };
    Ok(Comparison {
        naive: sensitivity_report(instance, &naive, stable, m, 0, seed)?,
        stable: sensitivity_report(instance, stable, stable, m, 0, seed)?,
    })
}
