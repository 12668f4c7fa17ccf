//! Randomized divide-and-conquer maximum weight chain solver.
//!
//! Each call on a universe `U` fixes one pivot chosen by the exponential
//! mechanism over `r(v)` among the vertices whose larger side has at most `d`
//! members, then recurses on the pivot's predecessors and successors. The
//! scale `c` and threshold `d` are drawn uniformly from
//! `[B, 2B]`, `B = ε·opt(U)/ln(|U|/ε)`, and `[|U|/2, 3|U|/4]`.
//!
//! All logarithms are natural.

use std::sync::OnceLock;

use rand::Rng;

use crate::dag::{AntichainFamily, ChainSolution, SubUniverse, TransitiveDag};
use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;
use crate::rng::StreamKey;

/// Nodes used for the `c`-integral in [`pivot_marginal`].
pub const QUADRATURE_NODES: usize = 64;

fn legendre_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(QUADRATURE_NODES))
}

/// Parameters drawn by one recursive call.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecParams {
    pub eps: f64,
    pub c: f64,
    pub d: f64,
}

/// Lower end `B` of the interval `c` is drawn from.
pub fn scale_base(opt: f64, size: usize, eps: f64) -> f64 {
    eps * opt / (size as f64 / eps).ln()
}

#[derive(Clone, Debug, PartialEq)]
pub struct PivotDistribution {
    pub support: Vec<usize>,
    pub probabilities: Vec<f64>,
}

impl PivotDistribution {
    pub fn probability(&self, v: usize) -> f64 {
        self.support.iter().position(|&u| u == v).map_or(0.0, |i| self.probabilities[i])
    }
}

/// Softmax weights `exp(score/c)` normalized, shifted by the maximum score so
/// no finite input overflows. `c == 0` yields the uniform distribution.
pub fn exp_mechanism_probabilities(scores: &[f64], c: f64) -> Vec<f64> {
    if scores.is_empty() {
        return Vec::new();
    }
    if c <= 0.0 {
        return vec![1.0 / scores.len() as f64; scores.len()];
    }
    let top = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = scores.iter().map(|s| ((s - top) / c).exp()).collect();
    let total: f64 = weights.iter().sum();
    weights.into_iter().map(|w| w / total).collect()
}

/// Draws `support[i]` with probability proportional to `exp(scores[i]/c)`.
pub fn exp_mechanism_sample<R: Rng + ?Sized>(support: &[usize], scores: &[f64], c: f64, rng: &mut R) -> Result<usize> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let probs = exp_mechanism_probabilities(scores, c);
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (&v, p) in support.iter().zip(&probs) {
        acc += p;
        if u < acc {
            return Ok(v);
        }
    }
    Ok(*support.last().unwrap())
}

/// One pivot selection, with everything the analysis looks at.
#[derive(Clone, Debug, PartialEq)]
pub struct PivotDraw {
    pub pivot: usize,
    pub params: RecParams,
    pub opt: f64,
    pub pivot_r: f64,
    /// `max_{v ∈ U_d} r(v)`.
    pub best_r_in_ud: f64,
    pub ud_size: usize,
}

/// Samples `c`, `d` and the pivot for a nonempty universe.
pub fn draw_pivot<R: Rng + ?Sized>(dag: &TransitiveDag, universe: &SubUniverse, eps: f64, rng: &mut R) -> Result<PivotDraw> {
    if universe.is_empty() {
        return Err(Error::EmptySupport);
    }
    let size = universe.len();
    let r = dag.r_values(universe);
    let opt = r.iter().copied().fold(0.0, f64::max);
    let base = if opt > 0.0 { scale_base(opt, size, eps) } else { 0.0 };
    let c = base * (1.0 + rng.random::<f64>());
    let d = size as f64 * (0.5 + 0.25 * rng.random::<f64>());

    let counts = dag.side_counts(universe);
    let mut support = Vec::new();
    let mut scores = Vec::new();
    for ((&v, &rv), &(a, b)) in universe.members().iter().zip(&r).zip(&counts) {
        if a.max(b) as f64 <= d {
            support.push(v);
            scores.push(rv);
        }
    }
    let pivot = exp_mechanism_sample(&support, &scores, c, rng)?;
    let pivot_r = scores[support.iter().position(|&v| v == pivot).unwrap()];
    Ok(PivotDraw {
        pivot,
        params: RecParams { eps, c, d },
        opt,
        pivot_r,
        best_r_in_ud: scores.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        ud_size: support.len(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep {
    pub depth: usize,
    pub universe: Vec<usize>,
    pub draw: PivotDraw,
}

/// Every call of one recursion, in call order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RecursionTrace {
    pub steps: Vec<TraceStep>,
}

impl RecursionTrace {
    /// Deepest level reached (root is depth 0); `None` when nothing was recorded.
    pub fn depth(&self) -> Option<usize> {
        self.steps.iter().map(|s| s.depth).max()
    }

    /// Steps grouped by depth.
    pub fn levels(&self) -> Vec<Vec<&TraceStep>> {
        let mut levels: Vec<Vec<&TraceStep>> = vec![Vec::new(); self.depth().map_or(0, |d| d + 1)];
        for step in &self.steps {
            levels[step.depth].push(step);
        }
        levels
    }

    /// `n_U` for every recorded universe, in step order.
    pub fn intersecting_counts(&self, dag: &TransitiveDag, family: &AntichainFamily) -> Vec<usize> {
        self.steps
            .iter()
            .map(|s| family.intersecting(&dag.universe(s.universe.iter().copied()).expect("trace universes are valid")))
            .collect()
    }
}

/// Deepest recursion level allowed by the `3/4` shrinkage: `⌈log_{4/3} m⌉ + 1`.
pub fn depth_bound(m: usize) -> usize {
    if m <= 1 {
        return 1;
    }
    ((m as f64).ln() / (4.0f64 / 3.0).ln()).ceil() as usize + 1
}

/// Recursive solver on `universe` with a fixed `eps`.
pub fn rec(dag: &TransitiveDag, universe: &SubUniverse, eps: f64, key: StreamKey, trace: Option<&mut RecursionTrace>) -> ChainSolution {
    let mut vertices = Vec::new();
    match trace {
        Some(t) => rec_into(dag, universe, eps, key, 0, &mut Some(t), &mut vertices),
        None => rec_into(dag, universe, eps, key, 0, &mut None, &mut vertices),
    }
    let total_weight = vertices.iter().map(|&v| dag.weight(v)).sum();
    ChainSolution { vertices, total_weight }
}

fn rec_into(
    dag: &TransitiveDag,
    universe: &SubUniverse,
    eps: f64,
    key: StreamKey,
    depth: usize,
    trace: &mut Option<&mut RecursionTrace>,
    out: &mut Vec<usize>,
) {
    if universe.is_empty() {
        return;
    }
    let mut rng = key.rng();
    let draw = draw_pivot(dag, universe, eps, &mut rng).expect("U_d is nonempty for d >= |U|/2");
    let pivot = draw.pivot;
    if let Some(t) = trace.as_deref_mut() {
        t.steps.push(TraceStep { depth, universe: universe.members().to_vec(), draw });
    }
    let (before, after) = dag.reach_partition(universe, pivot).expect("pivot lies in U");
    rec_into(dag, &before, eps, key.child(0), depth + 1, trace, out);
    out.push(pivot);
    rec_into(dag, &after, eps, key.child(1), depth + 1, trace, out);
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StableSolverConfig {
    pub delta: f64,
    pub seed: u64,
    pub record_trace: bool,
    /// Fixed `ε` instead of the sampled one.
    pub eps_override: Option<f64>,
}

impl StableSolverConfig {
    pub fn new(delta: f64, seed: u64) -> Result<Self> {
        let config = StableSolverConfig { delta, seed, record_trace: false, eps_override: None };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::InvalidParameter(format!("delta must lie in (0, 1), got {}", self.delta)));
        }
        if let Some(eps) = self.eps_override {
            if !(eps > 0.0 && eps < 1.0) {
                return Err(Error::InvalidParameter(format!("eps must lie in (0, 1), got {eps}")));
            }
        }
        Ok(())
    }
}

/// Interval `[17 ln m / δ, 34 ln m / δ]` that `1/ε` is drawn from.
pub fn inverse_eps_range(m: usize, delta: f64) -> (f64, f64) {
    let base = 17.0 * (m as f64).ln() / delta;
    (base, 2.0 * base)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MwcOutcome {
    pub chain: ChainSolution,
    /// `None` when `|V| <= 1`, where the recursion draws nothing.
    pub eps: Option<f64>,
    pub trace: Option<RecursionTrace>,
}

/// Samples `ε` and runs [`rec`] on the whole vertex set.
pub fn mwc(dag: &TransitiveDag, config: &StableSolverConfig) -> Result<MwcOutcome> {
    config.validate()?;
    let root = StreamKey::new(config.seed);
    let mut trace = config.record_trace.then(RecursionTrace::default);
    let full = dag.full_universe();
    let eps = match config.eps_override {
        Some(eps) => Some(eps),
        None if dag.len() <= 1 => None,
        None => {
            let (lo, hi) = inverse_eps_range(dag.len(), config.delta);
            let inv = lo + (hi - lo) * root.child(0).rng().random::<f64>();
            Some(1.0 / inv)
        }
    };
    let chain = rec(dag, &full, eps.unwrap_or(0.5), root.child(1), trace.as_mut());
    Ok(MwcOutcome { chain, eps, trace })
}

/// Exact `Pr[v̄ = v]` for one call on `universe`, with `c` and `d` integrated
/// out: `d` piecewise exactly, `c` by Gauss–Legendre.
pub fn pivot_marginal(dag: &TransitiveDag, universe: &SubUniverse, eps: f64) -> PivotDistribution {
    let support = universe.members().to_vec();
    let size = support.len();
    if size == 0 {
        return PivotDistribution { support, probabilities: Vec::new() };
    }
    let r = dag.r_values(universe);
    let larger_side: Vec<usize> = dag.side_counts(universe).into_iter().map(|(a, b)| a.max(b)).collect();
    let opt = r.iter().copied().fold(0.0, f64::max);
    let base = if opt > 0.0 { scale_base(opt, size, eps) } else { 0.0 };
    let (nodes, node_weights) = legendre_rule();

    let lo = size as f64 / 2.0;
    let hi = 0.75 * size as f64;
    let mut cuts = vec![lo];
    let mut k = lo.floor() as usize + 1;
    while (k as f64) < hi {
        cuts.push(k as f64);
        k += 1;
    }
    cuts.push(hi);

    let mut probabilities = vec![0.0; size];
    for piece in cuts.windows(2) {
        let share = (piece[1] - piece[0]) / (hi - lo);
        let threshold = piece[0].floor() as usize;
        let members: Vec<usize> = (0..size).filter(|&i| larger_side[i] <= threshold).collect();
        debug_assert!(!members.is_empty());
        let scores: Vec<f64> = members.iter().map(|&i| r[i]).collect();
        if base == 0.0 {
            for (&i, p) in members.iter().zip(exp_mechanism_probabilities(&scores, 0.0)) {
                probabilities[i] += share * p;
            }
            continue;
        }
        for (x, w) in nodes.iter().zip(node_weights) {
            let c = base * (1.5 + 0.5 * x);
            for (&i, p) in members.iter().zip(exp_mechanism_probabilities(&scores, c)) {
                probabilities[i] += share * 0.5 * w * p;
            }
        }
    }
    PivotDistribution { support, probabilities }
}

/// Total variation distance between two pivot distributions over vertex ids.
pub fn pivot_tv(a: &PivotDistribution, b: &PivotDistribution) -> f64 {
    let mut mass: std::collections::BTreeMap<usize, f64> = std::collections::BTreeMap::new();
    for (&v, &p) in a.support.iter().zip(&a.probabilities) {
        *mass.entry(v).or_default() += p;
    }
    for (&v, &p) in b.support.iter().zip(&b.probabilities) {
        *mass.entry(v).or_default() -= p;
    }
    0.5 * mass.values().map(|d| d.abs()).sum::<f64>()
}

/// `(1/n)·3K ε⁻¹ ln(|V| ε⁻¹)`.
pub fn pivot_tv_bound(n: usize, k: usize, vertex_count: usize, eps: f64) -> f64 {
    3.0 * k as f64 / eps * (vertex_count as f64 / eps).ln() / n as f64
}

#[derive(Clone, Debug, PartialEq)]
pub struct PivotTvReport {
    pub per_set: Vec<f64>,
    pub average: f64,
    pub bound: f64,
    /// Sets whose removal empties `V`; their distance is taken as 1.
    pub degenerate: Vec<usize>,
}

/// Exact average pivot TV distance `(1/n) Σ_i TV(v̄(V), v̄(V \ S_i))`.
pub fn average_pivot_tv(dag: &TransitiveDag, family: &AntichainFamily, eps: f64) -> PivotTvReport {
    use rayon::prelude::*;
    let full = dag.full_universe();
    let base = pivot_marginal(dag, &full, eps);
    let per_set: Vec<(f64, bool)> = (0..family.len())
        .into_par_iter()
        .map(|i| {
            let rest = full.without(family.mask(i));
            if rest.is_empty() {
                (1.0, true)
            } else {
                (pivot_tv(&base, &pivot_marginal(dag, &rest, eps)), false)
            }
        })
        .collect();
    let n = family.len().max(1);
    PivotTvReport {
        average: per_set.iter().map(|p| p.0).sum::<f64>() / n as f64,
        degenerate: per_set.iter().enumerate().filter(|(_, p)| p.1).map(|(i, _)| i).collect(),
        per_set: per_set.into_iter().map(|p| p.0).collect(),
        bound: pivot_tv_bound(n, family.bound(), dag.len(), eps),
    }
}
