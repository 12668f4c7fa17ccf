//! Earth mover's distance under the symmetric-difference metric.

use std::collections::BTreeMap;

use pathfinding::kuhn_munkres::kuhn_munkres_min;
use pathfinding::matrix::Matrix;

use crate::error::{Error, Result};
use crate::solution::Solution;

/// Default bound on the support size of each side of [`exact_em`].
pub const DEFAULT_SUPPORT_CAP: usize = 2000;

/// Supports this small (both sides together) are matched as a transport
/// problem on distinct solutions instead of an `m × m` assignment.
const COMPRESSED_SUPPORT: usize = 64;

pub fn sym_diff_distance(x: &Solution, y: &Solution) -> usize {
    x.sym_diff(y)
}

/// Finite distribution over solutions. Equal solutions are merged and
/// probabilities normalized to sum to one.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitDistribution {
    points: Vec<(Solution, f64)>,
}

impl ExplicitDistribution {
    pub fn new(points: impl IntoIterator<Item = (Solution, f64)>) -> Result<Self> {
        let mut merged: BTreeMap<Solution, f64> = BTreeMap::new();
        for (s, p) in points {
            if !(p.is_finite() && p >= 0.0) {
                return Err(Error::InvalidParameter(format!("probability must be finite and non-negative, got {p}")));
            }
            *merged.entry(s).or_insert(0.0) += p;
        }
        merged.retain(|_, p| *p > 0.0);
        let total: f64 = merged.values().sum();
        if total <= 0.0 {
            return Err(Error::EmptySupport);
        }
        Ok(ExplicitDistribution { points: merged.into_iter().map(|(s, p)| (s, p / total)).collect() })
    }

    pub fn point_mass(s: Solution) -> Self {
        ExplicitDistribution { points: vec![(s, 1.0)] }
    }

    /// Empirical distribution of `samples`.
    pub fn from_samples(samples: &[Solution]) -> Result<Self> {
        Self::new(samples.iter().map(|s| (s.clone(), 1.0)))
    }

    pub fn points(&self) -> &[(Solution, f64)] {
        &self.points
    }

    pub fn support_len(&self) -> usize {
        self.points.len()
    }
}

/// Exact optimal transport cost between two finite distributions, by
/// successive shortest paths on the bipartite transport network.
pub fn exact_em(a: &ExplicitDistribution, b: &ExplicitDistribution, support_cap: usize) -> Result<f64> {
    for d in [a, b] {
        if d.support_len() > support_cap {
            return Err(Error::SupportTooLarge { size: d.support_len(), cap: support_cap });
        }
    }
    let supply: Vec<f64> = a.points.iter().map(|p| p.1).collect();
    let demand: Vec<f64> = b.points.iter().map(|p| p.1).collect();
    let cost: Vec<Vec<f64>> =
        a.points.iter().map(|(x, _)| b.points.iter().map(|(y, _)| x.sym_diff(y) as f64).collect()).collect();
    Ok(transport(&supply, &demand, &cost))
}

/// Minimum-cost transport of `supply` onto `demand` with dense nonnegative
/// costs, by successive shortest paths from a super source `s` to a super
/// sink `t`. Node potentials keep reduced costs nonnegative for Dijkstra.
fn transport(supply: &[f64], demand: &[f64], cost: &[Vec<f64>]) -> f64 {
    const TOL: f64 = 1e-12;
    let (na, nb) = (supply.len(), demand.len());
    let mut left = supply.to_vec();
    let mut need = demand.to_vec();
    let mut flow = vec![vec![0.0f64; nb]; na];
    let mut pot_a = vec![0.0f64; na];
    let mut pot_b = vec![0.0f64; nb];
    let mut pot_t = 0.0f64;
    let total: f64 = supply.iter().sum::<f64>().min(demand.iter().sum());
    let mut shipped = 0.0;

    while shipped < total - TOL {
        let mut dist_a: Vec<f64> = (0..na).map(|i| if left[i] > TOL { -pot_a[i] } else { f64::INFINITY }).collect();
        let mut dist_b = vec![f64::INFINITY; nb];
        let mut from_b = vec![usize::MAX; nb];
        let mut from_a = vec![usize::MAX; na];
        let mut done_a = vec![false; na];
        let mut done_b = vec![false; nb];
        loop {
            let pick = |dist: &[f64], done: &[bool]| {
                (0..dist.len()).filter(|&x| !done[x] && dist[x].is_finite()).min_by(|&x, &y| dist[x].total_cmp(&dist[y]))
            };
            match (pick(&dist_a, &done_a), pick(&dist_b, &done_b)) {
                (None, None) => break,
                (Some(i), j) if j.is_none_or(|j| dist_a[i] <= dist_b[j]) => {
                    done_a[i] = true;
                    for j in 0..nb {
                        let d = dist_a[i] + cost[i][j] + pot_a[i] - pot_b[j];
                        if !done_b[j] && d < dist_b[j] {
                            dist_b[j] = d;
                            from_b[j] = i;
                        }
                    }
                }
                (_, Some(j)) => {
                    done_b[j] = true;
                    for i in 0..na {
                        let d = dist_b[j] - cost[i][j] + pot_b[j] - pot_a[i];
                        if flow[i][j] > TOL && !done_a[i] && d < dist_a[i] {
                            dist_a[i] = d;
                            from_a[i] = j;
                        }
                    }
                }
                (Some(_), None) => unreachable!(),
            }
        }
        let reach_t = |j: usize| dist_b[j] + pot_b[j] - pot_t;
        let Some(sink) = (0..nb).filter(|&j| need[j] > TOL && dist_b[j].is_finite()).min_by(|&x, &y| reach_t(x).total_cmp(&reach_t(y)))
        else {
            break;
        };
        let dist_t = reach_t(sink);
        for i in 0..na {
            pot_a[i] += dist_a[i].min(dist_t);
        }
        for j in 0..nb {
            pot_b[j] += dist_b[j].min(dist_t);
        }
        pot_t += dist_t;

        let mut amount = need[sink];
        let mut j = sink;
        let source = loop {
            let i = from_b[j];
            if from_a[i] == usize::MAX {
                break i;
            }
            j = from_a[i];
            amount = amount.min(flow[i][j]);
        };
        amount = amount.min(left[source]);
        let mut j = sink;
        loop {
            let i = from_b[j];
            flow[i][j] += amount;
            if from_a[i] == usize::MAX {
                break;
            }
            j = from_a[i];
            flow[i][j] -= amount;
        }
        left[source] -= amount;
        need[sink] -= amount;
        shipped += amount;
    }
    (0..na).map(|i| (0..nb).map(|j| flow[i][j] * cost[i][j]).sum::<f64>()).sum()
}

/// Optimal `m × m` assignment cost between two equal-size samples, divided
/// by `m`. Small supports are solved as the equivalent integral transport
/// problem on distinct solutions.
pub fn empirical_em(a: &[Solution], b: &[Solution]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::InvalidParameter("samples must have equal size".into()));
    }
    let m = a.len();
    if m == 0 {
        return Err(Error::EmptySupport);
    }
    fn count(s: &[Solution]) -> Vec<(&Solution, f64)> {
        let mut c: BTreeMap<&Solution, f64> = BTreeMap::new();
        s.iter().for_each(|x| *c.entry(x).or_insert(0.0) += 1.0);
        c.into_iter().collect()
    }
    let (ca, cb) = (count(a), count(b));
    if ca.len() + cb.len() <= COMPRESSED_SUPPORT {
        let cost: Vec<Vec<f64>> = ca.iter().map(|(x, _)| cb.iter().map(|(y, _)| x.sym_diff(y) as f64).collect()).collect();
        let supply: Vec<f64> = ca.iter().map(|p| p.1).collect();
        let demand: Vec<f64> = cb.iter().map(|p| p.1).collect();
        return Ok(transport(&supply, &demand, &cost).round() / m as f64);
    }
    let weights = Matrix::from_fn(m, m, |(i, j)| a[i].sym_diff(&b[j]) as i64);
    let (total, _) = kuhn_munkres_min(&weights);
    Ok(total as f64 / m as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(items: &[usize]) -> Solution {
        Solution::from_indices(items.iter().copied())
    }

    #[test]
    fn sym_diff_examples() {
        assert_eq!(sym_diff_distance(&s(&[1, 2]), &s(&[2, 3])), 2);
        assert_eq!(sym_diff_distance(&s(&[1, 2]), &s(&[1, 2])), 0);
        assert_eq!(sym_diff_distance(&s(&[1, 2, 5]), &Solution::empty()), 3);
    }

    #[test]
    fn exact_examples() {
        let d = ExplicitDistribution::new([(s(&[1]), 0.3), (s(&[2, 3]), 0.7)]).unwrap();
        assert_eq!(exact_em(&d, &d, DEFAULT_SUPPORT_CAP).unwrap(), 0.0);
        let one = ExplicitDistribution::point_mass(s(&[1]));
        let two = ExplicitDistribution::point_mass(s(&[2]));
        assert_eq!(exact_em(&one, &two, DEFAULT_SUPPORT_CAP).unwrap(), 2.0);
        let half = ExplicitDistribution::new([(s(&[1]), 0.5), (s(&[2]), 0.5)]).unwrap();
        assert!((exact_em(&half, &one, DEFAULT_SUPPORT_CAP).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(exact_em(&half, &one, 1), Err(Error::SupportTooLarge { size: 2, cap: 1 })));
    }

    #[test]
    fn transport_needs_rerouting() {
        // Greedy shipping of the cheapest pair first is suboptimal here.
        let cost = vec![vec![1.0, 2.0], vec![1.0, 10.0]];
        let got = transport(&[1.0, 1.0], &[1.0, 1.0], &cost);
        assert!((got - 3.0).abs() < 1e-12);
    }

    #[test]
    fn empirical_paths_agree() {
        let a: Vec<Solution> = (0..40).map(|i| s(&[i % 7, 10 + i % 3])).collect();
        let b: Vec<Solution> = (0..40).map(|i| s(&[i % 5, 10 + i % 4])).collect();
        let compressed = empirical_em(&a, &b).unwrap();
        let weights = Matrix::from_fn(40, 40, |(i, j)| a[i].sym_diff(&b[j]) as i64);
        let (total, _) = kuhn_munkres_min(&weights);
        assert_eq!(compressed, total as f64 / 40.0);
    }

    #[test]
    fn empirical_examples() {
        let c = vec![s(&[1, 2]); 5];
        assert_eq!(empirical_em(&c, &c).unwrap(), 0.0);
        assert_eq!(empirical_em(&vec![s(&[1]); 9], &vec![s(&[2]); 9]).unwrap(), 2.0);
    }
}
