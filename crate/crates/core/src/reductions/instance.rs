use serde::{Deserialize, Serialize};

use crate::dag::{AntichainFamily, FamilyMode, TransitiveDag};
use crate::error::{Error, Result};
use crate::solution::Solution;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalItem {
    pub l: f64,
    pub r: f64,
    pub w: f64,
}

/// A problem instance in its JSON form, tagged by `"problem"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "lowercase")]
pub enum ProblemInstance {
    Lis { sequence: Vec<i64> },
    Intervals { items: Vec<IntervalItem> },
    Lcs { strings: Vec<String> },
    Lps { string: String },
    Knapsack { costs: Vec<u64>, weights: Vec<f64>, capacity: u64 },
    Rna { string: String, relation: Vec<(char, char)> },
}

/// Removal of one input element: letter/item `index` (1-based) of part `part`.
/// Only the common-subsequence problem has more than one part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Deletion {
    pub part: usize,
    pub index: usize,
}

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn remove_char(s: &str, index: usize) -> String {
    s.chars().enumerate().filter(|&(i, _)| i + 1 != index).map(|(_, c)| c).collect()
}

fn without<T: Clone>(v: &[T], index: usize) -> Vec<T> {
    v.iter().enumerate().filter(|&(i, _)| i + 1 != index).map(|(_, x)| x.clone()).collect()
}

impl ProblemInstance {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemInstance::Lis { .. } => "lis",
            ProblemInstance::Intervals { .. } => "intervals",
            ProblemInstance::Lcs { .. } => "lcs",
            ProblemInstance::Lps { .. } => "lps",
            ProblemInstance::Knapsack { .. } => "knapsack",
            ProblemInstance::Rna { .. } => "rna",
        }
    }

    /// Number of deletable input elements.
    pub fn size(&self) -> usize {
        match self {
            ProblemInstance::Lis { sequence } => sequence.len(),
            ProblemInstance::Intervals { items } => items.len(),
            ProblemInstance::Lcs { strings } => strings.iter().map(|s| s.chars().count()).sum(),
            ProblemInstance::Lps { string } | ProblemInstance::Rna { string, .. } => string.chars().count(),
            ProblemInstance::Knapsack { costs, .. } => costs.len(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ProblemInstance::Intervals { items } => {
                for (index, it) in items.iter().enumerate() {
                    if it.l.partial_cmp(&it.r) != Some(std::cmp::Ordering::Less) {
                        return Err(Error::MalformedInterval { index, l: it.l, r: it.r });
                    }
                    if !(it.w.is_finite() && it.w >= 0.0) {
                        return Err(Error::BadWeight { vertex: index, weight: it.w });
                    }
                }
            }
            ProblemInstance::Lcs { strings } if strings.len() < 2 => {
                return Err(Error::InvalidParameter("common subsequence needs at least two strings".into()));
            }
            ProblemInstance::Knapsack { costs, weights, capacity } => {
                if costs.len() != weights.len() {
                    return Err(Error::InvalidParameter("costs and weights differ in length".into()));
                }
                if *capacity == 0 || costs.contains(&0) {
                    return Err(Error::InvalidParameter("costs and capacity must be positive integers".into()));
                }
                if let Some((vertex, &weight)) = weights.iter().enumerate().find(|(_, w)| !(w.is_finite() && **w >= 0.0)) {
                    return Err(Error::BadWeight { vertex, weight });
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// All single-element deletions, in the order of the potentially-missing sets.
    pub fn deletions(&self) -> Vec<Deletion> {
        match self {
            ProblemInstance::Lcs { strings } => strings
                .iter()
                .enumerate()
                .flat_map(|(part, s)| (1..=s.chars().count()).map(move |index| Deletion { part, index }))
                .collect(),
            _ => (1..=self.size()).map(|index| Deletion { part: 0, index }).collect(),
        }
    }

    pub fn delete(&self, d: Deletion) -> ProblemInstance {
        let i = d.index;
        match self {
            ProblemInstance::Lis { sequence } => ProblemInstance::Lis { sequence: without(sequence, i) },
            ProblemInstance::Intervals { items } => ProblemInstance::Intervals { items: without(items, i) },
            ProblemInstance::Lcs { strings } => ProblemInstance::Lcs {
                strings: strings.iter().enumerate().map(|(p, s)| if p == d.part { remove_char(s, i) } else { s.clone() }).collect(),
            },
            ProblemInstance::Lps { string } => ProblemInstance::Lps { string: remove_char(string, i) },
            ProblemInstance::Knapsack { costs, weights, capacity } => {
                ProblemInstance::Knapsack { costs: without(costs, i), weights: without(weights, i), capacity: *capacity }
            }
            ProblemInstance::Rna { string, relation } => {
                ProblemInstance::Rna { string: remove_char(string, i), relation: relation.clone() }
            }
        }
    }

    /// Item fields that hold indices of the part touched by `d`.
    fn index_fields(&self, d: Deletion, width: usize) -> Vec<usize> {
        match self {
            ProblemInstance::Lcs { .. } => vec![d.part],
            ProblemInstance::Rna { .. } => (0..width).collect(),
            _ => vec![0],
        }
    }

    /// Maps an item of a solution of `self.delete(d)` back to `self`'s indices.
    pub fn lift_item(&self, item: &[usize], d: Deletion) -> Vec<usize> {
        let mut out = item.to_vec();
        for f in self.index_fields(d, item.len()) {
            if out[f] >= d.index {
                out[f] += 1;
            }
        }
        out
    }

    pub fn lift_solution(&self, solution: &Solution, d: Deletion) -> Solution {
        solution.map_items(|item| self.lift_item(item, d))
    }

    /// Canonical index shift of a vertex label of `self`'s graph into the
    /// graph of `self.delete(d)`. Negative entries mark absent values.
    pub fn shift_label(&self, label: &[i64], d: Deletion) -> Vec<i64> {
        let fields: Vec<usize> = match self {
            ProblemInstance::Lcs { .. } => vec![d.part],
            ProblemInstance::Lps { .. } => vec![0, 1],
            ProblemInstance::Rna { .. } => (0..label.len()).collect(),
            _ => vec![0],
        };
        let mut out = label.to_vec();
        for f in fields {
            if out[f] > d.index as i64 {
                out[f] -= 1;
            }
        }
        out
    }

    /// Objective value of a decoded solution.
    pub fn objective(&self, solution: &Solution) -> f64 {
        match self {
            ProblemInstance::Intervals { items } => solution.indices().iter().map(|&i| items[i - 1].w).sum(),
            ProblemInstance::Knapsack { weights, .. } => solution.indices().iter().map(|&i| weights[i - 1]).sum(),
            _ => solution.len() as f64,
        }
    }

    /// Direct feasibility check in problem space.
    pub fn is_feasible(&self, solution: &Solution) -> bool {
        let items = solution.items();
        let in_range = |i: usize, n: usize| (1..=n).contains(&i);
        match self {
            ProblemInstance::Lis { sequence } => {
                let idx = solution.indices();
                idx.iter().all(|&i| in_range(i, sequence.len())) && idx.windows(2).all(|p| sequence[p[0] - 1] < sequence[p[1] - 1])
            }
            ProblemInstance::Intervals { items: ivs } => {
                let idx = solution.indices();
                idx.iter().all(|&i| in_range(i, ivs.len()))
                    && idx.iter().all(|&a| {
                        idx.iter().all(|&b| a == b || ivs[a - 1].r <= ivs[b - 1].l || ivs[b - 1].r <= ivs[a - 1].l)
                    })
            }
            ProblemInstance::Lcs { strings } => {
                let s: Vec<Vec<char>> = strings.iter().map(|x| chars(x)).collect();
                items.iter().all(|t| {
                    t.len() == s.len()
                        && t.iter().zip(&s).all(|(&p, a)| in_range(p, a.len()))
                        && t.iter().zip(&s).all(|(&p, a)| a[p - 1] == s[0][t[0] - 1])
                }) && items.windows(2).all(|p| p[0].iter().zip(&p[1]).all(|(a, b)| a < b))
            }
            ProblemInstance::Lps { string } => {
                let a = chars(string);
                let idx = solution.indices();
                idx.iter().all(|&i| in_range(i, a.len()))
                    && (0..idx.len()).all(|k| a[idx[k] - 1] == a[idx[idx.len() - 1 - k] - 1])
            }
            ProblemInstance::Knapsack { costs, capacity, .. } => {
                let idx = solution.indices();
                idx.iter().all(|&i| in_range(i, costs.len())) && idx.iter().map(|&i| costs[i - 1]).sum::<u64>() <= *capacity
            }
            ProblemInstance::Rna { string, relation } => {
                let a = chars(string);
                let pairs: Vec<(usize, usize)> = items.iter().map(|p| (p[0], p[1])).collect();
                pairs.iter().all(|&(l, r)| l < r && in_range(l, a.len()) && in_range(r, a.len()) && relation.contains(&(a[l - 1], a[r - 1])))
                    && crate::rna::is_pseudoknot_free(&pairs).unwrap_or(false)
            }
        }
    }
}

/// Raw graph instance: `{"weights", "edges", "missing_sets", "K"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphInstance {
    pub weights: Vec<f64>,
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
    /// Defaults to one singleton set per vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub missing_sets: Option<Vec<Vec<usize>>>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl GraphInstance {
    pub fn build(&self) -> Result<(TransitiveDag, AntichainFamily)> {
        let dag = TransitiveDag::new(self.weights.clone(), &self.edges)?;
        let sets = self.missing_sets.clone().unwrap_or_else(|| (0..dag.len()).map(|v| vec![v]).collect());
        let family = AntichainFamily::new(&dag, sets, self.k.unwrap_or(1), FamilyMode::Antichain)?;
        Ok((dag, family))
    }
}
