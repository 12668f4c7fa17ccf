//! RNA folding: the cubic oracle, the graph over lists of pseudo-interval
//! triples, and the maps between its chains and pseudoknot-free foldings.

mod graph;
mod tree;
mod triple;

pub use graph::{build_rna_graph, chain_to_pairs, crossing_index_count, two_sided_index_count, trichotomy_holds, RnaGraph};
pub use tree::{build_pair_tree, make_chain, rna_fold, sample_list_bound, PairTree, RnaFoldOutcome};
pub use triple::{triple_preceq, vertex_lex_lt, Span, Triple, TripleListVertex};

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// String and allowed base-pair relation.
#[derive(Clone, Debug, PartialEq)]
pub struct RnaInstance {
    bases: Vec<char>,
    relation: HashSet<(char, char)>,
}

impl RnaInstance {
    pub fn new(string: &str, relation: &[(char, char)]) -> Self {
        RnaInstance { bases: string.chars().collect(), relation: relation.iter().copied().collect() }
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// Whether positions `l` and `r` (1-based) may pair.
    pub fn can_pair(&self, l: usize, r: usize) -> bool {
        l >= 1 && r <= self.bases.len() && l < r && self.relation.contains(&(self.bases[l - 1], self.bases[r - 1]))
    }
}

fn nussinov_table(inst: &RnaInstance) -> Vec<Vec<usize>> {
    let n = inst.len();
    // dp[i][j] covers positions i..=j (1-based); empty ranges stay 0.
    let mut dp = vec![vec![0usize; n + 2]; n + 2];
    for d in 2..=n {
        for i in 1..=n + 1 - d {
            let j = i + d - 1;
            let mut best = (i..j).map(|k| dp[i][k] + dp[k + 1][j]).max().unwrap_or(0);
            if inst.can_pair(i, j) {
                best = best.max(dp[i + 1][j - 1] + 1);
            }
            dp[i][j] = best;
        }
    }
    dp
}

/// Maximum number of pairs, by the cubic interval DP.
pub fn nussinov_opt(inst: &RnaInstance) -> usize {
    if inst.len() < 2 {
        return 0;
    }
    nussinov_table(inst)[1][inst.len()]
}

/// One optimal folding, sorted by left endpoint.
pub fn nussinov_fold(inst: &RnaInstance) -> Vec<(usize, usize)> {
    let n = inst.len();
    if n < 2 {
        return Vec::new();
    }
    let dp = nussinov_table(inst);
    let mut out = Vec::new();
    let mut stack = vec![(1usize, n)];
    while let Some((i, j)) = stack.pop() {
        if i >= j || dp[i][j] == 0 {
            continue;
        }
        if inst.can_pair(i, j) && dp[i][j] == dp[i + 1][j - 1] + 1 {
            out.push((i, j));
            stack.push((i + 1, j - 1));
            continue;
        }
        let k = (i..j).find(|&k| dp[i][k] + dp[k + 1][j] == dp[i][j]).expect("table is consistent");
        stack.push((i, k));
        stack.push((k + 1, j));
    }
    out.sort_unstable();
    out
}

/// True iff no two pairs cross. Fails if an index is used twice.
pub fn is_pseudoknot_free(pairs: &[(usize, usize)]) -> Result<bool> {
    let mut seen = HashMap::new();
    for &(l, r) in pairs {
        for i in [l, r] {
            if seen.insert(i, ()).is_some() {
                return Err(Error::DuplicateIndex(i));
            }
        }
    }
    let inside = |x: usize, (l, r): (usize, usize)| l.min(r) < x && x < l.max(r);
    for (a, &p) in pairs.iter().enumerate() {
        for &q in &pairs[a + 1..] {
            if inside(q.0, p) != inside(q.1, p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
