use rand::Rng;

use super::graph::build_rna_graph;
use super::triple::{Span, Triple, TripleListVertex};
use super::RnaInstance;
use crate::error::Result;
use crate::reductions::Caps;
use crate::rng::StreamKey;
use crate::stable::{mwc, StableSolverConfig};

/// Containment tree of a folding, rooted at `(0, n+1)`, with heavy children.
#[derive(Clone, Debug, PartialEq)]
pub struct PairTree {
    /// Node 0 is the root.
    pub nodes: Vec<Span>,
    pub parent: Vec<Option<usize>>,
    /// Children in increasing left endpoint.
    pub children: Vec<Vec<usize>>,
    pub heavy: Vec<Option<usize>>,
    pub subtree_size: Vec<usize>,
}

impl PairTree {
    pub fn root(&self) -> usize {
        0
    }
}

/// `(l, r)` is an ancestor of `(l', r')` iff `[l', r'] ⊆ [l, r]`. The heavy
/// child has the largest subtree; ties go to the smallest left endpoint.
pub fn build_pair_tree(pairs: &[(usize, usize)], n: usize) -> PairTree {
    let mut sorted: Vec<Span> = pairs.iter().map(|&(l, r)| Span::new(l, r)).collect();
    sorted.sort_unstable();
    let mut nodes = vec![Span::new(0, n + 1)];
    nodes.extend(sorted);
    let m = nodes.len();
    let mut parent = vec![None; m];
    let mut children = vec![Vec::new(); m];
    let mut stack = vec![0usize];
    for v in 1..m {
        while !nodes[*stack.last().expect("root stays on the stack")].contains_span(&nodes[v]) {
            stack.pop();
        }
        let p = *stack.last().expect("root stays on the stack");
        parent[v] = Some(p);
        children[p].push(v);
        stack.push(v);
    }
    let mut subtree_size = vec![1usize; m];
    for v in (1..m).rev() {
        if let Some(p) = parent[v] {
            subtree_size[p] += subtree_size[v];
        }
    }
    let heavy = children
        .iter()
        .map(|cs| cs.iter().copied().fold(None, |best: Option<usize>, c| match best {
            Some(b) if subtree_size[b] >= subtree_size[c] => Some(b),
            _ => Some(c),
        }))
        .collect();
    PairTree { nodes, parent, children, heavy, subtree_size }
}

fn dfs(tree: &PairTree, node: usize, current: &mut Vec<Triple>, chain: &mut Vec<TripleListVertex>) {
    let Some(h) = tree.heavy[node] else {
        return;
    };
    let (outer, heavy) = (tree.nodes[node], tree.nodes[h]);
    current.push(Triple::new(outer, heavy, None));
    chain.push(TripleListVertex(current.clone()));
    current.pop();
    for &c in tree.children[node].iter().filter(|&&c| c != h) {
        current.push(Triple::new(outer, heavy, Some(tree.nodes[c])));
        chain.push(TripleListVertex(current.clone()));
        dfs(tree, c, current, chain);
        current.pop();
    }
    dfs(tree, h, current, chain);
}

/// The chain of triple lists whose decoding is the tree's folding.
pub fn make_chain(tree: &PairTree) -> Vec<TripleListVertex> {
    let mut chain = Vec::new();
    dfs(tree, tree.root(), &mut Vec::new(), &mut chain);
    chain
}

/// Result of one stable folding run.
#[derive(Clone, Debug, PartialEq)]
pub struct RnaFoldOutcome {
    pub pairs: Vec<(usize, usize)>,
    /// Sampled real bound `B`; `None` when `n < 2`.
    pub list_bound: Option<f64>,
    pub eps: Option<f64>,
}

/// `B ~ U[ln n, 2 ln n]`, drawn from its own stream of `seed`.
pub fn sample_list_bound(n: usize, seed: u64) -> f64 {
    let ln = (n as f64).ln();
    ln + ln * StreamKey::new(seed).child(7).rng().random::<f64>()
}

/// Samples `B`, builds the graph and decodes a stable maximum weight chain.
/// Lists keep length at least 1, so `n = 2` still sees its single pair.
pub fn rna_fold(inst: &RnaInstance, config: &StableSolverConfig, caps: &Caps) -> Result<RnaFoldOutcome> {
    config.validate()?;
    if inst.len() < 2 {
        return Ok(RnaFoldOutcome { pairs: Vec::new(), list_bound: None, eps: None });
    }
    let b = sample_list_bound(inst.len(), config.seed);
    let graph = build_rna_graph(inst, b.max(1.0), caps)?;
    let outcome = mwc(&graph.reduction.dag, config)?;
    Ok(RnaFoldOutcome { pairs: graph.decode(&outcome.chain)?, list_bound: Some(b), eps: outcome.eps })
}
