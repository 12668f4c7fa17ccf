use std::collections::{BTreeMap, HashMap};

use super::triple::{vertex_lex_lt, Span, Triple, TripleListVertex};
use super::{is_pseudoknot_free, RnaInstance};
use crate::bitset::Bitset;
use crate::dag::{ChainSolution, FamilyMode};
use crate::error::{Error, Result};
use crate::reductions::{Blueprint, Caps, Reduction};

/// The RNA graph together with its vertex lists.
#[derive(Clone, Debug)]
pub struct RnaGraph {
    pub reduction: Reduction,
    pub vertices: Vec<TripleListVertex>,
    /// Maximum list length, `⌊B⌋`.
    pub list_bound: usize,
    pub n: usize,
    index: HashMap<TripleListVertex, usize>,
}

impl RnaGraph {
    pub fn index_of(&self, v: &TripleListVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn decode(&self, chain: &ChainSolution) -> Result<Vec<(usize, usize)>> {
        let lists: Vec<TripleListVertex> = chain.vertices.iter().map(|&v| self.vertices[v].clone()).collect();
        chain_to_pairs(&lists)
    }

    /// Vertices strictly before and strictly after `v`, as masks.
    pub fn side_masks(&self, v: usize) -> (Bitset, Bitset) {
        let dag = &self.reduction.dag;
        (Bitset::from_indices(dag.len(), dag.predecessors(v)), Bitset::from_indices(dag.len(), dag.successors(v)))
    }
}

/// All well-ordered triples with outer interval `outer`.
fn triples_in(inst: &RnaInstance, outer: Span) -> Vec<Triple> {
    let inner: Vec<Span> = (outer.l + 1..outer.r)
        .flat_map(|l| (l + 1..outer.r).map(move |r| Span::new(l, r)))
        .filter(|s| inst.can_pair(s.l, s.r))
        .collect();
    let mut out = Vec::new();
    for &h in &inner {
        out.push(Triple::new(outer, h, None));
        for &l in &inner {
            if h.disjoint(&l) {
                out.push(Triple::new(outer, h, Some(l)));
            }
        }
    }
    out
}

/// Builds the graph whose vertices are all valid triple lists of length at
/// most `⌊B⌋`, with unit weights, edges by [`vertex_lex_lt`], and `S_i` the
/// lists using `i` as an endpoint.
pub fn build_rna_graph(inst: &RnaInstance, b: f64, caps: &Caps) -> Result<RnaGraph> {
    if !(b.is_finite() && b >= 1.0) {
        return Err(Error::InvalidParameter(format!("list length bound must be at least 1, got {b}")));
    }
    let n = inst.len();
    if n > caps.rna_length {
        return Err(Error::InstanceTooLarge { what: "RNA string length", size: n as u64, cap: caps.rna_length as u64 });
    }
    let list_bound = b.floor() as usize;
    let mut by_outer: BTreeMap<Span, Vec<Triple>> = BTreeMap::new();
    for l in 0..=n + 1 {
        for r in l + 1..=n + 1 {
            let span = Span::new(l, r);
            by_outer.insert(span, triples_in(inst, span));
        }
    }

    let mut vertices = Vec::new();
    let mut stack: Vec<Vec<Triple>> =
        by_outer.values().flat_map(|ts| ts.iter().rev().map(|&t| vec![t])).collect::<Vec<_>>();
    stack.reverse();
    while let Some(list) = stack.pop() {
        let last = *list.last().expect("lists are nonempty");
        if list.len() < list_bound {
            if let Some(light) = last.light {
                let nested: Vec<Triple> = by_outer
                    .range(Span::new(light.l, light.l)..=Span::new(light.r, light.r))
                    .filter(|(s, _)| light.contains_span(s))
                    .flat_map(|(_, ts)| ts.iter().copied())
                    .collect();
                for &t in nested.iter().rev() {
                    let mut next = list.clone();
                    next.push(t);
                    stack.push(next);
                }
            }
        }
        vertices.push(TripleListVertex(list));
        caps.check_vertices(vertices.len())?;
    }

    let mut sets = vec![Vec::new(); n];
    for (v, list) in vertices.iter().enumerate() {
        for (i, set) in sets.iter_mut().enumerate() {
            if list.touches(i + 1) {
                set.push(v);
            }
        }
    }
    let mut membership = vec![0usize; vertices.len()];
    sets.iter().flatten().for_each(|&v| membership[v] += 1);
    let bp = Blueprint {
        weights: vec![1.0; vertices.len()],
        labels: vertices.iter().map(TripleListVertex::label).collect(),
        vertex_items: vertices
            .iter()
            .map(|v| {
                let t = v.target().expect("lists are nonempty");
                vec![vec![t.l, t.r]]
            })
            .collect(),
        sets,
        bound: membership.iter().copied().max().unwrap_or(1).max(1),
        mode: FamilyMode::Pseudo,
    };
    let reduction = Reduction::assemble(bp, |u, v| matches!(vertex_lex_lt(&vertices[u], &vertices[v]), Ok(true)), caps)?;
    let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    Ok(RnaGraph { reduction, vertices, list_bound, n, index })
}

/// Decodes a chain (given in chain order) to its folding, sorted by left
/// endpoint. Fails if the pairs are not a pseudoknot-free matching.
pub fn chain_to_pairs(chain: &[TripleListVertex]) -> Result<Vec<(usize, usize)>> {
    let mut pairs: Vec<(usize, usize)> = chain
        .iter()
        .map(|v| v.target().map(|s| (s.l, s.r)).ok_or_else(|| Error::InfeasibleChain("empty vertex list".into())))
        .collect::<Result<_>>()?;
    pairs.sort_unstable();
    match is_pseudoknot_free(&pairs) {
        Ok(true) => Ok(pairs),
        Ok(false) => Err(Error::InfeasibleChain(format!("crossing pairs in {pairs:?}"))),
        Err(e) => Err(Error::InfeasibleChain(e.to_string())),
    }
}

/// Indices `i` with `S_i` met on both sides of `v` while `v ∉ S_i`.
pub fn crossing_index_count(graph: &RnaGraph, v: usize) -> usize {
    let (before, after) = graph.side_masks(v);
    let family = &graph.reduction.family;
    (0..family.len())
        .filter(|&i| {
            let s = family.mask(i);
            !s.contains(v) && s.intersects(&before) && s.intersects(&after)
        })
        .count()
}

/// Indices `i` with `S_i` met on both sides of `v`, whether or not `v ∈ S_i`.
pub fn two_sided_index_count(graph: &RnaGraph, v: usize) -> usize {
    let (before, after) = graph.side_masks(v);
    let family = &graph.reduction.family;
    (0..family.len()).filter(|&i| family.mask(i).intersects(&before) && family.mask(i).intersects(&after)).count()
}

/// At least one of: nothing of `S_i` before `v`, nothing after, or `v ∈ S_i`.
pub fn trichotomy_holds(graph: &RnaGraph, v: usize, i: usize) -> bool {
    let (before, after) = graph.side_masks(v);
    let s = graph.reduction.family.mask(i);
    !s.intersects(&before) || !s.intersects(&after) || s.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abab(n: usize) -> RnaInstance {
        let s: String = (0..n).map(|i| if i % 2 == 0 { 'a' } else { 'b' }).collect();
        RnaInstance::new(&s, &[('a', 'b'), ('b', 'a')])
    }

    #[test]
    fn two_letter_graph() {
        let g = build_rna_graph(&RnaInstance::new("ab", &[('a', 'b')]), 1.0, &Caps::default()).unwrap();
        assert_eq!(g.vertices, vec![TripleListVertex(vec![Triple::new(Span::new(0, 3), Span::new(1, 2), None)])]);
        assert_eq!(g.reduction.dag.opt_value(&g.reduction.dag.full_universe()), 1.0);
        assert_eq!(crossing_index_count(&g, 0), 0);
    }

    #[test]
    fn empty_relation_gives_empty_graph() {
        let g = build_rna_graph(&RnaInstance::new("abab", &[]), 2.0, &Caps::default()).unwrap();
        assert!(g.vertices.is_empty());
        assert!(g.reduction.dag.is_empty());
    }

    #[test]
    fn vertex_counts() {
        let count = |n: usize, b: f64| build_rna_graph(&abab(n), b, &Caps::default()).unwrap().vertices.len();
        assert_eq!(count(8, 2.0), 394);
        assert_eq!(count(8, 3.0), 394);
        assert_eq!(count(10, 2.3), 1841);
        assert_eq!(count(10, 3.0), 1845);
    }

    #[test]
    fn length_cap() {
        let caps = Caps { rna_length: 6, ..Caps::default() };
        assert!(matches!(build_rna_graph(&abab(8), 2.0, &caps), Err(Error::InstanceTooLarge { .. })));
    }
}
