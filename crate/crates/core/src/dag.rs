//! Vertex-weighted transitive DAGs, sub-universes and exact chain optimization.
//!
//! Every constructor closes the input relation transitively, so `(u, v)` is an
//! edge exactly when `v` is reachable from `u`. Reachability rows are stored as
//! dense bitsets up to a configurable vertex count and as sorted adjacency
//! lists above it.

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// Vertex count above which reachability switches to sorted adjacency lists.
pub const DEFAULT_DENSE_CAP: usize = 4096;

#[derive(Clone, Debug)]
enum Reach {
    Dense { succ: Vec<Bitset>, pred: Vec<Bitset> },
    Sparse { succ: Vec<Vec<u32>>, pred: Vec<Vec<u32>> },
}

/// Transitive DAG with nonnegative vertex weights. Immutable once built.
#[derive(Clone, Debug)]
pub struct TransitiveDag {
    weights: Vec<f64>,
    reach: Reach,
    topo: Vec<usize>,
    rank: Vec<usize>,
    edge_count: usize,
}

impl TransitiveDag {
    /// Builds the transitive closure of `edges` over `weights.len()` vertices.
    pub fn new(weights: Vec<f64>, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_dense_cap(weights, edges, DEFAULT_DENSE_CAP)
    }

    pub fn with_dense_cap(weights: Vec<f64>, edges: &[(usize, usize)], dense_cap: usize) -> Result<Self> {
        let m = weights.len();
        let mut direct = vec![Bitset::new(m); m];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= m {
                    return Err(Error::BadIndex { index: x, len: m });
                }
            }
            direct[u].insert(v);
        }
        Self::from_rows(weights, direct, dense_cap)
    }

    /// Builds the DAG whose edges are all pairs `(u, v)` with `less(u, v)`,
    /// closed transitively.
    pub fn from_relation(weights: Vec<f64>, less: impl Fn(usize, usize) -> bool + Sync, dense_cap: usize) -> Result<Self> {
        use rayon::prelude::*;
        let m = weights.len();
        let direct: Vec<Bitset> = (0..m)
            .into_par_iter()
            .map(|u| Bitset::from_indices(m, (0..m).filter(|&v| less(u, v))))
            .collect();
        Self::from_rows(weights, direct, dense_cap)
    }

    fn from_rows(weights: Vec<f64>, direct: Vec<Bitset>, dense_cap: usize) -> Result<Self> {
        let m = weights.len();
        for (vertex, &weight) in weights.iter().enumerate() {
            if !(weight.is_finite() && weight >= 0.0) {
                return Err(Error::BadWeight { vertex, weight });
            }
        }

        // Kahn's algorithm on the direct relation; leftovers lie on a cycle.
        let mut indegree = vec![0usize; m];
        for row in &direct {
            for v in row.ones() {
                indegree[v] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..m).filter(|&v| indegree[v] == 0).collect();
        let mut kahn = Vec::with_capacity(m);
        while let Some(u) = queue.pop() {
            kahn.push(u);
            for v in direct[u].ones() {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push(v);
                }
            }
        }
        if kahn.len() < m {
            let stuck = (0..m).find(|&v| indegree[v] > 0).unwrap_or(0);
            return Err(Error::CycleDetected(stuck));
        }
        let mut kahn_rank = vec![0usize; m];
        for (i, &v) in kahn.iter().enumerate() {
            kahn_rank[v] = i;
        }

        // Reverse topological sweep. A direct successor already covered by an
        // earlier one contributes nothing new, so already-transitive inputs
        // cost one union per covering successor.
        let mut succ: Vec<Bitset> = vec![Bitset::new(m); m];
        for &v in kahn.iter().rev() {
            let mut targets: Vec<usize> = direct[v].ones().collect();
            targets.sort_unstable_by_key(|&s| kahn_rank[s]);
            let mut row = Bitset::new(m);
            for s in targets {
                if !row.contains(s) {
                    row.insert(s);
                    row.union_with(&succ[s]);
                }
            }
            succ[v] = row;
        }
        let mut pred: Vec<Bitset> = vec![Bitset::new(m); m];
        let mut edge_count = 0;
        for (u, row) in succ.iter().enumerate() {
            for v in row.ones() {
                pred[v].insert(u);
                edge_count += 1;
            }
        }

        // In a transitive DAG u -> v implies pred(u) ⊊ pred(v), so ordering by
        // predecessor count is topological.
        let mut topo: Vec<usize> = (0..m).collect();
        topo.sort_by_key(|&v| (pred[v].count(), v));
        let mut rank = vec![0usize; m];
        for (i, &v) in topo.iter().enumerate() {
            rank[v] = i;
        }

        let reach = if m <= dense_cap {
            Reach::Dense { succ, pred }
        } else {
            let lists = |rows: Vec<Bitset>| -> Vec<Vec<u32>> {
                rows.into_iter().map(|r| r.ones().map(|x| x as u32).collect()).collect()
            };
            Reach::Sparse { succ: lists(succ), pred: lists(pred) }
        };
        Ok(TransitiveDag { weights, reach, topo, rank, edge_count })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn weight(&self, v: usize) -> f64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.reach, Reach::Dense { .. })
    }

    /// Vertices in a fixed topological order.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn topo_rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.reach {
            Reach::Dense { succ, .. } => succ[u].contains(v),
            Reach::Sparse { succ, .. } => succ[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn successors(&self, v: usize) -> Vec<usize> {
        match &self.reach {
            Reach::Dense { succ, .. } => succ[v].ones().collect(),
            Reach::Sparse { succ, .. } => succ[v].iter().map(|&x| x as usize).collect(),
        }
    }

    pub fn predecessors(&self, v: usize) -> Vec<usize> {
        match &self.reach {
            Reach::Dense { pred, .. } => pred[v].ones().collect(),
            Reach::Sparse { pred, .. } => pred[v].iter().map(|&x| x as usize).collect(),
        }
    }

    /// All edges `(u, v)` of the closure, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|u| self.successors(u).into_iter().map(move |v| (u, v))).collect()
    }

    fn for_each_neighbor_in(&self, v: usize, forward: bool, universe: &SubUniverse, mut f: impl FnMut(usize)) {
        match &self.reach {
            Reach::Dense { succ, pred } => {
                let row = if forward { &succ[v] } else { &pred[v] };
                row.for_each_common(&universe.mask, f);
            }
            Reach::Sparse { succ, pred } => {
                let row = if forward { &succ[v] } else { &pred[v] };
                for &u in row {
                    if universe.mask.contains(u as usize) {
                        f(u as usize);
                    }
                }
            }
        }
    }

    fn neighbor_count_in(&self, v: usize, forward: bool, universe: &SubUniverse) -> usize {
        match &self.reach {
            Reach::Dense { succ, pred } => {
                let row = if forward { &succ[v] } else { &pred[v] };
                row.intersection_count(&universe.mask)
            }
            Reach::Sparse { .. } => {
                let mut count = 0;
                self.for_each_neighbor_in(v, forward, universe, |_| count += 1);
                count
            }
        }
    }

    pub fn full_universe(&self) -> SubUniverse {
        SubUniverse { members: self.topo.clone(), mask: Bitset::from_indices(self.len(), 0..self.len()) }
    }

    pub fn empty_universe(&self) -> SubUniverse {
        SubUniverse { members: Vec::new(), mask: Bitset::new(self.len()) }
    }

    /// Universe over the given vertices (duplicates ignored).
    pub fn universe(&self, vertices: impl IntoIterator<Item = usize>) -> Result<SubUniverse> {
        let mut mask = Bitset::new(self.len());
        for v in vertices {
            if v >= self.len() {
                return Err(Error::BadIndex { index: v, len: self.len() });
            }
            mask.insert(v);
        }
        Ok(self.universe_from_mask(mask))
    }

    pub fn universe_from_mask(&self, mask: Bitset) -> SubUniverse {
        let mut members: Vec<usize> = mask.ones().collect();
        members.sort_unstable_by_key(|&v| self.rank[v]);
        SubUniverse { members, mask }
    }

    /// `(U_{-v}, U_{+v})`: members of `universe` with an edge into, respectively out of, `v`.
    pub fn reach_partition(&self, universe: &SubUniverse, v: usize) -> Result<(SubUniverse, SubUniverse)> {
        if !universe.contains(v) {
            return Err(Error::VertexNotInUniverse(v));
        }
        Ok((self.side(universe, v, false), self.side(universe, v, true)))
    }

    fn side(&self, universe: &SubUniverse, v: usize, forward: bool) -> SubUniverse {
        let mut mask = Bitset::new(self.len());
        let mut members = Vec::new();
        self.for_each_neighbor_in(v, forward, universe, |u| {
            mask.insert(u);
            members.push(u);
        });
        members.sort_unstable_by_key(|&u| self.rank[u]);
        SubUniverse { members, mask }
    }

    /// `(|U_{-v}|, |U_{+v}|)` for every member, aligned with `universe.members()`.
    pub fn side_counts(&self, universe: &SubUniverse) -> Vec<(usize, usize)> {
        universe
            .members
            .iter()
            .map(|&v| (self.neighbor_count_in(v, false, universe), self.neighbor_count_in(v, true, universe)))
            .collect()
    }

    /// Heaviest chain ending (forward) or starting (backward) at each member,
    /// indexed by vertex id; entries outside the universe are left at zero.
    fn chain_tables(&self, universe: &SubUniverse) -> (Vec<f64>, Vec<f64>, Vec<Option<usize>>) {
        let mut ending = vec![0.0; self.len()];
        let mut back = vec![None; self.len()];
        for &v in &universe.members {
            let mut best = 0.0;
            let mut arg = None;
            self.for_each_neighbor_in(v, false, universe, |u| {
                if arg.is_none() || ending[u] > best || (ending[u] == best && self.rank[u] < self.rank[arg.unwrap()]) {
                    best = ending[u];
                    arg = Some(u);
                }
            });
            ending[v] = best + self.weights[v];
            back[v] = arg;
        }
        let mut starting = vec![0.0; self.len()];
        for &v in universe.members.iter().rev() {
            let mut best: f64 = 0.0;
            self.for_each_neighbor_in(v, true, universe, |u| best = best.max(starting[u]));
            starting[v] = best + self.weights[v];
        }
        (ending, starting, back)
    }

    /// Maximum-weight chain of `G[U]`. Ties go to the topologically earliest end.
    pub fn opt_chain(&self, universe: &SubUniverse) -> ChainSolution {
        if universe.is_empty() {
            return ChainSolution::empty();
        }
        let (ending, _, back) = self.chain_tables(universe);
        let mut end = universe.members[0];
        for &v in &universe.members {
            if ending[v] > ending[end] {
                end = v;
            }
        }
        let mut vertices = vec![end];
        let mut cur = end;
        while let Some(p) = back[cur] {
            vertices.push(p);
            cur = p;
        }
        vertices.reverse();
        let total_weight = vertices.iter().map(|&v| self.weights[v]).sum();
        ChainSolution { vertices, total_weight }
    }

    /// `opt(U)`; zero on the empty universe.
    pub fn opt_value(&self, universe: &SubUniverse) -> f64 {
        if universe.is_empty() {
            return 0.0;
        }
        let (ending, _, _) = self.chain_tables(universe);
        universe.members.iter().map(|&v| ending[v]).fold(0.0, f64::max)
    }

    /// `r(v) = opt(U_{-v}) + w(v) + opt(U_{+v})`, aligned with `universe.members()`.
    pub fn r_values(&self, universe: &SubUniverse) -> Vec<f64> {
        let (ending, starting, _) = self.chain_tables(universe);
        universe.members.iter().map(|&v| ending[v] + starting[v] - self.weights[v]).collect()
    }

    /// `U_d`: members whose larger side has at most `d` vertices.
    pub fn u_d_set(&self, universe: &SubUniverse, d: f64) -> Vec<usize> {
        self.side_counts(universe)
            .into_iter()
            .zip(&universe.members)
            .filter(|((a, b), _)| (*a.max(b) as f64) <= d)
            .map(|(_, &v)| v)
            .collect()
    }

    /// Induced subgraph on `keep`; returns the graph and the old id of each new vertex.
    pub fn induced(&self, keep: &Bitset) -> (TransitiveDag, Vec<usize>) {
        let old: Vec<usize> = keep.ones().collect();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let weights = old.iter().map(|&v| self.weights[v]).collect();
        let mut edges = Vec::new();
        for (i, &u) in old.iter().enumerate() {
            for v in self.successors(u) {
                if new_id[v] != usize::MAX {
                    edges.push((i, new_id[v]));
                }
            }
        }
        let dense_cap = if self.is_dense() { usize::MAX } else { 0 };
        let dag = TransitiveDag::with_dense_cap(weights, &edges, dense_cap).expect("induced subgraph of a DAG is a DAG");
        (dag, old)
    }

    /// Checks acyclicity (strict topological consistency) and transitivity of
    /// the stored relation by direct pairwise inspection.
    pub fn verify_structure(&self) -> bool {
        let m = self.len();
        for u in 0..m {
            if self.has_edge(u, u) {
                return false;
            }
            for v in self.successors(u) {
                if self.rank[u] >= self.rank[v] {
                    return false;
                }
                for x in self.successors(v) {
                    if !self.has_edge(u, x) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A vertex subset `U` of a parent DAG, members kept in topological order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubUniverse {
    members: Vec<usize>,
    mask: Bitset,
}

impl SubUniverse {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &Bitset {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.contains(v)
    }

    /// `U \ removed`.
    pub fn without(&self, removed: &Bitset) -> SubUniverse {
        let mut mask = self.mask.clone();
        mask.difference_with(removed);
        let members = self.members.iter().copied().filter(|&v| !removed.contains(v)).collect();
        SubUniverse { members, mask }
    }
}

/// Chain of vertices in topological order together with its weight.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainSolution {
    pub vertices: Vec<usize>,
    pub total_weight: f64,
}

impl ChainSolution {
    pub fn empty() -> Self {
        ChainSolution { vertices: Vec::new(), total_weight: 0.0 }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True when consecutive vertices are joined by edges and the stored
    /// weight matches the member weights.
    pub fn is_valid_in(&self, dag: &TransitiveDag) -> bool {
        let linked = self.vertices.windows(2).all(|p| dag.has_edge(p[0], p[1]));
        let weight: f64 = self.vertices.iter().map(|&v| dag.weight(v)).sum();
        linked && (weight - self.total_weight).abs() <= 1e-9 * weight.max(1.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyMode {
    /// Every set must be an antichain.
    Antichain,
    /// Sets may contain comparable vertices (the RNA pseudo-antichain regime).
    Pseudo,
}

/// Potentially-missing sets `S_1..S_n`; every vertex lies in `1..=K` of them.
#[derive(Clone, Debug)]
pub struct AntichainFamily {
    sets: Vec<Vec<usize>>,
    masks: Vec<Bitset>,
    bound: usize,
    mode: FamilyMode,
}

impl AntichainFamily {
    pub fn new(dag: &TransitiveDag, sets: Vec<Vec<usize>>, bound: usize, mode: FamilyMode) -> Result<Self> {
        if bound == 0 {
            return Err(Error::InvalidParameter("multiplicity bound K must be positive".into()));
        }
        let m = dag.len();
        let mut counts = vec![0usize; m];
        let mut masks = Vec::with_capacity(sets.len());
        for (index, set) in sets.iter().enumerate() {
            let mut mask = Bitset::new(m);
            for &v in set {
                if v >= m {
                    return Err(Error::BadIndex { index: v, len: m });
                }
                if !mask.contains(v) {
                    counts[v] += 1;
                }
                mask.insert(v);
            }
            if mode == FamilyMode::Antichain {
                for &u in set {
                    if let Some(v) = set.iter().copied().find(|&v| dag.has_edge(u, v)) {
                        return Err(Error::NotAntichain { set: index, from: u, to: v });
                    }
                }
            }
            masks.push(mask);
        }
        if let Some((vertex, &count)) = counts.iter().enumerate().find(|(_, &c)| c == 0 || c > bound) {
            return Err(Error::Multiplicity { vertex, count, bound });
        }
        Ok(AntichainFamily { sets, masks, bound, mode })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn mode(&self) -> FamilyMode {
        self.mode
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn mask(&self, i: usize) -> &Bitset {
        &self.masks[i]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Number of sets meeting `universe` (`n_U`).
    pub fn intersecting(&self, universe: &SubUniverse) -> usize {
        self.masks.iter().filter(|m| m.intersects(universe.mask())).count()
    }
}

/// `Σ_i (opt(V) − opt(V \ S_i))`.
pub fn sum_opt_drop(dag: &TransitiveDag, family: &AntichainFamily) -> f64 {
    let full = dag.full_universe();
    let opt = dag.opt_value(&full);
    (0..family.len()).map(|i| opt - dag.opt_value(&full.without(family.mask(i)))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain4() -> TransitiveDag {
        TransitiveDag::new(vec![1.0; 4], &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn single_isolated_vertex() {
        let dag = TransitiveDag::new(vec![1.0], &[]).unwrap();
        assert_eq!(dag.len(), 1);
        assert_eq!(dag.edge_count(), 0);
    }

    #[test]
    fn closure_adds_transitive_edge() {
        let dag = TransitiveDag::new(vec![1.0; 3], &[(0, 1), (1, 2)]).unwrap();
        assert!(dag.has_edge(0, 2));
        assert_eq!(dag.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn rejects_cycles_and_bad_input() {
        assert!(matches!(TransitiveDag::new(vec![1.0; 2], &[(0, 1), (1, 0)]), Err(Error::CycleDetected(_))));
        assert!(matches!(TransitiveDag::new(vec![1.0], &[(0, 0)]), Err(Error::CycleDetected(_))));
        assert_eq!(TransitiveDag::new(vec![1.0; 2], &[(0, 2)]).unwrap_err(), Error::BadIndex { index: 2, len: 2 });
        assert!(matches!(TransitiveDag::new(vec![-1.0], &[]), Err(Error::BadWeight { .. })));
    }

    #[test]
    fn sparse_storage_matches_dense() {
        let edges = [(0, 2), (2, 4), (1, 4), (3, 1)];
        let dense = TransitiveDag::with_dense_cap(vec![1.0, 2.0, 3.0, 4.0, 5.0], &edges, 100).unwrap();
        let sparse = TransitiveDag::with_dense_cap(vec![1.0, 2.0, 3.0, 4.0, 5.0], &edges, 0).unwrap();
        assert!(dense.is_dense() && !sparse.is_dense());
        assert_eq!(dense.edges(), sparse.edges());
        let (u, s) = (dense.full_universe(), sparse.full_universe());
        assert_eq!(dense.r_values(&u), sparse.r_values(&s));
        assert_eq!(dense.opt_chain(&u), sparse.opt_chain(&s));
        assert_eq!(dense.side_counts(&u), sparse.side_counts(&s));
    }

    #[test]
    fn opt_chain_small_cases() {
        let chain = TransitiveDag::new(vec![1.0, 2.0, 3.0], &[(0, 1), (1, 2)]).unwrap();
        let best = chain.opt_chain(&chain.full_universe());
        assert_eq!(best.vertices, vec![0, 1, 2]);
        assert_eq!(best.total_weight, 6.0);

        let anti = TransitiveDag::new(vec![3.0, 7.0], &[]).unwrap();
        let best = anti.opt_chain(&anti.full_universe());
        assert_eq!(best.vertices, vec![1]);
        assert_eq!(best.total_weight, 7.0);

        assert_eq!(anti.opt_chain(&anti.empty_universe()), ChainSolution::empty());
    }

    #[test]
    fn reach_partition_on_chain() {
        let dag = chain4();
        let (pred, succ) = dag.reach_partition(&dag.full_universe(), 1).unwrap();
        assert_eq!(pred.members(), &[0]);
        assert_eq!(succ.members(), &[2, 3]);

        let iso = TransitiveDag::new(vec![1.0], &[]).unwrap();
        let (pred, succ) = iso.reach_partition(&iso.full_universe(), 0).unwrap();
        assert!(pred.is_empty() && succ.is_empty());

        let partial = dag.universe([0, 2]).unwrap();
        assert_eq!(dag.reach_partition(&partial, 1).unwrap_err(), Error::VertexNotInUniverse(1));
    }

    #[test]
    fn r_values_small_cases() {
        let chain = TransitiveDag::new(vec![1.0, 2.0, 3.0], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(chain.r_values(&chain.full_universe()), vec![6.0; 3]);
        let anti = TransitiveDag::new(vec![3.0, 7.0], &[]).unwrap();
        assert_eq!(anti.r_values(&anti.full_universe()), vec![3.0, 7.0]);
    }

    #[test]
    fn u_d_set_on_chain() {
        let dag = chain4();
        let u = dag.full_universe();
        assert_eq!(dag.u_d_set(&u, 2.0), vec![1, 2]);
        assert_eq!(dag.u_d_set(&u, 4.0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn family_validation() {
        let dag = chain4();
        let singletons = (0..4).map(|v| vec![v]).collect();
        let fam = AntichainFamily::new(&dag, singletons, 1, FamilyMode::Antichain).unwrap();
        assert_eq!(fam.len(), 4);
        assert!(matches!(
            AntichainFamily::new(&dag, vec![vec![0, 1], vec![2], vec![3]], 1, FamilyMode::Antichain),
            Err(Error::NotAntichain { .. })
        ));
        assert!(AntichainFamily::new(&dag, vec![vec![0, 1], vec![2], vec![3]], 1, FamilyMode::Pseudo).is_ok());
        assert!(matches!(
            AntichainFamily::new(&dag, vec![vec![0], vec![1], vec![2]], 1, FamilyMode::Antichain),
            Err(Error::Multiplicity { vertex: 3, count: 0, .. })
        ));
        assert!(matches!(
            AntichainFamily::new(&dag, vec![vec![0], vec![0], vec![1], vec![2], vec![3]], 1, FamilyMode::Antichain),
            Err(Error::Multiplicity { vertex: 0, count: 2, .. })
        ));
    }

    #[test]
    fn sum_opt_drop_examples() {
        // Equal-weight antichain: every deletion leaves an equally heavy vertex
        // except when only one vertex carries the maximum.
        let anti = TransitiveDag::new(vec![2.0, 2.0, 2.0], &[]).unwrap();
        let fam = AntichainFamily::new(&anti, vec![vec![0], vec![1], vec![2]], 1, FamilyMode::Antichain).unwrap();
        assert_eq!(sum_opt_drop(&anti, &fam), 0.0);

        let single = TransitiveDag::new(vec![2.0], &[]).unwrap();
        let fam = AntichainFamily::new(&single, vec![vec![0]], 1, FamilyMode::Antichain).unwrap();
        assert_eq!(sum_opt_drop(&single, &fam), 2.0);

        // Optimum {0,1} weight 5; set {2} never touches it.
        let dag = TransitiveDag::new(vec![2.0, 3.0, 1.0], &[(0, 1)]).unwrap();
        let fam = AntichainFamily::new(&dag, vec![vec![0], vec![1], vec![2]], 1, FamilyMode::Antichain).unwrap();
        assert_eq!(sum_opt_drop(&dag, &fam), 3.0 + 2.0);
    }

    #[test]
    fn induced_subgraph_keeps_structure() {
        let dag = chain4();
        let keep = Bitset::from_indices(4, [0, 2, 3]);
        let (sub, old) = dag.induced(&keep);
        assert_eq!(old, vec![0, 2, 3]);
        assert!(sub.verify_structure());
        assert_eq!(sub.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }
}
