//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use stabledp::reductions::{build_reduction, Caps, IntervalItem, ProblemInstance};
use stabledp::rna::is_pseudoknot_free;
use stabledp::{Solution, TransitiveDag};

/// Random DAG on `m` vertices: random order, each forward pair kept with
/// probability `p`, then closed transitively by Floyd–Warshall.
pub fn random_transitive_dag(rng: &mut impl Rng, m: usize, p: f64, max_weight: f64) -> TransitiveDag {
    let mut order: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let mut reach = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            if rng.random::<f64>() < p {
                reach[order[a]][order[b]] = true;
            }
        }
    }
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|&(i, j)| reach[i][j]).collect();
    let weights = (0..m).map(|_| rng.random::<f64>() * max_weight).collect();
    TransitiveDag::new(weights, &edges).unwrap()
}

/// Every chain (pairwise comparable subset), as sorted vertex lists.
pub fn all_chains(dag: &TransitiveDag) -> Vec<Vec<usize>> {
    let m = dag.len();
    assert!(m <= 20);
    (0u32..1 << m)
        .map(|mask| (0..m).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || dag.comparable(u, v))))
        .collect()
}

pub fn brute_force_opt(dag: &TransitiveDag) -> f64 {
    all_chains(dag).iter().map(|c| c.iter().map(|&v| dag.weight(v)).sum::<f64>()).fold(0.0, f64::max)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect())
}

/// Every feasible solution, by exhaustive enumeration and a direct check.
pub fn all_feasible(instance: &ProblemInstance) -> Vec<Solution> {
    match instance {
        ProblemInstance::Lis { sequence } => subsets(sequence.len())
            .filter(|s| s.windows(2).all(|w| sequence[w[0] - 1] < sequence[w[1] - 1]))
            .map(Solution::from_indices)
            .collect(),
        ProblemInstance::Intervals { items } => subsets(items.len())
            .filter(|s| {
                s.iter().all(|&a| {
                    s.iter().all(|&b| a == b || items[a - 1].r <= items[b - 1].l || items[b - 1].r <= items[a - 1].l)
                })
            })
            .map(Solution::from_indices)
            .collect(),
        ProblemInstance::Lcs { strings } => {
            assert_eq!(strings.len(), 2);
            let a: Vec<char> = strings[0].chars().collect();
            let b: Vec<char> = strings[1].chars().collect();
            let mut out = Vec::new();
            for sa in subsets(a.len()) {
                for sb in subsets(b.len()) {
                    if sa.len() == sb.len() && sa.iter().zip(&sb).all(|(&i, &j)| a[i - 1] == b[j - 1]) {
                        out.push(Solution::new(sa.iter().zip(&sb).map(|(&i, &j)| vec![i, j]).collect()));
                    }
                }
            }
            out
        }
        ProblemInstance::Lps { string } => {
            let a: Vec<char> = string.chars().collect();
            subsets(a.len())
                .filter(|s| (0..s.len()).all(|k| a[s[k] - 1] == a[s[s.len() - 1 - k] - 1]))
                .map(Solution::from_indices)
                .collect()
        }
        ProblemInstance::Knapsack { costs, capacity, .. } => subsets(costs.len())
            .filter(|s| s.iter().map(|&i| costs[i - 1]).sum::<u64>() <= *capacity)
            .map(Solution::from_indices)
            .collect(),
        ProblemInstance::Rna { string, relation } => {
            let a: Vec<char> = string.chars().collect();
            all_matchings(a.len(), &|l, r| relation.contains(&(a[l - 1], a[r - 1])))
                .into_iter()
                .filter(|m| is_pseudoknot_free(m).unwrap())
                .map(|m| Solution::new(m.iter().map(|&(l, r)| vec![l, r]).collect()))
                .collect()
        }
    }
}

/// All partial matchings on `1..=n` using allowed pairs, crossing or not.
pub fn all_matchings(n: usize, allowed: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<(usize, usize)>> {
    fn go(i: usize, n: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, allowed: &dyn Fn(usize, usize) -> bool, out: &mut Vec<Vec<(usize, usize)>>) {
        if i > n {
            out.push(cur.clone());
            return;
        }
        if used[i] {
            return go(i + 1, n, used, cur, allowed, out);
        }
        go(i + 1, n, used, cur, allowed, out);
        for j in i + 1..=n {
            if !used[j] && allowed(i, j) {
                used[j] = true;
                cur.push((i, j));
                go(i + 1, n, used, cur, allowed, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, &mut vec![false; n + 2], &mut Vec::new(), allowed, &mut out);
    out
}

pub fn brute_force_objective(instance: &ProblemInstance) -> f64 {
    all_feasible(instance).iter().map(|s| instance.objective(s)).fold(0.0, f64::max)
}

fn word(rng: &mut impl Rng, len: usize, alphabet: &[char]) -> String {
    (0..len).map(|_| alphabet[rng.random_range(0..alphabet.len())]).collect()
}

/// One small random instance of the named problem with `n` elements.
pub fn random_instance(rng: &mut impl Rng, problem: &str, n: usize) -> ProblemInstance {
    match problem {
        "lis" => ProblemInstance::Lis { sequence: (0..n).map(|_| rng.random_range(0..6)).collect() },
        "intervals" => ProblemInstance::Intervals {
            items: (0..n)
                .map(|_| {
                    let l = rng.random_range(0..10) as f64;
                    let r = l + rng.random_range(1..5) as f64;
                    IntervalItem { l, r, w: rng.random_range(1..10) as f64 * 0.5 }
                })
                .collect(),
        },
        "lcs" => {
            let m = rng.random_range(0..=n);
            ProblemInstance::Lcs { strings: vec![word(rng, m, &['a', 'b', 'c']), word(rng, n - m, &['a', 'b', 'c'])] }
        }
        "lps" => ProblemInstance::Lps { string: word(rng, n, &['a', 'b', 'c']) },
        "knapsack" => ProblemInstance::Knapsack {
            costs: (0..n).map(|_| rng.random_range(1..=8)).collect(),
            weights: (0..n).map(|_| rng.random_range(0..20) as f64 * 0.25).collect(),
            capacity: rng.random_range(1..=20),
        },
        "rna" => ProblemInstance::Rna { string: word(rng, n, &['a', 'b', 'c']), relation: vec![('a', 'b'), ('b', 'a'), ('c', 'c')] },
        other => panic!("unknown problem {other}"),
    }
}

pub const PROBLEMS: [&str; 5] = ["lis", "intervals", "lcs", "lps", "knapsack"];

/// Checks that the subgraph induced by `V \ S_i` equals the reduction of the
/// deleted instance after the canonical index shift, for every deletion.
pub fn check_deletion_isomorphism(instance: &ProblemInstance, caps: &Caps, rna_bound: f64) -> Result<(), String> {
    let full = build_reduction(instance, caps, rna_bound).map_err(|e| e.to_string())?;
    for (set, d) in instance.deletions().into_iter().enumerate() {
        let rebuilt = build_reduction(&instance.delete(d), caps, rna_bound).map_err(|e| e.to_string())?;
        let keep = full.surviving(set);
        let (sub, map) = full.dag.induced(&keep);
        if sub.len() != rebuilt.dag.len() {
            return Err(format!("{d:?}: {} vertices survive, rebuilt graph has {}", sub.len(), rebuilt.dag.len()));
        }
        let index: HashMap<&Vec<i64>, usize> = rebuilt.labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut image = Vec::with_capacity(map.len());
        for &old in &map {
            let shifted = instance.shift_label(&full.labels[old], d);
            let Some(&new) = index.get(&shifted) else {
                return Err(format!("{d:?}: label {:?} has no counterpart", full.labels[old]));
            };
            if full.dag.weight(old) != rebuilt.dag.weight(new) {
                return Err(format!("{d:?}: weight differs at {:?}", full.labels[old]));
            }
            image.push(new);
        }
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != image.len() {
            return Err(format!("{d:?}: relabeling is not injective"));
        }
        for a in 0..map.len() {
            for b in 0..map.len() {
                if sub.has_edge(a, b) != rebuilt.dag.has_edge(image[a], image[b]) {
                    return Err(format!("{d:?}: edge mismatch between {:?} and {:?}", full.labels[map[a]], full.labels[map[b]]));
                }
            }
        }
    }
    Ok(())
}

/// Every well-ordered triple with `I ⊆ [0, n+1]`, ignoring the pairing relation.
pub fn all_well_ordered_triples(n: usize) -> Vec<stabledp::rna::Triple> {
    use stabledp::rna::{Span, Triple};
    let spans: Vec<Span> = (0..=n + 1).flat_map(|l| (l + 1..=n + 1).map(move |r| Span::new(l, r))).collect();
    let mut out = Vec::new();
    for &i in &spans {
        for &h in &spans {
            for l in std::iter::once(None).chain(spans.iter().copied().map(Some)) {
                let t = Triple::new(i, h, l);
                if t.is_well_ordered() {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Strings of length `n` over `{a, b}`, indexed by bit pattern.
pub fn binary_strings(n: usize) -> Vec<String> {
    (0u32..1 << n).map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { 'b' } else { 'a' }).collect()).collect()
}
