mod common;

use common::{all_matchings, all_well_ordered_triples, binary_strings};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabledp::reductions::{Caps, ProblemInstance};
use stabledp::rna::*;
use stabledp::stable::StableSolverConfig;

const AB: [(char, char); 2] = [('a', 'b'), ('b', 'a')];

fn brute_force_fold(inst: &str, relation: &[(char, char)]) -> Vec<Vec<(usize, usize)>> {
    let a: Vec<char> = inst.chars().collect();
    all_matchings(a.len(), &|l, r| relation.contains(&(a[l - 1], a[r - 1])))
        .into_iter()
        .filter(|m| is_pseudoknot_free(m).unwrap())
        .collect()
}

#[test]
fn nussinov_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..60 {
        let n = rng.random_range(0..=10);
        let s: String = (0..n).map(|_| if rng.random::<bool>() { 'a' } else { 'b' }).collect();
        let inst = RnaInstance::new(&s, &AB);
        let best = brute_force_fold(&s, &AB).iter().map(Vec::len).max().unwrap();
        assert_eq!(nussinov_opt(&inst), best, "{s}");
        let fold = nussinov_fold(&inst);
        assert_eq!(fold.len(), best);
        assert!(is_pseudoknot_free(&fold).unwrap());
        assert!(fold.iter().all(|&(l, r)| inst.can_pair(l, r)));
    }
}

#[test]
fn preceq_is_a_partial_order() {
    let triples = all_well_ordered_triples(4);
    for a in &triples {
        assert!(triple_preceq(a, a));
        for b in &triples {
            if a != b && triple_preceq(a, b) {
                assert!(!triple_preceq(b, a), "{a:?} {b:?}");
                for c in &triples {
                    if triple_preceq(b, c) {
                        assert!(triple_preceq(a, c), "{a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn graph_matches_nussinov_at_six() {
    let caps = Caps::default();
    for s in binary_strings(6) {
        let inst = RnaInstance::new(&s, &AB);
        let b = (6f64).ln();
        let g = build_rna_graph(&inst, b, &caps).unwrap();
        assert!(g.reduction.dag.verify_structure());
        let chain = g.reduction.dag.opt_chain(&g.reduction.dag.full_universe());
        assert_eq!(chain.total_weight as usize, nussinov_opt(&inst), "{s}");
        assert_eq!(g.decode(&chain).unwrap().len(), chain.len());
        for x in brute_force_fold(&s, &AB) {
            let tree = build_pair_tree(&x, 6);
            let lists = make_chain(&tree);
            let mut sorted = x.clone();
            sorted.sort_unstable();
            assert_eq!(chain_to_pairs(&lists).unwrap(), sorted);
            let ids: Vec<usize> = lists.iter().map(|v| g.index_of(v).expect("list is a vertex")).collect();
            assert!(ids.windows(2).all(|w| g.reduction.dag.has_edge(w[0], w[1])), "{s} {x:?}");
            assert!(lists.iter().all(|v| v.len() <= 6usize.ilog2() as usize));
        }
    }
}

#[test]
fn pseudo_antichain_structure_at_six() {
    let caps = Caps::default();
    for s in ["ababab", "aabbab", "abbaab"] {
        let g = build_rna_graph(&RnaInstance::new(s, &AB), 2.0, &caps).unwrap();
        for v in 0..g.vertices.len() {
            for i in 0..g.n {
                assert!(trichotomy_holds(&g, v, i));
            }
            assert_eq!(crossing_index_count(&g, v), 0);
            assert!(two_sided_index_count(&g, v) <= 6 * g.list_bound);
        }
    }
}

#[test]
fn deletion_isomorphism_rna() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..5 {
        let inst = common::random_instance(&mut rng, "rna", 6);
        common::check_deletion_isomorphism(&inst, &caps, 2.0).unwrap_or_else(|e| panic!("{inst:?}: {e}"));
    }
}

#[test]
fn fold_is_feasible_and_reproducible() {
    let caps = Caps::default();
    let inst = RnaInstance::new("abbabaab", &AB);
    let problem = ProblemInstance::Rna { string: "abbabaab".into(), relation: AB.to_vec() };
    for seed in 0..10 {
        let config = StableSolverConfig::new(0.3, seed).unwrap();
        let out = rna_fold(&inst, &config, &caps).unwrap();
        assert!(out.pairs.len() <= nussinov_opt(&inst));
        let sol = stabledp::Solution::new(out.pairs.iter().map(|&(l, r)| vec![l, r]).collect());
        assert!(problem.is_feasible(&sol));
        let b = out.list_bound.unwrap();
        assert!(b >= 8f64.ln() && b <= 2.0 * 8f64.ln());
        assert_eq!(rna_fold(&inst, &config, &caps).unwrap(), out);
    }
}
