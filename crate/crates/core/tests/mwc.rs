mod common;

use common::{brute_force_opt, random_transitive_dag};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabledp::stable::{depth_bound, mwc, rec, RecursionTrace, StableSolverConfig};
use stabledp::{StreamKey, TransitiveDag};

#[test]
fn opt_chain_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let m = rng.random_range(0..=9);
        let p = rng.random::<f64>();
        let dag = random_transitive_dag(&mut rng, m, p, 10.0);
        let best = dag.opt_chain(&dag.full_universe());
        assert!(best.is_valid_in(&dag));
        assert!((best.total_weight - brute_force_opt(&dag)).abs() < 1e-9);
    }
}

#[test]
fn central_vertex_attains_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for seed in 0..100 {
        let m = rng.random_range(1..=25);
        let p = rng.random::<f64>();
        let dag = random_transitive_dag(&mut rng, m, p, 10.0);
        let mut trace = RecursionTrace::default();
        rec(&dag, &dag.full_universe(), 0.05, StreamKey::new(seed), Some(&mut trace));
        for step in &trace.steps {
            assert!(step.draw.ud_size >= 1);
            assert!((step.draw.best_r_in_ud - step.draw.opt).abs() < 1e-9, "seed {seed}: {:?}", step.draw);
        }
        assert!(trace.depth().unwrap() < depth_bound(m));
    }
}

fn arb_dag() -> impl Strategy<Value = TransitiveDag> {
    (0usize..14, 0.0f64..1.0, any::<u64>()).prop_map(|(m, p, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_transitive_dag(&mut rng, m, p, 5.0)
    })
}

proptest! {
    #[test]
    fn stable_output_is_a_chain(dag in arb_dag(), seed in any::<u64>(), delta in 0.05f64..0.95) {
        let config = StableSolverConfig::new(delta, seed).unwrap();
        let out = mwc(&dag, &config).unwrap();
        prop_assert!(out.chain.is_valid_in(&dag));
        prop_assert!(out.chain.total_weight <= dag.opt_value(&dag.full_universe()) + 1e-9);
        prop_assert_eq!(out.eps.is_some(), dag.len() > 1);
        prop_assert_eq!(mwc(&dag, &config).unwrap(), out);
    }

    #[test]
    fn rec_covers_every_pivot_once(dag in arb_dag(), seed in any::<u64>()) {
        let mut trace = RecursionTrace::default();
        let out = rec(&dag, &dag.full_universe(), 0.1, StreamKey::new(seed), Some(&mut trace));
        prop_assert_eq!(out.len(), trace.steps.len());
        let mut pivots: Vec<usize> = trace.steps.iter().map(|s| s.draw.pivot).collect();
        pivots.sort_unstable();
        let mut chain = out.vertices.clone();
        chain.sort_unstable();
        prop_assert_eq!(pivots, chain);
        for step in &trace.steps {
            let d = step.draw.params.d;
            let n = step.universe.len() as f64;
            prop_assert!(d >= n / 2.0 && d <= 0.75 * n);
        }
    }
}
