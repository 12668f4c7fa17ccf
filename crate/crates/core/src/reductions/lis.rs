use super::{Blueprint, Caps, IntervalItem, Reduction};
use crate::dag::FamilyMode;
use crate::error::{Error, Result};

fn singleton_blueprint(weights: Vec<f64>) -> Blueprint {
    let n = weights.len();
    Blueprint {
        weights,
        labels: (1..=n).map(|i| vec![i as i64]).collect(),
        vertex_items: (1..=n).map(|i| vec![vec![i]]).collect(),
        sets: (0..n).map(|v| vec![v]).collect(),
        bound: 1,
        mode: FamilyMode::Antichain,
    }
}

/// Vertices are positions, `i -> j` when `i < j` and `a_i < a_j`; unit weights.
pub fn lis_graph(sequence: &[i64], caps: &Caps) -> Result<Reduction> {
    let bp = singleton_blueprint(vec![1.0; sequence.len()]);
    Reduction::assemble(bp, |i, j| i < j && sequence[i] < sequence[j], caps)
}

/// Vertices are intervals, `i -> j` when `r_i <= l_j`; problem weights.
pub fn interval_graph(items: &[IntervalItem], caps: &Caps) -> Result<Reduction> {
    for (index, it) in items.iter().enumerate() {
        if it.l.partial_cmp(&it.r) != Some(std::cmp::Ordering::Less) {
            return Err(Error::MalformedInterval { index, l: it.l, r: it.r });
        }
    }
    let bp = singleton_blueprint(items.iter().map(|it| it.w).collect());
    Reduction::assemble(bp, |i, j| items[i].r <= items[j].l, caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lis_small_examples() {
        let red = lis_graph(&[2, 1, 3], &Caps::default()).unwrap();
        assert_eq!(red.dag.edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(red.dag.opt_value(&red.dag.full_universe()), 2.0);

        let red = lis_graph(&[3, 2, 1], &Caps::default()).unwrap();
        assert_eq!(red.dag.edge_count(), 0);
        assert_eq!(red.dag.opt_value(&red.dag.full_universe()), 1.0);
    }

    #[test]
    fn interval_examples() {
        let iv = |l: f64, r: f64| IntervalItem { l, r, w: 1.0 };
        let red = interval_graph(&[iv(0.0, 2.0), iv(1.0, 3.0), iv(2.0, 4.0)], &Caps::default()).unwrap();
        assert_eq!(red.dag.edges(), vec![(0, 2)]);
        assert_eq!(red.dag.opt_value(&red.dag.full_universe()), 2.0);

        let overlapping = [IntervalItem { l: 0.0, r: 5.0, w: 2.0 }, IntervalItem { l: 1.0, r: 4.0, w: 3.5 }];
        let red = interval_graph(&overlapping, &Caps::default()).unwrap();
        assert_eq!(red.dag.edge_count(), 0);
        assert_eq!(red.dag.opt_value(&red.dag.full_universe()), 3.5);

        assert!(matches!(
            interval_graph(&[iv(3.0, 1.0)], &Caps::default()),
            Err(Error::MalformedInterval { index: 0, .. })
        ));
    }
}
