use super::{Blueprint, Caps, Reduction};
use crate::dag::FamilyMode;
use crate::error::{Error, Result};

/// Vertices `(i, p)` for `c(i) <= p <= C`, weight `w(i)`;
/// `(i_1, p_1) -> (i_2, p_2)` when `i_1 < i_2` and `p_1 + c(i_2) <= p_2`.
/// `S_i` holds item `i`'s vertices.
pub fn knapsack_graph(costs: &[u64], weights: &[f64], capacity: u64, caps: &Caps) -> Result<Reduction> {
    if costs.len() != weights.len() {
        return Err(Error::InvalidParameter("costs and weights differ in length".into()));
    }
    if capacity == 0 || costs.contains(&0) {
        return Err(Error::InvalidParameter("costs and capacity must be positive integers".into()));
    }
    let cells = (costs.len() as u64).saturating_mul(capacity);
    if cells > caps.knapsack_cells {
        return Err(Error::InstanceTooLarge { what: "items times capacity", size: cells, cap: caps.knapsack_cells });
    }
    let mut states = Vec::new();
    let mut sets = vec![Vec::new(); costs.len()];
    for (i, &c) in costs.iter().enumerate() {
        for p in c..=capacity {
            sets[i].push(states.len());
            states.push((i, p));
        }
    }
    caps.check_vertices(states.len())?;
    let bp = Blueprint {
        weights: states.iter().map(|&(i, _)| weights[i]).collect(),
        labels: states.iter().map(|&(i, p)| vec![i as i64 + 1, p as i64]).collect(),
        vertex_items: states.iter().map(|&(i, _)| vec![vec![i + 1]]).collect(),
        sets,
        bound: 1,
        mode: FamilyMode::Antichain,
    };
    Reduction::assemble(bp, |u, v| {
        let ((i1, p1), (i2, p2)) = (states[u], states[v]);
        i1 < i2 && p1 + costs[i2] <= p2
    }, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::Solution;

    #[test]
    fn heavy_first_item_blocks_second() {
        let red = knapsack_graph(&[1, 2], &[10.0, 1.0], 2, &Caps::default()).unwrap();
        assert_eq!(red.labels, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(red.dag.edge_count(), 0);
        let best = red.dag.opt_chain(&red.dag.full_universe());
        assert_eq!(best.total_weight, 10.0);
        assert_eq!(red.decode(&best), Solution::from_indices([1]));
    }

    #[test]
    fn single_item_at_capacity() {
        let red = knapsack_graph(&[4], &[7.5], 4, &Caps::default()).unwrap();
        assert_eq!(red.dag.opt_value(&red.dag.full_universe()), 7.5);
        let red = knapsack_graph(&[5], &[7.5], 4, &Caps::default()).unwrap();
        assert!(red.dag.is_empty());
        assert_eq!(red.family.set(0), &[] as &[usize]);
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps { knapsack_cells: 5, ..Caps::default() };
        assert!(matches!(knapsack_graph(&[1, 1], &[1.0, 1.0], 3, &caps), Err(Error::InstanceTooLarge { .. })));
    }
}
