use super::{Blueprint, Caps, Reduction};
use crate::dag::FamilyMode;
use crate::error::Result;

/// Vertices are pairs `p <= q` with `A_p = A_q`, weight 2 (or 1 when `p = q`);
/// `(p_1, q_1) -> (p_2, q_2)` when `p_1 < p_2 <= q_2 < q_1`. `S_i` holds the
/// pairs touching `i`, so `K = 2`.
pub fn lps_graph(string: &str, caps: &Caps) -> Result<Reduction> {
    let a: Vec<char> = string.chars().collect();
    let n = a.len();
    let mut pairs = Vec::new();
    for p in 1..=n {
        for q in p..=n {
            if a[p - 1] == a[q - 1] {
                pairs.push((p, q));
            }
        }
    }
    caps.check_vertices(pairs.len())?;
    let mut sets = vec![Vec::new(); n];
    for (v, &(p, q)) in pairs.iter().enumerate() {
        sets[p - 1].push(v);
        if q != p {
            sets[q - 1].push(v);
        }
    }
    let bp = Blueprint {
        weights: pairs.iter().map(|&(p, q)| if p < q { 2.0 } else { 1.0 }).collect(),
        labels: pairs.iter().map(|&(p, q)| vec![p as i64, q as i64]).collect(),
        vertex_items: pairs.iter().map(|&(p, q)| if p < q { vec![vec![p], vec![q]] } else { vec![vec![p]] }).collect(),
        sets,
        bound: 2,
        mode: FamilyMode::Antichain,
    };
    Reduction::assemble(bp, |u, v| {
        let ((p1, q1), (p2, q2)) = (pairs[u], pairs[v]);
        p1 < p2 && p2 <= q2 && q2 < q1
    }, caps)
}
