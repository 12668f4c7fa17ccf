use super::{Blueprint, Caps, Reduction};
use crate::dag::FamilyMode;
use crate::error::{Error, Result};

/// Vertices are index tuples `(p_1, .., p_k)` whose letters agree; edges are
/// componentwise-strict increases; unit weights. `S_{i,j}` holds the tuples
/// with `p_i = j`, so every vertex lies in exactly `k` sets.
pub fn lcs_graph(strings: &[String], caps: &Caps) -> Result<Reduction> {
    let k = strings.len();
    if k < 2 {
        return Err(Error::InvalidParameter("common subsequence needs at least two strings".into()));
    }
    let s: Vec<Vec<char>> = strings.iter().map(|x| x.chars().collect()).collect();
    let product = s.iter().try_fold(1u64, |acc, a| acc.checked_mul(a.len() as u64)).unwrap_or(u64::MAX);
    if product > caps.lcs_product {
        return Err(Error::InstanceTooLarge { what: "product of string lengths", size: product, cap: caps.lcs_product });
    }

    let mut tuples: Vec<Vec<usize>> = Vec::new();
    if s.iter().all(|a| !a.is_empty()) {
        let mut cur = vec![1usize; k];
        loop {
            let c = s[0][cur[0] - 1];
            if (1..k).all(|i| s[i][cur[i] - 1] == c) {
                tuples.push(cur.clone());
                caps.check_vertices(tuples.len())?;
            }
            // Odometer increment, last coordinate fastest.
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if cur[pos] < s[pos].len() {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = 1;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }

    let offsets: Vec<usize> = s.iter().scan(0, |acc, a| {
        let o = *acc;
        *acc += a.len();
        Some(o)
    }).collect();
    let mut sets = vec![Vec::new(); s.iter().map(Vec::len).sum()];
    for (v, t) in tuples.iter().enumerate() {
        for (i, &p) in t.iter().enumerate() {
            sets[offsets[i] + p - 1].push(v);
        }
    }
    let bp = Blueprint {
        weights: vec![1.0; tuples.len()],
        labels: tuples.iter().map(|t| t.iter().map(|&p| p as i64).collect()).collect(),
        vertex_items: tuples.iter().map(|t| vec![t.clone()]).collect(),
        sets,
        bound: k,
        mode: FamilyMode::Antichain,
    };
    Reduction::assemble(bp, |u, v| tuples[u].iter().zip(&tuples[v]).all(|(a, b)| a < b), caps)
}
