//! Exact optima via the classical dynamic programs.

use serde::Serialize;

use super::{Caps, IntervalItem, ProblemInstance};
use crate::error::{Error, Result};
use crate::solution::Solution;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleResult {
    pub objective: f64,
    pub solution: Solution,
}

/// Optimal objective and one optimal solution. Ties resolve to the smallest
/// index, so the output is a deterministic function of the instance.
pub fn exact_oracle(instance: &ProblemInstance, caps: &Caps) -> Result<OracleResult> {
    instance.validate()?;
    let solution = match instance {
        ProblemInstance::Lis { sequence } => lis(sequence),
        ProblemInstance::Intervals { items } => intervals(items),
        ProblemInstance::Lcs { strings } => lcs(strings, caps)?,
        ProblemInstance::Lps { string } => lps(string),
        ProblemInstance::Knapsack { costs, weights, capacity } => knapsack(costs, weights, *capacity, caps)?,
        ProblemInstance::Rna { string, relation } => {
            let rna = crate::rna::RnaInstance::new(string, relation);
            Solution::new(crate::rna::nussinov_fold(&rna).into_iter().map(|(l, r)| vec![l, r]).collect())
        }
    };
    Ok(OracleResult { objective: instance.objective(&solution), solution })
}

fn argmax_first(values: impl Iterator<Item = f64>) -> Option<(usize, f64)> {
    values.enumerate().fold(None, |best, (i, v)| match best {
        Some((_, b)) if b >= v => best,
        _ => Some((i, v)),
    })
}

/// Quadratic DP; each position extends the first predecessor of maximal length.
fn lis(a: &[i64]) -> Solution {
    let n = a.len();
    let mut len = vec![1usize; n];
    let mut prev = vec![None; n];
    for j in 0..n {
        for i in 0..j {
            if a[i] < a[j] && len[i] + 1 > len[j] {
                len[j] = len[i] + 1;
                prev[j] = Some(i);
            }
        }
    }
    let Some((mut cur, _)) = argmax_first(len.iter().map(|&l| l as f64)) else {
        return Solution::empty();
    };
    let mut out = vec![cur + 1];
    while let Some(p) = prev[cur] {
        out.push(p + 1);
        cur = p;
    }
    Solution::from_indices(out)
}

/// Weighted interval scheduling over intervals sorted by right endpoint.
fn intervals(items: &[IntervalItem]) -> Solution {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &b| items[a].r.total_cmp(&items[b].r).then(a.cmp(&b)));
    // best[k]: optimum over the first k intervals of `order`.
    let mut best = vec![0.0f64; order.len() + 1];
    let mut take = vec![false; order.len()];
    let mut compat = vec![0usize; order.len()];
    for (k, &j) in order.iter().enumerate() {
        compat[k] = order[..k].partition_point(|&i| items[i].r <= items[j].l);
        let with = items[j].w + best[compat[k]];
        take[k] = with > best[k];
        best[k + 1] = if take[k] { with } else { best[k] };
    }
    let mut out = Vec::new();
    let mut k = order.len();
    while k > 0 {
        if take[k - 1] {
            out.push(order[k - 1] + 1);
            k = compat[k - 1];
        } else {
            k -= 1;
        }
    }
    Solution::from_indices(out)
}

/// Prefix-table DP over all `k` strings.
fn lcs(strings: &[String], caps: &Caps) -> Result<Solution> {
    let s: Vec<Vec<char>> = strings.iter().map(|x| x.chars().collect()).collect();
    let dims: Vec<usize> = s.iter().map(|a| a.len() + 1).collect();
    let cells = dims.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d as u64)).unwrap_or(u64::MAX);
    let cap = caps.lcs_product.saturating_mul(1 << s.len().min(32));
    if cells > cap {
        return Err(Error::InstanceTooLarge { what: "common subsequence table", size: cells, cap });
    }
    let k = s.len();
    let mut stride = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * dims[i + 1];
    }
    let decode = |mut flat: usize| -> Vec<usize> {
        let mut p = vec![0; k];
        for i in 0..k {
            p[i] = flat / stride[i];
            flat %= stride[i];
        }
        p
    };
    let all_stride: usize = stride.iter().sum();
    let mut table = vec![0u32; cells as usize];
    for flat in 0..table.len() {
        let p = decode(flat);
        if p.contains(&0) {
            continue;
        }
        let c = s[0][p[0] - 1];
        table[flat] = if (1..k).all(|i| s[i][p[i] - 1] == c) {
            table[flat - all_stride] + 1
        } else {
            (0..k).map(|i| table[flat - stride[i]]).max().unwrap_or(0)
        };
    }
    let mut out = Vec::new();
    let mut flat = table.len() - 1;
    loop {
        let p = decode(flat);
        if table[flat] == 0 {
            break;
        }
        let c = s[0][p[0] - 1];
        if (1..k).all(|i| s[i][p[i] - 1] == c) {
            out.push(p.clone());
            flat -= all_stride;
        } else {
            let i = (0..k).find(|&i| table[flat - stride[i]] == table[flat]).expect("table is consistent");
            flat -= stride[i];
        }
    }
    Ok(Solution::new(out))
}

/// Interval DP on substrings.
fn lps(string: &str) -> Solution {
    let a: Vec<char> = string.chars().collect();
    let n = a.len();
    if n == 0 {
        return Solution::empty();
    }
    // dp[i][j] for the substring a[i..=j]; dp[i][i-1] is 0.
    let mut dp = vec![vec![0usize; n + 1]; n + 1];
    for i in (0..n).rev() {
        dp[i][i + 1] = 1;
        for j in i + 1..n {
            dp[i][j + 1] = if a[i] == a[j] {
                dp[i + 1][j] + 2
            } else {
                dp[i + 1][j + 1].max(dp[i][j])
            };
        }
    }
    let mut out = Vec::new();
    let (mut i, mut j) = (0usize, n);
    while i < j {
        if j - i == 1 {
            out.push(i + 1);
            break;
        }
        if a[i] == a[j - 1] {
            out.push(i + 1);
            out.push(j);
            i += 1;
            j -= 1;
        } else if dp[i][j - 1] >= dp[i + 1][j] {
            j -= 1;
        } else {
            i += 1;
        }
    }
    Solution::from_indices(out)
}

/// Table over (item prefix, used capacity).
fn knapsack(costs: &[u64], weights: &[f64], capacity: u64, caps: &Caps) -> Result<Solution> {
    let cells = (costs.len() as u64).saturating_mul(capacity);
    if cells > caps.knapsack_cells {
        return Err(Error::InstanceTooLarge { what: "items times capacity", size: cells, cap: caps.knapsack_cells });
    }
    let c = capacity as usize;
    let n = costs.len();
    let mut dp = vec![vec![0.0f64; c + 1]; n + 1];
    for i in 0..n {
        for p in 0..=c {
            let skip = dp[i][p];
            let ci = costs[i] as usize;
            dp[i + 1][p] = if ci <= p { skip.max(dp[i][p - ci] + weights[i]) } else { skip };
        }
    }
    let mut out = Vec::new();
    let mut p = c;
    for i in (0..n).rev() {
        if dp[i + 1][p] != dp[i][p] {
            out.push(i + 1);
            p -= costs[i] as usize;
        }
    }
    Ok(Solution::from_indices(out))
}
