use serde::{Deserialize, Serialize};

/// A decoded problem-space solution: a set of items, each item a short index
/// tuple (`[i]` for index sets, `[p_1, .., p_k]` for common-subsequence
/// tuples, `[l, r]` for base pairs). Indices are 1-based. Items are kept
/// sorted and unique so equal sets compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Solution(Vec<Vec<usize>>);

impl Solution {
    pub fn new(mut items: Vec<Vec<usize>>) -> Self {
        items.sort_unstable();
        items.dedup();
        Solution(items)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Solution::new(indices.into_iter().map(|i| vec![i]).collect())
    }

    pub fn empty() -> Self {
        Solution(Vec::new())
    }

    pub fn items(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First component of every item, for index-set solutions.
    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|item| item[0]).collect()
    }

    /// `|self △ other|`.
    pub fn sym_diff(&self, other: &Solution) -> usize {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j, mut common) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        a.len() + b.len() - 2 * common
    }

    pub fn map_items(&self, f: impl Fn(&[usize]) -> Vec<usize>) -> Solution {
        Solution::new(self.0.iter().map(|item| f(item)).collect())
    }
}
