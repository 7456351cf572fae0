//! Free trees: exhaustive generation and limb censuses.
//!
//! Generation walks canonical level sequences in the order of Wright,
//! Richmond, Odlyzko and McKay, skipping the sequences that are not centred
//! representatives, so every free tree appears exactly once.

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{has_limb, rooted_canonical_form};
use crate::error::{Error, Result};
use crate::graph::{RootedTree, SimpleGraph};

pub const MAX_TREE_ORDER: usize = 20;

/// Tree whose vertex `i` sits at depth `levels[i]` below its nearest
/// preceding vertex one level up.
pub fn tree_from_levels(levels: &[usize]) -> SimpleGraph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &lvl) in levels.iter().enumerate() {
        stack.truncate(lvl);
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    SimpleGraph::new(levels.len(), edges).expect("level sequences describe trees")
}

/// Next rooted level sequence (Beyer–Hedetniemi), optionally from a fixed pivot.
fn next_rooted(levels: &[usize], pivot: Option<usize>) -> Option<Vec<usize>> {
    let p = match pivot {
        Some(p) => p,
        None => {
            let mut p = levels.len() - 1;
            while levels[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] + 1 != levels[p] {
        q -= 1;
    }
    let mut out = levels.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// The first subtree of the root (levels shifted up) and the rest of the tree.
fn split(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = levels
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map(|(i, _)| i)
        .unwrap_or(levels.len());
    let left = levels[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&levels[m..]);
    (left, rest)
}

/// Move a candidate to the nearest valid free-tree representative.
fn next_free(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split(&candidate);
    let lh = *left.iter().max().unwrap();
    let rh = *rest.iter().max().unwrap();
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p)).expect("pivot is positive");
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = *new_left.iter().max().unwrap();
        let len = next.len();
        for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    next
}

/// Iterator over the free trees on `n` vertices, one per isomorphism class.
pub struct TreeIterator {
    n: usize,
    state: Option<Vec<usize>>,
    small: Option<SimpleGraph>,
}

impl Iterator for TreeIterator {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        if self.n <= 2 {
            return self.small.take();
        }
        let candidate = self.state.take()?;
        let levels = next_free(candidate);
        self.state = next_rooted(&levels, None);
        Some(tree_from_levels(&levels))
    }
}

/// All free trees on `n` vertices, `1 <= n <= 20`.
pub fn enumerate_trees(n: usize) -> Result<TreeIterator> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::TreeSizeOutOfRange(n));
    }
    // Start from the path, rooted at its centre.
    let mut start: Vec<usize> = (0..=n / 2).collect();
    start.extend(1..n.div_ceil(2));
    Ok(TreeIterator { n, state: Some(start), small: Some(SimpleGraph::path(n)) })
}

/// How many trees on `n` vertices carry a given limb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimbCensusReport {
    pub schema: String,
    pub n: usize,
    /// Rooted canonical encoding of the limb.
    pub limb: String,
    pub count: u64,
    pub total: u64,
    /// `count / total` in lowest terms, as `"p/q"`.
    pub proportion: String,
}

pub fn limb_census(n: usize, limb: &RootedTree) -> Result<LimbCensusReport> {
    if limb.vertex_count() < 2 {
        return Err(Error::LimbTooSmall);
    }
    let trees: Vec<SimpleGraph> = enumerate_trees(n)?.collect();
    let count = trees
        .par_iter()
        .map(|t| has_limb(t, limb).map(u64::from))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    let total = trees.len() as u64;
    let g = count.gcd(&total).max(1);
    Ok(LimbCensusReport {
        schema: "geogrow.limb-census/v1".into(),
        n,
        limb: rooted_canonical_form(limb),
        count,
        total,
        proportion: format!("{}/{}", count / g, total / g),
    })
}

/// Total number of limb occurrences over all trees on `n` vertices.
pub fn total_limb_occurrences(n: usize, limb: &RootedTree) -> Result<BigUint> {
    let trees: Vec<SimpleGraph> = enumerate_trees(n)?.collect();
    trees
        .par_iter()
        .map(|t| crate::canon::limb_occurrences(t, limb))
        .try_reduce(BigUint::default, |a, b| Ok(a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn range_is_checked() {
        assert!(matches!(enumerate_trees(0), Err(Error::TreeSizeOutOfRange(0))));
        assert!(matches!(enumerate_trees(21), Err(Error::TreeSizeOutOfRange(21))));
    }

    #[test]
    fn levels_to_graph() {
        let g = tree_from_levels(&[0, 1, 2, 1]);
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn census_of_two_vertices() {
        let r = limb_census(2, &RootedTree::path_from_end(2)).unwrap();
        assert_eq!((r.count, r.total, r.proportion.as_str()), (1, 1, "1/1"));
    }
}
