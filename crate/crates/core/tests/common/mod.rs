//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use geogrow::graph::SimpleGraph;
use geogrow::IntPolynomial;

pub fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

pub fn product(factors: &[&[i64]]) -> IntPolynomial {
    factors.iter().fold(IntPolynomial::one(), |acc, f| &acc * &p(f))
}

/// Rooted encoding of the part of a tree hanging below `v` (away from `parent`),
/// restricted to `allowed` vertices.
fn encode(g: &SimpleGraph, v: usize, parent: Option<usize>, allowed: &dyn Fn(usize) -> bool) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| Some(w) != parent && allowed(w))
        .map(|w| encode(g, w, Some(v), allowed))
        .collect();
    kids.sort();
    format!("[{}]", kids.concat())
}

/// Canonical string of a free tree: the least rooted encoding over all roots.
pub fn brute_canonical(g: &SimpleGraph) -> String {
    (0..g.vertex_count()).map(|r| encode(g, r, None, &|_| true)).min().unwrap_or_default()
}

/// Number of free trees on `n` vertices, by growing leaves and deduplicating.
pub fn tree_count_by_dedup(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut layer = vec![SimpleGraph::path(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &layer {
            for v in 0..size - 1 {
                let mut edges = t.edges().to_vec();
                edges.push((v, size - 1));
                let g = SimpleGraph::new(size, edges).unwrap();
                if seen.insert(brute_canonical(&g)) {
                    next.push(g);
                }
            }
        }
        layer = next;
    }
    layer.len()
}

/// Vertices of the branch at `v` that starts with neighbour `w`.
fn branch(g: &SimpleGraph, v: usize, w: usize) -> Vec<usize> {
    let mut out = vec![w];
    let mut stack = vec![(w, v)];
    while let Some((x, from)) = stack.pop() {
        for &y in g.neighbors(x) {
            if y != from {
                out.push(y);
                stack.push((y, x));
            }
        }
    }
    out
}

/// Limb occurrences by enumerating every vertex and every nonempty subset of
/// its branches.
pub fn limb_occurrences_brute(tree: &SimpleGraph, limb: &SimpleGraph, limb_root: usize) -> u64 {
    let target = encode(limb, limb_root, None, &|_| true);
    let mut count = 0;
    for v in 0..tree.vertex_count() {
        let nbrs = tree.neighbors(v);
        let branches: Vec<Vec<usize>> = nbrs.iter().map(|&w| branch(tree, v, w)).collect();
        for mask in 1u64..(1 << nbrs.len()) {
            let mut keep = vec![false; tree.vertex_count()];
            keep[v] = true;
            for (i, b) in branches.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for &x in b {
                        keep[x] = true;
                    }
                }
            }
            if encode(tree, v, None, &|x| keep[x]) == target {
                count += 1;
            }
        }
    }
    count
}
