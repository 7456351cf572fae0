//! Canonical encodings of trees and limb counting.
//!
//! A rooted tree is encoded bottom-up as `(` followed by the sorted encodings
//! of its children and `)`. Two rooted trees are isomorphic exactly when the
//! encodings agree. Free trees are encoded from their centre(s), keeping the
//! lexicographically smaller string when there are two.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{RootedTree, SimpleGraph};

/// Encoding of the subtree hanging off `v` when the tree is entered from `parent`.
fn subtree_code(g: &SimpleGraph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| subtree_code(g, w, Some(v)))
        .collect();
    children.sort_unstable();
    let mut out = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    out.push('(');
    children.iter().for_each(|c| out.push_str(c));
    out.push(')');
    out
}

/// Canonical string of a rooted tree.
pub fn rooted_canonical_form(t: &RootedTree) -> String {
    subtree_code(t.graph(), t.root(), None)
}

/// The one or two centres of a tree.
pub fn tree_centers(g: &SimpleGraph) -> Result<Vec<usize>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.vertex_count();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// Canonical string of a free tree.
pub fn canonical_form(g: &SimpleGraph) -> Result<String> {
    let centers = tree_centers(g)?;
    Ok(centers
        .into_iter()
        .map(|c| subtree_code(g, c, None))
        .min()
        .expect("a tree has at least one centre"))
}

/// Encodings of every directed edge `(child, parent)`: the subtree at `child`
/// once the edge to `parent` is cut.
struct BranchCodes<'g> {
    graph: &'g SimpleGraph,
    memo: HashMap<(usize, usize), String>,
}

impl<'g> BranchCodes<'g> {
    fn new(graph: &'g SimpleGraph) -> Self {
        BranchCodes { graph, memo: HashMap::new() }
    }

    fn code(&mut self, v: usize, parent: usize) -> String {
        if let Some(c) = self.memo.get(&(v, parent)) {
            return c.clone();
        }
        let nbrs: Vec<usize> = self.graph.neighbors(v).iter().copied().filter(|&w| w != parent).collect();
        let mut children: Vec<String> = nbrs.into_iter().map(|w| self.code(w, v)).collect();
        children.sort_unstable();
        let code = format!("({})", children.concat());
        self.memo.insert((v, parent), code.clone());
        code
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Child-subtree encodings of the root of `limb`, with multiplicities.
fn limb_signature(limb: &RootedTree) -> Result<HashMap<String, usize>> {
    if limb.vertex_count() < 2 {
        return Err(Error::LimbTooSmall);
    }
    let g = limb.graph();
    let mut sig = HashMap::new();
    for &c in g.neighbors(limb.root()) {
        *sig.entry(subtree_code(g, c, Some(limb.root()))).or_insert(0) += 1;
    }
    Ok(sig)
}

/// Number of pairs `(v, B)` where `B` is a nonempty set of branches at `v` and
/// `v` together with `B` is isomorphic to `limb` as a rooted tree.
pub fn limb_occurrences(tree: &SimpleGraph, limb: &RootedTree) -> Result<BigUint> {
    let sig = limb_signature(limb)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let needed: usize = sig.values().sum();
    let limb_size = limb.vertex_count();
    let mut codes = BranchCodes::new(tree);
    let mut total = BigUint::zero();
    for v in 0..tree.vertex_count() {
        if tree.degree(v) < needed || tree.vertex_count() < limb_size {
            continue;
        }
        let mut avail: HashMap<String, usize> = HashMap::new();
        for &u in tree.neighbors(v) {
            *avail.entry(codes.code(u, v)).or_insert(0) += 1;
        }
        let ways = sig
            .iter()
            .fold(BigUint::one(), |acc, (code, &k)| acc * binomial(avail.get(code).copied().unwrap_or(0), k));
        total += ways;
    }
    Ok(total)
}

/// Whether `limb` occurs at least once; cheaper than counting.
pub fn has_limb(tree: &SimpleGraph, limb: &RootedTree) -> Result<bool> {
    let sig = limb_signature(limb)?;
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let needed: usize = sig.values().sum();
    let mut codes = BranchCodes::new(tree);
    for v in 0..tree.vertex_count() {
        if tree.degree(v) < needed {
            continue;
        }
        let mut avail: HashMap<String, usize> = HashMap::new();
        for &u in tree.neighbors(v) {
            *avail.entry(codes.code(u, v)).or_insert(0) += 1;
        }
        if sig.iter().all(|(code, &k)| avail.get(code).copied().unwrap_or(0) >= k) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Representatives of the root orbits of a tree: one vertex per class of
/// vertices giving isomorphic rooted trees, smallest label first.
pub fn root_orbits(g: &SimpleGraph) -> Result<Vec<usize>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let mut seen = HashMap::new();
    let mut reps = Vec::new();
    for v in 0..g.vertex_count() {
        if seen.insert(subtree_code(g, v, None), v).is_none() {
            reps.push(v);
        }
    }
    Ok(reps)
}
