//! Simple graphs, rooted trees and the edge-list text format.
//!
//! Vertices are the dense integers `0..n`. The text format is line oriented:
//!
//! ```text
//! # optional comments
//! p 3
//! e 0 1
//! e 1 2
//! r 1
//! ```
//!
//! `p <n>` declares the vertex count, `e <u> <v>` adds an edge and the optional
//! `r <root>` line picks a root (vertex 0 when omitted).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Undirected graph without loops or multi-edges on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Build a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted_edges(n, seen.into_iter().collect()))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleGraph { n, adj, edges }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted_edges(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted_edges(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        edges.sort_unstable();
        Self::from_sorted_edges(n, edges)
    }

    /// `K_{1,k}` with centre 0.
    pub fn star_graph(k: usize) -> Self {
        Self::from_sorted_edges(k + 1, (1..=k).map(|v| (0, v)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in increasing order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of the edge `{u, v}` in [`edges`](Self::edges).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// The neighbours of `v`; `v` itself is never included.
    pub fn star(&self, v: usize) -> Result<&[usize]> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(&self.adj[v])
    }

    pub fn complement(&self) -> SimpleGraph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Self::from_sorted_edges(self.n, edges)
    }

    /// One vertex per edge, in sorted edge order; adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for (j, &(c, d)) in self.edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        Self::from_sorted_edges(self.edges.len(), edges)
    }

    /// Remove `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> SimpleGraph {
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Self::from_sorted_edges(self.n.saturating_sub(1), edges)
    }

    /// Relabel vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n);
        SimpleGraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling by a permutation keeps the graph simple")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Some 3-clique, lexicographically smallest.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for &(u, v) in &self.edges {
            for &w in &self.adj[v] {
                if w > v && self.has_edge(u, w) {
                    return Some((u, v, w));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Clique-count polynomial: the coefficient of `t^i` is the number of
    /// `i`-cliques, with the empty clique giving the constant term 1.
    pub fn f_polynomial(&self) -> IntPolynomial {
        let mut counts: Vec<u64> = vec![1];
        // Extend cliques by strictly larger common neighbours.
        fn extend(g: &SimpleGraph, size: usize, candidates: &[usize], counts: &mut Vec<u64>) {
            for (i, &v) in candidates.iter().enumerate() {
                if counts.len() <= size + 1 {
                    counts.push(0);
                }
                counts[size + 1] += 1;
                let next: Vec<usize> = candidates[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                extend(g, size + 1, &next, counts);
            }
        }
        let all: Vec<usize> = (0..self.n).collect();
        extend(self, 0, &all, &mut counts);
        IntPolynomial::new(counts.into_iter().map(BigInt::from).collect())
    }

    /// Edge-list text, edges sorted by `(min, max)`.
    pub fn to_edge_list(&self, root: Option<usize>) -> String {
        let mut out = format!("p {}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        if let Some(r) = root {
            out.push_str(&format!("r {r}\n"));
        }
        out
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A tree with a distinguished root vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedTree {
    graph: SimpleGraph,
    root: usize,
}

impl RootedTree {
    pub fn new(graph: SimpleGraph, root: usize) -> Result<Self> {
        if root >= graph.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: root, n: graph.vertex_count() });
        }
        if !graph.is_tree() {
            return Err(Error::NotATree);
        }
        Ok(RootedTree { graph, root })
    }

    /// The single vertex, rooted at itself.
    pub fn singleton() -> Self {
        RootedTree { graph: SimpleGraph::empty(1), root: 0 }
    }

    /// Path on `n >= 1` vertices rooted at the end vertex 0.
    pub fn path_from_end(n: usize) -> Self {
        RootedTree { graph: SimpleGraph::path(n), root: 0 }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn with_root(&self, root: usize) -> Result<Self> {
        Self::new(self.graph.clone(), root)
    }

    /// Merge two rooted trees at their roots.
    ///
    /// `self` keeps its labels and its root; the non-root vertices of `other`
    /// are appended after them in increasing label order.
    pub fn coalesce(&self, other: &RootedTree) -> RootedTree {
        let base = self.vertex_count();
        let mut map = vec![0; other.vertex_count()];
        let mut next = base;
        for (v, slot) in map.iter_mut().enumerate() {
            if v == other.root {
                *slot = self.root;
            } else {
                *slot = next;
                next += 1;
            }
        }
        let edges = self
            .graph
            .edges()
            .iter()
            .copied()
            .chain(other.graph.edges().iter().map(|&(u, v)| (map[u], map[v])));
        let graph = SimpleGraph::new(next, edges).expect("coalescence of trees is simple");
        RootedTree { graph, root: self.root }
    }

    /// Remove the root; the result is generally a forest.
    pub fn without_root(&self) -> SimpleGraph {
        self.graph.delete_vertex(self.root)
    }

    pub fn to_edge_list(&self) -> String {
        self.graph.to_edge_list(Some(self.root))
    }
}

/// A clique with at most two vertices: the states of the geodesic automaton.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Clique {
    Empty,
    Vertex(usize),
    /// Stored with the smaller endpoint first.
    Edge(usize, usize),
}

impl Clique {
    pub fn edge(u: usize, v: usize) -> Self {
        Clique::Edge(u.min(v), u.max(v))
    }

    /// Build from an arbitrary list of at most two distinct vertices.
    pub fn from_members(members: &[usize]) -> Option<Self> {
        match *members {
            [] => Some(Clique::Empty),
            [v] => Some(Clique::Vertex(v)),
            [u, v] if u != v => Some(Clique::edge(u, v)),
            _ => None,
        }
    }

    pub fn members(&self) -> Vec<usize> {
        match *self {
            Clique::Empty => vec![],
            Clique::Vertex(v) => vec![v],
            Clique::Edge(u, v) => vec![u, v],
        }
    }

    pub fn contains(&self, s: usize) -> bool {
        match *self {
            Clique::Empty => false,
            Clique::Vertex(v) => v == s,
            Clique::Edge(u, v) => u == s || v == s,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Clique::Empty => 0,
            Clique::Vertex(_) => 1,
            Clique::Edge(..) => 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Clique::Empty)
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clique::Empty => f.write_str("{}"),
            Clique::Vertex(v) => write!(f, "{{{v}}}"),
            Clique::Edge(u, v) => write!(f, "{{{u},{v}}}"),
        }
    }
}

/// A parsed graph together with its root (vertex 0 unless stated).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: SimpleGraph,
    pub root: usize,
}

impl ParsedGraph {
    pub fn into_rooted_tree(self) -> Result<RootedTree> {
        RootedTree::new(self.graph, self.root)
    }
}

/// JSON shape of a graph: `{"schema": "geogrow.graph/v1", "n": .., "edges": [[u, v], ..], "root": ..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub schema: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root: Option<usize>,
}

pub const GRAPH_SCHEMA: &str = "geogrow.graph/v1";

impl GraphJson {
    pub fn new(g: &SimpleGraph, root: Option<usize>) -> Self {
        GraphJson { schema: GRAPH_SCHEMA.into(), n: g.vertex_count(), edges: g.edges().to_vec(), root }
    }

    pub fn into_parsed(self) -> Result<ParsedGraph> {
        let graph = SimpleGraph::new(self.n, self.edges)?;
        let root = self.root.unwrap_or(0);
        if root >= graph.vertex_count().max(1) {
            return Err(Error::VertexOutOfRange { vertex: root, n: graph.vertex_count() });
        }
        Ok(ParsedGraph { graph, root })
    }
}

/// Parse an edge list, or look the text up as a built-in name when it is a
/// single token.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let trimmed = text.trim();
    if !trimmed.is_empty() && !trimmed.contains(char::is_whitespace) {
        return builtin_graph(trimmed);
    }
    parse_edge_list(text)
}

/// Parse the edge-list format. `;` is accepted as a line separator so small
/// graphs fit on a command line.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut n: Option<usize> = None;
    let mut root: Option<usize> = None;
    let mut edges = BTreeSet::new();
    let mut edge_list = Vec::new();
    for (idx, raw) in text.split(['\n', ';']).enumerate() {
        let line = idx + 1;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("not a vertex index: `{s}`")));
        match fields.as_slice() {
            ["p", count] => {
                if n.is_some() {
                    return Err(err("repeated `p` header".into()));
                }
                n = Some(num(count)?);
            }
            ["e", a, b] => {
                let count = n.ok_or_else(|| err("edge before `p` header".into()))?;
                let (u, v) = (num(a)?, num(b)?);
                for w in [u, v] {
                    if w >= count {
                        return Err(err(format!("vertex {w} out of range for {count} vertices")));
                    }
                }
                if u == v {
                    return Err(err(format!("loop at vertex {u}")));
                }
                let e = (u.min(v), u.max(v));
                if !edges.insert(e) {
                    return Err(err(format!("duplicate edge {{{}, {}}}", e.0, e.1)));
                }
                edge_list.push(e);
            }
            ["r", r] => {
                let count = n.ok_or_else(|| err("root before `p` header".into()))?;
                let r = num(r)?;
                if r >= count {
                    return Err(err(format!("root {r} out of range for {count} vertices")));
                }
                root = Some(r);
            }
            _ => return Err(err(format!("malformed line `{content}`"))),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, message: "missing `p <n>` header".into() })?;
    let graph = SimpleGraph::new(n, edge_list)?;
    if n == 0 && root.is_none() {
        return Ok(ParsedGraph { graph, root: 0 });
    }
    Ok(ParsedGraph { graph, root: root.unwrap_or(0) })
}

const MCKAY_T1: &[(usize, usize)] = &[
    (0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 8),
    (5, 9), (8, 10), (9, 11), (10, 12), (11, 13), (13, 14), (13, 15),
];
const MCKAY_T2: &[(usize, usize)] = &[
    (0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7), (4, 8),
    (5, 9), (8, 10), (9, 11), (11, 12), (11, 13), (12, 14), (13, 15),
];
const GODSIL_S1: &[(usize, usize)] = &[(0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 6), (5, 7), (7, 8), (7, 9)];
const GODSIL_S2: &[(usize, usize)] = &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7), (7, 8), (8, 9)];
// The drawn pair with the path between the two branching vertices lengthened
// by one (new vertex 10). Unlike the drawn trees, these 11-vertex trees have
// co-spectral vertex-deleted subtrees, and their start-with-root counts at
// length 8 are 8919523 and 8919522.
const GODSIL_S1_SUBDIVIDED: &[(usize, usize)] =
    &[(0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 6), (5, 10), (7, 10), (7, 8), (7, 9)];
const GODSIL_S2_SUBDIVIDED: &[(usize, usize)] =
    &[(0, 10), (1, 10), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7), (7, 8), (8, 9)];
// Drawn on {0,2,4,5,7,8,9}; relabelled in increasing order.
const GODSIL_SIGMA: &[(usize, usize)] = &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)];

/// The named rooted trees, all rooted at 0.
pub fn builtin_tree(name: &str) -> Result<RootedTree> {
    let (n, edges) = match name {
        "mckay-t1" => (16, MCKAY_T1),
        "mckay-t2" => (16, MCKAY_T2),
        "godsil-s1" => (10, GODSIL_S1),
        "godsil-s2" => (10, GODSIL_S2),
        "godsil-sigma" => (7, GODSIL_SIGMA),
        "godsil-s1-subdivided" => (11, GODSIL_S1_SUBDIVIDED),
        "godsil-s2-subdivided" => (11, GODSIL_S2_SUBDIVIDED),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    let graph = SimpleGraph::new(n, edges.iter().copied()).expect("built-in edge lists are simple");
    RootedTree::new(graph, 0)
}

/// Built-in trees plus the parametrised families `k<n>`, `path<n>`, `cycle<n>`,
/// `star<k>` (`K_{1,k}`) and `edgeless<n>`.
pub fn builtin_graph(name: &str) -> Result<ParsedGraph> {
    if let Ok(t) = builtin_tree(name) {
        return Ok(ParsedGraph { root: t.root(), graph: t.graph });
    }
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
    let (family, size) = name.split_at(split);
    let size: usize = size.parse().map_err(|_| unknown())?;
    let graph = match family {
        "k" | "complete" => SimpleGraph::complete(size),
        "path" => SimpleGraph::path(size),
        "cycle" => SimpleGraph::cycle(size),
        "star" => SimpleGraph::star_graph(size),
        "edgeless" => SimpleGraph::empty(size),
        _ => return Err(unknown()),
    };
    if graph.vertex_count() == 0 {
        return Err(unknown());
    }
    Ok(ParsedGraph { graph, root: 0 })
}
