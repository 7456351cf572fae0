//! The clique-state automaton accepting the geodesics of a right-angled
//! Coxeter group with triangle-free defining graph.
//!
//! States are the cliques of the graph (the empty clique, the vertices and the
//! edges, in that order). Reading a letter `s` from state `c` fails when `s`
//! is in `c`; otherwise it moves to `(Star(s) ∩ c) ∪ {s}`. Every state accepts,
//! and the failure sink is left implicit.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Clique, SimpleGraph};
use crate::spectral::IntMatrix;

/// Deterministic geodesic acceptor; start state is index 0 (the empty clique).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicAutomaton {
    graph: SimpleGraph,
    states: Vec<Clique>,
    /// `transitions[state][letter]`, `None` standing for the failure sink.
    transitions: Vec<Vec<Option<usize>>>,
}

impl GeodesicAutomaton {
    pub fn build(g: &SimpleGraph) -> Result<Self> {
        if let Some((a, b, c)) = g.find_triangle() {
            return Err(Error::Triangle(a, b, c));
        }
        let n = g.vertex_count();
        let mut states = Vec::with_capacity(1 + n + g.edge_count());
        states.push(Clique::Empty);
        states.extend((0..n).map(Clique::Vertex));
        states.extend(g.edges().iter().map(|&(u, v)| Clique::Edge(u, v)));

        let mut automaton = GeodesicAutomaton { graph: g.clone(), states, transitions: Vec::new() };
        let transitions = automaton
            .states
            .iter()
            .map(|&c| (0..n).map(|s| automaton.step_clique(c, s).map(|t| automaton.index_of(t))).collect())
            .collect();
        automaton.transitions = transitions;
        Ok(automaton)
    }

    fn step_clique(&self, c: Clique, s: usize) -> Option<Clique> {
        if c.contains(s) {
            return None;
        }
        let mut members: Vec<usize> = c.members().into_iter().filter(|&w| self.graph.has_edge(s, w)).collect();
        members.push(s);
        members.sort_unstable();
        Some(Clique::from_members(&members).expect("triangle-free graphs only produce cliques of size <= 2"))
    }

    /// Index of a clique under the fixed state order; panics on a non-state.
    fn index_of(&self, c: Clique) -> usize {
        self.try_index_of(c).expect("target clique is a state")
    }

    fn try_index_of(&self, c: Clique) -> Option<usize> {
        let n = self.graph.vertex_count();
        match c {
            Clique::Empty => Some(0),
            Clique::Vertex(v) if v < n => Some(1 + v),
            Clique::Edge(u, v) => self.graph.edge_index(u, v).map(|e| 1 + n + e),
            _ => None,
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn states(&self) -> &[Clique] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn start(&self) -> usize {
        0
    }

    /// Target of `letter` from `state`, or `None` for the failure sink.
    pub fn step(&self, state: usize, letter: usize) -> Option<usize> {
        self.transitions[state][letter]
    }

    /// Follow a word from the start state; `None` once it fails.
    pub fn run(&self, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(self.start(), |q, &s| self.step(q, s))
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.run(word).is_some()
    }

    /// All non-failing transitions as `(from, letter, to)`.
    pub fn transition_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (q, row) in self.transitions.iter().enumerate() {
            for (s, t) in row.iter().enumerate() {
                if let Some(t) = t {
                    out.push((q, s, *t));
                }
            }
        }
        out
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.iter().flatten().filter(|t| t.is_some()).count()
    }

    /// Index of the state labelled by clique `c`.
    pub fn state_of_clique(&self, c: &[usize]) -> Result<usize> {
        let mut members = c.to_vec();
        members.sort_unstable();
        let clique = Clique::from_members(&members).ok_or_else(|| Error::NotAState(members.clone()))?;
        self.try_index_of(clique).ok_or(Error::NotAState(members))
    }

    fn check_letter(&self, s: usize) -> Result<()> {
        if s >= self.alphabet_size() {
            return Err(Error::VertexOutOfRange { vertex: s, n: self.alphabet_size() });
        }
        Ok(())
    }

    /// States from which `s` neither fails nor lands on `{s}`.
    pub fn end_states_for_letter(&self, s: usize) -> Result<Vec<usize>> {
        self.check_letter(s)?;
        let single = 1 + s;
        Ok((0..self.state_count())
            .filter(|&q| matches!(self.step(q, s), Some(t) if t != single))
            .collect())
    }

    /// States from which `s` does not fail.
    pub fn states_accepting_letter(&self, s: usize) -> Result<Vec<usize>> {
        self.check_letter(s)?;
        Ok((0..self.state_count()).filter(|&q| self.step(q, s).is_some()).collect())
    }

    /// `M[i][j]` = number of letters taking state `i` to state `j`.
    pub fn transition_matrix(&self) -> TransitionMatrix {
        let n = self.state_count();
        let mut counts = vec![vec![0u32; n]; n];
        for (q, _, t) in self.transition_triples() {
            counts[q][t] += 1;
        }
        TransitionMatrix { counts }
    }

    /// Graphviz rendering; the failure sink is omitted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph geodesics {\n  rankdir=LR;\n  start [shape=point];\n  start -> q0;\n");
        for (i, c) in self.states.iter().enumerate() {
            let _ = writeln!(out, "  q{i} [label=\"{c}\", shape=doublecircle];");
        }
        for (q, s, t) in self.transition_triples() {
            let _ = writeln!(out, "  q{q} -> q{t} [label=\"{s}\"];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> AutomatonJson {
        AutomatonJson {
            schema: "geogrow.automaton/v1".to_string(),
            alphabet_size: self.alphabet_size(),
            start: self.start(),
            states: self.states.iter().map(Clique::members).collect(),
            transitions: self.transition_triples(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AutomatonJson {
    pub schema: String,
    pub alphabet_size: usize,
    pub start: usize,
    pub states: Vec<Vec<usize>>,
    /// `(from, letter, to)` triples.
    pub transitions: Vec<(usize, usize, usize)>,
}

/// Transfer matrix over the accepting states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    counts: Vec<Vec<u32>>,
}

impl TransitionMatrix {
    pub fn from_counts(counts: Vec<Vec<u32>>) -> Self {
        assert!(counts.iter().all(|r| r.len() == counts.len()), "transition matrix must be square");
        TransitionMatrix { counts }
    }

    pub fn dim(&self) -> usize {
        self.counts.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.counts[i][j]
    }

    pub fn row_sum(&self, i: usize) -> u32 {
        self.counts[i].iter().sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().map(|&c| c as u64).sum()
    }

    /// Sparse successor lists `(target, multiplicity)` per state.
    pub fn successors(&self) -> Vec<Vec<(usize, u32)>> {
        self.counts
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &c)| c > 0).map(|(j, &c)| (j, c)).collect())
            .collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let n = self.dim();
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if self.counts[i][j] != 0 {
                    m.set(i, j, BigInt::from(self.counts[i][j]));
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_tree;

    #[test]
    fn k2_automaton() {
        let a = GeodesicAutomaton::build(&SimpleGraph::complete(2)).unwrap();
        assert_eq!(a.states(), &[Clique::Empty, Clique::Vertex(0), Clique::Vertex(1), Clique::Edge(0, 1)]);
        assert_eq!(a.transition_triples(), vec![(0, 0, 1), (0, 1, 2), (1, 1, 3), (2, 0, 3)]);
        let m = a.transition_matrix();
        assert_eq!(m.total(), 4);
        assert!((0..4).all(|i| m.get(i, i) == 0));
    }

    #[test]
    fn edgeless_pair_automaton() {
        let a = GeodesicAutomaton::build(&SimpleGraph::empty(2)).unwrap();
        assert_eq!(a.state_count(), 3);
        assert_eq!(a.transition_triples(), vec![(0, 0, 1), (0, 1, 2), (1, 1, 2), (2, 0, 1)]);
    }

    #[test]
    fn mckay_sizes() {
        for name in ["mckay-t1", "mckay-t2"] {
            let t = builtin_tree(name).unwrap();
            let a = GeodesicAutomaton::build(t.graph()).unwrap();
            assert_eq!(a.state_count(), 32);
            assert_eq!(a.transition_count(), 466);
            let m = a.transition_matrix();
            assert_eq!(m.total(), 466);
            assert_eq!(m.row_sum(0), 16);
        }
    }

    #[test]
    fn triangles_are_rejected() {
        assert_eq!(GeodesicAutomaton::build(&SimpleGraph::complete(3)), Err(Error::Triangle(0, 1, 2)));
    }

    #[test]
    fn clique_lookup() {
        let t1 = builtin_tree("mckay-t1").unwrap();
        let a = GeodesicAutomaton::build(t1.graph()).unwrap();
        assert_eq!(a.state_of_clique(&[]).unwrap(), 0);
        assert_eq!(a.state_of_clique(&[0]).unwrap(), 1);
        assert_eq!(a.state_of_clique(&[4, 1]).unwrap(), a.state_of_clique(&[1, 4]).unwrap());
        let t2 = builtin_tree("mckay-t2").unwrap();
        let a2 = GeodesicAutomaton::build(t2.graph()).unwrap();
        assert_eq!(a2.state_of_clique(&[1, 4]), Err(Error::NotAState(vec![1, 4])));
    }

    #[test]
    fn end_states() {
        let k2 = GeodesicAutomaton::build(&SimpleGraph::complete(2)).unwrap();
        assert_eq!(k2.end_states_for_letter(0).unwrap(), vec![2]);
        let pair = GeodesicAutomaton::build(&SimpleGraph::empty(2)).unwrap();
        assert!(pair.end_states_for_letter(0).unwrap().is_empty());
        assert!(pair.end_states_for_letter(2).is_err());

        let t1 = builtin_tree("mckay-t1").unwrap();
        let a = GeodesicAutomaton::build(t1.graph()).unwrap();
        let mut expected: Vec<usize> = [vec![1], vec![1, 3], vec![1, 4], vec![2], vec![2, 5]]
            .iter()
            .map(|c| a.state_of_clique(c).unwrap())
            .collect();
        expected.sort_unstable();
        assert_eq!(a.end_states_for_letter(0).unwrap(), expected);

        let t2 = builtin_tree("mckay-t2").unwrap();
        let a2 = GeodesicAutomaton::build(t2.graph()).unwrap();
        let mut expected2: Vec<usize> = [vec![1], vec![1, 3], vec![2], vec![2, 4], vec![2, 5]]
            .iter()
            .map(|c| a2.state_of_clique(c).unwrap())
            .collect();
        expected2.sort_unstable();
        assert_eq!(a2.end_states_for_letter(0).unwrap(), expected2);
    }

    #[test]
    fn json_export_lists_every_arrow() {
        let a = GeodesicAutomaton::build(&SimpleGraph::path(3)).unwrap();
        let j = a.to_json();
        assert_eq!(j.states.len(), 6);
        assert_eq!(j.transitions.len(), a.transition_count());
        assert!(a.to_dot().contains("q0 -> q1"));
    }
}
