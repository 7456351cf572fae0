//! Ground truth for small cases, computed without the automaton.
//!
//! A word over the vertices is a geodesic exactly when no letter can be
//! cancelled against a later copy of itself: there are no positions `i < j`
//! with `w_i = w_j = s` and every letter strictly between them commuting with
//! `s` (adjacent to it in the defining graph).

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Default cap on the number of words enumerated.
pub const DEFAULT_BUDGET: u128 = 100_000_000;
/// Cap on the commutation-class exploration of a single word.
pub const FRONTIER_CAP: usize = 1_000_000;

/// Budget taken from `GEOGROW_BUDGET` when set and valid.
pub fn budget_from_env() -> u128 {
    std::env::var("GEOGROW_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn check_word(g: &SimpleGraph, w: &[usize]) -> Result<()> {
    match w.iter().find(|&&s| s >= g.vertex_count()) {
        Some(&s) => Err(Error::VertexOutOfRange { vertex: s, n: g.vertex_count() }),
        None => Ok(()),
    }
}

/// Pair-cancellation test for geodesics.
pub fn is_geodesic(g: &SimpleGraph, w: &[usize]) -> Result<bool> {
    check_word(g, w)?;
    Ok(is_geodesic_unchecked(g, w))
}

fn is_geodesic_unchecked(g: &SimpleGraph, w: &[usize]) -> bool {
    for j in 1..w.len() {
        let s = w[j];
        for k in (0..j).rev() {
            if w[k] == s {
                return false;
            }
            if !g.has_edge(s, w[k]) {
                break;
            }
        }
    }
    true
}

/// Position of the first adjacent pair `ss`, if any.
fn cancellable(w: &[usize]) -> Option<usize> {
    w.windows(2).position(|p| p[0] == p[1])
}

/// Shortlex-least representative (numeric letter order) of the group element
/// spelled by `w`.
///
/// Explores the commutation class of the word; whenever an adjacent pair
/// `ss` shows up it is cancelled and the exploration restarts from the shorter
/// word. Once a class has no cancellable member its words are reduced, and
/// the least of them is returned.
pub fn shortlex_reduce(g: &SimpleGraph, w: &[usize]) -> Result<Vec<usize>> {
    check_word(g, w)?;
    let mut word = w.to_vec();
    'restart: loop {
        if let Some(i) = cancellable(&word) {
            word.drain(i..i + 2);
            continue;
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.clone());
        queue.push_back(word.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..cur.len().saturating_sub(1) {
                if !g.has_edge(cur[i], cur[i + 1]) {
                    continue;
                }
                let mut next = cur.clone();
                next.swap(i, i + 1);
                if let Some(k) = cancellable(&next) {
                    next.drain(k..k + 2);
                    word = next;
                    continue 'restart;
                }
                if seen.insert(next.clone()) {
                    if seen.len() > FRONTIER_CAP {
                        return Err(Error::BudgetExceeded { needed: seen.len() as u128, budget: FRONTIER_CAP as u128 });
                    }
                    queue.push_back(next);
                }
            }
        }
        return Ok(seen.into_iter().min().expect("class contains the word itself"));
    }
}

/// Exhaustive counts by length, shared with automaton-derived tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub schema: String,
    /// Distinguished letter for the start/end columns.
    pub letter: usize,
    pub geodesics: Vec<u64>,
    pub start: Vec<u64>,
    pub end: Vec<u64>,
    pub both: Vec<u64>,
    pub elements: Vec<u64>,
}

pub const COUNT_TABLE_SCHEMA: &str = "geogrow.counts/v1";

/// Enumerate every word of length `<= max_len` and classify it.
///
/// Geodesic columns use [`is_geodesic`]; element counts are the numbers of
/// distinct normal forms from [`shortlex_reduce`] of each length.
pub fn brute_force_counts(g: &SimpleGraph, max_len: usize, budget: u128) -> Result<CountTable> {
    let n = g.vertex_count();
    let needed: u128 = (0..=max_len as u32).map(|k| (n as u128).saturating_pow(k)).sum();
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let letter = 0;
    let mut table = CountTable {
        schema: COUNT_TABLE_SCHEMA.into(),
        letter,
        geodesics: vec![0; max_len + 1],
        start: vec![0; max_len + 1],
        end: vec![0; max_len + 1],
        both: vec![0; max_len + 1],
        elements: vec![0; max_len + 1],
    };
    let mut normal_forms: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); max_len + 1];
    let mut failure = None;
    for len in 0..=max_len {
        for_each_word(n, len, |word| {
            if failure.is_some() {
                return;
            }
            if is_geodesic_unchecked(g, word) {
                table.geodesics[len] += 1;
                let starts = word.first() == Some(&letter);
                let ends = word.last() == Some(&letter);
                table.start[len] += starts as u64;
                table.end[len] += ends as u64;
                table.both[len] += (starts && ends) as u64;
            }
            match shortlex_reduce(g, word) {
                Ok(nf) => {
                    normal_forms[nf.len()].insert(nf);
                }
                Err(e) => failure = Some(e),
            }
        });
    }
    if let Some(e) = failure {
        return Err(e);
    }
    table.elements = normal_forms.iter().map(|s| s.len() as u64).collect();
    Ok(table)
}

/// Visit every word of length exactly `len` over `n` letters.
pub fn for_each_word(n: usize, len: usize, mut f: impl FnMut(&[usize])) {
    if len == 0 {
        f(&[]);
        return;
    }
    if n == 0 {
        return;
    }
    let mut word = vec![0usize; len];
    loop {
        f(&word);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            word[pos] += 1;
            if word[pos] < n {
                break;
            }
            word[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geodesic_examples() {
        let k2 = SimpleGraph::complete(2);
        assert!(!is_geodesic(&k2, &[0, 1, 0]).unwrap());
        let p3 = SimpleGraph::path(3);
        assert!(is_geodesic(&p3, &[0, 2, 0]).unwrap());
        assert!(!is_geodesic(&p3, &[0, 1, 0]).unwrap());
        let pair = SimpleGraph::empty(2);
        assert!(is_geodesic(&pair, &[0, 1, 0, 1]).unwrap());
        assert!(is_geodesic(&pair, &[0, 2]).is_err());
    }

    #[test]
    fn shortlex_examples() {
        let k2 = SimpleGraph::complete(2);
        assert_eq!(shortlex_reduce(&k2, &[1, 0]).unwrap(), vec![0, 1]);
        assert_eq!(shortlex_reduce(&k2, &[0, 0]).unwrap(), Vec::<usize>::new());
        assert_eq!(shortlex_reduce(&k2, &[0, 1, 0]).unwrap(), vec![1]);
        let p3 = SimpleGraph::path(3);
        assert_eq!(shortlex_reduce(&p3, &[2, 0]).unwrap(), vec![2, 0]);
        assert_eq!(shortlex_reduce(&p3, &[0, 2, 0]).unwrap(), vec![0, 2, 0]);
        assert_eq!(shortlex_reduce(&p3, &[1, 0, 1]).unwrap(), vec![0]);
        assert_eq!(shortlex_reduce(&p3, &[1, 0, 2, 1]).unwrap(), vec![0, 2]);
        assert_eq!(shortlex_reduce(&p3, &[2, 1, 0]).unwrap(), vec![1, 2, 0]);
    }

    #[test]
    fn brute_force_tables() {
        let k2 = brute_force_counts(&SimpleGraph::complete(2), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(k2.geodesics, vec![1, 2, 2, 0]);
        assert_eq!(k2.elements, vec![1, 2, 1, 0]);
        let pair = brute_force_counts(&SimpleGraph::empty(2), 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(pair.geodesics, vec![1, 2, 2, 2, 2]);
        assert_eq!(pair.start, vec![0, 1, 1, 1, 1]);
        assert_eq!(pair.both, vec![0, 1, 0, 1, 0]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = SimpleGraph::path(10);
        assert!(matches!(brute_force_counts(&g, 9, 1000), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn word_visitor_counts() {
        let mut count = 0;
        for_each_word(3, 4, |_| count += 1);
        assert_eq!(count, 81);
        let mut empty = 0;
        for_each_word(3, 0, |w| empty += w.is_empty() as usize);
        assert_eq!(empty, 1);
    }
}
