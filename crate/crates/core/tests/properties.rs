mod common;

use geogrow::automaton::GeodesicAutomaton;
use geogrow::canon::{canonical_form, limb_occurrences};
use geogrow::graph::{builtin_tree, RootedTree, SimpleGraph};
use geogrow::growth::{automaton_count_table, GrowthContext, SeriesMethod};
use geogrow::oracle::{brute_force_counts, for_each_word, is_geodesic, DEFAULT_BUDGET};
use geogrow::spectral::{char_poly, char_poly_at, coalescence_charpoly_identity, IntMatrix};
use geogrow::trees::enumerate_trees;
use geogrow::RationalFunction;
use num_bigint::BigInt;
use proptest::prelude::*;

use common::{brute_canonical, limb_occurrences_brute, p, tree_count_by_dedup};

/// Tree from a Prüfer sequence over `0..n`.
fn prufer_tree(n: usize, seq: &[usize]) -> SimpleGraph {
    if n == 1 {
        return SimpleGraph::path(1);
    }
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    SimpleGraph::new(n, edges).unwrap()
}

fn tree(max: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max).prop_flat_map(|n| prop::collection::vec(0..n, n - 2).prop_map(move |s| prufer_tree(n, &s)))
}

fn rooted_tree(max: usize) -> impl Strategy<Value = RootedTree> {
    tree(max).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), 0..n).prop_map(|(g, r)| RootedTree::new(g, r).unwrap())
    })
}

fn with_permutation(max: usize) -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    tree(max).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Random bipartite graph: always triangle-free.
fn bipartite() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(a, b)| {
        prop::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
            let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).zip(bits).filter(|(_, on)| *on).map(|(e, _)| e);
            SimpleGraph::new(a + b, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_permutation(12)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(brute_canonical(&g), brute_canonical(&h));
    }

    #[test]
    fn canonical_form_separates_like_the_brute_form(a in tree(9), b in tree(9)) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, brute_canonical(&a) == brute_canonical(&b));
    }

    #[test]
    fn char_poly_ignores_labels((g, perm) in with_permutation(14)) {
        prop_assert_eq!(char_poly(&g), char_poly(&g.relabel(&perm)));
    }

    #[test]
    fn char_poly_matches_bareiss(g in tree(14)) {
        let a = IntMatrix::adjacency(&g);
        let phi = char_poly(&g);
        for x in [-3i64, -1, 0, 2, 5] {
            let x = BigInt::from(x);
            prop_assert_eq!(phi.eval(&x), char_poly_at(&a, &x));
        }
    }

    #[test]
    fn coalescence_identity_holds(tau in rooted_tree(8), s in rooted_tree(8)) {
        prop_assert!(coalescence_charpoly_identity(&tau, &s));
    }

    #[test]
    fn automaton_agrees_with_oracle_on_bipartite_graphs(g in bipartite()) {
        let a = GeodesicAutomaton::build(&g).unwrap();
        let mut bad = 0;
        for len in 0..=5 {
            for_each_word(g.vertex_count(), len, |w| bad += (a.accepts(w) != is_geodesic(&g, w).unwrap()) as usize);
        }
        prop_assert_eq!(bad, 0);
    }

    #[test]
    fn methods_agree(g in tree(10)) {
        let det = GrowthContext::with_method(&g, SeriesMethod::Determinant).unwrap();
        let bm = GrowthContext::with_method(&g, SeriesMethod::BerlekampMassey).unwrap();
        let r = det.geodesic_series().unwrap();
        prop_assert_eq!(&r, &bm.geodesic_series().unwrap());
        prop_assert_eq!(r.taylor(60), det.geodesic_stream().take_terms(60));
        prop_assert_eq!(det.both0_series(0).unwrap(), bm.both0_series(0).unwrap());
    }

    #[test]
    fn count_tables_match_brute_force(g in tree(6)) {
        let brute = brute_force_counts(&g, 5, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(automaton_count_table(&g, 0, 5).unwrap(), brute);
    }

    #[test]
    fn inclusion_bounds(g in tree(10)) {
        let t = automaton_count_table(&g, 0, 12).unwrap();
        for r in 0..=12 {
            prop_assert!(t.both[r] <= t.start[r]);
            prop_assert!(t.start[r] <= t.geodesics[r]);
            prop_assert!(t.elements[r] <= t.geodesics[r]);
            prop_assert_eq!(t.start[r], t.end[r]);
        }
    }

    #[test]
    fn geodesics_are_closed_under_prefix_reversal_and_exchange(
        g in tree(7),
        raw in prop::collection::vec(0usize..7, 0..9),
        i in 0usize..8,
    ) {
        let n = g.vertex_count();
        let w: Vec<usize> = raw.iter().map(|x| x % n).collect();
        if is_geodesic(&g, &w).unwrap() {
            for k in 0..=w.len() {
                prop_assert!(is_geodesic(&g, &w[..k]).unwrap());
            }
            let rev: Vec<usize> = w.iter().rev().copied().collect();
            prop_assert!(is_geodesic(&g, &rev).unwrap());
            if i + 1 < w.len() && g.has_edge(w[i], w[i + 1]) {
                let mut x = w.clone();
                x.swap(i, i + 1);
                prop_assert!(is_geodesic(&g, &x).unwrap());
            }
        }
    }

    #[test]
    fn limb_occurrences_match_subset_enumeration(t in tree(9), limb in rooted_tree(4)) {
        let fast = limb_occurrences(&t, &limb).unwrap();
        let slow = limb_occurrences_brute(&t, limb.graph(), limb.root());
        prop_assert_eq!(fast, slow.into());
    }

    #[test]
    fn rational_json_round_trips(num in prop::collection::vec(-50i64..50, 0..6), den in prop::collection::vec(-50i64..50, 0..6)) {
        let mut d = vec![1];
        d.extend(den);
        let r = RationalFunction::new(p(&num), p(&d)).unwrap();
        let back: RationalFunction = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn enumeration_matches_dedup_oracle() {
    for n in 1..=10 {
        let trees: Vec<SimpleGraph> = enumerate_trees(n).unwrap().collect();
        assert_eq!(trees.len(), tree_count_by_dedup(n), "n = {n}");
        let mut forms: Vec<String> = trees.iter().map(brute_canonical).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), trees.len(), "duplicates at n = {n}");
    }
}

#[test]
fn four_cycle_matches_oracle() {
    let c4 = SimpleGraph::cycle(4);
    let a = GeodesicAutomaton::build(&c4).unwrap();
    for len in 0..=6 {
        for_each_word(4, len, |w| assert_eq!(a.accepts(w), is_geodesic(&c4, w).unwrap(), "{w:?}"));
    }
    assert_eq!(automaton_count_table(&c4, 0, 6).unwrap(), brute_force_counts(&c4, 6, DEFAULT_BUDGET).unwrap());
}

#[test]
fn sigma_limb_counts_by_subset_enumeration() {
    let sigma = builtin_tree("godsil-sigma").unwrap();
    let p2 = RootedTree::path_from_end(2);
    let count = |name: &str| {
        let g = p2.coalesce(&builtin_tree(name).unwrap());
        limb_occurrences_brute(g.graph(), sigma.graph(), sigma.root())
    };
    assert!(count("godsil-s1") > count("godsil-s2"));
    assert_eq!((count("godsil-s1"), count("godsil-s2")), (1, 0));
}

#[test]
fn subdivided_godsil_pair_counts() {
    // Start-with-root counts of the 11-vertex pair, computed by exhaustive
    // enumeration up to length 6 and compared with the automaton.
    for name in ["godsil-s1-subdivided", "godsil-s2-subdivided"] {
        let g = builtin_tree(name).unwrap();
        let brute = brute_force_counts(g.graph(), 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(automaton_count_table(g.graph(), 0, 5).unwrap(), brute);
    }
}
