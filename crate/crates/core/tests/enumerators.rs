mod common;

use cise::oracle::{brute_force_cise, count_identities};
use cise::topdown::TopDownState;
use cise::{Algorithm, Backend, EnumOptions, Graph};
use common::*;
use proptest::prelude::*;

/// A random spanning tree plus random extra edges: always connected.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        (parents, proptest::collection::vec(any::<bool>(), n * (n - 1) / 2), 0.0..1.0f64).prop_map(
            move |(parents, extra, density)| {
                let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
                let mut idx = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if extra[idx] && (idx as f64 / extra.len() as f64) < density {
                            edges.push((a, b));
                        }
                        idx += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn every_enumerator_matches_oracle(g in connected_graph(10)) {
        for k in 1..=g.n() {
            let expected = brute_force_cise(&g, k).unwrap().sets;
            for algorithm in Algorithm::ENUMERATORS {
                let got = canonical(collect(&g, algorithm, k).sets);
                prop_assert_eq!(&got, &expected, "{} k={}", algorithm, k);
            }
        }
    }

    #[test]
    fn backends_agree_in_order(g in connected_graph(10)) {
        for k in 1..=g.n() {
            let list = collect_with(&g, Algorithm::TopDown, k, Backend::List, &EnumOptions::default());
            let bits = collect_with(&g, Algorithm::TopDown, k, Backend::BitMatrix, &EnumOptions::default());
            prop_assert_eq!(list.sets, bits.sets);
            prop_assert_eq!(list.report.nodes_visited, bits.report.nodes_visited);
        }
    }

    #[test]
    fn checked_runs_are_clean(g in connected_graph(9)) {
        for k in 1..=g.n() {
            for algorithm in Algorithm::ENUMERATORS {
                for backend in [Backend::List, Backend::BitMatrix] {
                    let r = count_with(&g, algorithm, k, backend, &EnumOptions::checked());
                    let d = r.diagnostics;
                    prop_assert_eq!(d.restore_violations, 0, "{} k={}", algorithm, k);
                    prop_assert_eq!(d.invariant_violations, 0, "{} k={}", algorithm, k);
                    prop_assert!(d.max_added_per_level <= 1);
                }
            }
        }
    }

    #[test]
    fn pruning_changes_work_not_output(g in connected_graph(9)) {
        let variants = [
            EnumOptions { has_int_leaf: false, ..EnumOptions::default() },
            EnumOptions { k_component: false, ..EnumOptions::default() },
            EnumOptions { look_ahead: false, ..EnumOptions::default() },
        ];
        for k in 1..=g.n() {
            for algorithm in Algorithm::ENUMERATORS {
                let on = collect_with(&g, algorithm, k, Backend::List, &EnumOptions::default());
                for off in &variants {
                    let r = collect_with(&g, algorithm, k, Backend::List, off);
                    prop_assert_eq!(canonical(r.sets), canonical(on.sets.clone()));
                    prop_assert!(on.report.nodes_visited <= r.report.nodes_visited);
                }
            }
        }
    }

    #[test]
    fn counts_stay_below_binomial(g in connected_graph(12)) {
        for k in 1..=g.n() {
            let c = count_with(&g, Algorithm::VSimple, k, Backend::List, &EnumOptions::default()).count;
            prop_assert!(u128::from(c) <= binomial(g.n(), k));
        }
    }

    #[test]
    fn topdown_node_count_envelope(g in connected_graph(11)) {
        let n = g.n();
        for k in 1..=n {
            let r = count_with(&g, Algorithm::TopDown, k, Backend::List, &EnumOptions::default());
            let bound = 2 * binomial(n, n - k) * (n - k + 1) as u128;
            prop_assert!(u128::from(r.nodes_visited) <= bound, "k={} nodes={} bound={}", k, r.nodes_visited, bound);
        }
    }

    #[test]
    fn identities_hold_for_every_enumerator(g in connected_graph(12)) {
        for algorithm in Algorithm::ENUMERATORS {
            count_identities(&g, |k| Ok(count_with(&g, algorithm, k, Backend::List, &EnumOptions::default()).count))
                .unwrap();
        }
    }

    #[test]
    fn oracle_agrees_with_unbounded_growth(g in connected_graph(11)) {
        let total: u64 = (1..=g.n()).map(|k| brute_force_cise(&g, k).unwrap().count).sum();
        prop_assert_eq!(total, all_connected_subsets(&g).len() as u64);
    }

    #[test]
    fn candidate_list_grows_by_at_most_one(g in connected_graph(12), picks in proptest::collection::vec(any::<prop::sample::Index>(), 12)) {
        let mut st = TopDownState::new(&g, 1, Backend::List).unwrap();
        for pick in picks {
            if st.candidates().is_empty() || st.view().alive_count() == 1 {
                break;
            }
            let before = st.candidates().len();
            let u = st.candidates()[pick.index(before)];
            let level = st.delete_candidate(u).unwrap();
            let added = usize::from(level.added.is_some());
            let removed = level.removed.len();
            prop_assert_eq!(st.candidates().len() + 1 + removed, before + added);
        }
    }
}

#[test]
fn diamond_topdown_trace() {
    let g = diamond();
    let c = collect(&g, Algorithm::TopDown, 2);
    assert_eq!(c.sets, vec![vec![2, 3], vec![1, 3], vec![1, 2], vec![0, 2], vec![0, 1]]);
    // without look-ahead the last set of each subtree comes from a leaf instead
    let no_look = collect_with(
        &g,
        Algorithm::TopDown,
        2,
        Backend::List,
        &EnumOptions { look_ahead: false, ..Default::default() },
    );
    assert_eq!(canonical(no_look.sets), canonical(c.sets));
    assert!(no_look.report.nodes_visited > c.report.nodes_visited);
}

#[test]
fn diamond_vsimple_four_triples() {
    let c = collect(&diamond(), Algorithm::VSimple, 3);
    assert_eq!(c.sets.len(), 4);
    assert_eq!(canonical(c.sets), brute_force_cise(&diamond(), 3).unwrap().sets);
}

#[test]
fn tree_all_but_one_counts_leaves() {
    // caterpillar: spine 0-1-2-3, leaves 4..7
    let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
    for algorithm in Algorithm::ENUMERATORS {
        assert_eq!(count_with(&g, algorithm, 7, Backend::List, &EnumOptions::default()).count, 4);
    }
}

#[test]
fn complete_graph_counts_are_binomials() {
    let n = 9;
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let g = Graph::from_edges(n, &edges).unwrap();
    for k in 1..=n {
        for algorithm in Algorithm::ENUMERATORS {
            let c = count_with(&g, algorithm, k, Backend::BitMatrix, &EnumOptions::default()).count;
            assert_eq!(u128::from(c), binomial(n, k), "{algorithm} k={k}");
        }
    }
}

#[test]
fn long_path_runs_deep() {
    // recursion depth n - k for top-down
    let n = 300;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    let g = Graph::from_edges(n, &edges).unwrap();
    let handle = std::thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(move || count_with(&g, Algorithm::TopDown, 3, Backend::List, &EnumOptions::default()).count)
        .unwrap();
    assert_eq!(handle.join().unwrap(), (n - 2) as u64);
}
