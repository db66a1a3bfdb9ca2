mod common;

use common::{any_graph, descartes_counts, has_k23_brute, subcubic_graph, Shift};
use hlspec_core::structure::*;
use hlspec_core::*;
use proptest::prelude::*;

fn longest_cycle_brute(g: &Graph) -> usize {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, best: &mut usize) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                *best = (*best).max(path.len());
            }
            if !path.contains(&w) {
                path.push(w);
                extend(g, start, path, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..g.order() {
        extend(g, s, &mut vec![s], &mut best);
    }
    best
}

fn all_unfriendly(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0u32..1 << n)
        .map(|mask| (0..n).map(|v| mask >> v & 1 == 1).collect::<Vec<bool>>())
        .filter(|side| {
            (0..n).all(|v| {
                let same = g.neighbors(v).iter().filter(|&&w| side[w] == side[v]).count();
                2 * same <= g.degree(v)
            })
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn reducer_agrees_with_brute_force(g in any_graph(10)) {
        let (free, _) = is_k4_minor_free(&g);
        prop_assert_eq!(free, !brute_force_has_k4_minor(&g).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn reduction_orders_agree_and_replay(g in any_graph(12)) {
        let (asc, trace) = is_k4_minor_free_with(&g, ReductionOrder::Ascending);
        let (desc, _) = is_k4_minor_free_with(&g, ReductionOrder::Descending);
        prop_assert_eq!(asc, desc);
        let end = trace.replay(&g).unwrap();
        prop_assert_eq!(end.vertex_count(), trace.final_vertices);
        prop_assert_eq!(end.edge_count(), trace.final_edges);
        prop_assert_eq!(end.is_empty(), asc);
        prop_assert_eq!(trace.steps.len(), trace.sizes.len());
    }

    #[test]
    fn k23_search_matches_subset_scan(g in any_graph(9)) {
        let found = find_k23(&g);
        prop_assert_eq!(found.is_some(), has_k23_brute(&g));
        if let Some(e) = found {
            prop_assert!(e.is_valid_in(&g));
        }
    }

    #[test]
    fn k23_search_on_subcubic(g in subcubic_graph(5, 9)) {
        prop_assert_eq!(find_k23(&g).is_some(), has_k23_brute(&g));
    }

    #[test]
    fn flip_search_is_unfriendly(g in subcubic_graph(1, 16), seed in any::<u64>()) {
        let start: Vec<bool> = (0..g.order()).map(|v| (seed >> (v % 64)) & 1 == 1).collect();
        let (p, flips) = flip_search(&g, start);
        prop_assert!(flips <= g.size());
        prop_assert!(p.is_unfriendly(&g));
        prop_assert!(p.is_consistent(&g));
        let side = p.sides(g.order());
        for v in 0..g.order() {
            let same = g.neighbors(v).iter().filter(|&&w| side[w] == side[v]).count();
            prop_assert!(same <= 1);
        }
    }

    #[test]
    fn unbalanced_search_is_sound_and_complete(g in subcubic_graph(1, 10)) {
        let n = g.order();
        let every = all_unfriendly(&g);
        for allow_trivial in [false, true] {
            let exists = every.iter().any(|side| {
                let a = side.iter().filter(|&&s| s).count();
                2 * a != n && (allow_trivial || (a != 0 && a != n))
            });
            match find_unbalanced_unfriendly(&g, DEFAULT_EXHAUSTIVE_LIMIT, allow_trivial) {
                UnbalancedSearch::Found(p) => {
                    prop_assert!(exists);
                    prop_assert!(p.is_unfriendly(&g) && !p.is_balanced());
                    prop_assert!(allow_trivial || (!p.a.is_empty() && !p.b.is_empty()));
                }
                UnbalancedSearch::ProvenNone => prop_assert!(!exists),
                UnbalancedSearch::NotFound => prop_assert!(false, "exhaustive range"),
            }
        }
    }

    #[test]
    fn twins_force_a_zero_eigenvalue(g in any_graph(10)) {
        let twins = find_twins(&g);
        for &(u, v) in &twins {
            prop_assert_eq!(g.neighbors(u), g.neighbors(v));
        }
        if !twins.is_empty() {
            prop_assert!(descartes_counts(&g, Shift(0, 0)).1 >= 1);
        }
    }

    #[test]
    fn cut_vertices_match_deletion(g in any_graph(12)) {
        let base = g.components().len();
        let cuts = g.cut_vertices();
        for v in 0..g.order() {
            let after = g.components_avoiding(&[v]).len();
            prop_assert_eq!(cuts.contains(&v), after > base, "vertex {}", v);
        }
    }

    #[test]
    fn longest_cycle_is_longest(g in any_graph(8)) {
        let brute = longest_cycle_brute(&g);
        match longest_cycle(&g).unwrap() {
            None => prop_assert_eq!(brute, 0),
            Some(c) => {
                prop_assert_eq!(c.len(), brute);
                for i in 0..c.len() {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in any_graph(40)) {
        let text = g.to_graph6();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}

#[test]
fn graph6_round_trip_on_all_small_classes() {
    use hlspec_core::enumeration::{enumerate, GenSpec};
    for n in 1..=8 {
        for g in enumerate(&GenSpec::new(n).max_degree(n - 1)).unwrap() {
            assert_eq!(parse_graph6(&g.to_graph6()).unwrap(), g);
        }
    }
}

#[test]
fn graph6_rejects_malformed() {
    for bad in ["", "A", "Bw\u{7f}", "~??", "A`", "@_"] {
        assert!(parse_graph6(bad).is_err(), "{bad:?}");
    }
}
