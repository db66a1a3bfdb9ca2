mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{from_bits, naive_canonical_code};
use hlspec_core::canon::canonical_key;
use hlspec_core::enumeration::{enumerate, Filter, GenSpec};
use hlspec_core::Graph;

/// Every labeled graph on `n` vertices, grouped by naive canonical code.
fn naive_classes(n: usize) -> BTreeMap<u64, Graph> {
    let pairs = n * (n - 1) / 2;
    let mut classes = BTreeMap::new();
    for mask in 0u32..(1 << pairs) {
        let bits: Vec<bool> = (0..pairs).map(|k| mask >> k & 1 == 1).collect();
        let g = from_bits(n, &bits);
        classes.entry(naive_canonical_code(&g)).or_insert(g);
    }
    classes
}

fn specs(n: usize) -> Vec<GenSpec> {
    let mut out = Vec::new();
    for connected in [false, true] {
        for max_degree in [2, 3, n.saturating_sub(1).max(1)] {
            let mut base = GenSpec::new(n).max_degree(max_degree);
            if connected {
                base = base.connected();
            }
            out.push(base.clone());
            for f in [Filter::K4MinorFree, Filter::Bipartite, Filter::ContainsK23, Filter::EvenOrder] {
                out.push(base.clone().filter(f));
            }
            out.push(base.filter(Filter::K4MinorFree).filter(Filter::Bipartite));
        }
    }
    out
}

#[test]
fn enumeration_matches_labeled_oracle() {
    for n in 1..=6 {
        let classes = naive_classes(n);
        for spec in specs(n) {
            let expected: BTreeSet<u64> =
                classes.iter().filter(|(_, g)| spec.accepts(g)).map(|(c, _)| *c).collect();
            let got: Vec<u64> = enumerate(&spec).unwrap().iter().map(naive_canonical_code).collect();
            let got_set: BTreeSet<u64> = got.iter().copied().collect();
            assert_eq!(got.len(), got_set.len(), "duplicate class for {spec}");
            assert_eq!(got_set, expected, "{spec}");
        }
    }
}

#[test]
fn emitted_graphs_are_distinct_sorted_and_filtered() {
    for spec in [
        GenSpec::new(8).connected().filter(Filter::K4MinorFree),
        GenSpec::new(9).connected(),
        GenSpec::new(8).filter(Filter::ContainsK23),
        GenSpec::new(10).connected().filter(Filter::Bipartite),
    ] {
        let gs = enumerate(&spec).unwrap();
        let keys: Vec<_> = gs.iter().map(canonical_key).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{spec}: keys not strictly increasing");
        for g in &gs {
            assert!(spec.accepts(g));
            assert_eq!(canonical_key(g).code, hlspec_core::canon::labeled_code(&hlspec_core::canon::masks(g)));
        }
        assert_eq!(enumerate(&spec).unwrap(), gs);
    }
}

#[test]
fn published_subcubic_counts() {
    // connected graphs with maximum degree at most 3
    let connected = [1, 1, 2, 6, 10, 29, 64, 194, 531, 1733];
    // all graphs with maximum degree at most 3
    let all = [1, 2, 4, 11, 23, 62, 150, 424, 1165, 3547];
    for n in 1..=10 {
        assert_eq!(enumerate(&GenSpec::new(n).connected()).unwrap().len(), connected[n - 1], "connected n={n}");
        assert_eq!(enumerate(&GenSpec::new(n)).unwrap().len(), all[n - 1], "all n={n}");
    }
}

#[test]
fn five_classes_on_four_vertices() {
    let gs = enumerate(&"n=4,connected,k4-minor-free".parse().unwrap()).unwrap();
    assert_eq!(gs.len(), 5);
    let mut a: Vec<_> = gs.iter().map(canonical_key).collect();
    let mut b: Vec<_> = hlspec_core::proofs::five_graphs_on_four().iter().map(canonical_key).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}
