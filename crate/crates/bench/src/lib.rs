//! Fixed inputs shared by the benchmarks.

use hlspec_core::Graph;

/// Named graphs of increasing order.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("paw", Graph::paw()),
        ("prism", Graph::prism()),
        ("petersen", Graph::petersen()),
        ("heawood", Graph::heawood()),
        ("cycle-40", Graph::cycle(40)),
        ("ladder-30", ladder(30)),
    ]
}

/// `P_k × K_2`.
pub fn ladder(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, i + k));
        if i + 1 < k {
            edges.push((i, i + 1));
            edges.push((i + k, i + k + 1));
        }
    }
    Graph::from_edges(2 * k, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    #[test]
    fn ladder_is_cubic_inside() {
        let g = super::ladder(5);
        assert_eq!(g.size(), 13);
        assert!(g.is_subcubic() && g.is_bipartite());
    }
}
