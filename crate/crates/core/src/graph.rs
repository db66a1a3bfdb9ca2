//! Simple undirected graphs, the multigraphs used by the series-parallel
//! reducer, and the short-form graph6 codec.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order the short graph6 form can carry.
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and symmetric; there are no loops and no
/// parallel edges. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    }

    /// `K_{a,b}` with the `a` side on vertices `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a)
            .flat_map(|i| (a..a + b).map(move |j| (i, j)))
            .collect();
        Graph::from_edges(a + b, &edges).expect("valid edges")
    }

    /// Triangle `0,1,2` with pendant vertex `3` attached to `2`.
    pub fn paw() -> Self {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid edges")
    }

    /// Triangular prism: triangles `0,1,2` and `3,4,5` joined by `i -- i+3`.
    pub fn prism() -> Self {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .expect("valid edges")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("valid edges")
    }

    /// Heawood graph as the LCF notation `[5,-5]^7` on a 14-cycle.
    pub fn heawood() -> Self {
        let mut edges: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
        for i in 0..14 {
            let jump: isize = if i % 2 == 0 { 5 } else { -5 };
            let j = (i as isize + jump).rem_euclid(14) as usize;
            edges.push((i, j));
        }
        Graph::from_edges(14, &edges).expect("valid edges")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges().into_iter().collect())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// Components of `G - removed`, named by original vertex ids.
    pub fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Cut vertices by the DFS low-point method (iterative).
    pub fn cut_vertices(&self) -> BTreeSet<usize> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = BTreeSet::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(top) = stack.last_mut() {
                let (u, parent, idx) = *top;
                if idx < self.adj[u].len() {
                    top.2 += 1;
                    let w = self.adj[u][idx];
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            out.insert(parent);
                        }
                    }
                }
            }
            if root_children > 1 {
                out.insert(root);
            }
        }
        out
    }

    /// `G - removed` relabeled contiguously.
    pub fn induced_delete(&self, removed: &[usize]) -> Result<Relabeled> {
        let n = self.order();
        let mut keep = vec![true; n];
        for &r in removed {
            if r >= n {
                return Err(Error::VertexOutOfRange { vertex: r, order: n });
            }
            keep[r] = false;
        }
        let kept: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        self.induced(&kept)
    }

    /// `G[vertices]` relabeled in the order of `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Relabeled> {
        let n = self.order();
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if new_id[v] != usize::MAX {
                return Err(Error::DuplicateVertex(v));
            }
            new_id[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut row: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX).map(|&w| new_id[w])
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        Ok(Relabeled {
            graph: Graph { adj },
            original: vertices.to_vec(),
        })
    }

    /// Spanning subgraph on the same vertex set with the given edges.
    pub fn spanning(&self, edges: &EdgeSet) -> Result<Graph> {
        for &(u, v) in &edges.0 {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        let list: Vec<_> = edges.0.iter().copied().collect();
        Graph::from_edges(self.order(), &list)
    }

    /// Two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.order(), &edges).expect("permutation keeps edges valid")
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        let mut m = vec![vec![0; n]; n];
        for (u, v) in self.edges() {
            m[u][v] = 1;
            m[v][u] = 1;
        }
        m
    }

    /// Short-form graph6 encoding.
    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Result of a vertex deletion: the relabeled graph plus the map back to the
/// host's vertex ids (`original[new] = old`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Relabeled {
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.original.iter().position(|&v| v == old)
    }
}

/// Set of unordered vertex pairs, normalized as `(min, max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSet(pub BTreeSet<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        self.0.insert((u.min(v), u.max(v)))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.0.iter()
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        for (u, v) in iter {
            s.insert(u, v);
        }
        s
    }
}

/// Undirected multigraph with loops; only the series-parallel reducer uses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    alive: Vec<bool>,
    // multiplicity of each unordered pair (u <= v); (v, v) holds loops
    mult: BTreeMap<(usize, usize), usize>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { alive: vec![true; n], mult: BTreeMap::new() }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut m = Multigraph::new(g.order());
        for (u, v) in g.edges() {
            m.add_edge(u, v);
        }
        m
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(self.alive[u] && self.alive[v], "edge on a deleted vertex");
        *self.mult.entry((u.min(v), u.max(v))).or_insert(0) += 1;
    }

    /// Removes one copy of the edge; returns false if absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        match self.mult.get_mut(&key) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.mult.remove(&key);
                true
            }
            None => false,
        }
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.mult.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Sets the multiplicity of `{u, v}` (0 removes the pair).
    pub fn set_multiplicity(&mut self, u: usize, v: usize, count: usize) {
        let key = (u.min(v), u.max(v));
        if count == 0 {
            self.mult.remove(&key);
        } else {
            self.mult.insert(key, count);
        }
    }

    /// Deletes a vertex and every incident edge.
    pub fn delete_vertex(&mut self, v: usize) {
        self.alive[v] = false;
        self.mult.retain(|&(a, b), _| a != v && b != v);
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn edge_count(&self) -> usize {
        self.mult.values().sum()
    }

    /// Edge-end count; a loop contributes two.
    pub fn degree(&self, v: usize) -> usize {
        self.mult
            .iter()
            .map(|(&(a, b), &c)| match (a == v, b == v) {
                (true, true) => 2 * c,
                (true, false) | (false, true) => c,
                _ => 0,
            })
            .sum()
    }

    /// Distinct neighbors other than `v` itself, with multiplicities.
    pub fn incident(&self, v: usize) -> Vec<(usize, usize)> {
        self.mult
            .iter()
            .filter_map(|(&(a, b), &c)| {
                if a == v && b != v {
                    Some((b, c))
                } else if b == v && a != v {
                    Some((a, c))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Edge multiset as sorted `(u, v, multiplicity)` triples.
    pub fn edge_multiset(&self) -> Vec<(usize, usize, usize)> {
        self.mult.iter().map(|(&(a, b), &c)| (a, b, c)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }
}

/// Parses one short-form graph6 line (no `>>graph6<<` header).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |offset: usize, reason: &'static str| Error::Graph6 { offset, reason };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad(i, "byte outside the printable graph6 range 63..=126"));
        }
    }
    let first = *bytes.first().ok_or_else(|| bad(0, "empty input"))?;
    if first == 126 {
        return Err(bad(0, "long-form order (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != nbytes {
        let offset = 1 + body.len().min(nbytes);
        return Err(bad(offset, "length does not match the encoded order"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad(nbytes, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Short-form graph6 encoding. Panics for `n > 62`.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= GRAPH6_MAX_ORDER, "graph6 short form holds at most 62 vertices");
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
