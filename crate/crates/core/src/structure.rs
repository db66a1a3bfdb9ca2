//! Combinatorial predicates: unfriendly partitions, twins, `K_{2,3}`
//! subgraphs, `K4`-minor-freeness and longest cycles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Multigraph};

/// Two-block vertex partition `{A, B}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub cut_size: usize,
}

impl Partition {
    /// `in_a[v]` says whether `v` belongs to `A`.
    pub fn from_sides(g: &Graph, in_a: &[bool]) -> Self {
        let a = (0..g.order()).filter(|&v| in_a[v]).collect();
        let b = (0..g.order()).filter(|&v| !in_a[v]).collect();
        let cut_size = g.edges().iter().filter(|&&(u, v)| in_a[u] != in_a[v]).count();
        Partition { a, b, cut_size }
    }

    pub fn sides(&self, n: usize) -> Vec<bool> {
        let mut in_a = vec![false; n];
        for &v in &self.a {
            in_a[v] = true;
        }
        in_a
    }

    pub fn is_balanced(&self) -> bool {
        self.a.len() == self.b.len()
    }

    /// Swaps the names of the two blocks.
    pub fn swapped(&self) -> Self {
        Partition { a: self.b.clone(), b: self.a.clone(), cut_size: self.cut_size }
    }

    /// Every vertex has at least as many neighbors across as on its own side.
    pub fn is_unfriendly(&self, g: &Graph) -> bool {
        let in_a = self.sides(g.order());
        (0..g.order()).all(|v| !violates(g, &in_a, v))
    }

    /// Valid partition of `V(g)` whose cut size matches a recount.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        let mut seen = vec![0u8; g.order()];
        for &v in self.a.iter().chain(&self.b) {
            if v >= g.order() {
                return false;
            }
            seen[v] += 1;
        }
        seen.iter().all(|&c| c == 1)
            && Partition::from_sides(g, &self.sides(g.order())).cut_size == self.cut_size
    }

    /// `E(A, B)`.
    pub fn cut_edges(&self, g: &Graph) -> EdgeSet {
        let in_a = self.sides(g.order());
        g.edges().into_iter().filter(|&(u, v)| in_a[u] != in_a[v]).collect()
    }
}

fn same_and_cross(g: &Graph, in_a: &[bool], v: usize) -> (usize, usize) {
    let same = g.neighbors(v).iter().filter(|&&w| in_a[w] == in_a[v]).count();
    (same, g.degree(v) - same)
}

fn violates(g: &Graph, in_a: &[bool], v: usize) -> bool {
    let (same, cross) = same_and_cross(g, in_a, v);
    same > cross
}

/// Unfriendly partition by flip local search from all-in-`B`, always moving
/// the smallest violating vertex. Each flip raises the cut size, so at most
/// `|E|` flips happen.
pub fn unfriendly_partition(g: &Graph) -> Partition {
    flip_search(g, vec![false; g.order()]).0
}

/// Flip search from an arbitrary start; also returns the number of flips.
pub fn flip_search(g: &Graph, mut in_a: Vec<bool>) -> (Partition, usize) {
    let mut flips = 0;
    while let Some(v) = (0..g.order()).find(|&v| violates(g, &in_a, v)) {
        in_a[v] = !in_a[v];
        flips += 1;
    }
    (Partition::from_sides(g, &in_a), flips)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "partition")]
pub enum UnbalancedSearch {
    Found(Partition),
    /// Exhaustive search ruled every candidate out.
    ProvenNone,
    /// Heuristic search gave up; nonexistence is not established.
    NotFound,
}

impl UnbalancedSearch {
    pub fn partition(&self) -> Option<&Partition> {
        match self {
            UnbalancedSearch::Found(p) => Some(p),
            _ => None,
        }
    }
}

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 20;

/// Searches for an unfriendly partition with `|A| ≠ |B|`.
///
/// Up to `exhaustive_limit` vertices every unordered partition is tried.
/// `allow_trivial` admits `{∅, V}` as a candidate.
pub fn find_unbalanced_unfriendly(
    g: &Graph,
    exhaustive_limit: usize,
    allow_trivial: bool,
) -> UnbalancedSearch {
    let n = g.order();
    if n == 0 {
        return UnbalancedSearch::ProvenNone;
    }
    if n <= exhaustive_limit {
        // vertex n-1 is pinned to B; mask selects A among 0..n-1
        let mut in_a = vec![false; n];
        for mask in 0u64..(1u64 << (n - 1)) {
            if mask == 0 && !allow_trivial {
                continue;
            }
            let size_a = mask.count_ones() as usize;
            if 2 * size_a == n {
                continue;
            }
            for (v, slot) in in_a.iter_mut().enumerate().take(n - 1) {
                *slot = mask >> v & 1 == 1;
            }
            if (0..n).all(|v| !violates(g, &in_a, v)) {
                return UnbalancedSearch::Found(Partition::from_sides(g, &in_a));
            }
        }
        return UnbalancedSearch::ProvenNone;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..256 {
        let start: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let (p, _) = flip_search(g, start);
        let trivial = p.a.is_empty() || p.b.is_empty();
        if !p.is_balanced() && (allow_trivial || !trivial) {
            return UnbalancedSearch::Found(p);
        }
    }
    UnbalancedSearch::NotFound
}

/// Unordered pairs `u < v` with `N(u) = N(v)`.
pub fn find_twins(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.neighbors(u) == g.neighbors(v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// A `K_{2,3}` subgraph: `x1, x2` adjacent to all of `y1, y2, y3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K23Embedding {
    pub x: [usize; 2],
    pub y: [usize; 3],
}

impl K23Embedding {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut all: Vec<usize> = self.x.iter().chain(&self.y).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len() == 5
            && all.iter().all(|&v| v < g.order())
            && self.x.iter().all(|&x| self.y.iter().all(|&y| g.has_edge(x, y)))
    }
}

/// First `K_{2,3}` in lexicographic order of `(x1, x2)`, taking the three
/// smallest common neighbors.
pub fn find_k23(g: &Graph) -> Option<K23Embedding> {
    let n = g.order();
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            let common: Vec<usize> = g
                .neighbors(x1)
                .iter()
                .filter(|w| g.neighbors(x2).binary_search(w).is_ok())
                .copied()
                .take(3)
                .collect();
            if common.len() == 3 {
                return Some(K23Embedding { x: [x1, x2], y: [common[0], common[1], common[2]] });
            }
        }
    }
    None
}

/// One rewrite of the series-parallel reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "rule")]
pub enum ReductionStep {
    DeleteLoop { vertex: usize },
    MergeParallel { u: usize, v: usize, multiplicity: usize },
    /// Deletes a vertex of degree 0 or 1.
    DeleteVertex { vertex: usize, degree: usize },
    /// Replaces `a - vertex - b` by the edge `a b` (a loop when `a == b`).
    Suppress { vertex: usize, a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// `(vertices, edges)` remaining after each step.
    pub sizes: Vec<(usize, usize)>,
    pub final_vertices: usize,
    pub final_edges: usize,
}

impl SpReductionTrace {
    /// Re-applies the steps to `g`, checking each rule's precondition and
    /// the recorded intermediate sizes.
    pub fn replay(&self, g: &Graph) -> Result<Multigraph> {
        let mut m = Multigraph::from_graph(g);
        if self.steps.len() != self.sizes.len() {
            return Err(Error::Replay("step and size lists differ in length".into()));
        }
        for (k, (step, &size)) in self.steps.iter().zip(&self.sizes).enumerate() {
            let fail = |why: &str| Error::Replay(format!("step {k} ({step:?}): {why}"));
            match *step {
                ReductionStep::DeleteLoop { vertex } => {
                    if !m.remove_edge(vertex, vertex) {
                        return Err(fail("no loop"));
                    }
                }
                ReductionStep::MergeParallel { u, v, multiplicity } => {
                    if u == v || m.multiplicity(u, v) != multiplicity || multiplicity < 2 {
                        return Err(fail("multiplicity mismatch"));
                    }
                    m.set_multiplicity(u, v, 1);
                }
                ReductionStep::DeleteVertex { vertex, degree } => {
                    if !m.is_alive(vertex) || m.degree(vertex) != degree || degree > 1 {
                        return Err(fail("vertex absent or degree above 1"));
                    }
                    m.delete_vertex(vertex);
                }
                ReductionStep::Suppress { vertex, a, b } => {
                    if !m.is_alive(vertex) || m.degree(vertex) != 2 || m.multiplicity(vertex, vertex) != 0 {
                        return Err(fail("vertex is not a loopless degree-2 vertex"));
                    }
                    let mut ends: Vec<usize> = m
                        .incident(vertex)
                        .into_iter()
                        .flat_map(|(w, c)| std::iter::repeat_n(w, c))
                        .collect();
                    ends.sort_unstable();
                    if ends != [a.min(b), a.max(b)] {
                        return Err(fail("endpoints differ"));
                    }
                    m.delete_vertex(vertex);
                    m.add_edge(a, b);
                }
            }
            if (m.vertex_count(), m.edge_count()) != size {
                return Err(fail("intermediate size differs"));
            }
        }
        if (m.vertex_count(), m.edge_count()) != (self.final_vertices, self.final_edges) {
            return Err(Error::Replay("final size differs".into()));
        }
        Ok(m)
    }
}

/// Deterministic rule schedules for the reducer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOrder {
    /// Rule priority loop, parallel, degree ≤ 1, degree 2; lowest vertex first.
    Ascending,
    /// Highest vertex first, trying suppression before cleanup rules.
    Descending,
}

/// Series-parallel test: the graph has no `K4` minor iff the reduction
/// empties it.
pub fn is_k4_minor_free(g: &Graph) -> (bool, SpReductionTrace) {
    is_k4_minor_free_with(g, ReductionOrder::Ascending)
}

pub fn is_k4_minor_free_with(g: &Graph, order: ReductionOrder) -> (bool, SpReductionTrace) {
    let mut m = Multigraph::from_graph(g);
    let mut steps = Vec::new();
    let mut sizes = Vec::new();
    while let Some(step) = next_step(&m, order) {
        apply(&mut m, &step);
        sizes.push((m.vertex_count(), m.edge_count()));
        steps.push(step);
    }
    let trace = SpReductionTrace {
        steps,
        sizes,
        final_vertices: m.vertex_count(),
        final_edges: m.edge_count(),
    };
    (m.is_empty(), trace)
}

fn step_for_vertex(m: &Multigraph, v: usize, suppress_first: bool) -> Option<ReductionStep> {
    if m.multiplicity(v, v) > 0 {
        return Some(ReductionStep::DeleteLoop { vertex: v });
    }
    let deg = m.degree(v);
    let suppress = (deg == 2).then(|| {
        let ends: Vec<usize> = m
            .incident(v)
            .into_iter()
            .flat_map(|(w, c)| std::iter::repeat_n(w, c))
            .collect();
        ReductionStep::Suppress { vertex: v, a: ends[0], b: ends[1] }
    });
    if suppress_first && suppress.is_some() {
        return suppress;
    }
    if deg <= 1 {
        return Some(ReductionStep::DeleteVertex { vertex: v, degree: deg });
    }
    if let Some((w, c)) = m.incident(v).into_iter().find(|&(_, c)| c > 1) {
        return Some(ReductionStep::MergeParallel { u: v.min(w), v: v.max(w), multiplicity: c });
    }
    suppress
}

fn next_step(m: &Multigraph, order: ReductionOrder) -> Option<ReductionStep> {
    match order {
        ReductionOrder::Ascending => {
            let edges = m.edge_multiset();
            if let Some(&(v, _, _)) = edges.iter().find(|&&(a, b, _)| a == b) {
                return Some(ReductionStep::DeleteLoop { vertex: v });
            }
            if let Some(&(u, v, c)) = edges.iter().find(|&&(_, _, c)| c > 1) {
                return Some(ReductionStep::MergeParallel { u, v, multiplicity: c });
            }
            if let Some(v) = m.vertices().find(|&v| m.degree(v) <= 1) {
                return Some(ReductionStep::DeleteVertex { vertex: v, degree: m.degree(v) });
            }
            m.vertices()
                .find(|&v| m.degree(v) == 2)
                .and_then(|v| step_for_vertex(m, v, true))
        }
        ReductionOrder::Descending => {
            let verts: Vec<usize> = m.vertices().collect();
            verts.into_iter().rev().find_map(|v| step_for_vertex(m, v, true))
        }
    }
}

fn apply(m: &mut Multigraph, step: &ReductionStep) {
    match *step {
        ReductionStep::DeleteLoop { vertex } => {
            m.remove_edge(vertex, vertex);
        }
        ReductionStep::MergeParallel { u, v, .. } => m.set_multiplicity(u, v, 1),
        ReductionStep::DeleteVertex { vertex, .. } => m.delete_vertex(vertex),
        ReductionStep::Suppress { vertex, a, b } => {
            m.delete_vertex(vertex);
            m.add_edge(a, b);
        }
    }
}

pub const BRUTE_FORCE_MINOR_LIMIT: usize = 12;

/// Direct `K4`-minor search: four disjoint connected branch sets that are
/// pairwise joined by an edge.
pub fn brute_force_has_k4_minor(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > BRUTE_FORCE_MINOR_LIMIT {
        return Err(Error::SizeLimit { what: "brute-force K4 minor search", n, limit: BRUTE_FORCE_MINOR_LIMIT });
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect();
    let mut label = vec![0u8; n];
    Ok(assign_branch_sets(&adj, &mut label, 0, 0))
}

// label 0 = unused, 1..=4 = branch set; labels are introduced in order so
// each unordered family of branch sets is visited once
fn assign_branch_sets(adj: &[u16], label: &mut [u8], pos: usize, used: u8) -> bool {
    let n = adj.len();
    if (n - pos) < (4 - used) as usize {
        return false;
    }
    if pos == n {
        return used == 4 && branch_sets_form_k4(adj, label);
    }
    for l in 0..=(used + 1).min(4) {
        label[pos] = l;
        if assign_branch_sets(adj, label, pos + 1, used.max(l)) {
            return true;
        }
    }
    label[pos] = 0;
    false
}

fn branch_sets_form_k4(adj: &[u16], label: &[u8]) -> bool {
    let mut sets = [0u16; 4];
    for (v, &l) in label.iter().enumerate() {
        if l > 0 {
            sets[(l - 1) as usize] |= 1 << v;
        }
    }
    let reach = |set: u16| -> u16 {
        let mut out = 0u16;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= adj[v];
        }
        out
    };
    for i in 0..4 {
        if !connected_mask(adj, sets[i]) {
            return false;
        }
        let r = reach(sets[i]);
        if (i + 1..4).any(|j| r & sets[j] == 0) {
            return false;
        }
    }
    true
}

fn connected_mask(adj: &[u16], set: u16) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = 1u16 << set.trailing_zeros();
    loop {
        let mut grow = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow |= adj[v] & set;
        }
        if grow == seen {
            return seen == set;
        }
        seen = grow;
    }
}

pub const LONGEST_CYCLE_LIMIT: usize = 20;

/// A longest cycle as a vertex sequence, or `None` for a forest.
///
/// Cycles are written in canonical rotation (smallest vertex first, then the
/// smaller of its two cycle neighbors); ties are broken lexicographically.
pub fn longest_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n > LONGEST_CYCLE_LIMIT {
        return Err(Error::SizeLimit { what: "longest cycle search", n, limit: LONGEST_CYCLE_LIMIT });
    }
    let mut best: Option<Vec<usize>> = None;
    let mut on_path = vec![false; n];
    for s in 0..n {
        // a cycle through s with every other vertex > s
        let mut path = vec![s];
        on_path[s] = true;
        extend_cycle(g, s, &mut path, &mut on_path, &mut best);
        on_path[s] = false;
    }
    Ok(best)
}

fn extend_cycle(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    best: &mut Option<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            let better = match best {
                None => true,
                Some(b) => path.len() > b.len() || (path.len() == b.len() && path[..] < b[..]),
            };
            if better {
                *best = Some(path.clone());
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend_cycle(g, start, path, on_path, best);
            path.pop();
            on_path[w] = false;
        }
    }
}
