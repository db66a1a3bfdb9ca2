//! Canonical labeling for small graphs (n ≤ 16).
//!
//! The code of a labeled graph is its upper-triangle adjacency bitstring in
//! graph6 order, read as a big-endian integer. A connected graph's canonical
//! code is the minimum code over the leaves of an individualize-and-refine
//! search tree; refinement is ordinary color refinement seeded by degree. A
//! disconnected graph is canonicalized component by component, with
//! components placed in order of (size, code).

use crate::graph::Graph;

pub const CANON_MAX_ORDER: usize = 16;

/// Canonical key: order plus code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub n: usize,
    pub code: u128,
}

/// Code of the graph under its current labeling.
#[allow(clippy::needless_range_loop)]
pub fn labeled_code(adj: &[u16]) -> u128 {
    let n = adj.len();
    let npairs = n * n.saturating_sub(1) / 2;
    let mut code = 0u128;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if adj[i] >> j & 1 == 1 {
                code |= 1u128 << (npairs - 1 - k);
            }
            k += 1;
        }
    }
    code
}

pub fn decode(key: CanonKey) -> Graph {
    let n = key.n;
    let npairs = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key.code >> (npairs - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("decoded edges are valid")
}

pub fn masks(g: &Graph) -> Vec<u16> {
    assert!(g.order() <= CANON_MAX_ORDER, "canonical form supports at most 16 vertices");
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect()
}

/// Canonical key of `g`; equal keys iff isomorphic.
pub fn canonical_key(g: &Graph) -> CanonKey {
    canonical_key_masks(&masks(g))
}

/// Canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    decode(canonical_key(g))
}

pub fn canonical_key_masks(adj: &[u16]) -> CanonKey {
    let n = adj.len();
    let comps = mask_components(adj);
    if comps.len() <= 1 {
        return CanonKey { n, code: connected_code(adj) };
    }
    let mut parts: Vec<(usize, u128, Vec<u16>)> = comps
        .into_iter()
        .map(|verts| {
            let sub = induced_masks(adj, &verts);
            let code = connected_code(&sub);
            let canon = key_masks(CanonKey { n: verts.len(), code });
            (verts.len(), code, canon)
        })
        .collect();
    parts.sort_by_key(|a| (a.0, a.1));
    let mut whole = vec![0u16; n];
    let mut offset = 0;
    for (size, _, sub) in &parts {
        for (i, &row) in sub.iter().enumerate() {
            whole[offset + i] = row << offset;
        }
        offset += size;
    }
    CanonKey { n, code: labeled_code(&whole) }
}

fn key_masks(key: CanonKey) -> Vec<u16> {
    masks(&decode(key))
}

fn mask_components(adj: &[u16]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = 0u32;
    let mut out = Vec::new();
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut comp = 1u32 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] as u32 & !comp;
            comp |= new;
            frontier |= new;
        }
        seen |= comp;
        out.push((0..n).filter(|&v| comp >> v & 1 == 1).collect());
    }
    out
}

fn induced_masks(adj: &[u16], verts: &[usize]) -> Vec<u16> {
    verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| adj[v] >> w & 1 == 1)
                .fold(0u16, |m, (i, _)| m | 1 << i)
        })
        .collect()
}

fn connected_code(adj: &[u16]) -> u128 {
    let n = adj.len();
    if n <= 1 {
        return 0;
    }
    let mut colors: Vec<u8> = vec![0; n];
    let degs: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut distinct: Vec<u32> = degs.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for v in 0..n {
        colors[v] = distinct.binary_search(&degs[v]).unwrap() as u8;
    }
    let mut best = u128::MAX;
    search(adj, colors, &mut best);
    best
}

fn search(adj: &[u16], mut colors: Vec<u8>, best: &mut u128) {
    let n = adj.len();
    let ncolors = refine(adj, &mut colors);
    if ncolors == n {
        let mut relabeled = vec![0u16; n];
        for v in 0..n {
            let mut row = 0u16;
            let mut rest = adj[v];
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                row |= 1 << colors[w];
            }
            relabeled[colors[v] as usize] = row;
        }
        let code = labeled_code(&relabeled);
        if code < *best {
            *best = code;
        }
        return;
    }
    let mut counts = [0u8; 16];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let target = (0..n).find(|&c| counts[c] > 1).unwrap() as u8;
    for w in 0..n {
        if colors[w] != target {
            continue;
        }
        let child: Vec<u8> = colors
            .iter()
            .enumerate()
            .map(|(v, &c)| if c > target || (c == target && v != w) { c + 1 } else { c })
            .collect();
        search(adj, child, best);
    }
}

/// Color refinement to a stable coloring; returns the number of colors.
fn refine(adj: &[u16], colors: &mut [u8]) -> usize {
    let n = adj.len();
    let mut ncolors = count_distinct(colors);
    loop {
        // signature: own color, then sorted neighbor colors, 5 bits each
        let sigs: Vec<u128> = (0..n)
            .map(|v| {
                let mut nb: Vec<u8> = Vec::with_capacity(16);
                let mut rest = adj[v];
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    nb.push(colors[w]);
                }
                nb.sort_unstable();
                let mut sig = colors[v] as u128;
                for i in 0..16 {
                    sig = sig << 5 | nb.get(i).map_or(31, |&c| c as u128);
                }
                sig
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for v in 0..n {
            colors[v] = sorted.binary_search(&sigs[v]).unwrap() as u8;
        }
        if sorted.len() == ncolors {
            return ncolors;
        }
        ncolors = sorted.len();
    }
}

fn count_distinct(colors: &[u8]) -> usize {
    let mut seen = 0u32;
    for &c in colors {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}
