//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use hlspec_core::Graph;
use proptest::prelude::*;

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform labeled graph on `1..=max_n` vertices.
pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| from_bits(n, &bits))
    })
}

/// Subcubic graph: pairs are offered in random order and kept while both
/// ends have degree below 3.
pub fn subcubic_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let len = pairs.len();
        (Just(pairs).prop_shuffle(), 0..=len).prop_map(move |(pairs, take)| {
            let mut deg = vec![0; n];
            let mut edges = Vec::new();
            for (a, b) in pairs.into_iter().take(take) {
                if deg[a] < 3 && deg[b] < 3 {
                    deg[a] += 1;
                    deg[b] += 1;
                    edges.push((a, b));
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Cyclic Jacobi rotations; eigenvalues in non-increasing order.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut a: Vec<Vec<f64>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}

/// Characteristic polynomial `det(xI - A)` by Faddeev-LeVerrier, low degree
/// first.
pub fn charpoly(g: &Graph) -> Vec<i128> {
    let n = g.order();
    let a: Vec<Vec<i128>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|t| a[i][t] * m[t][j]).sum::<i128>();
            }
            next[i][i] += c[n - k + 1];
        }
        m = next;
        let tr: i128 = (0..n).map(|i| (0..n).map(|t| a[i][t] * m[t][i]).sum::<i128>()).sum();
        assert_eq!(tr % k as i128, 0);
        c[n - k] = -tr / k as i128;
    }
    c
}

/// Element of `Z[√2]` as `a + b√2`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Surd(i128, i128);

impl Surd {
    fn add(self, o: Surd) -> Surd {
        Surd(self.0 + o.0, self.1 + o.1)
    }
    fn mul(self, o: Surd) -> Surd {
        Surd(self.0 * o.0 + 2 * self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn sign(self) -> i32 {
        let (a, b) = (self.0, self.1);
        let sa = a.signum() as i32;
        let sb = b.signum() as i32;
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // opposite signs: compare a^2 with 2 b^2
        match (a * a).cmp(&(2 * b * b)) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

/// Threshold `p + q√2` for the oracle.
#[derive(Clone, Copy, Debug)]
pub struct Shift(pub i128, pub i128);

/// `(above, at, below)` counts of eigenvalues relative to `t`, from
/// Descartes' rule on `charpoly(x + t)`; exact because the polynomial is
/// real-rooted.
pub fn descartes_counts(g: &Graph, t: Shift) -> (usize, usize, usize) {
    let n = g.order();
    let mut p: Vec<Surd> = charpoly(g).into_iter().map(|c| Surd(c, 0)).collect();
    let t = Surd(t.0, t.1);
    // Taylor shift by repeated synthetic division
    for i in 0..n {
        for j in (i..n).rev() {
            p[j] = p[j].add(t.mul(p[j + 1]));
        }
    }
    let at = p.iter().take_while(|c| c.sign() == 0).count();
    let signs: Vec<i32> = p[at..].iter().map(|c| c.sign()).filter(|&s| s != 0).collect();
    let above = signs.windows(2).filter(|w| w[0] != w[1]).count();
    (above, at, n - above - at)
}

/// Every `K_{2,3}` as a 5-subset scan.
pub fn has_k23_brute(g: &Graph) -> bool {
    let n = g.order();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != 5 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        for x1 in 0..5 {
            for x2 in x1 + 1..5 {
                let ys: Vec<usize> = (0..5).filter(|&i| i != x1 && i != x2).collect();
                if ys.iter().all(|&y| g.has_edge(vs[x1], vs[y]) && g.has_edge(vs[x2], vs[y])) {
                    return true;
                }
            }
        }
    }
    false
}

/// Minimum upper-triangle code over all vertex permutations.
pub fn naive_canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = code << 1 | g.has_edge(perm[i], perm[j]) as u64;
            }
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else { return false };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}
