//! Adjacency spectra, the HL-index, and exact eigenvalue counting.
//!
//! Floating eigenvalues come from Householder tridiagonalization followed by
//! implicit-shift QL. Anything reported as *certified* is computed instead
//! from the inertia of `A - tI` in exact arithmetic (see [`crate::exact`]).

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{inertia, ExactField, QSqrt2, Threshold};
use crate::graph::{EdgeSet, Graph};

/// Eigenvalues `λ1 ≥ … ≥ λn` of the adjacency matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Per-eigenvalue error bound.
    pub eps: f64,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `λ_i` with 1-based `i`.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Trace and second-moment checks: `Σλ = 0` and `Σλ² = 2m`.
    pub fn moments_ok(&self, edges: usize) -> bool {
        let n = self.order() as f64;
        let tol = (n * self.eps).max(1e-12);
        let sum: f64 = self.values.iter().sum();
        let sq: f64 = self.values.iter().map(|x| x * x).sum();
        sum.abs() <= tol && (sq - 2.0 * edges as f64).abs() <= tol * (1.0 + 2.0 * edges as f64)
    }
}

pub fn eps_for(n: usize) -> f64 {
    1e-9 * n as f64
}

/// Floating spectrum of the adjacency matrix, sorted descending.
pub fn spectrum(g: &Graph) -> Spectrum {
    let n = g.order();
    let a: Vec<Vec<f64>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as f64).collect())
        .collect();
    let mut values = symmetric_eigenvalues(a);
    values.sort_by(|x, y| y.total_cmp(x));
    Spectrum { values, eps: eps_for(n) }
}

/// Eigenvalues of a real symmetric matrix (unsorted).
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let (mut d, mut e) = tridiagonalize(&mut a);
    tridiagonal_ql(&mut d, &mut e);
    d
}

/// Householder reduction to tridiagonal form; returns (diagonal,
/// subdiagonal) with the subdiagonal stored in `e[1..]`.
#[allow(clippy::needless_range_loop)]
fn tridiagonalize(a: &mut [Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..=l].iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues are left
/// in `d`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 60, "QL iteration failed to converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

/// Eigenvalue counts above, at and below a threshold, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaCount {
    pub threshold: Threshold,
    pub above: usize,
    pub at: usize,
    pub below: usize,
}

/// Exact counts of eigenvalues of `A(g)` relative to `t`, from the inertia
/// of `A - tI`.
pub fn count_at_threshold(g: &Graph, t: &Threshold) -> InertiaCount {
    let adj = g.adjacency_matrix();
    let inert = if t.is_rational() {
        inertia(shifted::<BigRational>(&adj, &t.rational))
    } else {
        inertia(shifted::<QSqrt2>(&adj, &t.as_surd()))
    };
    InertiaCount {
        threshold: t.clone(),
        above: inert.positive,
        at: inert.zero,
        below: inert.negative,
    }
}

fn shifted<F: ExactField>(adj: &[Vec<i64>], t: &F) -> Vec<Vec<F>> {
    adj.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| {
                    let v = F::from_i64(x);
                    if i == j {
                        v.sub(t)
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect()
}

/// `h = ⌊(n+1)/2⌋`, `l = ⌈(n+1)/2⌉`.
pub fn median_indices(n: usize) -> (usize, usize) {
    (n.div_ceil(2), (n + 2) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    CertifiedLe,
    CertifiedGt,
    FloatingOnly,
}

impl Certificate {
    pub fn from_bool(le: bool) -> Self {
        if le {
            Certificate::CertifiedLe
        } else {
            Certificate::CertifiedGt
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HlIndex {
    pub h: usize,
    pub l: usize,
    pub lambda_h: f64,
    pub lambda_l: f64,
    pub value: f64,
    pub exact_le_one: Certificate,
}

/// HL-index `R(G) = max(|λ_h|, |λ_l|)` with an exact `R ≤ 1` certificate.
pub fn hl_index(g: &Graph) -> HlIndex {
    let mut hl = hl_index_floating(g);
    hl.exact_le_one = Certificate::from_bool(certify_r_le(g, &Threshold::int(1)));
    hl
}

/// HL-index without the exact certificate.
pub fn hl_index_floating(g: &Graph) -> HlIndex {
    let n = g.order();
    assert!(n >= 1, "HL-index needs at least one vertex");
    let spec = spectrum(g);
    hl_from_spectrum(&spec)
}

pub fn hl_from_spectrum(spec: &Spectrum) -> HlIndex {
    let (h, l) = median_indices(spec.order());
    let (lh, ll) = (spec.lambda(h), spec.lambda(l));
    HlIndex {
        h,
        l,
        lambda_h: lh,
        lambda_l: ll,
        value: lh.abs().max(ll.abs()),
        exact_le_one: Certificate::FloatingOnly,
    }
}

/// Exact test of `λ_h ≤ bound` and `λ_l ≥ -bound`.
pub fn certify_r_le(g: &Graph, bound: &Threshold) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let (h, l) = median_indices(n);
    count_at_threshold(g, bound).above < h && count_at_threshold(g, &-bound).below <= n - l
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterlacingCheck {
    pub holds: bool,
    /// Smallest margin over both inequality families; negative means violated.
    pub worst_slack: f64,
    pub tolerance: f64,
}

/// `λ_i(G) ≥ λ_i(G−A) ≥ λ_{i+k}(G)` for `i = 1..n−k`.
pub fn check_interlacing(g: &Graph, removed: &[usize]) -> Result<InterlacingCheck> {
    let sub = g.induced_delete(removed)?;
    let k = g.order() - sub.graph.order();
    let full = spectrum(g);
    let part = spectrum(&sub.graph);
    let tolerance = 2.0 * full.eps.max(part.eps);
    let mut worst = f64::INFINITY;
    for i in 1..=g.order() - k {
        worst = worst
            .min(full.lambda(i) - part.lambda(i))
            .min(part.lambda(i) - full.lambda(i + k));
    }
    Ok(InterlacingCheck { holds: worst >= -tolerance, worst_slack: worst, tolerance })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgePartitionCheck {
    /// Margin of `λ_j(G1) + λ_{i−j+1}(G2) − λ_i(G)`, when `i ≥ j`.
    pub upper_slack: Option<f64>,
    /// Margin of `λ_i(G) − λ_j(G1) − λ_{i−j+n}(G2)`, when `i ≤ j`.
    pub lower_slack: Option<f64>,
    pub tolerance: f64,
    pub holds: bool,
}

/// Weyl-type bounds for the spanning subgraphs `G1 = (V, E1)` and
/// `G2 = (V, E ∖ E1)`. Indices are 1-based.
pub fn check_edge_partition_bounds(
    g: &Graph,
    e1: &EdgeSet,
    i: usize,
    j: usize,
) -> Result<EdgePartitionCheck> {
    let n = g.order();
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, order: n });
        }
    }
    let g1 = g.spanning(e1)?;
    let g2 = g.spanning(&g.edge_set().difference(e1))?;
    let (s, s1, s2) = (spectrum(g), spectrum(&g1), spectrum(&g2));
    let tolerance = 3.0 * s.eps;
    let upper_slack = (i >= j).then(|| s1.lambda(j) + s2.lambda(i - j + 1) - s.lambda(i));
    let lower_slack = (i <= j).then(|| s.lambda(i) - s1.lambda(j) - s2.lambda(i + n - j));
    let holds = upper_slack.into_iter().chain(lower_slack).all(|x| x >= -tolerance);
    Ok(EdgePartitionCheck { upper_slack, lower_slack, tolerance, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn small_spectra() {
        assert!(close(&spectrum(&Graph::complete(2)).values, &[1.0, -1.0], 1e-12));
        assert!(close(&spectrum(&Graph::cycle(4)).values, &[2.0, 0.0, 0.0, -2.0], 1e-12));
        // roots of x^4 - 4x^2 - 2x + 1
        let paw = spectrum(&Graph::paw());
        assert!(close(&paw.values, &[2.1700864866, 0.3111078175, -1.0, -1.4811943041], 1e-9));
        assert!(spectrum(&Graph::empty(0)).values.is_empty());
        assert_eq!(spectrum(&Graph::empty(1)).values, vec![0.0]);
    }

    #[test]
    fn hl_examples() {
        let k2 = hl_index(&Graph::complete(2));
        assert_eq!((k2.h, k2.l), (1, 2));
        assert!((k2.value - 1.0).abs() < 1e-12);
        assert_eq!(k2.exact_le_one, Certificate::CertifiedLe);

        let heawood = hl_index(&Graph::heawood());
        assert!((heawood.value - std::f64::consts::SQRT_2).abs() < 1e-9);
        assert_eq!(heawood.exact_le_one, Certificate::CertifiedGt);

        let k23 = hl_index(&Graph::complete_bipartite(2, 3));
        assert!(k23.value.abs() < 1e-9);
        assert_eq!(k23.exact_le_one, Certificate::CertifiedLe);
        assert_eq!((k23.h, k23.l), (3, 3));
    }

    #[test]
    fn exact_counts() {
        let one = Threshold::int(1);
        let c4 = count_at_threshold(&Graph::cycle(4), &one);
        assert_eq!((c4.above, c4.at, c4.below), (1, 0, 3));
        let k4 = count_at_threshold(&Graph::complete(4), &one);
        assert_eq!((k4.above, k4.at, k4.below), (1, 0, 3));
        let pet = count_at_threshold(&Graph::petersen(), &one);
        assert_eq!((pet.above, pet.at, pet.below), (1, 5, 4));
        let pet = count_at_threshold(&Graph::petersen(), &Threshold::int(-2));
        assert_eq!((pet.above, pet.at, pet.below), (6, 4, 0));
    }

    #[test]
    fn sqrt2_threshold_is_exact() {
        let heawood = Graph::heawood();
        let c = count_at_threshold(&heawood, &Threshold::sqrt2());
        // spectrum 3, sqrt2^6, -sqrt2^6, -3
        assert_eq!((c.above, c.at, c.below), (1, 6, 7));
        assert!(certify_r_le(&heawood, &Threshold::sqrt2()));
        assert!(!certify_r_le(&heawood, &Threshold::int(1)));
        let p3 = count_at_threshold(&Graph::path(3), &-Threshold::sqrt2());
        assert_eq!((p3.above, p3.at, p3.below), (2, 1, 0));
    }

    #[test]
    fn certify_examples() {
        let one = Threshold::int(1);
        assert!(certify_r_le(&Graph::complete(2), &one));
        assert!(certify_r_le(&Graph::paw(), &one));
        assert!(certify_r_le(&Graph::complete_bipartite(2, 3), &Threshold::int(0)));
    }

    #[test]
    fn interlacing_examples() {
        let c4 = Graph::cycle(4);
        let chk = check_interlacing(&c4, &[0]).unwrap();
        assert!(chk.holds);
        // P3 spectrum sqrt2, 0, -sqrt2 sits between 2,0,0,-2
        assert!((chk.worst_slack - 0.0).abs() < 1e-9);
        let id = check_interlacing(&Graph::petersen(), &[]).unwrap();
        assert!(id.holds && id.worst_slack.abs() < 1e-9);
    }

    #[test]
    fn edge_partition_examples() {
        let p3 = Graph::path(3);
        let e1: EdgeSet = [(0, 1)].into_iter().collect();
        let chk = check_edge_partition_bounds(&p3, &e1, 1, 1).unwrap();
        assert!(chk.holds);
        assert!((chk.upper_slack.unwrap() - (2.0 - std::f64::consts::SQRT_2)).abs() < 1e-9);

        let pet = Graph::petersen();
        let all = pet.edge_set();
        for i in 1..=10 {
            for j in 1..=i {
                assert!(check_edge_partition_bounds(&pet, &all, i, j).unwrap().holds);
            }
        }
        assert!(matches!(
            check_edge_partition_bounds(&p3, &e1, 4, 1),
            Err(Error::IndexOutOfRange { index: 4, .. })
        ));
        let bogus: EdgeSet = [(0, 2)].into_iter().collect();
        assert!(check_edge_partition_bounds(&p3, &bogus, 1, 1).is_err());
    }

    #[test]
    fn median_index_identities() {
        for n in 1..20 {
            let (h, l) = median_indices(n);
            assert_eq!(h + l, n + 1);
            assert_eq!(h == l, n % 2 == 1);
        }
    }
}
