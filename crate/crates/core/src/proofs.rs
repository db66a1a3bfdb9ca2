//! Executable replays of the `R(G) ≤ 1` arguments on concrete graphs.
//!
//! Each verifier walks the argument for one graph and records every step as
//! a [`Claim`]: a self-contained assertion about the host graph that can be
//! evaluated again later from the stored vertex names alone. A trace whose
//! verdict is `pass` always ends with the exact certificate `R(G) ≤ 1`
//! (theorem traces) or the lemma's stated conclusion.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_key;
use crate::error::Result;
use crate::exact::Threshold;
use crate::graph::{EdgeSet, Graph, GRAPH6_MAX_ORDER};
use crate::spectra::{
    certify_r_le, check_edge_partition_bounds, check_interlacing, count_at_threshold,
    median_indices,
};
use crate::structure::{
    find_k23, find_twins, find_unbalanced_unfriendly, flip_search, is_k4_minor_free,
    longest_cycle, unfriendly_partition, K23Embedding, Partition, UnbalancedSearch,
    DEFAULT_EXHAUSTIVE_LIMIT,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// Subcubic graphs containing `K_{2,3}`.
    K23,
    /// `K4`-minor-free subcubic graphs.
    Sp,
    LemmaTwins,
    LemmaOdd,
    LemmaUnbalanced,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] =
        [TheoremId::K23, TheoremId::Sp, TheoremId::LemmaTwins, TheoremId::LemmaOdd, TheoremId::LemmaUnbalanced];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::K23 => "k23",
            TheoremId::Sp => "sp",
            TheoremId::LemmaTwins => "lemma-twins",
            TheoremId::LemmaOdd => "lemma-odd",
            TheoremId::LemmaUnbalanced => "lemma-unbalanced",
        }
    }
}

impl std::str::FromStr for TheoremId {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| crate::error::Error::GenSpec(format!("unknown theorem {s:?}")))
    }
}

/// Runs the verifier for `theorem` on `g`.
pub fn verify(theorem: TheoremId, g: &Graph) -> WitnessTrace {
    match theorem {
        TheoremId::K23 => verify_theorem_k23(g),
        TheoremId::Sp => verify_theorem_sp(g),
        TheoremId::LemmaTwins => check_lemma_twins(g),
        TheoremId::LemmaOdd => check_lemma_odd(g),
        TheoremId::LemmaUnbalanced => check_lemma_unbalanced(g),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    OddOrder,
    BaseN2,
    BaseN4,
    Cycle,
    CutVertex,
    TwoConnected,
    K23Decomposition,
    Components,
    Twins,
    UnbalancedPartition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    /// A step of the argument did not hold on this graph.
    Fail,
    NotApplicable,
    /// A constructive search gave up before finding its object.
    Inconclusive,
}

/// Which graph a claim is about, in host vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Subgraph {
    Whole,
    Induced { vertices: Vec<usize> },
    Spanning { edges: Vec<(usize, usize)> },
}

impl Subgraph {
    fn induced(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        Subgraph::Induced { vertices }
    }

    fn spanning(edges: &EdgeSet) -> Self {
        Subgraph::Spanning { edges: edges.iter().copied().collect() }
    }

    pub fn build(&self, g: &Graph) -> Result<Graph> {
        match self {
            Subgraph::Whole => Ok(g.clone()),
            Subgraph::Induced { vertices } => Ok(g.induced(vertices)?.graph),
            Subgraph::Spanning { edges } => g.spanning(&edges.iter().copied().collect()),
        }
    }

    /// Maps a host vertex id into the built subgraph.
    fn local(&self, v: usize) -> Option<usize> {
        match self {
            Subgraph::Induced { vertices } => vertices.iter().position(|&w| w == v),
            _ => Some(v),
        }
    }
}

/// A checkable assertion about the host graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Claim {
    Subcubic,
    K4MinorFree,
    Connected { of: Subgraph },
    Parity { of: Subgraph, even: bool },
    MaxDegreeAtMost { of: Subgraph, bound: usize },
    Bipartite { of: Subgraph },
    CutVertex { vertex: usize },
    NoCutVertex,
    IsCycle { expected: bool },
    IsomorphicToOneOf { graph6: Vec<String> },
    /// `component` is exactly one component of `G - removed`.
    ComponentOf { removed: Vec<usize>, component: Vec<usize> },
    Disconnected { removed: Vec<usize> },
    ComponentCount { of: Subgraph, at_least: usize, at_most: usize },
    Member { set: Vec<usize>, vertex: usize },
    Distinct { a: usize, b: usize },
    Adjacent { a: usize, b: usize, expected: bool },
    CycleInGraph { cycle: Vec<usize> },
    LongestCycleLength { length: usize },
    /// Path with both ends on the cycle, inner vertices off it, and no edge
    /// of the cycle.
    Ear { cycle: Vec<usize>, path: Vec<usize> },
    CycleNeighbors { cycle: Vec<usize>, vertex: usize, neighbors: [usize; 2] },
    /// A path along the cycle from `from` to `to` avoiding `avoid`.
    ArcAvoiding { cycle: Vec<usize>, from: usize, to: usize, avoid: Vec<usize> },
    K23 { embedding: K23Embedding },
    UnfriendlyPartition { a: Vec<usize> },
    Unbalanced { a: Vec<usize> },
    /// `x` on the `A` side, `y` on the other.
    SplitSides { a: Vec<usize>, x: Vec<usize>, y: Vec<usize> },
    Twins { of: Subgraph, u: usize, v: usize },
    NeighborsInclude { of: Subgraph, vertex: usize, set: Vec<usize> },
    /// At most `at_most` eigenvalues strictly above `threshold`.
    CountAbove { of: Subgraph, threshold: Threshold, at_most: usize },
    /// At most `at_most` eigenvalues strictly below `threshold`.
    CountBelow { of: Subgraph, threshold: Threshold, at_most: usize },
    /// At least `at_least` eigenvalues equal to `threshold`.
    CountAt { of: Subgraph, threshold: Threshold, at_least: usize },
    /// `λ_h ≤ bound` and `λ_l ≥ -bound`.
    RLe { of: Subgraph, bound: Threshold },
    /// Floating check of `λ_i(G) ≥ λ_i(G−D) ≥ λ_{i+k}(G)`.
    Interlacing { removed: Vec<usize> },
    /// Exact consequence of interlacing at `±threshold`:
    /// `#{λ(G) > t} ≤ #{λ(G−D) > t} + k` and likewise below `−t`.
    InterlacingCount { removed: Vec<usize>, threshold: Threshold },
    EdgePartition { e1: Vec<(usize, usize)>, i: usize, j: usize },
    /// Integer bookkeeping: the sum of `terms` is at most `bound`.
    Arithmetic { terms: Vec<i64>, bound: i64 },
    /// The child trace with this index passes and rechecks.
    Subproof { child: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub holds: bool,
    pub exact: bool,
    pub slack: Option<f64>,
}

impl Evaluation {
    fn exact(holds: bool) -> Self {
        Evaluation { holds, exact: true, slack: None }
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn in_range(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().all(|&v| v < g.order())
}

fn cycle_edges(cycle: &[usize]) -> EdgeSet {
    (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

impl Claim {
    /// Evaluates the claim on `g`; `children` backs [`Claim::Subproof`].
    pub fn evaluate(&self, g: &Graph, children: &[ChildTrace]) -> Evaluation {
        let n = g.order();
        let exact = |b: bool| Evaluation::exact(b);
        let sub = |s: &Subgraph| s.build(g).ok();
        match self {
            Claim::Subcubic => exact(g.is_subcubic()),
            Claim::K4MinorFree => exact(is_k4_minor_free(g).0),
            Claim::Connected { of } => exact(sub(of).is_some_and(|h| h.is_connected())),
            Claim::Parity { of, even } => exact(sub(of).is_some_and(|h| (h.order() % 2 == 0) == *even)),
            Claim::MaxDegreeAtMost { of, bound } => exact(sub(of).is_some_and(|h| h.max_degree() <= *bound)),
            Claim::Bipartite { of } => exact(sub(of).is_some_and(|h| h.is_bipartite())),
            Claim::CutVertex { vertex } => exact(*vertex < n && g.cut_vertices().contains(vertex)),
            Claim::NoCutVertex => exact(g.cut_vertices().is_empty()),
            Claim::IsCycle { expected } => exact(g.is_cycle() == *expected),
            Claim::IsomorphicToOneOf { graph6 } => {
                let key = canonical_key(g);
                exact(graph6.iter().any(|s| {
                    crate::graph::parse_graph6(s).is_ok_and(|h| canonical_key(&h) == key)
                }))
            }
            Claim::ComponentOf { removed, component } => exact(
                in_range(g, removed)
                    && g.components_avoiding(removed).contains(&sorted(component.clone())),
            ),
            Claim::Disconnected { removed } => {
                exact(in_range(g, removed) && g.components_avoiding(removed).len() > 1)
            }
            Claim::ComponentCount { of, at_least, at_most } => exact(sub(of).is_some_and(|h| {
                let c = h.components().len();
                *at_least <= c && c <= *at_most
            })),
            Claim::Member { set, vertex } => exact(set.contains(vertex)),
            Claim::Distinct { a, b } => exact(a != b),
            Claim::Adjacent { a, b, expected } => exact(g.has_edge(*a, *b) == *expected),
            Claim::CycleInGraph { cycle } => {
                let mut vs = cycle.clone();
                vs.sort_unstable();
                vs.dedup();
                exact(
                    cycle.len() >= 3
                        && vs.len() == cycle.len()
                        && in_range(g, cycle)
                        && cycle_edges(cycle).iter().all(|&(a, b)| g.has_edge(a, b)),
                )
            }
            Claim::LongestCycleLength { length } => {
                exact(longest_cycle(g).ok().flatten().is_some_and(|c| c.len() == *length))
            }
            Claim::Ear { cycle, path } => {
                let on_cycle = |v: &usize| cycle.contains(v);
                let c_edges = cycle_edges(cycle);
                let mut vs = path.clone();
                vs.sort_unstable();
                vs.dedup();
                exact(
                    path.len() >= 2
                        && vs.len() == path.len()
                        && in_range(g, path)
                        && on_cycle(&path[0])
                        && on_cycle(path.last().unwrap())
                        && path[1..path.len() - 1].iter().all(|v| !on_cycle(v))
                        && path.windows(2).all(|w| g.has_edge(w[0], w[1]) && !c_edges.contains(w[0], w[1])),
                )
            }
            Claim::CycleNeighbors { cycle, vertex, neighbors } => {
                let k = cycle.len();
                exact(cycle.iter().position(|v| v == vertex).is_some_and(|p| {
                    let pair = sorted(vec![cycle[(p + 1) % k], cycle[(p + k - 1) % k]]);
                    pair == sorted(neighbors.to_vec())
                }))
            }
            Claim::ArcAvoiding { cycle, from, to, avoid } => {
                let k = cycle.len();
                let walk = |step: usize| -> bool {
                    let Some(mut p) = cycle.iter().position(|v| v == from) else { return false };
                    for _ in 0..k {
                        if avoid.contains(&cycle[p]) {
                            return false;
                        }
                        if cycle[p] == *to {
                            return true;
                        }
                        p = (p + step) % k;
                    }
                    false
                };
                exact(walk(1) || walk(k - 1))
            }
            Claim::K23 { embedding } => exact(embedding.is_valid_in(g)),
            Claim::UnfriendlyPartition { a } => exact(in_range(g, a) && partition_of(g, a).is_unfriendly(g)),
            Claim::Unbalanced { a } => exact(in_range(g, a) && 2 * a.len() != n),
            Claim::SplitSides { a, x, y } => exact(
                x.iter().all(|v| a.contains(v)) && y.iter().all(|v| !a.contains(v)),
            ),
            Claim::Twins { of, u, v } => exact(sub(of).is_some_and(|h| {
                match (of.local(*u), of.local(*v)) {
                    (Some(a), Some(b)) => a != b && h.neighbors(a) == h.neighbors(b),
                    _ => false,
                }
            })),
            Claim::NeighborsInclude { of, vertex, set } => exact(sub(of).is_some_and(|h| {
                of.local(*vertex).is_some_and(|a| {
                    set.iter().all(|w| of.local(*w).is_some_and(|b| h.has_edge(a, b)))
                })
            })),
            Claim::CountAbove { of, threshold, at_most } => {
                exact(sub(of).is_some_and(|h| count_at_threshold(&h, threshold).above <= *at_most))
            }
            Claim::CountBelow { of, threshold, at_most } => {
                exact(sub(of).is_some_and(|h| count_at_threshold(&h, threshold).below <= *at_most))
            }
            Claim::CountAt { of, threshold, at_least } => {
                exact(sub(of).is_some_and(|h| count_at_threshold(&h, threshold).at >= *at_least))
            }
            Claim::RLe { of, bound } => exact(sub(of).is_some_and(|h| certify_r_le(&h, bound))),
            Claim::Interlacing { removed } => match check_interlacing(g, removed) {
                Ok(c) => Evaluation { holds: c.holds, exact: false, slack: Some(c.worst_slack) },
                Err(_) => exact(false),
            },
            Claim::InterlacingCount { removed, threshold } => {
                let Ok(rest) = g.induced_delete(removed) else { return exact(false) };
                let k = n - rest.graph.order();
                let up_g = count_at_threshold(g, threshold).above;
                let up_h = count_at_threshold(&rest.graph, threshold).above;
                let neg = -threshold;
                let down_g = count_at_threshold(g, &neg).below;
                let down_h = count_at_threshold(&rest.graph, &neg).below;
                exact(up_g <= up_h + k && down_g <= down_h + k)
            }
            Claim::EdgePartition { e1, i, j } => {
                let set: EdgeSet = e1.iter().copied().collect();
                match check_edge_partition_bounds(g, &set, *i, *j) {
                    Ok(c) => {
                        let slack = c.upper_slack.into_iter().chain(c.lower_slack).fold(f64::INFINITY, f64::min);
                        Evaluation { holds: c.holds, exact: false, slack: Some(slack) }
                    }
                    Err(_) => exact(false),
                }
            }
            Claim::Arithmetic { terms, bound } => exact(terms.iter().sum::<i64>() <= *bound),
            Claim::Subproof { child } => exact(children.get(*child).is_some_and(|c| {
                c.trace.verdict == Verdict::Pass
                    && g.induced(&c.vertices).is_ok_and(|h| c.trace.recheck(&h.graph).is_ok())
            })),
        }
    }
}

fn partition_of(g: &Graph, a: &[usize]) -> Partition {
    let mut in_a = vec![false; g.order()];
    for &v in a {
        in_a[v] = true;
    }
    Partition::from_sides(g, &in_a)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub statement: String,
    pub claim: Claim,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<f64>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Named {
    Vertex(usize),
    Set(Vec<usize>),
}

/// A sub-argument on `G[vertices]`; the child's vertex ids are positions
/// in `vertices`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChildTrace {
    pub vertices: Vec<usize>,
    pub trace: WitnessTrace,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessTrace {
    pub theorem: TheoremId,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    pub case: Option<Case>,
    pub named: BTreeMap<String, Named>,
    pub steps: Vec<Step>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub children: Vec<ChildTrace>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl WitnessTrace {
    /// Re-evaluates every stored claim against `g` and compares with the
    /// recorded outcome. A passing trace must also end with `R ≤ 1` (or
    /// the lemma's conclusion) holding.
    pub fn recheck(&self, g: &Graph) -> std::result::Result<(), String> {
        if g.order() != self.n {
            return Err(format!("trace is for order {}, graph has {}", self.n, g.order()));
        }
        for (k, step) in self.steps.iter().enumerate() {
            let eval = step.claim.evaluate(g, &self.children);
            if eval.holds != step.holds {
                return Err(format!("step {k} ({}) re-evaluates to {}", step.statement, eval.holds));
            }
        }
        if self.verdict == Verdict::Pass {
            if let Some(bad) = self.steps.iter().find(|s| !s.holds) {
                return Err(format!("passing trace has a failed step: {}", bad.statement));
            }
            let last = self.steps.last().ok_or("passing trace without steps")?;
            let concluded = match self.theorem {
                TheoremId::LemmaTwins => matches!(
                    last.claim,
                    Claim::CountAt { .. } | Claim::RLe { .. }
                ),
                _ => matches!(&last.claim, Claim::RLe { of: Subgraph::Whole, bound } if *bound == Threshold::int(1)),
            };
            if !concluded {
                return Err("passing trace does not end with its conclusion".into());
            }
        }
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// First failed step in this trace or any descendant.
    pub fn failure_detail(&self) -> Option<String> {
        if let Some(f) = &self.failure {
            return Some(f.clone());
        }
        self.children.iter().find_map(|c| c.trace.failure_detail())
    }
}

enum Stop {
    Failed,
    NotApplicable(String),
    Inconclusive(String),
}

struct TraceBuilder<'g> {
    g: &'g Graph,
    trace: WitnessTrace,
}

impl<'g> TraceBuilder<'g> {
    fn new(g: &'g Graph, theorem: TheoremId) -> Self {
        TraceBuilder {
            g,
            trace: WitnessTrace {
                theorem,
                n: g.order(),
                graph6: (g.order() <= GRAPH6_MAX_ORDER).then(|| g.to_graph6()),
                case: None,
                named: BTreeMap::new(),
                steps: Vec::new(),
                children: Vec::new(),
                notes: Vec::new(),
                verdict: Verdict::Pass,
                failure: None,
            },
        }
    }

    fn name(&mut self, key: &str, v: usize) {
        self.trace.named.insert(key.into(), Named::Vertex(v));
    }

    fn name_set(&mut self, key: &str, vs: &[usize]) {
        self.trace.named.insert(key.into(), Named::Set(sorted(vs.to_vec())));
    }

    fn note(&mut self, text: impl Into<String>) {
        self.trace.notes.push(text.into());
    }

    fn require(&mut self, statement: impl Into<String>, claim: Claim) -> std::result::Result<(), Stop> {
        let statement = statement.into();
        let eval = claim.evaluate(self.g, &self.trace.children);
        let holds = eval.holds;
        if !holds && self.trace.failure.is_none() {
            self.trace.failure = Some(statement.clone());
        }
        self.trace.steps.push(Step { statement, claim, exact: eval.exact, slack: eval.slack, holds });
        if holds {
            Ok(())
        } else {
            Err(Stop::Failed)
        }
    }

    /// Attaches a sub-argument on `G[vertices]` and requires it to pass.
    fn subproof(
        &mut self,
        statement: impl Into<String>,
        vertices: &[usize],
        verify: impl FnOnce(&Graph) -> WitnessTrace,
    ) -> std::result::Result<(), Stop> {
        let vertices = sorted(vertices.to_vec());
        let local = self.g.induced(&vertices).expect("subproof vertices lie in the host");
        let trace = verify(&local.graph);
        self.trace.children.push(ChildTrace { vertices, trace });
        let child = self.trace.children.len() - 1;
        self.require(statement, Claim::Subproof { child })
    }

    fn finish(mut self, outcome: std::result::Result<(), Stop>) -> WitnessTrace {
        match outcome {
            Ok(()) => self.trace.verdict = Verdict::Pass,
            Err(Stop::Failed) => self.trace.verdict = Verdict::Fail,
            Err(Stop::NotApplicable(why)) => {
                self.trace.verdict = Verdict::NotApplicable;
                self.trace.notes.push(why);
            }
            Err(Stop::Inconclusive(why)) => {
                self.trace.verdict = Verdict::Inconclusive;
                self.trace.notes.push(why);
            }
        }
        self.trace
    }

    fn conclude_r_le_one(&mut self) -> std::result::Result<(), Stop> {
        self.require("R(G) <= 1 (exact inertia of A - I and A + I)", Claim::RLe {
            of: Subgraph::Whole,
            bound: Threshold::int(1),
        })
    }
}

fn applicable_if(cond: bool, why: &str) -> std::result::Result<(), Stop> {
    if cond {
        Ok(())
    } else {
        Err(Stop::NotApplicable(why.into()))
    }
}

/// Twins force a zero eigenvalue; bipartite graphs with twins have `R = 0`.
pub fn check_lemma_twins(g: &Graph) -> WitnessTrace {
    let mut b = TraceBuilder::new(g, TheoremId::LemmaTwins);
    let outcome = (|| {
        let twins = find_twins(g);
        let &(u, v) = twins.first().ok_or_else(|| Stop::NotApplicable("no twin pair".into()))?;
        b.trace.case = Some(Case::Twins);
        b.name("u", u);
        b.name("v", v);
        b.require("N(u) = N(v)", Claim::Twins { of: Subgraph::Whole, u, v })?;
        b.require("0 is an eigenvalue of A(G) (exact nullity >= 1)", Claim::CountAt {
            of: Subgraph::Whole,
            threshold: Threshold::int(0),
            at_least: 1,
        })?;
        if g.is_bipartite() {
            b.require("G is bipartite", Claim::Bipartite { of: Subgraph::Whole })?;
            b.require("R(G) = 0 (exact: lambda_h <= 0 <= lambda_l)", Claim::RLe {
                of: Subgraph::Whole,
                bound: Threshold::int(0),
            })?;
        }
        Ok(())
    })();
    b.finish(outcome)
}

/// Subcubic graphs of odd order have `R ≤ 1`.
pub fn check_lemma_odd(g: &Graph) -> WitnessTrace {
    let mut b = TraceBuilder::new(g, TheoremId::LemmaOdd);
    let outcome = (|| {
        applicable_if(g.is_subcubic(), "not subcubic")?;
        applicable_if(g.order() % 2 == 1, "even order")?;
        b.trace.case = Some(Case::OddOrder);
        b.require("G is subcubic", Claim::Subcubic)?;
        b.require("|G| is odd", Claim::Parity { of: Subgraph::Whole, even: false })?;
        b.conclude_r_le_one()
    })();
    b.finish(outcome)
}

/// Subcubic graphs with an unbalanced unfriendly partition have `R ≤ 1`.
///
/// Both readings of "unbalanced" are recorded: with nonempty blocks only
/// (`strict`) and with `{∅, V}` admitted (`literal`). They differ only on
/// edgeless graphs.
pub fn check_lemma_unbalanced(g: &Graph) -> WitnessTrace {
    let mut b = TraceBuilder::new(g, TheoremId::LemmaUnbalanced);
    let outcome = (|| {
        applicable_if(g.is_subcubic(), "not subcubic")?;
        let strict = find_unbalanced_unfriendly(g, DEFAULT_EXHAUSTIVE_LIMIT, false);
        let literal = match &strict {
            UnbalancedSearch::Found(_) => strict.clone(),
            _ => find_unbalanced_unfriendly(g, DEFAULT_EXHAUSTIVE_LIMIT, true),
        };
        b.note(format!("strict reading (nonempty blocks): {}", search_label(&strict)));
        b.note(format!("literal reading ({{empty, V}} allowed): {}", search_label(&literal)));
        let p = match (&strict, &literal) {
            (UnbalancedSearch::Found(p), _) | (_, UnbalancedSearch::Found(p)) => p.clone(),
            (UnbalancedSearch::NotFound, _) | (_, UnbalancedSearch::NotFound) => {
                return Err(Stop::Inconclusive("no unbalanced unfriendly partition found".into()))
            }
            _ => return Err(Stop::NotApplicable("no unbalanced unfriendly partition exists".into())),
        };
        b.trace.case = Some(Case::UnbalancedPartition);
        b.name_set("A", &p.a);
        b.name_set("B", &p.b);
        b.require("G is subcubic", Claim::Subcubic)?;
        b.require("{A, B} is unfriendly", Claim::UnfriendlyPartition { a: p.a.clone() })?;
        b.require("|A| != |B|", Claim::Unbalanced { a: p.a.clone() })?;
        b.conclude_r_le_one()
    })();
    b.finish(outcome)
}

fn search_label(s: &UnbalancedSearch) -> &'static str {
    match s {
        UnbalancedSearch::Found(_) => "found",
        UnbalancedSearch::ProvenNone => "proven none",
        UnbalancedSearch::NotFound => "not found",
    }
}

pub const K23_EXHAUSTIVE_LIMIT: usize = 12;

/// Replays the `K_{2,3}` argument: an unfriendly partition separates
/// `{x1, x2}` from the `y`s, the cut edges form a bipartite graph with twins
/// (median eigenvalues 0), the remaining edges form a matching (spectral
/// radius ≤ 1), and the Weyl bound combines the two.
pub fn verify_theorem_k23(g: &Graph) -> WitnessTrace {
    let mut b = TraceBuilder::new(g, TheoremId::K23);
    let outcome = k23_argument(&mut b, g);
    b.finish(outcome)
}

fn k23_argument(b: &mut TraceBuilder<'_>, g: &Graph) -> std::result::Result<(), Stop> {
    applicable_if(g.is_subcubic(), "not subcubic")?;
    let emb = find_k23(g).ok_or_else(|| Stop::NotApplicable("no K_{2,3} subgraph".into()))?;
    let n = g.order();
    let (h, l) = median_indices(n);
    b.trace.case = Some(Case::K23Decomposition);
    for (key, v) in ["x1", "x2"].iter().zip(emb.x).chain(["y1", "y2", "y3"].iter().zip(emb.y)) {
        b.name(key, v);
    }
    b.require("G is subcubic", Claim::Subcubic)?;
    b.require("x1, x2 and y1, y2, y3 span a K_{2,3}", Claim::K23 { embedding: emb })?;

    let (partition, first_try) = k23_partition(g, &emb)
        .ok_or_else(|| Stop::Inconclusive("no unfriendly partition with x1, x2 | y1, y2, y3".into()))?;
    if !first_try {
        b.note("the default flip-search partition did not separate x from y; another seed did");
    }
    b.name_set("A", &partition.a);
    b.name_set("B", &partition.b);
    b.require("{A, B} is an unfriendly partition", Claim::UnfriendlyPartition { a: partition.a.clone() })?;
    b.require("x1, x2 in A and y1, y2, y3 in B", Claim::SplitSides {
        a: partition.a.clone(),
        x: emb.x.to_vec(),
        y: emb.y.to_vec(),
    })?;

    let e1 = partition.cut_edges(g);
    let e2 = g.edge_set().difference(&e1);
    let g1 = Subgraph::spanning(&e1);
    let g2 = Subgraph::spanning(&e2);
    b.require("G1 = (V, E(A,B)) is bipartite", Claim::Bipartite { of: g1.clone() })?;
    b.require("N_G1(x1) contains y1, y2, y3", Claim::NeighborsInclude {
        of: g1.clone(),
        vertex: emb.x[0],
        set: emb.y.to_vec(),
    })?;
    b.require("N_G1(x1) = N_G1(x2)", Claim::Twins { of: g1.clone(), u: emb.x[0], v: emb.x[1] })?;
    b.require("lambda_h(G1) = lambda_l(G1) = 0 (exact)", Claim::RLe { of: g1, bound: Threshold::int(0) })?;
    b.require("G2 = (V, E \\ E(A,B)) has max degree <= 1", Claim::MaxDegreeAtMost { of: g2.clone(), bound: 1 })?;
    b.require("lambda_1(G2) <= 1 (exact)", Claim::CountAbove {
        of: g2.clone(),
        threshold: Threshold::int(1),
        at_most: 0,
    })?;
    b.require("lambda_n(G2) >= -1 (exact)", Claim::CountBelow {
        of: g2,
        threshold: Threshold::int(-1),
        at_most: 0,
    })?;
    let e1_list: Vec<_> = e1.iter().copied().collect();
    b.require("lambda_h(G) <= lambda_h(G1) + lambda_1(G2)", Claim::EdgePartition {
        e1: e1_list.clone(),
        i: h,
        j: h,
    })?;
    b.require("lambda_l(G) >= lambda_l(G1) + lambda_n(G2)", Claim::EdgePartition { e1: e1_list, i: l, j: l })?;
    b.require("lambda_h(G) <= 1 (exact)", Claim::CountAbove {
        of: Subgraph::Whole,
        threshold: Threshold::int(1),
        at_most: h - 1,
    })?;
    b.require("lambda_l(G) >= -1 (exact)", Claim::CountBelow {
        of: Subgraph::Whole,
        threshold: Threshold::int(-1),
        at_most: n - l,
    })?;
    b.conclude_r_le_one()
}

/// Unfriendly partition with `x` on side `A` and `y` on side `B`. The bool
/// reports whether the default flip search produced it directly.
fn k23_partition(g: &Graph, emb: &K23Embedding) -> Option<(Partition, bool)> {
    let shaped = |p: &Partition| -> Option<Partition> {
        let in_a = p.sides(g.order());
        let x_side = in_a[emb.x[0]];
        let ok = in_a[emb.x[1]] == x_side && emb.y.iter().all(|&y| in_a[y] != x_side);
        ok.then(|| if x_side { p.clone() } else { p.swapped() })
    };
    if let Some(p) = shaped(&unfriendly_partition(g)) {
        return Some((p, true));
    }
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
    for _ in 0..64 {
        let start: Vec<bool> = (0..g.order()).map(|_| rng.gen()).collect();
        if let Some(p) = shaped(&flip_search(g, start).0) {
            return Some((p, false));
        }
    }
    let n = g.order();
    if n <= K23_EXHAUSTIVE_LIMIT {
        for mask in 0u32..(1 << n) {
            let in_a: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            let p = Partition::from_sides(g, &in_a);
            if p.is_unfriendly(g) {
                if let Some(p) = shaped(&p) {
                    return Some((p, false));
                }
            }
        }
    }
    None
}

/// Connected `K4`-minor-free subcubic graphs on four vertices: `P4`,
/// `K_{1,3}`, `C4`, the paw, and `K4 - e`.
pub fn five_graphs_on_four() -> Vec<Graph> {
    let e = |edges: &[(usize, usize)]| Graph::from_edges(4, edges).unwrap();
    vec![
        e(&[(0, 1), (1, 2), (2, 3)]),
        e(&[(0, 1), (0, 2), (0, 3)]),
        e(&[(0, 1), (1, 2), (2, 3), (3, 0)]),
        e(&[(0, 1), (1, 2), (0, 2), (2, 3)]),
        e(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    ]
}

/// Replays the induction for `K4`-minor-free subcubic graphs.
///
/// Odd orders go to the odd-order lemma; orders 2 and 4 are certified
/// directly; cycles directly; otherwise a cut vertex or, for 2-connected
/// graphs, the longest-cycle construction supplies a vertex pair whose
/// deletion leaves pieces covered by induction, and interlacing lifts the
/// bound back to `G`. Every structural claim is re-verified on `g`.
pub fn verify_theorem_sp(g: &Graph) -> WitnessTrace {
    let mut b = TraceBuilder::new(g, TheoremId::Sp);
    let outcome = sp_argument(&mut b, g);
    b.finish(outcome)
}

fn sp_argument(b: &mut TraceBuilder<'_>, g: &Graph) -> std::result::Result<(), Stop> {
    applicable_if(g.is_subcubic(), "not subcubic")?;
    applicable_if(is_k4_minor_free(g).0, "has a K4 minor")?;
    applicable_if(g.order() >= 1, "empty graph")?;
    b.require("G is subcubic", Claim::Subcubic)?;
    b.require("G is K4-minor-free", Claim::K4MinorFree)?;
    let n = g.order();
    let comps = g.components();
    if comps.len() > 1 {
        b.trace.case = Some(Case::Components);
        for (i, comp) in comps.iter().enumerate() {
            b.name_set(&format!("component{i}"), comp);
            b.subproof(format!("component {i} satisfies R <= 1"), comp, verify_theorem_sp)?;
        }
        return b.conclude_r_le_one();
    }
    b.require("G is connected", Claim::Connected { of: Subgraph::Whole })?;
    if n % 2 == 1 {
        b.trace.case = Some(Case::OddOrder);
        let all: Vec<usize> = (0..n).collect();
        b.subproof("odd order: lemma for subcubic graphs of odd order", &all, check_lemma_odd)?;
        return b.conclude_r_le_one();
    }
    if n == 2 {
        b.trace.case = Some(Case::BaseN2);
        b.require("G = K2", Claim::IsomorphicToOneOf { graph6: vec![Graph::complete(2).to_graph6()] })?;
        return b.conclude_r_le_one();
    }
    if n == 4 {
        b.trace.case = Some(Case::BaseN4);
        b.note("these five graphs have lambda_2 at most 1 (the source text says \"at least\"); R <= 1 is certified directly");
        let five = five_graphs_on_four().iter().map(Graph::to_graph6).collect();
        b.require("G is one of P4, K_{1,3}, C4, paw, K4 - e", Claim::IsomorphicToOneOf { graph6: five })?;
        return b.conclude_r_le_one();
    }
    if g.is_cycle() {
        b.trace.case = Some(Case::Cycle);
        b.require("G is a cycle", Claim::IsCycle { expected: true })?;
        return b.conclude_r_le_one();
    }
    let cuts = g.cut_vertices();
    if let Some(&v) = cuts.iter().next() {
        b.trace.case = Some(Case::CutVertex);
        return cut_vertex_case(b, g, v);
    }
    b.trace.case = Some(Case::TwoConnected);
    two_connected_case(b, g)
}

/// Certifies `n1(H) ≤ bound` and the mirrored count for each component of
/// `G[set]`, with the matching sub-argument, and returns the summed bound.
fn bound_pieces(
    b: &mut TraceBuilder<'_>,
    g: &Graph,
    label: &str,
    set: &[usize],
) -> std::result::Result<i64, Stop> {
    let local = g.induced(&sorted(set.to_vec())).expect("set lies in host");
    let mut total = 0i64;
    for (i, comp) in local.graph.components().iter().enumerate() {
        let verts: Vec<usize> = comp.iter().map(|&c| local.original[c]).collect();
        let size = verts.len() as i64;
        let bound = if size % 2 == 1 {
            b.subproof(format!("{label} piece {i} (odd order {size}): R <= 1"), &verts, check_lemma_odd)?;
            (size - 1) / 2
        } else {
            b.subproof(format!("{label} piece {i} (even order {size}): induction"), &verts, verify_theorem_sp)?;
            (size - 2) / 2
        };
        let of = Subgraph::induced(verts.clone());
        b.require(format!("n1({label} piece {i}) <= {bound} (exact)"), Claim::CountAbove {
            of: of.clone(),
            threshold: Threshold::int(1),
            at_most: bound as usize,
        })?;
        b.require(format!("#(eigenvalues < -1) of {label} piece {i} <= {bound} (exact)"), Claim::CountBelow {
            of,
            threshold: Threshold::int(-1),
            at_most: bound as usize,
        })?;
        total += bound;
    }
    Ok(total)
}

fn lift_by_interlacing(
    b: &mut TraceBuilder<'_>,
    g: &Graph,
    removed: &[usize],
    piece_bounds: Vec<i64>,
) -> std::result::Result<(), Stop> {
    let n = g.order();
    let k = removed.len();
    let half = n / 2;
    // λ_{n/2 - k}(G - D) ≤ 1  ⇔  n1(G - D) ≤ n/2 - k - 1
    let rest_bound = half - k - 1;
    let rest: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    b.require(format!("sum of piece bounds <= {rest_bound}"), Claim::Arithmetic {
        terms: piece_bounds,
        bound: rest_bound as i64,
    })?;
    let of = Subgraph::induced(rest);
    b.require(format!("lambda_{{n/2-{k}}}(G - D) <= 1: n1(G - D) <= {rest_bound} (exact)"), Claim::CountAbove {
        of: of.clone(),
        threshold: Threshold::int(1),
        at_most: rest_bound,
    })?;
    b.require(format!("lambda_{{n/2+1}}(G - D) >= -1: #(< -1) <= {rest_bound} (exact)"), Claim::CountBelow {
        of,
        threshold: Threshold::int(-1),
        at_most: rest_bound,
    })?;
    b.require("interlacing for G - D", Claim::Interlacing { removed: removed.to_vec() })?;
    b.require("interlacing at +-1: counts of G exceed those of G - D by at most |D| (exact)", Claim::InterlacingCount {
        removed: removed.to_vec(),
        threshold: Threshold::int(1),
    })?;
    b.require("lambda_{n/2}(G) <= 1 (exact)", Claim::CountAbove {
        of: Subgraph::Whole,
        threshold: Threshold::int(1),
        at_most: half - 1,
    })?;
    b.require("lambda_{n/2+1}(G) >= -1 (exact)", Claim::CountBelow {
        of: Subgraph::Whole,
        threshold: Threshold::int(-1),
        at_most: half - 1,
    })?;
    b.conclude_r_le_one()
}

fn cut_vertex_case(b: &mut TraceBuilder<'_>, g: &Graph, v: usize) -> std::result::Result<(), Stop> {
    let n = g.order();
    b.name("v", v);
    b.require("v is a cut vertex", Claim::CutVertex { vertex: v })?;
    let comps = g.components_avoiding(&[v]);
    let g1 = comps
        .iter()
        .find(|c| c.len() % 2 == 1)
        .cloned()
        .ok_or(Stop::Failed)
        .or_else(|_| {
            b.require("G - v has a component of odd order", Claim::Arithmetic { terms: vec![1], bound: 0 })
                .map(|_| Vec::new())
        })?;
    let g2: Vec<usize> = (0..n).filter(|&w| w != v && !g1.contains(&w)).collect();
    b.name_set("G1", &g1);
    b.name_set("G2", &g2);
    b.require("G1 is a component of G - v", Claim::ComponentOf { removed: vec![v], component: g1.clone() })?;
    b.require("|G1| is odd", Claim::Parity { of: Subgraph::induced(g1.clone()), even: false })?;
    b.require("|G2| is even", Claim::Parity { of: Subgraph::induced(g2.clone()), even: true })?;
    b.require("G2 has one or two components", Claim::ComponentCount {
        of: Subgraph::induced(g2.clone()),
        at_least: 1,
        at_most: 2,
    })?;
    let b1 = bound_pieces(b, g, "G1", &g1)?;
    let b2 = bound_pieces(b, g, "G2", &g2)?;
    let size2 = g2.len() as i64;
    b.require(format!("n1(G2) <= (|G2| - 2)/2 = {}", (size2 - 2) / 2), Claim::Arithmetic {
        terms: vec![b2],
        bound: (size2 - 2) / 2,
    })?;
    lift_by_interlacing(b, g, &[v], vec![b1, b2])
}

/// Labels around an ear `P` of the longest cycle `C`.
struct EarLabels {
    u: usize,
    v: usize,
    u1: usize,
    u2: usize,
    v1: usize,
    v2: usize,
}

fn ear_labels(cycle: &[usize], u: usize, v: usize) -> EarLabels {
    let k = cycle.len();
    let pu = cycle.iter().position(|&w| w == u).unwrap();
    let pv = cycle.iter().position(|&w| w == v).unwrap();
    // arc 1 runs forward from u to v, arc 2 forward from v to u
    let mut l = EarLabels {
        u,
        v,
        u1: cycle[(pu + 1) % k],
        v1: cycle[(pv + k - 1) % k],
        u2: cycle[(pu + k - 1) % k],
        v2: cycle[(pv + 1) % k],
    };
    if l.u2 == l.v2 {
        std::mem::swap(&mut l.u1, &mut l.u2);
        std::mem::swap(&mut l.v1, &mut l.v2);
    }
    l
}

/// Shortest path with ends on `cycle`, inner vertices off it, and no edge of
/// it; ties broken lexicographically on the vertex sequence.
fn find_ear(g: &Graph, cycle: &[usize]) -> Option<Vec<usize>> {
    let on_cycle: Vec<bool> = (0..g.order()).map(|v| cycle.contains(&v)).collect();
    let c_edges = cycle_edges(cycle);
    let mut best: Option<Vec<usize>> = None;
    let mut starts = cycle.to_vec();
    starts.sort_unstable();
    for &s in &starts {
        // BFS over off-cycle vertices; parents chosen smallest-first
        let mut parent = vec![usize::MAX; g.order()];
        let mut frontier = vec![s];
        parent[s] = s;
        let mut found: Vec<Vec<usize>> = Vec::new();
        while !frontier.is_empty() && found.is_empty() {
            let mut next = Vec::new();
            for &x in &frontier {
                for &w in g.neighbors(x) {
                    if c_edges.contains(x, w) || w == s {
                        continue;
                    }
                    if on_cycle[w] {
                        let mut path = vec![w];
                        let mut cur = x;
                        while cur != s {
                            path.push(cur);
                            cur = parent[cur];
                        }
                        path.push(s);
                        path.reverse();
                        found.push(path);
                    } else if parent[w] == usize::MAX {
                        parent[w] = x;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        for path in found {
            let better = match &best {
                None => true,
                Some(b) => path.len() < b.len() || (path.len() == b.len() && path < *b),
            };
            if better {
                best = Some(path);
            }
        }
    }
    best
}

fn two_connected_case(b: &mut TraceBuilder<'_>, g: &Graph) -> std::result::Result<(), Stop> {
    let n = g.order();
    b.require("G has no cut vertex", Claim::NoCutVertex)?;
    b.require("G is not a cycle", Claim::IsCycle { expected: false })?;
    let cycle = longest_cycle(g)
        .map_err(|e| Stop::Inconclusive(e.to_string()))?
        .ok_or(Stop::Failed)
        .or_else(|_| b.require("G has a cycle", Claim::LongestCycleLength { length: 0 }).map(|_| Vec::new()))?;
    b.name_set("C", &cycle);
    b.require("C is a cycle of G", Claim::CycleInGraph { cycle: cycle.clone() })?;
    b.require(format!("C is a longest cycle (length {})", cycle.len()), Claim::LongestCycleLength {
        length: cycle.len(),
    })?;
    let Some(path) = find_ear(g, &cycle) else {
        return b.require("an ear of C exists", Claim::Arithmetic { terms: vec![1], bound: 0 });
    };
    b.name_set("P", &path);
    b.require("P joins two vertices of C and uses no edge of C", Claim::Ear {
        cycle: cycle.clone(),
        path: path.clone(),
    })?;
    let labels = ear_labels(&cycle, path[0], *path.last().unwrap());
    let EarLabels { u, v, u1, u2, v1, v2 } = labels;
    for (key, x) in [("u", u), ("v", v), ("u1", u1), ("u2", u2), ("v1", v1), ("v2", v2)] {
        b.name(key, x);
    }
    b.require("u1, u2 are the cycle neighbors of u", Claim::CycleNeighbors {
        cycle: cycle.clone(),
        vertex: u,
        neighbors: [u1, u2],
    })?;
    b.require("v1, v2 are the cycle neighbors of v", Claim::CycleNeighbors {
        cycle: cycle.clone(),
        vertex: v,
        neighbors: [v1, v2],
    })?;
    b.require("a u1-v1 path in C avoids u and v", Claim::ArcAvoiding {
        cycle: cycle.clone(),
        from: u1,
        to: v1,
        avoid: vec![u, v],
    })?;
    if u1 == v1 && u2 == v2 {
        b.note("u1 = v1 and u2 = v2: the argument reduces to the K_{2,3} case");
        let all: Vec<usize> = (0..n).collect();
        b.subproof("K_{2,3} argument", &all, verify_theorem_k23)?;
        return b.conclude_r_le_one();
    }
    b.require("u2 != v2", Claim::Distinct { a: u2, b: v2 })?;

    b.require("Claim 1: G - {u2, v} is disconnected", Claim::Disconnected { removed: vec![u2, v] })?;
    let w_set = g
        .components_avoiding(&[u2, v])
        .into_iter()
        .find(|c| c.contains(&u))
        .expect("u survives the deletion");
    b.name_set("W", &w_set);
    b.require("W is the component of G - {u2, v} containing u", Claim::ComponentOf {
        removed: vec![u2, v],
        component: w_set.clone(),
    })?;
    b.require("u in W", Claim::Member { set: w_set.clone(), vertex: u })?;

    let adjacent = g.has_edge(u, v);
    let w_minus_u: Vec<usize> = w_set.iter().copied().filter(|&x| x != u).collect();
    b.require(
        if adjacent { "u is adjacent to v" } else { "u is not adjacent to v" },
        Claim::Adjacent { a: u, b: v, expected: adjacent },
    )?;
    let expected = if adjacent { 1 } else { 2 };
    b.require(format!("Claim 2: G[W - u] has exactly {expected} component(s)"), Claim::ComponentCount {
        of: Subgraph::induced(w_minus_u.clone()),
        at_least: expected,
        at_most: expected,
    })?;
    let (removed, statement) = if adjacent {
        (vec![u, u2, v], "Claim 2: G[W - u] is a component of G - {u, u2, v}")
    } else {
        (vec![u, v], "Claim 2: each component of G[W - u] is a component of G - {u, v}")
    };
    let local = g.induced(&w_minus_u).expect("subset of host");
    for comp in local.graph.components() {
        let verts: Vec<usize> = comp.iter().map(|&c| local.original[c]).collect();
        b.require(statement, Claim::ComponentOf { removed: removed.clone(), component: verts })?;
    }

    let (g1, x) = if w_set.len() % 2 == 0 { (w_set.clone(), u2) } else { (w_minus_u, u) };
    b.name("x", x);
    b.name_set("G1", &g1);
    b.note("the final count deletes {x, v}, matching G2 := G - {x, v} - V(G1)");
    b.require("|G1| is even", Claim::Parity { of: Subgraph::induced(g1.clone()), even: true })?;
    let local = g.induced(&g1).expect("subset of host");
    for comp in local.graph.components() {
        let verts: Vec<usize> = comp.iter().map(|&c| local.original[c]).collect();
        b.require("each component of G1 is a component of G - {x, v}", Claim::ComponentOf {
            removed: vec![x, v],
            component: verts,
        })?;
    }
    let g2: Vec<usize> = (0..n).filter(|&w| w != x && w != v && !g1.contains(&w)).collect();
    b.name_set("G2", &g2);
    b.require("|G2| is even", Claim::Parity { of: Subgraph::induced(g2.clone()), even: true })?;
    b.require("v2 in G2", Claim::Member { set: g2.clone(), vertex: v2 })?;
    b.require("G2 has one or two components", Claim::ComponentCount {
        of: Subgraph::induced(g2.clone()),
        at_least: 1,
        at_most: 2,
    })?;
    let b1 = bound_pieces(b, g, "G1", &g1)?;
    let size1 = g1.len() as i64;
    b.require(format!("n1(G1) <= (|G1| - 2)/2 = {}", (size1 - 2) / 2), Claim::Arithmetic {
        terms: vec![b1],
        bound: (size1 - 2) / 2,
    })?;
    let b2 = bound_pieces(b, g, "G2", &g2)?;
    let size2 = g2.len() as i64;
    b.require(format!("n1(G2) <= (|G2| - 2)/2 = {}", (size2 - 2) / 2), Claim::Arithmetic {
        terms: vec![b2],
        bound: (size2 - 2) / 2,
    })?;
    lift_by_interlacing(b, g, &[x, v], vec![b1, b2])
}
