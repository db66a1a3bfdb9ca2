//! Per-graph verification records and survey aggregation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_key;
use crate::exact::Threshold;
use crate::graph::{Graph, GRAPH6_MAX_ORDER};
use crate::proofs::{verify, TheoremId, Verdict, WitnessTrace};
use crate::spectra::{certify_r_le, hl_index_floating, Certificate};
use crate::structure::{find_k23, is_k4_minor_free};

/// Where a graph came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputId {
    pub graph6: String,
    /// 1-based line in the source, when read from a stream.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl InputId {
    pub fn of(g: &Graph) -> Self {
        InputId { graph6: g.to_graph6(), line: None, source: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub subcubic: bool,
    pub connected: bool,
    pub bipartite: bool,
    pub k4_minor_free: bool,
    pub contains_k23: bool,
}

impl Predicates {
    pub fn of(g: &Graph) -> Self {
        Predicates {
            subcubic: g.is_subcubic(),
            connected: g.is_connected(),
            bipartite: g.is_bipartite(),
            k4_minor_free: is_k4_minor_free(g).0,
            contains_k23: find_k23(g).is_some(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: InputId,
    pub n: usize,
    pub m: usize,
    pub predicates: Predicates,
    /// Floating HL-index.
    pub r: f64,
    pub h: usize,
    pub l: usize,
    pub lambda_h: f64,
    pub lambda_l: f64,
    pub r_le_1: Certificate,
    pub r_le_sqrt2: Certificate,
    /// Isomorphic to the Heawood graph.
    pub heawood: bool,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub verdicts: BTreeMap<TheoremId, Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub witness: BTreeMap<TheoremId, WitnessTrace>,
    /// Per-graph wall time; left empty unless asked for, so that output is
    /// reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

impl VerificationReport {
    /// Spectrum, certificates and predicates, plus the given verifiers.
    pub fn build(g: &Graph, id: InputId, theorems: &[TheoremId], with_witness: bool) -> Self {
        assert!(g.order() >= 1, "reports need at least one vertex");
        let hl = hl_index_floating(g);
        let heawood = g.order() == 14 && canonical_key(g) == canonical_key(&Graph::heawood());
        let mut report = VerificationReport {
            id,
            n: g.order(),
            m: g.size(),
            predicates: Predicates::of(g),
            r: hl.value,
            h: hl.h,
            l: hl.l,
            lambda_h: hl.lambda_h,
            lambda_l: hl.lambda_l,
            r_le_1: Certificate::from_bool(certify_r_le(g, &Threshold::int(1))),
            r_le_sqrt2: Certificate::from_bool(certify_r_le(g, &Threshold::sqrt2())),
            heawood,
            verdicts: BTreeMap::new(),
            failure: None,
            witness: BTreeMap::new(),
            micros: None,
        };
        for &t in theorems {
            let trace = verify(t, g);
            report.verdicts.insert(t, trace.verdict);
            if trace.verdict == Verdict::Fail && report.failure.is_none() {
                report.failure = trace.failure_detail().map(|f| format!("{}: {f}", t.name()));
            }
            // failures always carry their trace
            if with_witness || trace.verdict == Verdict::Fail {
                report.witness.insert(t, trace);
            }
        }
        report
    }

    pub fn failed(&self) -> bool {
        self.verdicts.values().any(|v| *v == Verdict::Fail)
    }

    /// Certified `R ≤ 1` must agree with the floating value.
    pub fn is_consistent(&self) -> bool {
        let le1 = self.r_le_1 != Certificate::CertifiedLe || self.r <= 1.0 + 1e-6;
        let le2 = self.r_le_sqrt2 != Certificate::CertifiedLe || self.r <= std::f64::consts::SQRT_2 + 1e-6;
        le1 && le2
    }
}

/// Outcome of surveying one input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "record")]
pub enum SurveyRecord {
    Report(Box<VerificationReport>),
    Skipped { id: InputId, reason: String },
}

/// Theorems run on each graph in a survey when their hypotheses hold.
pub const SURVEY_THEOREMS: [TheoremId; 2] = [TheoremId::K23, TheoremId::Sp];

/// Survey record for one graph: spectrum, certificates, predicates and the
/// verdicts of whichever theorems apply.
pub fn survey_one(g: &Graph, id: InputId, with_witness: bool) -> SurveyRecord {
    if !g.is_subcubic() {
        return SurveyRecord::Skipped { id, reason: format!("max degree {} exceeds 3", g.max_degree()) };
    }
    if g.order() == 0 {
        return SurveyRecord::Skipped { id, reason: "empty graph".into() };
    }
    let preds = Predicates::of(g);
    let theorems: Vec<TheoremId> = SURVEY_THEOREMS
        .into_iter()
        .filter(|t| match t {
            TheoremId::K23 => preds.contains_k23,
            _ => preds.k4_minor_free,
        })
        .collect();
    SurveyRecord::Report(Box::new(VerificationReport::build(g, id, &theorems, with_witness)))
}

/// Surveys a stream of graphs in order and returns the records with their
/// aggregate.
pub fn survey_conjecture(
    corpus: impl IntoIterator<Item = (InputId, Graph)>,
) -> (Vec<SurveyRecord>, SurveySummary) {
    let mut summary = SurveySummary::default();
    let records: Vec<SurveyRecord> = corpus
        .into_iter()
        .map(|(id, g)| {
            let rec = survey_one(&g, id, false);
            summary.add(&rec);
            rec
        })
        .collect();
    (records, summary)
}

/// Totals over a batch of records.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SurveySummary {
    pub graphs: usize,
    pub skipped: usize,
    pub max_r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_r_graph6: Option<String>,
    pub certified_le_1: usize,
    pub certified_le_sqrt2: usize,
    pub bipartite: usize,
    pub k4_minor_free: usize,
    pub contains_k23: usize,
    pub heawood: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub inconclusive: usize,
}

impl SurveySummary {
    pub fn add(&mut self, record: &SurveyRecord) {
        match record {
            SurveyRecord::Skipped { .. } => self.skipped += 1,
            SurveyRecord::Report(r) => self.add_report(r),
        }
    }

    pub fn add_report(&mut self, r: &VerificationReport) {
        self.graphs += 1;
        if self.max_r.is_none_or(|m| r.r > m) {
            self.max_r = Some(r.r);
            self.max_r_graph6 = (r.n <= GRAPH6_MAX_ORDER).then(|| r.id.graph6.clone());
        }
        self.certified_le_1 += (r.r_le_1 == Certificate::CertifiedLe) as usize;
        self.certified_le_sqrt2 += (r.r_le_sqrt2 == Certificate::CertifiedLe) as usize;
        self.bipartite += r.predicates.bipartite as usize;
        self.k4_minor_free += r.predicates.k4_minor_free as usize;
        self.contains_k23 += r.predicates.contains_k23 as usize;
        self.heawood += r.heawood as usize;
        for v in r.verdicts.values() {
            match v {
                Verdict::Pass => self.pass += 1,
                Verdict::Fail => self.fail += 1,
                Verdict::NotApplicable => self.not_applicable += 1,
                Verdict::Inconclusive => self.inconclusive += 1,
            }
        }
    }
}
