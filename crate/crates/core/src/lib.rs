//! HL-index toolkit: median adjacency eigenvalues of simple graphs, exact
//! eigenvalue-count certificates, series-parallel recognition, and
//! executable replays of the `R(G) ≤ 1` arguments for subcubic graphs.

pub mod canon;
pub mod enumeration;
pub mod error;
pub mod exact;
pub mod graph;
pub mod proofs;
pub mod report;
pub mod spectra;
pub mod structure;

pub use error::{Error, Result};
pub use exact::Threshold;
pub use graph::{parse_graph6, to_graph6, EdgeSet, Graph, Multigraph, Relabeled};
pub use spectra::{
    certify_r_le, check_edge_partition_bounds, check_interlacing, count_at_threshold, hl_index,
    hl_index_floating,
    spectrum, Certificate, HlIndex, InertiaCount, Spectrum,
};
pub use proofs::{
    check_lemma_odd, check_lemma_twins, check_lemma_unbalanced, verify_theorem_k23,
    verify_theorem_sp, Case, Claim, TheoremId, Verdict, WitnessTrace,
};
pub use report::{survey_conjecture, InputId, Predicates, SurveyRecord, SurveySummary, VerificationReport};
