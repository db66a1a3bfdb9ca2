//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any criterion fails.

use std::process::Command;
use std::time::Instant;

use hlspec_core::canon::canonical_key;
use hlspec_core::enumeration::{enumerate, Filter, GenSpec};
use hlspec_core::proofs::{check_lemma_odd, check_lemma_twins, verify_theorem_k23, verify_theorem_sp, Verdict};
use hlspec_core::structure::{brute_force_has_k4_minor, find_twins, is_k4_minor_free};
use hlspec_core::{certify_r_le, check_interlacing, hl_index, Certificate, Graph, Threshold, WitnessTrace};
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gen(spec: GenSpec) -> Result<Vec<Graph>, String> {
    enumerate(&spec).map_err(|e| e.to_string())
}

fn replayable(g: &Graph, t: &WitnessTrace) -> Result<(), String> {
    t.recheck(g).map_err(|e| format!("{}: {e}", g.to_graph6()))?;
    let json = serde_json::to_string(t).map_err(|e| e.to_string())?;
    let back: WitnessTrace = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    back.recheck(g).map_err(|e| format!("{} after JSON round trip: {e}", g.to_graph6()))
}

fn one() -> Threshold {
    Threshold::int(1)
}

/// Connected K4-minor-free subcubic graphs, n ≤ 10: exact R ≤ 1 and a
/// passing, replayable trace for each.
fn criterion_1() -> Outcome {
    let mut total = 0;
    for n in 1..=10 {
        for g in gen(GenSpec::new(n).connected().filter(Filter::K4MinorFree))? {
            total += 1;
            ensure(certify_r_le(&g, &one()), || format!("{} not certified R <= 1", g.to_graph6()))?;
            let t = verify_theorem_sp(&g);
            ensure(t.verdict == Verdict::Pass, || format!("{}: {:?}", g.to_graph6(), t.failure_detail()))?;
            replayable(&g, &t)?;
        }
    }
    Ok(format!("{total} graphs, all certified and replayed"))
}

/// Subcubic graphs containing K_{2,3}, n ≤ 10.
fn criterion_2() -> Outcome {
    let mut total = 0;
    for n in 5..=10 {
        for g in gen(GenSpec::new(n).filter(Filter::ContainsK23))? {
            total += 1;
            ensure(certify_r_le(&g, &one()), || format!("{} not certified R <= 1", g.to_graph6()))?;
            let t = verify_theorem_k23(&g);
            ensure(t.verdict == Verdict::Pass, || format!("{}: {:?}", g.to_graph6(), t.failure_detail()))?;
            replayable(&g, &t)?;
        }
    }
    Ok(format!("{total} graphs"))
}

/// Connected subcubic graphs, n ≤ 10: R ≤ √2 with exact arithmetic in Q(√2).
fn criterion_3() -> Outcome {
    let mut total = 0;
    let sqrt2 = Threshold::sqrt2();
    for n in 1..=10 {
        for g in gen(GenSpec::new(n).connected())? {
            total += 1;
            ensure(certify_r_le(&g, &sqrt2), || format!("{} not certified R <= sqrt2", g.to_graph6()))?;
        }
    }
    Ok(format!("{total} graphs certified at threshold sqrt2"))
}

/// Incidence graph of the Fano plane, built from its lines.
fn heawood_from_fano() -> Graph {
    let mut edges = Vec::new();
    for line in 0..7 {
        for offset in [0, 1, 3] {
            edges.push(((line + offset) % 7, 7 + line));
        }
    }
    Graph::from_edges(14, &edges).unwrap()
}

fn criterion_4() -> Outcome {
    let g = heawood_from_fano();
    ensure(g.is_subcubic() && g.is_bipartite() && g.size() == 21, || "Fano incidence graph malformed".into())?;
    let hl = hl_index(&g);
    let err = (hl.value - 2f64.sqrt()).abs();
    ensure(err < 1e-9, || format!("R = {} differs from sqrt2 by {err:e}", hl.value))?;
    ensure(hl.exact_le_one == Certificate::CertifiedGt, || "R > 1 not certified".into())?;
    ensure(certify_r_le(&g, &Threshold::sqrt2()), || "R <= sqrt2 not certified".into())?;
    ensure(canonical_key(&g) == canonical_key(&Graph::heawood()), || "built-in Heawood graph differs".into())?;
    Ok(format!("R = {:.12}, |R - sqrt2| = {err:.1e}, certified > 1", hl.value))
}

fn criterion_5() -> Outcome {
    let count = gen(GenSpec::new(4).connected().filter(Filter::K4MinorFree))?.len();
    ensure(count == 5, || format!("{count} classes"))?;
    Ok("5 classes".into())
}

/// Reducer against branch-set search on every graph with n ≤ 7.
fn criterion_6() -> Outcome {
    // graphs on n unlabeled vertices
    let expected = [1, 2, 4, 11, 34, 156, 1044];
    let mut total = 0;
    let mut disagreements = Vec::new();
    for n in 1..=7 {
        let all = gen(GenSpec::new(n).max_degree(n - 1))?;
        ensure(all.len() == expected[n - 1], || format!("n={n}: {} graphs, expected {}", all.len(), expected[n - 1]))?;
        for g in all {
            total += 1;
            let brute = brute_force_has_k4_minor(&g).map_err(|e| e.to_string())?;
            if is_k4_minor_free(&g).0 == brute {
                disagreements.push(g.to_graph6());
            }
        }
    }
    ensure(disagreements.is_empty(), || format!("disagreements: {disagreements:?}"))?;
    Ok(format!("{total} graphs, 0 disagreements"))
}

fn criterion_7() -> Outcome {
    let mut odd = 0;
    for n in [3, 5, 7, 9] {
        for g in gen(GenSpec::new(n))? {
            odd += 1;
            let t = check_lemma_odd(&g);
            ensure(t.verdict == Verdict::Pass, || format!("odd lemma on {}", g.to_graph6()))?;
            replayable(&g, &t)?;
        }
    }
    let mut twins = 0;
    for n in 1..=8 {
        for g in gen(GenSpec::new(n).max_degree(n.saturating_sub(1)).filter(Filter::Bipartite))? {
            if find_twins(&g).is_empty() {
                continue;
            }
            twins += 1;
            let t = check_lemma_twins(&g);
            ensure(t.verdict == Verdict::Pass, || format!("twins lemma on {}", g.to_graph6()))?;
            replayable(&g, &t)?;
            ensure(certify_r_le(&g, &Threshold::int(0)), || format!("R = 0 not certified on {}", g.to_graph6()))?;
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut worst = f64::INFINITY;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.9);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let k = rng.gen_range(1..n);
        let mut removed: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = rng.gen_range(i..n);
            removed.swap(i, j);
        }
        removed.truncate(k);
        let c = check_interlacing(&g, &removed).map_err(|e| e.to_string())?;
        worst = worst.min(c.worst_slack);
        ensure(c.holds, || format!("interlacing violated on {} minus {removed:?}", g.to_graph6()))?;
    }
    Ok(format!(
        "odd lemma {odd} graphs, twins lemma {twins} graphs, interlacing 1000 instances (worst slack {worst:.1e})"
    ))
}

fn criterion_8() -> Outcome {
    let heawood = canonical_key(&heawood_from_fano());
    let mut total = 0;
    for n in 1..=12 {
        for g in gen(GenSpec::new(n).connected().filter(Filter::Bipartite))? {
            if g.order() <= 16 && canonical_key(&g) == heawood {
                continue;
            }
            total += 1;
            ensure(certify_r_le(&g, &one()), || format!("{} not certified R <= 1", g.to_graph6()))?;
        }
    }
    Ok(format!("{total} graphs certified R <= 1"))
}

/// `hlspec verify` output is byte-identical for 1, 2 and 8 workers.
fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let corpus = dir.path().join("corpus.g6");
    let mut lines = String::new();
    for spec in [GenSpec::new(8).connected(), GenSpec::new(10).connected().filter(Filter::K4MinorFree)] {
        for g in gen(spec)? {
            lines.push_str(&g.to_graph6());
            lines.push('\n');
        }
    }
    std::fs::write(&corpus, lines).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for target in ["survey", "sp", "k23"] {
        let mut outputs = Vec::new();
        for jobs in ["1", "2", "8"] {
            let out = Command::new(env!("CARGO_BIN_EXE_hlspec"))
                .args(["verify", target, "--witness", "--jobs", jobs])
                .arg(&corpus)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("{target} with {jobs} jobs exited {}", out.status))?;
            outputs.push(out.stdout);
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{target}: outputs differ across job counts"))?;
        checked += outputs[0].len();
    }
    Ok(format!("3 targets x jobs 1, 2, 8 identical ({checked} bytes each run set)"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("K4-minor-free subcubic, n <= 10: R <= 1 with replayable traces", criterion_1),
        ("subcubic with K_{2,3}, n <= 10: R <= 1", criterion_2),
        ("connected subcubic, n <= 10: R <= sqrt2 exactly", criterion_3),
        ("Heawood graph: R = sqrt2, certified > 1", criterion_4),
        ("connected K4-minor-free subcubic classes on 4 vertices", criterion_5),
        ("series-parallel reducer vs brute-force minor search, n <= 7", criterion_6),
        ("lemma suite and interlacing", criterion_7),
        ("bipartite connected subcubic, n <= 12, except Heawood: R <= 1", criterion_8),
        ("determinism across worker counts", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.1} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({secs:.1} s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
