//! `hlspec`: HL-index certificates, theorem replays, and small-graph
//! generation from the command line.
//!
//! Exit codes: 0 when every verdict passes, 1 when any verifier reports a
//! failed step, 2 for usage or input errors.

mod input;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use hlspec_core::enumeration::{Filter, GenSpec};
use hlspec_core::report::survey_one;
use hlspec_core::structure::{find_k23, find_twins, is_k4_minor_free, K23Embedding, SpReductionTrace};
use hlspec_core::{
    certify_r_le, hl_index_floating, Certificate, InputId, SurveyRecord, SurveySummary, TheoremId,
    Threshold, VerificationReport,
};
use rayon::prelude::*;
use serde::Serialize;

use input::Input;

#[derive(Parser)]
#[command(name = "hlspec", version, about = "Median eigenvalue (HL-index) toolkit for subcubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// HL-index and exact R <= 1, R <= sqrt2 certificates per graph
    Hl(SourceArgs),
    /// Replay a theorem or lemma on each graph, or survey predicates and R
    Verify(VerifyArgs),
    /// Generate graphs up to isomorphism as graph6 lines
    Gen(GenArgs),
    /// Report structural predicates per graph
    Recognize(RecognizeArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// graph6 files, one graph per line; standard input when omitted or "-"
    files: Vec<PathBuf>,
    /// Fail with exit code 2 on the first malformed line instead of skipping it
    #[arg(long)]
    strict: bool,
    /// Worker threads (output order does not depend on this)
    #[arg(long, env = "HLSPEC_JOBS")]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    K23,
    Sp,
    LemmaOdd,
    LemmaTwins,
    LemmaUnbalanced,
    Survey,
}

impl Target {
    fn theorem(self) -> Option<TheoremId> {
        match self {
            Target::K23 => Some(TheoremId::K23),
            Target::Sp => Some(TheoremId::Sp),
            Target::LemmaOdd => Some(TheoremId::LemmaOdd),
            Target::LemmaTwins => Some(TheoremId::LemmaTwins),
            Target::LemmaUnbalanced => Some(TheoremId::LemmaUnbalanced),
            Target::Survey => None,
        }
    }

    fn name(self) -> &'static str {
        self.theorem().map_or("survey", TheoremId::name)
    }
}

#[derive(Args)]
struct VerifyArgs {
    target: Target,
    #[command(flatten)]
    source: SourceArgs,
    /// Generate the inputs instead of reading them, e.g. n=8,connected,k4-minor-free
    #[arg(long, value_name = "SPEC", conflicts_with = "files")]
    gen: Option<GenSpec>,
    /// Embed the full witness trace in every report
    #[arg(long)]
    witness: bool,
    /// Emit a CSV table instead of JSON lines
    #[arg(long)]
    csv: bool,
    /// Record per-graph wall time (output is then no longer reproducible)
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Order and options, e.g. n=8 or n=8,connected,k4-minor-free
    spec: GenSpec,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    k4_minor_free: bool,
    #[arg(long)]
    contains_k23: bool,
    #[arg(long)]
    bipartite: bool,
    #[arg(long)]
    even_order: bool,
}

#[derive(Args)]
struct RecognizeArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Include the series-parallel reduction trace
    #[arg(long)]
    trace: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            if is_broken_pipe(&err) {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain()
        .any(|e| e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Hl(args) => cmd_hl(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Recognize(args) => cmd_recognize(args),
    }
}

/// Maps `f` over `items` on `jobs` threads, keeping input order.
fn parallel_map<T: Sync, R: Send>(
    jobs: Option<usize>,
    items: &[T],
    f: impl Fn(&T) -> R + Sync + Send,
) -> anyhow::Result<Vec<R>> {
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        anyhow::bail!("--jobs must be at least 1");
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(|| items.par_iter().map(f).collect()))
}

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

fn write_json_line(out: &mut impl Write, value: &impl Serialize) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

#[derive(Serialize)]
struct HlRecord<'a> {
    id: &'a InputId,
    n: usize,
    m: usize,
    r: f64,
    h: usize,
    l: usize,
    lambda_h: f64,
    lambda_l: f64,
    r_le_1: Certificate,
    r_le_sqrt2: Certificate,
}

fn cmd_hl(args: SourceArgs) -> anyhow::Result<ExitCode> {
    let inputs = input::read_graph6(&args.files, args.strict)?;
    let lines = parallel_map(args.jobs, &inputs, |inp| {
        let g = &inp.graph;
        let hl = hl_index_floating(g);
        let record = HlRecord {
            id: &inp.id,
            n: g.order(),
            m: g.size(),
            r: hl.value,
            h: hl.h,
            l: hl.l,
            lambda_h: hl.lambda_h,
            lambda_l: hl.lambda_l,
            r_le_1: Certificate::from_bool(certify_r_le(g, &Threshold::int(1))),
            r_le_sqrt2: Certificate::from_bool(certify_r_le(g, &Threshold::sqrt2())),
        };
        serde_json::to_string(&record)
    })?;
    let mut out = stdout();
    for line in lines {
        writeln!(out, "{}", line?)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let inputs = match &args.gen {
        Some(spec) => input::generated(spec)?,
        None => input::read_graph6(&args.source.files, args.source.strict)?,
    };
    let target = args.target;
    let records = parallel_map(args.source.jobs, &inputs, |inp| {
        let t0 = Instant::now();
        let mut record = match target.theorem() {
            Some(t) => SurveyRecord::Report(Box::new(VerificationReport::build(
                &inp.graph,
                inp.id.clone(),
                &[t],
                args.witness,
            ))),
            None => survey_one(&inp.graph, inp.id.clone(), args.witness),
        };
        if let (true, SurveyRecord::Report(r)) = (args.timing, &mut record) {
            r.micros = Some(t0.elapsed().as_micros() as u64);
        }
        record
    })?;

    let mut summary = SurveySummary::default();
    let mut out = stdout();
    if args.csv {
        write_csv(&mut out, &records)?;
    }
    for record in &records {
        summary.add(record);
        match record {
            SurveyRecord::Skipped { id, reason } => {
                eprintln!("warning: {}: skipped: {reason}", describe(id));
            }
            SurveyRecord::Report(r) if r.failed() => {
                eprintln!("FAIL {}: {}", describe(&r.id), r.failure.as_deref().unwrap_or("verifier failed"));
            }
            _ => {}
        }
        if !args.csv {
            write_json_line(&mut out, record)?;
        }
    }
    if !args.csv {
        write_json_line(
            &mut out,
            &serde_json::json!({ "record": "summary", "target": target.name(), "summary": summary }),
        )?;
    }
    out.flush()?;
    eprintln!(
        "{}: {} graphs, {} skipped, pass {}, fail {}, not applicable {}, inconclusive {}, max R {}, {:.3} s",
        target.name(),
        summary.graphs,
        summary.skipped,
        summary.pass,
        summary.fail,
        summary.not_applicable,
        summary.inconclusive,
        summary.max_r.map_or("-".to_string(), |r| format!("{r:.9}")),
        started.elapsed().as_secs_f64(),
    );
    Ok(ExitCode::from(verify_exit_code(&summary)))
}

/// Failed verdicts exit 1; inconclusive and not-applicable ones do not.
fn verify_exit_code(summary: &SurveySummary) -> u8 {
    u8::from(summary.fail > 0)
}

fn describe(id: &InputId) -> String {
    match (&id.source, id.line) {
        (Some(s), Some(l)) => format!("{s}:{l} {}", id.graph6),
        _ => id.graph6.clone(),
    }
}

fn write_csv(out: &mut impl Write, records: &[SurveyRecord]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "source", "line", "graph6", "n", "m", "r", "lambda_h", "lambda_l", "r_le_1", "r_le_sqrt2", "bipartite",
        "k4_minor_free", "contains_k23", "heawood", "verdicts",
    ])?;
    let cert = |c: Certificate| serde_json::to_value(c).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    for record in records {
        let SurveyRecord::Report(r) = record else { continue };
        let verdicts: Vec<String> = r
            .verdicts
            .iter()
            .map(|(t, v)| format!("{}={}", t.name(), serde_json::to_value(v).unwrap().as_str().unwrap()))
            .collect();
        w.write_record([
            r.id.source.clone().unwrap_or_default(),
            r.id.line.map(|l| l.to_string()).unwrap_or_default(),
            r.id.graph6.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.r.to_string(),
            r.lambda_h.to_string(),
            r.lambda_l.to_string(),
            cert(r.r_le_1),
            cert(r.r_le_sqrt2),
            r.predicates.bipartite.to_string(),
            r.predicates.k4_minor_free.to_string(),
            r.predicates.contains_k23.to_string(),
            r.heawood.to_string(),
            verdicts.join(";"),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_gen(args: GenArgs) -> anyhow::Result<ExitCode> {
    let mut spec = args.spec;
    spec.connected |= args.connected;
    if let Some(d) = args.max_degree {
        spec.max_degree = d;
    }
    for (on, f) in [
        (args.k4_minor_free, Filter::K4MinorFree),
        (args.contains_k23, Filter::ContainsK23),
        (args.bipartite, Filter::Bipartite),
        (args.even_order, Filter::EvenOrder),
    ] {
        if on {
            spec = spec.filter(f);
        }
    }
    let graphs = hlspec_core::enumeration::enumerate(&spec).with_context(|| format!("generating {spec}"))?;
    let mut out = stdout();
    for g in graphs {
        writeln!(out, "{}", g.to_graph6())?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct RecognizeRecord<'a> {
    id: &'a InputId,
    n: usize,
    m: usize,
    max_degree: usize,
    subcubic: bool,
    connected: bool,
    bipartite: bool,
    k4_minor_free: bool,
    contains_k23: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    k23: Option<K23Embedding>,
    twin_pairs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduction: Option<SpReductionTrace>,
}

fn cmd_recognize(args: RecognizeArgs) -> anyhow::Result<ExitCode> {
    let inputs = input::read_graph6(&args.source.files, args.source.strict)?;
    let lines = parallel_map(args.source.jobs, &inputs, |inp: &Input| {
        let g = &inp.graph;
        let (free, trace) = is_k4_minor_free(g);
        let k23 = find_k23(g);
        serde_json::to_string(&RecognizeRecord {
            id: &inp.id,
            n: g.order(),
            m: g.size(),
            max_degree: g.max_degree(),
            subcubic: g.is_subcubic(),
            connected: g.is_connected(),
            bipartite: g.is_bipartite(),
            k4_minor_free: free,
            contains_k23: k23.is_some(),
            k23,
            twin_pairs: find_twins(g).len(),
            reduction: args.trace.then_some(trace),
        })
    })?;
    let mut out = stdout();
    for line in lines {
        writeln!(out, "{}", line?)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_map_to_exit_one() {
        let mut s = SurveySummary { pass: 3, inconclusive: 1, not_applicable: 2, ..Default::default() };
        assert_eq!(verify_exit_code(&s), 0);
        s.fail = 1;
        assert_eq!(verify_exit_code(&s), 1);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
