use std::io::{self, BufReader};
use std::path::PathBuf;

use anyhow::{bail, Context};
use hlspec_core::enumeration::{enumerate, ingest_reader, GenSpec};
use hlspec_core::{Graph, InputId};

pub struct Input {
    pub id: InputId,
    pub graph: Graph,
}

/// Reads graph6 lines from `files` (standard input when empty or `-`).
///
/// Malformed lines abort in strict mode and are skipped with a warning
/// otherwise. Order-0 graphs are treated the same way.
pub fn read_graph6(files: &[PathBuf], strict: bool) -> anyhow::Result<Vec<Input>> {
    let stdin = [PathBuf::from("-")];
    let files = if files.is_empty() { &stdin[..] } else { files };
    let mut out = Vec::new();
    for path in files {
        let (source, entries) = if path.as_os_str() == "-" {
            ("stdin".to_string(), ingest_reader(io::stdin().lock()).context("reading standard input")?)
        } else {
            let file = std::fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
            let entries = ingest_reader(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))?;
            (path.display().to_string(), entries)
        };
        for entry in entries {
            let problem = match &entry.graph {
                Ok(g) if g.order() == 0 => Some("graph has no vertices".to_string()),
                Ok(_) => None,
                Err(e) => Some(e.to_string()),
            };
            if let Some(problem) = problem {
                if strict {
                    bail!("{source}:{}: {problem}", entry.line);
                }
                eprintln!("warning: {source}:{}: skipped: {problem}", entry.line);
                continue;
            }
            let id = InputId { graph6: entry.text, line: Some(entry.line), source: Some(source.clone()) };
            out.push(Input { id, graph: entry.graph.expect("checked above") });
        }
    }
    Ok(out)
}

pub fn generated(spec: &GenSpec) -> anyhow::Result<Vec<Input>> {
    let source = format!("gen:{spec}");
    Ok(enumerate(spec)?
        .into_iter()
        .enumerate()
        .map(|(i, graph)| Input {
            id: InputId { graph6: graph.to_graph6(), line: Some(i + 1), source: Some(source.clone()) },
            graph,
        })
        .collect())
}
