//! Exhaustive generation of small graphs up to isomorphism, and graph6
//! corpus ingestion.

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key_masks, decode, CanonKey};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};
use crate::structure::{find_k23, is_k4_minor_free};

/// Hard cap on natively generated orders.
pub const MAX_GEN_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    K4MinorFree,
    ContainsK23,
    Bipartite,
    EvenOrder,
}

impl Filter {
    pub fn name(self) -> &'static str {
        match self {
            Filter::K4MinorFree => "k4-minor-free",
            Filter::ContainsK23 => "contains-k23",
            Filter::Bipartite => "bipartite",
            Filter::EvenOrder => "even-order",
        }
    }

    /// Closed under deleting a vertex.
    fn hereditary(self) -> bool {
        matches!(self, Filter::K4MinorFree | Filter::Bipartite)
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::K4MinorFree => is_k4_minor_free(g).0,
            Filter::ContainsK23 => find_k23(g).is_some(),
            Filter::Bipartite => g.is_bipartite(),
            Filter::EvenOrder => g.order().is_multiple_of(2),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "k4-minor-free" | "sp" => Ok(Filter::K4MinorFree),
            "contains-k23" | "k23" => Ok(Filter::ContainsK23),
            "bipartite" => Ok(Filter::Bipartite),
            "even-order" | "even" => Ok(Filter::EvenOrder),
            other => Err(Error::GenSpec(format!("unknown filter {other:?}"))),
        }
    }
}

/// What to generate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub connected: bool,
    pub max_degree: usize,
    pub filters: Vec<Filter>,
}

impl GenSpec {
    pub fn new(n: usize) -> Self {
        GenSpec { n, connected: false, max_degree: 3, filters: Vec::new() }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = d;
        self
    }

    pub fn filter(mut self, f: Filter) -> Self {
        if !self.filters.contains(&f) {
            self.filters.push(f);
        }
        self
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        g.order() == self.n
            && g.max_degree() <= self.max_degree
            && (!self.connected || g.is_connected())
            && self.filters.iter().all(|f| f.accepts(g))
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::GenSpec("n must be at least 1".into()));
        }
        if self.n > MAX_GEN_ORDER {
            return Err(Error::SizeLimit { what: "graph generation", n: self.n, limit: MAX_GEN_ORDER });
        }
        Ok(())
    }
}

/// `n=8,connected,k4-minor-free,max-degree=3`
impl FromStr for GenSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut spec: Option<GenSpec> = None;
        let mut rest = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if let Some(v) = item.strip_prefix("n=") {
                let n = v.parse().map_err(|_| Error::GenSpec(format!("bad order {v:?}")))?;
                spec = Some(GenSpec::new(n));
            } else {
                rest.push(item);
            }
        }
        let mut spec = spec.ok_or_else(|| Error::GenSpec("missing n=<order>".into()))?;
        for item in rest {
            if item == "connected" {
                spec.connected = true;
            } else if let Some(v) = item.strip_prefix("max-degree=") {
                spec.max_degree = v.parse().map_err(|_| Error::GenSpec(format!("bad max degree {v:?}")))?;
            } else {
                spec = spec.filter(item.parse()?);
            }
        }
        Ok(spec)
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if self.connected {
            write!(f, ",connected")?;
        }
        if self.max_degree != 3 {
            write!(f, ",max-degree={}", self.max_degree)?;
        }
        for flt in &self.filters {
            write!(f, ",{}", flt.name())?;
        }
        Ok(())
    }
}

/// One representative per isomorphism class, canonically labeled, ordered
/// by canonical code.
///
/// Graphs are grown one vertex at a time from the classes one order below.
/// Every graph arises this way (a connected graph keeps a non-cut vertex),
/// and hereditary filters prune intermediate orders.
pub fn enumerate(spec: &GenSpec) -> Result<Vec<Graph>> {
    spec.validate()?;
    let hereditary: Vec<Filter> = spec.filters.iter().copied().filter(|f| f.hereditary()).collect();
    let mut level: Vec<Vec<u16>> = vec![vec![0u16]];
    for k in 1..spec.n {
        let mut seen: HashMap<u128, bool> = HashMap::new();
        for g in &level {
            let open: Vec<usize> = (0..k)
                .filter(|&v| (g[v].count_ones() as usize) < spec.max_degree)
                .collect();
            let mut chosen = Vec::with_capacity(spec.max_degree);
            for_each_subset(&open, spec.max_degree, 0, &mut chosen, &mut |nbrs| {
                if spec.connected && nbrs.is_empty() {
                    return;
                }
                let mut next = g.clone();
                let mut row = 0u16;
                for &v in nbrs {
                    next[v] |= 1 << k;
                    row |= 1 << v;
                }
                next.push(row);
                let key = canonical_key_masks(&next);
                seen.entry(key.code).or_insert_with(|| {
                    let graph = decode(key);
                    hereditary.iter().all(|f| f.accepts(&graph))
                });
            });
        }
        let mut codes: Vec<u128> = seen.into_iter().filter_map(|(c, ok)| ok.then_some(c)).collect();
        codes.sort_unstable();
        level = codes
            .into_iter()
            .map(|code| crate::canon::masks(&decode(CanonKey { n: k + 1, code })))
            .collect();
    }
    let mut out: Vec<(u128, Graph)> = level
        .into_iter()
        .map(|m| {
            let code = crate::canon::labeled_code(&m);
            (code, decode(CanonKey { n: spec.n, code }))
        })
        .filter(|(_, g)| spec.accepts(g))
        .collect();
    out.sort_by_key(|(c, _)| *c);
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

fn for_each_subset(
    pool: &[usize],
    max: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    f(chosen);
    if chosen.len() == max {
        return;
    }
    for i in from..pool.len() {
        chosen.push(pool[i]);
        for_each_subset(pool, max, i + 1, chosen, f);
        chosen.pop();
    }
}

pub fn count_classes(spec: &GenSpec) -> Result<usize> {
    Ok(enumerate(spec)?.len())
}

/// All graphs for orders `1..=max_n` matching the other fields of `spec`.
pub fn enumerate_up_to(spec: &GenSpec, max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate(&GenSpec { n, ..spec.clone() })?);
    }
    Ok(out)
}

/// One non-blank line of a graph6 corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    /// 1-based line number.
    pub line: usize,
    pub text: String,
    pub graph: std::result::Result<Graph, Error>,
}

/// Reads graph6 lines; malformed lines come back as entries holding the
/// parse error.
pub fn ingest_reader<R: BufRead>(reader: R) -> std::io::Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        out.push(CorpusEntry { line: i + 1, text: text.to_string(), graph: parse_graph6(text) });
    }
    Ok(out)
}

pub fn ingest_corpus(path: impl AsRef<Path>) -> std::io::Result<Vec<CorpusEntry>> {
    let file = std::fs::File::open(path)?;
    ingest_reader(std::io::BufReader::new(file))
}
