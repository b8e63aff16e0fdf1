//! Sweep of all multiplier classes of connection sets for one `n`, keeping
//! those whose independence complex has vanishing reduced Euler
//! characteristic.
//!
//! Classes are deduplicated by the multiplier action `S -> aS`. That action
//! always gives isomorphic graphs, but for some `n` (36 among them) distinct
//! multiplier classes may still be isomorphic, so the class count can exceed
//! a list made up to full isomorphism. [`cross_reference_table`] reports
//! such differences instead of hiding them.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::counting::{self, Engine, FVector};
use crate::error::{Error, Result};
use crate::graph::{enumerate_classes, CanonicalClass, CirculantGraph, ConnectionSet};
use crate::invariants::reduced_euler;
use crate::limits;
use crate::parallel;

pub const SUMMARY_FORMAT_VERSION: u32 = 1;

const CHUNK: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub n: usize,
    pub representative: ConnectionSet,
    pub orbit_size: usize,
    pub fvector: FVector,
    pub chi: i128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches_table_entry: Option<ConnectionSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub format_version: u32,
    pub version: String,
    pub n: usize,
    pub engine: Engine,
    pub total_classes: usize,
    pub classes_visited: usize,
    /// Sum of orbit sizes over visited classes.
    pub subsets_covered: u64,
    pub zero_classes: usize,
    pub nonzero_classes: usize,
    /// The empty connection set is visited but never reported.
    pub skipped_empty: bool,
    pub last_completed: Option<ConnectionSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// Saved progress of an interrupted sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub summary: SearchSummary,
    pub records: Vec<ZeroRecord>,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub workers: usize,
    pub engine: Engine,
    pub resume: Option<Checkpoint>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            engine: Engine::Auto,
            resume: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutput {
    pub records: Vec<ZeroRecord>,
    pub summary: SearchSummary,
}

/// Engine for the independent recomputation of a zero record.
fn second_engine(n: usize, primary: Engine) -> Engine {
    if n <= limits::oracle_max_n().min(22) {
        Engine::Brute
    } else if primary == Engine::Rooted {
        Engine::Split
    } else {
        Engine::Rooted
    }
}

fn evaluate(class: &CanonicalClass, engine: Engine) -> Result<Option<ZeroRecord>> {
    if class.representative.is_empty() {
        return Ok(None);
    }
    let g = class.graph();
    let f = counting::fvector(&g, engine)?;
    let chi = reduced_euler(&f);
    if chi != 0 {
        return Ok(None);
    }
    let check = counting::fvector(&g, second_engine(class.n, engine))?;
    if check != f || reduced_euler(&check) != 0 {
        return Err(Error::Internal(format!(
            "{g}: engines disagree ({f} vs {check})"
        )));
    }
    Ok(Some(ZeroRecord {
        n: class.n,
        representative: class.representative.clone(),
        orbit_size: class.orbit_size,
        fvector: f,
        chi,
        matches_table_entry: None,
    }))
}

/// Runs the sweep, calling `on_chunk` with a checkpoint after each block of
/// classes.
pub fn search_zero_chi_with<F>(n: usize, opts: &SearchOptions, mut on_chunk: F) -> Result<SearchOutput>
where
    F: FnMut(&Checkpoint) -> Result<()>,
{
    let start = Instant::now();
    let cap = limits::search_max_n();
    if n > cap {
        return Err(Error::Capacity {
            what: "n for the search",
            value: n,
            limit: cap,
        });
    }
    let classes = enumerate_classes(n)?;
    let mut state = match &opts.resume {
        Some(cp) => {
            let s = &cp.summary;
            if s.format_version != SUMMARY_FORMAT_VERSION || s.n != n {
                return Err(Error::Parameter(format!(
                    "checkpoint is for n = {} (format {}), expected n = {n} (format {SUMMARY_FORMAT_VERSION})",
                    s.n, s.format_version
                )));
            }
            cp.clone()
        }
        None => Checkpoint {
            summary: SearchSummary {
                format_version: SUMMARY_FORMAT_VERSION,
                version: crate::VERSION.to_string(),
                n,
                engine: opts.engine,
                total_classes: classes.len(),
                classes_visited: 0,
                subsets_covered: 0,
                zero_classes: 0,
                nonzero_classes: 0,
                skipped_empty: false,
                last_completed: None,
                wall_time_ms: None,
            },
            records: Vec::new(),
        },
    };
    let pending: Vec<&CanonicalClass> = classes
        .iter()
        .filter(|c| match &state.summary.last_completed {
            Some(last) => c.representative > *last,
            None => true,
        })
        .collect();

    for chunk in pending.chunks(CHUNK) {
        let results = parallel::map_ordered(chunk, opts.workers, |c| evaluate(c, opts.engine));
        for (class, result) in chunk.iter().zip(results) {
            let s = &mut state.summary;
            s.classes_visited += 1;
            s.subsets_covered += class.orbit_size as u64;
            match result? {
                Some(record) => {
                    s.zero_classes += 1;
                    state.records.push(record);
                }
                None if class.representative.is_empty() => s.skipped_empty = true,
                None => s.nonzero_classes += 1,
            }
        }
        state.summary.last_completed = chunk.last().map(|c| c.representative.clone());
        on_chunk(&state)?;
    }

    let mut summary = state.summary;
    summary.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(SearchOutput {
        records: state.records,
        summary,
    })
}

pub fn search_zero_chi(n: usize, opts: &SearchOptions) -> Result<SearchOutput> {
    search_zero_chi_with(n, opts, |_| Ok(()))
}

/// A table entry and the found class containing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMatch {
    pub entry: ConnectionSet,
    pub class: ConnectionSet,
}

/// A found class with no table entry in its multiplier orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnlistedClass {
    pub representative: ConnectionSet,
    pub fvector: FVector,
    /// Matched classes with an identical f-vector; each is a candidate for
    /// an isomorphism not induced by a multiplier. Empty means the class
    /// cannot be isomorphic to any listed graph.
    pub same_fvector_as: Vec<ConnectionSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconciliationReport {
    pub n: Option<usize>,
    pub matched: Vec<TableMatch>,
    /// Entries whose class has no zero record.
    pub unmatched_entries: Vec<ConnectionSet>,
    /// Pairs of entries that fall into the same multiplier class.
    pub duplicate_entries: Vec<(ConnectionSet, ConnectionSet)>,
    pub unlisted_classes: Vec<UnlistedClass>,
}

impl ReconciliationReport {
    /// Every entry is matched, none repeats a class, and every found class
    /// is listed.
    pub fn is_exact(&self) -> bool {
        self.unmatched_entries.is_empty()
            && self.duplicate_entries.is_empty()
            && self.unlisted_classes.is_empty()
    }

    /// Every discrepancy is an unlisted class that shares its f-vector with a
    /// listed one.
    pub fn discrepancies_attributed(&self) -> bool {
        self.unmatched_entries.is_empty()
            && self.duplicate_entries.is_empty()
            && self
                .unlisted_classes
                .iter()
                .all(|u| !u.same_fvector_as.is_empty())
    }
}

/// Matches table entries to found classes by orbit membership.
pub fn cross_reference_table(
    records: &[ZeroRecord],
    entries: &[ConnectionSet],
    n: usize,
) -> Result<ReconciliationReport> {
    if let Some(r) = records.iter().find(|r| r.n != n) {
        return Err(Error::Parameter(format!(
            "record for n = {} mixed into reconciliation for n = {n}",
            r.n
        )));
    }
    let mut matched = Vec::new();
    let mut unmatched_entries = Vec::new();
    let mut duplicate_entries = Vec::new();
    let mut claimed: Vec<(ConnectionSet, ConnectionSet)> = Vec::new();
    for entry in entries {
        let rep = CirculantGraph::from_set(n, entry)?.canonical_form().representative;
        if let Some((first, _)) = claimed.iter().find(|(_, r)| *r == rep) {
            duplicate_entries.push((first.clone(), entry.clone()));
        }
        claimed.push((entry.clone(), rep.clone()));
        match records.iter().find(|r| r.representative == rep) {
            Some(r) => matched.push(TableMatch {
                entry: entry.clone(),
                class: r.representative.clone(),
            }),
            None => unmatched_entries.push(entry.clone()),
        }
    }
    let unlisted_classes = records
        .iter()
        .filter(|r| !matched.iter().any(|m| m.class == r.representative))
        .map(|r| UnlistedClass {
            representative: r.representative.clone(),
            fvector: r.fvector.clone(),
            same_fvector_as: records
                .iter()
                .filter(|o| {
                    o.fvector == r.fvector && matched.iter().any(|m| m.class == o.representative)
                })
                .map(|o| o.representative.clone())
                .collect(),
        })
        .collect();
    Ok(ReconciliationReport {
        n: (!records.is_empty() || !entries.is_empty()).then_some(n),
        matched,
        unmatched_entries,
        duplicate_entries,
        unlisted_classes,
    })
}

/// Fills `matches_table_entry` on each record from `entries`.
pub fn annotate(records: &mut [ZeroRecord], entries: &[ConnectionSet]) -> Result<()> {
    for entry in entries {
        if let Some(first) = records.first() {
            let rep = CirculantGraph::from_set(first.n, entry)?
                .canonical_form()
                .representative;
            if let Some(r) = records.iter_mut().find(|r| r.representative == rep) {
                r.matches_table_entry.get_or_insert_with(|| entry.clone());
            }
        }
    }
    Ok(())
}

/// One JSON object per line.
pub fn to_records(records: &[ZeroRecord]) -> String {
    records
        .iter()
        .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
        .collect()
}

/// Comma-separated table with columns `n,representative,orbit_size,fvector,chi`.
pub fn to_csv(records: &[ZeroRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    w.write_record(["n", "representative", "orbit_size", "fvector", "chi"])
        .map_err(io)?;
    for r in records {
        w.write_record([
            r.n.to_string(),
            r.representative.to_string(),
            r.orbit_size.to_string(),
            r.fvector.to_string(),
            r.chi.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}
