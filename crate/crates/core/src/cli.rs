//! Command-line surface. [`run`] turns a parsed [`RunConfig`] into the text
//! to emit and an exit status; `main` only does I/O.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::checks::{self, CheckCertificate, CheckConfig, StatementId};
use crate::counting::{self, Engine};
use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, ConnectionSet};
use crate::invariants::{self, format_polynomial};
use crate::search::{self, Checkpoint, SearchOptions};
use crate::table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// f-vector of the independence complex
    Fvector,
    /// reduced Euler characteristic
    Chi,
    /// independence polynomial
    Indpoly,
    /// h-vector
    Hvector,
    /// Hilbert series numerator, regularity index, a-invariant
    Hilbert,
    /// clique number with a witness clique
    Omega,
    /// number of cliques of a given size (--size)
    Cliques,
    /// run a verification check (--check) and print its certificate
    Verify,
    /// list multiplier classes with vanishing reduced Euler characteristic
    Search,
    /// search, then match the classes against a reference table
    Reconcile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Brute,
    Split,
    Rooted,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Brute => Engine::Brute,
            EngineArg::Split => Engine::Split,
            EngineArg::Rooted => Engine::Rooted,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    /// i f_(i-1) = n f_(i-1,0) (faces through vertex 0 scale by n/i)
    Div,
    /// omega <= n/2 for non-complete circulants
    Cn,
    /// n = 2q, q odd: omega < q iff {2,4,...,q-1} is not a subset of S
    #[value(name = "2q")]
    TwoQ,
    /// n = rq, q odd (needs --r): missing multiple jr gives omega <= (n-r)/2; omega < q gives a missing multiple
    Dq1,
    /// n = 2p^k: nonzero p^k-clique counts are 2 mod p, exactly 2 under (a) 1 not in S or (b) some t coprime to 2p missing
    Congruence,
    /// n = p^k: reduced Euler characteristic is nonzero for non-empty S
    #[value(name = "thm_pk")]
    ThmPk,
    /// n = 2p^k, p odd: reduced Euler characteristic is nonzero for non-empty S
    #[value(name = "thm_2pk")]
    Thm2Pk,
    /// thm_pk or thm_2pk, whichever applies to n
    Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// one JSON object per line
    #[value(name = "structured-records", alias = "structured", alias = "records", alias = "json")]
    StructuredRecords,
    Csv,
}

const AFTER_HELP: &str = "\
Connection sets: \"1,3,8\", ranges \"1-24\", exclusions \"1-24^5\" (= {1..24} minus {5}).

Environment:
  CIRCULANT_ORACLE_MAX_N   largest n for --engine brute (default 26)
  CIRCULANT_SEARCH_MAX_N   largest n for search/reconcile (default 40)
  CIRCULANT_MEMO_BYTES     memo budget of the counting engines (default 536870912)

Exit status: 0 success (verify: check passed), 1 internal error, 2 invalid input,
3 verify check failed.";

/// Invariants of independence complexes of circulant graphs C_n(S).
#[derive(Debug, Clone, Parser)]
#[command(name = "circulant-chi", version, after_help = AFTER_HELP)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Number of vertices.
    #[arg(long)]
    pub n: usize,

    /// Connection set S, a subset of 1..=n/2 [default: none; required by all
    /// commands except verify, search and reconcile].
    #[arg(long, allow_hyphen_values = true)]
    pub set: Option<String>,

    /// Counting engine; brute is limited to small n.
    #[arg(long, value_enum, default_value = "auto")]
    pub engine: EngineArg,

    /// Clique size for `cliques` [default: none].
    #[arg(long)]
    pub size: Option<usize>,

    /// Statement to verify [default: none; required by verify].
    #[arg(long, value_enum)]
    pub check: Option<CheckArg>,

    /// Divisor r of n for `--check dq1` [default: none].
    #[arg(long)]
    pub r: Option<usize>,

    /// Worker threads for verify, search and reconcile.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,

    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,

    /// Write the report here [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Seed for sampled verification.
    #[arg(long, default_value_t = checks::DEFAULT_SEED)]
    pub seed: u64,

    /// Number of sampled connection sets when n/2 exceeds --exhaustive-limit.
    #[arg(long, default_value_t = 2000)]
    pub samples: usize,

    /// Verify every connection set when n/2 is at most this.
    #[arg(long, default_value_t = 14)]
    pub exhaustive_limit: usize,

    /// Number of Hilbert function values to print for `hilbert`.
    #[arg(long, default_value_t = 8)]
    pub terms: usize,

    /// Reference table for `reconcile` ("n: s1,s2,..." per line); defaults
    /// to the bundled list [default: bundled].
    #[arg(long)]
    pub table: Option<PathBuf>,

    /// Save search progress here after every block of classes [default: none].
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,

    /// Resume a search from a checkpoint file [default: none].
    #[arg(long)]
    pub resume: Option<PathBuf>,
}

/// What `run` produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub output: String,
    /// Diagnostics for stderr (timings).
    pub diagnostics: String,
    pub status: i32,
}

impl Report {
    fn ok(output: String) -> Self {
        Report {
            output,
            diagnostics: String::new(),
            status: EXIT_OK,
        }
    }
}

fn bad(flag: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parameter(format!("--{flag}: {msg}"))
}

impl RunConfig {
    fn graph(&self) -> Result<CirculantGraph> {
        let raw = self
            .set
            .as_deref()
            .ok_or_else(|| bad("set", "required for this command"))?;
        let set: ConnectionSet = raw.parse().map_err(|e| bad("set", e))?;
        CirculantGraph::from_set(self.n, &set).map_err(|e| match e {
            Error::InvalidOrder(_) => bad("n", e),
            other => bad("set", other),
        })
    }

    fn engine(&self) -> Engine {
        self.engine.into()
    }

    fn check_config(&self) -> CheckConfig {
        CheckConfig {
            exhaustive_limit: self.exhaustive_limit,
            samples: self.samples,
            seed: self.seed,
            workers: self.workers.max(1),
            only: None,
        }
    }
}

fn header(cfg: &RunConfig, g: Option<&CirculantGraph>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(format!("{:?}", cfg.command).to_lowercase()));
    m.insert("version".into(), json!(crate::VERSION));
    m.insert("engine".into(), json!(cfg.engine().name()));
    m.insert("n".into(), json!(cfg.n));
    if let Some(g) = g {
        m.insert("graph".into(), json!(g.to_string()));
        m.insert("set".into(), json!(g.connection_set()));
    }
    m
}

/// Renders a single-graph result in the requested format.
fn single(cfg: &RunConfig, g: &CirculantGraph, text: String, fields: Vec<(&str, Value)>) -> Result<String> {
    Ok(match cfg.format {
        Format::Text => text + "\n",
        Format::StructuredRecords => {
            let mut m = header(cfg, Some(g));
            for (k, v) in fields {
                m.insert(k.into(), v);
            }
            serde_json::to_string(&Value::Object(m)).expect("json") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut head = vec!["version".to_string(), "engine".into(), "n".into(), "set".into()];
            let mut row = vec![
                crate::VERSION.to_string(),
                cfg.engine().name().into(),
                cfg.n.to_string(),
                g.connection_set().to_string(),
            ];
            for (k, v) in fields {
                head.push(k.into());
                row.push(match v {
                    Value::String(s) => s,
                    other => other.to_string(),
                });
            }
            let io = |e: csv::Error| Error::Internal(format!("csv: {e}"));
            w.write_record(&head).map_err(io)?;
            w.write_record(&row).map_err(io)?;
            String::from_utf8(w.into_inner().map_err(|e| Error::Internal(e.to_string()))?)
                .map_err(|e| Error::Internal(e.to_string()))?
        }
    })
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn statement_for(cfg: &RunConfig) -> Result<StatementId> {
    let check = cfg
        .check
        .ok_or_else(|| bad("check", "required for verify"))?;
    Ok(match check {
        CheckArg::Div => StatementId::Div,
        CheckArg::Cn => StatementId::CliqueBound,
        CheckArg::TwoQ => StatementId::TwoQ,
        CheckArg::Dq1 => StatementId::Dq1,
        CheckArg::Congruence => StatementId::Congruence,
        CheckArg::ThmPk => StatementId::ThmPk,
        CheckArg::Thm2Pk => StatementId::Thm2Pk,
        CheckArg::Theorem => {
            if checks::prime_power(cfg.n).is_some() {
                StatementId::ThmPk
            } else {
                StatementId::Thm2Pk
            }
        }
    })
}

fn certificate_text(c: &CheckCertificate) -> String {
    let mut s = format!(
        "check {} n={}: {} ({} instances, {}{})\n",
        c.statement_id,
        c.parameters.n,
        if c.passed { "PASSED" } else { "FAILED" },
        c.instances_checked,
        c.mode,
        c.seed.map(|s| format!(", seed {s}")).unwrap_or_default(),
    );
    for (k, v) in &c.evidence {
        s += &format!("  {k}: {v}\n");
    }
    if let Some(cx) = &c.counterexample {
        s += &format!("  counterexample S = {{{}}}: {:?}\n", cx.set, cx.observed);
    }
    s += &format!("  evidence digest: {}\n", c.evidence_digest);
    s
}

fn run_verify(cfg: &RunConfig) -> Result<Report> {
    let statement = statement_for(cfg)?;
    let mut ccfg = cfg.check_config();
    if let Some(raw) = &cfg.set {
        ccfg.only = Some(raw.parse().map_err(|e| bad("set", e))?);
    }
    let cert = checks::run_statement(statement, cfg.n, cfg.r, &ccfg).map_err(|e| match e {
        Error::Parameter(m) => bad(if m.starts_with("r ") || m.ends_with("needs r") { "r" } else { "n" }, m),
        other => other,
    })?;
    let output = match cfg.format {
        Format::Text => certificate_text(&cert),
        Format::StructuredRecords | Format::Csv => cert.to_record() + "\n",
    };
    Ok(Report {
        output,
        diagnostics: String::new(),
        status: if cert.passed { EXIT_OK } else { EXIT_CHECK_FAILED },
    })
}

fn search_options(cfg: &RunConfig) -> Result<SearchOptions> {
    let resume = match &cfg.resume {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| bad("resume", format!("{}: {e}", path.display())))?;
            Some(serde_json::from_str::<Checkpoint>(&text).map_err(|e| bad("resume", e))?)
        }
        None => None,
    };
    Ok(SearchOptions {
        workers: cfg.workers.max(1),
        engine: cfg.engine(),
        resume,
    })
}

fn run_search(cfg: &RunConfig, reconcile: bool) -> Result<Report> {
    let opts = search_options(cfg)?;
    let mut out = search::search_zero_chi_with(cfg.n, &opts, |cp| match &cfg.checkpoint {
        Some(path) => fs::write(path, serde_json::to_string(cp).expect("json"))
            .map_err(|e| Error::Internal(format!("writing checkpoint {}: {e}", path.display()))),
        None => Ok(()),
    })?;
    let entries = match &cfg.table {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| bad("table", format!("{}: {e}", path.display())))?;
            table::parse_table(&text)
                .map_err(|e| bad("table", e))?
                .remove(&cfg.n)
                .unwrap_or_default()
        }
        None => table::reference_entries(cfg.n),
    };
    search::annotate(&mut out.records, &entries)?;
    let wall = out.summary.wall_time_ms.take().unwrap_or(0);
    let diagnostics = format!("search n={} finished in {wall} ms\n", cfg.n);

    if reconcile {
        let report = search::cross_reference_table(&out.records, &entries, cfg.n)?;
        let output = match cfg.format {
            Format::StructuredRecords | Format::Csv => {
                let mut m = header(cfg, None);
                m.insert("report".into(), serde_json::to_value(&report).expect("json"));
                m.insert("exact".into(), json!(report.is_exact()));
                m.insert("attributed".into(), json!(report.discrepancies_attributed()));
                serde_json::to_string(&Value::Object(m)).expect("json") + "\n"
            }
            Format::Text => {
                let mut s = format!(
                    "n={}: {} zero classes, {} table entries\n",
                    cfg.n,
                    out.records.len(),
                    entries.len()
                );
                for m in &report.matched {
                    s += &format!("  matched  {{{}}} -> class {{{}}}\n", m.entry, m.class);
                }
                for e in &report.unmatched_entries {
                    s += &format!("  UNMATCHED entry {{{e}}}: no zero class contains it\n");
                }
                for (a, b) in &report.duplicate_entries {
                    s += &format!("  duplicate entries {{{a}}} and {{{b}}} share a class\n");
                }
                for u in &report.unlisted_classes {
                    if u.same_fvector_as.is_empty() {
                        s += &format!(
                            "  not in provided table: class {{{}}} (no listed class has f-vector {})\n",
                            u.representative, u.fvector
                        );
                    } else {
                        let peers: Vec<String> =
                            u.same_fvector_as.iter().map(|p| format!("{{{p}}}")).collect();
                        s += &format!(
                            "  not in provided table: class {{{}}} has the same f-vector as {} (possible non-multiplier isomorphism)\n",
                            u.representative,
                            peers.join(", ")
                        );
                    }
                }
                s += &format!(
                    "exact: {}, all discrepancies attributed: {}\n",
                    report.is_exact(),
                    report.discrepancies_attributed()
                );
                s
            }
        };
        return Ok(Report {
            output,
            diagnostics,
            status: EXIT_OK,
        });
    }

    let output = match cfg.format {
        Format::StructuredRecords => {
            let mut s = search::to_records(&out.records);
            s += &(serde_json::to_string(&json!({ "summary": out.summary })).expect("json") + "\n");
            s
        }
        Format::Csv => search::to_csv(&out.records)?,
        Format::Text => {
            let mut s = String::new();
            for r in &out.records {
                s += &format!(
                    "{{{}}} orbit={} f={} chi~={}{}\n",
                    r.representative,
                    r.orbit_size,
                    r.fvector,
                    r.chi,
                    r.matches_table_entry
                        .as_ref()
                        .map(|e| format!(" table={{{e}}}"))
                        .unwrap_or_default()
                );
            }
            let m = &out.summary;
            s += &format!(
                "n={} classes={} subsets={} zero={} nonzero={} engine={} wall_time={wall} ms\n",
                m.n, m.total_classes, m.subsets_covered, m.zero_classes, m.nonzero_classes, m.engine
            );
            s
        }
    };
    Ok(Report {
        output,
        diagnostics,
        status: EXIT_OK,
    })
}

pub fn run(cfg: &RunConfig) -> Result<Report> {
    if cfg.workers == 0 {
        return Err(bad("workers", "must be positive"));
    }
    let engine = cfg.engine();
    let output = match cfg.command {
        Command::Fvector => {
            let g = cfg.graph()?;
            let f = counting::fvector(&g, engine)?;
            single(cfg, &g, f.to_string(), vec![("fvector", json!(f))])?
        }
        Command::Chi => {
            let g = cfg.graph()?;
            let chi = invariants::reduced_euler(&counting::fvector(&g, engine)?);
            single(cfg, &g, format!("chi~ = {chi}"), vec![("chi", json!(chi as i64))])?
        }
        Command::Indpoly => {
            let g = cfg.graph()?;
            let p = invariants::independence_polynomial(&g, engine)?;
            let at_minus_one = p.evaluate(-1)?;
            single(
                cfg,
                &g,
                format!("I(G,x) = {p}\nI(G,-1) = {at_minus_one}"),
                vec![
                    ("coefficients", json!(p.coefficients)),
                    ("value_at_minus_one", json!(at_minus_one as i64)),
                ],
            )?
        }
        Command::Hvector => {
            let g = cfg.graph()?;
            let h = invariants::hvector(&counting::fvector(&g, engine)?)?;
            let entries: Vec<i64> = h.entries.iter().map(|&x| x as i64).collect();
            single(cfg, &g, list(&entries), vec![("hvector", json!(entries))])?
        }
        Command::Hilbert => {
            let g = cfg.graph()?;
            let s = invariants::algebraic_summary(&counting::fvector(&g, engine)?)?;
            let series: Vec<i64> = s.hilbert_series(cfg.terms)?.iter().map(|&x| x as i64).collect();
            let numerator: Vec<i64> = s.hilbert_numerator.iter().map(|&x| x as i64).collect();
            let text = format!(
                "HP(t) = ({}) / (1 - t)^{}\nregularity index = {}\na-invariant = {}\nH(k), k < {}: {}\nI(G) = {}",
                format_polynomial(&s.hilbert_numerator, 't'),
                s.krull_dimension,
                s.regularity_index,
                s.a_invariant,
                cfg.terms,
                list(&series),
                invariants::edge_ideal(&g),
            );
            single(
                cfg,
                &g,
                text,
                vec![
                    ("hilbert_numerator", json!(numerator)),
                    ("krull_dimension", json!(s.krull_dimension)),
                    ("regularity_index", json!(s.regularity_index)),
                    ("a_invariant", json!(s.a_invariant)),
                    ("hilbert_function", json!(series)),
                ],
            )?
        }
        Command::Omega => {
            let g = cfg.graph()?;
            let clique = counting::maximum_clique(&g);
            single(
                cfg,
                &g,
                format!("omega = {}\nwitness = {}", clique.len(), list(&clique)),
                vec![("omega", json!(clique.len())), ("witness", json!(clique))],
            )?
        }
        Command::Cliques => {
            let g = cfg.graph()?;
            let size = cfg.size.ok_or_else(|| bad("size", "required for cliques"))?;
            let count = counting::cliques_of_size(&g, size).map_err(|e| match e {
                Error::Parameter(m) => bad("size", m),
                other => other,
            })?;
            single(
                cfg,
                &g,
                format!("cliques of size {size} = {count}"),
                vec![("size", json!(size)), ("count", json!(count))],
            )?
        }
        Command::Verify => return run_verify(cfg),
        Command::Search => return run_search(cfg, false),
        Command::Reconcile => return run_search(cfg, true),
    };
    Ok(Report::ok(output))
}

/// Exit status for an error returned by [`run`].
pub fn status_for(err: &Error) -> i32 {
    if err.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_INTERNAL
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("circulant-chi").chain(args.iter().copied())).unwrap()
    }

    fn out(args: &[&str]) -> String {
        run(&cfg(args)).unwrap().output
    }

    #[test]
    fn basic_commands() {
        assert_eq!(out(&["chi", "--n", "30", "--set", "1,3,8"]), "chi~ = 0\n");
        assert_eq!(out(&["fvector", "--n", "6", "--set", "1,2,3"]), "[1, 6]\n");
        assert_eq!(out(&["hvector", "--n", "4", "--set", "1"]), "[1, 2, -1]\n");
        assert_eq!(
            out(&["cliques", "--n", "50", "--set", "1-24^5", "--size", "25"]),
            "cliques of size 25 = 32\n"
        );
        assert!(out(&["omega", "--n", "10", "--set", "2,4"]).starts_with("omega = 5\n"));
        let hp = out(&["hilbert", "--n", "4", "--set", "1"]);
        assert!(hp.contains("HP(t) = (1 + 2t - t^2) / (1 - t)^2"));
        assert!(hp.contains("a-invariant = 0"));
        assert!(out(&["indpoly", "--n", "10", "--set", "5"]).starts_with("I(G,x) = 1 + 10x + 40x^2"));
    }

    #[test]
    fn engines_and_formats() {
        for engine in ["auto", "brute", "split", "rooted"] {
            assert_eq!(out(&["fvector", "--n", "5", "--set", "1", "--engine", engine]), "[1, 5, 5]\n");
        }
        let rec = out(&["chi", "--n", "30", "--set", "1,3,8", "--format", "structured-records"]);
        let v: Value = serde_json::from_str(&rec).unwrap();
        assert_eq!(v["chi"], 0);
        assert_eq!(v["engine"], "auto");
        assert_eq!(v["version"], crate::VERSION);
        assert_eq!(v["graph"], "C30(1,3,8)");
        let csv = out(&["fvector", "--n", "6", "--set", "1,2,3", "--format", "csv"]);
        assert_eq!(csv, "version,engine,n,set,fvector\n0.1.0,auto,6,\"1,2,3\",\"[1,6]\"\n");
    }

    #[test]
    fn input_errors() {
        for args in [
            &["chi", "--n", "30"][..],
            &["chi", "--n", "5", "--set", "3"],
            &["chi", "--n", "1", "--set", ""],
            &["chi", "--n", "5", "--set", "x"],
            &["cliques", "--n", "6", "--set", "1"],
            &["cliques", "--n", "6", "--set", "1", "--size", "0"],
            &["verify", "--n", "25"],
            &["verify", "--n", "12", "--check", "theorem"],
            &["verify", "--n", "15", "--check", "dq1"],
        ] {
            let err = run(&cfg(args)).unwrap_err();
            assert_eq!(status_for(&err), EXIT_INPUT, "{args:?}: {err}");
            assert!(err.to_string().contains("--"), "{err}");
        }
        let err = run(&cfg(&["fvector", "--n", "40", "--set", "1", "--engine", "brute"])).unwrap_err();
        assert_eq!(status_for(&err), EXIT_INTERNAL);
        assert!(RunConfig::try_parse_from(["x", "bogus", "--n", "3"]).is_err());
    }

    #[test]
    fn verify_exit_status() {
        let r = run(&cfg(&["verify", "--n", "9", "--check", "theorem"])).unwrap();
        assert_eq!(r.status, EXIT_OK);
        assert!(r.output.starts_with("check thm_pk n=9: PASSED (15 instances"));
        let r = run(&cfg(&["verify", "--n", "15", "--check", "dq1", "--r", "3", "--format", "structured-records"])).unwrap();
        let cert = CheckCertificate::from_record(r.output.trim()).unwrap();
        assert!(cert.passed);
        let r = run(&cfg(&["verify", "--n", "30", "--check", "div", "--set", "1,3,8"])).unwrap();
        assert_eq!(r.status, EXIT_OK);
    }

    #[test]
    fn search_formats() {
        let r = run(&cfg(&["search", "--n", "25", "--format", "structured-records"])).unwrap();
        let lines: Vec<&str> = r.output.lines().collect();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].starts_with("{\"summary\""));
        assert!(!lines[0].contains("wall_time"));
        assert!(r.diagnostics.contains("ms"));
        let r = run(&cfg(&["reconcile", "--n", "30", "--workers", "4"])).unwrap();
        assert!(r.output.contains("exact: true"), "{}", r.output);
    }

    #[test]
    fn checkpoint_round_trip() {
        let dir = std::env::temp_dir().join(format!("circulant-chi-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cp.json");
        let p = path.to_str().unwrap();
        let full = out(&["search", "--n", "30", "--format", "structured-records", "--checkpoint", p]);
        let resumed = out(&["search", "--n", "30", "--format", "structured-records", "--resume", p]);
        assert_eq!(full, resumed);
        fs::remove_dir_all(&dir).unwrap();
    }
}
