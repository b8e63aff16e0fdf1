//! Exhaustive (or seeded-sample) verification of the structural results on
//! circulant independence complexes, each run summarized as a
//! [`CheckCertificate`].
//!
//! | id           | statement                                                               |
//! |--------------|-------------------------------------------------------------------------|
//! | `div`        | `i f_{i-1} = n f_{i-1,0}` for every face size `i`                       |
//! | `cn`         | non-complete `C_n(S)` has `omega <= n/2`                                |
//! | `2q`         | `n = 2q`, q odd: `omega < q` iff `{2,4,...,q-1}` is not inside `S`      |
//! | `dq1`        | `n = rq`, q odd: missing a multiple `jr` forces `omega <= (n-r)/2`, and `omega < q` forces a missing multiple |
//! | `congruence` | `n = 2p^k`: a nonzero count of `p^k`-cliques is `2 mod p`, and exactly 2 under conditions (a)/(b) |
//! | `thm_pk`     | `n = p^k`: reduced Euler characteristic never vanishes for non-empty `S` |
//! | `thm_2pk`    | `n = 2p^k`, p odd: same                                                 |

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::counting::{self, Engine};
use crate::error::{Error, Result};
use crate::graph::{full_mask, gcd, lex_cmp_masks, CirculantGraph, ConnectionSet};
use crate::invariants;
use crate::limits;
use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StatementId {
    #[serde(rename = "div")]
    Div,
    #[serde(rename = "cn")]
    CliqueBound,
    #[serde(rename = "2q")]
    TwoQ,
    #[serde(rename = "dq1")]
    Dq1,
    #[serde(rename = "congruence")]
    Congruence,
    #[serde(rename = "thm_pk")]
    ThmPk,
    #[serde(rename = "thm_2pk")]
    Thm2Pk,
}

impl StatementId {
    pub const ALL: [StatementId; 7] = [
        StatementId::Div,
        StatementId::CliqueBound,
        StatementId::TwoQ,
        StatementId::Dq1,
        StatementId::Congruence,
        StatementId::ThmPk,
        StatementId::Thm2Pk,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::Div => "div",
            StatementId::CliqueBound => "cn",
            StatementId::TwoQ => "2q",
            StatementId::Dq1 => "dq1",
            StatementId::Congruence => "congruence",
            StatementId::ThmPk => "thm_pk",
            StatementId::Thm2Pk => "thm_2pk",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown statement id {s:?}")))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
    Single,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
            Mode::Single => "single",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub set: ConnectionSet,
    pub observed: BTreeMap<String, i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCertificate {
    pub statement_id: StatementId,
    pub parameters: Parameters,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub instances_checked: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    /// Tallies of the quantities each check observes, e.g. residues of the
    /// reduced Euler characteristic.
    pub evidence: BTreeMap<String, u64>,
    /// SHA-256 over the per-instance observation lines, in instance order.
    pub evidence_digest: String,
    pub version: String,
}

impl CheckCertificate {
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_record(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parameter(format!("bad certificate: {e}")))
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed_c1c0;

#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Sweep every connection set when `n/2` is at most this.
    pub exhaustive_limit: usize,
    pub samples: usize,
    pub seed: u64,
    pub workers: usize,
    /// Restrict the run to one connection set.
    pub only: Option<ConnectionSet>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            exhaustive_limit: 14,
            samples: 2000,
            seed: DEFAULT_SEED,
            workers: 1,
            only: None,
        }
    }
}

/// Result of checking one connection set.
struct Outcome {
    ok: bool,
    line: String,
    tallies: Vec<String>,
    observed: BTreeMap<String, i128>,
}

impl Outcome {
    fn new(ok: bool, line: String) -> Self {
        Outcome {
            ok,
            line,
            tallies: Vec::new(),
            observed: BTreeMap::new(),
        }
    }

    fn tally(mut self, key: impl Into<String>) -> Self {
        self.tallies.push(key.into());
        self
    }

    fn observe(mut self, key: &str, value: impl Into<i128>) -> Self {
        self.observed.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Clone, Copy)]
enum Filter {
    Any,
    NonEmpty,
    NonComplete,
}

impl Filter {
    fn admits(self, mask: u64, n: usize) -> bool {
        match self {
            Filter::Any => true,
            Filter::NonEmpty => mask != 0,
            Filter::NonComplete => mask != full_mask(n / 2 + 1) & !1,
        }
    }
}

/// Sampling strategy for large `n`. `biased` masks are OR-ed into every other
/// draw so that rare configurations are represented.
struct Instances {
    mode: Mode,
    seed: Option<u64>,
    masks: Vec<u64>,
}

fn instances(n: usize, filter: Filter, cfg: &CheckConfig, biased: Option<u64>) -> Result<Instances> {
    if let Some(set) = &cfg.only {
        let g = CirculantGraph::from_set(n, set)?;
        let mask = g.connection_set().mask();
        let masks = if filter.admits(mask, n) { vec![mask] } else { vec![] };
        return Ok(Instances {
            mode: Mode::Single,
            seed: None,
            masks,
        });
    }
    let m = n / 2;
    if m <= cfg.exhaustive_limit {
        let masks = (0..1u64 << m)
            .map(|sub| sub << 1)
            .filter(|&mask| filter.admits(mask, n))
            .collect();
        return Ok(Instances {
            mode: Mode::Exhaustive,
            seed: None,
            masks,
        });
    }
    let universe = full_mask(m + 1) & !1;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut seen = HashSet::new();
    let mut masks = Vec::with_capacity(cfg.samples);
    let mut draws = 0usize;
    while masks.len() < cfg.samples && draws < cfg.samples.saturating_mul(50) {
        let mut mask = rng.gen::<u64>() & universe;
        if let Some(forced) = biased {
            if draws % 2 == 1 {
                mask |= forced;
            }
        }
        draws += 1;
        if filter.admits(mask, n) && seen.insert(mask) {
            masks.push(mask);
        }
    }
    Ok(Instances {
        mode: Mode::Sampled,
        seed: Some(cfg.seed),
        masks,
    })
}

fn run<F>(
    statement_id: StatementId,
    parameters: Parameters,
    inst: Instances,
    cfg: &CheckConfig,
    check: F,
) -> Result<CheckCertificate>
where
    F: Fn(&CirculantGraph) -> Result<Outcome> + Sync,
{
    let n = parameters.n;
    let outcomes = parallel::map_ordered(&inst.masks, cfg.workers, |&mask| {
        CirculantGraph::from_mask(n, mask).and_then(|g| check(&g))
    });
    let mut hasher = Sha256::new();
    let mut evidence = BTreeMap::new();
    let mut failure: Option<(u64, BTreeMap<String, i128>)> = None;
    for (&mask, outcome) in inst.masks.iter().zip(outcomes) {
        let outcome = outcome?;
        hasher.update(ConnectionSet::from_mask(mask).to_string());
        hasher.update(b":");
        hasher.update(outcome.line.as_bytes());
        hasher.update(b"\n");
        for key in outcome.tallies {
            *evidence.entry(key).or_insert(0u64) += 1;
        }
        if !outcome.ok {
            let replace = match &failure {
                None => true,
                Some((best, _)) => lex_cmp_masks(mask, *best).is_lt(),
            };
            if replace {
                failure = Some((mask, outcome.observed));
            }
        }
    }
    Ok(CheckCertificate {
        statement_id,
        parameters,
        mode: inst.mode,
        seed: inst.seed,
        instances_checked: inst.masks.len(),
        passed: failure.is_none(),
        counterexample: failure.map(|(mask, observed)| Counterexample {
            set: ConnectionSet::from_mask(mask),
            observed,
        }),
        evidence,
        evidence_digest: hex::encode(hasher.finalize()),
        version: crate::VERSION.to_string(),
    })
}

fn check_n(n: usize) -> Result<()> {
    if (2..=limits::MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidOrder(n))
    }
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `(p, k)` with `n = p^k`, `p` prime, `k >= 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut rest = n;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Subset of `{1..=max}` given as a mask.
fn multiples_mask(step: usize, count: usize) -> u64 {
    (1..=count).fold(0, |m, j| m | 1u64 << (j * step))
}

/// Checks `i f_{i-1} = n f_{i-1,0}`. Runs on non-empty connection sets.
pub fn check_lemma_div(n: usize, cfg: &CheckConfig) -> Result<CheckCertificate> {
    check_n(n)?;
    let inst = instances(n, Filter::NonEmpty, cfg, None)?;
    let params = Parameters {
        n,
        ..Default::default()
    };
    run(StatementId::Div, params, inst, cfg, |g| {
        let f = counting::fvector(g, Engine::Split)?;
        let rooted = counting::rooted_counts(g)?;
        let mut ok = rooted.counts().len() == f.dim();
        let mut out = Outcome::new(true, String::new());
        for i in 1..=f.dim() {
            let lhs = i as u128 * f.faces_of_size(i) as u128;
            let rhs = n as u128 * rooted.through_zero(i) as u128;
            if lhs != rhs && ok {
                ok = false;
                out = out
                    .observe("i", i as i128)
                    .observe("i*f", lhs as i128)
                    .observe("n*f0", rhs as i128);
            }
        }
        out.ok = ok;
        out.line = format!("f={} f0={:?}", f, rooted.counts());
        Ok(out.tally(format!("d={}", f.dim())))
    })
}

/// Checks that a non-complete circulant has clique number at most `n/2`.
pub fn check_clique_bound(n: usize, cfg: &CheckConfig) -> Result<CheckCertificate> {
    check_n(n)?;
    let inst = instances(n, Filter::NonComplete, cfg, None)?;
    let params = Parameters {
        n,
        ..Default::default()
    };
    run(StatementId::CliqueBound, params, inst, cfg, |g| {
        let omega = counting::clique_number(g);
        Ok(Outcome::new(omega <= n / 2, format!("omega={omega}"))
            .observe("omega", omega as i128)
            .tally(format!("omega={omega}")))
    })
}

fn odd_q(q: usize) -> Result<()> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::Parameter(format!("q = {q} must be odd and > 1")));
    }
    Ok(())
}

/// Checks, for `n = 2q`,, `omega < q` iff `{2, 4, ..., q-1}` is not contained
/// in `S`, over non-complete `S`.
pub fn check_lemma_2q(q: usize, cfg: &CheckConfig) -> Result<CheckCertificate> {
    odd_q(q)?;
    let n = 2 * q;
    check_n(n)?;
    let evens = multiples_mask(2, (q - 1) / 2);
    let inst = instances(n, Filter::NonComplete, cfg, Some(evens))?;
    let params = Parameters {
        n,
        q: Some(q),
        ..Default::default()
    };
    run(StatementId::TwoQ, params, inst, cfg, |g| {
        let omega = counting::clique_number(g);
        let contains = g.connection_set().mask() & evens == evens;
        let ok = (omega < q) == !contains;
        Ok(Outcome::new(ok, format!("omega={omega} evens_in_S={contains}"))
            .observe("omega", omega as i128)
            .observe("evens_in_S", contains as i128)
            .tally(if contains { "evens_in_S" } else { "evens_missing" }))
    })
}

/// Checks, for `n = rq`, `q` odd, over non-complete `S`, with
/// `M = {r, 2r, ..., (q-1)/2 r}`:
/// part 1, `M` not inside `S` implies `omega <= (n - r)/2`;
/// part 2, `omega < q` implies `M` not inside `S`.
pub fn check_lemma_dq1(r: usize, q: usize, cfg: &CheckConfig) -> Result<CheckCertificate> {
    odd_q(q)?;
    if r < 2 {
        return Err(Error::Parameter(format!("r = {r} must be at least 2")));
    }
    let n = r.checked_mul(q).filter(|&n| n <= limits::MAX_ORDER).ok_or_else(|| {
        Error::Parameter(format!("n = r q = {r} * {q} exceeds {}", limits::MAX_ORDER))
    })?;
    let multiples = multiples_mask(r, (q - 1) / 2);
    let inst = instances(n, Filter::NonComplete, cfg, Some(multiples))?;
    let params = Parameters {
        n,
        r: Some(r),
        q: Some(q),
        ..Default::default()
    };
    run(StatementId::Dq1, params, inst, cfg, |g| {
        let omega = counting::clique_number(g);
        let missing = g.connection_set().mask() & multiples != multiples;
        let part1 = !missing || omega <= (n - r) / 2;
        let part2 = omega >= q || missing;
        Ok(
            Outcome::new(part1 && part2, format!("omega={omega} multiple_missing={missing}"))
                .observe("omega", omega as i128)
                .observe("multiple_missing", missing as i128)
                .observe("part1", part1 as i128)
                .observe("part2", part2 as i128)
                .tally(if missing { "multiple_missing" } else { "multiples_in_S" }),
        )
    })
}

/// Condition (a): `1` is not in `S`.
pub fn condition_a(set: &ConnectionSet) -> bool {
    !set.contains(1)
}

/// Condition (b): `1` is in `S` and some `t` in `1..=p^k` with
/// `gcd(t, 2p) = 1` is not.
pub fn condition_b(set: &ConnectionSet, p: usize, pk: usize) -> bool {
    set.contains(1)
        && (1..=pk).any(|t| gcd(t as u64, 2 * p as u64) == 1 && !set.contains(t))
}

/// For `n = 2p^k`: every nonzero count of `p^k`-cliques is `2 mod p`, and is
/// exactly 2 when condition (a) or (b) holds.
pub fn check_congruence(p: usize, k: u32, cfg: &CheckConfig) -> Result<CheckCertificate> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Parameter(format!("p = {p} must be an odd prime")));
    }
    if k == 0 {
        return Err(Error::Parameter("k must be positive".into()));
    }
    let pk = p
        .checked_pow(k)
        .filter(|&pk| 2 * pk <= limits::MAX_ORDER)
        .ok_or_else(|| Error::Parameter(format!("2 * {p}^{k} exceeds {}", limits::MAX_ORDER)))?;
    let n = 2 * pk;
    let evens = multiples_mask(2, (pk - 1) / 2);
    let inst = instances(n, Filter::Any, cfg, Some(evens))?;
    let params = Parameters {
        n,
        p: Some(p),
        k: Some(k),
        ..Default::default()
    };
    run(StatementId::Congruence, params, inst, cfg, |g| {
        let count = counting::cliques_of_size(g, pk)?;
        let set = g.connection_set();
        let (a, b) = (condition_a(set), condition_b(set, p, pk));
        let congruent = count == 0 || count % p as u64 == 2;
        let exact = !(a || b) || count == 0 || count == 2;
        let bucket = match count {
            0 => "count=0".to_string(),
            2 => "count=2".to_string(),
            _ => format!("count>2,mod_p={}", count % p as u64),
        };
        let mut out = Outcome::new(congruent && exact, format!("count={count} a={a} b={b}"))
            .observe("count", count)
            .observe("condition_a", a as i128)
            .observe("condition_b", b as i128)
            .tally(bucket);
        if count != 0 && (a || b) {
            out = out.tally("condition_fired");
        }
        Ok(out)
    })
}

/// Reduced Euler characteristic never vanishes for non-empty `S` when
/// `n = p^k` or `n = 2p^k` with `p` odd. Residues `chi mod p` are tallied.
pub fn verify_nonvanishing(n: usize, cfg: &CheckConfig) -> Result<CheckCertificate> {
    check_n(n)?;
    let (statement_id, p, k) = if let Some((p, k)) = prime_power(n) {
        (StatementId::ThmPk, p, k)
    } else {
        match prime_power(n / 2) {
            Some((p, k)) if n.is_multiple_of(2) && p % 2 == 1 => (StatementId::Thm2Pk, p, k),
            _ => {
                return Err(Error::Parameter(format!(
                    "n = {n} is neither p^k nor 2p^k with p an odd prime"
                )))
            }
        }
    };
    let inst = instances(n, Filter::NonEmpty, cfg, None)?;
    let params = Parameters {
        n,
        p: Some(p),
        k: Some(k),
        ..Default::default()
    };
    run(statement_id, params, inst, cfg, |g| {
        let f = counting::fvector(g, Engine::Auto)?;
        let chi = invariants::reduced_euler(&f);
        let residue = chi.rem_euclid(p as i128);
        Ok(Outcome::new(chi != 0, format!("chi={chi}"))
            .observe("chi", chi)
            .tally(format!("chi_mod_p={residue}")))
    })
}

/// Runs `statement` with parameters derived from `n` (and `r` for `dq1`).
pub fn run_statement(
    statement: StatementId,
    n: usize,
    r: Option<usize>,
    cfg: &CheckConfig,
) -> Result<CheckCertificate> {
    match statement {
        StatementId::Div => check_lemma_div(n, cfg),
        StatementId::CliqueBound => check_clique_bound(n, cfg),
        StatementId::TwoQ => {
            if !n.is_multiple_of(2) {
                return Err(Error::Parameter(format!("2q check needs even n, got {n}")));
            }
            check_lemma_2q(n / 2, cfg)
        }
        StatementId::Dq1 => {
            let r = r.ok_or_else(|| Error::Parameter("dq1 check needs r".into()))?;
            if r == 0 || !n.is_multiple_of(r) {
                return Err(Error::Parameter(format!("r = {r} does not divide n = {n}")));
            }
            check_lemma_dq1(r, n / r, cfg)
        }
        StatementId::Congruence => {
            let (p, k) = n.is_multiple_of(2)
                .then(|| prime_power(n / 2))
                .flatten()
                .ok_or_else(|| Error::Parameter(format!("n = {n} is not 2p^k")))?;
            check_congruence(p, k, cfg)
        }
        StatementId::ThmPk | StatementId::Thm2Pk => {
            let cert = verify_nonvanishing(n, cfg)?;
            if cert.statement_id != statement {
                return Err(Error::Parameter(format!(
                    "n = {n} belongs to {}, not {statement}",
                    cert.statement_id
                )));
            }
            Ok(cert)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(s: &[usize]) -> CheckConfig {
        CheckConfig {
            only: Some(ConnectionSet::new(s.iter().copied())),
            ..Default::default()
        }
    }

    fn exhaustive() -> CheckConfig {
        CheckConfig::default()
    }

    #[test]
    fn statement_ids_round_trip() {
        for id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.as_str()));
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(18), None);
        assert_eq!(prime_power(1), None);
        assert!(is_prime(13) && !is_prime(9) && !is_prime(1));
    }

    #[test]
    fn div_examples() {
        let c = check_lemma_div(5, &exhaustive()).unwrap();
        assert!(c.passed);
        assert_eq!(c.instances_checked, 3);
        assert_eq!(c.mode, Mode::Exhaustive);
        let c = check_lemma_div(12, &exhaustive()).unwrap();
        assert!(c.passed);
        assert_eq!(c.instances_checked, 63);
        let c = check_lemma_div(30, &single(&[1, 3, 8])).unwrap();
        assert!(c.passed);
        assert_eq!((c.mode, c.instances_checked), (Mode::Single, 1));
    }

    #[test]
    fn clique_bound_examples() {
        let c = check_clique_bound(10, &exhaustive()).unwrap();
        assert!(c.passed);
        assert_eq!(c.instances_checked, 31);
        let c = check_clique_bound(6, &single(&[2])).unwrap();
        assert!(c.passed);
        assert_eq!(c.evidence.get("omega=3"), Some(&1));
        let c = check_clique_bound(7, &single(&[1])).unwrap();
        assert_eq!(c.evidence.get("omega=2"), Some(&1));
    }

    #[test]
    fn two_q_examples() {
        let c = check_lemma_2q(5, &single(&[2, 4])).unwrap();
        assert!(c.passed);
        assert_eq!(c.evidence.get("evens_in_S"), Some(&1));
        let c = check_lemma_2q(5, &single(&[1, 2])).unwrap();
        assert!(c.passed);
        assert_eq!(c.evidence.get("evens_missing"), Some(&1));
        assert!(check_lemma_2q(3, &exhaustive()).unwrap().passed);
        assert!(check_lemma_2q(4, &exhaustive()).is_err());
        assert!(check_lemma_2q(1, &exhaustive()).is_err());
    }

    #[test]
    fn dq1_examples() {
        let c = check_lemma_dq1(3, 5, &single(&[1])).unwrap();
        assert!(c.passed);
        assert_eq!(c.evidence.get("multiple_missing"), Some(&1));
        let c = check_lemma_dq1(4, 5, &exhaustive()).unwrap();
        assert!(c.passed);
        assert_eq!(c.instances_checked, (1 << 10) - 1);
        assert!(check_lemma_dq1(2, 5, &exhaustive()).unwrap().passed);
        assert!(check_lemma_dq1(1, 5, &exhaustive()).is_err());
        assert!(check_lemma_dq1(3, 4, &exhaustive()).is_err());
        assert!(check_lemma_dq1(9, 9, &exhaustive()).is_err());
    }

    #[test]
    fn condition_evaluation() {
        let s: ConnectionSet = "1-24^5".parse().unwrap();
        assert!(!condition_a(&s));
        assert!(!condition_b(&s, 5, 25));
        let s: ConnectionSet = "1-24^7".parse().unwrap();
        assert!(condition_b(&s, 5, 25));
        assert!(condition_a(&"2,4".parse().unwrap()));
    }

    #[test]
    fn congruence_examples() {
        let c = check_congruence(3, 1, &single(&[1])).unwrap();
        assert!(c.passed);
        assert_eq!(c.evidence.get("count=0"), Some(&1));
        let c = check_congruence(3, 2, &single(&[1, 2, 3, 4, 5, 6, 7, 8, 9])).unwrap();
        assert!(c.passed);
        assert_eq!(c.evidence.get("count>2,mod_p=2"), Some(&1));
        let c = check_congruence(5, 2, &single(&(1..=24).filter(|&s| s != 5).collect::<Vec<_>>())).unwrap();
        assert!(c.passed);
        assert_eq!(c.evidence.get("count>2,mod_p=2"), Some(&1));
        assert!(!c.evidence.contains_key("condition_fired"));
        assert!(check_congruence(2, 1, &exhaustive()).is_err());
        assert!(check_congruence(9, 1, &exhaustive()).is_err());
        assert!(check_congruence(3, 0, &exhaustive()).is_err());
        assert!(check_congruence(7, 2, &exhaustive()).is_err());
    }

    #[test]
    fn nonvanishing_small() {
        let c = verify_nonvanishing(9, &exhaustive()).unwrap();
        assert!(c.passed);
        assert_eq!(c.statement_id, StatementId::ThmPk);
        assert_eq!(c.instances_checked, 15);
        // every chi is -1 mod 3
        assert_eq!(c.evidence.keys().collect::<Vec<_>>(), ["chi_mod_p=2"]);
        let c = verify_nonvanishing(10, &exhaustive()).unwrap();
        assert!(c.passed);
        assert_eq!(c.statement_id, StatementId::Thm2Pk);
        assert!(c.evidence.keys().all(|k| k == "chi_mod_p=1" || k == "chi_mod_p=4"));
        assert!(verify_nonvanishing(2, &exhaustive()).unwrap().passed);
        assert!(verify_nonvanishing(12, &exhaustive()).is_err());
        assert!(verify_nonvanishing(8, &exhaustive()).unwrap().passed);
    }

    #[test]
    fn failing_certificate_carries_minimal_counterexample() {
        // n = 30 is outside both nonvanishing statements, so the nonvanishing body fails there.
        let inst = instances(30, Filter::NonEmpty, &single(&[1, 3, 8]), None).unwrap();
        let cert = run(
            StatementId::ThmPk,
            Parameters { n: 30, ..Default::default() },
            inst,
            &exhaustive(),
            |g| {
                let chi = invariants::reduced_euler(&counting::fvector(g, Engine::Auto)?);
                Ok(Outcome::new(chi != 0, format!("chi={chi}")).observe("chi", chi))
            },
        )
        .unwrap();
        assert!(!cert.passed);
        let cx = cert.counterexample.clone().unwrap();
        assert_eq!(cx.set.to_string(), "1,3,8");
        assert_eq!(cx.observed["chi"], 0);
        let back = CheckCertificate::from_record(&cert.to_record()).unwrap();
        assert_eq!(back, cert);

        let inst = instances(12, Filter::NonEmpty, &exhaustive(), None).unwrap();
        let cert = run(
            StatementId::CliqueBound,
            Parameters { n: 12, ..Default::default() },
            inst,
            &exhaustive(),
            |g| Ok(Outcome::new(counting::clique_number(g) < 3, String::new())),
        )
        .unwrap();
        assert!(!cert.passed);
        // {1,2} is the lexicographically least S with a triangle
        assert_eq!(cert.counterexample.unwrap().set.to_string(), "1,2");
    }

    #[test]
    fn certificates_are_reproducible() {
        let mut cfg = CheckConfig {
            exhaustive_limit: 4,
            samples: 40,
            ..Default::default()
        };
        let a = check_lemma_div(22, &cfg).unwrap();
        cfg.workers = 4;
        let b = check_lemma_div(22, &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.mode, Mode::Sampled);
        assert_eq!(a.seed, Some(DEFAULT_SEED));
        assert_eq!(a.instances_checked, 40);
        cfg.seed = 7;
        let c = check_lemma_div(22, &cfg).unwrap();
        assert_ne!(a.evidence_digest, c.evidence_digest);
    }
}
