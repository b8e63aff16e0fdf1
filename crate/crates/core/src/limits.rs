//! Capacity caps, overridable from the environment.

use std::env;

pub const ORACLE_MAX_N_VAR: &str = "CIRCULANT_ORACLE_MAX_N";
pub const SEARCH_MAX_N_VAR: &str = "CIRCULANT_SEARCH_MAX_N";
pub const MEMO_BYTES_VAR: &str = "CIRCULANT_MEMO_BYTES";

pub const DEFAULT_ORACLE_MAX_N: usize = 26;
pub const DEFAULT_SEARCH_MAX_N: usize = 40;
pub const DEFAULT_MEMO_BYTES: usize = 512 << 20;

/// Largest order the graph representation supports (one machine word per
/// neighborhood).
pub const MAX_ORDER: usize = 64;

fn read(var: &str, default: usize) -> usize {
    env::var(var)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

/// Largest n for the full subset sweep. Never above 30 (the sweep keeps one
/// bit per subset).
pub fn oracle_max_n() -> usize {
    read(ORACLE_MAX_N_VAR, DEFAULT_ORACLE_MAX_N).min(30)
}

pub fn search_max_n() -> usize {
    read(SEARCH_MAX_N_VAR, DEFAULT_SEARCH_MAX_N).min(MAX_ORDER)
}

pub fn memo_bytes() -> usize {
    read(MEMO_BYTES_VAR, DEFAULT_MEMO_BYTES)
}
