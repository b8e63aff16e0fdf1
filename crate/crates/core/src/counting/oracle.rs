//! Full subset sweep. Every subset of the vertex set is tested; this is the
//! ground truth the faster engines are compared against.

use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::limits;

/// Face counts by size, `counts[i]` = number of independent `i`-sets.
pub fn independent_set_counts(g: &CirculantGraph) -> Result<Vec<u64>> {
    let n = g.order();
    let cap = limits::oracle_max_n();
    if n > cap {
        return Err(Error::Capacity {
            what: "n for the subset sweep",
            value: n,
            limit: cap,
        });
    }
    let adj = g.neighborhoods();
    let total = 1usize << n;
    // One bit per subset: set iff the subset is independent.
    let mut independent = vec![0u64; total.div_ceil(64)];
    independent[0] = 1;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for subset in 1..total {
        let low = subset.trailing_zeros() as usize;
        let rest = subset & (subset - 1);
        let ok = independent[rest >> 6] >> (rest & 63) & 1 == 1 && adj[low] & rest as u64 == 0;
        if ok {
            independent[subset >> 6] |= 1 << (subset & 63);
            counts[subset.count_ones() as usize] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

/// Clique counts by size, found by testing every subset for pairwise
/// adjacency.
pub fn clique_counts(g: &CirculantGraph) -> Result<Vec<u64>> {
    independent_set_counts(&g.complement())
}
