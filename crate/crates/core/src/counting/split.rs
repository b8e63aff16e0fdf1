//! Branch-and-factor counting of independent sets.
//!
//! `I(G) = I(G - v) + x I(G - N[v])` for a maximum-degree vertex `v`, with
//! isolated vertices factored out as `(1 + x)^k` and connected components
//! multiplied. Results are memoized per residual vertex set while the memo
//! stays under its byte budget.

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::graph::BitIter;
use crate::poly;

pub struct SplitCounter<'a> {
    adj: &'a [u64],
    memo: FxHashMap<u64, Vec<u64>>,
    memo_bytes: usize,
    budget: usize,
}

/// Rough per-entry footprint of the memo table.
fn entry_bytes(p: &[u64]) -> usize {
    48 + 8 * p.len()
}

impl<'a> SplitCounter<'a> {
    pub fn new(adj: &'a [u64], budget: usize) -> Self {
        SplitCounter {
            adj,
            memo: FxHashMap::default(),
            memo_bytes: 0,
            budget,
        }
    }

    /// Independence polynomial of the subgraph induced on `mask`.
    pub fn polynomial(&mut self, mask: u64) -> Result<Vec<u64>> {
        if mask == 0 {
            return Ok(vec![1]);
        }
        if mask & (mask - 1) == 0 {
            return Ok(vec![1, 1]);
        }
        let isolated = BitIter(mask)
            .filter(|&v| self.adj[v] & mask == 0)
            .fold(0u64, |m, v| m | 1 << v);
        if isolated != 0 {
            let rest = self.polynomial(mask & !isolated)?;
            return poly::mul(&rest, &poly::binomial_row(isolated.count_ones() as usize)?);
        }
        if let Some(p) = self.memo.get(&mask) {
            return Ok(p.clone());
        }

        let first = component_of(self.adj, mask, mask.trailing_zeros() as usize);
        let result = if first != mask {
            let mut acc = vec![1u64];
            let mut rest = mask;
            while rest != 0 {
                let comp = component_of(self.adj, rest, rest.trailing_zeros() as usize);
                acc = poly::mul(&acc, &self.polynomial(comp)?)?;
                rest &= !comp;
            }
            acc
        } else {
            let v = max_degree_vertex(self.adj, mask);
            let mut acc = self.polynomial(mask & !(1 << v))?;
            let with_v = self.polynomial(mask & !(1 << v) & !self.adj[v])?;
            poly::add_shifted(&mut acc, &with_v, 1)?;
            acc
        };

        let cost = entry_bytes(&result);
        if self.memo_bytes + cost <= self.budget {
            self.memo_bytes += cost;
            self.memo.insert(mask, result.clone());
        }
        Ok(result)
    }
}

/// Connected component of `start` inside `mask`.
pub fn component_of(adj: &[u64], mask: u64, start: usize) -> u64 {
    let mut comp = 1u64 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let reach = BitIter(frontier).fold(0u64, |m, v| m | adj[v]) & mask & !comp;
        comp |= reach;
        frontier = reach;
    }
    comp
}

/// Highest residual degree; ties go to the lowest index.
pub fn max_degree_vertex(adj: &[u64], mask: u64) -> usize {
    let mut best = (0u32, usize::MAX);
    for v in BitIter(mask) {
        let d = (adj[v] & mask).count_ones();
        if best.1 == usize::MAX || d > best.0 {
            best = (d, v);
        }
    }
    best.1
}
