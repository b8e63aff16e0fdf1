//! Maximum cliques and fixed-size clique counts.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::BitIter;
use crate::poly;

use super::split::{component_of, max_degree_vertex};

/// Greedy partition of `mask` into independent sets of the graph `adj`,
/// returned as (vertex, color) pairs in non-decreasing color order. The
/// number of colors bounds the clique number of the induced subgraph.
fn greedy_coloring(adj: &[u64], mask: u64, order: &mut Vec<(usize, u32)>) {
    order.clear();
    let mut uncolored = mask;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
}

/// A maximum clique, by branch and bound with a greedy coloring bound.
pub fn maximum_clique(adj: &[u64], mask: u64) -> Vec<usize> {
    struct Search<'a> {
        adj: &'a [u64],
        best: Vec<usize>,
        current: Vec<usize>,
    }

    impl Search<'_> {
        fn expand(&mut self, mut cand: u64) {
            let mut order = Vec::new();
            greedy_coloring(self.adj, cand, &mut order);
            for &(v, color) in order.iter().rev() {
                if self.current.len() + color as usize <= self.best.len() {
                    return;
                }
                self.current.push(v);
                let next = cand & self.adj[v];
                if next == 0 {
                    if self.current.len() > self.best.len() {
                        self.best = self.current.clone();
                    }
                } else {
                    self.expand(next);
                }
                self.current.pop();
                cand &= !(1 << v);
            }
        }
    }

    let mut search = Search {
        adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.expand(mask);
    search.best.sort_unstable();
    search.best
}

/// Counts independent sets of one fixed size in the graph `adj`, pruning
/// residual subgraphs whose clique-cover bound on the independence number
/// falls short of the size still needed.
pub struct FixedSizeCounter<'a> {
    adj: &'a [u64],
    memo: FxHashMap<(u64, u32), u64>,
    max_entries: usize,
}

impl<'a> FixedSizeCounter<'a> {
    pub fn new(adj: &'a [u64], budget_bytes: usize) -> Self {
        FixedSizeCounter {
            adj,
            memo: FxHashMap::default(),
            max_entries: budget_bytes / 32,
        }
    }

    /// Greedy clique cover size of `mask`; an upper bound on its
    /// independence number.
    fn cover_bound(&self, mut rest: u64) -> usize {
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let mut clique = 1u64 << v;
            let mut cand = rest & self.adj[v];
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                clique |= 1 << u;
                cand &= self.adj[u];
            }
            rest &= !clique;
            cliques += 1;
        }
        cliques
    }

    pub fn count(&mut self, mask: u64, size: usize) -> Result<u64> {
        if size == 0 {
            return Ok(1);
        }
        let present = mask.count_ones() as usize;
        if present < size {
            return Ok(0);
        }
        if size == 1 {
            return Ok(present as u64);
        }
        if BitIter(mask).all(|v| self.adj[v] & mask == 0) {
            return poly::binomial(present, size);
        }
        if self.cover_bound(mask) < size {
            return Ok(0);
        }
        let key = (mask, size as u32);
        if let Some(&c) = self.memo.get(&key) {
            return Ok(c);
        }

        let first = component_of(self.adj, mask, mask.trailing_zeros() as usize);
        let result = if first != mask {
            // Convolve per-component counts up to the requested size.
            let mut acc = vec![1u64];
            let mut rest = mask;
            while rest != 0 {
                let comp = component_of(self.adj, rest, rest.trailing_zeros() as usize);
                let top = self.cover_bound(comp).min(size);
                let mut counts = Vec::with_capacity(top + 1);
                for j in 0..=top {
                    counts.push(self.count(comp, j)?);
                }
                acc = poly::mul(&acc, &counts)?;
                acc.truncate(size + 1);
                rest &= !comp;
            }
            acc.get(size).copied().unwrap_or(0)
        } else {
            let v = max_degree_vertex(self.adj, mask);
            let without = self.count(mask & !(1 << v), size)?;
            let with = self.count(mask & !(1 << v) & !self.adj[v], size - 1)?;
            without
                .checked_add(with)
                .ok_or(Error::Overflow("counting fixed-size independent sets"))?
        };
        if self.memo.len() < self.max_entries {
            self.memo.insert(key, result);
        }
        Ok(result)
    }
}
