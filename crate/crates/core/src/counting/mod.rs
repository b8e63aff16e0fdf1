//! Exact face counts of independence complexes.
//!
//! Three engines produce the f-vector: a full subset sweep (the oracle), a
//! branch-and-factor recursion, and a rooted mode that counts only the faces
//! through vertex 0 and scales them by `n / i`. Clique quantities are
//! computed on the complement graph, whose independence complex is the
//! clique complex of the original.

mod clique;
mod oracle;
mod split;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::limits;

pub use clique::maximum_clique as maximum_clique_in;
pub use split::SplitCounter;

/// `(f_{-1}, f_0, ..., f_{d-1})` where `f_{i-1}` counts independent sets of
/// size `i`. `f_{-1} = 1` always.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    /// Validates the shape: leading 1, every entry positive.
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.first() != Some(&1) {
            return Err(Error::Internal(format!(
                "f-vector must start with f_-1 = 1, got {counts:?}"
            )));
        }
        if counts.contains(&0) {
            return Err(Error::Internal(format!(
                "f-vector entries must be positive, got {counts:?}"
            )));
        }
        Ok(FVector { counts })
    }

    /// `d`, the size of a largest face.
    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of faces with `size` vertices (`f_{size-1}`), zero past `d`.
    pub fn faces_of_size(&self, size: usize) -> u64 {
        self.counts.get(size).copied().unwrap_or(0)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// `f_{i-1,0}` for `i = 1..=d`: faces of size `i` that contain vertex 0.
/// Stored at index `i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootedCounts {
    counts: Vec<u64>,
}

impl RootedCounts {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Faces of size `size >= 1` through vertex 0.
    pub fn through_zero(&self, size: usize) -> u64 {
        size.checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    #[default]
    Auto,
    Brute,
    Split,
    Rooted,
}

impl Engine {
    pub const ALL: [Engine; 4] = [Engine::Auto, Engine::Brute, Engine::Split, Engine::Rooted];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Auto => "auto",
            Engine::Brute => "brute",
            Engine::Split => "split",
            Engine::Rooted => "rooted",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown engine {s:?}")))
    }
}

pub fn is_independent(g: &CirculantGraph, vertices: &[usize]) -> bool {
    let mut mask = 0u64;
    for &v in vertices {
        assert!(v < g.order(), "vertex {v} outside C{}", g.order());
        mask |= 1 << v;
    }
    is_independent_mask(g, mask)
}

pub fn is_independent_mask(g: &CirculantGraph, mask: u64) -> bool {
    crate::graph::BitIter(mask).all(|v| g.neighborhood(v) & mask == 0)
}

pub fn fvector_oracle(g: &CirculantGraph) -> Result<FVector> {
    FVector::new(oracle::independent_set_counts(g)?)
}

fn split_polynomial(g: &CirculantGraph, mask: u64) -> Result<Vec<u64>> {
    SplitCounter::new(g.neighborhoods(), limits::memo_bytes()).polynomial(mask)
}

fn rooted_polynomial(g: &CirculantGraph) -> Result<Vec<u64>> {
    let residual = g.vertex_mask() & !1 & !g.neighborhood(0);
    split_polynomial(g, residual)
}

pub fn fvector(g: &CirculantGraph, engine: Engine) -> Result<FVector> {
    match engine {
        Engine::Brute => fvector_oracle(g),
        Engine::Split => FVector::new(split_polynomial(g, g.vertex_mask())?),
        Engine::Rooted => {
            let n = g.order() as u64;
            let rooted = rooted_polynomial(g)?;
            let mut counts = Vec::with_capacity(rooted.len() + 1);
            counts.push(1);
            for (idx, &through_zero) in rooted.iter().enumerate() {
                let size = idx as u64 + 1;
                let scaled = through_zero
                    .checked_mul(n)
                    .ok_or(Error::Overflow("scaling rooted counts"))?;
                if scaled % size != 0 {
                    return Err(Error::Internal(format!(
                        "{g}: n * f_({idx},0) = {scaled} is not divisible by {size}"
                    )));
                }
                counts.push(scaled / size);
            }
            FVector::new(counts)
        }
        Engine::Auto => {
            let f = fvector(g, Engine::Split)?;
            #[cfg(debug_assertions)]
            if g.order() <= 12 {
                debug_assert_eq!(f, fvector_oracle(g)?, "split engine disagrees on {g}");
            }
            Ok(f)
        }
    }
}

/// Counts faces through vertex 0 by counting on `G - N[0]`.
pub fn rooted_counts(g: &CirculantGraph) -> Result<RootedCounts> {
    Ok(RootedCounts {
        counts: rooted_polynomial(g)?,
    })
}

/// A maximum clique of `g`, sorted.
pub fn maximum_clique(g: &CirculantGraph) -> Vec<usize> {
    clique::maximum_clique(g.neighborhoods(), g.vertex_mask())
}

/// `omega(g)`.
pub fn clique_number(g: &CirculantGraph) -> usize {
    maximum_clique(g).len()
}

/// Number of cliques with exactly `size` vertices, counted as independent
/// sets of the complement.
pub fn cliques_of_size(g: &CirculantGraph, size: usize) -> Result<u64> {
    if size == 0 || size > g.order() {
        return Err(Error::Parameter(format!(
            "clique size {size} outside 1..={}",
            g.order()
        )));
    }
    let complement = g.complement();
    clique::FixedSizeCounter::new(complement.neighborhoods(), limits::memo_bytes())
        .count(complement.vertex_mask(), size)
}

/// Full clique-count vector of `g` (the f-vector of the clique complex),
/// by the subset sweep.
pub fn clique_counts_oracle(g: &CirculantGraph) -> Result<Vec<u64>> {
    oracle::clique_counts(g)
}
