//! Exact independence-complex invariants of circulant graphs `C_n(S)`.

pub mod checks;
pub mod cli;
pub mod counting;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod limits;
mod parallel;
pub mod poly;
pub mod search;
pub mod table;

pub use counting::{Engine, FVector, RootedCounts};
pub use error::{Error, Result};
pub use graph::{CanonicalClass, CirculantGraph, ConnectionSet};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
