//! Invariants derived from an f-vector: h-vector, reduced Euler
//! characteristic, independence polynomial, and the Hilbert series data of
//! the Stanley–Reisner ring `R / I(G)`.
//!
//! The regularity index follows the dichotomy `ri = 0` iff `h_d = 0`, else
//! `ri = 1`, which is taken as given for Stanley–Reisner rings rather than
//! derived from the Hilbert function.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::counting::{self, Engine, FVector};
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector {
    pub entries: Vec<i128>,
}

impl HVector {
    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    /// `h_d`.
    pub fn last(&self) -> i128 {
        self.entries[self.dim()]
    }
}

/// `h_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`.
pub fn hvector(f: &FVector) -> Result<HVector> {
    let d = f.dim();
    let binom = poly::pascal(d)?;
    let mut entries = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let term = binom[d - i][k - i]
                .checked_mul(f.counts()[i] as i128)
                .ok_or(Error::Overflow("computing the h-vector"))?;
            acc = if (k - i) % 2 == 0 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            }
            .ok_or(Error::Overflow("computing the h-vector"))?;
        }
        entries.push(acc);
    }
    Ok(HVector { entries })
}

/// Inverse transform: `f_{k-1} = sum_{i=0}^{k} C(d-i, k-i) h_i`.
pub fn fvector_from_hvector(h: &HVector) -> Result<Vec<i128>> {
    let d = h.dim();
    let binom = poly::pascal(d)?;
    (0..=d)
        .map(|k| {
            (0..=k).try_fold(0i128, |acc, i| {
                binom[d - i][k - i]
                    .checked_mul(h.entries[i])
                    .and_then(|t| acc.checked_add(t))
                    .ok_or(Error::Overflow("inverting the h-vector"))
            })
        })
        .collect()
}

/// `sum_{i=0}^{d} (-1)^{i-1} f_{i-1}`.
pub fn reduced_euler(f: &FVector) -> i128 {
    f.counts()
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { -(c as i128) } else { c as i128 })
        .sum()
}

/// `I(G, x) = sum_i f_{i-1} x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependencePolynomial {
    pub coefficients: Vec<u64>,
}

impl IndependencePolynomial {
    pub fn from_fvector(f: &FVector) -> Self {
        IndependencePolynomial {
            coefficients: f.counts().to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Exact value at an integer point (Horner).
    pub fn evaluate(&self, x: i64) -> Result<i128> {
        self.coefficients.iter().rev().try_fold(0i128, |acc, &c| {
            acc.checked_mul(x as i128)
                .and_then(|v| v.checked_add(c as i128))
                .ok_or(Error::Overflow("evaluating the independence polynomial"))
        })
    }
}

impl fmt::Display for IndependencePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signed: Vec<i128> = self.coefficients.iter().map(|&c| c as i128).collect();
        f.write_str(&format_polynomial(&signed, 'x'))
    }
}

pub fn independence_polynomial(g: &CirculantGraph, engine: Engine) -> Result<IndependencePolynomial> {
    Ok(IndependencePolynomial::from_fvector(&counting::fvector(g, engine)?))
}

/// Numerator and derived numerics of `HP(t) = h(t) / (1 - t)^d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicSummary {
    /// Krull dimension `d`.
    pub krull_dimension: usize,
    /// `h(t)`, trailing zeros trimmed.
    pub hilbert_numerator: Vec<i128>,
    pub regularity_index: u8,
    /// Degree of `HP(t)` as a rational function, `deg h - d`. Writing the
    /// series over `(1 - t)^n` multiplies numerator and denominator by the
    /// same power of `1 - t`, so this does not depend on the normalization.
    pub a_invariant: i64,
}

impl AlgebraicSummary {
    pub fn numerator_degree(&self) -> usize {
        self.hilbert_numerator.len() - 1
    }

    /// First `terms` values of the Hilbert function, by expanding
    /// `h(t) / (1 - t)^d` as a power series.
    pub fn hilbert_series(&self, terms: usize) -> Result<Vec<i128>> {
        let mut series = vec![0i128; terms];
        for (i, &h) in self.hilbert_numerator.iter().enumerate().take(terms) {
            series[i] = h;
        }
        // Dividing by (1 - t) is a running prefix sum.
        for _ in 0..self.krull_dimension {
            for k in 1..terms {
                series[k] = series[k]
                    .checked_add(series[k - 1])
                    .ok_or(Error::Overflow("expanding the Hilbert series"))?;
            }
        }
        Ok(series)
    }
}

pub fn algebraic_summary(f: &FVector) -> Result<AlgebraicSummary> {
    let h = hvector(f)?;
    let mut numerator = h.entries.clone();
    while numerator.last() == Some(&0) {
        numerator.pop();
    }
    if numerator.is_empty() {
        return Err(Error::Internal("Hilbert numerator vanished".into()));
    }
    let d = f.dim();
    Ok(AlgebraicSummary {
        krull_dimension: d,
        regularity_index: u8::from(h.last() != 0),
        a_invariant: (numerator.len() - 1) as i64 - d as i64,
        hilbert_numerator: numerator,
    })
}

/// Human-readable form, e.g. `1 + 2t - t^2`.
pub fn format_polynomial(coefficients: &[i128], var: char) -> String {
    let mut out = String::new();
    for (i, &c) in coefficients.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let magnitude = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        match (i, magnitude) {
            (0, m) => out.push_str(&m.to_string()),
            (_, 1) => {}
            (_, m) => out.push_str(&m.to_string()),
        }
        match i {
            0 => {}
            1 => out.push(var),
            _ => out.push_str(&format!("{var}^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Generators of the edge ideal `I(G) = (x_i x_j : {i,j} in E(G))`.
pub fn edge_ideal(g: &CirculantGraph) -> String {
    let mut gens = Vec::new();
    for i in 0..g.order() {
        for j in crate::graph::BitIter(g.neighborhood(i)) {
            if i < j {
                gens.push(format!("x{i}*x{j}"));
            }
        }
    }
    format!("({})", gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::full_mask;
    use proptest::prelude::*;

    fn fv(c: &[u64]) -> FVector {
        FVector::new(c.to_vec()).unwrap()
    }

    fn g(n: usize, s: &[i64]) -> CirculantGraph {
        CirculantGraph::new(n, s.iter().copied()).unwrap()
    }

    const PAPER_F: [u64; 10] = [1, 30, 345, 1990, 6360, 11736, 12600, 7680, 2430, 300];

    #[test]
    fn hvector_examples() {
        assert_eq!(hvector(&fv(&[1, 4, 2])).unwrap().entries, [1, 2, -1]);
        assert_eq!(hvector(&fv(&[1, 3])).unwrap().entries, [1, 2]);
        assert_eq!(hvector(&fv(&[1, 3, 3, 1])).unwrap().entries, [1, 0, 0, 0]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(reduced_euler(&fv(&PAPER_F)), 0);
        assert_eq!(reduced_euler(&fv(&[1, 5, 5])), -1);
        assert_eq!(reduced_euler(&fv(&[1, 3, 3, 1])), 0);
        // Alternating sum written out term by term.
        let by_hand: i128 = -1 + 30 - 345 + 1990 - 6360 + 11736 - 12600 + 7680 - 2430 + 300;
        assert_eq!(by_hand, 0);
    }

    #[test]
    fn polynomial_examples() {
        let p = independence_polynomial(&g(10, &[5]), Engine::Auto).unwrap();
        assert_eq!(p.coefficients, [1, 10, 40, 80, 80, 32]);
        let p = independence_polynomial(&g(6, &[1, 2, 3]), Engine::Auto).unwrap();
        assert_eq!(p.coefficients, [1, 6]);
        assert_eq!(p.to_string(), "1 + 6x");
        let p = independence_polynomial(&g(30, &[1, 3, 8]), Engine::Auto).unwrap();
        assert_eq!(p.evaluate(-1).unwrap(), 0);
        assert_eq!(p.evaluate(0).unwrap(), 1);
        assert_eq!(p.evaluate(1).unwrap(), PAPER_F.iter().sum::<u64>() as i128);
    }

    #[test]
    fn summary_examples() {
        let s = algebraic_summary(&fv(&[1, 3])).unwrap();
        assert_eq!((s.hilbert_numerator.clone(), s.regularity_index, s.a_invariant), (vec![1, 2], 1, 0));
        let s = algebraic_summary(&fv(&[1, 3, 3, 1])).unwrap();
        assert_eq!((s.hilbert_numerator.clone(), s.regularity_index, s.a_invariant), (vec![1], 0, -3));
        let s = algebraic_summary(&fv(&[1, 4, 2])).unwrap();
        assert_eq!((s.hilbert_numerator.clone(), s.regularity_index, s.a_invariant), (vec![1, 2, -1], 1, 0));
        assert_eq!(format_polynomial(&s.hilbert_numerator, 't'), "1 + 2t - t^2");
    }

    #[test]
    fn formatting() {
        assert_eq!(format_polynomial(&[0, -1, 0, 3], 't'), "-t + 3t^3");
        assert_eq!(format_polynomial(&[], 'x'), "0");
        assert_eq!(edge_ideal(&g(4, &[1])), "(x0*x1, x0*x3, x1*x2, x2*x3)");
        assert_eq!(edge_ideal(&g(4, &[])), "()");
    }

    /// Number of degree-`k` monomials in `n` variables whose support is an
    /// independent set, by listing multisets.
    fn hilbert_function_brute(graph: &CirculantGraph, k: usize) -> i128 {
        fn go(graph: &CirculantGraph, start: usize, left: usize, support: u64) -> i128 {
            if left == 0 {
                return 1;
            }
            (start..graph.order())
                .filter(|&v| support >> v & 1 == 1 || graph.neighborhood(v) & support == 0)
                .map(|v| go(graph, v, left - 1, support | 1 << v))
                .sum()
        }
        go(graph, 0, k, 0)
    }

    #[test]
    fn hilbert_series_counts_standard_monomials() {
        for (n, s) in [(5, vec![1]), (6, vec![2]), (7, vec![1, 3]), (8, vec![]), (6, vec![1, 2, 3])] {
            let graph = g(n, &s);
            let f = counting::fvector(&graph, Engine::Auto).unwrap();
            let series = algebraic_summary(&f).unwrap().hilbert_series(7).unwrap();
            for (k, &value) in series.iter().enumerate() {
                assert_eq!(value, hilbert_function_brute(&graph, k), "{graph} k={k}");
            }
        }
    }

    proptest! {
        #[test]
        fn structural_identities(n in 2usize..=30, raw in any::<u64>()) {
            let graph = CirculantGraph::from_mask(n, raw & full_mask(n / 2 + 1) & !1).unwrap();
            let f = counting::fvector(&graph, Engine::Split).unwrap();
            let d = f.dim();
            let h = hvector(&f).unwrap();
            let chi = reduced_euler(&f);
            prop_assert_eq!(h.entries[0], 1);
            prop_assert_eq!(h.entries.iter().sum::<i128>(), f.faces_of_size(d) as i128);
            let sign = if d % 2 == 1 { 1 } else { -1 };
            prop_assert_eq!(h.last(), sign * chi);
            let p = IndependencePolynomial::from_fvector(&f);
            prop_assert_eq!(p.coefficients[1], n as u64);
            prop_assert_eq!(-p.evaluate(-1).unwrap(), chi);
            let back = fvector_from_hvector(&h).unwrap();
            prop_assert_eq!(back, f.counts().iter().map(|&c| c as i128).collect::<Vec<_>>());
            let s = algebraic_summary(&f).unwrap();
            prop_assert!(s.regularity_index <= 1);
            prop_assert_eq!(s.regularity_index == 0, h.last() == 0);
            prop_assert_eq!(s.a_invariant, s.numerator_degree() as i64 - d as i64);
            prop_assert!(s.a_invariant <= 0);
            let series = s.hilbert_series(3).unwrap();
            prop_assert_eq!(series[0], 1);
            prop_assert_eq!(series[1], n as i128);
        }
    }
}
