//! Circulant graphs `C_n(S)` on `Z_n`, their complements, and the multiplier
//! action `S -> aS` used to deduplicate connection sets.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;

/// Bit mask of the first `n` vertices.
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_order(n: usize) -> Result<()> {
    if (2..=limits::MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidOrder(n))
    }
}

/// Circular distance `|k|_n = min(k mod n, n - k mod n)`.
pub fn distance_norm(k: i64, n: usize) -> Result<usize> {
    check_order(n)?;
    let r = k.rem_euclid(n as i64) as usize;
    Ok(r.min(n - r))
}

/// A strictly increasing list of distances.
///
/// Ordering is lexicographic on the sorted sequence, so `{1,2} < {1,2,3} <
/// {1,3} < {2}`; this is the order used to pick orbit representatives.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConnectionSet(Vec<usize>);

impl ConnectionSet {
    pub fn new<I: IntoIterator<Item = usize>>(items: I) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ConnectionSet(v)
    }

    pub fn from_mask(mask: u64) -> Self {
        ConnectionSet(BitIter(mask).collect())
    }

    /// Bit `s` set for each distance `s`. Distances must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &s| m | 1u64 << s)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.0.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// `T = {1, ..., n/2}`.
    pub fn full(n: usize) -> Self {
        ConnectionSet((1..=n / 2).collect())
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn parse_items(input: &str, part: &str, out: &mut Vec<usize>) -> Result<()> {
    let err = |reason: String| Error::Parse {
        input: input.to_string(),
        reason,
    };
    let num = |tok: &str| -> Result<usize> {
        let tok = tok.trim();
        let v: usize = tok
            .parse()
            .map_err(|_| err(format!("{tok:?} is not a positive integer")))?;
        if v == 0 {
            return Err(err("distances must be positive".into()));
        }
        Ok(v)
    };
    for item in part.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        match item.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi {
                    return Err(err(format!("empty range {item:?}")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(item)?),
        }
    }
    Ok(())
}

/// Accepts `"1,3,8"`, ranges `"1-24"`, and exclusions after `^`, so that
/// `"1-24^5"` is `{1..24} \ {5}`. The empty string (or `{}`) is the empty set.
impl FromStr for ConnectionSet {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let body = input.trim().trim_start_matches('{').trim_end_matches('}');
        let mut parts = body.split('^');
        let mut include = Vec::new();
        parse_items(input, parts.next().unwrap_or(""), &mut include)?;
        let mut exclude = Vec::new();
        for part in parts {
            parse_items(input, part, &mut exclude)?;
        }
        Ok(ConnectionSet::new(
            include.into_iter().filter(|s| !exclude.contains(s)),
        ))
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Compares two distance masks as sorted sequences (the `ConnectionSet`
/// order) without materializing them.
pub fn lex_cmp_masks(x: u64, y: u64) -> Ordering {
    let diff = x ^ y;
    if diff == 0 {
        return Ordering::Equal;
    }
    let b = diff.trailing_zeros();
    let above = |m: u64| b < 63 && (m >> (b + 1)) != 0;
    if x >> b & 1 == 1 {
        // x continues with b, y continues with something larger or stops.
        if above(y) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(x) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// `C_n(S)`: vertices `Z_n`, `i ~ j` iff `|j - i|_n` is in `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantGraph {
    n: usize,
    set: ConnectionSet,
    neighborhoods: Vec<u64>,
}

impl CirculantGraph {
    pub fn new<I: IntoIterator<Item = i64>>(n: usize, distances: I) -> Result<Self> {
        check_order(n)?;
        let max = n / 2;
        let mut set = Vec::new();
        for d in distances {
            if d < 1 || d as usize > max {
                return Err(Error::DistanceOutOfRange { value: d, n, max });
            }
            set.push(d as usize);
        }
        Ok(Self::from_set_unchecked(n, ConnectionSet::new(set)))
    }

    pub fn from_set(n: usize, set: &ConnectionSet) -> Result<Self> {
        Self::new(n, set.iter().map(|s| s as i64))
    }

    /// Builds from a distance mask whose bits lie in `1..=n/2`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        check_order(n)?;
        let valid = full_mask(n / 2 + 1) & !1;
        if mask & !valid != 0 {
            let bad = (mask & !valid).trailing_zeros() as i64;
            return Err(Error::DistanceOutOfRange {
                value: bad,
                n,
                max: n / 2,
            });
        }
        Ok(Self::from_set_unchecked(n, ConnectionSet::from_mask(mask)))
    }

    fn from_set_unchecked(n: usize, set: ConnectionSet) -> Self {
        let full = full_mask(n);
        let mut base = 0u64;
        for s in set.iter() {
            base |= 1u64 << s;
            base |= 1u64 << (n - s);
        }
        // Neighborhood of v is the neighborhood of 0 rotated by v.
        let neighborhoods = (0..n)
            .map(|v| {
                if v == 0 {
                    base & full
                } else {
                    ((base << v) | (base >> (n - v))) & full
                }
            })
            .collect();
        CirculantGraph {
            n,
            set,
            neighborhoods,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.set
    }

    /// One bit set per neighbor of `v`.
    #[inline]
    pub fn neighborhood(&self, v: usize) -> u64 {
        self.neighborhoods[v]
    }

    pub fn neighborhoods(&self) -> &[u64] {
        &self.neighborhoods
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn degree(&self) -> usize {
        self.neighborhoods[0].count_ones() as usize
    }

    pub fn is_edgeless(&self) -> bool {
        self.set.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.set.len() == self.n / 2
    }

    pub fn adjacent(&self, i: usize, j: usize) -> Result<bool> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(self.neighborhoods[i] >> j & 1 == 1)
    }

    /// `C_n(T \ S)` with `T = {1, ..., n/2}`.
    pub fn complement(&self) -> CirculantGraph {
        let all = full_mask(self.n / 2 + 1) & !1;
        Self::from_set_unchecked(self.n, ConnectionSet::from_mask(all & !self.set.mask()))
    }

    /// `C_n({|a s|_n : s in S})`, the image under `v -> a v`.
    pub fn multiplier_image(&self, a: i64) -> Result<CirculantGraph> {
        let a = self.check_unit(a)?;
        Ok(Self::from_set_unchecked(
            self.n,
            ConnectionSet::from_mask(multiply_mask(self.set.mask(), a, self.n)),
        ))
    }

    fn check_unit(&self, a: i64) -> Result<usize> {
        let r = a.rem_euclid(self.n as i64) as u64;
        if gcd(r, self.n as u64) != 1 {
            return Err(Error::NonUnit { a, n: self.n });
        }
        Ok(r as usize)
    }

    pub fn canonical_form(&self) -> CanonicalClass {
        let (rep, orbit_size) = canonical_mask(self.set.mask(), self.n);
        CanonicalClass {
            n: self.n,
            representative: ConnectionSet::from_mask(rep),
            orbit_size,
        }
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}({})", self.n, self.set)
    }
}

/// Image of a distance mask under multiplication by the unit `a`.
pub fn multiply_mask(mask: u64, a: usize, n: usize) -> u64 {
    BitIter(mask).fold(0, |m, s| {
        let t = (a * s) % n;
        m | 1u64 << t.min(n - t)
    })
}

/// Units `a` of `Z_n` with `1 <= a <= n/2`. Since `a` and `-a` act the same
/// on distances, these represent the whole action.
pub fn distance_units(n: usize) -> Vec<usize> {
    (1..=n / 2)
        .filter(|&a| gcd(a as u64, n as u64) == 1)
        .collect()
}

/// Number of units of `Z_n`.
pub fn unit_group_order(n: usize) -> usize {
    (1..=n).filter(|&a| gcd(a as u64, n as u64) == 1).count()
}

fn orbit_masks(mask: u64, n: usize, units: &[usize]) -> Vec<u64> {
    let mut images: Vec<u64> = units.iter().map(|&a| multiply_mask(mask, a, n)).collect();
    images.sort_unstable();
    images.dedup();
    images
}

fn canonical_mask_with(mask: u64, n: usize, units: &[usize]) -> (u64, usize) {
    let images = orbit_masks(mask, n, units);
    let rep = images
        .iter()
        .copied()
        .min_by(|&x, &y| lex_cmp_masks(x, y))
        .unwrap_or(mask);
    (rep, images.len())
}

/// Lexicographically least image of `mask` and its orbit size.
pub fn canonical_mask(mask: u64, n: usize) -> (u64, usize) {
    canonical_mask_with(mask, n, &distance_units(n))
}

/// Orbit of a connection set under the multiplier action, named by its
/// lexicographically least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalClass {
    pub n: usize,
    pub representative: ConnectionSet,
    pub orbit_size: usize,
}

impl CanonicalClass {
    pub fn graph(&self) -> CirculantGraph {
        CirculantGraph::from_set_unchecked(self.n, self.representative.clone())
    }
}

/// One class per multiplier orbit of subsets of `{1, ..., n/2}`, sorted by
/// representative.
pub fn enumerate_classes(n: usize) -> Result<Vec<CanonicalClass>> {
    check_order(n)?;
    let cap = limits::search_max_n();
    if n > cap {
        return Err(Error::Capacity {
            what: "n",
            value: n,
            limit: cap,
        });
    }
    let m = n / 2;
    let units = distance_units(n);
    let mut seen = vec![false; 1usize << m];
    let mut reps = Vec::new();
    for sub in 0..(1u64 << m) {
        if seen[sub as usize] {
            continue;
        }
        let mask = sub << 1;
        let images = orbit_masks(mask, n, &units);
        for &img in &images {
            seen[(img >> 1) as usize] = true;
        }
        let rep = images
            .iter()
            .copied()
            .min_by(|&x, &y| lex_cmp_masks(x, y))
            .unwrap_or(mask);
        reps.push((rep, images.len()));
    }
    reps.sort_unstable_by(|a, b| lex_cmp_masks(a.0, b.0));
    Ok(reps
        .into_iter()
        .map(|(rep, orbit_size)| CanonicalClass {
            n,
            representative: ConnectionSet::from_mask(rep),
            orbit_size,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, s: &[i64]) -> CirculantGraph {
        CirculantGraph::new(n, s.iter().copied()).unwrap()
    }

    fn set(s: &[usize]) -> ConnectionSet {
        ConnectionSet::new(s.iter().copied())
    }

    #[test]
    fn norm_examples() {
        assert_eq!(distance_norm(7, 10).unwrap(), 3);
        assert_eq!(distance_norm(5, 10).unwrap(), 5);
        assert_eq!(distance_norm(56, 30).unwrap(), 4);
        assert_eq!(distance_norm(-3, 10).unwrap(), 3);
        assert_eq!(distance_norm(0, 7).unwrap(), 0);
        assert_eq!(distance_norm(3, 1), Err(Error::InvalidOrder(1)));
    }

    #[test]
    fn construct_normalizes() {
        let c = g(30, &[8, 1, 3, 3]);
        assert_eq!(c.connection_set(), &set(&[1, 3, 8]));
        assert_eq!(c.to_string(), "C30(1,3,8)");
        assert!(g(6, &[]).is_edgeless());
        assert_eq!(g(6, &[]).to_string(), "C6()");
    }

    #[test]
    fn construct_rejects() {
        assert_eq!(
            CirculantGraph::new(5, [3]),
            Err(Error::DistanceOutOfRange {
                value: 3,
                n: 5,
                max: 2
            })
        );
        assert!(matches!(
            CirculantGraph::new(5, [0]),
            Err(Error::DistanceOutOfRange { value: 0, .. })
        ));
        assert_eq!(CirculantGraph::new(1, []), Err(Error::InvalidOrder(1)));
        assert_eq!(CirculantGraph::new(65, []), Err(Error::InvalidOrder(65)));
        assert!(CirculantGraph::from_mask(5, 1 << 3).is_err());
    }

    #[test]
    fn adjacency() {
        let c = g(30, &[1, 3, 8]);
        assert!(c.adjacent(0, 3).unwrap());
        assert!(!c.adjacent(0, 4).unwrap());
        assert!(c.adjacent(29, 0).unwrap());
        assert!(!c.adjacent(5, 5).unwrap());
        assert!(g(10, &[5]).adjacent(2, 7).unwrap());
        assert_eq!(g(10, &[5]).degree(), 1);
        assert!(matches!(
            c.adjacent(0, 30),
            Err(Error::VertexOutOfRange { vertex: 30, n: 30 })
        ));
        // n = 2, single edge
        let k2 = g(2, &[1]);
        assert!(k2.adjacent(0, 1).unwrap());
        assert!(k2.is_complete());
    }

    #[test]
    fn complements() {
        assert_eq!(g(5, &[1]).complement(), g(5, &[2]));
        let big = CirculantGraph::from_set(50, &"1-24^5".parse().unwrap()).unwrap();
        assert_eq!(big.complement(), g(50, &[5, 25]));
        assert!(g(6, &[1, 2, 3]).complement().is_edgeless());
    }

    #[test]
    fn multipliers() {
        assert_eq!(g(30, &[1, 3, 8]).multiplier_image(7).unwrap(), g(30, &[4, 7, 9]));
        assert_eq!(g(5, &[2]).multiplier_image(3).unwrap(), g(5, &[1]));
        let c = g(30, &[1, 3, 8]);
        assert_eq!(c.multiplier_image(1).unwrap(), c);
        assert_eq!(c.multiplier_image(-1).unwrap(), c);
        assert_eq!(
            c.multiplier_image(6),
            Err(Error::NonUnit { a: 6, n: 30 })
        );
    }

    #[test]
    fn canonical_examples() {
        let c = g(5, &[2]).canonical_form();
        assert_eq!((c.representative, c.orbit_size), (set(&[1]), 2));
        let c = g(6, &[1, 2, 3]).canonical_form();
        assert_eq!((c.representative, c.orbit_size), (set(&[1, 2, 3]), 1));
        assert_eq!(
            g(30, &[4, 7, 9]).canonical_form(),
            g(30, &[1, 3, 8]).canonical_form()
        );
    }

    #[test]
    fn enumeration_examples() {
        let reps = |n| -> Vec<ConnectionSet> {
            enumerate_classes(n)
                .unwrap()
                .into_iter()
                .map(|c| c.representative)
                .collect()
        };
        assert_eq!(reps(5), vec![set(&[]), set(&[1]), set(&[1, 2])]);
        assert_eq!(
            reps(4),
            vec![set(&[]), set(&[1]), set(&[1, 2]), set(&[2])]
        );
        assert_eq!(reps(2), vec![set(&[]), set(&[1])]);
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for n in 2..=24 {
            let classes = enumerate_classes(n).unwrap();
            let total: usize = classes.iter().map(|c| c.orbit_size).sum();
            assert_eq!(total, 1 << (n / 2), "n = {n}");
            assert!(classes
                .windows(2)
                .all(|w| w[0].representative < w[1].representative));
            let phi = unit_group_order(n);
            assert!(classes.iter().all(|c| phi.is_multiple_of(c.orbit_size)));
        }
    }

    #[test]
    fn enumeration_capacity() {
        assert!(matches!(
            enumerate_classes(41),
            Err(Error::Capacity { value: 41, .. })
        ));
    }

    #[test]
    fn parse_sets() {
        assert_eq!("1,3,8".parse::<ConnectionSet>().unwrap(), set(&[1, 3, 8]));
        assert_eq!(" 8, 1 ,3 ".parse::<ConnectionSet>().unwrap(), set(&[1, 3, 8]));
        assert_eq!("".parse::<ConnectionSet>().unwrap(), set(&[]));
        assert_eq!("{}".parse::<ConnectionSet>().unwrap(), set(&[]));
        let r: ConnectionSet = "1-24^5".parse().unwrap();
        assert_eq!(r.len(), 23);
        assert!(!r.contains(5));
        assert_eq!("1-5^2,4".parse::<ConnectionSet>().unwrap(), set(&[1, 3, 5]));
        assert!("1,x".parse::<ConnectionSet>().is_err());
        assert!("0".parse::<ConnectionSet>().is_err());
        assert!("5-3".parse::<ConnectionSet>().is_err());
    }

    proptest! {
        #[test]
        fn lex_mask_order_matches_sequences(x in 0u64..(1 << 20), y in 0u64..(1 << 20)) {
            prop_assert_eq!(
                lex_cmp_masks(x, y),
                ConnectionSet::from_mask(x).cmp(&ConnectionSet::from_mask(y))
            );
        }

        #[test]
        fn graph_laws(n in 2usize..=40, raw in any::<u64>(), a_seed in any::<u64>(), r in 0usize..40) {
            let mask = raw & full_mask(n / 2 + 1) & !1;
            let c = CirculantGraph::from_mask(n, mask).unwrap();
            prop_assert_eq!(c.complement().complement(), c.clone());
            for i in 0..n {
                prop_assert_eq!(c.neighborhood(i) >> i & 1, 0);
                for j in 0..n {
                    let adj = c.adjacent(i, j).unwrap();
                    prop_assert_eq!(adj, c.adjacent(j, i).unwrap());
                    prop_assert_eq!(adj, c.adjacent((i + r) % n, (j + r) % n).unwrap());
                    let d = distance_norm(j as i64 - i as i64, n).unwrap();
                    prop_assert_eq!(adj, i != j && c.connection_set().contains(d));
                }
            }
            let units = distance_units(n);
            let a = units[(a_seed % units.len() as u64) as usize];
            let img = c.multiplier_image(a as i64).unwrap();
            prop_assert_eq!(img.connection_set().len(), c.connection_set().len());
            let canon = c.canonical_form();
            prop_assert_eq!(img.canonical_form(), canon.clone());
            prop_assert_eq!(canon.graph().canonical_form(), canon.clone());
            prop_assert!(canon.representative <= c.connection_set().clone());
        }
    }
}
