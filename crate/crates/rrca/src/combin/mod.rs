//! Partitions, multipartitions, boxes, contents, residues, and the rotation
//! action of C_d on m-multipartitions with its orbits and stabilisers.

pub mod tableau;

pub use tableau::{enumerate_standard_tableaux, StandardTableau};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CombinError {
    #[error("partition parts must be weakly decreasing and positive, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("d = {d} does not divide m = {m}")]
    InvalidDivisor { d: usize, m: usize },
    #[error("entry {i} out of range 1..={n}")]
    EntryOutOfRange { i: usize, n: usize },
    #[error("invalid standard tableau: {0}")]
    InvalidTableau(String),
}

/// A partition: weakly decreasing positive parts. The empty partition is `()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinError> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p >= 1);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(CombinError::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// All boxes as 1-based (row, col) pairs, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r as u32 + 1, c)))
    }

    /// The residue: the map content -> multiplicity over the boxes.
    pub fn residue(&self) -> ResiduePoly {
        let mut terms: BTreeMap<i64, u32> = BTreeMap::new();
        for (row, col) in self.boxes() {
            *terms.entry(col as i64 - row as i64).or_insert(0) += 1;
        }
        ResiduePoly { terms }
    }
}

// Fixed total order: length first, then parts lexicographically. Used for
// canonical orbit representatives and deterministic enumeration output.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts
            .len()
            .cmp(&other.parts.len())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Laurent-monomial multiset: content exponent -> positive multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResiduePoly {
    terms: BTreeMap<i64, u32>,
}

impl ResiduePoly {
    pub fn terms(&self) -> &BTreeMap<i64, u32> {
        &self.terms
    }

    pub fn total(&self) -> usize {
        self.terms.values().map(|&m| m as usize).sum()
    }
}

/// One box of a multipartition diagram: the component index beta(b) and its
/// 1-based row and column, so the corner box has content 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramBox {
    pub component: usize,
    pub row: u32,
    pub col: u32,
}

impl DiagramBox {
    /// Content ct(b) = column - row.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// An m-multipartition (lambda^0, ..., lambda^{m-1}).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition needs m >= 1 components");
        Multipartition { components }
    }

    pub fn empty(m: usize) -> Self {
        Multipartition::new(vec![Partition::empty(); m])
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    /// All boxes, ordered by (component, row, col).
    pub fn boxes(&self) -> Vec<DiagramBox> {
        let mut out = Vec::with_capacity(self.size());
        for (i, comp) in self.components.iter().enumerate() {
            for (row, col) in comp.boxes() {
                out.push(DiagramBox { component: i, row, col });
            }
        }
        out
    }

    /// Whether (row, col) is a box of the given component.
    pub fn contains(&self, b: &DiagramBox) -> bool {
        b.component < self.m()
            && b.row >= 1
            && b.col >= 1
            && self.components[b.component]
                .parts()
                .get(b.row as usize - 1)
                .is_some_and(|&len| b.col <= len)
    }

    /// The rotation action of the generator of C_d: components rotated right
    /// by p = m/d positions.
    pub fn delta(&self, d: usize) -> Result<Multipartition, CombinError> {
        let m = self.m();
        if d == 0 || !m.is_multiple_of(d) {
            return Err(CombinError::InvalidDivisor { d, m });
        }
        let p = m / d;
        let mut components = Vec::with_capacity(m);
        for i in 0..m {
            components.push(self.components[(i + m - p) % m].clone());
        }
        Ok(Multipartition { components })
    }

    /// The delta-orbit (starting from self) and the stabiliser order d/|orbit|.
    pub fn orbit(&self, d: usize) -> Result<(Vec<Multipartition>, usize), CombinError> {
        let mut orbit = vec![self.clone()];
        let mut current = self.delta(d)?;
        while &current != self {
            orbit.push(current.clone());
            current = current.delta(d)?;
        }
        debug_assert_eq!(d % orbit.len(), 0);
        let stab = d / orbit.len();
        Ok((orbit, stab))
    }

    /// The lexicographically least member of the delta-orbit.
    pub fn orbit_representative(&self, d: usize) -> Result<Multipartition, CombinError> {
        let (orbit, _) = self.orbit(d)?;
        Ok(orbit.into_iter().min().unwrap())
    }

    /// d-stuttering: the d consecutive blocks of p = m/d components all agree.
    pub fn is_d_stuttering(&self, d: usize) -> Result<bool, CombinError> {
        let m = self.m();
        if d == 0 || !m.is_multiple_of(d) {
            return Err(CombinError::InvalidDivisor { d, m });
        }
        let p = m / d;
        let first = &self.components[0..p];
        Ok((1..d).all(|i| &self.components[i * p..(i + 1) * p] == first))
    }
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.components.cmp(&other.components)
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw: Vec<&[u32]> = self.components.iter().map(|c| c.parts()).collect();
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<Vec<u32>> = Vec::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(D::Error::custom("a multipartition needs at least one component"));
        }
        let components = raw
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(Multipartition::new(components))
    }
}

/// All partitions of n, deterministic order (largest first part first).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p as u32);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// All m-multipartitions of n, each exactly once, sorted in the canonical
/// (length-then-parts, componentwise) order.
pub fn enumerate_multipartitions(m: usize, n: usize) -> Vec<Multipartition> {
    assert!(m >= 1, "m must be >= 1");
    fn rec(
        m: usize,
        remaining: usize,
        prefix: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if prefix.len() == m - 1 {
            for part in enumerate_partitions(remaining) {
                prefix.push(part);
                out.push(Multipartition::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for k in 0..=remaining {
            for part in enumerate_partitions(k) {
                prefix.push(part);
                rec(m, remaining - k, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(m, n, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}
