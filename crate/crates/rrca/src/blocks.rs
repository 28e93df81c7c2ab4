//! Block invariants and block partitions of restricted rational Cherednik
//! algebras: the multiset { a_beta(b) - kappa * ct(b) } over the boxes of a
//! multipartition decides block membership for G(m,1,n); rotation orbits,
//! stabiliser characters and a stuttering/singleton analysis extend this to
//! the normal subgroups G(m,d,n).

use std::collections::HashMap;

use rayon::prelude::*;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::combin::{enumerate_multipartitions, Multipartition, StandardTableau};
use crate::exactnum::{Cyclotomic, LinearExponent, Rational};
use crate::params::{generic_exponent, NumericParams, ParamSpec};

#[derive(Debug, Error)]
pub enum BlockError {
    #[error("multipartition has {got} components but parameters are for m = {expected}")]
    MismatchedM { expected: usize, got: usize },
    #[error("multipartitions have different sizes {left} and {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("d = {d} does not divide m = {m}")]
    InvalidDivisor { d: usize, m: usize },
    #[error("c_{index} must be zero for G(m,{d},n): only c-indices divisible by {d} are admissible")]
    InadmissibleC { index: usize, d: usize },
    #[error("n = {n} with d = {d} is excluded; blocks for G(m,d,n) assume n > 2, or n = 2 and d odd")]
    ExcludedGroup { n: usize, d: usize },
    #[error("tableau shape does not match the multipartition")]
    TableauShapeMismatch,
    #[error("block invariant is not constant on a rotation orbit")]
    OrbitInvariantViolation,
}

/// The canonical block invariant of a multipartition: the sorted multiset of
/// exponents a_beta(b) - kappa * ct(b), one per box. Exact cyclotomic values
/// in numeric mode, integer linear forms in generic mode.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockInvariant {
    Numeric(Vec<Cyclotomic>),
    Generic(Vec<LinearExponent>),
}

impl BlockInvariant {
    pub fn len(&self) -> usize {
        match self {
            BlockInvariant::Numeric(v) => v.len(),
            BlockInvariant::Generic(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Serialize for BlockInvariant {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BlockInvariant", 2)?;
        match self {
            BlockInvariant::Numeric(v) => {
                st.serialize_field("mode", "numeric")?;
                st.serialize_field("entries", v)?;
            }
            BlockInvariant::Generic(v) => {
                st.serialize_field("mode", "generic")?;
                st.serialize_field("entries", v)?;
            }
        }
        st.end()
    }
}

/// Label of an irreducible module: a multipartition for G(m,1,n), or an
/// orbit representative with a stabiliser character index for G(m,d,n), d > 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModuleLabel {
    Wreath(Multipartition),
    Orbit { rep: Multipartition, epsilon: usize },
}

impl Serialize for ModuleLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ModuleLabel::Wreath(l) => l.serialize(serializer),
            ModuleLabel::Orbit { rep, epsilon } => {
                let mut st = serializer.serialize_struct("OrbitLabel", 2)?;
                st.serialize_field("orbit_rep", rep)?;
                st.serialize_field("epsilon", epsilon)?;
                st.end()
            }
        }
    }
}

impl std::fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModuleLabel::Wreath(l) => write!(f, "{l}"),
            ModuleLabel::Orbit { rep, epsilon } => write!(f, "({rep}, eps={epsilon})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupId {
    pub m: usize,
    pub d: usize,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamMode {
    Numeric,
    Generic,
}

/// A partition of all module labels into blocks. Classes and the labels
/// inside them are canonically ordered, so equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub group: GroupId,
    pub mode: ParamMode,
    pub classes: Vec<Vec<ModuleLabel>>,
}

impl BlockPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = &ModuleLabel> {
        self.classes.iter().flatten()
    }

    pub fn class_of(&self, label: &ModuleLabel) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(label))
    }

    pub fn same_class(&self, a: &ModuleLabel, b: &ModuleLabel) -> bool {
        match (self.class_of(a), self.class_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }
}

impl Serialize for BlockPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BlockPartition", 3)?;
        st.serialize_field("group", &self.group)?;
        st.serialize_field("mode", &self.mode)?;
        st.serialize_field("blocks", &SerializeClasses(&self.classes))?;
        st.end()
    }
}

struct SerializeClasses<'a>(&'a [Vec<ModuleLabel>]);

impl Serialize for SerializeClasses<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for class in self.0 {
            seq.serialize_element(class)?;
        }
        seq.end()
    }
}

fn check_m(params: &ParamSpec, lambda: &Multipartition) -> Result<(), BlockError> {
    if params.m() != lambda.m() {
        return Err(BlockError::MismatchedM { expected: params.m(), got: lambda.m() });
    }
    Ok(())
}

// Shared worker: `period` folds the component index before forming generic
// exponents (the embedded-parameter rule for G(m,d,n); period = m for d = 1).
fn invariant_with_period(
    lambda: &Multipartition,
    params: &ParamSpec,
    period: usize,
) -> BlockInvariant {
    match params {
        ParamSpec::Numeric(p) => {
            let derived = p.derive();
            let field = p.field();
            let mut entries: Vec<Cyclotomic> = lambda
                .boxes()
                .iter()
                .map(|b| {
                    let ct = field.integer(b.content());
                    &derived.a[b.component] - &(p.kappa() * &ct)
                })
                .collect();
            entries.sort();
            BlockInvariant::Numeric(entries)
        }
        ParamSpec::Generic { m } => {
            let mut entries: Vec<LinearExponent> = lambda
                .boxes()
                .iter()
                .map(|b| generic_exponent(b.component % period, b.content(), *m))
                .collect();
            entries.sort();
            BlockInvariant::Generic(entries)
        }
    }
}

/// The block invariant of a multipartition for G(m,1,n).
pub fn block_invariant(
    lambda: &Multipartition,
    params: &ParamSpec,
) -> Result<BlockInvariant, BlockError> {
    check_m(params, lambda)?;
    Ok(invariant_with_period(lambda, params, params.m()))
}

/// Whether two baby Verma modules lie in the same block of the restricted
/// algebra for G(m,1,n): equality of block invariants.
pub fn same_block(
    lambda: &Multipartition,
    mu: &Multipartition,
    params: &ParamSpec,
) -> Result<bool, BlockError> {
    if lambda.size() != mu.size() {
        return Err(BlockError::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    Ok(block_invariant(lambda, params)? == block_invariant(mu, params)?)
}

// Groups label indices by invariant, preserving first-appearance order.
fn group_by_invariant(invariants: &[BlockInvariant]) -> Vec<Vec<usize>> {
    let mut class_of: HashMap<&BlockInvariant, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, inv) in invariants.iter().enumerate() {
        match class_of.get(inv) {
            Some(&k) => classes[k].push(i),
            None => {
                class_of.insert(inv, classes.len());
                classes.push(vec![i]);
            }
        }
    }
    classes
}

/// The block partition of all of P(m,n) for the wreath product G(m,1,n).
pub fn block_partition_gm1n(
    m: usize,
    n: usize,
    params: &ParamSpec,
) -> Result<BlockPartition, BlockError> {
    if params.m() != m {
        return Err(BlockError::MismatchedM { expected: params.m(), got: m });
    }
    let lambdas = enumerate_multipartitions(m, n);
    let invariants: Vec<BlockInvariant> = lambdas
        .par_iter()
        .map(|l| invariant_with_period(l, params, m))
        .collect();
    let classes = group_by_invariant(&invariants)
        .into_iter()
        .map(|idxs| {
            idxs.into_iter()
                .map(|i| ModuleLabel::Wreath(lambdas[i].clone()))
                .collect()
        })
        .collect();
    Ok(BlockPartition {
        group: GroupId { m, d: 1, n },
        mode: if params.is_generic() { ParamMode::Generic } else { ParamMode::Numeric },
        classes,
    })
}

/// The block partition for the normal subgroup G(m,d,n). For d = 1 this is
/// exactly the wreath partition. For d > 1 the parameters must be admissible
/// (c_l = 0 unless d | l) and (n, d) must avoid the degenerate group sizes.
pub fn block_partition_gmdn(
    m: usize,
    d: usize,
    n: usize,
    params: &ParamSpec,
) -> Result<BlockPartition, BlockError> {
    if d == 0 || !m.is_multiple_of(d) {
        return Err(BlockError::InvalidDivisor { d, m });
    }
    if params.m() != m {
        return Err(BlockError::MismatchedM { expected: params.m(), got: m });
    }
    if d == 1 {
        return block_partition_gm1n(m, n, params);
    }
    if n <= 1 || (n == 2 && d.is_multiple_of(2)) {
        return Err(BlockError::ExcludedGroup { n, d });
    }
    if let ParamSpec::Numeric(p) = params {
        for l in 1..m {
            if l % d != 0 && !p.c()[l - 1].is_zero() {
                return Err(BlockError::InadmissibleC { index: l, d });
            }
        }
    }
    let period = m / d;
    let lambdas = enumerate_multipartitions(m, n);
    let invariants: Vec<BlockInvariant> = lambdas
        .par_iter()
        .map(|l| invariant_with_period(l, params, period))
        .collect();

    // Representatives are only trusted after checking the invariant is
    // constant on every rotation orbit.
    let index_of = |l: &Multipartition| lambdas.binary_search(l).expect("orbit stays in P(m,n)");
    for (i, l) in lambdas.iter().enumerate() {
        let rotated = l.delta(d).expect("d divides m");
        if invariants[index_of(&rotated)] != invariants[i] {
            return Err(BlockError::OrbitInvariantViolation);
        }
    }

    // Size of each G(m,1,n) invariant class, for the singleton test.
    let mut class_size: HashMap<&BlockInvariant, usize> = HashMap::new();
    for inv in &invariants {
        *class_size.entry(inv).or_insert(0) += 1;
    }

    let mut visited = vec![false; lambdas.len()];
    let mut classes: Vec<Vec<ModuleLabel>> = Vec::new();
    let mut merged_class: HashMap<&BlockInvariant, usize> = HashMap::new();
    for (i, l) in lambdas.iter().enumerate() {
        if visited[i] {
            continue;
        }
        let (orbit, stab) = l.orbit(d).expect("d divides m");
        for member in &orbit {
            visited[index_of(member)] = true;
        }
        // lambdas are sorted, so the first unvisited member is the
        // lexicographically least of its orbit
        let rep = l.clone();
        let inv = &invariants[i];
        let stuttering = orbit.len() == 1 && stab == d;
        if stuttering && class_size[inv] == 1 {
            for epsilon in 0..stab {
                classes.push(vec![ModuleLabel::Orbit { rep: rep.clone(), epsilon }]);
            }
        } else {
            let labels =
                (0..stab).map(|epsilon| ModuleLabel::Orbit { rep: rep.clone(), epsilon });
            match merged_class.get(inv) {
                Some(&k) => classes[k].extend(labels),
                None => {
                    merged_class.insert(inv, classes.len());
                    classes.push(labels.collect());
                }
            }
        }
    }
    Ok(BlockPartition {
        group: GroupId { m, d, n },
        mode: if params.is_generic() { ParamMode::Generic } else { ParamMode::Numeric },
        classes,
    })
}

/// Eigenvalues through which the Dunkl-Opdam generators act on the baby Verma
/// module of `lambda`, read off a standard tableau: position i (1-based)
/// holds the eigenvalue of z_{n-i+1}, namely
/// -kappa * m * ct(T(i)) - sum_l c_l eta^{l beta_T(i)}.
pub fn baby_verma_eigenvalues(
    lambda: &Multipartition,
    tableau: &StandardTableau,
    params: &NumericParams,
) -> Result<Vec<Cyclotomic>, BlockError> {
    if params.m() != lambda.m() {
        return Err(BlockError::MismatchedM { expected: params.m(), got: lambda.m() });
    }
    if tableau.shape() != lambda {
        return Err(BlockError::TableauShapeMismatch);
    }
    let m = params.m();
    let field = params.field();
    let n = lambda.size();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let (ct, beta) = tableau.box_data(i).expect("entry in range");
        let m_ct = field.integer(m as i64 * ct);
        let mut value = -&(params.kappa() * &m_ct);
        for l in 1..m {
            value = &value - &(&params.c()[l - 1] * &params.eta_pow((l * beta) as i64));
        }
        out.push(value);
    }
    Ok(out)
}

/// The eigenvalue multiset of a baby Verma module (sorted), computed from the
/// row-reading tableau.
pub fn eigenvalue_multiset(
    lambda: &Multipartition,
    params: &NumericParams,
) -> Result<Vec<Cyclotomic>, BlockError> {
    let t = StandardTableau::row_reading(lambda);
    let mut ev = baby_verma_eigenvalues(lambda, &t, params)?;
    ev.sort();
    Ok(ev)
}

/// Cross-check that the two routes to block membership agree: equality of
/// raw eigenvalue multisets (read from tableaux) coincides with equality of
/// block invariants. Returns true exactly when both tests give the same answer.
pub fn eigenvalue_route_agrees(
    lambda: &Multipartition,
    mu: &Multipartition,
    params: &NumericParams,
) -> Result<bool, BlockError> {
    if lambda.size() != mu.size() {
        return Err(BlockError::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let ev_equal = eigenvalue_multiset(lambda, params)? == eigenvalue_multiset(mu, params)?;
    let spec = ParamSpec::Numeric(params.clone());
    let inv_equal = block_invariant(lambda, &spec)? == block_invariant(mu, &spec)?;
    Ok(ev_equal == inv_equal)
}

/// The eigenvalue multiset predicted box-wise: { C + m a_beta(b) - m kappa ct(b) }.
pub fn predicted_eigenvalue_multiset(
    lambda: &Multipartition,
    params: &NumericParams,
) -> Result<Vec<Cyclotomic>, BlockError> {
    if params.m() != lambda.m() {
        return Err(BlockError::MismatchedM { expected: params.m(), got: lambda.m() });
    }
    let derived = params.derive();
    let field = params.field();
    let m_rat = Rational::from_integer((params.m() as i64).into());
    let mut out: Vec<Cyclotomic> = lambda
        .boxes()
        .iter()
        .map(|b| {
            let ct = field.integer(b.content());
            let shift = derived.a[b.component].scale(&m_rat);
            let kappa_term = (params.kappa() * &ct).scale(&m_rat);
            &(&derived.big_c + &shift) - &kappa_term
        })
        .collect();
    out.sort();
    Ok(out)
}
