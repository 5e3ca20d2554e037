//! Flip calculus: atomic flips, flip sets, partitions and partition flips.
//!
//! An atomic flip (A, B) complements the adjacency between A and B: the
//! edge uv is toggled for every pair of distinct vertices with u in A and
//! v in B (or vice versa). Sides may mention vertices outside the graph;
//! they are intersected with the live set on application, so flipping
//! commutes with taking induced subgraphs. Applying the same flip twice is
//! the identity and flips commute, hence a *set* of atomic flips applies
//! unambiguously and composition of applications is symmetric difference
//! of flip sets.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{Vertex, VertexSet};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AtomicFlip {
    a: VertexSet,
    b: VertexSet,
}

impl AtomicFlip {
    /// Canonicalizes: the smaller side under the canonical set order comes
    /// first, so (A, B) and (B, A) are the same flip.
    pub fn new(a: VertexSet, b: VertexSet) -> AtomicFlip {
        if a <= b {
            AtomicFlip { a, b }
        } else {
            AtomicFlip { a: b, b: a }
        }
    }

    pub fn noop() -> AtomicFlip {
        AtomicFlip { a: VertexSet::new(), b: VertexSet::new() }
    }

    pub fn sides(&self) -> (&VertexSet, &VertexSet) {
        (&self.a, &self.b)
    }

    /// True when application cannot toggle anything.
    pub fn is_noop(&self) -> bool {
        self.a.is_empty()
            || self.b.is_empty()
            || (self.a.len() == 1 && self.a == self.b)
    }

    pub fn apply(&self, g: &Graph) -> Graph {
        let mut h = g.clone();
        h.toggle_between(&self.a, &self.b);
        h
    }
}

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct FlipSet {
    flips: BTreeSet<AtomicFlip>,
}

impl FlipSet {
    pub fn new() -> FlipSet {
        FlipSet::default()
    }

    pub fn insert(&mut self, f: AtomicFlip) -> bool {
        self.flips.insert(f)
    }

    pub fn contains(&self, f: &AtomicFlip) -> bool {
        self.flips.contains(f)
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &AtomicFlip> {
        self.flips.iter()
    }

    /// G ⊕ F ⊕ F' = G ⊕ (F △ F'), so composition is symmetric difference.
    pub fn compose(&self, other: &FlipSet) -> FlipSet {
        let flips = self.flips.symmetric_difference(&other.flips).cloned().collect();
        FlipSet { flips }
    }

    pub fn apply(&self, g: &Graph) -> Graph {
        let mut h = g.clone();
        for f in &self.flips {
            h.toggle_between(&f.a, &f.b);
        }
        h
    }
}

impl FromIterator<AtomicFlip> for FlipSet {
    fn from_iter<I: IntoIterator<Item = AtomicFlip>>(iter: I) -> FlipSet {
        FlipSet { flips: iter.into_iter().collect() }
    }
}

impl From<AtomicFlip> for FlipSet {
    fn from(f: AtomicFlip) -> FlipSet {
        std::iter::once(f).collect()
    }
}

// The wire form of a flip is {"A": [...], "B": [...]} with A before B in
// plain lexicographic order of the id lists (which differs from the
// canonical in-memory order on pairs like {0,5} vs {0,1,2}).
#[derive(Serialize, Deserialize)]
struct FlipWire {
    #[serde(rename = "A")]
    a: Vec<Vertex>,
    #[serde(rename = "B")]
    b: Vec<Vertex>,
}

impl Serialize for AtomicFlip {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let (x, y) = if self.a.lex_cmp(&self.b) == std::cmp::Ordering::Greater {
            (&self.b, &self.a)
        } else {
            (&self.a, &self.b)
        };
        FlipWire { a: x.to_vec(), b: y.to_vec() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for AtomicFlip {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = FlipWire::deserialize(de)?;
        Ok(AtomicFlip::new(
            wire.a.into_iter().collect(),
            wire.b.into_iter().collect(),
        ))
    }
}

impl Serialize for FlipSet {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.flips.iter())
    }
}

impl<'de> Deserialize<'de> for FlipSet {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let flips: Vec<AtomicFlip> = Vec::deserialize(de)?;
        let n = flips.len();
        let set: BTreeSet<AtomicFlip> = flips.into_iter().collect();
        if set.len() != n {
            return Err(D::Error::custom("duplicate atomic flip"));
        }
        Ok(FlipSet { flips: set })
    }
}

pub fn apply_flip_set(g: &Graph, f: &FlipSet) -> Graph {
    f.apply(g)
}

// ---------------------------------------------------------------------------
// partitions

/// A partition of some ground set of vertices into nonempty parts,
/// stored sorted by minimum element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<VertexSet>,
    part_of: BTreeMap<Vertex, usize>,
}

impl Partition {
    pub fn new(parts: Vec<VertexSet>) -> Result<Partition> {
        let mut parts = parts;
        parts.retain(|p| !p.is_empty());
        parts.sort_by_key(|a| a.first());
        let mut part_of = BTreeMap::new();
        for (i, p) in parts.iter().enumerate() {
            for v in p.iter() {
                if part_of.insert(v, i).is_some() {
                    return Err(Error::InvalidPartition);
                }
            }
        }
        Ok(Partition { parts, part_of })
    }

    pub fn single(ground: VertexSet) -> Partition {
        Partition::new(vec![ground]).expect("one part is always valid")
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        self.part_of.get(&v).copied()
    }

    pub fn ground_set(&self) -> VertexSet {
        let mut g = VertexSet::new();
        for p in &self.parts {
            g.union_with(p);
        }
        g
    }

    pub fn covers(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.part_of.contains_key(&v))
    }

    /// Splits the part containing `chunk` into (chunk, rest). `chunk` must
    /// be a nonempty proper subset of exactly one part.
    pub fn split(&self, chunk: &VertexSet) -> Result<Partition> {
        let first = chunk.first().ok_or(Error::EmptySet("split chunk"))?;
        let idx = self.part_of(first).ok_or(Error::InvalidPartition)?;
        if !chunk.is_subset(&self.parts[idx]) || chunk == &self.parts[idx] {
            return Err(Error::InvalidPartition);
        }
        let mut parts = self.parts.clone();
        let rest = parts[idx].difference(chunk);
        parts[idx] = chunk.clone();
        parts.push(rest);
        Partition::new(parts)
    }

    /// True when every part of `finer` is contained in a part of `self`.
    pub fn refines(finer: &Partition, coarser: &Partition) -> bool {
        finer.parts.iter().all(|p| {
            coarser
                .part_of(p.first().expect("parts are nonempty"))
                .map(|i| p.is_subset(&coarser.parts[i]))
                .unwrap_or(false)
        })
    }
}

// ---------------------------------------------------------------------------
// S-classes

/// Partition of the live vertices by neighborhood trace on S, with each
/// s in S in its own singleton class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SClassPartition {
    pub s: VertexSet,
    pub partition: Partition,
}

pub fn s_classes(g: &Graph, s: &VertexSet) -> Result<SClassPartition> {
    if !s.is_subset(g.live()) {
        return Err(Error::NotASubset);
    }
    let mut by_trace: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    let mut parts: Vec<VertexSet> = s.iter().map(VertexSet::singleton).collect();
    for v in g.live().iter() {
        if s.contains(v) {
            continue;
        }
        let trace = g.row(v).intersection(s);
        by_trace.entry(trace).or_default().insert(v);
    }
    parts.extend(by_trace.into_values());
    Ok(SClassPartition { s: s.clone(), partition: Partition::new(parts)? })
}

// ---------------------------------------------------------------------------
// partition flips

pub const DEFAULT_PARTITION_FLIP_CAP: usize = 5;

/// All 2^(p(p+1)/2) flip sets whose atomic flips pair parts of `p`
/// (unordered pairs including self-pairs), in a fixed enumeration order:
/// bit t of the mask covers the t-th pair (i, j), i <= j, in lexicographic
/// order, and masks run 0, 1, 2, ...
///
/// The first element is the empty flip set (the graph itself).
pub fn enumerate_partition_flips(
    p: &Partition,
    cap: usize,
) -> Result<impl Iterator<Item = FlipSet> + '_> {
    if p.len() > cap {
        return Err(Error::PartitionCapExceeded(p.len(), cap));
    }
    let mut pairs = Vec::new();
    for i in 0..p.len() {
        for j in i..p.len() {
            pairs.push((i, j));
        }
    }
    let total: u64 = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .map(|(_, &(i, j))| AtomicFlip::new(p.parts()[i].clone(), p.parts()[j].clone()))
            .collect()
    }))
}

pub fn count_partition_flips(p: &Partition) -> u64 {
    1u64 << (p.len() * (p.len() + 1) / 2)
}

/// One flip per vertex of `x` in ascending order, each against the
/// neighborhood in the graph with all previous flips applied. Applying the
/// returned set to `g` isolates every vertex of `x`.
pub fn isolating_flips(g: &Graph, x: &VertexSet) -> Result<FlipSet> {
    if !x.is_subset(g.live()) {
        return Err(Error::NotASubset);
    }
    let mut cur = g.clone();
    let mut out = FlipSet::new();
    for v in x.iter() {
        let f = AtomicFlip::new(VertexSet::singleton(v), cur.row(v).clone());
        cur = f.apply(&cur);
        out.insert(f);
    }
    Ok(out)
}

/// Is H obtainable from G by flipping between parts of `p`? Checks that the
/// edge difference is constant on every unordered pair of parts.
pub fn is_partition_flip_of(g: &Graph, h: &Graph, p: &Partition) -> Result<bool> {
    if g.live() != h.live() || g.universe() != h.universe() {
        return Err(Error::VertexSetMismatch);
    }
    if p.ground_set() != *g.live() {
        return Err(Error::NotAPartition);
    }
    for i in 0..p.len() {
        for j in i..p.len() {
            let pi = &p.parts()[i];
            let pj = &p.parts()[j];
            let mut state: Option<bool> = None;
            for u in pi.iter() {
                let mut diff = g.row(u).symmetric_difference(h.row(u));
                diff.intersect_with(pj);
                // wholly toggled means: every vertex of pj except u itself
                let mut expected_full = pj.clone();
                expected_full.remove(u);
                let here = if diff == expected_full && !expected_full.is_empty() {
                    Some(true)
                } else if diff.is_empty() {
                    Some(false)
                } else {
                    None
                };
                match (state, here) {
                    (_, None) => return Ok(false),
                    (None, s) => state = s,
                    (Some(a), Some(b)) if a != b => return Ok(false),
                    _ => {}
                }
            }
        }
    }
    Ok(true)
}
