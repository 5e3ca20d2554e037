//! Neighborhood classifiers.
//!
//! A classifier compresses a graph's adjacency structure relative to a
//! family of pairwise disjoint *blobs*: every vertex is assigned a
//! *representative* whose neighborhood it copies inside every blob except
//! at most one *exceptional* blob. The representatives S are pairwise
//! distinguishable inside every blob, and each is adjacent to either all
//! blobs or none of them ("adjacent to a blob" meaning at least one
//! neighbor inside it).
//!
//! The defining conditions, in the order [`Classifier::validate`] reports
//! them:
//!
//! * (a) S is disjoint from the blobs;
//! * (b) every vertex of S is adjacent to all blobs or to none;
//! * (c) distinct vertices of S have different neighborhoods inside every
//!   blob;
//! * (d) a blob member's exceptional blob is the blob containing it;
//! * (e) outside its exceptional blob, every vertex has exactly its
//!   representative's neighborhood.
//!
//! With at least five blobs the fibers of the representative map — the
//! *raised partition* — are recoverable from any five of the blobs alone:
//! two vertices share a part iff their neighborhoods agree in at least
//! three of the five. [`partition_from_five`] implements that recovery
//! greedily and is the workhorse of the flip predictor.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flips::Partition;
use crate::graph::Graph;
use crate::order::VertexOrder;
use crate::predictor::StepCounter;
use crate::set::{Vertex, VertexSet};

/// Largest blob family [`search_classifier`] will take (it enumerates all
/// subsets).
pub const SEARCH_BALL_CAP: usize = 8;
/// Largest `max_order` accepted by [`search_classifier`].
pub const SEARCH_ORDER_CAP: usize = 3;

/// One of the five defining conditions, with a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifierViolation {
    /// (a) — this vertex of S lies inside a blob.
    RepresentativeInsideBlob(Vertex),
    /// (b) — this vertex of S has neighbors in some blobs but not in all.
    PartialBlobAdjacency(Vertex),
    /// (c) — these two vertices of S share their neighborhood inside some
    /// blob.
    IndistinguishableRepresentatives(Vertex, Vertex),
    /// (d) — this blob member's exceptional blob is not the blob
    /// containing it.
    WrongExceptionalBlob(Vertex),
    /// (e) — this vertex disagrees with its representative inside the
    /// given non-exceptional blob.
    NeighborhoodMismatch(Vertex, usize),
}

impl fmt::Display for ClassifierViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ClassifierViolation::*;
        match *self {
            RepresentativeInsideBlob(v) => {
                write!(f, "condition (a): vertex {v} of S lies inside a blob")
            }
            PartialBlobAdjacency(v) => {
                write!(f, "condition (b): vertex {v} of S sees some blobs but not all")
            }
            IndistinguishableRepresentatives(a, b) => {
                write!(f, "condition (c): vertices {a} and {b} of S agree inside some blob")
            }
            WrongExceptionalBlob(v) => {
                write!(f, "condition (d): blob member {v} has a wrong exceptional blob")
            }
            NeighborhoodMismatch(v, b) => {
                write!(f, "condition (e): vertex {v} deviates from its representative in blob {b}")
            }
        }
    }
}

/// Blobs, representatives S, and the per-vertex exception/representative
/// maps. `exc` and `rep` are total on the live vertices; `exc` values
/// index into `blobs`, `None` meaning "no exceptional blob".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classifier {
    blobs: Vec<VertexSet>,
    s: VertexSet,
    exc: BTreeMap<Vertex, Option<usize>>,
    rep: BTreeMap<Vertex, Vertex>,
}

impl Classifier {
    /// Assembles a classifier without validating it; pair with
    /// [`Classifier::validate`].
    pub fn from_parts(
        blobs: Vec<VertexSet>,
        s: VertexSet,
        exc: BTreeMap<Vertex, Option<usize>>,
        rep: BTreeMap<Vertex, Vertex>,
    ) -> Classifier {
        Classifier { blobs, s, exc, rep }
    }

    /// The blob-free classifier: no blobs, S the least live vertex, every
    /// vertex represented by it.
    pub fn trivial(g: &Graph, order: &VertexOrder) -> Result<Classifier> {
        let v0 = order.min_of(g.live()).ok_or(Error::EmptySet("graph"))?;
        let exc = g.live().iter().map(|v| (v, None)).collect();
        let rep = g.live().iter().map(|v| (v, v0)).collect();
        Ok(Classifier { blobs: Vec::new(), s: VertexSet::singleton(v0), exc, rep })
    }

    pub fn blobs(&self) -> &[VertexSet] {
        &self.blobs
    }

    pub fn s(&self) -> &VertexSet {
        &self.s
    }

    /// Number of blobs.
    pub fn size(&self) -> usize {
        self.blobs.len()
    }

    /// Number of representatives |S|.
    pub fn order(&self) -> usize {
        self.s.len()
    }

    /// Index of the exceptional blob of `v`, if any.
    pub fn exc(&self, v: Vertex) -> Option<usize> {
        self.exc.get(&v).copied().flatten()
    }

    pub fn rep(&self, v: Vertex) -> Option<Vertex> {
        self.rep.get(&v).copied()
    }

    /// Checks well-formedness and then conditions (a)–(e) in order,
    /// reporting the first failure.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for b in &self.blobs {
            if b.is_empty() {
                return Err(Error::EmptySet("blob"));
            }
            if !b.is_subset(g.live()) {
                return Err(Error::NotASubset);
            }
        }
        for (i, b) in self.blobs.iter().enumerate() {
            if self.blobs[i + 1..].iter().any(|c| b.intersects(c)) {
                return Err(Error::BlobsOverlap);
            }
        }
        if self.s.is_empty() {
            return Err(Error::EmptySet("S"));
        }
        if !self.s.is_subset(g.live()) {
            return Err(Error::NotASubset);
        }
        if self.exc.len() != g.order()
            || self.rep.len() != g.order()
            || !g.live().iter().all(|v| self.exc.contains_key(&v) && self.rep.contains_key(&v))
        {
            return Err(Error::VertexSetMismatch);
        }
        for (&v, &e) in &self.exc {
            if let Some(i) = e {
                if i >= self.blobs.len() {
                    return Err(Error::InvalidParams(format!(
                        "exceptional blob index {i} of vertex {v} out of range"
                    )));
                }
            }
        }
        for (&v, &r) in &self.rep {
            if !self.s.contains(r) {
                return Err(Error::InvalidParams(format!(
                    "representative {r} of vertex {v} is not in S"
                )));
            }
        }

        let fail = |c: ClassifierViolation| Err(Error::InvalidClassifier(c));
        // (a)
        for b in &self.blobs {
            if let Some(v) = self.s.iter().find(|&v| b.contains(v)) {
                return fail(ClassifierViolation::RepresentativeInsideBlob(v));
            }
        }
        // (b)
        for s in &self.s {
            let mut flags = self.blobs.iter().map(|b| g.row(s).intersects(b));
            if let Some(first) = flags.next() {
                if flags.any(|f| f != first) {
                    return fail(ClassifierViolation::PartialBlobAdjacency(s));
                }
            }
        }
        // (c)
        let reps = self.s.to_vec();
        for (i, &s1) in reps.iter().enumerate() {
            for &s2 in &reps[i + 1..] {
                if self.blobs.iter().any(|b| g.row(s1).eq_under_mask(g.row(s2), b)) {
                    return fail(ClassifierViolation::IndistinguishableRepresentatives(s1, s2));
                }
            }
        }
        // (d)
        for (i, b) in self.blobs.iter().enumerate() {
            for v in b {
                if self.exc(v) != Some(i) {
                    return fail(ClassifierViolation::WrongExceptionalBlob(v));
                }
            }
        }
        // (e)
        for v in g.live() {
            let r = self.rep(v).expect("rep is total");
            for (i, b) in self.blobs.iter().enumerate() {
                if self.exc(v) == Some(i) {
                    continue;
                }
                if !g.row(v).eq_under_mask(g.row(r), b) {
                    return fail(ClassifierViolation::NeighborhoodMismatch(v, i));
                }
            }
        }
        Ok(())
    }

    /// The fibers of the representative map, one part per member of S
    /// with a preimage.
    pub fn raised_partition(&self) -> Result<Partition> {
        let mut fibers: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
        for (&v, &r) in &self.rep {
            fibers.entry(r).or_default().insert(v);
        }
        Partition::new(fibers.into_values().collect())
    }
}

#[derive(Serialize, Deserialize)]
struct ClassifierWire {
    blobs: Vec<Vec<Vertex>>,
    #[serde(rename = "S")]
    s: Vec<Vertex>,
    exc: BTreeMap<Vertex, Option<usize>>,
    rep: BTreeMap<Vertex, Vertex>,
}

impl Serialize for Classifier {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ClassifierWire {
            blobs: self.blobs.iter().map(VertexSet::to_vec).collect(),
            s: self.s.to_vec(),
            exc: self.exc.clone(),
            rep: self.rep.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Classifier {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = ClassifierWire::deserialize(de)?;
        for b in &w.blobs {
            if b.len() != b.iter().collect::<std::collections::BTreeSet<_>>().len() {
                return Err(D::Error::custom("duplicate vertex in blob"));
            }
        }
        Ok(Classifier {
            blobs: w.blobs.iter().map(|b| VertexSet::from(b.as_slice())).collect(),
            s: w.s.iter().copied().collect(),
            exc: w.exc,
            rep: w.rep,
        })
    }
}

/// Recovers the raised partition of any classifier extending the five
/// given blobs, scanning vertices in `order`: a vertex joins the part of
/// the earliest-added representative whose neighborhood matches its own
/// in at least three of the five blobs, or founds a new part.
pub fn partition_from_five(g: &Graph, blobs: &[VertexSet], order: &VertexOrder) -> Result<Partition> {
    let mut counter = StepCounter::unlimited();
    partition_from_five_counted(g, blobs, order, &mut counter)
}

pub(crate) fn partition_from_five_counted(
    g: &Graph,
    blobs: &[VertexSet],
    order: &VertexOrder,
    counter: &mut StepCounter,
) -> Result<Partition> {
    if blobs.len() != 5 {
        return Err(Error::BlobCount(5, blobs.len()));
    }
    for (i, b) in blobs.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::EmptySet("blob"));
        }
        if !b.is_subset(g.live()) {
            return Err(Error::NotASubset);
        }
        if blobs[i + 1..].iter().any(|c| b.intersects(c)) {
            return Err(Error::BlobsOverlap);
        }
    }
    let mut reps: Vec<Vertex> = Vec::new();
    let mut parts: Vec<VertexSet> = Vec::new();
    'vertices: for v in order.sorted(g.live()) {
        for (i, &s) in reps.iter().enumerate() {
            counter.charge(5)?;
            if agrees_in_majority(g, v, s, blobs) {
                parts[i].insert(v);
                continue 'vertices;
            }
        }
        reps.push(v);
        parts.push(VertexSet::singleton(v));
    }
    Partition::new(parts)
}

/// Same neighborhood in at least three of the five blobs.
fn agrees_in_majority(g: &Graph, v: Vertex, s: Vertex, blobs: &[VertexSet]) -> bool {
    let mut agree = 0usize;
    let mut differ = 0usize;
    for b in blobs {
        if g.row(v).eq_under_mask(g.row(s), b) {
            agree += 1;
            if agree == 3 {
                return true;
            }
        } else {
            differ += 1;
            if differ == 3 {
                return false;
            }
        }
    }
    unreachable!("five blobs force a majority")
}

/// Swaps the representatives for `s_prime`, which must map bijectively
/// onto S under the current representative assignment. The new
/// representatives' exceptional blobs are dropped, so the size decreases
/// by at most |S|; the raised partition is unchanged.
pub fn reselect_representatives(
    g: &Graph,
    c: &Classifier,
    s_prime: &VertexSet,
) -> Result<Classifier> {
    if s_prime.len() != c.s.len() {
        return Err(Error::NotABijection);
    }
    let mut to_new: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for sp in s_prime {
        let old = c.rep(sp).ok_or(Error::NotABijection)?;
        if to_new.insert(old, sp).is_some() {
            return Err(Error::NotABijection);
        }
    }
    if to_new.keys().copied().collect::<VertexSet>() != c.s {
        return Err(Error::NotABijection);
    }
    let dropped: Vec<usize> = s_prime.iter().filter_map(|sp| c.exc(sp)).collect();
    let mut reindex: BTreeMap<usize, usize> = BTreeMap::new();
    let mut blobs = Vec::new();
    for (i, b) in c.blobs.iter().enumerate() {
        if !dropped.contains(&i) {
            reindex.insert(i, blobs.len());
            blobs.push(b.clone());
        }
    }
    let exc = c.exc.iter().map(|(&v, &e)| (v, e.and_then(|i| reindex.get(&i).copied()))).collect();
    let rep = c.rep.iter().map(|(&v, &r)| (v, to_new[&r])).collect();
    let out = Classifier { blobs, s: s_prime.clone(), exc, rep };
    out.validate(g)?;
    Ok(out)
}

/// Reselects so that every representative is the `order`-least vertex of
/// its own fiber.
pub fn canonize(g: &Graph, c: &Classifier, order: &VertexOrder) -> Result<Classifier> {
    let p = c.raised_partition()?;
    let s_prime: VertexSet =
        p.parts().iter().map(|part| order.min_of(part).expect("parts are nonempty")).collect();
    reselect_representatives(g, c, &s_prime)
}

/// Exhaustively searches for a classifier whose blobs are drawn from
/// `balls`: subsets largest-first, S candidates of size 1..=`max_order`
/// in `order`-lexicographic sequence, first hit canonized and returned if
/// it retains at least `min_size` blobs. Deterministic; `None` when the
/// search space is exhausted.
pub fn search_classifier(
    g: &Graph,
    balls: &[VertexSet],
    order: &VertexOrder,
    max_order: usize,
    min_size: usize,
) -> Result<Option<Classifier>> {
    if balls.len() > SEARCH_BALL_CAP {
        return Err(Error::TooManyBalls(SEARCH_BALL_CAP, balls.len()));
    }
    if max_order > SEARCH_ORDER_CAP {
        return Err(Error::OrderCapExceeded(SEARCH_ORDER_CAP, max_order));
    }
    if max_order == 0 {
        return Err(Error::InvalidParams("max_order must be at least 1".into()));
    }
    for (i, b) in balls.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::EmptySet("ball"));
        }
        if !b.is_subset(g.live()) {
            return Err(Error::NotASubset);
        }
        if balls[i + 1..].iter().any(|c| b.intersects(c)) {
            return Err(Error::BlobsOverlap);
        }
    }
    let mut masks: Vec<u32> = (0..1u32 << balls.len()).collect();
    masks.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    for mask in masks {
        if (mask.count_ones() as usize) < min_size {
            continue;
        }
        let blobs: Vec<VertexSet> = (0..balls.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| balls[i].clone())
            .collect();
        let mut cover = VertexSet::new();
        for b in &blobs {
            cover.union_with(b);
        }
        let eligible = order.sorted(&g.live().difference(&cover));
        for size in 1..=max_order.min(eligible.len()) {
            for combo in eligible.iter().copied().combinations(size) {
                if let Some(c) = try_assemble(g, &blobs, &combo) {
                    let canon = canonize(g, &c, order)?;
                    if canon.size() >= min_size {
                        return Ok(Some(canon));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Tries to extend candidate representatives `s_seq` (disjoint from the
/// blobs, `order`-sorted) to a full classifier over `blobs`. Per vertex
/// the representative is the first candidate matching it everywhere but
/// in at most one blob — for five or more blobs that choice is unique.
fn try_assemble(g: &Graph, blobs: &[VertexSet], s_seq: &[Vertex]) -> Option<Classifier> {
    for &s in s_seq {
        let mut flags = blobs.iter().map(|b| g.row(s).intersects(b));
        if let Some(first) = flags.next() {
            if flags.any(|f| f != first) {
                return None;
            }
        }
    }
    for (i, &s1) in s_seq.iter().enumerate() {
        for &s2 in &s_seq[i + 1..] {
            if blobs.iter().any(|b| g.row(s1).eq_under_mask(g.row(s2), b)) {
                return None;
            }
        }
    }
    let mut blob_of: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, b) in blobs.iter().enumerate() {
        for v in b {
            blob_of.insert(v, i);
        }
    }
    let mut exc = BTreeMap::new();
    let mut rep = BTreeMap::new();
    'vertices: for v in g.live() {
        let home = blob_of.get(&v).copied();
        'candidates: for &s in s_seq {
            let mut wild: Option<usize> = None;
            for (i, b) in blobs.iter().enumerate() {
                if g.row(v).eq_under_mask(g.row(s), b) {
                    continue;
                }
                if wild.is_some() || home.is_some_and(|h| h != i) {
                    continue 'candidates;
                }
                wild = Some(i);
            }
            exc.insert(v, home.or(wild));
            rep.insert(v, s);
            continue 'vertices;
        }
        return None;
    }
    Some(Classifier {
        blobs: blobs.to_vec(),
        s: s_seq.iter().copied().collect(),
        exc,
        rep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn singleton_blobs(k: usize) -> Vec<VertexSet> {
        (0..k).map(VertexSet::singleton).collect()
    }

    /// Five singleton blobs 0..4 forming a clique, a hub 5 adjacent to
    /// all of them, and an isolated vertex 6.
    fn clique_hub_graph() -> Graph {
        let mut edges = vec![(0, 5), (1, 5), (2, 5), (3, 5), (4, 5)];
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j));
            }
        }
        Graph::build(7, &edges).unwrap()
    }

    fn clique_hub_classifier() -> Classifier {
        let exc = (0..7).map(|v| (v, if v < 5 { Some(v) } else { None })).collect();
        let rep = (0..7).map(|v| (v, if v < 6 { 5 } else { 6 })).collect();
        Classifier::from_parts(singleton_blobs(5), [5, 6].as_slice().into(), exc, rep)
    }

    #[test]
    fn trivial_classifier_validates() {
        let g = Family::parse("path:6", 0).unwrap().generate().unwrap();
        let c = Classifier::trivial(&g, &VertexOrder::Identity).unwrap();
        c.validate(&g).unwrap();
        assert_eq!((c.size(), c.order()), (0, 1));
        let p = c.raised_partition().unwrap();
        assert_eq!(p.parts(), &[g.live().clone()]);
    }

    #[test]
    fn hand_built_classifier_validates() {
        let g = clique_hub_graph();
        let c = clique_hub_classifier();
        c.validate(&g).unwrap();
        assert_eq!((c.size(), c.order()), (5, 2));
    }

    #[test]
    fn each_condition_is_detected() {
        let g = clique_hub_graph();
        let good = clique_hub_classifier();

        let mut c = good.clone();
        c.s.insert(0); // 0 sits in a blob, and |S| grows past the fibers
        assert_eq!(
            c.validate(&g),
            Err(Error::InvalidClassifier(ClassifierViolation::RepresentativeInsideBlob(0)))
        );

        // hub 5 sees blob 0 but vertex 6 only partially covers S: attach
        // a fresh graph where 5 has neighbors in blobs 0..2 only
        let g2 = Graph::build(7, &[(0, 5), (1, 5), (2, 5)]).unwrap();
        assert_eq!(
            good.validate(&g2),
            Err(Error::InvalidClassifier(ClassifierViolation::PartialBlobAdjacency(5)))
        );

        // two reps with equal traces: drop all of 6's distinguishing
        // structure by making 5 isolated as well
        let g3 = Graph::build(7, &[]).unwrap();
        assert_eq!(
            good.validate(&g3),
            Err(Error::InvalidClassifier(
                ClassifierViolation::IndistinguishableRepresentatives(5, 6)
            ))
        );

        let mut c = good.clone();
        c.exc.insert(2, None);
        assert_eq!(
            c.validate(&g),
            Err(Error::InvalidClassifier(ClassifierViolation::WrongExceptionalBlob(2)))
        );

        let mut c = good.clone();
        c.rep.insert(6, 5); // isolated 6 does not copy the hub anywhere
        assert_eq!(
            c.validate(&g),
            Err(Error::InvalidClassifier(ClassifierViolation::NeighborhoodMismatch(6, 0)))
        );
    }

    #[test]
    fn structural_checks_precede_conditions() {
        let g = clique_hub_graph();
        let mut c = clique_hub_classifier();
        c.blobs[1] = VertexSet::singleton(0);
        assert_eq!(c.validate(&g), Err(Error::BlobsOverlap));

        let mut c = clique_hub_classifier();
        c.s = VertexSet::new();
        assert_eq!(c.validate(&g), Err(Error::EmptySet("S")));

        let mut c = clique_hub_classifier();
        c.rep.remove(&3);
        assert_eq!(c.validate(&g), Err(Error::VertexSetMismatch));
    }

    #[test]
    fn five_blob_recovery_matches_raised_partition() {
        let g = clique_hub_graph();
        let c = clique_hub_classifier();
        let p = partition_from_five(&g, c.blobs(), &VertexOrder::Identity).unwrap();
        assert_eq!(p, c.raised_partition().unwrap());
        assert_eq!(p.parts().len(), 2);
        assert_eq!(p.parts()[0].to_vec(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(p.parts()[1].to_vec(), vec![6]);
    }

    #[test]
    fn recovery_is_order_independent_here() {
        let g = clique_hub_graph();
        let c = clique_hub_classifier();
        let seq: Vec<Vertex> = vec![6, 4, 2, 0, 1, 3, 5];
        let order = VertexOrder::from_sequence(&seq).unwrap();
        let p = partition_from_five(&g, c.blobs(), &order).unwrap();
        assert_eq!(p, c.raised_partition().unwrap());
    }

    #[test]
    fn recovery_requires_exactly_five_blobs() {
        let g = clique_hub_graph();
        assert_eq!(
            partition_from_five(&g, &singleton_blobs(4), &VertexOrder::Identity),
            Err(Error::BlobCount(5, 4))
        );
    }

    #[test]
    fn reselect_drops_exceptional_blobs() {
        let g = clique_hub_graph();
        let c = clique_hub_classifier();
        // 0 is in the hub's fiber, 6 in its own
        let c2 = reselect_representatives(&g, &c, &[0, 6].as_slice().into()).unwrap();
        assert_eq!(c2.s().to_vec(), vec![0, 6]);
        assert_eq!(c2.size(), 4, "vertex 0 forfeits its own blob");
        assert_eq!(c2.rep(3), Some(0));
        assert_eq!(c2.exc(1), Some(0), "blob indices shift down");
        assert_eq!(c2.raised_partition().unwrap(), c.raised_partition().unwrap());

        // not a bijection: both candidates sit in the hub's fiber
        assert_eq!(
            reselect_representatives(&g, &c, &[0, 1].as_slice().into()),
            Err(Error::NotABijection)
        );
    }

    #[test]
    fn canonize_picks_fiber_minima() {
        let g = clique_hub_graph();
        let c = clique_hub_classifier();
        let canon = canonize(&g, &c, &VertexOrder::Identity).unwrap();
        assert_eq!(canon.s().to_vec(), vec![0, 6]);
        assert_eq!(canon.size(), 4);
        // a second canonization is a fixed point
        assert_eq!(canonize(&g, &canon, &VertexOrder::Identity).unwrap(), canon);
    }

    #[test]
    fn search_prefers_large_blob_families() {
        // singleton blobs plus a universal hub and an isolated vertex:
        // only S = {hub, isolated} works over all five blobs
        let g = Graph::build(7, &[(0, 5), (1, 5), (2, 5), (3, 5), (4, 5), (5, 6)]).unwrap();
        let balls = singleton_blobs(5);
        let c = search_classifier(&g, &balls, &VertexOrder::Identity, 2, 0).unwrap().unwrap();
        assert!(c.s().contains(5), "the hub must be a representative");
        c.validate(&g).unwrap();
        assert_eq!(c.size(), 4, "canonization trades one blob away");
        // insisting on all five blobs is impossible here
        assert_eq!(search_classifier(&g, &balls, &VertexOrder::Identity, 2, 5).unwrap(), None);
    }

    #[test]
    fn search_with_no_balls_returns_trivial() {
        let g = Family::parse("cycle:5", 0).unwrap().generate().unwrap();
        let c = search_classifier(&g, &[], &VertexOrder::Identity, 1, 0).unwrap().unwrap();
        assert_eq!(c, Classifier::trivial(&g, &VertexOrder::Identity).unwrap());
    }

    #[test]
    fn search_caps_are_enforced() {
        let g = Graph::empty(16);
        let balls: Vec<VertexSet> = (0..9).map(VertexSet::singleton).collect();
        assert_eq!(
            search_classifier(&g, &balls, &VertexOrder::Identity, 1, 0),
            Err(Error::TooManyBalls(8, 9))
        );
        assert_eq!(
            search_classifier(&g, &balls[..2], &VertexOrder::Identity, 4, 0),
            Err(Error::OrderCapExceeded(3, 4))
        );
    }

    #[test]
    fn json_round_trip_is_stable() {
        let c = clique_hub_classifier();
        let js = serde_json::to_string(&c).unwrap();
        assert_eq!(
            js,
            concat!(
                r#"{"blobs":[[0],[1],[2],[3],[4]],"S":[5,6],"#,
                r#""exc":{"0":0,"1":1,"2":2,"3":3,"4":4,"5":null,"6":null},"#,
                r#""rep":{"0":5,"1":5,"2":5,"3":5,"4":5,"5":5,"6":6}}"#
            )
        );
        let back: Classifier = serde_json::from_str(&js).unwrap();
        assert_eq!(back, c);
    }
}
