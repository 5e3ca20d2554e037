//! Deterministic planted instances and seeded random corpora for the
//! verification suites.
//!
//! A planted instance puts `m` centers pairwise at graph distance exactly
//! `radius` on a scaffold of hubs chosen so that a classifier over the
//! center balls exists at every level the predictor visits. On the last
//! level the centers are exactly spaced, the separating construction
//! fires, and applying it provably pushes them apart — which makes these
//! graphs end-to-end witnesses for the classifier recovery, the oracle,
//! and prediction agreement.
//!
//! Scaffolds by radius (centers x₁..x_m, sentinel s₀ always present):
//!
//! * 1 — the centers form a clique; two hubs adjacent to all of them.
//! * 2 — independent centers; two hubs adjacent to all of them.
//! * 3 — pendant centers x_i–a_i, the a_i form a clique, hub adjacent
//!   to every a_i.
//! * 4 — pendant centers x_i–a_i, independent a_i, hub adjacent to
//!   every a_i.
//! * 5 — chains x_i–a_i–b_i, the b_i form a clique, hub adjacent to
//!   every b_i.
//!
//! The sentinel and the low hub take identifiers 0 and 1 so that after
//! canonization every representative is still a non-blob vertex and no
//! blob gets dropped. Optional decorations attach a pet to the hub and a
//! pendant to the first center; both survive the construction without
//! reconnecting the centers.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::flips::{AtomicFlip, FlipSet, Partition};
use crate::graph::Graph;
use crate::order::VertexOrder;
use crate::set::{Vertex, VertexSet};

/// Optional extra vertices on a planted instance.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Decorations {
    /// A vertex adjacent only to the hub.
    pub hub_pet: bool,
    /// A vertex adjacent only to the first center.
    pub pendant: bool,
}

impl Decorations {
    pub const NONE: Decorations = Decorations { hub_pet: false, pendant: false };
    pub const FULL: Decorations = Decorations { hub_pet: true, pendant: true };
}

/// A graph with marked centers pairwise at distance exactly `radius`,
/// together with the vertex order the instance was built for.
#[derive(Debug, Clone)]
pub struct Planted {
    pub graph: Graph,
    pub centers: Vec<Vertex>,
    pub radius: usize,
    pub order: VertexOrder,
}

impl Planted {
    pub fn center_set(&self) -> VertexSet {
        self.centers.iter().copied().collect()
    }

    /// Balls the predictor inspects at `level`: radius ⌈level/2⌉ − 1
    /// around each center.
    pub fn level_balls(&self, level: usize) -> Result<Vec<VertexSet>> {
        let r = level.div_ceil(2).saturating_sub(1);
        self.centers.iter().map(|&x| self.graph.ball(x, r)).collect()
    }
}

/// Builds a planted instance for `radius` in 1..=5 with `m` in 5..=8
/// centers. A relabel seed renames the vertices by a seeded permutation
/// and compensates through the returned order, so the construction is
/// preserved while exercising non-identity orders.
pub fn planted(
    radius: usize,
    m: usize,
    decor: Decorations,
    relabel_seed: Option<u64>,
) -> Result<Planted> {
    if !(1..=5).contains(&radius) {
        return Err(Error::InvalidParams(format!("planted radius must be 1..=5, got {radius}")));
    }
    if !(5..=8).contains(&m) {
        return Err(Error::InvalidParams(format!("planted center count must be 5..=8, got {m}")));
    }
    // Identifiers: 0 and 1 are the fiber minima (low hub and sentinel),
    // centers are 2..2+m, scaffold layers follow, decorations last.
    let x = |i: usize| 2 + i;
    let a = |i: usize| 2 + m + i;
    let b = |i: usize| 2 + 2 * m + i;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let layers = match radius {
        1 | 2 => {
            // 0 is a second hub, the high hub sits after the centers.
            let h = 2 + m;
            edges.push((0, h));
            for i in 0..m {
                edges.push((0, x(i)));
                edges.push((h, x(i)));
                if radius == 1 {
                    for j in i + 1..m {
                        edges.push((x(i), x(j)));
                    }
                }
            }
            1
        }
        3 | 4 => {
            // 0 is the hub over the a-layer.
            for i in 0..m {
                edges.push((x(i), a(i)));
                edges.push((0, a(i)));
                if radius == 3 {
                    for j in i + 1..m {
                        edges.push((a(i), a(j)));
                    }
                }
            }
            2
        }
        _ => {
            // 0 is the hub over the b-layer.
            for i in 0..m {
                edges.push((x(i), a(i)));
                edges.push((a(i), b(i)));
                edges.push((0, b(i)));
                for j in i + 1..m {
                    edges.push((b(i), b(j)));
                }
            }
            3
        }
    };
    let mut n = 2 + layers * m + if matches!(radius, 1 | 2) { 1 } else { 0 };
    let hub = if matches!(radius, 1 | 2) { 2 + m } else { 0 };
    if decor.hub_pet {
        edges.push((hub, n));
        n += 1;
    }
    if decor.pendant {
        edges.push((x(0), n));
        n += 1;
    }
    let graph = Graph::build(n, &edges)?;
    let centers: Vec<Vertex> = (0..m).map(x).collect();
    match relabel_seed {
        None => Ok(Planted { graph, centers, radius, order: VertexOrder::Identity }),
        Some(seed) => {
            let mut perm: Vec<Vertex> = (0..n).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let graph = graph.relabel(&perm)?;
            let centers = centers.into_iter().map(|v| perm[v]).collect();
            let order = VertexOrder::from_sequence(&perm)?;
            Ok(Planted { graph, centers, radius, order })
        }
    }
}

// ---------------------------------------------------------------------------
// seeded random corpora

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Graph on 0..n where each pair is an edge with probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("generated edges are in range")
}

/// Uniformly random subset of `pool` with at most `max_len` elements.
pub fn random_subset<R: Rng>(pool: &VertexSet, max_len: usize, rng: &mut R) -> VertexSet {
    let mut items: Vec<Vertex> = pool.iter().collect();
    items.shuffle(rng);
    let len = rng.random_range(0..=max_len.min(items.len()));
    items.truncate(len);
    items.into_iter().collect()
}

/// Like [`random_subset`] but never empty (pool must be nonempty).
pub fn random_nonempty_subset<R: Rng>(pool: &VertexSet, max_len: usize, rng: &mut R) -> VertexSet {
    let mut items: Vec<Vertex> = pool.iter().collect();
    items.shuffle(rng);
    let len = rng.random_range(1..=max_len.clamp(1, items.len()));
    items.truncate(len);
    items.into_iter().collect()
}

/// Random flip set over the live vertices of `g` with at most `max_flips`
/// atomic flips (duplicates collapse, so the result may be smaller).
pub fn random_flip_set<R: Rng>(g: &Graph, max_flips: usize, rng: &mut R) -> FlipSet {
    let mut out = FlipSet::new();
    if g.order() == 0 {
        return out;
    }
    for _ in 0..rng.random_range(0..=max_flips) {
        let a = random_nonempty_subset(g.live(), 4, rng);
        let b = random_nonempty_subset(g.live(), 4, rng);
        out.insert(AtomicFlip::new(a, b));
    }
    out
}

/// Random partition of `ground` into at most `max_parts` parts.
pub fn random_partition<R: Rng>(ground: &VertexSet, max_parts: usize, rng: &mut R) -> Partition {
    let mut items: Vec<Vertex> = ground.iter().collect();
    items.shuffle(rng);
    let k = rng.random_range(1..=max_parts.clamp(1, items.len().max(1)));
    let mut parts = vec![VertexSet::new(); k];
    for (i, v) in items.into_iter().enumerate() {
        parts[i % k].insert(v);
    }
    parts.retain(|p| !p.is_empty());
    Partition::new(parts).expect("parts are disjoint and nonempty")
}

/// Random flip set aligned with `p`: each unordered pair of parts
/// (including a part with itself) is toggled with probability 1/2.
pub fn random_part_pair_flips<R: Rng>(p: &Partition, rng: &mut R) -> FlipSet {
    let parts = p.parts();
    let mut out = FlipSet::new();
    for i in 0..parts.len() {
        for j in i..parts.len() {
            if rng.random_bool(0.5) {
                out.insert(AtomicFlip::new(parts[i].clone(), parts[j].clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::search_classifier;
    use crate::flips::is_partition_flip_of;
    use crate::predictor::{fw_oracle, PredictConfig};

    #[test]
    fn planted_centers_sit_at_exact_pairwise_distance() {
        for radius in 1..=5 {
            for decor in [Decorations::NONE, Decorations::FULL] {
                let p = planted(radius, 5, decor, None).unwrap();
                for (i, &u) in p.centers.iter().enumerate() {
                    for &v in &p.centers[i + 1..] {
                        assert_eq!(
                            p.graph.distance(u, v).unwrap(),
                            Some(radius),
                            "radius {radius} decor {decor:?}"
                        );
                    }
                }
                let balls = p.level_balls(radius).unwrap();
                for (i, b) in balls.iter().enumerate() {
                    for c in &balls[i + 1..] {
                        assert!(!b.intersects(c), "balls overlap at radius {radius}");
                    }
                }
            }
        }
    }

    #[test]
    fn planted_instances_admit_a_small_classifier_at_every_level() {
        for radius in 1..=5 {
            let p = planted(radius, 6, Decorations::FULL, None).unwrap();
            for level in 1..=radius {
                let balls = p.level_balls(level).unwrap();
                let c = search_classifier(&p.graph, &balls, &p.order, 3, 5)
                    .unwrap()
                    .unwrap_or_else(|| panic!("no classifier at radius {radius} level {level}"));
                assert_eq!(c.size(), 6, "radius {radius} level {level} kept all blobs");
                assert!(c.s().len() <= 2);
            }
        }
    }

    #[test]
    fn oracle_recovers_every_planted_center() {
        for radius in 1..=5 {
            for seed in [None, Some(7u64)] {
                let p = planted(radius, 5, Decorations::NONE, seed).unwrap();
                let cfg = PredictConfig::new(radius).with_order(p.order.clone());
                let (y, f) = fw_oracle(&p.graph, &cfg, &p.center_set())
                    .unwrap()
                    .unwrap_or_else(|| panic!("oracle failed at radius {radius} seed {seed:?}"));
                assert_eq!(y, p.center_set(), "radius {radius} seed {seed:?}");
                assert!(!f.is_empty());
            }
        }
    }

    #[test]
    fn corpus_generators_are_consistent() {
        let mut r = rng(11);
        let g = random_graph(12, 0.4, &mut r);
        assert_eq!(g.order(), 12);
        let p = random_partition(g.live(), 4, &mut r);
        assert_eq!(p.ground_set(), *g.live());
        let f = random_part_pair_flips(&p, &mut r);
        let h = f.apply(&g);
        assert!(is_partition_flip_of(&g, &h, &p).unwrap());
        let s = random_nonempty_subset(g.live(), 5, &mut r);
        assert!(!s.is_empty() && s.len() <= 5);
    }
}
