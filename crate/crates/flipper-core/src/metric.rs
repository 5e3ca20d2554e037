//! The flip metric: distances and balls measured across *all* flips of a
//! partition at once.
//!
//! For a partition P of the vertices, two sets are r-separated when some
//! P-flip of the graph has no path of length at most r between them. The
//! flip distance of u and v is the largest distance any P-flip achieves
//! (infinite when some flip disconnects them), and the flip ball of radius
//! r around v is the set of vertices no P-flip can push farther than r
//! away — the intersection of the ordinary balls over all P-flips.

use crate::error::{Error, Result};
use crate::flips::{enumerate_partition_flips, Partition};
use crate::graph::Graph;
use crate::set::{Vertex, VertexSet};

fn check(g: &Graph, p: &Partition) -> Result<()> {
    if p.ground_set() != *g.live() {
        return Err(Error::NotAPartition);
    }
    Ok(())
}

/// Is there a P-flip of `g` with no path of length <= r from `a` to `b`?
///
/// Sets sharing a vertex are never separated (the trivial path has length
/// zero); an empty side is separated from everything.
pub fn separated(
    g: &Graph,
    p: &Partition,
    a: &VertexSet,
    b: &VertexSet,
    r: usize,
    cap: usize,
) -> Result<bool> {
    check(g, p)?;
    if !a.is_subset(g.live()) || !b.is_subset(g.live()) {
        return Err(Error::NotASubset);
    }
    if a.intersects(b) {
        return Ok(false);
    }
    for flip in enumerate_partition_flips(p, cap)? {
        let h = flip.apply(g);
        if !h.ball_of_set(a, r).intersects(b) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// max over P-flips H of dist_H(u, v); None when some flip disconnects them.
pub fn flip_distance(
    g: &Graph,
    p: &Partition,
    u: Vertex,
    v: Vertex,
    cap: usize,
) -> Result<Option<usize>> {
    check(g, p)?;
    if !g.is_live(u) {
        return Err(Error::NotLive(u));
    }
    if !g.is_live(v) {
        return Err(Error::NotLive(v));
    }
    let mut best = 0usize;
    for flip in enumerate_partition_flips(p, cap)? {
        let h = flip.apply(g);
        match h.distance(u, v)? {
            None => return Ok(None),
            Some(d) => best = best.max(d),
        }
    }
    Ok(Some(best))
}

/// Intersection over all P-flips H of the radius-r ball around v in H.
pub fn flip_ball(
    g: &Graph,
    p: &Partition,
    v: Vertex,
    r: usize,
    cap: usize,
) -> Result<VertexSet> {
    check(g, p)?;
    if !g.is_live(v) {
        return Err(Error::NotLive(v));
    }
    let mut ball = g.live().clone();
    for flip in enumerate_partition_flips(p, cap)? {
        let h = flip.apply(g);
        ball.intersect_with(&h.ball(v, r)?);
        if ball.len() == 1 {
            break;
        }
    }
    Ok(ball)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flips::{s_classes, DEFAULT_PARTITION_FLIP_CAP as CAP};
    use crate::graph::Family;

    fn bipartition_of_c4() -> (Graph, Partition) {
        let g = Family::Cycle { n: 4 }.generate().unwrap();
        let p = Partition::new(vec![
            [0, 2].into_iter().collect(),
            [1, 3].into_iter().collect(),
        ])
        .unwrap();
        (g, p)
    }

    #[test]
    fn cross_flip_can_disconnect() {
        // the cycle's edges are exactly the cross pairs of its bipartition,
        // so the cross flip empties the graph and the distance is infinite
        let (g, p) = bipartition_of_c4();
        assert_eq!(flip_distance(&g, &p, 0, 2, CAP).unwrap(), None);
        assert!(separated(
            &g,
            &p,
            &VertexSet::singleton(0),
            &VertexSet::singleton(2),
            7,
            CAP
        )
        .unwrap());
    }

    #[test]
    fn single_part_distance_on_path() {
        let g = Family::Path { n: 3 }.generate().unwrap();
        let p = Partition::single(VertexSet::full(3));
        // plain distance 2; the complement makes 0 and 2 adjacent
        assert_eq!(flip_distance(&g, &p, 0, 2, CAP).unwrap(), Some(2));
        assert_eq!(flip_distance(&g, &p, 1, 1, CAP).unwrap(), Some(0));
    }

    #[test]
    fn distinct_vertices_are_at_flip_distance_two_or_more() {
        let g = Family::Clique { n: 5 }.generate().unwrap();
        let s: VertexSet = [0, 1].into_iter().collect();
        let p = s_classes(&g, &s).unwrap().partition;
        for u in 0..5 {
            for v in 0..5 {
                if u == v {
                    continue;
                }
                let d = flip_distance(&g, &p, u, v, CAP).unwrap();
                assert!(d.is_none() || d.unwrap() >= 2, "{u},{v} gave {d:?}");
            }
        }
    }

    #[test]
    fn separation_thresholds_on_cycle() {
        let g = Family::Cycle { n: 6 }.generate().unwrap();
        let p = Partition::single(VertexSet::full(6));
        let a = VertexSet::singleton(0);
        let b = VertexSet::singleton(3);
        assert!(separated(&g, &p, &a, &b, 2, CAP).unwrap());
        assert!(!separated(&g, &p, &a, &b, 3, CAP).unwrap());
        assert!(!separated(&g, &p, &a, &a, 0, CAP).unwrap());
        assert!(separated(&g, &p, &VertexSet::new(), &b, 9, CAP).unwrap());
    }

    #[test]
    fn flip_ball_shrinks_to_center_on_path() {
        let g = Family::Path { n: 4 }.generate().unwrap();
        let p = Partition::single(VertexSet::full(4));
        // plain 1-ball {0,1}; complement 1-ball {0,2,3}; intersection {0}
        assert_eq!(flip_ball(&g, &p, 0, 1, CAP).unwrap().to_vec(), vec![0]);
        assert_eq!(flip_ball(&g, &p, 0, 0, CAP).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn finer_partition_gives_smaller_balls() {
        let g = Family::Path { n: 5 }.generate().unwrap();
        let coarse = s_classes(&g, &VertexSet::singleton(0)).unwrap().partition;
        let fine = s_classes(&g, &[0, 3].into_iter().collect()).unwrap().partition;
        for v in 0..5 {
            for r in 0..4 {
                let small = flip_ball(&g, &fine, v, r, CAP).unwrap();
                let big = flip_ball(&g, &coarse, v, r, CAP).unwrap();
                assert!(small.is_subset(&big), "v={v} r={r}");
            }
        }
    }

    #[test]
    fn rejects_partial_partition() {
        let g = Family::Path { n: 4 }.generate().unwrap();
        let p = Partition::single(VertexSet::full(3));
        assert!(matches!(flip_ball(&g, &p, 0, 1, CAP), Err(Error::NotAPartition)));
    }
}
