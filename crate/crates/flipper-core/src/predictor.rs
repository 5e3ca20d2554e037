//! Flip prediction.
//!
//! [`predict`] computes, from a graph, a vertex order, and five target
//! vertices Z, a flip set F such that Z ends up pairwise further apart
//! than a configured radius in G ⊕ F — provided the graph actually admits
//! such a separation along the recursive scheme below. The construction
//! works level by level: at level t it assumes Z is (t−1)-independent in
//! the current flipped graph, recovers the raised partition of a hidden
//! classifier from the five balls around Z alone (see
//! [`partition_from_five`](crate::classifier::partition_from_five)),
//! groups vertices into cells by (part, trace on S), and toggles
//! adjacency between selected cell pairs. Odd and even levels use
//! different cell-pair selections.
//!
//! The point of the exercise is that the procedure only ever looks at Z
//! and the current graph: [`fw_oracle`] builds the same flip sets while
//! seeing the whole arrangement (all centers, the classifier, the
//! dichotomy into far/exactly-spaced subfamilies), and on its successful
//! runs [`predict`] reproduces its output from any five of the surviving
//! centers.
//!
//! All row-level work is metered by a [`StepCounter`]; a budget of
//! `step_factor · n²` adjacency-row operations aborts the call, which then
//! reports an empty flip set with `truncated` set.

use serde::{Deserialize, Serialize};

use crate::classifier::{partition_from_five_counted, search_classifier};
use crate::error::{Error, Result};
use crate::flips::{isolating_flips, AtomicFlip, FlipSet, Partition};
use crate::graph::Graph;
use crate::order::VertexOrder;
use crate::set::{Vertex, VertexSet};

pub const DEFAULT_STEP_FACTOR: u64 = 64;
pub const DEFAULT_MAX_FLIPS: usize = 4096;

/// Budget ticker for adjacency-row operations.
#[derive(Debug, Clone)]
pub struct StepCounter {
    used: u64,
    limit: u64,
}

impl StepCounter {
    pub fn with_limit(limit: u64) -> StepCounter {
        StepCounter { used: 0, limit }
    }

    pub fn unlimited() -> StepCounter {
        StepCounter::with_limit(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn charge(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::BudgetExceeded("step budget"))
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone)]
pub struct PredictConfig {
    pub radius: usize,
    pub order: VertexOrder,
    /// Step budget per call is `step_factor · n²`; must be positive.
    pub step_factor: u64,
    /// Abort level when the accumulated flip set grows past this.
    pub max_flips: usize,
}

impl PredictConfig {
    pub fn new(radius: usize) -> PredictConfig {
        PredictConfig {
            radius,
            order: VertexOrder::Identity,
            step_factor: DEFAULT_STEP_FACTOR,
            max_flips: DEFAULT_MAX_FLIPS,
        }
    }

    pub fn with_order(mut self, order: VertexOrder) -> PredictConfig {
        self.order = order;
        self
    }

    pub fn with_step_factor(mut self, step_factor: u64) -> PredictConfig {
        self.step_factor = step_factor;
        self
    }

    pub fn with_max_flips(mut self, max_flips: usize) -> PredictConfig {
        self.max_flips = max_flips;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictOutcome {
    pub flips: FlipSet,
    /// The step budget ran out; `flips` is empty in that case.
    pub truncated: bool,
    pub steps: u64,
}

/// One cell of the trace refinement: the members of a part that share the
/// trace `N(v) ∩ S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCell {
    /// The part's unique member of S.
    pub anchor: Vertex,
    /// Common neighborhood inside S of the members.
    pub trace: VertexSet,
    pub members: VertexSet,
}

/// Cells of a partition refined by traces on S, plus the subset S' of
/// representatives adjacent to every relevant ball.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPartition {
    /// Nonempty cells, ordered by (anchor, trace).
    pub cells: Vec<QCell>,
    pub s: VertexSet,
    pub s_prime: VertexSet,
}

/// Refines each part of `p` by equal traces on S. Every part must
/// contain exactly one member of S (its anchor) and the parts must cover
/// the live vertices.
pub fn q_partition(
    h: &Graph,
    p: &Partition,
    s: &VertexSet,
    s_prime: &VertexSet,
) -> Result<QPartition> {
    let mut counter = StepCounter::unlimited();
    q_partition_counted(h, p, s, s_prime, &mut counter)
}

fn q_partition_counted(
    h: &Graph,
    p: &Partition,
    s: &VertexSet,
    s_prime: &VertexSet,
    counter: &mut StepCounter,
) -> Result<QPartition> {
    if !s.is_subset(h.live()) {
        return Err(Error::NotASubset);
    }
    if !s_prime.is_subset(s) {
        return Err(Error::InvalidParams("S' must be a subset of S".into()));
    }
    if p.ground_set() != *h.live() {
        return Err(Error::NotAPartition);
    }
    if p.len() != s.len() {
        return Err(Error::InvalidParams("parts and S are not in bijection".into()));
    }
    let mut anchors = Vec::with_capacity(p.len());
    for part in p.parts() {
        let hit = part.intersection(s);
        if hit.len() != 1 {
            return Err(Error::InvalidParams("each part needs exactly one anchor from S".into()));
        }
        anchors.push(hit.iter().next().expect("nonempty"));
    }
    let mut cells: std::collections::BTreeMap<(Vertex, VertexSet), VertexSet> = Default::default();
    for v in h.live() {
        counter.charge(1)?;
        let part = p.part_of(v).expect("partition covers live vertices");
        let trace = h.row(v).intersection(s);
        cells.entry((anchors[part], trace)).or_default().insert(v);
    }
    let cells = cells
        .into_iter()
        .map(|((anchor, trace), members)| QCell { anchor, trace, members })
        .collect();
    Ok(QPartition { cells, s: s.clone(), s_prime: s_prime.clone() })
}

/// Flips for odd levels: toggle cells Q₁, Q₂ when both anchors lie in S'
/// and at least one anchor is in the other cell's trace. Self-pairs
/// (complementation within a cell) are allowed.
pub fn flips_odd_case(q: &QPartition, order: &VertexOrder) -> FlipSet {
    paired_flips(q, order, |q, lo, hi| {
        q.s_prime.contains(lo.anchor)
            && q.s_prime.contains(hi.anchor)
            && (hi.trace.contains(lo.anchor) || lo.trace.contains(hi.anchor))
    })
}

/// Flips for even levels: toggle cells Q₁, Q₂ when either anchor lies in
/// S' and in the other cell's trace.
pub fn flips_even_case(q: &QPartition, order: &VertexOrder) -> FlipSet {
    paired_flips(q, order, |q, lo, hi| {
        (q.s_prime.contains(lo.anchor) && hi.trace.contains(lo.anchor))
            || (q.s_prime.contains(hi.anchor) && lo.trace.contains(hi.anchor))
    })
}

fn paired_flips(
    q: &QPartition,
    order: &VertexOrder,
    cond: impl Fn(&QPartition, &QCell, &QCell) -> bool,
) -> FlipSet {
    // unordered pairs, the order-least cell in the first role
    let mut idx: Vec<usize> = (0..q.cells.len()).collect();
    idx.sort_by_key(|&i| {
        order.rank(order.min_of(&q.cells[i].members).expect("cells are nonempty"))
    });
    let mut out = FlipSet::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a..] {
            let (lo, hi) = (&q.cells[i], &q.cells[j]);
            if cond(q, lo, hi) {
                out.insert(AtomicFlip::new(lo.members.clone(), hi.members.clone()));
            }
        }
    }
    out
}

/// Predicts a flip set separating the five `order`-least vertices of `z`
/// beyond `cfg.radius`. With fewer than five candidates, or when a level's
/// preconditions fail, the affected level contributes no flips.
pub fn predict(g: &Graph, cfg: &PredictConfig, z: &VertexSet) -> Result<PredictOutcome> {
    if !z.is_subset(g.live()) {
        return Err(Error::NotASubset);
    }
    if !cfg.order.covers(g.universe()) {
        return Err(Error::InvalidOrder);
    }
    if cfg.step_factor == 0 {
        return Err(Error::ConfigRefused("step factor must be positive".into()));
    }
    let n = g.order() as u64;
    let mut counter = StepCounter::with_limit(cfg.step_factor.saturating_mul(n.saturating_mul(n)));
    let mut z5 = cfg.order.sorted(z);
    if z5.len() < 5 {
        return Ok(PredictOutcome { flips: FlipSet::new(), truncated: false, steps: 0 });
    }
    z5.truncate(5);
    let zset: VertexSet = z5.into_iter().collect();
    match predict_level(g, cfg, &zset, cfg.radius, &mut counter) {
        Ok(flips) => Ok(PredictOutcome { flips, truncated: false, steps: counter.used() }),
        Err(Error::BudgetExceeded(_)) => {
            Ok(PredictOutcome { flips: FlipSet::new(), truncated: true, steps: counter.used() })
        }
        Err(e) => Err(e),
    }
}

fn predict_level(
    g: &Graph,
    cfg: &PredictConfig,
    z: &VertexSet,
    r: usize,
    counter: &mut StepCounter,
) -> Result<FlipSet> {
    if r == 0 {
        return Ok(FlipSet::new());
    }
    let f_prev = predict_level(g, cfg, z, r - 1, counter)?;
    counter.charge(f_prev.len() as u64 * g.order() as u64)?;
    let h = f_prev.apply(g);
    if !distance_independent(&h, z, r - 1, counter)? {
        return Ok(FlipSet::new());
    }
    if distance_independent(&h, z, r, counter)? {
        return Ok(f_prev);
    }
    let mut balls = Vec::with_capacity(5);
    for v in z {
        let b = h.ball(v, r.div_ceil(2) - 1)?;
        counter.charge(b.len() as u64)?;
        balls.push(b);
    }
    if balls.iter().enumerate().any(|(i, b)| balls[i + 1..].iter().any(|c| b.intersects(c))) {
        return Ok(FlipSet::new());
    }
    let p = partition_from_five_counted(&h, &balls, &cfg.order, counter)?;
    let s: VertexSet =
        p.parts().iter().map(|part| cfg.order.min_of(part).expect("nonempty")).collect();
    counter.charge(s.len() as u64 * 5)?;
    let s_prime: VertexSet =
        s.iter().filter(|&v| balls.iter().all(|b| h.row(v).intersects(b))).collect();
    let q = q_partition_counted(&h, &p, &s, &s_prime, counter)?;
    let f_cur =
        if r % 2 == 1 { flips_odd_case(&q, &cfg.order) } else { flips_even_case(&q, &cfg.order) };
    let f = f_prev.compose(&f_cur);
    if f.len() > cfg.max_flips {
        return Ok(FlipSet::new());
    }
    Ok(f)
}

/// All pairwise distances strictly exceed `d`. Each bounded search is
/// charged at the worst-case number of rows it may scan.
fn distance_independent(
    h: &Graph,
    z: &VertexSet,
    d: usize,
    counter: &mut StepCounter,
) -> Result<bool> {
    let zs = z.to_vec();
    for (i, &u) in zs.iter().enumerate() {
        for &v in &zs[i + 1..] {
            counter.charge(h.order() as u64)?;
            if h.distance_bounded(u, v, d).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Full-knowledge construction that [`predict`] shadows. Level by level
/// it searches for a classifier of size ≥ 5 over the balls around the
/// surviving centers, keeps the largest subfamily of blobs whose centers
/// are pairwise far (distance > level) or exactly spaced (== level), and
/// in the exactly-spaced case separates the centers with the same
/// cell-pair flips the predictor uses. Returns the final centers and the
/// accumulated flip set, or `None` when some level finds no classifier,
/// exceeds `cfg.max_flips`, or fails its final independence check.
pub fn fw_oracle(
    g: &Graph,
    cfg: &PredictConfig,
    x: &VertexSet,
) -> Result<Option<(VertexSet, FlipSet)>> {
    if !x.is_subset(g.live()) {
        return Err(Error::NotASubset);
    }
    if x.is_empty() {
        return Err(Error::EmptySet("X"));
    }
    if !cfg.order.covers(g.universe()) {
        return Err(Error::InvalidOrder);
    }
    let mut y = x.clone();
    let mut f = FlipSet::new();
    for r in 1..=cfg.radius {
        let h = f.apply(g);
        let mut balls = Vec::with_capacity(y.len());
        for v in &y {
            balls.push((v, h.ball(v, r.div_ceil(2) - 1)?));
        }
        let sets: Vec<VertexSet> = balls.iter().map(|(_, b)| b.clone()).collect();
        let Some(c) = search_classifier(&h, &sets, &cfg.order, 3, 5)? else {
            return Ok(None);
        };
        // centers of the surviving blobs; balls around distinct centers
        // are disjoint here, so set equality pins the center
        let centers: Vec<Vertex> = c
            .blobs()
            .iter()
            .map(|b| balls.iter().find(|(_, set)| set == b).expect("blob came from balls").0)
            .collect();
        let (star, exact) = select_dichotomy(&h, &centers, r);
        let y_new: VertexSet = star.iter().map(|&i| centers[i]).collect();
        let f_cur = if !exact {
            FlipSet::new()
        } else if y_new.len() <= 4 {
            isolating_flips(&h, &y_new)?
        } else {
            let p = c.raised_partition()?;
            let s = c.s().clone();
            let star_balls: Vec<&VertexSet> = star.iter().map(|&i| &c.blobs()[i]).collect();
            let s_prime: VertexSet =
                s.iter().filter(|&v| star_balls.iter().all(|b| h.row(v).intersects(b))).collect();
            let q = q_partition(&h, &p, &s, &s_prime)?;
            if r % 2 == 1 {
                flips_odd_case(&q, &cfg.order)
            } else {
                flips_even_case(&q, &cfg.order)
            }
        };
        f = f.compose(&f_cur);
        if f.len() > cfg.max_flips {
            return Ok(None);
        }
        y = y_new;
        let check = f.apply(g);
        let mut counter = StepCounter::unlimited();
        if !distance_independent(&check, &y, r, &mut counter)? {
            return Ok(None);
        }
    }
    Ok(Some((y, f)))
}

/// Largest subset of centers that is pairwise far (`> r`, preferred on
/// ties) or pairwise exactly spaced (`== r`); among equal sizes the one
/// selecting earlier centers wins. Returns (indices, exactly-spaced?).
fn select_dichotomy(h: &Graph, centers: &[Vertex], r: usize) -> (Vec<usize>, bool) {
    let k = centers.len();
    let mut masks: Vec<u32> = (1..1u32 << k).collect();
    masks.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    for mask in masks {
        let idx: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let mut far = true;
        let mut exact = true;
        'pairs: for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                match h.distance_bounded(centers[i], centers[j], r) {
                    None => exact = false,
                    Some(d) if d == r => far = false,
                    Some(_) => {
                        far = false;
                        exact = false;
                    }
                }
                if !far && !exact {
                    break 'pairs;
                }
            }
        }
        if far {
            return (idx, false);
        }
        if exact {
            return (idx, true);
        }
    }
    unreachable!("singletons are both far and exactly spaced")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Clique 1..5 with hubs 0 and 6 adjacent to all of it, plus the edge
    /// 0–6. Predicting at radius 1 for Z = {1..5} must isolate everything.
    fn clique_with_two_hubs() -> Graph {
        let mut edges = vec![(0, 6)];
        for i in 1..=5 {
            edges.push((0, i));
            edges.push((6, i));
            for j in i + 1..=5 {
                edges.push((i, j));
            }
        }
        Graph::build(7, &edges).unwrap()
    }

    fn vs(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn counter_overflow_is_reported() {
        let mut c = StepCounter::with_limit(10);
        c.charge(10).unwrap();
        assert_eq!(c.charge(1), Err(Error::BudgetExceeded("step budget")));
        assert_eq!(c.used(), 11);
    }

    #[test]
    fn fewer_than_five_targets_predicts_nothing() {
        let g = clique_with_two_hubs();
        let out = predict(&g, &PredictConfig::new(3), &vs(&[1, 2, 3, 4])).unwrap();
        assert_eq!(out, PredictOutcome { flips: FlipSet::new(), truncated: false, steps: 0 });
    }

    #[test]
    fn radius_zero_predicts_nothing() {
        let g = clique_with_two_hubs();
        let out = predict(&g, &PredictConfig::new(0), &vs(&[1, 2, 3, 4, 5])).unwrap();
        assert!(out.flips.is_empty() && !out.truncated);
    }

    #[test]
    fn already_independent_targets_keep_previous_flips() {
        let g = Graph::empty(5);
        let out = predict(&g, &PredictConfig::new(2), &VertexSet::full(5)).unwrap();
        assert!(out.flips.is_empty() && !out.truncated);
        assert!(out.steps > 0);
    }

    #[test]
    fn hand_checked_radius_one_prediction() {
        let g = clique_with_two_hubs();
        let z = vs(&[1, 2, 3, 4, 5]);
        let out = predict(&g, &PredictConfig::new(1), &z).unwrap();
        assert!(!out.truncated);
        // one cell {0} (sees nothing of S = {0}) and one cell {1..6}:
        // the cross pair and the self pair both toggle
        let expected: FlipSet =
            [AtomicFlip::new(vs(&[0]), vs(&[1, 2, 3, 4, 5, 6])), AtomicFlip::new(vs(&[1, 2, 3, 4, 5, 6]), vs(&[1, 2, 3, 4, 5, 6]))]
                .into_iter()
                .collect();
        assert_eq!(out.flips, expected);
        // and the flips really do the job: everything ends up isolated
        let h = out.flips.apply(&g);
        assert_eq!(h.size(), 0);
    }

    #[test]
    fn oracle_agrees_on_the_hand_instance() {
        let g = clique_with_two_hubs();
        let x = vs(&[1, 2, 3, 4, 5]);
        let cfg = PredictConfig::new(1);
        let (y, f) = fw_oracle(&g, &cfg, &x).unwrap().expect("oracle succeeds here");
        assert_eq!(y, x);
        assert_eq!(f, predict(&g, &cfg, &x).unwrap().flips);
    }

    #[test]
    fn tiny_budget_truncates() {
        let g = clique_with_two_hubs();
        let cfg = PredictConfig::new(1).with_step_factor(1);
        let out = predict(&g, &cfg, &vs(&[1, 2, 3, 4, 5])).unwrap();
        assert!(out.truncated);
        assert!(out.flips.is_empty());
        assert!(out.steps > 49, "budget is step_factor · n²");
    }

    #[test]
    fn cell_refinement_and_both_cases() {
        let h = Graph::build(4, &[(0, 2), (0, 3), (1, 2)]).unwrap();
        let p = Partition::new(vec![vs(&[0, 1]), vs(&[2, 3])]).unwrap();
        let s = vs(&[0, 2]);
        let q = q_partition(&h, &p, &s, &vs(&[0])).unwrap();
        assert_eq!(q.cells.len(), 2, "0 and 1 share the trace {{2}}");
        assert_eq!(q.cells[0].members, vs(&[0, 1]));
        assert_eq!(q.cells[0].trace, vs(&[2]));
        assert_eq!(q.cells[1].members, vs(&[2, 3]));
        assert_eq!(q.cells[1].trace, vs(&[0]));

        let even = flips_even_case(&q, &VertexOrder::Identity);
        let expected: FlipSet =
            [AtomicFlip::new(vs(&[0, 1]), vs(&[2, 3]))].into_iter().collect();
        assert_eq!(even, expected);
        // at odd levels both anchors must sit in S' = {0}, so the cells
        // anchored at 2 pair with nothing
        assert!(flips_odd_case(&q, &VertexOrder::Identity).is_empty());
    }

    #[test]
    fn anchors_must_be_unique_per_part() {
        let h = Graph::empty(4);
        let p = Partition::new(vec![vs(&[0, 1]), vs(&[2, 3])]).unwrap();
        assert!(matches!(
            q_partition(&h, &p, &vs(&[0, 1]), &VertexSet::new()),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn dichotomy_prefers_larger_then_far() {
        // path 0–1–2 plus isolated 3: centers {0,2,3}
        let g = Graph::build(4, &[(0, 1), (1, 2)]).unwrap();
        // at r=2: d(0,2)=2 exact, d(·,3)=∞ far; no uniform triple, and
        // among the pairs the exactly-spaced {0,2} has the least mask
        let (idx, exact) = select_dichotomy(&g, &[0, 2, 3], 2);
        assert_eq!((idx, exact), (vec![0, 1], true));
    }
}
