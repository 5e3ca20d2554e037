//! Built-in strategies and strategy translations.
//!
//! The centerpiece is [`FlipStar`], the era-based Flipper strategy: it
//! grows a chain of adopted vertices X, and in each era plays one move
//! pair per 5-subset of X (flipping by the predicted flip set, then
//! flipping back) followed by a pair that isolates all of X, after which
//! the least surviving vertex outside X is adopted. Because every pair
//! composes to the identity, the arena returns to an induced subgraph of
//! the original graph after each pair, so predictions computed against
//! the original graph stay valid for the whole game.
//!
//! Around it sit three adapters:
//! * [`SingleFlipWrapper`] feeds a many-flips-per-round strategy into a
//!   one-flip-per-round game by queueing each batch.
//! * [`SeparatorAsPseudoFlipper`] plays the pseudo-flipper game by
//!   maintaining the partition into S-classes of a simulated Separator's
//!   growing set S.
//! * [`PseudoFlipperAsFlipper`] plays the radius-r flipper game by
//!   walking the arena through every partition flip of a simulated
//!   radius-2r pseudo-flipper round and flipping back.
//!
//! Connector opponents come from [`ConnectorKind`]: seeded-random,
//! greedy (largest surviving ball), farthest-from-played, or scripted.

use std::collections::{HashMap, VecDeque};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::flips::{
    enumerate_partition_flips, isolating_flips, s_classes, AtomicFlip, FlipSet, Partition,
    DEFAULT_PARTITION_FLIP_CAP,
};
use crate::game::{
    ArenaView, ConnectorMove, ConnectorStrategy, FlipSchedule, FlipperMove, FlipperStrategy,
    PseudoFlipperStrategy, SeparatorStrategy, Transcript,
};
use crate::graph::Graph;
use crate::metric::flip_ball;
use crate::predictor::{predict, PredictConfig};
use crate::set::{Vertex, VertexSet};

// ---------------------------------------------------------------------------
// flip★

/// One move pair played by [`FlipStar`]: the flip set is applied on the
/// first round of the pair and again (undoing it) on the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub era: usize,
    /// The five predicted vertices, or `None` for the isolating pair
    /// that ends an era.
    pub z: Option<Vec<Vertex>>,
    /// Snapshot of the adopted chain X when the pair started.
    pub x: Vec<Vertex>,
}

enum PairPlan {
    Predict(Vec<Vertex>),
    Isolate,
}

/// The era-based Flipper strategy. Construct with a [`PredictConfig`]
/// whose radius is **twice** the game radius; [`FlipStar::for_radius`]
/// does the doubling. Emits up to `max(max_flips, |G|)` flips per round,
/// so run it under [`FlipStar::recommended_schedule`].
pub struct FlipStar {
    g0: Graph,
    cfg: PredictConfig,
    x: Vec<Vertex>,
    era: usize,
    plan: VecDeque<PairPlan>,
    pending: Option<(FlipSet, bool)>,
    cache: HashMap<Vec<Vertex>, FlipSet>,
    /// One record per started move pair, in play order.
    pub log: Vec<PairRecord>,
}

impl FlipStar {
    pub fn new(g: &Graph, cfg: PredictConfig) -> FlipStar {
        FlipStar {
            g0: g.clone(),
            cfg,
            x: Vec::new(),
            era: 0,
            plan: VecDeque::new(),
            pending: None,
            cache: HashMap::new(),
            log: Vec::new(),
        }
    }

    /// Strategy for the radius-`game_radius` flipper game, predicting at
    /// the doubled radius.
    pub fn for_radius(g: &Graph, game_radius: usize) -> FlipStar {
        FlipStar::new(g, PredictConfig::new(2 * game_radius))
    }

    pub fn recommended_schedule(&self) -> FlipSchedule {
        FlipSchedule::RoundMax(self.cfg.max_flips.max(self.g0.order()))
    }

    /// The adopted chain so far, in adoption order.
    pub fn adopted(&self) -> &[Vertex] {
        &self.x
    }
}

impl FlipperStrategy for FlipStar {
    fn next_flips(&mut self, localized: &Graph, _mv: &ConnectorMove) -> Result<FlipSet> {
        if let Some((flips, closes_era)) = self.pending.take() {
            if closes_era {
                // adopt the least surviving vertex outside X; if there is
                // none the arena consists of isolated X vertices and the
                // win check fires shortly
                let pick = self
                    .cfg
                    .order
                    .sorted(localized.live())
                    .into_iter()
                    .find(|v| !self.x.contains(v));
                if let Some(v) = pick {
                    self.x.push(v);
                }
            }
            return Ok(flips);
        }
        if self.plan.is_empty() {
            self.era += 1;
            let xset: VertexSet = self.x.iter().copied().collect();
            let by_order = self.cfg.order.sorted(&xset);
            for z in by_order.into_iter().combinations(5) {
                self.plan.push_back(PairPlan::Predict(z));
            }
            self.plan.push_back(PairPlan::Isolate);
        }
        let (flips, closes_era, z) = match self.plan.pop_front().expect("plan was just filled") {
            PairPlan::Predict(z) => {
                let flips = match self.cache.get(&z) {
                    Some(f) => f.clone(),
                    None => {
                        let zset: VertexSet = z.iter().copied().collect();
                        let out = predict(&self.g0, &self.cfg, &zset)?;
                        self.cache.insert(z.clone(), out.flips.clone());
                        out.flips
                    }
                };
                (flips, false, Some(z))
            }
            PairPlan::Isolate => {
                let xset: VertexSet = self.x.iter().copied().collect();
                (isolating_flips(&self.g0, &xset)?, true, None)
            }
        };
        self.log.push(PairRecord { era: self.era, z, x: self.x.clone() });
        self.pending = Some((flips.clone(), closes_era));
        Ok(flips)
    }
}

// ---------------------------------------------------------------------------
// multi-flip → single-flip wrapper

/// Adapts a batching strategy to a one-flip-per-round game: each batch
/// is queued and dealt out one atomic flip per round; the wrapped
/// strategy is consulted only when the queue runs dry. An empty batch
/// becomes one no-op flip. With [`SingleFlipWrapper::with_exact_batches`]
/// every batch is padded with no-ops to exactly `k` flips, so round
/// `i·k` of the wrapped game corresponds to round `i` of the inner one.
pub struct SingleFlipWrapper<S> {
    inner: S,
    queue: VecDeque<AtomicFlip>,
    pad_to: Option<usize>,
    /// `(connector move, batch)` for every consultation of the inner
    /// strategy.
    pub consults: Vec<(ConnectorMove, FlipSet)>,
}

impl<S: FlipperStrategy> SingleFlipWrapper<S> {
    pub fn new(inner: S) -> SingleFlipWrapper<S> {
        SingleFlipWrapper { inner, queue: VecDeque::new(), pad_to: None, consults: Vec::new() }
    }

    pub fn with_exact_batches(inner: S, k: usize) -> SingleFlipWrapper<S> {
        SingleFlipWrapper { inner, queue: VecDeque::new(), pad_to: Some(k), consults: Vec::new() }
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }
}

impl<S: FlipperStrategy> FlipperStrategy for SingleFlipWrapper<S> {
    fn next_flips(&mut self, localized: &Graph, mv: &ConnectorMove) -> Result<FlipSet> {
        if self.queue.is_empty() {
            let batch = self.inner.next_flips(localized, mv)?;
            if let Some(k) = self.pad_to {
                if batch.len() > k {
                    return Err(Error::InvalidMove(format!(
                        "inner batch of {} flips exceeds the fixed batch size {k}",
                        batch.len()
                    )));
                }
            }
            self.consults.push((mv.clone(), batch.clone()));
            self.queue.extend(batch.iter().cloned());
            let fill = self.pad_to.unwrap_or(1);
            while self.queue.len() < fill {
                self.queue.push_back(AtomicFlip::noop());
            }
        }
        let flip = self.queue.pop_front().expect("queue was just refilled");
        let mut out = FlipSet::new();
        out.insert(flip);
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// separator → pseudo-flipper

/// Splits `cur` parts until they equal `target`, which must refine
/// `cur` over the same ground set. Within one `cur` part the contained
/// target parts are split off in ascending order of their least vertex,
/// all but the last (which remains automatically).
pub fn split_sequence(cur: &Partition, target: &Partition) -> Result<Vec<VertexSet>> {
    if target.ground_set() != cur.ground_set() || !Partition::refines(target, cur) {
        return Err(Error::InvalidPartition);
    }
    let mut out = Vec::new();
    for part in cur.parts() {
        let mut inside: Vec<&VertexSet> =
            target.parts().iter().filter(|t| t.is_subset(part)).collect();
        inside.sort_by_key(|t| t.first());
        for chunk in &inside[..inside.len() - 1] {
            out.push((*chunk).clone());
        }
    }
    Ok(out)
}

/// Plays the pseudo-flipper game by simulating a Separator: the
/// partition is kept equal to the S-class partition of the simulated
/// separator set, which grows by the inner strategy's pick each round.
/// Each round needs at most `|partition| + 1` splits.
pub struct SeparatorAsPseudoFlipper<S> {
    inner: S,
    s: VertexSet,
    /// Every vertex picked so far, in round order.
    pub picks: Vec<Vertex>,
}

impl<S: SeparatorStrategy> SeparatorAsPseudoFlipper<S> {
    pub fn new(inner: S) -> SeparatorAsPseudoFlipper<S> {
        SeparatorAsPseudoFlipper { inner, s: VertexSet::new(), picks: Vec::new() }
    }

    pub fn chosen(&self) -> &VertexSet {
        &self.s
    }
}

impl<S: SeparatorStrategy> PseudoFlipperStrategy for SeparatorAsPseudoFlipper<S> {
    fn next_splits(
        &mut self,
        g: &Graph,
        arena: &VertexSet,
        partition: &Partition,
        center: Vertex,
    ) -> Result<Vec<VertexSet>> {
        let pick = self.inner.next_pick(g, arena, &self.s, center)?;
        if !g.is_live(pick) {
            return Err(Error::NotLive(pick));
        }
        let mut grown = self.s.clone();
        grown.insert(pick);
        let target = s_classes(g, &grown)?.partition;
        let splits = split_sequence(partition, &target)?;
        self.s = grown;
        self.picks.push(pick);
        Ok(splits)
    }
}

// ---------------------------------------------------------------------------
// pseudo-flipper → flipper

/// Plays the radius-r flipper game by simulating a radius-2r
/// pseudo-flipper round as a block of real rounds: with p partition
/// flip sets Φ₀=∅, Φ₁, …, the block plays Φ₁, then Φ₁△Φ₂, …, and
/// finally flips back, so the arena visits every partition flip of the
/// block's starting arena and ends where it began. The connector center
/// of the block's last round drives the simulated round: the simulated
/// arena shrinks to its radius-2r flip-metric ball and the inner
/// strategy refines the partition. Throughout, the real arena's
/// vertices stay inside the simulated arena.
pub struct PseudoFlipperAsFlipper<S> {
    inner: S,
    g0: Graph,
    radius: usize,
    partition: Partition,
    sim_arena: VertexSet,
    plan: VecDeque<FlipSet>,
    emitted: usize,
    /// `(rounds emitted so far, simulated arena, partition)` at the end
    /// of every block.
    pub sim_log: Vec<(usize, VertexSet, Partition)>,
}

impl<S: PseudoFlipperStrategy> PseudoFlipperAsFlipper<S> {
    /// `radius` is the flipper game's radius; the simulated
    /// pseudo-flipper game runs at twice that.
    pub fn new(inner: S, g: &Graph, radius: usize) -> Result<PseudoFlipperAsFlipper<S>> {
        if g.order() == 0 {
            return Err(Error::EmptySet("graph"));
        }
        Ok(PseudoFlipperAsFlipper {
            inner,
            g0: g.clone(),
            radius,
            partition: Partition::single(g.live().clone()),
            sim_arena: g.live().clone(),
            plan: VecDeque::new(),
            emitted: 0,
            sim_log: Vec::new(),
        })
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }
}

impl<S: PseudoFlipperStrategy> FlipperStrategy for PseudoFlipperAsFlipper<S> {
    fn next_flips(&mut self, _localized: &Graph, mv: &ConnectorMove) -> Result<FlipSet> {
        if self.plan.is_empty() {
            let all: Vec<FlipSet> =
                enumerate_partition_flips(&self.partition, DEFAULT_PARTITION_FLIP_CAP)?.collect();
            let mut prev = FlipSet::new();
            for phi in all.into_iter().skip(1) {
                self.plan.push_back(prev.compose(&phi));
                prev = phi;
            }
            self.plan.push_back(prev);
        }
        let flips = self.plan.pop_front().expect("plan was just filled");
        self.emitted += 1;
        if self.plan.is_empty() {
            // block complete: run the simulated pseudo-flipper round with
            // this round's center
            let ConnectorMove::Center(c) = *mv else {
                return Err(Error::InvalidMove("expected a center move".into()));
            };
            if !self.sim_arena.contains(c) {
                return Err(Error::InvalidMove(format!(
                    "center {c} left the simulated arena"
                )));
            }
            let ball = flip_ball(
                &self.g0,
                &self.partition,
                c,
                2 * self.radius,
                DEFAULT_PARTITION_FLIP_CAP,
            )?;
            self.sim_arena.intersect_with(&ball);
            if self.sim_arena.len() > 1 {
                let splits =
                    self.inner.next_splits(&self.g0, &self.sim_arena, &self.partition, c)?;
                for chunk in &splits {
                    self.partition = self.partition.split(chunk)?;
                }
            }
            self.sim_log.push((self.emitted, self.sim_arena.clone(), self.partition.clone()));
        }
        Ok(flips)
    }
}

// ---------------------------------------------------------------------------
// scripted structural players

/// Replays a fixed sequence of flip sets, then errors.
pub struct ScriptedFlipper {
    moves: VecDeque<FlipSet>,
}

impl ScriptedFlipper {
    pub fn new(moves: Vec<FlipSet>) -> ScriptedFlipper {
        ScriptedFlipper { moves: moves.into() }
    }

    /// Takes the flip moves of a recorded flipper-variant game.
    pub fn from_transcript(t: &Transcript) -> Result<ScriptedFlipper> {
        let mut moves = VecDeque::new();
        for rec in &t.rounds {
            match &rec.flips {
                FlipperMove::Flips(f) => moves.push_back(f.clone()),
                _ => {
                    return Err(Error::InvalidTranscript(
                        "transcript contains non-flip moves".into(),
                    ))
                }
            }
        }
        Ok(ScriptedFlipper { moves })
    }
}

impl FlipperStrategy for ScriptedFlipper {
    fn next_flips(&mut self, _localized: &Graph, _mv: &ConnectorMove) -> Result<FlipSet> {
        self.moves.pop_front().ok_or(Error::ScriptExhausted)
    }
}

/// Replays a fixed sequence of separator picks, then errors.
pub struct ScriptedSeparator {
    picks: VecDeque<Vertex>,
}

impl ScriptedSeparator {
    pub fn new(picks: Vec<Vertex>) -> ScriptedSeparator {
        ScriptedSeparator { picks: picks.into() }
    }
}

impl SeparatorStrategy for ScriptedSeparator {
    fn next_pick(
        &mut self,
        _g: &Graph,
        _arena: &VertexSet,
        _chosen: &VertexSet,
        _center: Vertex,
    ) -> Result<Vertex> {
        self.picks.pop_front().ok_or(Error::ScriptExhausted)
    }
}

// ---------------------------------------------------------------------------
// connectors

/// Built-in Connector opponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConnectorKind {
    /// Uniform live center from a seeded generator.
    Random { seed: u64 },
    /// Center with the largest surviving ball, ties to the least vertex.
    GreedySurvivor,
    /// Center maximizing the least distance to previously played
    /// centers (unreachable counts as infinite), ties to the least
    /// vertex.
    FarthestFromPlayed,
    /// Replays a fixed move list, then errors.
    Scripted(Vec<ConnectorMove>),
}

impl ConnectorKind {
    /// Parses `random`, `random:SEED`, `greedy`, or `farthest`.
    pub fn parse(spec: &str) -> Result<ConnectorKind> {
        let mut it = spec.splitn(2, ':');
        let head = it.next().unwrap_or("");
        let tail = it.next();
        match (head, tail) {
            ("random", None) => Ok(ConnectorKind::Random { seed: 0 }),
            ("random", Some(s)) => {
                let seed = s
                    .parse()
                    .map_err(|_| Error::InvalidParams(format!("bad random seed {s:?}")))?;
                Ok(ConnectorKind::Random { seed })
            }
            ("greedy", None) => Ok(ConnectorKind::GreedySurvivor),
            ("farthest", None) => Ok(ConnectorKind::FarthestFromPlayed),
            _ => Err(Error::InvalidParams(format!("unknown connector {spec:?}"))),
        }
    }

    /// All moves from a recorded transcript, for replays.
    pub fn scripted_from(t: &Transcript) -> ConnectorKind {
        ConnectorKind::Scripted(t.rounds.iter().map(|r| r.connector.clone()).collect())
    }
}

pub fn make_connector(kind: ConnectorKind) -> Box<dyn ConnectorStrategy> {
    match kind {
        ConnectorKind::Random { seed } => {
            Box::new(RandomConnector { rng: ChaCha8Rng::seed_from_u64(seed) })
        }
        ConnectorKind::GreedySurvivor => Box::new(GreedyConnector),
        ConnectorKind::FarthestFromPlayed => Box::new(FarthestConnector { played: Vec::new() }),
        ConnectorKind::Scripted(moves) => Box::new(ScriptedConnector { moves: moves.into() }),
    }
}

/// Wraps a chosen center as the variant's move shape: a bare center, or
/// its full ball when the game wants subgraph moves.
fn center_move(view: &ArenaView<'_>, v: Vertex) -> Result<ConnectorMove> {
    match view {
        ArenaView::Graph { arena, radius, subgraph_moves: true } => {
            Ok(ConnectorMove::Subgraph(arena.ball(v, *radius)?))
        }
        _ => Ok(ConnectorMove::Center(v)),
    }
}

fn view_vertices(view: &ArenaView<'_>) -> Vec<Vertex> {
    match view {
        ArenaView::Graph { arena, .. } => arena.live().to_vec(),
        ArenaView::Sets { arena, .. } => arena.to_vec(),
    }
}

struct RandomConnector {
    rng: ChaCha8Rng,
}

impl ConnectorStrategy for RandomConnector {
    fn next_move(&mut self, view: &ArenaView<'_>) -> Result<ConnectorMove> {
        let vs = view_vertices(view);
        if vs.is_empty() {
            return Err(Error::EmptySet("arena"));
        }
        let v = vs[self.rng.random_range(0..vs.len())];
        center_move(view, v)
    }
}

struct GreedyConnector;

impl ConnectorStrategy for GreedyConnector {
    fn next_move(&mut self, view: &ArenaView<'_>) -> Result<ConnectorMove> {
        let mut best: Option<(usize, Vertex)> = None;
        match view {
            ArenaView::Graph { arena, radius, .. } => {
                for v in arena.live() {
                    let size = arena.ball(v, *radius)?.len();
                    if best.is_none_or(|(s, _)| size > s) {
                        best = Some((size, v));
                    }
                }
            }
            ArenaView::Sets { graph, arena, radius } => {
                for v in arena.iter() {
                    let size = graph.ball(v, *radius)?.intersection(arena).len();
                    if best.is_none_or(|(s, _)| size > s) {
                        best = Some((size, v));
                    }
                }
            }
        }
        let (_, v) = best.ok_or(Error::EmptySet("arena"))?;
        center_move(view, v)
    }
}

struct FarthestConnector {
    played: Vec<Vertex>,
}

impl ConnectorStrategy for FarthestConnector {
    fn next_move(&mut self, view: &ArenaView<'_>) -> Result<ConnectorMove> {
        let (dist_in, candidates): (&Graph, Vec<Vertex>) = match view {
            ArenaView::Graph { arena, .. } => (arena, arena.live().to_vec()),
            ArenaView::Sets { graph, arena, .. } => (graph, arena.to_vec()),
        };
        let mut best: Option<(usize, Vertex)> = None;
        for &v in &candidates {
            let mut score = usize::MAX;
            for &p in &self.played {
                if !dist_in.is_live(p) {
                    continue;
                }
                let d = dist_in.distance(v, p)?.unwrap_or(usize::MAX);
                score = score.min(d);
            }
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, v));
            }
        }
        let (_, v) = best.ok_or(Error::EmptySet("arena"))?;
        self.played.push(v);
        center_move(view, v)
    }
}

struct ScriptedConnector {
    moves: VecDeque<ConnectorMove>,
}

impl ConnectorStrategy for ScriptedConnector {
    fn next_move(&mut self, _view: &ArenaView<'_>) -> Result<ConnectorMove> {
        self.moves.pop_front().ok_or(Error::ScriptExhausted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{
        initial_position, run_game, step, FlipperPlayer, GameConfig, GameVariant, Outcome,
    };
    use crate::graph::Family;

    fn family(spec: &str) -> Graph {
        Family::parse(spec, 0).unwrap().generate().unwrap()
    }

    #[test]
    fn flip_star_wins_small_games() {
        for spec in ["path:8", "cycle:7", "clique:6"] {
            let g = family(spec);
            let mut strat = FlipStar::for_radius(&g, 1);
            let cfg = GameConfig::new(GameVariant::Flipper, 1)
                .with_schedule(strat.recommended_schedule())
                .with_max_rounds(10_000);
            let mut conn = make_connector(ConnectorKind::GreedySurvivor);
            let t =
                run_game(&g, &cfg, FlipperPlayer::Flips(&mut strat), conn.as_mut()).unwrap();
            assert!(
                matches!(t.outcome, Outcome::Flipper { .. }),
                "{spec}: expected a win, got {:?}",
                t.outcome
            );
            // every pair spans two rounds; the final pair may be cut short
            assert!(t.rounds.len() <= 2 * strat.log.len());
            // era bookkeeping: pair counts per era follow the 5-subset count
            for rec in &strat.log {
                match &rec.z {
                    Some(z) => {
                        assert_eq!(z.len(), 5);
                        assert!(z.iter().all(|v| rec.x.contains(v)));
                    }
                    None => assert!(rec.x.len() + 1 >= rec.era),
                }
            }
        }
    }

    #[test]
    fn flip_star_first_era_is_a_single_empty_pair() {
        let g = family("path:4");
        let mut strat = FlipStar::for_radius(&g, 1);
        let mv = ConnectorMove::Center(0);
        let loc = g.induced_subgraph(&g.ball(0, 2).unwrap()).unwrap();
        let first = strat.next_flips(&loc, &mv).unwrap();
        assert!(first.is_empty(), "isolating nothing is the empty flip set");
        assert_eq!(strat.log, vec![PairRecord { era: 1, z: None, x: vec![] }]);
        let second = strat.next_flips(&loc, &mv).unwrap();
        assert!(second.is_empty());
        assert_eq!(strat.adopted(), &[0], "least arena vertex adopted at era end");
    }

    #[test]
    fn wrapper_deals_batches_one_flip_at_a_time() {
        struct Batches(VecDeque<FlipSet>);
        impl FlipperStrategy for Batches {
            fn next_flips(&mut self, _: &Graph, _: &ConnectorMove) -> Result<FlipSet> {
                self.0.pop_front().ok_or(Error::ScriptExhausted)
            }
        }
        let f1 = AtomicFlip::new(VertexSet::singleton(0), VertexSet::singleton(1));
        let f2 = AtomicFlip::new(VertexSet::singleton(0), VertexSet::singleton(2));
        let mut batch = FlipSet::new();
        batch.insert(f1.clone());
        batch.insert(f2.clone());
        let inner = Batches(VecDeque::from([batch.clone(), FlipSet::new()]));
        let mut w = SingleFlipWrapper::new(inner);
        let g = family("path:3");
        let mv = ConnectorMove::Center(0);
        let take = |w: &mut SingleFlipWrapper<Batches>| {
            let f = w.next_flips(&g, &mv).unwrap();
            assert_eq!(f.len(), 1);
            let flip = f.iter().next().unwrap().clone();
            flip
        };
        assert_eq!(take(&mut w), f1);
        assert_eq!(take(&mut w), f2);
        assert_eq!(take(&mut w), AtomicFlip::noop(), "empty batch becomes a no-op");
        assert_eq!(w.consults.len(), 2);
        assert_eq!(w.consults[0].1, batch);
    }

    #[test]
    fn wrapper_pads_to_exact_batches_and_rejects_overflow() {
        struct One;
        impl FlipperStrategy for One {
            fn next_flips(&mut self, _: &Graph, _: &ConnectorMove) -> Result<FlipSet> {
                let mut f = FlipSet::new();
                f.insert(AtomicFlip::new(VertexSet::singleton(0), VertexSet::singleton(1)));
                Ok(f)
            }
        }
        let g = family("path:3");
        let mv = ConnectorMove::Center(0);
        let mut w = SingleFlipWrapper::with_exact_batches(One, 3);
        let mut emitted = Vec::new();
        for _ in 0..3 {
            emitted.push(w.next_flips(&g, &mv).unwrap());
        }
        assert_eq!(w.consults.len(), 1, "one consult covers three rounds");
        assert!(emitted[1].iter().next().unwrap().is_noop());
        assert!(emitted[2].iter().next().unwrap().is_noop());

        let mut tight = SingleFlipWrapper::with_exact_batches(One, 0);
        assert!(matches!(tight.next_flips(&g, &mv), Err(Error::InvalidMove(_))));
    }

    #[test]
    fn split_sequence_rebuilds_the_target() {
        let g = family("path:5");
        let cur = Partition::single(g.live().clone());
        let s: VertexSet = [2].as_slice().into();
        let target = s_classes(&g, &s).unwrap().partition;
        let splits = split_sequence(&cur, &target).unwrap();
        assert!(splits.len() + 1 == target.len());
        let mut rebuilt = cur;
        for chunk in &splits {
            rebuilt = rebuilt.split(chunk).unwrap();
        }
        let mut a = rebuilt.parts().to_vec();
        let mut b = target.parts().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn separator_translation_keeps_the_class_invariant() {
        let g = family("path:5");
        let mut tr = SeparatorAsPseudoFlipper::new(ScriptedSeparator::new(vec![2, 0, 4]));
        let mut partition = Partition::single(g.live().clone());
        for round in 1..=3 {
            let splits = tr.next_splits(&g, g.live(), &partition, 0).unwrap();
            assert!(splits.len() <= partition.len() + 1);
            for chunk in &splits {
                partition = partition.split(chunk).unwrap();
            }
            let expect = s_classes(&g, tr.chosen()).unwrap().partition;
            assert_eq!(partition, expect, "round {round}");
        }
        assert_eq!(tr.picks, vec![2, 0, 4]);
    }

    #[test]
    fn pseudo_translation_round_trips_single_part() {
        struct NoSplits;
        impl PseudoFlipperStrategy for NoSplits {
            fn next_splits(
                &mut self,
                _: &Graph,
                _: &VertexSet,
                _: &Partition,
                _: Vertex,
            ) -> Result<Vec<VertexSet>> {
                Ok(Vec::new())
            }
        }
        let g = family("path:3");
        let mut strat = PseudoFlipperAsFlipper::new(NoSplits, &g, 1).unwrap();
        let cfg = GameConfig::new(GameVariant::Flipper, 1)
            .with_schedule(FlipSchedule::Constant(1))
            .with_max_rounds(100);
        let mut conn = make_connector(ConnectorKind::Scripted(vec![
            ConnectorMove::Center(1),
            ConnectorMove::Center(1),
        ]));
        let t = run_game(&g, &cfg, FlipperPlayer::Flips(&mut strat), conn.as_mut()).unwrap();
        // one complement round and one flip-back round end it: the middle
        // vertex is isolated in the complement
        assert_eq!(t.outcome, Outcome::Flipper { round: 2 });
        assert_eq!(strat.sim_log.len(), 1);
        let (emitted, arena, _) = &strat.sim_log[0];
        assert_eq!(*emitted, 2);
        assert_eq!(arena.to_vec(), vec![1]);
    }

    #[test]
    fn connectors_are_deterministic_and_stay_legal() {
        let g = family("random_tree:12");
        let cfg = GameConfig::new(GameVariant::Flipper, 1).with_max_rounds(6);
        let run_with = |kind: ConnectorKind| {
            let mut strat = FlipStar::for_radius(&g, 1);
            let cfg = cfg.clone().with_schedule(strat.recommended_schedule());
            let mut conn = make_connector(kind);
            run_game(&g, &cfg, FlipperPlayer::Flips(&mut strat), conn.as_mut()).unwrap()
        };
        let a = run_with(ConnectorKind::Random { seed: 9 });
        let b = run_with(ConnectorKind::Random { seed: 9 });
        assert_eq!(a, b, "seeded connectors replay identically");
        for kind in [ConnectorKind::GreedySurvivor, ConnectorKind::FarthestFromPlayed] {
            let t = run_with(kind);
            assert!(!matches!(t.outcome, Outcome::Forfeit { .. }));
        }
    }

    #[test]
    fn greedy_picks_the_hub_of_a_star() {
        let g = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let mut conn = GreedyConnector;
        let view = ArenaView::Graph { arena: &g, radius: 1, subgraph_moves: false };
        assert_eq!(conn.next_move(&view).unwrap(), ConnectorMove::Center(0));
    }

    #[test]
    fn scripted_replay_reproduces_a_transcript() {
        let g = family("cycle:8");
        let mut strat = FlipStar::for_radius(&g, 1);
        let cfg = GameConfig::new(GameVariant::Flipper, 1)
            .with_schedule(strat.recommended_schedule())
            .with_max_rounds(10_000);
        let mut conn = make_connector(ConnectorKind::Random { seed: 3 });
        let t = run_game(&g, &cfg, FlipperPlayer::Flips(&mut strat), conn.as_mut()).unwrap();
        assert!(matches!(t.outcome, Outcome::Flipper { .. }));

        let mut again_f = ScriptedFlipper::from_transcript(&t).unwrap();
        let mut again_c = make_connector(ConnectorKind::scripted_from(&t));
        let t2 =
            run_game(&g, &cfg, FlipperPlayer::Flips(&mut again_f), again_c.as_mut()).unwrap();
        assert_eq!(t, t2);
    }

    #[test]
    fn scripted_connector_errors_past_its_end() {
        let g = family("path:3");
        let mut conn = make_connector(ConnectorKind::Scripted(vec![]));
        let view = ArenaView::Graph { arena: &g, radius: 1, subgraph_moves: false };
        assert!(matches!(conn.next_move(&view), Err(Error::ScriptExhausted)));

        // inside a game the exhausted script forfeits for the connector
        let mut strat = FlipStar::for_radius(&g, 1);
        let cfg = GameConfig::new(GameVariant::Flipper, 1)
            .with_schedule(strat.recommended_schedule());
        let mut conn = make_connector(ConnectorKind::Scripted(vec![ConnectorMove::Center(0)]));
        let t = run_game(&g, &cfg, FlipperPlayer::Flips(&mut strat), conn.as_mut()).unwrap();
        match t.outcome {
            Outcome::Forfeit { by, .. } => {
                assert_eq!(by, crate::game::Player::Connector)
            }
            other => panic!("expected forfeit, got {other:?}"),
        }
    }

    #[test]
    fn connector_kind_parses_names() {
        assert_eq!(ConnectorKind::parse("random:42").unwrap(), ConnectorKind::Random { seed: 42 });
        assert_eq!(ConnectorKind::parse("greedy").unwrap(), ConnectorKind::GreedySurvivor);
        assert_eq!(
            ConnectorKind::parse("farthest").unwrap(),
            ConnectorKind::FarthestFromPlayed
        );
        assert!(ConnectorKind::parse("psychic").is_err());
    }

    #[test]
    fn flip_star_pairs_restore_induced_subgraphs() {
        let g = family("grid:3x4");
        let mut strat = FlipStar::for_radius(&g, 1);
        let cfg = GameConfig::new(GameVariant::Flipper, 1)
            .with_schedule(strat.recommended_schedule())
            .with_max_rounds(10_000);
        let mut conn = make_connector(ConnectorKind::FarthestFromPlayed);
        let t = run_game(&g, &cfg, FlipperPlayer::Flips(&mut strat), conn.as_mut()).unwrap();
        assert!(matches!(t.outcome, Outcome::Flipper { .. }));
        // walk the transcript: after every even round the arena equals the
        // induced subgraph of the original graph on its vertex set
        let mut pos = initial_position(&g, &cfg).unwrap();
        for (i, rec) in t.rounds.iter().enumerate() {
            pos = step(&g, &cfg, &pos, &rec.connector, &rec.flips).unwrap();
            if (i + 1) % 2 == 0 {
                let crate::game::Position::Arena { graph, .. } = &pos else { unreachable!() };
                assert_eq!(graph, &g.induced_subgraph(graph.live()).unwrap());
            }
        }
    }
}
