//! Game engine for four localization games.
//!
//! All four variants share a shape: the *Connector* repeatedly confines
//! play to a radius-`r` neighborhood of a vertex of their choice, and the
//! opposing player counters with a structural move — flipping adjacency
//! between vertex sets, splitting a partition, or growing a separator
//! set. The opponent wins when the arena shrinks to a single vertex.
//!
//! * `Flipper` — the arena is a graph; the Connector names a center, the
//!   arena localizes to the ball around it, then the Flipper applies a
//!   flip set.
//! * `InducedSubgraphFlipper` — the Connector instead supplies any vertex
//!   set contained in some radius-`r` ball of the arena.
//! * `PseudoFlipper` — the arena is a vertex subset of the original
//!   graph. Localization intersects it with the flip-metric ball around
//!   the chosen center, taken over all flips of a partition the player
//!   refines by splitting parts.
//! * `Separation` — as above, but the partition is induced by a growing
//!   set S of separator vertices: its classes are the singletons of S
//!   plus the equal-trace classes over S.
//!
//! Rounds are numbered from 1. A win in round 0 means the starting graph
//! was already a single vertex. Invalid strategy output does not abort
//! the run: it is recorded as a forfeit outcome in the transcript.
//! Transcripts serialize deterministically and can be fed back through
//! [`step`] to reproduce every position.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flips::{s_classes, FlipSet, Partition, DEFAULT_PARTITION_FLIP_CAP};
use crate::graph::Graph;
use crate::metric::flip_ball;
use crate::set::{Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameVariant {
    Flipper,
    InducedSubgraphFlipper,
    PseudoFlipper,
    Separation,
}

/// Per-round allowance for the structural player: number of atomic flips
/// (flipper variants) or part splits (pseudo-flipper).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipSchedule {
    Constant(usize),
    /// max(round, k) — grows with the round number.
    RoundMax(usize),
}

impl FlipSchedule {
    pub fn cap(&self, round: usize) -> usize {
        match *self {
            FlipSchedule::Constant(k) => k,
            FlipSchedule::RoundMax(k) => round.max(k),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GameConfig {
    pub variant: GameVariant,
    pub radius: usize,
    pub max_rounds: usize,
    pub schedule: FlipSchedule,
}

impl GameConfig {
    pub fn new(variant: GameVariant, radius: usize) -> GameConfig {
        GameConfig { variant, radius, max_rounds: 200, schedule: FlipSchedule::RoundMax(1) }
    }

    pub fn with_max_rounds(mut self, max_rounds: usize) -> GameConfig {
        self.max_rounds = max_rounds;
        self
    }

    pub fn with_schedule(mut self, schedule: FlipSchedule) -> GameConfig {
        self.schedule = schedule;
        self
    }
}

/// JSON: a bare vertex id for `Center`, an id array for `Subgraph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConnectorMove {
    Center(Vertex),
    Subgraph(VertexSet),
}

impl Serialize for ConnectorMove {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ConnectorMove::Center(v) => ser.serialize_u64(*v as u64),
            ConnectorMove::Subgraph(set) => set.to_vec().serialize(ser),
        }
    }
}

impl<'de> Deserialize<'de> for ConnectorMove {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Center(Vertex),
            Subgraph(Vec<Vertex>),
        }
        Ok(match Wire::deserialize(de)? {
            Wire::Center(v) => ConnectorMove::Center(v),
            Wire::Subgraph(vs) => ConnectorMove::Subgraph(vs.iter().copied().collect()),
        })
    }
}

/// JSON: a flip array for `Flips`, `{"splits": [[..]]}` or `{"pick": v}`
/// for the other variants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlipperMove {
    Flips(FlipSet),
    Splits(Vec<VertexSet>),
    Pick(Vertex),
}

impl Serialize for FlipperMove {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "lowercase")]
        enum Tagged {
            Splits(Vec<Vec<Vertex>>),
            Pick(Vertex),
        }
        match self {
            FlipperMove::Flips(f) => f.serialize(ser),
            FlipperMove::Splits(chunks) => {
                Tagged::Splits(chunks.iter().map(VertexSet::to_vec).collect()).serialize(ser)
            }
            FlipperMove::Pick(v) => Tagged::Pick(*v).serialize(ser),
        }
    }
}

impl<'de> Deserialize<'de> for FlipperMove {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(rename_all = "lowercase")]
        enum Tagged {
            Splits(Vec<Vec<Vertex>>),
            Pick(Vertex),
        }
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Flips(FlipSet),
            Tagged(Tagged),
        }
        Ok(match Wire::deserialize(de)? {
            Wire::Flips(f) => FlipperMove::Flips(f),
            Wire::Tagged(Tagged::Splits(chunks)) => FlipperMove::Splits(
                chunks.iter().map(|c| c.iter().copied().collect()).collect(),
            ),
            Wire::Tagged(Tagged::Pick(v)) => FlipperMove::Pick(v),
        })
    }
}

/// Game state between rounds. `round` counts completed rounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Position {
    /// Flipper and induced-subgraph variants: the arena is a graph.
    Arena { graph: Graph, round: usize },
    /// Pseudo-flipper: surviving vertices of the original graph plus the
    /// partition being refined.
    Pseudo { arena: VertexSet, partition: Partition, round: usize },
    /// Separation: surviving vertices plus the separator set chosen so
    /// far.
    Separation { arena: VertexSet, chosen: VertexSet, round: usize },
}

impl Position {
    pub fn round(&self) -> usize {
        match self {
            Position::Arena { round, .. }
            | Position::Pseudo { round, .. }
            | Position::Separation { round, .. } => *round,
        }
    }

    pub fn arena_size(&self) -> usize {
        match self {
            Position::Arena { graph, .. } => graph.order(),
            Position::Pseudo { arena, .. } | Position::Separation { arena, .. } => arena.len(),
        }
    }

    pub fn is_won(&self) -> bool {
        self.arena_size() == 1
    }
}

pub fn initial_position(g: &Graph, cfg: &GameConfig) -> Result<Position> {
    if g.order() == 0 {
        return Err(Error::EmptySet("graph"));
    }
    Ok(match cfg.variant {
        GameVariant::Flipper | GameVariant::InducedSubgraphFlipper => {
            Position::Arena { graph: g.clone(), round: 0 }
        }
        GameVariant::PseudoFlipper => Position::Pseudo {
            arena: g.live().clone(),
            partition: Partition::single(g.live().clone()),
            round: 0,
        },
        GameVariant::Separation => {
            Position::Separation { arena: g.live().clone(), chosen: VertexSet::new(), round: 0 }
        }
    })
}

pub fn validate_connector_move(
    g: &Graph,
    cfg: &GameConfig,
    pos: &Position,
    mv: &ConnectorMove,
) -> Result<()> {
    let _ = g;
    match (cfg.variant, pos, mv) {
        (GameVariant::Flipper, Position::Arena { graph, .. }, ConnectorMove::Center(v)) => {
            if graph.is_live(*v) {
                Ok(())
            } else {
                Err(Error::InvalidMove(format!("center {v} is not in the arena")))
            }
        }
        (
            GameVariant::InducedSubgraphFlipper,
            Position::Arena { graph, .. },
            ConnectorMove::Subgraph(set),
        ) => {
            if set.is_empty() {
                return Err(Error::InvalidMove("chosen subgraph is empty".into()));
            }
            if !set.is_subset(graph.live()) {
                return Err(Error::InvalidMove("chosen subgraph leaves the arena".into()));
            }
            // covering-center search
            for c in graph.live() {
                if set.is_subset(&graph.ball(c, cfg.radius)?) {
                    return Ok(());
                }
            }
            Err(Error::InvalidMove(format!(
                "chosen subgraph fits in no radius-{} ball",
                cfg.radius
            )))
        }
        (
            GameVariant::PseudoFlipper | GameVariant::Separation,
            Position::Pseudo { arena, .. } | Position::Separation { arena, .. },
            ConnectorMove::Center(c),
        ) => {
            if arena.contains(*c) {
                Ok(())
            } else {
                Err(Error::InvalidMove(format!("center {c} is not in the arena")))
            }
        }
        _ => Err(Error::InvalidMove("move shape does not fit the game variant".into())),
    }
}

/// The graph handed to the structural player in the flipper variants:
/// the arena induced on the chosen ball or subgraph.
pub fn localize(cfg: &GameConfig, pos: &Position, mv: &ConnectorMove) -> Result<Graph> {
    let Position::Arena { graph, .. } = pos else {
        return Err(Error::InvalidMove("this variant has no graph arena".into()));
    };
    match mv {
        ConnectorMove::Center(v) => graph.induced_subgraph(&graph.ball(*v, cfg.radius)?),
        ConnectorMove::Subgraph(set) => graph.induced_subgraph(set),
    }
}

fn center_of(mv: &ConnectorMove) -> Result<Vertex> {
    match mv {
        ConnectorMove::Center(v) => Ok(*v),
        ConnectorMove::Subgraph(_) => {
            Err(Error::InvalidMove("this variant expects a center move".into()))
        }
    }
}

fn shrunk_arena(
    g: &Graph,
    p: &Partition,
    arena: &VertexSet,
    center: Vertex,
    radius: usize,
) -> Result<VertexSet> {
    let ball = flip_ball(g, p, center, radius, DEFAULT_PARTITION_FLIP_CAP)?;
    Ok(arena.intersection(&ball))
}

/// Applies one full round to a position. Refuses already-won positions
/// and validates both moves, including the per-round flip/split
/// allowance.
pub fn step(
    g: &Graph,
    cfg: &GameConfig,
    pos: &Position,
    cmove: &ConnectorMove,
    fmove: &FlipperMove,
) -> Result<Position> {
    if pos.is_won() {
        return Err(Error::GameOver);
    }
    validate_connector_move(g, cfg, pos, cmove)?;
    let round = pos.round() + 1;
    let cap = cfg.schedule.cap(round);
    match (pos, fmove) {
        (Position::Arena { .. }, FlipperMove::Flips(f)) => {
            if f.len() > cap {
                return Err(Error::InvalidMove(format!(
                    "{} flips exceed the round-{round} allowance of {cap}",
                    f.len()
                )));
            }
            let localized = localize(cfg, pos, cmove)?;
            Ok(Position::Arena { graph: f.apply(&localized), round })
        }
        (Position::Pseudo { arena, partition, .. }, FlipperMove::Splits(chunks)) => {
            if chunks.len() > cap {
                return Err(Error::InvalidMove(format!(
                    "{} splits exceed the round-{round} allowance of {cap}",
                    chunks.len()
                )));
            }
            let arena = shrunk_arena(g, partition, arena, center_of(cmove)?, cfg.radius)?;
            let mut partition = partition.clone();
            for chunk in chunks {
                partition = partition.split(chunk)?;
            }
            Ok(Position::Pseudo { arena, partition, round })
        }
        (Position::Separation { arena, chosen, .. }, FlipperMove::Pick(s)) => {
            if !g.is_live(*s) {
                return Err(Error::NotLive(*s));
            }
            let classes = s_classes(g, chosen)?.partition;
            let arena = shrunk_arena(g, &classes, arena, center_of(cmove)?, cfg.radius)?;
            let mut chosen = chosen.clone();
            chosen.insert(*s);
            Ok(Position::Separation { arena, chosen, round })
        }
        _ => Err(Error::InvalidMove("move shape does not fit the game variant".into())),
    }
}

/// What the Connector sees when asked to move.
pub enum ArenaView<'a> {
    /// Flipper variants: the whole current arena graph.
    Graph { arena: &'a Graph, radius: usize, subgraph_moves: bool },
    /// Pseudo-flipper and separation: the original graph and the
    /// surviving vertex set.
    Sets { graph: &'a Graph, arena: &'a VertexSet, radius: usize },
}

pub trait ConnectorStrategy {
    fn next_move(&mut self, view: &ArenaView<'_>) -> Result<ConnectorMove>;
}

pub trait FlipperStrategy {
    /// `localized` is the arena already confined by the Connector's move.
    fn next_flips(&mut self, localized: &Graph, mv: &ConnectorMove) -> Result<FlipSet>;
}

pub trait PseudoFlipperStrategy {
    /// `arena` has already been shrunk by the current round's ball.
    /// Returns the parts to split off, applied in sequence.
    fn next_splits(
        &mut self,
        g: &Graph,
        arena: &VertexSet,
        partition: &Partition,
        center: Vertex,
    ) -> Result<Vec<VertexSet>>;
}

pub trait SeparatorStrategy {
    /// `arena` has already been shrunk; returns the vertex to add to S.
    fn next_pick(
        &mut self,
        g: &Graph,
        arena: &VertexSet,
        chosen: &VertexSet,
        center: Vertex,
    ) -> Result<Vertex>;
}

/// The structural player, matching the game variant.
pub enum FlipperPlayer<'a> {
    Flips(&'a mut dyn FlipperStrategy),
    Splits(&'a mut dyn PseudoFlipperStrategy),
    Picks(&'a mut dyn SeparatorStrategy),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Connector,
    Flipper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "winner", rename_all = "snake_case")]
pub enum Outcome {
    /// The arena reached a single vertex after this many rounds.
    Flipper { round: usize },
    #[serde(rename = "none")]
    RoundLimit { round: usize },
    /// A strategy failed or produced an invalid move.
    Forfeit { round: usize, by: Player, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub connector: ConnectorMove,
    pub flips: FlipperMove,
    /// Arena size after the round.
    pub arena_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub variant: GameVariant,
    pub r: usize,
    pub rounds: Vec<RoundRecord>,
    pub outcome: Outcome,
}

impl Transcript {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("transcripts always serialize")
    }

    pub fn from_json(s: &str) -> Result<Transcript> {
        Ok(serde_json::from_str(s)?)
    }
}

fn make_view<'a>(g: &'a Graph, cfg: &GameConfig, pos: &'a Position) -> ArenaView<'a> {
    match pos {
        Position::Arena { graph, .. } => ArenaView::Graph {
            arena: graph,
            radius: cfg.radius,
            subgraph_moves: matches!(cfg.variant, GameVariant::InducedSubgraphFlipper),
        },
        Position::Pseudo { arena, .. } | Position::Separation { arena, .. } => {
            ArenaView::Sets { graph: g, arena, radius: cfg.radius }
        }
    }
}

fn consult_flipper(
    g: &Graph,
    cfg: &GameConfig,
    pos: &Position,
    cmove: &ConnectorMove,
    player: &mut FlipperPlayer<'_>,
) -> Result<FlipperMove> {
    match (player, pos) {
        (FlipperPlayer::Flips(s), Position::Arena { .. }) => {
            let localized = localize(cfg, pos, cmove)?;
            Ok(FlipperMove::Flips(s.next_flips(&localized, cmove)?))
        }
        (FlipperPlayer::Splits(s), Position::Pseudo { arena, partition, .. }) => {
            let c = center_of(cmove)?;
            let arena = shrunk_arena(g, partition, arena, c, cfg.radius)?;
            Ok(FlipperMove::Splits(s.next_splits(g, &arena, partition, c)?))
        }
        (FlipperPlayer::Picks(s), Position::Separation { arena, chosen, .. }) => {
            let c = center_of(cmove)?;
            let classes = s_classes(g, chosen)?.partition;
            let arena = shrunk_arena(g, &classes, arena, c, cfg.radius)?;
            Ok(FlipperMove::Pick(s.next_pick(g, &arena, chosen, c)?))
        }
        _ => Err(Error::IncompatibleStrategy),
    }
}

/// Plays a full game. Strategy errors and invalid moves become a
/// `Forfeit` outcome rather than an engine error.
pub fn run_game(
    g: &Graph,
    cfg: &GameConfig,
    mut flipper: FlipperPlayer<'_>,
    connector: &mut dyn ConnectorStrategy,
) -> Result<Transcript> {
    if cfg.max_rounds == 0 {
        return Err(Error::ConfigRefused("max_rounds must be at least 1".into()));
    }
    match (cfg.variant, &flipper) {
        (GameVariant::Flipper | GameVariant::InducedSubgraphFlipper, FlipperPlayer::Flips(_))
        | (GameVariant::PseudoFlipper, FlipperPlayer::Splits(_))
        | (GameVariant::Separation, FlipperPlayer::Picks(_)) => {}
        _ => return Err(Error::IncompatibleStrategy),
    }
    let mut pos = initial_position(g, cfg)?;
    let mut rounds = Vec::new();
    let outcome = loop {
        if pos.is_won() {
            break Outcome::Flipper { round: pos.round() };
        }
        if rounds.len() >= cfg.max_rounds {
            break Outcome::RoundLimit { round: pos.round() };
        }
        let round = pos.round() + 1;
        let forfeit = |by, e: Error| Outcome::Forfeit { round, by, reason: e.to_string() };
        let cmove = match connector.next_move(&make_view(g, cfg, &pos)) {
            Ok(m) => m,
            Err(e) => break forfeit(Player::Connector, e),
        };
        if let Err(e) = validate_connector_move(g, cfg, &pos, &cmove) {
            break forfeit(Player::Connector, e);
        }
        let fmove = match consult_flipper(g, cfg, &pos, &cmove, &mut flipper) {
            Ok(m) => m,
            Err(e) => break forfeit(Player::Flipper, e),
        };
        match step(g, cfg, &pos, &cmove, &fmove) {
            Ok(next) => {
                rounds.push(RoundRecord {
                    connector: cmove,
                    flips: fmove,
                    arena_size: next.arena_size(),
                });
                pos = next;
            }
            Err(e) => break forfeit(Player::Flipper, e),
        }
    };
    Ok(Transcript { variant: cfg.variant, r: cfg.radius, rounds, outcome })
}

/// Feeds recorded moves back through [`step`], checking the recorded
/// arena sizes and the outcome. Returns every position, starting with
/// the initial one.
pub fn replay(g: &Graph, cfg: &GameConfig, t: &Transcript) -> Result<Vec<Position>> {
    if t.variant != cfg.variant || t.r != cfg.radius {
        return Err(Error::InvalidTranscript("variant or radius mismatch".into()));
    }
    let mut positions = vec![initial_position(g, cfg)?];
    for (i, rec) in t.rounds.iter().enumerate() {
        let next = step(g, cfg, positions.last().expect("nonempty"), &rec.connector, &rec.flips)
            .map_err(|e| Error::ReplayMismatch(i + 1, e.to_string()))?;
        if next.arena_size() != rec.arena_size {
            return Err(Error::ReplayMismatch(
                i + 1,
                format!("arena size {} recorded, {} replayed", rec.arena_size, next.arena_size()),
            ));
        }
        positions.push(next);
    }
    let last = positions.last().expect("nonempty");
    let consistent = match t.outcome {
        Outcome::Flipper { round } => last.is_won() && round == t.rounds.len(),
        Outcome::RoundLimit { .. } => !last.is_won() && t.rounds.len() == cfg.max_rounds,
        Outcome::Forfeit { round, .. } => round == t.rounds.len() + 1,
    };
    if !consistent {
        return Err(Error::InvalidTranscript("outcome does not match the replayed end".into()));
    }
    Ok(positions)
}
