//! Graph flips, flip metrics, and localization games.
//!
//! This crate implements a small calculus of *flips* (complementing the
//! adjacency between vertex sets), partition- and trace-based refinements,
//! a neighborhood classifier with a partition-recovery algorithm, the
//! recursive flip-prediction procedure built on top of it, and a game
//! engine for four localization games in which one player repeatedly
//! flips the graph while the other confines play to balls of bounded
//! radius. Strategies are pluggable; the library ships a complete
//! era-based winning strategy for the flipping player, wrappers that
//! translate strategies between the game variants, and brute-force
//! oracles sized for property tests.

pub mod classifier;
pub mod error;
pub mod fixtures;
pub mod flips;
pub mod game;
pub mod graph;
pub mod metric;
pub mod order;
pub mod predictor;
pub mod set;
pub mod strategy;
pub mod verify;

pub use classifier::{
    canonize, partition_from_five, reselect_representatives, search_classifier, Classifier,
    ClassifierViolation,
};
pub use error::{Error, Result};
pub use fixtures::{planted, Decorations, Planted};
pub use flips::{
    apply_flip_set, count_partition_flips, enumerate_partition_flips, is_partition_flip_of,
    isolating_flips, s_classes, AtomicFlip, FlipSet, Partition, SClassPartition,
    DEFAULT_PARTITION_FLIP_CAP,
};
pub use game::{
    initial_position, localize, replay, run_game, step, validate_connector_move, ArenaView,
    ConnectorMove, ConnectorStrategy, FlipSchedule, FlipperMove, FlipperPlayer, FlipperStrategy,
    GameConfig, GameVariant, Outcome, Player, Position, PseudoFlipperStrategy, RoundRecord,
    SeparatorStrategy, Transcript,
};
pub use graph::{Family, Graph};
pub use metric::{flip_ball, flip_distance, separated};
pub use order::VertexOrder;
pub use predictor::{
    flips_even_case, flips_odd_case, fw_oracle, predict, q_partition, PredictConfig,
    PredictOutcome, QCell, QPartition, StepCounter,
};
pub use set::{Vertex, VertexSet};
pub use strategy::{
    make_connector, split_sequence, ConnectorKind, FlipStar, PairRecord, PseudoFlipperAsFlipper,
    ScriptedFlipper, ScriptedSeparator, SeparatorAsPseudoFlipper, SingleFlipWrapper,
};
pub use verify::{
    predict_scaling, run_all, run_suite, Check, ScalingReport, ScalingRow, SuiteReport,
    SUITE_NAMES,
};
