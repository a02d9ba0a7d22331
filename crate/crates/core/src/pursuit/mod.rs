//! Exact deciders for the cops-and-robber games behind treewidth, DAG-width,
//! Kelly-width, directed pathwidth and entanglement, plus replay verifiers for
//! explicit cop strategies.
//!
//! The exact solvers work on graphs with at most 64 vertices. Certificate
//! verifiers ([`verify_sweep`], [`verify_ent_strategy`]) handle any size.

mod entanglement;
mod invisible;
pub(crate) mod mask;
mod measure;
mod strategy;
mod sweep;
mod visible;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use entanglement::{
    ent_strategy_switch_all, entanglement_is_one, solve_entanglement, verify_ent_strategy,
    EntVerification, FeedbackStrategy,
};
pub use invisible::solve_invisible;
pub use measure::{measure, measure_with, MeasureOutcome};
pub use strategy::{CopStrategy, PositionalStrategy, ReplayFailure};
pub use sweep::{
    dpw_sweep_certificate_switch_all, verify_sweep, CertificateError, SweepCertificate,
    SweepReport, SweepSemantics,
};
pub use visible::{replay_visible_strategy, solve_visible};

/// Default cap on explored game states.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// The five pursuit games.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Tw,
    Dagw,
    Kw,
    Dpw,
    Ent,
}

impl Variant {
    pub const ALL: [Variant; 5] = [Variant::Tw, Variant::Dagw, Variant::Kw, Variant::Dpw, Variant::Ent];

    /// Treewidth and directed pathwidth are one less than the cop number.
    pub fn cop_offset(self) -> u32 {
        match self {
            Variant::Tw | Variant::Dpw => 1,
            Variant::Dagw | Variant::Kw | Variant::Ent => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Tw => "tw",
            Variant::Dagw => "dagw",
            Variant::Kw => "kw",
            Variant::Dpw => "dpw",
            Variant::Ent => "ent",
        }
    }

    pub fn is_visible(self) -> bool {
        matches!(self, Variant::Tw | Variant::Dagw)
    }

    pub fn is_invisible(self) -> bool {
        matches!(self, Variant::Kw | Variant::Dpw)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown measure {s:?}"))
    }
}

/// Which cop moves the solvers consider.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveSet {
    /// Remove one cop, or add one cop on any free vertex.
    #[default]
    Normalized,
    /// Jump to any placement within budget (reference mode for tiny graphs).
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameConfig {
    pub variant: Variant,
    pub cops: usize,
    /// Ignored by the entanglement game.
    pub require_monotone: bool,
    pub moves: MoveSet,
    pub budget: u64,
}

impl GameConfig {
    pub fn new(variant: Variant, cops: usize) -> Self {
        GameConfig {
            variant,
            cops,
            require_monotone: true,
            moves: MoveSet::Normalized,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn monotone(mut self, require: bool) -> Self {
        self.require_monotone = require;
        self
    }

    pub fn moves(mut self, moves: MoveSet) -> Self {
        self.moves = moves;
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Cops,
    Robber,
}

/// A cop-side witness returned with a cops win.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// Positional strategy for a visible-robber game.
    Positional(PositionalStrategy),
    /// Clearing placement sequence for an invisible-robber game.
    Sweep(SweepCertificate),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    pub winner: Winner,
    pub witness: Option<Witness>,
    pub states_explored: u64,
}

impl SolveOutcome {
    pub fn cops_win(&self) -> bool {
        self.winner == Winner::Cops
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("budget exceeded: needs more than {budget} states (at least {required})")]
    BudgetExceeded { budget: u64, required: u64 },
    #[error("graph has {count} vertices; exact solvers support at most {max}")]
    TooManyVertices { count: usize, max: usize },
    #[error("{cops} cops exceed the {vertices} vertices of the graph")]
    TooManyCops { cops: usize, vertices: usize },
    #[error("the {solver} solver does not decide the {variant} game")]
    WrongVariant { variant: Variant, solver: &'static str },
}

fn check_cops(graph: &Graph, cops: usize) -> Result<(), SolveError> {
    if cops > graph.vertex_count() {
        Err(SolveError::TooManyCops {
            cops,
            vertices: graph.vertex_count(),
        })
    } else {
        Ok(())
    }
}

/// Decides the game named by `config.variant`.
pub fn solve(graph: &Graph, config: &GameConfig) -> Result<SolveOutcome, SolveError> {
    match config.variant {
        Variant::Tw | Variant::Dagw => solve_visible(graph, config),
        Variant::Kw | Variant::Dpw => solve_invisible(graph, config),
        Variant::Ent => solve_entanglement(graph, config.cops, config.budget),
    }
}

pub(crate) fn set_of(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_mask(n, mask)
}
