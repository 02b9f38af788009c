//! Deterministic Monte Carlo simulator and analysis toolkit for gossip-based
//! information spreading in mobile random geometric networks.
//!
//! The crate is organized around the move-and-gossip slot structure: in every
//! slot all nodes first relocate according to a mobility model, then each node
//! exchanges the message with one uniformly chosen post-move neighbor. On top
//! of the slot engine sit conductance estimators (empirical cut minimization
//! and closed-form evaluators) and an experiment harness that sweeps parameter
//! grids, schedules seeded Monte Carlo rounds, and persists CSV results.
//!
//! Everything is reproducible: a run is fully determined by its configuration
//! and a 64-bit seed, and the harness derives per-round seeds with a
//! documented splitting rule (see [`seeds`]).

pub mod conductance;
pub mod exec;
pub mod formulas;
pub mod geometry;
pub mod gossip;
pub mod harness;
pub mod mobility;
pub mod quad;
pub mod seeds;
pub mod stats;

mod config;

pub use config::parse_experiment_config;

use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter violated a documented precondition.
    InvalidArgument(String),
    /// A node id outside the population.
    UnknownNode(usize),
    /// Cut family empty or otherwise unusable.
    DegenerateCutFamily,
    /// Every Monte Carlo round hit the slot cap; no completion statistics exist.
    AllRunsCapped,
    /// Numerical integration failed to reach the requested tolerance.
    QuadratureNonConvergence { achieved: f64, requested: f64 },
    /// Experiment configuration file problem (line number, message).
    Config(usize, String),
    /// Underlying I/O failure, stringified to keep the type cloneable.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::UnknownNode(id) => write!(f, "unknown node id {id}"),
            Error::DegenerateCutFamily => write!(f, "cut family contains no valid cut"),
            Error::AllRunsCapped => write!(f, "all runs hit the slot cap"),
            Error::QuadratureNonConvergence {
                achieved,
                requested,
            } => write!(
                f,
                "quadrature did not converge: error estimate {achieved:.3e} > tolerance {requested:.3e}"
            ),
            Error::Config(line, msg) => write!(f, "config line {line}: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
