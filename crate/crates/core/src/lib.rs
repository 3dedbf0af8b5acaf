//! Solver for the Wise Alice game, where the players' logic is the
//! non-distributive lattice of a spin-½ system and mixed strategies are
//! wave functions parameterized by angles.
//!
//! - [`lattice`]: the players' ortholattice and its plane realization
//! - [`game`]: the ball game, its payoff matrix and pure analysis
//! - [`classical`]: the classical mixed-strategy baseline
//! - [`strategy`]: angles, frames, outcome weights and `F(α, β)`
//! - [`equilibrium`]: best responses, reaction curves, Nash search
//! - [`simulation`]: Monte Carlo play and the ball automaton
//! - [`scenario`], [`report`], [`svg`]: the command-line front end

pub mod classical;
pub mod equilibrium;
pub mod error;
pub mod game;
pub mod lattice;
pub mod report;
pub mod scenario;
pub mod simulation;
pub mod strategy;
pub mod svg;

pub use error::{Error, LatticeError, Result};
