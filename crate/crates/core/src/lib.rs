//! Degree deviation and spectral radius of graphs.
//!
//! Computes the degree deviation `s(G) = Σ |deg(u) − d|`, the spectral
//! radius `λ(G)` and the spectral radius `λ̃(G)` of the smoothed
//! three-weight complete graph; evaluates the upper bounds on `s` and lower
//! bounds on `λ` that follow from them; solves the associated small
//! optimization problems; and checks every inequality exhaustively on small
//! graphs.

pub mod bounds;
pub mod eigen;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod optimization;
pub mod rational;
pub mod report;
pub mod smoothing;
pub mod verify;

pub use graph::{degree_stats, DegreeStats, Graph, GraphError};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use rational::Rational;
