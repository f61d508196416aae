//! The optimization problems behind the deviation and spectral bounds.

pub mod appendix;
pub mod pi;
pub mod q;

pub use appendix::AppendixQuantities;
pub use pi::{pi_tightness_candidates, solve_pi, solve_pi_subproblem, PiCandidate, PiError, PiInstance, PiResult, PiSolution};
pub use q::{f_of, minimize_q, q_critical_point, QError, QMinimum, QParams, QPoint, QRegion};
