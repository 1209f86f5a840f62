//! Yaw-vector optimization: a periodic-variable PSO and the known/unknown Eve problems.

pub mod problems;
pub mod pso;

pub use problems::{known_eve_objective, optimize_known_eve, optimize_unknown_eve, unknown_eve_objective};
pub use pso::{pso_minimize, random_search_minimize, PsoParams, PsoResult};
