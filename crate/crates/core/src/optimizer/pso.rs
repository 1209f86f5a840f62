//! Global-best particle swarm minimization over periodic angle vectors in `[0, 2π)^K`.
//!
//! Positions wrap modulo 2π and attraction terms use the shortest signed
//! angular difference, so the swarm never sees an artificial boundary at 0
//! or 2π. Each particle draws from its own ChaCha stream derived from the
//! seed, and objective evaluations within an iteration run in parallel, so
//! results do not depend on thread count.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of trailing iterations the stopping rule looks back over.
pub const STALL_WINDOW: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PsoParams {
    pub swarm_size: usize,
    /// Total iterations, counting the initial evaluation of the swarm.
    pub max_iters: usize,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
    /// Relative improvement of the global best over [`STALL_WINDOW`]
    /// iterations below which the search stops.
    pub tol: f64,
    pub seed: u64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            swarm_size: 50,
            max_iters: 200,
            inertia: 0.729,
            cognitive: 1.49445,
            social: 1.49445,
            tol: 1e-9,
            seed: 0,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        let mut bad = Vec::new();
        if self.swarm_size < 2 {
            bad.push("optimizer.swarm_size: must be at least 2".to_string());
        }
        if self.max_iters < 1 {
            bad.push("optimizer.max_iters: must be at least 1".to_string());
        }
        if !(self.inertia > 0.0 && self.inertia < 1.0) {
            bad.push("optimizer.inertia: must lie in (0, 1)".to_string());
        }
        if !(self.cognitive > 0.0 && self.cognitive.is_finite()) {
            bad.push("optimizer.cognitive: must be positive".to_string());
        }
        if !(self.social > 0.0 && self.social.is_finite()) {
            bad.push("optimizer.social: must be positive".to_string());
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            bad.push("optimizer.tol: must be positive".to_string());
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(bad))
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsoResult {
    pub best_yaw: Vec<f64>,
    pub best_value: f64,
    /// Global best after each iteration; non-increasing.
    pub trace: Vec<f64>,
    pub evaluations: usize,
    /// Whether the stall rule fired before `max_iters` ran out.
    pub converged: bool,
}

impl PsoResult {
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }
}

/// Signed difference `to − from` wrapped into `(−π, π]`.
pub fn angle_diff(to: f64, from: f64) -> f64 {
    let d = (to - from).rem_euclid(TAU);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

pub fn wrap_angle(x: f64) -> f64 {
    let w = x.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs.
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Deterministic child seed for sub-problem `index` (SplitMix64 finalizer).
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Particle {
    x: Vec<f64>,
    v: Vec<f64>,
    best_x: Vec<f64>,
    best_f: f64,
    rng: ChaCha8Rng,
}

fn particle_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Minimizes `objective` over `[0, 2π)^k`.
///
/// NaN objective values never become a personal or global best.
pub fn pso_minimize<F>(objective: F, k: usize, params: &PsoParams) -> Result<PsoResult>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    if k == 0 {
        return Err(Error::invalid("k", "dimension must be at least 1"));
    }
    params.validate()?;

    let mut swarm: Vec<Particle> = (0..params.swarm_size)
        .map(|i| {
            let mut rng = particle_rng(params.seed, i);
            let x: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..TAU)).collect();
            let v: Vec<f64> = (0..k).map(|_| rng.gen_range(-PI..PI) * 0.25).collect();
            Particle {
                best_x: x.clone(),
                x,
                v,
                best_f: f64::INFINITY,
                rng,
            }
        })
        .collect();

    let evaluate = |swarm: &[Particle]| -> Vec<f64> { swarm.par_iter().map(|p| objective(&p.x)).collect() };

    let values = evaluate(&swarm);
    let mut gbest_x = swarm[0].x.clone();
    let mut gbest_f = f64::INFINITY;
    for (p, f) in swarm.iter_mut().zip(values) {
        p.best_f = if f.is_nan() { f64::INFINITY } else { f };
        if p.best_f < gbest_f {
            gbest_f = p.best_f;
            gbest_x.clone_from(&p.x);
        }
    }
    let mut trace = vec![gbest_f];
    let mut converged = false;

    while trace.len() < params.max_iters {
        for p in swarm.iter_mut() {
            for (d, &g) in gbest_x.iter().enumerate() {
                let r1: f64 = p.rng.gen();
                let r2: f64 = p.rng.gen();
                let v = params.inertia * p.v[d]
                    + params.cognitive * r1 * angle_diff(p.best_x[d], p.x[d])
                    + params.social * r2 * angle_diff(g, p.x[d]);
                p.v[d] = v.clamp(-PI, PI);
                p.x[d] = wrap_angle(p.x[d] + p.v[d]);
            }
        }
        let values = evaluate(&swarm);
        for (p, f) in swarm.iter_mut().zip(values) {
            if f < p.best_f {
                p.best_f = f;
                p.best_x.clone_from(&p.x);
            }
        }
        for p in &swarm {
            if p.best_f < gbest_f {
                gbest_f = p.best_f;
                gbest_x.clone_from(&p.best_x);
            }
        }
        trace.push(gbest_f);

        if trace.len() > STALL_WINDOW {
            let earlier = trace[trace.len() - 1 - STALL_WINDOW];
            if stalled(earlier, gbest_f, params.tol) {
                converged = true;
                break;
            }
        }
    }

    Ok(PsoResult {
        best_yaw: gbest_x,
        best_value: gbest_f,
        evaluations: params.swarm_size * trace.len(),
        trace,
        converged,
    })
}

fn stalled(earlier: f64, now: f64, tol: f64) -> bool {
    if earlier == now {
        return true;
    }
    if !earlier.is_finite() {
        return false;
    }
    earlier - now < tol * earlier.abs().max(now.abs())
}

/// Uniform random search with the same evaluation budget bookkeeping as
/// [`pso_minimize`]; the baseline the swarm is checked against.
pub fn random_search_minimize<F>(objective: F, k: usize, evaluations: usize, seed: u64) -> Result<PsoResult>
where
    F: Fn(&[f64]) -> f64,
{
    if k == 0 || evaluations == 0 {
        return Err(Error::invalid("random search", "needs k ≥ 1 and a non-zero budget"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best_x = Vec::new();
    let mut best_f = f64::INFINITY;
    let mut trace = Vec::with_capacity(evaluations);
    for _ in 0..evaluations {
        let x: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..TAU)).collect();
        let f = objective(&x);
        if f < best_f || best_x.is_empty() {
            best_f = if f.is_nan() { f64::INFINITY } else { f };
            best_x = x;
        }
        trace.push(best_f);
    }
    Ok(PsoResult {
        best_yaw: best_x,
        best_value: best_f,
        trace,
        evaluations,
        converged: false,
    })
}
