//! The two RIS yaw problems: steer jamming at a known Eve, or minimize the
//! summed Eve rate over a grid of candidate locations.

use crate::error::{Error, Result};
use crate::geometry::Pose;
use crate::harness::evaluate::{eve_gain, eve_jamming_gain, eve_sinr_with};
use crate::harness::Scenario;
use crate::ris::element_jamming_gain;
use crate::secrecy::pairwise_sum;

use super::pso::{derive_seed, pso_minimize, PsoResult};

/// Maximizes the squared jamming gain toward a known Eve, i.e. minimizes `−g_E(δ)²`.
///
/// `g_E` is a sum of non-negative per-element terms that each depend on one
/// yaw only, so the maximizer is found element by element: one 1-D swarm per
/// element, seeded from `scenario.optimizer.seed` and the element index.
/// The returned trace is `−g²` of the elementwise bests after each iteration
/// (padded with each run's final value), and `evaluations` counts the 1-D
/// evaluations of all runs.
pub fn optimize_known_eve(scenario: &Scenario, eve: &Pose) -> Result<PsoResult> {
    eve_jamming_gain(scenario, &scenario.ris.yaw, eve)?;
    let runs = (0..scenario.ris_size())
        .map(|i| {
            let params = scenario
                .optimizer
                .with_seed(derive_seed(scenario.optimizer.seed, i as u64));
            let term = |y: &[f64]| match element_jamming_gain(
                &scenario.ris,
                i,
                y[0],
                &scenario.jammer,
                &scenario.jammer_emitter,
                eve,
                &scenario.eve_receiver,
            ) {
                Ok(t) => -t,
                Err(_) => f64::NAN,
            };
            pso_minimize(term, 1, &params)
        })
        .collect::<Result<Vec<_>>>()?;

    let len = runs.iter().map(PsoResult::iterations).max().unwrap_or(1);
    let trace: Vec<f64> = (0..len)
        .map(|it| {
            let g: f64 = runs.iter().map(|r| -r.trace[it.min(r.trace.len() - 1)]).sum();
            -(g * g)
        })
        .collect();
    Ok(PsoResult {
        best_yaw: runs.iter().map(|r| r.best_yaw[0]).collect(),
        best_value: *trace.last().expect("at least one iteration"),
        evaluations: runs.iter().map(|r| r.evaluations).sum(),
        converged: runs.iter().all(|r| r.converged),
        trace,
    })
}

/// `δ ↦ −g_E(δ)²` for an Eve at `eve`, over the whole yaw vector; geometry is checked up front.
pub fn known_eve_objective<'a>(scenario: &'a Scenario, eve: &'a Pose) -> Result<impl Fn(&[f64]) -> f64 + Sync + 'a> {
    eve_jamming_gain(scenario, &scenario.ris.yaw, eve)?;
    Ok(move |yaw: &[f64]| match eve_jamming_gain(scenario, yaw, eve) {
        Ok(g) => -(g * g),
        Err(_) => f64::NAN,
    })
}

/// Minimizes `Σ_a log2(1 + γ_E(a; δ))` over the candidate grid.
pub fn optimize_unknown_eve(scenario: &Scenario, area_grid: &[Pose]) -> Result<PsoResult> {
    let objective = unknown_eve_objective(scenario, area_grid)?;
    pso_minimize(objective, scenario.ris_size(), &scenario.optimizer)
}

pub fn unknown_eve_objective<'a>(
    scenario: &'a Scenario,
    area_grid: &'a [Pose],
) -> Result<impl Fn(&[f64]) -> f64 + Sync + 'a> {
    if area_grid.is_empty() {
        return Err(Error::Empty("Eve grid"));
    }
    let h_e = area_grid
        .iter()
        .map(|eve| eve_gain(scenario, eve))
        .collect::<Result<Vec<_>>>()?;
    for eve in area_grid {
        eve_jamming_gain(scenario, &scenario.ris.yaw, eve)?;
    }
    Ok(move |yaw: &[f64]| {
        let rates: Result<Vec<f64>> = area_grid
            .iter()
            .zip(&h_e)
            .map(|(eve, &h)| {
                let g = eve_jamming_gain(scenario, yaw, eve)?;
                Ok((1.0 + eve_sinr_with(scenario, h, g)?).log2())
            })
            .collect();
        rates.map_or(f64::NAN, |r| pairwise_sum(&r))
    })
}
