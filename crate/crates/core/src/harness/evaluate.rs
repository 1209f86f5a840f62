use rayon::prelude::*;

use crate::channel::los_gain;
use crate::error::Result;
use crate::geometry::Pose;
use crate::ris::jamming_channel_for_yaw;
use crate::secrecy::{sinr, LinkBudget, SecrecyReport};
use crate::wbplsec::cancelled_snr_bob;

use super::scenario::Scenario;

/// Alice→Bob LOS gain `h_B`.
pub fn bob_gain(s: &Scenario) -> Result<f64> {
    los_gain(&s.alice, &s.alice_emitter, &s.bob, &s.bob_receiver)
}

/// Bob's SNR with his own jamming cancelled. Independent of the RIS yaw.
pub fn bob_snr_cancelled(s: &Scenario) -> Result<f64> {
    cancelled_snr_bob(bob_gain(s)?, s.p_t(), s.sigma_b)
}

/// Bob's SINR if the jamming reflected back at him were *not* cancelled.
pub fn bob_sinr(s: &Scenario, yaw: &[f64]) -> Result<f64> {
    let g = jamming_channel_for_yaw(&s.ris, yaw, &s.jammer, &s.jammer_emitter, &s.bob, &s.bob_receiver)?;
    sinr(&LinkBudget {
        h_direct: bob_gain(s)?,
        g_jam: g,
        p_t: s.p_t(),
        p_j: s.p_j(),
        sigma: s.sigma_b,
    })
}

/// Alice→Eve LOS gain `h_E` for an Eve at `eve`.
pub fn eve_gain(s: &Scenario, eve: &Pose) -> Result<f64> {
    los_gain(&s.alice, &s.alice_emitter, eve, &s.eve_receiver)
}

/// RIS jamming gain toward `eve` for yaw vector `yaw`.
pub fn eve_jamming_gain(s: &Scenario, yaw: &[f64], eve: &Pose) -> Result<f64> {
    jamming_channel_for_yaw(&s.ris, yaw, &s.jammer, &s.jammer_emitter, eve, &s.eve_receiver)
}

/// Eve's SINR with direct gain `h_e` already known.
pub(crate) fn eve_sinr_with(s: &Scenario, h_e: f64, g_e: f64) -> Result<f64> {
    sinr(&LinkBudget {
        h_direct: h_e,
        g_jam: g_e,
        p_t: s.p_t(),
        p_j: s.p_j(),
        sigma: s.sigma_e,
    })
}

pub fn eve_sinr(s: &Scenario, yaw: &[f64], eve: &Pose) -> Result<f64> {
    eve_sinr_with(s, eve_gain(s, eve)?, eve_jamming_gain(s, yaw, eve)?)
}

/// Punctual and area secrecy capacity of one fixed RIS configuration over `grid`.
pub fn evaluate_scenario(s: &Scenario, yaw: &[f64], grid: &[Pose]) -> Result<SecrecyReport> {
    let gamma_m_hat = bob_snr_cancelled(s)?;
    let gamma_e = grid
        .par_iter()
        .map(|eve| eve_sinr(s, yaw, eve))
        .collect::<Result<Vec<_>>>()?;
    SecrecyReport::from_gammas(grid.iter().map(|p| p.position).collect(), gamma_e, gamma_m_hat)
}

/// The same grid evaluated with no RIS jamming at all.
pub fn evaluate_baseline(s: &Scenario, grid: &[Pose]) -> Result<SecrecyReport> {
    let off = s.without_jamming();
    evaluate_scenario(&off, &off.ris.yaw, grid)
}
