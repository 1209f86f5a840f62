//! SINRs, punctual and area secrecy capacity, and the threshold-fraction
//! "outage" metric over a grid of eavesdropper locations.
//!
//! Capacities are in bits per channel use (`½·log2`). The area value clamps
//! each point at zero *before* averaging.
//!
//! [`outage_probability`] returns the fraction of grid points whose secrecy
//! capacity reaches at least `t_h` times the grid maximum. Despite the name,
//! larger is better.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Vec3;

/// Direct-path and jamming-path gains seen by one receiver, with the powers
/// and noise level that apply to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    pub h_direct: f64,
    pub g_jam: f64,
    pub p_t: f64,
    pub p_j: f64,
    pub sigma: f64,
}

/// `h² P_t² / (σ² + g² P_j²)`.
pub fn sinr(lb: &LinkBudget) -> Result<f64> {
    if !(lb.sigma > 0.0) {
        return Err(Error::invalid("sigma", "noise level must be positive"));
    }
    let signal = lb.h_direct * lb.p_t;
    let jam = lb.g_jam * lb.p_j;
    Ok(signal * signal / (lb.sigma * lb.sigma + jam * jam))
}

/// Gaussian wiretap secrecy capacity; zero unless `gamma_m > gamma_e`.
pub fn secrecy_capacity(gamma_m: f64, gamma_e: f64) -> f64 {
    if gamma_m > gamma_e {
        0.5 * ((1.0 + gamma_m) / (1.0 + gamma_e)).log2()
    } else {
        0.0
    }
}

/// Secrecy capacity with Bob's jamming cancelled. The gate is evaluated on
/// the cancelled SNR, the same quantity that enters the logarithm.
pub fn secrecy_capacity_cancelled(gamma_m_hat: f64, gamma_e: f64) -> f64 {
    secrecy_capacity(gamma_m_hat, gamma_e)
}

/// Mean of the clamped per-point secrecy capacities over a discrete Eve grid.
pub fn area_secrecy_capacity(gamma_m_hat: f64, eve_gammas: &[f64]) -> Result<f64> {
    if eve_gammas.is_empty() {
        return Err(Error::Empty("Eve grid"));
    }
    let per_point: Vec<f64> = eve_gammas
        .iter()
        .map(|&g| secrecy_capacity_cancelled(gamma_m_hat, g))
        .collect();
    Ok(mean(&per_point))
}

/// Fraction of grid points with `C_s(n) ≥ t_h · max_n C_s(n)`.
pub fn outage_probability(c_s_values: &[f64], t_h: f64) -> Result<f64> {
    if c_s_values.is_empty() {
        return Err(Error::Empty("secrecy capacity list"));
    }
    if !(0.0..=1.0).contains(&t_h) {
        return Err(Error::invalid("t_h", format!("{t_h} is outside [0, 1]")));
    }
    let c_max = c_s_values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let hits = c_s_values.iter().filter(|&&c| c - t_h * c_max >= 0.0).count();
    Ok(hits as f64 / c_s_values.len() as f64)
}

/// Pairwise (cascade) summation; the reduction order depends only on length.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const LEAF: usize = 8;
    if xs.len() <= LEAF {
        xs.iter().sum()
    } else {
        let (a, b) = xs.split_at(xs.len() / 2);
        pairwise_sum(a) + pairwise_sum(b)
    }
}

pub(crate) fn mean(xs: &[f64]) -> f64 {
    pairwise_sum(xs) / xs.len() as f64
}

/// Secrecy evaluation of one RIS configuration over an Eve grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecrecyReport {
    pub eve_points: Vec<Vec3>,
    /// Eve's SINR at each point.
    pub gamma_e: Vec<f64>,
    /// Punctual secrecy capacity at each point, bits/use.
    pub c_s_values: Vec<f64>,
    pub area_c_s: f64,
    pub gamma_m_hat: f64,
}

impl SecrecyReport {
    pub fn from_gammas(eve_points: Vec<Vec3>, gamma_e: Vec<f64>, gamma_m_hat: f64) -> Result<Self> {
        if eve_points.len() != gamma_e.len() {
            return Err(Error::LengthMismatch {
                what: "Eve SINR list",
                expected: eve_points.len(),
                actual: gamma_e.len(),
            });
        }
        let c_s_values = gamma_e
            .iter()
            .map(|&g| secrecy_capacity_cancelled(gamma_m_hat, g))
            .collect::<Vec<_>>();
        let area_c_s = area_secrecy_capacity(gamma_m_hat, &gamma_e)?;
        Ok(Self {
            eve_points,
            gamma_e,
            c_s_values,
            area_c_s,
            gamma_m_hat,
        })
    }

    pub fn mean_c_s(&self) -> f64 {
        mean(&self.c_s_values)
    }

    pub fn outage(&self, t_h: f64) -> Result<f64> {
        outage_probability(&self.c_s_values, t_h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lb(h: f64, g: f64, pj: f64) -> LinkBudget {
        LinkBudget {
            h_direct: h,
            g_jam: g,
            p_t: 1.0,
            p_j: pj,
            sigma: 1e-10,
        }
    }

    #[test]
    fn sinr_examples() {
        let no_jam = sinr(&lb(1e-5, 0.0, 0.5)).unwrap();
        assert_eq!(no_jam, crate::channel::optical_snr(1e-5, 1.0, 1e-10).unwrap());
        // g·P_j = σ halves the SINR.
        let half = sinr(&lb(1e-5, 2e-10, 0.5)).unwrap();
        assert!((half - no_jam / 2.0).abs() <= 1e-12 * half);
        let v = sinr(&lb(1e-5, 1e-5, 0.5)).unwrap();
        assert!((v - 1e-10 / (1e-20 + 2.5e-11)).abs() < 1e-12);
        assert!((10.0 * v.log10() - 6.02).abs() < 0.01);
        assert!(sinr(&LinkBudget {
            sigma: 0.0,
            ..lb(1.0, 0.0, 0.0)
        })
        .is_err());
    }

    #[test]
    fn secrecy_branches() {
        assert_eq!(secrecy_capacity(5.0, 5.0), 0.0);
        assert_eq!(secrecy_capacity(3.0, 1.0), 0.5);
        assert_eq!(secrecy_capacity(1.0, 3.0), 0.0);
        assert_eq!(secrecy_capacity_cancelled(3.0, 1.0), secrecy_capacity(3.0, 1.0));
        let db15 = 10f64.powf(1.5);
        assert_eq!(secrecy_capacity_cancelled(db15, db15), 0.0);
    }

    #[test]
    fn area_examples() {
        assert_eq!(
            area_secrecy_capacity(3.0, &[1.0]).unwrap(),
            secrecy_capacity_cancelled(3.0, 1.0)
        );
        assert_eq!(area_secrecy_capacity(3.0, &[3.0, 3.0, 3.0]).unwrap(), 0.0);
        assert_eq!(area_secrecy_capacity(3.0, &[1.0, 7.0]).unwrap(), 0.25);
        assert!(area_secrecy_capacity(3.0, &[]).is_err());
    }

    #[test]
    fn outage_examples() {
        let v = [1.0, 0.5, 0.25, 0.0];
        assert_eq!(outage_probability(&v, 0.0).unwrap(), 1.0);
        assert_eq!(outage_probability(&v, 1.0).unwrap(), 0.25);
        assert_eq!(outage_probability(&v, 0.5).unwrap(), 0.5);
        assert_eq!(outage_probability(&[0.3, 0.3, 0.1], 1.0).unwrap(), 2.0 / 3.0);
        assert!(outage_probability(&[], 0.5).is_err());
        assert!(outage_probability(&v, 1.5).is_err());
    }

    #[test]
    fn pairwise_matches_naive_on_integers() {
        let xs: Vec<f64> = (0..1000).map(f64::from).collect();
        assert_eq!(pairwise_sum(&xs), 499_500.0);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }

    proptest! {
        #[test]
        fn outage_non_increasing(vals in prop::collection::vec(0.0f64..10.0, 1..60), a in 0.0f64..1.0, b in 0.0f64..1.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let p_lo = outage_probability(&vals, lo).unwrap();
            let p_hi = outage_probability(&vals, hi).unwrap();
            prop_assert!(p_hi <= p_lo);
            prop_assert_eq!(outage_probability(&vals, 0.0).unwrap(), 1.0);
            prop_assert!(outage_probability(&vals, 1.0).unwrap() >= 1.0 / vals.len() as f64);
        }

        #[test]
        fn secrecy_monotone(gm in 0.0f64..1e6, ge in 0.0f64..1e6, dm in 1e-3f64..1e3, de in 1e-3f64..1e3) {
            let c = secrecy_capacity(gm, ge);
            prop_assert!(c >= 0.0);
            if gm > ge {
                prop_assert!(secrecy_capacity(gm + dm, ge) > c);
                prop_assert!(secrecy_capacity(gm, ge + de) <= c);
            }
        }

        #[test]
        fn area_permutation_invariant_and_bounded(
            gm in 0.0f64..1e4,
            mut ge in prop::collection::vec(0.0f64..1e4, 1..40),
        ) {
            let a = area_secrecy_capacity(gm, &ge).unwrap();
            let best = ge.iter().map(|&g| secrecy_capacity_cancelled(gm, g)).fold(0.0, f64::max);
            prop_assert!(a <= best + 1e-12);
            ge.reverse();
            let b = area_secrecy_capacity(gm, &ge).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0));
        }

        #[test]
        fn sinr_decreasing_in_jamming(h in 1e-7f64..1e-4, g in 1e-9f64..1e-5, pj in 0.01f64..1.0) {
            let base = sinr(&lb(h, g, pj)).unwrap();
            prop_assert!(sinr(&lb(h, g * 1.5, pj)).unwrap() < base);
            prop_assert!(sinr(&lb(h, g, pj * 1.5)).unwrap() < base);
        }
    }
}
