//! Jamming-receiver primitives: the secret jamming mask, the jamming power
//! budget, Bob's SNR after removing his own jamming, and message rebuild.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channel::optical_snr;
use crate::error::{Error, Result};

/// Positions of the `M` bits Bob jams out of an `N`-bit message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JamMask {
    pub total_bits: usize,
    /// Sorted, distinct, each `< total_bits`.
    pub jammed_indices: Vec<usize>,
}

impl JamMask {
    pub fn new(total_bits: usize, mut jammed_indices: Vec<usize>) -> Result<Self> {
        jammed_indices.sort_unstable();
        if jammed_indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("jam mask", "indices must be distinct"));
        }
        if jammed_indices.last().is_some_and(|&i| i >= total_bits) {
            return Err(Error::invalid("jam mask", "index out of range"));
        }
        if jammed_indices.len() >= total_bits {
            return Err(Error::invalid("jam mask", "must jam fewer than all bits (M < N)"));
        }
        Ok(Self {
            total_bits,
            jammed_indices,
        })
    }

    pub fn jammed_count(&self) -> usize {
        self.jammed_indices.len()
    }

    /// `M / N`.
    pub fn fraction(&self) -> f64 {
        self.jammed_count() as f64 / self.total_bits as f64
    }
}

/// Draws `m` of `n` positions uniformly without replacement, reproducibly from `seed`.
pub fn select_jam_mask(n: usize, m: usize, seed: u64) -> Result<JamMask> {
    if m == 0 || m >= n {
        return Err(Error::invalid(
            "jam mask",
            format!("need 0 < M < N, got M = {m}, N = {n}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    JamMask::new(n, index::sample(&mut rng, n, m).into_vec())
}

/// Jamming power budget `P_j = P_t · M / N`.
pub fn jamming_power(p_t: f64, n: usize, m: usize) -> Result<f64> {
    if m == 0 || m >= n {
        return Err(Error::invalid(
            "jamming fraction",
            format!("need 0 < M < N, got M = {m}, N = {n}"),
        ));
    }
    jamming_power_from_fraction(p_t, m as f64 / n as f64)
}

/// `P_t · fraction` for a jam fraction already expressed as `M / N ∈ (0, 1)`.
pub fn jamming_power_from_fraction(p_t: f64, fraction: f64) -> Result<f64> {
    if !(p_t > 0.0 && p_t.is_finite()) {
        return Err(Error::invalid("power_t", "must be positive"));
    }
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::invalid("jam_fraction", format!("{fraction} is outside (0, 1)")));
    }
    Ok(p_t * fraction)
}

/// Bob's SNR once his own jamming has been cancelled; it does not depend on
/// the RIS configuration or the jamming power.
pub fn cancelled_snr_bob(h_b: f64, p_t: f64, sigma_b: f64) -> Result<f64> {
    optical_snr(h_b, p_t, sigma_b)
}

/// Channel gain at which `h² P² / σ²` equals `snr_db` decibels.
pub fn gain_for_snr_db(sigma: f64, p_t: f64, snr_db: f64) -> f64 {
    sigma * 10f64.powf(snr_db / 20.0) / p_t
}

/// Noise level at which a link of gain `h` reaches `snr_db` decibels.
pub fn sigma_for_snr_db(h: f64, p_t: f64, snr_db: f64) -> f64 {
    h * p_t / 10f64.powf(snr_db / 20.0)
}

/// The original bits at the mask positions, in mask order.
pub fn jammed_bits(message: &[bool], mask: &JamMask) -> Result<Vec<bool>> {
    check_len("message", mask.total_bits, message.len())?;
    Ok(mask.jammed_indices.iter().map(|&i| message[i]).collect())
}

/// Overwrites the masked positions of `message` with `jam`, as seen on the air.
pub fn apply_jamming(message: &[bool], mask: &JamMask, jam: &[bool]) -> Result<Vec<bool>> {
    check_len("message", mask.total_bits, message.len())?;
    check_len("jamming pattern", mask.jammed_count(), jam.len())?;
    let mut out = message.to_vec();
    for (&i, &b) in mask.jammed_indices.iter().zip(jam) {
        out[i] = b;
    }
    Ok(out)
}

/// Rebuilds the message by restoring the bits Bob knows he destroyed.
///
/// Only masked positions are touched; errors elsewhere pass through.
pub fn reconstruct_message(received_bits: &[bool], mask: &JamMask, original_jammed_bits: &[bool]) -> Result<Vec<bool>> {
    check_len("received message", mask.total_bits, received_bits.len())?;
    check_len("jammed bits", mask.jammed_count(), original_jammed_bits.len())?;
    let mut out = received_bits.to_vec();
    for (&i, &b) in mask.jammed_indices.iter().zip(original_jammed_bits) {
        out[i] = b;
    }
    Ok(out)
}

fn check_len(what: &'static str, expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { what, expected, actual })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn mask_requires_m_below_n() {
        assert!(select_jam_mask(8, 8, 1).is_err());
        assert!(select_jam_mask(8, 0, 1).is_err());
        assert!(JamMask::new(4, vec![1, 1]).is_err());
        assert!(JamMask::new(4, vec![4]).is_err());
    }

    #[test]
    fn mask_is_deterministic() {
        let a = select_jam_mask(8, 3, 42).unwrap();
        assert_eq!(a, select_jam_mask(8, 3, 42).unwrap());
        assert_eq!(a.jammed_count(), 3);
        assert!(a.jammed_indices.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn seeds_give_distinct_masks() {
        // C(64,16) ≈ 4.9e14 masks; 100 draws collide with probability < 1e-11.
        let masks: HashSet<Vec<usize>> = (0..100)
            .map(|s| select_jam_mask(64, 16, s).unwrap().jammed_indices)
            .collect();
        assert_eq!(masks.len(), 100);
    }

    #[test]
    fn table_power_budgets() {
        assert_eq!(jamming_power(1.0, 10, 1).unwrap(), 0.1);
        assert_eq!(jamming_power(1.0, 10, 5).unwrap(), 0.5);
        assert_eq!(jamming_power(2.0, 8, 2).unwrap(), 0.5);
        assert!(jamming_power(1.0, 10, 10).is_err());
        assert!(jamming_power(0.0, 10, 5).is_err());
    }

    #[test]
    fn cancelled_snr_matches_optical_snr() {
        let v = cancelled_snr_bob(7.5e-6, 1.0, 1e-10).unwrap();
        assert_eq!(v, optical_snr(7.5e-6, 1.0, 1e-10).unwrap());
        let h = gain_for_snr_db(1e-10, 1.0, 15.0);
        let db = 10.0 * cancelled_snr_bob(h, 1.0, 1e-10).unwrap().log10();
        assert!((db - 15.0).abs() < 1e-12);
        assert!(cancelled_snr_bob(1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn reconstruction_cases() {
        let msg = vec![true, false, true, true, false, false, true, false];
        let mask = select_jam_mask(8, 3, 7).unwrap();
        let known = jammed_bits(&msg, &mask).unwrap();
        // Clean channel.
        assert_eq!(reconstruct_message(&msg, &mask, &known).unwrap(), msg);
        // Every jammed bit corrupted.
        let flipped: Vec<bool> = known.iter().map(|b| !b).collect();
        let rx = apply_jamming(&msg, &mask, &flipped).unwrap();
        assert_eq!(reconstruct_message(&rx, &mask, &known).unwrap(), msg);
        // A bit outside the mask flipped in transit survives the rebuild.
        let outside = (0..8).find(|i| !mask.jammed_indices.contains(i)).unwrap();
        let mut rx2 = rx.clone();
        rx2[outside] = !rx2[outside];
        let out = reconstruct_message(&rx2, &mask, &known).unwrap();
        let diff: Vec<usize> = (0..8).filter(|&i| out[i] != msg[i]).collect();
        assert_eq!(diff, vec![outside]);
        assert!(reconstruct_message(&msg[..7], &mask, &known).is_err());
    }

    proptest! {
        #[test]
        fn rebuild_inverts_jamming(
            msg in prop::collection::vec(any::<bool>(), 2..200),
            seed in any::<u64>(),
            frac in 0.01f64..0.99,
            noise_seed in any::<u64>(),
        ) {
            let n = msg.len();
            let m = ((n as f64 * frac) as usize).clamp(1, n - 1);
            let mask = select_jam_mask(n, m, seed).unwrap();
            let noise = select_jam_mask(n, m, noise_seed).unwrap();
            let jam: Vec<bool> = noise.jammed_indices.iter().map(|i| i % 2 == 0).collect();
            let rx = apply_jamming(&msg, &mask, &jam).unwrap();
            let known = jammed_bits(&msg, &mask).unwrap();
            prop_assert_eq!(reconstruct_message(&rx, &mask, &known).unwrap(), msg);
        }

        #[test]
        fn power_is_homogeneous(p in 0.01f64..10.0, c in 0.1f64..10.0, f in 0.01f64..0.49) {
            let base = jamming_power_from_fraction(p, f).unwrap();
            let scaled = jamming_power_from_fraction(p * c, f).unwrap();
            prop_assert!((scaled - c * base).abs() <= 1e-12 * scaled);
            let doubled = jamming_power_from_fraction(p, 2.0 * f).unwrap();
            prop_assert!((doubled - 2.0 * base).abs() <= 1e-12 * doubled);
        }
    }
}
