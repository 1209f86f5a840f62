//! LOS channel DC gain of a Lambertian LED, the single-bounce micro-surface
//! gain, and the IM/DD electrical SNR.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{link_angles, Pose};

/// Lambertian order `m = −ln 2 / ln(cos φ½)` for a half-irradiance angle in radians.
pub fn lambertian_order(half_angle: f64) -> Result<f64> {
    if !(half_angle > 0.0 && half_angle < PI / 2.0) {
        return Err(Error::invalid(
            "half_angle",
            format!("{half_angle} rad is outside (0, π/2)"),
        ));
    }
    Ok(-(2f64.ln()) / half_angle.cos().ln())
}

/// LED transmitter optics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmitterParams {
    pub power_t: f64,
    pub half_angle: f64,
    pub lambert_order: f64,
}

impl EmitterParams {
    pub fn new(power_t: f64, half_angle: f64) -> Result<Self> {
        if !(power_t > 0.0 && power_t.is_finite()) {
            return Err(Error::invalid("power_t", "must be positive"));
        }
        Ok(Self {
            power_t,
            half_angle,
            lambert_order: lambertian_order(half_angle)?,
        })
    }
}

/// Photodiode front end: collection area, responsivity, FOV half-angle and
/// concentrator refractive index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReceiverParams {
    pub area: f64,
    pub responsivity: f64,
    pub fov: f64,
    pub refractive_index: f64,
    pub concentrator_gain: f64,
}

impl ReceiverParams {
    pub fn new(area: f64, responsivity: f64, fov: f64, refractive_index: f64) -> Result<Self> {
        if !(area > 0.0 && area.is_finite()) {
            return Err(Error::invalid("area", "must be positive"));
        }
        if !(responsivity > 0.0 && responsivity.is_finite()) {
            return Err(Error::invalid("responsivity", "must be positive"));
        }
        if !(fov > 0.0 && fov <= PI) {
            return Err(Error::invalid("fov", format!("{fov} rad is outside (0, π]")));
        }
        if !(refractive_index > 0.0 && refractive_index.is_finite()) {
            return Err(Error::invalid("refractive_index", "must be positive"));
        }
        let s = fov.sin();
        if s.abs() < 1e-12 {
            return Err(Error::invalid("fov", "concentrator gain is unbounded at sin(fov) = 0"));
        }
        Ok(Self {
            area,
            responsivity,
            fov,
            refractive_index,
            concentrator_gain: refractive_index * refractive_index / (s * s),
        })
    }

    /// Common prefactor `A_r (m+1) R D` shared by the LOS and reflected gains.
    fn prefactor(&self, lambert_order: f64) -> f64 {
        self.area * (lambert_order + 1.0) * self.responsivity * self.concentrator_gain
    }
}

/// Reflectivity and area of one reflecting micro-surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceElementParams {
    pub reflectivity: f64,
    pub area: f64,
}

impl SurfaceElementParams {
    pub fn new(reflectivity: f64, area: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&reflectivity) {
            return Err(Error::invalid("reflectivity", "must lie in [0, 1]"));
        }
        if !(area > 0.0 && area.is_finite()) {
            return Err(Error::invalid("area", "must be positive"));
        }
        Ok(Self { reflectivity, area })
    }
}

/// Line-of-sight DC gain between an LED and a photodiode.
///
/// Zero outside the receiver FOV and whenever either end sees the other from
/// behind.
pub fn los_gain(tx: &Pose, em: &EmitterParams, rx: &Pose, rc: &ReceiverParams) -> Result<f64> {
    let link = link_angles(tx, rx)?;
    if link.cos_phi < 0.0 || link.cos_psi < 0.0 || link.psi > rc.fov {
        return Ok(0.0);
    }
    let m = em.lambert_order;
    Ok(rc.prefactor(m) / (2.0 * PI * link.d * link.d) * link.cos_phi.powf(m) * link.cos_psi)
}

/// DC gain of the path LED → reflecting element → photodiode through one
/// micro-surface of area `se.area`.
///
/// `elem.normal` is the element's current orientation; it defines both the
/// incidence angle α and the departure angle β.
pub fn reflected_element_gain(
    tx: &Pose,
    em: &EmitterParams,
    elem: &Pose,
    se: &SurfaceElementParams,
    rx: &Pose,
    rc: &ReceiverParams,
) -> Result<f64> {
    let first = link_angles(tx, elem)?;
    let second = link_angles(elem, rx)?;
    let (cos_phi, cos_alpha) = (first.cos_phi, first.cos_psi);
    let (cos_beta, cos_psi) = (second.cos_phi, second.cos_psi);
    if cos_phi < 0.0 || cos_alpha < 0.0 || cos_beta < 0.0 || cos_psi < 0.0 || second.psi > rc.fov {
        return Ok(0.0);
    }
    let m = em.lambert_order;
    let d1 = first.d * first.d;
    let d2 = second.d * second.d;
    Ok(rc.prefactor(m) / (2.0 * PI * PI * d1 * d2)
        * se.reflectivity
        * se.area
        * cos_phi.powf(m)
        * cos_alpha
        * cos_beta
        * cos_psi)
}

/// Electrical SNR `h² P² / σ²` of an intensity-modulated optical link.
pub fn optical_snr(h: f64, p_t: f64, sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) {
        return Err(Error::invalid("sigma", "noise level must be positive"));
    }
    let hp = h * p_t;
    Ok(hp * hp / (sigma * sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec3;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn lambertian_orders() {
        assert!(rel(lambertian_order(60f64.to_radians()).unwrap(), 1.0) < 1e-12);
        assert!((lambertian_order(70f64.to_radians()).unwrap() - 0.6461).abs() < 1e-4);
        assert!((lambertian_order(30f64.to_radians()).unwrap() - 4.8188).abs() < 1e-4);
        assert!(lambertian_order(0.0).is_err());
        assert!(lambertian_order(PI / 2.0).is_err());
    }

    #[test]
    fn receiver_concentrator_gain() {
        let rc = ReceiverParams::new(1e-4, 1.0, 120f64.to_radians(), 1.5).unwrap();
        assert!(rel(rc.concentrator_gain, 3.0) < 1e-12);
        assert!(ReceiverParams::new(1e-4, 1.0, PI, 1.5).is_err());
    }

    #[test]
    fn boresight_los_gain() {
        let em = EmitterParams::new(1.0, 60f64.to_radians()).unwrap();
        let rc = ReceiverParams::new(1e-4, 1.0, 120f64.to_radians(), 1.5).unwrap();
        let tx = Pose::facing_down(Vec3::ZERO);
        let rx = Pose::facing_up(Vec3::new(0.0, 0.0, -1.0));
        let h = los_gain(&tx, &em, &rx, &rc).unwrap();
        assert!(rel(h, 3e-4 / PI) < 1e-12);
        assert!((h - 9.549e-5).abs() < 1e-8);
    }

    /// Receiver at (1,0,0) lit along +x by a transmitter at the origin, tilted
    /// so the ray arrives `psi` away from its normal.
    fn tilted_receiver(psi: f64) -> (Pose, Pose) {
        let tx = Pose::new(Vec3::ZERO, Vec3::new(1.0, 0.0, 0.0)).unwrap();
        let rx = Pose::new(Vec3::new(1.0, 0.0, 0.0), Vec3::new(-psi.cos(), 0.0, psi.sin())).unwrap();
        (tx, rx)
    }

    #[test]
    fn los_gain_outside_fov_is_zero() {
        let em = EmitterParams::new(1.0, 60f64.to_radians()).unwrap();
        let rc = ReceiverParams::new(1e-4, 1.0, 90f64.to_radians(), 1.5).unwrap();
        let (tx, rx) = tilted_receiver(100f64.to_radians());
        assert!((link_angles(&tx, &rx).unwrap().psi - 100f64.to_radians()).abs() < 1e-12);
        assert_eq!(los_gain(&tx, &em, &rx, &rc).unwrap(), 0.0);

        // Front-side but beyond a narrow FOV.
        let rc = ReceiverParams::new(1e-4, 1.0, 60f64.to_radians(), 1.5).unwrap();
        let (tx, rx) = tilted_receiver(70f64.to_radians());
        assert_eq!(los_gain(&tx, &em, &rx, &rc).unwrap(), 0.0);
        let (tx, rx) = tilted_receiver(50f64.to_radians());
        assert!(los_gain(&tx, &em, &rx, &rc).unwrap() > 0.0);
    }

    #[test]
    fn reflected_gain_unit_geometry() {
        let em = EmitterParams::new(1.0, 60f64.to_radians()).unwrap();
        let rc = ReceiverParams::new(1.0, 1.0, 120f64.to_radians(), 1.5).unwrap();
        let se = SurfaceElementParams::new(1.0, 1.0).unwrap();
        // Transmitter and receiver share a spot 1 m above an upward-facing
        // element, both looking down: every angle is zero.
        let elem = Pose::facing_up(Vec3::ZERO);
        let node = Pose::facing_down(Vec3::new(0.0, 0.0, 1.0));
        let dh = reflected_element_gain(&node, &em, &elem, &se, &node, &rc).unwrap();
        assert!(rel(dh, rc.concentrator_gain / (PI * PI)) < 1e-12);
    }

    #[test]
    fn reflected_gain_outside_fov_is_zero() {
        let em = EmitterParams::new(1.0, 60f64.to_radians()).unwrap();
        let rc = ReceiverParams::new(1e-4, 1.0, 30f64.to_radians(), 1.5).unwrap();
        let se = SurfaceElementParams::new(0.8, 1e-4).unwrap();
        let tx = Pose::facing_down(Vec3::new(0.0, 0.0, 1.0));
        let elem = Pose::facing_up(Vec3::ZERO);
        let rx = Pose::facing_down(Vec3::new(1.0, 0.0, 1.0));
        assert_eq!(reflected_element_gain(&tx, &em, &elem, &se, &rx, &rc).unwrap(), 0.0);
    }

    #[test]
    fn reflected_gain_backside_is_zero() {
        let em = EmitterParams::new(1.0, 60f64.to_radians()).unwrap();
        let rc = ReceiverParams::new(1e-4, 1.0, 120f64.to_radians(), 1.5).unwrap();
        let se = SurfaceElementParams::new(0.8, 1e-4).unwrap();
        let tx = Pose::facing_down(Vec3::new(0.0, 0.0, 1.0));
        // Element faces +z but tilted so the receiver at -x sits behind it.
        let elem = Pose::new(Vec3::ZERO, Vec3::new(1.0, 0.0, 0.2)).unwrap();
        let rx = Pose::facing_up(Vec3::new(-2.0, 0.0, -0.1));
        assert_eq!(reflected_element_gain(&tx, &em, &elem, &se, &rx, &rc).unwrap(), 0.0);
    }

    #[test]
    fn snr() {
        assert_eq!(optical_snr(0.0, 1.0, 1e-10).unwrap(), 0.0);
        assert!(rel(optical_snr(1e-5, 1.0, 1e-10).unwrap(), 1e10) < 1e-12);
        let a = optical_snr(1e-5, 1.0, 1e-10).unwrap();
        let b = optical_snr(1e-5, 2.0, 1e-10).unwrap();
        assert!(rel(b, 4.0 * a) < 1e-12);
        assert!(optical_snr(1.0, 1.0, 0.0).is_err());
    }
}
