//! RIS-steered jamming channel.
//!
//! Each element is a yaw-steerable micro-mirror. Its contribution toward a
//! target is the single-bounce Lambertian micro-surface gain, weighted by the
//! near-field jammer→element attenuation and by a specular steering lobe
//! `max(0, r·t̂)^q`, where `r` is the mirror reflection of the jammer ray and
//! `t̂` points from the element to the target. Large `q` approaches an ideal
//! mirror; `q → 0` approaches a plain diffuse reflector.

use std::f64::consts::TAU;

use crate::channel::{reflected_element_gain, EmitterParams, ReceiverParams, SurfaceElementParams};
use crate::error::{Error, Result};
use crate::geometry::{specular_reflection, Pose, Vec3};

pub const DEFAULT_STEERING_EXPONENT: f64 = 10.0;
pub const DEFAULT_NEAR_FIELD_REF: f64 = 0.1;

/// A reflecting surface of K yaw-steerable elements.
#[derive(Debug, Clone, PartialEq)]
pub struct RisArray {
    /// Element positions with their un-yawed (base) normals.
    pub elements: Vec<Pose>,
    pub element_params: SurfaceElementParams,
    /// Current yaw of each element, radians in `[0, 2π]`.
    pub yaw: Vec<f64>,
    pub steering_exponent: f64,
}

impl RisArray {
    pub fn new(
        elements: Vec<Pose>,
        element_params: SurfaceElementParams,
        yaw: Vec<f64>,
        steering_exponent: f64,
    ) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Empty("RIS element list"));
        }
        if yaw.len() != elements.len() {
            return Err(Error::LengthMismatch {
                what: "RIS yaw vector",
                expected: elements.len(),
                actual: yaw.len(),
            });
        }
        check_yaw(&yaw)?;
        if !(steering_exponent > 0.0 && steering_exponent.is_finite()) {
            return Err(Error::invalid("steering_exponent", "must be positive"));
        }
        for (i, a) in elements.iter().enumerate() {
            if elements[..i].iter().any(|b| b.position == a.position) {
                return Err(Error::invalid(
                    "ris.elements",
                    format!("element {i} duplicates an earlier position"),
                ));
            }
        }
        Ok(Self {
            elements,
            element_params,
            yaw,
            steering_exponent,
        })
    }

    /// `k` elements in a row along `axis`, centred on `center`, spaced `pitch`
    /// apart, all sharing `base_normal`. Yaw starts at zero.
    ///
    /// Arrays of the same parity nest: the `k`-element layout is a subset of
    /// the `k + 2`-element one.
    pub fn linear(
        center: Vec3,
        axis: Vec3,
        base_normal: Vec3,
        pitch: f64,
        k: usize,
        element_params: SurfaceElementParams,
        steering_exponent: f64,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::Empty("RIS element list"));
        }
        if !(pitch > 0.0 && pitch.is_finite()) {
            return Err(Error::invalid("ris.pitch", "must be positive"));
        }
        let axis = axis
            .normalized()
            .ok_or_else(|| Error::invalid("ris.axis", "must be non-zero"))?;
        let half = (k as f64 - 1.0) / 2.0;
        let elements = (0..k)
            .map(|i| Pose::new(center + axis * ((i as f64 - half) * pitch), base_normal))
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements, element_params, vec![0.0; k], steering_exponent)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn set_yaw(&mut self, yaw: &[f64]) -> Result<()> {
        if yaw.len() != self.len() {
            return Err(Error::LengthMismatch {
                what: "RIS yaw vector",
                expected: self.len(),
                actual: yaw.len(),
            });
        }
        check_yaw(yaw)?;
        self.yaw.copy_from_slice(yaw);
        Ok(())
    }
}

fn check_yaw(yaw: &[f64]) -> Result<()> {
    match yaw.iter().position(|y| !(0.0..=TAU).contains(y)) {
        Some(i) => Err(Error::invalid(
            format!("yaw[{i}]"),
            format!("{} rad is outside [0, 2π]", yaw[i]),
        )),
        None => Ok(()),
    }
}

/// The jammer co-located with the receiver, lighting the RIS from close range.
#[derive(Debug, Clone, PartialEq)]
pub struct JammerNode {
    pub pose: Pose,
    pub power_j: f64,
    /// Near-field attenuation toward each RIS element, in `(0, 1]`.
    pub near_field_gain: Vec<f64>,
}

impl JammerNode {
    /// Computes the per-element near-field gains for `ris` with reference distance `d_ref`.
    pub fn new(pose: Pose, power_j: f64, ris: &RisArray, d_ref: f64) -> Result<Self> {
        if !(power_j >= 0.0 && power_j.is_finite()) {
            return Err(Error::invalid("power_j", "must be non-negative"));
        }
        let near_field_gain = ris
            .elements
            .iter()
            .map(|e| jammer_to_ris_gain(&pose, e, d_ref))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            pose,
            power_j,
            near_field_gain,
        })
    }
}

/// Inverse-square near-field attenuation `min(1, (d_ref/d)²)` from the jammer to one element.
pub fn jammer_to_ris_gain(jammer: &Pose, elem: &Pose, d_ref: f64) -> Result<f64> {
    if !(d_ref > 0.0) {
        return Err(Error::invalid("d_ref", "must be positive"));
    }
    let d = (elem.position - jammer.position).norm();
    if !(d > 0.0) {
        return Err(Error::DegenerateLink);
    }
    Ok((d_ref / d).powi(2).min(1.0))
}

/// Specular steering lobe of one element yawed by `yaw` from its base pose.
pub fn steering_alignment(elem: &Pose, yaw: f64, jammer_pos: Vec3, target_pos: Vec3, q: f64) -> f64 {
    let (Some(incident), Some(toward)) = (
        (elem.position - jammer_pos).normalized(),
        (target_pos - elem.position).normalized(),
    ) else {
        return 0.0;
    };
    let normal = elem.normal.rotate_about_z(yaw);
    let c = specular_reflection(incident, normal).dot(toward).min(1.0);
    if c <= 0.0 {
        0.0
    } else {
        c.powf(q)
    }
}

/// Composite jamming channel gain `g(δ)` toward `target` with the array's current yaw.
pub fn jamming_channel(
    ris: &RisArray,
    jammer: &JammerNode,
    em: &EmitterParams,
    target: &Pose,
    rc: &ReceiverParams,
) -> Result<f64> {
    jamming_channel_for_yaw(ris, &ris.yaw, jammer, em, target, rc)
}

/// [`jamming_channel`] evaluated for an explicit yaw vector instead of `ris.yaw`.
pub fn jamming_channel_for_yaw(
    ris: &RisArray,
    yaw: &[f64],
    jammer: &JammerNode,
    em: &EmitterParams,
    target: &Pose,
    rc: &ReceiverParams,
) -> Result<f64> {
    if yaw.len() != ris.len() || jammer.near_field_gain.len() != ris.len() {
        return Err(Error::LengthMismatch {
            what: "RIS yaw vector",
            expected: ris.len(),
            actual: yaw.len().min(jammer.near_field_gain.len()),
        });
    }
    let mut g = 0.0;
    for ((elem, &delta), &nf) in ris.elements.iter().zip(yaw).zip(&jammer.near_field_gain) {
        g += nf * element_term(elem, delta, ris, jammer, em, target, rc)?;
    }
    Ok(g)
}

/// Near-field-weighted contribution of element `index` at yaw `yaw`; the
/// terms over all elements sum to [`jamming_channel_for_yaw`].
pub fn element_jamming_gain(
    ris: &RisArray,
    index: usize,
    yaw: f64,
    jammer: &JammerNode,
    em: &EmitterParams,
    target: &Pose,
    rc: &ReceiverParams,
) -> Result<f64> {
    let (Some(elem), Some(&nf)) = (ris.elements.get(index), jammer.near_field_gain.get(index)) else {
        return Err(Error::invalid(
            "element index",
            format!("{index} out of range for {} elements", ris.len()),
        ));
    };
    Ok(nf * element_term(elem, yaw, ris, jammer, em, target, rc)?)
}

/// Unweighted contribution of one element: micro-surface gain times steering lobe.
pub(crate) fn element_term(
    elem: &Pose,
    yaw: f64,
    ris: &RisArray,
    jammer: &JammerNode,
    em: &EmitterParams,
    target: &Pose,
    rc: &ReceiverParams,
) -> Result<f64> {
    let lobe = steering_alignment(elem, yaw, jammer.pose.position, target.position, ris.steering_exponent);
    if lobe == 0.0 {
        return Ok(0.0);
    }
    let steered = elem.yawed(yaw);
    let dh = reflected_element_gain(&jammer.pose, em, &steered, &ris.element_params, target, rc)?;
    Ok(dh * lobe)
}
