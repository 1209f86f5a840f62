//! Vector math and link-angle extraction between emitters and receivers.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on the Euclidean norm of orientation normals.
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// A point or direction in room coordinates (meters).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const UP: Vec3 = Vec3::new(0.0, 0.0, 1.0);
    pub const DOWN: Vec3 = Vec3::new(0.0, 0.0, -1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Returns the unit vector along `self`, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    pub fn is_unit(self) -> bool {
        (self.norm() - 1.0).abs() <= UNIT_TOLERANCE
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Rotates about the vertical (z) axis by `angle` radians, counter-clockwise
    /// seen from above.
    pub fn rotate_about_z(self, angle: f64) -> Vec3 {
        let (s, c) = angle.sin_cos();
        Vec3::new(c * self.x - s * self.y, s * self.x + c * self.y, self.z)
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(v: [f64; 3]) -> Self {
        Vec3::new(v[0], v[1], v[2])
    }
}

impl From<Vec3> for [f64; 3] {
    fn from(v: Vec3) -> Self {
        [v.x, v.y, v.z]
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, rhs: f64) -> Vec3 {
        Vec3::new(self.x * rhs, self.y * rhs, self.z * rhs)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Position plus unit orientation normal of an emitter, receiver or surface element.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub position: Vec3,
    pub normal: Vec3,
}

impl Pose {
    /// Builds a pose, normalizing `normal`. Fails on a zero or non-finite normal.
    pub fn new(position: Vec3, normal: Vec3) -> Result<Self> {
        if !position.is_finite() {
            return Err(Error::invalid("position", "must be finite"));
        }
        let normal = normal
            .normalized()
            .ok_or_else(|| Error::invalid("normal", "must be a non-zero finite vector"))?;
        Ok(Self { position, normal })
    }

    pub fn facing_up(position: Vec3) -> Self {
        Self {
            position,
            normal: Vec3::UP,
        }
    }

    pub fn facing_down(position: Vec3) -> Self {
        Self {
            position,
            normal: Vec3::DOWN,
        }
    }

    /// Same position, normal rotated about the vertical axis.
    pub fn yawed(self, yaw: f64) -> Self {
        Self {
            position: self.position,
            normal: self.normal.rotate_about_z(yaw),
        }
    }
}

/// Irradiance angle at the transmitter, incidence angle at the receiver and
/// their separation.
///
/// The cosines are kept alongside the angles; gain formulas consume them
/// directly so no precision is lost through an `acos`/`cos` round trip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkAngles {
    pub phi: f64,
    pub psi: f64,
    pub d: f64,
    pub cos_phi: f64,
    pub cos_psi: f64,
}

/// Angles of the straight link from `tx` to `rx`.
///
/// `cos φ = n_tx · û` and `cos ψ = −n_rx · û` with `û` the unit vector from
/// transmitter to receiver. Angles beyond 90° are returned as-is; cutoffs are
/// the caller's business.
pub fn link_angles(tx: &Pose, rx: &Pose) -> Result<LinkAngles> {
    let delta = rx.position - tx.position;
    let d = delta.norm();
    if !(d > 0.0) || !d.is_finite() {
        return Err(Error::DegenerateLink);
    }
    let u = delta * (1.0 / d);
    let cos_phi = tx.normal.dot(u).clamp(-1.0, 1.0);
    let cos_psi = (-rx.normal.dot(u)).clamp(-1.0, 1.0);
    Ok(LinkAngles {
        phi: cos_phi.acos(),
        psi: cos_psi.acos(),
        d,
        cos_phi,
        cos_psi,
    })
}

/// Mirror reflection `r = i − 2(i·n)n` of direction `incident` about `normal`.
pub fn specular_reflection(incident: Vec3, normal: Vec3) -> Vec3 {
    incident - normal * (2.0 * incident.dot(normal))
}
