//! Scenario description, JSON schema, defaults and validation.
//!
//! Room coordinates have their origin at the centre of the room, so a 5 × 5 × 4 m
//! room spans `x, y ∈ [−2.5, 2.5]` and `z ∈ [−2, 2]`; the default LED at
//! `(0, 0, 2)` sits on the ceiling. Every omitted key takes its default. Unknown
//! keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::channel::{los_gain, EmitterParams, ReceiverParams, SurfaceElementParams};
use crate::error::{Error, Result};
use crate::geometry::{Pose, Vec3};
use crate::optimizer::PsoParams;
use crate::ris::{JammerNode, RisArray, DEFAULT_NEAR_FIELD_REF, DEFAULT_STEERING_EXPONENT};
use crate::wbplsec::{jamming_power_from_fraction, sigma_for_snr_db};

use super::sweep::SweepSpec;

const EDGE_TOLERANCE: f64 = 1e-9;

/// Room extents in meters, centred on the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Room {
    pub length: f64,
    pub width: f64,
    pub height: f64,
}

impl Default for Room {
    fn default() -> Self {
        Self {
            length: 5.0,
            width: 5.0,
            height: 4.0,
        }
    }
}

impl Room {
    pub fn contains(&self, p: Vec3) -> bool {
        p.x.abs() <= self.length / 2.0 + EDGE_TOLERANCE
            && p.y.abs() <= self.width / 2.0 + EDGE_TOLERANCE
            && p.z.abs() <= self.height / 2.0 + EDGE_TOLERANCE
    }
}

/// Rectangular area of candidate Eve locations on a horizontal plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EveArea {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub z: f64,
    pub normal: Vec3,
    /// Grid points closer than this to Bob are dropped.
    pub exclusion_radius: f64,
}

/// How the RIS row is laid out; kept so the array can be rebuilt at another size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RisLayout {
    pub center: Vec3,
    pub axis: Vec3,
    pub base_normal: Vec3,
    pub pitch: f64,
    pub element: SurfaceElementParams,
    pub steering_exponent: f64,
}

impl RisLayout {
    pub fn build(&self, k: usize) -> Result<RisArray> {
        RisArray::linear(
            self.center,
            self.axis,
            self.base_normal,
            self.pitch,
            k,
            self.element,
            self.steering_exponent,
        )
    }
}

/// A fully resolved, validated experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub room: Room,
    pub alice: Pose,
    pub alice_emitter: EmitterParams,
    pub bob: Pose,
    pub bob_receiver: ReceiverParams,
    pub jammer: JammerNode,
    pub jammer_emitter: EmitterParams,
    pub near_field_ref: f64,
    pub ris: RisArray,
    pub ris_layout: RisLayout,
    pub eve_receiver: ReceiverParams,
    pub eve_area: EveArea,
    /// Eve's position when it is assumed known.
    pub eve_location: Option<Vec3>,
    pub sigma_b: f64,
    pub sigma_e: f64,
    /// `M / N`, the jammed share of each message.
    pub jam_fraction: f64,
    pub optimizer: PsoParams,
    pub sweep: SweepSpec,
}

impl Default for Scenario {
    fn default() -> Self {
        ScenarioFile::default().resolve().expect("built-in defaults are valid")
    }
}

impl Scenario {
    pub fn p_t(&self) -> f64 {
        self.alice_emitter.power_t
    }

    pub fn p_j(&self) -> f64 {
        self.jammer.power_j
    }

    pub fn ris_size(&self) -> usize {
        self.ris.len()
    }

    /// Rebuilds the RIS with `k` elements (yaw reset to zero) and refreshes
    /// the jammer's near-field gains.
    pub fn with_ris_size(&self, k: usize) -> Result<Scenario> {
        let mut s = self.clone();
        s.ris = self.ris_layout.build(k)?;
        s.jammer = JammerNode::new(self.jammer.pose, self.jammer.power_j, &s.ris, self.near_field_ref)?;
        s.validate_placement()?;
        Ok(s)
    }

    pub fn with_jam_fraction(&self, fraction: f64) -> Result<Scenario> {
        let mut s = self.clone();
        s.jammer.power_j = jamming_power_from_fraction(self.p_t(), fraction)?;
        s.jam_fraction = fraction;
        Ok(s)
    }

    /// Same scenario with the jammer switched off.
    pub fn without_jamming(&self) -> Scenario {
        let mut s = self.clone();
        s.jammer.power_j = 0.0;
        s
    }

    pub fn with_seed(&self, seed: u64) -> Scenario {
        let mut s = self.clone();
        s.optimizer.seed = seed;
        s
    }

    /// Pose of a hypothetical Eve at `position`, oriented like the grid.
    pub fn eve_pose(&self, position: Vec3) -> Pose {
        Pose {
            position,
            normal: self.eve_area.normal,
        }
    }

    fn validate_placement(&self) -> Result<()> {
        let bad = placement_problems(
            &self.room,
            Some(self.alice.position),
            Some(self.bob.position),
            Some(self.jammer.pose.position),
            Some(&self.ris),
            Some(&self.eve_area),
            self.eve_location,
        );
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(bad))
        }
    }
}

/// One message per actor lying outside `room`; missing actors are skipped.
fn placement_problems(
    room: &Room,
    alice: Option<Vec3>,
    bob: Option<Vec3>,
    jammer: Option<Vec3>,
    ris: Option<&RisArray>,
    eve_area: Option<&EveArea>,
    eve_location: Option<Vec3>,
) -> Vec<String> {
    let mut points: Vec<(String, Vec3)> = Vec::new();
    points.extend(alice.map(|p| ("alice.position".to_string(), p)));
    points.extend(bob.map(|p| ("bob.position".to_string(), p)));
    points.extend(jammer.map(|p| ("jammer.position".to_string(), p)));
    if let Some(ris) = ris {
        points.extend(
            ris.elements
                .iter()
                .enumerate()
                .map(|(i, e)| (format!("ris element {i}"), e.position)),
        );
    }
    if let Some(a) = eve_area {
        for (x, y) in [(a.x[0], a.y[0]), (a.x[1], a.y[1])] {
            points.push(("eve.area corner".to_string(), Vec3::new(x, y, a.z)));
        }
    }
    points.extend(eve_location.map(|p| ("eve.location".to_string(), p)));
    points
        .into_iter()
        .filter(|(_, p)| !room.contains(*p))
        .map(|(what, p)| {
            format!(
                "{what}: ({}, {}, {}) lies outside the {} × {} × {} m room",
                p.x, p.y, p.z, room.length, room.width, room.height
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// File schema
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioFile {
    pub room: Option<Room>,
    pub alice: AliceSpec,
    pub bob: BobSpec,
    pub jammer: JammerSpec,
    pub ris: RisSpec,
    pub eve_receiver: Option<ReceiverSpec>,
    pub eve: EveSpec,
    pub noise: NoiseSpec,
    pub jam_fraction: Option<f64>,
    pub optimizer: Option<PsoParams>,
    pub sweep: Option<SweepSpec>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AliceSpec {
    pub position: Option<Vec3>,
    pub normal: Option<Vec3>,
    pub power_t: Option<f64>,
    pub half_angle_deg: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BobSpec {
    pub position: Option<Vec3>,
    pub normal: Option<Vec3>,
    pub receiver: Option<ReceiverSpec>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReceiverSpec {
    pub area: f64,
    pub responsivity: f64,
    pub fov_deg: f64,
    pub refractive_index: f64,
}

impl Default for ReceiverSpec {
    fn default() -> Self {
        Self {
            area: 1e-4,
            responsivity: 1.0,
            fov_deg: 120.0,
            refractive_index: 1.5,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct JammerSpec {
    /// Defaults to `offset` meters in front of the RIS centre along its normal.
    pub position: Option<Vec3>,
    /// Defaults to facing the RIS.
    pub normal: Option<Vec3>,
    pub offset: Option<f64>,
    pub near_field_ref: Option<f64>,
    pub half_angle_deg: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RisSpec {
    pub size: Option<usize>,
    pub center: Option<Vec3>,
    pub axis: Option<Vec3>,
    pub normal: Option<Vec3>,
    pub pitch: Option<f64>,
    pub reflectivity: Option<f64>,
    pub element_area: Option<f64>,
    pub steering_exponent: Option<f64>,
    /// Initial yaw per element, radians.
    pub yaw: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EveSpec {
    pub area: Option<AreaSpec>,
    pub normal: Option<Vec3>,
    pub exclusion_radius: Option<f64>,
    pub location: Option<Vec3>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AreaSpec {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub z: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NoiseSpec {
    pub sigma_b: Option<f64>,
    pub sigma_e: Option<f64>,
    /// When set, overrides both sigmas so the unjammed SNRs hit a target.
    pub calibration: Option<CalibrationSpec>,
}

/// Sets `σ_B` so Bob's SNR equals `snr_db`, and `σ_E` so an unjammed Eve at
/// `eve_reference` (default: Bob's position) sees the same SNR.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CalibrationSpec {
    pub snr_db: f64,
    #[serde(default)]
    pub eve_reference: Option<Vec3>,
}

pub const DEFAULT_SIGMA: f64 = 1e-10;
pub const DEFAULT_RIS_SIZE: usize = 16;
pub const DEFAULT_RIS_PITCH: f64 = 0.02;
pub const DEFAULT_JAMMER_OFFSET: f64 = 0.1;
pub const DEFAULT_JAM_FRACTION: f64 = 0.5;
pub const DEFAULT_EXCLUSION_RADIUS: f64 = 0.1;

impl ScenarioFile {
    /// Applies defaults and validates, collecting every offending field.
    pub fn resolve(&self) -> Result<Scenario> {
        let mut bad: Vec<String> = Vec::new();
        macro_rules! try_or_note {
            ($field:expr, $e:expr) => {
                match $e {
                    Ok(v) => Some(v),
                    Err(err) => {
                        bad.push(format!("{}: {}", $field, err));
                        None
                    }
                }
            };
        }

        let room = self.room.unwrap_or_default();
        if !(room.length > 0.0 && room.width > 0.0 && room.height > 0.0) {
            bad.push("room: dimensions must be positive".into());
        }

        let alice = try_or_note!(
            "alice",
            Pose::new(
                self.alice.position.unwrap_or(Vec3::new(0.0, 0.0, 2.0)),
                self.alice.normal.unwrap_or(Vec3::DOWN),
            )
        );
        let alice_emitter = try_or_note!(
            "alice",
            EmitterParams::new(
                self.alice.power_t.unwrap_or(1.0),
                self.alice.half_angle_deg.unwrap_or(70.0).to_radians(),
            )
        );

        let bob = try_or_note!(
            "bob",
            Pose::new(
                self.bob.position.unwrap_or(Vec3::new(-1.0, 1.0, -0.5)),
                self.bob.normal.unwrap_or(Vec3::UP),
            )
        );
        let bob_receiver = try_or_note!("bob.receiver", self.bob.receiver.unwrap_or_default().build());
        let eve_receiver = try_or_note!("eve_receiver", self.eve_receiver.unwrap_or_default().build());

        // RIS on the wall at the room's upper-left corner (seen from above),
        // facing into the room.
        let ris_layout = {
            let center = self
                .ris
                .center
                .unwrap_or(Vec3::new(-room.length / 2.0, room.width / 2.0 - 0.5, 0.5));
            let element = try_or_note!(
                "ris",
                SurfaceElementParams::new(
                    self.ris.reflectivity.unwrap_or(0.8),
                    self.ris.element_area.unwrap_or(DEFAULT_RIS_PITCH * DEFAULT_RIS_PITCH),
                )
            );
            let base_normal = self.ris.normal.unwrap_or(Vec3::new(1.0, 0.0, 0.0));
            element.map(|element| RisLayout {
                center,
                axis: self.ris.axis.unwrap_or(Vec3::new(0.0, 1.0, 0.0)),
                base_normal: base_normal.normalized().unwrap_or(base_normal),
                pitch: self.ris.pitch.unwrap_or(DEFAULT_RIS_PITCH),
                element,
                steering_exponent: self.ris.steering_exponent.unwrap_or(DEFAULT_STEERING_EXPONENT),
            })
        };
        let ris = ris_layout.as_ref().and_then(|layout| {
            let k = self.ris.size.unwrap_or(DEFAULT_RIS_SIZE);
            let mut ris = try_or_note!("ris", layout.build(k))?;
            if let Some(yaw) = &self.ris.yaw {
                try_or_note!("ris.yaw", ris.set_yaw(yaw))?;
            }
            Some(ris)
        });

        let jam_fraction = self.jam_fraction.unwrap_or(DEFAULT_JAM_FRACTION);
        let p_j = alice_emitter
            .as_ref()
            .and_then(|em| try_or_note!("jam_fraction", jamming_power_from_fraction(em.power_t, jam_fraction)));
        let jammer_emitter = try_or_note!(
            "jammer",
            EmitterParams::new(
                alice_emitter.map_or(1.0, |e| e.power_t),
                self.jammer.half_angle_deg.unwrap_or(70.0).to_radians(),
            )
        );
        let near_field_ref = self.jammer.near_field_ref.unwrap_or(DEFAULT_NEAR_FIELD_REF);
        let jammer = match (&ris_layout, &ris, p_j) {
            (Some(layout), Some(ris), Some(p_j)) => {
                let offset = self.jammer.offset.unwrap_or(DEFAULT_JAMMER_OFFSET);
                let position = self
                    .jammer
                    .position
                    .unwrap_or(layout.center + layout.base_normal * offset);
                let normal = self.jammer.normal.unwrap_or(-layout.base_normal);
                Pose::new(position, normal)
                    .and_then(|pose| JammerNode::new(pose, p_j, ris, near_field_ref))
                    .map_err(|e| bad.push(format!("jammer: {e}")))
                    .ok()
            }
            _ => None,
        };

        let eve_area = bob.map(|bob| {
            let area = self.eve.area.unwrap_or_else(|| opposite_quadrant(&room, bob.position));
            EveArea {
                x: area.x,
                y: area.y,
                z: area.z.unwrap_or(bob.position.z),
                normal: self.eve.normal.and_then(Vec3::normalized).unwrap_or(Vec3::UP),
                exclusion_radius: self.eve.exclusion_radius.unwrap_or(DEFAULT_EXCLUSION_RADIUS),
            }
        });
        if let Some(a) = &eve_area {
            if !(a.x[0] <= a.x[1] && a.y[0] <= a.y[1]) {
                bad.push("eve.area: ranges must be [min, max]".into());
            }
            if self.eve.normal.is_some_and(|n| n.normalized().is_none()) {
                bad.push("eve.normal: must be non-zero".into());
            }
        }

        let optimizer = self.optimizer.unwrap_or_default();
        if let Err(Error::Validation(v)) = optimizer.validate() {
            bad.extend(v);
        }
        let sweep = self.sweep.clone().unwrap_or_default();
        if let Err(Error::Validation(v)) = sweep.validate() {
            bad.extend(v);
        }

        let mut sigma_b = self.noise.sigma_b.unwrap_or(DEFAULT_SIGMA);
        let mut sigma_e = self.noise.sigma_e.unwrap_or(DEFAULT_SIGMA);
        for (name, s) in [("noise.sigma_b", sigma_b), ("noise.sigma_e", sigma_e)] {
            if !(s > 0.0 && s.is_finite()) {
                bad.push(format!("{name}: must be positive"));
            }
        }

        bad.extend(placement_problems(
            &room,
            alice.map(|a| a.position),
            bob.map(|b| b.position),
            jammer.as_ref().map(|j| j.pose.position),
            ris.as_ref(),
            eve_area.as_ref(),
            self.eve.location,
        ));

        let (
            Some(alice),
            Some(alice_emitter),
            Some(bob),
            Some(bob_receiver),
            Some(jammer),
            Some(jammer_emitter),
            Some(ris),
            Some(ris_layout),
            Some(eve_receiver),
            Some(eve_area),
            true,
        ) = (
            alice,
            alice_emitter,
            bob,
            bob_receiver,
            jammer,
            jammer_emitter,
            ris,
            ris_layout,
            eve_receiver,
            eve_area,
            bad.is_empty(),
        )
        else {
            return Err(Error::Validation(bad));
        };

        if let Some(cal) = self.noise.calibration {
            let reference = Pose {
                position: cal.eve_reference.unwrap_or(bob.position),
                normal: eve_area.normal,
            };
            let h_b = los_gain(&alice, &alice_emitter, &bob, &bob_receiver);
            let h_e = los_gain(&alice, &alice_emitter, &reference, &eve_receiver);
            match (h_b, h_e) {
                (Ok(h_b), Ok(h_e)) if h_b > 0.0 && h_e > 0.0 => {
                    sigma_b = sigma_for_snr_db(h_b, alice_emitter.power_t, cal.snr_db);
                    sigma_e = sigma_for_snr_db(h_e, alice_emitter.power_t, cal.snr_db);
                }
                _ => {
                    return Err(Error::Validation(vec![
                        "noise.calibration: Bob or the Eve reference has no line of sight to Alice".into(),
                    ]))
                }
            }
        }

        let scenario = Scenario {
            room,
            alice,
            alice_emitter,
            bob,
            bob_receiver,
            jammer,
            jammer_emitter,
            near_field_ref,
            ris,
            ris_layout,
            eve_receiver,
            eve_area,
            eve_location: self.eve.location,
            sigma_b,
            sigma_e,
            jam_fraction,
            optimizer,
            sweep,
        };
        Ok(scenario)
    }
}

impl ReceiverSpec {
    fn build(self) -> Result<ReceiverParams> {
        ReceiverParams::new(
            self.area,
            self.responsivity,
            self.fov_deg.to_radians(),
            self.refractive_index,
        )
    }
}

/// The horizontal quadrant diagonally opposite `bob`.
fn opposite_quadrant(room: &Room, bob: Vec3) -> AreaSpec {
    let (hx, hy) = (room.length / 2.0, room.width / 2.0);
    AreaSpec {
        x: if bob.x < 0.0 { [0.0, hx] } else { [-hx, 0.0] },
        y: if bob.y < 0.0 { [0.0, hy] } else { [-hy, 0.0] },
        z: None,
    }
}

/// Parses and validates a scenario from JSON text.
pub fn parse_scenario(json: &str) -> Result<Scenario> {
    let file: ScenarioFile =
        serde_json::from_str(json).map_err(|e| Error::Validation(vec![format!("scenario: {e}")]))?;
    file.resolve()
}

/// Reads, parses and validates a scenario file.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let file: ScenarioFile =
        serde_json::from_str(&text).map_err(|e| Error::Validation(vec![format!("{}: {e}", path.display())]))?;
    file.resolve()
}
