//! Secrecy-capacity simulation for indoor visible-light links where the
//! legitimate receiver jams part of the transmission and a wall-mounted array
//! of yaw-steerable mirrors (RIS) redirects that jamming toward eavesdroppers.
//!
//! The modules layer bottom-up:
//!
//! * [`geometry`]: vectors, poses and link angles.
//! * [`channel`]: Lambertian LOS gain and single-bounce mirror gain.
//! * [`ris`]: the mirror array and the jammer-to-target channel `g(δ)`.
//! * [`wbplsec`]: selective bit jamming, jamming power and Bob's cancelled SNR.
//! * [`secrecy`]: SINR, secrecy capacity, area capacity and outage.
//! * [`optimizer`]: PSO over yaw vectors and the known/unknown Eve problems.
//! * [`harness`]: scenario files, Eve grids, sweeps and CSV export.
//!
//! ```
//! use vlc_ris::harness::{build_eve_grid, evaluate_scenario, Scenario};
//!
//! let s = Scenario::default();
//! let grid = build_eve_grid(&s, 5).unwrap();
//! let report = evaluate_scenario(&s, &s.ris.yaw, &grid).unwrap();
//! assert_eq!(report.c_s_values.len(), grid.len());
//! ```

// `!(x > 0.0)` is used on purpose so NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod optimizer;
pub mod ris;
pub mod secrecy;
pub mod wbplsec;

pub use error::{Error, Result};
pub use geometry::{Pose, Vec3};
