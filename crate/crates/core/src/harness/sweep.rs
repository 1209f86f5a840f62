//! Parameter sweeps over RIS size and jamming power, in known- or unknown-Eve mode.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Pose;
use crate::optimizer::pso::derive_seed;
use crate::optimizer::{optimize_known_eve, optimize_unknown_eve, PsoResult};
use crate::secrecy::SecrecyReport;

use super::evaluate::{
    bob_snr_cancelled, evaluate_baseline, evaluate_scenario, eve_gain, eve_jamming_gain, eve_sinr_with,
};
use super::grid::build_eve_grid;
use super::scenario::Scenario;

/// Which optimization problem a sweep cell solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// One optimization per grid point, each assuming Eve stands there.
    Known,
    /// One area optimization shared by the whole grid.
    Unknown,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Known => "known",
            Mode::Unknown => "unknown",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "known" => Ok(Mode::Known),
            "unknown" => Ok(Mode::Unknown),
            other => Err(Error::invalid("mode", format!("expected known|unknown, got {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSpec {
    pub ris_sizes: Vec<usize>,
    /// Jammed share `M / N`; the jamming power is `P_t` times each value.
    pub jam_fractions: Vec<f64>,
    pub thresholds: Vec<f64>,
    pub grid_resolution: usize,
    /// Adds a no-RIS row (reported as `K = 0`) per jamming power.
    pub include_baseline: bool,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            ris_sizes: vec![4, 8, 16, 20, 32],
            jam_fractions: vec![0.1, 0.5],
            thresholds: (0..=20).map(|i| i as f64 / 20.0).collect(),
            grid_resolution: 11,
            include_baseline: true,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let mut bad = Vec::new();
        if self.ris_sizes.is_empty() || self.ris_sizes.contains(&0) {
            bad.push("sweep.ris_sizes: need at least one size, all ≥ 1".to_string());
        }
        if self.jam_fractions.is_empty() || self.jam_fractions.iter().any(|f| !(*f > 0.0 && *f < 1.0)) {
            bad.push("sweep.jam_fractions: need at least one value, all in (0, 1)".to_string());
        }
        if self.thresholds.is_empty() || self.thresholds.iter().any(|t| !(0.0..=1.0).contains(t)) {
            bad.push("sweep.thresholds: need at least one value, all in [0, 1]".to_string());
        }
        if self.grid_resolution < 2 {
            bad.push("sweep.grid_resolution: must be at least 2".to_string());
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(bad))
        }
    }
}

/// Result of one `(K, P_j)` combination.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCell {
    /// Number of RIS elements; 0 for the no-RIS baseline.
    pub ris_size: usize,
    pub jam_fraction: f64,
    pub p_j: f64,
    pub report: SecrecyReport,
    /// `P_out` at each of the table's thresholds.
    pub outage: Vec<f64>,
    pub solver_runs: usize,
    pub unconverged_runs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub mode: Mode,
    pub thresholds: Vec<f64>,
    pub cells: Vec<SweepCell>,
}

impl SweepTable {
    pub fn cell(&self, ris_size: usize, jam_fraction: f64) -> Option<&SweepCell> {
        self.cells
            .iter()
            .find(|c| c.ris_size == ris_size && c.jam_fraction == jam_fraction)
    }

    pub fn unconverged_fraction(&self) -> f64 {
        let runs: usize = self.cells.iter().map(|c| c.solver_runs).sum();
        let bad: usize = self.cells.iter().map(|c| c.unconverged_runs).sum();
        if runs == 0 {
            0.0
        } else {
            bad as f64 / runs as f64
        }
    }
}

/// Per-point known-Eve map: each grid point gets its own optimized yaw.
#[derive(Debug, Clone, PartialEq)]
pub struct KnownEveMap {
    pub report: SecrecyReport,
    pub runs: Vec<PsoResult>,
}

pub fn known_eve_map(scenario: &Scenario, grid: &[Pose]) -> Result<KnownEveMap> {
    if grid.is_empty() {
        return Err(Error::Empty("Eve grid"));
    }
    let gamma_m_hat = bob_snr_cancelled(scenario)?;
    let per_point = grid
        .par_iter()
        .enumerate()
        .map(|(i, eve)| {
            let local = scenario.with_seed(derive_seed(scenario.optimizer.seed, i as u64));
            let run = optimize_known_eve(&local, eve)?;
            let g = eve_jamming_gain(scenario, &run.best_yaw, eve)?;
            let gamma = eve_sinr_with(scenario, eve_gain(scenario, eve)?, g)?;
            Ok((gamma, run))
        })
        .collect::<Result<Vec<_>>>()?;
    let (gamma_e, runs): (Vec<f64>, Vec<PsoResult>) = per_point.into_iter().unzip();
    let report = SecrecyReport::from_gammas(grid.iter().map(|p| p.position).collect(), gamma_e, gamma_m_hat)?;
    Ok(KnownEveMap { report, runs })
}

/// Area optimization followed by evaluation of the chosen yaw over the grid.
pub fn unknown_eve_map(scenario: &Scenario, grid: &[Pose]) -> Result<(SecrecyReport, PsoResult)> {
    let run = optimize_unknown_eve(scenario, grid)?;
    let report = evaluate_scenario(scenario, &run.best_yaw, grid)?;
    Ok((report, run))
}

/// Runs every `(K, P_j)` cell of `spec` and records maps and outage curves.
///
/// Cells are ordered by jamming fraction, then baseline first, then by
/// ascending `K` in the order given. Solver seeds derive from
/// `scenario.optimizer.seed` and the cell position only.
pub fn run_sweep(scenario: &Scenario, spec: &SweepSpec, mode: Mode) -> Result<SweepTable> {
    spec.validate()?;
    let grid = build_eve_grid(scenario, spec.grid_resolution)?;
    let mut cells = Vec::new();
    for (fi, &fraction) in spec.jam_fractions.iter().enumerate() {
        let base = scenario.with_jam_fraction(fraction)?;
        if spec.include_baseline {
            let report = evaluate_baseline(&base, &grid)?;
            cells.push(make_cell(0, fraction, base.p_j(), report, &spec.thresholds, 0, 0)?);
        }
        for (ki, &k) in spec.ris_sizes.iter().enumerate() {
            let cell_seed = derive_seed(scenario.optimizer.seed, (fi * spec.ris_sizes.len() + ki) as u64);
            let s = base.with_ris_size(k)?.with_seed(cell_seed);
            let (report, runs) = match mode {
                Mode::Known => {
                    let map = known_eve_map(&s, &grid)?;
                    (map.report, map.runs)
                }
                Mode::Unknown => {
                    let (report, run) = unknown_eve_map(&s, &grid)?;
                    (report, vec![run])
                }
            };
            let unconverged = runs.iter().filter(|r| !r.converged).count();
            cells.push(make_cell(
                k,
                fraction,
                s.p_j(),
                report,
                &spec.thresholds,
                runs.len(),
                unconverged,
            )?);
        }
    }
    Ok(SweepTable {
        mode,
        thresholds: spec.thresholds.clone(),
        cells,
    })
}

fn make_cell(
    ris_size: usize,
    jam_fraction: f64,
    p_j: f64,
    report: SecrecyReport,
    thresholds: &[f64],
    solver_runs: usize,
    unconverged_runs: usize,
) -> Result<SweepCell> {
    let outage = thresholds
        .iter()
        .map(|&t| report.outage(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepCell {
        ris_size,
        jam_fraction,
        p_j,
        report,
        outage,
        solver_runs,
        unconverged_runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> Scenario {
        let mut s = Scenario::default();
        s.optimizer.swarm_size = 12;
        s.optimizer.max_iters = 30;
        s
    }

    #[test]
    fn threshold_endpoints() {
        let spec = SweepSpec {
            ris_sizes: vec![4],
            jam_fractions: vec![0.5],
            thresholds: vec![0.0, 1.0],
            grid_resolution: 3,
            include_baseline: false,
        };
        let t = run_sweep(&quick(), &spec, Mode::Unknown).unwrap();
        assert_eq!(t.cells.len(), 1);
        let c = &t.cells[0];
        assert_eq!(c.outage[0], 1.0);
        let c_max = c.report.c_s_values.iter().copied().fold(0.0, f64::max);
        let n_max = c.report.c_s_values.iter().filter(|&&v| v == c_max).count();
        assert_eq!(c.outage[1], n_max as f64 / c.report.c_s_values.len() as f64);
    }

    #[test]
    fn cell_order_and_baseline() {
        let spec = SweepSpec {
            ris_sizes: vec![2, 4],
            jam_fractions: vec![0.1, 0.5],
            thresholds: vec![0.5],
            grid_resolution: 2,
            include_baseline: true,
        };
        let t = run_sweep(&quick(), &spec, Mode::Known).unwrap();
        let keys: Vec<(usize, f64)> = t.cells.iter().map(|c| (c.ris_size, c.jam_fraction)).collect();
        assert_eq!(keys, vec![(0, 0.1), (2, 0.1), (4, 0.1), (0, 0.5), (2, 0.5), (4, 0.5)]);
        assert_eq!(t.cell(4, 0.5).unwrap().solver_runs, 4);
        assert_eq!(t.cell(0, 0.5).unwrap().solver_runs, 0);
    }

    #[test]
    fn invalid_spec() {
        let spec = SweepSpec {
            thresholds: vec![1.5],
            ..SweepSpec::default()
        };
        assert!(matches!(
            run_sweep(&quick(), &spec, Mode::Known),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("known".parse::<Mode>().unwrap(), Mode::Known);
        assert_eq!(Mode::Unknown.to_string(), "unknown");
        assert!("maybe".parse::<Mode>().is_err());
    }
}
