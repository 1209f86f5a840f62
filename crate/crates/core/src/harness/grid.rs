use crate::error::{Error, Result};
use crate::geometry::{Pose, Vec3};

use super::scenario::{EveArea, Scenario};

/// Uniform `resolution × resolution` grid of Eve poses over the scenario's
/// area of interest.
///
/// Points are ordered row-major: `y` is the outer (row) index, `x` the inner.
/// Points within the exclusion radius of Bob are dropped.
pub fn build_eve_grid(scenario: &Scenario, resolution: usize) -> Result<Vec<Pose>> {
    grid_over(&scenario.eve_area, scenario.bob.position, resolution)
}

pub fn grid_over(area: &EveArea, bob: Vec3, resolution: usize) -> Result<Vec<Pose>> {
    if resolution < 2 {
        return Err(Error::invalid("grid resolution", "must be at least 2"));
    }
    if !(area.x[1] > area.x[0] && area.y[1] > area.y[0]) {
        return Err(Error::invalid("eve.area", "degenerate rectangle"));
    }
    let xs = linspace(area.x[0], area.x[1], resolution);
    let ys = linspace(area.y[0], area.y[1], resolution);
    let grid: Vec<Pose> = ys
        .iter()
        .flat_map(|&y| xs.iter().map(move |&x| Vec3::new(x, y, area.z)))
        .filter(|p| (*p - bob).norm() >= area.exclusion_radius)
        .map(|position| Pose {
            position,
            normal: area.normal,
        })
        .collect();
    if grid.is_empty() {
        return Err(Error::Empty("Eve grid"));
    }
    Ok(grid)
}

/// `n ≥ 2` evenly spaced values with exact endpoints.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    let step = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| if i + 1 == n { b } else { a + step * i as f64 })
        .collect()
}
