//! CSV output for reports, sweeps and solver traces.
//!
//! Floats carry 9 significant digits in scientific notation. Rows follow the
//! grid's row-major order and the sweep's cell order, so identical inputs
//! give byte-identical files.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::optimizer::PsoResult;
use crate::secrecy::SecrecyReport;

use super::sweep::SweepTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// Full table: per-point rows for a report, outage rows for a sweep.
    Csv,
    /// Long-format `x, y, value` secrecy map.
    HeatmapCsv,
}

/// Anything that renders to one of the CSV layouts.
pub trait CsvExport {
    fn to_csv(&self, format: ExportFormat) -> String;
}

pub fn fmt_f64(v: f64) -> String {
    format!("{v:.8e}")
}

impl CsvExport for SecrecyReport {
    fn to_csv(&self, format: ExportFormat) -> String {
        let mut out = String::new();
        match format {
            ExportFormat::Csv => {
                out.push_str("x,y,z,gamma_e,c_s\n");
                for ((p, g), c) in self.eve_points.iter().zip(&self.gamma_e).zip(&self.c_s_values) {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{}",
                        fmt_f64(p.x),
                        fmt_f64(p.y),
                        fmt_f64(p.z),
                        fmt_f64(*g),
                        fmt_f64(*c)
                    );
                }
            }
            ExportFormat::HeatmapCsv => {
                out.push_str("x,y,c_s\n");
                for (p, c) in self.eve_points.iter().zip(&self.c_s_values) {
                    let _ = writeln!(out, "{},{},{}", fmt_f64(p.x), fmt_f64(p.y), fmt_f64(*c));
                }
            }
        }
        out
    }
}

impl CsvExport for SweepTable {
    fn to_csv(&self, format: ExportFormat) -> String {
        let mut out = String::new();
        match format {
            ExportFormat::Csv => {
                out.push_str("K,P_j,T_h,P_out\n");
                for cell in &self.cells {
                    for (t, p) in self.thresholds.iter().zip(&cell.outage) {
                        let _ = writeln!(
                            out,
                            "{},{},{},{}",
                            cell.ris_size,
                            fmt_f64(cell.p_j),
                            fmt_f64(*t),
                            fmt_f64(*p)
                        );
                    }
                }
            }
            ExportFormat::HeatmapCsv => {
                out.push_str("K,P_j,x,y,c_s\n");
                for cell in &self.cells {
                    for (p, c) in cell.report.eve_points.iter().zip(&cell.report.c_s_values) {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{}",
                            cell.ris_size,
                            fmt_f64(cell.p_j),
                            fmt_f64(p.x),
                            fmt_f64(p.y),
                            fmt_f64(*c)
                        );
                    }
                }
            }
        }
        out
    }
}

/// Writes `item` to `path` in the requested layout.
pub fn export_report<T: CsvExport + ?Sized>(item: &T, path: impl AsRef<Path>, format: ExportFormat) -> Result<()> {
    write_file(path.as_ref(), &item.to_csv(format))
}

/// Area and mean secrecy capacity per sweep cell.
pub fn export_area_summary(table: &SweepTable, path: impl AsRef<Path>) -> Result<()> {
    let mut out = String::from("K,P_j,area_c_s,mean_c_s\n");
    for cell in &table.cells {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            cell.ris_size,
            fmt_f64(cell.p_j),
            fmt_f64(cell.report.area_c_s),
            fmt_f64(cell.report.mean_c_s())
        );
    }
    write_file(path.as_ref(), &out)
}

pub fn export_trace(result: &PsoResult, path: impl AsRef<Path>) -> Result<()> {
    let mut out = String::from("iteration,objective\n");
    for (i, v) in result.trace.iter().enumerate() {
        let _ = writeln!(out, "{i},{}", fmt_f64(*v));
    }
    write_file(path.as_ref(), &out)
}

pub fn export_yaw(yaw: &[f64], path: impl AsRef<Path>) -> Result<()> {
    let mut out = String::from("element,yaw_rad\n");
    for (i, y) in yaw.iter().enumerate() {
        let _ = writeln!(out, "{i},{}", fmt_f64(*y));
    }
    write_file(path.as_ref(), &out)
}

/// `P_out` curve of a single report, tagged with its `K` and `P_j`.
pub fn export_outage_curve(
    report: &SecrecyReport,
    ris_size: usize,
    p_j: f64,
    thresholds: &[f64],
    path: impl AsRef<Path>,
) -> Result<()> {
    let mut out = String::from("K,P_j,T_h,P_out\n");
    for &t in thresholds {
        let _ = writeln!(
            out,
            "{ris_size},{},{},{}",
            fmt_f64(p_j),
            fmt_f64(t),
            fmt_f64(report.outage(t)?)
        );
    }
    write_file(path.as_ref(), &out)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec3;

    fn report() -> SecrecyReport {
        let pts = vec![
            Vec3::new(0.0, 0.0, -0.5),
            Vec3::new(1.0, 0.0, -0.5),
            Vec3::new(0.0, 1.0, -0.5),
            Vec3::new(1.0, 1.0, -0.5),
        ];
        SecrecyReport::from_gammas(pts, vec![1.0, 2.0, 3.0, 10.0], 4.0).unwrap()
    }

    #[test]
    fn heatmap_rows() {
        let csv = report().to_csv(ExportFormat::HeatmapCsv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "x,y,c_s");
        assert_eq!(lines[1], "0.00000000e0,0.00000000e0,6.60964047e-1");
    }

    #[test]
    fn reexport_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
        export_report(&report(), &a, ExportFormat::Csv).unwrap();
        export_report(&report(), &b, ExportFormat::Csv).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }

    #[test]
    fn io_errors_carry_path() {
        let err = export_report(&report(), "/nonexistent-dir/x.csv", ExportFormat::Csv).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/x.csv"));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_f64(1.0 / 3.0), "3.33333333e-1");
        assert_eq!(fmt_f64(-2.5e-7), "-2.50000000e-7");
    }
}
