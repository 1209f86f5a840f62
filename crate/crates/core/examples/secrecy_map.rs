//! Secrecy capacity over the Eve area with and without RIS jamming.
//!
//! `cargo run --example secrecy_map -- [out_dir]` also writes both maps as CSV.

use vlc_ris::harness::{build_eve_grid, evaluate_baseline, evaluate_scenario, export_report, ExportFormat, Scenario};
use vlc_ris::secrecy::SecrecyReport;

fn show(title: &str, r: &SecrecyReport, res: usize) {
    println!("{title}: area C_s = {:.4} bits/use", r.area_c_s);
    // Rows run along y, so print the last row first to put +y at the top.
    for row in r.c_s_values.chunks(res).rev() {
        let line: Vec<String> = row.iter().map(|c| format!("{c:5.2}")).collect();
        println!("  {}", line.join(" "));
    }
}

fn main() -> vlc_ris::Result<()> {
    let res = 9;
    let s = Scenario::default().with_ris_size(8)?;
    let grid = build_eve_grid(&s, res)?;
    let off = evaluate_baseline(&s, &grid)?;
    // Every element turned 45 degrees toward the far corner of the area.
    let yaw = vec![-std::f64::consts::FRAC_PI_4 + std::f64::consts::TAU; s.ris_size()];
    let on = evaluate_scenario(&s, &yaw, &grid)?;
    show("no RIS jamming", &off, res);
    show("RIS yaw -45 deg", &on, res);

    if let Some(dir) = std::env::args().nth(1) {
        std::fs::create_dir_all(&dir).map_err(|e| vlc_ris::Error::io(&dir, e))?;
        export_report(&off, format!("{dir}/baseline_map.csv"), ExportFormat::HeatmapCsv)?;
        export_report(&on, format!("{dir}/secrecy_map.csv"), ExportFormat::HeatmapCsv)?;
        println!("maps written to {dir}");
    }
    Ok(())
}
