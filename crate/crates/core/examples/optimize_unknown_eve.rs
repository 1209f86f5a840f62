//! One RIS configuration that minimizes the summed Eve rate over the whole area.

use vlc_ris::harness::{build_eve_grid, evaluate_baseline, unknown_eve_map, Scenario};

fn main() -> vlc_ris::Result<()> {
    let base = Scenario::default();
    let grid = build_eve_grid(&base, 11)?;
    let off = evaluate_baseline(&base, &grid)?;
    println!(
        "no RIS: area C_s = {:.4}, P_out(0.5) = {:.3}",
        off.area_c_s,
        off.outage(0.5)?
    );
    for k in [4, 8, 16, 32] {
        let s = base.with_ris_size(k)?;
        let (report, run) = unknown_eve_map(&s, &grid)?;
        println!(
            "K = {k:2}: area C_s = {:.4}, P_out(0.5) = {:.3}, objective {:.4} after {} iterations{}",
            report.area_c_s,
            report.outage(0.5)?,
            run.best_value,
            run.iterations(),
            if run.converged { "" } else { " (budget exhausted)" }
        );
    }
    Ok(())
}
