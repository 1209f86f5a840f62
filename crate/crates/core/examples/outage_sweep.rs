//! Sweep RIS size and jamming share, then print P_out against the threshold.

use vlc_ris::harness::{run_sweep, Mode, Scenario, SweepSpec};

fn main() -> vlc_ris::Result<()> {
    let mode = match std::env::args().nth(1).as_deref() {
        Some(m) => m.parse()?,
        None => Mode::Unknown,
    };
    let spec = SweepSpec {
        ris_sizes: vec![4, 8, 16],
        jam_fractions: vec![0.5],
        thresholds: vec![0.0, 0.25, 0.5, 0.75, 0.9, 1.0],
        grid_resolution: 9,
        include_baseline: true,
    };
    let table = run_sweep(&Scenario::default(), &spec, mode)?;
    print!("{mode} Eve, T_h:");
    for t in &table.thresholds {
        print!("{t:7.2}");
    }
    println!();
    for cell in &table.cells {
        print!("K = {:2}, P_j = {:.1}", cell.ris_size, cell.p_j);
        for p in &cell.outage {
            print!("{p:7.3}");
        }
        println!("   (area C_s {:.3})", cell.report.area_c_s);
    }
    Ok(())
}
