//! Steer the RIS at an eavesdropper whose position is known.

use vlc_ris::harness::evaluate::{evaluate_baseline, eve_sinr};
use vlc_ris::harness::{bob_snr_cancelled, Scenario};
use vlc_ris::optimizer::optimize_known_eve;
use vlc_ris::secrecy::secrecy_capacity_cancelled;
use vlc_ris::Vec3;

fn main() -> vlc_ris::Result<()> {
    let gamma_m = bob_snr_cancelled(&Scenario::default())?;
    for k in [4, 8, 16, 32] {
        let s = Scenario::default().with_ris_size(k)?;
        let eve = s.eve_pose(Vec3::new(1.5, -1.5, s.bob.position.z));
        let run = optimize_known_eve(&s, &eve)?;
        let c_on = secrecy_capacity_cancelled(gamma_m, eve_sinr(&s, &run.best_yaw, &eve)?);
        let c_off = evaluate_baseline(&s, std::slice::from_ref(&eve))?.c_s_values[0];
        let yaw_deg: Vec<String> = run
            .best_yaw
            .iter()
            .take(4)
            .map(|y| format!("{:.1}", y.to_degrees()))
            .collect();
        println!(
            "K = {k:2}: g = {:.4e}, C_s {c_off:.3} -> {c_on:.3} bits/use, yaw[..4] = [{}] deg, {} evaluations",
            (-run.best_value).sqrt(),
            yaw_deg.join(", "),
            run.evaluations
        );
    }
    Ok(())
}
