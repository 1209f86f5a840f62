//! How one element's yaw steers the reflected jamming toward a target.

use std::f64::consts::TAU;

use vlc_ris::harness::evaluate::eve_jamming_gain;
use vlc_ris::harness::Scenario;
use vlc_ris::ris::steering_alignment;
use vlc_ris::Vec3;

fn main() -> vlc_ris::Result<()> {
    let s = Scenario::default().with_ris_size(1)?;
    let target = s.eve_pose(Vec3::new(1.5, -1.5, s.bob.position.z));
    let elem = s.ris.elements[0];

    println!("yaw(deg)  lobe      g(yaw)");
    let mut best = (0.0, 0.0);
    for i in 0..72 {
        let yaw = i as f64 * TAU / 72.0;
        let lobe = steering_alignment(
            &elem,
            yaw,
            s.jammer.pose.position,
            target.position,
            s.ris.steering_exponent,
        );
        let g = eve_jamming_gain(&s, &[yaw], &target)?;
        if g > best.1 {
            best = (yaw, g);
        }
        if i % 4 == 0 {
            println!("{:8.1}  {lobe:.4}  {g:.4e}", yaw.to_degrees());
        }
    }
    println!(
        "\nbest of 72 samples: yaw = {:.1} deg, g = {:.4e}",
        best.0.to_degrees(),
        best.1
    );

    // Larger arrays add one term per element.
    for k in [4, 8, 16, 32] {
        let sk = Scenario::default().with_ris_size(k)?;
        let g = eve_jamming_gain(&sk, &vec![best.0; k], &target)?;
        println!("K = {k:2}, all elements at that yaw: g = {g:.4e}");
    }
    Ok(())
}
