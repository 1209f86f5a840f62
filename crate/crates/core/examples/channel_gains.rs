//! Direct and single-bounce DC gains in the default room, and the SNRs they give.

use vlc_ris::channel::{los_gain, optical_snr, reflected_element_gain};
use vlc_ris::geometry::link_angles;
use vlc_ris::harness::Scenario;
use vlc_ris::Vec3;

fn main() -> vlc_ris::Result<()> {
    let s = Scenario::default();
    let link = link_angles(&s.alice, &s.bob)?;
    let h_b = los_gain(&s.alice, &s.alice_emitter, &s.bob, &s.bob_receiver)?;
    println!(
        "Alice -> Bob: d = {:.4} m, phi = {:.2} deg, psi = {:.2} deg",
        link.d,
        link.phi.to_degrees(),
        link.psi.to_degrees()
    );
    println!(
        "  h_B = {h_b:.6e}, SNR = {:.2} dB",
        10.0 * optical_snr(h_b, s.p_t(), s.sigma_b)?.log10()
    );

    println!("\nEve positions on the desk plane:");
    for x in [0.0, 0.5, 1.0, 1.5, 2.0, 2.5] {
        let eve = s.eve_pose(Vec3::new(x, -x, s.bob.position.z));
        let h = los_gain(&s.alice, &s.alice_emitter, &eve, &s.eve_receiver)?;
        println!("  ({x:.1}, {:.1}): h_E = {h:.4e}", -x);
    }

    // Jammer -> first RIS element -> Bob, with the element at zero yaw.
    let elem = s.ris.elements[0];
    let dh = reflected_element_gain(
        &s.jammer.pose,
        &s.jammer_emitter,
        &elem,
        &s.ris.element_params,
        &s.bob,
        &s.bob_receiver,
    )?;
    println!("\nJammer -> element 0 -> Bob: dH = {dh:.4e}");
    Ok(())
}
