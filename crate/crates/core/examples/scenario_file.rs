//! Scenario JSON: partial overrides, calibration and validation errors.

use vlc_ris::harness::parse_scenario;

fn main() {
    let docs = [
        ("defaults", "{}"),
        (
            "K = 20, jammer off to the side",
            r#"{"ris": {"size": 20}, "jammer": {"offset": 0.2}}"#,
        ),
        ("15 dB operating point", r#"{"noise": {"calibration": {"snr_db": 15}}}"#),
        (
            "Bob outside, typo'd key",
            r#"{"bob": {"position": [10, 0, 0]}, "ris": {"sise": 4}}"#,
        ),
        (
            "two bad fields",
            r#"{"bob": {"position": [10, 0, 0]}, "jam_fraction": 2}"#,
        ),
    ];
    for (label, json) in docs {
        match parse_scenario(json) {
            Ok(s) => println!(
                "{label}: K = {}, P_j = {} W, sigma_B = {:.3e}, sigma_E = {:.3e}",
                s.ris_size(),
                s.p_j(),
                s.sigma_b,
                s.sigma_e
            ),
            Err(e) => println!("{label}: {e}"),
        }
    }
}
