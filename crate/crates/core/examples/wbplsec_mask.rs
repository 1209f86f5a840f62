//! Selective jamming of a message and its reconstruction at the legitimate receiver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vlc_ris::wbplsec::{apply_jamming, jammed_bits, jamming_power, reconstruct_message, select_jam_mask};

fn bits(b: &[bool]) -> String {
    b.iter().map(|&x| if x { '1' } else { '0' }).collect()
}

fn main() -> vlc_ris::Result<()> {
    let (n, m) = (32, 8);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let message: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mask = select_jam_mask(n, m, 42)?;
    let noise: Vec<bool> = (0..m).map(|_| rng.gen()).collect();

    let on_air = apply_jamming(&message, &mask, &noise)?;
    let restored = reconstruct_message(&on_air, &mask, &jammed_bits(&message, &mask)?)?;

    println!("jammed positions {:?}", mask.jammed_indices);
    println!("sent      {}", bits(&message));
    println!("on air    {}", bits(&on_air));
    println!("restored  {}", bits(&restored));
    assert_eq!(restored, message);

    for (n, m) in [(10, 1), (10, 5), (32, 8)] {
        println!("P_t = 1 W, M/N = {m}/{n}: P_j = {} W", jamming_power(1.0, n, m)?);
    }
    Ok(())
}
