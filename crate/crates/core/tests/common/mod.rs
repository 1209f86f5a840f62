//! Plain-array reference formulas, written without the library's geometry types.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use vlc_ris::channel::{EmitterParams, ReceiverParams, SurfaceElementParams};
use vlc_ris::{Pose, Vec3};

pub type V = [f64; 3];

pub fn sub(a: V, b: V) -> V {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn dot(a: V, b: V) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn dist(a: V, b: V) -> f64 {
    dot(sub(a, b), sub(a, b)).sqrt()
}

fn arr(v: Vec3) -> V {
    [v.x, v.y, v.z]
}

/// cos of the angle between `n` and the ray from `from` to `to`.
fn cos_between(n: V, from: V, to: V) -> f64 {
    dot(n, sub(to, from)) / (dist(from, to) * dot(n, n).sqrt())
}

pub fn lambert_m(half_angle: f64) -> f64 {
    (0.5f64).ln() / half_angle.cos().ln()
}

pub fn concentrator(n: f64, fov: f64) -> f64 {
    (n / fov.sin()).powi(2)
}

#[allow(clippy::too_many_arguments)]
pub fn los(tx: V, n_tx: V, half: f64, rx: V, n_rx: V, area: f64, resp: f64, fov: f64, n: f64) -> f64 {
    let cphi = cos_between(n_tx, tx, rx);
    let cpsi = cos_between(n_rx, rx, tx);
    if cphi < 0.0 || cpsi < 0.0 || cpsi.clamp(-1.0, 1.0).acos() > fov {
        return 0.0;
    }
    let m = lambert_m(half);
    let d = dist(tx, rx);
    let g = concentrator(n, fov);
    (m + 1.0) * area * resp / (2.0 * std::f64::consts::PI * d * d) * g * cphi.powf(m) * cpsi
}

#[allow(clippy::too_many_arguments)]
pub fn reflected(
    tx: V,
    n_tx: V,
    half: f64,
    w: V,
    n_w: V,
    rho: f64,
    dw: f64,
    rx: V,
    n_rx: V,
    area: f64,
    resp: f64,
    fov: f64,
    n: f64,
) -> f64 {
    let cphi = cos_between(n_tx, tx, w);
    let calpha = cos_between(n_w, w, tx);
    let cbeta = cos_between(n_w, w, rx);
    let cpsi = cos_between(n_rx, rx, w);
    if cphi < 0.0 || calpha < 0.0 || cbeta < 0.0 || cpsi < 0.0 || cpsi.clamp(-1.0, 1.0).acos() > fov {
        return 0.0;
    }
    let m = lambert_m(half);
    let (d1, d2) = (dist(tx, w), dist(w, rx));
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    (m + 1.0) * area * resp / (2.0 * pi2 * d1 * d1 * d2 * d2)
        * concentrator(n, fov)
        * rho
        * dw
        * cphi.powf(m)
        * calpha
        * cbeta
        * cpsi
}

pub fn sinr(h: f64, g: f64, pt: f64, pj: f64, sigma: f64) -> f64 {
    (h * pt).powi(2) / (sigma.powi(2) + (g * pj).powi(2))
}

pub fn secrecy(gm: f64, ge: f64) -> f64 {
    if gm <= ge {
        0.0
    } else {
        0.5 * ((1.0 + gm).log2() - (1.0 + ge).log2())
    }
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// One random, non-degenerate link configuration.
pub struct Geometry {
    pub tx: Pose,
    pub elem: Pose,
    pub rx: Pose,
    pub em: EmitterParams,
    pub se: SurfaceElementParams,
    pub rc: ReceiverParams,
}

fn unit(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        if v.norm() > 0.2 && v.norm() <= 1.0 {
            return v.normalized().unwrap();
        }
    }
}

fn point(rng: &mut ChaCha8Rng) -> Vec3 {
    Vec3::new(
        rng.gen_range(-2.5..2.5),
        rng.gen_range(-2.5..2.5),
        rng.gen_range(-2.0..2.0),
    )
}

/// Tx above the receiver and every normal aimed roughly between the other two
/// nodes, so most draws give non-zero gains.
pub fn random_geometry(rng: &mut ChaCha8Rng) -> Geometry {
    loop {
        let tx = point(rng);
        let rx = point(rng);
        let w = point(rng);
        if tx.z < rx.z + 0.5 || (tx - w).norm() < 0.3 || (w - rx).norm() < 0.3 {
            continue;
        }
        let toward = |from: Vec3, a: Vec3, b: Vec3| (a - from).normalized().unwrap() + (b - from).normalized().unwrap();
        let jitter = |rng: &mut ChaCha8Rng, v: Vec3| (v.normalized()? + unit(rng) * 0.4).normalized();
        let (Some(n_tx), Some(n_w), Some(n_rx)) = (
            jitter(rng, toward(tx, rx, w)),
            jitter(rng, toward(w, tx, rx)),
            jitter(rng, toward(rx, tx, w)),
        ) else {
            continue;
        };
        return Geometry {
            tx: Pose::new(tx, n_tx).unwrap(),
            elem: Pose::new(w, n_w).unwrap(),
            rx: Pose::new(rx, n_rx).unwrap(),
            em: EmitterParams::new(rng.gen_range(0.1..2.0), rng.gen_range(0.3..1.4)).unwrap(),
            se: SurfaceElementParams::new(rng.gen_range(0.1..1.0), rng.gen_range(1e-5..1e-3)).unwrap(),
            rc: ReceiverParams::new(
                rng.gen_range(1e-5..1e-3),
                rng.gen_range(0.3..1.0),
                rng.gen_range(0.5..1.5),
                rng.gen_range(1.0..2.0),
            )
            .unwrap(),
        };
    }
}

pub fn oracle_los(g: &Geometry) -> f64 {
    los(
        arr(g.tx.position),
        arr(g.tx.normal),
        g.em.half_angle,
        arr(g.rx.position),
        arr(g.rx.normal),
        g.rc.area,
        g.rc.responsivity,
        g.rc.fov,
        g.rc.refractive_index,
    )
}

pub fn oracle_reflected(g: &Geometry) -> f64 {
    reflected(
        arr(g.tx.position),
        arr(g.tx.normal),
        g.em.half_angle,
        arr(g.elem.position),
        arr(g.elem.normal),
        g.se.reflectivity,
        g.se.area,
        arr(g.rx.position),
        arr(g.rx.normal),
        g.rc.area,
        g.rc.responsivity,
        g.rc.fov,
        g.rc.refractive_index,
    )
}
