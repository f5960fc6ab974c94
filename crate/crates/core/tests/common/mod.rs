#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use eur_hawking::state::BellParams;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform sample from the tetrahedron of physical Bell-diagonal states.
pub fn physical_bell(rng: &mut impl Rng) -> BellParams {
    loop {
        let b = BellParams::unchecked(
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        );
        if b.is_physical() {
            return b;
        }
    }
}

/// `a` uniform in squared amplitude over `[1/2, 1]`.
pub fn hawking_a(rng: &mut impl Rng) -> f64 {
    rng.gen_range(0.5f64..=1.0).sqrt()
}

/// Temperature ratio: a quarter exactly zero, the rest log-uniform on `[1e-2, 1e3]`.
pub fn temperature_ratio(rng: &mut impl Rng) -> f64 {
    if rng.gen_bool(0.25) {
        0.0
    } else {
        10f64.powf(rng.gen_range(-2.0..=3.0))
    }
}
