//! Seeded generators shared by unit tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sextica_poly::{c64, ComplexScalar};

pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn real(&mut self, half_width: f64) -> f64 {
        self.0.random_range(-half_width..half_width)
    }

    pub fn complex(&mut self, half_width: f64) -> ComplexScalar {
        c64(self.real(half_width), self.real(half_width))
    }

    pub fn real_complex(&mut self, half_width: f64) -> ComplexScalar {
        c64(self.real(half_width), 0.0)
    }
}
