//! Seeded random rational sequences for the verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{rat, Rational};

/// `len` rationals with numerators in `-9..=9` and denominators in `1..=6`.
pub fn rationals(seed: u64, len: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=6))).collect()
}

/// Like [`rationals`] with the first entry forced to 1.
pub fn normalized(seed: u64, len: usize) -> Vec<Rational> {
    let mut v = rationals(seed, len);
    if let Some(first) = v.first_mut() {
        *first = rat(1, 1);
    }
    v
}
