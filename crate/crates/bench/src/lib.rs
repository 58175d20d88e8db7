//! Workloads shared by the benchmarks.

use moore_core::lab::sweep::{random_mealy, random_moore};
use moore_core::{Alphabet, MealyMachine, MooreMachine};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// A deterministic batch of random Mealy machines over `{0,1}`.
pub fn mealy_batch(count: usize, states: usize, seed: u64) -> Vec<MealyMachine> {
    let mut rng = StdRng::seed_from_u64(seed);
    let bin = Alphabet::binary();
    (0..count)
        .map(|_| random_mealy(&mut rng, &bin, &bin, states))
        .collect()
}

/// Moore counterpart of [`mealy_batch`].
pub fn moore_batch(count: usize, states: usize, seed: u64) -> Vec<MooreMachine> {
    let mut rng = StdRng::seed_from_u64(seed);
    let bin = Alphabet::binary();
    (0..count)
        .map(|_| random_moore(&mut rng, &bin, &bin, states))
        .collect()
}
