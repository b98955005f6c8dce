//! Deterministic sample grids for the sampled check mode.
//!
//! The base grids are fixed so reports are reproducible without any
//! configuration; a seed deterministically extends the λ grid with
//! further small rationals. Callers filter singular loci themselves
//! (`λ = 0` where `1/λ` appears, `1 ± λx = 0` for the Laguerre
//! identity) — the generator only guarantees nonzero λ.

use alloc::vec::Vec;

use crate::exactalg::{rat, Rat};

/// Fixed nonzero λ samples used by every sampled check.
pub fn base_lambda_grid() -> Vec<Rat> {
    [(1, 2), (-1, 2), (1, 3), (-1, 3), (2, 5), (-3, 7)]
        .iter()
        .map(|&(p, q)| rat(p, q))
        .collect()
}

/// Fixed x samples for identities with an x parameter.
pub fn x_grid() -> Vec<Rat> {
    [(1, 2), (-1, 3), (2, 1), (5, 4)]
        .iter()
        .map(|&(p, q)| rat(p, q))
        .collect()
}

/// The base λ grid extended with `extra` seeded nonzero rationals with
/// small numerator and denominator. Duplicates are skipped, so the
/// result is a set; identical seeds give identical grids.
pub fn lambda_grid(seed: u64, extra: u32) -> Vec<Rat> {
    let mut grid = base_lambda_grid();
    let mut rng = SplitMix64::new(seed);
    let mut added = 0;
    while added < extra {
        let p = (rng.next_u64() % 19) as i64 - 9;
        let q = (rng.next_u64() % 9) as i64 + 1;
        if p == 0 {
            continue;
        }
        let candidate = rat(p, q);
        if grid.contains(&candidate) {
            continue;
        }
        grid.push(candidate);
        added += 1;
    }
    grid
}

/// Small deterministic PRNG (splitmix64). Kept local so that sampled
/// reports never change underneath a pinned seed, whatever happens to
/// external RNG crates.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}
