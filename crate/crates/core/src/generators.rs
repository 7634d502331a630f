//! Instance families: the extremal game `E_{n,r}`, a deterministic chain,
//! and seeded random games.
//!
//! Random instances are reproducible across platforms and crate versions:
//! the generator is SplitMix64 (`rand_xoshiro::SplitMix64`) seeded with the
//! raw 64-bit seed, and a draw from `0..bound` is the high word of the
//! 128-bit product `next_u64() * bound`. Kinds are laid out by a
//! Fisher–Yates shuffle of `[MAX; max_count] ++ [MIN; min_count] ++
//! [AVE; r]` (for `i` from the last index down to 1, swap with a draw from
//! `0..=i`), then successors are drawn for positions `1..=n`, first slot
//! before second, each from `0..=n`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::game::{Game, PositionKind, GOAL};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("extremal family needs 1 <= r <= n (got n = {n}, r = {r})")]
    ExtremalParameters { n: usize, r: usize },
    #[error("need r <= n and n >= 1 (got n = {n}, r = {r})")]
    Parameters { n: usize, r: usize },
    #[error("kind counts do not add up: {max_count} + {min_count} + {r} != {n}")]
    CountMismatch { n: usize, r: usize, max_count: usize, min_count: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Extremal,
    Chain,
    Random { max_count: usize, min_count: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub r: usize,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Game, GenError> {
        match self.family {
            Family::Extremal => gen_extremal(self.n, self.r),
            Family::Chain => gen_chain(self.n, self.r),
            Family::Random { max_count, min_count, seed } => {
                gen_random(self.n, self.r, max_count, min_count, seed)
            }
        }
    }

    /// Comment line recording how the instance was produced.
    pub fn header(&self) -> String {
        match self.family {
            Family::Extremal => format!("# extremal n={} r={}\n", self.n, self.r),
            Family::Chain => format!("# chain n={} r={}\n", self.n, self.r),
            Family::Random { max_count, min_count, seed } => format!(
                "# random n={} r={} max={} min={} seed={}\n",
                self.n, self.r, max_count, min_count, seed
            ),
        }
    }

    /// `.ssg` text with the header comment.
    pub fn to_ssg(&self) -> Result<String, GenError> {
        Ok(self.header() + &self.generate()?.to_ssg())
    }
}

/// Coins `1..=r` (coin 1 to GOAL and coin `r`, coin `i` to coin `i-1` and
/// coin `r`) followed by Min positions `r+1..=n` with both arcs to GOAL.
pub fn gen_extremal(n: usize, r: usize) -> Result<Game, GenError> {
    if r < 1 || r > n {
        return Err(GenError::ExtremalParameters { n, r });
    }
    let positions = (1..=n)
        .map(|k| match k {
            1 => (PositionKind::Ave, [GOAL, r]),
            k if k <= r => (PositionKind::Ave, [k - 1, r]),
            _ => (PositionKind::Min, [GOAL, GOAL]),
        })
        .collect();
    Ok(Game::new(positions).expect("extremal construction is well formed"))
}

/// Min positions `n, n-1, ..., r+1` each pointing twice at the next lower
/// index, down to coins `r, ..., 1`, the last of which points twice at GOAL.
pub fn gen_chain(n: usize, r: usize) -> Result<Game, GenError> {
    if n == 0 || r > n {
        return Err(GenError::Parameters { n, r });
    }
    let positions = (1..=n)
        .map(|k| {
            let kind = if k <= r { PositionKind::Ave } else { PositionKind::Min };
            (kind, [k - 1, k - 1])
        })
        .collect();
    Ok(Game::new(positions).expect("chain construction is well formed"))
}

fn draw(rng: &mut SplitMix64, bound: u64) -> u64 {
    ((u128::from(rng.next_u64()) * u128::from(bound)) >> 64) as u64
}

pub fn gen_random(n: usize, r: usize, max_count: usize, min_count: usize, seed: u64) -> Result<Game, GenError> {
    if max_count + min_count + r != n {
        return Err(GenError::CountMismatch { n, r, max_count, min_count });
    }
    if n == 0 {
        return Err(GenError::Parameters { n, r });
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut kinds: Vec<PositionKind> = std::iter::repeat_n(PositionKind::Max, max_count)
        .chain(std::iter::repeat_n(PositionKind::Min, min_count))
        .chain(std::iter::repeat_n(PositionKind::Ave, r))
        .collect();
    for i in (1..kinds.len()).rev() {
        let j = draw(&mut rng, i as u64 + 1) as usize;
        kinds.swap(i, j);
    }
    let bound = n as u64 + 1;
    let positions = kinds
        .into_iter()
        .map(|kind| {
            let s1 = draw(&mut rng, bound) as usize;
            let s2 = draw(&mut rng, bound) as usize;
            (kind, [s1, s2])
        })
        .collect();
    Ok(Game::new(positions).expect("random construction is well formed"))
}
