#![allow(dead_code)]

use ssg_core::generators::gen_random;
use ssg_core::Game;

/// Parameters of the `i`-th random test instance: n <= 12, r <= 4 and at
/// most 8 player positions, split between Max and Min.
pub fn sample_params(i: u64) -> (usize, usize, usize, usize, u64) {
    let mut x = i.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 0xD1B5_4A32_D192_ED03;
    let mut next = |bound: u64| {
        x ^= x >> 29;
        x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        x ^= x >> 32;
        x % bound
    };
    let r = next(5) as usize;
    let mut players = next(9) as usize;
    if r + players == 0 {
        players = 1;
    }
    let max_count = next(players as u64 + 1) as usize;
    (r + players, r, max_count, players - max_count, 1000 + i)
}

pub fn sample_game(i: u64) -> Game {
    let (n, r, max_count, min_count, seed) = sample_params(i);
    gen_random(n, r, max_count, min_count, seed).unwrap()
}

pub fn sample(count: u64) -> Vec<Game> {
    (0..count).map(sample_game).collect()
}
