//! Compare the solver with exhaustive strategy enumeration on random games.

use ssg_core::generators::gen_random;
use ssg_core::oracle::enumerate_values;
use ssg_core::{solve, SolveOptions};

fn main() {
    let mut agree = 0;
    let total = 100;
    for seed in 0..total {
        let r = (seed % 4) as usize + 1;
        let game = gen_random(r + 7, r, 3, 4, seed).unwrap();
        let solved = solve(&game, &SolveOptions::default()).unwrap().values;
        let brute = enumerate_values(&game, 16).unwrap();
        if solved == brute {
            agree += 1;
        } else {
            println!("disagreement on seed {seed}:\n{}", game.to_ssg());
        }
    }
    println!("{agree}/{total} games agree");
}
