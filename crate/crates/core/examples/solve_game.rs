//! Solve a game given as a `.ssg` file, or a built-in example.
//!
//! cargo run --example solve_game [-- path/to/game.ssg]

use ssg_core::{parse_game, solve, SolveOptions};

const DEFAULT: &str = "\
# Max at 3 chooses between a fair coin and a Min position
ssg 4 2
1 AVE 0 4
2 AVE 1 4
3 MAX 2 4
4 MIN 0 4
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).expect("readable game file"),
        None => DEFAULT.to_string(),
    };
    let game = parse_game(&text).unwrap_or_else(|e| panic!("bad game: {e}"));
    let solution = solve(&game, &SolveOptions::default()).expect("solvable");
    println!(
        "{} positions, {} coins, {} iterations at {} bits",
        game.n(),
        game.r(),
        solution.iterations_run,
        solution.precision
    );
    print!("{solution}");
}
