//! Exact solver for simple stochastic games with few coin toss positions.
//!
//! A simple stochastic game has Max, Min and coin toss positions, each with
//! two outgoing arcs, plus a GOAL terminal Max wants to reach. This crate
//! computes the exact value of every position as a fraction, together with
//! optimal positional strategies, in time `O(r 2^r (r log r + n))` for `n`
//! positions of which `r` are coin tosses (counting arithmetic on
//! `O(r)`-bit numbers as unit cost).
//!
//! The pieces:
//! * [`game`]: the game model and the `.ssg` text format.
//! * [`numeric`]: dyadic fixed-point values and bounded-denominator
//!   rational recovery.
//! * [`dgg`]: retrograde analysis of the deterministic game obtained by
//!   freezing coin toss positions.
//! * [`solver`]: modified value iteration, timed values, classical value
//!   iteration, and the exact pipeline [`solver::solve`].
//! * [`oracle`]: brute-force ground truth for testing.
//! * [`generators`]: the extremal family, chains, and seeded random games.
//! * [`cli`]: the `ssg` command-line front end.
//!
//! ```
//! use ssg_core::{parse_game, solve, SolveOptions};
//!
//! let game = parse_game("ssg 2 1\n1 AVE 0 2\n2 MIN 2 2\n").unwrap();
//! let solution = solve(&game, &SolveOptions::default()).unwrap();
//! assert_eq!(solution.to_text(false), "value 0 1/1\nvalue 1 1/2\nvalue 2 0/1\n");
//! ```

pub mod cli;
pub mod dgg;
pub mod game;
pub mod generators;
pub mod numeric;
pub mod oracle;
pub mod solver;

pub use game::{parse_game, validate, Game, PositionKind, PositionalStrategy, Slot, GOAL};
pub use numeric::{min_rational_geq, Dyadic, Rational};
pub use solver::{
    iteration_budget, solve, timed_values, BudgetMode, Rounding, Solution, SolveError, SolveOptions,
    ValueVector,
};
