//! Iteration counts and working precision for a range of coin counts.

use ssg_core::solver::default_precision;
use ssg_core::{iteration_budget, BudgetMode};

fn main() {
    println!(" r  extremal    direct  bits");
    for r in [0, 1, 4, 6, 8, 10, 12, 16, 20] {
        println!(
            "{r:>2} {:>9} {:>9} {:>5}",
            iteration_budget(r, BudgetMode::Extremal).iterations,
            iteration_budget(r, BudgetMode::Direct).iterations,
            default_precision(r)
        );
    }
}
