//! The extremal family: every position has value 1, yet the timed values
//! approach 1 only as fast as the chance of a run of r tails.

use num_traits::{One, ToPrimitive};
use ssg_core::generators::gen_extremal;
use ssg_core::oracle::tails_run_prob;
use ssg_core::solver::TimedValues;
use ssg_core::{solve, Rounding, SolveOptions};

fn main() {
    let r = 4;
    let game = gen_extremal(6, r).unwrap();
    print!("{}", game.to_ssg());

    let solution = solve(&game, &SolveOptions::default()).unwrap();
    assert!(solution.values.iter().all(|v| v.is_one()));
    println!("all values are 1\n\n   t  value at coin {r}");
    for (t, v) in TimedValues::new(&game, Rounding::Exact).enumerate().take(65).step_by(8) {
        let value = v.get(r).to_rational();
        assert_eq!(value, tails_run_prob(t as u32, r));
        println!("{t:>4}  {value}  (~{:.4})", value.to_f64().unwrap());
    }
}
