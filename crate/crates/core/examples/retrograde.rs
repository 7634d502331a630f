//! Solve the deterministic game obtained by freezing coins at fixed payoffs.

use ssg_core::dgg::{solve_dgg, DggView};
use ssg_core::{parse_game, Rational};

fn main() {
    let game = parse_game(
        "ssg 6 2\n\
         1 AVE 0 6\n\
         2 AVE 1 6\n\
         3 MAX 1 2\n\
         4 MIN 3 2\n\
         5 MIN 5 4\n\
         6 MAX 6 5\n",
    )
    .unwrap();
    let payoffs = [Rational::new(3.into(), 4.into()), Rational::new(1.into(), 4.into())];
    let solution = solve_dgg(DggView::new(&game, &payoffs));
    let values = solution.resolve(&payoffs, &Rational::from_integer(0.into()), &Rational::from_integer(1.into()));
    for (k, v) in values.iter().enumerate() {
        let witness = solution.witness(k).map_or("-".to_string(), |s| s.index().to_string());
        println!("position {k}: {:?} value {v} witness slot {witness}", game.kind(k));
    }
    println!("assignment order {:?}", solution.assignment_order());
}
