//! Exact timed values next to the rounded iterates and classical value
//! iteration on a game whose values are thirds, so no finite iterate hits
//! them exactly.

use ssg_core::generators::gen_random;
use ssg_core::solver::{unmodified_values, TimedValues};
use ssg_core::{solve, Rounding, SolveOptions};

fn row(label: &str, values: Vec<ssg_core::Rational>) {
    let cells: Vec<String> = values.iter().skip(1).map(|v| format!("{v:>9}")).collect();
    println!("{label:<10}{}", cells.join(""));
}

fn main() {
    let game = gen_random(6, 2, 2, 2, 24).unwrap();
    print!("{}", game.to_ssg());
    let bits = 8;
    let exact = TimedValues::new(&game, Rounding::Exact);
    let rounded = TimedValues::new(&game, Rounding::Floor(bits));
    let classic = unmodified_values(&game);
    for (t, ((e, f), c)) in exact.zip(rounded).zip(classic).enumerate().take(7) {
        println!("t = {t}");
        row("classical", c.to_rationals());
        row("timed", e.to_rationals());
        row("rounded", f.to_rationals());
    }
    row("value", solve(&game, &SolveOptions::default()).unwrap().values);
}
