//! Produce instances from each generator family.

use ssg_core::generators::{Family, GeneratorSpec};

fn main() {
    for family in [Family::Extremal, Family::Chain, Family::Random { max_count: 2, min_count: 2, seed: 42 }] {
        let spec = GeneratorSpec { family, n: 7, r: 3 };
        println!("{}", spec.to_ssg().unwrap());
    }
}
