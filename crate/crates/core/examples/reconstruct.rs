//! Recover exact fractions from dyadic approximations: the smallest fraction
//! at or above a value with a bounded denominator.

use num_bigint::{BigInt, BigUint};
use ssg_core::{min_rational_geq, Dyadic, Rational};

fn main() {
    let bits = 42;
    let max_den = BigUint::from(256u32);
    for (n, d) in [(1, 3), (5, 7), (16, 255), (100, 201)] {
        let exact = Rational::new(BigInt::from(n), BigInt::from(d));
        // an approximation from below, off by a few units in the last place
        let below = Dyadic::floor_of(&exact, bits);
        let below = Dyadic::new(below.mantissa() - 5u32, bits).unwrap();
        let recovered = min_rational_geq(&below, &max_den);
        println!("{exact:>8} ~ {below}  ->  {recovered}");
        assert_eq!(recovered, exact);
    }
}
