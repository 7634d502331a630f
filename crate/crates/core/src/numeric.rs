//! Dyadic fixed-point values in `[0, 1]`, exact rationals, and recovery of a
//! bounded-denominator fraction from a dyadic approximation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact fraction in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("precision mismatch: {left} vs {right} bits")]
pub struct PrecisionMismatch {
    pub left: u32,
    pub right: u32,
}

/// The number `mantissa / 2^precision`.
///
/// Equality and ordering are numeric, so `1p1` and `2p2` compare equal.
/// Values built through the public constructors lie in `[0, 1]`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    mantissa: BigUint,
    precision: u32,
}

impl Dyadic {
    pub fn zero(precision: u32) -> Self {
        Dyadic { mantissa: BigUint::zero(), precision }
    }

    pub fn one(precision: u32) -> Self {
        Dyadic { mantissa: BigUint::one() << precision, precision }
    }

    /// `None` if the value would exceed 1.
    pub fn new(mantissa: BigUint, precision: u32) -> Option<Self> {
        (mantissa <= BigUint::one() << precision).then_some(Dyadic { mantissa, precision })
    }

    pub fn from_u64(mantissa: u64, precision: u32) -> Option<Self> {
        Self::new(BigUint::from(mantissa), precision)
    }

    /// Largest dyadic at `precision` bits that does not exceed `x`.
    /// `x` is clamped to `[0, 1]`.
    pub fn floor_of(x: &Rational, precision: u32) -> Self {
        if x <= &Rational::zero() {
            return Dyadic::zero(precision);
        }
        if x >= &Rational::one() {
            return Dyadic::one(precision);
        }
        let scaled = x.numer() << precision as usize;
        let m = scaled.div_floor(x.denom());
        Dyadic { mantissa: m.to_biguint().expect("non-negative"), precision }
    }

    pub fn mantissa(&self) -> &BigUint {
        &self.mantissa
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.mantissa.bits() == u64::from(self.precision) + 1
            && self.mantissa.trailing_zeros() == Some(u64::from(self.precision))
    }

    /// Same value at a higher precision. Panics if `precision` is lower.
    pub fn widen(&self, precision: u32) -> Dyadic {
        assert!(precision >= self.precision, "cannot narrow a dyadic");
        Dyadic { mantissa: &self.mantissa << (precision - self.precision) as usize, precision }
    }

    /// Round down to `precision` bits (or widen, which is exact).
    pub fn round_down(&self, precision: u32) -> Dyadic {
        if precision >= self.precision {
            self.widen(precision)
        } else {
            Dyadic { mantissa: &self.mantissa >> (self.precision - precision) as usize, precision }
        }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.mantissa.clone()), BigInt::one() << self.precision as usize)
    }

    /// `(a + b) / 2` rounded down to the shared precision.
    pub fn avg_floor(a: &Dyadic, b: &Dyadic) -> Result<Dyadic, PrecisionMismatch> {
        check_precision(a, b)?;
        Ok(Dyadic { mantissa: (&a.mantissa + &b.mantissa) >> 1usize, precision: a.precision })
    }

    /// `(a + b) / 2` exactly, one bit more precise than the inputs.
    pub fn exact_avg(a: &Dyadic, b: &Dyadic) -> Result<Dyadic, PrecisionMismatch> {
        check_precision(a, b)?;
        Ok(Dyadic { mantissa: &a.mantissa + &b.mantissa, precision: a.precision + 1 })
    }
}

fn check_precision(a: &Dyadic, b: &Dyadic) -> Result<(), PrecisionMismatch> {
    if a.precision == b.precision {
        Ok(())
    } else {
        Err(PrecisionMismatch { left: a.precision, right: b.precision })
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.precision.cmp(&other.precision) {
            Ordering::Equal => self.mantissa.cmp(&other.mantissa),
            Ordering::Less => self.widen(other.precision).mantissa.cmp(&other.mantissa),
            Ordering::Greater => self.mantissa.cmp(&other.widen(self.precision).mantissa),
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}p{}", self.mantissa, self.precision)
    }
}

/// Formats a rational as `<numerator>/<denominator>`, also for integers.
pub struct Fraction<'a>(pub &'a Rational);

impl fmt::Display for Fraction<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Parses `<numerator>/<denominator>` (or a bare integer).
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    (!d.is_zero()).then(|| Rational::new(n, d))
}

/// The smallest fraction `a/b >= v` with `1 <= b <= max_den`, in lowest terms.
///
/// Walks the Stern–Brocot tree toward `v`, taking whole runs of same-direction
/// steps at once, so the cost is proportional to the number of partial
/// quotients of `v` rather than the depth of the tree. Throughout,
/// `lo < v <= hi` and `lo`, `hi` are Farey neighbours; once their mediant's
/// denominator exceeds `max_den` nothing with an admissible denominator lies
/// strictly between them, so `hi` is the answer.
pub fn min_rational_geq(v: &Dyadic, max_den: &BigUint) -> Rational {
    assert!(!max_den.is_zero(), "denominator bound must be positive");
    if v.is_zero() {
        return Rational::zero();
    }
    let scale = BigUint::one() << v.precision as usize;
    let m = &v.mantissa;
    let (mut lo_n, mut lo_d) = (BigUint::zero(), BigUint::one());
    let (mut hi_n, mut hi_d) = (BigUint::one(), BigUint::one());
    loop {
        // hi - v, scaled by hi_d * 2^p; zero means hi is exactly v
        let hi_gap = &hi_n * &scale - m * &hi_d;
        if hi_gap.is_zero() {
            break;
        }
        // v - lo, scaled by lo_d * 2^p; positive by the invariant
        let lo_gap = m * &lo_d - &lo_n * &scale;

        // Move hi toward lo while it stays >= v.
        let mut k1 = &hi_gap / &lo_gap;
        if max_den >= &hi_d {
            k1 = k1.min((max_den - &hi_d) / &lo_d);
        } else {
            k1 = BigUint::zero();
        }
        if !k1.is_zero() {
            hi_n += &k1 * &lo_n;
            hi_d += &k1 * &lo_d;
            continue;
        }

        // Move lo toward hi while it stays < v: k * hi_gap < lo_gap.
        let mut k2 = (&lo_gap - 1u32) / &hi_gap;
        if max_den >= &lo_d {
            k2 = k2.min((max_den - &lo_d) / &hi_d);
        } else {
            k2 = BigUint::zero();
        }
        if k2.is_zero() {
            break;
        }
        lo_n += &k2 * &hi_n;
        lo_d += &k2 * &hi_d;
    }
    Rational::new(BigInt::from(hi_n), BigInt::from(hi_d))
}
