//! Exact rational scalars. Every numeric comparison in this crate is an
//! equality test on `Rat`, never a tolerance check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational. `num_rational` keeps values reduced with a
/// positive denominator, which makes structural equality exact equality.
pub type Rat = BigRational;

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// An integer as a rational.
pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// `base^exp` with Laurent (possibly negative) exponents.
/// Returns `None` exactly when `base == 0` and `exp < 0`.
pub fn pow_checked(base: &Rat, exp: i64) -> Option<Rat> {
    if exp == 0 {
        return Some(Rat::one());
    }
    if base.is_zero() {
        return if exp < 0 { None } else { Some(Rat::zero()) };
    }
    let mut result = Rat::one();
    let mut square = base.clone();
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            result = result * &square;
        }
        e >>= 1;
        if e > 0 {
            square = &square * &square;
        }
    }
    if exp < 0 {
        result = result.recip();
    }
    Some(result)
}

/// `base^exp` for nonnegative exponents.
pub fn pow(base: &Rat, exp: u64) -> Rat {
    pow_checked(base, exp as i64).expect("nonnegative exponent cannot fail")
}
