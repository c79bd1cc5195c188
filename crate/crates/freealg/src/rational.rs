//! Exact scalar arithmetic. Coefficients are arbitrary-precision rationals
//! kept in lowest terms with positive denominator.

use num::BigInt;

pub use num::BigRational as Rational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}
