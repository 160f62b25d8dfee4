//! Exact rational scalars and their textual form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

use crate::LinalgError;

/// The scalar field of the whole workspace: arbitrary-precision rationals.
pub type Q = BigRational;

/// The integer `n` as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The fraction `n / d` in lowest terms. Panics if `d == 0`.
pub fn qf(n: i64, d: i64) -> Q {
    assert!(d != 0, "zero denominator");
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Zero.
pub fn zero() -> Q {
    Q::zero()
}

/// One.
pub fn one() -> Q {
    Q::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into an exact rational.
pub fn parse_q(text: &str) -> Result<Q, LinalgError> {
    let bad = || LinalgError::Parse(text.to_string());
    let trimmed = text.trim();
    match trimmed.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n = BigInt::from_str(trimmed).map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

/// Formats a rational as `"num/den"` with a positive denominator, always
/// including the denominator so the output is uniform.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "0/1", "5/1"] {
            assert_eq!(format_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(parse_q("6/8").unwrap(), qf(3, 4));
        assert_eq!(parse_q(" 12 ").unwrap(), q(12));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }
}
