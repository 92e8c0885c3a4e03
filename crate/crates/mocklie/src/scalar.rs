//! Exact rational scalars.
//!
//! Everything in this crate is computed over ℚ with arbitrary-precision
//! reduced fractions, so equality checks are exact and every verdict is a
//! theorem about the input, not a statement up to tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// The base field: arbitrary-precision rationals, always stored reduced
/// with a positive denominator.
pub type Scalar = BigRational;

/// Shorthand for small rational constants in code and tests.
pub fn rat(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer shorthand.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
///
/// Rejects empty input, zero denominators and anything that is not an
/// optionally signed decimal integer on either side of the slash.
pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator: {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Renders a rational as `"p"` or `"p/q"`, never as a decimal.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact zero test through `num_traits`.
pub fn is_zero(x: &Scalar) -> bool {
    x.is_zero()
}
