use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. `Ratio` keeps the value reduced with a
/// positive denominator, so structural equality is value equality.
pub type Rational = BigRational;

/// Parses `"n"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Decode(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::Decode(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(num, den))
        }
    }
}
