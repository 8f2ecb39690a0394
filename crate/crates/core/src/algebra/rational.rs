//! Exact rationals. `BigRational` keeps values in lowest terms with a
//! positive denominator.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Writes a signed sum `c₁*m₁ ± c₂*m₂ …`. A unit coefficient is elided when
/// the monomial text is non-empty; an empty sum prints as `0`.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
