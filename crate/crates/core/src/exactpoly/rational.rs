use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` with optional sign. Decimals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        BigInt::parse_bytes(t.trim().as_bytes(), 10)
            .ok_or_else(|| Error::Parse(format!("not a rational number: {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Always renders as `p/q`, e.g. `1/1`, `-3/2`, `0/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn is_one(r: &Rational) -> bool {
    r.is_one()
}
