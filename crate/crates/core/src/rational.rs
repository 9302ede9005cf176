//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rational`]: an arbitrary precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` with an optional leading minus sign.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_text {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let q = ratio(6, -4);
        assert_eq!(format(&q), "-3/2");
        assert_eq!(format(&ratio(0, 5)), "0");
        assert_eq!(*ratio(0, 5).denom(), BigInt::from(1));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("7/5"), Some(ratio(7, 5)));
        assert_eq!(parse("-12"), Some(int(-12)));
        assert_eq!(parse("4/-6"), Some(ratio(-2, 3)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
