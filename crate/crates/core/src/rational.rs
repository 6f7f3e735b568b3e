//! Exact rational helpers. Every bound and sparsity value is a `BigRational`;
//! on the wire they are `"p/q"` strings in lowest terms with `q > 0`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Smallest integer `>= q`.
pub fn ceil_int(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

/// Smallest integer `> q`.
pub fn strict_ceil_int(q: &Rational) -> BigInt {
    q.floor().to_integer() + BigInt::one()
}

/// `ceil(rho * n)` for a rational `rho`.
pub fn ceil_times(rho: &Rational, n: usize) -> usize {
    let v = ceil_int(&(rho * from_usize(n)));
    usize::try_from(v.max(BigInt::zero())).expect("fits in usize")
}

/// Canonical `p/q` rendering; integers keep the `/1`.
pub fn to_canonical(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("not a rational: {text:?}"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Whether `text` is in canonical form (lowest terms, positive denominator).
pub fn is_canonical(text: &str) -> bool {
    match (text.split_once('/'), parse(text)) {
        (Some((p, q)), Ok(v)) => {
            let (p, q) = (BigInt::from_str(p).ok(), BigInt::from_str(q).ok());
            matches!((p, q), (Some(p), Some(q)) if q.is_positive() && p.gcd(&q).is_one() && p == *v.numer())
        }
        _ => false,
    }
}

pub mod serde_str {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_canonical(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).map_err(de::Error::custom)
    }
}

pub mod serde_str_opt {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        q: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&to_canonical(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| parse(&t).map_err(de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        assert_eq!(to_canonical(&ratio(6, 4)), "3/2");
        assert_eq!(to_canonical(&ratio(3, -6)), "-1/2");
        assert_eq!(to_canonical(&int(6)), "6/1");
        assert_eq!(parse("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(is_canonical("3/2") && !is_canonical("6/4") && !is_canonical("3/-2"));
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil_int(&ratio(9, 2)), BigInt::from(5));
        assert_eq!(ceil_int(&int(6)), BigInt::from(6));
        assert_eq!(strict_ceil_int(&int(6)), BigInt::from(7));
        assert_eq!(strict_ceil_int(&ratio(21, 4)), BigInt::from(6));
        assert_eq!(ceil_int(&ratio(-3, 4)), BigInt::from(0));
        assert_eq!(ceil_times(&ratio(3, 5), 5), 3);
        assert_eq!(ceil_times(&ratio(2, 5), 6), 3);
        assert_eq!(ceil_times(&int(0), 6), 0);
    }
}
