//! Exact rational scalars. No floating point anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The scalar type of the whole crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Exact integer value; panics if `x` is not an integer.
pub fn to_bigint(x: &Q) -> BigInt {
    assert!(is_integer(x), "expected integer, got {x}");
    x.numer().clone()
}

pub fn to_i64(x: &Q) -> i64 {
    use num_traits::ToPrimitive;
    to_bigint(x).to_i64().expect("integer out of i64 range")
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_q(x: &Q) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` (with optional sign).
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| format!("bad rational `{s}`"))?;
    let d: BigInt = den.parse().map_err(|_| format!("bad rational `{s}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Q::new(n, d))
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_format_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let x = parse_q(s).unwrap();
            assert_eq!(format_q(&x), s);
        }
        assert_eq!(format_q(&parse_q("4/2").unwrap()), "2");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }
}
