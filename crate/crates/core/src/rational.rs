//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_big(n: BigInt) -> Q {
    Q::from_integer(n)
}

/// Canonical `num/den` form; the denominator is always written, even when it is 1.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Human form: integers without a denominator.
pub fn display_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `n`, `-n` or `n/d`. Rejects zero denominators; the result is reduced.
pub fn parse_q(s: &str) -> Option<Q> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Q::new(num, den))
}

/// True when `s` is written in lowest terms with a positive denominator.
pub fn is_canonical_q(s: &str) -> bool {
    let Some(x) = parse_q(s) else { return false };
    match s.split_once('/') {
        Some((a, b)) => {
            let (Ok(a), Ok(b)) = (a.parse::<BigInt>(), b.parse::<BigInt>()) else {
                return false;
            };
            b.is_positive() && &a == x.numer() && &b == x.denom()
        }
        None => true,
    }
}
