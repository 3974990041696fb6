//! Exact rational scalars. Everything in this workspace computes over `Rat`;
//! floating point is never used.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reduced fraction n/d.
pub fn qq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Render as `p/q`, or plain `p` when the denominator is one.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((p, q)) => {
            let (p, q) = (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?);
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
    }
}

/// Exact integer extraction; panics if the value is not an integer.
pub fn expect_int(r: &Rat) -> BigInt {
    assert!(r.is_integer(), "expected an integer, got {}", rat_str(r));
    r.to_integer()
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denom_lcm(rs: &[Rat]) -> BigInt {
    let mut l = BigInt::one();
    for r in rs {
        l = num_integer::lcm(l, r.denom().abs());
    }
    l
}
