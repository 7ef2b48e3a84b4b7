//! Helpers around `BigRational`, the exact scalar type used everywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Formats as `n` for integers and `n/d` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/d` with an optional leading sign. Whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Option<Rational> {
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

fn exact_nth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_nth_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// `base^exponent` when the result is rational, `None` otherwise.
///
/// Real roots only: negative bases need an odd root index.
pub fn rational_pow(base: &Rational, exponent: &Rational) -> Option<Rational> {
    if exponent.is_zero() {
        return Some(Rational::one());
    }
    if base.is_zero() {
        return if exponent.is_positive() { Some(Rational::zero()) } else { None };
    }
    let root = exponent.denom().to_u32()?;
    let num = exact_nth_root(base.numer(), root)?;
    let den = exact_nth_root(base.denom(), root)?;
    let rooted = Rational::new(num, den);
    let power = exponent.numer();
    let magnitude = power.abs().to_usize()?;
    let raised = num_traits::pow(rooted, magnitude);
    if power.is_negative() {
        Some(raised.recip())
    } else {
        Some(raised)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(parse_rational(" 7 "), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(12)), "12");
    }

    #[test]
    fn exact_powers() {
        assert_eq!(rational_pow(&rat(9, 4), &rat(1, 2)), Some(rat(3, 2)));
        assert_eq!(rational_pow(&rat(9, 4), &rat(-3, 2)), Some(rat(8, 27)));
        assert_eq!(rational_pow(&int(-8), &rat(1, 3)), Some(int(-2)));
        assert_eq!(rational_pow(&int(-4), &rat(1, 2)), None);
        assert_eq!(rational_pow(&int(2), &rat(1, 2)), None);
        assert_eq!(rational_pow(&int(6), &int(0)), Some(int(1)));
        assert_eq!(rational_pow(&int(0), &int(-1)), None);
    }

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
