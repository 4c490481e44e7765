//! Helpers around the arbitrary-precision rational scalar.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `x^k` for any integer `k`; panics on `0^k` with `k < 0`.
pub fn pow(x: &Rational, k: i64) -> Rational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        assert!(!x.is_zero(), "zero raised to a negative power");
        num_traits::pow(x.recip(), k.unsigned_abs() as usize)
    }
}

/// `(-1)^k`.
pub fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Upper bound on `|x|` as an `f64`.
pub fn abs_upper(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let v = x.abs().to_f64().unwrap_or(f64::INFINITY);
    inflate(v)
}

/// Nudges a non-negative float upward so that rounding in the conversion or in
/// one arithmetic step cannot make it an underestimate.
pub fn inflate(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    v * (1.0 + 4.0 * f64::EPSILON) + f64::MIN_POSITIVE
}

/// Exact rational value of a finite float.
pub fn from_f64(v: f64) -> Rational {
    Rational::from_float(v).unwrap_or_else(Rational::zero)
}

/// Parses `"p/q"`, `"-p/q"` or an integer.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Integer value of `x`, if it is one and fits.
pub fn as_i64(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Renders as `p/q`, or `p` for integers.
pub fn render(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse("3/6"), Some(frac(1, 2)));
        assert_eq!(parse(" -4 "), Some(int(-4)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
        assert_eq!(render(&frac(-2, 4)), "-1/2");
        assert_eq!(render(&int(7)), "7");
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow(&frac(2, 3), -2), frac(9, 4));
        assert_eq!(pow(&frac(2, 3), 0), int(1));
        assert_eq!(sign(3), int(-1));
        assert_eq!(sign(-2), int(1));
    }

    #[test]
    fn upper_bound_is_not_below() {
        let x = frac(1, 3);
        assert!(from_f64(abs_upper(&x)) >= x);
    }
}
