//! Midpoint-radius intervals with an exact rational midpoint.
//!
//! A [`Ball`] `(mid, rad)` stands for every real `x` with `|x - mid| <= rad`.
//! Radii are `f64` upper bounds, inflated after each operation so rounding
//! never shrinks them. A ball with radius zero is an exact rational, and
//! arithmetic on exact balls stays exact.
//!
//! Midpoints of inexact balls are rounded once their bit length grows past a
//! threshold; the rounding error is folded into the radius.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{EvalError, Result};
use crate::rational::{abs_upper, inflate, render, Rational};

const ROUND_TRIGGER_BITS: u64 = 1200;
const ROUND_KEEP_BITS: i64 = 320;

#[derive(Clone, Debug, PartialEq)]
pub struct Ball {
    mid: Rational,
    rad: f64,
}

impl Ball {
    pub fn exact(mid: Rational) -> Self {
        Ball { mid, rad: 0.0 }
    }

    pub fn new(mid: Rational, rad: f64) -> Self {
        assert!(rad >= 0.0 && !rad.is_nan(), "radius must be a non-negative number");
        Ball { mid, rad }.rounded()
    }

    pub fn mid(&self) -> &Rational {
        &self.mid
    }

    pub fn rad(&self) -> f64 {
        self.rad
    }

    pub fn is_exact(&self) -> bool {
        self.rad == 0.0
    }

    /// Upper bound on `|x|` over the ball.
    pub fn mag(&self) -> f64 {
        inflate(abs_upper(&self.mid) + self.rad)
    }

    /// Widens the radius by `extra`.
    pub fn widen(&self, extra: f64) -> Self {
        Ball::new(self.mid.clone(), inflate(self.rad + extra))
    }

    pub fn contains_zero(&self) -> bool {
        if self.mid.is_zero() {
            return true;
        }
        // |mid| <= rad, checked without trusting a lossy conversion of mid.
        self.rad > 0.0 && crate::rational::from_f64(self.rad) >= self.mid.abs()
    }

    pub fn div(&self, other: &Ball) -> Result<Ball> {
        if other.is_exact() {
            if other.mid.is_zero() {
                return Err(EvalError::DivisionByZero("exact zero divisor".into()));
            }
            let mid = &self.mid / &other.mid;
            let rad = if self.rad == 0.0 { 0.0 } else { inflate(self.rad / lower_abs(&other.mid)) };
            return Ok(Ball::new(mid, rad));
        }
        let b = lower_abs(&other.mid);
        if other.rad >= b {
            return Err(EvalError::PrecisionLoss(format!(
                "divisor ball {} contains zero",
                other
            )));
        }
        let mid = &self.mid / &other.mid;
        let q = abs_upper(&mid);
        let rad = inflate(inflate(self.rad + q * other.rad) / deflate(b - other.rad));
        Ok(Ball::new(mid, rad))
    }

    /// Rounds the midpoint to about 320 significant bits once it has grown
    /// large, even for an exact ball; the error moves into the radius.
    pub fn approx(self) -> Self {
        self.round_mid()
    }

    fn rounded(self) -> Self {
        if self.rad == 0.0 {
            return self;
        }
        self.round_mid()
    }

    fn round_mid(self) -> Self {
        let bits = self.mid.numer().bits() + self.mid.denom().bits();
        if bits <= ROUND_TRIGGER_BITS {
            return self;
        }
        let scale_exp = ROUND_KEEP_BITS - (self.mid.numer().bits() as i64 - self.mid.denom().bits() as i64);
        let (num, den) = if scale_exp >= 0 {
            (self.mid.numer() << scale_exp as usize, self.mid.denom().clone())
        } else {
            (self.mid.numer().clone(), self.mid.denom() << (-scale_exp) as usize)
        };
        let (quot, _) = num.div_mod_floor(&den);
        let one = BigInt::from(1);
        let new_mid = if scale_exp >= 0 {
            Rational::new(quot, one << scale_exp as usize)
        } else {
            Rational::from_integer(quot << (-scale_exp) as usize)
        };
        let err = abs_upper(&(&self.mid - &new_mid));
        Ball { mid: new_mid, rad: inflate(self.rad + err) }
    }
}

/// Lower bound on `|x|` as an `f64`.
fn lower_abs(x: &Rational) -> f64 {
    let v = abs_upper(x);
    deflate(v * (1.0 - 16.0 * f64::EPSILON))
}

fn deflate(v: f64) -> f64 {
    if v <= 0.0 {
        return 0.0;
    }
    (v * (1.0 - 4.0 * f64::EPSILON) - f64::MIN_POSITIVE).max(0.0)
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", render(&self.mid))
        } else {
            let approx = num_traits::ToPrimitive::to_f64(&self.mid).unwrap_or(f64::NAN);
            write!(f, "{approx:e} +/- {:.3e}", self.rad)
        }
    }
}

impl Add for &Ball {
    type Output = Ball;
    fn add(self, rhs: &Ball) -> Ball {
        let rad = if self.rad == 0.0 && rhs.rad == 0.0 { 0.0 } else { inflate(self.rad + rhs.rad) };
        Ball::new(&self.mid + &rhs.mid, rad)
    }
}

impl Sub for &Ball {
    type Output = Ball;
    fn sub(self, rhs: &Ball) -> Ball {
        let rad = if self.rad == 0.0 && rhs.rad == 0.0 { 0.0 } else { inflate(self.rad + rhs.rad) };
        Ball::new(&self.mid - &rhs.mid, rad)
    }
}

impl Mul for &Ball {
    type Output = Ball;
    fn mul(self, rhs: &Ball) -> Ball {
        let rad = if self.rad == 0.0 && rhs.rad == 0.0 {
            0.0
        } else {
            let a = abs_upper(&self.mid);
            let b = abs_upper(&rhs.mid);
            inflate(inflate(a * rhs.rad) + inflate(b * self.rad) + inflate(self.rad * rhs.rad))
        };
        Ball::new(&self.mid * &rhs.mid, rad)
    }
}

impl Neg for &Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        Ball { mid: -&self.mid, rad: self.rad }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, from_f64, int};

    #[test]
    fn exact_balls_stay_exact() {
        let a = Ball::exact(frac(1, 3));
        let b = Ball::exact(frac(2, 5));
        let p = &(&a * &b) + &a;
        assert!(p.is_exact());
        assert_eq!(p.mid(), &(frac(2, 15) + frac(1, 3)));
        assert_eq!(a.div(&b).unwrap(), Ball::exact(frac(5, 6)));
    }

    #[test]
    fn product_radius_encloses() {
        let a = Ball::new(int(2), 0.5);
        let b = Ball::new(int(3), 0.25);
        let p = &a * &b;
        // extremes: 2.5 * 3.25 = 8.125 and 1.5 * 2.75 = 4.125
        assert!(p.rad() >= 2.125);
    }

    #[test]
    fn division_by_zero_and_precision_loss() {
        let a = Ball::exact(int(1));
        assert!(matches!(a.div(&Ball::exact(int(0))), Err(EvalError::DivisionByZero(_))));
        assert!(matches!(a.div(&Ball::new(frac(1, 10), 0.2)), Err(EvalError::PrecisionLoss(_))));
    }

    #[test]
    fn rounding_keeps_enclosure() {
        let mut big = Rational::from_integer(BigInt::from(1));
        for k in 2..400 {
            big += frac(1, k * k + 1);
        }
        let exact = big.clone();
        let b = Ball::new(big, 1e-40);
        assert!(b.mid().numer().bits() + b.mid().denom().bits() < ROUND_TRIGGER_BITS);
        let diff = (b.mid() - &exact).abs();
        assert!(diff <= from_f64(b.rad()));
    }

    #[test]
    fn contains_zero_checks_radius() {
        assert!(Ball::new(frac(1, 100), 0.1).contains_zero());
        assert!(!Ball::new(frac(1, 2), 0.1).contains_zero());
    }
}
