//! Small building blocks shared by identity forms.

use num_traits::One;

use crate::error::Result;
use crate::eval::{Ctx, Val};
use crate::rational::{pow, sign, Rational};

/// `n(n+1)/2`.
pub fn tri(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// `n^2`, as a valuation bound.
pub(crate) fn square(n: i64) -> i64 {
    n * n
}

/// Identity map, as a valuation bound.
pub(crate) fn linear(n: i64) -> i64 {
    n
}

/// `(-1)^n x^n` or `x^n` as a constant.
pub(crate) fn power(c: &Ctx, x: &Rational, n: i64) -> Val {
    c.rat(&pow(x, n))
}

pub(crate) fn signed(c: &Ctx, n: i64) -> Val {
    c.rat(&sign(n))
}

pub(crate) fn one() -> Rational {
    Rational::one()
}

/// `(y/x; q)_n x^n = prod_{k<n} (x - y q^k)`, regular at `x = 0`.
pub(crate) fn scaled(c: &Ctx, x: &Rational, y: &Rational, n: i64) -> Val {
    c.lin_prod(x, y, 0, 1, n)
}

/// `x q^m / (1 - x q^m)`.
pub(crate) fn geo(c: &Ctx, x: &Rational, m: i64) -> Result<Val> {
    c.mono(x, m).div(&c.lin(&one(), x, m))
}

/// `a q^m / (1 - a q^m) - b q^m / (1 - b q^m)`.
pub(crate) fn geo_diff(c: &Ctx, a: &Rational, b: &Rational, m: i64) -> Result<Val> {
    Ok(geo(c, a, m)? - geo(c, b, m)?)
}

/// `1 - q^n`.
pub(crate) fn one_minus_qn(c: &Ctx, n: i64) -> Val {
    c.lin(&one(), &one(), n)
}

/// `(q; q)_n` in base `q^r`, i.e. `(q^r; q^r)_n`.
pub(crate) fn qfac_b(c: &Ctx, r: i64, n: i64) -> Val {
    c.poch_b(&one(), r, r, n)
}

/// `(a - b)(d - c)/(ad - b)`.
pub(crate) fn bem_prefactor(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<Rational> {
    let den = a * d - b;
    if num_traits::Zero::is_zero(&den) {
        return Err(crate::error::EvalError::DivisionByZero("ad - b".into()));
    }
    Ok((a - b) * (d - c) / den)
}

/// Harmonic-type sum `sum_{k=1}^n q^k / (x - q^k)`.
pub(crate) fn harmonic(c: &Ctx, x: &Rational, n: i64) -> Result<Val> {
    c.sum(1, n, |k| c.q_pow(k).div(&c.lin(x, &one(), k)))
}

/// Valuation bound for sums that only converge at a point.
pub(crate) fn flat(_: i64) -> i64 {
    0
}
