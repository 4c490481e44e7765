//! Series kernel: Laurent series arithmetic and the q-combinatorial building
//! blocks (Pochhammer symbols, Gaussian binomials, Lambert series).

mod series;

pub use series::{LaurentSeries, Monomial};

use num_traits::{One, Zero};

use crate::error::{EvalError, Result};
use crate::rational::{int, Rational};

/// Default truncation order for series computations.
pub const DEFAULT_ORDER: i64 = 40;

/// Length of a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PochLength {
    Finite(u32),
    Infinite,
}

/// `(x; q)_n` as a series exact through `q^order`.
///
/// The infinite product keeps every factor `1 - x q^{x.exp + k}` whose
/// exponent is at most `order`; the rest are `1 + O(q^{order+1})`.
pub fn poch_series(x: &Monomial, n: PochLength, order: i64) -> Result<LaurentSeries> {
    poch_series_base(x, n, 1, order)
}

/// `(x; q^r)_n` as a series exact through `q^order`.
pub fn poch_series_base(x: &Monomial, n: PochLength, r: i64, order: i64) -> Result<LaurentSeries> {
    assert!(r >= 1, "base exponent must be positive");
    let mut acc = LaurentSeries::one(order);
    if x.is_zero() {
        return Ok(acc);
    }
    let count = match n {
        PochLength::Finite(n) => n as i64,
        PochLength::Infinite => {
            if x.exp < 0 {
                return Err(EvalError::NonformalInfiniteProduct(x.to_string()));
            }
            if x.exp > order {
                0
            } else {
                (order - x.exp) / r + 1
            }
        }
    };
    for k in 0..count {
        acc = acc.mul_linear(&Rational::one(), &x.coeff, x.exp + r * k);
    }
    Ok(acc)
}

/// Exact value of `(x; q)_n` at a rational `q`.
pub fn poch_point(x: &Rational, n: u32, q: &Rational) -> Rational {
    let mut acc = Rational::one();
    let mut qk = Rational::one();
    for _ in 0..n {
        acc *= Rational::one() - x * &qk;
        if acc.is_zero() {
            break;
        }
        qk *= q;
    }
    acc
}

/// The polynomial `prod_{j=1}^n (x - q^j)`, which equals `(q/x; q)_n x^n` for
/// `x != 0` and stays regular at `x = 0`.
pub fn poch_reversed(x: &Rational, n: u32, order: i64) -> LaurentSeries {
    let mut acc = LaurentSeries::one(order);
    for j in 1..=n as i64 {
        acc = acc.mul_linear(x, &Rational::one(), j);
    }
    acc
}

/// Gaussian binomial `[N n]` in base `q^r`; zero when `n > N`.
pub fn qbinom(big_n: u32, n: u32, r: i64, order: i64) -> LaurentSeries {
    assert!(r >= 1, "base exponent must be positive");
    if n > big_n {
        return LaurentSeries::zero(order);
    }
    let k = n.min(big_n - n) as usize;
    // q-Pascal in base q, exact polynomials; row[j] = [m j].
    let mut row: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for m in 1..=big_n as usize {
        let mut next: Vec<Vec<Rational>> = Vec::with_capacity(row.len() + 1);
        for j in 0..=m.min(k) {
            // [m j] = [m-1 j-1] + q^j [m-1 j]
            let mut poly: Vec<Rational> = if j >= 1 { row[j - 1].clone() } else { Vec::new() };
            if j < row.len() && j <= m - 1 {
                let upper = &row[j];
                if poly.len() < upper.len() + j {
                    poly.resize(upper.len() + j, Rational::zero());
                }
                for (i, c) in upper.iter().enumerate() {
                    poly[i + j] += c;
                }
            }
            next.push(poly);
        }
        row = next;
    }
    let poly = row.swap_remove(k);
    LaurentSeries::from_coeffs(0, poly, order.div_euclid(r) + 1).rebase(r).truncate(order)
}

/// `sum_{n>=1} x^n q^n / (1 - q^n)`: the coefficient of `q^m` is the divisor
/// sum `sum_{d | m} x^d`.
pub fn lambert(x: &Rational, order: i64) -> LaurentSeries {
    divisor_series(order, |d| crate::rational::pow(x, d))
}

/// `sum_{n>=1} n x^n q^n / (1 - q^n)`: coefficient `sum_{d | m} d x^d`.
pub fn weighted_lambert(x: &Rational, order: i64) -> LaurentSeries {
    divisor_series(order, |d| int(d) * crate::rational::pow(x, d))
}

fn divisor_series(order: i64, weight: impl Fn(i64) -> Rational) -> LaurentSeries {
    if order < 1 {
        return LaurentSeries::zero(order);
    }
    let weights: Vec<Rational> = (1..=order).map(&weight).collect();
    let mut coeffs = vec![Rational::zero(); order as usize + 1];
    for d in 1..=order {
        let w = &weights[d as usize - 1];
        if w.is_zero() {
            continue;
        }
        let mut m = d;
        while m <= order {
            coeffs[m as usize] += w;
            m += d;
        }
    }
    LaurentSeries::from_coeffs(0, coeffs, order)
}
