//! Truncated formal Laurent series in `q` with exact rational coefficients.
//!
//! Every series carries `valid_through`: the coefficient of `q^e` is exact for
//! all `e <= valid_through`. Coefficients above that bound are never stored.
//! Binary operations contract the bound by the usual valuation rules, so a
//! result never claims more precision than its inputs justify.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{EvalError, Result};
use crate::rational::{render, Rational};

/// `coeff * q^exp`. The zero monomial is canonically `0 * q^0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rational,
    pub exp: i64,
}

impl Monomial {
    pub fn new(coeff: Rational, exp: i64) -> Self {
        if coeff.is_zero() {
            Monomial::zero()
        } else {
            Monomial { coeff, exp }
        }
    }

    pub fn zero() -> Self {
        Monomial { coeff: Rational::zero(), exp: 0 }
    }

    /// `q^k` with unit coefficient.
    pub fn q_pow(k: i64) -> Self {
        Monomial { coeff: Rational::one(), exp: k }
    }

    pub fn constant(c: Rational) -> Self {
        Monomial::new(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Monomial::new(self.coeff.clone(), self.exp + k)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(&self.coeff * &other.coeff, self.exp + other.exp)
    }

    /// `None` for the zero monomial.
    pub fn recip(&self) -> Option<Monomial> {
        if self.is_zero() {
            None
        } else {
            Some(Monomial { coeff: self.coeff.recip(), exp: -self.exp })
        }
    }

    /// Value at a rational point `q`.
    pub fn at(&self, q: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        &self.coeff * crate::rational::pow(q, self.exp)
    }

    pub fn to_series(&self, order: i64) -> LaurentSeries {
        LaurentSeries::monomial(self.coeff.clone(), self.exp, order)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exp {
            0 => write!(f, "{}", render(&self.coeff)),
            1 if self.coeff.is_one() => write!(f, "q"),
            1 if (-&self.coeff).is_one() => write!(f, "-q"),
            1 => write!(f, "{}*q", render(&self.coeff)),
            _ if self.coeff.is_one() => write!(f, "q^{}", self.exp),
            _ if (-&self.coeff).is_one() => write!(f, "-q^{}", self.exp),
            _ => write!(f, "{}*q^{}", render(&self.coeff), self.exp),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<Rational>,
    valid_through: i64,
}

impl LaurentSeries {
    /// Builds a series from coefficients starting at `min_exp`, dropping anything
    /// above `valid_through` and normalising leading/trailing zeros.
    pub fn from_coeffs(min_exp: i64, mut coeffs: Vec<Rational>, valid_through: i64) -> Self {
        let keep = (valid_through - min_exp + 1).max(0) as usize;
        coeffs.truncate(keep);
        let mut s = LaurentSeries { min_exp, coeffs, valid_through };
        s.normalize();
        s
    }

    pub fn zero(valid_through: i64) -> Self {
        LaurentSeries { min_exp: 0, coeffs: Vec::new(), valid_through }
    }

    pub fn one(valid_through: i64) -> Self {
        Self::constant(Rational::one(), valid_through)
    }

    pub fn constant(c: Rational, valid_through: i64) -> Self {
        Self::monomial(c, 0, valid_through)
    }

    pub fn monomial(c: Rational, exp: i64, valid_through: i64) -> Self {
        Self::from_coeffs(exp, vec![c], valid_through)
    }

    /// `q` itself, exact through `valid_through`.
    pub fn q(valid_through: i64) -> Self {
        Self::monomial(Rational::one(), 1, valid_through)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn valid_through(&self) -> i64 {
        self.valid_through
    }

    /// Valuation of the series, `None` when it is zero on its window.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp)
        }
    }

    /// Zero on its whole valid window.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^e`. Callers must stay within `valid_through`.
    pub fn coeff(&self, e: i64) -> Rational {
        debug_assert!(e <= self.valid_through, "q^{e} is past the valid window");
        let idx = e - self.min_exp;
        if idx < 0 {
            return Rational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// `(exponent, coefficient)` for the stored nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    fn max_stored(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// Lowers the validity bound (never raises it).
    pub fn truncate(&self, valid_through: i64) -> Self {
        let v = valid_through.min(self.valid_through);
        Self::from_coeffs(self.min_exp, self.coeffs.clone(), v)
    }

    /// The series as a monomial, if it has at most one nonzero term.
    pub fn as_monomial(&self) -> Option<Monomial> {
        let mut it = self.terms();
        match (it.next(), it.next()) {
            (None, _) => Some(Monomial::zero()),
            (Some((e, c)), None) => Some(Monomial::new(c.clone(), e)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.valid_through);
        }
        LaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            valid_through: self.valid_through,
        }
    }

    /// Multiplies by `q^k`, shifting the window with it.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero(self.valid_through + k);
        }
        LaurentSeries {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
            valid_through: self.valid_through + k,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let v = self.valid_through.min(other.valid_through);
        if self.is_zero() {
            return other.truncate(v);
        }
        if other.is_zero() {
            return self.truncate(v);
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.max_stored().max(other.max_stored()).min(v);
        if hi < lo {
            return Self::zero(v);
        }
        let coeffs = (lo..=hi).map(|e| self.coeff_or_zero(e) + other.coeff_or_zero(e)).collect();
        Self::from_coeffs(lo, coeffs, v)
    }

    fn coeff_or_zero(&self, e: i64) -> Rational {
        let idx = e - self.min_exp;
        if idx < 0 {
            return Rational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            valid_through: self.valid_through,
        }
    }

    /// Exact product on the provable window
    /// `min(V_f + min_g, V_g + min_f)`.
    pub fn mul(&self, other: &Self) -> Self {
        let v = (self.valid_through + other.min_exp).min(other.valid_through + self.min_exp);
        if self.is_zero() || other.is_zero() {
            return Self::zero(v);
        }
        let lo = self.min_exp + other.min_exp;
        if v < lo {
            return Self::zero(v);
        }
        let len = ((v - lo + 1) as usize).min(self.coeffs.len() + other.coeffs.len() - 1);
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(lo, out, v)
    }

    /// Multiplies by the binomial `x - y q^m` in `O(len)`.
    pub fn mul_linear(&self, x: &Rational, y: &Rational, m: i64) -> Self {
        if y.is_zero() {
            return self.scale(x);
        }
        if x.is_zero() {
            return self.shift(m).scale(&-y);
        }
        let v = self.valid_through + m.min(0);
        if self.is_zero() {
            return Self::zero(v);
        }
        let lo = self.min_exp + m.min(0);
        let hi = (self.max_stored() + m.max(0)).min(v);
        if hi < lo {
            return Self::zero(v);
        }
        let coeffs = (lo..=hi)
            .map(|e| x * self.coeff_or_zero(e) - y * self.coeff_or_zero(e - m))
            .collect();
        Self::from_coeffs(lo, coeffs, v)
    }

    /// Divides by the binomial `x - y q^m` in `O(len)`.
    pub fn div_linear(&self, x: &Rational, y: &Rational, m: i64) -> Result<Self> {
        if y.is_zero() || m == 0 {
            let c = if m == 0 { x - y } else { x.clone() };
            if c.is_zero() {
                return Err(EvalError::DivisionByZero(format!("({} - {}*q^{})", render(x), render(y), m)));
            }
            return Ok(self.scale(&c.recip()));
        }
        if m < 0 {
            // x - y q^m = -y q^m (1 - (x/y) q^{-m})
            let inner = self.div_linear(&Rational::one(), &(x / y), -m)?;
            return Ok(inner.shift(-m).scale(&(-y).recip()));
        }
        if x.is_zero() {
            return Ok(self.shift(-m).scale(&(-y).recip()));
        }
        // g (x - y q^m) = f  =>  g_e = (f_e + y g_{e-m}) / x
        let v = self.valid_through;
        if self.is_zero() {
            return Ok(Self::zero(v));
        }
        let lo = self.min_exp;
        let xinv = x.recip();
        let mut out: Vec<Rational> = Vec::with_capacity((v - lo + 1).max(0) as usize);
        for e in lo..=v {
            let idx = (e - lo) as usize;
            let mut g = self.coeff_or_zero(e);
            if idx as i64 >= m {
                let prev = &out[idx - m as usize];
                if !prev.is_zero() {
                    g += y * prev;
                }
            }
            out.push(g * &xinv);
        }
        Ok(Self::from_coeffs(lo, out, v))
    }

    /// Multiplicative inverse; `valid_through` becomes `V - 2 min_exp`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(EvalError::ZeroLeadingCoefficient);
        }
        let m = self.min_exp;
        let v = self.valid_through - 2 * m;
        let len = (self.valid_through - m + 1).max(0) as usize;
        let lead_inv = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        for k in 0..len {
            if k == 0 {
                out.push(lead_inv.clone());
                continue;
            }
            let mut acc = Rational::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                let a = &self.coeffs[j];
                if !a.is_zero() && !out[k - j].is_zero() {
                    acc += a * &out[k - j];
                }
            }
            out.push(-acc * &lead_inv);
        }
        Ok(Self::from_coeffs(-m, out, v))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Substitutes `q -> q^r`.
    pub fn rebase(&self, r: i64) -> Self {
        assert!(r >= 1, "rebase needs a positive exponent, got {r}");
        if r == 1 || self.is_zero() {
            return LaurentSeries { valid_through: self.valid_through * r, ..self.clone() };
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * r as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * r as usize] = c.clone();
        }
        Self::from_coeffs(self.min_exp * r, coeffs, self.valid_through * r)
    }

    /// Evaluates the stored coefficients at a rational point (a polynomial
    /// evaluation; the omitted tail is the caller's concern).
    pub fn eval_at(&self, q: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            acc += c * crate::rational::pow(q, e);
        }
        acc
    }

    /// Sum of the stored coefficients, i.e. the value at `q = 1`.
    pub fn coefficient_sum(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |a, c| a + c)
    }

    /// Coefficients of `q^lo ..= q^hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<Rational> {
        (lo..=hi).map(|e| self.coeff_or_zero(e)).collect()
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let mono = Monomial::new(c.clone(), e).to_string();
            if first {
                write!(f, "{mono}")?;
                first = false;
            } else if let Some(rest) = mono.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.valid_through + 1)
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::add(self, rhs)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::sub(self, rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::mul(self, rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn poly(min_exp: i64, cs: &[i64], v: i64) -> LaurentSeries {
        LaurentSeries::from_coeffs(min_exp, cs.iter().map(|&c| int(c)).collect(), v)
    }

    #[test]
    fn add_cancels_and_keeps_window() {
        let f = poly(0, &[1, -1], 10);
        let g = poly(1, &[1], 10);
        let s = &f + &g;
        assert_eq!(s, LaurentSeries::one(10));
        assert_eq!(s.valid_through(), 10);
    }

    #[test]
    fn add_zero_is_identity() {
        let f = poly(-2, &[3, 0, 1], 7);
        assert_eq!(&f + &LaurentSeries::zero(7), f);
    }

    #[test]
    fn add_laurent_windows() {
        let f = poly(-1, &[1, 1], 5);
        let g = LaurentSeries::one(5);
        assert_eq!(&f + &g, poly(-1, &[1, 2], 5));
    }

    #[test]
    fn mul_difference_of_squares() {
        let f = poly(0, &[1, 1], 6);
        let g = poly(0, &[1, -1], 6);
        assert_eq!(&f * &g, poly(0, &[1, 0, -1], 6));
    }

    #[test]
    fn mul_exponents_add() {
        let f = LaurentSeries::monomial(int(1), -1, 8);
        let g = LaurentSeries::monomial(int(1), 3, 8);
        let p = &f * &g;
        assert_eq!(p.as_monomial(), Some(Monomial::q_pow(2)));
        // min(V_f + min_g, V_g + min_f) = min(8 + 3, 8 - 1)
        assert_eq!(p.valid_through(), 7);
    }

    #[test]
    fn mul_by_one_is_identity() {
        let f = poly(0, &[2, 0, -5, 1], 9);
        assert_eq!(&f * &LaurentSeries::one(9), f);
    }

    #[test]
    fn invert_geometric_and_fibonacci() {
        let g = poly(0, &[1, -1], 5).invert().unwrap();
        assert_eq!(g, poly(0, &[1, 1, 1, 1, 1, 1], 5));
        let fib = poly(0, &[1, -1, -1], 4).invert().unwrap();
        assert_eq!(fib, poly(0, &[1, 1, 2, 3, 5], 4));
    }

    #[test]
    fn invert_monomial_moves_window() {
        let inv = LaurentSeries::q(6).invert().unwrap();
        assert_eq!(inv.as_monomial(), Some(Monomial::q_pow(-1)));
        assert_eq!(inv.valid_through(), 4);
    }

    #[test]
    fn invert_zero_fails() {
        assert_eq!(LaurentSeries::zero(3).invert(), Err(EvalError::ZeroLeadingCoefficient));
    }

    #[test]
    fn rebase_maps_indices() {
        assert_eq!(poly(0, &[1, 1], 4).rebase(2), poly(0, &[1, 0, 1], 8));
        let f = poly(0, &[1, -1, 0, 1], 3);
        assert_eq!(f.rebase(1), f);
        let g = f.rebase(3);
        assert_eq!(g.window(0, 9), poly(0, &[1, 0, 0, -1, 0, 0, 0, 0, 0, 1], 9).window(0, 9));
        assert_eq!(g.valid_through(), 9);
    }

    #[test]
    fn linear_factor_ops_match_general_ones() {
        let f = poly(-1, &[2, 0, 3, -1, 4], 12);
        for (x, y, m) in [(int(1), frac(1, 3), 2), (frac(2, 5), int(-3), 1), (int(1), int(2), -2), (int(0), int(1), 3)] {
            let lin = LaurentSeries::from_coeffs(0, vec![x.clone()], 40)
                .add(&LaurentSeries::monomial(-y.clone(), m, 40));
            let expect = f.mul(&lin);
            let got = f.mul_linear(&x, &y, m);
            let v = expect.valid_through().min(got.valid_through());
            assert_eq!(got.window(-4, v), expect.window(-4, v));
            let back = got.div_linear(&x, &y, m).unwrap();
            let v2 = back.valid_through().min(f.valid_through());
            assert_eq!(back.window(-4, v2), f.window(-4, v2));
        }
    }

    #[test]
    fn display_is_readable() {
        let f = poly(-1, &[1, 0, -2], 3);
        assert_eq!(f.to_string(), "q^-1 - 2*q + O(q^4)");
    }
}
