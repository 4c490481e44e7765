//! Mode-agnostic evaluation.
//!
//! Identity forms are written once against [`Ctx`] and evaluated either as a
//! truncated series, as an exact rational at a point, or as a certified ball
//! at a point (partial sums with tail bounds). Every building block is a
//! method on the context, so the same code path serves all three.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ball::Ball;
use crate::error::{EvalError, Result};
use crate::hypergeometric::{phi_point_ball, phi_series, ratio_tail, PhiSpec, RATIO_WINDOW};
use crate::kernel::{self, LaurentSeries, Monomial};
use crate::rational::{abs_upper, as_i64, inflate, int, pow, render, Rational};

/// Default tolerance for tails of infinite sums and products at a point.
pub const DEFAULT_TOL: f64 = 1e-24;
/// Hard cap on the number of terms of one infinite sum at a point.
pub const MAX_TERMS: usize = 6000;

#[derive(Clone, Debug, PartialEq)]
pub enum Mode {
    /// Formal series exact through `q^order`.
    Series { order: i64 },
    /// Exact rational value at `q`; infinite objects are rejected.
    Exact { q: Rational },
    /// Ball value at `q`; infinite sums and products are cut once their tail
    /// bound drops below `tol`.
    Analytic { q: Rational, tol: f64 },
}

/// A value in the context's mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Val {
    Series(LaurentSeries),
    Point(Ball),
}

impl Val {
    pub fn as_series(&self) -> Option<&LaurentSeries> {
        match self {
            Val::Series(s) => Some(s),
            Val::Point(_) => None,
        }
    }

    pub fn as_ball(&self) -> Option<&Ball> {
        match self {
            Val::Point(b) => Some(b),
            Val::Series(_) => None,
        }
    }

    pub fn div(&self, rhs: &Val) -> Result<Val> {
        match (self, rhs) {
            (Val::Series(a), Val::Series(b)) => Ok(Val::Series(a.div(b)?)),
            (Val::Point(a), Val::Point(b)) => Ok(Val::Point(a.div(b)?)),
            _ => Err(mixed()),
        }
    }

    pub fn recip(&self) -> Result<Val> {
        match self {
            Val::Series(s) => Ok(Val::Series(s.invert()?)),
            Val::Point(b) => Ok(Val::Point(Ball::exact(Rational::one()).div(b)?)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Val {
        match self {
            Val::Series(s) => Val::Series(s.scale(c)),
            Val::Point(b) => Val::Point(b * &Ball::exact(c.clone())),
        }
    }

    /// Nonnegative integer power.
    pub fn pow(&self, k: u32) -> Val {
        let mut acc = match self {
            Val::Series(s) => Val::Series(LaurentSeries::one(s.valid_through().max(0))),
            Val::Point(_) => Val::Point(Ball::exact(Rational::one())),
        };
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn magnitude(&self) -> f64 {
        match self {
            Val::Point(b) => b.mid().abs().to_f64().unwrap_or(f64::INFINITY),
            Val::Series(_) => 0.0,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Series(s) => write!(f, "{s}"),
            Val::Point(b) => write!(f, "{b}"),
        }
    }
}

fn mixed() -> EvalError {
    EvalError::ModeMismatch("series and point values combined".into())
}

macro_rules! val_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Val> for &Val {
            type Output = Val;
            fn $m(self, rhs: &Val) -> Val {
                match (self, rhs) {
                    (Val::Series(a), Val::Series(b)) => Val::Series(a.$m(b)),
                    (Val::Point(a), Val::Point(b)) => Val::Point(a.$m(b)),
                    _ => panic!("{}", mixed()),
                }
            }
        }
        impl $tr<Val> for Val {
            type Output = Val;
            fn $m(self, rhs: Val) -> Val {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Val> for Val {
            type Output = Val;
            fn $m(self, rhs: &Val) -> Val {
                (&self).$m(rhs)
            }
        }
        impl $tr<Val> for &Val {
            type Output = Val;
            fn $m(self, rhs: Val) -> Val {
                self.$m(&rhs)
            }
        }
    };
}

val_binop!(Add, add);
val_binop!(Sub, sub);
val_binop!(Mul, mul);

impl Neg for &Val {
    type Output = Val;
    fn neg(self) -> Val {
        match self {
            Val::Series(s) => Val::Series(s.neg()),
            Val::Point(b) => Val::Point(-b),
        }
    }
}

impl Neg for Val {
    type Output = Val;
    fn neg(self) -> Val {
        -&self
    }
}

/// Named parameter values for one evaluation. Integer parameters (`N`, an
/// index `n`, ...) are stored as integral rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Args {
    values: BTreeMap<String, Rational>,
}

impl Args {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: Rational) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: Rational) {
        self.values.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.values.get(name)
    }

    /// Rational parameter `name`.
    pub fn r(&self, name: &str) -> Result<&Rational> {
        self.values.get(name).ok_or_else(|| EvalError::UnboundParameter(name.to_string()))
    }

    /// Integer parameter `name`.
    pub fn n(&self, name: &str) -> Result<i64> {
        let v = self.r(name)?;
        as_i64(v).ok_or_else(|| EvalError::InvalidArgument(format!("{name} = {} is not an integer", render(v))))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn into_map(self) -> BTreeMap<String, Rational> {
        self.values
    }
}

impl From<BTreeMap<String, Rational>> for Args {
    fn from(values: BTreeMap<String, Rational>) -> Self {
        Args { values }
    }
}

type LinKey = (Rational, Rational, i64, i64);

/// Evaluation context: a mode plus memo tables for products that identity
/// forms request over and over (`(x;q)_n` for growing `n`, Gaussian
/// binomials). A context is single-threaded; make one per work item.
pub struct Ctx {
    mode: Mode,
    lin_cache: RefCell<HashMap<LinKey, Vec<Val>>>,
    qbin_cache: RefCell<HashMap<(i64, i64, i64), Val>>,
}

impl Ctx {
    pub fn new(mode: Mode) -> Self {
        if let Mode::Exact { q } | Mode::Analytic { q, .. } = &mode {
            assert!(!q.is_zero() && q.abs() < Rational::one(), "point evaluation needs 0 < |q| < 1");
        }
        Ctx { mode, lin_cache: RefCell::default(), qbin_cache: RefCell::default() }
    }

    pub fn series(order: i64) -> Self {
        Self::new(Mode::Series { order })
    }

    pub fn exact(q: Rational) -> Self {
        Self::new(Mode::Exact { q })
    }

    pub fn analytic(q: Rational, tol: f64) -> Self {
        Self::new(Mode::Analytic { q, tol })
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    pub fn order(&self) -> Option<i64> {
        match self.mode {
            Mode::Series { order } => Some(order),
            _ => None,
        }
    }

    pub fn q(&self) -> Option<&Rational> {
        match &self.mode {
            Mode::Exact { q } | Mode::Analytic { q, .. } => Some(q),
            Mode::Series { .. } => None,
        }
    }

    pub fn rat(&self, c: &Rational) -> Val {
        match &self.mode {
            Mode::Series { order } => Val::Series(LaurentSeries::constant(c.clone(), *order)),
            _ => Val::Point(Ball::exact(c.clone())),
        }
    }

    pub fn int(&self, c: i64) -> Val {
        self.rat(&int(c))
    }

    pub fn one(&self) -> Val {
        self.int(1)
    }

    pub fn zero(&self) -> Val {
        self.int(0)
    }

    /// In analytic mode, rounds an oversized midpoint into the radius.
    pub fn settle(&self, v: Val) -> Val {
        match (&self.mode, v) {
            (Mode::Analytic { .. }, Val::Point(b)) => Val::Point(b.approx()),
            (_, v) => v,
        }
    }

    /// `q^k`.
    pub fn q_pow(&self, k: i64) -> Val {
        self.mono(&Rational::one(), k)
    }

    /// `c q^k`.
    pub fn mono(&self, c: &Rational, k: i64) -> Val {
        match &self.mode {
            Mode::Series { order } => Val::Series(LaurentSeries::monomial(c.clone(), k, order + k.max(0))),
            Mode::Exact { q } | Mode::Analytic { q, .. } => Val::Point(Ball::exact(c * pow(q, k))),
        }
    }

    /// `x - y q^m`.
    pub fn lin(&self, x: &Rational, y: &Rational, m: i64) -> Val {
        self.rat(x) - self.mono(y, m)
    }

    /// `prod_{k=0}^{n-1} (x - y q^{start + step k})`.
    pub fn lin_prod(&self, x: &Rational, y: &Rational, start: i64, step: i64, n: i64) -> Val {
        assert!(n >= 0, "product length must be nonnegative, got {n}");
        let n = n as usize;
        let key = (x.clone(), y.clone(), start, step);
        let mut cache = self.lin_cache.borrow_mut();
        let prefix = cache.entry(key).or_insert_with(|| vec![self.one()]);
        while prefix.len() <= n {
            let k = (prefix.len() - 1) as i64;
            let m = start + step * k;
            let last = prefix.last().expect("prefix never empty");
            let next = match (&self.mode, last) {
                (Mode::Series { .. }, Val::Series(s)) => Val::Series(s.mul_linear(x, y, m)),
                (_, Val::Point(b)) => {
                    let q = self.q().expect("point mode has q");
                    self.settle(Val::Point(b * &Ball::exact(x - y * pow(q, m))))
                }
                _ => unreachable!("cache holds values of the context's mode"),
            };
            prefix.push(next);
        }
        prefix[n].clone()
    }

    /// `(c q^s; q)_n`.
    pub fn poch(&self, c: &Rational, s: i64, n: i64) -> Val {
        self.lin_prod(&Rational::one(), c, s, 1, n)
    }

    /// `(c q^s; q^r)_n`.
    pub fn poch_b(&self, c: &Rational, s: i64, r: i64, n: i64) -> Val {
        self.lin_prod(&Rational::one(), c, s, r, n)
    }

    /// `(q; q)_n`.
    pub fn qfac(&self, n: i64) -> Val {
        self.poch(&Rational::one(), 1, n)
    }

    /// `prod_{j=1}^n (x - q^j)`, i.e. `(q/x; q)_n x^n`, regular at `x = 0`.
    pub fn rev(&self, x: &Rational, n: i64) -> Val {
        self.lin_prod(x, &Rational::one(), 1, 1, n)
    }

    /// `(c q^s; q)_inf`.
    pub fn poch_inf(&self, c: &Rational, s: i64) -> Result<Val> {
        self.poch_inf_b(c, s, 1)
    }

    /// `(c q^s; q^r)_inf`.
    pub fn poch_inf_b(&self, c: &Rational, s: i64, r: i64) -> Result<Val> {
        assert!(r >= 1, "base exponent must be positive");
        match &self.mode {
            Mode::Series { order } => {
                let x = Monomial::new(c.clone(), s);
                Ok(Val::Series(kernel::poch_series_base(&x, kernel::PochLength::Infinite, r, *order)?))
            }
            Mode::Exact { .. } => Err(EvalError::ModeMismatch("infinite product in exact point mode".into())),
            Mode::Analytic { q, tol } => Ok(Val::Point(inf_product_ball(c, s, r, q, *tol))),
        }
    }

    /// Gaussian binomial `[N n]` in base `q`.
    pub fn qbinom(&self, big_n: i64, n: i64) -> Val {
        self.qbinom_b(big_n, n, 1)
    }

    /// Gaussian binomial `[N n]` in base `q^r`.
    pub fn qbinom_b(&self, big_n: i64, n: i64, r: i64) -> Val {
        if n < 0 || n > big_n {
            return self.zero();
        }
        if let Some(v) = self.qbin_cache.borrow().get(&(big_n, n, r)) {
            return v.clone();
        }
        let v = match &self.mode {
            Mode::Series { order } => Val::Series(kernel::qbinom(big_n as u32, n as u32, r, *order)),
            _ => {
                let p = |m: i64| self.poch_b(&Rational::one(), r, r, m);
                let num = p(big_n);
                let den = p(n) * p(big_n - n);
                num.div(&den).expect("(q^r;q^r)_m does not vanish for 0 < |q| < 1")
            }
        };
        self.qbin_cache.borrow_mut().insert((big_n, n, r), v.clone());
        v
    }

    /// `sum_{n=lo}^{hi} f(n)`; empty when `hi < lo`.
    pub fn sum(&self, lo: i64, hi: i64, mut f: impl FnMut(i64) -> Result<Val>) -> Result<Val> {
        let mut acc = self.zero();
        for n in lo..=hi {
            acc = acc + f(n)?;
        }
        Ok(acc)
    }

    /// `sum_{n >= start} f(n)`.
    ///
    /// `valuation` must be a nondecreasing lower bound on the `q`-valuation of
    /// term `n`; series mode stops at the first `n` whose bound exceeds the
    /// order and checks every computed term against it. At a point the sum
    /// runs until the ratio-test tail estimate drops below the tolerance.
    pub fn sum_inf(
        &self,
        start: i64,
        valuation: impl Fn(i64) -> i64,
        mut f: impl FnMut(i64) -> Result<Val>,
    ) -> Result<Val> {
        match &self.mode {
            Mode::Series { order } => {
                let mut acc = self.zero();
                let guard = start + 4 * order.max(&1) + 64;
                let mut n = start;
                loop {
                    let declared = valuation(n);
                    if declared > *order {
                        return Ok(acc);
                    }
                    if n > guard {
                        return Err(EvalError::NonconvergentFormal(format!(
                            "term valuation bound still <= {order} at n = {n}"
                        )));
                    }
                    let term = f(n)?;
                    if let Val::Series(s) = &term {
                        if let Some(actual) = s.valuation() {
                            if actual < declared {
                                return Err(EvalError::ValuationBound { index: n, actual, declared });
                            }
                        }
                    }
                    acc = acc + term;
                    n += 1;
                }
            }
            Mode::Exact { .. } => Err(EvalError::ModeMismatch("infinite sum in exact point mode".into())),
            Mode::Analytic { tol, .. } => {
                let mut acc = self.zero();
                let mut recent: Vec<f64> = Vec::with_capacity(RATIO_WINDOW + 2);
                let mut n = start;
                loop {
                    let term = f(n)?;
                    let mag = term.magnitude();
                    let upper = match &term {
                        Val::Point(b) => abs_upper(b.mid()),
                        Val::Series(_) => unreachable!(),
                    };
                    acc = self.settle(acc + term);
                    recent.push(mag);
                    if recent.len() > RATIO_WINDOW + 1 {
                        recent.remove(0);
                    }
                    n += 1;
                    if recent.len() > RATIO_WINDOW {
                        if let Some(tail) = ratio_tail(&recent, upper) {
                            if tail <= *tol {
                                return Ok(match acc {
                                    Val::Point(b) => Val::Point(b.widen(tail)),
                                    other => other,
                                });
                            }
                        }
                    }
                    if (n - start) as usize >= MAX_TERMS {
                        return Err(EvalError::RatioNotContracting {
                            ratio: crate::hypergeometric::max_ratio(&recent),
                            terms: (n - start) as usize,
                        });
                    }
                }
            }
        }
    }

    /// `sum_{n>=1} x^n q^n / (1 - q^n)`.
    pub fn lambert(&self, x: &Rational) -> Result<Val> {
        match &self.mode {
            Mode::Series { order } => Ok(Val::Series(kernel::lambert(x, *order))),
            _ => self.sum_inf(1, |n| n, |n| {
                self.mono(&pow(x, n), n).div(&self.lin(&Rational::one(), &Rational::one(), n))
            }),
        }
    }

    /// `sum_{n>=1} n x^n q^n / (1 - q^n)`.
    pub fn wlambert(&self, x: &Rational) -> Result<Val> {
        match &self.mode {
            Mode::Series { order } => Ok(Val::Series(kernel::weighted_lambert(x, *order))),
            _ => self.sum_inf(1, |n| n, |n| {
                self.mono(&(int(n) * pow(x, n)), n).div(&self.lin(&Rational::one(), &Rational::one(), n))
            }),
        }
    }

    pub fn phi(&self, spec: &PhiSpec) -> Result<Val> {
        match &self.mode {
            Mode::Series { order } => Ok(Val::Series(phi_series(spec, *order)?)),
            Mode::Exact { q } => {
                if spec.terminating_at().is_none() && !spec.argument.is_zero() {
                    return Err(EvalError::ModeMismatch("nonterminating phi in exact point mode".into()));
                }
                Ok(Val::Point(phi_point_ball(spec, q, 0.0, usize::MAX)?))
            }
            Mode::Analytic { q, tol } => {
                Ok(Val::Point(phi_point_ball(spec, q, *tol, MAX_TERMS)?))
            }
        }
    }
}

/// `(c q^s; q^r)_inf` at a point, truncated after `M` factors with the bound
/// `|P_M| (e^sigma - 1)`, `sigma = |c| |q|^{s + rM} / (1 - |q|^r)`.
fn inf_product_ball(c: &Rational, s: i64, r: i64, q: &Rational, tol: f64) -> Ball {
    let qa = abs_upper(q);
    let qr = qa.powi(r as i32);
    let ca = abs_upper(c);
    let mut acc = Rational::one();
    let mut m: i64 = 0;
    loop {
        let sigma = inflate(ca * qa.powf((s + r * m) as f64) / (1.0 - qr));
        if sigma < 0.5 {
            let bound = inflate(abs_upper(&acc) * inflate(sigma.exp_m1()));
            if bound <= tol / 16.0 || acc.is_zero() {
                let rad = if acc.is_zero() { 0.0 } else { bound };
                return Ball::new(acc, rad);
            }
        }
        acc *= Rational::one() - c * pow(q, s + r * m);
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn products_agree_across_modes() {
        let q = frac(1, 4);
        let s = Ctx::series(30);
        let p = Ctx::exact(q.clone());
        let a = frac(2, 3);
        let ser = s.poch(&a, 1, 5).as_series().unwrap().eval_at(&q);
        assert_eq!(p.poch(&a, 1, 5).as_ball().unwrap().mid(), &ser);
        let rev = p.rev(&a, 3);
        let direct = (0..3).fold(Rational::one(), |acc, j| acc * (&a - pow(&q, j + 1)));
        assert_eq!(rev.as_ball().unwrap().mid(), &direct);
    }

    #[test]
    fn infinite_product_ball_encloses_euler() {
        let q = frac(1, 5);
        let ctx = Ctx::analytic(q.clone(), 1e-30);
        let v = ctx.poch_inf(&Rational::one(), 1).unwrap();
        let b = v.as_ball().unwrap();
        let long = kernel::poch_point(&q, 200, &q);
        assert!((b.mid() - long).abs() <= crate::rational::from_f64(b.rad()));
        assert!(b.rad() <= 1e-30);
    }

    #[test]
    fn exact_mode_rejects_infinite_objects() {
        let ctx = Ctx::exact(frac(1, 3));
        assert!(matches!(ctx.poch_inf(&int(1), 1), Err(EvalError::ModeMismatch(_))));
        assert!(matches!(ctx.sum_inf(0, |n| n, |_| Ok(ctx.one())), Err(EvalError::ModeMismatch(_))));
    }

    #[test]
    fn geometric_sum_at_a_point() {
        let ctx = Ctx::analytic(frac(1, 3), 1e-25);
        let v = ctx.sum_inf(0, |n| n, |n| Ok(ctx.q_pow(n))).unwrap();
        let b = v.as_ball().unwrap();
        let exact = frac(3, 2);
        assert!((b.mid() - exact).abs() <= crate::rational::from_f64(b.rad()));
        assert!(b.rad() <= 1e-24);
    }

    #[test]
    fn series_sum_checks_declared_valuation() {
        let ctx = Ctx::series(10);
        let err = ctx.sum_inf(1, |n| 2 * n, |n| Ok(ctx.q_pow(n))).unwrap_err();
        assert_eq!(err, EvalError::ValuationBound { index: 1, actual: 1, declared: 2 });
    }

    #[test]
    fn lambert_agrees_across_modes() {
        let x = frac(1, 3);
        let q = frac(1, 7);
        let s = Ctx::series(80).lambert(&x).unwrap();
        let p = Ctx::analytic(q.clone(), 1e-30).lambert(&x).unwrap();
        let b = p.as_ball().unwrap();
        let diff = (b.mid() - s.as_series().unwrap().eval_at(&q)).abs();
        assert!(diff.to_f64().unwrap() <= b.rad() + 1e-60);
    }
}
