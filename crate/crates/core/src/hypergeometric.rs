//! Basic hypergeometric series `_{r+1}phi_r` with monomial parameters.
//!
//! The `n`-th term is
//!
//! ```text
//! (a_1; p)_n ... (a_{r+1}; p)_n / ((b_1; p)_n ... (b_r; p)_n (p; p)_n) * z^n,   p = q^base
//! ```
//!
//! Terms are built incrementally from the term ratio, which is a product of
//! linear factors in `q`.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ball::Ball;
use crate::error::{EvalError, Result};
use crate::kernel::{LaurentSeries, Monomial};
use crate::rational::{abs_upper, from_f64, inflate, pow, Rational};

/// Safety factor applied to the ratio-test tail estimate.
pub const TAIL_SAFETY: f64 = 4.0;
/// Number of trailing terms inspected by the ratio test.
pub const RATIO_WINDOW: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiSpec {
    pub upper: Vec<Monomial>,
    pub lower: Vec<Monomial>,
    pub base_exp: i64,
    pub argument: Monomial,
}

impl PhiSpec {
    pub fn new(upper: Vec<Monomial>, lower: Vec<Monomial>, argument: Monomial) -> Self {
        Self::with_base(upper, lower, 1, argument)
    }

    pub fn with_base(upper: Vec<Monomial>, lower: Vec<Monomial>, base_exp: i64, argument: Monomial) -> Self {
        assert_eq!(upper.len(), lower.len() + 1, "phi needs one more upper than lower parameter");
        assert!(base_exp >= 1, "base exponent must be positive");
        PhiSpec { upper, lower, base_exp, argument }
    }

    /// `Some(M)` when an upper parameter is exactly `q^{-M r}`, so that every
    /// term past `n = M` vanishes.
    pub fn terminating_at(&self) -> Option<u32> {
        self.upper
            .iter()
            .filter(|a| a.coeff.is_one() && a.exp <= 0 && a.exp % self.base_exp == 0)
            .map(|a| (-a.exp / self.base_exp) as u32)
            .min()
    }

    /// Lower bound on the `q`-valuation of term `n`.
    fn term_valuation(&self, n: i64) -> i64 {
        let r = self.base_exp;
        let mut v = n * self.argument.exp;
        for k in 0..n {
            for a in &self.upper {
                if !a.is_zero() {
                    v += (a.exp + r * k).min(0);
                }
            }
            for b in &self.lower {
                if !b.is_zero() {
                    v -= (b.exp + r * k).min(0);
                }
            }
        }
        v
    }

    /// First index from which every Pochhammer factor has a nonnegative exponent.
    fn settled_index(&self) -> i64 {
        let r = self.base_exp;
        self.upper
            .iter()
            .chain(&self.lower)
            .filter(|m| !m.is_zero() && m.exp < 0)
            .map(|m| (-m.exp + r - 1) / r)
            .max()
            .unwrap_or(0)
    }
}

/// Sum of the series as a formal Laurent series exact through `q^order`.
pub fn phi_series(spec: &PhiSpec, order: i64) -> Result<LaurentSeries> {
    let mut sum = LaurentSeries::one(order);
    if spec.argument.is_zero() {
        return Ok(sum);
    }
    let terminating = spec.terminating_at();
    let last = match terminating {
        Some(m) => m as i64,
        None => {
            if spec.argument.exp <= 0 {
                return Err(EvalError::NonconvergentFormal(format!(
                    "argument {} has no positive q-power",
                    spec.argument
                )));
            }
            let settled = spec.settled_index();
            let guard = settled + 4 * order.max(1);
            let mut n = settled;
            while spec.term_valuation(n) <= order {
                n += 1;
                if n > guard {
                    return Err(EvalError::NonconvergentFormal(format!(
                        "term valuation still <= {order} after {guard} terms"
                    )));
                }
            }
            n - 1
        }
    };
    // Work with enough headroom that the lowest intermediate valuations do not
    // eat into the requested window.
    let headroom = (0..=last).map(|n| (-spec.term_valuation(n)).max(0)).max().unwrap_or(0);
    let work = order + headroom;
    let r = spec.base_exp;
    let mut term = LaurentSeries::one(work);
    for n in 0..last {
        // t_{n+1} = t_n * prod (1 - a q^{rn}) z / ((1 - q^{r(n+1)}) prod (1 - b q^{rn}))
        for a in &spec.upper {
            term = term.mul_linear(&Rational::one(), &a.coeff, a.exp + r * n);
        }
        for b in &spec.lower {
            if !b.is_zero() && b.coeff.is_one() && b.exp + r * n == 0 {
                return Err(EvalError::PoleInLowerParameter(b.to_string()));
            }
            term = term.div_linear(&Rational::one(), &b.coeff, b.exp + r * n)?;
        }
        term = term.div_linear(&Rational::one(), &Rational::one(), r * (n + 1))?;
        term = term.shift(spec.argument.exp).scale(&spec.argument.coeff);
        if term.is_zero() && terminating.is_some() {
            break;
        }
        sum = sum.add(&term);
    }
    Ok(sum.truncate(order))
}

/// Value at a rational `q` with `0 < |q| < 1`: `(partial sum, tail bound)`.
///
/// Terminating series are summed exactly with a zero bound. Otherwise terms
/// are added until the ratio-test tail estimate drops to `tol`, giving up with
/// [`EvalError::RatioNotContracting`] after `max_terms`. The bound also
/// absorbs the rounding of intermediate values.
pub fn phi_point(spec: &PhiSpec, q: &Rational, tol: f64, max_terms: usize) -> Result<(Rational, Rational)> {
    let ball = phi_point_ball(spec, q, tol, max_terms)?;
    Ok((ball.mid().clone(), from_f64(ball.rad())))
}

/// [`phi_point`] as a ball. Terminating series are computed exactly.
pub fn phi_point_ball(spec: &PhiSpec, q: &Rational, tol: f64, max_terms: usize) -> Result<Ball> {
    assert!(!q.is_zero() && q.abs() < Rational::one(), "phi_point needs 0 < |q| < 1");
    let one = Ball::exact(Rational::one());
    if spec.argument.is_zero() {
        return Ok(one);
    }
    let terminating = spec.terminating_at();
    let exact = terminating.is_some();
    let settle = |b: Ball| if exact { b } else { b.approx() };
    let r = spec.base_exp;
    let p = pow(q, r);
    let z = spec.argument.at(q);
    let upper: Vec<Rational> = spec.upper.iter().map(|a| a.at(q)).collect();
    let lower: Vec<Rational> = spec.lower.iter().map(|b| b.at(q)).collect();

    let mut sum = one.clone();
    let mut term = one;
    let mut pn = Rational::one();
    let mut recent: Vec<f64> = vec![1.0];
    let mut n = 0usize;
    loop {
        if let Some(m) = terminating {
            if n as u32 >= m {
                return Ok(sum);
            }
        }
        let mut num = z.clone();
        let mut den = Rational::one() - &pn * &p;
        for a in &upper {
            num *= Rational::one() - a * &pn;
        }
        for b in &lower {
            den *= Rational::one() - b * &pn;
        }
        if den.is_zero() {
            return Err(EvalError::DivisionByZero(format!("lower Pochhammer factor at n = {}", n + 1)));
        }
        term = settle(&term * &Ball::exact(num / den));
        pn *= &p;
        n += 1;
        sum = settle(&sum + &term);
        if exact && term.mid().is_zero() {
            return Ok(sum);
        }
        recent.push(term.mid().abs().to_f64().unwrap_or(f64::INFINITY));
        if recent.len() > RATIO_WINDOW + 1 {
            recent.remove(0);
        }
        if !exact && recent.len() > RATIO_WINDOW {
            if let Some(tail) = ratio_tail(&recent, abs_upper(term.mid())) {
                if tail <= tol {
                    return Ok(sum.widen(tail));
                }
            }
        }
        if n >= max_terms {
            return Err(EvalError::RatioNotContracting { ratio: max_ratio(&recent), terms: n });
        }
    }
}

/// Largest ratio `|t_j / t_{j-1}|` over the window, skipping zero denominators.
pub fn max_ratio(recent: &[f64]) -> f64 {
    recent
        .windows(2)
        .filter(|w| w[0] > 0.0)
        .map(|w| w[1] / w[0])
        .fold(0.0, f64::max)
}

/// Ratio-test tail estimate `|t_last| rho / (1 - rho) * S`, or `None` while
/// the window is not contracting.
pub fn ratio_tail(recent: &[f64], last_abs: f64) -> Option<f64> {
    if recent.iter().all(|t| *t == 0.0) {
        return Some(0.0);
    }
    let rho = max_ratio(recent);
    if rho >= 1.0 || !rho.is_finite() {
        return None;
    }
    Some(inflate(last_abs * rho / (1.0 - rho) * TAIL_SAFETY))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{poch_series, PochLength};
    use crate::rational::{frac, int};

    fn mono(c: Rational, e: i64) -> Monomial {
        Monomial::new(c, e)
    }

    #[test]
    fn zero_argument_gives_one() {
        let spec = PhiSpec::new(vec![mono(int(2), 0), mono(int(3), 1)], vec![mono(frac(1, 2), 0)], Monomial::zero());
        assert_eq!(phi_series(&spec, 10).unwrap(), LaurentSeries::one(10));
        assert_eq!(phi_point(&spec, &frac(1, 3), 1e-20, 100).unwrap(), (int(1), int(0)));
    }

    #[test]
    fn q_binomial_theorem_series() {
        let k = 15;
        let spec = PhiSpec::new(vec![mono(int(2), 0)], vec![], Monomial::q_pow(1));
        let lhs = phi_series(&spec, k).unwrap();
        let num = poch_series(&mono(int(2), 1), PochLength::Infinite, k).unwrap();
        let den = poch_series(&Monomial::q_pow(1), PochLength::Infinite, k).unwrap();
        let rhs = num.div(&den).unwrap();
        assert_eq!(lhs.window(0, k), rhs.window(0, k));
    }

    #[test]
    fn terminating_point_value() {
        let spec = PhiSpec::new(
            vec![Monomial::q_pow(-1), mono(frac(1, 3), 0)],
            vec![mono(frac(1, 5), 0)],
            Monomial::q_pow(1),
        );
        assert_eq!(spec.terminating_at(), Some(1));
        assert_eq!(phi_point(&spec, &frac(1, 2), 1e-20, 100).unwrap(), (frac(1, 6), int(0)));
    }

    #[test]
    fn first_terms_match_pochhammer_products() {
        // 2phi1(q, q; q^2; q, q) through q^3
        let spec = PhiSpec::new(vec![Monomial::q_pow(1), Monomial::q_pow(1)], vec![Monomial::q_pow(2)], Monomial::q_pow(1));
        let got = phi_series(&spec, 3).unwrap();
        let mut want = LaurentSeries::zero(3);
        for n in 0..4u32 {
            let a = poch_series(&Monomial::q_pow(1), PochLength::Finite(n), 3).unwrap();
            let b = poch_series(&Monomial::q_pow(2), PochLength::Finite(n), 3).unwrap();
            let t = a.mul(&a).div(&b).unwrap().div(&a).unwrap().shift(n as i64);
            want = want.add(&t.truncate(3));
        }
        assert_eq!(got.window(0, 3), want.window(0, 3));
    }

    #[test]
    fn q_gauss_within_tail() {
        let (a, b, c, q) = (frac(1, 2), frac(1, 3), frac(1, 7), frac(1, 5));
        let z = &c / (&a * &b);
        let spec = PhiSpec::new(vec![mono(a.clone(), 0), mono(b.clone(), 0)], vec![mono(c.clone(), 0)], mono(z.clone(), 0));
        let (v, tail) = phi_point(&spec, &q, 1e-30, 2000).unwrap();
        let ctx = crate::eval::Ctx::analytic(q.clone(), 1e-40);
        let inf = |x: &Rational| ctx.poch_inf(x, 0).unwrap();
        let closed = (inf(&(&c / &a)) * inf(&(&c / &b))).div(&(inf(&c) * inf(&z))).unwrap();
        let closed = closed.as_ball().unwrap();
        assert!((v - closed.mid()).abs() <= tail + from_f64(closed.rad()));
    }

    #[test]
    fn divergent_argument_is_reported() {
        let spec = PhiSpec::new(vec![mono(frac(1, 2), 0)], vec![], mono(int(3), 0));
        let err = phi_point(&spec, &frac(1, 2), 1e-20, 200).unwrap_err();
        assert!(matches!(err, EvalError::RatioNotContracting { .. }));
        assert!(matches!(phi_series(&spec, 5), Err(EvalError::NonconvergentFormal(_))));
    }

    #[test]
    fn lower_pole_is_reported() {
        let spec = PhiSpec::new(vec![mono(frac(1, 2), 0), mono(frac(1, 3), 0)], vec![Monomial::q_pow(-1)], Monomial::q_pow(1));
        assert!(matches!(phi_series(&spec, 5), Err(EvalError::PoleInLowerParameter(_))));
    }
}
