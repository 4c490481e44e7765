//! Finite sums that evaluate to combinations of `2phi1` and `3phi2` series:
//! the Dixit-Patel sum with a derivative-type weight `n`, and the
//! `e`-generalization of it built from the harmonic-type lemma.

use super::blocks::*;
use super::{Identity, VerifyMode::*};
use crate::error::{EvalError, Result};
use crate::eval::{Args, Ctx, Val};
use crate::hypergeometric::PhiSpec;
use crate::kernel::Monomial;
use crate::rational::{int, pow, Rational};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new("DP-PHI21", Formal, "Dixit-Patel finite sum with a 2phi1 tail",
            "sum_{n=1}^N [N n] n (-1)^{n-1} (c/d)_n d^n q^{n(n+1)/2}/(cq)_n + (c/d)_inf (dq)_inf/((cq)_inf (dq^{N+1})_inf) sum_{n=1}^N [N n] d^n q^{n(n+1)}/((dq)_n (1-q^n)) 2phi1(dq, dq^{N+1}; dq^{n+1}; q, cq^n/d) = c/(c-d) (1 - (dq)_N/(cq)_N) + 1/(cq)_N sum_{n=1}^N [N n] (cq/d)_n (dq)_{N-n} (dq)^n/(1-q^n)")
            .free(&["c", "d"])
            .finite()
            .guard(c_ne_d)
            .form("lhs", dp_phi21_lhs)
            .form("rhs", dp_phi21_rhs)
            .correction("2phi1 argument cq^{n+1}/d read as cq^n/d: the literal argument fails at N = 1, the corrected one holds"),
        Identity::new("LEM-7-1", Formal, "Harmonic-weighted finite sum as a double series",
            "sum_{n=1}^N [N n] (-1)^{n-1} (c/d)_n (q/e)_{n-1} e^{n-1} d^n q^{n(n+1)/2}/((cq)_n (q)_{n-1}) sum_{k=1}^n q^k/(1-q^k) = (c/d)_inf (deq)_inf (q/e)_inf/((cq)_inf (deq^{N+1})_inf (q)_inf) sum_{k=1}^N [N k] e^{k-1} d^k q^{k(k+1)}/((deq)_k (1-q^k)) sum_{m>=0} (dq)_m (deq^{N+1})_m/((deq^{k+1})_m (q)_m) (cq^k/d)^m 2phi1(e, deq^{N+m+1}; deq^{k+m+1}; q, q^k/e)")
            .free(&["c", "d", "e"])
            .finite()
            .guard(c_ne_d)
            .form("lhs", lem71_lhs)
            .form("rhs", lem71_rhs),
        Identity::new("LEM-7-2", Exact, "Terminating form of the e-generalized Dixit-Patel sum",
            "sum_{n=1}^N [N n] (-1)^{n-1} (c/d)_n (q/e)_{n-1} e^{n-1} d^n q^{n(n+1)/2}/((cq)_n (q)_{n-1}) = (deq)_N/(cq)_N sum_{n=1}^N (q^-N)_n (d/c)_n (eq)_{n-1}/((deq)_n (q)_n (q)_{n-1}) (cq^{N+1})^n")
            .free(&["c", "d", "e"])
            .finite()
            .form("lhs", lem72_lhs)
            .form("rhs", lem72_rhs),
        Identity::new("THM-7-3", Formal, "e-generalization of the Dixit-Patel 2phi1 sum",
            "sum_{n=1}^N n [N n] (-1)^{n-1} (c/d)_n (q/e)_{n-1} e^{n-1} d^n q^{n(n+1)/2}/((cq)_n (q)_{n-1}) + (double series of LEM-7-1) = c/(c-d) (right side of LEM-7-2) + (q/e)_{N-1}/((cq)_N (q)_{N-1}) sum_{k=1}^N [N k] (cq/d)_k (deq)_{N-k} (dq)^k e^{k-1}/(1-q^k) 3phi2(q^{-(N-k)}, e, ceq; deq, eq^{1-N}; q, q)")
            .free(&["c", "d", "e"])
            .finite()
            .guard(c_ne_d)
            .form("lhs", thm73_lhs)
            .form("rhs", thm73_rhs),
    ]
}

fn c_ne_d(x: &Args) -> bool {
    x.get("c") != x.get("d")
}

fn m(c: &Rational, e: i64) -> Monomial {
    Monomial::new(c.clone(), e)
}

fn c_over_c_minus_d(c: &Rational, d: &Rational) -> Result<Rational> {
    let t = c - d;
    if num_traits::Zero::is_zero(&t) {
        return Err(EvalError::DivisionByZero("c - d".into()));
    }
    Ok(c / t)
}

fn dp_phi21_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    dp_phi21_lhs_with(c, x, 0)
}

/// The left side as printed, with `2phi1` argument `cq^{n+1}/d`.
pub(crate) fn dp_phi21_lhs_literal(c: &Ctx, x: &Args) -> Result<Val> {
    dp_phi21_lhs_with(c, x, 1)
}

fn dp_phi21_lhs_with(c: &Ctx, x: &Args, shift: i64) -> Result<Val> {
    let (cc, d, big_n) = (x.r("c")?, x.r("d")?, x.n("N")?);
    let s1 = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.mono(&(int(n) * crate::rational::sign(n - 1)), tri(n)) * scaled(c, d, cc, n);
        num.div(&c.poch(cc, 1, n))
    })?;
    let pre = (c.poch_inf(&(cc / d), 0)? * c.poch_inf(d, 1)?)
        .div(&(c.poch_inf(cc, 1)? * c.poch_inf(d, big_n + 1)?))?;
    let s2 = c.sum(1, big_n, |n| {
        let phi = c.phi(&PhiSpec::new(vec![m(d, 1), m(d, big_n + 1)], vec![m(d, n + 1)], m(&(cc / d), n + shift)))?;
        let head = c.mono(&pow(d, n), n * (n + 1)).div(&(c.poch(d, 1, n) * one_minus_qn(c, n)))?;
        Ok(c.qbinom(big_n, n) * head * phi)
    })?;
    Ok(s1 + pre * s2)
}

fn dp_phi21_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (cc, d, big_n) = (x.r("c")?, x.r("d")?, x.n("N")?);
    let k = c_over_c_minus_d(cc, d)?;
    let cq_n = c.poch(cc, 1, big_n);
    let head = (c.one() - c.poch(d, 1, big_n).div(&cq_n)?).scale(&k);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.lin_prod(d, cc, 1, 1, n) * c.poch(d, 1, big_n - n) * c.q_pow(n);
        num.div(&one_minus_qn(c, n))
    })?;
    Ok(head + s.div(&cq_n)?)
}

/// Summand of the `e`-generalized Dixit-Patel sum without the Gaussian
/// binomial: `(-1)^{n-1} (c/d)_n (q/e)_{n-1} e^{n-1} d^n q^{n(n+1)/2}/((cq)_n (q)_{n-1})`.
fn dp_e_term(c: &Ctx, cc: &Rational, d: &Rational, e: &Rational, n: i64) -> Result<Val> {
    let num = signed(c, n - 1) * scaled(c, d, cc, n) * c.rev(e, n - 1) * c.q_pow(tri(n));
    num.div(&(c.poch(cc, 1, n) * c.qfac(n - 1)))
}

fn lem71_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (cc, d, e, big_n) = (x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    c.sum(1, big_n, |n| Ok(c.qbinom(big_n, n) * dp_e_term(c, cc, d, e, n)? * harmonic(c, &one(), n)?))
}

fn lem71_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    double_series(c, x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?)
}

fn double_series(c: &Ctx, cc: &Rational, d: &Rational, e: &Rational, big_n: i64) -> Result<Val> {
    let de = d * e;
    let pre = (c.poch_inf(&(cc / d), 0)? * c.poch_inf(&de, 1)? * c.poch_inf(&e.recip(), 1)?)
        .div(&(c.poch_inf(cc, 1)? * c.poch_inf(&de, big_n + 1)? * c.poch_inf(&one(), 1)?))?;
    let ratio = cc / d;
    let tot = c.sum(1, big_n, |k| {
        let inner = c.sum_inf(0, |mm| k * mm, |mm| {
            let phi = c.phi(&PhiSpec::new(
                vec![m(e, 0), m(&de, big_n + mm + 1)],
                vec![m(&de, k + mm + 1)],
                m(&e.recip(), k),
            ))?;
            let num = c.poch(d, 1, mm) * c.poch(&de, big_n + 1, mm) * c.mono(&pow(&ratio, mm), k * mm);
            Ok(num.div(&(c.poch(&de, k + 1, mm) * c.qfac(mm)))? * phi)
        })?;
        let head = c.mono(&(pow(e, k - 1) * pow(d, k)), k * (k + 1)).div(&(c.poch(&de, 1, k) * one_minus_qn(c, k)))?;
        Ok(c.qbinom(big_n, k) * head * inner)
    })?;
    Ok(pre * tot)
}

fn lem72_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (cc, d, e, big_n) = (x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    c.sum(1, big_n, |n| Ok(c.qbinom(big_n, n) * dp_e_term(c, cc, d, e, n)?))
}

fn lem72_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    terminating_side(c, x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?)
}

fn terminating_side(c: &Ctx, cc: &Rational, d: &Rational, e: &Rational, big_n: i64) -> Result<Val> {
    let de = d * e;
    let s = c.sum(1, big_n, |n| {
        let num = c.poch(&one(), -big_n, n) * scaled(c, cc, d, n) * c.poch(e, 1, n - 1) * c.q_pow((big_n + 1) * n);
        num.div(&(c.poch(&de, 1, n) * c.qfac(n) * c.qfac(n - 1)))
    })?;
    (c.poch(&de, 1, big_n) * s).div(&c.poch(cc, 1, big_n))
}

fn thm73_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (cc, d, e, big_n) = (x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| Ok((c.qbinom(big_n, n) * dp_e_term(c, cc, d, e, n)?).scale(&int(n))))?;
    Ok(s + double_series(c, cc, d, e, big_n)?)
}

fn thm73_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (cc, d, e, big_n) = (x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    let first = terminating_side(c, cc, d, e, big_n)?.scale(&c_over_c_minus_d(cc, d)?);
    let de = d * e;
    let ce = cc * e;
    let s = c.sum(1, big_n, |k| {
        let phi = c.phi(&PhiSpec::new(
            vec![m(&one(), -(big_n - k)), m(e, 0), m(&ce, 1)],
            vec![m(&de, 1), m(e, 1 - big_n)],
            m(&one(), 1),
        ))?;
        let num = c.qbinom(big_n, k) * c.lin_prod(d, cc, 1, 1, k) * c.poch(&de, 1, big_n - k)
            * c.mono(&pow(e, k - 1), k);
        Ok(num.div(&one_minus_qn(c, k))? * phi)
    })?;
    let pre = c.poch(&e.recip(), 1, big_n - 1).div(&(c.poch(cc, 1, big_n) * c.qfac(big_n - 1)))?;
    Ok(first + pre * s)
}
