//! Identities in base `q^2`: two expressions for the sum `S_1(z, d, N)`,
//! their link to the Garvan-type finite sum, and the chains obtained by
//! specializing `z`.

use super::blocks::*;
use super::ramanujan::garvan_pair_sum;
use super::{Identity, VerifyMode::*};
use crate::error::{EvalError, Result};
use crate::eval::{Args, Ctx, Val};
use crate::rational::{pow, Rational};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new("LEM-6-1", Exact, "Two expressions for a base-q^2 finite sum",
            "sum_{n=1}^N [N n]_{q^2} (q^2;q^2)_n (dq^2;q^2)_{n-1} (zq;q^2)_{N-n} (zq)^n/((zq^2;q^2)_n (zq;q^2)_N) = sum_{n=1}^N [N n]_{q^2} (q^2;q^2)_n (dq;q^2)_{n-1} (zq^2;q^2)_{N-n} z^n q^{2n-1}/((zq;q^2)_n (zq^2;q^2)_N)")
            .free(&["z", "d"])
            .finite()
            .form("first", s1_first)
            .form("second", s1_second),
        Identity::new("LEM-6-2", Exact, "The base-q^2 sum as a Garvan-type finite sum",
            "S_1(z, d, N) in both expressions of LEM-6-1 = sum_{n=1}^N [N n]_{q^2} ((dq)_{2n-2} z^{2n-1} q^{n(2n-1)}/(zq)_{2n-1} + (dq)_{2n-1} z^{2n} q^{n(2n+1)}/(zq)_{2n}) (q^2;q^2)_n/(dzq^{2N+1};q^2)_n")
            .free(&["z", "d"])
            .finite()
            .form("first", s1_first)
            .form("second", s1_second)
            .form("garvan", s1_garvan),
        Identity::new("COR-6-3", Exact, "Four-term chain at z = 1/q",
            "sum_{n=1}^N [N n]_{q^2} (-1)^{n-1} (q^2/d;q^2)_{n-1} d^{n-1} q^{n^2}/(q;q^2)_n = sum_{n=1}^N [N n]_{q^2} (dq^2;q^2)_{n-1} (q;q^2)_{N-n} q^n/(q;q^2)_N = sum_{n=1}^N (dq;q^2)_{n-1} q^{2n-1}/(q;q^2)_n = sum_{n=1}^N [N n]_{q^2} (q^2;q^2)_{n-1} (dq)_{2n-1} (1-dq^{4n-1}) q^{n(2n-1)}/((dq^{2N+1};q^2)_n (q)_{2n-1} (1-dq^{2n-1}))")
            .free(&["d"])
            .finite()
            .form("alternating", cor63_alternating)
            .form("binomial", cor63_binomial)
            .form("plain", cor63_plain)
            .form("garvan", cor63_garvan),
        Identity::new("COR-6-4", Analytic, "Infinite four-term chain",
            "sum_{n>=1} (-1)^n (1/d;q^2)_n d^n q^{n^2}/((1-d)(q)_{2n}) = sum_{n>=1} (dq^2;q^2)_{n-1} q^n/(q^2;q^2)_n = sum_{n>=1} (dq;q^2)_{n-1} q^{2n-1}/(q;q^2)_n = sum_{n>=1} (dq)_{2n-1} (1-dq^{4n-1}) q^{n(2n-1)}/((q)_{2n-1} (1-q^{2n}) (1-dq^{2n-1}))")
            .free(&["d"])
            .guard(d_ne_one)
            .form("alternating", cor64_alternating)
            .form("binomial", cor64_binomial)
            .form("plain", cor64_plain)
            .form("garvan", cor64_garvan),
        Identity::new("COR-6-5", Exact, "Five-term chain at z = q",
            "1/(d-q) (1 - (dq^2;q^2)_N/(q^3;q^2)_N) = sum_{n=1}^N [N n]_{q^2} (-1)^{n-1} (q/d;q^2)_n d^n q^{n(n+1)}/((d-q)(q^3;q^2)_n) = sum_{n=1}^N [N n]_{q^2} (dq;q^2)_{n-1} (q^3;q^2)_{N-n} q^{3n-1}/(q^3;q^2)_N = sum_{n=1}^N (dq^2;q^2)_{n-1} q^{2n}/(q^3;q^2)_n = (1-q) sum_{n=1}^N [N n]_{q^2} (q^2;q^2)_{n-1} (dq)_{2n-1} (1-dq^{4n}) q^{2n^2+n-1}/((dq^{2N+2};q^2)_n (q)_{2n-1} (1-dq^{2n-1}) (1-q^{2n+1}))")
            .free(&["d"])
            .finite()
            .form("closed", cor65_closed)
            .form("alternating", cor65_alternating)
            .form("binomial", cor65_binomial)
            .form("plain", cor65_plain)
            .form("garvan", cor65_garvan),
    ]
}

fn d_ne_one(x: &Args) -> bool {
    x.get("d") != Some(&one())
}

/// `(x q^s; q^2)_n`.
fn p2(c: &Ctx, x: &Rational, s: i64, n: i64) -> Val {
    c.poch_b(x, s, 2, n)
}

fn s1_first(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, d, big_n) = (x.r("z")?, x.r("d")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom_b(big_n, n, 2) * qfac_b(c, 2, n) * p2(c, d, 2, n - 1) * p2(c, z, 1, big_n - n)
            * c.mono(&pow(z, n), n);
        num.div(&p2(c, z, 2, n))
    })?;
    s.div(&p2(c, z, 1, big_n))
}

fn s1_second(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, d, big_n) = (x.r("z")?, x.r("d")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom_b(big_n, n, 2) * qfac_b(c, 2, n) * p2(c, d, 1, n - 1) * p2(c, z, 2, big_n - n)
            * c.mono(&pow(z, n), 2 * n - 1);
        num.div(&p2(c, z, 1, n))
    })?;
    s.div(&p2(c, z, 2, big_n))
}

fn s1_garvan(c: &Ctx, x: &Args) -> Result<Val> {
    garvan_pair_sum(c, x.r("z")?, x.r("d")?, x.n("N")?)
}

fn cor63_alternating(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let num = c.qbinom_b(big_n, n, 2) * signed(c, n - 1) * c.lin_prod(d, &one(), 2, 2, n - 1) * c.q_pow(n * n);
        num.div(&p2(c, &one(), 1, n))
    })
}

fn cor63_binomial(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        Ok(c.qbinom_b(big_n, n, 2) * p2(c, d, 2, n - 1) * p2(c, &one(), 1, big_n - n) * c.q_pow(n))
    })?;
    s.div(&p2(c, &one(), 1, big_n))
}

fn cor63_plain(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    c.sum(1, big_n, |n| (p2(c, d, 1, n - 1) * c.q_pow(2 * n - 1)).div(&p2(c, &one(), 1, n)))
}

fn cor63_garvan(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let num = c.qbinom_b(big_n, n, 2) * qfac_b(c, 2, n - 1) * c.poch(d, 1, 2 * n - 1)
            * c.lin(&one(), d, 4 * n - 1) * c.q_pow(n * (2 * n - 1));
        num.div(&(p2(c, d, 2 * big_n + 1, n) * c.qfac(2 * n - 1) * c.lin(&one(), d, 2 * n - 1)))
    })
}

fn one_minus(d: &Rational) -> Result<Rational> {
    let t = one() - d;
    if num_traits::Zero::is_zero(&t) {
        return Err(EvalError::PoleGuardViolation("d = 1".into()));
    }
    Ok(t)
}

fn cor64_alternating(c: &Ctx, x: &Args) -> Result<Val> {
    let d = x.r("d")?;
    let k = one_minus(d)?.recip();
    let s = c.sum_inf(1, square, |n| {
        (signed(c, n) * c.lin_prod(d, &one(), 0, 2, n) * c.q_pow(n * n)).div(&c.qfac(2 * n))
    })?;
    Ok(s.scale(&k))
}

fn cor64_binomial(c: &Ctx, x: &Args) -> Result<Val> {
    let d = x.r("d")?;
    c.sum_inf(1, linear, |n| (p2(c, d, 2, n - 1) * c.q_pow(n)).div(&qfac_b(c, 2, n)))
}

fn cor64_plain(c: &Ctx, x: &Args) -> Result<Val> {
    let d = x.r("d")?;
    c.sum_inf(1, linear, |n| (p2(c, d, 1, n - 1) * c.q_pow(2 * n - 1)).div(&p2(c, &one(), 1, n)))
}

fn cor64_garvan(c: &Ctx, x: &Args) -> Result<Val> {
    let d = x.r("d")?;
    c.sum_inf(1, linear, |n| {
        let num = c.poch(d, 1, 2 * n - 1) * c.lin(&one(), d, 4 * n - 1) * c.q_pow(n * (2 * n - 1));
        num.div(&(c.qfac(2 * n - 1) * one_minus_qn(c, 2 * n) * c.lin(&one(), d, 2 * n - 1)))
    })
}

fn d_minus_q(c: &Ctx, d: &Rational) -> Val {
    c.lin(d, &one(), 1)
}

fn cor65_closed(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    let ratio = p2(c, d, 2, big_n).div(&p2(c, &one(), 3, big_n))?;
    (c.one() - ratio).div(&d_minus_q(c, d))
}

fn cor65_alternating(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom_b(big_n, n, 2) * signed(c, n - 1) * c.lin_prod(d, &one(), 1, 2, n) * c.q_pow(n * (n + 1));
        num.div(&p2(c, &one(), 3, n))
    })?;
    s.div(&d_minus_q(c, d))
}

fn cor65_binomial(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        Ok(c.qbinom_b(big_n, n, 2) * p2(c, d, 1, n - 1) * p2(c, &one(), 3, big_n - n) * c.q_pow(3 * n - 1))
    })?;
    s.div(&p2(c, &one(), 3, big_n))
}

fn cor65_plain(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    c.sum(1, big_n, |n| (p2(c, d, 2, n - 1) * c.q_pow(2 * n)).div(&p2(c, &one(), 3, n)))
}

fn cor65_garvan(c: &Ctx, x: &Args) -> Result<Val> {
    let (d, big_n) = (x.r("d")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom_b(big_n, n, 2) * qfac_b(c, 2, n - 1) * c.poch(d, 1, 2 * n - 1)
            * c.lin(&one(), d, 4 * n) * c.q_pow(2 * n * n + n - 1);
        let den = p2(c, d, 2 * big_n + 2, n) * c.qfac(2 * n - 1) * c.lin(&one(), d, 2 * n - 1) * one_minus_qn(c, 2 * n + 1);
        num.div(&den)
    })?;
    Ok(s * one_minus_qn(c, 1))
}
