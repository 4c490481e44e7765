//! One-variable generalizations of the five entries and their finite
//! analogues. Setting `e = 0` recovers the entries themselves.

use super::blocks::*;
use super::{Identity, VerifyMode::*};
use crate::error::Result;
use crate::eval::{Args, Ctx, Val};
use crate::rational::{int, pow, Rational};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new("GEN-E1", Analytic, "One-variable generalization of Entry 1",
            "(-aq)_inf (be)_inf/((-ae)_inf (bq)_inf) = sum_{n>=0} (-1)^n (-b/a)_n (q/e)_n (ae)^n/((q)_n (bq)_n)")
            .free(&["a", "b", "e"])
            .form("product", gen_e1_product)
            .form("sum", gen_e1_sum),
        Identity::new("FIN-E1", Exact, "Finite analogue of the Entry 1 generalization",
            "(-aq)_N (be)_N/(bq)_N = sum_{n=0}^N [N n] (-1)^n (-ae)_{N-n} (-b/a)_n (q/e)_n (ae)^n/(bq)_n")
            .free(&["a", "b", "e"])
            .finite()
            .form("product", fin_e1_product)
            .form("sum", fin_e1_sum),
        Identity::new("GEN-E2", Analytic, "One-variable generalization of Entry 2",
            "(aq)_inf/(ae)_inf sum_{n>=1} (-1)^n n (q/e)_n (ae)^n q^{n(n-1)/2}/((aq)_n (q)_n) = -sum_{n>=1} (q/e)_n (ae)^n/(1-q^n)")
            .free(&["a", "e"])
            .form("lhs", gen_e2_lhs)
            .form("rhs", gen_e2_rhs),
        Identity::new("FIN-E2", Exact, "Finite analogue of the Entry 2 generalization",
            "(aq)_N sum_{n=1}^N [N n] (-1)^{n-1} n (q/e)_n (ae)^n q^{n(n-1)/2}/(aq)_n = sum_{n=1}^N [N n] (ae)_{N-n} (q)_n (q/e)_n (ae)^n/(1-q^n)")
            .free(&["a", "e"])
            .finite()
            .form("lhs", fin_e2_lhs)
            .form("rhs", fin_e2_rhs),
        Identity::new("GEN-E3", Analytic, "One-variable generalization of Entry 3",
            "sum_{n>=1} (-1)^n (b/a)_n a^n q^{n(n+1)/2}/((1-q^n)(b)_n (q/e)_n e^n) = sum_{n>=1} (aq/(be))_n b^n/((1-q^n)(q/e)_n) - sum_{n>=1} b^n/(1-q^n)")
            .free(&["a", "b", "e"])
            .form("lhs", gen_e3_lhs)
            .form("rhs", gen_e3_rhs),
        Identity::new("FIN-E3", Exact, "Finite analogue of the Entry 3 generalization",
            "sum_{n=1}^N [N n] (-1)^n (q)_{n-1} (b/a)_n a^n q^{n(n+1)/2}/((b)_n (q/e)_n e^n) = sum_{n=1}^N [N n] (q)_{n-1} (b)_{N-n} (aq/(be))_n b^n/((b)_N (q/e)_n) - sum_{n=1}^N bq^{n-1}/(1-bq^{n-1})")
            .free(&["a", "b", "e"])
            .finite()
            .form("lhs", fin_e3_lhs)
            .form("rhs", fin_e3_rhs),
        Identity::new("GEN-E4", Formal, "One-variable generalization of Entry 4",
            "sum_{n>=1} z^n q^{n(n+1)}/((1-q^n)(zq)_n (q/e)_n e^n) = sum_{n>=1} (zq)^n/(1-q^n) (1/(q/e)_n - 1)")
            .free(&["z", "e"])
            .form("lhs", gen_e4_lhs)
            .form("rhs", gen_e4_rhs),
        Identity::new("FIN-E4", Exact, "Finite analogue of the Entry 4 generalization",
            "sum_{n=1}^N [N n] (q)_{n-1} z^n q^{n(n+1)}/((zq)_n (q/e)_n e^n) = sum_{n=1}^N [N n] (q)_{n-1} (zq)_{N-n} (zq)^n/((zq)_N (q/e)_n) - sum_{n=1}^N zq^n/(1-zq^n)")
            .free(&["z", "e"])
            .finite()
            .form("lhs", fin_e4_lhs)
            .form("rhs", fin_e4_rhs)
            .correction("(aq)^n read as (zq)^n: no parameter a is in scope, and only the z reading holds at N = 1"),
        Identity::new("GEN-E5", Analytic, "One-variable generalization of Entry 5",
            "sum_{n>=1} (-1)^n (q)_{n-1} a^n q^{n(n+1)/2}/((1-q^n)(a)_n (q/e)_n e^n) = -sum_{n>=1} a^n/(1-q^n) sum_{k=1}^n q^k/(e-q^k)")
            .free(&["a", "e"])
            .form("lhs", gen_e5_lhs)
            .form("rhs", gen_e5_rhs),
        Identity::new("FIN-E5", Exact, "Finite analogue of the Entry 5 generalization",
            "sum_{n=1}^N [N n] (-1)^n (q)_{n-1}^2 a^n q^{n(n+1)/2}/((a)_n (q/e)_n e^n) = -sum_{n=1}^N [N n] (q)_{n-1} (a)_{N-n} a^n/(a)_N sum_{k=1}^n q^k/(e-q^k)")
            .free(&["a", "e"])
            .finite()
            .form("lhs", fin_e5_lhs)
            .form("rhs", fin_e5_rhs),
    ]
}

fn gen_e1_product(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, e) = (x.r("a")?, x.r("b")?, x.r("e")?);
    (c.poch_inf(&-a, 1)? * c.poch_inf(&(b * e), 0)?).div(&(c.poch_inf(&-(a * e), 0)? * c.poch_inf(b, 1)?))
}

fn gen_e1_sum(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, e) = (x.r("a")?, x.r("b")?, x.r("e")?);
    c.sum_inf(0, flat, |n| {
        let num = signed(c, n) * scaled(c, a, &-b, n) * c.rev(e, n);
        num.div(&(c.qfac(n) * c.poch(b, 1, n)))
    })
}

fn fin_e1_product(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, e, big_n) = (x.r("a")?, x.r("b")?, x.r("e")?, x.n("N")?);
    (c.poch(&-a, 1, big_n) * c.poch(&(b * e), 0, big_n)).div(&c.poch(b, 1, big_n))
}

fn fin_e1_sum(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, e, big_n) = (x.r("a")?, x.r("b")?, x.r("e")?, x.n("N")?);
    let ae = -(a * e);
    c.sum(0, big_n, |n| {
        let num = c.qbinom(big_n, n) * signed(c, n) * c.poch(&ae, 0, big_n - n) * scaled(c, a, &-b, n) * c.rev(e, n);
        num.div(&c.poch(b, 1, n))
    })
}

fn gen_e2_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, e) = (x.r("a")?, x.r("e")?);
    let s = c.sum_inf(1, flat, |n| {
        let num = signed(c, n) * c.rev(e, n) * c.mono(&(int(n) * pow(a, n)), n * (n - 1) / 2);
        num.div(&(c.poch(a, 1, n) * c.qfac(n)))
    })?;
    (c.poch_inf(a, 1)? * s).div(&c.poch_inf(&(a * e), 0)?)
}

fn gen_e2_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, e) = (x.r("a")?, x.r("e")?);
    let s = c.sum_inf(1, flat, |n| (c.rev(e, n) * power(c, a, n)).div(&one_minus_qn(c, n)))?;
    Ok(-s)
}

fn fin_e2_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, e, big_n) = (x.r("a")?, x.r("e")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * signed(c, n - 1) * c.rev(e, n) * c.mono(&(int(n) * pow(a, n)), n * (n - 1) / 2);
        num.div(&c.poch(a, 1, n))
    })?;
    Ok(c.poch(a, 1, big_n) * s)
}

fn fin_e2_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, e, big_n) = (x.r("a")?, x.r("e")?, x.n("N")?);
    let ae = a * e;
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.poch(&ae, 0, big_n - n) * c.qfac(n) * c.rev(e, n) * power(c, a, n);
        num.div(&one_minus_qn(c, n))
    })
}

fn gen_e3_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, e) = (x.r("a")?, x.r("b")?, x.r("e")?);
    c.sum_inf(1, flat, |n| {
        let num = signed(c, n) * scaled(c, a, b, n) * c.q_pow(tri(n));
        num.div(&(one_minus_qn(c, n) * c.poch(b, 0, n) * c.rev(e, n)))
    })
}

// (aq/(be))_n b^n/(q/e)_n = prod_{j=1}^n (be - a q^j) / prod_{j=1}^n (e - q^j)
fn gen_e3_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, e) = (x.r("a")?, x.r("b")?, x.r("e")?);
    let be = b * e;
    c.sum_inf(1, flat, |n| {
        let first = c.lin_prod(&be, a, 1, 1, n).div(&c.rev(e, n))?;
        (first - power(c, b, n)).div(&one_minus_qn(c, n))
    })
}

fn fin_e3_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, e, big_n) = (x.r("a")?, x.r("b")?, x.r("e")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * signed(c, n) * c.qfac(n - 1) * scaled(c, a, b, n) * c.q_pow(tri(n));
        num.div(&(c.poch(b, 0, n) * c.rev(e, n)))
    })
}

fn fin_e3_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, e, big_n) = (x.r("a")?, x.r("b")?, x.r("e")?, x.n("N")?);
    let be = b * e;
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n - 1) * c.poch(b, 0, big_n - n) * c.lin_prod(&be, a, 1, 1, n);
        num.div(&c.rev(e, n))
    })?;
    Ok(s.div(&c.poch(b, 0, big_n))? - c.sum(1, big_n, |n| geo(c, b, n - 1))?)
}

fn gen_e4_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, e) = (x.r("z")?, x.r("e")?);
    c.sum_inf(1, tri, |n| {
        c.mono(&pow(z, n), n * (n + 1)).div(&(one_minus_qn(c, n) * c.poch(z, 1, n) * c.rev(e, n)))
    })
}

// (zq)^n (1/(q/e)_n - 1) = (zq)^n e^n/((q/e)_n e^n) - (zq)^n; the first part
// vanishes identically at e = 0.
fn gen_e4_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, e) = (x.r("z")?, x.r("e")?);
    let s = c.sum_inf(1, linear, |n| {
        if num_traits::Zero::is_zero(e) {
            return Ok(c.zero());
        }
        c.mono(&pow(&(z * e), n), n).div(&(one_minus_qn(c, n) * c.rev(e, n)))
    })?;
    Ok(s - c.lambert(z)?)
}

fn fin_e4_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, e, big_n) = (x.r("z")?, x.r("e")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n - 1) * c.mono(&pow(z, n), n * (n + 1));
        num.div(&(c.poch(z, 1, n) * c.rev(e, n)))
    })
}

fn fin_e4_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    fin_e4_rhs_with(c, x, x.r("z")?)
}

/// The right side as printed, with `(aq)^n` for a separate parameter `a`.
pub(crate) fn fin_e4_rhs_literal(c: &Ctx, x: &Args) -> Result<Val> {
    fin_e4_rhs_with(c, x, x.r("a")?)
}

fn fin_e4_rhs_with(c: &Ctx, x: &Args, base: &Rational) -> Result<Val> {
    let (z, e, big_n) = (x.r("z")?, x.r("e")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n - 1) * c.poch(z, 1, big_n - n) * c.mono(&pow(&(base * e), n), n);
        num.div(&c.rev(e, n))
    })?;
    Ok(s.div(&c.poch(z, 1, big_n))? - c.sum(1, big_n, |n| geo(c, z, n))?)
}

fn gen_e5_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, e) = (x.r("a")?, x.r("e")?);
    c.sum_inf(1, flat, |n| {
        let num = signed(c, n) * c.qfac(n - 1) * power(c, a, n) * c.q_pow(tri(n));
        num.div(&(one_minus_qn(c, n) * c.poch(a, 0, n) * c.rev(e, n)))
    })
}

fn gen_e5_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, e) = (x.r("a")?, x.r("e")?);
    let mut inner = c.zero();
    let s = c.sum_inf(1, flat, |n| {
        inner = c.settle(&inner + c.q_pow(n).div(&c.lin(e, &one(), n))?);
        (power(c, a, n) * &inner).div(&one_minus_qn(c, n))
    })?;
    Ok(-s)
}

fn fin_e5_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, e, big_n) = (x.r("a")?, x.r("e")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let qf = c.qfac(n - 1);
        let num = c.qbinom(big_n, n) * signed(c, n) * &qf * &qf * power(c, a, n) * c.q_pow(tri(n));
        num.div(&(c.poch(a, 0, n) * c.rev(e, n)))
    })
}

fn fin_e5_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, e, big_n) = (x.r("a")?, x.r("e")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n - 1) * c.poch(a, 0, big_n - n) * power(c, a, n);
        Ok(num * harmonic(c, e, n)?)
    })?;
    Ok(-s.div(&c.poch(a, 0, big_n))?)
}
