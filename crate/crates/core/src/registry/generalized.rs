//! A five-parameter generalization of the Bhoria-Eyyunni-Maji identity, its
//! finite analogue, their corollaries, and the two-parameter generalization
//! of Garvan's identity.
//!
//! Every `(q/e)_n e^n` is the reversed product `prod_{j=1}^n (e - q^j)`, so
//! `e = 0` is an ordinary point.

use super::blocks::*;
use super::{Identity, VerifyMode::*};
use crate::error::{EvalError, Result};
use crate::eval::{Args, Ctx, Val};
use crate::rational::{pow, Rational};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new("THM-2-1", Analytic, "Five-parameter generalization of the Bhoria-Eyyunni-Maji identity",
            "sum_{n>=1} (b/a)_n (c/d)_n (q/e)_{n-1} (ad)^n e^{n-1}/((b)_n (cq)_n (q)_{n-1}) = (a-b)(d-c)/(ad-b) (ceq)_inf (ad)_inf/((cq)_inf (ade)_inf) sum_{n>=0} (a)_n (bd/c)_n (q/e)_n (ce)^n/((b)_n (ad)_n (q)_n) (adq^n/(1-adq^n) - bq^n/(1-bq^n))")
            .free(&["a", "b", "c", "d", "e"])
            .form("lhs", thm21_lhs)
            .form("rhs", thm21_rhs),
        Identity::new("COR-2-2", Formal, "Generalization with a free z and e",
            "sum_{n>=1} (c/d)_n (q/e)_{n-1} (-dz)^n e^{n-1} q^{n(n+1)/2}/((zq)_n (cq)_n (q)_{n-1}) = (c-d)(z/c) (ceq)_inf/(cq)_inf sum_{n>=1} (zdq/c)_{n-1} (q/e)_{n-1} (cq)^n e^{n-1}/((zq)_n (q)_{n-1})")
            .free(&["z", "c", "d", "e"])
            .form("lhs", cor22_lhs)
            .form("rhs", cor22_rhs),
        Identity::new("COR-2-3", Formal, "Generalization of Andrews' identity",
            "sum_{n>=1} (q/e)_{n-1} e^{n-1} (cz)^n q^{n^2}/((zq)_n (cq)_n (q)_{n-1}) = z (ceq)_inf/(cq)_inf sum_{n>=1} (q/e)_{n-1} e^{n-1} (cq)^n/((zq)_n (q)_{n-1})")
            .free(&["z", "c", "e"])
            .form("lhs", cor23_lhs)
            .form("rhs", cor23_rhs),
        Identity::new("COR-2-4", Analytic, "Generalization of the Dixit-Maji identity",
            "sum_{n>=1} (b/a)_n (q/e)_{n-1} a^n e^{n-1}/((1-cq^n)(b)_n (q)_{n-1}) = (ceq)_inf (a)_inf/((cq)_inf (ae)_inf) sum_{n>=0} (b/c)_n (q/e)_n (ce)^n/((b)_n (q)_n) (aq^n/(1-aq^n) - bq^n/(1-bq^n))")
            .free(&["a", "b", "c", "e"])
            .form("lhs", cor24_lhs)
            .form("rhs", cor24_rhs),
        Identity::new("THM-2-5", Exact, "Finite analogue of the five-parameter identity",
            "sum_{n=1}^N [N n] (q)_n (b/a)_n (c/d)_n (q/e)_{n-1} (ade)_{N-n} (ad)^n e^{n-1}/((b)_n (cq)_n (q)_{n-1}) = (a-b)(d-c)/(ad-b) (ad)_N/(cq)_N sum_{n=1}^N [N n] (q)_n (ceq)_{N-n} (a)_{n-1} (bd/c)_{n-1} (q/e)_{n-1} (ce)^{n-1}/((b)_{n-1} (ad)_{n-1} (q)_{n-1}) (adq^{n-1}/(1-adq^{n-1}) - bq^{n-1}/(1-bq^{n-1}))")
            .free(&["a", "b", "c", "d", "e"])
            .finite()
            .form("lhs", thm25_lhs)
            .form("rhs", thm25_rhs),
        Identity::new("COR-2-6", Exact, "Finite analogue of the z, e generalization",
            "sum_{n=1}^N [N n] (q)_n (c/d)_n (q/e)_{n-1} (-zd)^n q^{n(n+1)/2} e^{n-1}/((zq)_n (cq)_n (q)_{n-1}) = z(c-d)/(c (cq)_N) sum_{n=1}^N [N n] (q)_n (ceq)_{N-n} (zdq/c)_{n-1} (q/e)_{n-1} (cq)^n e^{n-1}/((zq)_n (q)_{n-1})")
            .free(&["z", "c", "d", "e"])
            .finite()
            .form("lhs", cor26_lhs)
            .form("rhs", cor26_rhs),
        Identity::new("COR-2-7", Exact, "Finite analogue of the generalized Andrews identity",
            "sum_{n=1}^N [N n] (q)_n (q/e)_{n-1} (zc)^n e^{n-1} q^{n^2}/((zq)_n (cq)_n (q)_{n-1}) = z/(cq)_N sum_{n=1}^N [N n] (q)_n (ceq)_{N-n} (q/e)_{n-1} (cq)^n e^{n-1}/((zq)_n (q)_{n-1})")
            .free(&["z", "c", "e"])
            .finite()
            .form("lhs", cor27_lhs)
            .form("rhs", cor27_rhs),
        Identity::new("COR-2-8", Exact, "Finite analogue of the generalized Dixit-Maji identity",
            "sum_{n=1}^N [N n] (q)_n (b/a)_n (q/e)_{n-1} (ae)_{N-n} a^n e^{n-1}/((1-cq^n)(b)_n (q)_{n-1}) = (a)_N/(cq)_N sum_{n=1}^N [N n] (q)_n (ceq)_{N-n} (b/c)_{n-1} (q/e)_{n-1} (ce)^{n-1}/((b)_{n-1} (q)_{n-1}) (aq^{n-1}/(1-aq^{n-1}) - bq^{n-1}/(1-bq^{n-1}))")
            .free(&["a", "b", "c", "e"])
            .finite()
            .form("lhs", cor28_lhs)
            .form("rhs", cor28_rhs),
        Identity::new("THM-2-9", Exact, "Two-parameter finite analogue of Garvan's identity",
            "sum_{n=1}^N [N n]_{q^2} (-1)^n (q^2;q^2)_n (z/d;q^2)_n z^n d^n q^{n^2}/((z-d)(zq)_{2n}) = sum_{n=1}^N [N n]_{q^2} ((dq)_{2n-2} z^{2n-1} q^{n(2n-1)}/(zq)_{2n-1} + (dq)_{2n-1} z^{2n} q^{n(2n+1)}/(zq)_{2n}) (q^2;q^2)_n/(dzq^{2N+1};q^2)_n")
            .free(&["z", "d"])
            .finite()
            .guard(z_ne_d)
            .form("lhs", thm29_lhs)
            .form("rhs", thm29_rhs),
        Identity::new("GARVAN-GEN", Formal, "Two-parameter generalization of Garvan's identity",
            "sum_{n>=1} (-1)^n (z/d;q^2)_n z^n d^n q^{n^2}/((z-d)(zq)_{2n}) = sum_{n>=1} (dq)_{n-1} z^n q^{n(n+1)/2}/(zq)_n")
            .free(&["z", "d"])
            .guard(z_ne_d)
            .form("lhs", garvan_gen_lhs)
            .form("rhs", garvan_gen_rhs),
    ]
}

fn z_ne_d(x: &Args) -> bool {
    x.get("z") != x.get("d")
}

fn thm21_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d, e) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?, x.r("e")?);
    c.sum_inf(1, flat, |n| {
        let num = scaled(c, a, b, n) * scaled(c, d, cc, n) * c.rev(e, n - 1);
        num.div(&(c.poch(b, 0, n) * c.poch(cc, 1, n) * c.qfac(n - 1)))
    })
}

fn thm21_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d, e) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?, x.r("e")?);
    let pre = bem_prefactor(a, b, cc, d)?;
    let ad = a * d;
    let prod = (c.poch_inf(&(cc * e), 1)? * c.poch_inf(&ad, 0)?)
        .div(&(c.poch_inf(cc, 1)? * c.poch_inf(&(&ad * e), 0)?))?;
    let s = c.sum_inf(0, linear, |n| {
        let num = c.poch(a, 0, n) * scaled(c, cc, &(b * d), n) * c.rev(e, n);
        Ok(num.div(&(c.poch(b, 0, n) * c.poch(&ad, 0, n) * c.qfac(n)))? * geo_diff(c, &ad, b, n)?)
    })?;
    Ok((prod * s).scale(&pre))
}

fn cor22_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, d, e) = (x.r("z")?, x.r("c")?, x.r("d")?, x.r("e")?);
    c.sum_inf(1, tri, |n| {
        let num = scaled(c, d, cc, n) * power(c, &-z, n) * c.rev(e, n - 1) * c.q_pow(tri(n));
        num.div(&(c.poch(z, 1, n) * c.poch(cc, 1, n) * c.qfac(n - 1)))
    })
}

// (c-d)(z/c) (zdq/c)_{n-1} (cq)^n = (c-d) z q^n prod_{j=1}^{n-1} (c - zd q^j)
fn cor22_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, d, e) = (x.r("z")?, x.r("c")?, x.r("d")?, x.r("e")?);
    let zd = z * d;
    let s = c.sum_inf(1, linear, |n| {
        let num = c.lin_prod(cc, &zd, 1, 1, n - 1) * c.rev(e, n - 1) * c.q_pow(n);
        num.div(&(c.poch(z, 1, n) * c.qfac(n - 1)))
    })?;
    let prod = c.poch_inf(&(cc * e), 1)?.div(&c.poch_inf(cc, 1)?)?;
    Ok((prod * s).scale(&((cc - d) * z)))
}

fn cor23_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, e) = (x.r("z")?, x.r("c")?, x.r("e")?);
    c.sum_inf(1, square, |n| {
        let num = c.rev(e, n - 1) * c.mono(&pow(&(cc * z), n), n * n);
        num.div(&(c.poch(z, 1, n) * c.poch(cc, 1, n) * c.qfac(n - 1)))
    })
}

fn cor23_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, e) = (x.r("z")?, x.r("c")?, x.r("e")?);
    let s = c.sum_inf(1, linear, |n| {
        (c.rev(e, n - 1) * c.mono(&pow(cc, n), n)).div(&(c.poch(z, 1, n) * c.qfac(n - 1)))
    })?;
    let prod = c.poch_inf(&(cc * e), 1)?.div(&c.poch_inf(cc, 1)?)?;
    Ok((prod * s).scale(z))
}

fn cor24_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, e) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("e")?);
    c.sum_inf(1, flat, |n| {
        let num = scaled(c, a, b, n) * c.rev(e, n - 1);
        num.div(&(c.lin(&one(), cc, n) * c.poch(b, 0, n) * c.qfac(n - 1)))
    })
}

fn cor24_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, e) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("e")?);
    let prod = (c.poch_inf(&(cc * e), 1)? * c.poch_inf(a, 0)?)
        .div(&(c.poch_inf(cc, 1)? * c.poch_inf(&(a * e), 0)?))?;
    let s = c.sum_inf(0, linear, |n| {
        let num = scaled(c, cc, b, n) * c.rev(e, n);
        Ok(num.div(&(c.poch(b, 0, n) * c.qfac(n)))? * geo_diff(c, a, b, n)?)
    })?;
    Ok(prod * s)
}

fn thm25_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d, e, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    let ade = a * d * e;
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * scaled(c, a, b, n) * scaled(c, d, cc, n)
            * c.rev(e, n - 1) * c.poch(&ade, 0, big_n - n);
        num.div(&(c.poch(b, 0, n) * c.poch(cc, 1, n) * c.qfac(n - 1)))
    })
}

fn thm25_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d, e, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    let pre = bem_prefactor(a, b, cc, d)?;
    let ad = a * d;
    let ce = cc * e;
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * c.poch(&ce, 1, big_n - n) * c.poch(a, 0, n - 1)
            * scaled(c, cc, &(b * d), n - 1) * c.rev(e, n - 1);
        let den = c.poch(b, 0, n - 1) * c.poch(&ad, 0, n - 1) * c.qfac(n - 1);
        Ok(num.div(&den)? * geo_diff(c, &ad, b, n - 1)?)
    })?;
    Ok((c.poch(&ad, 0, big_n) * s).div(&c.poch(cc, 1, big_n))?.scale(&pre))
}

fn cor26_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, d, e, big_n) = (x.r("z")?, x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * scaled(c, d, cc, n) * power(c, &-z, n)
            * c.q_pow(tri(n)) * c.rev(e, n - 1);
        num.div(&(c.poch(z, 1, n) * c.poch(cc, 1, n) * c.qfac(n - 1)))
    })
}

fn cor26_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, d, e, big_n) = (x.r("z")?, x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    let zd = z * d;
    let ce = cc * e;
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * c.poch(&ce, 1, big_n - n) * c.lin_prod(cc, &zd, 1, 1, n - 1)
            * c.rev(e, n - 1) * c.q_pow(n);
        num.div(&(c.poch(z, 1, n) * c.qfac(n - 1)))
    })?;
    Ok(s.div(&c.poch(cc, 1, big_n))?.scale(&(z * (cc - d))))
}

fn cor27_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, e, big_n) = (x.r("z")?, x.r("c")?, x.r("e")?, x.n("N")?);
    let zc = z * cc;
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * c.rev(e, n - 1) * c.mono(&pow(&zc, n), n * n);
        num.div(&(c.poch(z, 1, n) * c.poch(cc, 1, n) * c.qfac(n - 1)))
    })
}

fn cor27_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, e, big_n) = (x.r("z")?, x.r("c")?, x.r("e")?, x.n("N")?);
    let ce = cc * e;
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * c.poch(&ce, 1, big_n - n) * c.rev(e, n - 1) * c.mono(&pow(cc, n), n);
        num.div(&(c.poch(z, 1, n) * c.qfac(n - 1)))
    })?;
    Ok(s.div(&c.poch(cc, 1, big_n))?.scale(z))
}

fn cor28_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, e, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("e")?, x.n("N")?);
    let ae = a * e;
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * scaled(c, a, b, n) * c.rev(e, n - 1) * c.poch(&ae, 0, big_n - n);
        num.div(&(c.lin(&one(), cc, n) * c.poch(b, 0, n) * c.qfac(n - 1)))
    })
}

fn cor28_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, e, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("e")?, x.n("N")?);
    let ce = cc * e;
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * c.poch(&ce, 1, big_n - n) * scaled(c, cc, b, n - 1) * c.rev(e, n - 1);
        Ok(num.div(&(c.poch(b, 0, n - 1) * c.qfac(n - 1)))? * geo_diff(c, a, b, n - 1)?)
    })?;
    (c.poch(a, 0, big_n) * s).div(&c.poch(cc, 1, big_n))
}

fn z_minus_d(z: &Rational, d: &Rational) -> Result<Rational> {
    let t = z - d;
    if num_traits::Zero::is_zero(&t) {
        return Err(EvalError::DivisionByZero("z - d".into()));
    }
    Ok(t)
}

fn thm29_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, d, big_n) = (x.r("z")?, x.r("d")?, x.n("N")?);
    let k = z_minus_d(z, d)?.recip();
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom_b(big_n, n, 2) * signed(c, n) * qfac_b(c, 2, n) * c.lin_prod(d, z, 0, 2, n)
            * c.mono(&pow(z, n), n * n);
        num.div(&c.poch(z, 1, 2 * n))
    })?;
    Ok(s.scale(&k))
}

fn thm29_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    super::ramanujan::garvan_pair_sum(c, x.r("z")?, x.r("d")?, x.n("N")?)
}

fn garvan_gen_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, d) = (x.r("z")?, x.r("d")?);
    let k = z_minus_d(z, d)?.recip();
    let s = c.sum_inf(1, square, |n| {
        (signed(c, n) * c.lin_prod(d, z, 0, 2, n) * c.mono(&pow(z, n), n * n)).div(&c.poch(z, 1, 2 * n))
    })?;
    Ok(s.scale(&k))
}

fn garvan_gen_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, d) = (x.r("z")?, x.r("d")?);
    c.sum_inf(1, tri, |n| (c.poch(d, 1, n - 1) * c.mono(&pow(z, n), tri(n))).div(&c.poch(z, 1, n)))
}
