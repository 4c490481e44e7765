//! Ramanujan's five entries, the classical relatives built on them, and
//! their finite analogues with a Gaussian binomial weight.

use super::blocks::*;
use super::{Identity, VerifyMode::*};
use crate::error::Result;
use crate::eval::{Args, Ctx, Val};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new("E1", Formal, "Ramanujan's Entry 1",
            "(-aq)_inf/(bq)_inf = sum_{n>=0} (-b/a)_n a^n q^{n(n+1)/2} / ((q)_n (bq)_n)")
            .free(&["a", "b"])
            .form("product", e1_product)
            .form("sum", e1_sum),
        Identity::new("E2", Formal, "Ramanujan's Entry 2",
            "(aq)_inf sum_{n>=1} n a^n q^{n^2}/((q)_n (aq)_n) = sum_{n>=1} (-1)^{n-1} a^n q^{n(n+1)/2}/(1-q^n)")
            .free(&["a"])
            .form("lhs", e2_lhs)
            .form("rhs", e2_rhs),
        Identity::new("E3", Analytic, "Ramanujan's Entry 3",
            "sum_{n>=1} (b/a)_n a^n/((1-q^n)(b)_n) = sum_{n>=1} (a^n - b^n)/(1-q^n)")
            .free(&["a", "b"])
            .form("lhs", e3_lhs)
            .form("rhs", e3_rhs),
        Identity::new("E4", Formal, "Ramanujan's Entry 4",
            "sum_{n>=1} (-1)^{n-1} z^n q^{n(n+1)/2}/((1-q^n)(zq)_n) = sum_{n>=1} z^n q^n/(1-q^n)")
            .free(&["z"])
            .form("lhs", e4_lhs)
            .form("rhs", e4_rhs),
        Identity::new("E5", Analytic, "Ramanujan's Entry 5",
            "sum_{n>=1} a^n (q)_{n-1}/((1-q^n)(a)_n) = sum_{n>=1} n a^n/(1-q^n)")
            .free(&["a"])
            .form("lhs", e5_lhs)
            .form("rhs", e5_rhs),
        Identity::new("KLUYVER", Formal, "Kluyver's identity",
            "sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2}/((1-q^n)(q)_n) = sum_{n>=1} q^n/(1-q^n)")
            .form("lhs", kluyver_lhs)
            .form("rhs", kluyver_rhs),
        Identity::new("UCHIMURA-TRIPLE", Formal, "Uchimura's three expressions for the divisor generating function",
            "sum_{n>=1} n q^n (q^{n+1})_inf = sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2}/((1-q^n)(q)_n) = sum_{n>=1} q^n/(1-q^n)")
            .form("weighted", uchimura_weighted)
            .form("alternating", kluyver_lhs)
            .form("lambert", kluyver_rhs),
        Identity::new("DM", Analytic, "Dixit-Maji generalization of Entry 3",
            "sum_{n>=1} (b/a)_n a^n/((1-cq^n)(b)_n) = sum_{n>=0} (b/c)_n c^n/(b)_n (aq^n/(1-aq^n) - bq^n/(1-bq^n))")
            .free(&["a", "b", "c"])
            .form("lhs", dm_lhs)
            .form("rhs", dm_rhs),
        Identity::new("DM-COR", Formal, "Dixit-Maji corollary",
            "sum_{n>=1} (-1)^{n-1} z^n q^{n(n+1)/2}/((1-cq^n)(zq)_n) = (z/c) sum_{n>=1} (zq/c)_{n-1} (cq)^n/(zq)_n")
            .free(&["z", "c"])
            .form("lhs", dm_cor_lhs)
            .form("rhs", dm_cor_rhs),
        Identity::new("GARVAN", Formal, "Garvan's identity",
            "sum_{n>=1} (-1)^{n-1} z^n q^{n^2}/((zq;q^2)_n (1-zq^{2n})) = sum_{n>=1} (q)_{n-1} z^n q^{n(n+1)/2}/(zq)_n")
            .free(&["z"])
            .form("lhs", garvan_lhs)
            .form("rhs", garvan_rhs),
        Identity::new("ANDREWS-QS", Formal, "Andrews' two-parameter q-series identity",
            "sum_{n>=1} z^n c^n q^{n^2}/((zq)_n (cq)_n) = z sum_{n>=1} (cq)^n/(zq)_n")
            .free(&["z", "c"])
            .form("lhs", andrews_lhs)
            .form("rhs", andrews_rhs),
        Identity::new("BEM", Analytic, "Bhoria-Eyyunni-Maji generalization",
            "sum_{n>=1} (b/a)_n (c/d)_n (ad)^n/((b)_n (cq)_n) = (a-b)(d-c)/(ad-b) sum_{n>=0} (a)_n (bd/c)_n c^n/((b)_n (ad)_n) (adq^n/(1-adq^n) - bq^n/(1-bq^n))")
            .free(&["a", "b", "c", "d"])
            .form("lhs", bem_lhs)
            .form("rhs", bem_rhs),
        Identity::new("DEMS", Exact, "Finite analogue of the Dixit-Maji identity",
            "sum_{n=1}^N [N n] (a)_{N-n} (b/a)_n (q)_n a^n/((a)_N (1-cq^n)(b)_n) = sum_{n=1}^N [N n] (cq)_{N-n} (b/c)_{n-1} (q)_n c^{n-1}/((cq)_N (b)_{n-1}) (aq^{n-1}/(1-aq^{n-1}) - bq^{n-1}/(1-bq^{n-1}))")
            .free(&["a", "b", "c"])
            .finite()
            .form("lhs", dems_lhs)
            .form("rhs", dems_rhs),
        Identity::new("DEMS-COR", Exact, "Finite analogue of the Dixit-Maji corollary",
            "sum_{n=1}^N [N n] (-1)^{n-1} z^n q^{n(n+1)/2} (q)_n/((1-cq^n)(zq)_n) = (z/c) sum_{n=1}^N [N n] (cq)_{N-n} (zq/c)_{n-1} (q)_n (cq)^n/((cq)_N (zq)_n)")
            .free(&["z", "c"])
            .finite()
            .form("lhs", dems_cor_lhs)
            .form("rhs", dems_cor_rhs)
            .correction("right-side denominator (zq)_{n-1} read as (zq)_n: the literal form already fails at N = 1, the corrected one holds"),
        Identity::new("DEMS-GARVAN", Exact, "Finite analogue of Garvan's identity",
            "sum_{n=1}^N [N n]_{q^2} (-1)^{n-1} (q^2;q^2)_n z^n q^{n^2}/((zq;q^2)_n (1-zq^{2n})) = sum_{n=1}^N [N n]_{q^2} ((q)_{2n-2} z^{2n-1} q^{n(2n-1)}/(zq)_{2n-1} + (q)_{2n-1} z^{2n} q^{n(2n+1)}/(zq)_{2n}) (q^2;q^2)_n/(zq^{2N+1};q^2)_n")
            .free(&["z"])
            .finite()
            .form("lhs", dems_garvan_lhs)
            .form("rhs", dems_garvan_rhs),
        Identity::new("DP", Exact, "Dixit-Patel finite analogue",
            "sum_{n=1}^N [N n] (q)_n (b/a)_n (c/d)_n (ad)_{N-n} (ad)^n/((b)_n (cq)_n (ad)_N) = (a-b)(d-c)/(ad-b) sum_{n=1}^N [N n] (q)_n (cq)_{N-n} (a)_{n-1} (bd/c)_{n-1} c^{n-1}/((b)_{n-1} (ad)_{n-1} (cq)_N) (adq^{n-1}/(1-adq^{n-1}) - bq^{n-1}/(1-bq^{n-1}))")
            .free(&["a", "b", "c", "d"])
            .finite()
            .form("lhs", dp_lhs)
            .form("rhs", dp_rhs),
    ]
}

fn e1_product(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b) = (x.r("a")?, x.r("b")?);
    c.poch_inf(&-a, 1)?.div(&c.poch_inf(b, 1)?)
}

fn e1_sum(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b) = (x.r("a")?, x.r("b")?);
    c.sum_inf(0, tri, |n| {
        let num = scaled(c, a, &-b, n) * c.q_pow(tri(n));
        num.div(&(c.qfac(n) * c.poch(b, 1, n)))
    })
}

fn e2_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let a = x.r("a")?;
    let s = c.sum_inf(1, square, |n| {
        c.mono(&(crate::rational::int(n) * crate::rational::pow(a, n)), n * n)
            .div(&(c.qfac(n) * c.poch(a, 1, n)))
    })?;
    Ok(c.poch_inf(a, 1)? * s)
}

fn e2_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let a = x.r("a")?;
    c.sum_inf(1, tri, |n| {
        (signed(c, n - 1) * power(c, a, n) * c.q_pow(tri(n))).div(&one_minus_qn(c, n))
    })
}

fn e3_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b) = (x.r("a")?, x.r("b")?);
    c.sum_inf(1, flat, |n| scaled(c, a, b, n).div(&(one_minus_qn(c, n) * c.poch(b, 0, n))))
}

fn e3_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b) = (x.r("a")?, x.r("b")?);
    let head = c.rat(&(a / (one() - a) - b / (one() - b)));
    Ok(head + c.lambert(a)? - c.lambert(b)?)
}

fn e4_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let z = x.r("z")?;
    c.sum_inf(1, tri, |n| {
        (signed(c, n - 1) * power(c, z, n) * c.q_pow(tri(n))).div(&(one_minus_qn(c, n) * c.poch(z, 1, n)))
    })
}

fn e4_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    c.lambert(x.r("z")?)
}

fn e5_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let a = x.r("a")?;
    c.sum_inf(1, flat, |n| {
        (power(c, a, n) * c.qfac(n - 1)).div(&(one_minus_qn(c, n) * c.poch(a, 0, n)))
    })
}

fn e5_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let a = x.r("a")?;
    let t = one() - a;
    Ok(c.rat(&(a / (&t * &t))) + c.wlambert(a)?)
}

fn kluyver_lhs(c: &Ctx, _: &Args) -> Result<Val> {
    c.sum_inf(1, tri, |n| {
        (signed(c, n - 1) * c.q_pow(tri(n))).div(&(one_minus_qn(c, n) * c.qfac(n)))
    })
}

fn kluyver_rhs(c: &Ctx, _: &Args) -> Result<Val> {
    c.lambert(&one())
}

fn uchimura_weighted(c: &Ctx, _: &Args) -> Result<Val> {
    c.sum_inf(1, linear, |n| Ok(c.mono(&crate::rational::int(n), n) * c.poch_inf(&one(), n + 1)?))
}

fn dm_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc) = (x.r("a")?, x.r("b")?, x.r("c")?);
    c.sum_inf(1, flat, |n| scaled(c, a, b, n).div(&(c.lin(&one(), cc, n) * c.poch(b, 0, n))))
}

fn dm_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc) = (x.r("a")?, x.r("b")?, x.r("c")?);
    c.sum_inf(0, linear, |n| Ok(scaled(c, cc, b, n).div(&c.poch(b, 0, n))? * geo_diff(c, a, b, n)?))
}

fn dm_cor_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc) = (x.r("z")?, x.r("c")?);
    c.sum_inf(1, tri, |n| {
        (signed(c, n - 1) * power(c, z, n) * c.q_pow(tri(n))).div(&(c.lin(&one(), cc, n) * c.poch(z, 1, n)))
    })
}

// (z/c) (zq/c)_{n-1} (cq)^n = z q^n prod_{j=1}^{n-1} (c - z q^j)
fn dm_cor_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc) = (x.r("z")?, x.r("c")?);
    let s = c.sum_inf(1, linear, |n| (c.lin_prod(cc, z, 1, 1, n - 1) * c.q_pow(n)).div(&c.poch(z, 1, n)))?;
    Ok(s.scale(z))
}

fn garvan_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let z = x.r("z")?;
    c.sum_inf(1, square, |n| {
        (signed(c, n - 1) * power(c, z, n) * c.q_pow(n * n))
            .div(&(c.poch_b(z, 1, 2, n) * c.lin(&one(), z, 2 * n)))
    })
}

fn garvan_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let z = x.r("z")?;
    c.sum_inf(1, tri, |n| (c.qfac(n - 1) * power(c, z, n) * c.q_pow(tri(n))).div(&c.poch(z, 1, n)))
}

fn andrews_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc) = (x.r("z")?, x.r("c")?);
    c.sum_inf(1, square, |n| {
        c.mono(&crate::rational::pow(&(z * cc), n), n * n).div(&(c.poch(z, 1, n) * c.poch(cc, 1, n)))
    })
}

fn andrews_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc) = (x.r("z")?, x.r("c")?);
    let s = c.sum_inf(1, linear, |n| c.mono(&crate::rational::pow(cc, n), n).div(&c.poch(z, 1, n)))?;
    Ok(s.scale(z))
}

fn bem_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?);
    c.sum_inf(1, flat, |n| {
        (scaled(c, a, b, n) * scaled(c, d, cc, n)).div(&(c.poch(b, 0, n) * c.poch(cc, 1, n)))
    })
}

fn bem_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?);
    let pre = bem_prefactor(a, b, cc, d)?;
    let ad = a * d;
    let s = c.sum_inf(0, linear, |n| {
        let num = c.poch(a, 0, n) * scaled(c, cc, &(b * d), n);
        Ok(num.div(&(c.poch(b, 0, n) * c.poch(&ad, 0, n)))? * geo_diff(c, &ad, b, n)?)
    })?;
    Ok(s.scale(&pre))
}

fn dems_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.poch(a, 0, big_n - n) * scaled(c, a, b, n) * c.qfac(n);
        num.div(&(c.lin(&one(), cc, n) * c.poch(b, 0, n)))
    })?;
    s.div(&c.poch(a, 0, big_n))
}

fn dems_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.poch(cc, 1, big_n - n) * scaled(c, cc, b, n - 1) * c.qfac(n);
        Ok(num.div(&c.poch(b, 0, n - 1))? * geo_diff(c, a, b, n - 1)?)
    })?;
    s.div(&c.poch(cc, 1, big_n))
}

fn dems_cor_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, big_n) = (x.r("z")?, x.r("c")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * signed(c, n - 1) * power(c, z, n) * c.q_pow(tri(n)) * c.qfac(n);
        num.div(&(c.lin(&one(), cc, n) * c.poch(z, 1, n)))
    })
}

fn dems_cor_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    dems_cor_rhs_with(c, x, 0)
}

/// The right side as printed, with `(zq)_{n-1}` in the denominator.
pub(crate) fn dems_cor_rhs_literal(c: &Ctx, x: &Args) -> Result<Val> {
    dems_cor_rhs_with(c, x, -1)
}

fn dems_cor_rhs_with(c: &Ctx, x: &Args, den_shift: i64) -> Result<Val> {
    let (z, cc, big_n) = (x.r("z")?, x.r("c")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.poch(cc, 1, big_n - n) * c.lin_prod(cc, z, 1, 1, n - 1) * c.qfac(n) * c.q_pow(n);
        num.div(&c.poch(z, 1, n + den_shift))
    })?;
    Ok(s.div(&c.poch(cc, 1, big_n))?.scale(z))
}

fn dems_garvan_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, big_n) = (x.r("z")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let num = c.qbinom_b(big_n, n, 2) * signed(c, n - 1) * qfac_b(c, 2, n) * power(c, z, n) * c.q_pow(n * n);
        num.div(&(c.poch_b(z, 1, 2, n) * c.lin(&one(), z, 2 * n)))
    })
}

fn dems_garvan_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    garvan_pair_sum(c, x.r("z")?, &one(), x.n("N")?)
}

/// `sum_{n=1}^N [N n]_{q^2} ((dq)_{2n-2} z^{2n-1} q^{n(2n-1)}/(zq)_{2n-1}
/// + (dq)_{2n-1} z^{2n} q^{n(2n+1)}/(zq)_{2n}) (q^2;q^2)_n/(dzq^{2N+1};q^2)_n`.
pub(crate) fn garvan_pair_sum(c: &Ctx, z: &crate::rational::Rational, d: &crate::rational::Rational, big_n: i64) -> Result<Val> {
    c.sum(1, big_n, |n| {
        let odd = (c.poch(d, 1, 2 * n - 2) * c.mono(&crate::rational::pow(z, 2 * n - 1), n * (2 * n - 1)))
            .div(&c.poch(z, 1, 2 * n - 1))?;
        let even = (c.poch(d, 1, 2 * n - 1) * c.mono(&crate::rational::pow(z, 2 * n), n * (2 * n + 1)))
            .div(&c.poch(z, 1, 2 * n))?;
        let weight = c.qbinom_b(big_n, n, 2) * qfac_b(c, 2, n);
        ((odd + even) * weight).div(&c.poch_b(&(d * z), 2 * big_n + 1, 2, n))
    })
}

fn dp_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?, x.n("N")?);
    let ad = a * d;
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * scaled(c, a, b, n) * scaled(c, d, cc, n) * c.poch(&ad, 0, big_n - n);
        num.div(&(c.poch(b, 0, n) * c.poch(cc, 1, n)))
    })?;
    s.div(&c.poch(&ad, 0, big_n))
}

fn dp_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?, x.n("N")?);
    let pre = bem_prefactor(a, b, cc, d)?;
    let ad = a * d;
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * c.poch(cc, 1, big_n - n) * c.poch(a, 0, n - 1) * scaled(c, cc, &(b * d), n - 1);
        Ok(num.div(&(c.poch(b, 0, n - 1) * c.poch(&ad, 0, n - 1)))? * geo_diff(c, &ad, b, n - 1)?)
    })?;
    Ok(s.div(&c.poch(cc, 1, big_n))?.scale(&pre))
}
