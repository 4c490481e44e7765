//! Classical summation and transformation formulas for basic hypergeometric
//! series, and a few finite identities used as lemmas elsewhere.

use super::blocks::*;
use super::{Identity, ParamKind, VerifyMode::*};
use crate::error::Result;
use crate::eval::{Args, Ctx, Val};
use crate::hypergeometric::PhiSpec;
use crate::kernel::Monomial;
use crate::rational::{pow, sign, Rational};

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity::new("QBINOM-THM", Formal, "q-binomial theorem",
            "sum_{n>=0} (a)_n/(q)_n w^n = (aw)_inf/(w)_inf, with w = z q^k, k >= 1")
            .free(&["a", "z"])
            .param("k", ParamKind::Exponent { lo: 1, hi: 3 })
            .form("series", qbinom_series)
            .form("product", qbinom_product),
        Identity::new("HEINE", Analytic, "Heine's transformation",
            "2phi1(a, b; c; q, z) = (b)_inf (az)_inf/((c)_inf (z)_inf) 2phi1(c/b, z; az; q, b)")
            .free(&["a", "b", "c", "z"])
            .form("lhs", heine_lhs)
            .form("rhs", heine_rhs),
        Identity::new("QGAUSS", Analytic, "q-Gauss sum",
            "2phi1(a, b; c; q, c/(ab)) = (c/a)_inf (c/b)_inf/((c)_inf (c/(ab))_inf)")
            .free(&["a", "b"])
            .param("c", ParamKind::Scaled { by: |x| x.get("a").unwrap() * x.get("b").unwrap() })
            .form("sum", qgauss_sum)
            .form("product", qgauss_product),
        Identity::new("PHI32-III9", Analytic, "Nonterminating 3phi2 transformation",
            "3phi2(a, b, c; d, e; q, de/(abc)) = (e/a)_inf (de/(bc))_inf/((e)_inf (de/(abc))_inf) 3phi2(a, d/b, d/c; d, de/(bc); q, e/a)")
            .free(&["a", "b", "c"])
            .param("d", ParamKind::Scaled { by: |x| x.get("b").unwrap() * x.get("c").unwrap() })
            .param("e", ParamKind::Scaled { by: |x| x.get("a").unwrap().clone() })
            .form("lhs", iii9_lhs)
            .form("rhs", iii9_rhs),
        Identity::new("PHI32-III12", Exact, "Terminating 3phi2 transformation",
            "3phi2(q^-N, b, c; d, e; q, q) = (e/c)_N/(e)_N c^N 3phi2(q^-N, c, d/b; d, cq^{1-N}/e; q, bq/e)")
            .free(&["b", "c", "d", "e"])
            .finite()
            .form("lhs", iii12_lhs)
            .form("rhs", iii12_rhs)
            .correction("right-side argument q read as bq/e, with the power c^N taken in the parameter c: the literal argument fails at N = 1, the corrected one holds"),
        Identity::new("FIN-HEINE", Exact, "Andrews' finite Heine transformation",
            "3phi2(q^-N, a, b; c, q^{1-N}/t; q, q) = (b)_N (at)_N/((c)_N (t)_N) 3phi2(q^-N, c/b, t; at, q^{1-N}/b; q, q)")
            .free(&["a", "b", "c", "t"])
            .finite()
            .form("lhs", fin_heine_lhs)
            .form("rhs", fin_heine_rhs),
        Identity::new("FIN-HEINE-COR", Exact, "Second finite Heine transformation",
            "3phi2(q^-N, a, b; c, q^{1-N}/t; q, q) = (c/b)_N (bt)_N/((c)_N (t)_N) 3phi2(q^-N, abt/c, b; bt, bq^{1-N}/c; q, q)")
            .free(&["a", "b", "c", "t"])
            .finite()
            .form("lhs", fin_heine_lhs)
            .form("rhs", fin_heine_cor_rhs),
        Identity::new("BASIC-4-1", Exact, "Reflection of a Pochhammer symbol with base q^-N",
            "(q^-N/x)_n = (-1)^n (xq^{N-n+1})_n q^{n(n-1)/2}/(x^n q^{Nn})")
            .free(&["x"])
            .finite()
            .param("n", ParamKind::Index)
            .form("lhs", basic41_lhs)
            .form("rhs", basic41_rhs),
        Identity::new("BASIC-4-2", Exact, "Quotient of reflected Pochhammer symbols",
            "(q^-N)_n/(q^-N/x)_n = (q^{N-n+1})_n x^n/(xq^{N-n+1})_n = (q)_N (xq)_{N-n} x^n/((q)_{N-n} (xq)_N)")
            .free(&["x"])
            .finite()
            .param("n", ParamKind::Index)
            .form("quotient", basic42_quotient)
            .form("reflected", basic42_reflected)
            .form("factorials", basic42_factorials),
        Identity::new("CORTEEL-LOVEJOY", Exact, "Corteel-Lovejoy finite sum",
            "sum_{n=0}^N [N n] (-1/a)_n (ac)^n q^{n(n+1)/2}/(cq)_n = (-acq)_N/(cq)_N")
            .free(&["a", "c"])
            .finite()
            .form("sum", corteel_lovejoy_sum)
            .form("product", corteel_lovejoy_product),
        Identity::new("VAN-HAMME", Exact, "Van Hamme's identity",
            "sum_{k=1}^N q^k/(1-q^k) = sum_{k=1}^N [N k] (-1)^{k-1} q^{k(k+1)/2}/(1-q^k)")
            .finite()
            .form("harmonic", van_hamme_harmonic)
            .form("binomial", van_hamme_binomial),
        Identity::new("GUO-ZHANG", Exact, "Guo-Zhang partial fraction identity",
            "sum_{k=0, k!=m}^N [N k] (q/x)_k (x)_{N-k} x^k/(1-q^{k-m}) = (-1)^m q^{m(m+1)/2} [N m] (xq^-m)_N (sum_{k=0}^{N-1} xq^{k-m}/(1-xq^{k-m}) - sum_{k=0, k!=m}^N q^{k-m}/(1-q^{k-m}))")
            .free(&["x"])
            .finite()
            .param("m", ParamKind::Index)
            .form("lhs", guo_zhang_lhs)
            .form("rhs", guo_zhang_rhs),
    ]
}

fn m(c: &Rational, e: i64) -> Monomial {
    Monomial::new(c.clone(), e)
}

fn qbinom_series(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, z, k) = (x.r("a")?, x.r("z")?, x.n("k")?);
    c.phi(&PhiSpec::new(vec![m(a, 0)], vec![], m(z, k)))
}

fn qbinom_product(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, z, k) = (x.r("a")?, x.r("z")?, x.n("k")?);
    c.poch_inf(&(a * z), k)?.div(&c.poch_inf(z, k)?)
}

fn heine_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, z) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("z")?);
    c.phi(&PhiSpec::new(vec![m(a, 0), m(b, 0)], vec![m(cc, 0)], m(z, 0)))
}

fn heine_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, z) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("z")?);
    let az = a * z;
    let pre = (c.poch_inf(b, 0)? * c.poch_inf(&az, 0)?).div(&(c.poch_inf(cc, 0)? * c.poch_inf(z, 0)?))?;
    let phi = c.phi(&PhiSpec::new(vec![m(&(cc / b), 0), m(z, 0)], vec![m(&az, 0)], m(b, 0)))?;
    Ok(pre * phi)
}

fn qgauss_sum(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc) = (x.r("a")?, x.r("b")?, x.r("c")?);
    c.phi(&PhiSpec::new(vec![m(a, 0), m(b, 0)], vec![m(cc, 0)], m(&(cc / (a * b)), 0)))
}

fn qgauss_product(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc) = (x.r("a")?, x.r("b")?, x.r("c")?);
    (c.poch_inf(&(cc / a), 0)? * c.poch_inf(&(cc / b), 0)?)
        .div(&(c.poch_inf(cc, 0)? * c.poch_inf(&(cc / (a * b)), 0)?))
}

fn iii9_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d, e) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?, x.r("e")?);
    let arg = d * e / (a * b * cc);
    c.phi(&PhiSpec::new(vec![m(a, 0), m(b, 0), m(cc, 0)], vec![m(d, 0), m(e, 0)], m(&arg, 0)))
}

fn iii9_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, d, e) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("d")?, x.r("e")?);
    let de_bc = d * e / (b * cc);
    let arg = &de_bc / a;
    let ea = e / a;
    let pre = (c.poch_inf(&ea, 0)? * c.poch_inf(&de_bc, 0)?).div(&(c.poch_inf(e, 0)? * c.poch_inf(&arg, 0)?))?;
    let phi = c.phi(&PhiSpec::new(
        vec![m(a, 0), m(&(d / b), 0), m(&(d / cc), 0)],
        vec![m(d, 0), m(&de_bc, 0)],
        m(&ea, 0),
    ))?;
    Ok(pre * phi)
}

fn iii12_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (b, cc, d, e, big_n) = (x.r("b")?, x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    c.phi(&PhiSpec::new(vec![m(&one(), -big_n), m(b, 0), m(cc, 0)], vec![m(d, 0), m(e, 0)], m(&one(), 1)))
}

fn iii12_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (b, e) = (x.r("b")?, x.r("e")?);
    iii12_rhs_with(c, x, m(&(b / e), 1))
}

/// The right side as printed, with argument `q`.
pub(crate) fn iii12_rhs_literal(c: &Ctx, x: &Args) -> Result<Val> {
    iii12_rhs_with(c, x, m(&one(), 1))
}

fn iii12_rhs_with(c: &Ctx, x: &Args, arg: Monomial) -> Result<Val> {
    let (b, cc, d, e, big_n) = (x.r("b")?, x.r("c")?, x.r("d")?, x.r("e")?, x.n("N")?);
    let pre = (c.poch(&(e / cc), 0, big_n) * power(c, cc, big_n)).div(&c.poch(e, 0, big_n))?;
    let phi = c.phi(&PhiSpec::new(
        vec![m(&one(), -big_n), m(cc, 0), m(&(d / b), 0)],
        vec![m(d, 0), m(&(cc / e), 1 - big_n)],
        arg,
    ))?;
    Ok(pre * phi)
}

fn fin_heine_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, t, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("t")?, x.n("N")?);
    c.phi(&PhiSpec::new(
        vec![m(&one(), -big_n), m(a, 0), m(b, 0)],
        vec![m(cc, 0), m(&t.recip(), 1 - big_n)],
        m(&one(), 1),
    ))
}

fn fin_heine_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, t, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("t")?, x.n("N")?);
    let at = a * t;
    let pre = (c.poch(b, 0, big_n) * c.poch(&at, 0, big_n)).div(&(c.poch(cc, 0, big_n) * c.poch(t, 0, big_n)))?;
    let phi = c.phi(&PhiSpec::new(
        vec![m(&one(), -big_n), m(&(cc / b), 0), m(t, 0)],
        vec![m(&at, 0), m(&b.recip(), 1 - big_n)],
        m(&one(), 1),
    ))?;
    Ok(pre * phi)
}

fn fin_heine_cor_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, cc, t, big_n) = (x.r("a")?, x.r("b")?, x.r("c")?, x.r("t")?, x.n("N")?);
    let bt = b * t;
    let pre = (c.poch(&(cc / b), 0, big_n) * c.poch(&bt, 0, big_n)).div(&(c.poch(cc, 0, big_n) * c.poch(t, 0, big_n)))?;
    let phi = c.phi(&PhiSpec::new(
        vec![m(&one(), -big_n), m(&(a * &bt / cc), 0), m(b, 0)],
        vec![m(&bt, 0), m(&(b / cc), 1 - big_n)],
        m(&one(), 1),
    ))?;
    Ok(pre * phi)
}

fn basic41_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (xx, big_n, n) = (x.r("x")?, x.n("N")?, x.n("n")?);
    Ok(c.poch(&xx.recip(), -big_n, n))
}

fn basic41_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (xx, big_n, n) = (x.r("x")?, x.n("N")?, x.n("n")?);
    let num = c.poch(xx, big_n - n + 1, n) * c.mono(&sign(n), n * (n - 1) / 2);
    num.div(&c.mono(&pow(xx, n), big_n * n))
}

fn basic42_quotient(c: &Ctx, x: &Args) -> Result<Val> {
    let (xx, big_n, n) = (x.r("x")?, x.n("N")?, x.n("n")?);
    c.poch(&one(), -big_n, n).div(&c.poch(&xx.recip(), -big_n, n))
}

fn basic42_reflected(c: &Ctx, x: &Args) -> Result<Val> {
    let (xx, big_n, n) = (x.r("x")?, x.n("N")?, x.n("n")?);
    (c.poch(&one(), big_n - n + 1, n) * power(c, xx, n)).div(&c.poch(xx, big_n - n + 1, n))
}

fn basic42_factorials(c: &Ctx, x: &Args) -> Result<Val> {
    let (xx, big_n, n) = (x.r("x")?, x.n("N")?, x.n("n")?);
    let num = c.qfac(big_n) * c.poch(xx, 1, big_n - n) * power(c, xx, n);
    num.div(&(c.qfac(big_n - n) * c.poch(xx, 1, big_n)))
}

fn corteel_lovejoy_sum(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, cc, big_n) = (x.r("a")?, x.r("c")?, x.n("N")?);
    c.sum(0, big_n, |n| {
        let num = c.qbinom(big_n, n) * scaled(c, a, &-one(), n) * c.mono(&pow(cc, n), tri(n));
        num.div(&c.poch(cc, 1, n))
    })
}

fn corteel_lovejoy_product(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, cc, big_n) = (x.r("a")?, x.r("c")?, x.n("N")?);
    c.poch(&-(a * cc), 1, big_n).div(&c.poch(cc, 1, big_n))
}

fn van_hamme_harmonic(c: &Ctx, x: &Args) -> Result<Val> {
    harmonic(c, &one(), x.n("N")?)
}

fn van_hamme_binomial(c: &Ctx, x: &Args) -> Result<Val> {
    let big_n = x.n("N")?;
    c.sum(1, big_n, |k| {
        (c.qbinom(big_n, k) * signed(c, k - 1) * c.q_pow(tri(k))).div(&one_minus_qn(c, k))
    })
}

fn guo_zhang_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (xx, big_n, mm) = (x.r("x")?, x.n("N")?, x.n("m")?);
    c.sum(0, big_n, |k| {
        if k == mm {
            return Ok(c.zero());
        }
        (c.qbinom(big_n, k) * c.rev(xx, k) * c.poch(xx, 0, big_n - k)).div(&one_minus_qn(c, k - mm))
    })
}

fn guo_zhang_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (xx, big_n, mm) = (x.r("x")?, x.n("N")?, x.n("m")?);
    let first = c.sum(0, big_n - 1, |k| geo(c, xx, k - mm))?;
    let second = c.sum(0, big_n, |k| if k == mm { Ok(c.zero()) } else { geo(c, &one(), k - mm) })?;
    let pre = c.mono(&sign(mm), tri(mm)) * c.qbinom(big_n, mm) * c.poch(xx, -mm, big_n);
    Ok(pre * (first - second))
}
