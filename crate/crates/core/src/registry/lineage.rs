//! How identities relate: special cases, finite-to-infinite limits, and the
//! corrected transcriptions together with their literal versions.
//!
//! Some special cases are not registry entries of their own (the `e = 0`
//! cases of the finite entries, for instance). They live here as auxiliary
//! identities so that specialization checks can compare against them.

use super::blocks::*;
use super::{Identity, VerifyMode::*};
use crate::error::Result;
use crate::eval::{Args, Ctx, Val};
use crate::rational::{int, Rational};

/// `from` with the extra bindings equals `factor * to`, form by form.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub from: &'static str,
    pub to: &'static str,
    pub bind: Vec<(&'static str, Rational)>,
    pub factor: Factor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    One,
    MinusOne,
    /// `(ad; q)_N`.
    AdPochN,
}

impl Factor {
    pub fn eval(self, c: &Ctx, x: &Args) -> Result<Val> {
        match self {
            Factor::One => Ok(c.one()),
            Factor::MinusOne => Ok(c.int(-1)),
            Factor::AdPochN => Ok(c.poch(&(x.r("a")? * x.r("d")?), 0, x.n("N")?)),
        }
    }
}

/// A corrected entry: `form` of `id` as printed, and the parameters only the
/// printed version reads.
#[derive(Clone, Debug)]
pub struct Correction {
    pub id: &'static str,
    pub form: usize,
    pub literal: super::FormFn,
    pub extra: &'static [&'static str],
}

fn spec(from: &'static str, to: &'static str, bind: &[(&'static str, i64)], factor: Factor) -> Specialization {
    Specialization { from, to, bind: bind.iter().map(|(k, v)| (*k, int(*v))).collect(), factor }
}

pub fn specializations() -> Vec<Specialization> {
    use Factor::*;
    vec![
        spec("THM-2-1", "BEM", &[("e", 1)], One),
        spec("THM-2-5", "DP", &[("e", 1)], AdPochN),
        spec("COR-2-2", "BEM-COR", &[("e", 1)], One),
        spec("COR-2-6", "DP-COR", &[("e", 1)], One),
        spec("COR-2-2", "COR-2-3", &[("d", 0)], One),
        spec("COR-2-6", "COR-2-7", &[("d", 0)], One),
        spec("GARVAN-GEN", "GARVAN", &[("d", 1)], One),
        spec("THM-2-9", "DEMS-GARVAN", &[("d", 1)], One),
        spec("GEN-E1", "E1", &[("e", 0)], One),
        spec("GEN-E2", "E2", &[("e", 0)], One),
        spec("GEN-E3", "E3", &[("e", 0)], One),
        spec("GEN-E4", "E4", &[("e", 0)], MinusOne),
        spec("GEN-E5", "E5", &[("e", 0)], One),
        spec("FIN-E1", "DP-FIN-E1", &[("e", 0)], One),
        spec("FIN-E2", "DP-FIN-E2", &[("e", 0)], MinusOne),
        spec("FIN-E3", "FIN-E3-E0", &[("e", 0)], One),
        spec("FIN-E4", "DP-FIN-E4", &[("e", 0)], MinusOne),
        spec("FIN-E5", "FIN-E5-E0", &[("e", 0)], One),
    ]
}

/// `(finite, infinite)`: the finite entry tends to the infinite one as `N`
/// grows.
pub fn coherence_pairs() -> Vec<(&'static str, &'static str)> {
    vec![
        ("THM-2-9", "GARVAN-GEN"),
        ("DEMS-GARVAN", "GARVAN"),
        ("COR-2-7", "COR-2-3"),
        ("COR-2-6", "COR-2-2"),
        ("DEMS-COR", "DM-COR"),
        ("FIN-E3", "GEN-E3"),
        ("FIN-E4", "GEN-E4"),
        ("FIN-E5", "GEN-E5"),
    ]
}

pub fn corrections() -> Vec<Correction> {
    vec![
        Correction { id: "DEMS-COR", form: 1, literal: super::ramanujan::dems_cor_rhs_literal, extra: &[] },
        Correction { id: "FIN-E4", form: 1, literal: super::entries::fin_e4_rhs_literal, extra: &["a"] },
        Correction { id: "DP-PHI21", form: 0, literal: super::phi_sums::dp_phi21_lhs_literal, extra: &[] },
        Correction { id: "PHI32-III12", form: 1, literal: super::classical::iii12_rhs_literal, extra: &[] },
    ]
}

/// Special cases that are targets of specialization checks only.
pub fn auxiliary() -> Vec<Identity> {
    vec![
        Identity::new("BEM-COR", Formal, "Bhoria-Eyyunni-Maji corollary",
            "sum_{n>=1} (-z)^n (c/d)_n d^n q^{n(n+1)/2}/((cq)_n (zq)_n) = z(c-d)/c sum_{n>=1} (zdq/c)_{n-1} (cq)^n/(zq)_n")
            .free(&["z", "c", "d"])
            .form("lhs", bem_cor_lhs)
            .form("rhs", bem_cor_rhs),
        Identity::new("DP-COR", Exact, "Dixit-Patel finite corollary",
            "sum_{n=1}^N [N n] (q)_n (c/d)_n (-zd)^n q^{n(n+1)/2}/((zq)_n (cq)_n) = z(c-d)/c sum_{n=1}^N [N n] (q)_n (cq)_{N-n} (zdq/c)_{n-1} (cq)^n/((zq)_n (cq)_N)")
            .free(&["z", "c", "d"])
            .finite()
            .form("lhs", dp_cor_lhs)
            .form("rhs", dp_cor_rhs),
        Identity::new("DP-FIN-E1", Exact, "Finite Entry 1",
            "(-aq)_N/(bq)_N = sum_{n=0}^N [N n] (-b/a)_n a^n q^{n(n+1)/2}/(bq)_n = sum_{n=0}^N [N n] (-a/b)_n (bq)_{N-n} (bq)^n/(bq)_N")
            .free(&["a", "b"])
            .finite()
            .form("product", dp_fin_e1_product)
            .form("sum", dp_fin_e1_sum)
            .form("dual", dp_fin_e1_dual),
        Identity::new("DP-FIN-E2", Exact, "Finite Entry 2",
            "(aq)_N sum_{n=1}^N [N n] n a^n q^{n^2}/(aq)_n = sum_{n=1}^N [N n] (q)_n (-1)^{n-1} a^n q^{n(n+1)/2}/(1-q^n)")
            .free(&["a"])
            .finite()
            .form("lhs", dp_fin_e2_lhs)
            .form("rhs", dp_fin_e2_rhs),
        Identity::new("FIN-E3-E0", Exact, "Finite Entry 3",
            "sum_{n=1}^N [N n] (q)_{n-1} (b/a)_n a^n/(b)_n = sum_{n=1}^N [N n] (q)_{n-1} (b)_{N-n} a^n/(b)_N - sum_{n=1}^N bq^{n-1}/(1-bq^{n-1})")
            .free(&["a", "b"])
            .finite()
            .form("lhs", fin_e3_e0_lhs)
            .form("rhs", fin_e3_e0_rhs),
        Identity::new("DP-FIN-E4", Exact, "Finite Entry 4",
            "sum_{n=1}^N [N n] (q)_{n-1} (-1)^{n-1} z^n q^{n(n+1)/2}/(zq)_n = sum_{n=1}^N zq^n/(1-zq^n)")
            .free(&["z"])
            .finite()
            .form("lhs", dp_fin_e4_lhs)
            .form("rhs", dp_fin_e4_rhs),
        Identity::new("FIN-E5-E0", Exact, "Finite Entry 5",
            "sum_{n=1}^N [N n] (q)_{n-1}^2 a^n/(a)_n = sum_{n=1}^N [N n] (q)_{n-1} (a)_{N-n} n a^n/(a)_N")
            .free(&["a"])
            .finite()
            .form("lhs", fin_e5_e0_lhs)
            .form("rhs", fin_e5_e0_rhs),
    ]
}

fn bem_cor_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, d) = (x.r("z")?, x.r("c")?, x.r("d")?);
    c.sum_inf(1, tri, |n| {
        let num = power(c, &-z, n) * scaled(c, d, cc, n) * c.q_pow(tri(n));
        num.div(&(c.poch(cc, 1, n) * c.poch(z, 1, n)))
    })
}

fn bem_cor_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, d) = (x.r("z")?, x.r("c")?, x.r("d")?);
    let zd = z * d;
    let s = c.sum_inf(1, linear, |n| (c.lin_prod(cc, &zd, 1, 1, n - 1) * c.q_pow(n)).div(&c.poch(z, 1, n)))?;
    Ok(s.scale(&(z * (cc - d))))
}

fn dp_cor_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, d, big_n) = (x.r("z")?, x.r("c")?, x.r("d")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * scaled(c, d, cc, n) * power(c, &-z, n) * c.q_pow(tri(n));
        num.div(&(c.poch(z, 1, n) * c.poch(cc, 1, n)))
    })
}

fn dp_cor_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, cc, d, big_n) = (x.r("z")?, x.r("c")?, x.r("d")?, x.n("N")?);
    let zd = z * d;
    let s = c.sum(1, big_n, |n| {
        let num = c.qbinom(big_n, n) * c.qfac(n) * c.poch(cc, 1, big_n - n) * c.lin_prod(cc, &zd, 1, 1, n - 1) * c.q_pow(n);
        num.div(&c.poch(z, 1, n))
    })?;
    Ok(s.div(&c.poch(cc, 1, big_n))?.scale(&(z * (cc - d))))
}

fn dp_fin_e1_product(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, big_n) = (x.r("a")?, x.r("b")?, x.n("N")?);
    c.poch(&-a, 1, big_n).div(&c.poch(b, 1, big_n))
}

fn dp_fin_e1_sum(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, big_n) = (x.r("a")?, x.r("b")?, x.n("N")?);
    c.sum(0, big_n, |n| (c.qbinom(big_n, n) * scaled(c, a, &-b, n) * c.q_pow(tri(n))).div(&c.poch(b, 1, n)))
}

fn dp_fin_e1_dual(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, big_n) = (x.r("a")?, x.r("b")?, x.n("N")?);
    let s = c.sum(0, big_n, |n| {
        Ok(c.qbinom(big_n, n) * scaled(c, b, &-a, n) * c.poch(b, 1, big_n - n) * c.q_pow(n))
    })?;
    s.div(&c.poch(b, 1, big_n))
}

fn dp_fin_e2_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, big_n) = (x.r("a")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        (c.qbinom(big_n, n) * c.mono(&(int(n) * crate::rational::pow(a, n)), n * n)).div(&c.poch(a, 1, n))
    })?;
    Ok(c.poch(a, 1, big_n) * s)
}

fn dp_fin_e2_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, big_n) = (x.r("a")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        (c.qbinom(big_n, n) * c.qfac(n) * signed(c, n - 1) * power(c, a, n) * c.q_pow(tri(n))).div(&one_minus_qn(c, n))
    })
}

fn fin_e3_e0_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, big_n) = (x.r("a")?, x.r("b")?, x.n("N")?);
    c.sum(1, big_n, |n| (c.qbinom(big_n, n) * c.qfac(n - 1) * scaled(c, a, b, n)).div(&c.poch(b, 0, n)))
}

fn fin_e3_e0_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, b, big_n) = (x.r("a")?, x.r("b")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| Ok(c.qbinom(big_n, n) * c.qfac(n - 1) * c.poch(b, 0, big_n - n) * power(c, a, n)))?;
    Ok(s.div(&c.poch(b, 0, big_n))? - c.sum(1, big_n, |n| geo(c, b, n - 1))?)
}

fn dp_fin_e4_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, big_n) = (x.r("z")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        (c.qbinom(big_n, n) * c.qfac(n - 1) * signed(c, n - 1) * power(c, z, n) * c.q_pow(tri(n))).div(&c.poch(z, 1, n))
    })
}

fn dp_fin_e4_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (z, big_n) = (x.r("z")?, x.n("N")?);
    c.sum(1, big_n, |n| geo(c, z, n))
}

fn fin_e5_e0_lhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, big_n) = (x.r("a")?, x.n("N")?);
    c.sum(1, big_n, |n| {
        let qf = c.qfac(n - 1);
        (c.qbinom(big_n, n) * &qf * &qf * power(c, a, n)).div(&c.poch(a, 0, n))
    })
}

fn fin_e5_e0_rhs(c: &Ctx, x: &Args) -> Result<Val> {
    let (a, big_n) = (x.r("a")?, x.n("N")?);
    let s = c.sum(1, big_n, |n| {
        Ok((c.qbinom(big_n, n) * c.qfac(n - 1) * c.poch(a, 0, big_n - n) * power(c, a, n)).scale(&int(n)))
    })?;
    s.div(&c.poch(a, 0, big_n))
}
