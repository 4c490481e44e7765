//! Evaluating expressions as series or at a point.

use num_traits::{One, Signed, Zero};
use qsv_core::eval::DEFAULT_TOL;
use qsv_core::hypergeometric::PhiSpec;
use qsv_core::rational::{as_i64, pow, render};
use qsv_core::{Args, Ctx, EvalError, Monomial, Rational, Result, Val};

use super::{Builtin, Expr};

#[derive(Clone, Debug, PartialEq)]
pub enum EvalMode {
    /// Series exact through `q^K`.
    Series(i64),
    /// Value at a rational `q`; exact when everything is finite, otherwise a
    /// ball whose radius bounds the truncated tails.
    Point(Rational),
}

/// Evaluates `expr` with the free parameters in `binding`.
pub fn eval_expression(expr: &Expr, mode: &EvalMode, binding: &Args) -> Result<Val> {
    match mode {
        EvalMode::Series(k) => Evaluator { ctx: Ctx::series(*k), env: binding.clone() }.eval(expr),
        EvalMode::Point(q) => {
            if q.is_zero() || q.abs() >= Rational::one() {
                return Err(EvalError::InvalidArgument(format!("point q = {} must satisfy 0 < |q| < 1", render(q))));
            }
            let exact = Evaluator { ctx: Ctx::exact(q.clone()), env: binding.clone() }.eval(expr);
            match exact {
                Err(EvalError::ModeMismatch(_)) => {
                    Evaluator { ctx: Ctx::analytic(q.clone(), DEFAULT_TOL), env: binding.clone() }.eval(expr)
                }
                other => other,
            }
        }
    }
}

struct Evaluator {
    ctx: Ctx,
    env: Args,
}

impl Evaluator {
    fn eval(&mut self, e: &Expr) -> Result<Val> {
        let c = &self.ctx;
        Ok(match e {
            Expr::Num(v) => c.rat(v),
            Expr::Q => c.q_pow(1),
            Expr::Param(p) => c.rat(self.env.r(p)?),
            Expr::Neg(a) => -self.eval(a)?,
            Expr::Add(a, b) => self.eval(a)? + self.eval(b)?,
            Expr::Sub(a, b) => self.eval(a)? - self.eval(b)?,
            Expr::Mul(a, b) => self.eval(a)? * self.eval(b)?,
            Expr::Div(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                a.div(&b)?
            }
            Expr::Pow(a, k) => {
                let k = &self.int(k)?;
                let v = self.eval(a)?;
                let m = u32::try_from(k.unsigned_abs()).map_err(|_| EvalError::InvalidArgument("exponent too large".into()))?;
                if *k >= 0 {
                    v.pow(m)
                } else {
                    v.recip()?.pow(m)
                }
            }
            Expr::Call(b, args) => self.call(*b, args)?,
            Expr::Phi { upper, lower, arg } => {
                let mono = |v: &Vec<Expr>, this: &Self| v.iter().map(|x| this.monomial(x)).collect::<Result<Vec<_>>>();
                let spec = PhiSpec::new(mono(upper, self)?, mono(lower, self)?, self.monomial(arg)?);
                self.ctx.phi(&spec)?
            }
            Expr::BigSum { var, lo, hi, body } => {
                let (lo, hi) = (self.int(lo)?, self.int(hi)?);
                if lo < 0 || lo > hi + 1 {
                    return Err(EvalError::InvalidArgument(format!("bigsum bounds {lo}..{hi}")));
                }
                let saved = self.env.get(var).cloned();
                let mut total = self.ctx.zero();
                for n in lo..=hi {
                    self.env.set(var, Rational::from_integer(n.into()));
                    let term = self.eval(body);
                    match term {
                        Ok(t) => total = total + t,
                        Err(e) => {
                            self.restore(var, saved);
                            return Err(e);
                        }
                    }
                }
                self.restore(var, saved);
                total
            }
        })
    }

    fn restore(&mut self, var: &str, saved: Option<Rational>) {
        let mut map = std::mem::take(&mut self.env).into_map();
        match saved {
            Some(v) => {
                map.insert(var.to_string(), v);
            }
            None => {
                map.remove(var);
            }
        }
        self.env = Args::from(map);
    }

    fn call(&mut self, b: Builtin, args: &[Expr]) -> Result<Val> {
        let c = &self.ctx;
        match b {
            Builtin::Poch => {
                let n = self.length(&args[1])?;
                match self.try_monomial(&args[0])? {
                    Some(m) => Ok(c.poch(&m.coeff, m.exp, n)),
                    None => {
                        let x = self.eval(&args[0])?;
                        let c = &self.ctx;
                        Ok((0..n).fold(c.one(), |acc, k| acc * (c.one() - &x * c.q_pow(k))))
                    }
                }
            }
            Builtin::PochInf => {
                let m = self.monomial(&args[0])?;
                c.poch_inf(&m.coeff, m.exp)
            }
            Builtin::PochRev => {
                let n = self.length(&args[1])?;
                match self.try_monomial(&args[0])? {
                    Some(m) if m.exp == 0 => Ok(c.rev(&m.coeff, n)),
                    _ => {
                        let x = self.eval(&args[0])?;
                        let c = &self.ctx;
                        Ok((1..=n).fold(c.one(), |acc, j| acc * (&x - c.q_pow(j))))
                    }
                }
            }
            Builtin::Qbin | Builtin::Qbin2 => {
                let big_n = self.length(&args[0])?;
                let n = self.int(&args[1])?;
                Ok(if b == Builtin::Qbin { c.qbinom(big_n, n) } else { c.qbinom_b(big_n, n, 2) })
            }
            Builtin::Lambert | Builtin::WLambert => {
                let x = self.constant(&args[0])?;
                if b == Builtin::Lambert {
                    c.lambert(&x)
                } else {
                    c.wlambert(&x)
                }
            }
        }
    }

    /// `c q^k` when the expression is syntactically a monomial.
    fn try_monomial(&self, e: &Expr) -> Result<Option<Monomial>> {
        let m = |c: Rational, k: i64| Ok(Some(Monomial::new(c, k)));
        match e {
            Expr::Q => m(Rational::one(), 1),
            Expr::Neg(a) => Ok(self.try_monomial(a)?.map(|x| Monomial::new(-x.coeff, x.exp))),
            Expr::Mul(a, b) => match (self.try_monomial(a)?, self.try_monomial(b)?) {
                (Some(x), Some(y)) => Ok(Some(x.mul(&y))),
                _ => Ok(None),
            },
            Expr::Div(a, b) => match (self.try_monomial(a)?, self.try_monomial(b)?) {
                (Some(x), Some(y)) => match y.recip() {
                    Some(r) => Ok(Some(x.mul(&r))),
                    None => Err(EvalError::DivisionByZero(format!("{e}"))),
                },
                _ => Ok(None),
            },
            Expr::Pow(a, k) => match self.try_monomial(a)? {
                Some(x) => {
                    let k = self.int(k)?;
                    if x.coeff.is_zero() && k < 0 {
                        return Err(EvalError::DivisionByZero(format!("{e}")));
                    }
                    m(pow(&x.coeff, k), x.exp * k)
                }
                None => Ok(None),
            },
            _ => Ok(self.fold(e)?.map(|c| Monomial::new(c, 0))),
        }
    }

    /// Value of an expression free of `q` and of calls.
    fn fold(&self, e: &Expr) -> Result<Option<Rational>> {
        let two = |a: &Expr, b: &Expr| -> Result<Option<(Rational, Rational)>> {
            Ok(self.fold(a)?.zip(self.fold(b)?))
        };
        Ok(match e {
            Expr::Num(v) => Some(v.clone()),
            Expr::Param(p) => Some(self.env.r(p)?.clone()),
            Expr::Neg(a) => self.fold(a)?.map(|v| -v),
            Expr::Add(a, b) => two(a, b)?.map(|(x, y)| x + y),
            Expr::Sub(a, b) => two(a, b)?.map(|(x, y)| x - y),
            Expr::Mul(a, b) => two(a, b)?.map(|(x, y)| x * y),
            Expr::Div(a, b) => match two(a, b)? {
                Some((_, y)) if y.is_zero() => return Err(EvalError::DivisionByZero(format!("{e}"))),
                Some((x, y)) => Some(x / y),
                None => None,
            },
            Expr::Pow(a, k) => match self.fold(a)? {
                Some(x) => {
                    let k = self.int(k)?;
                    if x.is_zero() && k < 0 {
                        return Err(EvalError::DivisionByZero(format!("{e}")));
                    }
                    Some(pow(&x, k))
                }
                None => None,
            },
            _ => None,
        })
    }

    fn monomial(&self, e: &Expr) -> Result<Monomial> {
        self.try_monomial(e)?
            .ok_or_else(|| EvalError::InvalidArgument(format!("`{e}` is not of the form r*q^k")))
    }

    fn constant(&self, e: &Expr) -> Result<Rational> {
        match self.try_monomial(e)? {
            Some(m) if m.exp == 0 || m.coeff.is_zero() => Ok(m.coeff),
            _ => Err(EvalError::InvalidArgument(format!("`{e}` is not a rational constant"))),
        }
    }

    fn int(&self, e: &Expr) -> Result<i64> {
        let v = self.constant(e)?;
        as_i64(&v).ok_or_else(|| EvalError::InvalidArgument(format!("`{e}` is not an integer")))
    }

    fn length(&self, e: &Expr) -> Result<i64> {
        let n = self.int(e)?;
        if n < 0 {
            return Err(EvalError::InvalidArgument(format!("length `{e}` is negative")));
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_expression;

    fn series(text: &str, k: i64) -> String {
        eval_expression(&parse_expression(text).unwrap(), &EvalMode::Series(k), &Args::new()).unwrap().to_string()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(series("pochinf(q)", 5), "1 - q - q^2 + q^5 + O(q^6)");
        assert_eq!(series("qbin(4,2)", 4), "1 + q + 2*q^2 + q^3 + q^4 + O(q^5)");
        assert_eq!(series("lambert(1)", 6), "q + 2*q^2 + 2*q^3 + 3*q^4 + 2*q^5 + 4*q^6 + O(q^7)");
    }

    #[test]
    fn bound_index_shadows_and_restores() {
        let b = Args::new().with("n", Rational::from_integer(7.into()));
        let e = parse_expression("bigsum(n, 0, 2, n) + n").unwrap();
        let v = eval_expression(&e, &EvalMode::Point(Rational::new(1.into(), 2.into())), &b).unwrap();
        assert_eq!(v.to_string(), "10");
    }

    #[test]
    fn unbound_parameter() {
        let e = parse_expression("poch(a, 2)").unwrap();
        let err = eval_expression(&e, &EvalMode::Series(4), &Args::new()).unwrap_err();
        assert_eq!(err, EvalError::UnboundParameter("a".into()));
    }
}
