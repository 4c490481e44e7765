//! A small expression language over q-series primitives.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ("^" exponent)?
//! exponent := "-"? (integer | identifier | "(" expr ")")
//! atom   := integer | "q" | identifier | call | "(" expr ")" | "-" atom
//! call   := identifier "(" expr ("," expr)* ")"
//! ```
//!
//! `phi` separates its parameter lists with semicolons:
//! `phi(a1, a2; b1; z)`. Rationals are written as quotients, `1/2`.

mod eval;

use std::fmt;

use qsv_core::Rational;

pub use eval::{eval_expression, EvalMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// `poch(x, n)`: `(x; q)_n`.
    Poch,
    /// `pochinf(x)`: `(x; q)_inf`.
    PochInf,
    /// `pochrev(x, n)`: `prod_{j=1}^n (x - q^j)`.
    PochRev,
    /// `qbin(N, n)`: Gaussian binomial in base `q`.
    Qbin,
    /// `qbin2(N, n)`: Gaussian binomial in base `q^2`.
    Qbin2,
    Lambert,
    /// `wlambert(x)`: `sum n x^n q^n/(1 - q^n)`.
    WLambert,
}

impl Builtin {
    pub const ALL: [Builtin; 7] = [
        Builtin::Poch,
        Builtin::PochInf,
        Builtin::PochRev,
        Builtin::Qbin,
        Builtin::Qbin2,
        Builtin::Lambert,
        Builtin::WLambert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Poch => "poch",
            Builtin::PochInf => "pochinf",
            Builtin::PochRev => "pochrev",
            Builtin::Qbin => "qbin",
            Builtin::Qbin2 => "qbin2",
            Builtin::Lambert => "lambert",
            Builtin::WLambert => "wlambert",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Builtin::PochInf | Builtin::Lambert | Builtin::WLambert => 1,
            _ => 2,
        }
    }

    fn lookup(name: &str) -> Option<Builtin> {
        Builtin::ALL.into_iter().find(|b| b.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Q,
    Param(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// The exponent must evaluate to an integer.
    Pow(Box<Expr>, Box<Expr>),
    Call(Builtin, Vec<Expr>),
    Phi { upper: Vec<Expr>, lower: Vec<Expr>, arg: Box<Expr> },
    BigSum { var: String, lo: Box<Expr>, hi: Box<Expr>, body: Box<Expr> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<String>,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected {}", self.offset, self.expected.join(" or "))
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(Rational),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
        let mut lx = Lexer { src, pos: 0 };
        let mut out = Vec::new();
        loop {
            let t = lx.next()?;
            let end = t.1 == Tok::End;
            out.push(t);
            if end {
                return Ok(out);
            }
        }
    }

    fn next(&mut self) -> Result<(usize, Tok), SyntaxError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(start) else {
            return Ok((start, Tok::End));
        };
        if b.is_ascii_digit() {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let v: Rational = self.src[start..self.pos].parse().expect("digits");
            return Ok((start, Tok::Int(v)));
        }
        if b.is_ascii_alphabetic() || b == b'_' {
            while self.pos < bytes.len() && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_') {
                self.pos += 1;
            }
            return Ok((start, Tok::Ident(self.src[start..self.pos].to_string())));
        }
        if b"+-*/^(),;".contains(&b) {
            self.pos += 1;
            return Ok((start, Tok::Sym(b as char)));
        }
        Err(SyntaxError { offset: start, expected: vec!["expression".into()] })
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

fn err<T>(offset: usize, expected: &[&str]) -> Result<T, SyntaxError> {
    Err(SyntaxError { offset, expected: expected.iter().map(|s| s.to_string()).collect() })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn offset(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.offset(), &[&format!("`{c}`")])
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let off = self.offset();
        let k = match self.bump() {
            Tok::Int(v) => Expr::Num(v),
            Tok::Ident(v) if v != "q" => Expr::Param(v),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                e
            }
            _ => return err(off, &["integer exponent", "index name", "`(`"]),
        };
        let k = if negative { Expr::Neg(Box::new(k)) } else { k };
        Ok(Expr::Pow(Box::new(base), Box::new(k)))
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let off = self.offset();
        match self.bump() {
            Tok::Int(v) => Ok(Expr::Num(v)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('-') => Ok(Expr::Neg(Box::new(self.atom()?))),
            Tok::Ident(name) => {
                if *self.peek() == Tok::Sym('(') {
                    self.call(name, off)
                } else if name == "q" {
                    Ok(Expr::Q)
                } else {
                    Ok(Expr::Param(name))
                }
            }
            _ => err(off, &["number", "`q`", "identifier", "`(`", "`-`"]),
        }
    }

    fn list(&mut self, terminators: &[char]) -> Result<Vec<Expr>, SyntaxError> {
        let mut out = Vec::new();
        if terminators.iter().any(|c| *self.peek() == Tok::Sym(*c)) {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn call(&mut self, name: String, off: usize) -> Result<Expr, SyntaxError> {
        self.expect('(')?;
        match name.as_str() {
            "phi" => {
                let upper = self.list(&[';'])?;
                self.expect(';')?;
                let lower = self.list(&[';'])?;
                self.expect(';')?;
                let arg = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Phi { upper, lower, arg: Box::new(arg) })
            }
            "bigsum" => {
                let voff = self.offset();
                let var = match self.bump() {
                    Tok::Ident(v) if v != "q" => v,
                    _ => return err(voff, &["index name"]),
                };
                self.expect(',')?;
                let lo = self.expr()?;
                self.expect(',')?;
                let hi = self.expr()?;
                self.expect(',')?;
                let body = self.expr()?;
                self.expect(')')?;
                Ok(Expr::BigSum { var, lo: Box::new(lo), hi: Box::new(hi), body: Box::new(body) })
            }
            _ => {
                let Some(b) = Builtin::lookup(&name) else {
                    let mut names: Vec<&str> = Builtin::ALL.iter().map(|b| b.name()).collect();
                    names.extend(["phi", "bigsum"]);
                    return err(off, &names);
                };
                let args_off = self.offset();
                let args = self.list(&[')'])?;
                self.expect(')')?;
                if args.len() != b.arity() {
                    return err(args_off, &[&format!("{} argument(s) to {}", b.arity(), b.name())]);
                }
                Ok(Expr::Call(b, args))
            }
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { toks: Lexer::tokens(text)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        let expected = ["operator", "end of input"];
        return err(p.offset(), &expected);
    }
    Ok(e)
}

// Binding strength, loosest first.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const POWER: u8 = 3;
const ATOM: u8 = 4;

impl Expr {
    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => SUM,
            Expr::Mul(..) | Expr::Div(..) => PRODUCT,
            Expr::Pow(..) => POWER,
            _ => ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Q => write!(f, "q"),
            Expr::Param(p) => write!(f, "{p}"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.write_at(f, ATOM)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, SUM)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { '+' } else { '-' })?;
                b.write_at(f, PRODUCT)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(f, PRODUCT)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { '*' } else { '/' })?;
                b.write_at(f, POWER)
            }
            Expr::Pow(a, k) => {
                a.write_at(f, ATOM)?;
                write!(f, "^")?;
                match &**k {
                    Expr::Num(_) | Expr::Param(_) => write!(f, "{k}"),
                    Expr::Neg(x) if matches!(**x, Expr::Num(_) | Expr::Param(_)) => write!(f, "{k}"),
                    _ => write!(f, "({k})"),
                }
            }
            Expr::Call(b, args) => {
                write!(f, "{}(", b.name())?;
                write_list(f, args)?;
                write!(f, ")")
            }
            Expr::Phi { upper, lower, arg } => {
                write!(f, "phi(")?;
                write_list(f, upper)?;
                write!(f, "; ")?;
                write_list(f, lower)?;
                write!(f, "; {arg})")
            }
            Expr::BigSum { var, lo, hi, body } => write!(f, "bigsum({var}, {lo}, {hi}, {body})"),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[Expr]) -> fmt::Result {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

/// Prints an expression so that it parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calls_and_sums() {
        assert_eq!(parse_expression("pochinf(q)").unwrap(), Expr::Call(Builtin::PochInf, vec![Expr::Q]));
        let e = parse_expression("lambert(1/2) + 3").unwrap();
        assert!(matches!(e, Expr::Add(ref a, ref b) if matches!(**a, Expr::Call(Builtin::Lambert, _)) && **b == Expr::Num(Rational::from_integer(3.into()))));
        let e = parse_expression("bigsum(n,1,4, qbin(4,n)*q^n)").unwrap();
        let Expr::BigSum { var, body, .. } = e else { panic!() };
        assert_eq!(var, "n");
        assert!(matches!(*body, Expr::Mul(..)));
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse_expression("1 + * q").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_expression("poch(q)").unwrap_err();
        assert_eq!(e.offset, 5);
        let e = parse_expression("foo(q)").unwrap_err();
        assert!(e.expected.iter().any(|s| s == "lambert"));
        assert_eq!(parse_expression("q )").unwrap_err().offset, 2);
    }
}
