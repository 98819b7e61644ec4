//! Expressions over `⋀H_V` and their ASCII grammar.
//!
//! Precedence from tightest to loosest, all binary operators left
//! associative: calls and parentheses, `^` (wedge), `_|` and `|_`
//! (left and right contraction), `*` (Clifford product), `+` and `-`.
//! A leading `-` negates the operand that follows it.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Rev,
    Gi,
    Conj,
    Hconj,
    Hodge,
    Unhodge,
    Part,
    Sp,
    Sigma,
}

impl Func {
    pub const ALL: [Func; 9] =
        [Func::Rev, Func::Gi, Func::Conj, Func::Hconj, Func::Hodge, Func::Unhodge, Func::Part, Func::Sp, Func::Sigma];

    pub fn name(self) -> &'static str {
        match self {
            Func::Rev => "rev",
            Func::Gi => "gi",
            Func::Conj => "conj",
            Func::Hconj => "hconj",
            Func::Hodge => "hodge",
            Func::Unhodge => "unhodge",
            Func::Part => "part",
            Func::Sp => "sp",
            Func::Sigma => "sigma",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Sigma => 0,
            Func::Part | Func::Sp => 2,
            _ => 1,
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Ast {
    Scalar(f64),
    /// `e_k`, 1-based.
    BasisE(usize),
    /// `θ^k`, 1-based.
    BasisT(usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Wedge(Box<Ast>, Box<Ast>),
    LContr(Box<Ast>, Box<Ast>),
    RContr(Box<Ast>, Box<Ast>),
    Clifford(Box<Ast>, Box<Ast>),
    Call(Func, Vec<Ast>),
}

impl fmt::Display for Ast {
    /// Fully parenthesized, so printing and reparsing gives the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bin = |f: &mut fmt::Formatter<'_>, a: &Ast, op: &str, b: &Ast| write!(f, "({a} {op} {b})");
        match self {
            Ast::Scalar(c) => write!(f, "{c}"),
            Ast::BasisE(k) => write!(f, "e{k}"),
            Ast::BasisT(k) => write!(f, "t{k}"),
            Ast::Neg(a) => write!(f, "-({a})"),
            Ast::Add(a, b) => bin(f, a, "+", b),
            Ast::Sub(a, b) => bin(f, a, "-", b),
            Ast::Wedge(a, b) => bin(f, a, "^", b),
            Ast::LContr(a, b) => bin(f, a, "_|", b),
            Ast::RContr(a, b) => bin(f, a, "|_", b),
            Ast::Clifford(a, b) => bin(f, a, "*", b),
            Ast::Call(Func::Sigma, _) => write!(f, "sigma"),
            Ast::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

const OPERAND: &[&str] = &["number", "e<k>", "t<k>", "function call", "'('", "'-'"];

/// Parses `text` as an element of `⋀H_V` with `n` generators on each side.
pub fn parse(text: &str, n: usize) -> Result<Ast> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, n };
    let ast = p.sum()?;
    p.skip_ws();
    if p.pos < p.s.len() {
        return Err(p.expected(&["'+'", "'-'", "'*'", "'^'", "'_|'", "'|_'", "end of input"]));
    }
    Ok(ast)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn error_at(&self, pos: usize, message: String) -> Error {
        Error::Parse { offset: pos + 1, message }
    }

    fn expected(&self, set: &[&str]) -> Error {
        let found = match self.s.get(self.pos) {
            Some(&c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        };
        self.error_at(self.pos, format!("expected one of {}, found {found}", set.join(", ")))
    }

    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    /// Consumes `tok` after optional whitespace.
    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Ast> {
        let mut lhs = self.clifford()?;
        loop {
            if self.eat("+") {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.clifford()?));
            } else if self.eat("-") {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.clifford()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn clifford(&mut self) -> Result<Ast> {
        let mut lhs = self.contraction()?;
        while self.eat("*") {
            lhs = Ast::Clifford(Box::new(lhs), Box::new(self.contraction()?));
        }
        Ok(lhs)
    }

    fn contraction(&mut self) -> Result<Ast> {
        let mut lhs = self.wedge()?;
        loop {
            if self.eat("_|") {
                lhs = Ast::LContr(Box::new(lhs), Box::new(self.wedge()?));
            } else if self.eat("|_") {
                lhs = Ast::RContr(Box::new(lhs), Box::new(self.wedge()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn wedge(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while self.eat("^") {
            lhs = Ast::Wedge(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if !self.eat("-") {
            return self.atom();
        }
        self.skip_ws();
        if self.s.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == b'.') {
            let Ast::Scalar(c) = self.number()? else { unreachable!("number() yields scalars") };
            return Ok(Ast::Scalar(-c));
        }
        Ok(Ast::Neg(Box::new(self.unary()?)))
    }

    fn atom(&mut self) -> Result<Ast> {
        self.skip_ws();
        match self.s.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(")") {
                    return Err(self.expected(&["')'"]));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || *c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.name(),
            _ => Err(self.expected(OPERAND)),
        }
    }

    fn number(&mut self) -> Result<Ast> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            while p.s.get(p.pos).is_some_and(u8::is_ascii_digit) {
                p.pos += 1;
            }
        };
        digits(self);
        if self.s.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            digits(self);
        }
        if matches!(self.s.get(self.pos), Some(b'e' | b'E'))
            && (self.s.get(self.pos + 1).is_some_and(u8::is_ascii_digit)
                || (matches!(self.s.get(self.pos + 1), Some(b'+' | b'-'))
                    && self.s.get(self.pos + 2).is_some_and(u8::is_ascii_digit)))
        {
            self.pos += 2;
            digits(self);
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        text.parse::<f64>().map(Ast::Scalar).map_err(|_| self.error_at(start, format!("malformed number '{text}'")))
    }

    fn name(&mut self) -> Result<Ast> {
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        if let Some(ast) = self.generator(word, start)? {
            return Ok(ast);
        }
        let func = Func::from_name(word).ok_or_else(|| {
            let names: Vec<&str> = Func::ALL.iter().map(|f| f.name()).collect();
            self.error_at(start, format!("unknown function '{word}', expected one of {}", names.join(", ")))
        })?;
        let mut args = Vec::new();
        if self.eat("(") {
            if !self.eat(")") {
                loop {
                    args.push(self.sum()?);
                    if self.eat(")") {
                        break;
                    }
                    if !self.eat(",") {
                        return Err(self.expected(&["','", "')'"]));
                    }
                }
            }
        } else if func.arity() > 0 {
            return Err(self.expected(&["'('"]));
        }
        if args.len() != func.arity() {
            return Err(self
                .error_at(start, format!("{} takes {} argument(s), found {}", func.name(), func.arity(), args.len())));
        }
        Ok(Ast::Call(func, args))
    }

    /// `e<k>` or `t<k>` with `1 ≤ k ≤ n`.
    fn generator(&self, word: &str, start: usize) -> Result<Option<Ast>> {
        let (head, digits) = word.split_at(1);
        if !matches!(head, "e" | "t") || digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Ok(None);
        }
        let k: usize = digits.parse().map_err(|_| self.error_at(start, format!("bad index in '{word}'")))?;
        if k == 0 || k > self.n {
            return Err(self.error_at(start, format!("index {k} in '{word}' outside 1..={}", self.n)));
        }
        Ok(Some(if head == "e" { Ast::BasisE(k) } else { Ast::BasisT(k) }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: usize) -> Box<Ast> {
        Box::new(Ast::BasisE(k))
    }

    fn t(k: usize) -> Box<Ast> {
        Box::new(Ast::BasisT(k))
    }

    #[test]
    fn wedge_of_generators() {
        assert_eq!(parse("e1^t1", 2).unwrap(), Ast::Wedge(e(1), t(1)));
    }

    #[test]
    fn precedence_levels() {
        let got = parse("e1 + e2 * t1 _| e1 ^ t2", 2).unwrap();
        let want = Ast::Add(
            e(1),
            Box::new(Ast::Clifford(e(2), Box::new(Ast::LContr(t(1), Box::new(Ast::Wedge(e(1), t(2))))))),
        );
        assert_eq!(got, want);
        let got = parse("e1 - e2 - t1", 2).unwrap();
        assert_eq!(got, Ast::Sub(Box::new(Ast::Sub(e(1), e(2))), t(1)));
    }

    #[test]
    fn errors_report_offsets() {
        let off = |s: &str| match parse(s, 2) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{other:?}"),
        };
        assert_eq!(off("e1 + "), 6);
        assert_eq!(off("e3"), 1);
        assert_eq!(off("e1 + foo(e1)"), 6);
        assert_eq!(off("part(e1)"), 1);
        assert_eq!(off("(e1"), 4);
        assert_eq!(off("e1 e2"), 4);
    }

    #[test]
    fn negative_literals_fold() {
        assert_eq!(parse("-2", 1).unwrap(), Ast::Scalar(-2.0));
        assert_eq!(parse("-e1", 1).unwrap(), Ast::Neg(e(1)));
        assert_eq!(parse("1.5e-3", 1).unwrap(), Ast::Scalar(1.5e-3));
    }

    #[test]
    fn printing_reparses() {
        for s in ["hodge(sigma)", "part(e1^e2, 1)", "-(e1) + -3 * sp(t1, e1)", "rev(e1 |_ t2) _| e2"] {
            let a = parse(s, 2).unwrap();
            assert_eq!(parse(&a.to_string(), 2).unwrap(), a, "{s}");
        }
    }
}
