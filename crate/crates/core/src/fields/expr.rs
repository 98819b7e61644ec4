//! Expression trees over chart coordinates with exact symbolic derivatives.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Const(f64),
    /// Coordinate `x^{i+1}`.
    Coord(usize),
    Add(Expr, Expr),
    Sub(Expr, Expr),
    Mul(Expr, Expr),
    Div(Expr, Expr),
    Pow(Expr, i32),
    Sin(Expr),
    Cos(Expr),
    Exp(Expr),
}

/// A smooth scalar field on a chart. Cloning shares the tree.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr(Arc<Node>);

/// Scalar fields are plain expressions.
pub type ScalarField = Expr;

impl Expr {
    fn wrap(node: Node) -> Self {
        Expr(Arc::new(node))
    }

    pub fn constant(c: f64) -> Self {
        Self::wrap(Node::Const(c))
    }

    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    pub fn one() -> Self {
        Self::constant(1.0)
    }

    pub fn coord(i: usize) -> Self {
        Self::wrap(Node::Coord(i))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn as_const(&self) -> Option<f64> {
        match *self.0 {
            Node::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_const() == Some(0.0)
    }

    pub fn sum(a: &Expr, b: &Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::constant(x + y),
            (Some(x), _) if x == 0.0 => b.clone(),
            (_, Some(y)) if y == 0.0 => a.clone(),
            _ => Self::wrap(Node::Add(a.clone(), b.clone())),
        }
    }

    pub fn difference(a: &Expr, b: &Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::constant(x - y),
            (_, Some(y)) if y == 0.0 => a.clone(),
            (Some(x), _) if x == 0.0 => Expr::product(&Expr::constant(-1.0), b),
            _ => Self::wrap(Node::Sub(a.clone(), b.clone())),
        }
    }

    pub fn product(a: &Expr, b: &Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::constant(x * y),
            (Some(x), _) | (_, Some(x)) if x == 0.0 => Expr::zero(),
            (Some(x), _) if x == 1.0 => b.clone(),
            (_, Some(y)) if y == 1.0 => a.clone(),
            _ => Self::wrap(Node::Mul(a.clone(), b.clone())),
        }
    }

    pub fn quotient(a: &Expr, b: &Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) if y != 0.0 => Expr::constant(x / y),
            (Some(x), _) if x == 0.0 => Expr::zero(),
            (_, Some(y)) if y == 1.0 => a.clone(),
            _ => Self::wrap(Node::Div(a.clone(), b.clone())),
        }
    }

    pub fn powi(&self, k: i32) -> Expr {
        match (k, self.as_const()) {
            (0, _) => Expr::one(),
            (1, _) => self.clone(),
            (_, Some(c)) => Expr::constant(c.powi(k)),
            _ => Self::wrap(Node::Pow(self.clone(), k)),
        }
    }

    pub fn sin(&self) -> Expr {
        match self.as_const() {
            Some(c) => Expr::constant(c.sin()),
            None => Self::wrap(Node::Sin(self.clone())),
        }
    }

    pub fn cos(&self) -> Expr {
        match self.as_const() {
            Some(c) => Expr::constant(c.cos()),
            None => Self::wrap(Node::Cos(self.clone())),
        }
    }

    pub fn exp(&self) -> Expr {
        match self.as_const() {
            Some(c) => Expr::constant(c.exp()),
            None => Self::wrap(Node::Exp(self.clone())),
        }
    }

    pub fn scale(&self, c: f64) -> Expr {
        Expr::product(&Expr::constant(c), self)
    }

    /// Sum of many terms, skipping zeros.
    pub fn total<'a>(terms: impl IntoIterator<Item = &'a Expr>) -> Expr {
        terms.into_iter().fold(Expr::zero(), |acc, t| Expr::sum(&acc, t))
    }

    /// Value at the point `p`. Coordinates beyond `p` read as NaN.
    pub fn eval(&self, p: &[f64]) -> f64 {
        self.eval_in(p, &mut HashMap::new())
    }

    // shared subtrees are evaluated once
    fn eval_in(&self, p: &[f64], memo: &mut HashMap<*const Node, f64>) -> f64 {
        let shared = Arc::strong_count(&self.0) > 1;
        if shared {
            if let Some(v) = memo.get(&Arc::as_ptr(&self.0)) {
                return *v;
            }
        }
        let v = match &*self.0 {
            Node::Const(c) => return *c,
            Node::Coord(i) => return p.get(*i).copied().unwrap_or(f64::NAN),
            Node::Add(a, b) => a.eval_in(p, memo) + b.eval_in(p, memo),
            Node::Sub(a, b) => a.eval_in(p, memo) - b.eval_in(p, memo),
            Node::Mul(a, b) => a.eval_in(p, memo) * b.eval_in(p, memo),
            Node::Div(a, b) => a.eval_in(p, memo) / b.eval_in(p, memo),
            Node::Pow(a, k) => a.eval_in(p, memo).powi(*k),
            Node::Sin(a) => a.eval_in(p, memo).sin(),
            Node::Cos(a) => a.eval_in(p, memo).cos(),
            Node::Exp(a) => a.eval_in(p, memo).exp(),
        };
        if shared {
            memo.insert(Arc::as_ptr(&self.0), v);
        }
        v
    }

    /// Exact partial derivative `∂f/∂x^{i+1}`.
    pub fn partial(&self, i: usize) -> Expr {
        self.partial_in(i, &mut HashMap::new())
    }

    fn partial_in(&self, i: usize, memo: &mut HashMap<*const Node, Expr>) -> Expr {
        let shared = Arc::strong_count(&self.0) > 1;
        if shared {
            if let Some(d) = memo.get(&Arc::as_ptr(&self.0)) {
                return d.clone();
            }
        }
        let mut d = |e: &Expr| e.partial_in(i, memo);
        let out = match &*self.0 {
            Node::Const(_) => return Expr::zero(),
            Node::Coord(j) => return Expr::constant(if *j == i { 1.0 } else { 0.0 }),
            Node::Add(a, b) => Expr::sum(&d(a), &d(b)),
            Node::Sub(a, b) => Expr::difference(&d(a), &d(b)),
            Node::Mul(a, b) => Expr::sum(&Expr::product(&d(a), b), &Expr::product(a, &d(b))),
            Node::Div(a, b) => {
                let (da, db) = (d(a), d(b));
                let num = Expr::difference(&Expr::product(&da, b), &Expr::product(a, &db));
                Expr::quotient(&num, &b.powi(2))
            }
            Node::Pow(a, k) => Expr::product(&Expr::product(&Expr::constant(*k as f64), &a.powi(k - 1)), &d(a)),
            Node::Sin(a) => Expr::product(&a.cos(), &d(a)),
            Node::Cos(a) => Expr::product(&a.sin().scale(-1.0), &d(a)),
            Node::Exp(a) => Expr::product(self, &d(a)),
        };
        if shared {
            memo.insert(Arc::as_ptr(&self.0), out.clone());
        }
        out
    }

    /// Highest coordinate index used, plus one.
    pub fn arity(&self) -> usize {
        match &*self.0 {
            Node::Const(_) => 0,
            Node::Coord(i) => i + 1,
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => a.arity().max(b.arity()),
            Node::Pow(a, _) | Node::Sin(a) | Node::Cos(a) | Node::Exp(a) => a.arity(),
        }
    }

    /// Parses a scalar expression in the coordinates `x1 … xn`.
    ///
    /// Grammar: `+ -` < `* /` < unary `-` < `^` (integer exponent) < atoms.
    /// Atoms are numbers, `pi`, coordinates, parentheses and the calls
    /// `sin cos exp tan cot`.
    pub fn parse(text: &str, n: usize) -> Result<Expr> {
        let mut p = ScalarParser { s: text.as_bytes(), pos: 0, n };
        let e = p.sum()?;
        p.skip_ws();
        if p.pos < p.s.len() {
            return Err(p.error("expected operator or end of input"));
        }
        Ok(e)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Const(c) => write!(f, "{c}"),
            Node::Coord(i) => write!(f, "x{}", i + 1),
            Node::Add(a, b) => write!(f, "({a} + {b})"),
            Node::Sub(a, b) => write!(f, "({a} - {b})"),
            Node::Mul(a, b) => write!(f, "({a} * {b})"),
            Node::Div(a, b) => write!(f, "({a} / {b})"),
            Node::Pow(a, k) => write!(f, "({a})^{k}"),
            Node::Sin(a) => write!(f, "sin({a})"),
            Node::Cos(a) => write!(f, "cos({a})"),
            Node::Exp(a) => write!(f, "exp({a})"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Expr> for &Expr {
            type Output = Expr;
            fn $m(self, rhs: &Expr) -> Expr {
                Expr::$f(self, rhs)
            }
        }
        impl $tr<Expr> for Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr::$f(&self, &rhs)
            }
        }
        impl $tr<&Expr> for Expr {
            type Output = Expr;
            fn $m(self, rhs: &Expr) -> Expr {
                Expr::$f(&self, rhs)
            }
        }
        impl $tr<Expr> for &Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr::$f(self, &rhs)
            }
        }
    };
}

binop!(Add, add, sum);
binop!(Sub, sub, difference);
binop!(Mul, mul, product);
binop!(Div, div, quotient);

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(-1.0)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(-1.0)
    }
}

impl From<f64> for Expr {
    fn from(c: f64) -> Self {
        Expr::constant(c)
    }
}

struct ScalarParser<'a> {
    s: &'a [u8],
    pos: usize,
    n: usize,
}

impl ScalarParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos + 1, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                acc = &acc / &self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or_default();
            let k: i32 = digits.parse().map_err(|_| {
                self.pos = start;
                self.error("expected integer exponent")
            })?;
            return Ok(base.powi(if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.name(),
            _ => Err(self.error("expected number, coordinate, function or '('")),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'.') {
            self.pos += 1;
        }
        if self.pos < self.s.len() && matches!(self.s[self.pos], b'e' | b'E') {
            let save = self.pos;
            self.pos += 1;
            if self.pos < self.s.len() && matches!(self.s[self.pos], b'+' | b'-') {
                self.pos += 1;
            }
            let digits = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if self.pos == digits {
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or_default();
        text.parse::<f64>().map(Expr::constant).map_err(|_| {
            self.pos = start;
            self.error("malformed number")
        })
    }

    fn name(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or_default();
        if word == "pi" {
            return Ok(Expr::constant(std::f64::consts::PI));
        }
        if let Some(idx) = word.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
            if idx == 0 || idx > self.n {
                self.pos = start;
                return Err(self.error(&format!("coordinate index out of range 1..{}", self.n)));
            }
            return Ok(Expr::coord(idx - 1));
        }
        let f: fn(&Expr) -> Expr = match word {
            "sin" => Expr::sin,
            "cos" => Expr::cos,
            "exp" => Expr::exp,
            "tan" => |a| a.sin() / a.cos(),
            "cot" => |a| a.cos() / a.sin(),
            _ => {
                self.pos = start;
                return Err(self.error(&format!("unknown name '{word}'")));
            }
        };
        if !self.eat(b'(') {
            return Err(self.error("expected '('"));
        }
        let arg = self.sum()?;
        if !self.eat(b')') {
            return Err(self.error("expected ')'"));
        }
        Ok(f(&arg))
    }
}

/// An open box `lo < x < hi` in `ℝⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Chart {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl Chart {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch { left: lo.len(), right: hi.len() });
        }
        if lo.iter().zip(&hi).any(|(a, b)| !(a < b)) {
            return Err(Error::Signature("chart box must have lo < hi".into()));
        }
        Ok(Chart { lo, hi })
    }

    pub fn whole(n: usize) -> Self {
        Chart { lo: vec![f64::NEG_INFINITY; n], hi: vec![f64::INFINITY; n] }
    }

    pub fn n(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[f64] {
        &self.lo
    }

    pub fn hi(&self) -> &[f64] {
        &self.hi
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.len() == self.n() && p.iter().zip(self.lo.iter().zip(&self.hi)).all(|(x, (a, b))| a < x && x < b)
    }

    pub fn check(&self, p: &[f64]) -> Result<()> {
        if p.len() != self.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: p.len() });
        }
        if !self.contains(p) {
            return Err(Error::OutsideDomain(p.to_vec()));
        }
        Ok(())
    }
}

/// Directional derivative `af = a^i ∂_i f` as a field.
pub fn directional_expr(f: &Expr, a: &[Expr]) -> Expr {
    let terms: Vec<Expr> =
        a.iter().enumerate().filter(|(_, ai)| !ai.is_zero()).map(|(i, ai)| ai * f.partial(i)).collect();
    Expr::total(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Expr {
        Expr::coord(i)
    }

    #[test]
    fn derivative_of_constant_is_the_zero_tree() {
        assert!(Expr::constant(3.5).partial(0).is_zero());
        assert!(x(1).partial(0).is_zero());
    }

    #[test]
    fn product_and_chain_rules() {
        let f = &x(0) * &x(1);
        assert_eq!(f.partial(0).eval(&[2.0, 3.0]), 3.0);
        let g = (&x(0) * &x(0)).sin();
        let p = [0.7];
        assert!((g.partial(0).eval(&p) - 2.0 * 0.7 * (0.49f64).cos()).abs() < 1e-15);
        let h = x(0).powi(-2);
        assert!((h.partial(0).eval(&[2.0]) + 0.25).abs() < 1e-15);
        let q = x(0).exp() / x(0);
        let v = 1.3f64;
        assert!((q.partial(0).eval(&[v]) - v.exp() * (v - 1.0) / (v * v)).abs() < 1e-14);
    }

    #[test]
    fn parser_precedence() {
        let e = Expr::parse("1 + 2*x1^2 - -x2", 2).unwrap();
        assert_eq!(e.eval(&[3.0, 5.0]), 1.0 + 18.0 + 5.0);
        let c = Expr::parse("cot(x1)", 1).unwrap();
        assert!((c.eval(&[0.5]) - 0.5f64.cos() / 0.5f64.sin()).abs() < 1e-15);
        assert!((Expr::parse("-sin(x1)*cos(x1)", 1).unwrap().eval(&[0.3]) + 0.3f64.sin() * 0.3f64.cos()).abs() < 1e-16);
    }

    #[test]
    fn parser_errors_carry_offsets() {
        match Expr::parse("x1 + x3", 2) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("{other:?}"),
        }
        assert!(Expr::parse("sin x1", 1).is_err());
        assert!(Expr::parse("(x1", 1).is_err());
        assert!(Expr::parse("x1^y", 1).is_err());
    }

    #[test]
    fn display_round_trips() {
        let e = Expr::parse("x1*sin(x2)/(1+x1^2) - exp(-x2)", 2).unwrap();
        let back = Expr::parse(&e.to_string(), 2).unwrap();
        let p = [0.4, 1.1];
        assert!((e.eval(&p) - back.eval(&p)).abs() < 1e-15);
    }

    #[test]
    fn chart_is_open() {
        let c = Chart::new(vec![0.0], vec![1.0]).unwrap();
        assert!(c.contains(&[0.5]));
        assert!(!c.contains(&[0.0]));
        assert!(matches!(c.check(&[2.0]), Err(Error::OutsideDomain(_))));
    }
}
