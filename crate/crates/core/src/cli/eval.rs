//! Numeric evaluation of parsed expressions.

use serde::Serialize;

use super::ast::{Ast, Func};
use crate::error::{Error, Result};
use crate::exterior::{BaseSpace, Multivector, PRINT_EPS};
use crate::hyperbolic::{self, HMultivector};

/// Evaluates `ast` in `⋀H_V` with `dim V = n`.
pub fn eval(ast: &Ast, n: usize) -> Result<HMultivector> {
    let space = BaseSpace::hyperbolic(n)?;
    let bin = |a: &Ast, b: &Ast| -> Result<(HMultivector, HMultivector)> { Ok((eval(a, n)?, eval(b, n)?)) };
    match ast {
        Ast::Scalar(c) => Ok(Multivector::scalar(space, *c)),
        Ast::BasisE(k) => generator(space, *k, 0),
        Ast::BasisT(k) => generator(space, *k, n),
        Ast::Neg(a) => Ok(-eval(a, n)?),
        Ast::Add(a, b) => bin(a, b).map(|(x, y)| x + y),
        Ast::Sub(a, b) => bin(a, b).map(|(x, y)| x - y),
        Ast::Wedge(a, b) => bin(a, b).and_then(|(x, y)| x.wedge(&y)),
        Ast::LContr(a, b) => bin(a, b).and_then(|(x, y)| hyperbolic::hv_lcontr(&x, &y)),
        Ast::RContr(a, b) => bin(a, b).and_then(|(x, y)| hyperbolic::hv_rcontr(&x, &y)),
        Ast::Clifford(a, b) => bin(a, b).and_then(|(x, y)| hyperbolic::clifford(&x, &y)),
        Ast::Call(func, args) => call(*func, args, n),
    }
}

fn generator(space: BaseSpace, k: usize, shift: usize) -> Result<HMultivector> {
    if k == 0 || k > space.n() {
        return Err(Error::Signature(format!("generator index {k} outside 1..={}", space.n())));
    }
    Multivector::generator(space, shift + k - 1)
}

fn call(func: Func, args: &[Ast], n: usize) -> Result<HMultivector> {
    if args.len() != func.arity() {
        return Err(Error::Arity { expected: func.arity(), found: args.len() });
    }
    let arg = |i: usize| eval(&args[i], n);
    match func {
        Func::Rev => Ok(arg(0)?.reversion()),
        Func::Gi => Ok(arg(0)?.grade_involution()),
        Func::Conj => Ok(arg(0)?.conjugation()),
        Func::Hconj => hyperbolic::hyperbolic_conjugate(&arg(0)?),
        Func::Hodge => hyperbolic::hodge(&arg(0)?),
        Func::Unhodge => hyperbolic::hodge_inv(&arg(0)?),
        Func::Part => {
            let k = arg(1)?;
            let kv = k.scalar_part();
            let extra = k.terms().any(|(m, c)| m != 0 && c.abs() > PRINT_EPS);
            if extra || kv < 0.0 || kv.fract() != 0.0 {
                return Err(Error::Signature("part expects a nonnegative integer grade".into()));
            }
            if kv > (2 * n) as f64 {
                return Err(Error::GradeOutOfRange { grade: kv as usize, max: 2 * n });
            }
            Ok(arg(0)?.part(kv as usize))
        }
        Func::Sp => {
            let v = hyperbolic::gram_inner(&arg(0)?, &arg(1)?)?;
            Ok(Multivector::scalar(BaseSpace::hyperbolic(n)?, v))
        }
        Func::Sigma => hyperbolic::sigma(n),
    }
}

/// A coefficient with four decimals and trailing zeros removed.
pub fn compact(c: f64) -> String {
    let s = format!("{c:.4}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Human-readable result: a plain number when only the scalar part
/// survives, otherwise a blade sum in mask order such as `-0.5000 e2 + 1.0000 e1^t1`.
pub fn format_result(u: &HMultivector) -> String {
    let visible: Vec<(u32, f64)> = u.terms().filter(|(_, c)| c.abs() > PRINT_EPS).collect();
    match visible.as_slice() {
        [] => "0".to_string(),
        [(0, c)] => compact(*c),
        _ => u.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JsonBlade {
    pub mask: u32,
    pub coeff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JsonResult {
    pub blades: Vec<JsonBlade>,
    pub n: usize,
}

/// `{"blades": [{"mask", "coeff"}], "n"}` with near-zero blades dropped.
pub fn json_result(u: &HMultivector) -> JsonResult {
    let blades =
        u.terms().filter(|(_, c)| c.abs() > PRINT_EPS).map(|(mask, coeff)| JsonBlade { mask, coeff }).collect();
    JsonResult { blades, n: u.n() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::ast::parse;

    fn run(s: &str, n: usize) -> HMultivector {
        eval(&parse(s, n).unwrap(), n).unwrap()
    }

    #[test]
    fn witt_anticommutator_is_two() {
        assert_eq!(format_result(&run("t1*e1 + e1*t1", 2)), "2");
    }

    #[test]
    fn hodge_of_sigma() {
        assert_eq!(format_result(&run("hodge(sigma)", 2)), "1");
        assert_eq!(format_result(&run("hodge(sigma)", 1)), "-1");
    }

    #[test]
    fn part_selects_grade() {
        assert_eq!(format_result(&run("part(e1^e2, 1)", 2)), "0");
        assert_eq!(format_result(&run("part(e1 + 3*e1^e2, 2)", 2)), "3.0000 e1^e2");
        assert!(eval(&parse("part(e1, e2)", 2).unwrap(), 2).is_err());
    }

    #[test]
    fn blade_sums_print_with_four_decimals() {
        assert_eq!(format_result(&run("e1^t1 - 0.5*e2", 2)), "-0.5000 e2 + 1.0000 e1^t1");
        let j = json_result(&run("2*t1", 1));
        assert_eq!(j, JsonResult { blades: vec![JsonBlade { mask: 2, coeff: 2.0 }], n: 1 });
    }

    #[test]
    fn compact_trims() {
        assert_eq!(compact(2.0), "2");
        assert_eq!(compact(-0.5), "-0.5");
        assert_eq!(compact(1e-9), "0");
        assert_eq!(compact(0.70710678), "0.7071");
    }
}
