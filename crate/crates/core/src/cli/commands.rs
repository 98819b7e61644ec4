//! The `eval`, `check`, `curvature` and `basis` subcommands, as functions
//! returning the text to print.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::Serialize;

use super::ast::parse;
use super::eval::{compact, eval, format_result, json_result, JsonBlade};
use crate::error::{Error, Result};
use crate::exterior::{BaseSpace, PRINT_EPS};
use crate::fields::{curvature, presets, torsion, Expr, VectorField};
use crate::hyperbolic::{gram_inner, orthonormal_basis};
use crate::suites::{run_suite, SuiteReport};

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

/// Parses and evaluates `text` in `⋀H_V` with `dim V = n`.
pub fn eval_cmd(text: &str, n: usize, json: bool) -> Result<String> {
    BaseSpace::hyperbolic(n)?;
    let u = eval(&parse(text, n)?, n)?;
    Ok(if json { to_json(&json_result(&u)) } else { format_result(&u) })
}

/// Runs a suite; the flag is true when every case passed.
pub fn check_cmd(suite: &str, n: usize, cases: usize, seed: u64, tol: f64, json: bool) -> Result<(String, bool)> {
    let report: SuiteReport = run_suite(suite, n, cases, seed, tol)?;
    let text = if json { to_json(&report) } else { report.to_string() };
    Ok((text, report.passed()))
}

/// Comma-separated coordinates, each a constant scalar expression such as `pi/2`.
pub fn parse_point(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let e = Expr::parse(part, 0).map_err(|err| match err {
            Error::Parse { offset: o, message } => Error::Parse { offset: o + offset, message },
            other => other,
        })?;
        out.push(e.eval(&[]));
        offset += part.len() + 1;
    }
    Ok(out)
}

#[derive(Serialize)]
struct Component {
    slots: Vec<usize>,
    value: Vec<f64>,
}

#[derive(Serialize)]
struct CurvatureReport {
    preset: String,
    n: usize,
    point: Vec<f64>,
    torsion: Vec<Component>,
    curvature: Vec<Component>,
}

fn components(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|c| format!("{:.4}", if c.abs() <= PRINT_EPS { 0.0 } else { *c })).collect();
    format!("[{}]", parts.join(", "))
}

/// Torsion `τ(∂_μ,∂_ν)` and curvature `ρ(∂_μ,∂_ν,∂_ρ)` of a preset at a
/// point, for `μ < ν`.
pub fn curvature_cmd(name: &str, n: usize, coefficients: Option<&str>, point: &[f64], json: bool) -> Result<String> {
    let preset = presets::preset(name, n, coefficients)?;
    let n = preset.connection.n();
    if point.len() != n {
        return Err(Error::DimensionMismatch { left: n, right: point.len() });
    }
    preset.chart.check(point)?;
    let conn = &preset.connection;
    let space = BaseSpace::primal(n)?;
    let d: Vec<VectorField> = (0..n).map(|m| VectorField::basis(space, m)).collect::<Result<_>>()?;
    let mut report =
        CurvatureReport { preset: preset.name.clone(), n, point: point.to_vec(), torsion: vec![], curvature: vec![] };
    for mu in 0..n {
        for nu in mu + 1..n {
            let t = torsion(conn, &d[mu], &d[nu])?.eval(point).vector_part();
            report.torsion.push(Component { slots: vec![mu + 1, nu + 1], value: t });
            for rho in 0..n {
                let r = curvature(conn, &d[mu], &d[nu], &d[rho])?.eval(point).vector_part();
                report.curvature.push(Component { slots: vec![mu + 1, nu + 1, rho + 1], value: r });
            }
        }
    }
    if json {
        return Ok(to_json(&report));
    }
    let coords: Vec<String> = point.iter().map(|x| format!("{x:.4}")).collect();
    let mut out = format!("preset {} (n={}) at ({})", report.preset, n, coords.join(", "));
    let name = |s: &[usize]| s.iter().map(|i| format!("d{i}")).collect::<Vec<_>>().join(",");
    for c in &report.torsion {
        out += &format!("\ntau({}) = {}", name(&c.slots), components(&c.value));
    }
    for c in &report.curvature {
        out += &format!("\nrho({}) = {}", name(&c.slots), components(&c.value));
    }
    Ok(out)
}

#[derive(Serialize)]
struct BasisVector {
    name: String,
    blades: Vec<JsonBlade>,
    square: f64,
}

#[derive(Serialize)]
struct BasisReport {
    n: usize,
    witt: Vec<BasisVector>,
    orthonormal: Vec<BasisVector>,
}

/// The Witt basis `e_k, θ^k` and the orthonormal basis
/// `σ_k = (e_k + θ^k)/√2`, `σ_{n+k} = (−e_k + θ^k)/√2`.
pub fn basis_cmd(n: usize, json: bool) -> Result<String> {
    let space = BaseSpace::hyperbolic(n)?;
    let entry = |name: String, u: &crate::hyperbolic::HMultivector| -> Result<BasisVector> {
        Ok(BasisVector { name, blades: json_result(u).blades, square: gram_inner(u, u)? })
    };
    let mut witt = Vec::new();
    for i in 0..2 * n {
        let u = crate::exterior::Multivector::generator(space, i)?;
        witt.push(entry(space.generator_name(i), &u)?);
    }
    let orthonormal = orthonormal_basis(n)?
        .iter()
        .enumerate()
        .map(|(k, u)| entry(format!("s{}", k + 1), u))
        .collect::<Result<Vec<_>>>()?;
    let report = BasisReport { n, witt, orthonormal };
    if json {
        return Ok(to_json(&report));
    }
    let mut out = format!("Witt basis (n={n}), <e_k, t^l> = delta_kl, both halves isotropic");
    out += "\n  ";
    out += &report.witt.iter().map(|b| b.name.as_str()).collect::<Vec<_>>().join(" ");
    out += &format!("\northonormal basis, coefficients +-1/sqrt2 = +-{:.4}", FRAC_1_SQRT_2);
    for (b, u) in report.orthonormal.iter().zip(orthonormal_basis(n)?) {
        out += &format!("\n  {} = {}   <{0},{0}> = {}", b.name, format_result(&u), compact(b.square));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_curvature_at_equator() {
        let out = curvature_cmd("sphere", 2, None, &parse_point("pi/2, 0.3").unwrap(), false).unwrap();
        assert!(out.contains("rho(d1,d2,d2) = [1.0000, 0.0000]"), "{out}");
        assert!(out.contains("tau(d1,d2) = [0.0000, 0.0000]"), "{out}");
    }

    #[test]
    fn curvature_rejects_points_off_the_chart() {
        assert!(matches!(curvature_cmd("sphere", 2, None, &[4.0, 0.0], false), Err(Error::OutsideDomain(_))));
        assert!(curvature_cmd("sphere", 2, None, &[1.0], false).is_err());
    }

    #[test]
    fn point_offsets_are_global() {
        match parse_point("1, 2 +") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn orthonormal_squares_alternate() {
        let out = basis_cmd(1, false).unwrap();
        assert!(out.contains("s1 = 0.7071 e1 + 0.7071 t1   <s1,s1> = 1"), "{out}");
        assert!(out.contains("s2 = -0.7071 e1 + 0.7071 t1   <s2,s2> = -1"), "{out}");
    }
}
