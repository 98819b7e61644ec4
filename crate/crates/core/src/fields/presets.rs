//! Named charts with connections.

use std::f64::consts::PI;

use super::connection::Connection;
use super::expr::{Chart, Expr};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Preset {
    pub name: String,
    pub chart: Chart,
    pub connection: Connection,
}

/// Zero coefficients on all of `ℝⁿ`.
pub fn flat(n: usize) -> Preset {
    Preset { name: "flat".into(), chart: Chart::whole(n), connection: Connection::flat(n) }
}

/// Unit-sphere chart `(u, v)` on `0 < u < π`, with
/// `γ^1_{22} = −sin u cos u` and `γ^2_{12} = γ^2_{21} = cot u`.
pub fn sphere() -> Preset {
    let u = Expr::coord(0);
    let cot = u.cos() / u.sin();
    let conn = Connection::from_fn(2, |s, m, v| match (s, m, v) {
        (0, 1, 1) => -(u.sin() * u.cos()),
        (1, 0, 1) | (1, 1, 0) => cot.clone(),
        _ => Expr::zero(),
    });
    let chart = Chart::new(vec![0.0, -2.0 * PI], vec![PI, 2.0 * PI]).expect("valid box");
    Preset { name: "sphere".into(), chart, connection: conn }
}

/// Coefficients from entries `σμν = expr` separated by `;`, with 1-based
/// digit indices and expressions in `x1 … xn`. Unlisted coefficients are zero.
pub fn custom(n: usize, entries: &str) -> Result<Preset> {
    let mut gamma = vec![Expr::zero(); n * n * n];
    let mut offset = 0;
    for entry in entries.split(';') {
        let here = offset;
        offset += entry.len() + 1;
        if entry.trim().is_empty() {
            continue;
        }
        let (lhs, rhs) = entry
            .split_once('=')
            .ok_or_else(|| Error::Parse { offset: here + 1, message: "expected 'σμν = expression'".into() })?;
        let idx: Vec<usize> =
            lhs.trim().chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(|| {
                Error::Parse { offset: here + 1, message: "coefficient indices must be digits".into() }
            })?;
        if idx.len() != 3 || idx.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::Parse { offset: here + 1, message: format!("expected three indices in 1..{n}") });
        }
        let e = Expr::parse(rhs, n).map_err(|err| match err {
            Error::Parse { offset, message } => Error::Parse { offset: offset + here + lhs.len() + 1, message },
            other => other,
        })?;
        gamma[((idx[0] - 1) * n + idx[1] - 1) * n + idx[2] - 1] = e;
    }
    Ok(Preset { name: "custom".into(), chart: Chart::whole(n), connection: Connection::new(n, gamma)? })
}

/// Looks a preset up by name; `custom` needs coefficient text.
pub fn preset(name: &str, n: usize, coefficients: Option<&str>) -> Result<Preset> {
    match name {
        "flat" => Ok(flat(n)),
        "sphere" => Ok(sphere()),
        "custom" => custom(n, coefficients.unwrap_or("")),
        other => Err(Error::Signature(format!("unknown preset '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn custom_reproduces_sphere() {
        let c = custom(2, "122 = -sin(x1)*cos(x1); 212 = cot(x1); 221 = cot(x1)").unwrap();
        let s = sphere();
        let p = [1.1, 0.4];
        for (a, b) in c.connection.coefficients().iter().zip(s.connection.coefficients()) {
            assert!((a.eval(&p) - b.eval(&p)).abs() < 1e-15);
        }
    }

    #[test]
    fn custom_errors_point_into_the_text() {
        match custom(2, "122 = x1; 3 = 1") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 10),
            other => panic!("{other:?}"),
        }
        match custom(2, "122 = x1 +") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("{other:?}"),
        }
    }
}
