//! Smooth vector and form operator fields.

use nalgebra::DMatrix;

use super::expr::{directional_expr, Expr};
use super::multivector::{MultivectorField, VectorField};
use crate::duality::lcontr_blade;
use crate::error::{Error, Result};
use crate::extensor::{Operator, Side};
use crate::exterior::{bits, wedge_sign, BaseSpace, SpaceKind};

/// A field of linear operators on `V` (or `V*`), stored as an `n × n`
/// matrix of scalar fields whose column `j` is the image of `b_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorField {
    side: Side,
    n: usize,
    m: Vec<Expr>,
}

fn det(m: &[Expr], n: usize) -> Expr {
    match n {
        0 => Expr::one(),
        1 => m[0].clone(),
        2 => &m[0] * &m[3] - &m[1] * &m[2],
        _ => {
            let mut terms = Vec::with_capacity(n);
            for j in 0..n {
                if m[j].is_zero() {
                    continue;
                }
                let t = &m[j] * det(&minor(m, n, 0, j), n - 1);
                terms.push(if j % 2 == 0 { t } else { -t });
            }
            Expr::total(&terms)
        }
    }
}

fn minor(m: &[Expr], n: usize, row: usize, col: usize) -> Vec<Expr> {
    let mut out = Vec::with_capacity((n - 1) * (n - 1));
    for i in (0..n).filter(|&i| i != row) {
        for j in (0..n).filter(|&j| j != col) {
            out.push(m[i * n + j].clone());
        }
    }
    out
}

impl OperatorField {
    /// Row-major entries: `entries[i * n + j]` is the `i`-th component of the image of `b_j`.
    pub fn new(side: Side, n: usize, entries: Vec<Expr>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::BadLength { expected: n * n, found: entries.len() });
        }
        Ok(OperatorField { side, n, m: entries })
    }

    pub fn from_fn(side: Side, n: usize, f: impl Fn(usize, usize) -> Expr) -> Self {
        let m = (0..n * n).map(|k| f(k / n, k % n)).collect();
        OperatorField { side, n, m }
    }

    pub fn identity(side: Side, n: usize) -> Self {
        Self::from_fn(side, n, |i, j| Expr::constant(if i == j { 1.0 } else { 0.0 }))
    }

    pub fn constant(op: &Operator) -> Self {
        Self::from_fn(op.side(), op.n(), |i, j| Expr::constant(op.matrix()[(i, j)]))
    }

    /// Operator whose columns are the given vector fields.
    pub fn from_columns(cols: &[VectorField]) -> Result<Self> {
        let n = cols.len();
        let side = match cols.first() {
            Some(c) => Side::of(c.space().kind())
                .ok_or(Error::SpaceMismatch { expected: SpaceKind::Primal, found: c.space().kind() })?,
            None => return Err(Error::BadLength { expected: 1, found: 0 }),
        };
        let comps: Vec<Vec<Expr>> = cols.iter().map(MultivectorField::vector_comps).collect();
        if comps.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch { left: n, right: comps[0].len() });
        }
        Ok(Self::from_fn(side, n, |i, j| comps[j][i].clone()))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Expr {
        &self.m[i * self.n + j]
    }

    pub fn entries(&self) -> &[Expr] {
        &self.m
    }

    fn space(&self) -> BaseSpace {
        self.side.space(self.n).expect("dimension checked at construction")
    }

    pub fn eval(&self, p: &[f64]) -> Result<Operator> {
        let n = self.n;
        Operator::new(self.side, DMatrix::from_fn(n, n, |i, j| self.entry(i, j).eval(p)))
    }

    /// Image `λ(b_j)` as a vector field.
    pub fn column(&self, j: usize) -> VectorField {
        let comps = (0..self.n).map(|i| self.entry(i, j).clone()).collect();
        VectorField::vector(self.space(), comps).expect("length n")
    }

    pub fn apply(&self, v: &VectorField) -> Result<VectorField> {
        if v.space() != self.space() {
            return Err(Error::SpaceMismatch { expected: self.side.kind(), found: v.space().kind() });
        }
        let vc = v.vector_comps();
        let comps = (0..self.n)
            .map(|i| {
                let terms: Vec<Expr> = (0..self.n).map(|j| self.entry(i, j) * &vc[j]).collect();
                Expr::total(&terms)
            })
            .collect();
        VectorField::vector(self.space(), comps)
    }

    /// Duality adjoint: transpose, acting on the other side.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.side.opposite(), self.n, |i, j| self.entry(j, i).clone())
    }

    pub fn determinant(&self) -> Expr {
        det(&self.m, self.n)
    }

    /// Symbolic inverse by the adjugate formula.
    pub fn inverse(&self) -> Self {
        let n = self.n;
        let d = self.determinant();
        Self::from_fn(self.side, n, |i, j| {
            let c = det(&minor(&self.m, n, j, i), n - 1);
            let c = if (i + j) % 2 == 0 { c } else { -c };
            c / &d
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.side != other.side || self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        Ok(Self::from_fn(self.side, n, |i, j| {
            let terms: Vec<Expr> = (0..n).map(|k| self.entry(i, k) * other.entry(k, j)).collect();
            Expr::total(&terms)
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.side != other.side || self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(Self::from_fn(self.side, self.n, |i, j| self.entry(i, j) + other.entry(i, j)))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(self.side, self.n, |i, j| self.entry(i, j).scale(s))
    }

    /// Entrywise directional derivative along `a`.
    pub fn directional(&self, a: &VectorField) -> Self {
        let ac = a.vector_comps();
        Self::from_fn(self.side, self.n, |i, j| directional_expr(self.entry(i, j), &ac))
    }

    fn check_field(&self, x: &MultivectorField) -> Result<()> {
        if x.space() != self.space() {
            return Err(Error::SpaceMismatch { expected: self.side.kind(), found: x.space().kind() });
        }
        Ok(())
    }

    /// Exterior power extension `λ̲(X)`.
    pub fn epe_apply(&self, x: &MultivectorField) -> Result<MultivectorField> {
        self.check_field(x)?;
        let space = self.space();
        let cols: Vec<VectorField> = (0..self.n).map(|j| self.column(j)).collect();
        // images of basis blades, built by appending the highest factor
        let mut images = vec![MultivectorField::scalar(space, Expr::one())];
        for mask in 1..space.blade_count() as u32 {
            let top = 31 - mask.leading_zeros();
            let rest = mask & !(1 << top);
            images.push(images[rest as usize].wedge(&cols[top as usize])?);
        }
        let mut acc = MultivectorField::zero(space);
        for (mask, c) in x.comps().iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&images[mask].times(c))?;
            }
        }
        Ok(acc)
    }

    /// Contracted extension `γ̆(X) = Σ_j γ(b_j) ∧ ⟨β^j, X|`.
    pub fn ce_apply(&self, x: &MultivectorField) -> Result<MultivectorField> {
        self.check_field(x)?;
        let space = self.space();
        let mut acc: Vec<Vec<Expr>> = vec![Vec::new(); space.blade_count()];
        for (mask, c) in x.comps().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in bits(mask as u32) {
                let (rest, s) = lcontr_blade(1 << j, mask as u32).expect("j lies in the blade");
                for i in 0..self.n {
                    let e = self.entry(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    if let Some(w) = wedge_sign(1 << i, rest) {
                        acc[((1u32 << i) | rest) as usize].push((e * c).scale(s * w));
                    }
                }
            }
        }
        MultivectorField::from_comps(space, acc.iter().map(|t| Expr::total(t)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;

    #[test]
    fn symbolic_inverse_and_extensions_match_pointwise() {
        let mut r = random::rng(3);
        for n in 1..=3 {
            let lam = OperatorField::from_fn(Side::Primal, n, |i, j| {
                let x = Expr::coord(i % n);
                let base = if i == j { Expr::constant(2.0) } else { Expr::zero() };
                base + x.sin().scale(0.3 * (j as f64 + 1.0))
            });
            let space = BaseSpace::primal(n).unwrap();
            let xm = random::multivector(&mut r, space);
            let xf = MultivectorField::constant(&xm).unwrap();
            let p = vec![0.7; n];
            let op = lam.eval(&p).unwrap();
            let inv = lam.inverse().eval(&p).unwrap();
            assert!((inv.matrix() - op.inverse().unwrap().matrix()).amax() < 1e-13);
            let epe = lam.epe_apply(&xf).unwrap().eval(&p);
            assert!(epe.approx_eq(&op.epe().apply(&xm).unwrap(), 1e-13));
            let ce = lam.ce_apply(&xf).unwrap().eval(&p);
            assert!(ce.approx_eq(&op.ce().apply(&xm).unwrap(), 1e-13));
        }
    }
}
