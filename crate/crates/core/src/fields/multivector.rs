//! Componentwise multivector and multiform fields.

use super::expr::{directional_expr, Expr};
use crate::duality::{lcontr_blade, rcontr_blade};
use crate::error::{Error, Result};
use crate::exterior::{grade, wedge_sign, BaseSpace, Multivector, SpaceKind};

/// A field `U → ⋀V` (or `⋀V*`), one scalar field per blade.
#[derive(Clone, Debug, PartialEq)]
pub struct MultivectorField {
    space: BaseSpace,
    comps: Vec<Expr>,
}

/// Multiform fields share the representation; the space kind tells them apart.
pub type MultiformField = MultivectorField;
pub type VectorField = MultivectorField;
pub type FormField = MultivectorField;

fn check_chart_space(space: BaseSpace) -> Result<()> {
    if space.kind() == SpaceKind::Hyperbolic {
        return Err(Error::SpaceMismatch { expected: SpaceKind::Primal, found: SpaceKind::Hyperbolic });
    }
    Ok(())
}

impl MultivectorField {
    pub fn zero(space: BaseSpace) -> Self {
        MultivectorField { space, comps: vec![Expr::zero(); space.blade_count()] }
    }

    pub fn from_comps(space: BaseSpace, comps: Vec<Expr>) -> Result<Self> {
        check_chart_space(space)?;
        if comps.len() != space.blade_count() {
            return Err(Error::BadLength { expected: space.blade_count(), found: comps.len() });
        }
        Ok(MultivectorField { space, comps })
    }

    pub fn constant(m: &Multivector) -> Result<Self> {
        Self::from_comps(m.space(), m.coeffs().iter().map(|&c| Expr::constant(c)).collect())
    }

    pub fn scalar(space: BaseSpace, f: Expr) -> Self {
        let mut out = Self::zero(space);
        out.comps[0] = f;
        out
    }

    /// Grade-one field `Σ v^i e_i` (or `Σ ω_i ε^i`).
    pub fn vector(space: BaseSpace, comps: Vec<Expr>) -> Result<Self> {
        check_chart_space(space)?;
        if comps.len() != space.dim() {
            return Err(Error::BadLength { expected: space.dim(), found: comps.len() });
        }
        let mut out = Self::zero(space);
        for (i, c) in comps.into_iter().enumerate() {
            out.comps[1 << i] = c;
        }
        Ok(out)
    }

    /// Constant unit blade field.
    pub fn blade(space: BaseSpace, mask: u32) -> Result<Self> {
        Self::constant(&Multivector::blade(space, mask, 1.0)?)
    }

    /// Coordinate vector field `∂_{i+1}` or coordinate covector `dx^{i+1}`.
    pub fn basis(space: BaseSpace, i: usize) -> Result<Self> {
        Self::blade(space, 1 << i)
    }

    pub fn space(&self) -> BaseSpace {
        self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn comps(&self) -> &[Expr] {
        &self.comps
    }

    pub fn comp(&self, mask: u32) -> &Expr {
        &self.comps[mask as usize]
    }

    /// Grade-one components.
    pub fn vector_comps(&self) -> Vec<Expr> {
        (0..self.n()).map(|i| self.comps[1 << i].clone()).collect()
    }

    pub fn eval(&self, p: &[f64]) -> Multivector {
        let coeffs = self.comps.iter().map(|c| c.eval(p)).collect();
        Multivector::from_coeffs(self.space, coeffs).expect("length is fixed by construction")
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            if self.n() != other.n() {
                return Err(Error::DimensionMismatch { left: self.n(), right: other.n() });
            }
            return Err(Error::SpaceMismatch { expected: self.space.kind(), found: other.space.kind() });
        }
        Ok(())
    }

    fn map(&self, f: impl Fn(u32, &Expr) -> Expr) -> Self {
        let comps = self.comps.iter().enumerate().map(|(m, c)| f(m as u32, c)).collect();
        MultivectorField { space: self.space, comps }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.map(|m, c| c + other.comp(m)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.map(|m, c| c - other.comp(m)))
    }

    pub fn neg(&self) -> Self {
        self.map(|_, c| -c)
    }

    /// Pointwise product with a scalar field.
    pub fn times(&self, f: &Expr) -> Self {
        self.map(|_, c| c * f)
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|_, c| c.scale(s))
    }

    pub fn part(&self, k: usize) -> Self {
        self.map(|m, c| if grade(m) == k { c.clone() } else { Expr::zero() })
    }

    pub fn retag(&self, space: BaseSpace) -> Result<Self> {
        Self::from_comps(space, self.comps.clone())
    }

    pub fn partial(&self, i: usize) -> Self {
        self.map(|_, c| c.partial(i))
    }

    /// Componentwise directional derivative `aX`, with `a` a vector field.
    pub fn directional(&self, a: &VectorField) -> Self {
        let ac = a.vector_comps();
        self.map(|_, c| directional_expr(c, &ac))
    }

    fn bilinear(&self, other: &Self, space: BaseSpace, rule: impl Fn(u32, u32) -> Option<(u32, f64)>) -> Self {
        let mut acc: Vec<Vec<Expr>> = vec![Vec::new(); space.blade_count()];
        for (a, x) in self.comps.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.comps.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                if let Some((m, s)) = rule(a as u32, b as u32) {
                    acc[m as usize].push((x * y).scale(s));
                }
            }
        }
        MultivectorField { space, comps: acc.iter().map(|t| Expr::total(t)).collect() }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.bilinear(other, self.space, |a, b| wedge_sign(a, b).map(|s| (a | b, s))))
    }

    fn check_pair(&self, other: &Self) -> Result<()> {
        if self.space.kind() == other.space.kind() {
            return Err(Error::PairingType { left: self.space.kind(), right: other.space.kind() });
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: other.n() });
        }
        Ok(())
    }

    /// Duality scalar product `⟨Φ, X⟩` as a scalar field.
    pub fn dsp(&self, other: &Self) -> Result<Expr> {
        self.check_pair(other)?;
        let terms: Vec<Expr> = self.comps.iter().zip(&other.comps).map(|(a, b)| a * b).collect();
        Ok(Expr::total(&terms))
    }

    /// Duality left contraction `⟨self, other|`; lands on `other`'s side.
    pub fn lcontr(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        Ok(self.bilinear(other, other.space, lcontr_blade))
    }

    /// Duality right contraction `|self, other⟩`; lands on `self`'s side.
    pub fn rcontr(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        Ok(self.bilinear(other, self.space, rcontr_blade))
    }
}

/// Lie bracket `[a,b]^σ = a(b^σ) − b(a^σ)`.
pub fn lie_bracket(a: &VectorField, b: &VectorField) -> Result<VectorField> {
    b.directional(a).sub(&a.directional(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality;

    fn sp(n: usize) -> BaseSpace {
        BaseSpace::primal(n).unwrap()
    }

    #[test]
    fn symbolic_products_match_pointwise_products() {
        let (v, d) = (sp(2), BaseSpace::dual(2).unwrap());
        let x = Expr::coord(0);
        let y = Expr::coord(1);
        let a = MultivectorField::from_comps(v, vec![x.clone(), y.clone(), &x * &y, x.sin()]).unwrap();
        let b = MultivectorField::from_comps(v, vec![y.cos(), 1.0.into(), x.clone(), &y * &y]).unwrap();
        let w = MultivectorField::from_comps(d, vec![x.exp(), y.clone(), 2.0.into(), x.clone()]).unwrap();
        let p = [0.3, 0.8];
        let (ap, bp, wp) = (a.eval(&p), b.eval(&p), w.eval(&p));
        assert!(a.wedge(&b).unwrap().eval(&p).approx_eq(&ap.wedge(&bp).unwrap(), 1e-14));
        assert!((w.dsp(&a).unwrap().eval(&p) - duality::dsp(&wp, &ap).unwrap()).abs() < 1e-14);
        assert!(w.lcontr(&a).unwrap().eval(&p).approx_eq(&duality::lcontr(&wp, &ap).unwrap(), 1e-14));
        assert!(a.rcontr(&w).unwrap().eval(&p).approx_eq(&duality::rcontr(&ap, &wp).unwrap(), 1e-14));
        assert!(a.dsp(&b).is_err());
    }

    #[test]
    fn bracket_examples() {
        let v = sp(2);
        let d1 = MultivectorField::basis(v, 0).unwrap();
        let d2 = MultivectorField::basis(v, 1).unwrap();
        assert!(lie_bracket(&d1, &d2).unwrap().comps().iter().all(Expr::is_zero));
        let a = d2.times(&Expr::coord(0));
        let br = lie_bracket(&a, &d1).unwrap().eval(&[0.4, 0.9]);
        assert!(br.approx_eq(&Multivector::vector(v, &[0.0, -1.0]).unwrap(), 0.0));
    }

    #[test]
    fn directional_derivative_examples() {
        let v = sp(2);
        let f = MultivectorField::scalar(v, &Expr::coord(0) * &Expr::coord(1));
        let d1 = MultivectorField::basis(v, 0).unwrap();
        assert_eq!(f.directional(&d1).eval(&[2.0, 3.0]).scalar_part(), 3.0);
        let g = MultivectorField::scalar(v, Expr::coord(0).sin());
        let a = d1.times(&Expr::coord(1));
        assert_eq!(g.directional(&a).eval(&[0.0, 5.0]).scalar_part(), 5.0);
    }
}
