//! Connections and their covariant derivatives.

use super::expr::{directional_expr, Expr};
use super::extensor_field::ExtensorField;
use super::multivector::{MultiformField, MultivectorField, VectorField};
use super::operator::OperatorField;
use crate::error::{Error, Result};
use crate::extensor::Side;
use crate::exterior::{bits, ordered_blade, BaseSpace, SpaceKind};

/// A connection `Γ(a,v) = a v + γ_a(v)`, written through its coefficients
/// `∇_{∂_μ}∂_ν = γ^σ_{μν} ∂_σ` on the coordinate frame.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    n: usize,
    gamma: Vec<Expr>,
}

impl Connection {
    /// `f(σ, μ, ν)` gives `γ^σ_{μν}`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> Expr) -> Self {
        let gamma = (0..n * n * n).map(|k| f(k / (n * n), (k / n) % n, k % n)).collect();
        Connection { n, gamma }
    }

    /// Coefficients in `[σ][μ][ν]` order.
    pub fn new(n: usize, gamma: Vec<Expr>) -> Result<Self> {
        if gamma.len() != n * n * n {
            return Err(Error::BadLength { expected: n * n * n, found: gamma.len() });
        }
        Ok(Connection { n, gamma })
    }

    /// The coordinate derivative itself.
    pub fn flat(n: usize) -> Self {
        Self::from_fn(n, |_, _, _| Expr::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma(&self, sigma: usize, mu: usize, nu: usize) -> &Expr {
        &self.gamma[(sigma * self.n + mu) * self.n + nu]
    }

    pub fn coefficients(&self) -> &[Expr] {
        &self.gamma
    }

    fn space(&self, kind: SpaceKind) -> BaseSpace {
        BaseSpace::new(kind, self.n).expect("dimension checked by the caller")
    }

    fn check(&self, x: &MultivectorField) -> Result<()> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: x.n() });
        }
        Ok(())
    }

    fn check_direction(&self, a: &VectorField) -> Result<Vec<Expr>> {
        self.check(a)?;
        if a.space().kind() != SpaceKind::Primal {
            return Err(Error::SpaceMismatch { expected: SpaceKind::Primal, found: a.space().kind() });
        }
        Ok(a.vector_comps())
    }

    /// `a^μ γ^σ_{μν}`, the matrix of `γ_a`.
    fn contracted(&self, a: &[Expr], sigma: usize, nu: usize) -> Expr {
        let terms: Vec<Expr> =
            (0..self.n).filter(|&mu| !a[mu].is_zero()).map(|mu| &a[mu] * self.gamma(sigma, mu, nu)).collect();
        Expr::total(&terms)
    }

    /// The vector operator field `γ_a`.
    pub fn gamma_op(&self, a: &VectorField) -> Result<OperatorField> {
        let ac = self.check_direction(a)?;
        Ok(OperatorField::from_fn(Side::Primal, self.n, |s, nu| self.contracted(&ac, s, nu)))
    }

    /// `∇_a v = a v + γ_a(v)`.
    pub fn nabla_vec(&self, a: &VectorField, v: &VectorField) -> Result<VectorField> {
        self.check(v)?;
        let g = self.gamma_op(a)?;
        v.part(1).directional(a).add(&g.apply(&v.part(1))?)
    }

    /// `∇_a ω = a ω − γ_a^△(ω)`, so that `a⟨ω,v⟩ = ⟨∇_aω,v⟩ + ⟨ω,∇_av⟩`.
    pub fn nabla_form(&self, a: &VectorField, w: &MultiformField) -> Result<MultiformField> {
        self.check(w)?;
        let g = self.gamma_op(a)?.adjoint();
        w.part(1).directional(a).sub(&g.apply(&w.part(1))?)
    }

    /// Covariant derivative of a multivector or multiform field.
    ///
    /// Each component is read off the slot formula: for a `k`-vector,
    /// `(∇_aX)(ω¹,…,ω^k) = a X(ω¹,…,ω^k) − Σ_i X(…, ∇_aω^i, …)` on coframe
    /// arguments, and dually for forms.
    pub fn nabla_multivector(&self, a: &VectorField, x: &MultivectorField) -> Result<MultivectorField> {
        let ac = self.check_direction(a)?;
        self.check(x)?;
        let space = x.space();
        let sign = match space.kind() {
            SpaceKind::Primal => 1.0,
            SpaceKind::Dual => -1.0,
            SpaceKind::Hyperbolic => {
                return Err(Error::SpaceMismatch { expected: SpaceKind::Primal, found: SpaceKind::Hyperbolic })
            }
        };
        let mut comps = Vec::with_capacity(space.blade_count());
        for mask in 0..space.blade_count() as u32 {
            let mut terms = vec![directional_expr(x.comp(mask), &ac)];
            let idx: Vec<usize> = bits(mask).collect();
            for slot in 0..idx.len() {
                for k in 0..self.n {
                    let mut moved = idx.clone();
                    moved[slot] = k;
                    let Some((m, s)) = ordered_blade(&moved) else { continue };
                    let c = x.comp(m);
                    if c.is_zero() {
                        continue;
                    }
                    // vectors: ∇_aε^j = −γ^j_{aν} ε^ν; forms: ∇_a e_j = γ^σ_{aj} e_σ
                    let g = match space.kind() {
                        SpaceKind::Primal => self.contracted(&ac, idx[slot], k),
                        _ => self.contracted(&ac, k, idx[slot]),
                    };
                    if !g.is_zero() {
                        terms.push((g * c).scale(sign * s));
                    }
                }
            }
            comps.push(Expr::total(&terms));
        }
        MultivectorField::from_comps(space, comps)
    }

    /// Alias of [`Connection::nabla_multivector`] for multiform fields.
    pub fn nabla_multiform(&self, a: &VectorField, phi: &MultiformField) -> Result<MultiformField> {
        self.nabla_multivector(a, phi)
    }

    /// Covariant derivative of an extensor field:
    /// `(∇_aτ)(X…,Φ…) = ∇_a(τ(X…,Φ…)) − Σ τ(…,∇_aX,…) − Σ τ(…,∇_aΦ,…)`,
    /// evaluated on constant basis blade fields.
    pub fn nabla_extensor(&self, a: &VectorField, tau: &ExtensorField) -> Result<ExtensorField> {
        if tau.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: tau.n() });
        }
        ExtensorField::from_fn(tau.sig().clone(), |args| {
            let refs: Vec<&MultivectorField> = args.iter().collect();
            let value = tau.eval_fields(&refs)?;
            let mut acc = self.nabla_multivector(a, &value)?;
            for s in 0..args.len() {
                let moved = self.nabla_multivector(a, &args[s])?;
                let mut r = refs.clone();
                r[s] = &moved;
                let term = tau.eval_fields(&r)?;
                let term = if term.space().kind() != acc.space().kind() { term.retag(acc.space())? } else { term };
                acc = acc.sub(&term)?;
            }
            Ok(acc)
        })
    }

    /// Deformed connection `Γ^λ(a,v) = λ(Γ(a, λ⁻¹(v)))`.
    ///
    /// On coordinate fields `γ^λ_μ = Λ (∂_μ Λ⁻¹ + γ_μ Λ⁻¹)` with `Λ` the
    /// matrix of `λ`.
    pub fn deform(&self, lambda: &OperatorField) -> Result<Connection> {
        if lambda.side() != Side::Primal {
            return Err(Error::SpaceMismatch { expected: SpaceKind::Primal, found: lambda.side().kind() });
        }
        if lambda.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: lambda.n() });
        }
        let n = self.n;
        let inv = lambda.inverse();
        let mut out = vec![Expr::zero(); n * n * n];
        for mu in 0..n {
            let d = self.space(SpaceKind::Primal);
            let e_mu = VectorField::basis(d, mu)?;
            let inner = inv.directional(&e_mu).add(&self.gamma_op(&e_mu)?.compose(&inv)?)?;
            let m = lambda.compose(&inner)?;
            for s in 0..n {
                for nu in 0..n {
                    out[(s * n + mu) * n + nu] = m.entry(s, nu).clone();
                }
            }
        }
        Connection::new(n, out)
    }

    /// `γ^σ_{μν} − γ^σ_{νμ}` vanishes identically in structure.
    pub fn is_structurally_symmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|s| (0..n).all(|m| (0..n).all(|v| self.gamma(s, m, v) == self.gamma(s, v, m))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v2() -> BaseSpace {
        BaseSpace::primal(2).unwrap()
    }

    #[test]
    fn flat_derivatives_are_coordinate_derivatives() {
        let flat = Connection::flat(2);
        let d1 = VectorField::basis(v2(), 0).unwrap();
        let v = VectorField::basis(v2(), 1).unwrap().times(&Expr::coord(0));
        let got = flat.nabla_vec(&d1, &v).unwrap().eval(&[0.3, 0.4]);
        assert_eq!(got.vector_part(), vec![0.0, 1.0]);
        let w = VectorField::basis(BaseSpace::dual(2).unwrap(), 1).unwrap().times(&Expr::coord(0));
        assert_eq!(flat.nabla_form(&d1, &w).unwrap().eval(&[0.3, 0.4]).vector_part(), vec![0.0, 1.0]);
    }

    #[test]
    fn basis_derivatives_are_coefficients() {
        let g = Connection::from_fn(2, |s, m, v| Expr::constant((s * 4 + m * 2 + v) as f64 + 1.0));
        for mu in 0..2 {
            for nu in 0..2 {
                let a = VectorField::basis(v2(), mu).unwrap();
                let b = VectorField::basis(v2(), nu).unwrap();
                let got = g.nabla_vec(&a, &b).unwrap().eval(&[0.0, 0.0]).vector_part();
                let want: Vec<f64> = (0..2).map(|s| g.gamma(s, mu, nu).eval(&[])).collect();
                assert_eq!(got, want);
                let got = g.nabla_multivector(&a, &b).unwrap().eval(&[0.0, 0.0]).vector_part();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn deforming_by_constant_multiple_of_identity_is_trivial() {
        let x = Expr::coord(0);
        let g = Connection::from_fn(2, |s, m, v| (&x * Expr::constant((s + 2 * m + v) as f64)).sin());
        let c = OperatorField::identity(Side::Primal, 2).scale(3.0);
        let d = g.deform(&c).unwrap();
        let p = [0.7, 0.2];
        for (a, b) in g.coefficients().iter().zip(d.coefficients()) {
            assert!((a.eval(&p) - b.eval(&p)).abs() < 1e-14);
        }
    }
}
