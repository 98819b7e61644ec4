//! Frame fields, relative connections, split theorems and Jacobian fields.

use super::connection::Connection;
use super::expr::Expr;
use super::extensor_field::ExtensorField;
use super::multivector::{FormField, VectorField};
use super::operator::OperatorField;
use crate::error::{Error, Result};
use crate::extensor::{ExtSignature, Side, VSpaceSig};
use crate::exterior::{BaseSpace, SpaceKind};

/// A pair of dual frame fields `{b_μ, β^μ}`.
///
/// `b` holds the frame vectors as columns; `beta` is its symbolic inverse,
/// whose rows are the coframe forms.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameField {
    b: OperatorField,
    beta: OperatorField,
}

impl FrameField {
    pub fn new(b: OperatorField) -> Result<Self> {
        if b.side() != Side::Primal {
            return Err(Error::SpaceMismatch { expected: SpaceKind::Primal, found: b.side().kind() });
        }
        let beta = b.inverse();
        Ok(FrameField { b, beta })
    }

    pub fn coordinate(n: usize) -> Self {
        let id = OperatorField::identity(Side::Primal, n);
        FrameField { b: id.clone(), beta: id }
    }

    pub fn n(&self) -> usize {
        self.b.n()
    }

    pub fn b(&self) -> &OperatorField {
        &self.b
    }

    pub fn beta(&self) -> &OperatorField {
        &self.beta
    }

    /// Frame vector `b_μ`.
    pub fn vector(&self, mu: usize) -> VectorField {
        self.b.column(mu)
    }

    /// Coframe form `β^μ`.
    pub fn coform(&self, mu: usize) -> FormField {
        let space = BaseSpace::dual(self.n()).expect("frame dimension is valid");
        let comps = (0..self.n()).map(|nu| self.beta.entry(mu, nu).clone()).collect();
        FormField::vector(space, comps).expect("length n")
    }

    /// Largest `|β^μ(b_ν) − δ^μ_ν|` at `p`.
    pub fn duality_residual(&self, p: &[f64]) -> Result<f64> {
        let (b, beta) = (self.b.eval(p)?, self.beta.eval(p)?);
        let prod = beta.matrix() * b.matrix();
        let n = self.n();
        Ok((prod - nalgebra::DMatrix::<f64>::identity(n, n)).amax())
    }
}

/// Relative connection `B(a,v) = [aβ^σ(v)] b_σ`, i.e.
/// `γ^κ_{μν} = b^κ_σ ∂_μ β^σ_ν` on the coordinate frame.
pub fn relative_connection(f: &FrameField) -> Connection {
    let n = f.n();
    Connection::from_fn(n, |k, mu, nu| {
        let terms: Vec<Expr> = (0..n).map(|s| f.b.entry(k, s) * f.beta.entry(s, nu).partial(mu)).collect();
        Expr::total(&terms)
    })
}

/// Relative derivative `∂_a v` of the frame `F`.
pub fn partial_a(f: &FrameField, a: &VectorField, v: &VectorField) -> Result<VectorField> {
    relative_connection(f).nabla_vec(a, v)
}

fn two_vector_signature(n: usize) -> Result<ExtSignature> {
    let v = VSpaceSig::homogeneous(Side::Primal, n, 1)?;
    ExtSignature::new(vec![v.clone(), v.clone()], vec![], v)
}

/// Relative connection field `γ(a,v) = β^μ(v) ∇_a b_μ` of `Γ` with respect to
/// the frame, as an extensor field of two vector slots.
pub fn gamma_split(conn: &Connection, f: &FrameField) -> Result<ExtensorField> {
    let n = conn.n();
    if f.n() != n {
        return Err(Error::DimensionMismatch { left: n, right: f.n() });
    }
    let space = BaseSpace::primal(n)?;
    let mut coeffs = Vec::with_capacity(n * n * n);
    for mu in 0..n {
        let e_mu = VectorField::basis(space, mu)?;
        let moved: Vec<Vec<Expr>> =
            (0..n).map(|s| conn.nabla_vec(&e_mu, &f.vector(s)).map(|x| x.vector_comps())).collect::<Result<_>>()?;
        for nu in 0..n {
            for k in 0..n {
                let terms: Vec<Expr> = (0..n).map(|s| f.beta.entry(s, nu) * &moved[s][k]).collect();
                coeffs.push(Expr::total(&terms));
            }
        }
    }
    ExtensorField::from_coeffs(two_vector_signature(n)?, coeffs)
}

/// The operator field `γ_a = γ(a, ·)` of a two-slot field such as [`gamma_split`].
pub fn split_operator(gamma: &ExtensorField, a: &VectorField) -> Result<OperatorField> {
    let n = gamma.n();
    if gamma.sig() != &two_vector_signature(n)? {
        return Err(Error::Signature("expected a field of two vector slots with vector values".into()));
    }
    let ac = a.vector_comps();
    Ok(OperatorField::from_fn(Side::Primal, n, |k, nu| {
        let terms: Vec<Expr> = (0..n).map(|mu| &ac[mu] * &gamma.coeffs()[(mu * n + nu) * n + k]).collect();
        Expr::total(&terms)
    }))
}

/// Jacobian field `J(v) = β^σ(v) b′_σ` from `F` to `F′`.
pub fn jacobian(f: &FrameField, g: &FrameField) -> Result<OperatorField> {
    g.b.compose(&f.beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_coordinate_frame() {
        let n = 2;
        let b = OperatorField::identity(Side::Primal, n).scale(2.0);
        let f = FrameField::new(b).unwrap();
        let j = jacobian(&FrameField::coordinate(n), &f).unwrap().eval(&[0.5, 0.5]).unwrap();
        assert_eq!(j.matrix()[(0, 0)], 2.0);
        assert_eq!(j.matrix()[(0, 1)], 0.0);
        let a = VectorField::basis(BaseSpace::primal(n).unwrap(), 0).unwrap();
        let d = partial_a(&f, &a, &f.vector(0)).unwrap().eval(&[0.5, 0.5]);
        assert_eq!(d.max_abs(), 0.0);
    }

    #[test]
    fn relative_derivative_expands_in_frame() {
        let n = 2;
        let x = Expr::coord(0);
        let b = OperatorField::from_fn(Side::Primal, n, |i, j| match (i, j) {
            (0, 0) => Expr::one() + &x * &x,
            (1, 0) => x.sin(),
            (1, 1) => Expr::one(),
            _ => Expr::zero(),
        });
        let f = FrameField::new(b).unwrap();
        let p = [0.6, 0.3];
        assert!(f.duality_residual(&p).unwrap() < 1e-15);
        let a = VectorField::basis(BaseSpace::primal(n).unwrap(), 0).unwrap();
        let v = f.vector(0).times(&x);
        let got = partial_a(&f, &a, &v).unwrap().eval(&p);
        assert!(got.approx_eq(&f.vector(0).eval(&p), 1e-14));
    }
}
