//! Torsion and curvature of a connection.

use super::connection::Connection;
use super::expr::Expr;
use super::extensor_field::ExtensorField;
use super::multivector::{lie_bracket, FormField, MultivectorField, VectorField};
use crate::error::{Error, Result};
use crate::extensor::{ExtSignature, Side, VSpaceSig};
use crate::exterior::{BaseSpace, SpaceKind};

fn primal(n: usize) -> Result<BaseSpace> {
    BaseSpace::primal(n)
}

fn coframe_pair(n: usize, mu: usize, nu: usize) -> Result<MultivectorField> {
    let d = BaseSpace::dual(n)?;
    MultivectorField::basis(d, mu)?.wedge(&MultivectorField::basis(d, nu)?)
}

/// `τ(a,b) = ∇_a b − ∇_b a − [a,b]`.
pub fn torsion(conn: &Connection, a: &VectorField, b: &VectorField) -> Result<VectorField> {
    conn.nabla_vec(a, b)?.sub(&conn.nabla_vec(b, a)?)?.sub(&lie_bracket(a, b)?)
}

/// `T(a,b,ω) = ⟨ω, τ(a,b)⟩`.
pub fn torsion_tensor(conn: &Connection, a: &VectorField, b: &VectorField, w: &FormField) -> Result<Expr> {
    w.dsp(&torsion(conn, a, b)?)
}

/// Torsion extensor `𝒯(X²) = ½⟨ε^μ∧ε^ν, X²⟩ τ(e_μ,e_ν)`, from bivectors to vectors.
#[allow(non_snake_case)]
pub fn torsion_T(conn: &Connection) -> Result<ExtensorField> {
    let n = conn.n();
    let sig = ExtSignature::new(
        vec![VSpaceSig::homogeneous(Side::Primal, n, 2)?],
        vec![],
        VSpaceSig::homogeneous(Side::Primal, n, 1)?,
    )?;
    let basis: Vec<VectorField> = (0..n).map(|m| VectorField::basis(primal(n)?, m)).collect::<Result<_>>()?;
    ExtensorField::from_fn(sig, |args| {
        let mut acc = VectorField::zero(primal(n)?);
        for mu in 0..n {
            for nu in 0..n {
                let c = coframe_pair(n, mu, nu)?.dsp(&args[0])?;
                if !c.is_zero() {
                    acc = acc.add(&torsion(conn, &basis[mu], &basis[nu])?.times(&c.scale(0.5)))?;
                }
            }
        }
        Ok(acc)
    })
}

/// Cartan torsion form `Θ(ω) = ½⟨ω, τ(e_μ,e_ν)⟩ ε^μ∧ε^ν`.
pub fn cartan_theta(conn: &Connection, w: &FormField) -> Result<FormField> {
    let n = conn.n();
    if w.space().kind() != SpaceKind::Dual {
        return Err(Error::SpaceMismatch { expected: SpaceKind::Dual, found: w.space().kind() });
    }
    let basis: Vec<VectorField> = (0..n).map(|m| VectorField::basis(primal(n)?, m)).collect::<Result<_>>()?;
    let mut acc = FormField::zero(BaseSpace::dual(n)?);
    for mu in 0..n {
        for nu in 0..n {
            let c = w.dsp(&torsion(conn, &basis[mu], &basis[nu])?)?;
            acc = acc.add(&coframe_pair(n, mu, nu)?.times(&c.scale(0.5)))?;
        }
    }
    Ok(acc)
}

/// `ρ(a,b,c) = ∇_a∇_b c − ∇_b∇_a c − ∇_{[a,b]} c`.
pub fn curvature(conn: &Connection, a: &VectorField, b: &VectorField, c: &VectorField) -> Result<VectorField> {
    let ab = conn.nabla_vec(a, &conn.nabla_vec(b, c)?)?;
    let ba = conn.nabla_vec(b, &conn.nabla_vec(a, c)?)?;
    ab.sub(&ba)?.sub(&conn.nabla_vec(&lie_bracket(a, b)?, c)?)
}

/// `ℛ(X², c) = ½⟨ε^μ∧ε^ν, X²⟩ ρ(e_μ,e_ν,c)`.
#[allow(non_snake_case)]
pub fn curvature_R(conn: &Connection, x2: &MultivectorField, c: &VectorField) -> Result<VectorField> {
    let n = conn.n();
    let basis: Vec<VectorField> = (0..n).map(|m| VectorField::basis(primal(n)?, m)).collect::<Result<_>>()?;
    let mut acc = VectorField::zero(primal(n)?);
    for mu in 0..n {
        for nu in 0..n {
            let k = coframe_pair(n, mu, nu)?.dsp(&x2.part(2))?;
            if !k.is_zero() {
                acc = acc.add(&curvature(conn, &basis[mu], &basis[nu], c)?.times(&k.scale(0.5)))?;
            }
        }
    }
    Ok(acc)
}

/// `ρ` materialized as an extensor field of three vector slots.
pub fn curvature_extensor(conn: &Connection) -> Result<ExtensorField> {
    let n = conn.n();
    let v = VSpaceSig::homogeneous(Side::Primal, n, 1)?;
    let sig = ExtSignature::new(vec![v.clone(), v.clone(), v.clone()], vec![], v)?;
    ExtensorField::from_fn(sig, |args| curvature(conn, &args[0], &args[1], &args[2]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asymmetric_coefficient_gives_torsion() {
        let conn = Connection::from_fn(2, |s, m, v| Expr::constant(if (s, m, v) == (0, 0, 1) { 1.0 } else { 0.0 }));
        let sp = primal(2).unwrap();
        let d1 = VectorField::basis(sp, 0).unwrap();
        let d2 = VectorField::basis(sp, 1).unwrap();
        assert_eq!(torsion(&conn, &d1, &d2).unwrap().eval(&[0.1, 0.1]).vector_part(), vec![1.0, 0.0]);
    }

    #[test]
    fn flat_curvature_vanishes() {
        let conn = Connection::flat(2);
        let sp = primal(2).unwrap();
        let x = Expr::coord(0);
        let a = VectorField::vector(sp, vec![x.sin(), &x * &x]).unwrap();
        let b = VectorField::vector(sp, vec![Expr::coord(1), Expr::one()]).unwrap();
        let c = VectorField::vector(sp, vec![x.exp(), x.cos()]).unwrap();
        assert!(curvature(&conn, &a, &b, &c).unwrap().eval(&[0.3, 0.9]).max_abs() < 1e-14);
    }

    #[test]
    fn cyclic_sum_needs_symmetry() {
        // γ^1_{23} = x¹ alone has torsion, and the cyclic sum picks it up
        let x = Expr::coord(0);
        let conn = Connection::from_fn(3, |s, m, v| if (s, m, v) == (0, 1, 2) { x.clone() } else { Expr::zero() });
        let sp = primal(3).unwrap();
        let e: Vec<VectorField> = (0..3).map(|m| VectorField::basis(sp, m).unwrap()).collect();
        let sum = curvature(&conn, &e[0], &e[1], &e[2])
            .unwrap()
            .add(&curvature(&conn, &e[1], &e[2], &e[0]).unwrap())
            .unwrap()
            .add(&curvature(&conn, &e[2], &e[0], &e[1]).unwrap())
            .unwrap();
        assert!(sum.eval(&[0.5, 0.5, 0.5]).max_abs() > 0.5);
    }
}
