//! Metric-free products between `⋀V*` and `⋀V`.
//!
//! The canonical bases `{e_J}` and `{ε^J}` are dual, so the duality scalar
//! product is the sum of products of matching coefficients. Contractions are
//! built from the defining sums over increasing index tuples, which collapse
//! to a single signed blade for each pair of basis blades.

use crate::error::{Error, Result};
use crate::exterior::{grade, reversion_sign, wedge_sign, BaseSpace, Multivector, SpaceKind};

fn check_pair(a: &Multivector, b: &Multivector) -> Result<()> {
    let ok =
        matches!((a.kind(), b.kind()), (SpaceKind::Primal, SpaceKind::Dual) | (SpaceKind::Dual, SpaceKind::Primal));
    if !ok {
        return Err(Error::PairingType { left: a.kind(), right: b.kind() });
    }
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

/// Duality scalar product `⟨Φ, X⟩`, accepted in either argument order.
pub fn dsp(a: &Multivector, b: &Multivector) -> Result<f64> {
    check_pair(a, b)?;
    Ok(a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x * y).sum())
}

/// Left contraction of blade `left` (grade p) into blade `right` (grade q ≥ p).
///
/// `⟨ε^I, e_K| = Σ_J ⟨ε̃^I ∧ ε^J, e_K⟩ e_J` keeps only `J = K \ I`.
pub fn lcontr_blade(left: u32, right: u32) -> Option<(u32, f64)> {
    if left & !right != 0 {
        return None;
    }
    let rest = right & !left;
    let s = wedge_sign(left, rest)?;
    Some((rest, reversion_sign(grade(left)) * s))
}

/// Right contraction of blade `left` (grade p) by blade `right` (grade q ≤ p).
///
/// `|ε^I, e_K⟩ = Σ_J ⟨ε^I, e_J ∧ ẽ_K⟩ ε^J` keeps only `J = I \ K`.
pub fn rcontr_blade(left: u32, right: u32) -> Option<(u32, f64)> {
    if right & !left != 0 {
        return None;
    }
    let rest = left & !right;
    let s = wedge_sign(rest, right)?;
    Some((rest, reversion_sign(grade(right)) * s))
}

fn contract(a: &Multivector, b: &Multivector, out: BaseSpace, rule: fn(u32, u32) -> Option<(u32, f64)>) -> Multivector {
    let mut res = Multivector::zero(out);
    for (ma, x) in a.terms() {
        for (mb, y) in b.terms() {
            if let Some((m, s)) = rule(ma, mb) {
                res.coeffs_mut()[m as usize] += s * x * y;
            }
        }
    }
    res
}

/// Left contraction `⟨a, b|`.
///
/// `⟨Φ, X|` is a multivector and `⟨X, Φ|` is a multiform; the grade of the
/// result is `q - p`, and the result vanishes when `p > q`.
pub fn lcontr(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    check_pair(a, b)?;
    Ok(contract(a, b, b.space(), lcontr_blade))
}

/// Right contraction `|a, b⟩`.
///
/// `|Φ, X⟩` is a multiform and `|X, Φ⟩` is a multivector, of grade `p - q`.
pub fn rcontr(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    check_pair(a, b)?;
    Ok(contract(a, b, a.space(), rcontr_blade))
}

/// Value of the `p`-form part of `phi` on vectors `v_1, …, v_p`.
///
/// This is `⟨Φ_p, v_1 ∧ ⋯ ∧ v_p⟩`.
pub fn form_on_vectors(phi: &Multivector, vectors: &[Multivector]) -> Result<f64> {
    let space = phi.space().dual_space().ok_or(Error::PairingType { left: phi.kind(), right: SpaceKind::Primal })?;
    let mut w = Multivector::scalar(space, 1.0);
    for v in vectors {
        w = w.wedge(v)?;
    }
    dsp(phi, &w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spaces(n: usize) -> (BaseSpace, BaseSpace) {
        (BaseSpace::primal(n).unwrap(), BaseSpace::dual(n).unwrap())
    }

    #[test]
    fn determinant_pairing_of_top_blades() {
        let (v, d) = spaces(2);
        let e12 = Multivector::blade(v, 0b11, 1.0).unwrap();
        let f12 = Multivector::blade(d, 0b11, 1.0).unwrap();
        assert_eq!(dsp(&f12, &e12).unwrap(), 1.0);
        assert_eq!(dsp(&e12, &f12).unwrap(), 1.0);
    }

    #[test]
    fn contraction_of_form_into_bivector() {
        let (v, d) = spaces(2);
        let e12 = Multivector::blade(v, 0b11, 1.0).unwrap();
        let f1 = Multivector::blade(d, 0b01, 1.0).unwrap();
        let f2 = Multivector::blade(d, 0b10, 1.0).unwrap();
        assert_eq!(lcontr(&f1, &e12).unwrap(), Multivector::blade(v, 0b10, 1.0).unwrap());
        assert_eq!(lcontr(&f2, &e12).unwrap(), Multivector::blade(v, 0b01, -1.0).unwrap());
    }

    #[test]
    fn higher_grade_on_left_vanishes() {
        let (v, d) = spaces(3);
        let f12 = Multivector::blade(d, 0b011, 1.0).unwrap();
        let e1 = Multivector::blade(v, 0b001, 1.0).unwrap();
        assert!(lcontr(&f12, &e1).unwrap().is_zero(0.0));
        assert!(rcontr(&e1, &f12).unwrap().is_zero(0.0));
    }

    #[test]
    fn same_kind_pairing_rejected() {
        let (v, _) = spaces(2);
        let e1 = Multivector::generator(v, 0).unwrap();
        assert!(matches!(dsp(&e1, &e1), Err(Error::PairingType { .. })));
        assert!(matches!(lcontr(&e1, &e1), Err(Error::PairingType { .. })));
        assert!(matches!(rcontr(&e1, &e1), Err(Error::PairingType { .. })));
    }

    #[test]
    fn equal_grades_give_reversed_pairing() {
        let (v, d) = spaces(3);
        let f = Multivector::blade(d, 0b011, 1.0).unwrap();
        let x = Multivector::blade(v, 0b011, 1.0).unwrap();
        // ⟨Φ̃_2, X^2⟩ = -⟨Φ_2, X^2⟩
        assert_eq!(lcontr(&f, &x).unwrap().scalar_part(), -1.0);
        assert_eq!(rcontr(&f, &x).unwrap().scalar_part(), -1.0);
    }

    #[test]
    fn right_contraction_of_bivector_form() {
        let (v, d) = spaces(2);
        let f12 = Multivector::blade(d, 0b11, 1.0).unwrap();
        let e2 = Multivector::blade(v, 0b10, 1.0).unwrap();
        // |ε^{12}, e_2⟩ = Σ_j ⟨ε^{12}, e_j ∧ e_2⟩ ε^j = ε^1
        assert_eq!(rcontr(&f12, &e2).unwrap(), Multivector::blade(d, 0b01, 1.0).unwrap());
    }

    #[test]
    fn form_on_vectors_is_determinant() {
        let (v, d) = spaces(2);
        let f12 = Multivector::blade(d, 0b11, 1.0).unwrap();
        let a = Multivector::vector(v, &[1.0, 2.0]).unwrap();
        let b = Multivector::vector(v, &[3.0, 4.0]).unwrap();
        assert_eq!(form_on_vectors(&f12, &[a, b]).unwrap(), -2.0);
    }
}
