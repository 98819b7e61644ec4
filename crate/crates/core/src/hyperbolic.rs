//! The hyperbolic space `H_V = V ⊕ V*` and its Clifford algebra.
//!
//! Elements of `⋀H_V` use bits `0..n` for `e_1..e_n` and bits `n..2n` for
//! `θ^1..θ^n`. The inner product pairs `e_k` with `θ^k` and makes both
//! summands isotropic.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::duality;
use crate::error::{Error, Result};
use crate::exterior::{
    bits, conjugation_sign, grade, ordered_blade, reversion_sign, wedge_sign, BaseSpace, Multivector, SpaceKind,
};

/// Elements of `⋀H_V`.
pub type HMultivector = Multivector;

fn low_mask(n: usize) -> u32 {
    (1u32 << n) - 1
}

/// Blade paired with `mask` by the inner product: `e_k ↔ θ^k`.
pub fn partner(mask: u32, n: usize) -> u32 {
    let low = low_mask(n);
    ((mask & low) << n) | (mask >> n)
}

/// `⟨b_A, b_{p(A)}⟩`, the only nonzero inner product of the blade `b_A`.
pub fn gram_blade_sign(mask: u32, n: usize) -> f64 {
    let images: Vec<usize> = bits(mask).map(|i| if i < n { i + n } else { i - n }).collect();
    ordered_blade(&images).map(|(_, s)| s).unwrap_or(0.0)
}

fn check_hyperbolic(u: &HMultivector) -> Result<()> {
    if u.kind() != SpaceKind::Hyperbolic {
        return Err(Error::SpaceMismatch { expected: SpaceKind::Hyperbolic, found: u.kind() });
    }
    Ok(())
}

fn check_pair(u: &HMultivector, v: &HMultivector) -> Result<()> {
    check_hyperbolic(u)?;
    check_hyperbolic(v)?;
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch { left: u.n(), right: v.n() });
    }
    Ok(())
}

/// A vector of `H_V`, `x = x_* ⊕ x*`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vecfor {
    /// Components of `x_*` on `e_k`.
    pub primal: Vec<f64>,
    /// Components of `x*` on `θ^k`.
    pub dual: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VecforClass {
    Positive,
    Negative,
    Null,
}

impl Vecfor {
    pub fn new(primal: Vec<f64>, dual: Vec<f64>) -> Result<Self> {
        if primal.len() != dual.len() {
            return Err(Error::DimensionMismatch { left: primal.len(), right: dual.len() });
        }
        Ok(Self { primal, dual })
    }

    pub fn n(&self) -> usize {
        self.primal.len()
    }

    /// `e_k` for `k < n`, else `θ^{k-n}`.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut x = Self { primal: vec![0.0; n], dual: vec![0.0; n] };
        if k < n {
            x.primal[k] = 1.0;
        } else {
            x.dual[k - n] = 1.0;
        }
        x
    }

    /// Components on the orthonormal basis `σ_1, …, σ_{2n}`.
    pub fn orthonormal_components(&self) -> Vec<f64> {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let n = self.n();
        let mut c = vec![0.0; 2 * n];
        for k in 0..n {
            c[k] = (self.dual[k] + self.primal[k]) * r;
            c[n + k] = (self.dual[k] - self.primal[k]) * r;
        }
        c
    }

    pub fn to_multivector(&self) -> Result<HMultivector> {
        let space = BaseSpace::hyperbolic(self.n())?;
        let comps: Vec<f64> = self.primal.iter().chain(&self.dual).copied().collect();
        Multivector::vector(space, &comps)
    }

    pub fn from_multivector(u: &HMultivector) -> Result<Self> {
        check_hyperbolic(u)?;
        let n = u.n();
        let v = u.vector_part();
        Ok(Self { primal: v[..n].to_vec(), dual: v[n..].to_vec() })
    }

    pub fn primal_multivector(&self) -> Result<Multivector> {
        Multivector::vector(BaseSpace::primal(self.n())?, &self.primal)
    }

    pub fn dual_multiform(&self) -> Result<Multivector> {
        Multivector::vector(BaseSpace::dual(self.n())?, &self.dual)
    }

    /// `x̄ = (-x_*) ⊕ x*`.
    pub fn hyperbolic_conjugate(&self) -> Self {
        Self { primal: self.primal.iter().map(|c| -c).collect(), dual: self.dual.clone() }
    }

    /// Sign class of `⟨x, x⟩ = 2 x*(x_*)`.
    pub fn classify(&self, tol: f64) -> VecforClass {
        let q = hv_inner(self, self);
        if q > tol {
            VecforClass::Positive
        } else if q < -tol {
            VecforClass::Negative
        } else {
            VecforClass::Null
        }
    }
}

/// `⟨x, y⟩ = x*(y_*) + y*(x_*)`.
pub fn hv_inner(x: &Vecfor, y: &Vecfor) -> f64 {
    let a: f64 = x.dual.iter().zip(&y.primal).map(|(p, q)| p * q).sum();
    let b: f64 = y.dual.iter().zip(&x.primal).map(|(p, q)| p * q).sum();
    a + b
}

/// The orthonormal basis `σ_k = (e_k + θ^k)/√2`, `σ_{n+k} = (-e_k + θ^k)/√2`.
pub fn orthonormal_basis(n: usize) -> Result<Vec<HMultivector>> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(2 * n);
    for sign in [1.0, -1.0] {
        for k in 0..n {
            let mut x = Vecfor::basis(n, n + k);
            x.dual[k] = r;
            x.primal[k] = sign * r;
            out.push(x.to_multivector()?);
        }
    }
    Ok(out)
}

/// Gram inner product of `⋀H_V`, determinant of inner products on simple elements.
pub fn gram_inner(u: &HMultivector, v: &HMultivector) -> Result<f64> {
    check_pair(u, v)?;
    let n = u.n();
    Ok(u.terms().map(|(m, c)| c * v.coeff(partner(m, n)) * gram_blade_sign(m, n)).sum())
}

/// `b_A ⌟ b_B` as a signed blade.
pub fn lcontr_blade(a: u32, b: u32, n: usize) -> Option<(u32, f64)> {
    let pa = partner(a, n);
    if pa & !b != 0 {
        return None;
    }
    let c = b & !pa;
    // ⟨b_A ⌟ b_B, b_{p(C)}⟩ = ⟨b_B, b̃_A ∧ b_{p(C)}⟩
    let rhs = reversion_sign(grade(a)) * wedge_sign(a, partner(c, n))? * gram_blade_sign(b, n);
    Some((c, rhs * gram_blade_sign(c, n)))
}

/// `b_B ⌞ b_A` as a signed blade.
pub fn rcontr_blade(b: u32, a: u32, n: usize) -> Option<(u32, f64)> {
    let pa = partner(a, n);
    if pa & !b != 0 {
        return None;
    }
    let c = b & !pa;
    // ⟨b_B ⌞ b_A, b_{p(C)}⟩ = ⟨b_B, b_{p(C)} ∧ b̃_A⟩
    let rhs = reversion_sign(grade(a)) * wedge_sign(partner(c, n), a)? * gram_blade_sign(b, n);
    Some((c, rhs * gram_blade_sign(c, n)))
}

fn bilinear(u: &HMultivector, v: &HMultivector, rule: impl Fn(u32, u32) -> Option<(u32, f64)>) -> HMultivector {
    let mut out = Multivector::zero(u.space());
    for (a, x) in u.terms() {
        for (b, y) in v.terms() {
            if let Some((m, s)) = rule(a, b) {
                out.coeffs_mut()[m as usize] += s * x * y;
            }
        }
    }
    out
}

/// Left contraction `u ⌟ v`, adjoint to `w ↦ ũ ∧ w`.
pub fn hv_lcontr(u: &HMultivector, v: &HMultivector) -> Result<HMultivector> {
    check_pair(u, v)?;
    let n = u.n();
    Ok(bilinear(u, v, |a, b| lcontr_blade(a, b, n)))
}

/// Right contraction `v ⌞ u`, adjoint to `w ↦ w ∧ ũ`.
pub fn hv_rcontr(v: &HMultivector, u: &HMultivector) -> Result<HMultivector> {
    check_pair(u, v)?;
    let n = u.n();
    Ok(bilinear(v, u, |b, a| rcontr_blade(b, a, n)))
}

/// `e_* = e_1 ∧ ⋯ ∧ e_n`.
pub fn e_star(n: usize) -> Result<HMultivector> {
    Multivector::blade(BaseSpace::hyperbolic(n)?, low_mask(n), 1.0)
}

/// `θ* = θ^1 ∧ ⋯ ∧ θ^n`.
pub fn theta_star(n: usize) -> Result<HMultivector> {
    Multivector::blade(BaseSpace::hyperbolic(n)?, low_mask(n) << n, 1.0)
}

/// Unit pseudoscalar `σ = e_* ∧ θ*`.
pub fn sigma(n: usize) -> Result<HMultivector> {
    Multivector::blade(BaseSpace::hyperbolic(n)?, low_mask(2 * n), 1.0)
}

/// Hodge star `⋆u = ũ ⌟ σ`.
pub fn hodge(u: &HMultivector) -> Result<HMultivector> {
    check_hyperbolic(u)?;
    hv_lcontr(&u.reversion(), &sigma(u.n())?)
}

/// Inverse Hodge star `⋆⁻¹u = σ̃ ⌞ ũ`.
pub fn hodge_inv(u: &HMultivector) -> Result<HMultivector> {
    check_hyperbolic(u)?;
    hv_rcontr(&sigma(u.n())?.reversion(), &u.reversion())
}

/// Automorphism of `⋀H_V` extending `x ↦ x̄`: every `e_k` factor flips sign.
pub fn hyperbolic_conjugate(u: &HMultivector) -> Result<HMultivector> {
    check_hyperbolic(u)?;
    let low = low_mask(u.n());
    Ok(u.map_blades(|m| if (m & low).count_ones() % 2 == 0 { 1.0 } else { -1.0 }))
}

/// Places an element of `⋀V` or `⋀V*` inside `⋀H_V`.
pub fn embed(x: &Multivector) -> Result<HMultivector> {
    let n = x.n();
    let shift = match x.kind() {
        SpaceKind::Primal => 0,
        SpaceKind::Dual => n,
        SpaceKind::Hyperbolic => return Ok(x.clone()),
    };
    let mut out = Multivector::zero(BaseSpace::hyperbolic(n)?);
    for (m, c) in x.terms() {
        out.coeffs_mut()[(m << shift) as usize] = c;
    }
    Ok(out)
}

/// Inverse of [`embed`]; fails if `u` has components outside the target subalgebra.
pub fn project(u: &HMultivector, kind: SpaceKind, tol: f64) -> Result<Multivector> {
    check_hyperbolic(u)?;
    let n = u.n();
    let (shift, name) = match kind {
        SpaceKind::Primal => (0, "⋀V"),
        SpaceKind::Dual => (n, "⋀V*"),
        SpaceKind::Hyperbolic => return Ok(u.clone()),
    };
    let keep = low_mask(n) << shift;
    let mut out = Multivector::zero(BaseSpace::new(kind, n)?);
    for (m, c) in u.terms() {
        if m & !keep != 0 {
            if c.abs() > tol {
                return Err(Error::NotInSubspace(name.to_string()));
            }
            continue;
        }
        out.coeffs_mut()[(m >> shift) as usize] = c;
    }
    Ok(out)
}

/// `D_∦ u* = ũ* ⌟ e_*`, mapping `⋀^k V*` onto `⋀^{n-k} V`.
pub fn poincare_down(u: &Multivector) -> Result<Multivector> {
    if u.kind() != SpaceKind::Dual {
        return Err(Error::SpaceMismatch { expected: SpaceKind::Dual, found: u.kind() });
    }
    let h = hv_lcontr(&embed(&u.reversion())?, &e_star(u.n())?)?;
    project(&h, SpaceKind::Primal, 0.0)
}

/// `D^∦ u_* = θ* ⌞ ū_*` with the grade conjugation bar, mapping `⋀^k V` onto `⋀^{n-k} V*`.
pub fn poincare_up(u: &Multivector) -> Result<Multivector> {
    if u.kind() != SpaceKind::Primal {
        return Err(Error::SpaceMismatch { expected: SpaceKind::Primal, found: u.kind() });
    }
    let bar = u.map_blades(|m| conjugation_sign(grade(m)));
    let h = hv_rcontr(&theta_star(u.n())?, &embed(&bar)?)?;
    project(&h, SpaceKind::Dual, 0.0)
}

fn generator_times(i: usize, v: &HMultivector) -> HMultivector {
    let n = v.n();
    let g = 1u32 << i;
    let mut out = Multivector::zero(v.space());
    for (b, y) in v.terms() {
        if let Some((m, s)) = lcontr_blade(g, b, n) {
            out.coeffs_mut()[m as usize] += s * y;
        }
        if let Some(s) = wedge_sign(g, b) {
            out.coeffs_mut()[(g | b) as usize] += s * y;
        }
    }
    out
}

fn blade_times(mask: u32, v: &HMultivector) -> HMultivector {
    if mask == 0 {
        return v.clone();
    }
    let n = v.n();
    let i = mask.trailing_zeros() as usize;
    let rest = mask & (mask - 1);
    // b_i ∧ b_rest = b_i b_rest - b_i ⌟ b_rest
    let mut out = generator_times(i, &blade_times(rest, v));
    if let Some((m, s)) = lcontr_blade(1 << i, rest, n) {
        out -= &blade_times(m, v).scale(s);
    }
    out
}

/// Clifford product, generated by `x u = x ⌟ u + x ∧ u` for vectors `x`.
pub fn clifford(u: &HMultivector, v: &HMultivector) -> Result<HMultivector> {
    check_pair(u, v)?;
    let mut out = Multivector::zero(u.space());
    for (a, x) in u.terms() {
        out += &blade_times(a, v).scale(x);
    }
    Ok(out)
}

/// Matrix of `φ_x(u) = √2 (x* ⌟ u + x_* ∧ u)` on `⋀V`, columns indexed by blade mask.
///
/// The factor makes `φ_x φ_y + φ_y φ_x = 2⟨x, y⟩ Id`.
pub fn clifford_map_phi(x: &Vecfor) -> Result<DMatrix<f64>> {
    let n = x.n();
    let space = BaseSpace::primal(n)?;
    let xs = x.primal_multivector()?;
    let xd = x.dual_multiform()?;
    let dim = space.blade_count();
    let mut m = DMatrix::zeros(dim, dim);
    for j in 0..dim {
        let u = Multivector::blade(space, j as u32, 1.0)?;
        let img = (duality::lcontr(&xd, &u)? + xs.wedge(&u)?).scale(std::f64::consts::SQRT_2);
        for (i, c) in img.coeffs().iter().enumerate() {
            m[(i, j)] = *c;
        }
    }
    Ok(m)
}

/// A symmetric nondegenerate bilinear form on `V`, given by its Gram matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Metric {
    matrix: DMatrix<f64>,
    inverse: DMatrix<f64>,
}

impl Metric {
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { left: matrix.nrows(), right: matrix.ncols() });
        }
        let asym = (&matrix - matrix.transpose()).abs().max();
        if asym > 1e-12 {
            return Err(Error::Signature("metric must be symmetric".into()));
        }
        let inverse = matrix.clone().try_inverse().ok_or(Error::Singular("metric"))?;
        Ok(Self { matrix, inverse })
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn eval(&self, u: &[f64], v: &[f64]) -> f64 {
        let n = self.n();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| u[i] * self.matrix[(i, j)] * v[j]).sum()
    }

    /// `b*`, the inverse of the musical map `v ↦ b(v, ·)`.
    pub fn raise(&self, form: &[f64]) -> Vec<f64> {
        let f = nalgebra::DVector::from_column_slice(form);
        (&self.inverse * f).iter().copied().collect()
    }
}

/// `x_± = (b* x* ± x_*)/√2`.
pub fn split_by_metric(metric: &Metric, x: &Vecfor) -> Result<(Vec<f64>, Vec<f64>)> {
    if metric.n() != x.n() {
        return Err(Error::DimensionMismatch { left: metric.n(), right: x.n() });
    }
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let raised = metric.raise(&x.dual);
    let plus = raised.iter().zip(&x.primal).map(|(a, b)| (a + b) * r).collect();
    let minus = raised.iter().zip(&x.primal).map(|(a, b)| (a - b) * r).collect();
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, mask: u32, c: f64) -> HMultivector {
        Multivector::blade(BaseSpace::hyperbolic(n).unwrap(), mask, c).unwrap()
    }

    #[test]
    fn witt_pair_contracts_to_one() {
        let e1 = h(1, 0b01, 1.0);
        let t1 = h(1, 0b10, 1.0);
        assert_eq!(hv_lcontr(&e1, &t1).unwrap(), h(1, 0, 1.0));
        assert_eq!(hv_lcontr(&t1, &e1).unwrap(), h(1, 0, 1.0));
        assert!(hv_lcontr(&e1, &e1).unwrap().is_zero(0.0));
    }

    #[test]
    fn anticommutator_of_witt_pair_is_two() {
        let e1 = h(1, 0b01, 1.0);
        let t1 = h(1, 0b10, 1.0);
        let s = clifford(&t1, &e1).unwrap() + clifford(&e1, &t1).unwrap();
        assert_eq!(s, h(1, 0, 2.0));
    }

    #[test]
    fn sigma_is_wedge_of_orthonormal_basis() {
        for n in 1..=3 {
            let basis = orthonormal_basis(n).unwrap();
            let mut w = h(n, 0, 1.0);
            for b in &basis {
                w = w.wedge(b).unwrap();
            }
            assert!(w.approx_eq(&sigma(n).unwrap(), 1e-12));
        }
    }

    #[test]
    fn sigma_squares_to_one() {
        for n in 1..=3 {
            let s = sigma(n).unwrap();
            assert!(clifford(&s, &s).unwrap().approx_eq(&h(n, 0, 1.0), 1e-12));
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((gram_inner(&s, &s).unwrap() - sign).abs() < 1e-12);
        }
    }

    #[test]
    fn orthonormal_components_of_basis_vectors() {
        let x = Vecfor::basis(2, 0);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let c = x.orthonormal_components();
        assert!((c[0] - r).abs() < 1e-15 && (c[2] + r).abs() < 1e-15);
    }

    #[test]
    fn split_examples_with_identity_metric() {
        let m = Metric::new(DMatrix::identity(1, 1)).unwrap();
        let s = std::f64::consts::SQRT_2;
        let (p, q) = split_by_metric(&m, &Vecfor::new(vec![1.0], vec![1.0]).unwrap()).unwrap();
        assert!((p[0] - s).abs() < 1e-15 && q[0].abs() < 1e-15);
        let (p, q) = split_by_metric(&m, &Vecfor::new(vec![1.0], vec![-1.0]).unwrap()).unwrap();
        assert!(p[0].abs() < 1e-15 && (q[0] + s).abs() < 1e-15);
    }

    #[test]
    fn classify_and_conjugate() {
        let x = Vecfor::new(vec![1.0, 0.0], vec![1.0, 0.0]).unwrap();
        assert_eq!(x.classify(1e-12), VecforClass::Positive);
        assert_eq!(x.hyperbolic_conjugate().classify(1e-12), VecforClass::Negative);
        assert_eq!(Vecfor::basis(2, 1).classify(1e-12), VecforClass::Null);
    }

    #[test]
    fn phi_of_e1_raises_scalar() {
        let m = clifford_map_phi(&Vecfor::basis(1, 0)).unwrap();
        assert!((m[(1, 0)] - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(m[(0, 1)], 0.0);
    }

    #[test]
    fn project_rejects_mixed_elements() {
        let u = h(1, 0b11, 1.0);
        assert!(matches!(project(&u, SpaceKind::Primal, 1e-12), Err(Error::NotInSubspace(_))));
    }

    fn rand_h(r: &mut crate::random::TestRng, n: usize) -> HMultivector {
        crate::random::multivector(r, BaseSpace::hyperbolic(n).unwrap())
    }

    #[test]
    fn reversion_does_not_distribute_over_contraction_in_place() {
        // x ⌟ B for a vector and a bivector: reversing both inputs flips the sign of the result
        let n = 2;
        let x = h(n, 0b0001, 1.0);
        let b = h(n, 0b0110, 1.0).wedge(&h(n, 0b0100, 0.0)).unwrap() + h(n, 0b0101, 1.0);
        let lhs = hv_lcontr(&x, &b).unwrap().reversion();
        let same_side = hv_lcontr(&x.reversion(), &b.reversion()).unwrap();
        let swapped = hv_rcontr(&b.reversion(), &x.reversion()).unwrap();
        assert!(!lhs.is_zero(1e-12));
        assert!(lhs.approx_eq(&same_side.scale(-1.0), 1e-12));
        assert!(lhs.approx_eq(&swapped, 1e-12));
    }

    #[test]
    fn right_contraction_of_product_uses_plus_sign() {
        let n = 1;
        let y = h(n, 0b01, 1.0);
        let x = h(n, 0b10, 1.0);
        let one = h(n, 0, 1.0);
        // (y 1) ⌞ x = ⟨y, x⟩ = 1
        let lhs = hv_rcontr(&clifford(&y, &one).unwrap(), &x).unwrap();
        let t = hv_rcontr(&y, &x).unwrap();
        let minus = clifford(&y, &hv_rcontr(&one, &x).unwrap()).unwrap() - clifford(&t, &one).unwrap();
        let plus = clifford(&y, &hv_rcontr(&one, &x).unwrap()).unwrap() + clifford(&t, &one).unwrap();
        assert!(lhs.approx_eq(&one, 1e-12));
        assert!(!lhs.approx_eq(&minus, 1e-6));
        assert!(lhs.approx_eq(&plus, 1e-12));
    }

    #[test]
    fn inverse_hodge_of_product_needs_reversed_right_factor() {
        let mut r = crate::random::rng(11);
        let n = 2;
        let (u, v) = (rand_h(&mut r, n), rand_h(&mut r, n));
        let lhs = hodge_inv(&clifford(&u, &v).unwrap()).unwrap();
        let plain = clifford(&hodge_inv(&v).unwrap(), &u).unwrap();
        let reversed = clifford(&hodge_inv(&v).unwrap(), &u.reversion()).unwrap();
        assert!(lhs.distance(&plain) > 1e-3);
        assert!(lhs.approx_eq(&reversed, 1e-12));
    }

    #[test]
    fn split_element_right_contraction_pairs_form_on_the_right() {
        let mut r = crate::random::rng(5);
        let n = 2;
        let us = embed(&crate::random::multivector(&mut r, BaseSpace::primal(n).unwrap())).unwrap();
        let uu = embed(&crate::random::multivector(&mut r, BaseSpace::dual(n).unwrap())).unwrap();
        let xv = crate::random::vecfor(&mut r, n);
        let x = xv.to_multivector().unwrap();
        let xs = embed(&xv.primal_multivector().unwrap()).unwrap();
        let xu = embed(&xv.dual_multiform().unwrap()).unwrap();
        let lhs = hv_rcontr(&us.wedge(&uu).unwrap(), &x).unwrap();
        let head = us.wedge(&hv_rcontr(&uu, &xs).unwrap()).unwrap();
        let written = &head + &hv_lcontr(&xu, &us).unwrap().wedge(&uu.grade_involution()).unwrap();
        let mirrored = &head + &hv_rcontr(&us, &xu).unwrap().wedge(&uu.grade_involution()).unwrap();
        assert!(lhs.distance(&written) > 1e-3);
        assert!(lhs.approx_eq(&mirrored, 1e-12));
    }

    #[test]
    fn poincare_up_bar_is_grade_conjugation() {
        let mut r = crate::random::rng(3);
        for n in 1..=3 {
            let u = crate::random::multivector(&mut r, BaseSpace::primal(n).unwrap());
            let star = hodge(&embed(&u).unwrap()).unwrap();
            let via = |bar: &Multivector| {
                let d = hv_rcontr(&theta_star(n).unwrap(), &embed(bar).unwrap()).unwrap();
                e_star(n).unwrap().wedge(&d).unwrap()
            };
            assert!(star.approx_eq(&via(&u.conjugation()), 1e-12));
            // the two bars agree on grades 0 and 1
            if n > 1 {
                assert!(star.distance(&via(&u.grade_involution())) > 1e-3);
            }
        }
    }

    #[test]
    fn unscaled_phi_squares_to_half_the_quadratic_form() {
        let x = Vecfor::new(vec![1.0], vec![1.0]).unwrap();
        let m = clifford_map_phi(&x).unwrap() * 0.5;
        let sq = &m * &m;
        // ⟨x, x⟩ = 2, and the factor 1/√2 would give φ_x² = ¼⟨x, x⟩ Id
        assert!((sq - DMatrix::identity(2, 2) * 0.5).abs().max() < 1e-12);
    }

    /// Contraction obtained by solving `⟨u ⌟ v, w⟩ = ⟨v, ũ ∧ w⟩` against the full Gram matrix.
    fn solved_lcontr(u: &HMultivector, v: &HMultivector) -> HMultivector {
        let space = u.space();
        let dim = space.blade_count();
        let basis: Vec<HMultivector> = (0..dim).map(|m| Multivector::blade(space, m as u32, 1.0).unwrap()).collect();
        let g = DMatrix::from_fn(dim, dim, |i, j| gram_inner(&basis[i], &basis[j]).unwrap());
        let rhs =
            nalgebra::DVector::from_fn(dim, |j, _| gram_inner(v, &u.reversion().wedge(&basis[j]).unwrap()).unwrap());
        let c = g.lu().solve(&rhs).unwrap();
        Multivector::from_coeffs(space, c.iter().copied().collect()).unwrap()
    }

    fn solved_rcontr(v: &HMultivector, u: &HMultivector) -> HMultivector {
        let space = u.space();
        let dim = space.blade_count();
        let basis: Vec<HMultivector> = (0..dim).map(|m| Multivector::blade(space, m as u32, 1.0).unwrap()).collect();
        let g = DMatrix::from_fn(dim, dim, |i, j| gram_inner(&basis[i], &basis[j]).unwrap());
        let rhs =
            nalgebra::DVector::from_fn(dim, |j, _| gram_inner(v, &basis[j].wedge(&u.reversion()).unwrap()).unwrap());
        let c = g.lu().solve(&rhs).unwrap();
        Multivector::from_coeffs(space, c.iter().copied().collect()).unwrap()
    }

    #[test]
    fn contractions_match_linear_solve() {
        let mut r = crate::random::rng(17);
        for n in 1..=2 {
            for _ in 0..10 {
                let (u, v) = (rand_h(&mut r, n), rand_h(&mut r, n));
                assert!(hv_lcontr(&u, &v).unwrap().approx_eq(&solved_lcontr(&u, &v), 1e-10));
                assert!(hv_rcontr(&v, &u).unwrap().approx_eq(&solved_rcontr(&v, &u), 1e-10));
            }
        }
    }

    #[test]
    fn contraction_examples_on_witt_bivector() {
        let e1t1 = h(1, 0b11, 1.0);
        let e1 = h(1, 0b01, 1.0);
        let s = hv_lcontr(&e1, &e1t1).unwrap();
        assert!(s.approx_eq(&solved_lcontr(&e1, &e1t1), 1e-12));
        // ⟨e1, e1⟩θ1 - e1⟨e1, θ1⟩
        assert_eq!(s, h(1, 0b01, -1.0));
        let t = hv_lcontr(&h(1, 0b10, 1.0), &e1t1).unwrap();
        assert!(t.approx_eq(&solved_lcontr(&h(1, 0b10, 1.0), &e1t1), 1e-12));
        assert_eq!(t, h(1, 0b10, 1.0));
    }

    #[test]
    fn hodge_of_one_is_sigma() {
        for n in 1..=3 {
            assert_eq!(hodge(&h(n, 0, 1.0)).unwrap(), sigma(n).unwrap());
        }
    }

    #[test]
    fn poincare_down_of_one_and_top_form() {
        let n = 2;
        let one = Multivector::scalar(BaseSpace::dual(n).unwrap(), 1.0);
        assert_eq!(poincare_down(&one).unwrap(), Multivector::blade(BaseSpace::primal(n).unwrap(), 0b11, 1.0).unwrap());
        let top = Multivector::blade(BaseSpace::dual(n).unwrap(), 0b11, 1.0).unwrap();
        let d = poincare_down(&top).unwrap();
        assert_eq!(d.homogeneous_grade(0.0), Some(0));
        assert_eq!(d.scalar_part().abs(), 1.0);
    }
}
