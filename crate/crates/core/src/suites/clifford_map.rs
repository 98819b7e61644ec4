use nalgebra::DMatrix;

use super::{Property, Residual};
use crate::error::Result;
use crate::exterior::{bits, BaseSpace, Multivector};
use crate::hyperbolic::{
    clifford, clifford_map_phi, gram_inner, hv_inner, orthonormal_basis, split_by_metric, Metric, Vecfor,
};
use crate::random::{self, TestRng};

fn vecfor_desc(x: &Vecfor) -> String {
    format!("{:?}+{:?}", x.primal, x.dual)
}

fn anticommutator(x: &Vecfor, y: &Vecfor) -> Result<DMatrix<f64>> {
    let (a, b) = (clifford_map_phi(x)?, clifford_map_phi(y)?);
    Ok(&a * &b + &b * &a)
}

fn prop_anticommutator(n: usize, r: &mut TestRng) -> Result<Residual> {
    let (x, y) = (random::vecfor(r, n), random::vecfor(r, n));
    let d = 1 << n;
    let want = DMatrix::<f64>::identity(d, d) * (2.0 * hv_inner(&x, &y));
    let got = anticommutator(&x, &y)?;
    Ok(Residual::new((got - want).amax(), format!("x={} y={}", vecfor_desc(&x), vecfor_desc(&y))))
}

fn prop_witt_generators(n: usize, _: &mut TestRng) -> Result<Residual> {
    let d = 1 << n;
    let mut worst: f64 = 0.0;
    for i in 0..2 * n {
        for j in 0..2 * n {
            let (x, y) = (Vecfor::basis(n, i), Vecfor::basis(n, j));
            // ⟨e_k, θ^l⟩ = δ_kl and both halves are isotropic
            let delta = if i + n == j || j + n == i { 1.0 } else { 0.0 };
            let want = DMatrix::<f64>::identity(d, d) * (2.0 * delta);
            worst = worst.max((anticommutator(&x, &y)? - want).amax());
        }
    }
    Ok(Residual::new(worst, "Witt basis"))
}

/// Coefficients of `u` on the orthonormal product basis `σ_A = σ_{a_1} ⋯ σ_{a_k}`.
fn orthonormal_expansion(u: &Multivector) -> Result<Vec<(u32, f64)>> {
    let n = u.n();
    let sig = orthonormal_basis(n)?;
    let space = u.space();
    let mut out = Vec::new();
    for a in 0..1u32 << (2 * n) {
        let sa = bits(a).try_fold(Multivector::scalar(space, 1.0), |acc, i| clifford(&acc, &sig[i]))?;
        let norm = gram_inner(&sa, &sa)?;
        out.push((a, gram_inner(&sa, u)? / norm));
    }
    Ok(out)
}

/// The matrix assigned to a Clifford element through `φ` on the orthonormal
/// generators, extended multiplicatively.
fn represent(u: &Multivector) -> Result<DMatrix<f64>> {
    let n = u.n();
    let d = 1 << n;
    let phis = orthonormal_basis(n)?
        .iter()
        .map(|s| clifford_map_phi(&Vecfor::from_multivector(s)?))
        .collect::<Result<Vec<_>>>()?;
    let mut m = DMatrix::zeros(d, d);
    for (a, c) in orthonormal_expansion(u)? {
        if c != 0.0 {
            m += bits(a).fold(DMatrix::identity(d, d), |acc, i| acc * &phis[i]) * c;
        }
    }
    Ok(m)
}

fn prop_homomorphism(n: usize, r: &mut TestRng) -> Result<Residual> {
    let hs = BaseSpace::hyperbolic(n)?;
    let xs: Vec<Vecfor> = (0..4).map(|_| random::vecfor(r, n)).collect();
    let k = 2 + random::index(r, 3);
    let mut product = Multivector::scalar(hs, 1.0);
    let d = 1 << n;
    let mut want = DMatrix::identity(d, d);
    for x in &xs[..k] {
        product = clifford(&product, &x.to_multivector()?)?;
        want *= clifford_map_phi(x)?;
    }
    let got = represent(&product)?;
    Ok(Residual::new((got - want).amax(), format!("{k} factors, first x={}", vecfor_desc(&xs[0]))))
}

fn prop_split_quadratic(n: usize, r: &mut TestRng) -> Result<Residual> {
    let b = Metric::new(random::symmetric_nondegenerate(r, n))?;
    let (x, y) = (random::vecfor(r, n), random::vecfor(r, n));
    let (xp, xm) = split_by_metric(&b, &x)?;
    let (yp, ym) = split_by_metric(&b, &y)?;
    let q = b.eval(&xp, &xp) - b.eval(&xm, &xm) - hv_inner(&x, &x);
    let p = b.eval(&xp, &yp) - b.eval(&xm, &ym) - hv_inner(&x, &y);
    Ok(Residual::max(&[q.abs(), p.abs()], format!("b={} x={}", b.matrix(), vecfor_desc(&x))))
}

fn prop_split_invertible(n: usize, r: &mut TestRng) -> Result<Residual> {
    let b = Metric::new(random::symmetric_nondegenerate(r, n))?;
    let x = random::vecfor(r, n);
    let (p, m) = split_by_metric(&b, &x)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let primal: Vec<f64> = p.iter().zip(&m).map(|(a, c)| (a - c) * s).collect();
    let raised: Vec<f64> = p.iter().zip(&m).map(|(a, c)| (a + c) * s).collect();
    let lowered = b.matrix() * nalgebra::DVector::from_vec(raised);
    let worst =
        primal.iter().zip(&x.primal).chain(lowered.iter().zip(&x.dual)).fold(0.0f64, |w, (a, c)| w.max((a - c).abs()));
    Ok(Residual::new(worst, format!("b={} x={}", b.matrix(), vecfor_desc(&x))))
}

pub(super) fn properties() -> Vec<Property> {
    vec![
        Property::new("phi/anticommutator-is-twice-inner-product", prop_anticommutator),
        Property::new("phi/witt-generator-relations", prop_witt_generators).cap(1),
        Property::new("phi/multiplicative-on-clifford-products", prop_homomorphism).dims(1, 3).cap(50),
        Property::new("split/quadratic-form", prop_split_quadratic),
        Property::new("split/recovers-vecfor", prop_split_invertible),
    ]
}
