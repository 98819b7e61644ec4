//! Seeded generators for random algebra elements and operators.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extensor::{ExtSignature, Extensor, Side, VSpaceSig};
use crate::exterior::{grade, BaseSpace, Multivector};
use crate::fields::{Connection, Expr, ExtensorField, FrameField, MultivectorField, OperatorField};
use crate::hyperbolic::Vecfor;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coeff(rng: &mut TestRng) -> f64 {
    rng.random_range(-1.0..=1.0)
}

pub fn multivector(rng: &mut TestRng, space: BaseSpace) -> Multivector {
    let c = (0..space.blade_count()).map(|_| coeff(rng)).collect();
    Multivector::from_coeffs(space, c).expect("length matches")
}

pub fn homogeneous(rng: &mut TestRng, space: BaseSpace, k: usize) -> Multivector {
    let c = (0..space.blade_count()).map(|m| if grade(m as u32) == k { coeff(rng) } else { 0.0 }).collect();
    Multivector::from_coeffs(space, c).expect("length matches")
}

pub fn vector(rng: &mut TestRng, space: BaseSpace) -> Multivector {
    homogeneous(rng, space, 1)
}

pub fn vecfor(rng: &mut TestRng, n: usize) -> Vecfor {
    let primal = (0..n).map(|_| coeff(rng)).collect();
    let dual = (0..n).map(|_| coeff(rng)).collect();
    Vecfor { primal, dual }
}

pub fn matrix(rng: &mut TestRng, rows: usize, cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| coeff(rng))
}

/// A well-conditioned invertible matrix, `I` plus a bounded perturbation.
pub fn invertible_matrix(rng: &mut TestRng, n: usize) -> DMatrix<f64> {
    loop {
        let m = DMatrix::identity(n, n) + matrix(rng, n, n) * 0.5;
        if m.determinant().abs() > 0.25 {
            return m;
        }
    }
}

/// A symmetric matrix with eigenvalues bounded away from zero.
pub fn symmetric_nondegenerate(rng: &mut TestRng, n: usize) -> DMatrix<f64> {
    loop {
        let a = matrix(rng, n, n);
        let m = &a + a.transpose();
        let eig = m.clone().symmetric_eigen();
        if eig.eigenvalues.iter().all(|l| l.abs() > 0.2) {
            return m;
        }
    }
}

pub fn index(rng: &mut TestRng, bound: usize) -> usize {
    rng.random_range(0..bound)
}

pub fn uniform(rng: &mut TestRng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..=hi)
}

pub fn flip(rng: &mut TestRng) -> bool {
    rng.random_bool(0.5)
}

/// A matrix with entries in `{k/8 : -8 ≤ k ≤ 8}`, so sums of small products stay exact.
pub fn dyadic_matrix(rng: &mut TestRng, n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| rng.random_range(-8i32..=8) as f64 / 8.0)
}

/// One or two distinct grades in `0..=n`, increasing.
pub fn grade_subset(rng: &mut TestRng, n: usize) -> Vec<usize> {
    let a = index(rng, n + 1);
    let b = index(rng, n + 1);
    let mut g = if flip(rng) { vec![a] } else { vec![a, b] };
    g.sort_unstable();
    g.dedup();
    g
}

pub fn vspace_sig(rng: &mut TestRng, side: Side, n: usize) -> VSpaceSig {
    VSpaceSig::new(side, n, &grade_subset(rng, n)).expect("valid grades")
}

/// An element of the given graded subspace.
pub fn in_sig(rng: &mut TestRng, sig: &VSpaceSig) -> Multivector {
    multivector(rng, sig.space()).part_in(sig.grades())
}

/// A random extensor with `k` vector slots, `l` form slots and the given output side.
pub fn extensor(rng: &mut TestRng, n: usize, k: usize, l: usize, out: Side) -> Extensor {
    let vecs = (0..k).map(|_| vspace_sig(rng, Side::Primal, n)).collect();
    let forms = (0..l).map(|_| vspace_sig(rng, Side::Dual, n)).collect();
    let output = vspace_sig(rng, out, n);
    let sig = ExtSignature::new(vecs, forms, output).expect("consistent slots");
    let coeffs = (0..sig.coeff_count()).map(|_| coeff(rng)).collect();
    Extensor::from_coeffs(sig, coeffs).expect("length matches")
}

/// Random arguments for every slot of `tau`.
pub fn arguments(rng: &mut TestRng, tau: &Extensor) -> Vec<Multivector> {
    tau.sig().slots().map(|s| in_sig(rng, s)).collect::<Vec<_>>()
}

/// A point of `[0.2, 1.2]ⁿ`.
pub fn chart_point(rng: &mut TestRng, n: usize) -> Vec<f64> {
    (0..n).map(|_| uniform(rng, 0.2, 1.2)).collect()
}

pub fn chart_points(rng: &mut TestRng, n: usize, count: usize) -> Vec<Vec<f64>> {
    (0..count).map(|_| chart_point(rng, n)).collect()
}

/// A polynomial of degree at most two with coefficients in `[-1, 1]`,
/// sometimes multiplied by `sin` or `cos` of a coordinate.
pub fn polynomial(rng: &mut TestRng, n: usize) -> Expr {
    let mut terms = vec![Expr::constant(coeff(rng))];
    for i in 0..n {
        terms.push(Expr::coord(i).scale(coeff(rng)));
        for j in i..n {
            terms.push((Expr::coord(i) * Expr::coord(j)).scale(coeff(rng)));
        }
    }
    let p = Expr::total(&terms);
    match index(rng, 4) {
        0 => p * Expr::coord(index(rng, n)).sin(),
        1 => p * Expr::coord(index(rng, n)).cos(),
        _ => p,
    }
}

fn field_with(rng: &mut TestRng, space: BaseSpace, keep: impl Fn(u32) -> bool) -> MultivectorField {
    let n = space.n();
    let comps =
        (0..space.blade_count() as u32).map(|m| if keep(m) { polynomial(rng, n) } else { Expr::zero() }).collect();
    MultivectorField::from_comps(space, comps).expect("chart space")
}

pub fn multivector_field(rng: &mut TestRng, space: BaseSpace) -> MultivectorField {
    field_with(rng, space, |_| true)
}

pub fn homogeneous_field(rng: &mut TestRng, space: BaseSpace, k: usize) -> MultivectorField {
    field_with(rng, space, |m| grade(m) == k)
}

pub fn vector_field(rng: &mut TestRng, space: BaseSpace) -> MultivectorField {
    homogeneous_field(rng, space, 1)
}

/// Connection with random coefficients.
pub fn connection(rng: &mut TestRng, n: usize) -> Connection {
    let gamma = (0..n * n * n).map(|_| polynomial(rng, n)).collect();
    Connection::new(n, gamma).expect("n³ coefficients")
}

/// Connection with `γ^σ_{μν} = γ^σ_{νμ}`.
pub fn symmetric_connection(rng: &mut TestRng, n: usize) -> Connection {
    let mut gamma = vec![Expr::zero(); n * n * n];
    for s in 0..n {
        for m in 0..n {
            for v in m..n {
                let c = polynomial(rng, n);
                gamma[(s * n + m) * n + v] = c.clone();
                gamma[(s * n + v) * n + m] = c;
            }
        }
    }
    Connection::new(n, gamma).expect("n³ coefficients")
}

/// `I` plus a quarter-size polynomial perturbation, redrawn until the
/// determinant stays above `0.2` in magnitude at every given point.
pub fn operator_field(rng: &mut TestRng, n: usize, points: &[Vec<f64>]) -> OperatorField {
    loop {
        let entries = (0..n * n)
            .map(|k| {
                let base = Expr::constant(if k / n == k % n { 1.0 } else { 0.0 });
                base + polynomial(rng, n).scale(0.25)
            })
            .collect();
        let op = OperatorField::new(Side::Primal, n, entries).expect("n² entries");
        let det = op.determinant();
        if points.iter().all(|p| det.eval(p).abs() > 0.2) {
            return op;
        }
    }
}

pub fn frame_field(rng: &mut TestRng, n: usize, points: &[Vec<f64>]) -> FrameField {
    FrameField::new(operator_field(rng, n, points)).expect("primal frame")
}

/// An extensor field with single-grade slots and output, polynomial coefficients.
pub fn extensor_field(rng: &mut TestRng, n: usize, k: usize, l: usize, out: Side) -> ExtensorField {
    let homogeneous = |rng: &mut TestRng, side| {
        let g = index(rng, n + 1);
        VSpaceSig::homogeneous(side, n, g).expect("grade in range")
    };
    let vecs = (0..k).map(|_| homogeneous(rng, Side::Primal)).collect();
    let forms = (0..l).map(|_| homogeneous(rng, Side::Dual)).collect();
    let output = homogeneous(rng, out);
    let sig = ExtSignature::new(vecs, forms, output).expect("consistent slots");
    let coeffs = (0..sig.coeff_count()).map(|_| polynomial(rng, n)).collect();
    ExtensorField::from_coeffs(sig, coeffs).expect("length matches")
}

/// Random fields for every slot of `tau`.
pub fn field_arguments(rng: &mut TestRng, tau: &ExtensorField) -> Vec<MultivectorField> {
    tau.sig().slots().map(|s| field_with(rng, s.space(), |m| s.basis().contains(&m))).collect()
}
