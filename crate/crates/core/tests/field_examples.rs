use std::f64::consts::PI;

use hyperbolic_clifford::extensor::Side;
use hyperbolic_clifford::fields::{
    curvature, epe_on_field, gamma_split, jacobian, lie_bracket, partial_a, presets, torsion, Connection, Expr,
    FrameField, OperatorField, VectorField,
};
use hyperbolic_clifford::random;
use hyperbolic_clifford::BaseSpace;

const TOL: f64 = 1e-8;

fn v2() -> BaseSpace {
    BaseSpace::primal(2).unwrap()
}

fn d(i: usize) -> VectorField {
    VectorField::basis(v2(), i).unwrap()
}

fn vector(comps: Vec<Expr>) -> VectorField {
    VectorField::vector(v2(), comps).unwrap()
}

fn points() -> Vec<[f64; 2]> {
    vec![[0.3, -0.7], [1.1, 0.4], [-0.9, 1.6], [2.0, 0.1], [0.6, -1.3]]
}

fn assert_vector(field: &VectorField, expected: impl Fn(&[f64; 2]) -> [f64; 2]) {
    for p in points() {
        let got = field.eval(&p).vector_part();
        let want = expected(&p);
        for k in 0..2 {
            assert!((got[k] - want[k]).abs() <= TOL, "at {p:?}: {got:?} vs {want:?}");
        }
    }
}

#[test]
fn bracket_of_x1_d2_with_d1() {
    let a = vector(vec![Expr::zero(), Expr::coord(0)]);
    assert_vector(&lie_bracket(&a, &d(0)).unwrap(), |_| [0.0, -1.0]);
    assert_vector(&lie_bracket(&d(0), &d(1)).unwrap(), |_| [0.0, 0.0]);
}

#[test]
fn flat_derivative_is_componentwise() {
    let conn = Connection::flat(2);
    let v = vector(vec![Expr::zero(), Expr::coord(0)]);
    assert_vector(&conn.nabla_vec(&d(0), &v).unwrap(), |_| [0.0, 1.0]);
}

#[test]
fn sphere_moves_d_v_along_d_u() {
    let conn = presets::sphere().connection;
    let got = conn.nabla_vec(&d(0), &d(1)).unwrap().eval(&[PI / 3.0, 0.2]).vector_part();
    assert!(got[0].abs() <= TOL);
    assert!((got[1] - 1.0 / (PI / 3.0).tan()).abs() <= TOL);
}

#[test]
fn sphere_split_in_the_coordinate_frame() {
    let conn = presets::sphere().connection;
    let gamma = gamma_split(&conn, &FrameField::coordinate(2)).unwrap();
    for u in [0.5, 1.0, 2.0] {
        let got = gamma.eval_fields(&[&d(0), &d(1)]).unwrap().eval(&[u, 0.0]).vector_part();
        assert!(got[0].abs() <= TOL && (got[1] - u.cos() / u.sin()).abs() <= TOL, "u = {u}: {got:?}");
    }
}

fn stretch() -> OperatorField {
    let x = Expr::coord(0);
    OperatorField::from_fn(Side::Primal, 2, |i, j| match (i, j) {
        (0, 0) => Expr::one() + &x * &x,
        (1, 1) => Expr::one(),
        _ => Expr::zero(),
    })
}

#[test]
fn deformation_of_the_flat_connection_by_a_stretch() {
    let lambda = stretch();
    let conn = Connection::flat(2);
    let deformed = conn.deform(&lambda).unwrap();
    // Λ∂₁Λ⁻¹ has the single entry (1+x²)·∂₁(1+x²)⁻¹ = −2x/(1+x²).
    for p in points() {
        for s in 0..2 {
            for m in 0..2 {
                for v in 0..2 {
                    let want = if (s, m, v) == (0, 0, 0) { -2.0 * p[0] / (1.0 + p[0] * p[0]) } else { 0.0 };
                    assert!((deformed.gamma(s, m, v).eval(&p) - want).abs() <= TOL, "γ^{s}_{m}{v} at {p:?}");
                }
            }
        }
    }

    let mut r = random::rng(3);
    let a = random::vector_field(&mut r, v2());
    let v = random::vector_field(&mut r, v2());
    let w = random::vector_field(&mut r, BaseSpace::dual(2).unwrap());
    let x = random::multivector_field(&mut r, v2());
    let inv = lambda.inverse();
    let gap = |l: &VectorField, rr: &VectorField| {
        points().iter().map(|p| l.eval(p).distance(&rr.eval(p))).fold(0.0, f64::max)
    };

    let lhs = deformed.nabla_vec(&a, &v).unwrap();
    let rhs = lambda.apply(&conn.nabla_vec(&a, &inv.apply(&v).unwrap()).unwrap()).unwrap();
    assert!(gap(&lhs, &rhs) <= TOL);

    let lhs = deformed.nabla_form(&a, &w).unwrap();
    let rhs = inv.adjoint().apply(&conn.nabla_form(&a, &lambda.adjoint().apply(&w).unwrap()).unwrap()).unwrap();
    assert!(gap(&lhs, &rhs) <= TOL);

    let lhs = deformed.nabla_multivector(&a, &x).unwrap();
    let rhs = lambda.epe_apply(&conn.nabla_multivector(&a, &inv.epe_apply(&x).unwrap()).unwrap()).unwrap();
    assert!(gap(&lhs, &rhs) <= TOL);

    let tau = random::extensor_field(&mut r, 2, 1, 0, Side::Primal);
    let lhs = deformed.nabla_extensor(&a, &tau).unwrap();
    let rhs = epe_on_field(&lambda, &conn.nabla_extensor(&a, &epe_on_field(&inv, &tau).unwrap()).unwrap()).unwrap();
    for p in points() {
        assert!(lhs.eval(&p).unwrap().distance(&rhs.eval(&p).unwrap()) <= TOL);
    }
}

#[test]
fn relative_derivative_of_a_scaled_frame_vector() {
    let x = Expr::coord(0);
    let b = OperatorField::from_fn(Side::Primal, 2, |i, j| match (i, j) {
        (0, 0) | (1, 1) => Expr::one(),
        (1, 0) => x.clone(),
        _ => Expr::zero(),
    });
    let f = FrameField::new(b).unwrap();
    let b1 = f.vector(0);
    let v = b1.times(&x);
    assert_vector(&partial_a(&f, &d(0), &v).unwrap(), |p| [1.0, p[0]]);
    assert_vector(&partial_a(&f, &d(0), &b1).unwrap(), |_| [0.0, 0.0]);
}

#[test]
fn jacobian_of_a_doubled_frame() {
    let f = FrameField::coordinate(2);
    let g = FrameField::new(OperatorField::identity(Side::Primal, 2).scale(2.0)).unwrap();
    let j = jacobian(&f, &g).unwrap();
    for p in points() {
        let m = j.eval(&p).unwrap();
        assert_eq!(m.matrix(), &(nalgebra::DMatrix::<f64>::identity(2, 2) * 2.0));
    }
    assert_vector(&j.apply(&f.vector(0)).unwrap(), |_| [2.0, 0.0]);
}

#[test]
fn one_asymmetric_coefficient_gives_torsion() {
    let conn = Connection::from_fn(2, |s, m, v| if (s, m, v) == (0, 0, 1) { Expr::one() } else { Expr::zero() });
    assert_vector(&torsion(&conn, &d(0), &d(1)).unwrap(), |_| [1.0, 0.0]);
    assert_vector(&torsion(&conn, &d(1), &d(0)).unwrap(), |_| [-1.0, 0.0]);
}

#[test]
fn flat_space_has_no_curvature() {
    let conn = presets::flat(2).connection;
    let mut r = random::rng(5);
    let f: Vec<VectorField> = (0..3).map(|_| random::vector_field(&mut r, v2())).collect();
    assert_vector(&curvature(&conn, &f[0], &f[1], &f[2]).unwrap(), |_| [0.0, 0.0]);
}
