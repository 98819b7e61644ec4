//! Fields on a chart, Lie brackets, covariant derivatives, deformations and frames.
//!
//! cargo run --example covariant_fields

use hyperbolic_clifford::extensor::Side;
use hyperbolic_clifford::fields::{
    jacobian, lie_bracket, partial_a, Connection, Expr, FrameField, OperatorField, VectorField,
};
use hyperbolic_clifford::{BaseSpace, Result};

fn main() -> Result<()> {
    let v = BaseSpace::primal(2)?;
    let x = Expr::parse("x1", 2)?;
    let y = Expr::parse("x2", 2)?;
    let d1 = VectorField::basis(v, 0)?;
    let a = VectorField::vector(v, vec![Expr::zero(), x.clone()])?;
    let p = [0.7, -0.2];

    println!("[x1 d2, d1] = {}", lie_bracket(&a, &d1)?.eval(&p));

    let conn = Connection::from_fn(2, |s, m, n| match (s, m, n) {
        (0, 1, 1) => y.clone(),
        (1, 0, 1) | (1, 1, 0) => Expr::parse("x1*x2", 2).unwrap(),
        _ => Expr::zero(),
    });
    let w = VectorField::vector(v, vec![Expr::parse("sin(x2)", 2)?, Expr::one()])?;
    println!("nabla_a w at {p:?} = {}", conn.nabla_vec(&a, &w)?.eval(&p));
    println!("symmetric coefficients: {}", conn.is_structurally_symmetric());

    let lambda = OperatorField::from_fn(Side::Primal, 2, |i, j| match (i, j) {
        (0, 0) => Expr::parse("1 + x1^2", 2).unwrap(),
        (1, 1) => Expr::one(),
        _ => Expr::zero(),
    });
    let deformed = Connection::flat(2).deform(&lambda)?;
    println!("deformed flat connection, gamma^1_11 = {}", deformed.gamma(0, 0, 0));

    let frame = FrameField::new(OperatorField::from_fn(Side::Primal, 2, |i, j| match (i, j) {
        (0, 0) | (1, 1) => Expr::one(),
        (1, 0) => x.clone(),
        _ => Expr::zero(),
    }))?;
    let v1 = frame.vector(0).times(&x);
    println!(
        "relative derivative of x1 b1 along d1 = {}  (b1 = {})",
        partial_a(&frame, &d1, &v1)?.eval(&p),
        frame.vector(0).eval(&p)
    );

    let doubled = FrameField::new(OperatorField::identity(Side::Primal, 2).scale(2.0))?;
    println!(
        "Jacobian from the coordinate frame to 2d:{:.1}",
        jacobian(&FrameField::coordinate(2), &doubled)?.eval(&p)?.matrix()
    );
    Ok(())
}
