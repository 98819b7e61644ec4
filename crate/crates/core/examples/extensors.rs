//! Extensors, their adjoints, and the exterior power and contracted extensions of an operator.
//!
//! cargo run --example extensors

use hyperbolic_clifford::extensor::{epe_on_extensor, ExtSignature, Extensor, Operator, Side, VSpaceSig};
use hyperbolic_clifford::{BaseSpace, Multivector, Result};
use nalgebra::DMatrix;

fn main() -> Result<()> {
    let n = 2;
    let v = BaseSpace::primal(n)?;
    let lambda = Operator::new(Side::Primal, DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 0.0, 3.0]))?;
    let e12 = Multivector::blade(v, 0b11, 1.0)?;
    println!("lambda(e1 ^ e2) extended = {}  (det = 6)", lambda.epe().apply(&e12)?);
    println!("contracted extension on e1 ^ e2 = {}  (trace = 5)", lambda.ce().apply(&e12)?);

    let vec_sig = VSpaceSig::homogeneous(Side::Primal, n, 1)?;
    let biv_sig = VSpaceSig::homogeneous(Side::Primal, n, 2)?;
    let sig = ExtSignature::new(vec![vec_sig.clone(), vec_sig], vec![], biv_sig)?;
    let wedge = Extensor::from_fn(sig, |args| args[0].wedge(&args[1]))?;
    let (a, b) = (Multivector::vector(v, &[1.0, 2.0])?, Multivector::vector(v, &[0.0, 1.0])?);
    println!("tau(a, b) = a ^ b = {}", wedge.eval(&[&a, &b])?);

    // wedge commutes with the extension, so the conjugated extensor is wedge again
    let moved = epe_on_extensor(&lambda, &wedge)?;
    println!("lambda acting on tau, at (a, b): {}", moved.eval(&[&a, &b])?);

    let e1 = Multivector::generator(v, 0)?;
    let one_slot = ExtSignature::new(
        vec![VSpaceSig::homogeneous(Side::Primal, n, 1)?],
        vec![],
        VSpaceSig::homogeneous(Side::Primal, n, 2)?,
    )?;
    let right = Extensor::from_fn(one_slot, |args| args[0].wedge(&e1))?;
    let form = Multivector::blade(BaseSpace::dual(n)?, 0b11, 1.0)?;
    println!("sigma(x) = x ^ e1, adjoint on e^1 ^ e^2 = {}", right.adjoint()?.eval(&[&form])?);
    Ok(())
}
