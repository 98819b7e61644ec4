//! Vecfors acting on `⋀V` by `φ_x = x_* ∧ · + ⟨x*, ·|`, squaring to `⟨x,x⟩`.
//!
//! cargo run --example clifford_map

use hyperbolic_clifford::hyperbolic::{clifford_map_phi, hv_inner, Vecfor};
use hyperbolic_clifford::Result;
use nalgebra::DMatrix;

fn main() -> Result<()> {
    let x = Vecfor::new(vec![1.0, 2.0], vec![0.5, -1.0])?;
    let y = Vecfor::new(vec![0.0, 1.0], vec![3.0, 0.0])?;
    let (px, py) = (clifford_map_phi(&x)?, clifford_map_phi(&y)?);
    println!("phi_x on the blades 1, e1, e2, e1^e2:{px:.3}");
    println!("<x,x> = {}", hv_inner(&x, &x));
    println!("phi_x^2 = <x,x> Id: {}", (&px * &px - DMatrix::identity(4, 4) * hv_inner(&x, &x)).amax() < 1e-12);
    let anti = &px * &py + &py * &px;
    println!("phi_x phi_y + phi_y phi_x = {:.3} Id", anti[(0, 0)]);
    println!("2<x,y> = {:.3}", 2.0 * hv_inner(&x, &y));
    Ok(())
}
