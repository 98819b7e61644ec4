//! Exterior products, duality scalar product and contractions on `⋀V` and `⋀V*`.
//!
//! cargo run --example exterior_duality

use hyperbolic_clifford::duality::{dsp, lcontr, rcontr};
use hyperbolic_clifford::{BaseSpace, Multivector, Result};

fn main() -> Result<()> {
    let v = BaseSpace::primal(3)?;
    let d = BaseSpace::dual(3)?;
    let e = |i| Multivector::generator(v, i);
    let eps = |i| Multivector::generator(d, i);

    let b = e(0)?.wedge(&e(1)?)?.scale(2.0) + e(1)?.wedge(&e(2)?)?;
    println!("B = {b}");
    println!("B ^ B = {}", b.wedge(&b)?);

    let w = eps(0)?.wedge(&eps(1)?)?;
    println!("<e^1 ^ e^2, B> = {}", dsp(&w, &b)?);
    println!("<e^1, B| = {}", lcontr(&eps(0)?, &b)?);
    println!("|B, e^3> = {}", rcontr(&b, &eps(2)?)?);

    let x = Multivector::vector(v, &[1.0, 2.0, 0.5])?;
    println!("x = {x}, grade involution {}, reversion of x^B {}", x.grade_involution(), x.wedge(&b)?.reversion());
    Ok(())
}
