//! The hyperbolic Clifford algebra of `V ⊕ V*`: Witt basis, products, σ and the Hodge star.
//!
//! cargo run --example hyperbolic_algebra

use hyperbolic_clifford::hyperbolic::{
    clifford, gram_inner, hodge, hodge_inv, hv_lcontr, hyperbolic_conjugate, orthonormal_basis, sigma, Vecfor,
};
use hyperbolic_clifford::{BaseSpace, Multivector, Result};

fn main() -> Result<()> {
    let n = 2;
    let h = BaseSpace::hyperbolic(n)?;
    let e1 = Multivector::generator(h, 0)?;
    let t1 = Multivector::generator(h, n)?;

    println!("e1 t1 + t1 e1 = {}", clifford(&e1, &t1)? + clifford(&t1, &e1)?);
    println!("e1 e1 = {}", clifford(&e1, &e1)?);

    let s = sigma(n)?;
    println!("sigma = {s}");
    println!("sigma^2 = {}, <sigma,sigma> = {}, *sigma = {}", clifford(&s, &s)?, gram_inner(&s, &s)?, hodge(&s)?);

    for (k, u) in orthonormal_basis(n)?.iter().enumerate() {
        println!("s{} = {u}   <s{0},s{0}> = {:.4}", k + 1, gram_inner(u, u)?);
    }

    let u = e1.wedge(&t1)? + Multivector::generator(h, 1)?.scale(3.0);
    println!("u = {u}");
    println!("*u = {}, unhodge(*u) = {}", hodge(&u)?, hodge_inv(&hodge(&u)?)?);
    println!("hyperbolic conjugate of u = {}", hyperbolic_conjugate(&u)?);
    println!("t1 _| u = {}", hv_lcontr(&t1, &u)?);

    let x = Vecfor::new(vec![1.0, 0.0], vec![1.0, 0.0])?;
    let y = Vecfor::new(vec![1.0, 0.0], vec![-1.0, 0.0])?;
    println!(
        "x = {}  is {:?}; y = {} is {:?}",
        x.to_multivector()?,
        x.classify(1e-12),
        y.to_multivector()?,
        y.classify(1e-12)
    );
    Ok(())
}
