//! Torsion and curvature of the unit sphere in the chart `(u, v)`.
//!
//! cargo run --example sphere_curvature

use hyperbolic_clifford::fields::{curvature, presets, torsion, VectorField};
use hyperbolic_clifford::{BaseSpace, Result};

fn main() -> Result<()> {
    let sphere = presets::sphere();
    let conn = &sphere.connection;
    let v = BaseSpace::primal(2)?;
    let (du, dv) = (VectorField::basis(v, 0)?, VectorField::basis(v, 1)?);
    for (s, m, n) in [(0, 1, 1), (1, 0, 1)] {
        println!("gamma^{}_{}{} = {}", s + 1, m + 1, n + 1, conn.gamma(s, m, n));
    }

    let tau = torsion(conn, &du, &dv)?;
    let rho = curvature(conn, &du, &dv, &dv)?;
    println!("{:>6} {:>12} {:>12} {:>10}", "u", "tau(du,dv)", "rho(du,dv,dv)", "sin^2 u");
    for u in [0.3, 0.6, 1.0, std::f64::consts::FRAC_PI_2, 2.0, 2.8] {
        let p = [u, 0.0];
        println!(
            "{u:>6.3} {:>12.2e} {:>12.6} {:>10.6}",
            tau.eval(&p).max_abs(),
            rho.eval(&p).vector_part()[0],
            u.sin().powi(2)
        );
    }
    Ok(())
}
