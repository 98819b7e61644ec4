use std::f64::consts::PI;

use super::differential::{Ctx, POINTS};
use super::{Property, Residual};
use crate::error::Result;
use crate::fields::{
    cartan_theta, curvature, curvature_R, curvature_extensor, gamma_split, lie_bracket, presets, split_operator,
    torsion, torsion_T, torsion_tensor, Connection, Expr, FrameField, MultivectorField, VectorField,
};
use crate::random::{self, TestRng};

/// `R^σ_{μνρ} = ∂_μγ^σ_{νρ} − ∂_νγ^σ_{μρ} + γ^σ_{μλ}γ^λ_{νρ} − γ^σ_{νλ}γ^λ_{μρ}`.
fn coordinate_curvature(conn: &Connection, s: usize, mu: usize, nu: usize, rho: usize) -> Expr {
    let n = conn.n();
    let mut terms = vec![conn.gamma(s, nu, rho).partial(mu), -conn.gamma(s, mu, rho).partial(nu)];
    for l in 0..n {
        terms.push(conn.gamma(s, mu, l) * conn.gamma(l, nu, rho));
        terms.push(-(conn.gamma(s, nu, l) * conn.gamma(l, mu, rho)));
    }
    Expr::total(&terms)
}

fn basis(c: &Ctx) -> Result<Vec<VectorField>> {
    (0..c.n).map(|m| VectorField::basis(c.v, m)).collect()
}

fn zero(c: &Ctx) -> VectorField {
    VectorField::zero(c.v)
}

/// Sphere points with `u` away from the poles.
fn sphere_ctx(r: &mut TestRng, count: usize) -> Result<Ctx> {
    let pts = (0..count).map(|_| vec![random::uniform(r, 0.4, 2.7), random::uniform(r, -1.0, 1.0)]).collect();
    Ctx::at(2, pts)
}

fn any_connection(r: &mut TestRng, n: usize) -> Connection {
    if random::flip(r) {
        random::connection(r, n)
    } else {
        random::symmetric_connection(r, n)
    }
}

fn prop_torsion_antisymmetric(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, b) = (c.vector(r), c.vector(r));
    let sum = torsion(&conn, &a, &b)?.add(&torsion(&conn, &b, &a)?)?;
    Ok(c.residual(c.gap(&sum, &zero(&c)), "τ(a,b) + τ(b,a)"))
}

fn prop_torsion_coefficient_oracle(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let e = basis(&c)?;
    let mut worst: f64 = 0.0;
    for mu in 0..n {
        for nu in 0..n {
            let t = torsion(&conn, &e[mu], &e[nu])?;
            for s in 0..n {
                let want = conn.gamma(s, mu, nu) - conn.gamma(s, nu, mu);
                worst = worst.max(c.gap_expr(&t.vector_comps()[s], &want));
            }
        }
    }
    Ok(c.residual(worst, "τ(∂_μ,∂_ν)^σ = γ^σ_{μν} − γ^σ_{νμ}"))
}

fn prop_torsion_reconstruction(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let f = random::frame_field(r, n, &c.pts);
    let (a, b) = (c.vector(r), c.vector(r));
    let mut rebuilt = zero(&c);
    for mu in 0..n {
        rebuilt = rebuilt.add(&f.vector(mu).times(&torsion_tensor(&conn, &a, &b, &f.coform(mu))?))?;
    }
    Ok(c.residual(c.gap(&rebuilt, &torsion(&conn, &a, &b)?), "T(a,b,β^μ) b_μ"))
}

fn prop_torsion_extensor_on_bivectors(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, b) = (c.vector(r), c.vector(r));
    let got = torsion_T(&conn)?.eval_fields(&[&a.wedge(&b)?])?;
    Ok(c.residual(c.gap(&got, &torsion(&conn, &a, &b)?), "𝒯(a∧b)"))
}

fn prop_theta_matches_tensor(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, b, w) = (c.vector(r), c.vector(r), c.form(r));
    let lhs = cartan_theta(&conn, &w)?.dsp(&a.wedge(&b)?)?;
    Ok(c.residual(c.gap_expr(&lhs, &torsion_tensor(&conn, &a, &b, &w)?), "⟨Θ(ω), a∧b⟩"))
}

/// `½⟨β^μ∧β^ν, X²⟩ f(b_μ, b_ν)` in the frame `f`.
fn frame_expansion(
    frame: &FrameField,
    x2: &MultivectorField,
    mut g: impl FnMut(&VectorField, &VectorField) -> Result<MultivectorField>,
) -> Result<MultivectorField> {
    let n = frame.n();
    let mut acc: Option<MultivectorField> = None;
    for mu in 0..n {
        for nu in 0..n {
            let k = frame.coform(mu).wedge(&frame.coform(nu))?.dsp(x2)?.scale(0.5);
            let term = g(&frame.vector(mu), &frame.vector(nu))?.times(&k);
            acc = Some(match acc {
                Some(a) => a.add(&term)?,
                None => term,
            });
        }
    }
    Ok(acc.expect("n ≥ 1"))
}

fn prop_torsion_frame_independent(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let f = random::frame_field(r, n, &c.pts);
    let x2 = random::homogeneous_field(r, c.v, 2);
    let framed = frame_expansion(&f, &x2, |a, b| torsion(&conn, a, b))?;
    Ok(c.residual(c.gap(&framed, &torsion_T(&conn)?.eval_fields(&[&x2])?), "𝒯 in a random frame"))
}

fn prop_theta_frame_independent(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let f = random::frame_field(r, n, &c.pts);
    let w = c.form(r);
    let mut framed = MultivectorField::zero(c.d);
    for mu in 0..n {
        for nu in 0..n {
            let k = w.dsp(&torsion(&conn, &f.vector(mu), &f.vector(nu))?)?.scale(0.5);
            framed = framed.add(&f.coform(mu).wedge(&f.coform(nu))?.times(&k))?;
        }
    }
    Ok(c.residual(c.gap(&framed, &cartan_theta(&conn, &w)?), "Θ in a random frame"))
}

fn prop_symmetric_torsion_free(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::symmetric_connection(r, n);
    let (a, b, w) = (c.vector(r), c.vector(r), c.form(r));
    let x2 = random::homogeneous_field(r, c.v, 2);
    let values = [
        c.gap(&torsion(&conn, &a, &b)?, &zero(&c)),
        c.gap(&torsion_T(&conn)?.eval_fields(&[&x2])?, &zero(&c)),
        c.gap(&cartan_theta(&conn, &w)?, &MultivectorField::zero(c.d)),
    ];
    let bracket = conn.nabla_vec(&a, &b)?.sub(&conn.nabla_vec(&b, &a)?)?;
    let values = [values[0], values[1], values[2], c.gap(&bracket, &lie_bracket(&a, &b)?)];
    Ok(Residual::max(&values, "τ, 𝒯, Θ and ∇_a b − ∇_b a − [a,b] for symmetric γ"))
}

fn prop_curvature_antisymmetric(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, b, w) = (c.vector(r), c.vector(r), c.vector(r));
    let sum = curvature(&conn, &a, &b, &w)?.add(&curvature(&conn, &b, &a, &w)?)?;
    Ok(c.residual(c.gap(&sum, &zero(&c)), "ρ(a,b,c) + ρ(b,a,c)"))
}

fn prop_curvature_function_linear(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let mut args = [c.vector(r), c.vector(r), c.vector(r)];
    let (f, g) = (random::polynomial(r, n), random::polynomial(r, n));
    let slot = random::index(r, 3);
    let extra = c.vector(r);
    let base = curvature(&conn, &args[0], &args[1], &args[2])?;
    let other = {
        let mut a = args.clone();
        a[slot] = extra.clone();
        curvature(&conn, &a[0], &a[1], &a[2])?
    };
    args[slot] = args[slot].times(&f).add(&extra.times(&g))?;
    let lhs = curvature(&conn, &args[0], &args[1], &args[2])?;
    let rhs = base.times(&f).add(&other.times(&g))?;
    Ok(c.residual(c.gap(&lhs, &rhs), &format!("slot {}", slot + 1)))
}

fn prop_curvature_coordinate_oracle(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let e = basis(&c)?;
    let mut worst: f64 = 0.0;
    for mu in 0..n {
        for nu in 0..n {
            for rho in 0..n {
                let got = curvature(&conn, &e[mu], &e[nu], &e[rho])?.vector_comps();
                for s in 0..n {
                    worst = worst.max(c.gap_expr(&got[s], &coordinate_curvature(&conn, s, mu, nu, rho)));
                }
            }
        }
    }
    Ok(c.residual(worst, "ρ(∂_μ,∂_ν,∂_ρ) against R^σ_{μνρ}"))
}

fn prop_curvature_r_on_bivectors(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, b, w) = (c.vector(r), c.vector(r), c.vector(r));
    let got = curvature_R(&conn, &a.wedge(&b)?, &w)?;
    Ok(c.residual(c.gap(&got, &curvature(&conn, &a, &b, &w)?), "ℛ(a∧b, c)"))
}

fn prop_curvature_r_frame_independent(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let f = random::frame_field(r, n, &c.pts);
    let x2 = random::homogeneous_field(r, c.v, 2);
    let w = c.vector(r);
    let framed = frame_expansion(&f, &x2, |a, b| curvature(&conn, a, b, &w))?;
    Ok(c.residual(c.gap(&framed, &curvature_R(&conn, &x2, &w)?), "ℛ in a random frame"))
}

fn cyclic_residual(c: &Ctx, conn: &Connection, a: &VectorField, b: &VectorField, w: &VectorField) -> Result<f64> {
    let sum = curvature(conn, a, b, w)?.add(&curvature(conn, b, w, a)?)?.add(&curvature(conn, w, a, b)?)?;
    Ok(c.gap(&sum, &zero(c)))
}

/// `(∇_wρ)(a,b,c) + (∇_aρ)(b,w,c) + (∇_bρ)(w,a,c)`.
fn bianchi_residual(c: &Ctx, conn: &Connection, fields: [&VectorField; 4]) -> Result<f64> {
    let [w, a, b, x] = fields;
    let rho = curvature_extensor(conn)?;
    let d = |dir: &VectorField, p: &VectorField, q: &VectorField| -> Result<MultivectorField> {
        conn.nabla_extensor(dir, &rho)?.eval_fields(&[p, q, x])
    };
    let sum = d(w, a, b)?.add(&d(a, b, w)?)?.add(&d(b, w, a)?)?;
    Ok(c.gap(&sum, &zero(c)))
}

fn prop_cyclic_symmetric(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::symmetric_connection(r, n);
    let (a, b, w) = (c.vector(r), c.vector(r), c.vector(r));
    Ok(c.residual(cyclic_residual(&c, &conn, &a, &b, &w)?, "cyclic sum, symmetric γ"))
}

fn prop_bianchi_symmetric(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::symmetric_connection(r, n);
    let f: Vec<VectorField> = (0..4).map(|_| c.vector(r)).collect();
    Ok(c.residual(bianchi_residual(&c, &conn, [&f[0], &f[1], &f[2], &f[3]])?, "Bianchi sum, symmetric γ"))
}

fn prop_curvature_extensor_matches(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = any_connection(r, n);
    let (a, b, w) = (c.vector(r), c.vector(r), c.vector(r));
    let got = curvature_extensor(&conn)?.eval_fields(&[&a, &b, &w])?;
    Ok(c.residual(c.gap(&got, &curvature(&conn, &a, &b, &w)?), "ρ as an extensor field"))
}

fn prop_sphere_torsion_free(_: usize, r: &mut TestRng) -> Result<Residual> {
    let c = sphere_ctx(r, 10)?;
    let conn = presets::sphere().connection;
    let e = basis(&c)?;
    let (a, b) = (c.vector(r), c.vector(r));
    let values = [c.gap(&torsion(&conn, &e[0], &e[1])?, &zero(&c)), c.gap(&torsion(&conn, &a, &b)?, &zero(&c))];
    Ok(Residual::max(&values, "sphere τ(∂_u,∂_v) and τ(a,b) at 10 points"))
}

fn prop_sphere_curvature_oracle(_: usize, r: &mut TestRng) -> Result<Residual> {
    let c = sphere_ctx(r, POINTS)?;
    let conn = presets::sphere().connection;
    let e = basis(&c)?;
    let mut worst: f64 = 0.0;
    for mu in 0..2 {
        for nu in 0..2 {
            for rho in 0..2 {
                let got = curvature(&conn, &e[mu], &e[nu], &e[rho])?.vector_comps();
                for s in 0..2 {
                    worst = worst.max(c.gap_expr(&got[s], &coordinate_curvature(&conn, s, mu, nu, rho)));
                }
            }
        }
    }
    Ok(c.residual(worst, "sphere ρ(∂_μ,∂_ν,∂_ρ) against R^σ_{μνρ}"))
}

fn prop_sphere_profile(_: usize, r: &mut TestRng) -> Result<Residual> {
    let v = random::uniform(r, -1.0, 1.0);
    let c = Ctx::at(2, [0.5, 1.0, 1.5, PI / 2.0].iter().map(|&u| vec![u, v]).collect())?;
    let conn = presets::sphere().connection;
    let e = basis(&c)?;
    let got = curvature(&conn, &e[0], &e[1], &e[1])?.vector_comps();
    let mut worst: f64 = 0.0;
    for p in &c.pts {
        let want = [coordinate_curvature(&conn, 0, 0, 1, 1).eval(p), coordinate_curvature(&conn, 1, 0, 1, 1).eval(p)];
        worst = worst.max((got[0].eval(p) - want[0]).abs()).max((got[1].eval(p) - want[1]).abs());
        // the oracle value itself is sin²u ∂_u
        worst = worst.max((want[0] - p[0].sin().powi(2)).abs()).max(want[1].abs());
    }
    Ok(c.residual(worst, "ρ(∂_u,∂_v,∂_v) at u ∈ {0.5, 1, 1.5, π/2}"))
}

fn prop_sphere_cyclic(_: usize, r: &mut TestRng) -> Result<Residual> {
    let c = sphere_ctx(r, POINTS)?;
    let conn = presets::sphere().connection;
    let (a, b, w) = (c.vector(r), c.vector(r), c.vector(r));
    Ok(c.residual(cyclic_residual(&c, &conn, &a, &b, &w)?, "sphere cyclic sum"))
}

fn prop_sphere_bianchi(_: usize, r: &mut TestRng) -> Result<Residual> {
    let c = sphere_ctx(r, POINTS)?;
    let conn = presets::sphere().connection;
    let f: Vec<VectorField> = (0..4).map(|_| c.vector(r)).collect();
    Ok(c.residual(bianchi_residual(&c, &conn, [&f[0], &f[1], &f[2], &f[3]])?, "sphere Bianchi sum"))
}

fn prop_sphere_split(_: usize, r: &mut TestRng) -> Result<Residual> {
    let c = sphere_ctx(r, POINTS)?;
    let conn = presets::sphere().connection;
    let e = basis(&c)?;
    let g = gamma_split(&conn, &FrameField::coordinate(2))?;
    let got = g.eval_fields(&[&e[0], &e[1]])?;
    let cot = Expr::coord(0).cos() / Expr::coord(0).sin();
    let want = e[1].times(&cot);
    let via_op = split_operator(&g, &e[0])?.apply(&e[1])?;
    Ok(Residual::max(&[c.gap(&got, &want), c.gap(&via_op, &want)], "sphere γ(∂_u,∂_v) = cot u ∂_v"))
}

fn prop_sphere_derivative(_: usize, _: &mut TestRng) -> Result<Residual> {
    let c = Ctx::at(2, vec![vec![PI / 3.0, 0.0], vec![PI / 3.0, 1.0]])?;
    let conn = presets::sphere().connection;
    let e = basis(&c)?;
    let got = conn.nabla_vec(&e[0], &e[1])?;
    let want = e[1].times(&Expr::constant(1.0 / (PI / 3.0).tan()));
    Ok(c.residual(c.gap(&got, &want), "∇_{∂_u}∂_v at u = π/3"))
}

pub(super) fn properties() -> Vec<Property> {
    let p = |name, f| Property::new(name, f).dims(2, 3);
    let sphere = |name, f| Property::new(name, f).dims(2, 2);
    vec![
        p("torsion/antisymmetric", prop_torsion_antisymmetric),
        p("torsion/coefficient-oracle", prop_torsion_coefficient_oracle),
        p("torsion/reconstruct-from-tensor", prop_torsion_reconstruction),
        p("torsion/extensor-on-bivectors", prop_torsion_extensor_on_bivectors),
        p("torsion/theta-matches-tensor", prop_theta_matches_tensor),
        p("torsion/extensor-frame-independent", prop_torsion_frame_independent),
        p("torsion/theta-frame-independent", prop_theta_frame_independent),
        p("torsion/symmetric-is-torsion-free", prop_symmetric_torsion_free),
        p("curvature/antisymmetric", prop_curvature_antisymmetric),
        p("curvature/function-linear", prop_curvature_function_linear),
        p("curvature/coordinate-oracle", prop_curvature_coordinate_oracle),
        p("curvature/R-on-bivectors", prop_curvature_r_on_bivectors),
        p("curvature/R-frame-independent", prop_curvature_r_frame_independent),
        p("curvature/extensor-matches", prop_curvature_extensor_matches),
        p("curvature/cyclic-symmetric", prop_cyclic_symmetric),
        p("curvature/bianchi-symmetric", prop_bianchi_symmetric),
        sphere("sphere/torsion-free", prop_sphere_torsion_free),
        sphere("sphere/curvature-oracle", prop_sphere_curvature_oracle),
        sphere("sphere/sin-squared-profile", prop_sphere_profile).cap(5),
        sphere("sphere/cyclic", prop_sphere_cyclic),
        sphere("sphere/bianchi", prop_sphere_bianchi),
        sphere("sphere/split-coordinate-frame", prop_sphere_split),
        sphere("sphere/derivative-at-third-pi", prop_sphere_derivative).cap(1),
    ]
}
