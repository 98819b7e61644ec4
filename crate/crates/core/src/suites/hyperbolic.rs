use super::{Property, Residual};
use crate::error::Result;
use crate::exterior::BaseSpace;
use crate::hyperbolic::*;
use crate::random::{self, TestRng};
use crate::{duality, Multivector as M};

fn space(n: usize) -> BaseSpace {
    BaseSpace::hyperbolic(n).expect("supported dimension")
}

fn elem(r: &mut TestRng, n: usize) -> M {
    random::multivector(r, space(n))
}

fn vector(r: &mut TestRng, n: usize) -> M {
    random::vector(r, space(n))
}

fn primal(r: &mut TestRng, n: usize) -> M {
    embed(&random::multivector(r, BaseSpace::primal(n).unwrap())).unwrap()
}

fn dual(r: &mut TestRng, n: usize) -> M {
    embed(&random::multivector(r, BaseSpace::dual(n).unwrap())).unwrap()
}

fn one(n: usize) -> M {
    M::scalar(space(n), 1.0)
}

fn lc(a: &M, b: &M) -> Result<M> {
    hv_lcontr(a, b)
}

fn rc(a: &M, b: &M) -> Result<M> {
    hv_rcontr(a, b)
}

fn gp(a: &M, b: &M) -> Result<M> {
    clifford(a, b)
}

fn sign_n(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn desc(items: &[(&str, &M)]) -> String {
    items.iter().map(|(k, v)| format!("{k}=[{v}]")).collect::<Vec<_>>().join(" ")
}

pub(super) fn properties() -> Vec<Property> {
    vec![
        Property::new("contraction/vectors-give-inner-product", |n, r| {
            let (x, y) = (vector(r, n), vector(r, n));
            let ip = inner_of(&x, &y)?;
            let a = lc(&x, &y)?.distance(&M::scalar(space(n), ip));
            let b = rc(&x, &y)?.distance(&M::scalar(space(n), ip));
            Ok(Residual::max(&[a, b], desc(&[("x", &x), ("y", &y)])))
        }),
        Property::new("contraction/units", |n, r| {
            let (u, x) = (elem(r, n), vector(r, n));
            let a = lc(&one(n), &u)?.distance(&u);
            let b = rc(&u, &one(n))?.distance(&u);
            let c = lc(&x, &one(n))?.max_abs();
            let d = rc(&one(n), &x)?.max_abs();
            Ok(Residual::max(&[a, b, c, d], desc(&[("u", &u), ("x", &x)])))
        }),
        Property::new("contraction/left-adjunction", |n, r| {
            let (u, v, w) = (elem(r, n), elem(r, n), elem(r, n));
            let lhs = gram_inner(&lc(&u, &v)?, &w)?;
            let rhs = gram_inner(&v, &u.reversion().wedge(&w)?)?;
            Ok(Residual::new((lhs - rhs).abs(), desc(&[("u", &u), ("v", &v), ("w", &w)])))
        }),
        Property::new("contraction/right-adjunction", |n, r| {
            let (u, v, w) = (elem(r, n), elem(r, n), elem(r, n));
            let lhs = gram_inner(&rc(&v, &u)?, &w)?;
            let rhs = gram_inner(&v, &w.wedge(&u.reversion())?)?;
            Ok(Residual::new((lhs - rhs).abs(), desc(&[("u", &u), ("v", &v), ("w", &w)])))
        }),
        Property::new("contraction/grade-involution", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let (uh, vh) = (u.grade_involution(), v.grade_involution());
            let a = lc(&u, &v)?.grade_involution().distance(&lc(&uh, &vh)?);
            let b = rc(&u, &v)?.grade_involution().distance(&rc(&uh, &vh)?);
            Ok(Residual::max(&[a, b], desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("contraction/reversion-swaps-sides", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let (ut, vt) = (u.reversion(), v.reversion());
            let a = lc(&u, &v)?.reversion().distance(&rc(&vt, &ut)?);
            let b = rc(&u, &v)?.reversion().distance(&lc(&vt, &ut)?);
            Ok(Residual::max(&[a, b], desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("contraction/left-of-left", |n, r| {
            let (u, v, w) = (elem(r, n), elem(r, n), elem(r, n));
            let res = lc(&u, &lc(&v, &w)?)?.distance(&lc(&u.wedge(&v)?, &w)?);
            Ok(Residual::new(res, desc(&[("u", &u), ("v", &v), ("w", &w)])))
        }),
        Property::new("contraction/right-of-right", |n, r| {
            let (u, v, w) = (elem(r, n), elem(r, n), elem(r, n));
            let res = rc(&rc(&u, &v)?, &w)?.distance(&rc(&u, &v.wedge(&w)?)?);
            Ok(Residual::new(res, desc(&[("u", &u), ("v", &v), ("w", &w)])))
        }),
        Property::new("contraction/left-right-associate", |n, r| {
            let (u, v, w) = (elem(r, n), elem(r, n), elem(r, n));
            let res = rc(&lc(&u, &v)?, &w)?.distance(&lc(&u, &rc(&v, &w)?)?);
            Ok(Residual::new(res, desc(&[("u", &u), ("v", &v), ("w", &w)])))
        }),
        Property::new("contraction/vector-left-derivation", |n, r| {
            let (x, v, w) = (vector(r, n), elem(r, n), elem(r, n));
            let lhs = lc(&x, &v.wedge(&w)?)?;
            let rhs = lc(&x, &v)?.wedge(&w)? + v.grade_involution().wedge(&lc(&x, &w)?)?;
            Ok(Residual::new(lhs.distance(&rhs), desc(&[("x", &x), ("v", &v), ("w", &w)])))
        }),
        Property::new("contraction/vector-right-derivation", |n, r| {
            let (x, u, v) = (vector(r, n), elem(r, n), elem(r, n));
            let lhs = rc(&u.wedge(&v)?, &x)?;
            let rhs = u.wedge(&rc(&v, &x)?)? + rc(&u, &x)?.wedge(&v.grade_involution())?;
            Ok(Residual::new(lhs.distance(&rhs), desc(&[("x", &x), ("u", &u), ("v", &v)])))
        }),
        Property::new("contraction/wedge-into-left", |n, r| {
            let (x, v, w) = (vector(r, n), elem(r, n), elem(r, n));
            let vh = v.grade_involution();
            let lhs = x.wedge(&lc(&v, &w)?)?;
            let rhs = lc(&vh, &x.wedge(&w)?)? - lc(&rc(&vh, &x)?, &w)?;
            Ok(Residual::new(lhs.distance(&rhs), desc(&[("x", &x), ("v", &v), ("w", &w)])))
        }),
        Property::new("contraction/wedge-into-right", |n, r| {
            let (x, u, v) = (vector(r, n), elem(r, n), elem(r, n));
            let vh = v.grade_involution();
            let lhs = rc(&u, &v)?.wedge(&x)?;
            let rhs = rc(&u.wedge(&x)?, &vh)? - rc(&u, &lc(&x, &vh)?)?;
            Ok(Residual::new(lhs.distance(&rhs), desc(&[("x", &x), ("u", &u), ("v", &v)])))
        }),
        Property::new("contraction/even-odd-swap", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let (ue, uo) = (u.even(), u.odd());
            let a = lc(&ue, &v)?.distance(&rc(&v, &ue)?);
            let b = lc(&uo, &v)?.distance(&rc(&v.grade_involution(), &uo.grade_involution())?);
            Ok(Residual::max(&[a, b], desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("contraction/pseudoscalar-duality", |n, r| {
            let (u, v, w) = (elem(r, n), elem(r, n), elem(r, n));
            let s = sigma(n)?;
            let a = u.wedge(&lc(&v, &s)?)?.distance(&lc(&lc(&u, &v)?, &s)?);
            let b = rc(&s, &v)?.wedge(&w)?.distance(&rc(&s, &rc(&v, &w)?)?);
            Ok(Residual::max(&[a, b], desc(&[("u", &u), ("v", &v), ("w", &w)])))
        }),
        Property::new("contraction/isotropic-subalgebras", |n, r| {
            let (a, b) = (primal(r, n), primal(r, n));
            let (c, d) = (dual(r, n), dual(r, n));
            // the scalar parts pair with everything, so drop them first
            let (a, b, c, d) = (&a - &a.part(0), &b - &b.part(0), &c - &c.part(0), &d - &d.part(0));
            let vals = [lc(&a, &b)?.max_abs(), rc(&a, &b)?.max_abs(), lc(&c, &d)?.max_abs(), rc(&c, &d)?.max_abs()];
            Ok(Residual::max(&vals, desc(&[("u_*", &a), ("v_*", &b), ("u^*", &c), ("v^*", &d)])))
        }),
        Property::new("contraction/vector-into-split-element", |n, r| {
            let (us, uu, x) = (primal(r, n), dual(r, n), vector(r, n));
            let (xs, xu) = split_vector(&x)?;
            let u = us.wedge(&uu)?;
            let rhs = lc(&xu, &us)?.wedge(&uu)? + us.grade_involution().wedge(&lc(&xs, &uu)?)?;
            Ok(Residual::new(lc(&x, &u)?.distance(&rhs), desc(&[("u_*", &us), ("u^*", &uu), ("x", &x)])))
        }),
        Property::new("contraction/split-element-by-vector", |n, r| {
            let (us, uu, x) = (primal(r, n), dual(r, n), vector(r, n));
            let (xs, xu) = split_vector(&x)?;
            let u = us.wedge(&uu)?;
            let rhs = us.wedge(&rc(&uu, &xs)?)? + rc(&us, &xu)?.wedge(&uu.grade_involution())?;
            Ok(Residual::new(rc(&u, &x)?.distance(&rhs), desc(&[("u_*", &us), ("u^*", &uu), ("x", &x)])))
        }),
        Property::new("contraction/agrees-with-duality-contraction", |n, r| {
            let phi = random::multivector(r, BaseSpace::dual(n)?);
            let x = random::multivector(r, BaseSpace::primal(n)?);
            let a = lc(&embed(&phi)?, &embed(&x)?)?.distance(&embed(&duality::lcontr(&phi, &x)?)?);
            let b = lc(&embed(&x)?, &embed(&phi)?)?.distance(&embed(&duality::lcontr(&x, &phi)?)?);
            let c = rc(&embed(&phi)?, &embed(&x)?)?.distance(&embed(&duality::rcontr(&phi, &x)?)?);
            let d = rc(&embed(&x)?, &embed(&phi)?)?.distance(&embed(&duality::rcontr(&x, &phi)?)?);
            let e = (gram_inner(&embed(&phi)?, &embed(&x)?)? - duality::dsp(&phi, &x)?).abs();
            Ok(Residual::max(&[a, b, c, d, e], desc(&[("phi", &phi), ("x", &x)])))
        }),
        Property::new("gram/determinant-of-simple-elements", |n, r| {
            let k = random::index(r, 2 * n + 1);
            let xs: Vec<Vecfor> = (0..k).map(|_| random::vecfor(r, n)).collect();
            let ys: Vec<Vecfor> = (0..k).map(|_| random::vecfor(r, n)).collect();
            let wedge_all =
                |vs: &[Vecfor]| -> Result<M> { vs.iter().try_fold(one(n), |acc, v| acc.wedge(&v.to_multivector()?)) };
            let g = nalgebra::DMatrix::from_fn(k, k, |i, j| hv_inner(&xs[i], &ys[j]));
            let det = if k == 0 { 1.0 } else { g.determinant() };
            let ip = gram_inner(&wedge_all(&xs)?, &wedge_all(&ys)?)?;
            Ok(Residual::new((ip - det).abs(), format!("k={k}")))
        }),
        Property::new("gram/split-simple-elements", |n, r| {
            let k = random::index(r, n + 1);
            let l = random::index(r, n + 1);
            let simple = |r: &mut TestRng, space: BaseSpace, g: usize| -> Result<M> {
                (0..g).try_fold(M::scalar(space, 1.0), |acc, _| acc.wedge(&random::vector(r, space)))
            };
            let (vs, ds) = (BaseSpace::primal(n)?, BaseSpace::dual(n)?);
            let (us, uu) = (simple(r, vs, k)?, simple(r, ds, l)?);
            let (ws, wu) = (simple(r, vs, l)?, simple(r, ds, k)?);
            let lhs = gram_inner(&embed(&us)?.wedge(&embed(&uu)?)?, &embed(&ws)?.wedge(&embed(&wu)?)?)?;
            let sign = if (k * l) % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * duality::dsp(&uu, &ws)? * duality::dsp(&wu, &us)?;
            Ok(Residual::new((lhs - rhs).abs(), desc(&[("u_*", &us), ("u^*", &uu), ("v_*", &ws), ("v^*", &wu)])))
        }),
        Property::new("sigma/frame-invariant", |n, r| {
            let lam = random::invertible_matrix(r, n);
            let inv_t = lam.clone().try_inverse().expect("invertible").transpose();
            let mut es = one(n);
            let mut ts = one(n);
            for j in 0..n {
                let e: Vec<f64> = (0..n).map(|i| lam[(i, j)]).collect();
                let t: Vec<f64> = (0..n).map(|i| inv_t[(i, j)]).collect();
                es = es.wedge(&Vecfor::new(e, vec![0.0; n])?.to_multivector()?)?;
                ts = ts.wedge(&Vecfor::new(vec![0.0; n], t)?.to_multivector()?)?;
            }
            Ok(Residual::new(es.wedge(&ts)?.distance(&sigma(n)?), format!("lambda={lam:?}")))
        }),
        Property::new("orthonormal/reconstruct", |n, r| {
            let x = random::vecfor(r, n);
            let c = x.orthonormal_components();
            let basis = orthonormal_basis(n)?;
            let mut sum = M::zero(space(n));
            for (ck, b) in c.iter().zip(&basis) {
                sum += &b.scale(*ck);
            }
            let mut g = 0.0f64;
            for (k, a) in basis.iter().enumerate() {
                for (l, b) in basis.iter().enumerate() {
                    let expect = if k != l {
                        0.0
                    } else if k < n {
                        1.0
                    } else {
                        -1.0
                    };
                    g = g.max((gram_inner(a, b)? - expect).abs());
                }
            }
            let xm = x.to_multivector()?;
            Ok(Residual::max(&[sum.distance(&xm), g], desc(&[("x", &xm)])))
        }),
        Property::new("gram/symmetric", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let res = (gram_inner(&u, &v)? - gram_inner(&v, &u)?).abs();
            Ok(Residual::new(res, desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("hodge/pseudoscalar", |n, _| {
            let s = sigma(n)?;
            let a = hodge(&s)?.distance(&M::scalar(space(n), sign_n(n)));
            let b = hodge_inv(&s)?.distance(&one(n));
            Ok(Residual::max(&[a, b], ""))
        }),
        Property::new("hodge/inverse", |n, r| {
            let u = elem(r, n);
            let a = hodge_inv(&hodge(&u)?)?.distance(&u);
            let b = hodge(&hodge_inv(&u)?)?.distance(&u);
            Ok(Residual::max(&[a, b], desc(&[("u", &u)])))
        }),
        Property::new("hodge/isometry-up-to-sign", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let res = (gram_inner(&hodge(&u)?, &hodge(&v)?)? - sign_n(n) * gram_inner(&u, &v)?).abs();
            Ok(Residual::new(res, desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("hodge/of-wedge", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let a = hodge(&u.wedge(&v)?)?.distance(&lc(&v.reversion(), &hodge(&u)?)?);
            let b = hodge_inv(&u.wedge(&v)?)?.distance(&rc(&hodge_inv(&v)?, &u.reversion())?);
            Ok(Residual::max(&[a, b], desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("hodge/of-contraction", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let a = hodge(&rc(&u, &v)?)?.distance(&v.reversion().wedge(&hodge(&u)?)?);
            let b = hodge_inv(&lc(&u, &v)?)?.distance(&hodge_inv(&v)?.wedge(&u.reversion())?);
            Ok(Residual::max(&[a, b], desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("hodge/vector-expansion", |n, r| {
            let x = vector(r, n);
            let (xs, xu) = split_vector(&x)?;
            let rhs = lc(&xu, &e_star(n)?)?.wedge(&theta_star(n)?)? - e_star(n)?.wedge(&rc(&theta_star(n)?, &xs)?)?;
            Ok(Residual::new(hodge(&x)?.distance(&rhs), desc(&[("x", &x)])))
        }),
        Property::new("poincare/hodge-of-form", |n, r| {
            let u = random::multivector(r, BaseSpace::dual(n)?);
            let lhs = hodge(&embed(&u)?)?;
            let rhs = embed(&poincare_down(&u)?)?.wedge(&theta_star(n)?)?;
            Ok(Residual::new(lhs.distance(&rhs), desc(&[("u^*", &u)])))
        }),
        Property::new("poincare/hodge-of-vector", |n, r| {
            let u = random::multivector(r, BaseSpace::primal(n)?);
            let lhs = hodge(&embed(&u)?)?;
            let rhs = e_star(n)?.wedge(&embed(&poincare_up(&u)?)?)?;
            Ok(Residual::new(lhs.distance(&rhs), desc(&[("u_*", &u)])))
        }),
        Property::new("poincare/hodge-of-split-element", |n, r| {
            let k = random::index(r, n + 1);
            let l = random::index(r, n + 1);
            let us = random::homogeneous(r, BaseSpace::primal(n)?, k);
            let uu = random::homogeneous(r, BaseSpace::dual(n)?, l);
            let lhs = hodge(&embed(&us)?.wedge(&embed(&uu)?)?)?;
            let rhs = embed(&poincare_down(&uu)?)?.wedge(&embed(&poincare_up(&us)?)?)?;
            Ok(Residual::new(lhs.distance(&rhs), desc(&[("u_*", &us), ("u^*", &uu)])))
        }),
        Property::new("poincare/isomorphisms-invert", |n, r| {
            let u = random::multivector(r, BaseSpace::primal(n)?);
            let f = random::multivector(r, BaseSpace::dual(n)?);
            // D_∦ D^∦ and D^∦ D_∦ are identities up to a grade sign, so compare magnitudes blade by blade
            let a = poincare_down(&poincare_up(&u)?)?;
            let b = poincare_up(&poincare_down(&f)?)?;
            let ra = a.coeffs().iter().zip(u.coeffs()).fold(0.0f64, |m, (x, y)| m.max((x.abs() - y.abs()).abs()));
            let rb = b.coeffs().iter().zip(f.coeffs()).fold(0.0f64, |m, (x, y)| m.max((x.abs() - y.abs()).abs()));
            Ok(Residual::max(&[ra, rb], desc(&[("u_*", &u), ("u^*", &f)])))
        }),
        Property::new("clifford/vector-product-rule", |n, r| {
            let (x, u) = (vector(r, n), elem(r, n));
            let res = gp(&x, &u)?.distance(&(lc(&x, &u)? + x.wedge(&u)?));
            Ok(Residual::new(res, desc(&[("x", &x), ("u", &u)])))
        }),
        Property::new("clifford/associative", |n, r| {
            let (u, v, w) = (elem(r, n), elem(r, n), elem(r, n));
            let res = gp(&gp(&u, &v)?, &w)?.distance(&gp(&u, &gp(&v, &w)?)?);
            Ok(Residual::new(res, desc(&[("u", &u), ("v", &v), ("w", &w)])))
        }),
        Property::new("clifford/vector-anticommutator", |n, r| {
            let (x, y) = (random::vecfor(r, n), random::vecfor(r, n));
            let (a, b) = (x.to_multivector()?, y.to_multivector()?);
            let lhs = gp(&a, &b)? + gp(&b, &a)?;
            let res = lhs.distance(&M::scalar(space(n), 2.0 * hv_inner(&x, &y)));
            Ok(Residual::new(res, desc(&[("x", &a), ("y", &b)])))
        }),
        Property::new("clifford/orthonormal-relations", |n, _| {
            let b = orthonormal_basis(n)?;
            let mut worst = 0.0f64;
            for k in 0..2 * n {
                for l in 0..2 * n {
                    let ac = gp(&b[k], &b[l])? + gp(&b[l], &b[k])?;
                    let expect = match (k == l, k < n) {
                        (false, _) => 0.0,
                        (true, true) => 2.0,
                        (true, false) => -2.0,
                    };
                    worst = worst.max(ac.distance(&M::scalar(space(n), expect)));
                }
            }
            Ok(Residual::new(worst, ""))
        }),
        Property::new("clifford/witt-relations", |n, _| {
            let mut worst = 0.0f64;
            for k in 0..2 * n {
                for l in 0..2 * n {
                    let a = M::generator(space(n), k)?;
                    let b = M::generator(space(n), l)?;
                    let ac = gp(&a, &b)? + gp(&b, &a)?;
                    let expect = if partner(1 << k, n) == 1 << l { 2.0 } else { 0.0 };
                    worst = worst.max(ac.distance(&M::scalar(space(n), expect)));
                }
            }
            Ok(Residual::new(worst, ""))
        }),
        Property::new("clifford/pseudoscalar-products", |n, r| {
            let u = elem(r, n);
            let s = sigma(n)?;
            let a = lc(&u, &s)?.distance(&gp(&u, &s)?);
            let b = rc(&s, &u)?.distance(&gp(&s, &u)?);
            let c = gp(&s, &s)?.distance(&one(n));
            Ok(Residual::max(&[a, b, c], desc(&[("u", &u)])))
        }),
        Property::new("clifford/inner-product-transfer", |n, r| {
            let (u, v, w) = (elem(r, n), elem(r, n), elem(r, n));
            let a = gram_inner(&u, &gp(&v, &w)?)?;
            let b = gram_inner(&gp(&v.reversion(), &u)?, &w)?;
            let c = gram_inner(&gp(&u, &w.reversion())?, &v)?;
            Ok(Residual::max(&[(a - b).abs(), (a - c).abs()], desc(&[("u", &u), ("v", &v), ("w", &w)])))
        }),
        Property::new("clifford/wedge-and-contraction-by-vector", |n, r| {
            let (x, u) = (vector(r, n), elem(r, n));
            let uh = u.grade_involution();
            let (xu, ux, uhx, xuh) = (gp(&x, &u)?, gp(&u, &x)?, gp(&uh, &x)?, gp(&x, &uh)?);
            let vals = [
                x.wedge(&u)?.distance(&(&xu + &uhx).scale(0.5)),
                u.wedge(&x)?.distance(&(&ux + &xuh).scale(0.5)),
                lc(&x, &u)?.distance(&(&xu - &uhx).scale(0.5)),
                rc(&u, &x)?.distance(&(&ux - &xuh).scale(0.5)),
            ];
            Ok(Residual::max(&vals, desc(&[("x", &x), ("u", &u)])))
        }),
        Property::new("clifford/contraction-of-product", |n, r| {
            let (x, u, v) = (vector(r, n), elem(r, n), elem(r, n));
            let (uh, vh) = (u.grade_involution(), v.grade_involution());
            let uv = gp(&u, &v)?;
            let a = lc(&x, &uv)?.distance(&(gp(&lc(&x, &u)?, &v)? + gp(&uh, &lc(&x, &v)?)?));
            let b = rc(&uv, &x)?.distance(&(gp(&u, &rc(&v, &x)?)? + gp(&rc(&u, &x)?, &vh)?));
            Ok(Residual::max(&[a, b], desc(&[("x", &x), ("u", &u), ("v", &v)])))
        }),
        Property::new("clifford/wedge-with-product", |n, r| {
            let (x, u, v) = (vector(r, n), elem(r, n), elem(r, n));
            let (uh, vh) = (u.grade_involution(), v.grade_involution());
            let uv = gp(&u, &v)?;
            let l = x.wedge(&uv)?;
            let a = l.distance(&(gp(&lc(&x, &u)?, &v)? + gp(&uh, &x.wedge(&v)?)?));
            let b = l.distance(&(gp(&x.wedge(&u)?, &v)? - gp(&uh, &lc(&x, &v)?)?));
            let rr = uv.wedge(&x)?;
            let c = rr.distance(&(gp(&u, &v.wedge(&x)?)? - gp(&rc(&u, &x)?, &vh)?));
            let d = rr.distance(&(gp(&u, &rc(&v, &x)?)? + gp(&u.wedge(&x)?, &vh)?));
            Ok(Residual::max(&[a, b, c, d], desc(&[("x", &x), ("u", &u), ("v", &v)])))
        }),
        Property::new("clifford/hodge-as-product", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let s = sigma(n)?;
            let a = hodge(&u)?.distance(&gp(&u.reversion(), &s)?);
            let b = hodge_inv(&u)?.distance(&gp(&s.reversion(), &u.reversion())?);
            let uv = gp(&u, &v)?;
            let c = hodge(&uv)?.distance(&gp(&v.reversion(), &hodge(&u)?)?);
            let d = hodge_inv(&uv)?.distance(&gp(&hodge_inv(&v)?, &u.reversion())?);
            Ok(Residual::max(&[a, b, c, d], desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("clifford/involutions", |n, r| {
            let (u, v) = (elem(r, n), elem(r, n));
            let uv = gp(&u, &v)?;
            let a = uv.grade_involution().distance(&gp(&u.grade_involution(), &v.grade_involution())?);
            let b = uv.reversion().distance(&gp(&v.reversion(), &u.reversion())?);
            let c = uv.conjugation().distance(&gp(&v.conjugation(), &u.conjugation())?);
            Ok(Residual::max(&[a, b, c], desc(&[("u", &u), ("v", &v)])))
        }),
        Property::new("clifford/vector-times-split-element", |n, r| {
            let (us, uu, x) = (primal(r, n), dual(r, n), vector(r, n));
            let (xs, xu) = split_vector(&x)?;
            let lhs = gp(&x, &us.wedge(&uu)?)?;
            let rhs = gp(&xu, &us)?.wedge(&uu)? + us.grade_involution().wedge(&gp(&xs, &uu)?)?;
            Ok(Residual::new(lhs.distance(&rhs), desc(&[("u_*", &us), ("u^*", &uu), ("x", &x)])))
        }),
        Property::new("conjugate/reverses-inner-product", |n, r| {
            let (x, y) = (random::vecfor(r, n), random::vecfor(r, n));
            let a = (hv_inner(&x.hyperbolic_conjugate(), &y.hyperbolic_conjugate()) + hv_inner(&x, &y)).abs();
            let xm = x.to_multivector()?;
            let b = hyperbolic_conjugate(&xm)?.distance(&x.hyperbolic_conjugate().to_multivector()?);
            let u = elem(r, n);
            let v = elem(r, n);
            let c = hyperbolic_conjugate(&u.wedge(&v)?)?
                .distance(&hyperbolic_conjugate(&u)?.wedge(&hyperbolic_conjugate(&v)?)?);
            Ok(Residual::max(&[a, b, c], desc(&[("x", &xm)])))
        }),
    ]
}

fn inner_of(x: &M, y: &M) -> Result<f64> {
    Ok(hv_inner(&Vecfor::from_multivector(x)?, &Vecfor::from_multivector(y)?))
}

/// `x = x_* ⊕ x*` as two elements of `⋀H_V`.
fn split_vector(x: &M) -> Result<(M, M)> {
    let v = Vecfor::from_multivector(x)?;
    Ok((embed(&v.primal_multivector()?)?, embed(&v.dual_multiform()?)?))
}
