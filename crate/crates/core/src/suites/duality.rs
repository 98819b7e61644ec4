use nalgebra::DMatrix;

use super::{Property, Residual};
use crate::duality::{dsp, lcontr, rcontr};
use crate::error::Result;
use crate::exterior::{BaseSpace, Multivector as M};
use crate::random::{self, TestRng};

fn spaces(n: usize) -> (BaseSpace, BaseSpace) {
    (BaseSpace::primal(n).expect("supported"), BaseSpace::dual(n).expect("supported"))
}

fn desc(items: &[(&str, &M)]) -> String {
    items.iter().map(|(k, v)| format!("{k}=[{v}]")).collect::<Vec<_>>().join(" ")
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Every ordered tuple in `0..n` of length `k`.
fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |j| {
                    let mut t = t.clone();
                    t.push(j);
                    t
                })
            })
            .collect();
    }
    out
}

fn wedge_all(unit: M, factors: &[&M]) -> Result<M> {
    factors.iter().try_fold(unit, |acc, f| acc.wedge(f))
}

/// A pair of dual frames `f_j` of `V` and `φ^j` of `V*`, with `φ^i(f_j) = δ^i_j`.
pub(super) struct Frames {
    pub vectors: Vec<M>,
    pub forms: Vec<M>,
}

pub(super) fn frames(n: usize, lambda: &DMatrix<f64>) -> Result<Frames> {
    let (v, d) = spaces(n);
    let inv = lambda.clone().try_inverse().ok_or(crate::Error::Singular("frame change"))?;
    let vectors = (0..n)
        .map(|j| M::vector(v, &(0..n).map(|i| lambda[(i, j)]).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let forms =
        (0..n).map(|i| M::vector(d, &(0..n).map(|k| inv[(i, k)]).collect::<Vec<_>>())).collect::<Result<Vec<_>>>()?;
    Ok(Frames { vectors, forms })
}

/// `⟨Φ, X⟩` as `Σ_p 1/p! Φ_p(f_{j_1},…) X^p(φ^{j_1},…)` over all ordered tuples.
pub(super) fn frame_dsp(phi: &M, x: &M, f: &Frames) -> Result<f64> {
    let n = phi.n();
    let (v, d) = spaces(n);
    let mut total = 0.0;
    for p in 0..=n {
        let mut s = 0.0;
        for t in tuples(n, p) {
            let fv: Vec<&M> = t.iter().map(|&j| &f.vectors[j]).collect();
            let fd: Vec<&M> = t.iter().map(|&j| &f.forms[j]).collect();
            s += dsp(phi, &wedge_all(M::scalar(v, 1.0), &fv)?)? * dsp(&wedge_all(M::scalar(d, 1.0), &fd)?, x)?;
        }
        total += s / factorial(p);
    }
    Ok(total)
}

/// `⟨Φ_p, X^q| = 1/(q-p)! Σ ⟨Φ̃_p ∧ φ^{j_1} ∧ ⋯, X^q⟩ f_{j_1} ∧ ⋯` summed over grades.
pub(super) fn frame_lcontr(phi: &M, x: &M, f: &Frames) -> Result<M> {
    let n = phi.n();
    let (v, _) = spaces(n);
    let mut out = M::zero(v);
    for p in 0..=n {
        let fp = phi.part(p).reversion();
        for q in p..=n {
            let xq = x.part(q);
            for t in tuples(n, q - p) {
                let fd: Vec<&M> = t.iter().map(|&j| &f.forms[j]).collect();
                let fv: Vec<&M> = t.iter().map(|&j| &f.vectors[j]).collect();
                let c = dsp(&wedge_all(fp.clone(), &fd)?, &xq)? / factorial(q - p);
                if c != 0.0 {
                    out += &wedge_all(M::scalar(v, 1.0), &fv)?.scale(c);
                }
            }
        }
    }
    Ok(out)
}

/// `|Φ_p, X^q⟩ = 1/(p-q)! Σ ⟨Φ_p, f_{j_1} ∧ ⋯ ∧ X̃^q⟩ φ^{j_1} ∧ ⋯` summed over grades.
pub(super) fn frame_rcontr(phi: &M, x: &M, f: &Frames) -> Result<M> {
    let n = phi.n();
    let (v, d) = spaces(n);
    let mut out = M::zero(d);
    for q in 0..=n {
        let xq = x.part(q).reversion();
        for p in q..=n {
            let fp = phi.part(p);
            for t in tuples(n, p - q) {
                let fd: Vec<&M> = t.iter().map(|&j| &f.forms[j]).collect();
                let fv: Vec<&M> = t.iter().map(|&j| &f.vectors[j]).collect();
                let c = dsp(&fp, &wedge_all(M::scalar(v, 1.0), &fv)?.wedge(&xq)?)? / factorial(p - q);
                if c != 0.0 {
                    out += &wedge_all(M::scalar(d, 1.0), &fd)?.scale(c);
                }
            }
        }
    }
    Ok(out)
}

fn canonical(n: usize) -> Frames {
    frames(n, &DMatrix::identity(n, n)).expect("identity frame")
}

fn hom(r: &mut TestRng, s: BaseSpace, k: usize) -> M {
    random::homogeneous(r, s, k)
}

pub(super) fn properties() -> Vec<Property> {
    vec![
        Property::new("dsp/symmetric", |n, r| {
            let (v, d) = spaces(n);
            let (x, f) = (random::multivector(r, v), random::multivector(r, d));
            Ok(Residual::new((dsp(&f, &x)? - dsp(&x, &f)?).abs(), desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("dsp/determinant-of-simple-elements", |n, r| {
            let (v, d) = spaces(n);
            let p = random::index(r, n.min(3) + 1);
            let vs: Vec<M> = (0..p).map(|_| random::vector(r, v)).collect();
            let ws: Vec<M> = (0..p).map(|_| random::vector(r, d)).collect();
            let g = DMatrix::from_fn(p, p, |i, j| dsp(&ws[i], &vs[j]).unwrap());
            let det = if p == 0 { 1.0 } else { g.determinant() };
            let lhs = dsp(
                &wedge_all(M::scalar(d, 1.0), &ws.iter().collect::<Vec<_>>())?,
                &wedge_all(M::scalar(v, 1.0), &vs.iter().collect::<Vec<_>>())?,
            )?;
            Ok(Residual::new((lhs - det).abs(), format!("p={p}")))
        }),
        Property::new("dsp/grade-orthogonal", |n, r| {
            let (v, d) = spaces(n);
            let p = random::index(r, n + 1);
            let q = (p + 1 + random::index(r, n)) % (n + 1);
            Ok(Residual::new(dsp(&hom(r, d, p), &hom(r, v, q))?.abs(), format!("p={p} q={q}")))
        }),
        Property::new("dsp/non-degenerate-basis", |n, _| {
            let (v, d) = spaces(n);
            let mut worst = 0.0f64;
            for a in 0..v.blade_count() as u32 {
                for b in 0..v.blade_count() as u32 {
                    let expect = if a == b { 1.0 } else { 0.0 };
                    worst = worst.max((dsp(&M::blade(d, a, 1.0)?, &M::blade(v, b, 1.0)?)? - expect).abs());
                }
            }
            Ok(Residual::new(worst, ""))
        }),
        Property::new("dsp/frame-independent", |n, r| {
            let (v, d) = spaces(n);
            let (x, f) = (random::multivector(r, v), random::multivector(r, d));
            let fr = frames(n, &random::invertible_matrix(r, n))?;
            Ok(Residual::new((frame_dsp(&f, &x, &fr)? - dsp(&f, &x)?).abs(), desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("dsp/distributive", |n, r| {
            let (v, d) = spaces(n);
            let (x, y, f) = (random::multivector(r, v), random::multivector(r, v), random::multivector(r, d));
            let a = random::coeff(r);
            let res = (dsp(&f, &(&x.scale(a) + &y))? - a * dsp(&f, &x)? - dsp(&f, &y)?).abs();
            Ok(Residual::new(res, desc(&[("phi", &f), ("x", &x), ("y", &y)])))
        }),
        Property::new("lcontr/matches-tuple-sum", |n, r| {
            let (v, d) = spaces(n);
            let (x, f) = (random::multivector(r, v), random::multivector(r, d));
            let res = lcontr(&f, &x)?.distance(&frame_lcontr(&f, &x, &canonical(n))?);
            Ok(Residual::new(res, desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("lcontr/frame-independent", |n, r| {
            let (v, d) = spaces(n);
            let (x, f) = (random::multivector(r, v), random::multivector(r, d));
            let fr = frames(n, &random::invertible_matrix(r, n))?;
            let res = lcontr(&f, &x)?.distance(&frame_lcontr(&f, &x, &fr)?);
            Ok(Residual::new(res, desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("rcontr/matches-tuple-sum", |n, r| {
            let (v, d) = spaces(n);
            let (x, f) = (random::multivector(r, v), random::multivector(r, d));
            let res = rcontr(&f, &x)?.distance(&frame_rcontr(&f, &x, &canonical(n))?);
            Ok(Residual::new(res, desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("rcontr/frame-independent", |n, r| {
            let (v, d) = spaces(n);
            let (x, f) = (random::multivector(r, v), random::multivector(r, d));
            let fr = frames(n, &random::invertible_matrix(r, n))?;
            let res = rcontr(&f, &x)?.distance(&frame_rcontr(&f, &x, &fr)?);
            Ok(Residual::new(res, desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("lcontr/adjoint-homogeneous", |n, r| {
            let (v, d) = spaces(n);
            let q = random::index(r, n + 1);
            let p = random::index(r, q + 1);
            let (f, x, psi) = (hom(r, d, p), hom(r, v, q), hom(r, d, q - p));
            let (y, g, w) = (hom(r, v, p), hom(r, d, q), hom(r, v, q - p));
            let a = dsp(&lcontr(&f, &x)?, &psi)? - dsp(&x, &f.reversion().wedge(&psi)?)?;
            let b = dsp(&lcontr(&y, &g)?, &w)? - dsp(&g, &y.reversion().wedge(&w)?)?;
            let grade_ok = lcontr(&f, &x)?.part(q - p).distance(&lcontr(&f, &x)?);
            Ok(Residual::max(&[a.abs(), b.abs(), grade_ok], format!("p={p} q={q}")))
        }),
        Property::new("lcontr/adjoint-general", |n, r| {
            let (v, d) = spaces(n);
            let (f, x, psi) = (random::multivector(r, d), random::multivector(r, v), random::multivector(r, d));
            let (y, g, w) = (random::multivector(r, v), random::multivector(r, d), random::multivector(r, v));
            let a = dsp(&lcontr(&f, &x)?, &psi)? - dsp(&x, &f.reversion().wedge(&psi)?)?;
            let b = dsp(&lcontr(&y, &g)?, &w)? - dsp(&g, &y.reversion().wedge(&w)?)?;
            Ok(Residual::max(&[a.abs(), b.abs()], desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("rcontr/adjoint-homogeneous-mirrored", |n, r| {
            let (v, d) = spaces(n);
            let p = random::index(r, n + 1);
            let q = random::index(r, p + 1);
            let (f, x, y) = (hom(r, d, p), hom(r, v, q), hom(r, v, p - q));
            let (xx, g, psi) = (hom(r, v, p), hom(r, d, q), hom(r, d, p - q));
            let a = dsp(&rcontr(&f, &x)?, &y)? - dsp(&f, &y.wedge(&x.reversion())?)?;
            let b = dsp(&rcontr(&xx, &g)?, &psi)? - dsp(&xx, &psi.wedge(&g.reversion())?)?;
            Ok(Residual::max(&[a.abs(), b.abs()], format!("p={p} q={q}")))
        }),
        Property::new("rcontr/adjoint-general-mirrored", |n, r| {
            let (v, d) = spaces(n);
            let (f, x, y) = (random::multivector(r, d), random::multivector(r, v), random::multivector(r, v));
            let (xx, g, psi) = (random::multivector(r, v), random::multivector(r, d), random::multivector(r, d));
            let a = dsp(&rcontr(&f, &x)?, &y)? - dsp(&f, &y.wedge(&x.reversion())?)?;
            let b = dsp(&rcontr(&xx, &g)?, &psi)? - dsp(&xx, &psi.wedge(&g.reversion())?)?;
            Ok(Residual::max(&[a.abs(), b.abs()], desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("contraction/equal-grades-give-scalar", |n, r| {
            let (v, d) = spaces(n);
            let p = random::index(r, n + 1);
            let (f, x) = (hom(r, d, p), hom(r, v, p));
            let s = dsp(&f.reversion(), &x)?;
            let a = lcontr(&f, &x)?.distance(&M::scalar(v, s));
            let b = rcontr(&f, &x)?.distance(&M::scalar(d, s));
            let c = (dsp(&f, &x.reversion())? - s).abs();
            Ok(Residual::max(&[a, b, c], format!("p={p}")))
        }),
        Property::new("contraction/units", |n, r| {
            let (v, d) = spaces(n);
            let (f, x) = (random::multivector(r, d), random::multivector(r, v));
            let a = lcontr(&M::scalar(d, 1.0), &x)?.distance(&x);
            let b = rcontr(&f, &M::scalar(v, 1.0))?.distance(&f);
            Ok(Residual::max(&[a, b], desc(&[("phi", &f), ("x", &x)])))
        }),
        Property::new("contraction/distributive", |n, r| {
            let (v, d) = spaces(n);
            let (f, g, x, y) = (
                random::multivector(r, d),
                random::multivector(r, d),
                random::multivector(r, v),
                random::multivector(r, v),
            );
            let a = lcontr(&f, &(&x + &y))?.distance(&(lcontr(&f, &x)? + lcontr(&f, &y)?));
            let b = lcontr(&(&f + &g), &x)?.distance(&(lcontr(&f, &x)? + lcontr(&g, &x)?));
            let c = rcontr(&f, &(&x + &y))?.distance(&(rcontr(&f, &x)? + rcontr(&f, &y)?));
            let e = rcontr(&(&f + &g), &x)?.distance(&(rcontr(&f, &x)? + rcontr(&g, &x)?));
            Ok(Residual::max(&[a, b, c, e], desc(&[("phi", &f), ("x", &x)])))
        }),
    ]
}
