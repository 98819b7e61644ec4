use nalgebra::DMatrix;

use super::{Property, Residual};
use crate::duality::{dsp, lcontr, rcontr};
use crate::error::Result;
use crate::extensor::{
    ce_on_extensor, epe_on_extensor, ext_dsp, ext_lcontr, ext_rcontr, ext_wedge, part_diamond, AlgebraOperator,
    ExtSignature, Extensor, Operator, Side, VSpaceSig,
};
use crate::exterior::{bits, grade, Multivector as M};
use crate::random::{self, TestRng};

type Pair = fn(&M, &M) -> Result<M>;

fn refs(v: &[M]) -> Vec<&M> {
    v.iter().collect()
}

fn side_of(r: &mut TestRng) -> Side {
    if random::flip(r) {
        Side::Primal
    } else {
        Side::Dual
    }
}

fn slots(r: &mut TestRng) -> (usize, usize) {
    [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)][random::index(r, 5)]
}

fn ext(r: &mut TestRng, n: usize, out: Side) -> Extensor {
    let (k, l) = slots(r);
    random::extensor(r, n, k, l, out)
}

fn one_slot(r: &mut TestRng, n: usize, slot: Side, out: Side) -> Extensor {
    match slot {
        Side::Primal => random::extensor(r, n, 1, 0, out),
        Side::Dual => random::extensor(r, n, 0, 1, out),
    }
}

fn op(r: &mut TestRng, n: usize, side: Side) -> Operator {
    Operator::new(side, random::invertible_matrix(r, n)).expect("square")
}

fn element(r: &mut TestRng, n: usize, side: Side) -> M {
    random::multivector(r, side.space(n).expect("supported"))
}

fn sig_desc(t: &Extensor) -> String {
    let s = t.sig();
    let g = |v: &VSpaceSig| format!("{:?}{:?}", v.side(), v.grades());
    let ins: Vec<String> = s.slots().map(g).collect();
    format!("({}) -> {}", ins.join(","), g(s.output()))
}

/// `(τ, σ)` evaluated on their share of the concatenated arguments.
fn split_eval(tau: &Extensor, sigma: &Extensor, args: &[M]) -> Result<(M, M)> {
    let (tk, tl) = (tau.sig().vec_inputs().len(), tau.sig().form_inputs().len());
    let sk = sigma.sig().vec_inputs().len();
    let t: Vec<&M> = args[..tk].iter().chain(&args[tk + sk..tk + sk + tl]).collect();
    let s: Vec<&M> = args[tk..tk + sk].iter().chain(&args[tk + sk + tl..]).collect();
    Ok((tau.eval(&t)?, sigma.eval(&s)?))
}

fn prop_multilinear(n: usize, r: &mut TestRng) -> Result<Residual> {
    let out = side_of(r);
    let tau = ext(r, n, out);
    let mut a = random::arguments(r, &tau);
    let s = random::index(r, a.len());
    let slot = tau.sig().slot(s).clone();
    let (x, y) = (random::in_sig(r, &slot), random::in_sig(r, &slot));
    let (p, q) = (random::coeff(r), random::coeff(r));
    a[s] = &x * p + &y * q;
    let lhs = tau.eval(&refs(&a))?;
    a[s] = x;
    let fx = tau.eval(&refs(&a))?;
    a[s] = y;
    let fy = tau.eval(&refs(&a))?;
    Ok(Residual::new(lhs.distance(&(fx * p + fy * q)), format!("τ {} slot {s}", sig_desc(&tau))))
}

fn prop_basis_values(n: usize, r: &mut TestRng) -> Result<Residual> {
    let out = side_of(r);
    let tau = ext(r, n, out);
    let sig = tau.sig().clone();
    let rebuilt = Extensor::from_fn(sig, |a| tau.eval(&refs(a)))?;
    let exact = if rebuilt == tau { 0.0 } else { f64::INFINITY };
    Ok(Residual::new(exact, format!("τ {} (exact)", sig_desc(&tau))))
}

fn prop_part_diamond(n: usize, r: &mut TestRng) -> Result<Residual> {
    let side = side_of(r);
    let sig = random::vspace_sig(r, side, n);
    let x = element(r, n, side);
    let once = part_diamond(&x, &sig)?;
    let twice = part_diamond(&once, &sig)?;
    let k = random::index(r, n + 1);
    let single = part_diamond(&x, &VSpaceSig::homogeneous(side, n, k)?)?;
    let sum: M = sig.grades().iter().fold(M::zero(x.space()), |acc, g| acc + x.part(*g));
    Ok(Residual::max(
        &[once.distance(&twice), single.distance(&x.part(k)), once.distance(&sum)],
        format!("grades {:?} x=[{x}]", sig.grades()),
    ))
}

fn check_product(
    n: usize,
    r: &mut TestRng,
    product: fn(&Extensor, &Extensor) -> Result<Extensor>,
    pair: Pair,
    sides: (Side, Side),
) -> Result<Residual> {
    let tau = ext(r, n, sides.0);
    let sigma = ext(r, n, sides.1);
    let prod = product(&tau, &sigma)?;
    let args = random::arguments(r, &prod);
    let (a, b) = split_eval(&tau, &sigma, &args)?;
    let mut want = pair(&a, &b)?;
    let got = prod.eval(&refs(&args))?;
    if want.kind() != got.kind() {
        want = want.retag(got.space())?;
    }
    Ok(Residual::new(got.distance(&want), format!("τ {} σ {}", sig_desc(&tau), sig_desc(&sigma))))
}

fn scalar_pair(a: &M, b: &M) -> Result<M> {
    Ok(M::scalar(crate::exterior::BaseSpace::primal(a.n())?, dsp(a, b)?))
}

fn wedge_pair(a: &M, b: &M) -> Result<M> {
    a.wedge(b)
}

fn prop_adjoint(n: usize, r: &mut TestRng, slot: Side, out: Side) -> Result<Residual> {
    let tau = one_slot(r, n, slot, out);
    let adj = tau.adjoint()?;
    let a = random::in_sig(r, tau.sig().slot(0));
    let b = random::in_sig(r, adj.sig().slot(0));
    let lhs = dsp(&tau.eval(&[&a])?, &b)?;
    let rhs = dsp(&a, &adj.eval(&[&b])?)?;
    Ok(Residual::new((lhs - rhs).abs(), format!("τ {}", sig_desc(&tau))))
}

fn prop_adjoint_involutive(n: usize, r: &mut TestRng) -> Result<Residual> {
    let (slot_side, out) = (side_of(r), side_of(r));
    let tau = one_slot(r, n, slot_side, out);
    let back = tau.adjoint()?.adjoint()?;
    Ok(Residual::new(if back == tau { 0.0 } else { f64::INFINITY }, format!("τ {} (exact)", sig_desc(&tau))))
}

/// `τ^△(Φ) = ⟨Φ, τ(⟨1⟩)⟩ + Σ_k 1/k! Σ ⟨Φ, τ(⟨b_{j1}∧⋯∧b_{jk}⟩)⟩ β^{j1}∧⋯∧β^{jk}` over all
/// ordered index tuples, with each basis product projected onto the slot.
fn prop_adjoint_tuple_sum(n: usize, r: &mut TestRng) -> Result<Residual> {
    let (slot_side, out) = (side_of(r), side_of(r));
    let tau = one_slot(r, n, slot_side, out);
    let adj = tau.adjoint()?;
    let slot = tau.sig().slot(0).clone();
    let phi = random::in_sig(r, adj.sig().slot(0));
    let (vs, ds) = (slot.space(), slot.dual().space());
    let mut want = M::zero(ds);
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..=n {
        let fact: f64 = (1..=k).map(|i| i as f64).product();
        for t in &tuples {
            let b = t.iter().try_fold(M::scalar(vs, 1.0), |acc, j| acc.wedge(&M::generator(vs, *j)?))?;
            let beta = t.iter().try_fold(M::scalar(ds, 1.0), |acc, j| acc.wedge(&M::generator(ds, *j)?))?;
            let value = tau.eval(&[&part_diamond(&b, &slot)?])?;
            want += &(beta * (dsp(&phi, &value)? / fact));
        }
        tuples = tuples.iter().flat_map(|t| (0..n).map(move |j| [t.clone(), vec![j]].concat())).collect();
    }
    Ok(Residual::new(adj.eval(&[&phi])?.distance(&want), format!("τ {}", sig_desc(&tau))))
}

// operator extensions

fn ext_of(l: &Operator, contracted: bool) -> AlgebraOperator {
    if contracted {
        l.ce()
    } else {
        l.epe()
    }
}

fn prop_grade_preserving(n: usize, r: &mut TestRng, side: Side, contracted: bool) -> Result<Residual> {
    let l = Operator::new(side, random::matrix(r, n, n))?;
    let e = ext_of(&l, contracted);
    let d = 1usize << n;
    let mut worst: f64 = 0.0;
    for c in 0..d {
        for row in 0..d {
            if grade(row as u32) != grade(c as u32) {
                worst = worst.max(e.matrix()[(row, c)].abs());
            }
        }
    }
    Ok(Residual::new(worst, format!("λ={}", l.matrix())))
}

fn prop_scalars(n: usize, r: &mut TestRng, side: Side, contracted: bool) -> Result<Residual> {
    let l = Operator::new(side, random::matrix(r, n, n))?;
    let alpha = random::coeff(r);
    let a = M::scalar(side.space(n)?, alpha);
    let want = if contracted { M::zero(a.space()) } else { a.clone() };
    Ok(Residual::new(ext_of(&l, contracted).apply(&a)?.distance(&want), format!("α={alpha}")))
}

fn prop_restricts(n: usize, r: &mut TestRng, side: Side, contracted: bool) -> Result<Residual> {
    let l = Operator::new(side, random::matrix(r, n, n))?;
    let v = random::vector(r, side.space(n)?);
    Ok(Residual::new(ext_of(&l, contracted).apply(&v)?.distance(&l.apply(&v)?), format!("v=[{v}]")))
}

fn prop_wedge_law(n: usize, r: &mut TestRng, side: Side, contracted: bool) -> Result<Residual> {
    let l = Operator::new(side, random::matrix(r, n, n))?;
    let e = ext_of(&l, contracted);
    let (x, y) = (element(r, n, side), element(r, n, side));
    let lhs = e.apply(&x.wedge(&y)?)?;
    let rhs = if contracted {
        e.apply(&x)?.wedge(&y)? + x.wedge(&e.apply(&y)?)?
    } else {
        e.apply(&x)?.wedge(&e.apply(&y)?)?
    };
    Ok(Residual::new(lhs.distance(&rhs), format!("X=[{x}] Y=[{y}]")))
}

fn prop_adjoint_commutes(n: usize, r: &mut TestRng, side: Side, contracted: bool) -> Result<Residual> {
    let l = Operator::new(side, random::matrix(r, n, n))?;
    let lhs = ext_of(&l, contracted).adjoint();
    let rhs = ext_of(&l.adjoint(), contracted);
    // the adjoint of an algebra operator must also satisfy the pairing identity
    let x = element(r, n, side);
    let phi = element(r, n, side.opposite());
    let pairing = (dsp(&ext_of(&l, contracted).apply(&x)?, &phi)? - dsp(&x, &lhs.apply(&phi)?)?).abs();
    Ok(Residual::max(&[lhs.distance(&rhs), pairing], format!("λ={}", l.matrix())))
}

/// Coefficient of `b_I` in `λ̲(b_J)` is the minor `det λ[I, J]`.
fn prop_minors(n: usize, r: &mut TestRng, side: Side) -> Result<Residual> {
    let l = Operator::new(side, random::matrix(r, n, n))?;
    let e = l.epe();
    let d = 1usize << n;
    let mut worst: f64 = 0.0;
    for c in 0..d as u32 {
        for row in 0..d as u32 {
            if grade(row) != grade(c) {
                continue;
            }
            let (ri, ci): (Vec<usize>, Vec<usize>) = (bits(row).collect(), bits(c).collect());
            let minor = DMatrix::from_fn(ri.len(), ci.len(), |a, b| l.matrix()[(ri[a], ci[b])]).determinant();
            worst = worst.max((e.matrix()[(row as usize, c as usize)] - minor).abs());
        }
    }
    Ok(Residual::new(worst, format!("λ={}", l.matrix())))
}

/// Rebuilds `λ̲` or `γ̆` from scalar behavior, the grade-1 restriction and the
/// wedge law alone, then compares exactly on a dyadic operator.
fn prop_determined(n: usize, r: &mut TestRng, side: Side, contracted: bool) -> Result<Residual> {
    let l = Operator::new(side, random::dyadic_matrix(r, n))?;
    let space = side.space(n)?;
    let d = 1usize << n;
    let mut cols: Vec<M> = Vec::with_capacity(d);
    for mask in 0..d as u32 {
        let col = match grade(mask) {
            0 if contracted => M::zero(space),
            0 => M::scalar(space, 1.0),
            1 => l.image(mask.trailing_zeros() as usize),
            _ if contracted => {
                let first = mask & mask.wrapping_neg();
                let rest = mask & !first;
                let bf = M::blade(space, first, 1.0)?;
                cols[first as usize].wedge(&M::blade(space, rest, 1.0)?)? + bf.wedge(&cols[rest as usize])?
            }
            _ => {
                let last = 1u32 << (31 - mask.leading_zeros());
                cols[(mask & !last) as usize].wedge(&cols[last as usize])?
            }
        };
        cols.push(col);
    }
    let rebuilt = AlgebraOperator::from_blade_images(side, n, |m| cols[m as usize].clone());
    let got = ext_of(&l, contracted);
    Ok(Residual::new(if rebuilt == got { 0.0 } else { f64::INFINITY }, format!("λ={} (exact)", l.matrix())))
}

fn prop_degree_operator(n: usize, r: &mut TestRng, side: Side) -> Result<Residual> {
    let g = Operator::identity(side, n)?.ce();
    let k = random::index(r, n + 1);
    let x = random::homogeneous(r, side.space(n)?, k);
    Ok(Residual::new(g.apply(&x)?.distance(&(&x * k as f64)), format!("k={k} X=[{x}]")))
}

// transport of duality products by operator extensions

struct Transport {
    /// action on elements of λ's side
    own: AlgebraOperator,
    /// `λ̲^{-△}` or `γ̆^△` on the other side
    other: AlgebraOperator,
}

fn transport(l: &Operator, contracted: bool) -> Result<Transport> {
    Ok(if contracted {
        Transport { own: l.ce(), other: l.adjoint().ce() }
    } else {
        Transport { own: l.epe(), other: l.inverse()?.adjoint().epe() }
    })
}

/// Both sides of `Op(A ∘ B) = Op(A) ∘ Op(B)` (or the Leibniz form) for a
/// duality product `∘`, where each factor's action is chosen by its side.
///
/// `on_result` is the action applied to the product, or `None` when the
/// product is scalar and the action is the identity (or zero).
fn transport_residual(
    t: &Transport,
    contracted: bool,
    side: Side,
    a: &M,
    b: &M,
    pair: Pair,
    on_result: Option<&AlgebraOperator>,
) -> Result<f64> {
    let act = |x: &M| if x.kind() == side.kind() { t.own.apply(x) } else { t.other.apply(x) };
    // the other side enters with a minus sign in the Leibniz form
    let sign = |x: &M| if contracted && x.kind() != side.kind() { -1.0 } else { 1.0 };
    let prod = pair(a, b)?;
    let lhs = match on_result {
        Some(o) => o.apply(&prod)?,
        None if contracted => M::zero(prod.space()),
        None => prod.clone(),
    };
    let rhs = if contracted {
        pair(&(act(a)? * sign(a)), b)? + pair(a, &(act(b)? * sign(b)))?
    } else {
        pair(&act(a)?, &act(b)?)?
    };
    Ok(lhs.distance(&rhs))
}

/// Where the product lies, which fixes the action applied to it.
#[derive(Clone, Copy)]
enum Target {
    Scalar,
    OwnSide,
    OtherSide,
}

fn prop_op_transport(
    n: usize,
    r: &mut TestRng,
    side: Side,
    contracted: bool,
    form_first: bool,
    pair: Pair,
    target: Target,
) -> Result<Residual> {
    let l = op(r, n, side);
    let t = transport(&l, contracted)?;
    let (phi, x) = (element(r, n, Side::Dual), element(r, n, Side::Primal));
    let (a, b) = if form_first { (&phi, &x) } else { (&x, &phi) };
    let other_on_result = if contracted { t.other.scale(-1.0) } else { t.other.clone() };
    let on = match target {
        Target::Scalar => None,
        Target::OwnSide => Some(&t.own),
        Target::OtherSide => Some(&other_on_result),
    };
    let res = transport_residual(&t, contracted, side, a, b, pair, on)?;
    Ok(Residual::new(res, format!("λ={} Φ=[{phi}] X=[{x}]", l.matrix())))
}

// operator action on extensors

fn ext_action(l: &Operator, tau: &Extensor, contracted: bool) -> Result<Extensor> {
    if contracted {
        ce_on_extensor(l, tau)
    } else {
        epe_on_extensor(l, tau)
    }
}

/// One-slot special cases: `λ̲τ = λ̲∘τ∘(λ̲⁻¹ or λ̲^△)` and
/// `γ̆τ = γ̆∘τ ∓ τ∘(γ̆ or γ̆^△)`.
fn prop_one_slot(n: usize, r: &mut TestRng, side: Side, slot: Side, contracted: bool) -> Result<Residual> {
    let l = op(r, n, side);
    let tau = one_slot(r, n, slot, side);
    let got = ext_action(&l, &tau, contracted)?;
    let x = random::in_sig(r, tau.sig().slot(0));
    let want = if contracted {
        let inner = if slot == side { l.ce().apply(&x)? * -1.0 } else { l.adjoint().ce().apply(&x)? };
        l.ce().apply(&tau.eval(&[&x])?)? + tau.eval(&[&inner])?
    } else {
        let inner = if slot == side { l.inverse()?.epe().apply(&x)? } else { l.adjoint().epe().apply(&x)? };
        l.epe().apply(&tau.eval(&[&inner])?)?
    };
    Ok(Residual::new(got.eval(&[&x])?.distance(&want), format!("λ={} τ {}", l.matrix(), sig_desc(&tau))))
}

fn prop_ext_wedge(n: usize, r: &mut TestRng, side: Side, contracted: bool) -> Result<Residual> {
    let l = op(r, n, side);
    let (tau, sigma) = (ext(r, n, side), ext(r, n, side));
    let lhs = ext_action(&l, &ext_wedge(&tau, &sigma)?, contracted)?;
    let (lt, ls) = (ext_action(&l, &tau, contracted)?, ext_action(&l, &sigma, contracted)?);
    let rhs = if contracted { ext_wedge(&lt, &sigma)?.add(&ext_wedge(&tau, &ls)?)? } else { ext_wedge(&lt, &ls)? };
    Ok(Residual::new(lhs.distance(&rhs), format!("λ={} τ {} σ {}", l.matrix(), sig_desc(&tau), sig_desc(&sigma))))
}

/// The action on the other side's extensors that appears in the transport
/// laws: `λ̲^{-△}` for exterior power extensions, `γ̆^△` for contracted ones.
fn ext_other(l: &Operator, tau: &Extensor, contracted: bool) -> Result<Extensor> {
    if contracted {
        ce_on_extensor(&l.adjoint(), tau)
    } else {
        epe_on_extensor(&l.inverse()?.adjoint(), tau)
    }
}

fn prop_ext_transport(
    n: usize,
    r: &mut TestRng,
    side: Side,
    contracted: bool,
    form_first: bool,
    product: fn(&Extensor, &Extensor) -> Result<Extensor>,
) -> Result<Residual> {
    let l = op(r, n, side);
    let (first, second) = if form_first { (Side::Dual, Side::Primal) } else { (Side::Primal, Side::Dual) };
    let (l1, k2) = (random::index(r, 2), random::index(r, 2));
    let tau = random::extensor(r, n, 1, l1, first);
    let sigma = random::extensor(r, n, k2, 1, second);
    let act = |e: &Extensor| -> Result<Extensor> {
        if e.sig().output().side() == side {
            ext_action(&l, e, contracted)
        } else if contracted {
            Ok(ext_other(&l, e, true)?.scale(-1.0))
        } else {
            ext_other(&l, e, false)
        }
    };
    let lhs = ext_action(&l, &product(&tau, &sigma)?, contracted)?;
    let rhs = if contracted {
        product(&act(&tau)?, &sigma)?.add(&product(&tau, &act(&sigma)?)?)?
    } else {
        product(&act(&tau)?, &act(&sigma)?)?
    };
    Ok(Residual::new(lhs.distance(&rhs), format!("λ={} τ {} σ {}", l.matrix(), sig_desc(&tau), sig_desc(&sigma))))
}

/// A form operator acts on extensors exactly as the vector operator `λ^{-△}`.
fn prop_form_operator_is_inverse_adjoint(n: usize, r: &mut TestRng) -> Result<Residual> {
    let l = op(r, n, Side::Dual);
    let out = side_of(r);
    let tau = ext(r, n, out);
    let a = epe_on_extensor(&l, &tau)?;
    let b = epe_on_extensor(&l.inverse()?.adjoint(), &tau)?;
    let c = ce_on_extensor(&l, &tau)?;
    let d = ce_on_extensor(&l.adjoint(), &tau)?.scale(-1.0);
    Ok(Residual::max(&[a.distance(&b), c.distance(&d)], format!("λ={} τ {}", l.matrix(), sig_desc(&tau))))
}

fn prop_scalar_signature(n: usize, _: &mut TestRng) -> Result<Residual> {
    // a scalar extensor of two slots is unchanged in signature by every action
    let v = VSpaceSig::homogeneous(Side::Primal, n, 1)?;
    let w = VSpaceSig::homogeneous(Side::Dual, n, 1)?;
    let pair = ext_dsp(&Extensor::identity(&w), &Extensor::identity(&v))?;
    let want = ExtSignature::new(vec![v], vec![w], VSpaceSig::new(Side::Primal, n, &[0])?)?;
    Ok(Residual::new(if *pair.sig() == want { 0.0 } else { f64::INFINITY }, "⟨id, id⟩"))
}

macro_rules! both_sides {
    ($v:expr, $name:literal, $f:ident $(, $arg:expr)*) => {
        $v.push(Property::new(concat!($name, "/vector"), |n, r| $f(n, r, Side::Primal $(, $arg)*)));
        $v.push(Property::new(concat!($name, "/form"), |n, r| $f(n, r, Side::Dual $(, $arg)*)));
    };
}

pub(super) fn properties() -> Vec<Property> {
    let mut v = vec![
        Property::new("eval/multilinear", prop_multilinear),
        Property::new("eval/basis-values-are-coefficients", prop_basis_values),
        Property::new("eval/scalar-pairing-signature", prop_scalar_signature),
        Property::new("part-diamond/projection", prop_part_diamond),
        Property::new("wedge/vector-values-factorize", |n, r| {
            check_product(n, r, ext_wedge, wedge_pair, (Side::Primal, Side::Primal))
        }),
        Property::new("wedge/form-values-factorize", |n, r| {
            check_product(n, r, ext_wedge, wedge_pair, (Side::Dual, Side::Dual))
        }),
        Property::new("dsp/values-factorize", |n, r| {
            check_product(n, r, ext_dsp, scalar_pair, (Side::Dual, Side::Primal))
        }),
        Property::new("lcontr/form-vector-values-factorize", |n, r| {
            check_product(n, r, ext_lcontr, lcontr, (Side::Dual, Side::Primal))
        }),
        Property::new("lcontr/vector-form-values-factorize", |n, r| {
            check_product(n, r, ext_lcontr, lcontr, (Side::Primal, Side::Dual))
        }),
        Property::new("rcontr/form-vector-values-factorize", |n, r| {
            check_product(n, r, ext_rcontr, rcontr, (Side::Dual, Side::Primal))
        }),
        Property::new("rcontr/vector-form-values-factorize", |n, r| {
            check_product(n, r, ext_rcontr, rcontr, (Side::Primal, Side::Dual))
        }),
        Property::new("adjoint/vector-slot-vector-value", |n, r| prop_adjoint(n, r, Side::Primal, Side::Primal)),
        Property::new("adjoint/form-slot-vector-value", |n, r| prop_adjoint(n, r, Side::Dual, Side::Primal)),
        Property::new("adjoint/vector-slot-form-value", |n, r| prop_adjoint(n, r, Side::Primal, Side::Dual)),
        Property::new("adjoint/form-slot-form-value", |n, r| prop_adjoint(n, r, Side::Dual, Side::Dual)),
        Property::new("adjoint/involutive", prop_adjoint_involutive),
        Property::new("adjoint/matches-ordered-tuple-sum", prop_adjoint_tuple_sum).cap(40),
    ];
    both_sides!(v, "epe/grade-preserving", prop_grade_preserving, false);
    both_sides!(v, "epe/fixes-scalars", prop_scalars, false);
    both_sides!(v, "epe/restricts-to-operator", prop_restricts, false);
    both_sides!(v, "epe/wedge-multiplicative", prop_wedge_law, false);
    both_sides!(v, "epe/adjoint-commutes", prop_adjoint_commutes, false);
    both_sides!(v, "epe/matches-minors", prop_minors);
    both_sides!(v, "epe/determined-by-properties", prop_determined, false);
    both_sides!(v, "ce/grade-preserving", prop_grade_preserving, true);
    both_sides!(v, "ce/annihilates-scalars", prop_scalars, true);
    both_sides!(v, "ce/restricts-to-operator", prop_restricts, true);
    both_sides!(v, "ce/wedge-derivation", prop_wedge_law, true);
    both_sides!(v, "ce/adjoint-commutes", prop_adjoint_commutes, true);
    both_sides!(v, "ce/determined-by-properties", prop_determined, true);
    both_sides!(v, "ce/identity-is-degree-operator", prop_degree_operator);

    for contracted in [false, true] {
        let mut add = |name: &'static str, check: super::CheckFn| v.push(Property::new(name, check));
        if !contracted {
            add("epe/vector/transport-scalar-product", |n, r| {
                prop_op_transport(n, r, Side::Primal, false, true, scalar_pair, Target::Scalar)
            });
            add("epe/vector/transport-left-contraction", |n, r| {
                prop_op_transport(n, r, Side::Primal, false, true, lcontr, Target::OwnSide)
            });
            add("epe/vector/transport-right-contraction", |n, r| {
                prop_op_transport(n, r, Side::Primal, false, false, rcontr, Target::OwnSide)
            });
            add("epe/form/transport-scalar-product", |n, r| {
                prop_op_transport(n, r, Side::Dual, false, true, scalar_pair, Target::Scalar)
            });
            add("epe/form/transport-left-contraction-on-other-side", |n, r| {
                prop_op_transport(n, r, Side::Dual, false, true, lcontr, Target::OtherSide)
            });
            add("epe/form/transport-right-contraction-on-other-side", |n, r| {
                prop_op_transport(n, r, Side::Dual, false, false, rcontr, Target::OtherSide)
            });
            add("epe/form/transport-left-contraction-swapped", |n, r| {
                prop_op_transport(n, r, Side::Dual, false, false, lcontr, Target::OwnSide)
            });
            add("epe/form/transport-right-contraction-swapped", |n, r| {
                prop_op_transport(n, r, Side::Dual, false, true, rcontr, Target::OwnSide)
            });
        } else {
            add("ce/vector/transport-scalar-product", |n, r| {
                prop_op_transport(n, r, Side::Primal, true, true, scalar_pair, Target::Scalar)
            });
            add("ce/vector/transport-left-contraction", |n, r| {
                prop_op_transport(n, r, Side::Primal, true, true, lcontr, Target::OwnSide)
            });
            add("ce/vector/transport-right-contraction", |n, r| {
                prop_op_transport(n, r, Side::Primal, true, false, rcontr, Target::OwnSide)
            });
            add("ce/form/transport-scalar-product", |n, r| {
                prop_op_transport(n, r, Side::Dual, true, true, scalar_pair, Target::Scalar)
            });
            add("ce/form/transport-left-contraction-on-other-side", |n, r| {
                prop_op_transport(n, r, Side::Dual, true, true, lcontr, Target::OtherSide)
            });
            add("ce/form/transport-right-contraction-on-other-side", |n, r| {
                prop_op_transport(n, r, Side::Dual, true, false, rcontr, Target::OtherSide)
            });
            add("ce/form/transport-left-contraction-swapped", |n, r| {
                prop_op_transport(n, r, Side::Dual, true, false, lcontr, Target::OwnSide)
            });
            add("ce/form/transport-right-contraction-swapped", |n, r| {
                prop_op_transport(n, r, Side::Dual, true, true, rcontr, Target::OwnSide)
            });
        }
    }

    v.extend([
        Property::new("epe-ext/vector/one-vector-slot", |n, r| prop_one_slot(n, r, Side::Primal, Side::Primal, false)),
        Property::new("epe-ext/vector/one-form-slot", |n, r| prop_one_slot(n, r, Side::Primal, Side::Dual, false)),
        Property::new("epe-ext/form/one-vector-slot", |n, r| prop_one_slot(n, r, Side::Dual, Side::Primal, false)),
        Property::new("epe-ext/form/one-form-slot", |n, r| prop_one_slot(n, r, Side::Dual, Side::Dual, false)),
        Property::new("ce-ext/vector/one-vector-slot", |n, r| prop_one_slot(n, r, Side::Primal, Side::Primal, true)),
        Property::new("ce-ext/vector/one-form-slot", |n, r| prop_one_slot(n, r, Side::Primal, Side::Dual, true)),
        Property::new("ce-ext/form/one-vector-slot", |n, r| prop_one_slot(n, r, Side::Dual, Side::Primal, true)),
        Property::new("ce-ext/form/one-form-slot", |n, r| prop_one_slot(n, r, Side::Dual, Side::Dual, true)),
        Property::new("epe-ext/vector/wedge-homomorphism", |n, r| prop_ext_wedge(n, r, Side::Primal, false)),
        Property::new("epe-ext/form/wedge-homomorphism", |n, r| prop_ext_wedge(n, r, Side::Dual, false)),
        Property::new("ce-ext/vector/wedge-derivation", |n, r| prop_ext_wedge(n, r, Side::Primal, true)),
        Property::new("ce-ext/form/wedge-derivation", |n, r| prop_ext_wedge(n, r, Side::Dual, true)),
        Property::new("ext/form-operator-acts-as-inverse-adjoint", prop_form_operator_is_inverse_adjoint),
    ]);

    macro_rules! ext_transport {
        ($name:literal, $side:expr, $contracted:expr, $form_first:expr, $product:expr) => {
            v.push(Property::new($name, |n, r| prop_ext_transport(n, r, $side, $contracted, $form_first, $product)));
        };
    }
    ext_transport!("epe-ext/vector/transport-scalar-product", Side::Primal, false, true, ext_dsp);
    ext_transport!("epe-ext/vector/transport-left-contraction", Side::Primal, false, true, ext_lcontr);
    ext_transport!("epe-ext/vector/transport-right-contraction", Side::Primal, false, false, ext_rcontr);
    ext_transport!("epe-ext/form/transport-scalar-product", Side::Dual, false, true, ext_dsp);
    ext_transport!("epe-ext/form/transport-left-contraction-on-other-side", Side::Dual, false, true, ext_lcontr);
    ext_transport!("epe-ext/form/transport-right-contraction-on-other-side", Side::Dual, false, false, ext_rcontr);
    ext_transport!("epe-ext/form/transport-left-contraction-swapped", Side::Dual, false, false, ext_lcontr);
    ext_transport!("epe-ext/form/transport-right-contraction-swapped", Side::Dual, false, true, ext_rcontr);
    ext_transport!("ce-ext/vector/transport-scalar-product", Side::Primal, true, true, ext_dsp);
    ext_transport!("ce-ext/vector/transport-left-contraction", Side::Primal, true, true, ext_lcontr);
    ext_transport!("ce-ext/vector/transport-right-contraction", Side::Primal, true, false, ext_rcontr);
    ext_transport!("ce-ext/form/transport-scalar-product", Side::Dual, true, true, ext_dsp);
    ext_transport!("ce-ext/form/transport-left-contraction-on-other-side", Side::Dual, true, true, ext_lcontr);
    ext_transport!("ce-ext/form/transport-right-contraction-on-other-side", Side::Dual, true, false, ext_rcontr);
    ext_transport!("ce-ext/form/transport-left-contraction-swapped", Side::Dual, true, false, ext_lcontr);
    ext_transport!("ce-ext/form/transport-right-contraction-swapped", Side::Dual, true, true, ext_rcontr);
    v.into_iter()
        .map(|p| if p.name.starts_with("epe/") || p.name.starts_with("ce/") { p } else { p.dims(1, 3) })
        .collect()
}
