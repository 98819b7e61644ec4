use super::{Property, Residual};
use crate::error::Result;
use crate::extensor::{Extensor, Side, VSpaceSig};
use crate::exterior::{BaseSpace, Multivector};
use crate::fields::expr::directional_expr;
use crate::fields::{
    ce_on_field, epe_on_field, gamma_split, jacobian, lie_bracket, partial_a, relative_connection, split_operator,
    Connection, Expr, ExtensorField, MultivectorField, OperatorField, VectorField,
};
use crate::random::{self, TestRng};

/// Chart points per case.
pub(super) const POINTS: usize = 5;

pub(super) struct Ctx {
    pub(super) n: usize,
    pub(super) v: BaseSpace,
    pub(super) d: BaseSpace,
    pub(super) pts: Vec<Vec<f64>>,
}

impl Ctx {
    pub(super) fn new(n: usize, r: &mut TestRng) -> Result<Self> {
        Self::at(n, random::chart_points(r, n, POINTS))
    }

    pub(super) fn at(n: usize, pts: Vec<Vec<f64>>) -> Result<Self> {
        Ok(Ctx { n, v: BaseSpace::primal(n)?, d: BaseSpace::dual(n)?, pts })
    }

    fn space(&self, form: bool) -> BaseSpace {
        if form {
            self.d
        } else {
            self.v
        }
    }

    pub(super) fn vector(&self, r: &mut TestRng) -> VectorField {
        random::vector_field(r, self.v)
    }

    pub(super) fn form(&self, r: &mut TestRng) -> VectorField {
        random::vector_field(r, self.d)
    }

    pub(super) fn residual(&self, value: f64, what: &str) -> Residual {
        let p: Vec<String> = self.pts[0].iter().map(|x| format!("{x:.4}")).collect();
        Residual::new(value, format!("{what}; n={} first point ({})", self.n, p.join(", ")))
    }

    pub(super) fn gap(&self, x: &MultivectorField, y: &MultivectorField) -> f64 {
        self.pts.iter().map(|p| mv_gap(&x.eval(p), &y.eval(p))).fold(0.0, f64::max)
    }

    pub(super) fn gap_expr(&self, f: &Expr, g: &Expr) -> f64 {
        self.pts.iter().map(|p| (f.eval(p) - g.eval(p)).abs()).fold(0.0, f64::max)
    }

    pub(super) fn gap_ext(&self, a: &ExtensorField, b: &ExtensorField) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for p in &self.pts {
            worst = worst.max(a.eval(p)?.distance(&b.eval(p)?));
        }
        Ok(worst)
    }
}

fn mv_gap(a: &Multivector, b: &Multivector) -> f64 {
    if a.space() == b.space() {
        a.distance(b)
    } else {
        f64::INFINITY
    }
}

pub(super) fn along(a: &VectorField, f: &Expr) -> Expr {
    directional_expr(f, &a.vector_comps())
}

/// A random one- or two-slot extensor field.
fn small_extensor(r: &mut TestRng, n: usize, out: Side) -> ExtensorField {
    let (k, l) = [(1, 0), (0, 1), (1, 1)][random::index(r, 3)];
    random::extensor_field(r, n, k, l, out)
}

fn any_side(r: &mut TestRng) -> Side {
    if random::flip(r) {
        Side::Primal
    } else {
        Side::Dual
    }
}

fn prop_strong_linearity(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (f, g) = (random::polynomial(r, n), random::polynomial(r, n));
    let (a, b, v) = (c.vector(r), c.vector(r), c.vector(r));
    let lhs = conn.nabla_vec(&a.times(&f).add(&b.times(&g))?, &v)?;
    let rhs = conn.nabla_vec(&a, &v)?.times(&f).add(&conn.nabla_vec(&b, &v)?.times(&g))?;
    Ok(c.residual(c.gap(&lhs, &rhs), "Γ(fa+gb,v)"))
}

fn prop_quasi_linearity(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (f, g) = (random::polynomial(r, n), random::polynomial(r, n));
    let (a, v, w) = (c.vector(r), c.vector(r), c.vector(r));
    let lhs = conn.nabla_vec(&a, &v.times(&f).add(&w.times(&g))?)?;
    let rhs = v
        .times(&along(&a, &f))
        .add(&w.times(&along(&a, &g)))?
        .add(&conn.nabla_vec(&a, &v)?.times(&f))?
        .add(&conn.nabla_vec(&a, &w)?.times(&g))?;
    Ok(c.residual(c.gap(&lhs, &rhs), "Γ(a,fv+gw)"))
}

fn prop_scalar_directional(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, f) = (c.vector(r), random::polynomial(r, n));
    let got = conn.nabla_multivector(&a, &MultivectorField::scalar(c.v, f.clone()))?;
    Ok(c.residual(c.gap_expr(got.comp(0), &along(&a, &f)), "∇_a f"))
}

fn prop_vector_matches_connection(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, v) = (c.vector(r), c.vector(r));
    let slot = conn.nabla_multivector(&a, &v)?;
    let direct = conn.nabla_vec(&a, &v)?;
    Ok(c.residual(c.gap(&slot, &direct), "slot formula on a vector field"))
}

fn prop_form_duality_rule(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, v, w) = (c.vector(r), c.vector(r), c.form(r));
    let lhs = along(&a, &w.dsp(&v)?);
    let rhs = conn.nabla_form(&a, &w)?.dsp(&v)? + w.dsp(&conn.nabla_vec(&a, &v)?)?;
    Ok(c.residual(c.gap_expr(&lhs, &rhs), "a⟨ω,v⟩"))
}

fn prop_form_matches_multiform(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, w) = (c.vector(r), c.form(r));
    Ok(c.residual(c.gap(&conn.nabla_multiform(&a, &w)?, &conn.nabla_form(&a, &w)?), "slot formula on a form field"))
}

fn prop_grade_preserving<const FORM: bool>(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let k = random::index(r, n + 1);
    let a = c.vector(r);
    let x = random::homogeneous_field(r, c.space(FORM), k);
    let d = conn.nabla_multivector(&a, &x)?;
    Ok(c.residual(c.gap(&d, &d.part(k)), &format!("grade {k}")))
}

fn prop_additive_direction<const FORM: bool>(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, b) = (c.vector(r), c.vector(r));
    let x = random::multivector_field(r, c.space(FORM));
    let lhs = conn.nabla_multivector(&a.add(&b)?, &x)?;
    let rhs = conn.nabla_multivector(&a, &x)?.add(&conn.nabla_multivector(&b, &x)?)?;
    Ok(c.residual(c.gap(&lhs, &rhs), "∇_{a+b}X"))
}

fn prop_function_linear_direction<const FORM: bool>(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, f) = (c.vector(r), random::polynomial(r, n));
    let x = random::multivector_field(r, c.space(FORM));
    let lhs = conn.nabla_multivector(&a.times(&f), &x)?;
    let rhs = conn.nabla_multivector(&a, &x)?.times(&f);
    Ok(c.residual(c.gap(&lhs, &rhs), "∇_{fa}X"))
}

fn prop_additive<const FORM: bool>(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let a = c.vector(r);
    let (x, y) = (random::multivector_field(r, c.space(FORM)), random::multivector_field(r, c.space(FORM)));
    let lhs = conn.nabla_multivector(&a, &x.add(&y)?)?;
    let rhs = conn.nabla_multivector(&a, &x)?.add(&conn.nabla_multivector(&a, &y)?)?;
    Ok(c.residual(c.gap(&lhs, &rhs), "∇_a(X+Y)"))
}

fn prop_leibniz_function<const FORM: bool>(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (a, f) = (c.vector(r), random::polynomial(r, n));
    let x = random::multivector_field(r, c.space(FORM));
    let lhs = conn.nabla_multivector(&a, &x.times(&f))?;
    let rhs = x.times(&along(&a, &f)).add(&conn.nabla_multivector(&a, &x)?.times(&f))?;
    Ok(c.residual(c.gap(&lhs, &rhs), "∇_a(fX)"))
}

fn prop_wedge_leibniz<const FORM: bool>(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let a = c.vector(r);
    let (x, y) = (random::multivector_field(r, c.space(FORM)), random::multivector_field(r, c.space(FORM)));
    let lhs = conn.nabla_multivector(&a, &x.wedge(&y)?)?;
    let rhs = conn.nabla_multivector(&a, &x)?.wedge(&y)?.add(&x.wedge(&conn.nabla_multivector(&a, &y)?)?)?;
    Ok(c.residual(c.gap(&lhs, &rhs), "∇_a(X∧Y)"))
}

fn prop_dsp_leibniz(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let a = c.vector(r);
    let (phi, x) = (random::multivector_field(r, c.d), random::multivector_field(r, c.v));
    let lhs = along(&a, &phi.dsp(&x)?);
    let rhs = conn.nabla_multivector(&a, &phi)?.dsp(&x)? + phi.dsp(&conn.nabla_multivector(&a, &x)?)?;
    Ok(c.residual(c.gap_expr(&lhs, &rhs), "a⟨Φ,X⟩"))
}

type Product = fn(&MultivectorField, &MultivectorField) -> Result<MultivectorField>;

/// Leibniz rule for a contraction, with the first factor a multiform when `FORM_FIRST`.
fn contraction_leibniz<const FORM_FIRST: bool>(n: usize, r: &mut TestRng, op: Product, what: &str) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let a = c.vector(r);
    let (s1, s2) = if FORM_FIRST { (c.d, c.v) } else { (c.v, c.d) };
    let (x, y) = (random::multivector_field(r, s1), random::multivector_field(r, s2));
    let lhs = conn.nabla_multivector(&a, &op(&x, &y)?)?;
    let rhs = op(&conn.nabla_multivector(&a, &x)?, &y)?.add(&op(&x, &conn.nabla_multivector(&a, &y)?)?)?;
    Ok(c.residual(c.gap(&lhs, &rhs), what))
}

fn prop_lcontr_leibniz<const FORM_FIRST: bool>(n: usize, r: &mut TestRng) -> Result<Residual> {
    contraction_leibniz::<FORM_FIRST>(n, r, MultivectorField::lcontr, "∇_a of a left contraction")
}

fn prop_rcontr_leibniz<const FORM_FIRST: bool>(n: usize, r: &mut TestRng) -> Result<Residual> {
    contraction_leibniz::<FORM_FIRST>(n, r, MultivectorField::rcontr, "∇_a of a right contraction")
}

fn prop_ext_additive_direction(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let out = any_side(r);
    let tau = small_extensor(r, n, out);
    let (a, b) = (c.vector(r), c.vector(r));
    let lhs = conn.nabla_extensor(&a.add(&b)?, &tau)?;
    let rhs = conn.nabla_extensor(&a, &tau)?.add(&conn.nabla_extensor(&b, &tau)?)?;
    Ok(c.residual(c.gap_ext(&lhs, &rhs)?, "∇_{a+b}τ"))
}

fn prop_ext_function_linear_direction(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let out = any_side(r);
    let tau = small_extensor(r, n, out);
    let (a, f) = (c.vector(r), random::polynomial(r, n));
    let lhs = conn.nabla_extensor(&a.times(&f), &tau)?;
    let rhs = conn.nabla_extensor(&a, &tau)?.times(&f);
    Ok(c.residual(c.gap_ext(&lhs, &rhs)?, "∇_{fa}τ"))
}

fn prop_ext_additive(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let out = any_side(r);
    let tau = small_extensor(r, n, out);
    let sigma = ExtensorField::from_coeffs(
        tau.sig().clone(),
        (0..tau.sig().coeff_count()).map(|_| random::polynomial(r, n)).collect(),
    )?;
    let a = c.vector(r);
    let lhs = conn.nabla_extensor(&a, &tau.add(&sigma)?)?;
    let rhs = conn.nabla_extensor(&a, &tau)?.add(&conn.nabla_extensor(&a, &sigma)?)?;
    Ok(c.residual(c.gap_ext(&lhs, &rhs)?, "∇_a(τ+σ)"))
}

fn prop_ext_leibniz_function(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let out = any_side(r);
    let tau = small_extensor(r, n, out);
    let (a, f) = (c.vector(r), random::polynomial(r, n));
    let lhs = conn.nabla_extensor(&a, &tau.times(&f))?;
    let rhs = tau.times(&along(&a, &f)).add(&conn.nabla_extensor(&a, &tau)?.times(&f))?;
    Ok(c.residual(c.gap_ext(&lhs, &rhs)?, "∇_a(fτ)"))
}

fn prop_ext_slot_rule(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let out = any_side(r);
    let tau = small_extensor(r, n, out);
    let a = c.vector(r);
    let args = random::field_arguments(r, &tau);
    let refs: Vec<&MultivectorField> = args.iter().collect();
    let d = conn.nabla_extensor(&a, &tau)?;
    let lhs = d.eval_fields(&refs)?;
    let mut rhs = conn.nabla_multivector(&a, &tau.eval_fields(&refs)?)?;
    for s in 0..args.len() {
        let moved = conn.nabla_multivector(&a, &args[s])?;
        let mut rr = refs.clone();
        rr[s] = &moved;
        let term = tau.eval_fields(&rr)?;
        rhs = rhs.sub(&term.retag(rhs.space())?)?;
    }
    let lhs = lhs.retag(rhs.space())?;
    Ok(c.residual(c.gap(&lhs, &rhs), "(∇_aτ) on random field arguments"))
}

fn prop_ext_one_slot_rule(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let v1 = VSpaceSig::homogeneous(Side::Primal, n, 1)?;
    let sig = crate::extensor::ExtSignature::new(vec![v1.clone()], vec![], v1)?;
    let tau = ExtensorField::from_coeffs(sig, (0..n * n).map(|_| random::polynomial(r, n)).collect())?;
    let (a, v) = (c.vector(r), c.vector(r));
    let lhs = conn.nabla_extensor(&a, &tau)?.eval_fields(&[&v])?;
    let rhs = conn.nabla_vec(&a, &tau.eval_fields(&[&v])?)?.sub(&tau.eval_fields(&[&conn.nabla_vec(&a, &v)?])?)?;
    Ok(c.residual(c.gap(&lhs, &rhs), "(∇_aτ)(v) = ∇_a τ(v) − τ(∇_a v)"))
}

type ExtProduct = fn(&ExtensorField, &ExtensorField) -> Result<ExtensorField>;

fn ext_leibniz(n: usize, r: &mut TestRng, op: ExtProduct, sides: (Side, Side), what: &str) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let pick = |r: &mut TestRng, out| {
        let (k, l) = [(1, 0), (0, 1)][random::index(r, 2)];
        random::extensor_field(r, n, k, l, out)
    };
    let tau = pick(r, sides.0);
    let sigma = pick(r, sides.1);
    let a = c.vector(r);
    let lhs = conn.nabla_extensor(&a, &op(&tau, &sigma)?)?;
    let rhs = op(&conn.nabla_extensor(&a, &tau)?, &sigma)?.add(&op(&tau, &conn.nabla_extensor(&a, &sigma)?)?)?;
    Ok(c.residual(c.gap_ext(&lhs, &rhs)?, what))
}

fn prop_ext_wedge_leibniz(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = any_side(r);
    ext_leibniz(n, r, ExtensorField::wedge, (s, s), "∇_a(τ∧σ)")
}

fn prop_ext_dsp_leibniz(n: usize, r: &mut TestRng) -> Result<Residual> {
    ext_leibniz(n, r, ExtensorField::dsp, (Side::Dual, Side::Primal), "∇_a⟨τ,σ⟩")
}

fn prop_ext_lcontr_leibniz(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = any_side(r);
    ext_leibniz(n, r, ExtensorField::lcontr, (s, s.opposite()), "∇_a⟨τ,σ|")
}

fn prop_ext_rcontr_leibniz(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = any_side(r);
    ext_leibniz(n, r, ExtensorField::rcontr, (s, s.opposite()), "∇_a|τ,σ⟩")
}

fn prop_ext_adjoint_commutes(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let (k, l) = if random::flip(r) { (1, 0) } else { (0, 1) };
    let out = any_side(r);
    let tau = random::extensor_field(r, n, k, l, out);
    let a = c.vector(r);
    let lhs = conn.nabla_extensor(&a, &tau)?.adjoint()?;
    let rhs = conn.nabla_extensor(&a, &tau.adjoint()?)?;
    Ok(c.residual(c.gap_ext(&lhs, &rhs)?, "(∇_aτ)^△"))
}

fn prop_ext_identity_parallel(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let side = any_side(r);
    let id = ExtensorField::constant(&Extensor::identity(&random::vspace_sig(r, side, n)));
    let a = c.vector(r);
    let d = conn.nabla_extensor(&a, &id)?;
    Ok(c.residual(c.gap_ext(&d, &ExtensorField::zero(d.sig().clone()))?, "∇_a of an identity extensor"))
}

struct Deformed {
    c: Ctx,
    conn: Connection,
    lambda: OperatorField,
    deformed: Connection,
    a: VectorField,
}

fn deformed(n: usize, r: &mut TestRng) -> Result<Deformed> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let lambda = random::operator_field(r, n, &c.pts);
    let deformed = conn.deform(&lambda)?;
    let a = c.vector(r);
    Ok(Deformed { c, conn, lambda, deformed, a })
}

fn prop_deformed_vector(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = deformed(n, r)?;
    let v = s.c.vector(r);
    let lhs = s.deformed.nabla_vec(&s.a, &v)?;
    let rhs = s.lambda.apply(&s.conn.nabla_vec(&s.a, &s.lambda.inverse().apply(&v)?)?)?;
    Ok(s.c.residual(s.c.gap(&lhs, &rhs), "λ(∇_a λ⁻¹ v)"))
}

fn prop_deformed_form(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = deformed(n, r)?;
    let w = s.c.form(r);
    let lhs = s.deformed.nabla_form(&s.a, &w)?;
    let inner = s.conn.nabla_form(&s.a, &s.lambda.adjoint().apply(&w)?)?;
    let rhs = s.lambda.inverse().adjoint().apply(&inner)?;
    Ok(s.c.residual(s.c.gap(&lhs, &rhs), "λ^{-△}(∇_a λ^△ ω)"))
}

fn prop_deformed_multivector(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = deformed(n, r)?;
    let x = random::multivector_field(r, s.c.v);
    let lhs = s.deformed.nabla_multivector(&s.a, &x)?;
    let inner = s.conn.nabla_multivector(&s.a, &s.lambda.inverse().epe_apply(&x)?)?;
    let rhs = s.lambda.epe_apply(&inner)?;
    Ok(s.c.residual(s.c.gap(&lhs, &rhs), "λ̲(∇_a λ̲⁻¹ X)"))
}

fn prop_deformed_multiform(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = deformed(n, r)?;
    let phi = random::multivector_field(r, s.c.d);
    let lhs = s.deformed.nabla_multiform(&s.a, &phi)?;
    let inner = s.conn.nabla_multiform(&s.a, &s.lambda.adjoint().epe_apply(&phi)?)?;
    let rhs = s.lambda.inverse().adjoint().epe_apply(&inner)?;
    Ok(s.c.residual(s.c.gap(&lhs, &rhs), "λ̲^{-△}(∇_a λ̲^△ Φ)"))
}

fn prop_deformed_multivector_extensor(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = deformed(n, r)?;
    let tau = small_extensor(r, n, Side::Primal);
    let lhs = s.deformed.nabla_extensor(&s.a, &tau)?;
    let inner = s.conn.nabla_extensor(&s.a, &epe_on_field(&s.lambda.inverse(), &tau)?)?;
    let rhs = epe_on_field(&s.lambda, &inner)?;
    Ok(s.c.residual(s.c.gap_ext(&lhs, &rhs)?, "λ̲∇_a λ̲⁻¹τ"))
}

fn prop_deformed_multiform_extensor(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = deformed(n, r)?;
    let upsilon = small_extensor(r, n, Side::Dual);
    let lhs = s.deformed.nabla_extensor(&s.a, &upsilon)?;
    let inner = s.conn.nabla_extensor(&s.a, &epe_on_field(&s.lambda.adjoint(), &upsilon)?)?;
    let rhs = epe_on_field(&s.lambda.inverse().adjoint(), &inner)?;
    Ok(s.c.residual(s.c.gap_ext(&lhs, &rhs)?, "λ̲^{-△}∇_a λ̲^△υ"))
}

fn prop_deformed_by_scalar(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let k = random::uniform(r, 0.5, 3.0);
    let d = conn.deform(&OperatorField::identity(Side::Primal, n).scale(k))?;
    let worst = conn.coefficients().iter().zip(d.coefficients()).map(|(x, y)| c.gap_expr(x, y)).fold(0.0, f64::max);
    Ok(c.residual(worst, &format!("λ = {k:.3}·id")))
}

fn prop_relative_annihilates_frame(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let f = random::frame_field(r, n, &c.pts);
    let a = c.vector(r);
    let mut worst: f64 = 0.0;
    for mu in 0..n {
        let d = partial_a(&f, &a, &f.vector(mu))?;
        worst = worst.max(c.gap(&d, &VectorField::zero(c.v)));
    }
    Ok(c.residual(worst, "∂_a b_μ"))
}

fn prop_relative_expansion(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let f = random::frame_field(r, n, &c.pts);
    let (a, v) = (c.vector(r), c.vector(r));
    let mut want = VectorField::zero(c.v);
    for s in 0..n {
        want = want.add(&f.vector(s).times(&along(&a, &f.coform(s).dsp(&v)?)))?;
    }
    Ok(c.residual(c.gap(&partial_a(&f, &a, &v)?, &want), "[aβ^σ(v)] b_σ"))
}

fn prop_relative_unique(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let f = random::frame_field(r, n, &c.pts);
    // the connection forced by ∇_{∂_μ} b_σ = 0: γ_μ = −(∂_μ B) B⁻¹
    let other = Connection::from_fn(n, |k, mu, nu| {
        let terms: Vec<Expr> = (0..n).map(|s| f.b().entry(k, s).partial(mu) * f.beta().entry(s, nu)).collect();
        -Expr::total(&terms)
    });
    let (a, v) = (c.vector(r), c.vector(r));
    let mut worst = c.gap(&other.nabla_vec(&a, &v)?, &partial_a(&f, &a, &v)?);
    for mu in 0..n {
        worst = worst.max(c.gap(&other.nabla_vec(&a, &f.vector(mu))?, &VectorField::zero(c.v)));
    }
    Ok(c.residual(worst, "operator annihilating the frame"))
}

fn prop_relative_coordinate_frame(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let f = crate::fields::FrameField::coordinate(n);
    let (a, v) = (c.vector(r), c.vector(r));
    Ok(c.residual(c.gap(&partial_a(&f, &a, &v)?, &v.directional(&a)), "coordinate frame"))
}

struct Split {
    c: Ctx,
    conn: Connection,
    rel: Connection,
    gamma: OperatorField,
    a: VectorField,
}

fn split(n: usize, r: &mut TestRng) -> Result<Split> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let f = random::frame_field(r, n, &c.pts);
    let a = c.vector(r);
    let gamma = split_operator(&gamma_split(&conn, &f)?, &a)?;
    Ok(Split { c, conn, rel: relative_connection(&f), gamma, a })
}

fn prop_split_decomposes(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let conn = random::connection(r, n);
    let f = random::frame_field(r, n, &c.pts);
    let (a, v) = (c.vector(r), c.vector(r));
    let g = gamma_split(&conn, &f)?;
    let rhs = partial_a(&f, &a, &v)?.add(&g.eval_fields(&[&a, &v])?)?;
    Ok(c.residual(c.gap(&conn.nabla_vec(&a, &v)?, &rhs), "Γ = B + γ"))
}

fn prop_split_vector(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = split(n, r)?;
    let v = s.c.vector(r);
    let rhs = s.rel.nabla_vec(&s.a, &v)?.add(&s.gamma.apply(&v)?)?;
    Ok(s.c.residual(s.c.gap(&s.conn.nabla_vec(&s.a, &v)?, &rhs), "∂_a v + γ_a(v)"))
}

fn prop_split_form(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = split(n, r)?;
    let w = s.c.form(r);
    let rhs = s.rel.nabla_form(&s.a, &w)?.sub(&s.gamma.adjoint().apply(&w)?)?;
    Ok(s.c.residual(s.c.gap(&s.conn.nabla_form(&s.a, &w)?, &rhs), "∂_a ω − γ_a^△(ω)"))
}

fn prop_split_multivector(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = split(n, r)?;
    let x = random::multivector_field(r, s.c.v);
    let rhs = s.rel.nabla_multivector(&s.a, &x)?.add(&s.gamma.ce_apply(&x)?)?;
    Ok(s.c.residual(s.c.gap(&s.conn.nabla_multivector(&s.a, &x)?, &rhs), "∂_a X + γ̆_a(X)"))
}

fn prop_split_multiform(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = split(n, r)?;
    let phi = random::multivector_field(r, s.c.d);
    let rhs = s.rel.nabla_multiform(&s.a, &phi)?.sub(&s.gamma.adjoint().ce_apply(&phi)?)?;
    Ok(s.c.residual(s.c.gap(&s.conn.nabla_multiform(&s.a, &phi)?, &rhs), "∂_a Φ − γ̆_a^△(Φ)"))
}

fn prop_split_multivector_extensor(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = split(n, r)?;
    let tau = small_extensor(r, n, Side::Primal);
    let rhs = s.rel.nabla_extensor(&s.a, &tau)?.add(&ce_on_field(&s.gamma, &tau)?)?;
    Ok(s.c.residual(s.c.gap_ext(&s.conn.nabla_extensor(&s.a, &tau)?, &rhs)?, "∂_aτ + γ̆_aτ"))
}

fn prop_split_multiform_extensor(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = split(n, r)?;
    let upsilon = small_extensor(r, n, Side::Dual);
    let rhs = s.rel.nabla_extensor(&s.a, &upsilon)?.sub(&ce_on_field(&s.gamma.adjoint(), &upsilon)?)?;
    Ok(s.c.residual(s.c.gap_ext(&s.conn.nabla_extensor(&s.a, &upsilon)?, &rhs)?, "∂_aυ − γ̆_a^△υ"))
}

struct Frames {
    c: Ctx,
    f: crate::fields::FrameField,
    g: crate::fields::FrameField,
    rel: Connection,
    rel2: Connection,
    j: OperatorField,
    a: VectorField,
}

fn frames(n: usize, r: &mut TestRng) -> Result<Frames> {
    let c = Ctx::new(n, r)?;
    let f = random::frame_field(r, n, &c.pts);
    let g = random::frame_field(r, n, &c.pts);
    let j = jacobian(&f, &g)?;
    let a = c.vector(r);
    Ok(Frames { rel: relative_connection(&f), rel2: relative_connection(&g), c, f, g, j, a })
}

fn prop_jacobian_maps_frames(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = frames(n, r)?;
    let inv = s.j.inverse();
    let mut worst: f64 = 0.0;
    for mu in 0..n {
        worst = worst.max(s.c.gap(&s.j.apply(&s.f.vector(mu))?, &s.g.vector(mu)));
        worst = worst.max(s.c.gap(&inv.apply(&s.g.vector(mu))?, &s.f.vector(mu)));
    }
    Ok(s.c.residual(worst, "J(b_μ) = b′_μ"))
}

fn prop_jacobian_vector(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = frames(n, r)?;
    let v = s.c.vector(r);
    let rhs = s.j.apply(&s.rel.nabla_vec(&s.a, &s.j.inverse().apply(&v)?)?)?;
    Ok(s.c.residual(s.c.gap(&s.rel2.nabla_vec(&s.a, &v)?, &rhs), "J(∂_a J⁻¹ v)"))
}

fn prop_jacobian_form(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = frames(n, r)?;
    let w = s.c.form(r);
    let rhs = s.j.inverse().adjoint().apply(&s.rel.nabla_form(&s.a, &s.j.adjoint().apply(&w)?)?)?;
    Ok(s.c.residual(s.c.gap(&s.rel2.nabla_form(&s.a, &w)?, &rhs), "J^{-△}(∂_a J^△ ω)"))
}

fn prop_jacobian_coframe(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = frames(n, r)?;
    let m = s.j.inverse().adjoint();
    let mut worst: f64 = 0.0;
    for mu in 0..n {
        worst = worst.max(s.c.gap(&m.apply(&s.f.coform(mu))?, &s.g.coform(mu)));
    }
    Ok(s.c.residual(worst, "J^{-△}(β^μ) = β′^μ"))
}

fn prop_jacobian_multivector(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = frames(n, r)?;
    let x = random::multivector_field(r, s.c.v);
    let rhs = s.j.epe_apply(&s.rel.nabla_multivector(&s.a, &s.j.inverse().epe_apply(&x)?)?)?;
    Ok(s.c.residual(s.c.gap(&s.rel2.nabla_multivector(&s.a, &x)?, &rhs), "J̲(∂_a J̲⁻¹ X)"))
}

fn prop_jacobian_multiform(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = frames(n, r)?;
    let phi = random::multivector_field(r, s.c.d);
    let inner = s.rel.nabla_multiform(&s.a, &s.j.adjoint().epe_apply(&phi)?)?;
    let rhs = s.j.inverse().adjoint().epe_apply(&inner)?;
    Ok(s.c.residual(s.c.gap(&s.rel2.nabla_multiform(&s.a, &phi)?, &rhs), "J̲^{-△}(∂_a J̲^△ Φ)"))
}

fn prop_jacobian_is_deformation(n: usize, r: &mut TestRng) -> Result<Residual> {
    let s = frames(n, r)?;
    let d = s.rel.deform(&s.j)?;
    let worst = d.coefficients().iter().zip(s.rel2.coefficients()).map(|(x, y)| s.c.gap_expr(x, y)).fold(0.0, f64::max);
    Ok(s.c.residual(worst, "J-deformation of ∂ is ∂′"))
}

fn prop_bracket_antisymmetric(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let (a, b) = (c.vector(r), c.vector(r));
    Ok(c.residual(c.gap(&lie_bracket(&a, &b)?, &lie_bracket(&b, &a)?.neg()), "[a,b] + [b,a]"))
}

fn prop_bracket_jacobi(n: usize, r: &mut TestRng) -> Result<Residual> {
    let c = Ctx::new(n, r)?;
    let (a, b, d) = (c.vector(r), c.vector(r), c.vector(r));
    let sum = lie_bracket(&a, &lie_bracket(&b, &d)?)?
        .add(&lie_bracket(&b, &lie_bracket(&d, &a)?)?)?
        .add(&lie_bracket(&d, &lie_bracket(&a, &b)?)?)?;
    Ok(c.residual(c.gap(&sum, &VectorField::zero(c.v)), "Jacobi sum"))
}

pub(super) fn properties() -> Vec<Property> {
    let p = |name, f| Property::new(name, f).dims(2, 3);
    vec![
        p("parallelism/strong-linearity", prop_strong_linearity),
        p("parallelism/quasi-linearity", prop_quasi_linearity),
        p("bracket/antisymmetric", prop_bracket_antisymmetric),
        p("bracket/jacobi", prop_bracket_jacobi),
        p("covariant/scalar-is-directional", prop_scalar_directional),
        p("covariant/vector-matches-connection", prop_vector_matches_connection),
        p("covariant/form-duality-rule", prop_form_duality_rule),
        p("covariant/form-matches-multiform-rule", prop_form_matches_multiform),
        p("covariant/grade-preserving/multivector", prop_grade_preserving::<false>),
        p("covariant/grade-preserving/multiform", prop_grade_preserving::<true>),
        p("covariant/additive-in-direction/multivector", prop_additive_direction::<false>),
        p("covariant/additive-in-direction/multiform", prop_additive_direction::<true>),
        p("covariant/function-linear-in-direction/multivector", prop_function_linear_direction::<false>),
        p("covariant/function-linear-in-direction/multiform", prop_function_linear_direction::<true>),
        p("covariant/additive/multivector", prop_additive::<false>),
        p("covariant/additive/multiform", prop_additive::<true>),
        p("covariant/leibniz-function/multivector", prop_leibniz_function::<false>),
        p("covariant/leibniz-function/multiform", prop_leibniz_function::<true>),
        p("covariant/wedge-leibniz/multivector", prop_wedge_leibniz::<false>),
        p("covariant/wedge-leibniz/multiform", prop_wedge_leibniz::<true>),
        p("covariant/dsp-leibniz", prop_dsp_leibniz),
        p("covariant/lcontr-leibniz/form-vector", prop_lcontr_leibniz::<true>),
        p("covariant/lcontr-leibniz/vector-form", prop_lcontr_leibniz::<false>),
        p("covariant/rcontr-leibniz/form-vector", prop_rcontr_leibniz::<true>),
        p("covariant/rcontr-leibniz/vector-form", prop_rcontr_leibniz::<false>),
        p("ext-covariant/additive-in-direction", prop_ext_additive_direction),
        p("ext-covariant/function-linear-in-direction", prop_ext_function_linear_direction),
        p("ext-covariant/additive", prop_ext_additive),
        p("ext-covariant/leibniz-function", prop_ext_leibniz_function),
        p("ext-covariant/slot-rule-on-field-arguments", prop_ext_slot_rule),
        p("ext-covariant/one-slot-rule", prop_ext_one_slot_rule),
        p("ext-covariant/wedge-leibniz", prop_ext_wedge_leibniz),
        p("ext-covariant/dsp-leibniz", prop_ext_dsp_leibniz),
        p("ext-covariant/lcontr-leibniz", prop_ext_lcontr_leibniz),
        p("ext-covariant/rcontr-leibniz", prop_ext_rcontr_leibniz),
        p("ext-covariant/adjoint-commutes", prop_ext_adjoint_commutes),
        p("ext-covariant/identity-is-parallel", prop_ext_identity_parallel),
        p("deformed/vector", prop_deformed_vector),
        p("deformed/form", prop_deformed_form),
        p("deformed/multivector", prop_deformed_multivector),
        p("deformed/multiform", prop_deformed_multiform),
        p("deformed/multivector-extensor", prop_deformed_multivector_extensor),
        p("deformed/multiform-extensor", prop_deformed_multiform_extensor),
        p("deformed/scalar-multiple-is-trivial", prop_deformed_by_scalar),
        p("relative/annihilates-frame", prop_relative_annihilates_frame),
        p("relative/frame-expansion", prop_relative_expansion),
        p("relative/unique-derivative-annihilating-frame", prop_relative_unique),
        p("relative/coordinate-frame-is-directional", prop_relative_coordinate_frame),
        p("split/connection-decomposes", prop_split_decomposes),
        p("split/vector", prop_split_vector),
        p("split/form", prop_split_form),
        p("split/multivector", prop_split_multivector),
        p("split/multiform", prop_split_multiform),
        p("split/multivector-extensor", prop_split_multivector_extensor),
        p("split/multiform-extensor", prop_split_multiform_extensor),
        p("jacobian/maps-frames", prop_jacobian_maps_frames),
        p("jacobian/vector-transport", prop_jacobian_vector),
        p("jacobian/form-transport", prop_jacobian_form),
        p("jacobian/coframe-transport", prop_jacobian_coframe),
        p("jacobian/multivector-transport", prop_jacobian_multivector),
        p("jacobian/multiform-transport", prop_jacobian_multiform),
        p("jacobian/relative-derivative-is-deformation", prop_jacobian_is_deformation),
    ]
}
