//! Multivector and multiform extensors over `V`.
//!
//! An extensor is a multilinear map from `k` multivector slots and `l`
//! multiform slots into a graded subspace of `⋀V` or `⋀V*`. It is stored as
//! its values on every tuple of basis blades, so equality, sums and adjoints
//! are finite coefficient computations.

use crate::duality::{dsp, lcontr, rcontr};
use crate::error::{Error, Result};
use crate::exterior::{grade, BaseSpace, Multivector, SpaceKind, MAX_N, PRINT_EPS};

mod operators;

pub use operators::{ce_on_extensor, epe_on_extensor, AlgebraOperator, Operator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Primal,
    Dual,
}

impl Side {
    pub fn opposite(self) -> Self {
        match self {
            Side::Primal => Side::Dual,
            Side::Dual => Side::Primal,
        }
    }

    pub fn kind(self) -> SpaceKind {
        match self {
            Side::Primal => SpaceKind::Primal,
            Side::Dual => SpaceKind::Dual,
        }
    }

    pub fn of(kind: SpaceKind) -> Option<Self> {
        match kind {
            SpaceKind::Primal => Some(Side::Primal),
            SpaceKind::Dual => Some(Side::Dual),
            SpaceKind::Hyperbolic => None,
        }
    }

    pub fn space(self, n: usize) -> Result<BaseSpace> {
        BaseSpace::new(self.kind(), n)
    }
}

/// A sum of homogeneous subspaces `⋀^{p_1}V + ⋯ + ⋀^{p_μ}V` (or of `⋀V*`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VSpaceSig {
    side: Side,
    n: usize,
    grades: Vec<usize>,
    basis: Vec<u32>,
}

impl VSpaceSig {
    /// Grades must be strictly increasing and at most `n`. An empty list is
    /// the zero subspace, which only arises as a product output.
    pub fn new(side: Side, n: usize, grades: &[usize]) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::UnsupportedDimension { n, max: MAX_N });
        }
        if let Some(&g) = grades.iter().find(|&&g| g > n) {
            return Err(Error::GradeOutOfRange { grade: g, max: n });
        }
        if grades.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Signature(format!("grades {grades:?} are not strictly increasing")));
        }
        let basis = (0..1u32 << n).filter(|m| grades.contains(&grade(*m))).collect();
        Ok(Self { side, n, grades: grades.to_vec(), basis })
    }

    pub fn full(side: Side, n: usize) -> Result<Self> {
        Self::new(side, n, &(0..=n).collect::<Vec<_>>())
    }

    pub fn homogeneous(side: Side, n: usize, k: usize) -> Result<Self> {
        Self::new(side, n, &[k])
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grades(&self) -> &[usize] {
        &self.grades
    }

    /// Basis blade masks in increasing order.
    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, mask: u32) -> Option<usize> {
        self.basis.binary_search(&mask).ok()
    }

    pub fn space(&self) -> BaseSpace {
        BaseSpace::new(self.side.kind(), self.n).expect("validated dimension")
    }

    /// The same grades on the other side of the duality.
    pub fn dual(&self) -> Self {
        Self { side: self.side.opposite(), ..self.clone() }
    }

    /// True when the subspace holds nothing but scalars.
    pub fn is_scalar(&self) -> bool {
        self.grades.iter().all(|g| *g == 0)
    }

    fn retagged(&self, side: Side) -> Self {
        Self { side, ..self.clone() }
    }

    pub fn contains(&self, x: &Multivector) -> bool {
        x.kind() == self.side.kind()
            && x.n() == self.n
            && x.terms().all(|(m, c)| c.abs() <= PRINT_EPS || self.grades.contains(&grade(m)))
    }
}

/// Projection `⟨X⟩^{⋀◇V}` onto the grades of a signature.
pub fn part_diamond(x: &Multivector, sig: &VSpaceSig) -> Result<Multivector> {
    if x.kind() != sig.side.kind() {
        return Err(Error::SpaceMismatch { expected: sig.side.kind(), found: x.kind() });
    }
    if x.n() != sig.n {
        return Err(Error::DimensionMismatch { left: sig.n, right: x.n() });
    }
    Ok(x.part_in(&sig.grades))
}

/// Input and output spaces of an extensor: `k` multivector slots, then `l`
/// multiform slots, then the output.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtSignature {
    n: usize,
    vec_inputs: Vec<VSpaceSig>,
    form_inputs: Vec<VSpaceSig>,
    output: VSpaceSig,
}

impl ExtSignature {
    /// A signature with no slots at all describes a constant.
    pub fn new(vec_inputs: Vec<VSpaceSig>, form_inputs: Vec<VSpaceSig>, output: VSpaceSig) -> Result<Self> {
        let n = output.n;
        for (i, s) in vec_inputs.iter().chain(&form_inputs).enumerate() {
            if s.n != n {
                return Err(Error::DimensionMismatch { left: n, right: s.n });
            }
            let want = if i < vec_inputs.len() { Side::Primal } else { Side::Dual };
            if s.side != want {
                return Err(Error::Signature(format!("slot {i} should lie on the {want:?} side")));
            }
        }
        Ok(Self { n, vec_inputs, form_inputs, output })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vec_inputs(&self) -> &[VSpaceSig] {
        &self.vec_inputs
    }

    pub fn form_inputs(&self) -> &[VSpaceSig] {
        &self.form_inputs
    }

    pub fn output(&self) -> &VSpaceSig {
        &self.output
    }

    pub fn arity(&self) -> usize {
        self.vec_inputs.len() + self.form_inputs.len()
    }

    /// Input slots in evaluation order.
    pub fn slots(&self) -> impl Iterator<Item = &VSpaceSig> {
        self.vec_inputs.iter().chain(&self.form_inputs)
    }

    pub fn slot(&self, i: usize) -> &VSpaceSig {
        if i < self.vec_inputs.len() {
            &self.vec_inputs[i]
        } else {
            &self.form_inputs[i - self.vec_inputs.len()]
        }
    }

    fn input_dims(&self) -> Vec<usize> {
        self.slots().map(VSpaceSig::dim).collect()
    }

    fn input_count(&self) -> usize {
        self.slots().map(VSpaceSig::dim).product()
    }

    /// Number of stored coefficients.
    pub fn coeff_count(&self) -> usize {
        self.input_count() * self.output.dim()
    }

    fn with_output(&self, output: VSpaceSig) -> Self {
        Self { output, ..self.clone() }
    }
}

/// Odometer over all index tuples below `dims`, last index fastest.
pub(crate) fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    let mut cur = vec![0; dims.len()];
    (0..total).map(move |step| {
        if step > 0 {
            for i in (0..dims.len()).rev() {
                cur[i] += 1;
                if cur[i] < dims[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
        cur.clone()
    })
}

fn flat(dims: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Extensor {
    sig: ExtSignature,
    coeffs: Vec<f64>,
}

impl Extensor {
    pub fn zero(sig: ExtSignature) -> Self {
        let len = sig.coeff_count();
        Self { sig, coeffs: vec![0.0; len] }
    }

    /// Coefficients in row-major order over the input slots, output index last.
    pub fn from_coeffs(sig: ExtSignature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.coeff_count() {
            return Err(Error::BadLength { expected: sig.coeff_count(), found: coeffs.len() });
        }
        Ok(Self { sig, coeffs })
    }

    /// Builds an extensor from its values on basis blade tuples.
    ///
    /// The closure receives one unit blade per slot. Its value must lie in
    /// the output signature; for a scalar-only output either side is accepted.
    pub fn from_fn(sig: ExtSignature, mut f: impl FnMut(&[Multivector]) -> Result<Multivector>) -> Result<Self> {
        let dims = sig.input_dims();
        let out = sig.output.clone();
        let arity = sig.arity();
        let mut coeffs = Vec::with_capacity(sig.coeff_count());
        for idx in tuples(&dims) {
            let args = idx
                .iter()
                .enumerate()
                .map(|(s, &i)| {
                    let slot = sig.slot(s);
                    Multivector::blade(slot.space(), slot.basis[i], 1.0)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut value = f(&args)?;
            if out.is_scalar() && value.kind() != out.side.kind() {
                value = value.retag(out.space())?;
            }
            if !out.contains(&value) {
                return Err(Error::OutsideSignature { slot: arity });
            }
            coeffs.extend(out.basis.iter().map(|m| value.coeff(*m)));
        }
        Ok(Self { sig, coeffs })
    }

    /// The identity map of a subspace.
    pub fn identity(space: &VSpaceSig) -> Self {
        let (vecs, forms) = match space.side {
            Side::Primal => (vec![space.clone()], vec![]),
            Side::Dual => (vec![], vec![space.clone()]),
        };
        let sig = ExtSignature::new(vecs, forms, space.clone()).expect("consistent slots");
        let d = space.dim();
        let mut coeffs = vec![0.0; d * d];
        for i in 0..d {
            coeffs[i * d + i] = 1.0;
        }
        Self { sig, coeffs }
    }

    /// A constant extensor with no slots whose value fills the whole space.
    pub fn constant(value: &Multivector) -> Result<Self> {
        let side =
            Side::of(value.kind()).ok_or(Error::SpaceMismatch { expected: SpaceKind::Primal, found: value.kind() })?;
        let out = VSpaceSig::full(side, value.n())?;
        let sig = ExtSignature::new(vec![], vec![], out.clone())?;
        let coeffs = out.basis.iter().map(|m| value.coeff(*m)).collect();
        Ok(Self { sig, coeffs })
    }

    /// The constant scalar extensor `α` with no slots.
    pub fn scalar(n: usize, value: f64) -> Result<Self> {
        let sig = ExtSignature::new(vec![], vec![], VSpaceSig::new(Side::Primal, n, &[0])?)?;
        Ok(Self { sig, coeffs: vec![value] })
    }

    pub fn sig(&self) -> &ExtSignature {
        &self.sig
    }

    pub fn n(&self) -> usize {
        self.sig.n
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient at one index per slot and an output index.
    pub fn coeff(&self, inputs: &[usize], output: usize) -> f64 {
        let dims = self.sig.input_dims();
        self.coeffs[flat(&dims, inputs) * self.sig.output.dim() + output]
    }

    fn output_at(&self, input: usize) -> Multivector {
        let out = &self.sig.output;
        let d = out.dim();
        let mut v = Multivector::zero(out.space());
        for (k, m) in out.basis.iter().enumerate() {
            v.coeffs_mut()[*m as usize] = self.coeffs[input * d + k];
        }
        v
    }

    /// Evaluates on arguments that lie in their slot signatures.
    pub fn eval(&self, args: &[&Multivector]) -> Result<Multivector> {
        if args.len() != self.sig.arity() {
            return Err(Error::Arity { expected: self.sig.arity(), found: args.len() });
        }
        let mut expansions = Vec::with_capacity(args.len());
        for (s, a) in args.iter().enumerate() {
            let slot = self.sig.slot(s);
            if !slot.contains(a) {
                return Err(Error::OutsideSignature { slot: s });
            }
            let terms: Vec<(usize, f64)> =
                slot.basis.iter().enumerate().map(|(i, m)| (i, a.coeff(*m))).filter(|(_, c)| *c != 0.0).collect();
            expansions.push(terms);
        }
        let out = &self.sig.output;
        let d = out.dim();
        let dims = self.sig.input_dims();
        let mut acc = vec![0.0; d];
        let lens: Vec<usize> = expansions.iter().map(Vec::len).collect();
        for pick in tuples(&lens) {
            let mut w = 1.0;
            let mut idx = 0;
            for (s, &p) in pick.iter().enumerate() {
                let (i, c) = expansions[s][p];
                w *= c;
                idx = idx * dims[s] + i;
            }
            for (k, a) in acc.iter_mut().enumerate() {
                *a += w * self.coeffs[idx * d + k];
            }
        }
        let mut v = Multivector::zero(out.space());
        for (k, m) in out.basis.iter().enumerate() {
            v.coeffs_mut()[*m as usize] = acc[k];
        }
        Ok(v)
    }

    /// Projects each argument onto its slot signature, then evaluates.
    pub fn eval_projected(&self, args: &[&Multivector]) -> Result<Multivector> {
        if args.len() != self.sig.arity() {
            return Err(Error::Arity { expected: self.sig.arity(), found: args.len() });
        }
        let projected =
            args.iter().enumerate().map(|(s, a)| part_diamond(a, self.sig.slot(s))).collect::<Result<Vec<_>>>()?;
        self.eval(&projected.iter().collect::<Vec<_>>())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::Signature("extensor signatures differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { sig: self.sig.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { sig: self.sig.clone(), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient difference; infinite when the signatures differ.
    pub fn distance(&self, other: &Self) -> f64 {
        match self.sub(other) {
            Ok(d) => d.max_abs(),
            Err(_) => f64::INFINITY,
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    /// Retags a scalar-only output to the given side.
    fn output_as(&self, side: Side) -> Self {
        if self.sig.output.side == side {
            return self.clone();
        }
        debug_assert!(self.sig.output.is_scalar());
        Self { sig: self.sig.with_output(self.sig.output.retagged(side)), coeffs: self.coeffs.clone() }
    }

    /// Duality adjoint of a one-slot extensor.
    ///
    /// `τ^△(Φ) = Σ_J ⟨Φ, τ(b_J)⟩ β^J` over the slot basis, so the coefficient
    /// tensor is transposed and both spaces move to the other side.
    pub fn adjoint(&self) -> Result<Self> {
        if self.sig.arity() != 1 {
            return Err(Error::Arity { expected: 1, found: self.sig.arity() });
        }
        let input = self.sig.slot(0).clone();
        let output = self.sig.output.clone();
        let new_in = output.dual();
        let (vecs, forms) = match new_in.side {
            Side::Primal => (vec![new_in], vec![]),
            Side::Dual => (vec![], vec![new_in]),
        };
        let sig = ExtSignature::new(vecs, forms, input.dual())?;
        let (din, dout) = (input.dim(), output.dim());
        let mut coeffs = vec![0.0; din * dout];
        for j in 0..din {
            for i in 0..dout {
                coeffs[i * din + j] = self.coeffs[j * dout + i];
            }
        }
        Ok(Self { sig, coeffs })
    }
}

/// Sides for a pairing of two outputs. A scalar-only output takes whichever
/// side the pairing needs.
fn pairing_sides(a: &VSpaceSig, b: &VSpaceSig) -> Result<(Side, Side)> {
    if a.side != b.side {
        Ok((a.side, b.side))
    } else if a.is_scalar() {
        Ok((b.side.opposite(), b.side))
    } else if b.is_scalar() {
        Ok((a.side, a.side.opposite()))
    } else {
        Err(Error::PairingType { left: a.side.kind(), right: b.side.kind() })
    }
}

fn common_side(a: &VSpaceSig, b: &VSpaceSig) -> Result<Side> {
    if a.side == b.side || b.is_scalar() {
        Ok(a.side)
    } else if a.is_scalar() {
        Ok(b.side)
    } else {
        Err(Error::Signature("exterior product of a multivector and a multiform extensor".into()))
    }
}

fn grade_set(pairs: impl Iterator<Item = Option<usize>>) -> Vec<usize> {
    let mut g: Vec<usize> = pairs.flatten().collect();
    g.sort_unstable();
    g.dedup();
    g
}

/// Combines two extensors slot-wise: inputs are `τ`'s vector slots, `σ`'s
/// vector slots, `τ`'s form slots, `σ`'s form slots.
fn combine(
    tau: &Extensor,
    sigma: &Extensor,
    output: VSpaceSig,
    op: impl Fn(&Multivector, &Multivector) -> Result<Multivector>,
) -> Result<Extensor> {
    if tau.n() != sigma.n() {
        return Err(Error::DimensionMismatch { left: tau.n(), right: sigma.n() });
    }
    let (ts, ss) = (&tau.sig, &sigma.sig);
    let vecs = ts.vec_inputs.iter().chain(&ss.vec_inputs).cloned().collect();
    let forms = ts.form_inputs.iter().chain(&ss.form_inputs).cloned().collect();
    let sig = ExtSignature::new(vecs, forms, output)?;
    let tv: Vec<Multivector> = (0..ts.input_count()).map(|i| tau.output_at(i)).collect();
    let sv: Vec<Multivector> = (0..ss.input_count()).map(|i| sigma.output_at(i)).collect();
    let (tk, sk) = (ts.vec_inputs.len(), ss.vec_inputs.len());
    let (tdims, sdims) = (ts.input_dims(), ss.input_dims());
    let out = sig.output.clone();
    let mut coeffs = Vec::with_capacity(sig.coeff_count());
    for idx in tuples(&sig.input_dims()) {
        let ti: Vec<usize> = idx[..tk].iter().chain(&idx[tk + sk..tk + sk + ts.form_inputs.len()]).copied().collect();
        let si: Vec<usize> = idx[tk..tk + sk].iter().chain(&idx[tk + sk + ts.form_inputs.len()..]).copied().collect();
        let v = op(&tv[flat(&tdims, &ti)], &sv[flat(&sdims, &si)])?;
        coeffs.extend(out.basis.iter().map(|m| v.coeff(*m)));
    }
    Ok(Extensor { sig, coeffs })
}

/// Exterior product `τ ∧ σ` of two extensors with outputs on the same side.
pub fn ext_wedge(tau: &Extensor, sigma: &Extensor) -> Result<Extensor> {
    let (a, b) = (&tau.sig.output, &sigma.sig.output);
    let side = common_side(a, b)?;
    let n = tau.n();
    let grades = grade_set(a.grades.iter().flat_map(|p| b.grades.iter().map(move |q| Some(p + q).filter(|g| *g <= n))));
    let out = VSpaceSig::new(side, n, &grades)?;
    let (t, s) = (tau.output_as(side), sigma.output_as(side));
    combine(&t, &s, out, |x, y| x.wedge(y))
}

/// Scalar extensor `⟨τ, σ⟩` of a form-valued and a vector-valued extensor.
pub fn ext_dsp(tau: &Extensor, sigma: &Extensor) -> Result<Extensor> {
    let (l, r) = pairing_sides(&tau.sig.output, &sigma.sig.output)?;
    let out = VSpaceSig::new(Side::Primal, tau.n(), &[0])?;
    let space = out.space();
    combine(&tau.output_as(l), &sigma.output_as(r), out, |x, y| Ok(Multivector::scalar(space, dsp(x, y)?)))
}

/// Left contracted product `⟨τ, σ|`, valued on the side of `σ`.
pub fn ext_lcontr(tau: &Extensor, sigma: &Extensor) -> Result<Extensor> {
    let (a, b) = (&tau.sig.output, &sigma.sig.output);
    let (l, r) = pairing_sides(a, b)?;
    let grades = grade_set(a.grades.iter().flat_map(|p| b.grades.iter().map(move |q| q.checked_sub(*p))));
    let out = VSpaceSig::new(r, tau.n(), &grades)?;
    combine(&tau.output_as(l), &sigma.output_as(r), out, lcontr)
}

/// Right contracted product `|τ, σ⟩`, valued on the side of `τ`.
pub fn ext_rcontr(tau: &Extensor, sigma: &Extensor) -> Result<Extensor> {
    let (a, b) = (&tau.sig.output, &sigma.sig.output);
    let (l, r) = pairing_sides(a, b)?;
    let grades = grade_set(a.grades.iter().flat_map(|p| b.grades.iter().map(move |q| p.checked_sub(*q))));
    let out = VSpaceSig::new(l, tau.n(), &grades)?;
    combine(&tau.output_as(l), &sigma.output_as(r), out, rcontr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize, comps: &[f64]) -> Multivector {
        Multivector::vector(BaseSpace::primal(n).unwrap(), comps).unwrap()
    }

    fn f(n: usize, comps: &[f64]) -> Multivector {
        Multivector::vector(BaseSpace::dual(n).unwrap(), comps).unwrap()
    }

    fn one_vec(n: usize) -> VSpaceSig {
        VSpaceSig::homogeneous(Side::Primal, n, 1).unwrap()
    }

    fn rank_one() -> Extensor {
        // v ↦ ⟨ε1, v⟩ e2
        let sig = ExtSignature::new(vec![one_vec(2)], vec![], one_vec(2)).unwrap();
        let eps1 = f(2, &[1.0, 0.0]);
        Extensor::from_fn(sig, |a| Ok(v(2, &[0.0, 1.0]) * dsp(&eps1, &a[0])?)).unwrap()
    }

    #[test]
    fn basis_and_part_diamond() {
        let s = VSpaceSig::new(Side::Primal, 2, &[0, 2]).unwrap();
        assert_eq!(s.basis(), &[0b00, 0b11]);
        let sp = BaseSpace::primal(2).unwrap();
        let x = Multivector::scalar(sp, 3.0) + v(2, &[1.0, 0.0]) + Multivector::blade(sp, 0b11, 1.0).unwrap();
        let want = Multivector::scalar(sp, 3.0) + Multivector::blade(sp, 0b11, 1.0).unwrap();
        assert_eq!(part_diamond(&x, &s).unwrap(), want);
        assert_eq!(part_diamond(&x, &VSpaceSig::full(Side::Primal, 2).unwrap()).unwrap(), x);
        assert!(VSpaceSig::new(Side::Primal, 2, &[2, 1]).is_err());
        assert!(VSpaceSig::new(Side::Primal, 2, &[3]).is_err());
    }

    #[test]
    fn identity_and_rank_one_evaluation() {
        let id = Extensor::identity(&one_vec(2));
        let e1 = v(2, &[1.0, 0.0]);
        assert_eq!(id.eval(&[&e1]).unwrap(), e1);
        let tau = rank_one();
        assert_eq!(tau.eval(&[&v(2, &[1.0, 3.0])]).unwrap(), v(2, &[0.0, 1.0]));
    }

    #[test]
    fn bilinear_wedge_extensor() {
        let id = Extensor::identity(&one_vec(2));
        let w = ext_wedge(&id, &id).unwrap();
        let got = w.eval(&[&v(2, &[1.0, 0.0]), &v(2, &[0.0, 1.0])]).unwrap();
        assert_eq!(got, Multivector::blade(BaseSpace::primal(2).unwrap(), 0b11, 1.0).unwrap());
        assert_eq!(w.sig().output().grades(), &[2]);
    }

    #[test]
    fn wedge_with_scalar_one_is_neutral() {
        let tau = rank_one();
        let w = ext_wedge(&tau, &Extensor::scalar(2, 1.0).unwrap()).unwrap();
        let x = v(2, &[0.5, -2.0]);
        assert_eq!(w.eval(&[&x]).unwrap(), tau.eval(&[&x]).unwrap());
    }

    #[test]
    fn out_of_signature_arguments_are_rejected() {
        let tau = rank_one();
        let sp = BaseSpace::primal(2).unwrap();
        let x = Multivector::scalar(sp, 1.0) + v(2, &[1.0, 3.0]);
        assert_eq!(tau.eval(&[&x]), Err(Error::OutsideSignature { slot: 0 }));
        assert_eq!(tau.eval_projected(&[&x]).unwrap(), v(2, &[0.0, 1.0]));
        assert!(matches!(tau.eval(&[]), Err(Error::Arity { .. })));
        assert!(tau.eval(&[&f(2, &[1.0, 0.0])]).is_err());
    }

    #[test]
    fn pairing_of_identities() {
        let dual = VSpaceSig::homogeneous(Side::Dual, 2, 1).unwrap();
        let d = ext_dsp(&Extensor::identity(&dual), &Extensor::identity(&one_vec(2))).unwrap();
        let got = d.eval(&[&v(2, &[1.0, 0.0]), &f(2, &[1.0, 0.0])]).unwrap();
        assert_eq!(got.scalar_part(), 1.0);
        let id = Extensor::identity(&one_vec(2));
        assert!(ext_dsp(&id, &id).is_err());
        assert!(ext_wedge(&id, &Extensor::identity(&dual)).is_err());
    }

    #[test]
    fn adjoint_of_rank_one_and_identity() {
        let adj = rank_one().adjoint().unwrap();
        // τ^△(Φ) = ⟨Φ, e2⟩ ε1
        assert_eq!(adj.eval(&[&f(2, &[0.0, 1.0])]).unwrap(), f(2, &[1.0, 0.0]));
        assert_eq!(adj.eval(&[&f(2, &[1.0, 0.0])]).unwrap(), f(2, &[0.0, 0.0]));
        let id = Extensor::identity(&one_vec(3));
        assert_eq!(id.adjoint().unwrap(), Extensor::identity(&one_vec(3).dual()));
        assert_eq!(rank_one().adjoint().unwrap().adjoint().unwrap(), rank_one());
        let w = ext_wedge(&id, &id).unwrap();
        assert!(w.adjoint().is_err());
    }

    #[test]
    fn coefficients_reproduce_basis_values() {
        let tau = rank_one();
        let s = one_vec(2);
        for (i, m) in s.basis().iter().enumerate() {
            let b = Multivector::blade(s.space(), *m, 1.0).unwrap();
            let val = tau.eval(&[&b]).unwrap();
            for (k, mk) in s.basis().iter().enumerate() {
                assert_eq!(tau.coeff(&[i], k), val.coeff(*mk));
            }
        }
    }

    #[test]
    fn tuple_odometer_order() {
        let all: Vec<Vec<usize>> = tuples(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[3], vec![1, 0]);
        assert_eq!(tuples(&[]).count(), 1);
        assert_eq!(tuples(&[0, 2]).count(), 0);
    }
}
