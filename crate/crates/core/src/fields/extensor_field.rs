//! Extensor fields: coefficient scalar fields over basis blade tuples.

use super::expr::Expr;
use super::multivector::MultivectorField;
use super::operator::OperatorField;
use crate::error::{Error, Result};
use crate::extensor::{ext_dsp, ext_lcontr, ext_rcontr, ext_wedge, tuples, ExtSignature, Extensor, Side, VSpaceSig};

#[derive(Clone, Debug, PartialEq)]
pub struct ExtensorField {
    sig: ExtSignature,
    coeffs: Vec<Expr>,
}

fn input_dims(sig: &ExtSignature) -> Vec<usize> {
    sig.slots().map(VSpaceSig::dim).collect()
}

/// Every component outside `basis` must be the zero tree.
fn components_in(x: &MultivectorField, sig: &VSpaceSig, slot: usize) -> Result<Vec<(usize, Expr)>> {
    let basis = sig.basis();
    for (m, c) in x.comps().iter().enumerate() {
        if !c.is_zero() && !basis.contains(&(m as u32)) {
            return Err(Error::OutsideSignature { slot });
        }
    }
    Ok(basis.iter().enumerate().map(|(i, m)| (i, x.comp(*m).clone())).filter(|(_, c)| !c.is_zero()).collect())
}

fn fit_scalar(x: &MultivectorField, sig: &VSpaceSig, side: Side) -> Result<MultivectorField> {
    if sig.is_scalar() && x.space().kind() != side.kind() {
        x.retag(side.space(x.n())?)
    } else {
        Ok(x.clone())
    }
}

impl ExtensorField {
    pub fn zero(sig: ExtSignature) -> Self {
        let len = sig.coeff_count();
        ExtensorField { sig, coeffs: vec![Expr::zero(); len] }
    }

    /// Coefficients in the layout of [`Extensor::from_coeffs`].
    pub fn from_coeffs(sig: ExtSignature, coeffs: Vec<Expr>) -> Result<Self> {
        if coeffs.len() != sig.coeff_count() {
            return Err(Error::BadLength { expected: sig.coeff_count(), found: coeffs.len() });
        }
        Ok(ExtensorField { sig, coeffs })
    }

    pub fn constant(tau: &Extensor) -> Self {
        ExtensorField { sig: tau.sig().clone(), coeffs: tau.coeffs().iter().map(|&c| Expr::constant(c)).collect() }
    }

    /// Builds a field from its values on constant basis blade fields.
    pub fn from_fn(
        sig: ExtSignature,
        mut f: impl FnMut(&[MultivectorField]) -> Result<MultivectorField>,
    ) -> Result<Self> {
        let out = sig.output().clone();
        let arity = sig.arity();
        let mut coeffs = Vec::with_capacity(sig.coeff_count());
        for idx in tuples(&input_dims(&sig)) {
            let args = idx
                .iter()
                .enumerate()
                .map(|(s, &i)| {
                    let slot = sig.slot(s);
                    MultivectorField::blade(slot.space(), slot.basis()[i])
                })
                .collect::<Result<Vec<_>>>()?;
            let value = fit_scalar(&f(&args)?, &out, out.side())?;
            if value.space() != out.space() {
                return Err(Error::OutsideSignature { slot: arity });
            }
            let comps = components_in(&value, &out, arity)?;
            let mut row = vec![Expr::zero(); out.dim()];
            for (k, c) in comps {
                row[k] = c;
            }
            coeffs.extend(row);
        }
        Ok(ExtensorField { sig, coeffs })
    }

    pub fn sig(&self) -> &ExtSignature {
        &self.sig
    }

    pub fn n(&self) -> usize {
        self.sig.n()
    }

    pub fn coeffs(&self) -> &[Expr] {
        &self.coeffs
    }

    pub fn eval(&self, p: &[f64]) -> Result<Extensor> {
        Extensor::from_coeffs(self.sig.clone(), self.coeffs.iter().map(|c| c.eval(p)).collect())
    }

    /// Symbolic value on field arguments lying in the slot signatures.
    pub fn eval_fields(&self, args: &[&MultivectorField]) -> Result<MultivectorField> {
        if args.len() != self.sig.arity() {
            return Err(Error::Arity { expected: self.sig.arity(), found: args.len() });
        }
        let mut expansions = Vec::with_capacity(args.len());
        for (s, a) in args.iter().enumerate() {
            let slot = self.sig.slot(s);
            let a = fit_scalar(a, slot, slot.side())?;
            if a.space() != slot.space() {
                return Err(Error::OutsideSignature { slot: s });
            }
            expansions.push(components_in(&a, slot, s)?);
        }
        let out = self.sig.output();
        let d = out.dim();
        let dims = input_dims(&self.sig);
        let lens: Vec<usize> = expansions.iter().map(Vec::len).collect();
        let mut acc: Vec<Vec<Expr>> = vec![Vec::new(); d];
        for pick in tuples(&lens) {
            let mut w = Expr::one();
            let mut idx = 0;
            for (s, &p) in pick.iter().enumerate() {
                let (i, c) = &expansions[s][p];
                w = &w * c;
                idx = idx * dims[s] + i;
            }
            for (k, a) in acc.iter_mut().enumerate() {
                let c = &self.coeffs[idx * d + k];
                if !c.is_zero() {
                    a.push(&w * c);
                }
            }
        }
        let mut comps = vec![Expr::zero(); out.space().blade_count()];
        for (k, m) in out.basis().iter().enumerate() {
            comps[*m as usize] = Expr::total(&acc[k]);
        }
        MultivectorField::from_comps(out.space(), comps)
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
        Ok(ExtensorField { sig: self.sig.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(ExtensorField { sig: self.sig.clone(), coeffs })
    }

    /// Pointwise product with a scalar field.
    pub fn times(&self, f: &Expr) -> Self {
        ExtensorField { sig: self.sig.clone(), coeffs: self.coeffs.iter().map(|c| c * f).collect() }
    }

    /// Duality adjoint of a one-slot field, taken pointwise.
    pub fn adjoint(&self) -> Result<Self> {
        let shape = Extensor::from_coeffs(self.sig.clone(), (0..self.coeffs.len()).map(|i| i as f64).collect())?;
        let moved = shape.adjoint()?;
        let coeffs = moved.coeffs().iter().map(|&i| self.coeffs[i as usize].clone()).collect();
        Ok(ExtensorField { sig: moved.sig().clone(), coeffs })
    }

    fn combine(
        &self,
        other: &Self,
        shape: fn(&Extensor, &Extensor) -> Result<Extensor>,
        op: impl Fn(&MultivectorField, &MultivectorField) -> Result<MultivectorField>,
    ) -> Result<Self> {
        let sig = shape(&Extensor::zero(self.sig.clone()), &Extensor::zero(other.sig.clone()))?.sig().clone();
        let (tk, sk) = (self.sig.vec_inputs().len(), other.sig.vec_inputs().len());
        let tl = self.sig.form_inputs().len();
        ExtensorField::from_fn(sig, |args| {
            let ta: Vec<&MultivectorField> = args[..tk].iter().chain(&args[tk + sk..tk + sk + tl]).collect();
            let sa: Vec<&MultivectorField> = args[tk..tk + sk].iter().chain(&args[tk + sk + tl..]).collect();
            op(&self.eval_fields(&ta)?, &other.eval_fields(&sa)?)
        })
    }

    /// Sides for pairing two values: a scalar-only output is moved opposite the other.
    fn paired(
        &self,
        other: &Self,
        x: &MultivectorField,
        y: &MultivectorField,
    ) -> Result<(MultivectorField, MultivectorField)> {
        let (a, b) = (self.sig.output(), other.sig.output());
        if x.space().kind() != y.space().kind() {
            return Ok((x.clone(), y.clone()));
        }
        if a.is_scalar() {
            let side = b.side().opposite();
            Ok((x.retag(side.space(x.n())?)?, y.clone()))
        } else if b.is_scalar() {
            let side = a.side().opposite();
            Ok((x.clone(), y.retag(side.space(y.n())?)?))
        } else {
            Err(Error::PairingType { left: x.space().kind(), right: y.space().kind() })
        }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        let (a, b) = (self.sig.output().clone(), other.sig.output().clone());
        let side = if b.is_scalar() { a.side() } else { b.side() };
        self.combine(other, ext_wedge, |x, y| fit_scalar(x, &a, side)?.wedge(&fit_scalar(y, &b, side)?))
    }

    pub fn dsp(&self, other: &Self) -> Result<Self> {
        self.combine(other, ext_dsp, |x, y| {
            let (x, y) = self.paired(other, x, y)?;
            Ok(MultivectorField::scalar(Side::Primal.space(x.n())?, x.dsp(&y)?))
        })
    }

    pub fn lcontr(&self, other: &Self) -> Result<Self> {
        self.combine(other, ext_lcontr, |x, y| {
            let (x, y) = self.paired(other, x, y)?;
            x.lcontr(&y)
        })
    }

    pub fn rcontr(&self, other: &Self) -> Result<Self> {
        self.combine(other, ext_rcontr, |x, y| {
            let (x, y) = self.paired(other, x, y)?;
            x.rcontr(&y)
        })
    }
}

fn route(
    ops: &(OperatorField, OperatorField),
    apply: fn(&OperatorField, &MultivectorField) -> Result<MultivectorField>,
    x: &MultivectorField,
) -> Result<MultivectorField> {
    if x.space().kind() == ops.0.side().kind() {
        apply(&ops.0, x)
    } else {
        apply(&ops.1, x)
    }
}

fn check_dims(op: &OperatorField, tau: &ExtensorField) -> Result<()> {
    if op.n() != tau.n() {
        return Err(Error::DimensionMismatch { left: op.n(), right: tau.n() });
    }
    Ok(())
}

/// Field version of [`crate::extensor::epe_on_extensor`].
pub fn epe_on_field(lambda: &OperatorField, tau: &ExtensorField) -> Result<ExtensorField> {
    check_dims(lambda, tau)?;
    let inv = lambda.inverse();
    let pull = (inv.clone(), lambda.adjoint());
    let push = (lambda.clone(), inv.adjoint());
    ExtensorField::from_fn(tau.sig().clone(), |args| {
        let mapped = args.iter().map(|a| route(&pull, OperatorField::epe_apply, a)).collect::<Result<Vec<_>>>()?;
        let value = tau.eval_fields(&mapped.iter().collect::<Vec<_>>())?;
        route(&push, OperatorField::epe_apply, &value)
    })
}

/// Field version of [`crate::extensor::ce_on_extensor`].
pub fn ce_on_field(gamma: &OperatorField, tau: &ExtensorField) -> Result<ExtensorField> {
    check_dims(gamma, tau)?;
    let other = gamma.adjoint();
    let slot_ops = (gamma.scale(-1.0), other.clone());
    let out_ops = (gamma.clone(), other.scale(-1.0));
    ExtensorField::from_fn(tau.sig().clone(), |args| {
        let refs: Vec<&MultivectorField> = args.iter().collect();
        let mut acc = route(&out_ops, OperatorField::ce_apply, &tau.eval_fields(&refs)?)?;
        for s in 0..args.len() {
            let moved = route(&slot_ops, OperatorField::ce_apply, &args[s])?;
            let mut r = refs.clone();
            r[s] = &moved;
            let term = tau.eval_fields(&r)?;
            acc =
                acc.add(&fit_scalar(&term, tau.sig().output(), Side::of(acc.space().kind()).unwrap_or(Side::Primal))?)?;
        }
        Ok(acc)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensor::{ce_on_extensor, epe_on_extensor, Operator};
    use crate::random;

    fn lifted(tau: &Extensor) -> ExtensorField {
        // non-constant coefficients: multiply each by a coordinate-dependent factor
        let f = Expr::coord(0).sin() + Expr::constant(1.5);
        ExtensorField::constant(tau).times(&f)
    }

    #[test]
    fn field_operations_match_pointwise_extensor_operations() {
        let mut r = random::rng(11);
        let p = [0.45, 0.8];
        let scale = 0.45f64.sin() + 1.5;
        for _ in 0..20 {
            let n = 2;
            let t = random::extensor(&mut r, n, 1, 0, Side::Primal);
            let s = random::extensor(&mut r, n, 0, 1, Side::Primal);
            let (tf, sf) = (lifted(&t), lifted(&s));
            let (tp, sp) = (t.scale(scale), s.scale(scale));
            assert!(tf.wedge(&sf).unwrap().eval(&p).unwrap().approx_eq(&ext_wedge(&tp, &sp).unwrap(), 1e-12));
            let u = random::extensor(&mut r, n, 0, 1, Side::Dual);
            let uf = lifted(&u);
            let up = u.scale(scale);
            assert!(tf.dsp(&uf).unwrap().eval(&p).unwrap().approx_eq(&ext_dsp(&tp, &up).unwrap(), 1e-12));
            assert!(uf.lcontr(&tf).unwrap().eval(&p).unwrap().approx_eq(&ext_lcontr(&up, &tp).unwrap(), 1e-12));
            assert!(tf.rcontr(&uf).unwrap().eval(&p).unwrap().approx_eq(&ext_rcontr(&tp, &up).unwrap(), 1e-12));
            assert!(tf.adjoint().unwrap().eval(&p).unwrap().approx_eq(&tp.adjoint().unwrap(), 0.0));
            let m = random::invertible_matrix(&mut r, n);
            let op = Operator::new(Side::Primal, m).unwrap();
            let of = OperatorField::constant(&op);
            for x in [&tf, &sf, &uf] {
                let xp = x.eval(&p).unwrap();
                let e = epe_on_field(&of, x).unwrap().eval(&p).unwrap();
                assert!(e.approx_eq(&epe_on_extensor(&op, &xp).unwrap(), 1e-11));
                let c = ce_on_field(&of, x).unwrap().eval(&p).unwrap();
                assert!(c.approx_eq(&ce_on_extensor(&op, &xp).unwrap(), 1e-11));
            }
        }
    }
}
