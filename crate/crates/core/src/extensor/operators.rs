//! Grade-1 operators, their exterior power extensions `λ̲` and contracted
//! extensions `γ̆`, and the action of both on extensors.

use nalgebra::DMatrix;

use super::{Extensor, Side};
use crate::duality::lcontr;
use crate::error::{Error, Result};
use crate::exterior::{bits, BaseSpace, Multivector, MAX_N};

/// A linear operator on `V` or on `V*`, stored with the images of the basis
/// vectors as columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    side: Side,
    matrix: DMatrix<f64>,
}

impl Operator {
    pub fn new(side: Side, matrix: DMatrix<f64>) -> Result<Self> {
        let n = matrix.nrows();
        if matrix.ncols() != n {
            return Err(Error::DimensionMismatch { left: n, right: matrix.ncols() });
        }
        if n == 0 || n > MAX_N {
            return Err(Error::UnsupportedDimension { n, max: MAX_N });
        }
        Ok(Self { side, matrix })
    }

    pub fn identity(side: Side, n: usize) -> Result<Self> {
        Self::new(side, DMatrix::identity(n, n))
    }

    pub fn diagonal(side: Side, entries: &[f64]) -> Result<Self> {
        Self::new(side, DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(entries)))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    fn space(&self) -> BaseSpace {
        self.side.space(self.n()).expect("validated dimension")
    }

    /// Image of the `j`-th basis vector.
    pub fn image(&self, j: usize) -> Multivector {
        let col: Vec<f64> = self.matrix.column(j).iter().copied().collect();
        Multivector::vector(self.space(), &col).expect("length n")
    }

    /// Applies the operator to a grade-1 element.
    pub fn apply(&self, v: &Multivector) -> Result<Multivector> {
        if v.space() != self.space() {
            return Err(Error::SpaceMismatch { expected: self.side.kind(), found: v.kind() });
        }
        if (0..v.coeffs().len()).any(|m| m.count_ones() != 1 && v.coeffs()[m] != 0.0) {
            return Err(Error::NotInSubspace("the grade-1 subspace".into()));
        }
        let x = nalgebra::DVector::from_vec(v.vector_part());
        Multivector::vector(self.space(), (&self.matrix * x).as_slice())
    }

    /// Duality adjoint: `⟨λ(v), ω⟩ = ⟨v, λ^△(ω)⟩`.
    pub fn adjoint(&self) -> Self {
        Self { side: self.side.opposite(), matrix: self.matrix.transpose() }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.matrix.clone().try_inverse().ok_or(Error::Singular("operator"))?;
        Ok(Self { side: self.side, matrix: inv })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self { side: self.side, matrix: &self.matrix * &other.matrix })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: other.n() });
        }
        if self.side != other.side {
            return Err(Error::SpaceMismatch { expected: self.side.kind(), found: other.side.kind() });
        }
        Ok(())
    }

    /// Exterior power extension `λ̲`: the blade `b_{j1} ∧ ⋯ ∧ b_{jk}` maps to
    /// `λ(b_{j1}) ∧ ⋯ ∧ λ(b_{jk})` and scalars are fixed.
    pub fn epe(&self) -> AlgebraOperator {
        let space = self.space();
        let images: Vec<Multivector> = (0..self.n()).map(|j| self.image(j)).collect();
        AlgebraOperator::from_blade_images(self.side, self.n(), |mask| {
            bits(mask).fold(Multivector::scalar(space, 1.0), |acc, j| acc.wedge(&images[j]).expect("same space"))
        })
    }

    /// Contracted extension `γ̆(X) = Σ_j γ(b_j) ∧ ⟨β^j, X|`.
    pub fn ce(&self) -> AlgebraOperator {
        let space = self.space();
        let dual = space.dual_space().expect("primal or dual");
        let images: Vec<Multivector> = (0..self.n()).map(|j| self.image(j)).collect();
        AlgebraOperator::from_blade_images(self.side, self.n(), |mask| {
            let x = Multivector::blade(space, mask, 1.0).expect("mask in range");
            let mut acc = Multivector::zero(space);
            for (j, img) in images.iter().enumerate() {
                let beta = Multivector::generator(dual, j).expect("index in range");
                acc += &img.wedge(&lcontr(&beta, &x).expect("paired")).expect("same space");
            }
            acc
        })
    }
}

/// A linear operator on the whole exterior algebra `⋀V` or `⋀V*`, as a
/// `2^n × 2^n` matrix acting on blade coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraOperator {
    side: Side,
    n: usize,
    matrix: DMatrix<f64>,
}

impl AlgebraOperator {
    pub fn new(side: Side, n: usize, matrix: DMatrix<f64>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::UnsupportedDimension { n, max: MAX_N });
        }
        let d = 1usize << n;
        if matrix.nrows() != d || matrix.ncols() != d {
            return Err(Error::BadLength { expected: d, found: matrix.nrows().max(matrix.ncols()) });
        }
        Ok(Self { side, n, matrix })
    }

    pub fn identity(side: Side, n: usize) -> Result<Self> {
        Self::new(side, n, DMatrix::identity(1 << n, 1 << n))
    }

    /// Builds the operator column by column from the image of each blade.
    pub fn from_blade_images(side: Side, n: usize, mut image: impl FnMut(u32) -> Multivector) -> Self {
        let d = 1usize << n;
        let mut matrix = DMatrix::zeros(d, d);
        for m in 0..d {
            let img = image(m as u32);
            for (r, c) in img.coeffs().iter().enumerate() {
                matrix[(r, m)] = *c;
            }
        }
        Self { side, n, matrix }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    fn space(&self) -> BaseSpace {
        self.side.space(self.n).expect("validated dimension")
    }

    pub fn apply(&self, x: &Multivector) -> Result<Multivector> {
        if x.space() != self.space() {
            if x.n() != self.n {
                return Err(Error::DimensionMismatch { left: self.n, right: x.n() });
            }
            return Err(Error::SpaceMismatch { expected: self.side.kind(), found: x.kind() });
        }
        let v = nalgebra::DVector::from_column_slice(x.coeffs());
        Multivector::from_coeffs(self.space(), (&self.matrix * v).as_slice().to_vec())
    }

    /// Duality adjoint on the opposite algebra; the blade bases are dual, so
    /// this is the transpose.
    pub fn adjoint(&self) -> Self {
        Self { side: self.side.opposite(), n: self.n, matrix: self.matrix.transpose() }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.matrix.clone().try_inverse().ok_or(Error::Singular("algebra operator"))?;
        Ok(Self { matrix: inv, ..self.clone() })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.side != other.side {
            return Err(Error::SpaceMismatch { expected: self.side.kind(), found: other.side.kind() });
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self { matrix: &self.matrix * &other.matrix, ..self.clone() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self { matrix: &self.matrix + &other.matrix, ..self.clone() })
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { matrix: &self.matrix * s, ..self.clone() }
    }

    /// Largest entry difference; infinite for operators on different algebras.
    pub fn distance(&self, other: &Self) -> f64 {
        if self.check_same(other).is_err() {
            return f64::INFINITY;
        }
        (&self.matrix - &other.matrix).amax()
    }

    /// True when every blade maps into its own grade.
    pub fn preserves_grade(&self, tol: f64) -> bool {
        let d = 1usize << self.n;
        (0..d).all(|c| (0..d).all(|r| r.count_ones() == c.count_ones() || self.matrix[(r, c)].abs() <= tol))
    }
}

/// Maps an element of either side of the duality through `ops`, given as
/// `(operator on λ's side, operator on the other side)`.
fn route(ops: &(AlgebraOperator, AlgebraOperator), x: &Multivector) -> Result<Multivector> {
    if x.kind() == ops.0.side.kind() {
        ops.0.apply(x)
    } else {
        ops.1.apply(x)
    }
}

fn check_dims(op: &Operator, tau: &Extensor) -> Result<()> {
    if op.n() != tau.n() {
        return Err(Error::DimensionMismatch { left: op.n(), right: tau.n() });
    }
    Ok(())
}

/// Action `λ̲τ` of an invertible operator on an extensor.
///
/// Arguments on `λ`'s side are pulled back by `λ̲⁻¹`, arguments on the other
/// side by `λ̲^△`, and the value is pushed forward by `λ̲` (or by `λ̲^{-△}`
/// when it lies on the other side). The result has the signature of `τ`.
pub fn epe_on_extensor(lambda: &Operator, tau: &Extensor) -> Result<Extensor> {
    check_dims(lambda, tau)?;
    let inv = lambda.inverse()?;
    let pull = (inv.epe(), lambda.adjoint().epe());
    let push = (lambda.epe(), inv.adjoint().epe());
    Extensor::from_fn(tau.sig().clone(), |args| {
        let mapped = args.iter().map(|a| route(&pull, a)).collect::<Result<Vec<_>>>()?;
        let value = tau.eval(&mapped.iter().collect::<Vec<_>>())?;
        route(&push, &value)
    })
}

/// Action `γ̆τ` of an operator on an extensor.
///
/// `γ̆τ(…) = γ̆∘τ(…) − Σ τ(…, γ̆ A, …) + Σ τ(…, γ̆^△ B, …)`, where `A` runs over
/// the arguments on `γ`'s side and `B` over those on the other side. A value
/// on the other side is acted on by `−γ̆^△`.
pub fn ce_on_extensor(gamma: &Operator, tau: &Extensor) -> Result<Extensor> {
    check_dims(gamma, tau)?;
    let own = gamma.ce();
    let other = gamma.adjoint().ce();
    let slot_ops = (own.scale(-1.0), other.clone());
    let out_ops = (own, other.scale(-1.0));
    Extensor::from_fn(tau.sig().clone(), |args| {
        let refs: Vec<&Multivector> = args.iter().collect();
        let mut acc = route(&out_ops, &tau.eval(&refs)?)?;
        for s in 0..args.len() {
            let moved = route(&slot_ops, &args[s])?;
            let mut r = refs.clone();
            r[s] = &moved;
            acc += &tau.eval(&r)?;
        }
        Ok(acc)
    })
}

#[cfg(test)]
mod tests {
    use super::super::{ext_wedge, ExtSignature, VSpaceSig};
    use super::*;
    use crate::duality::dsp;

    fn sp(n: usize) -> BaseSpace {
        BaseSpace::primal(n).unwrap()
    }

    #[test]
    fn epe_of_diagonal_scales_top_blade() {
        let l = Operator::diagonal(Side::Primal, &[2.0, 3.0]).unwrap();
        let e12 = Multivector::blade(sp(2), 0b11, 1.0).unwrap();
        assert_eq!(l.epe().apply(&e12).unwrap(), e12.scale(6.0));
        let a = Multivector::scalar(sp(2), 4.5);
        assert_eq!(l.epe().apply(&a).unwrap(), a);
        let id = Operator::identity(Side::Dual, 3).unwrap();
        assert_eq!(id.epe(), AlgebraOperator::identity(Side::Dual, 3).unwrap());
    }

    #[test]
    fn ce_of_identity_is_degree_operator() {
        let g = Operator::identity(Side::Primal, 3).unwrap().ce();
        for m in 0..8u32 {
            let b = Multivector::blade(sp(3), m, 1.0).unwrap();
            assert_eq!(g.apply(&b).unwrap(), b.scale(m.count_ones() as f64));
        }
    }

    #[test]
    fn ce_restricts_to_operator_on_vectors() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, -3.0, 0.5]);
        let g = Operator::new(Side::Primal, m).unwrap();
        let v = Multivector::vector(sp(2), &[0.25, -1.0]).unwrap();
        assert_eq!(g.ce().apply(&v).unwrap(), g.apply(&v).unwrap());
        assert!(g.apply(&Multivector::scalar(sp(2), 1.0)).is_err());
    }

    #[test]
    fn epe_on_rank_one_extensor() {
        // λ = diag(2) on a one-dimensional V, τ(v) = ⟨ε1, v⟩ e1; λ̲τ = λ∘τ∘λ⁻¹ = τ
        let s = VSpaceSig::homogeneous(Side::Primal, 1, 1).unwrap();
        let sig = ExtSignature::new(vec![s.clone()], vec![], s).unwrap();
        let eps = Multivector::generator(BaseSpace::dual(1).unwrap(), 0).unwrap();
        let tau = Extensor::from_fn(sig, |a| Ok(Multivector::generator(sp(1), 0)? * dsp(&eps, &a[0])?)).unwrap();
        let l = Operator::diagonal(Side::Primal, &[2.0]).unwrap();
        assert_eq!(epe_on_extensor(&l, &tau).unwrap(), tau);
    }

    #[test]
    fn operators_fix_the_identity_extensor() {
        let s = VSpaceSig::full(Side::Primal, 2).unwrap();
        let id = Extensor::identity(&s);
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 2.0]);
        let l = Operator::new(Side::Primal, m).unwrap();
        assert!(epe_on_extensor(&l, &id).unwrap().approx_eq(&id, 1e-12));
        assert!(ce_on_extensor(&l, &id).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn ce_on_wedge_of_identities_with_identity_operator() {
        // τ(v, w) = v ∧ w: γ̆∘τ gives 2τ and each slot term subtracts τ
        let s = VSpaceSig::homogeneous(Side::Primal, 2, 1).unwrap();
        let id = Extensor::identity(&s);
        let tau = ext_wedge(&id, &id).unwrap();
        let g = Operator::identity(Side::Primal, 2).unwrap();
        assert!(ce_on_extensor(&g, &tau).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn singular_operator_is_rejected() {
        let s = VSpaceSig::homogeneous(Side::Primal, 2, 1).unwrap();
        let id = Extensor::identity(&s);
        let l = Operator::diagonal(Side::Primal, &[1.0, 0.0]).unwrap();
        assert_eq!(epe_on_extensor(&l, &id), Err(Error::Singular("operator")));
    }
}
