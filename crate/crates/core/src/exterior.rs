//! Dense exterior algebras over an `n`-dimensional base space.
//!
//! A [`Multivector`] stores one coefficient per basis blade. Blades are
//! addressed by bitmask and every blade is written with its factors in
//! ascending index order, so `e_{21}` is stored as `-e_{12}`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported `n` for every space kind.
pub const MAX_N: usize = 6;

/// Default tolerance used by approximate comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Magnitude below which a coefficient is hidden when printing.
pub const PRINT_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceKind {
    /// `⋀V`, multivectors.
    Primal,
    /// `⋀V*`, multiforms.
    Dual,
    /// `⋀H_V` with `H_V = V ⊕ V*`.
    Hyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BaseSpace {
    kind: SpaceKind,
    n: usize,
}

impl BaseSpace {
    pub fn new(kind: SpaceKind, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::UnsupportedDimension { n, max: MAX_N });
        }
        Ok(Self { kind, n })
    }

    pub fn primal(n: usize) -> Result<Self> {
        Self::new(SpaceKind::Primal, n)
    }

    pub fn dual(n: usize) -> Result<Self> {
        Self::new(SpaceKind::Dual, n)
    }

    pub fn hyperbolic(n: usize) -> Result<Self> {
        Self::new(SpaceKind::Hyperbolic, n)
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the generating space: `n`, or `2n` for `H_V`.
    pub fn dim(&self) -> usize {
        match self.kind {
            SpaceKind::Hyperbolic => 2 * self.n,
            _ => self.n,
        }
    }

    /// Number of basis blades, `2^dim`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// The space paired with this one by the duality scalar product.
    pub fn dual_space(&self) -> Option<Self> {
        match self.kind {
            SpaceKind::Primal => Some(Self { kind: SpaceKind::Dual, n: self.n }),
            SpaceKind::Dual => Some(Self { kind: SpaceKind::Primal, n: self.n }),
            SpaceKind::Hyperbolic => None,
        }
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.kind != other.kind {
            return Err(Error::SpaceMismatch { expected: self.kind, found: other.kind });
        }
        Ok(())
    }

    /// Name of generator `i` (0-based bit index).
    pub fn generator_name(&self, i: usize) -> String {
        match self.kind {
            SpaceKind::Primal => format!("e{}", i + 1),
            SpaceKind::Dual => format!("t{}", i + 1),
            SpaceKind::Hyperbolic if i < self.n => format!("e{}", i + 1),
            SpaceKind::Hyperbolic => format!("t{}", i - self.n + 1),
        }
    }

    /// Printable name of a blade, `1` for the scalar blade.
    pub fn blade_name(&self, mask: u32) -> String {
        if mask == 0 {
            return "1".to_string();
        }
        bits(mask).map(|i| self.generator_name(i)).collect::<Vec<_>>().join("^")
    }
}

/// Grade of a blade mask.
pub fn grade(mask: u32) -> usize {
    mask.count_ones() as usize
}

/// Iterator over the set bit positions of `mask`, ascending.
pub fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Sign of `b_a ∧ b_b = sign · b_{a|b}`, or `None` when the blades share a factor.
pub fn wedge_sign(a: u32, b: u32) -> Option<f64> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    for i in bits(b) {
        swaps += (a >> (i + 1)).count_ones();
    }
    Some(if swaps % 2 == 0 { 1.0 } else { -1.0 })
}

/// Mask and sign of the product of generators listed in `indices`, in that order.
pub fn ordered_blade(indices: &[usize]) -> Option<(u32, f64)> {
    let mut mask = 0u32;
    let mut sign = 1.0;
    for &i in indices {
        let bit = 1u32 << i;
        sign *= wedge_sign(mask, bit)?;
        mask |= bit;
    }
    Some((mask, sign))
}

pub fn grade_involution_sign(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn reversion_sign(k: usize) -> f64 {
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn conjugation_sign(k: usize) -> f64 {
    if (k * (k + 1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Multivector {
    space: BaseSpace,
    coeffs: Vec<f64>,
}

/// Elements of `⋀V*` share the representation of multivectors.
pub type Multiform = Multivector;

impl Multivector {
    pub fn zero(space: BaseSpace) -> Self {
        Self { space, coeffs: vec![0.0; space.blade_count()] }
    }

    pub fn scalar(space: BaseSpace, value: f64) -> Self {
        let mut m = Self::zero(space);
        m.coeffs[0] = value;
        m
    }

    pub fn blade(space: BaseSpace, mask: u32, coeff: f64) -> Result<Self> {
        if mask as usize >= space.blade_count() {
            return Err(Error::GradeOutOfRange { grade: grade(mask), max: space.dim() });
        }
        let mut m = Self::zero(space);
        m.coeffs[mask as usize] = coeff;
        Ok(m)
    }

    /// Generator `i` (0-based) of the space.
    pub fn generator(space: BaseSpace, i: usize) -> Result<Self> {
        if i >= space.dim() {
            return Err(Error::GradeOutOfRange { grade: i + 1, max: space.dim() });
        }
        Self::blade(space, 1 << i, 1.0)
    }

    pub fn from_coeffs(space: BaseSpace, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != space.blade_count() {
            return Err(Error::BadLength { expected: space.blade_count(), found: coeffs.len() });
        }
        Ok(Self { space, coeffs })
    }

    /// Grade-one element with the given components on the generators.
    pub fn vector(space: BaseSpace, comps: &[f64]) -> Result<Self> {
        if comps.len() != space.dim() {
            return Err(Error::BadLength { expected: space.dim(), found: comps.len() });
        }
        let mut m = Self::zero(space);
        for (i, c) in comps.iter().enumerate() {
            m.coeffs[1 << i] = *c;
        }
        Ok(m)
    }

    pub fn space(&self) -> BaseSpace {
        self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn kind(&self) -> SpaceKind {
        self.space.kind()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn coeff(&self, mask: u32) -> f64 {
        self.coeffs.get(mask as usize).copied().unwrap_or(0.0)
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Components on the generators.
    pub fn vector_part(&self) -> Vec<f64> {
        (0..self.space.dim()).map(|i| self.coeffs[1 << i]).collect()
    }

    /// Nonzero terms as `(mask, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0.0).map(|(m, c)| (m as u32, *c))
    }

    /// Same coefficients, reinterpreted in another space of equal blade count.
    pub fn retag(&self, space: BaseSpace) -> Result<Self> {
        Self::from_coeffs(space, self.coeffs.clone())
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.space.check_same(&other.space)?;
        let mut out = Self::zero(self.space);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some(s) = wedge_sign(a, b) {
                    out.coeffs[(a | b) as usize] += s * x * y;
                }
            }
        }
        Ok(out)
    }

    /// Grade-`k` part. Grades above the space dimension give zero.
    pub fn part(&self, k: usize) -> Self {
        self.map_blades(|m| if grade(m) == k { 1.0 } else { 0.0 })
    }

    /// Part lying in the listed grades.
    pub fn part_in(&self, grades: &[usize]) -> Self {
        self.map_blades(|m| if grades.contains(&grade(m)) { 1.0 } else { 0.0 })
    }

    pub fn even(&self) -> Self {
        self.map_blades(|m| if grade(m) % 2 == 0 { 1.0 } else { 0.0 })
    }

    pub fn odd(&self) -> Self {
        self.map_blades(|m| if grade(m) % 2 == 1 { 1.0 } else { 0.0 })
    }

    pub fn grade_involution(&self) -> Self {
        self.map_blades(|m| grade_involution_sign(grade(m)))
    }

    pub fn reversion(&self) -> Self {
        self.map_blades(|m| reversion_sign(grade(m)))
    }

    pub fn conjugation(&self) -> Self {
        self.map_blades(|m| conjugation_sign(grade(m)))
    }

    /// Multiplies each blade coefficient by `f(mask)`.
    pub fn map_blades(&self, f: impl Fn(u32) -> f64) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(m, c)| c * f(m as u32)).collect();
        Self { space: self.space, coeffs }
    }

    /// Grades carrying a coefficient of magnitude above `tol`.
    pub fn grades(&self, tol: f64) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms().filter(|(_, c)| c.abs() > tol).map(|(m, _)| grade(m)).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// The single grade of a homogeneous element; `None` for mixed elements, `Some(0)` for zero.
    pub fn homogeneous_grade(&self, tol: f64) -> Option<usize> {
        match self.grades(tol).as_slice() {
            [] => Some(0),
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient difference. Elements of different spaces are infinitely far apart.
    pub fn distance(&self, other: &Self) -> f64 {
        if self.space != other.space {
            return f64::INFINITY;
        }
        self.coeffs.iter().zip(&other.coeffs).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_blades(|_| s)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.space, other.space, "arithmetic between different spaces");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(*a, *b)).collect();
        Self { space: self.space, coeffs }
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.space, rhs.space, "arithmetic between different spaces");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.space, rhs.space, "arithmetic between different spaces");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: &Multivector) -> Multivector {
        m.scale(self)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m.scale(self)
    }
}

impl fmt::Display for Multivector {
    /// `1.0000 e1^t1 - 0.5000 e2`, with `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.terms() {
            if c.abs() <= PRINT_EPS {
                continue;
            }
            let mag = format!("{:.4}", c.abs());
            let body = if mask == 0 { mag } else { format!("{mag} {}", self.space.blade_name(mask)) };
            match (first, c < 0.0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: usize) -> BaseSpace {
        BaseSpace::primal(n).unwrap()
    }

    #[test]
    fn wedge_of_generators_anticommutes() {
        let s = space(3);
        let e1 = Multivector::generator(s, 0).unwrap();
        let e2 = Multivector::generator(s, 1).unwrap();
        let a = e1.wedge(&e2).unwrap();
        let b = e2.wedge(&e1).unwrap();
        assert_eq!(a.coeff(0b011), 1.0);
        assert_eq!(b.coeff(0b011), -1.0);
        assert!(e1.wedge(&e1).unwrap().is_zero(0.0));
    }

    #[test]
    fn wedge_sign_counts_transpositions() {
        // e3 ∧ e12 = e3 e1 e2 = e123 after two swaps
        assert_eq!(wedge_sign(0b100, 0b011), Some(1.0));
        // e2 ∧ e13 = -e123
        assert_eq!(wedge_sign(0b010, 0b101), Some(-1.0));
        assert_eq!(wedge_sign(0b010, 0b110), None);
    }

    #[test]
    fn ordered_blade_matches_permutation_parity() {
        assert_eq!(ordered_blade(&[2, 0, 1]), Some((0b111, 1.0)));
        assert_eq!(ordered_blade(&[1, 0, 2]), Some((0b111, -1.0)));
        assert_eq!(ordered_blade(&[1, 1]), None);
    }

    #[test]
    fn involution_signs_by_grade() {
        let r: Vec<f64> = (0..5).map(reversion_sign).collect();
        assert_eq!(r, vec![1.0, 1.0, -1.0, -1.0, 1.0]);
        let c: Vec<f64> = (0..5).map(conjugation_sign).collect();
        assert_eq!(c, vec![1.0, -1.0, -1.0, 1.0, 1.0]);
        let g: Vec<f64> = (0..5).map(grade_involution_sign).collect();
        assert_eq!(g, vec![1.0, -1.0, 1.0, -1.0, 1.0]);
    }

    #[test]
    fn part_above_dimension_is_zero() {
        let s = space(2);
        let x = Multivector::from_coeffs(s, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!(x.part(5).is_zero(0.0));
        assert_eq!(x.part(1).coeffs(), &[0.0, 2.0, 3.0, 0.0]);
        assert_eq!((&x.even() + &x.odd()), x);
    }

    #[test]
    fn dimension_out_of_range_rejected() {
        assert!(matches!(BaseSpace::primal(7), Err(Error::UnsupportedDimension { .. })));
        assert!(matches!(BaseSpace::hyperbolic(0), Err(Error::UnsupportedDimension { .. })));
    }

    #[test]
    fn display_format() {
        let s = BaseSpace::hyperbolic(1).unwrap();
        let x = Multivector::blade(s, 0b11, 1.0).unwrap();
        assert_eq!(x.to_string(), "1.0000 e1^t1");
        assert_eq!(Multivector::zero(s).to_string(), "0");
        let y = Multivector::from_coeffs(s, vec![2.0, 0.0, -0.5, 1e-14]).unwrap();
        assert_eq!(y.to_string(), "2.0000 - 0.5000 t1");
    }
}
