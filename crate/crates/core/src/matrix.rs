//! 3×3 matrices over exact scalar rings with a complex conjugation.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::exactnum::{FieldElem, MultiQuadElem, QuadInt};

/// Exact commutative scalars closed under complex conjugation.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn conjugate(&self) -> Self;
    fn recip(&self) -> Result<Self>;

    fn one_like(&self) -> Self {
        self.int_like(1)
    }
}

impl Scalar for FieldElem {
    fn zero_like(&self) -> Self {
        FieldElem::zero(self.field)
    }
    fn int_like(&self, n: i64) -> Self {
        FieldElem::from_int(n, self.field)
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn recip(&self) -> Result<Self> {
        self.inv()
    }
}

impl Scalar for MultiQuadElem {
    fn zero_like(&self) -> Self {
        MultiQuadElem::zero()
    }
    fn int_like(&self, n: i64) -> Self {
        MultiQuadElem::from_int(n)
    }
    fn is_zero(&self) -> bool {
        MultiQuadElem::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn recip(&self) -> Result<Self> {
        self.inv()
    }
}

/// QuadInt is only a ring: `recip` succeeds for units only.
impl Scalar for QuadInt {
    fn zero_like(&self) -> Self {
        QuadInt::zero(self.field)
    }
    fn int_like(&self, n: i64) -> Self {
        QuadInt::from_int(n, self.field)
    }
    fn is_zero(&self) -> bool {
        QuadInt::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn recip(&self) -> Result<Self> {
        QuadInt::one(self.field)
            .div_exact(self)
            .ok_or(Error::DivisionByZero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3<T> {
    pub m: [[T; 3]; 3],
}

impl<T: Scalar> Mat3<T> {
    pub fn new(m: [[T; 3]; 3]) -> Self {
        Mat3 { m }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> T) -> Self {
        Mat3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn identity_like(x: &T) -> Self {
        Mat3::from_fn(|i, j| x.int_like(i64::from(i == j)))
    }

    pub fn diag(d: [T; 3]) -> Self {
        let z = d[0].zero_like();
        Mat3::from_fn(|i, j| if i == j { d[i].clone() } else { z.clone() })
    }

    /// The Gram matrix J of h(z) = −z₀z̄₂ − z₂z̄₀ + |z₁|².
    pub fn gram_like(x: &T) -> Self {
        Mat3::from_fn(|i, j| match (i, j) {
            (1, 1) => x.int_like(1),
            (0, 2) | (2, 0) => x.int_like(-1),
            _ => x.zero_like(),
        })
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.m[i][j]
    }

    pub fn mul(&self, other: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| {
            (0..3)
                .map(|k| self.m[i][k].times(&other.m[k][j]))
                .reduce(|a, b| a.plus(&b))
                .unwrap()
        })
    }

    pub fn apply(&self, v: &[T; 3]) -> [T; 3] {
        std::array::from_fn(|i| {
            (0..3)
                .map(|k| self.m[i][k].times(&v[k]))
                .reduce(|a, b| a.plus(&b))
                .unwrap()
        })
    }

    pub fn conj_transpose(&self) -> Mat3<T> {
        Mat3::from_fn(|i, j| self.m[j][i].conjugate())
    }

    pub fn scale(&self, s: &T) -> Mat3<T> {
        Mat3::from_fn(|i, j| self.m[i][j].times(s))
    }

    pub fn sub(&self, other: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| self.m[i][j].minus(&other.m[i][j]))
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat3<U> {
        Mat3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| f(&self.m[i][j]))),
        }
    }

    fn minor(&self, i: usize, j: usize) -> T {
        let rows: Vec<usize> = (0..3).filter(|r| *r != i).collect();
        let cols: Vec<usize> = (0..3).filter(|c| *c != j).collect();
        let a = &self.m[rows[0]][cols[0]];
        let b = &self.m[rows[0]][cols[1]];
        let c = &self.m[rows[1]][cols[0]];
        let d = &self.m[rows[1]][cols[1]];
        a.times(d).minus(&b.times(c))
    }

    pub fn det(&self) -> T {
        (0..3)
            .map(|j| {
                let t = self.m[0][j].times(&self.minor(0, j));
                if j % 2 == 1 {
                    t.negated()
                } else {
                    t
                }
            })
            .reduce(|a, b| a.plus(&b))
            .unwrap()
    }

    pub fn adjugate(&self) -> Mat3<T> {
        Mat3::from_fn(|i, j| {
            let c = self.minor(j, i);
            if (i + j) % 2 == 1 {
                c.negated()
            } else {
                c
            }
        })
    }

    /// Inverse through the adjugate; fails on singular matrices.
    pub fn inverse(&self) -> Result<Mat3<T>> {
        let d = self.det().recip()?;
        Ok(self.adjugate().scale(&d))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity_like(&self.m[0][0])
    }

    /// g*·J·g = J.
    pub fn preserves_form(&self) -> bool {
        let j = Mat3::gram_like(&self.m[0][0]);
        self.conj_transpose().mul(&j).mul(self) == j
    }

    /// Validates membership in SU_h over the scalar ring.
    pub fn check_special_unitary(&self) -> Result<()> {
        if !self.preserves_form() {
            return Err(Error::NotUnitary);
        }
        let det = self.det();
        if det != det.one_like() {
            return Err(Error::NotSpecial);
        }
        Ok(())
    }
}
