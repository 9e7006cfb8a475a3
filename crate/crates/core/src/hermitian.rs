//! The Hermitian form h of signature (1, 2), projective points of P²(K),
//! polarity, chains and Heisenberg translations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{
    canonical_unit_normalize, primitive_part, FieldDesc, FieldElem, QuadInt, Rational,
};
use crate::group::GroupElem;
use crate::matrix::Mat3;

/// h(z) = −z₀z̄₂ − z₂z̄₀ + |z₁|², evaluated exactly.
pub fn eval_h(z: &[FieldElem; 3]) -> Rational {
    z[1].norm() - (&z[0] * &z[2].conj()).re() * BigRational::from_integer(2.into())
}

/// ⟨z, w⟩ = −z₀w̄₂ + z₁w̄₁ − z₂w̄₀, linear in z and antilinear in w.
pub fn hermitian_product(z: &[FieldElem; 3], w: &[FieldElem; 3]) -> FieldElem {
    &z[1] * &w[1].conj() - &z[0] * &w[2].conj() - &z[2] * &w[0].conj()
}

/// h on an integral triple: N(z₁) − tr(z₀z̄₂).
pub fn eval_h_integral(z: &[QuadInt; 3]) -> BigInt {
    z[1].norm() - (&z[0] * &z[2].conj()).trace()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PointClass {
    Negative,
    Null,
    Positive,
}

/// A point of P²(K), stored as its canonical primitive integral representative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    coords: [QuadInt; 3],
    h_value: BigInt,
}

impl ProjPoint {
    /// From an integral triple: divides out the content and fixes the unit.
    pub fn from_quadints(z: [QuadInt; 3]) -> Result<Self> {
        let (prim, _) = primitive_part(&z)?;
        let canon = canonical_unit_normalize(&prim);
        let coords: [QuadInt; 3] = canon.try_into().expect("three coordinates");
        Ok(ProjPoint::from_primitive_unchecked(coords))
    }

    /// For a triple already known to be primitive (e.g. the image of a
    /// primitive triple under an integral matrix): only the unit is fixed.
    pub(crate) fn from_primitive(z: [QuadInt; 3]) -> Self {
        let canon = canonical_unit_normalize(&z);
        ProjPoint::from_primitive_unchecked(canon.try_into().expect("three coordinates"))
    }

    fn from_primitive_unchecked(coords: [QuadInt; 3]) -> Self {
        let h_value = eval_h_integral(&coords);
        ProjPoint { coords, h_value }
    }

    /// From any nonzero homogeneous triple over K; denominators are cleared first.
    pub fn from_field_elems(z: &[FieldElem; 3]) -> Result<Self> {
        let parts: Vec<(QuadInt, BigInt)> = z.iter().map(FieldElem::to_quadint_over_den).collect();
        let den = parts
            .iter()
            .fold(BigInt::from(1), |acc, (_, d)| num_integer::lcm(acc, d.clone()));
        let coords: [QuadInt; 3] = std::array::from_fn(|i| {
            let (q, d) = &parts[i];
            q.scale(&(&den / d))
        });
        ProjPoint::from_quadints(coords)
    }

    pub fn from_ints(field: FieldDesc, z: [i64; 3]) -> Result<Self> {
        ProjPoint::from_quadints(z.map(|c| QuadInt::from_int(c, field)))
    }

    pub fn coords(&self) -> &[QuadInt; 3] {
        &self.coords
    }

    pub fn field(&self) -> FieldDesc {
        self.coords[0].field
    }

    pub fn h_value(&self) -> &BigInt {
        &self.h_value
    }

    pub fn field_coords(&self) -> [FieldElem; 3] {
        std::array::from_fn(|i| FieldElem::from_quadint(&self.coords[i]))
    }

    pub fn classify(&self) -> PointClass {
        classify(self)
    }

    fn sort_key(&self) -> [(&BigInt, &BigInt); 3] {
        std::array::from_fn(|i| (&self.coords[i].a, &self.coords[i].b))
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

pub fn classify(p: &ProjPoint) -> PointClass {
    if p.h_value.is_negative() {
        PointClass::Negative
    } else if p.h_value.is_zero() {
        PointClass::Null
    } else {
        PointClass::Positive
    }
}

/// The chain polar to a positive point, with its vertical projection.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Chain {
    pub polar: ProjPoint,
    /// z₁/z₂ when z₂ ≠ 0.
    pub proj_center: Option<FieldElem>,
    /// h(z)/N(z₂) when z₂ ≠ 0.
    pub proj_radius_sq: Option<Rational>,
    pub vertical: bool,
}

impl Chain {
    pub fn center_f64(&self) -> Option<(f64, f64)> {
        self.proj_center.as_ref().map(FieldElem::to_complex)
    }

    pub fn radius_f64(&self) -> Option<f64> {
        self.proj_radius_sq
            .as_ref()
            .and_then(|r| r.to_f64())
            .map(f64::sqrt)
    }
}

pub fn polar_chain(p: &ProjPoint) -> Result<Chain> {
    if p.classify() != PointClass::Positive {
        return Err(Error::NotPositive(p.h_value.to_string()));
    }
    let [_, z1, z2] = p.field_coords();
    if z2.is_zero() {
        return Ok(Chain {
            polar: p.clone(),
            proj_center: None,
            proj_radius_sq: None,
            vertical: true,
        });
    }
    let center = z1.div(&z2)?;
    let radius_sq = BigRational::from_integer(p.h_value.clone()) / z2.norm();
    Ok(Chain {
        polar: p.clone(),
        proj_center: Some(center),
        proj_radius_sq: Some(radius_sq),
        vertical: false,
    })
}

/// An element [w₀ : w : 1] of the Heisenberg group, 2·Re w₀ = |w|².
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HeisElem {
    w0: FieldElem,
    w: FieldElem,
}

impl HeisElem {
    pub fn new(w0: FieldElem, w: FieldElem) -> Option<Self> {
        let two = BigRational::from_integer(2.into());
        if w0.re() * two == w.norm() {
            Some(HeisElem { w0, w })
        } else {
            None
        }
    }

    pub fn identity(field: FieldDesc) -> Self {
        HeisElem {
            w0: FieldElem::zero(field),
            w: FieldElem::zero(field),
        }
    }

    pub fn w0(&self) -> &FieldElem {
        &self.w0
    }

    pub fn w(&self) -> &FieldElem {
        &self.w
    }

    /// Group law induced by multiplying the translation matrices.
    pub fn compose(&self, other: &HeisElem) -> HeisElem {
        HeisElem {
            w0: &(&self.w0 + &other.w0) + &(&self.w.conj() * &other.w),
            w: &self.w + &other.w,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.w0.is_integral() && self.w.is_integral()
    }
}

/// The upper triangular matrix (1, w̄, w₀; 0, 1, w; 0, 0, 1).
pub fn heis_translation_matrix(t: &HeisElem) -> GroupElem {
    let field = t.w.field;
    let one = FieldElem::one(field);
    let zero = FieldElem::zero(field);
    let m = Mat3::new([
        [one.clone(), t.w.conj(), t.w0.clone()],
        [zero.clone(), one.clone(), t.w.clone()],
        [zero.clone(), zero, one],
    ]);
    GroupElem::from_matrix_unchecked(m)
}

/// Complex hyperbolic distance between two negative points.
pub fn hyperbolic_distance(z: &ProjPoint, w: &ProjPoint) -> Result<f64> {
    for p in [z, w] {
        if p.classify() != PointClass::Negative {
            return Err(Error::NotNegative(p.h_value.to_string()));
        }
    }
    if z == w {
        return Ok(0.0);
    }
    let zf = z.field_coords();
    let wf = w.field_coords();
    let num = hermitian_product(&zf, &wf).norm();
    let den = BigRational::from_integer(&z.h_value * &w.h_value);
    let cosh_sq = (num / den).to_f64().unwrap_or(f64::INFINITY);
    Ok(cosh_sq.max(1.0).sqrt().acosh())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;

    fn g() -> FieldDesc {
        FieldDesc::gauss()
    }

    fn ints(z: [i64; 3]) -> [FieldElem; 3] {
        z.map(|c| FieldElem::from_int(c, g()))
    }

    #[test]
    fn eval_h_examples() {
        assert_eq!(eval_h(&ints([-7, 0, 1])), rational(14, 1));
        assert_eq!(eval_h(&ints([0, 1, 0])), rational(1, 1));
        assert_eq!(eval_h(&ints([-5, 0, 1])), rational(10, 1));
    }

    #[test]
    fn product_examples() {
        assert!(hermitian_product(&ints([0, 1, 0]), &ints([0, 1, 0])).is_one());
        assert_eq!(
            hermitian_product(&ints([1, 0, 0]), &ints([0, 0, 1])),
            FieldElem::from_int(-1, g())
        );
        assert!(hermitian_product(&ints([-5, 0, 1]), &ints([0, 1, 0])).is_zero());
    }

    #[test]
    fn classify_examples() {
        let p = |z| ProjPoint::from_ints(g(), z).unwrap();
        assert_eq!(p([1, 0, 0]).classify(), PointClass::Null);
        assert_eq!(p([0, 1, 0]).classify(), PointClass::Positive);
        assert_eq!(p([1, 0, 1]).classify(), PointClass::Negative);
        assert_eq!(p([1, 0, 1]).h_value(), &BigInt::from(-2));
    }

    #[test]
    fn polar_chain_examples() {
        let c = polar_chain(&ProjPoint::from_ints(g(), [-5, 0, 1]).unwrap()).unwrap();
        assert!(c.proj_center.unwrap().is_zero());
        assert_eq!(c.proj_radius_sq, Some(rational(10, 1)));

        let c = polar_chain(&ProjPoint::from_ints(g(), [0, 1, 0]).unwrap()).unwrap();
        assert!(c.vertical && c.proj_center.is_none());

        let c = polar_chain(&ProjPoint::from_ints(g(), [-2, 2, 1]).unwrap()).unwrap();
        assert_eq!(c.proj_center, Some(FieldElem::from_int(2, g())));
        assert_eq!(c.proj_radius_sq, Some(rational(8, 1)));

        // [−3 : i : 1]: the chain's points [w₀ : w : 1] have |w − i|² = 7
        let i = QuadInt::new(0, 1, g());
        let p = ProjPoint::from_quadints([QuadInt::from_int(-3, g()), i.clone(), QuadInt::one(g())]).unwrap();
        let c = polar_chain(&p).unwrap();
        assert_eq!(c.proj_center, Some(FieldElem::from_quadint(&i)));
        assert_eq!(c.proj_radius_sq, Some(rational(7, 1)));

        let neg = ProjPoint::from_ints(g(), [1, 0, 1]).unwrap();
        assert!(matches!(polar_chain(&neg), Err(Error::NotPositive(_))));
    }

    #[test]
    fn heisenberg_examples() {
        let f = g();
        let id = HeisElem::identity(f);
        assert!(heis_translation_matrix(&id).matrix().is_identity());

        let w = FieldElem::from_quadint(&QuadInt::new(1, 1, f));
        let t = HeisElem::new(FieldElem::one(f), w.clone()).unwrap();
        let m = heis_translation_matrix(&t);
        assert_eq!(m.matrix().get(0, 1), &w.conj());
        assert_eq!(m.matrix().get(1, 2), &w);
        assert!(m.matrix().check_special_unitary().is_ok());
        assert!(m.is_integral());

        let vertical = HeisElem::new(FieldElem::new(rational(0, 1), rational(3, 1), f), FieldElem::zero(f)).unwrap();
        let v = heis_translation_matrix(&vertical);
        assert!(v.matrix().check_special_unitary().is_ok());
        // fixes the point at infinity and the vertical direction
        let inf = ProjPoint::from_ints(f, [1, 0, 0]).unwrap();
        assert_eq!(v.act_on_point(&inf).unwrap(), inf);

        assert!(HeisElem::new(FieldElem::zero(f), FieldElem::one(f)).is_none());
    }

    #[test]
    fn distance_examples() {
        let z = ProjPoint::from_ints(g(), [1, 0, 1]).unwrap();
        let w = ProjPoint::from_ints(g(), [2, 0, 1]).unwrap();
        assert_eq!(hyperbolic_distance(&z, &z).unwrap(), 0.0);
        let expected = (9.0f64 / 8.0).sqrt().acosh();
        assert!((hyperbolic_distance(&z, &w).unwrap() - expected).abs() < 1e-12);
        assert_eq!(hyperbolic_distance(&z, &w).unwrap(), hyperbolic_distance(&w, &z).unwrap());
        let pos = ProjPoint::from_ints(g(), [0, 1, 0]).unwrap();
        assert!(matches!(hyperbolic_distance(&z, &pos), Err(Error::NotNegative(_))));
    }
}
