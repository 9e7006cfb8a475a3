use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{FieldDesc, OmegaKind};
use super::quadint::QuadInt;
use super::Rational;
use crate::error::{Error, Result};

/// An element x + y·√D′_K of K, stored as an exact pair of rationals.
///
/// √D′_K is the root with positive imaginary part, so `re = x` and
/// `im = y·√|D′_K|` when the element is viewed as a complex number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    pub x: Rational,
    pub y: Rational,
    pub field: FieldDesc,
}

fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

impl FieldElem {
    pub fn new(x: Rational, y: Rational, field: FieldDesc) -> Self {
        FieldElem { x, y, field }
    }

    pub fn zero(field: FieldDesc) -> Self {
        FieldElem::new(Rational::zero(), Rational::zero(), field)
    }

    pub fn one(field: FieldDesc) -> Self {
        FieldElem::new(Rational::one(), Rational::zero(), field)
    }

    pub fn from_int(n: i64, field: FieldDesc) -> Self {
        FieldElem::new(rat(n), Rational::zero(), field)
    }

    pub fn from_rational(q: Rational, field: FieldDesc) -> Self {
        FieldElem::new(q, Rational::zero(), field)
    }

    /// √D′_K itself.
    pub fn sqrt_dk_prime(field: FieldDesc) -> Self {
        FieldElem::new(Rational::zero(), Rational::one(), field)
    }

    /// √D_K = i·√|D_K|.
    pub fn sqrt_dk(field: FieldDesc) -> Self {
        match field.omega_kind() {
            OmegaKind::HalfSqrt => FieldElem::new(Rational::zero(), rat(2), field),
            OmegaKind::HalfOnePlusSqrt => FieldElem::sqrt_dk_prime(field),
        }
    }

    pub fn from_quadint(q: &QuadInt) -> Self {
        let a = BigRational::from_integer(q.a.clone());
        let b = BigRational::from_integer(q.b.clone());
        match q.field.omega_kind() {
            OmegaKind::HalfSqrt => FieldElem::new(a, b, q.field),
            OmegaKind::HalfOnePlusSqrt => {
                let half = &b / rat(2);
                FieldElem::new(a + &half, half, q.field)
            }
        }
    }

    /// Coordinates (a, b) in the basis (1, ω), as rationals.
    pub fn omega_coords(&self) -> (Rational, Rational) {
        match self.field.omega_kind() {
            OmegaKind::HalfSqrt => (self.x.clone(), self.y.clone()),
            OmegaKind::HalfOnePlusSqrt => {
                let b = &self.y * rat(2);
                (&self.x - &self.y, b)
            }
        }
    }

    /// Writes the element as numerator / denominator with numerator in O_K and
    /// the smallest positive integer denominator.
    pub fn to_quadint_over_den(&self) -> (QuadInt, BigInt) {
        let (a, b) = self.omega_coords();
        let den = a.denom().lcm(b.denom());
        let na = (a * BigRational::from_integer(den.clone())).to_integer();
        let nb = (b * BigRational::from_integer(den.clone())).to_integer();
        (QuadInt::new(na, nb, self.field), den)
    }

    pub fn to_quadint(&self) -> Option<QuadInt> {
        let (q, d) = self.to_quadint_over_den();
        if d.is_one() {
            Some(q)
        } else {
            None
        }
    }

    pub fn is_integral(&self) -> bool {
        let (a, b) = self.omega_coords();
        a.is_integer() && b.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn conj(&self) -> Self {
        FieldElem::new(self.x.clone(), -&self.y, self.field)
    }

    /// |z|² as an exact rational.
    pub fn norm(&self) -> Rational {
        &self.x * &self.x - &self.y * &self.y * rat(self.field.dk_prime())
    }

    /// Real part (exact).
    pub fn re(&self) -> Rational {
        self.x.clone()
    }

    /// The purely imaginary part y·√D′_K as an element of K.
    pub fn im_part(&self) -> FieldElem {
        FieldElem::new(Rational::zero(), self.y.clone(), self.field)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(FieldElem::new(&self.x / &n, -&self.y / &n, self.field))
    }

    pub fn div(&self, other: &FieldElem) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElem::new(&self.x * q, &self.y * q, self.field)
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let re = self.x.to_f64().unwrap_or(f64::NAN);
        let im = self.y.to_f64().unwrap_or(f64::NAN) * (-(self.field.dk_prime() as f64)).sqrt();
        (re, im)
    }

    /// Exact string in the (1, ω) basis, e.g. `3/2+1/2*w` or `(1+w)/2`.
    pub fn to_exact_string(&self) -> String {
        let (q, d) = self.to_quadint_over_den();
        if d.is_one() {
            q.to_string()
        } else if q.b.is_zero() || q.a.is_zero() {
            format!("{q}/{d}")
        } else {
            format!("({q})/{d}")
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        debug_assert_eq!(self.field, rhs.field);
        FieldElem::new(&self.x + &rhs.x, &self.y + &rhs.y, self.field)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        debug_assert_eq!(self.field, rhs.field);
        FieldElem::new(&self.x - &rhs.x, &self.y - &rhs.y, self.field)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        debug_assert_eq!(self.field, rhs.field);
        let d = rat(self.field.dk_prime());
        FieldElem::new(
            &self.x * &rhs.x + &self.y * &rhs.y * d,
            &self.x * &rhs.y + &self.y * &rhs.x,
            self.field,
        )
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-&self.x, -&self.y, self.field)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
