use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::FieldDesc;

/// An element a + bω of O_K, with ω the standard generator for the field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
    pub field: FieldDesc,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, field: FieldDesc) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
            field,
        }
    }

    pub fn zero(field: FieldDesc) -> Self {
        QuadInt::new(0, 0, field)
    }

    pub fn one(field: FieldDesc) -> Self {
        QuadInt::new(1, 0, field)
    }

    pub fn omega(field: FieldDesc) -> Self {
        QuadInt::new(0, 1, field)
    }

    pub fn from_int(n: impl Into<BigInt>, field: FieldDesc) -> Self {
        QuadInt::new(n, 0, field)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        let t = self.field.omega_trace();
        QuadInt {
            a: &self.a + &self.b * t,
            b: -&self.b,
            field: self.field,
        }
    }

    /// N(x) = x·x̄.
    pub fn norm(&self) -> BigInt {
        let t = self.field.omega_trace();
        let n = self.field.omega_norm();
        &self.a * &self.a + &self.a * &self.b * t + &self.b * &self.b * n
    }

    /// tr(x) = x + x̄.
    pub fn trace(&self) -> BigInt {
        &self.a * 2 + &self.b * self.field.omega_trace()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        QuadInt {
            a: &self.a * k,
            b: &self.b * k,
            field: self.field,
        }
    }

    /// gcd of the two coordinates (the largest rational integer dividing x).
    pub fn rational_content(&self) -> BigInt {
        self.a.gcd(&self.b)
    }

    /// x / k when k divides both coordinates.
    pub fn div_int(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() || !(&self.a % k).is_zero() || !(&self.b % k).is_zero() {
            return None;
        }
        Some(QuadInt {
            a: &self.a / k,
            b: &self.b / k,
            field: self.field,
        })
    }

    /// Exact quotient x / y in O_K, if it exists.
    pub fn div_exact(&self, y: &QuadInt) -> Option<Self> {
        if y.is_zero() {
            return None;
        }
        let num = self * &y.conj();
        num.div_int(&y.norm())
    }

    pub fn divides(&self, x: &QuadInt) -> bool {
        x.div_exact(self).is_some()
    }

    /// Roots of unity of O_K, starting with 1 and ordered by increasing angle.
    pub fn units(field: FieldDesc) -> Vec<QuadInt> {
        let one = QuadInt::one(field);
        match field.dk() {
            -4 => {
                let i = QuadInt::omega(field);
                vec![one.clone(), i.clone(), -one, -i]
            }
            -3 => {
                // ω = (1 + √−3)/2 is a primitive sixth root of unity.
                let w = QuadInt::omega(field);
                let mut out = vec![one];
                for k in 1..6 {
                    let next = &out[k - 1] * &w;
                    out.push(next);
                }
                out
            }
            _ => vec![one.clone(), -one],
        }
    }

    /// Cube roots of unity in O_K (the scalar kernel of SU_h → PSU_h that lives over K).
    pub fn cube_roots_of_unity(field: FieldDesc) -> Vec<QuadInt> {
        QuadInt::units(field)
            .into_iter()
            .filter(|u| (u * u * u.clone()).is_one())
            .collect()
    }

    /// Total order used to pick canonical representatives: smaller norm first,
    /// then larger `a`, then larger `b`.
    pub fn canonical_cmp(&self, other: &QuadInt) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| other.a.cmp(&self.a))
            .then_with(|| other.b.cmp(&self.b))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let fe = super::FieldElem::from_quadint(self);
        fe.to_complex()
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let bpart = if self.b.is_one() {
            "w".to_string()
        } else if (-&self.b).is_one() {
            "-w".to_string()
        } else {
            format!("{}*w", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{bpart}")
        } else if self.b.is_negative() {
            write!(f, "{}{}", self.a, bpart)
        } else {
            write!(f, "{}+{}", self.a, bpart)
        }
    }
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        debug_assert_eq!(self.field, rhs.field);
        QuadInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            field: self.field,
        }
    }
}

impl<'a> Sub<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        debug_assert_eq!(self.field, rhs.field);
        QuadInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            field: self.field,
        }
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        debug_assert_eq!(self.field, rhs.field);
        let t = self.field.omega_trace();
        let n = self.field.omega_norm();
        let bb = &self.b * &rhs.b;
        QuadInt {
            a: &self.a * &rhs.a - &bb * n,
            b: &self.a * &rhs.b + &self.b * &rhs.a + &bb * t,
            field: self.field,
        }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            a: -self.a,
            b: -self.b,
            field: self.field,
        }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $m(self, rhs: QuadInt) -> QuadInt {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $m(self, rhs: &QuadInt) -> QuadInt {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
