use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::fieldelem::FieldElem;
use super::field::FieldDesc;
use super::Rational;
use crate::error::{Error, Result};

/// An element of a multiquadratic field ℚ(√r₁, …, √r_k).
///
/// Stored as Σ c_s·√s over squarefree integers s (s = 1 is the rational part).
/// Negative s means √s = i·√|s|, so complex conjugation negates exactly the
/// coefficients with s < 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiQuadElem {
    coeffs: BTreeMap<i64, Rational>,
}

/// Splits n ≠ 0 as m²·s with s squarefree (sign kept on s).
pub fn squarefree_decompose(n: i64) -> (u64, i64) {
    assert!(n != 0, "squarefree_decompose(0)");
    let mut rest = n.unsigned_abs();
    let mut square_root = 1u64;
    let mut core = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square_root *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
        p += 1;
    }
    core *= rest;
    let s = if n < 0 { -(core as i64) } else { core as i64 };
    (square_root, s)
}

/// Prime factors of |n| (with -1 appended when n < 0).
fn radical_generators(n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    if n < 0 {
        out.push(-1);
    }
    let mut rest = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            out.push(p as i64);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        out.push(rest as i64);
    }
    out
}

/// √s · √t = factor · √key for squarefree s, t.
fn basis_product(s: i64, t: i64) -> (i64, i64) {
    let g = s.unsigned_abs().gcd(&t.unsigned_abs()) as i64;
    let key = (s / g)
        .checked_mul(t / g)
        .expect("radicand overflow in multiquadratic product");
    let factor = if s < 0 && t < 0 { -g } else { g };
    (factor, key)
}

impl MultiQuadElem {
    pub fn zero() -> Self {
        MultiQuadElem::default()
    }

    pub fn one() -> Self {
        MultiQuadElem::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        MultiQuadElem::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !q.is_zero() {
            coeffs.insert(1, q);
        }
        MultiQuadElem { coeffs }
    }

    /// c·√s for an arbitrary nonzero integer s; square factors are pulled into the coefficient.
    pub fn radical(c: Rational, n: i64) -> Self {
        if n == 0 || c.is_zero() {
            return MultiQuadElem::zero();
        }
        let (m, s) = squarefree_decompose(n);
        let mut coeffs = BTreeMap::new();
        coeffs.insert(s, c * BigRational::from_integer(BigInt::from(m)));
        MultiQuadElem { coeffs }
    }

    /// √n, with √n = i·√|n| for n < 0.
    pub fn sqrt(n: i64) -> Self {
        MultiQuadElem::radical(Rational::one(), n)
    }

    pub fn from_field_elem(z: &FieldElem) -> Self {
        MultiQuadElem::from_rational(z.x.clone())
            + MultiQuadElem::radical(z.y.clone(), z.field.dk_prime())
    }

    /// Back to K when the element lies in ℚ(√D′_K).
    pub fn to_field_elem(&self, field: FieldDesc) -> Option<FieldElem> {
        let d = field.dk_prime();
        let mut x = Rational::zero();
        let mut y = Rational::zero();
        for (s, c) in &self.coeffs {
            if *s == 1 {
                x = c.clone();
            } else if *s == d {
                y = c.clone();
            } else {
                return None;
            }
        }
        Some(FieldElem::new(x, y, field))
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, s: i64) -> Rational {
        self.coeffs.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    /// Generators (primes and possibly -1) of the smallest tower containing the element.
    pub fn radicands(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .coeffs
            .keys()
            .flat_map(|s| radical_generators(*s))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&1).is_some_and(|c| c.is_one())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&1).cloned(),
            _ => None,
        }
    }

    /// All coefficients are integers (a sufficient condition for being an algebraic integer).
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    fn insert_add(map: &mut BTreeMap<i64, Rational>, key: i64, val: Rational) {
        let entry = map.entry(key).or_insert_with(Rational::zero);
        *entry += val;
        if entry.is_zero() {
            map.remove(&key);
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return MultiQuadElem::zero();
        }
        MultiQuadElem {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    /// Negates √r for the generator r (a prime, or -1 for complex conjugation).
    pub fn conj_radical(&self, r: i64) -> Self {
        let flips = |s: i64| if r == -1 { s < 0 } else { s % r == 0 };
        MultiQuadElem {
            coeffs: self
                .coeffs
                .iter()
                .map(|(s, c)| (*s, if flips(*s) { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.conj_radical(-1)
    }

    /// Multiplicative inverse by norm descent through the tower.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(MultiQuadElem::from_rational(q.recip()));
        }
        let r = *self
            .radicands()
            .last()
            .expect("non-rational element has a radicand");
        let partner = self.conj_radical(r);
        let descended = self * &partner;
        debug_assert!(!descended.radicands().contains(&r));
        Ok(&partner * &descended.inv()?)
    }

    pub fn div(&self, other: &MultiQuadElem) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn to_complex(&self) -> Complex64 {
        self.coeffs
            .iter()
            .map(|(s, c)| {
                let cf = c.to_f64().unwrap_or(f64::NAN);
                let root = (s.unsigned_abs() as f64).sqrt();
                if *s < 0 {
                    Complex64::new(0.0, cf * root)
                } else {
                    Complex64::new(cf * root, 0.0)
                }
            })
            .sum()
    }
}

impl fmt::Display for MultiQuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.coeffs {
            if !first {
                write!(f, " ")?;
                if !c.is_negative() {
                    write!(f, "+")?;
                }
            }
            first = false;
            if *s == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*sqrt({s})")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiQuadElem> for &'a MultiQuadElem {
    type Output = MultiQuadElem;
    fn add(self, rhs: &MultiQuadElem) -> MultiQuadElem {
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &rhs.coeffs {
            MultiQuadElem::insert_add(&mut coeffs, *k, v.clone());
        }
        MultiQuadElem { coeffs }
    }
}

impl<'a> Sub<&'a MultiQuadElem> for &'a MultiQuadElem {
    type Output = MultiQuadElem;
    fn sub(self, rhs: &MultiQuadElem) -> MultiQuadElem {
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &rhs.coeffs {
            MultiQuadElem::insert_add(&mut coeffs, *k, -v);
        }
        MultiQuadElem { coeffs }
    }
}

impl<'a> Mul<&'a MultiQuadElem> for &'a MultiQuadElem {
    type Output = MultiQuadElem;
    fn mul(self, rhs: &MultiQuadElem) -> MultiQuadElem {
        let mut coeffs = BTreeMap::new();
        for (s, c) in &self.coeffs {
            for (t, d) in &rhs.coeffs {
                let (factor, key) = basis_product(*s, *t);
                let val = c * d * BigRational::from_integer(BigInt::from(factor));
                MultiQuadElem::insert_add(&mut coeffs, key, val);
            }
        }
        MultiQuadElem { coeffs }
    }
}

impl Neg for &MultiQuadElem {
    type Output = MultiQuadElem;
    fn neg(self) -> MultiQuadElem {
        MultiQuadElem {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for MultiQuadElem {
    type Output = MultiQuadElem;
    fn neg(self) -> MultiQuadElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiQuadElem> for MultiQuadElem {
            type Output = MultiQuadElem;
            fn $m(self, rhs: MultiQuadElem) -> MultiQuadElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiQuadElem> for MultiQuadElem {
            type Output = MultiQuadElem;
            fn $m(self, rhs: &MultiQuadElem) -> MultiQuadElem {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
