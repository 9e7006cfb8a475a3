//! Quaternion algebras (a, b / ℚ), their ramification, the embedding σ_{a,b}
//! into the stabilizer of [0:1:0], and the commensurability classifier.

mod hilbert;

pub use hilbert::{
    diagonal_forms_equivalent, hasse_invariant, hilbert_symbol, hilbert_symbol_by_search, is_prime, kronecker,
    legendre, prime_divisors, Place,
};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{norm_representable, squarefree_decompose, FieldDesc, MultiQuadElem, Rational};
use crate::fuchsian::{entries_in_ok, gamma0, membership_conditions, unitary_inverse, MembershipTuple};
use crate::matrix::Mat3;

/// The algebra with i² = a, j² = b, ij = −ji = k, with a > 0 > b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuatAlgebra {
    pub a: i64,
    pub b: i64,
}

impl QuatAlgebra {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a > 0 && b < 0 {
            Ok(QuatAlgebra { a, b })
        } else {
            Err(Error::InvalidAlgebra(a, b))
        }
    }

    /// (D, D_K / ℚ), the algebra attached to Γ_{K,D}.
    pub fn for_discriminant(d: u64, field: FieldDesc) -> Self {
        QuatAlgebra::new(d as i64, field.dk()).expect("D > 0 > D_K")
    }

    pub fn mul(&self, p: &Quaternion, q: &Quaternion) -> Quaternion {
        let (a, b) = (rat(self.a), rat(self.b));
        let [x0, x1, x2, x3] = &p.x;
        let [y0, y1, y2, y3] = &q.x;
        Quaternion {
            x: [
                x0 * y0 + &a * x1 * y1 + &b * x2 * y2 - &a * &b * x3 * y3,
                x0 * y1 + x1 * y0 - &b * x2 * y3 + &b * x3 * y2,
                x0 * y2 + x2 * y0 + &a * x1 * y3 - &a * x3 * y1,
                x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
            ],
        }
    }
}

impl fmt::Display for QuatAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {} / Q)", self.a, self.b)
    }
}

fn rat(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

/// x₀ + x₁i + x₂j + x₃k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub x: [Rational; 4],
}

impl Quaternion {
    pub fn new(x: [Rational; 4]) -> Self {
        Quaternion { x }
    }

    pub fn from_ints(x: [i64; 4]) -> Self {
        Quaternion { x: x.map(rat) }
    }

    pub fn one() -> Self {
        Quaternion::from_ints([1, 0, 0, 0])
    }

    pub fn is_integral(&self) -> bool {
        self.x.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x0, x1, x2, x3] = &self.x;
        write!(f, "{x0} + {x1}i + {x2}j + {x3}k")
    }
}

/// n(x) = x₀² − a x₁² − b x₂² + ab x₃².
pub fn reduced_norm(q: &Quaternion, alg: &QuatAlgebra) -> Rational {
    let (a, b) = (rat(alg.a), rat(alg.b));
    let [x0, x1, x2, x3] = &q.x;
    x0 * x0 - &a * x1 * x1 - &b * x2 * x2 + &a * &b * x3 * x3
}

/// Places where the algebra does not split.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RamificationSet {
    pub primes: BTreeSet<u64>,
    pub infinite: bool,
}

impl RamificationSet {
    pub fn cardinality(&self) -> usize {
        self.primes.len() + usize::from(self.infinite)
    }

    /// Division algebra (equivalently, cocompact arithmetic groups) iff nonempty.
    pub fn is_division(&self) -> bool {
        self.cardinality() > 0
    }
}

pub fn ramification_set(alg: &QuatAlgebra) -> RamificationSet {
    let mut candidates = prime_divisors(alg.a as i128 * alg.b as i128);
    candidates.insert(2);
    let primes = candidates
        .into_iter()
        .filter(|&p| hilbert_symbol(alg.a, alg.b, Place::Prime(p)) == -1)
        .collect();
    RamificationSet {
        primes,
        infinite: hilbert_symbol(alg.a, alg.b, Place::Infinity) == -1,
    }
}

pub fn algebras_isomorphic(a: &QuatAlgebra, b: &QuatAlgebra) -> bool {
    ramification_set(a) == ramification_set(b)
}

/// Whether Γ_{K,D1} and Γ_{K,D2} are commensurable up to conjugacy,
/// decided by isomorphism of (D1, D_K) and (D2, D_K). The converse direction
/// rests on the classification of arithmetic Fuchsian groups in PU(2,1).
pub fn commensurable_gamma_kd(d1: u64, d2: u64, field: FieldDesc) -> bool {
    algebras_isomorphic(
        &QuatAlgebra::for_discriminant(d1, field),
        &QuatAlgebra::for_discriminant(d2, field),
    )
}

/// The sufficient condition: one of D2/D1, D1/D2 is an integer norm from O_K.
pub fn by_norm_lemma(d1: u64, d2: u64, field: FieldDesc) -> bool {
    let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
    lo > 0 && hi % lo == 0 && norm_representable(hi / lo, field).is_some()
}

/// Rational equivalence of D_K x² + D1 y² − D1 D_K z² and D_K x² + D2 y² − D2 D_K z².
pub fn quadratic_form_criterion(d1: u64, d2: u64, field: FieldDesc) -> bool {
    let dk = field.dk();
    let form = |d: u64| [dk, d as i64, -(d as i64) * dk];
    diagonal_forms_equivalent(&form(d1), &form(d2))
}

/// Every ramified prime is ramified or inert in K.
pub fn admissible_algebra(alg: &QuatAlgebra, field: FieldDesc) -> bool {
    ramification_set(alg)
        .primes
        .iter()
        .all(|&p| kronecker(field.dk(), p) != 1)
}

/// σ_{a,b}(q) over ℚ(√a, √b), with √b = i·√|b|.
pub fn sigma_embed(q: &Quaternion, alg: &QuatAlgebra) -> Mat3<MultiQuadElem> {
    let sa = MultiQuadElem::sqrt(alg.a);
    let sb = MultiQuadElem::sqrt(alg.b);
    let c = |r: &Rational| MultiQuadElem::from_rational(r.clone());
    let [x0, x1, x2, x3] = &q.x;
    let z = MultiQuadElem::zero;
    Mat3::new([
        [&c(x0) + &(&c(x1) * &sa), z(), &(&c(x2) + &(&c(x3) * &sa)) * &sb],
        [z(), MultiQuadElem::one(), z()],
        [&(&c(x2) - &(&c(x3) * &sa)) * &sb, z(), &c(x0) - &(&c(x1) * &sa)],
    ])
}

/// The algebra (D, D′_K / ℚ) used with γ₀; isomorphic to (D, D_K / ℚ).
pub fn order_algebra(d: u64, field: FieldDesc) -> QuatAlgebra {
    QuatAlgebra::new(d as i64, field.dk_prime()).expect("D > 0 > D'_K")
}

/// Membership in O = {x ∈ A(ℤ) : x₁ ≡ x₂ ≡ x₃ ≡ 0 mod 4D}.
pub fn order_o_contains(q: &Quaternion, d: u64) -> bool {
    let m = rat(4 * d);
    q.is_integral() && q.x[1..].iter().all(|c| (c / &m).is_integer())
}

/// The verdicts for one element of O¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderElementCheck {
    pub tuple: MembershipTuple,
    pub conditions_hold: bool,
    pub conjugate_integral: bool,
}

impl OrderElementCheck {
    pub fn lands(&self) -> bool {
        self.conditions_hold && self.conjugate_integral
    }
}

/// For q ∈ O of reduced norm 1 in (D, D′_K): the integrality conditions on
/// (u, v, s, t) = (2x₀, x₁, 2x₂, x₃), and whether γ₀·σ(q)·γ₀⁻¹ has all entries in O_K.
pub fn check_order_element(q: &Quaternion, d: u64, field: FieldDesc) -> Result<OrderElementCheck> {
    if !order_o_contains(q, d) {
        return Err(Error::NotInOrder);
    }
    let alg = order_algebra(d, field);
    if !reduced_norm(q, &alg).is_one() {
        return Err(Error::NotNormOne);
    }
    let int = |c: &Rational| c.to_integer();
    let two = BigInt::from(2);
    let tuple = MembershipTuple {
        u: &two * int(&q.x[0]),
        v: int(&q.x[1]),
        s: &two * int(&q.x[2]),
        t: int(&q.x[3]),
    };
    let conditions_hold = membership_conditions(&tuple, d, field);
    let g0 = gamma0(d);
    let conj = g0.mul(&sigma_embed(q, &alg)).mul(&unitary_inverse(&g0));
    Ok(OrderElementCheck {
        tuple,
        conditions_hold,
        conjugate_integral: entries_in_ok(&conj, field),
    })
}

/// Both checks of [`check_order_element`] together.
pub fn order_element_lands_in_fd(q: &Quaternion, d: u64, field: FieldDesc) -> Result<bool> {
    Ok(check_order_element(q, d, field)?.lands())
}

/// Elements of O of reduced norm 1 in (D, D′_K) with |xᵢ| ≤ bound.
pub fn order_norm_one_search(d: u64, field: FieldDesc, bound: i64) -> Vec<Quaternion> {
    let alg = order_algebra(d, field);
    let step = 4 * d as i64;
    let (a, b) = (alg.a as i128, alg.b as i128);
    let range = || (-bound / step..=bound / step).map(move |k| (k * step) as i128);
    let mut out = Vec::new();
    for x1 in range() {
        for x2 in range() {
            for x3 in range() {
                // x₀² = 1 + a x₁² + b x₂² − ab x₃²
                let sq = 1 + a * x1 * x1 + b * x2 * x2 - a * b * x3 * x3;
                if sq < 0 {
                    continue;
                }
                let r = (sq as f64).sqrt().round() as i128;
                let Some(x0) = (r - 1..=r + 1).find(|&c| c >= 0 && c * c == sq) else {
                    continue;
                };
                if x0 > bound as i128 {
                    continue;
                }
                let signs: &[i128] = if x0 == 0 { &[1] } else { &[1, -1] };
                for &sgn in signs {
                    out.push(Quaternion::from_ints([sgn * x0, x1, x2, x3].map(|v| v as i64)));
                }
            }
        }
    }
    out
}

/// The squarefree part of a positive integer.
pub fn squarefree_kernel(d: u64) -> u64 {
    squarefree_decompose(d as i64).1.unsigned_abs()
}

/// Pairwise distinct ramification sets among (D, D_K / ℚ) for the given D.
pub fn commensurability_classes(ds: impl IntoIterator<Item = u64>, field: FieldDesc) -> BTreeSet<RamificationSet> {
    ds.into_iter()
        .map(|d| ramification_set(&QuatAlgebra::for_discriminant(d, field)))
        .collect()
}
