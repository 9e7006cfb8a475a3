//! Exact arithmetic over ℚ, an imaginary quadratic field K and its ring of
//! integers O_K, and multiquadratic towers ℚ(√r₁, …, √r_k).

mod field;
mod fieldelem;
mod ideal;
mod multiquad;
mod norm_form;
mod quadint;

pub use field::{FieldDesc, OmegaKind};
pub use fieldelem::FieldElem;
pub use ideal::{canonical_unit_normalize, content_ideal, primitive_part, IdealHNF};
pub use multiquad::{squarefree_decompose, MultiQuadElem};
pub use norm_form::{norm_form, norm_representable};
pub use quadint::QuadInt;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Shorthand for a small rational n/d.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
