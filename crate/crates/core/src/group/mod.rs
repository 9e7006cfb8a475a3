//! Elements of SU_h(K) and SU_h(O_K), generator sets, word enumeration,
//! chain orbits and positive fixed points.

mod fixed;
mod generators;
mod orbit;

pub use fixed::{kernel_basis, positive_fixed_point};
pub use generators::{GeneratorSet, GeneratorSetJson};
pub use orbit::{orbit_of_chain, stabilizer_elements, words_up_to};

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::exactnum::{FieldDesc, FieldElem, QuadInt};
use crate::hermitian::ProjPoint;
use crate::matrix::Mat3;

/// An h-unitary determinant-1 matrix with entries in K.
#[derive(Clone, Debug)]
pub struct GroupElem {
    entries: Mat3<FieldElem>,
    integral: Option<Mat3<QuadInt>>,
}

impl PartialEq for GroupElem {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for GroupElem {}

impl Hash for GroupElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state)
    }
}

/// Validates a K-matrix as an element of SU_h(K).
pub fn check_membership(m: Mat3<FieldElem>) -> Result<GroupElem> {
    m.check_special_unitary()?;
    Ok(GroupElem::from_matrix_unchecked(m))
}

impl GroupElem {
    pub(crate) fn from_matrix_unchecked(m: Mat3<FieldElem>) -> Self {
        debug_assert!(m.check_special_unitary().is_ok(), "not in SU_h: {m:?}");
        let integral = if m.m.iter().flatten().all(FieldElem::is_integral) {
            Some(m.map(|x| x.to_quadint().expect("integral entry")))
        } else {
            None
        };
        GroupElem {
            entries: m,
            integral,
        }
    }

    pub fn identity(field: FieldDesc) -> Self {
        GroupElem::from_matrix_unchecked(Mat3::identity_like(&FieldElem::zero(field)))
    }

    pub fn field(&self) -> FieldDesc {
        self.entries.m[0][0].field
    }

    pub fn matrix(&self) -> &Mat3<FieldElem> {
        &self.entries
    }

    pub fn integral_matrix(&self) -> Option<&Mat3<QuadInt>> {
        self.integral.as_ref()
    }

    pub fn is_integral(&self) -> bool {
        self.integral.is_some()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_identity()
    }

    pub fn mul(&self, other: &GroupElem) -> GroupElem {
        let entries = self.entries.mul(&other.entries);
        let integral = match (&self.integral, &other.integral) {
            (Some(a), Some(b)) => Some(a.mul(b)),
            _ => None,
        };
        match integral {
            Some(_) => GroupElem { entries, integral },
            None => GroupElem::from_matrix_unchecked(entries),
        }
    }

    /// g⁻¹ = J·g*·J for h-unitary g.
    pub fn inv(&self) -> GroupElem {
        let j = Mat3::gram_like(&self.entries.m[0][0]);
        let entries = j.mul(&self.entries.conj_transpose()).mul(&j);
        let integral = self.integral.as_ref().map(|m| {
            let jq = Mat3::gram_like(&m.m[0][0]);
            jq.mul(&m.conj_transpose()).mul(&jq)
        });
        GroupElem { entries, integral }
    }

    /// Projective action, returning the canonical primitive representative.
    pub fn act_on_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if let Some(m) = &self.integral {
            // g and g⁻¹ are integral, so the image of a primitive triple is primitive.
            return Ok(ProjPoint::from_primitive(m.apply(p.coords())));
        }
        let v = self.entries.apply(&p.field_coords());
        ProjPoint::from_field_elems(&v)
    }

    /// The image of a vector (no projectivization).
    pub fn apply(&self, v: &[FieldElem; 3]) -> [FieldElem; 3] {
        self.entries.apply(v)
    }

    pub fn is_central(&self) -> bool {
        let m = &self.entries.m;
        let d = &m[0][0];
        (0..3).all(|i| (0..3).all(|j| if i == j { &m[i][j] == d } else { m[i][j].is_zero() }))
    }

    /// The representative of g·{cube roots of unity in K} used for PSU_h dedup.
    pub fn psu_canonical(&self) -> GroupElem {
        let field = self.field();
        let roots = QuadInt::cube_roots_of_unity(field);
        if roots.len() == 1 {
            return self.clone();
        }
        roots
            .iter()
            .map(|r| self.scale_by_unit(r))
            .min_by(|a, b| a.canonical_cmp(b))
            .expect("at least one root")
    }

    fn scale_by_unit(&self, u: &QuadInt) -> GroupElem {
        let uf = FieldElem::from_quadint(u);
        GroupElem {
            entries: self.entries.scale(&uf),
            integral: self.integral.as_ref().map(|m| m.scale(u)),
        }
    }

    fn canonical_cmp(&self, other: &GroupElem) -> Ordering {
        let a = self.entries.m.iter().flatten();
        let b = other.entries.m.iter().flatten();
        a.zip(b)
            .map(|(x, y)| (&x.x, &x.y).cmp(&(&y.x, &y.y)))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }

    /// Entries as exact strings in the (1, ω) basis, row-major.
    pub fn to_strings(&self) -> [[String; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entries.m[i][j].to_exact_string()))
    }
}

impl From<&GroupElem> for Mat3<FieldElem> {
    fn from(g: &GroupElem) -> Self {
        g.entries.clone()
    }
}

pub(crate) fn require_same_field(a: FieldDesc, b: FieldDesc) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch(a.dk(), b.dk()))
    }
}
