use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Which generator ω is used for the integral basis (1, ω) of O_K.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OmegaKind {
    /// D_K ≡ 0 mod 4, ω = √D_K / 2.
    HalfSqrt,
    /// D_K ≡ 1 mod 4, ω = (1 + √D_K) / 2.
    HalfOnePlusSqrt,
}

/// An imaginary quadratic field K = ℚ(√D_K), described by its discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldDesc {
    dk: i64,
    omega: OmegaKind,
    dk_prime: i64,
}

pub(crate) fn is_squarefree(n: i64) -> bool {
    let mut m = n.unsigned_abs();
    if m == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        if m.is_multiple_of(p) {
            m /= p;
        }
        p += 1;
    }
    true
}

impl FieldDesc {
    pub fn new(dk: i64) -> Result<Self> {
        if dk >= 0 {
            return Err(Error::InvalidField(dk));
        }
        match dk.rem_euclid(4) {
            1 if is_squarefree(dk) => Ok(FieldDesc {
                dk,
                omega: OmegaKind::HalfOnePlusSqrt,
                dk_prime: dk,
            }),
            0 => {
                let m = dk / 4;
                if is_squarefree(m) && matches!(m.rem_euclid(4), 2 | 3) {
                    Ok(FieldDesc {
                        dk,
                        omega: OmegaKind::HalfSqrt,
                        dk_prime: m,
                    })
                } else {
                    Err(Error::InvalidField(dk))
                }
            }
            _ => Err(Error::InvalidField(dk)),
        }
    }

    /// Gaussian field ℚ(i).
    pub fn gauss() -> Self {
        FieldDesc::new(-4).unwrap()
    }

    /// Eisenstein field ℚ(√−3).
    pub fn eisenstein() -> Self {
        FieldDesc::new(-3).unwrap()
    }

    pub fn dk(&self) -> i64 {
        self.dk
    }

    pub fn omega_kind(&self) -> OmegaKind {
        self.omega
    }

    /// D′_K: D_K/4 when D_K ≡ 0 mod 4, D_K otherwise. Always squarefree and negative.
    pub fn dk_prime(&self) -> i64 {
        self.dk_prime
    }

    /// tr(ω).
    pub fn omega_trace(&self) -> i64 {
        match self.omega {
            OmegaKind::HalfSqrt => 0,
            OmegaKind::HalfOnePlusSqrt => 1,
        }
    }

    /// N(ω).
    pub fn omega_norm(&self) -> i64 {
        match self.omega {
            OmegaKind::HalfSqrt => -self.dk / 4,
            OmegaKind::HalfOnePlusSqrt => (1 - self.dk) / 4,
        }
    }

    /// Number of roots of unity in O_K.
    pub fn unit_count(&self) -> usize {
        match self.dk {
            -4 => 4,
            -3 => 6,
            _ => 2,
        }
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.dk)
    }
}
