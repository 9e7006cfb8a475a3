use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

use super::field::FieldDesc;
use super::quadint::QuadInt;
use crate::error::{Error, Result};

/// A nonzero O_K-ideal as a ℤ-lattice in the basis (1, ω).
///
/// Rows of `basis` are the generators `n·1` and `c + d·ω` with n, d > 0 and 0 ≤ c < n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealHNF {
    pub field: FieldDesc,
    pub basis: [[BigInt; 2]; 2],
}

impl IdealHNF {
    fn n(&self) -> &BigInt {
        &self.basis[0][0]
    }
    fn c(&self) -> &BigInt {
        &self.basis[1][0]
    }
    fn d(&self) -> &BigInt {
        &self.basis[1][1]
    }

    /// Index of the lattice in O_K, i.e. the ideal norm.
    pub fn norm(&self) -> BigInt {
        self.n() * self.d()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.norm().is_one()
    }

    pub fn contains(&self, x: &QuadInt) -> bool {
        if !(&x.b % self.d()).is_zero() {
            return false;
        }
        let k = &x.b / self.d();
        (&x.a - k * self.c()).mod_floor(self.n()).is_zero()
    }

    /// Checks closure under multiplication by ω.
    pub fn is_ideal(&self) -> bool {
        let w = QuadInt::omega(self.field);
        let g1 = QuadInt::new(self.n().clone(), 0, self.field);
        let g2 = QuadInt::new(self.c().clone(), self.d().clone(), self.field);
        self.contains(&(&w * &g1)) && self.contains(&(&w * &g2))
    }

    /// Looks for a generator: an element of the ideal whose norm equals the ideal norm.
    pub fn principal_generator(&self) -> Option<QuadInt> {
        let target = self.norm();
        let tf = target.to_f64()?;
        let root = tf.sqrt();
        let im_omega = ((-self.field.dk()) as f64).sqrt() / 2.0;
        let re_omega = self.field.omega_trace() as f64 / 2.0;
        let nf = self.n().to_f64()?;
        let cf = self.c().to_f64()?;
        let df = self.d().to_f64()?;
        let jmax = (root / (df * im_omega)).floor() as i64 + 1;
        let mut found: Option<QuadInt> = None;
        for j in -jmax..=jmax {
            let shift = j as f64 * (cf + df * re_omega);
            let lo = ((-root - shift) / nf).floor() as i64 - 1;
            let hi = ((root - shift) / nf).ceil() as i64 + 1;
            for i in lo..=hi {
                let g = QuadInt::new(
                    self.n() * i + self.c() * j,
                    self.d() * j,
                    self.field,
                );
                if g.norm() == target {
                    found = Some(match found {
                        Some(best) if best.canonical_cmp(&g) != Ordering::Greater => best,
                        _ => g,
                    });
                }
            }
        }
        found.map(|g| canonical_unit_multiple(&g))
    }

    fn as_i64_array(&self) -> [[i64; 2]; 2] {
        let conv = |x: &BigInt| x.to_i64().unwrap_or(i64::MAX);
        [
            [conv(&self.basis[0][0]), conv(&self.basis[0][1])],
            [conv(&self.basis[1][0]), conv(&self.basis[1][1])],
        ]
    }
}

/// Extended gcd returning (g, s, t) with s·a + t·b = g ≥ 0.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// The O_K-ideal generated by `zs`, as the HNF of the ℤ-span of {z, ω·z}.
pub fn content_ideal(zs: &[QuadInt]) -> Result<IdealHNF> {
    let field = zs.first().ok_or(Error::AllZero)?.field;
    if zs.iter().all(QuadInt::is_zero) {
        return Err(Error::AllZero);
    }
    let w = QuadInt::omega(field);
    let vecs: Vec<(BigInt, BigInt)> = zs
        .iter()
        .flat_map(|z| [z.clone(), &w * z])
        .map(|v| (v.a, v.b))
        .collect();

    // pivot with b-coordinate = gcd of all b's
    let mut pivot = (BigInt::zero(), BigInt::zero());
    for (a, b) in &vecs {
        let (g, s, t) = ext_gcd(&pivot.1, b);
        if g.is_zero() {
            continue;
        }
        pivot = (&s * &pivot.0 + &t * a, g);
    }
    let d = pivot.1.clone();
    debug_assert!(!d.is_zero(), "ideal of rank < 2");
    let mut n = BigInt::zero();
    for (a, b) in &vecs {
        let k = b / &d;
        n = n.gcd(&(a - k * &pivot.0));
    }
    let c = pivot.0.mod_floor(&n);
    Ok(IdealHNF {
        field,
        basis: [[n, BigInt::zero()], [c, d]],
    })
}

fn canonical_unit_multiple(g: &QuadInt) -> QuadInt {
    QuadInt::units(g.field)
        .iter()
        .map(|u| u * g)
        .min_by(|x, y| x.canonical_cmp(y))
        .expect("unit group is nonempty")
}

/// Divides out the content ideal, returning the primitive tuple and the generator.
pub fn primitive_part(zs: &[QuadInt]) -> Result<(Vec<QuadInt>, QuadInt)> {
    let ideal = content_ideal(zs)?;
    let field = ideal.field;
    if ideal.is_unit_ideal() {
        return Ok((zs.to_vec(), QuadInt::one(field)));
    }
    let g = ideal
        .principal_generator()
        .ok_or_else(|| Error::NonPrincipalContent(ideal.as_i64_array()))?;
    let quotient = zs
        .iter()
        .map(|z| z.div_exact(&g).expect("generator divides every input"))
        .collect();
    Ok((quotient, g))
}

fn cmp_tuples(x: &[QuadInt], y: &[QuadInt]) -> Ordering {
    x.iter()
        .zip(y)
        .rev()
        .map(|(a, b)| a.canonical_cmp(b))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

/// Picks the least unit multiple of a tuple, comparing coordinates from the
/// last one to the first under the canonical order on O_K.
pub fn canonical_unit_normalize(zs: &[QuadInt]) -> Vec<QuadInt> {
    let Some(first) = zs.first() else {
        return Vec::new();
    };
    QuadInt::units(first.field)
        .iter()
        .map(|u| zs.iter().map(|z| u * z).collect::<Vec<_>>())
        .min_by(|x, y| cmp_tuples(x, y))
        .expect("unit group is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b, FieldDesc::gauss())
    }

    /// Independent oracle: Smith-style index of the lattice spanned by
    /// {z, ω z} via brute-force determinant gcd of all 2×2 minors.
    fn lattice_index(zs: &[QuadInt]) -> BigInt {
        let w = QuadInt::omega(zs[0].field);
        let vs: Vec<QuadInt> = zs.iter().flat_map(|z| [z.clone(), &w * z]).collect();
        let mut g = BigInt::zero();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let det = &vs[i].a * &vs[j].b - &vs[i].b * &vs[j].a;
                g = g.gcd(&det);
            }
        }
        g
    }

    #[test]
    fn unit_ideal() {
        let id = content_ideal(&[gi(1, 0), gi(0, 0), gi(0, 0)]).unwrap();
        assert!(id.is_unit_ideal());
        assert_eq!(id.basis, [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]]);
    }

    #[test]
    fn gaussian_examples() {
        let zs = [gi(2, 0), gi(0, 2)];
        let id = content_ideal(&zs).unwrap();
        assert_eq!(id.norm(), lattice_index(&zs));
        assert_eq!(id.norm(), BigInt::from(4));
        assert!(id.is_ideal());

        let zs = [gi(1, 1), gi(2, 0)];
        let id = content_ideal(&zs).unwrap();
        assert_eq!(id.norm(), lattice_index(&zs));
        assert_eq!(id.norm(), BigInt::from(2));
        assert!(id.contains(&gi(1, 1)));
        assert!(!id.contains(&gi(1, 0)));
    }

    #[test]
    fn all_zero() {
        assert_eq!(content_ideal(&[gi(0, 0), gi(0, 0)]), Err(Error::AllZero));
    }

    #[test]
    fn primitive_part_examples() {
        for dk in [-3, -4, -7] {
            let f = FieldDesc::new(dk).unwrap();
            let three = QuadInt::from_int(3, f);
            let zero = QuadInt::zero(f);
            let (p, g) = primitive_part(&[three.clone(), zero.clone(), three.clone()]).unwrap();
            assert_eq!(g, three);
            assert_eq!(p, vec![QuadInt::one(f), zero.clone(), QuadInt::one(f)]);
        }
        let (p, g) = primitive_part(&[gi(1, 1), gi(1, 1), gi(2, 0)]).unwrap();
        assert_eq!(g, gi(1, 1));
        assert_eq!(p, vec![gi(1, 0), gi(1, 0), gi(1, -1)]);
        let (p, g) = primitive_part(&[gi(0, 0), gi(1, 0), gi(0, 0)]).unwrap();
        assert!(g.is_one());
        assert_eq!(p, vec![gi(0, 0), gi(1, 0), gi(0, 0)]);
    }

    #[test]
    fn non_principal_content_is_reported() {
        // Q(√−5) has class number 2; (2, 1+√−5) is not principal.
        let f = FieldDesc::new(-20).unwrap();
        let zs = [QuadInt::new(2, 0, f), QuadInt::new(1, 1, f)];
        assert!(matches!(primitive_part(&zs), Err(Error::NonPrincipalContent(_))));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            canonical_unit_normalize(&[gi(-1, 0), gi(0, 0), gi(-1, 0)]),
            vec![gi(1, 0), gi(0, 0), gi(1, 0)]
        );
        // (i, 0, 1): unit multiples (i,0,1), (-1,0,i), (-i,0,-1), (1,0,-i); 1 wins on the last slot
        assert_eq!(
            canonical_unit_normalize(&[gi(0, 1), gi(0, 0), gi(1, 0)]),
            vec![gi(0, 1), gi(0, 0), gi(1, 0)]
        );
        assert_eq!(
            canonical_unit_normalize(&[gi(2, 0), gi(0, 0), gi(-1, 0)]),
            vec![gi(-2, 0), gi(0, 0), gi(1, 0)]
        );
    }

    #[test]
    fn normalize_eisenstein_six_units() {
        let f = FieldDesc::eisenstein();
        let z = [QuadInt::new(0, 1, f), QuadInt::new(2, 1, f), QuadInt::new(1, 0, f)];
        let orbit: Vec<Vec<QuadInt>> = QuadInt::units(f)
            .iter()
            .map(|u| z.iter().map(|c| u * c).collect())
            .collect();
        let brute = orbit.iter().min_by(|x, y| cmp_tuples(x, y)).unwrap().clone();
        for member in &orbit {
            assert_eq!(canonical_unit_normalize(member), brute);
        }
        assert!(brute[2].is_one());
    }
}
