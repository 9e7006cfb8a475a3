use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::GroupElem;
use crate::exactnum::{FieldDesc, FieldElem, QuadInt};
use crate::hermitian::{eval_h, PointClass, ProjPoint};
use crate::matrix::Mat3;

/// Largest |constant term| of the scaled characteristic polynomial for which
/// K-rational eigenvalues are searched on non-integral input.
const ROOT_SEARCH_LIMIT: u64 = 10_000_000_000;

/// A basis of the kernel of `m` over K, by row reduction.
pub fn kernel_basis(m: &Mat3<FieldElem>) -> Vec<[FieldElem; 3]> {
    let field = m.m[0][0].field;
    let mut rows: Vec<Vec<FieldElem>> = m.m.iter().map(|r| r.to_vec()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..3 {
        let Some(p) = (r..3).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..3 {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                rows[i] = rows[i].iter().zip(&pivot_row).map(|(x, y)| x - &(&f * y)).collect();
            }
        }
        pivots.push(c);
        r += 1;
        if r == 3 {
            break;
        }
    }
    (0..3)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: [FieldElem; 3] = std::array::from_fn(|_| FieldElem::zero(field));
            v[free] = FieldElem::one(field);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[row][free];
            }
            v
        })
        .collect()
}

/// The vector orthogonal (for ⟨·,·⟩) to the plane spanned by `a` and `b`.
fn polar_of_plane(a: &[FieldElem; 3], b: &[FieldElem; 3]) -> [FieldElem; 3] {
    // ⟨v, p⟩ = (vᵀJ)·p̄ with vᵀJ = (−v₂, v₁, −v₀)
    let ra = [-&a[2], a[1].clone(), -&a[0]];
    let rb = [-&b[2], b[1].clone(), -&b[0]];
    let cross = [
        &(&ra[1] * &rb[2]) - &(&ra[2] * &rb[1]),
        &(&ra[2] * &rb[0]) - &(&ra[0] * &rb[2]),
        &(&ra[0] * &rb[1]) - &(&ra[1] * &rb[0]),
    ];
    cross.map(|x| x.conj())
}

fn elements_of_norm(d: u64, field: FieldDesc) -> Vec<QuadInt> {
    let t = field.omega_trace() as i128;
    let n = field.omega_norm() as i128;
    let d = d as i128;
    let ymax = ((4.0 * d as f64) / (-field.dk() as f64)).sqrt() as i128 + 1;
    let mut out = Vec::new();
    for y in -ymax..=ymax {
        // x² + t·y·x + (n·y² − d) = 0
        let disc = t * t * y * y - 4 * (n * y * y - d);
        if disc < 0 {
            continue;
        }
        let s = disc.sqrt();
        if s * s != disc {
            continue;
        }
        for num in [-t * y + s, -t * y - s] {
            if num % 2 == 0 {
                out.push(QuadInt::new(BigInt::from(num / 2), BigInt::from(y), field));
            }
        }
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Eigenvalues of g lying in K, by integral root search on the scaled characteristic polynomial.
fn eigenvalues_in_k(g: &GroupElem) -> Vec<FieldElem> {
    let m = &g.matrix().m;
    let field = g.field();
    let trace = &(&m[0][0] + &m[1][1]) + &m[2][2];
    let minors = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| &(&m[i][i] * &m[j][j]) - &(&m[i][j] * &m[j][i]))
        .reduce(|a, b| &a + &b)
        .unwrap();
    let det = g.matrix().det();
    let scale = [&trace, &minors, &det]
        .iter()
        .map(|c| c.to_quadint_over_den().1)
        .fold(BigInt::from(1), |acc, d| acc.lcm(&d));
    let l = BigRational::from_integer(scale.clone());
    let c2 = trace.scale(&l);
    let c1 = minors.scale(&(&l * &l));
    let c0 = det.scale(&(&l * &l * &l));
    let Some(c0_int) = c0.to_quadint() else {
        return Vec::new();
    };
    let Some(bound) = c0_int.norm().to_u64().filter(|b| *b <= ROOT_SEARCH_LIMIT) else {
        return Vec::new();
    };
    let mut roots: Vec<FieldElem> = Vec::new();
    for d in divisors(bound) {
        for mu in elements_of_norm(d, field) {
            if !mu.divides(&c0_int) {
                continue;
            }
            let x = FieldElem::from_quadint(&mu);
            let value = &(&(&(&x * &x) * &x) - &(&c2 * &(&x * &x))) + &(&(&c1 * &x) - &c0);
            if value.is_zero() {
                let lambda = x.scale(&l.recip());
                if !roots.contains(&lambda) {
                    roots.push(lambda);
                }
            }
        }
    }
    roots
}

/// A positive rational point fixed by g, searched among the eigenvectors
/// for eigenvalues in K (roots of unity of O_K when g is integral).
///
/// Central elements, including the identity, return `None`.
pub fn positive_fixed_point(g: &GroupElem) -> Option<ProjPoint> {
    if g.is_central() {
        return None;
    }
    let field = g.field();
    let eigenvalues: Vec<FieldElem> = if g.is_integral() {
        QuadInt::units(field).iter().map(FieldElem::from_quadint).collect()
    } else {
        eigenvalues_in_k(g)
    };
    for lambda in eigenvalues {
        let shifted = g.matrix().sub(&Mat3::identity_like(&lambda).scale(&lambda));
        let kernel = kernel_basis(&shifted);
        let candidates = match kernel.len() {
            1 => vec![kernel[0].clone()],
            // a degenerate fixed plane has a null polar; its positive basis vectors are then fixed points
            2 => vec![polar_of_plane(&kernel[0], &kernel[1]), kernel[0].clone(), kernel[1].clone()],
            _ => continue,
        };
        for candidate in candidates {
            if eval_h(&candidate) > BigRational::zero() {
                if let Ok(p) = ProjPoint::from_field_elems(&candidate) {
                    debug_assert_eq!(p.classify(), PointClass::Positive);
                    return Some(p);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use crate::group::GeneratorSet;
    use crate::hermitian::{heis_translation_matrix, HeisElem};

    #[test]
    fn kernel_of_projection() {
        let f = FieldDesc::gauss();
        let one = FieldElem::one(f);
        let z = FieldElem::zero(f);
        let m = Mat3::new([
            [one.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone()],
        ]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(FieldElem::is_zero));
        }
    }

    #[test]
    fn heisenberg_translations() {
        let f = FieldDesc::gauss();
        let w = FieldElem::from_quadint(&QuadInt::new(1, 1, f));
        let t = heis_translation_matrix(&HeisElem::new(FieldElem::one(f), w).unwrap());
        assert_eq!(positive_fixed_point(&t), None);
        let v = heis_translation_matrix(
            &HeisElem::new(FieldElem::new(rational(0, 1), rational(1, 1), f), FieldElem::zero(f)).unwrap(),
        );
        // vertical translations fix the chain polar to [0:1:0]
        assert_eq!(positive_fixed_point(&v), Some(ProjPoint::from_ints(f, [0, 1, 0]).unwrap()));
    }

    #[test]
    fn identity_returns_none() {
        assert_eq!(positive_fixed_point(&GroupElem::identity(FieldDesc::gauss())), None);
    }

    #[test]
    fn inversion_fixes_a_positive_point() {
        let gens = GeneratorSet::gauss_picard();
        let i0 = &gens.gens[4];
        let p = positive_fixed_point(i0).expect("I0 fixes positive points");
        assert_eq!(i0.act_on_point(&p).unwrap(), p);
        assert_eq!(p.classify(), PointClass::Positive);
    }

    #[test]
    fn non_integral_diagonal() {
        // diag(2, 1, 1/2) fixes [0:1:0] with eigenvalue 1 and no unit eigenvalue elsewhere
        let f = FieldDesc::gauss();
        let m = Mat3::diag([
            FieldElem::from_int(2, f),
            FieldElem::one(f),
            FieldElem::from_rational(rational(1, 2), f),
        ]);
        let g = crate::group::check_membership(m).unwrap();
        assert_eq!(positive_fixed_point(&g), Some(ProjPoint::from_ints(f, [0, 1, 0]).unwrap()));
    }
}
