//! Discriminants of chain stabilizers, the standard points P_D, and explicit
//! conjugators moving a positive rational point to [−2Δ:0:1].

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::{norm_representable, FieldDesc, FieldElem, MultiQuadElem, OmegaKind, QuadInt, Rational};
use crate::group::{check_membership, words_up_to, GeneratorSet, GroupElem};
use crate::hermitian::{heis_translation_matrix, HeisElem, PointClass, ProjPoint};
use crate::matrix::Mat3;

/// Default word length searched when the point lies on {z₂ = 0}.
pub const DEFAULT_CLEAR_Z2_DEPTH: usize = 4;

#[derive(Clone, Debug)]
pub struct DiscriminantReport {
    pub point: ProjPoint,
    pub delta: BigInt,
    pub standardizer: GroupElem,
    pub target: ProjPoint,
}

/// Parameters (u, v, s, t) with s′ = s√D′_K and t′ = t√D′_K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipTuple {
    pub u: BigInt,
    pub v: BigInt,
    pub s: BigInt,
    pub t: BigInt,
}

impl MembershipTuple {
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>, s: impl Into<BigInt>, t: impl Into<BigInt>) -> Self {
        MembershipTuple {
            u: u.into(),
            v: v.into(),
            s: s.into(),
            t: t.into(),
        }
    }
}

fn rat(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

/// P_D: a positive point with h = D.
pub fn standard_point(d: u64, field: FieldDesc) -> ProjPoint {
    assert!(d >= 1, "D must be positive");
    let d = d as i64;
    let z = if d == 1 {
        [0, 1, 0]
    } else if d % 2 == 0 {
        [-d / 2, 0, 1]
    } else {
        [-(d - 1) / 2, 1, 1]
    };
    ProjPoint::from_ints(field, z).expect("nonzero coordinates")
}

/// h at the canonical primitive representative of a positive point.
pub fn discriminant(p: &ProjPoint) -> Result<BigInt> {
    if p.classify() != PointClass::Positive {
        return Err(Error::NotPositive(p.h_value().to_string()));
    }
    Ok(p.h_value().clone())
}

/// An element of SU_h(K) mapping [−D:0:1] to [−DN:0:1], for N a norm from O_K.
pub fn norm_scaling_conjugator(d: u64, n: u64, field: FieldDesc) -> Result<GroupElem> {
    if d == 0 {
        return Err(Error::NotPositive("0".into()));
    }
    let (x, y) = norm_representable(n, field).ok_or_else(|| Error::NotANorm(n.to_string()))?;
    let (x, y) = (rat(x), rat(y));
    let alpha = match field.omega_kind() {
        OmegaKind::HalfSqrt => x,
        OmegaKind::HalfOnePlusSqrt => x + &y / rat(2),
    };
    // β = −(1/2)·√D_K·y
    let beta = FieldElem::sqrt_dk(field).scale(&(-y / rat(2)));
    let (d, n) = (rat(d), rat(n));
    let zero = FieldElem::zero(field);
    let m = Mat3::new([
        [FieldElem::from_rational(alpha.clone(), field), zero.clone(), beta.scale(&d)],
        [zero.clone(), FieldElem::one(field), zero.clone()],
        [beta.scale(&(&d * &n).recip()), zero, FieldElem::from_rational(alpha / n, field)],
    ]);
    check_membership(m)
}

/// The Heisenberg translation sending a point with z₂ ≠ 0 to [−Δ:0:2N(z₂)].
pub fn claim_translation(p: &ProjPoint) -> Result<HeisElem> {
    let [z0, z1, z2] = p.field_coords();
    let ratio = z0.div(&z2)?;
    let w = -&z1.div(&z2)?;
    let re = FieldElem::from_rational(z1.norm() / (z2.norm() * rat(2)), p.field());
    let w0 = &re - &ratio.im_part();
    Ok(HeisElem::new(w0, w).expect("2 Re w0 = |w|^2 by construction"))
}

fn standardize_off_axis(p: &ProjPoint, delta: &BigInt) -> Result<GroupElem> {
    let field = p.field();
    let g1 = heis_translation_matrix(&claim_translation(p)?);
    let n = p.coords()[2].norm();
    let two_n = rat(&n * 2);
    let g2 = check_membership(Mat3::diag([
        FieldElem::from_rational(two_n.clone(), field),
        FieldElem::one(field),
        FieldElem::from_rational(two_n.recip(), field),
    ]))?;
    let to_u64 = |b: &BigInt| -> Result<u64> { u64::try_from(b).map_err(|_| Error::NotANorm(b.to_string())) };
    let g3 = norm_scaling_conjugator(to_u64(&(delta * 2))?, to_u64(&n)?, field)?.inv();
    Ok(g3.mul(&g2).mul(&g1))
}

/// Standardization with the default z₂-clearing depth.
pub fn standardize_point(p: &ProjPoint, gens: &GeneratorSet) -> Result<DiscriminantReport> {
    standardize_point_with_depth(p, gens, DEFAULT_CLEAR_Z2_DEPTH)
}

/// γ ∈ SU_h(K) with γ·p = [−2Δ:0:1]. Points on {z₂ = 0} are first moved by
/// the shortest word in `gens` (up to `depth`) that takes them off it.
pub fn standardize_point_with_depth(p: &ProjPoint, gens: &GeneratorSet, depth: usize) -> Result<DiscriminantReport> {
    let delta = discriminant(p)?;
    let field = p.field();
    let prefix = if p.coords()[2].is_zero() {
        crate::group::require_same_field(field, gens.field)?;
        let mut found = None;
        for g in words_up_to(gens, depth) {
            if !g.act_on_point(p)?.coords()[2].is_zero() {
                found = Some(g);
                break;
            }
        }
        found.ok_or(Error::CannotClearZ2(depth))?
    } else {
        GroupElem::identity(field)
    };
    let moved = prefix.act_on_point(p)?;
    let standardizer = standardize_off_axis(&moved, &delta)?.mul(&prefix);
    let target = ProjPoint::from_quadints([
        QuadInt::from_int(-(&delta * 2i32), field),
        QuadInt::zero(field),
        QuadInt::one(field),
    ])?;
    debug_assert_eq!(standardizer.act_on_point(p)?, target);
    Ok(DiscriminantReport {
        point: p.clone(),
        delta,
        standardizer,
        target,
    })
}

/// γ₀ over ℚ(√2, √D): h-unitary, determinant 1, mapping [0:1:0] to [−2D:0:1].
pub fn gamma0(d: u64) -> Mat3<MultiQuadElem> {
    assert!(d >= 1, "D must be positive");
    let d = d as i64;
    let q = |n: i64, m: i64| BigRational::new(n.into(), m.into());
    let r = MultiQuadElem::radical;
    Mat3::new([
        [r(q(-1, 2), 2 * d), r(q(-1, 1), d), r(q(-1, 2), 2 * d)],
        [r(q(-1, 2), 2), MultiQuadElem::zero(), r(q(1, 2), 2)],
        [r(q(-1, 4 * d), 2 * d), r(q(1, 2 * d), d), r(q(-1, 4 * d), 2 * d)],
    ])
}

/// J·g*·J, the inverse of an h-unitary matrix.
pub fn unitary_inverse(g: &Mat3<MultiQuadElem>) -> Mat3<MultiQuadElem> {
    let j = Mat3::gram_like(&MultiQuadElem::zero());
    j.mul(&g.conj_transpose()).mul(&j)
}

/// (a,0,b; 0,1,0; c,0,d) over the multiquadratic tower.
pub fn diagonal_block(a: &FieldElem, b: &FieldElem, c: &FieldElem, d: &FieldElem) -> Mat3<MultiQuadElem> {
    let z = MultiQuadElem::zero;
    let mq = MultiQuadElem::from_field_elem;
    Mat3::new([[mq(a), z(), mq(b)], [z(), MultiQuadElem::one(), z()], [mq(c), z(), mq(d)]])
}

fn require_unimodular(a: &FieldElem, b: &FieldElem, c: &FieldElem, d: &FieldElem) -> Result<()> {
    if (&(a * d) - &(b * c)).is_one() {
        Ok(())
    } else {
        Err(Error::NotUnimodular)
    }
}

/// γ₀·(a,0,b; 0,1,0; c,0,d)·γ₀⁻¹, computed by matrix multiplication.
pub fn conjugated_block(a: &FieldElem, b: &FieldElem, c: &FieldElem, d: &FieldElem, dd: u64) -> Result<Mat3<MultiQuadElem>> {
    require_unimodular(a, b, c, d)?;
    let g0 = gamma0(dd);
    Ok(g0.mul(&diagonal_block(a, b, c, d)).mul(&unitary_inverse(&g0)))
}

/// The closed form of the same conjugate, entry by entry.
pub fn conjugated_block_closed_form(
    a: &FieldElem,
    b: &FieldElem,
    c: &FieldElem,
    d: &FieldElem,
    dd: u64,
) -> Result<Mat3<MultiQuadElem>> {
    require_unimodular(a, b, c, d)?;
    let n = dd as i64;
    let mq = MultiQuadElem::from_field_elem;
    let two = FieldElem::from_int(2, a.field);
    let sum_p = mq(&(&(&(a + b) + c) + d));
    let plus2 = &sum_p + &mq(&two);
    let minus2 = &sum_p - &mq(&two);
    let alt1 = mq(&(&(&(a - b) + c) - d));
    let alt2 = mq(&(&(&(a + b) - c) - d));
    let alt3 = mq(&(&(&(a - b) - c) + d));
    let q = |x: i64, y: i64| BigRational::new(x.into(), y.into());
    let sqrt_d = MultiQuadElem::sqrt(n);
    let c_sqrt = |k: Rational| sqrt_d.scale(&k);
    let plain = |k: Rational| MultiQuadElem::from_rational(k);
    Ok(Mat3::new([
        [&plain(q(1, 4)) * &plus2, &c_sqrt(q(1, 2)) * &alt1, &plain(q(n, 2)) * &minus2],
        // 1/(4√D) = √D/(4D)
        [&c_sqrt(q(1, 4 * n)) * &alt2, &plain(q(1, 2)) * &alt3, &c_sqrt(q(1, 2)) * &alt2],
        [&plain(q(1, 8 * n)) * &minus2, &c_sqrt(q(1, 4 * n)) * &alt1, &plain(q(1, 4)) * &plus2],
    ]))
}

/// u + s′ − 2 ∈ 8D·O_K, v ± t′ ∈ 2·O_K and u − s′ ∈ 2·O_K.
pub fn membership_conditions(m: &MembershipTuple, d: u64, field: FieldDesc) -> bool {
    let elem = |x: &BigInt, y: &BigInt| FieldElem::new(rat(x.clone()), rat(y.clone()), field);
    let in_multiple = |z: FieldElem, k: BigInt| z.scale(&rat(k).recip()).is_integral();
    let two = BigInt::from(2);
    in_multiple(elem(&(&m.u - 2), &m.s), BigInt::from(8) * d)
        && in_multiple(elem(&m.v, &m.t), two.clone())
        && in_multiple(elem(&m.v, &-&m.t), two.clone())
        && in_multiple(elem(&m.u, &-&m.s), two)
}

/// Whether every entry of a multiquadratic matrix lies in O_K.
pub fn entries_in_ok(m: &Mat3<MultiQuadElem>, field: FieldDesc) -> bool {
    m.m.iter()
        .flatten()
        .all(|x| x.to_field_elem(field).is_some_and(|z| z.is_integral()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use crate::hermitian::eval_h;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_positive_point(rng: &mut ChaCha8Rng, field: FieldDesc) -> ProjPoint {
        loop {
            let z: [QuadInt; 3] = std::array::from_fn(|_| QuadInt::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6), field));
            if let Ok(p) = ProjPoint::from_quadints(z) {
                if p.classify() == PointClass::Positive {
                    return p;
                }
            }
        }
    }

    #[test]
    fn standard_points() {
        for field in [FieldDesc::gauss(), FieldDesc::eisenstein()] {
            assert_eq!(standard_point(1, field), ProjPoint::from_ints(field, [0, 1, 0]).unwrap());
            assert_eq!(standard_point(4, field), ProjPoint::from_ints(field, [-2, 0, 1]).unwrap());
            assert_eq!(standard_point(3, field), ProjPoint::from_ints(field, [-1, 1, 1]).unwrap());
            for d in 1..=50u64 {
                assert_eq!(*standard_point(d, field).h_value(), BigInt::from(d));
            }
        }
    }

    #[test]
    fn discriminant_examples() {
        let f = FieldDesc::gauss();
        for d in 1..=50 {
            let p = ProjPoint::from_ints(f, [-d, 0, 1]).unwrap();
            assert_eq!(discriminant(&p).unwrap(), BigInt::from(2 * d));
        }
        assert_eq!(discriminant(&ProjPoint::from_ints(f, [0, 1, 0]).unwrap()).unwrap(), BigInt::from(1));
        assert!(matches!(
            discriminant(&ProjPoint::from_ints(f, [1, 0, 1]).unwrap()),
            Err(Error::NotPositive(_))
        ));
    }

    #[test]
    fn norm_scaling_examples() {
        let f = FieldDesc::gauss();
        assert!(norm_scaling_conjugator(3, 1, f).unwrap().is_identity());
        let g = norm_scaling_conjugator(1, 2, f).unwrap();
        let p = ProjPoint::from_ints(f, [-1, 0, 1]).unwrap();
        assert_eq!(g.act_on_point(&p).unwrap(), ProjPoint::from_ints(f, [-2, 0, 1]).unwrap());
        assert_eq!(norm_scaling_conjugator(1, 3, f).unwrap_err(), Error::NotANorm("3".into()));

        let e = FieldDesc::eisenstein();
        let g = norm_scaling_conjugator(2, 7, e).unwrap();
        let p = ProjPoint::from_ints(e, [-2, 0, 1]).unwrap();
        assert_eq!(g.act_on_point(&p).unwrap(), ProjPoint::from_ints(e, [-14, 0, 1]).unwrap());
    }

    #[test]
    fn norm_scaling_sweep() {
        for dk in [-3, -4, -7, -8, -11] {
            let f = FieldDesc::new(dk).unwrap();
            for d in 1..=10u64 {
                for n in 1..=25u64 {
                    let Some(_) = norm_representable(n, f) else { continue };
                    let g = norm_scaling_conjugator(d, n, f).unwrap();
                    let p = ProjPoint::from_ints(f, [-(d as i64), 0, 1]).unwrap();
                    let q = ProjPoint::from_ints(f, [-((d * n) as i64), 0, 1]).unwrap();
                    assert_eq!(g.act_on_point(&p).unwrap(), q, "D_K={dk} D={d} N={n}");
                }
            }
        }
    }

    #[test]
    fn standardize_examples() {
        let gens = GeneratorSet::gauss_picard();
        let f = gens.field;
        let p = ProjPoint::from_ints(f, [-3, 0, 1]).unwrap();
        let r = standardize_point(&p, &gens).unwrap();
        assert_eq!(r.delta, BigInt::from(6));
        assert_eq!(r.target, ProjPoint::from_ints(f, [-12, 0, 1]).unwrap());
        assert_eq!(r.standardizer.act_on_point(&p).unwrap(), r.target);

        let p = ProjPoint::from_ints(f, [-1, 1, 1]).unwrap();
        let h = claim_translation(&p).unwrap();
        assert_eq!(*h.w0(), FieldElem::from_rational(rational(1, 2), f));
        let r = standardize_point(&p, &gens).unwrap();
        assert_eq!(r.target, ProjPoint::from_ints(f, [-6, 0, 1]).unwrap());
        assert_eq!(r.standardizer.act_on_point(&p).unwrap(), r.target);

        let p = ProjPoint::from_ints(f, [0, 1, 0]).unwrap();
        let r = standardize_point(&p, &gens).unwrap();
        assert_eq!(r.standardizer.act_on_point(&p).unwrap(), ProjPoint::from_ints(f, [-2, 0, 1]).unwrap());
        assert!(matches!(
            standardize_point_with_depth(&p, &gens, 0),
            Err(Error::CannotClearZ2(0))
        ));
    }

    #[test]
    fn printed_translation_sign_fails_off_the_real_axis() {
        let f = FieldDesc::gauss();
        // [−1+i : 1 : 1], Δ = 3, Im(z₀/z₂) = 1
        let p = ProjPoint::from_quadints([QuadInt::new(-1, 1, f), QuadInt::one(f), QuadInt::one(f)]).unwrap();
        let good = claim_translation(&p).unwrap();
        let expected = ProjPoint::from_ints(f, [-3, 0, 2]).unwrap();
        assert_eq!(heis_translation_matrix(&good).act_on_point(&p).unwrap(), expected);

        let flipped = HeisElem::new(good.w0().conj(), good.w().clone()).unwrap();
        assert_ne!(heis_translation_matrix(&flipped).act_on_point(&p).unwrap(), expected);
    }

    #[test]
    fn standardize_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for gens in [GeneratorSet::gauss_picard(), GeneratorSet::eisenstein_picard()] {
            for _ in 0..30 {
                let p = random_positive_point(&mut rng, gens.field);
                let r = standardize_point(&p, &gens).unwrap();
                assert_eq!(r.standardizer.act_on_point(&p).unwrap(), r.target);
                assert_eq!(*r.target.h_value(), &r.delta * 4);
            }
        }
    }

    #[test]
    fn gamma0_is_special_unitary() {
        for d in 1..=6 {
            let g = gamma0(d);
            assert!(g.check_special_unitary().is_ok(), "D={d}");
            let image = g.apply(&[MultiQuadElem::zero(), MultiQuadElem::one(), MultiQuadElem::zero()]);
            // proportional to (−2D, 0, 1)
            assert!(image[1].is_zero());
            assert_eq!(image[0], &image[2] * &MultiQuadElem::from_int(-2 * d as i64));
        }
        assert!(gamma0(2).det().is_one());
    }

    fn random_block(rng: &mut ChaCha8Rng, field: FieldDesc) -> [FieldElem; 4] {
        // a, d rational; b, c rational multiples of √D′_K; ad − bc = 1
        loop {
            let q = |rng: &mut ChaCha8Rng| rational(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            let a = FieldElem::from_rational(q(rng), field);
            let b = FieldElem::new(Rational::zero(), q(rng), field);
            let c = FieldElem::new(Rational::zero(), q(rng), field);
            if a.is_zero() {
                continue;
            }
            let d = (&FieldElem::one(field) + &(&b * &c)).div(&a).unwrap();
            return [a, b, c, d];
        }
    }

    #[test]
    fn conjugated_block_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for field in [FieldDesc::gauss(), FieldDesc::eisenstein(), FieldDesc::new(-7).unwrap()] {
            for dd in 1..=5 {
                for _ in 0..10 {
                    let [a, b, c, d] = random_block(&mut rng, field);
                    let direct = conjugated_block(&a, &b, &c, &d, dd).unwrap();
                    let closed = conjugated_block_closed_form(&a, &b, &c, &d, dd).unwrap();
                    assert_eq!(direct, closed);
                }
            }
        }
        let f = FieldDesc::gauss();
        let one = FieldElem::one(f);
        let zero = FieldElem::zero(f);
        assert!(conjugated_block(&one, &zero, &zero, &one, 3).unwrap().is_identity());
        assert_eq!(conjugated_block(&one, &one, &one, &one, 3).unwrap_err(), Error::NotUnimodular);
    }

    #[test]
    fn conjugation_preserves_h() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = FieldDesc::gauss();
        for _ in 0..10 {
            let [a, b, c, d] = random_block(&mut rng, f);
            let x = diagonal_block(&a, &b, &c, &d);
            assert!(x.preserves_form());
            assert!(conjugated_block(&a, &b, &c, &d, 3).unwrap().preserves_form());
        }
    }

    #[test]
    fn membership_examples() {
        let f = FieldDesc::gauss();
        for d in 1..=5u64 {
            assert!(membership_conditions(&MembershipTuple::new(2, 0, 0, 0), d, f));
            assert!(membership_conditions(&MembershipTuple::new(2 + 8 * d as i64, 0, 0, 0), d, f));
            assert!(!membership_conditions(&MembershipTuple::new(3, 0, 0, 0), d, f));
        }
    }

    #[test]
    fn discriminant_invariant_under_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for gens in [GeneratorSet::gauss_picard(), GeneratorSet::eisenstein_picard()] {
            let words = words_up_to(&gens, 3);
            for _ in 0..10 {
                let p = random_positive_point(&mut rng, gens.field);
                for g in words.iter().take(60) {
                    let q = g.act_on_point(&p).unwrap();
                    assert_eq!(discriminant(&q).unwrap(), discriminant(&p).unwrap());
                    assert_eq!(eval_h(&q.field_coords()), rat(p.h_value().clone()));
                }
            }
        }
    }
}
