//! The built-in identity suite behind `picard verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

use picard_core::exactnum::{norm_representable, rational, FieldDesc, FieldElem, MultiQuadElem};
use picard_core::fuchsian::{conjugated_block_closed_form, diagonal_block, gamma0, norm_scaling_conjugator, unitary_inverse};
use picard_core::group::GeneratorSet;
use picard_core::hermitian::ProjPoint;
use picard_core::matrix::Mat3;
use picard_core::quaternion::{hilbert_symbol, prime_divisors, Place};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Inputs of the suite, replaceable for mutation testing.
pub struct VerifyInputs {
    pub gamma0: fn(u64) -> Mat3<MultiQuadElem>,
    pub generators: Vec<Result<GeneratorSet, String>>,
}

impl Default for VerifyInputs {
    fn default() -> Self {
        VerifyInputs {
            gamma0,
            generators: vec![Ok(GeneratorSet::gauss_picard()), Ok(GeneratorSet::eisenstein_picard())],
        }
    }
}

fn check(name: &'static str, result: Result<String, String>) -> Check {
    match result {
        Ok(detail) => Check { name, passed: true, detail },
        Err(detail) => Check { name, passed: false, detail },
    }
}

fn gamma0_identities(g0: fn(u64) -> Mat3<MultiQuadElem>) -> Result<String, String> {
    for d in 1..=20u64 {
        let g = g0(d);
        g.check_special_unitary().map_err(|e| format!("D = {d}: {e}"))?;
        let image = g.apply(&[MultiQuadElem::zero(), MultiQuadElem::one(), MultiQuadElem::zero()]);
        if !image[1].is_zero() || image[0] != &image[2] * &MultiQuadElem::from_int(-2 * d as i64) {
            return Err(format!("D = {d}: [0:1:0] is not sent to [-2D:0:1]"));
        }
    }
    Ok("unitary, det 1 and [0:1:0] -> [-2D:0:1] for D <= 20".into())
}

fn conjugation_identity(g0: fn(u64) -> Mat3<MultiQuadElem>) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let fields = [FieldDesc::gauss(), FieldDesc::eisenstein()];
    let mut n = 0;
    while n < 100 {
        let field = fields[n % 2];
        let d = 1 + (n as u64 % 20);
        let mut q = || rational(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let a = FieldElem::from_rational(q(), field);
        let b = FieldElem::new(rational(0, 1), q(), field);
        let c = FieldElem::new(rational(0, 1), q(), field);
        if a.is_zero() {
            continue;
        }
        let dd = (&FieldElem::one(field) + &(&b * &c)).div(&a).map_err(|e| e.to_string())?;
        let g = g0(d);
        let direct = g.mul(&diagonal_block(&a, &b, &c, &dd)).mul(&unitary_inverse(&g));
        let closed = conjugated_block_closed_form(&a, &b, &c, &dd, d).map_err(|e| e.to_string())?;
        if direct != closed {
            return Err(format!("D = {d}, (a,b,c,d) = ({a}, {b}, {c}, {dd}): conjugate differs from closed form"));
        }
        n += 1;
    }
    Ok("100 samples agree with the closed form".into())
}

fn norm_scaling_identities() -> Result<String, String> {
    let mut count = 0;
    for dk in [-3, -4, -7, -8, -11] {
        let field = FieldDesc::new(dk).map_err(|e| e.to_string())?;
        for d in 1..=10u64 {
            for n in (1..=25u64).filter(|&n| norm_representable(n, field).is_some()) {
                let g = norm_scaling_conjugator(d, n, field).map_err(|e| format!("D_K={dk} D={d} N={n}: {e}"))?;
                let p = ProjPoint::from_ints(field, [-(d as i64), 0, 1]).map_err(|e| e.to_string())?;
                let q = ProjPoint::from_ints(field, [-((d * n) as i64), 0, 1]).map_err(|e| e.to_string())?;
                if g.act_on_point(&p).map_err(|e| e.to_string())? != q {
                    return Err(format!("D_K={dk} D={d} N={n}: wrong image"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} conjugators map [-D:0:1] to [-DN:0:1]"))
}

fn hilbert_product_formula() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let a: i64 = rng.gen_range(-500..=500);
        let b: i64 = rng.gen_range(-500..=500);
        if a == 0 || b == 0 {
            continue;
        }
        let mut places: Vec<Place> = prime_divisors(2 * a as i128 * b as i128).into_iter().map(Place::Prime).collect();
        places.push(Place::Infinity);
        let product: i8 = places.iter().map(|&v| hilbert_symbol(a, b, v)).product();
        if product != 1 {
            return Err(format!("product over places of ({a},{b}) is -1"));
        }
    }
    Ok("holds on 200 random pairs".into())
}

fn generator_sets(sets: &[Result<GeneratorSet, String>]) -> Result<String, String> {
    let mut names = Vec::new();
    for s in sets {
        let set = s.as_ref().map_err(|e| e.clone())?;
        for (i, g) in set.gens.iter().enumerate() {
            Mat3::from(g)
                .check_special_unitary()
                .map_err(|e| format!("{} generator {i}: {e}", set.name))?;
        }
        names.push(set.name.clone());
    }
    Ok(format!("valid: {}", names.join(", ")))
}

pub fn run_verify(inputs: &VerifyInputs) -> VerifyReport {
    VerifyReport {
        checks: vec![
            check("gamma0 identities", gamma0_identities(inputs.gamma0)),
            check("conjugated block vs closed form", conjugation_identity(inputs.gamma0)),
            check("norm-scaling conjugators", norm_scaling_identities()),
            check("Hilbert product formula", hilbert_product_formula()),
            check("generator sets", generator_sets(&inputs.generators)),
        ],
    }
}

pub fn cmd_verify() -> VerifyReport {
    run_verify(&VerifyInputs::default())
}
