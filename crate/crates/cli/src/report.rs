//! JSON reports for the point and algebra subcommands.

use anyhow::Result;
use serde::Serialize;

use picard_core::exactnum::FieldDesc;
use picard_core::fuchsian::{discriminant, standardize_point_with_depth};
use picard_core::group::GeneratorSet;
use picard_core::hermitian::ProjPoint;
use picard_core::parse::parse_point_coords;
use picard_core::quaternion::{by_norm_lemma, commensurable_gamma_kd, ramification_set, QuatAlgebra};

fn coords(p: &ProjPoint) -> [String; 3] {
    p.coords().clone().map(|z| z.to_string())
}

#[derive(Debug, Serialize)]
pub struct DiscriminantReport {
    pub field: i64,
    pub point: [String; 3],
    pub primitive: [String; 3],
    pub delta: String,
}

pub fn cmd_discriminant(field: FieldDesc, point: &str) -> Result<DiscriminantReport> {
    let z = parse_point_coords(point, field)?;
    let input = z.clone().map(|c| c.to_string());
    let p = ProjPoint::from_quadints(z)?;
    let delta = discriminant(&p)?;
    Ok(DiscriminantReport {
        field: field.dk(),
        point: input,
        primitive: coords(&p),
        delta: delta.to_string(),
    })
}

#[derive(Debug, Serialize)]
pub struct NormalizeReport {
    pub field: i64,
    pub point: [String; 3],
    pub delta: String,
    /// Row-major entries in the a+b*w syntax, with denominators.
    pub standardizer: [[String; 3]; 3],
    pub target: [String; 3],
}

pub fn cmd_normalize(field: FieldDesc, point: &str, gens: &GeneratorSet, depth: usize) -> Result<NormalizeReport> {
    let p = ProjPoint::from_quadints(parse_point_coords(point, field)?)?;
    let r = standardize_point_with_depth(&p, gens, depth)?;
    Ok(NormalizeReport {
        field: field.dk(),
        point: coords(&r.point),
        delta: r.delta.to_string(),
        standardizer: r.standardizer.to_strings(),
        target: coords(&r.target),
    })
}

#[derive(Debug, Serialize)]
pub struct CommensurableReport {
    pub d1: u64,
    pub d2: u64,
    pub field: i64,
    pub commensurable: bool,
    pub by_norm_lemma: bool,
}

pub fn cmd_commensurable(field: FieldDesc, d1: u64, d2: u64) -> Result<CommensurableReport> {
    anyhow::ensure!(d1 >= 1 && d2 >= 1, "D1 and D2 must be positive");
    Ok(CommensurableReport {
        d1,
        d2,
        field: field.dk(),
        commensurable: commensurable_gamma_kd(d1, d2, field),
        by_norm_lemma: by_norm_lemma(d1, d2, field),
    })
}

#[derive(Debug, Serialize)]
pub struct RamificationReport {
    pub algebra: [i64; 2],
    pub ramified: Vec<u64>,
    pub infinite: bool,
}

pub fn cmd_ramification(a: i64, b: i64) -> Result<RamificationReport> {
    let alg = QuatAlgebra::new(a, b)?;
    let r = ramification_set(&alg);
    Ok(RamificationReport {
        algebra: [a, b],
        ramified: r.primes.into_iter().collect(),
        infinite: r.infinite,
    })
}
