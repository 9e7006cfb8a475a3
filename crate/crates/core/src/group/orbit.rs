use rayon::prelude::*;
use std::collections::HashSet;

use super::{GeneratorSet, GroupElem};
use crate::error::{Error, Result};
use crate::hermitian::{polar_chain, Chain, PointClass, ProjPoint};

/// All distinct elements (up to the scalar kernel of SU_h → PSU_h) given by
/// words of length ≤ `depth` in the generators and their inverses, in BFS order.
pub fn words_up_to(gens: &GeneratorSet, depth: usize) -> Vec<GroupElem> {
    let alphabet = gens.alphabet();
    let id = GroupElem::identity(gens.field);
    let mut seen: HashSet<GroupElem> = HashSet::new();
    seen.insert(id.psu_canonical());
    let mut out = vec![id.clone()];
    let mut frontier = vec![id];
    for _ in 0..depth {
        let products: Vec<GroupElem> = frontier
            .par_iter()
            .flat_map_iter(|w| alphabet.iter().map(move |g| w.mul(g)))
            .collect();
        let mut next = Vec::new();
        for g in products {
            if seen.insert(g.psu_canonical()) {
                out.push(g.clone());
                next.push(g);
            }
        }
        frontier = next;
    }
    out
}

/// Words of length ≤ `depth` that fix `p` projectively.
pub fn stabilizer_elements(p: &ProjPoint, gens: &GeneratorSet, depth: usize) -> Result<Vec<GroupElem>> {
    super::require_same_field(p.field(), gens.field)?;
    if p.classify() != PointClass::Positive {
        return Err(Error::NotPositive(p.h_value().to_string()));
    }
    let words = words_up_to(gens, depth);
    let fixed: Vec<Result<Option<GroupElem>>> = words
        .into_par_iter()
        .map(|g| Ok(if g.act_on_point(p)? == *p { Some(g) } else { None }))
        .collect();
    fixed.into_iter().filter_map(Result::transpose).collect()
}

/// The chains g·C for words g of length ≤ `depth`, where C is the chain polar
/// to `seed`. Deduplicated by polar point and sorted by it.
pub fn orbit_of_chain(
    seed: &ProjPoint,
    gens: &GeneratorSet,
    depth: usize,
    dedup_limit: usize,
) -> Result<Vec<Chain>> {
    super::require_same_field(seed.field(), gens.field)?;
    polar_chain(seed)?;
    let alphabet = gens.alphabet();
    let mut seen: HashSet<ProjPoint> = HashSet::new();
    seen.insert(seed.clone());
    let mut frontier = vec![seed.clone()];
    for _ in 0..depth {
        let images: Vec<Result<ProjPoint>> = frontier
            .par_iter()
            .flat_map_iter(|p| alphabet.iter().map(move |g| g.act_on_point(p)))
            .collect();
        let mut next = Vec::new();
        for q in images {
            let q = q?;
            if !seen.contains(&q) {
                if seen.len() >= dedup_limit {
                    return Err(Error::LimitExceeded(dedup_limit));
                }
                seen.insert(q.clone());
                next.push(q);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut points: Vec<ProjPoint> = seen.into_iter().collect();
    points.sort();
    points.iter().map(polar_chain).collect()
}
