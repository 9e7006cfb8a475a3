use serde::{Deserialize, Serialize};
use std::path::Path;

use super::{check_membership, GroupElem};
use crate::error::{Error, Result};
use crate::exactnum::{FieldDesc, FieldElem};
use crate::matrix::Mat3;
use crate::parse::parse_field_elem;

const GAUSS_PICARD: &str = include_str!("../../data/generators/gauss_picard.json");
const EISENSTEIN_PICARD: &str = include_str!("../../data/generators/eisenstein_picard.json");

/// On-disk form of a generator set.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GeneratorSetJson {
    pub field: i64,
    pub name: String,
    pub provenance: String,
    pub generators: Vec<[[String; 3]; 3]>,
}

/// A finite list of elements of SU_h(O_K), validated at construction.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub field: FieldDesc,
    pub name: String,
    pub provenance: String,
    pub gens: Vec<GroupElem>,
}

impl GeneratorSet {
    pub fn new(field: FieldDesc, name: &str, provenance: &str, gens: Vec<GroupElem>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            super::require_same_field(g.field(), field)?;
            Mat3::from(g).check_special_unitary().map_err(|e| {
                Error::InvalidGenerators(format!("generator {i}: {e}"))
            })?;
            if !g.is_integral() {
                return Err(Error::InvalidGenerators(format!(
                    "generator {i} has entries outside O_K"
                )));
            }
        }
        Ok(GeneratorSet {
            field,
            name: name.to_string(),
            provenance: provenance.to_string(),
            gens,
        })
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: GeneratorSetJson =
            serde_json::from_str(s).map_err(|e| Error::InvalidGenerators(e.to_string()))?;
        GeneratorSet::from_json(&raw)
    }

    pub fn from_json(raw: &GeneratorSetJson) -> Result<Self> {
        let field = FieldDesc::new(raw.field)?;
        let mut gens = Vec::with_capacity(raw.generators.len());
        for (i, rows) in raw.generators.iter().enumerate() {
            let mut parsed: Vec<FieldElem> = Vec::with_capacity(9);
            for entry in rows.iter().flatten() {
                parsed.push(parse_field_elem(entry, field)?);
            }
            let m = Mat3::from_fn(|r, c| parsed[3 * r + c].clone());
            let g = check_membership(m)
                .map_err(|e| Error::InvalidGenerators(format!("generator {i}: {e}")))?;
            gens.push(g);
        }
        GeneratorSet::new(field, &raw.name, &raw.provenance, gens)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidGenerators(format!("{}: {e}", path.display())))?;
        GeneratorSet::from_json_str(&text)
    }

    pub fn to_json(&self) -> GeneratorSetJson {
        GeneratorSetJson {
            field: self.field.dk(),
            name: self.name.clone(),
            provenance: self.provenance.clone(),
            generators: self.gens.iter().map(GroupElem::to_strings).collect(),
        }
    }

    /// Shipped generators for the Gauss–Picard group (D_K = −4).
    pub fn gauss_picard() -> Self {
        GeneratorSet::from_json_str(GAUSS_PICARD).expect("shipped Gauss-Picard generators are valid")
    }

    /// Shipped generators for the Eisenstein–Picard group (D_K = −3).
    pub fn eisenstein_picard() -> Self {
        GeneratorSet::from_json_str(EISENSTEIN_PICARD)
            .expect("shipped Eisenstein-Picard generators are valid")
    }

    /// The shipped set for a field, when there is one.
    pub fn shipped_for(field: FieldDesc) -> Option<Self> {
        match field.dk() {
            -4 => Some(GeneratorSet::gauss_picard()),
            -3 => Some(GeneratorSet::eisenstein_picard()),
            _ => None,
        }
    }

    /// Generators followed by their inverses (duplicates removed).
    pub fn alphabet(&self) -> Vec<GroupElem> {
        let mut out: Vec<GroupElem> = Vec::with_capacity(2 * self.gens.len());
        for g in self.gens.iter().cloned().chain(self.gens.iter().map(GroupElem::inv)) {
            if !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }
}
