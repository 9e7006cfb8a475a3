//! Render settings and orbit job files.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

use picard_core::exactnum::FieldDesc;
use picard_core::group::GeneratorSet;
use picard_core::hermitian::{PointClass, ProjPoint};
use picard_core::parse::parse_point_coords;

/// Default cap on distinct chains kept during an orbit search.
pub const DEFAULT_ORBIT_LIMIT: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RenderConfig {
    /// Half-side of the square |Re z|, |Im z| ≤ window.
    pub window: f64,
    pub min_diameter: f64,
    #[serde(default = "default_stroke")]
    pub stroke_width: f64,
    #[serde(default = "default_size")]
    pub size_px: u32,
}

fn default_stroke() -> f64 {
    1.0
}

fn default_size() -> u32 {
    800
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            window: 1.5,
            min_diameter: 1.0,
            stroke_width: default_stroke(),
            size_px: default_size(),
        }
    }
}

impl RenderConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.window.is_finite() && self.window > 0.0) {
            bail!("window must be positive, got {}", self.window);
        }
        if !(self.min_diameter.is_finite() && self.min_diameter >= 0.0) {
            bail!("min diameter must be nonnegative, got {}", self.min_diameter);
        }
        if !(self.stroke_width.is_finite() && self.stroke_width > 0.0) {
            bail!("stroke width must be positive, got {}", self.stroke_width);
        }
        if self.size_px < 64 {
            bail!("image size must be at least 64 px, got {}", self.size_px);
        }
        Ok(())
    }
}

/// A job file as stored on disk. Relative paths are resolved against the file's directory.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct JobFile {
    pub field: i64,
    /// "z0,z1,z2" in the a+b*w syntax.
    pub seed: String,
    #[serde(default)]
    pub generators: Option<PathBuf>,
    pub depth: usize,
    pub render: RenderConfig,
    pub svg: PathBuf,
    pub json: PathBuf,
    #[serde(default)]
    pub limit: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct OrbitJob {
    pub field: FieldDesc,
    pub seed: ProjPoint,
    pub generators: GeneratorSet,
    pub depth: usize,
    pub render: RenderConfig,
    pub svg_path: PathBuf,
    pub json_path: PathBuf,
    pub limit: usize,
}

/// The seed as a positive primitive point.
pub fn parse_seed(field: FieldDesc, coords: &str) -> Result<ProjPoint> {
    let z = parse_point_coords(coords, field)?;
    let p = ProjPoint::from_quadints(z)?;
    if p.classify() != PointClass::Positive {
        bail!("seed {p} is not positive (h = {})", p.h_value());
    }
    Ok(p)
}

/// The shipped generators for the field, or the set stored at `path`.
pub fn load_generators(field: FieldDesc, path: Option<&Path>) -> Result<GeneratorSet> {
    let gens = match path {
        Some(p) => GeneratorSet::load(p)?,
        None => GeneratorSet::shipped_for(field)
            .with_context(|| format!("no shipped generators for D_K = {}; pass --gens", field.dk()))?,
    };
    if gens.field != field {
        bail!("generator set is for D_K = {}, not {}", gens.field.dk(), field.dk());
    }
    Ok(gens)
}

impl OrbitJob {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let raw: JobFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        OrbitJob::resolve(&raw, base)
    }

    pub fn resolve(raw: &JobFile, base: &Path) -> Result<Self> {
        let field = FieldDesc::new(raw.field)?;
        let gens_path = raw.generators.as_ref().map(|p| base.join(p));
        let job = OrbitJob {
            field,
            seed: parse_seed(field, &raw.seed)?,
            generators: load_generators(field, gens_path.as_deref())?,
            depth: raw.depth,
            render: raw.render.clone(),
            svg_path: base.join(&raw.svg),
            json_path: base.join(&raw.json),
            limit: raw.limit.unwrap_or(DEFAULT_ORBIT_LIMIT),
        };
        job.render.validate()?;
        Ok(job)
    }
}
