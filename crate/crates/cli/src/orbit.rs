//! Chain orbits: filtering, JSON records and the SVG figure.

use anyhow::{Context, Result};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::str::FromStr;

use picard_core::exactnum::{FieldDesc, FieldElem, Rational};
use picard_core::group::orbit_of_chain;
use picard_core::hermitian::{Chain, ProjPoint};
use picard_core::parse::parse_point_coords;

use crate::config::{OrbitJob, RenderConfig};

/// One drawn chain. The center is x + y·√D′_K given as the exact pair [x, y].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainRecord {
    pub center: [String; 2],
    pub center_numeric: [f64; 2],
    pub radius_sq: String,
    pub polar: [String; 3],
}

impl ChainRecord {
    pub fn from_chain(chain: &Chain) -> Option<Self> {
        let center = chain.proj_center.as_ref()?;
        let radius_sq = chain.proj_radius_sq.as_ref()?;
        let (re, im) = center.to_complex();
        Some(ChainRecord {
            center: [center.x.to_string(), center.y.to_string()],
            center_numeric: [re, im],
            radius_sq: radius_sq.to_string(),
            polar: chain.polar.coords().clone().map(|z| z.to_string()),
        })
    }

    /// The exact values back from their string forms.
    pub fn parse(&self, field: FieldDesc) -> Result<(FieldElem, Rational, ProjPoint)> {
        let q = |s: &str| BigRational::from_str(s).with_context(|| format!("bad rational {s:?}"));
        let center = FieldElem::new(q(&self.center[0])?, q(&self.center[1])?, field);
        let polar = ProjPoint::from_quadints(parse_point_coords(&self.polar.join(","), field)?)?;
        Ok((center, q(&self.radius_sq)?, polar))
    }
}

#[derive(Clone, Debug)]
pub struct OrbitOutput {
    /// Every chain in the orbit, sorted by polar point.
    pub orbit_size: usize,
    /// The drawn chains, in the same order.
    pub chains: Vec<Chain>,
    pub records: Vec<ChainRecord>,
    pub svg: String,
}

/// Non-vertical, diameter ≥ min_diameter and |center| ≤ window + radius.
pub fn is_drawn(chain: &Chain, cfg: &RenderConfig) -> bool {
    let (Some((re, im)), Some(r)) = (chain.center_f64(), chain.radius_f64()) else {
        return false;
    };
    2.0 * r >= cfg.min_diameter && re.hypot(im) <= cfg.window + r
}

pub fn cmd_orbit(job: &OrbitJob) -> Result<OrbitOutput> {
    job.render.validate()?;
    let orbit = orbit_of_chain(&job.seed, &job.generators, job.depth, job.limit)?;
    let chains: Vec<Chain> = orbit.iter().filter(|c| is_drawn(c, &job.render)).cloned().collect();
    let records = chains.iter().filter_map(ChainRecord::from_chain).collect();
    let svg = render_svg(&chains, &job.render);
    Ok(OrbitOutput {
        orbit_size: orbit.len(),
        chains,
        records,
        svg,
    })
}

pub fn write_outputs(job: &OrbitJob, out: &OrbitOutput) -> Result<()> {
    for path in [&job.svg_path, &job.json_path] {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
    }
    std::fs::write(&job.svg_path, &out.svg).with_context(|| format!("writing {}", job.svg_path.display()))?;
    let json = serde_json::to_string_pretty(&out.records)?;
    std::fs::write(&job.json_path, json + "\n").with_context(|| format!("writing {}", job.json_path.display()))?;
    Ok(())
}

/// SVG 1.1 document: one circle per chain, clipped to the window square.
pub fn render_svg(chains: &[Chain], cfg: &RenderConfig) -> String {
    let size = cfg.size_px as f64;
    let scale = size / (2.0 * cfg.window);
    let to_px = |re: f64, im: f64| ((re + cfg.window) * scale, (cfg.window - im) * scale);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        cfg.size_px
    );
    let _ = writeln!(
        out,
        r#"  <defs><clipPath id="window"><rect x="0" y="0" width="{0}" height="{0}"/></clipPath></defs>"#,
        cfg.size_px
    );
    let _ = writeln!(out, r#"  <rect x="0" y="0" width="{0}" height="{0}" fill="white" stroke="black"/>"#, cfg.size_px);
    let _ = writeln!(
        out,
        r#"  <g clip-path="url(#window)" fill="none" stroke="black" stroke-width="{:.3}">"#,
        cfg.stroke_width
    );
    for chain in chains {
        let (Some((re, im)), Some(r)) = (chain.center_f64(), chain.radius_f64()) else {
            continue;
        };
        let (cx, cy) = to_px(re, im);
        let _ = writeln!(out, r#"    <circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}"/>"#, r * scale);
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{load_generators, parse_seed, DEFAULT_ORBIT_LIMIT};
    use std::path::PathBuf;

    fn job(field: i64, seed: &str, depth: usize, window: f64, min_diameter: f64) -> OrbitJob {
        let field = FieldDesc::new(field).unwrap();
        OrbitJob {
            field,
            seed: parse_seed(field, seed).unwrap(),
            generators: load_generators(field, None).unwrap(),
            depth,
            render: RenderConfig {
                window,
                min_diameter,
                ..RenderConfig::default()
            },
            svg_path: PathBuf::from("unused.svg"),
            json_path: PathBuf::from("unused.json"),
            limit: DEFAULT_ORBIT_LIMIT,
        }
    }

    #[test]
    fn depth_zero_draws_the_seed_chain() {
        let out = cmd_orbit(&job(-4, "-5,0,1", 0, 1.5, 1.0)).unwrap();
        assert_eq!(out.orbit_size, 1);
        assert_eq!(out.records.len(), 1);
        assert_eq!(out.svg.matches("<circle").count(), 1);
        assert_eq!(out.records[0].radius_sq, "10");
    }

    #[test]
    fn emitted_circles_respect_the_filter() {
        let j = job(-3, "-1,0,1", 3, 1.0, 0.5);
        let out = cmd_orbit(&j).unwrap();
        for c in &out.chains {
            let r = c.radius_f64().unwrap();
            let (re, im) = c.center_f64().unwrap();
            assert!(2.0 * r >= 0.5);
            assert!(re.hypot(im) <= 1.0 + r);
            assert_eq!(*c.polar.h_value(), 2.into());
        }
    }

    #[test]
    fn records_round_trip() {
        let j = job(-3, "-2,0,1", 2, 1.0, 0.0);
        let out = cmd_orbit(&j).unwrap();
        let text = serde_json::to_string(&out.records).unwrap();
        let back: Vec<ChainRecord> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, out.records);
        for (rec, chain) in back.iter().zip(&out.chains) {
            let (center, radius_sq, polar) = rec.parse(j.field).unwrap();
            assert_eq!(Some(center), chain.proj_center);
            assert_eq!(Some(radius_sq), chain.proj_radius_sq);
            assert_eq!(polar, chain.polar);
        }
    }

    #[test]
    fn rendering_is_deterministic() {
        let j = job(-4, "-5,0,1", 2, 1.5, 1.0);
        assert_eq!(cmd_orbit(&j).unwrap().svg, cmd_orbit(&j).unwrap().svg);
    }
}
