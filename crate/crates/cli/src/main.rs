use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

use picard_cli::config::{load_generators, parse_seed, OrbitJob, RenderConfig, DEFAULT_ORBIT_LIMIT};
use picard_cli::orbit::{cmd_orbit, write_outputs};
use picard_cli::report::{cmd_commensurable, cmd_discriminant, cmd_normalize, cmd_ramification};
use picard_cli::verify::{run_verify, VerifyInputs};
use picard_core::exactnum::FieldDesc;
use picard_core::fuchsian::DEFAULT_CLEAR_Z2_DEPTH;
use picard_core::group::GeneratorSet;

#[derive(Parser)]
#[command(name = "picard", version, about = "Chains, C-Fuchsian subgroups and quaternion algebras for Picard modular groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw the orbit of the chain polar to a positive point.
    Orbit(OrbitArgs),
    /// Discriminant of a positive point.
    Discriminant(PointArgs),
    /// An element of SU_h(K) moving a positive point to [-2Δ:0:1].
    Normalize {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        gens: Option<PathBuf>,
        /// Word length searched when z2 = 0.
        #[arg(long, default_value_t = DEFAULT_CLEAR_Z2_DEPTH)]
        clear_depth: usize,
    },
    /// Whether Γ_{K,D1} and Γ_{K,D2} are commensurable up to conjugacy.
    Commensurable {
        #[arg(long, allow_hyphen_values = true)]
        field: i64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
    },
    /// Ramified places of the quaternion algebra (a, b / Q).
    Ramification {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Run the built-in identity suite.
    Verify {
        /// Generator files to validate instead of the shipped sets.
        #[arg(long)]
        gens: Vec<PathBuf>,
    },
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    field: i64,
    /// z0,z1,z2 with coordinates in the a+b*w syntax.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
}

#[derive(Args)]
struct OrbitArgs {
    /// Job file; the remaining flags are ignored when given.
    #[arg(long)]
    preset: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    field: Option<i64>,
    /// Seed point z0,z1,z2.
    #[arg(long, alias = "point", allow_hyphen_values = true)]
    seed: Option<String>,
    #[arg(long, default_value_t = 4)]
    depth: usize,
    #[arg(long, default_value_t = 1.5)]
    window: f64,
    #[arg(long, default_value_t = 1.0)]
    min_diameter: f64,
    #[arg(long, default_value_t = 1.0)]
    stroke_width: f64,
    #[arg(long, default_value_t = 800)]
    size: u32,
    #[arg(long)]
    gens: Option<PathBuf>,
    #[arg(long, default_value = "orbit.svg")]
    out: PathBuf,
    #[arg(long, default_value = "orbit.json")]
    json: PathBuf,
    #[arg(long, default_value_t = DEFAULT_ORBIT_LIMIT)]
    limit: usize,
}

impl OrbitArgs {
    fn job(&self) -> Result<OrbitJob> {
        if let Some(p) = &self.preset {
            return OrbitJob::from_file(p);
        }
        let field = FieldDesc::new(self.field.context("--field is required without --preset")?)?;
        let seed = self.seed.as_deref().context("--seed is required without --preset")?;
        let render = RenderConfig {
            window: self.window,
            min_diameter: self.min_diameter,
            stroke_width: self.stroke_width,
            size_px: self.size,
        };
        render.validate()?;
        Ok(OrbitJob {
            field,
            seed: parse_seed(field, seed)?,
            generators: load_generators(field, self.gens.as_deref())?,
            depth: self.depth,
            render,
            svg_path: self.out.clone(),
            json_path: self.json.clone(),
            limit: self.limit,
        })
    }
}

#[derive(Serialize)]
struct ErrorReport {
    kind: String,
    message: String,
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Orbit(args) => {
            let job = args.job()?;
            let out = cmd_orbit(&job)?;
            write_outputs(&job, &out)?;
            eprintln!(
                "{} chains in the orbit, {} drawn; wrote {} and {}",
                out.orbit_size,
                out.records.len(),
                job.svg_path.display(),
                job.json_path.display()
            );
        }
        Command::Discriminant(p) => print_json(&cmd_discriminant(FieldDesc::new(p.field)?, &p.point)?)?,
        Command::Normalize { point, gens, clear_depth } => {
            let field = FieldDesc::new(point.field)?;
            let gens = load_generators(field, gens.as_deref())?;
            print_json(&cmd_normalize(field, &point.point, &gens, clear_depth)?)?;
        }
        Command::Commensurable { field, d1, d2 } => print_json(&cmd_commensurable(FieldDesc::new(field)?, d1, d2)?)?,
        Command::Ramification { a, b } => print_json(&cmd_ramification(a, b)?)?,
        Command::Verify { gens } => {
            let mut inputs = VerifyInputs::default();
            if !gens.is_empty() {
                inputs.generators = gens
                    .iter()
                    .map(|p| GeneratorSet::load(p).map_err(|e| format!("{}: {e}", p.display())))
                    .collect();
            }
            let report = run_verify(&inputs);
            print!("{report}");
            if let Some(fail) = report.first_failure() {
                eprintln!("verification failed: {}", fail.name);
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            if let Some(core) = err.downcast_ref::<picard_core::Error>() {
                let kind = format!("{core:?}");
                let kind = kind.split(['(', ' ']).next().unwrap_or_default().to_string();
                let report = ErrorReport { kind, message: core.to_string() };
                println!("{}", serde_json::json!({ "error": report }));
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(2)
        }
    }
}
