//! Command-line surface: `fuse`, `blurgen`, `bench`, `selfcheck`.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dctfuse_core::eval::{make_pairs, report_csv, run_benchmark, synthetic_blur, BlurSpec, Side};
use dctfuse_core::fusion::{DecisionMap, Fuser, Label};
use dctfuse_core::{FusionConfig, FusionMetric, GrayRaster, TiePolicy};

use crate::io::{load_image, save_image, write_atomic};
use crate::selfcheck::{self, Identity, SelfCheckConfig};

#[derive(Debug, Parser)]
#[command(name = "dctfuse", version, about = "Multi-focus image fusion in the 8x8 DCT domain")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fuse two or more registered images of the same scene.
    Fuse(FuseArgs),
    /// Box-blur one half of an image to make a synthetic defocused input.
    Blurgen(BlurgenArgs),
    /// Run every method over half-blurred pairs built from a directory of images.
    Bench(BenchArgs),
    /// Cross-check coefficient-domain formulas against spatial oracles.
    Selfcheck(SelfcheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Eol,
    Vol,
    Variance,
    Average,
}

impl From<MethodArg> for FusionMetric {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Eol => FusionMetric::Eol,
            MethodArg::Vol => FusionMetric::Vol,
            MethodArg::Variance => FusionMetric::Variance,
            MethodArg::Average => FusionMetric::Average,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TieArg {
    Average,
    First,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Args)]
pub struct FuseArgs {
    /// Input images (PGM, PNG or JPEG), all the same size.
    #[arg(required = true, num_args = 2..)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "vol")]
    pub method: MethodArg,
    /// Apply consistency verification to the decision map.
    #[arg(long)]
    pub cv: bool,
    /// Consistency-verification window (odd, >= 3).
    #[arg(long, default_value_t = 5)]
    pub cv_window: usize,
    #[arg(long, value_enum, default_value = "average")]
    pub tie: TieArg,
    /// Output PGM.
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
    /// Also write the decision map, one pixel per tile (0, 255 = sources, 128 = tie).
    #[arg(long)]
    pub map: Option<PathBuf>,
}

fn parse_mask(s: &str) -> std::result::Result<usize, String> {
    match s {
        "5" => Ok(5),
        "9" => Ok(9),
        _ => Err(format!("mask must be 5 or 9, got {s:?}")),
    }
}

#[derive(Debug, Args)]
pub struct BlurgenArgs {
    pub input: PathBuf,
    /// Box mask size.
    #[arg(long, value_parser = parse_mask)]
    pub mask: usize,
    #[arg(long, value_enum)]
    pub side: SideArg,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Directory of ground-truth images.
    #[arg(long)]
    pub dir: PathBuf,
    /// CSV report destination.
    #[arg(long)]
    pub report: PathBuf,
}

#[derive(Debug, Args)]
pub struct SelfcheckArgs {
    #[arg(long, default_value_t = 10_000)]
    pub blocks: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Fuse(args) => cmd_fuse(&args),
        Command::Blurgen(args) => cmd_blurgen(&args),
        Command::Bench(args) => cmd_bench(&args),
        Command::Selfcheck(args) => cmd_selfcheck(&args),
    }
}

/// One gray level per tile: source `k` of `n` maps to `255·k/(n-1)`, ties to 128.
pub fn map_to_raster(map: &DecisionMap) -> GrayRaster {
    let span = (map.sources().max(2) - 1) as f64;
    GrayRaster::from_fn(map.cols(), map.rows(), |c, r| match map.get(r, c) {
        Label::Source(k) => (255.0 * k as f64 / span).round() as u8,
        Label::Tie(_) => 128,
    })
}

pub fn cmd_fuse(args: &FuseArgs) -> Result<()> {
    let images = args.inputs.iter().map(load_image).collect::<Result<Vec<_>, _>>()?;
    let config = FusionConfig {
        metric: args.method.into(),
        cv_enabled: args.cv,
        cv_window: args.cv_window,
        tie_policy: match args.tie {
            TieArg::Average => TiePolicy::Average,
            TieArg::First => TiePolicy::First,
        },
        ..FusionConfig::default()
    };
    let out = Fuser::new().fuse(&images, &config).context("fusion failed")?;
    save_image(&out.image, &args.output)?;
    match (&args.map, &out.map) {
        (Some(path), Some(map)) => save_image(&map_to_raster(map), path)?,
        (Some(_), None) => eprintln!("warning: --method average makes no decision map; --map ignored"),
        _ => {}
    }
    Ok(())
}

pub fn cmd_blurgen(args: &BlurgenArgs) -> Result<()> {
    let image = load_image(&args.input)?;
    let side = match args.side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let blurred = synthetic_blur(&image, &BlurSpec::new(side, args.mask)?)?;
    save_image(&blurred, &args.output)?;
    Ok(())
}

fn is_image(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| matches!(e.to_ascii_lowercase().as_str(), "pgm" | "png" | "jpg" | "jpeg"))
}

pub fn cmd_bench(args: &BenchArgs) -> Result<()> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&args.dir)
        .with_context(|| format!("reading {}", args.dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && is_image(p))
        .collect();
    paths.sort();
    if paths.is_empty() {
        bail!("no PGM/PNG/JPEG images in {}", args.dir.display());
    }
    let images = paths.iter().map(load_image).collect::<Result<Vec<_>, _>>()?;
    let pairs = make_pairs(&images)?;
    let start = Instant::now();
    let rows = run_benchmark(&pairs, &FusionConfig::benchmark_set())?;
    let csv = report_csv(&rows);
    write_atomic(&args.report, csv.as_bytes()).with_context(|| format!("writing {}", args.report.display()))?;
    print!("{csv}");
    eprintln!("{} pairs from {} images in {:.2?}", pairs.len(), images.len(), start.elapsed());
    Ok(())
}

pub fn cmd_selfcheck(args: &SelfcheckArgs) -> Result<()> {
    let config = SelfCheckConfig { blocks: args.blocks, seed: args.seed, tol: args.tol };
    let start = Instant::now();
    let report = selfcheck::run(&config);
    println!("selfcheck: {} blocks, seed {}, tol {:e}", config.blocks, config.seed, config.tol);
    for id in Identity::ALL {
        println!("  {:<14} max deviation {:.3e}", id.name(), report.max(id));
    }
    println!("  elapsed {:.2?}", start.elapsed());
    if let Some(f) = report.failure {
        bail!(
            "identity {} failed at block index {} (deviation {:.3e} > tol {:e}, seed {})",
            f.identity,
            f.index,
            f.deviation,
            config.tol,
            config.seed
        );
    }
    println!("all identities hold");
    Ok(())
}
