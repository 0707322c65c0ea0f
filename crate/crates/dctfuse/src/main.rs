use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;
use dctfuse::cli::{run, Cli};

/// `FUSE_THREADS` caps the worker pool; it never changes output.
fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("FUSE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .with_context(|| format!("FUSE_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
