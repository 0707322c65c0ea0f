//! Fuse every pair with every method and score against the ground truth.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::eval::metrics::{mse, ssim};
use crate::eval::pairs::MultiFocusPair;
use crate::fusion::{FusionConfig, Fuser};

pub const CSV_HEADER: &str = "method,cv,avg_ssim,avg_mse,pairs";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairScore {
    pub ssim: f64,
    pub mse: f64,
}

/// One benchmark row: a method averaged over all pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricReport {
    pub method: String,
    pub cv: bool,
    pub config: FusionConfig,
    pub avg_ssim: f64,
    pub avg_mse: f64,
    pub pairs: usize,
    pub per_pair: Vec<PairScore>,
}

pub fn run_benchmark(pairs: &[MultiFocusPair], methods: &[FusionConfig]) -> Result<Vec<MetricReport>> {
    if pairs.is_empty() {
        return Err(Error::NoPairs);
    }
    let fuser = Fuser::new();
    let mut rows = Vec::with_capacity(methods.len());
    for config in methods {
        let mut per_pair = Vec::with_capacity(pairs.len());
        for pair in pairs {
            let fused = fuser.fuse(&pair.inputs(), config)?.image;
            per_pair.push(PairScore { ssim: ssim(&pair.source, &fused)?, mse: mse(&pair.source, &fused)? });
        }
        let n = per_pair.len() as f64;
        rows.push(MetricReport {
            method: String::from(config.metric.name()),
            cv: config.cv_enabled,
            config: *config,
            avg_ssim: per_pair.iter().map(|p| p.ssim).sum::<f64>() / n,
            avg_mse: per_pair.iter().map(|p| p.mse).sum::<f64>() / n,
            pairs: pairs.len(),
            per_pair,
        });
    }
    rows.sort_by(|a, b| a.method.cmp(&b.method).then(a.cv.cmp(&b.cv)));
    Ok(rows)
}

/// `v` in plain decimal notation with `digits` significant digits.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{:.*}", digits.saturating_sub(1), v);
    }
    let decimals = |x: f64| {
        let magnitude = libm::floor(libm::log10(x.abs())) as isize;
        (digits as isize - 1 - magnitude).max(0) as usize
    };
    let d = decimals(v);
    let s = format!("{:.*}", d, v);
    // Rounding can carry into a new leading digit (9.9999996 -> 10.00000).
    let rounded: f64 = s.parse().unwrap_or(v);
    let d2 = decimals(rounded);
    if d2 < d {
        format!("{:.*}", d2, v)
    } else {
        s
    }
}

/// The report as CSV with a header line, one row per method.
pub fn report_csv(rows: &[MetricReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.method,
            r.cv,
            format_significant(r.avg_ssim, 6),
            format_significant(r.avg_mse, 6),
            r.pairs
        );
    }
    out
}
