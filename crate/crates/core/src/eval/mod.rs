//! Ground-truth evaluation: MSE and SSIM, the half-blurred pair generator,
//! and the method-comparison benchmark.

mod bench;
mod blur;
mod metrics;
mod pairs;

pub use bench::{format_significant, report_csv, run_benchmark, MetricReport, PairScore, CSV_HEADER};
pub use blur::{box_filter, box_kernel, synthetic_blur, BlurSpec, Side};
pub use metrics::{mse, ssim, ssim_with, SsimParams};
pub use pairs::{make_pairs, MultiFocusPair, PAIR_KERNEL_SIZES};
