use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fusion::decision::{DecisionMap, Label, SourceSet};
use crate::fusion::grid::{untile, BlockGrid};
use crate::fusion::TiePolicy;
use crate::matrix::{CoeffBlock, Mat8};
use crate::par;
use crate::raster::GrayRaster;
use crate::transform::DctBasis;

fn mean_block<'a>(blocks: impl Iterator<Item = &'a CoeffBlock>) -> CoeffBlock {
    let mut acc = Mat8::zero();
    let mut n = 0usize;
    for b in blocks {
        acc = acc + b.0;
        n += 1;
    }
    CoeffBlock(acc.scale(1.0 / n.max(1) as f64))
}

fn resolve_tie(grids: &[&BlockGrid<CoeffBlock>], tile: usize, tied: SourceSet, policy: TiePolicy) -> CoeffBlock {
    match policy {
        TiePolicy::First => grids[tied.first().unwrap_or(0)].blocks()[tile],
        TiePolicy::Average => mean_block(tied.iter().map(|s| &grids[s].blocks()[tile])),
    }
}

fn check_grids(grids: &[&BlockGrid<CoeffBlock>]) -> Result<()> {
    let Some(lead) = grids.first() else {
        return Err(Error::TooFewImages { required: 1, actual: 0 });
    };
    grids[1..].iter().try_for_each(|g| lead.ensure_same_layout(g))
}

/// Build the fused image: copy each tile's selected coefficient block,
/// resolve ties per `policy`, inverse-transform, crop and quantize.
pub fn assemble(
    grids: &[&BlockGrid<CoeffBlock>],
    map: &DecisionMap,
    policy: TiePolicy,
    basis: &DctBasis,
) -> Result<GrayRaster> {
    check_grids(grids)?;
    let lead = grids[0];
    if map.rows() != lead.rows() || map.cols() != lead.cols() {
        return Err(Error::MapMismatch {
            map_rows: map.rows(),
            map_cols: map.cols(),
            grid_rows: lead.rows(),
            grid_cols: lead.cols(),
        });
    }
    if map.sources() != grids.len() {
        return Err(Error::TooFewImages { required: map.sources(), actual: grids.len() });
    }
    let labels = map.labels();
    let blocks: Vec<_> = par::map_range(labels.len(), |t| match labels[t] {
        Label::Source(s) => grids[s].blocks()[t],
        Label::Tie(set) => resolve_tie(grids, t, set, policy),
    });
    let spatial = lead.with_blocks(blocks).to_spatial(basis);
    Ok(untile(&spatial))
}

/// Per-tile mean of every source's coefficients (the DCT+Average baseline).
pub fn average(grids: &[&BlockGrid<CoeffBlock>], basis: &DctBasis) -> Result<GrayRaster> {
    check_grids(grids)?;
    let lead = grids[0];
    let tiles = lead.rows() * lead.cols();
    let blocks = par::map_range(tiles, |t| mean_block(grids.iter().map(|g| &g.blocks()[t])));
    Ok(untile(&lead.with_blocks(blocks).to_spatial(basis)))
}
