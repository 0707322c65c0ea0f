//! Consistency verification: a majority filter over the decision map.
//!
//! Each tile takes the label that holds a strict plurality of source votes
//! inside its `window × window` neighbourhood, counting only in-bounds tiles.
//! Tied tiles cast no vote. Without a strict winner the tile keeps its own
//! label. For two sources this is exactly the sign of the mean of the
//! `+1 / 0 / -1` labels, with a zero mean leaving the tile unchanged.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fusion::decision::{DecisionMap, Label};

pub const DEFAULT_WINDOW: usize = 5;

pub(crate) fn check_window(window: usize) -> Result<()> {
    if window < 3 || window % 2 == 0 {
        return Err(Error::InvalidWindow(window));
    }
    Ok(())
}

/// Source with a strict plurality of votes around `(row, col)`, if any.
pub fn window_majority(map: &DecisionMap, row: usize, col: usize, window: usize) -> Option<usize> {
    let mut votes = vec![0usize; map.sources()];
    tally(map, row, col, window / 2, &mut votes);
    plurality(&votes)
}

fn tally(map: &DecisionMap, row: usize, col: usize, radius: usize, votes: &mut [usize]) {
    votes.iter_mut().for_each(|v| *v = 0);
    let r_end = (row + radius + 1).min(map.rows());
    let c_end = (col + radius + 1).min(map.cols());
    for r in row.saturating_sub(radius)..r_end {
        for c in col.saturating_sub(radius)..c_end {
            if let Label::Source(s) = map.get(r, c) {
                votes[s] += 1;
            }
        }
    }
}

fn plurality(votes: &[usize]) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut unique = false;
    for (s, &n) in votes.iter().enumerate() {
        match best {
            Some(b) if n < votes[b] => {}
            Some(b) if n == votes[b] => unique = false,
            _ => {
                best = Some(s);
                unique = true;
            }
        }
    }
    best.filter(|&b| unique && votes[b] > 0)
}

pub fn consistency_verify(map: &DecisionMap, window: usize) -> Result<DecisionMap> {
    check_window(window)?;
    let radius = window / 2;
    let mut votes = vec![0usize; map.sources()];
    let mut labels = Vec::with_capacity(map.labels().len());
    for r in 0..map.rows() {
        for c in 0..map.cols() {
            tally(map, r, c, radius, &mut votes);
            labels.push(match plurality(&votes) {
                Some(s) => Label::Source(s),
                None => map.get(r, c),
            });
        }
    }
    DecisionMap::new(map.rows(), map.cols(), map.sources(), labels)
}

/// Tiles whose label differs from an existing strict window majority.
pub fn count_disagreements(map: &DecisionMap, window: usize) -> Result<usize> {
    check_window(window)?;
    let radius = window / 2;
    let mut votes = vec![0usize; map.sources()];
    let mut count = 0;
    for r in 0..map.rows() {
        for c in 0..map.cols() {
            tally(map, r, c, radius, &mut votes);
            if let Some(s) = plurality(&votes) {
                if map.get(r, c) != Label::Source(s) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}
