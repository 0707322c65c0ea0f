//! Per-tile source selection.
//!
//! With two sources the map is the trivalued grid `+1` (first source
//! sharper), `-1` (second sharper), `0` (equal scores). With more sources
//! each tile stores the index of the strict maximum, or the set of sources
//! sharing the maximum.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::focus::{score_dct, FocusMetric};
use crate::fusion::grid::BlockGrid;
use crate::laplacian::OperatorSet;
use crate::matrix::CoeffBlock;
use crate::par;

/// Largest number of sources a single map can describe.
pub const MAX_SOURCES: usize = 64;

/// Bit set of source indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SourceSet(u64);

impl SourceSet {
    pub fn all(sources: usize) -> Self {
        debug_assert!(sources <= MAX_SOURCES);
        if sources == MAX_SOURCES {
            SourceSet(u64::MAX)
        } else {
            SourceSet((1u64 << sources) - 1)
        }
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn contains(&self, index: usize) -> bool {
        index < MAX_SOURCES && self.0 & (1 << index) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn first(&self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_SOURCES).filter(|&i| self.contains(i))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// Tile comes from this source.
    Source(usize),
    /// These sources share the top score.
    Tie(SourceSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionMap {
    rows: usize,
    cols: usize,
    sources: usize,
    labels: Vec<Label>,
}

impl DecisionMap {
    pub fn new(rows: usize, cols: usize, sources: usize, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != rows * cols {
            return Err(Error::SampleCount { expected: rows * cols, actual: labels.len() });
        }
        if sources > MAX_SOURCES {
            return Err(Error::TooManyImages { max: MAX_SOURCES, actual: sources });
        }
        Ok(DecisionMap { rows, cols, sources, labels })
    }

    pub fn uniform(rows: usize, cols: usize, sources: usize, label: Label) -> Self {
        DecisionMap { rows, cols, sources, labels: alloc::vec![label; rows * cols] }
    }

    /// Two-source map from `+1 / 0 / -1` values, row-major.
    pub fn from_trivalued(rows: usize, cols: usize, values: &[i8]) -> Result<Self> {
        let labels = values
            .iter()
            .map(|&v| match v.signum() {
                1 => Label::Source(0),
                -1 => Label::Source(1),
                _ => Label::Tie(SourceSet::all(2)),
            })
            .collect();
        Self::new(rows, cols, 2, labels)
    }

    /// `+1 / 0 / -1` view; `None` unless the map has exactly two sources.
    pub fn to_trivalued(&self) -> Option<Vec<i8>> {
        if self.sources != 2 {
            return None;
        }
        Some(
            self.labels
                .iter()
                .map(|l| match l {
                    Label::Source(0) => 1,
                    Label::Source(_) => -1,
                    Label::Tie(_) => 0,
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn sources(&self) -> usize {
        self.sources
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, row: usize, col: usize) -> Label {
        self.labels[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, label: Label) {
        self.labels[row * self.cols + col] = label;
    }

    pub fn ties(&self) -> usize {
        self.labels.iter().filter(|l| matches!(l, Label::Tie(_))).count()
    }
}

/// Strict maximum wins; equal maxima produce a tie.
pub fn select(scores: &[f64]) -> Label {
    let best = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut winners = SourceSet::default();
    for (i, s) in scores.iter().enumerate() {
        if *s == best {
            winners.insert(i);
        }
    }
    match winners.len() {
        1 => Label::Source(winners.first().unwrap_or(0)),
        _ => Label::Tie(winners),
    }
}

/// Two-source decision map.
pub fn decide(
    first: &BlockGrid<CoeffBlock>,
    second: &BlockGrid<CoeffBlock>,
    metric: FocusMetric,
    ops: &OperatorSet,
) -> Result<DecisionMap> {
    decide_many(&[first, second], metric, ops)
}

/// Decision map over any number of sources (2..=64).
pub fn decide_many(
    grids: &[&BlockGrid<CoeffBlock>],
    metric: FocusMetric,
    ops: &OperatorSet,
) -> Result<DecisionMap> {
    let Some(lead) = grids.first() else {
        return Err(Error::TooFewImages { required: 2, actual: 0 });
    };
    if grids.len() < 2 {
        return Err(Error::TooFewImages { required: 2, actual: grids.len() });
    }
    if grids.len() > MAX_SOURCES {
        return Err(Error::TooManyImages { max: MAX_SOURCES, actual: grids.len() });
    }
    for g in &grids[1..] {
        lead.ensure_same_layout(g)?;
    }
    let tiles = lead.rows() * lead.cols();
    let labels = par::map_range(tiles, |t| {
        let mut scores = [0.0f64; MAX_SOURCES];
        for (s, g) in grids.iter().enumerate() {
            scores[s] = score_dct(metric, &g.blocks()[t], ops).value();
        }
        select(&scores[..grids.len()])
    });
    DecisionMap::new(lead.rows(), lead.cols(), grids.len(), labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn select_two_way() {
        assert_eq!(select(&[468.0, 0.0]), Label::Source(0));
        assert_eq!(select(&[1.0, 2.0]), Label::Source(1));
        assert_eq!(select(&[3.0, 3.0]), Label::Tie(SourceSet::all(2)));
    }

    #[test]
    fn select_many_with_partial_tie() {
        let l = select(&[1.0, 5.0, 0.0, 5.0]);
        let Label::Tie(set) = l else { panic!("expected tie, got {l:?}") };
        assert_eq!(set.iter().collect::<Vec<_>>(), [1, 3]);
        assert_eq!(set.first(), Some(1));
    }

    #[test]
    fn trivalued_round_trip() {
        let vals = [1i8, 0, -1, -1, 1, 0];
        let map = DecisionMap::from_trivalued(2, 3, &vals).unwrap();
        assert_eq!(map.to_trivalued().unwrap(), vals);
        assert_eq!(map.ties(), 2);
    }

    #[test]
    fn trivalued_requires_two_sources() {
        let map = DecisionMap::uniform(1, 1, 3, Label::Source(2));
        assert!(map.to_trivalued().is_none());
    }

    #[test]
    fn source_set_full_width() {
        assert_eq!(SourceSet::all(64).len(), 64);
        assert!(SourceSet::all(64).contains(63));
        assert!(!SourceSet::all(3).contains(3));
    }
}
