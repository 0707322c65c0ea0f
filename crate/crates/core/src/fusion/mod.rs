//! The block-selection pipeline: tile, transform, score, decide, optionally
//! clean the map with consistency verification, then assemble.

use alloc::vec::Vec;
use core::fmt;

mod assemble;
pub mod cv;
pub mod decision;
pub mod grid;

pub use assemble::{assemble, average};
pub use cv::{consistency_verify, count_disagreements, DEFAULT_WINDOW};
pub use decision::{decide, decide_many, DecisionMap, Label, SourceSet, MAX_SOURCES};
pub use grid::{tile, untile, BlockGrid};

use crate::error::{Error, Result};
use crate::focus::FocusMetric;
use crate::laplacian::OperatorSet;
use crate::matrix::CoeffBlock;
use crate::raster::GrayRaster;
use crate::transform::DctBasis;

/// Block-selection criterion, or plain coefficient averaging.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FusionMetric {
    Eol,
    Vol,
    Variance,
    Average,
}

impl FusionMetric {
    pub const ALL: [FusionMetric; 4] =
        [FusionMetric::Eol, FusionMetric::Vol, FusionMetric::Variance, FusionMetric::Average];

    /// The focus measure driving selection; `None` for averaging.
    pub fn focus(&self) -> Option<FocusMetric> {
        match self {
            FusionMetric::Eol => Some(FocusMetric::Eol),
            FusionMetric::Vol => Some(FocusMetric::Vol),
            FusionMetric::Variance => Some(FocusMetric::Variance),
            FusionMetric::Average => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FusionMetric::Average => "average",
            other => other.focus().map_or("average", |f| f.name()),
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }
}

impl From<FocusMetric> for FusionMetric {
    fn from(m: FocusMetric) -> Self {
        match m {
            FocusMetric::Eol => FusionMetric::Eol,
            FocusMetric::Vol => FusionMetric::Vol,
            FocusMetric::Variance => FusionMetric::Variance,
        }
    }
}

impl fmt::Display for FusionMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a tile receives when its sources score equally.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TiePolicy {
    /// Mean of the tied sources' coefficient blocks.
    #[default]
    Average,
    /// The lowest-indexed tied source.
    First,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PadPolicy {
    #[default]
    EdgeReplicate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FusionConfig {
    pub metric: FusionMetric,
    pub cv_enabled: bool,
    /// Odd, at least 3.
    pub cv_window: usize,
    pub tie_policy: TiePolicy,
    pub pad_policy: PadPolicy,
}

impl Default for FusionConfig {
    fn default() -> Self {
        FusionConfig {
            metric: FusionMetric::Vol,
            cv_enabled: false,
            cv_window: DEFAULT_WINDOW,
            tie_policy: TiePolicy::Average,
            pad_policy: PadPolicy::EdgeReplicate,
        }
    }
}

impl FusionConfig {
    pub fn new(metric: FusionMetric) -> Self {
        FusionConfig { metric, ..Self::default() }
    }

    pub fn with_cv(mut self, enabled: bool) -> Self {
        self.cv_enabled = enabled;
        self
    }

    pub fn with_window(mut self, window: usize) -> Self {
        self.cv_window = window;
        self
    }

    pub fn with_tie_policy(mut self, policy: TiePolicy) -> Self {
        self.tie_policy = policy;
        self
    }

    pub fn validate(&self) -> Result<()> {
        cv::check_window(self.cv_window)
    }

    /// The eight benchmark configurations: every metric with CV off and on.
    pub fn benchmark_set() -> Vec<FusionConfig> {
        FusionMetric::ALL
            .into_iter()
            .flat_map(|m| [false, true].map(|cv| FusionConfig::new(m).with_cv(cv)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FusionOutput {
    pub image: GrayRaster,
    /// Absent for [`FusionMetric::Average`], which never selects.
    pub map: Option<DecisionMap>,
}

/// DCT basis and lifted operators, built once and reused across fusions.
#[derive(Clone, Debug)]
pub struct Fuser {
    basis: DctBasis,
    ops: OperatorSet,
}

impl Default for Fuser {
    fn default() -> Self {
        Self::new()
    }
}

fn check_inputs(images: &[GrayRaster]) -> Result<()> {
    if images.len() < 2 {
        return Err(Error::TooFewImages { required: 2, actual: images.len() });
    }
    if images.len() > MAX_SOURCES {
        return Err(Error::TooManyImages { max: MAX_SOURCES, actual: images.len() });
    }
    images[1..].iter().try_for_each(|img| images[0].ensure_same_dims(img))
}

impl Fuser {
    pub fn new() -> Self {
        let basis = DctBasis::new();
        let ops = OperatorSet::new(&basis);
        Fuser { basis, ops }
    }

    pub fn basis(&self) -> &DctBasis {
        &self.basis
    }

    pub fn operators(&self) -> &OperatorSet {
        &self.ops
    }

    pub fn coefficients(&self, image: &GrayRaster) -> Result<BlockGrid<CoeffBlock>> {
        Ok(tile(image)?.to_coefficients(&self.basis))
    }

    /// Raw per-tile decision map, before consistency verification.
    pub fn decision_map(&self, images: &[GrayRaster], metric: FocusMetric) -> Result<DecisionMap> {
        check_inputs(images)?;
        let grids = images.iter().map(|i| self.coefficients(i)).collect::<Result<Vec<_>>>()?;
        let refs: Vec<_> = grids.iter().collect();
        decide_many(&refs, metric, &self.ops)
    }

    fn select_map(&self, grids: &[&BlockGrid<CoeffBlock>], config: &FusionConfig) -> Result<Option<DecisionMap>> {
        let Some(focus) = config.metric.focus() else {
            return Ok(None);
        };
        let map = decide_many(grids, focus, &self.ops)?;
        let map = if config.cv_enabled { consistency_verify(&map, config.cv_window)? } else { map };
        Ok(Some(map))
    }

    pub fn fuse(&self, images: &[GrayRaster], config: &FusionConfig) -> Result<FusionOutput> {
        config.validate()?;
        check_inputs(images)?;
        let grids = images.iter().map(|i| self.coefficients(i)).collect::<Result<Vec<_>>>()?;
        let refs: Vec<_> = grids.iter().collect();
        match self.select_map(&refs, config)? {
            Some(map) => {
                let image = assemble(&refs, &map, config.tie_policy, &self.basis)?;
                Ok(FusionOutput { image, map: Some(map) })
            }
            None => Ok(FusionOutput { image: average(&refs, &self.basis)?, map: None }),
        }
    }

    /// Multi-channel fusion. The map is decided on `luma[s]` and applied to
    /// every plane of `planes[s]`, so all channels take the same tile source.
    /// Returns one fused plane per channel.
    pub fn fuse_channels(
        &self,
        luma: &[GrayRaster],
        planes: &[Vec<GrayRaster>],
        config: &FusionConfig,
    ) -> Result<(Vec<GrayRaster>, Option<DecisionMap>)> {
        config.validate()?;
        check_inputs(luma)?;
        if planes.len() != luma.len() {
            return Err(Error::TooFewImages { required: luma.len(), actual: planes.len() });
        }
        let channels = planes[0].len();
        for source in planes {
            if source.len() != channels {
                return Err(Error::TooFewImages { required: channels, actual: source.len() });
            }
            source.iter().try_for_each(|p| luma[0].ensure_same_dims(p))?;
        }
        let luma_grids = luma.iter().map(|i| self.coefficients(i)).collect::<Result<Vec<_>>>()?;
        let luma_refs: Vec<_> = luma_grids.iter().collect();
        let map = self.select_map(&luma_refs, config)?;

        let mut fused = Vec::with_capacity(channels);
        for ch in 0..channels {
            let grids = planes.iter().map(|p| self.coefficients(&p[ch])).collect::<Result<Vec<_>>>()?;
            let refs: Vec<_> = grids.iter().collect();
            fused.push(match &map {
                Some(map) => assemble(&refs, map, config.tie_policy, &self.basis)?,
                None => average(&refs, &self.basis)?,
            });
        }
        Ok((fused, map))
    }
}

/// One-shot fusion with a fresh [`Fuser`].
pub fn fuse(images: &[GrayRaster], config: &FusionConfig) -> Result<FusionOutput> {
    Fuser::new().fuse(images, config)
}
