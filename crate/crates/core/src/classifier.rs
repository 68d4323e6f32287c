//! Humanoid shape score from two heuristics: the height/width ratio of the
//! object's box, and the number of fork points in its skeleton.
//!
//! `final_score = ratio_weight * [ratio in band] + fork_weight * [forks in band]`.
//! With the defaults a ratio match alone scores 1.0 and a ratio plus fork
//! match scores 1.4; fork evidence alone (0.4) never reaches the threshold.

use crate::error::{Error, Result};
use crate::features::SkeletonFeatures;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifierConfig {
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub fork_min: usize,
    pub fork_max: usize,
    pub ratio_weight: f64,
    pub fork_weight: f64,
    pub human_threshold: f64,
}

impl Default for ClassifierConfig {
    fn default() -> Self {
        Self {
            ratio_min: 1.8,
            ratio_max: 4.5,
            fork_min: 2,
            // thick junctions thin into small clusters of fork pixels
            fork_max: 8,
            ratio_weight: 1.0,
            fork_weight: 0.4,
            human_threshold: 1.0,
        }
    }
}

impl ClassifierConfig {
    pub fn validate(&self) -> Result<()> {
        if self.ratio_min.partial_cmp(&self.ratio_max) != Some(std::cmp::Ordering::Less) {
            return Err(Error::InvalidConfig(
                "ratio_min must be below ratio_max".into(),
            ));
        }
        if self.fork_min > self.fork_max {
            return Err(Error::InvalidConfig(
                "fork_min must not exceed fork_max".into(),
            ));
        }
        if !(self.ratio_weight >= 0.0 && self.fork_weight >= 0.0) {
            return Err(Error::InvalidConfig("weights must be non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verdict {
    pub final_score: f64,
    pub is_human: bool,
    /// Box height divided by box width.
    pub ratio: f64,
    pub fork_count: usize,
}

pub fn score(features: &SkeletonFeatures, cfg: &ClassifierConfig) -> Result<Verdict> {
    let (h, w) = (features.bbox.height(), features.bbox.width());
    score_measurements(h as f64, w as f64, features.fork_points.len(), cfg)
}

/// Scores raw measurements; [`score`] feeds it from a feature set.
pub fn score_measurements(
    height: f64,
    width: f64,
    fork_count: usize,
    cfg: &ClassifierConfig,
) -> Result<Verdict> {
    if width <= 0.0 {
        return Err(Error::ZeroWidthBox);
    }
    let ratio = height / width;
    let mut final_score = 0.0;
    if (cfg.ratio_min..=cfg.ratio_max).contains(&ratio) {
        final_score += cfg.ratio_weight;
    }
    if (cfg.fork_min..=cfg.fork_max).contains(&fork_count) {
        final_score += cfg.fork_weight;
    }
    Ok(Verdict {
        final_score,
        is_human: final_score >= cfg.human_threshold,
        ratio,
        fork_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(ratio: f64, forks: usize) -> Verdict {
        score_measurements(ratio * 20.0, 20.0, forks, &ClassifierConfig::default()).unwrap()
    }

    #[test]
    fn observed_score_values() {
        let a = v(2.5, 0);
        assert_eq!(a.final_score, 1.0);
        assert!(a.is_human);
        let b = v(2.5, 2);
        assert!((b.final_score - 1.4).abs() < 1e-12);
        assert!(b.is_human);
        let c = v(1.0, 0);
        assert_eq!(c.final_score, 0.0);
        assert!(!c.is_human);
    }

    #[test]
    fn fork_evidence_alone_is_not_enough() {
        let d = v(0.5, 3);
        assert!((d.final_score - 0.4).abs() < 1e-12);
        assert!(!d.is_human);
        // too many forks drops the bonus
        assert_eq!(v(2.5, 9).final_score, 1.0);
    }

    #[test]
    fn band_edges_are_inclusive() {
        assert_eq!(v(1.8, 0).final_score, 1.0);
        assert_eq!(v(4.5, 0).final_score, 1.0);
        assert_eq!(v(4.6, 0).final_score, 0.0);
    }

    #[test]
    fn zero_width_guard() {
        assert!(matches!(
            score_measurements(10.0, 0.0, 0, &ClassifierConfig::default()),
            Err(Error::ZeroWidthBox)
        ));
    }

    #[test]
    fn validation() {
        let mut c = ClassifierConfig::default();
        assert!(c.validate().is_ok());
        c.ratio_min = 5.0;
        assert!(c.validate().is_err());
        let c = ClassifierConfig {
            fork_min: 9,
            ..Default::default()
        };
        assert!(c.validate().is_err());
        let c = ClassifierConfig {
            fork_weight: -1.0,
            ..Default::default()
        };
        assert!(c.validate().is_err());
    }
}
