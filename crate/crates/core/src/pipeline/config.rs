//! Flat `key=value` configuration files.
//!
//! Keys are the config field names. Blank lines and lines starting with `#`
//! are ignored; unknown or repeated keys are errors.

use std::collections::HashSet;
use std::path::Path;
use std::str::FromStr;

use super::PipelineConfig;
use crate::error::{Error, Result};

fn parse<T: FromStr>(line: usize, key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::ConfigParse {
        line,
        reason: format!("invalid value {value:?} for {key}"),
    })
}

impl PipelineConfig {
    /// Starts from the defaults and applies every key in `text`.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut cfg = PipelineConfig::default();
        let mut seen = HashSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = trimmed.split_once('=').ok_or_else(|| Error::ConfigParse {
                line,
                reason: format!("expected key=value, got {trimmed:?}"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            if !seen.insert(key.to_string()) {
                return Err(Error::ConfigParse {
                    line,
                    reason: format!("duplicate key {key}"),
                });
            }
            match key {
                "correlation_threshold" => {
                    cfg.gate.correlation_threshold = parse(line, key, value)?
                }
                "pixel_delta_threshold" => {
                    cfg.gate.pixel_delta_threshold = parse(line, key, value)?
                }
                "min_blob_area" => cfg.skeleton.min_blob_area = parse(line, key, value)?,
                "prune_length" => cfg.skeleton.prune_length = parse(line, key, value)?,
                "max_thinning_passes" => {
                    cfg.skeleton.max_thinning_passes = match value {
                        "auto" => None,
                        v => Some(parse(line, key, v)?),
                    }
                }
                "ratio_min" => cfg.classifier.ratio_min = parse(line, key, value)?,
                "ratio_max" => cfg.classifier.ratio_max = parse(line, key, value)?,
                "fork_min" => cfg.classifier.fork_min = parse(line, key, value)?,
                "fork_max" => cfg.classifier.fork_max = parse(line, key, value)?,
                "ratio_weight" => cfg.classifier.ratio_weight = parse(line, key, value)?,
                "fork_weight" => cfg.classifier.fork_weight = parse(line, key, value)?,
                "human_threshold" => cfg.classifier.human_threshold = parse(line, key, value)?,
                "movement_threshold" => cfg.tracker.movement_threshold = parse(line, key, value)?,
                "strict_first_frame" => cfg.tracker.strict_first_frame = parse(line, key, value)?,
                other => {
                    return Err(Error::ConfigParse {
                        line,
                        reason: format!("unknown key {other}"),
                    })
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => Error::MissingFile(path.to_path_buf()),
            _ => Error::io(path, e),
        })?;
        Self::from_config_str(&text)
    }

    /// Every key with its current value, readable by [`Self::from_config_str`].
    pub fn to_config_string(&self) -> String {
        let passes = self
            .skeleton
            .max_thinning_passes
            .map_or_else(|| "auto".to_string(), |p| p.to_string());
        [
            format!("correlation_threshold={}", self.gate.correlation_threshold),
            format!("pixel_delta_threshold={}", self.gate.pixel_delta_threshold),
            format!("min_blob_area={}", self.skeleton.min_blob_area),
            format!("prune_length={}", self.skeleton.prune_length),
            format!("max_thinning_passes={passes}"),
            format!("ratio_min={}", self.classifier.ratio_min),
            format!("ratio_max={}", self.classifier.ratio_max),
            format!("fork_min={}", self.classifier.fork_min),
            format!("fork_max={}", self.classifier.fork_max),
            format!("ratio_weight={}", self.classifier.ratio_weight),
            format!("fork_weight={}", self.classifier.fork_weight),
            format!("human_threshold={}", self.classifier.human_threshold),
            format!("movement_threshold={}", self.tracker.movement_threshold),
            format!("strict_first_frame={}", self.tracker.strict_first_frame),
        ]
        .join("\n")
            + "\n"
    }
}
