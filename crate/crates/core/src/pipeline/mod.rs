//! Per-frame orchestration: gate → skeletonize → classify → score → track.

use std::path::Path;

use crate::change_gate::{self, GateConfig};
use crate::classifier::{self, ClassifierConfig};
use crate::error::{Error, Result};
use crate::features;
use crate::frame_io::{self, FrameSequence};
use crate::image::{BinaryImage, GrayImage};
use crate::skeletonizer::{self, SkeletonConfig};
use crate::tracker::{self, Direction, TrackerConfig, TrackerState};

mod config;
mod report;
pub mod synthetic;

pub use report::{alert_log, csv_report, write_alert_log, write_csv, CSV_HEADER};
pub use synthetic::{generate_synthetic, SyntheticKind};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PipelineConfig {
    pub gate: GateConfig,
    pub skeleton: SkeletonConfig,
    pub classifier: ClassifierConfig,
    pub tracker: TrackerConfig,
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        self.gate.validate()?;
        self.skeleton.validate()?;
        self.classifier.validate()?;
        self.tracker.validate()
    }
}

/// Why a frame stopped before reaching the tracker, or that it got there.
#[derive(Clone, Debug, PartialEq)]
pub enum FrameStatus {
    /// The tracker was updated; see [`FrameReport::direction`].
    Tracked,
    /// Correlation with the background stayed at or above the threshold.
    Unchanged,
    /// The gate opened but no component reached `min_blob_area`.
    NoObject,
    /// An object was found but did not score as human.
    NotHuman,
    /// A stage failed; the message carries the cause.
    Failed(String),
}

impl FrameStatus {
    pub fn tag(&self) -> &'static str {
        match self {
            FrameStatus::Tracked => "TRACKED",
            FrameStatus::Unchanged => "NO_CHANGE",
            FrameStatus::NoObject => "NO_OBJECT",
            FrameStatus::NotHuman => "NOT_HUMAN",
            FrameStatus::Failed(_) => "ERROR",
        }
    }
}

/// One row of the per-frame measurement table.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameReport {
    /// 1-based.
    pub frame_no: usize,
    pub changed: bool,
    pub status: FrameStatus,
    pub final_score: Option<f64>,
    pub is_human: Option<bool>,
    pub ratio: Option<f64>,
    pub fork_count: Option<usize>,
    pub cgx: Option<f64>,
    pub cgy: Option<f64>,
    pub cgx_prev: Option<f64>,
    pub cgx_new: Option<f64>,
    pub cgx_diff: Option<f64>,
    pub direction: Option<Direction>,
}

impl FrameReport {
    fn empty(frame_no: usize, changed: bool, status: FrameStatus) -> Self {
        Self {
            frame_no,
            changed,
            status,
            final_score: None,
            is_human: None,
            ratio: None,
            fork_count: None,
            cgx: None,
            cgy: None,
            cgx_prev: None,
            cgx_new: None,
            cgx_diff: None,
            direction: None,
        }
    }

    pub fn is_alarm(&self) -> bool {
        self.direction.is_some_and(Direction::is_alarm)
    }

    /// `frame=<n> direction=<LEFT|RIGHT> cgx_diff=<value>` for alarm frames.
    pub fn alert_line(&self) -> Option<String> {
        if !self.is_alarm() {
            return None;
        }
        Some(format!(
            "frame={} direction={} cgx_diff={:.4}",
            self.frame_no, self.direction?, self.cgx_diff?
        ))
    }
}

/// Intermediate rasters of one frame, for debugging dumps.
#[derive(Clone, Debug, Default)]
pub struct FrameArtifacts {
    pub diff: Option<BinaryImage>,
    pub skeleton: Option<BinaryImage>,
}

/// Runs one frame through every stage. Stages short-circuit: a closed gate,
/// a missing object or a non-human verdict leave the tracker state untouched.
pub fn process_frame(
    background: &GrayImage,
    frame: &GrayImage,
    frame_no: usize,
    state: TrackerState,
    cfg: &PipelineConfig,
) -> Result<(TrackerState, FrameReport)> {
    process_frame_detailed(background, frame, frame_no, state, cfg).map(|(s, r, _)| (s, r))
}

/// [`process_frame`] that also returns the DIFF mask and skeleton.
pub fn process_frame_detailed(
    background: &GrayImage,
    frame: &GrayImage,
    frame_no: usize,
    state: TrackerState,
    cfg: &PipelineConfig,
) -> Result<(TrackerState, FrameReport, FrameArtifacts)> {
    let mut artifacts = FrameArtifacts::default();
    let Some(diff) = change_gate::gate(background, frame, &cfg.gate)? else {
        return Ok((
            state,
            FrameReport::empty(frame_no, false, FrameStatus::Unchanged),
            artifacts,
        ));
    };
    let object = skeletonizer::largest_component(&diff, &cfg.skeleton);
    artifacts.diff = Some(diff);
    let Some(object) = object else {
        return Ok((
            state,
            FrameReport::empty(frame_no, true, FrameStatus::NoObject),
            artifacts,
        ));
    };
    let bbox = features::bounding_box(&object)?;
    let thinned = skeletonizer::thin_with_cap(&object, cfg.skeleton.max_thinning_passes)?;
    let skeleton = skeletonizer::prune(&thinned, &cfg.skeleton);
    let feats = features::classify_points(&skeleton, bbox)?;
    artifacts.skeleton = Some(skeleton);
    let verdict = classifier::score(&feats, &cfg.classifier)?;

    let mut report = FrameReport::empty(frame_no, true, FrameStatus::NotHuman);
    report.final_score = Some(verdict.final_score);
    report.is_human = Some(verdict.is_human);
    report.ratio = Some(verdict.ratio);
    report.fork_count = Some(verdict.fork_count);
    if !verdict.is_human {
        return Ok((state, report, artifacts));
    }

    let (cgx, cgy) = tracker::centre_of_gravity(&feats)?;
    let (state, event) = state.update(cgx, cgy, &cfg.tracker)?;
    report.status = FrameStatus::Tracked;
    report.cgx = Some(cgx);
    report.cgy = Some(cgy);
    report.cgx_prev = Some(event.cgx_prev);
    report.cgx_new = Some(event.cgx_new);
    report.cgx_diff = event.cgx_diff;
    report.direction = Some(event.direction);
    Ok((state, report, artifacts))
}

/// A configured pipeline for one stream.
#[derive(Clone, Debug)]
pub struct Pipeline {
    cfg: PipelineConfig,
}

impl Pipeline {
    pub fn new(cfg: PipelineConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self { cfg })
    }

    pub fn config(&self) -> &PipelineConfig {
        &self.cfg
    }

    /// Processes every frame in order with a single tracker. A failing frame
    /// is reported as [`FrameStatus::Failed`] and the run continues.
    pub fn run(&self, seq: &FrameSequence) -> Vec<FrameReport> {
        self.run_inner(seq, |_, _| Ok(()))
            .expect("no dump sink, nothing can fail")
    }

    /// Like [`Pipeline::run`], also writing `diff_NNNN.pgm` and
    /// `skeleton_NNNN.pgm` into `dir` for every frame that produced them.
    pub fn run_with_dump(&self, seq: &FrameSequence, dir: &Path) -> Result<Vec<FrameReport>> {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        self.run_inner(seq, |frame_no, art| {
            if let Some(d) = &art.diff {
                frame_io::write_binary(d, dir.join(format!("diff_{frame_no:04}.pgm")))?;
            }
            if let Some(s) = &art.skeleton {
                frame_io::write_binary(s, dir.join(format!("skeleton_{frame_no:04}.pgm")))?;
            }
            Ok(())
        })
    }

    fn run_inner(
        &self,
        seq: &FrameSequence,
        mut sink: impl FnMut(usize, &FrameArtifacts) -> Result<()>,
    ) -> Result<Vec<FrameReport>> {
        let mut state = TrackerState::new();
        let mut reports = Vec::with_capacity(seq.frames.len());
        for (i, frame) in seq.frames.iter().enumerate() {
            let frame_no = i + 1;
            match process_frame_detailed(&seq.background, frame, frame_no, state, &self.cfg) {
                Ok((next, report, artifacts)) => {
                    state = next;
                    sink(frame_no, &artifacts)?;
                    reports.push(report);
                }
                Err(e) => {
                    let e = e.at_frame(frame_no);
                    reports.push(FrameReport::empty(
                        frame_no,
                        false,
                        FrameStatus::Failed(e.to_string()),
                    ));
                }
            }
        }
        Ok(reports)
    }
}
