//! Centre-of-gravity tracking and lateral movement alarms.
//!
//! The tracker keeps a two-cell sheet holding the previous and the current
//! horizontal centre of gravity (`cgx`). Both cells start at 0, and a previous
//! value of exactly 0 means "no previous frame". A shift larger than the
//! movement threshold raises a LEFT or RIGHT alarm.

use std::fmt;

use crate::error::{Error, Result};
use crate::features::SkeletonFeatures;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrackerConfig {
    /// Pixels of horizontal shift needed to raise an alarm (strictly exceeded).
    pub movement_threshold: f64,
    /// Detect the first frame by `frames_seen` instead of the 0 sentinel, so a
    /// genuine cgx of 0.0 is not mistaken for "no previous frame".
    pub strict_first_frame: bool,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        Self {
            movement_threshold: 5.0,
            strict_first_frame: false,
        }
    }
}

impl TrackerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.movement_threshold.is_nan() || self.movement_threshold <= 0.0 {
            return Err(Error::InvalidConfig(
                "movement_threshold must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// The cgx sheet: previous and current cgx, plus how many updates it has seen.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TrackerState {
    pub cgx_prev: f64,
    pub cgx_curr: f64,
    pub frames_seen: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    FirstFrame,
    Right,
    Left,
    None,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::FirstFrame => "FIRST_FRAME",
            Direction::Right => "RIGHT",
            Direction::Left => "LEFT",
            Direction::None => "NONE",
        }
    }

    /// RIGHT and LEFT raise alarms.
    pub fn is_alarm(self) -> bool {
        matches!(self, Direction::Right | Direction::Left)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MovementEvent {
    pub direction: Direction,
    /// `None` on the first frame.
    pub cgx_diff: Option<f64>,
    pub cgx: f64,
    pub cgy: f64,
    pub cgx_prev: f64,
    pub cgx_new: f64,
}

/// Mean position of every classified skeleton point.
pub fn centre_of_gravity(features: &SkeletonFeatures) -> Result<(f64, f64)> {
    if features.is_empty() {
        return Err(Error::EmptySkeleton);
    }
    let n = features.len() as f64;
    let (sx, sy) = features
        .all_points()
        .fold((0.0, 0.0), |(sx, sy), p| (sx + p.x as f64, sy + p.y as f64));
    Ok((sx / n, sy / n))
}

impl TrackerState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Shifts the sheet and classifies the movement since the previous frame.
    pub fn update(
        &self,
        cgx: f64,
        cgy: f64,
        cfg: &TrackerConfig,
    ) -> Result<(TrackerState, MovementEvent)> {
        if !cgx.is_finite() || !cgy.is_finite() {
            return Err(Error::NonFiniteInput { cgx, cgy });
        }
        let next = TrackerState {
            cgx_prev: self.cgx_curr,
            cgx_curr: cgx,
            frames_seen: self.frames_seen + 1,
        };
        let first = if cfg.strict_first_frame {
            self.frames_seen == 0
        } else {
            next.cgx_prev == 0.0
        };
        let (direction, cgx_diff) = if first {
            (Direction::FirstFrame, None)
        } else {
            let diff = next.cgx_curr - next.cgx_prev;
            let dir = if diff > cfg.movement_threshold {
                Direction::Right
            } else if diff < -cfg.movement_threshold {
                Direction::Left
            } else {
                Direction::None
            };
            (dir, Some(diff))
        };
        Ok((
            next,
            MovementEvent {
                direction,
                cgx_diff,
                cgx,
                cgy,
                cgx_prev: next.cgx_prev,
                cgx_new: next.cgx_curr,
            },
        ))
    }
}

/// Owning wrapper for one stream; updates must arrive in frame order.
#[derive(Clone, Debug, Default)]
pub struct Tracker {
    state: TrackerState,
    cfg: TrackerConfig,
}

impl Tracker {
    pub fn new(cfg: TrackerConfig) -> Self {
        Self {
            state: TrackerState::default(),
            cfg,
        }
    }

    pub fn state(&self) -> TrackerState {
        self.state
    }

    pub fn update(&mut self, cgx: f64, cgy: f64) -> Result<MovementEvent> {
        let (state, event) = self.state.update(cgx, cgy, &self.cfg)?;
        self.state = state;
        Ok(event)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::{BinaryImage, BoundingBox};

    fn step(state: TrackerState, cgx: f64) -> (TrackerState, MovementEvent) {
        state.update(cgx, 0.0, &TrackerConfig::default()).unwrap()
    }

    fn sheet_at(cgx: f64) -> TrackerState {
        TrackerState {
            cgx_prev: 1.0,
            cgx_curr: cgx,
            frames_seen: 1,
        }
    }

    #[test]
    fn first_frame_has_no_diff() {
        let (s, e) = step(TrackerState::new(), 165.6071);
        assert_eq!(e.direction, Direction::FirstFrame);
        assert_eq!(e.cgx_diff, None);
        assert_eq!((s.cgx_prev, s.cgx_curr), (0.0, 165.6071));
    }

    #[test]
    fn table_rows() {
        let (_, e) = step(sheet_at(165.6071), 179.6957);
        assert_eq!(e.direction, Direction::Right);
        assert!((e.cgx_diff.unwrap() - 14.0886).abs() < 1e-9);

        let (_, e) = step(sheet_at(200.6286), 190.6053);
        assert_eq!(e.direction, Direction::Left);
        assert!((e.cgx_diff.unwrap() + 10.0233).abs() < 1e-9);

        let (_, e) = step(sheet_at(190.6053), 184.8421);
        assert_eq!(e.direction, Direction::Left);
        assert!((e.cgx_diff.unwrap() + 5.7632).abs() < 1e-9);

        let (_, e) = step(sheet_at(100.0), 103.0);
        assert_eq!(e.direction, Direction::None);
        assert_eq!(e.cgx_diff, Some(3.0));
    }

    #[test]
    fn exact_threshold_is_not_movement() {
        assert_eq!(step(sheet_at(100.0), 105.0).1.direction, Direction::None);
        assert_eq!(step(sheet_at(100.0), 95.0).1.direction, Direction::None);
    }

    #[test]
    fn sheet_is_a_two_cell_fifo() {
        let mut t = Tracker::new(TrackerConfig::default());
        for v in [3.0, 7.0, 11.0] {
            t.update(v, 1.0).unwrap();
        }
        let s = t.state();
        assert_eq!((s.cgx_prev, s.cgx_curr, s.frames_seen), (7.0, 11.0, 3));
    }

    #[test]
    fn zero_sentinel_versus_strict_mode() {
        let start = TrackerState::new();
        let (s, _) = step(start, 0.0);
        // a real cgx of 0 looks like "no previous frame"
        assert_eq!(step(s, 20.0).1.direction, Direction::FirstFrame);

        let strict = TrackerConfig {
            strict_first_frame: true,
            ..TrackerConfig::default()
        };
        let (s, e) = start.update(0.0, 0.0, &strict).unwrap();
        assert_eq!(e.direction, Direction::FirstFrame);
        let (_, e) = s.update(20.0, 0.0, &strict).unwrap();
        assert_eq!(e.direction, Direction::Right);
        assert_eq!(e.cgx_diff, Some(20.0));
    }

    #[test]
    fn rejects_non_finite() {
        let cfg = TrackerConfig::default();
        assert!(matches!(
            TrackerState::new().update(f64::NAN, 1.0, &cfg),
            Err(Error::NonFiniteInput { .. })
        ));
        assert!(TrackerState::new()
            .update(1.0, f64::INFINITY, &cfg)
            .is_err());
    }

    #[test]
    fn centre_of_line_and_plus() {
        let mut m = BinaryImage::new(8, 8);
        for x in 0..5 {
            m.set(x, 3, true);
        }
        let bb = crate::features::bounding_box(&m).unwrap();
        let f = crate::features::classify_points(&m, bb).unwrap();
        assert_eq!(centre_of_gravity(&f).unwrap(), (2.0, 3.0));

        let mut m = BinaryImage::new(21, 21);
        for i in 5..=15 {
            m.set(i, 10, true);
            m.set(10, i, true);
        }
        let bb = crate::features::bounding_box(&m).unwrap();
        let f = crate::features::classify_points(&m, bb).unwrap();
        assert_eq!(centre_of_gravity(&f).unwrap(), (10.0, 10.0));
    }

    #[test]
    fn empty_features() {
        let f = SkeletonFeatures {
            endpoints: vec![],
            fork_points: vec![],
            branch_points: vec![],
            bbox: BoundingBox {
                min_x: 0,
                min_y: 0,
                max_x: 0,
                max_y: 0,
            },
        };
        assert!(matches!(centre_of_gravity(&f), Err(Error::EmptySkeleton)));
    }

    #[test]
    fn config_validation() {
        let c = TrackerConfig {
            movement_threshold: 0.0,
            ..Default::default()
        };
        assert!(c.validate().is_err());
    }
}
