//! Synthetic frame sequences for exercising the pipeline without camera footage.
//!
//! The humanoid is an upright stick figure (head disc, neck, torso bar, two
//! slanted arms and two slanted legs) about 31 px wide and 85 px tall. The
//! non-human object is a wide flat box.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::frame_io::FrameSequence;
use crate::image::GrayImage;

pub const BACKGROUND_LEVEL: u8 = 100;
pub const OBJECT_LEVEL: u8 = 220;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SyntheticKind {
    RightWalk,
    LeftWalk,
    Static,
    NonHuman,
}

impl FromStr for SyntheticKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right_walk" => Ok(Self::RightWalk),
            "left_walk" => Ok(Self::LeftWalk),
            "static" => Ok(Self::Static),
            "non_human" => Ok(Self::NonHuman),
            other => Err(Error::InvalidConfig(format!(
                "unknown synthetic kind {other:?} (right_walk, left_walk, static, non_human)"
            ))),
        }
    }
}

impl fmt::Display for SyntheticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::RightWalk => "right_walk",
            Self::LeftWalk => "left_walk",
            Self::Static => "static",
            Self::NonHuman => "non_human",
        })
    }
}

/// A shape drawn in figure-local coordinates.
#[derive(Clone, Copy, Debug)]
enum Primitive {
    Disc {
        cx: f64,
        cy: f64,
        r: f64,
    },
    /// Segment with round caps, `width` pixels across.
    Stroke {
        x0: f64,
        y0: f64,
        x1: f64,
        y1: f64,
        width: f64,
    },
    Rect {
        x: f64,
        y: f64,
        w: f64,
        h: f64,
    },
}

impl Primitive {
    fn covers(&self, px: f64, py: f64) -> bool {
        match *self {
            Primitive::Disc { cx, cy, r } => (px - cx).powi(2) + (py - cy).powi(2) <= r * r,
            Primitive::Stroke {
                x0,
                y0,
                x1,
                y1,
                width,
            } => {
                let (dx, dy) = (x1 - x0, y1 - y0);
                let len2 = dx * dx + dy * dy;
                let t = if len2 == 0.0 {
                    0.0
                } else {
                    (((px - x0) * dx + (py - y0) * dy) / len2).clamp(0.0, 1.0)
                };
                let (qx, qy) = (x0 + t * dx, y0 + t * dy);
                (px - qx).powi(2) + (py - qy).powi(2) <= (width / 2.0).powi(2)
            }
            Primitive::Rect { x, y, w, h } => px >= x && px < x + w && py >= y && py < y + h,
        }
    }
}

/// Figure size in pixels, plus its parts.
struct Silhouette {
    width: usize,
    height: usize,
    parts: Vec<Primitive>,
}

impl Silhouette {
    fn humanoid() -> Self {
        let parts = vec![
            Primitive::Disc {
                cx: 15.0,
                cy: 6.0,
                r: 6.0,
            },
            Primitive::Rect {
                x: 13.0,
                y: 11.0,
                w: 5.0,
                h: 5.0,
            },
            Primitive::Rect {
                x: 11.0,
                y: 15.0,
                w: 9.0,
                h: 32.0,
            },
            Primitive::Stroke {
                x0: 13.0,
                y0: 19.0,
                x1: 2.0,
                y1: 44.0,
                width: 4.0,
            },
            Primitive::Stroke {
                x0: 17.0,
                y0: 19.0,
                x1: 28.0,
                y1: 44.0,
                width: 4.0,
            },
            Primitive::Stroke {
                x0: 13.5,
                y0: 45.0,
                x1: 5.0,
                y1: 82.0,
                width: 5.0,
            },
            Primitive::Stroke {
                x0: 16.5,
                y0: 45.0,
                x1: 25.0,
                y1: 82.0,
                width: 5.0,
            },
        ];
        Self {
            width: 31,
            height: 85,
            parts,
        }
    }

    fn flat_box() -> Self {
        Self {
            width: 60,
            height: 20,
            parts: vec![Primitive::Rect {
                x: 0.0,
                y: 0.0,
                w: 60.0,
                h: 20.0,
            }],
        }
    }

    fn covers(&self, lx: usize, ly: usize) -> bool {
        let (px, py) = (lx as f64, ly as f64);
        self.parts.iter().any(|p| p.covers(px, py))
    }

    fn stamp(&self, img: &mut GrayImage, ox: usize, oy: usize) {
        for ly in 0..self.height {
            for lx in 0..self.width {
                if self.covers(lx, ly) {
                    img.set(ox + lx, oy + ly, OBJECT_LEVEL);
                }
            }
        }
    }
}

/// Builds a uniform background and `n_frames` frames with the object of
/// `kind` translated by `k * step` pixels in frame `k` (0-based).
///
/// Walks move in the direction their name says, using `|step|`; `static`
/// ignores `step`. The path is centred horizontally and the object centred
/// vertically.
pub fn generate_synthetic(
    kind: SyntheticKind,
    n_frames: usize,
    step: i64,
    dims: (usize, usize),
) -> Result<FrameSequence> {
    let (width, height) = dims;
    let (shape, step) = match kind {
        SyntheticKind::RightWalk => (Silhouette::humanoid(), step.abs()),
        SyntheticKind::LeftWalk => (Silhouette::humanoid(), -step.abs()),
        SyntheticKind::Static => (Silhouette::humanoid(), 0),
        SyntheticKind::NonHuman => (Silhouette::flat_box(), step),
    };
    let background = GrayImage::filled(width, height, BACKGROUND_LEVEL)?;
    let travel = step * n_frames.saturating_sub(1) as i64;
    let start = (width as i64 - shape.width as i64) / 2 - travel / 2;
    let oy = (height as i64 - shape.height as i64) / 2;
    let mut frames = Vec::with_capacity(n_frames);
    for k in 0..n_frames {
        let ox = start + k as i64 * step;
        if ox < 0 || oy < 0 || ox + shape.width as i64 > width as i64 || shape.height > height {
            return Err(Error::SilhouetteOutOfBounds {
                frame: k,
                width,
                height,
            });
        }
        let mut frame = background.clone();
        shape.stamp(&mut frame, ox as usize, oy as usize);
        frames.push(frame);
    }
    FrameSequence::new(background, frames)
}
