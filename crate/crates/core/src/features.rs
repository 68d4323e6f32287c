//! Skeleton point taxonomy: endpoints, fork points and branch points.

use crate::error::{Error, Result};
use crate::image::{BinaryImage, BoundingBox, Point};

/// Classified skeleton pixels plus the box of the foreground object they came from.
#[derive(Clone, Debug, PartialEq)]
pub struct SkeletonFeatures {
    /// One white neighbour, or none for an isolated pixel.
    pub endpoints: Vec<Point>,
    /// More than two white neighbours.
    pub fork_points: Vec<Point>,
    /// Exactly two white neighbours.
    pub branch_points: Vec<Point>,
    pub bbox: BoundingBox,
}

impl SkeletonFeatures {
    /// Total number of classified points (every skeleton pixel).
    pub fn len(&self) -> usize {
        self.endpoints.len() + self.fork_points.len() + self.branch_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All major points: endpoints, then forks, then branch points.
    pub fn all_points(&self) -> impl Iterator<Item = &Point> {
        self.endpoints
            .iter()
            .chain(&self.fork_points)
            .chain(&self.branch_points)
    }
}

/// Buckets every white skeleton pixel by its 8-neighbour count.
///
/// An isolated pixel counts as an endpoint so that the three lists always
/// partition the skeleton.
pub fn classify_points(skeleton: &BinaryImage, bbox: BoundingBox) -> Result<SkeletonFeatures> {
    let mut features = SkeletonFeatures {
        endpoints: Vec::new(),
        fork_points: Vec::new(),
        branch_points: Vec::new(),
        bbox,
    };
    for p in skeleton.white_points() {
        match skeleton.neighbour_count(p.x, p.y) {
            0 | 1 => features.endpoints.push(p),
            2 => features.branch_points.push(p),
            _ => features.fork_points.push(p),
        }
    }
    if features.is_empty() {
        return Err(Error::EmptySkeleton);
    }
    Ok(features)
}

pub fn bounding_box(mask: &BinaryImage) -> Result<BoundingBox> {
    let mut points = mask.white_points();
    let first = points.next().ok_or(Error::EmptyMask)?;
    Ok(points.fold(
        BoundingBox {
            min_x: first.x,
            min_y: first.y,
            max_x: first.x,
            max_y: first.y,
        },
        |b, p| BoundingBox {
            min_x: b.min_x.min(p.x),
            min_y: b.min_y.min(p.y),
            max_x: b.max_x.max(p.x),
            max_y: b.max_y.max(p.y),
        },
    ))
}
