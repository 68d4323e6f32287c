//! Reduces a DIFF mask to a pruned, one-pixel-wide skeleton of its dominant object.
//!
//! The chain is [`largest_component`] → [`thin`] → [`prune`]. Everything uses
//! 8-connectivity for the foreground.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::image::{BinaryImage, BoundingBox, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeletonConfig {
    /// Components smaller than this are treated as noise.
    pub min_blob_area: usize,
    /// Terminal branches shorter than this many pixels are removed.
    pub prune_length: usize,
    /// Iteration cap for thinning; `None` means width + height.
    pub max_thinning_passes: Option<usize>,
}

impl Default for SkeletonConfig {
    fn default() -> Self {
        Self {
            min_blob_area: 64,
            prune_length: 10,
            max_thinning_passes: None,
        }
    }
}

impl SkeletonConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_blob_area == 0 {
            return Err(Error::InvalidConfig(
                "min_blob_area must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// One 8-connected group of white pixels.
#[derive(Clone, Debug)]
pub struct Component {
    pub pixels: Vec<Point>,
    pub bbox: BoundingBox,
}

/// All 8-connected components, in raster order of their first pixel.
pub fn components(mask: &BinaryImage) -> Vec<Component> {
    let (w, h) = mask.dimensions();
    let mut seen = vec![false; w * h];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in mask.white_points() {
        if seen[start.y * w + start.x] {
            continue;
        }
        seen[start.y * w + start.x] = true;
        queue.push_back(start);
        let mut pixels = Vec::new();
        let mut bbox = BoundingBox {
            min_x: start.x,
            min_y: start.y,
            max_x: start.x,
            max_y: start.y,
        };
        while let Some(p) = queue.pop_front() {
            bbox.min_x = bbox.min_x.min(p.x);
            bbox.max_x = bbox.max_x.max(p.x);
            bbox.min_y = bbox.min_y.min(p.y);
            bbox.max_y = bbox.max_y.max(p.y);
            pixels.push(p);
            for q in mask.white_neighbours(p) {
                if !seen[q.y * w + q.x] {
                    seen[q.y * w + q.x] = true;
                    queue.push_back(q);
                }
            }
        }
        pixels.sort_unstable_by_key(|p| (p.y, p.x));
        out.push(Component { pixels, bbox });
    }
    out
}

/// The largest 8-connected component with at least `min_blob_area` pixels.
///
/// Equal areas are resolved by the smaller top-left bounding-box corner,
/// compared as `(min_y, min_x)`.
pub fn largest_component(mask: &BinaryImage, cfg: &SkeletonConfig) -> Option<BinaryImage> {
    let best = components(mask)
        .into_iter()
        .filter(|c| c.pixels.len() >= cfg.min_blob_area)
        .min_by(|a, b| {
            b.pixels
                .len()
                .cmp(&a.pixels.len())
                .then((a.bbox.min_y, a.bbox.min_x).cmp(&(b.bbox.min_y, b.bbox.min_x)))
        })?;
    let mut out = BinaryImage::new(mask.width(), mask.height());
    for p in best.pixels {
        out.set(p.x, p.y, true);
    }
    Some(out)
}

/// Yokoi connectivity number for 8-connected foreground. A white pixel whose
/// number is 1 can be removed without changing the topology.
fn connectivity_number(n: &[bool; 8]) -> u32 {
    let bg = |i: usize| u32::from(!n[i % 8]);
    [0, 2, 4, 6]
        .iter()
        .map(|&k| bg(k) - bg(k) * bg(k + 1) * bg(k + 2))
        .sum()
}

// Neighbourhood indices, see NEIGHBOURS_8.
const E: usize = 0;
const N: usize = 2;
const W: usize = 4;
const S: usize = 6;

fn is_candidate(n: &[bool; 8], pass: usize) -> bool {
    let count = n.iter().filter(|&&v| v).count();
    if count < 2 || connectivity_number(n) != 1 {
        return false;
    }
    if pass == 0 {
        !(n[N] && n[E] && n[S]) && !(n[E] && n[S] && n[W])
    } else {
        !(n[N] && n[E] && n[W]) && !(n[N] && n[S] && n[W])
    }
}

/// Two-subiteration thinning to a one-pixel-wide skeleton.
///
/// Each subiteration marks border pixels on a snapshot (south-east borders
/// first, then north-west, as in Zhang-Suen), then deletes the marked pixels
/// one at a time in raster order, skipping any that stopped being simple.
/// Every deletion removes a simple point, so connectivity is preserved, and
/// the result is a fixed point of the procedure.
pub fn thin(mask: &BinaryImage) -> Result<BinaryImage> {
    thin_with_cap(mask, None)
}

pub fn thin_with_cap(mask: &BinaryImage, max_passes: Option<usize>) -> Result<BinaryImage> {
    if mask.is_empty() {
        return Err(Error::EmptyMask);
    }
    let cap = max_passes.unwrap_or(mask.width() + mask.height());
    let mut img = mask.clone();
    let mut marked = Vec::new();
    for _ in 0..cap {
        let mut changed = false;
        for pass in 0..2 {
            marked.clear();
            marked.extend(
                img.white_points()
                    .filter(|p| is_candidate(&img.neighbourhood(p.x, p.y), pass)),
            );
            for p in &marked {
                if connectivity_number(&img.neighbourhood(p.x, p.y)) == 1 {
                    img.set(p.x, p.y, false);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(img)
}

/// Pixels from an endpoint up to, not including, the first fork pixel.
fn terminal_branch(skel: &BinaryImage, end: Point) -> Option<Vec<Point>> {
    let mut path = vec![end];
    let mut prev: Option<Point> = None;
    let mut cur = end;
    loop {
        let next: Vec<Point> = skel
            .white_neighbours(cur)
            .filter(|&q| Some(q) != prev && !path.contains(&q))
            .collect();
        let [step] = next[..] else {
            return None;
        };
        match skel.neighbour_count(step.x, step.y) {
            2 => {
                prev = Some(cur);
                cur = step;
                path.push(cur);
            }
            n if n > 2 => return Some(path),
            // reached the other end of a fork-free path
            _ => return None,
        }
    }
}

/// Removes terminal branches shorter than `prune_length`, shortest first,
/// until none remain. Skeletons without fork points are left alone.
pub fn prune(skeleton: &BinaryImage, cfg: &SkeletonConfig) -> BinaryImage {
    let mut skel = skeleton.clone();
    if cfg.prune_length == 0 {
        return skel;
    }
    loop {
        let shortest = skel
            .white_points()
            .filter(|p| skel.neighbour_count(p.x, p.y) == 1)
            .filter_map(|p| terminal_branch(&skel, p))
            .filter(|b| b.len() < cfg.prune_length)
            .min_by_key(|b| (b.len(), b[0].y, b[0].x));
        let Some(branch) = shortest else {
            return skel;
        };
        for p in branch {
            skel.set(p.x, p.y, false);
        }
    }
}

/// Full chain: dominant component, thinning, spur pruning.
pub fn skeletonize(mask: &BinaryImage, cfg: &SkeletonConfig) -> Option<BinaryImage> {
    let object = largest_component(mask, cfg)?;
    let thinned = thin_with_cap(&object, cfg.max_thinning_passes).ok()?;
    Some(prune(&thinned, cfg))
}
