//! Independent reference implementations used as test oracles, plus random
//! input generators. Nothing here calls into the code under test except for
//! the plain image containers.

#![allow(dead_code)]

use rand::Rng;
use skeltrack::{BinaryImage, GrayImage};

/// Textbook single-pass Pearson: (nΣxy − ΣxΣy) / sqrt((nΣx² − (Σx)²)(nΣy² − (Σy)²)).
/// Integer sums are exact for the image sizes used here.
pub fn pearson_oracle(a: &[u8], b: &[u8]) -> Option<f64> {
    let n = a.len() as i128;
    let (mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0i128, 0i128, 0i128, 0i128, 0i128);
    for (&x, &y) in a.iter().zip(b) {
        let (x, y) = (x as i128, y as i128);
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    let num = n * sxy - sx * sy;
    let da = n * sxx - sx * sx;
    let db = n * syy - sy * sy;
    if da == 0 || db == 0 {
        return None;
    }
    Some(num as f64 / ((da as f64) * (db as f64)).sqrt())
}

/// Stack-based flood fill, 8-connectivity. Returns a label per pixel (0 = background)
/// and the pixel count per label (index 0 unused).
pub fn flood_fill_labels(mask: &BinaryImage) -> (Vec<usize>, Vec<usize>) {
    let (w, h) = mask.dimensions();
    let mut labels = vec![0usize; w * h];
    let mut sizes = vec![0usize];
    for y in 0..h {
        for x in 0..w {
            if !mask.get(x, y) || labels[y * w + x] != 0 {
                continue;
            }
            let label = sizes.len();
            sizes.push(0);
            let mut stack = vec![(x, y)];
            labels[y * w + x] = label;
            while let Some((cx, cy)) = stack.pop() {
                sizes[label] += 1;
                for dy in -1i64..=1 {
                    for dx in -1i64..=1 {
                        let (nx, ny) = (cx as i64 + dx, cy as i64 + dy);
                        if nx < 0 || ny < 0 || nx >= w as i64 || ny >= h as i64 {
                            continue;
                        }
                        let (nx, ny) = (nx as usize, ny as usize);
                        if mask.get(nx, ny) && labels[ny * w + nx] == 0 {
                            labels[ny * w + nx] = label;
                            stack.push((nx, ny));
                        }
                    }
                }
            }
        }
    }
    (labels, sizes)
}

pub fn component_count(mask: &BinaryImage) -> usize {
    flood_fill_labels(mask).1.len() - 1
}

/// Largest component with the documented tie-break, or None below `min_area`.
pub fn largest_component_oracle(mask: &BinaryImage, min_area: usize) -> Option<BinaryImage> {
    let (w, h) = mask.dimensions();
    let (labels, sizes) = flood_fill_labels(mask);
    let corner = |label: usize| {
        let (mut min_x, mut min_y) = (usize::MAX, usize::MAX);
        for y in 0..h {
            for x in 0..w {
                if labels[y * w + x] == label {
                    min_x = min_x.min(x);
                    min_y = min_y.min(y);
                }
            }
        }
        (min_y, min_x)
    };
    let mut best: Option<usize> = None;
    for label in 1..sizes.len() {
        if sizes[label] < min_area {
            continue;
        }
        best = match best {
            None => Some(label),
            Some(b) if sizes[label] > sizes[b] => Some(label),
            Some(b) if sizes[label] == sizes[b] && corner(label) < corner(b) => Some(label),
            keep => keep,
        };
    }
    let best = best?;
    let mut out = BinaryImage::new(w, h);
    for y in 0..h {
        for x in 0..w {
            if labels[y * w + x] == best {
                out.set(x, y, true);
            }
        }
    }
    Some(out)
}

/// Counts white 8-neighbours by explicit enumeration.
pub fn neighbours_oracle(mask: &BinaryImage, x: usize, y: usize) -> usize {
    let (w, h) = mask.dimensions();
    let mut n = 0;
    for ny in y.saturating_sub(1)..=(y + 1).min(h - 1) {
        for nx in x.saturating_sub(1)..=(x + 1).min(w - 1) {
            if (nx, ny) != (x, y) && mask.get(nx, ny) {
                n += 1;
            }
        }
    }
    n
}

/// Mean pixel position over all white pixels.
pub fn pixel_mean(mask: &BinaryImage) -> (f64, f64) {
    let (mut sx, mut sy, mut n) = (0.0, 0.0, 0.0);
    for y in 0..mask.height() {
        for x in 0..mask.width() {
            if mask.get(x, y) {
                sx += x as f64;
                sy += y as f64;
                n += 1.0;
            }
        }
    }
    (sx / n, sy / n)
}

/// (min_x, min_y, max_x, max_y) by full scan.
pub fn bbox_oracle(mask: &BinaryImage) -> Option<(usize, usize, usize, usize)> {
    let mut b: Option<(usize, usize, usize, usize)> = None;
    for y in 0..mask.height() {
        for x in 0..mask.width() {
            if mask.get(x, y) {
                b = Some(match b {
                    None => (x, y, x, y),
                    Some((a, c, d, e)) => (a.min(x), c.min(y), d.max(x), e.max(y)),
                });
            }
        }
    }
    b
}

/// Lengths of every endpoint-to-fork path, walking pixel by pixel.
pub fn terminal_branch_lengths(skel: &BinaryImage) -> Vec<usize> {
    let mut out = Vec::new();
    for y in 0..skel.height() {
        for x in 0..skel.width() {
            if !skel.get(x, y) || neighbours_oracle(skel, x, y) != 1 {
                continue;
            }
            let mut visited = vec![(x, y)];
            let mut cur = (x, y);
            loop {
                let next: Vec<(usize, usize)> = white_around(skel, cur)
                    .into_iter()
                    .filter(|p| !visited.contains(p))
                    .collect();
                if next.len() != 1 {
                    break;
                }
                let n = next[0];
                let deg = neighbours_oracle(skel, n.0, n.1);
                if deg > 2 {
                    out.push(visited.len());
                    break;
                }
                if deg != 2 {
                    break;
                }
                visited.push(n);
                cur = n;
            }
        }
    }
    out
}

fn white_around(m: &BinaryImage, (x, y): (usize, usize)) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for ny in y.saturating_sub(1)..=(y + 1).min(m.height() - 1) {
        for nx in x.saturating_sub(1)..=(x + 1).min(m.width() - 1) {
            if (nx, ny) != (x, y) && m.get(nx, ny) {
                v.push((nx, ny));
            }
        }
    }
    v
}

pub fn random_gray<R: Rng>(rng: &mut R, w: usize, h: usize) -> GrayImage {
    GrayImage::from_pixels(w, h, (0..w * h).map(|_| rng.gen()).collect()).unwrap()
}

/// Union of random discs and rectangles, sometimes with speckle, in a frame
/// of at most 64×64.
pub fn random_blob<R: Rng>(rng: &mut R) -> BinaryImage {
    let w = rng.gen_range(8..=64);
    let h = rng.gen_range(8..=64);
    let mut m = BinaryImage::new(w, h);
    for _ in 0..rng.gen_range(1..=5) {
        if rng.gen_bool(0.5) {
            let cx = rng.gen_range(0..w) as f64;
            let cy = rng.gen_range(0..h) as f64;
            let r = rng.gen_range(1.0..(w.min(h) as f64 / 2.0).max(1.5));
            for y in 0..h {
                for x in 0..w {
                    if (x as f64 - cx).powi(2) + (y as f64 - cy).powi(2) <= r * r {
                        m.set(x, y, true);
                    }
                }
            }
        } else {
            let x0 = rng.gen_range(0..w);
            let y0 = rng.gen_range(0..h);
            let x1 = rng.gen_range(x0..w);
            let y1 = rng.gen_range(y0..h);
            for y in y0..=y1 {
                for x in x0..=x1 {
                    m.set(x, y, true);
                }
            }
        }
    }
    if rng.gen_bool(0.3) {
        for _ in 0..(w * h / 20) {
            let (x, y) = (rng.gen_range(0..w), rng.gen_range(0..h));
            m.set(x, y, !m.get(x, y));
        }
    }
    if m.is_empty() {
        m.set(w / 2, h / 2, true);
    }
    m
}
