//! Background comparison: a correlation gate decides whether a frame differs
//! from the static background, and the DIFF mask marks the pixels that do.

use crate::error::{Error, Result};
use crate::image::{BinaryImage, GrayImage};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GateConfig {
    /// Frames correlating at or above this with the background count as unchanged.
    pub correlation_threshold: f64,
    /// A pixel is white in the DIFF mask when `|frame - background|` exceeds this.
    pub pixel_delta_threshold: u8,
}

impl Default for GateConfig {
    fn default() -> Self {
        Self {
            correlation_threshold: 0.95,
            pixel_delta_threshold: 0,
        }
    }
}

impl GateConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.correlation_threshold) {
            return Err(Error::InvalidConfig(format!(
                "correlation_threshold {} outside [0, 1]",
                self.correlation_threshold
            )));
        }
        Ok(())
    }
}

fn check_dims(a: &GrayImage, b: &GrayImage) -> Result<()> {
    if a.dimensions() != b.dimensions() {
        return Err(Error::mismatch(a.dimensions(), b.dimensions()));
    }
    Ok(())
}

/// Pearson correlation of two equal-length real vectors, or `None` when
/// either has zero variance.
pub fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    assert_eq!(a.len(), b.len(), "pearson needs equal-length inputs");
    let n = a.len() as f64;
    let mean_a = a.iter().sum::<f64>() / n;
    let mean_b = b.iter().sum::<f64>() / n;
    let (mut cov, mut var_a, mut var_b) = (0.0, 0.0, 0.0);
    for (&pa, &pb) in a.iter().zip(b) {
        let (da, db) = (pa - mean_a, pb - mean_b);
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if var_a == 0.0 || var_b == 0.0 {
        return None;
    }
    Some((cov / (var_a.sqrt() * var_b.sqrt())).clamp(-1.0, 1.0))
}

/// Pearson correlation of the two images as flat pixel vectors.
///
/// Constant images have no variance. Two equal constants correlate at 1.0;
/// any other case with a constant image yields 0.0.
pub fn correlation(a: &GrayImage, b: &GrayImage) -> Result<f64> {
    check_dims(a, b)?;
    let as_f64 = |img: &GrayImage| {
        img.pixels()
            .iter()
            .map(|&v| f64::from(v))
            .collect::<Vec<_>>()
    };
    Ok(match pearson(&as_f64(a), &as_f64(b)) {
        Some(r) => r,
        None if a.pixels()[0] == b.pixels()[0]
            && a.pixels()
                .iter()
                .chain(b.pixels())
                .all(|&v| v == a.pixels()[0]) =>
        {
            1.0
        }
        None => 0.0,
    })
}

/// White wherever the two images differ by more than the configured delta.
pub fn diff_image(
    background: &GrayImage,
    frame: &GrayImage,
    cfg: &GateConfig,
) -> Result<BinaryImage> {
    check_dims(background, frame)?;
    let pixels = background
        .pixels()
        .iter()
        .zip(frame.pixels())
        .map(|(&b, &f)| b.abs_diff(f) > cfg.pixel_delta_threshold)
        .collect();
    BinaryImage::from_pixels(background.width(), background.height(), pixels)
}

/// `None` when the frame correlates with the background at or above the
/// threshold, otherwise the DIFF mask.
pub fn gate(
    background: &GrayImage,
    frame: &GrayImage,
    cfg: &GateConfig,
) -> Result<Option<BinaryImage>> {
    if correlation(background, frame)? >= cfg.correlation_threshold {
        return Ok(None);
    }
    diff_image(background, frame, cfg).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img(w: usize, h: usize, px: &[u8]) -> GrayImage {
        GrayImage::from_pixels(w, h, px.to_vec()).unwrap()
    }

    #[test]
    fn self_and_inverse_correlation() {
        let a = img(3, 2, &[0, 10, 20, 200, 90, 7]);
        let inv = img(
            3,
            2,
            &a.pixels().iter().map(|&v| 255 - v).collect::<Vec<_>>(),
        );
        assert!((correlation(&a, &a).unwrap() - 1.0).abs() < 1e-12);
        assert!((correlation(&a, &inv).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn textbook_value() {
        // cov 6.5, sum sq 5 and 8.75: r = 6.5 / sqrt(43.75)
        let r = correlation(&img(2, 2, &[1, 2, 3, 4]), &img(2, 2, &[1, 2, 3, 5])).unwrap();
        assert!((r - 0.982_707_629_823_990_8).abs() < 1e-12);
    }

    #[test]
    fn zero_variance_conventions() {
        let z = img(2, 1, &[0, 0]);
        let c = img(2, 1, &[7, 7]);
        let v = img(2, 1, &[0, 9]);
        assert_eq!(correlation(&z, &z).unwrap(), 1.0);
        assert_eq!(correlation(&z, &c).unwrap(), 0.0);
        assert_eq!(correlation(&z, &v).unwrap(), 0.0);
        assert_eq!(correlation(&v, &c).unwrap(), 0.0);
    }

    #[test]
    fn dimension_mismatch() {
        let a = img(2, 1, &[0, 0]);
        let b = img(1, 2, &[0, 0]);
        assert!(matches!(
            correlation(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(diff_image(&a, &b, &GateConfig::default()).is_err());
        assert!(gate(&a, &b, &GateConfig::default()).is_err());
    }

    #[test]
    fn diff_single_pixel() {
        let bg = GrayImage::filled(3, 2, 10).unwrap();
        let mut fr = bg.clone();
        fr.set(1, 0, 200);
        let d = diff_image(&bg, &fr, &GateConfig::default()).unwrap();
        assert_eq!(
            d.white_points().collect::<Vec<_>>(),
            vec![crate::Point::new(1, 0)]
        );
        assert!(diff_image(&bg, &bg, &GateConfig::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn gate_behaviour() {
        let cfg = GateConfig::default();
        let bg = GrayImage::filled(8, 6, 50).unwrap();
        assert!(gate(&bg, &bg, &cfg).unwrap().is_none());

        let mut fr = bg.clone();
        for y in 0..6 {
            for x in 0..4 {
                fr.set(x, y, 200);
            }
        }
        // constant background: correlation 0 by convention
        assert_eq!(correlation(&bg, &fr).unwrap(), 0.0);
        let mask = gate(&bg, &fr, &cfg).unwrap().expect("gate open");
        for y in 0..6 {
            for x in 0..8 {
                assert_eq!(mask.get(x, y), x < 4);
            }
        }
    }

    #[test]
    fn threshold_one_opens_on_any_change() {
        let cfg = GateConfig {
            correlation_threshold: 1.0,
            ..GateConfig::default()
        };
        let bg = img(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let mut fr = bg.clone();
        fr.set(2, 2, 10);
        assert!(correlation(&bg, &fr).unwrap() < 1.0);
        assert!(gate(&bg, &fr, &cfg).unwrap().is_some());
    }

    #[test]
    fn config_validation() {
        assert!(GateConfig::default().validate().is_ok());
        let bad = GateConfig {
            correlation_threshold: 1.5,
            ..GateConfig::default()
        };
        assert!(bad.validate().is_err());
    }
}
