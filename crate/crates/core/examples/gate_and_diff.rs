//! Correlation gate and DIFF mask on a hand-built background/frame pair.
//!
//! ```bash
//! cargo run -p skeltrack --example gate_and_diff
//! ```

use skeltrack::change_gate::{correlation, diff_image, gate, GateConfig};
use skeltrack::GrayImage;

fn main() -> skeltrack::Result<()> {
    // textured background so the correlation is meaningful
    let (w, h) = (48, 32);
    let px = (0..w * h)
        .map(|i| ((i % w) * 3 + (i / w) * 2) as u8)
        .collect();
    let background = GrayImage::from_pixels(w, h, px)?;
    let cfg = GateConfig::default();

    let mut small = background.clone();
    small.set(10, 10, 255);

    // low-amplitude sensor noise everywhere, then a bright object
    let mut intruder = background.clone();
    for y in 0..h {
        for x in 0..w {
            if (x * 7 + y * 3) % 5 == 0 {
                intruder.set(x, y, background.get(x, y).saturating_add(6));
            }
        }
    }
    for y in 4..28 {
        for x in 20..28 {
            intruder.set(x, y, 250);
        }
    }

    for (name, frame) in [
        ("unchanged", &background),
        ("one pixel", &small),
        ("intruder", &intruder),
    ] {
        let r = correlation(&background, frame)?;
        match gate(&background, frame, &cfg)? {
            None => println!(
                "{name:>10}: r = {r:.4} >= {} -> no change",
                cfg.correlation_threshold
            ),
            Some(mask) => println!(
                "{name:>10}: r = {r:.4} -> DIFF with {} white pixels",
                mask.count_white()
            ),
        }
    }

    let noisy = GateConfig {
        pixel_delta_threshold: 30,
        ..cfg
    };
    let strict = diff_image(&background, &intruder, &cfg)?.count_white();
    let tolerant = diff_image(&background, &intruder, &noisy)?.count_white();
    println!("DIFF pixels: {strict} at delta 0, {tolerant} at delta 30");
    Ok(())
}
