//! Humanoid scoring of the synthetic stick figure versus a flat box.
//!
//! ```bash
//! cargo run -p skeltrack --example classify_silhouettes
//! ```

use skeltrack::change_gate::diff_image;
use skeltrack::classifier::{score, score_measurements, ClassifierConfig};
use skeltrack::features::{bounding_box, classify_points};
use skeltrack::pipeline::{generate_synthetic, SyntheticKind};
use skeltrack::skeletonizer::skeletonize;

fn main() -> skeltrack::Result<()> {
    let cfg = ClassifierConfig::default();
    for kind in [SyntheticKind::Static, SyntheticKind::NonHuman] {
        let seq = generate_synthetic(kind, 1, 0, (160, 120))?;
        let mask = diff_image(&seq.background, &seq.frames[0], &Default::default())?;
        let skeleton = skeletonize(&mask, &Default::default()).expect("object present");
        let features = classify_points(&skeleton, bounding_box(&mask)?)?;
        let v = score(&features, &cfg)?;
        println!(
            "{kind:>10}: ratio {:.2}, {} fork px -> final_score {:.1} ({})",
            v.ratio,
            v.fork_count,
            v.final_score,
            if v.is_human { "human" } else { "not human" }
        );
    }

    println!("\nscore table for a 100 px tall box:");
    for width in [20.0, 40.0, 60.0, 120.0] {
        for forks in [0, 2] {
            let v = score_measurements(100.0, width, forks, &cfg)?;
            println!("  width {width:>5}, forks {forks}: {:.1}", v.final_score);
        }
    }
    Ok(())
}
