//! File-based workflow: PGM frames on disk in, CSV report, alert log and
//! intermediate masks out. Without arguments a synthetic sequence is written
//! to a temporary directory first.
//!
//! ```bash
//! cargo run -p skeltrack --example process_directory
//! cargo run -p skeltrack --example process_directory -- background.pgm frames/ out/
//! ```

use std::path::PathBuf;

use skeltrack::frame_io::{load_sequence, write_gray};
use skeltrack::pipeline::{
    generate_synthetic, write_alert_log, write_csv, Pipeline, PipelineConfig, SyntheticKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    let (background, frames, out) = match args.as_slice() {
        [b, f, o] => (b.clone(), f.clone(), o.clone()),
        [] => {
            let root = std::env::temp_dir().join("skeltrack-example");
            let frames = root.join("frames");
            std::fs::create_dir_all(&frames)?;
            let seq = generate_synthetic(SyntheticKind::RightWalk, 5, 9, (160, 120))?;
            write_gray(&seq.background, root.join("background.pgm"))?;
            for (i, f) in seq.frames.iter().enumerate() {
                write_gray(f, frames.join(format!("frame_{:04}.pgm", i + 1)))?;
            }
            (root.join("background.pgm"), frames, root.join("out"))
        }
        _ => {
            return Err("usage: process_directory [<background.pgm> <frames dir> <out dir>]".into())
        }
    };

    let seq = load_sequence(&background, &frames)?;
    println!(
        "loaded {} frames ({} fps nominal)",
        seq.frames.len(),
        seq.nominal_fps
    );
    let reports = Pipeline::new(PipelineConfig::default())?
        .run_with_dump(&seq, &out.join("intermediates"))?;
    write_csv(&reports, out.join("report.csv"))?;
    write_alert_log(&reports, out.join("alerts.log"))?;
    for r in &reports {
        println!(
            "frame {}: {}",
            r.frame_no,
            r.alert_line().unwrap_or_else(|| r.status.tag().to_string())
        );
    }
    println!("outputs in {}", out.display());
    Ok(())
}
