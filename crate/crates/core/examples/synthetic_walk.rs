//! End-to-end run over synthetic walks; prints the CSV and the alert log.
//!
//! ```bash
//! cargo run -p skeltrack --example synthetic_walk -- left_walk 6 7
//! ```

use skeltrack::pipeline::{
    alert_log, csv_report, generate_synthetic, Pipeline, PipelineConfig, SyntheticKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let kind: SyntheticKind = args.next().as_deref().unwrap_or("right_walk").parse()?;
    let frames: usize = args.next().map_or(Ok(4), |a| a.parse())?;
    let step: i64 = args.next().map_or(Ok(8), |a| a.parse())?;

    let seq = generate_synthetic(kind, frames, step, (200, 120))?;
    let reports = Pipeline::new(PipelineConfig::default())?.run(&seq);
    print!("{}", csv_report(&reports));
    println!("--- alerts ---");
    print!("{}", alert_log(&reports));
    Ok(())
}
