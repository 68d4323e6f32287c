//! Loading a key=value configuration and seeing its effect on alarms.
//!
//! ```bash
//! cargo run -p skeltrack --example custom_config
//! ```

use skeltrack::pipeline::{generate_synthetic, Pipeline, PipelineConfig, SyntheticKind};

fn main() -> skeltrack::Result<()> {
    let seq = generate_synthetic(SyntheticKind::RightWalk, 4, 6, (160, 120))?;

    let text = "\
# a camera mounted further away: demand bigger shifts
movement_threshold=10
prune_length=6
";
    for (name, cfg) in [
        ("defaults", PipelineConfig::default()),
        ("custom", PipelineConfig::from_config_str(text)?),
    ] {
        let reports = Pipeline::new(cfg)?.run(&seq);
        let dirs: Vec<_> = reports
            .iter()
            .map(|r| r.direction.map_or("-", |d| d.as_str()))
            .collect();
        println!("{name:>8}: {}", dirs.join(" "));
    }

    println!(
        "\nfull default configuration:\n{}",
        PipelineConfig::default().to_config_string()
    );

    match PipelineConfig::from_config_str("movment_threshold=5") {
        Err(e) => println!("typo caught: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
