//! Feeds two recorded cgx series through the tracker and prints the
//! measurement table with alarms.
//!
//! ```bash
//! cargo run -p skeltrack --example replay_cgx_tables
//! ```

use skeltrack::tracker::{Tracker, TrackerConfig};

fn main() -> skeltrack::Result<()> {
    let series = [
        (
            "moving right",
            [
                (165.6071, 47.8929),
                (179.6957, 50.2174),
                (189.5417, 45.9167),
                (198.1579, 59.7105),
            ],
        ),
        (
            "moving left",
            [
                (200.6286, 97.1714),
                (190.6053, 75.3421),
                (184.8421, 68.0789),
                (168.8750, 53.7917),
            ],
        ),
    ];
    for (name, rows) in series {
        println!("{name}");
        println!("  frame       cgx       cgy  cgx_prev   cgx_new  cgx_diff  direction");
        let mut tracker = Tracker::new(TrackerConfig::default());
        for (i, (cgx, cgy)) in rows.into_iter().enumerate() {
            let e = tracker.update(cgx, cgy)?;
            let diff = e.cgx_diff.map_or("NIL".to_string(), |d| format!("{d:.4}"));
            let alarm = if e.direction.is_alarm() {
                "  ALARM"
            } else {
                ""
            };
            println!(
                "  {:>5} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>9} {:>10}{alarm}",
                i + 1,
                e.cgx,
                e.cgy,
                e.cgx_prev,
                e.cgx_new,
                diff,
                e.direction
            );
        }
    }
    Ok(())
}
