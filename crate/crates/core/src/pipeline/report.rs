use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{FrameReport, FrameStatus};
use crate::error::{Error, Result};
use crate::tracker::Direction;

pub const CSV_HEADER: &str =
    "frame_no,changed,final_score,cgx,cgy,cgx_prev,cgx_new,cgx_diff,direction";

fn num(v: Option<f64>) -> String {
    v.map(|v| format!("{v:.4}")).unwrap_or_default()
}

/// Header plus one row per report. Numbers carry 4 decimals, skipped
/// measurements are empty, and the first tracked frame's diff is `NIL`.
pub fn csv_report(reports: &[FrameReport]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let diff = match (r.direction, r.cgx_diff) {
            (Some(Direction::FirstFrame), _) => "NIL".to_string(),
            (_, d) => num(d),
        };
        let direction = match (&r.status, r.direction) {
            (FrameStatus::Tracked, Some(d)) => d.as_str(),
            (s, _) => s.tag(),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.frame_no,
            r.changed,
            num(r.final_score),
            num(r.cgx),
            num(r.cgy),
            num(r.cgx_prev),
            num(r.cgx_new),
            diff,
            direction
        )
        .expect("writing to a String");
    }
    out
}

/// One line per alarm.
pub fn alert_log(reports: &[FrameReport]) -> String {
    reports
        .iter()
        .filter_map(FrameReport::alert_line)
        .map(|l| l + "\n")
        .collect()
}

pub fn write_csv(reports: &[FrameReport], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, csv_report(reports)).map_err(|e| Error::io(path, e))
}

pub fn write_alert_log(reports: &[FrameReport], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, alert_log(reports)).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tracked(frame_no: usize, cgx: f64, prev: f64, dir: Direction) -> FrameReport {
        FrameReport {
            frame_no,
            changed: true,
            status: FrameStatus::Tracked,
            final_score: Some(1.4),
            is_human: Some(true),
            ratio: Some(2.5),
            fork_count: Some(2),
            cgx: Some(cgx),
            cgy: Some(50.0),
            cgx_prev: Some(prev),
            cgx_new: Some(cgx),
            cgx_diff: (dir != Direction::FirstFrame).then_some(cgx - prev),
            direction: Some(dir),
        }
    }

    #[test]
    fn rows_and_alerts() {
        let reports = vec![
            tracked(1, 200.6286, 0.0, Direction::FirstFrame),
            tracked(2, 190.6053, 200.6286, Direction::Left),
            FrameReport::empty(3, false, FrameStatus::Unchanged),
        ];
        let csv = csv_report(&reports);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(
            lines[1],
            "1,true,1.4000,200.6286,50.0000,0.0000,200.6286,NIL,FIRST_FRAME"
        );
        assert_eq!(
            lines[2],
            "2,true,1.4000,190.6053,50.0000,200.6286,190.6053,-10.0233,LEFT"
        );
        assert_eq!(lines[3], "3,false,,,,,,,NO_CHANGE");
        assert_eq!(
            alert_log(&reports),
            "frame=2 direction=LEFT cgx_diff=-10.0233\n"
        );
    }
}
