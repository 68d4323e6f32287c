use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use skeltrack::frame_io;
use skeltrack::pipeline::{self, Pipeline, PipelineConfig, SyntheticKind};

#[derive(Parser)]
#[command(version, about = "Skeleton-based human presence and movement alerts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Process a background image and a directory of frames.
    Run {
        #[arg(long)]
        background: PathBuf,
        /// Frames are read in lexicographic file-name order.
        #[arg(long)]
        frames: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        alerts: PathBuf,
        /// key=value file overriding the defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write DIFF masks and skeletons for every frame here.
        #[arg(long)]
        dump_intermediates: Option<PathBuf>,
    },
    /// Write a synthetic background plus frame sequence.
    Synth {
        /// right_walk, left_walk, static or non_human
        #[arg(long)]
        kind: SyntheticKind,
        #[arg(long)]
        frames: usize,
        #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
        step: i64,
        /// Frame size as WxH.
        #[arg(long, default_value = "160x120")]
        size: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_size(s: &str) -> Result<(usize, usize)> {
    let Some((w, h)) = s.split_once(['x', 'X']) else {
        bail!("size must look like 160x120, got {s:?}");
    };
    Ok((w.trim().parse()?, h.trim().parse()?))
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run {
            background,
            frames,
            out,
            alerts,
            config,
            dump_intermediates,
        } => {
            let cfg = match config {
                Some(path) => PipelineConfig::load(&path)
                    .with_context(|| format!("loading config {}", path.display()))?,
                None => PipelineConfig::default(),
            };
            let seq = frame_io::load_sequence(&background, &frames)?;
            let pipeline = Pipeline::new(cfg)?;
            let reports = match dump_intermediates {
                Some(dir) => pipeline.run_with_dump(&seq, &dir)?,
                None => pipeline.run(&seq),
            };
            pipeline::write_csv(&reports, &out)?;
            pipeline::write_alert_log(&reports, &alerts)?;
            for r in &reports {
                if let pipeline::FrameStatus::Failed(msg) = &r.status {
                    eprintln!("warning: {msg}");
                }
                if let Some(line) = r.alert_line() {
                    println!("ALARM {line}");
                }
            }
            eprintln!(
                "processed {} frames at nominal {} fps, {} alarms",
                reports.len(),
                seq.nominal_fps,
                reports.iter().filter(|r| r.is_alarm()).count()
            );
        }
        Command::Synth {
            kind,
            frames,
            step,
            size,
            out,
        } => {
            let seq = pipeline::generate_synthetic(kind, frames, step, parse_size(&size)?)?;
            let frame_dir = out.join("frames");
            fs::create_dir_all(&frame_dir)
                .with_context(|| format!("creating {}", frame_dir.display()))?;
            frame_io::write_gray(&seq.background, out.join("background.pgm"))?;
            for (i, f) in seq.frames.iter().enumerate() {
                frame_io::write_gray(f, frame_dir.join(format!("frame_{:04}.pgm", i + 1)))?;
            }
            eprintln!(
                "wrote {} frames to {}",
                seq.frames.len(),
                frame_dir.display()
            );
        }
    }
    Ok(())
}
