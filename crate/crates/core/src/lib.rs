//! Human presence detection and lateral movement alerts for fixed-camera
//! frame sequences.
//!
//! Each frame is compared against a static background. When the correlation
//! gate opens, the binary difference mask is reduced to the skeleton of its
//! dominant object, the skeleton points are classified, a humanoid score is
//! computed, and for human-shaped objects the horizontal centre of gravity of
//! the skeleton is tracked from frame to frame. A shift of more than the
//! movement threshold raises a LEFT or RIGHT alarm.
//!
//! ```no_run
//! use skeltrack::{frame_io, pipeline::{Pipeline, PipelineConfig}};
//!
//! let seq = frame_io::load_sequence("background.pgm", "frames/")?;
//! let reports = Pipeline::new(PipelineConfig::default())?.run(&seq);
//! for r in reports.iter().filter(|r| r.is_alarm()) {
//!     println!("{}", r.alert_line().unwrap());
//! }
//! # Ok::<(), skeltrack::Error>(())
//! ```

pub mod change_gate;
pub mod classifier;
mod error;
pub mod features;
pub mod frame_io;
mod image;
pub mod pipeline;
pub mod skeletonizer;
pub mod tracker;

pub use error::{Error, Result};
pub use image::{BinaryImage, BoundingBox, GrayImage, Point};
