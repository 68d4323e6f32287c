//! Binary PGM (P5, maxval 255) reading and writing, and frame sequence loading.
//!
//! Masks share the grayscale container: white is written as 255 and any
//! non-zero byte reads back as white.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::image::{BinaryImage, GrayImage};

/// Frame rate the sequence was captured at. Metadata only.
pub const DEFAULT_FPS: f64 = 10.0;

/// A static background plus the frames to compare against it, in temporal order.
#[derive(Clone, Debug)]
pub struct FrameSequence {
    pub background: GrayImage,
    pub frames: Vec<GrayImage>,
    pub nominal_fps: f64,
}

impl FrameSequence {
    /// Checks that every frame matches the background's dimensions.
    pub fn new(background: GrayImage, frames: Vec<GrayImage>) -> Result<Self> {
        for (i, f) in frames.iter().enumerate() {
            if f.dimensions() != background.dimensions() {
                return Err(Error::mismatch(background.dimensions(), f.dimensions()).at_frame(i));
            }
        }
        Ok(Self {
            background,
            frames,
            nominal_fps: DEFAULT_FPS,
        })
    }
}

pub fn load_gray(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::MissingFile(path.to_path_buf()))
        }
        Err(e) => return Err(Error::io(path, e)),
    };
    decode_pgm(&bytes, path)
}

/// Any non-zero byte is white.
pub fn load_binary(path: impl AsRef<Path>) -> Result<BinaryImage> {
    let gray = load_gray(path)?;
    BinaryImage::from_pixels(
        gray.width(),
        gray.height(),
        gray.pixels().iter().map(|&p| p != 0).collect(),
    )
}

pub fn write_gray(img: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(&encode_pgm(img))
        .map_err(|e| Error::io(path, e))
}

pub fn write_binary(mask: &BinaryImage, path: impl AsRef<Path>) -> Result<()> {
    write_gray(&mask.to_gray(), path)
}

/// Serializes to P5 bytes: `P5\n<w> <h>\n255\n` followed by the payload.
pub fn encode_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.pixels());
    out
}

/// Parses P5 bytes. `path` is only used in error messages.
pub fn decode_pgm(bytes: &[u8], path: &Path) -> Result<GrayImage> {
    let malformed = |reason: &str| Error::MalformedHeader {
        path: path.to_path_buf(),
        reason: reason.to_string(),
    };
    if bytes.len() < 2 || &bytes[..2] != b"P5" {
        return Err(malformed("missing P5 magic"));
    }
    let mut pos = 2;
    let mut fields = [0u32; 3];
    for field in fields.iter_mut() {
        // whitespace and comments before each header token
        let mut saw_separator = false;
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => {
                    saw_separator = true;
                    pos += 1;
                }
                Some(b'#') => {
                    saw_separator = true;
                    while bytes.get(pos).is_some_and(|&b| b != b'\n' && b != b'\r') {
                        pos += 1;
                    }
                }
                Some(_) => break,
                None => return Err(malformed("header ends early")),
            }
        }
        if !saw_separator {
            return Err(malformed("missing whitespace between header fields"));
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if start == pos {
            return Err(malformed("expected a decimal number"));
        }
        *field = std::str::from_utf8(&bytes[start..pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| malformed("number out of range"))?;
    }
    // exactly one whitespace byte separates maxval from the payload
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        _ => return Err(malformed("missing whitespace after maxval")),
    }
    let [width, height, maxval] = fields;
    if maxval != 255 {
        return Err(Error::UnsupportedMaxval {
            path: path.to_path_buf(),
            maxval,
        });
    }
    if width == 0 || height == 0 {
        return Err(malformed("zero width or height"));
    }
    let expected = width as usize * height as usize;
    let payload = &bytes[pos..];
    if payload.len() < expected {
        return Err(Error::TruncatedPixelData {
            path: path.to_path_buf(),
            expected,
            actual: payload.len(),
        });
    }
    GrayImage::from_pixels(
        width as usize,
        height as usize,
        payload[..expected].to_vec(),
    )
}

/// Loads the background and every regular file in `frames_dir`, sorted
/// lexicographically by file name. `f10.pgm` sorts before `f2.pgm`;
/// zero-pad frame numbers to get numeric order.
pub fn load_sequence(
    background_path: impl AsRef<Path>,
    frames_dir: impl AsRef<Path>,
) -> Result<FrameSequence> {
    let background = load_gray(background_path)?;
    let frames_dir = frames_dir.as_ref();
    let frames = sorted_frame_paths(frames_dir)?
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let frame = load_gray(p).map_err(|e| e.at_frame(i))?;
            if frame.dimensions() != background.dimensions() {
                return Err(
                    Error::mismatch(background.dimensions(), frame.dimensions()).at_frame(i)
                );
            }
            Ok(frame)
        })
        .collect::<Result<Vec<_>>>()?;
    if frames.is_empty() {
        return Err(Error::EmptySequence(frames_dir.to_path_buf()));
    }
    Ok(FrameSequence {
        background,
        frames,
        nominal_fps: DEFAULT_FPS,
    })
}

/// Regular files in `dir`, sorted by file name bytes.
pub fn sorted_frame_paths(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::MissingFile(dir.to_path_buf()))
        }
        Err(e) => return Err(Error::io(dir, e)),
    };
    let mut paths = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        if path.is_file() {
            paths.push(path);
        }
    }
    paths.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(paths)
}
