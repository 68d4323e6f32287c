use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("file not found: {0}")]
    MissingFile(PathBuf),
    #[error("malformed PGM header in {path}: {reason}")]
    MalformedHeader { path: PathBuf, reason: String },
    #[error("truncated pixel data in {path}: expected {expected} bytes, found {actual}")]
    TruncatedPixelData {
        path: PathBuf,
        expected: usize,
        actual: usize,
    },
    #[error("unsupported maxval {maxval} in {path} (only 255 is accepted)")]
    UnsupportedMaxval { path: PathBuf, maxval: u32 },
    #[error("I/O failure on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("no frame files found in {0}")]
    EmptySequence(PathBuf),
    #[error(
        "dimension mismatch{}: expected {}x{}, found {}x{}",
        index.map(|i| format!(" at frame {i}")).unwrap_or_default(),
        expected.0, expected.1, actual.0, actual.1
    )]
    DimensionMismatch {
        index: Option<usize>,
        expected: (usize, usize),
        actual: (usize, usize),
    },
    #[error("image dimensions must be non-zero, got {width}x{height}")]
    EmptyDimensions { width: usize, height: usize },
    #[error("expected {expected} pixels, got {actual}")]
    PixelCount { expected: usize, actual: usize },
    #[error("mask has no white pixels")]
    EmptyMask,
    #[error("skeleton has no pixels")]
    EmptySkeleton,
    #[error("bounding box has zero width")]
    ZeroWidthBox,
    #[error("non-finite centre of gravity ({cgx}, {cgy})")]
    NonFiniteInput { cgx: f64, cgy: f64 },
    #[error("silhouette does not fit inside {width}x{height} at frame {frame}")]
    SilhouetteOutOfBounds {
        frame: usize,
        width: usize,
        height: usize,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("config line {line}: {reason}")]
    ConfigParse { line: usize, reason: String },
    #[error("frame {index}: {source}")]
    Frame {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn mismatch(expected: (usize, usize), actual: (usize, usize)) -> Self {
        Error::DimensionMismatch {
            index: None,
            expected,
            actual,
        }
    }

    /// Attaches a frame index.
    pub fn at_frame(self, index: usize) -> Self {
        match self {
            Error::DimensionMismatch {
                expected, actual, ..
            } => Error::DimensionMismatch {
                index: Some(index),
                expected,
                actual,
            },
            e @ Error::Frame { .. } => e,
            other => Error::Frame {
                index,
                source: Box::new(other),
            },
        }
    }
}
