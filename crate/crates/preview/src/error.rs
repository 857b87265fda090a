use std::path::PathBuf;

use dicom_core::Tag;

#[derive(Debug, thiserror::Error)]
pub enum PreviewError {
    #[error("missing {0}")]
    MissingAttribute(Tag),
    #[error("unsupported photometric interpretation {0:?}")]
    UnsupportedPhotometric(String),
    #[error("unsupported pixel layout: {0}")]
    UnsupportedLayout(String),
    #[error("pixel data holds {actual} bytes, header implies {expected}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("{0} contains no files")]
    EmptySeries(PathBuf),
    #[error("cannot encode image: {0}")]
    Encode(#[from] image::ImageError),
    #[error("cannot write manifest: {0}")]
    Manifest(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}
