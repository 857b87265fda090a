use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use dicom_core::uids::is_valid_uid;
use preview::{export_series, Format, Manifest};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::ApiError;

pub const PREVIEW_FORMATS: [Format; 2] = [Format::Pnm, Format::Jpeg];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesPreview {
    pub series_uid: String,
    pub manifest: Manifest,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyPreview {
    pub study_uid: String,
    pub series: Vec<SeriesPreview>,
}

fn not_retrieved(what: &str) -> ApiError {
    ApiError::new(axum::http::StatusCode::NOT_FOUND, "not_retrieved", format!("{what} has not been retrieved"))
}

fn check_uid(uid: &str) -> Result<(), ApiError> {
    if is_valid_uid(uid) {
        Ok(())
    } else {
        Err(ApiError::validation(format!("{uid:?} is not a valid UID")))
    }
}

/// SHA-256 over file names, sizes and contents in name order.
pub fn content_hash(dir: &Path) -> std::io::Result<String> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let mut hasher = Sha256::new();
    for f in files {
        let bytes = std::fs::read(&f)?;
        hasher.update(f.file_name().unwrap_or_default().as_encoded_bytes());
        hasher.update([0]);
        hasher.update((bytes.len() as u64).to_le_bytes());
        hasher.update(&bytes);
    }
    Ok(hex::encode(hasher.finalize()))
}

/// Only names the exporter produces may be served.
pub fn is_image_name(name: &str) -> bool {
    let Some((stem, ext)) = name.split_once('.') else { return false };
    let digits = stem.strip_prefix("img_").unwrap_or("");
    digits.len() >= 4 && digits.bytes().all(|b| b.is_ascii_digit()) && matches!(ext, "pgm" | "ppm" | "jpg")
}

pub fn content_type(name: &str) -> &'static str {
    match name.rsplit('.').next() {
        Some("jpg") => "image/jpeg",
        Some("pgm") => "image/x-portable-graymap",
        Some("ppm") => "image/x-portable-pixmap",
        _ => "application/octet-stream",
    }
}

/// Rendered previews under `root/<study>/<series>/`, re-exported only when
/// the retrieved series directory changes.
pub struct PreviewCache {
    root: PathBuf,
    entries: Mutex<HashMap<PathBuf, (String, Manifest)>>,
    exports: std::sync::atomic::AtomicU64,
}

impl PreviewCache {
    pub fn new(root: PathBuf) -> Self {
        PreviewCache { root, entries: Mutex::new(HashMap::new()), exports: Default::default() }
    }

    /// Number of exports actually run.
    pub fn exports(&self) -> u64 {
        self.exports.load(std::sync::atomic::Ordering::SeqCst)
    }

    pub fn series(&self, output_root: &Path, study: &str, series: &str) -> Result<Manifest, ApiError> {
        check_uid(study)?;
        check_uid(series)?;
        let source = output_root.join(study).join(series);
        if !source.is_dir() {
            return Err(not_retrieved(&format!("series {series}")));
        }
        let hash = content_hash(&source).map_err(|e| ApiError::internal(format!("cannot read {}: {e}", source.display())))?;
        let target = self.root.join(study).join(series);
        let mut entries = self.entries.lock().unwrap_or_else(|p| p.into_inner());
        if let Some((h, manifest)) = entries.get(&source) {
            if *h == hash && target.join(preview::MANIFEST_NAME).is_file() {
                return Ok(manifest.clone());
            }
        }
        let manifest = export_series(&source, &target, &PREVIEW_FORMATS).map_err(|e| match e {
            preview::PreviewError::EmptySeries(_) => not_retrieved(&format!("series {series}")),
            e => ApiError::internal(e.to_string()),
        })?;
        self.exports.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
        entries.insert(source, (hash, manifest.clone()));
        Ok(manifest)
    }

    pub fn study(&self, output_root: &Path, study: &str) -> Result<StudyPreview, ApiError> {
        check_uid(study)?;
        let dir = output_root.join(study);
        let mut series: Vec<String> = std::fs::read_dir(&dir)
            .map_err(|_| not_retrieved(&format!("study {study}")))?
            .filter_map(|e| e.ok())
            .filter(|e| e.path().is_dir())
            .filter_map(|e| e.file_name().into_string().ok())
            .filter(|n| is_valid_uid(n))
            .collect();
        series.sort();
        if series.is_empty() {
            return Err(not_retrieved(&format!("study {study}")));
        }
        let series = series
            .into_iter()
            .map(|s| Ok(SeriesPreview { manifest: self.series(output_root, study, &s)?, series_uid: s }))
            .collect::<Result<_, ApiError>>()?;
        Ok(StudyPreview { study_uid: study.to_string(), series })
    }

    /// Bytes of one rendered image, rendering first when needed.
    pub fn image(&self, output_root: &Path, study: &str, series: &str, name: &str) -> Result<Vec<u8>, ApiError> {
        if !is_image_name(name) {
            return Err(ApiError::not_found(format!("no image named {name:?}")));
        }
        let manifest = self.series(output_root, study, series)?;
        if !manifest.entries.iter().any(|e| e.files.iter().any(|f| f == name)) {
            return Err(ApiError::not_found(format!("no image named {name:?}")));
        }
        std::fs::read(self.root.join(study).join(series).join(name))
            .map_err(|e| ApiError::internal(format!("cannot read {name}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_names() {
        assert!(is_image_name("img_0001.jpg"));
        assert!(is_image_name("img_12345.pgm"));
        assert!(!is_image_name("img_01.jpg"));
        assert!(!is_image_name("../img_0001.jpg"));
        assert!(!is_image_name("manifest.json"));
        assert!(!is_image_name("img_0001.jpg.bak"));
    }

    #[test]
    fn hash_tracks_content() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("a"), b"1").unwrap();
        let h1 = content_hash(dir.path()).unwrap();
        assert_eq!(h1, content_hash(dir.path()).unwrap());
        std::fs::write(dir.path().join("a"), b"2").unwrap();
        assert_ne!(h1, content_hash(dir.path()).unwrap());
    }

    #[test]
    fn missing_and_bad_uids() {
        let dir = tempfile::tempdir().unwrap();
        let cache = PreviewCache::new(dir.path().join("cache"));
        assert_eq!(cache.study(dir.path(), "1.2.3").unwrap_err().code, "not_retrieved");
        assert_eq!(cache.study(dir.path(), "..").unwrap_err().code, "validation");
        assert_eq!(cache.series(dir.path(), "1.2", "../x").unwrap_err().code, "validation");
    }
}
