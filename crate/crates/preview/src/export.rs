use std::fs;
use std::path::{Path, PathBuf};

use dicom_core::{read_part10_file, tags, DataSet};
use image::codecs::jpeg::JpegEncoder;
use image::codecs::pnm::{PnmEncoder, PnmSubtype, SampleEncoding};
use image::{ExtendedColorType, ImageEncoder};
use serde::{Deserialize, Serialize};

use crate::error::PreviewError;
use crate::pixels::{extract_pixels, PixelBuffer};
use crate::sort::sort_instances;
use crate::window::{apply_windowing, resolve_window, WindowSource};

pub const MANIFEST_NAME: &str = "manifest.json";
pub const JPEG_QUALITY: u8 = 90;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// PGM for greyscale, PPM for colour.
    Pnm,
    Jpeg,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowInfo {
    pub center: f64,
    pub width: f64,
    pub from_file: bool,
    pub clamped: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub index: usize,
    pub instance_number: Option<i64>,
    pub sop_uid: String,
    pub source: String,
    pub rows: usize,
    pub cols: usize,
    pub window: Option<WindowInfo>,
    pub files: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileError {
    pub source: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<Entry>,
    pub errors: Vec<FileError>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> PreviewError + '_ {
    move |source| PreviewError::Io { path: path.to_path_buf(), source }
}

fn file_name(path: &Path) -> String {
    path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Grey or RGB 8-bit frame ready for encoding.
pub struct Rendered {
    pub rows: usize,
    pub cols: usize,
    pub rgb: bool,
    pub pixels: Vec<u8>,
    pub window: Option<WindowInfo>,
}

pub fn render(ds: &DataSet) -> Result<Rendered, PreviewError> {
    let buf: PixelBuffer = extract_pixels(ds)?;
    if !buf.photometric.is_monochrome() {
        return Ok(Rendered { rows: buf.rows, cols: buf.cols, rgb: true, pixels: buf.data, window: None });
    }
    let params = resolve_window(ds, &buf);
    Ok(Rendered {
        rows: buf.rows,
        cols: buf.cols,
        rgb: false,
        pixels: apply_windowing(&buf, &params),
        window: Some(WindowInfo {
            center: params.center,
            width: params.width,
            from_file: params.source == WindowSource::File,
            clamped: params.clamped,
        }),
    })
}

fn encode(frame: &Rendered, format: Format) -> Result<Vec<u8>, PreviewError> {
    let (w, h) = (frame.cols as u32, frame.rows as u32);
    let color = if frame.rgb { ExtendedColorType::Rgb8 } else { ExtendedColorType::L8 };
    let mut out = Vec::new();
    match format {
        Format::Pnm => {
            let subtype = if frame.rgb { PnmSubtype::Pixmap(SampleEncoding::Binary) } else { PnmSubtype::Graymap(SampleEncoding::Binary) };
            PnmEncoder::new(&mut out).with_subtype(subtype).write_image(&frame.pixels, w, h, color)?;
        }
        Format::Jpeg => JpegEncoder::new_with_quality(&mut out, JPEG_QUALITY).write_image(&frame.pixels, w, h, color)?,
    }
    Ok(out)
}

fn extension(frame: &Rendered, format: Format) -> &'static str {
    match (format, frame.rgb) {
        (Format::Pnm, false) => "pgm",
        (Format::Pnm, true) => "ppm",
        (Format::Jpeg, _) => "jpg",
    }
}

fn clear_previous(out_dir: &Path) -> Result<(), PreviewError> {
    for entry in fs::read_dir(out_dir).map_err(io_err(out_dir))? {
        let path = entry.map_err(io_err(out_dir))?.path();
        let name = file_name(&path);
        if path.is_file() && (name.starts_with("img_") || name == MANIFEST_NAME) {
            fs::remove_file(&path).map_err(io_err(&path))?;
        }
    }
    Ok(())
}

/// Renders every readable instance in `series_dir` into `out_dir` as
/// `img_NNNN.<ext>` in instance order, plus `manifest.json`.
pub fn export_series(series_dir: &Path, out_dir: &Path, formats: &[Format]) -> Result<Manifest, PreviewError> {
    let mut sources: Vec<PathBuf> = fs::read_dir(series_dir)
        .map_err(io_err(series_dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    if sources.is_empty() {
        return Err(PreviewError::EmptySeries(series_dir.to_path_buf()));
    }
    sources.sort();
    fs::create_dir_all(out_dir).map_err(io_err(out_dir))?;
    clear_previous(out_dir)?;

    let mut errors = Vec::new();
    let mut parsed = Vec::new();
    for path in sources {
        let read = fs::read(&path).map_err(|e| e.to_string()).and_then(|bytes| {
            read_part10_file(&bytes).map(|(_, ds)| ds).map_err(|e| e.to_string())
        });
        match read {
            Ok(ds) => parsed.push((path, ds)),
            Err(message) => errors.push(FileError { source: file_name(&path), message }),
        }
    }
    sort_instances(&mut parsed, |(_, ds)| ds);

    let mut entries = Vec::new();
    for (path, ds) in parsed {
        let frame = match render(&ds) {
            Ok(frame) => frame,
            Err(e) => {
                errors.push(FileError { source: file_name(&path), message: e.to_string() });
                continue;
            }
        };
        let index = entries.len() + 1;
        let mut files = Vec::new();
        for &format in formats {
            let name = format!("img_{index:04}.{}", extension(&frame, format));
            let target = out_dir.join(&name);
            fs::write(&target, encode(&frame, format)?).map_err(io_err(&target))?;
            files.push(name);
        }
        entries.push(Entry {
            index,
            instance_number: ds.int(tags::INSTANCE_NUMBER),
            sop_uid: ds.string(tags::SOP_INSTANCE_UID).unwrap_or_default(),
            source: file_name(&path),
            rows: frame.rows,
            cols: frame.cols,
            window: frame.window,
            files,
        });
    }
    let manifest = Manifest { entries, errors };
    let target = out_dir.join(MANIFEST_NAME);
    fs::write(&target, serde_json::to_vec_pretty(&manifest)?).map_err(io_err(&target))?;
    Ok(manifest)
}
