//! 8-bit previews of retrieved series: pixel extraction, linear VOI
//! windowing, instance ordering and PNM/JPEG export.

pub mod error;
pub mod export;
pub mod pixels;
pub mod sort;
pub mod window;

pub use error::PreviewError;
pub use export::{export_series, render, Entry, FileError, Format, Manifest, Rendered, WindowInfo, JPEG_QUALITY, MANIFEST_NAME};
pub use pixels::{extract_pixels, Photometric, PixelBuffer};
pub use sort::{instance_order, sort_instances};
pub use window::{apply_windowing, resolve_window, voi, WindowParams, WindowSource};
