use dicom_core::{tags, DataSet};

use crate::pixels::{Photometric, PixelBuffer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowSource {
    File,
    DefaultMinMax,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowParams {
    pub center: f64,
    pub width: f64,
    pub rescale_slope: f64,
    pub rescale_intercept: f64,
    pub source: WindowSource,
    /// The width was below 1 and has been raised to 1.
    pub clamped: bool,
}

impl WindowParams {
    pub fn new(center: f64, width: f64) -> Self {
        WindowParams {
            center,
            width: width.max(1.0),
            rescale_slope: 1.0,
            rescale_intercept: 0.0,
            source: WindowSource::File,
            clamped: width < 1.0,
        }
    }
}

fn first(ds: &DataSet, tag: dicom_core::Tag) -> Option<f64> {
    ds.get(tag)?.floats()?.first().copied()
}

/// File window when both centre and width are present, otherwise the
/// min/max window over modality-rescaled samples.
pub fn resolve_window(ds: &DataSet, buf: &PixelBuffer) -> WindowParams {
    let slope = first(ds, tags::RESCALE_SLOPE).unwrap_or(1.0);
    let intercept = first(ds, tags::RESCALE_INTERCEPT).unwrap_or(0.0);
    let (center, width, source) = match (first(ds, tags::WINDOW_CENTER), first(ds, tags::WINDOW_WIDTH)) {
        (Some(c), Some(w)) => (c, w, WindowSource::File),
        _ => {
            let rescaled = buf.samples().into_iter().map(|x| f64::from(x) * slope + intercept);
            let (lo, hi) = rescaled.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
            if lo.is_finite() {
                ((lo + hi) / 2.0, hi - lo + 1.0, WindowSource::DefaultMinMax)
            } else {
                (0.0, 1.0, WindowSource::DefaultMinMax)
            }
        }
    };
    WindowParams {
        center,
        width: width.max(1.0),
        rescale_slope: slope,
        rescale_intercept: intercept,
        source,
        clamped: width < 1.0,
    }
}

/// Linear VOI function for one modality-rescaled value.
pub fn voi(x: f64, center: f64, width: f64) -> u8 {
    let c = center - 0.5;
    let half = (width - 1.0) / 2.0;
    if x <= c - half {
        0
    } else if x > c + half {
        255
    } else {
        // scale before dividing so exact halves stay exact; f64::round rounds them away from zero
        ((x - c) * 255.0 / (width - 1.0) + 127.5).round().clamp(0.0, 255.0) as u8
    }
}

/// Rescale, window and (for MONOCHROME1) invert every sample.
pub fn apply_windowing(buf: &PixelBuffer, params: &WindowParams) -> Vec<u8> {
    let invert = buf.photometric == Photometric::Monochrome1;
    buf.samples()
        .into_iter()
        .map(|x| {
            let y = voi(
                f64::from(x) * params.rescale_slope + params.rescale_intercept,
                params.center,
                params.width,
            );
            if invert {
                255 - y
            } else {
                y
            }
        })
        .collect()
}
