use dicom_core::{tags, DataSet, Tag};

use crate::error::PreviewError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Photometric {
    Monochrome1,
    Monochrome2,
    Rgb,
}

impl Photometric {
    pub fn parse(text: &str) -> Option<Photometric> {
        match text.trim() {
            "MONOCHROME1" => Some(Photometric::Monochrome1),
            "MONOCHROME2" => Some(Photometric::Monochrome2),
            "RGB" => Some(Photometric::Rgb),
            _ => None,
        }
    }

    pub fn is_monochrome(self) -> bool {
        self != Photometric::Rgb
    }
}

/// One native (uncompressed) frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PixelBuffer {
    pub rows: usize,
    pub cols: usize,
    pub samples_per_pixel: usize,
    pub bits_allocated: u16,
    pub bits_stored: u16,
    pub signed: bool,
    pub photometric: Photometric,
    /// Row-major samples, colour samples interleaved, little endian.
    pub data: Vec<u8>,
}

impl PixelBuffer {
    pub fn len(&self) -> usize {
        self.rows * self.cols * self.samples_per_pixel
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Stored values, masked to BitsStored and sign-extended when signed.
    pub fn samples(&self) -> Vec<i32> {
        let bits = u32::from(self.bits_stored);
        let mask: u32 = if bits >= 32 { u32::MAX } else { (1 << bits) - 1 };
        let decode = |raw: u32| {
            let v = raw & mask;
            if self.signed && bits > 0 && v & (1 << (bits - 1)) != 0 {
                v as i32 - (1i64 << bits) as i32
            } else {
                v as i32
            }
        };
        match self.bits_allocated {
            8 => self.data[..self.len()].iter().map(|&b| decode(u32::from(b))).collect(),
            _ => self.data[..self.len() * 2]
                .chunks_exact(2)
                .map(|c| decode(u32::from(u16::from_le_bytes([c[0], c[1]]))))
                .collect(),
        }
    }
}

fn required(ds: &DataSet, tag: Tag) -> Result<i64, PreviewError> {
    ds.int(tag).ok_or(PreviewError::MissingAttribute(tag))
}

/// Reads the first frame of a natively encoded image.
pub fn extract_pixels(ds: &DataSet) -> Result<PixelBuffer, PreviewError> {
    let rows = required(ds, tags::ROWS)? as usize;
    let cols = required(ds, tags::COLUMNS)? as usize;
    let bits_allocated = required(ds, tags::BITS_ALLOCATED)? as u16;
    let bits_stored = ds.int(tags::BITS_STORED).map_or(bits_allocated, |b| b as u16);
    let samples_per_pixel = ds.int(tags::SAMPLES_PER_PIXEL).unwrap_or(1) as usize;
    let signed = ds.int(tags::PIXEL_REPRESENTATION).unwrap_or(0) == 1;
    let photometric_text = ds
        .string(tags::PHOTOMETRIC_INTERPRETATION)
        .unwrap_or_else(|| "MONOCHROME2".to_string());
    let photometric = Photometric::parse(&photometric_text)
        .ok_or(PreviewError::UnsupportedPhotometric(photometric_text))?;
    let pixel_data = ds
        .get(tags::PIXEL_DATA)
        .and_then(|e| e.bytes())
        .ok_or(PreviewError::MissingAttribute(tags::PIXEL_DATA))?;

    if !matches!(bits_allocated, 8 | 16) {
        return Err(PreviewError::UnsupportedLayout(format!("BitsAllocated {bits_allocated}")));
    }
    if bits_stored == 0 || bits_stored > bits_allocated {
        return Err(PreviewError::UnsupportedLayout(format!("BitsStored {bits_stored}")));
    }
    match (samples_per_pixel, photometric) {
        (1, p) if p.is_monochrome() => {}
        (3, Photometric::Rgb) if bits_allocated == 8 => {}
        (n, p) => {
            return Err(PreviewError::UnsupportedLayout(format!(
                "{n} samples per pixel with {p:?} at {bits_allocated} bits"
            )))
        }
    }

    let expected = rows * cols * samples_per_pixel * usize::from(bits_allocated / 8);
    // an odd-length frame carries one padding byte
    let padded = expected + expected % 2;
    if pixel_data.len() != expected && pixel_data.len() != padded {
        return Err(PreviewError::SizeMismatch { expected, actual: pixel_data.len() });
    }
    let mut data = pixel_data[..expected].to_vec();
    if samples_per_pixel == 3 && ds.int(tags::PLANAR_CONFIGURATION) == Some(1) {
        let plane = rows * cols;
        data = (0..plane)
            .flat_map(|i| [data[i], data[plane + i], data[2 * plane + i]])
            .collect();
    }
    Ok(PixelBuffer {
        rows,
        cols,
        samples_per_pixel,
        bits_allocated,
        bits_stored,
        signed,
        photometric,
        data,
    })
}
