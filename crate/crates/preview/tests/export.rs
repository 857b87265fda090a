use std::fs;
use std::path::Path;

use dicom_core::{tags, uids, write_part10_file, DataElement, DataSet, FileMeta, TransferSyntax, VR};
use preview::{export_series, render, voi, Format};
use proptest::prelude::*;

fn gradient(sop: &str, number: Option<i64>) -> DataSet {
    let mut ds = DataSet::new()
        .with(DataElement::str(tags::SOP_CLASS_UID, VR::UI, uids::SECONDARY_CAPTURE_IMAGE_STORAGE))
        .with(DataElement::str(tags::SOP_INSTANCE_UID, VR::UI, sop))
        .with(DataElement::u16s(tags::SAMPLES_PER_PIXEL, &[1]))
        .with(DataElement::str(tags::PHOTOMETRIC_INTERPRETATION, VR::CS, "MONOCHROME2"))
        .with(DataElement::u16s(tags::ROWS, &[16]))
        .with(DataElement::u16s(tags::COLUMNS, &[16]))
        .with(DataElement::u16s(tags::BITS_ALLOCATED, &[8]))
        .with(DataElement::u16s(tags::BITS_STORED, &[8]))
        .with(DataElement::u16s(tags::HIGH_BIT, &[7]))
        .with(DataElement::u16s(tags::PIXEL_REPRESENTATION, &[0]))
        .with(DataElement::new(tags::PIXEL_DATA, VR::OB, (0..=255u8).collect()));
    if let Some(n) = number {
        ds.insert(DataElement::str(tags::INSTANCE_NUMBER, VR::IS, &n.to_string()));
    }
    ds
}

fn write(dir: &Path, name: &str, ds: &DataSet) {
    let meta = FileMeta::new(
        TransferSyntax::ExplicitVrLittleEndian,
        uids::SECONDARY_CAPTURE_IMAGE_STORAGE,
        &ds.string(tags::SOP_INSTANCE_UID).unwrap(),
    );
    fs::write(dir.join(name), write_part10_file(&meta, ds).unwrap()).unwrap();
}

fn oracle_frame() -> Vec<u8> {
    let text = include_str!("oracle/gradient_default_window.txt");
    text.split_whitespace().map(|v| v.parse().unwrap()).collect()
}

#[test]
fn gradient_matches_oracle() {
    let frame = render(&gradient("1.2.3", Some(1))).unwrap();
    let window = frame.window.unwrap();
    assert_eq!((window.center, window.width, window.from_file), (127.5, 256.0, false));
    assert_eq!(frame.pixels, oracle_frame());
}

#[test]
fn pgm_master_holds_oracle_pixels() {
    let src = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    write(src.path(), "a.dcm", &gradient("1.2.3", Some(1)));
    export_series(src.path(), out.path(), &[Format::Pnm]).unwrap();
    let pgm = fs::read(out.path().join("img_0001.pgm")).unwrap();
    assert!(pgm.starts_with(b"P5"));
    assert_eq!(&pgm[pgm.len() - 256..], oracle_frame().as_slice());
}

#[test]
fn ordering_follows_instance_number() {
    let src = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    // file names deliberately disagree with instance numbers
    for (name, sop, number) in [("a", "1.2.3", Some(10)), ("b", "1.2.1", Some(2)), ("c", "1.2.2", None), ("d", "1.2.4", Some(1))] {
        write(src.path(), name, &gradient(sop, number));
    }
    let manifest = export_series(src.path(), out.path(), &[Format::Pnm, Format::Jpeg]).unwrap();
    let order: Vec<_> = manifest.entries.iter().map(|e| (e.index, e.instance_number, e.sop_uid.as_str())).collect();
    assert_eq!(order, [(1, Some(1), "1.2.4"), (2, Some(2), "1.2.1"), (3, Some(10), "1.2.3"), (4, None, "1.2.2")]);
    assert_eq!(manifest.entries[0].files, ["img_0001.pgm", "img_0001.jpg"]);
    let on_disk: serde_json::Value = serde_json::from_slice(&fs::read(out.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(on_disk["entries"][2]["sop_uid"], "1.2.3");
}

#[test]
fn masters_are_deterministic() {
    let src = tempfile::tempdir().unwrap();
    for i in 1..=3 {
        write(src.path(), &format!("{i}.dcm"), &gradient(&format!("1.2.{i}"), Some(i)));
    }
    let read_all = |dir: &Path| {
        let mut files: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
        files.sort();
        files.iter().map(|p| (p.file_name().unwrap().to_owned(), fs::read(p).unwrap())).collect::<Vec<_>>()
    };
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    export_series(src.path(), a.path(), &[Format::Pnm, Format::Jpeg]).unwrap();
    export_series(src.path(), b.path(), &[Format::Pnm, Format::Jpeg]).unwrap();
    assert_eq!(read_all(a.path()), read_all(b.path()));
}

#[test]
fn corrupt_file_is_reported_and_skipped() {
    let src = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    write(src.path(), "1.dcm", &gradient("1.2.1", Some(1)));
    write(src.path(), "2.dcm", &gradient("1.2.2", Some(2)));
    fs::write(src.path().join("broken.dcm"), b"not a dicom file").unwrap();
    let manifest = export_series(src.path(), out.path(), &[Format::Pnm]).unwrap();
    assert_eq!(manifest.entries.len(), 2);
    assert_eq!(manifest.errors.len(), 1);
    assert_eq!(manifest.errors[0].source, "broken.dcm");
}

#[test]
fn stale_images_are_removed() {
    let src = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    write(src.path(), "1.dcm", &gradient("1.2.1", Some(1)));
    fs::write(out.path().join("img_0007.pgm"), b"old").unwrap();
    fs::write(out.path().join("notes.txt"), b"keep").unwrap();
    export_series(src.path(), out.path(), &[Format::Pnm]).unwrap();
    assert!(!out.path().join("img_0007.pgm").exists());
    assert!(out.path().join("notes.txt").exists());
}

#[test]
fn empty_series_is_an_error() {
    let src = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    assert!(export_series(src.path(), out.path(), &[Format::Pnm]).is_err());
}

#[test]
fn rgb_bypasses_windowing() {
    let src = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    let mut ds = gradient("1.2.9", Some(1));
    ds.insert(DataElement::u16s(tags::SAMPLES_PER_PIXEL, &[3]));
    ds.insert(DataElement::u16s(tags::PLANAR_CONFIGURATION, &[0]));
    ds.put_str(tags::PHOTOMETRIC_INTERPRETATION, "RGB");
    ds.insert(DataElement::u16s(tags::ROWS, &[2]));
    ds.insert(DataElement::u16s(tags::COLUMNS, &[2]));
    let raw: Vec<u8> = (0..12).collect();
    ds.insert(DataElement::new(tags::PIXEL_DATA, VR::OB, raw.clone()));
    write(src.path(), "rgb.dcm", &ds);
    let manifest = export_series(src.path(), out.path(), &[Format::Pnm]).unwrap();
    assert!(manifest.entries[0].window.is_none());
    let ppm = fs::read(out.path().join("img_0001.ppm")).unwrap();
    assert!(ppm.starts_with(b"P6"));
    assert!(ppm.ends_with(&raw));
    assert_eq!(ppm.len(), b"P6\n2 2 255\n".len() + raw.len());
}

#[test]
fn monotone_and_in_range() {
    let (c, w) = (40.0, 400.0);
    let mut prev = 0u8;
    for i in 0..100_000 {
        let x = -1000.0 + f64::from(i) * 0.025;
        let y = voi(x, c, w);
        assert!(y >= prev, "decrease at {x}");
        prev = y;
    }
    assert_eq!(prev, 255);
}

proptest! {
    #[test]
    fn scaling_with_width(w in 256u32..=4096, dc in -2000i32..2000) {
        let (w, c) = (f64::from(w), f64::from(dc));
        // the window edges land on 0 and 255, the midpoint on 128
        prop_assert_eq!(voi(c - 0.5 - (w - 1.0) / 2.0, c, w), 0);
        prop_assert_eq!(voi(c + 0.5 + (w - 1.0) / 2.0, c, w), 255);
        prop_assert_eq!(voi(c, c, w), 128);
        // one quarter of the way in maps to about a quarter of the range
        let q = voi(c - 0.5 - (w - 1.0) / 4.0, c, w);
        prop_assert!((63..=64).contains(&q), "{}", q);
    }
}

// exact rational evaluation for integer inputs
fn voi_exact(x: i64, c: i64, w: i64) -> u8 {
    // thresholds doubled to stay integral
    let (x2, c2) = (2 * x, 2 * c - 1);
    if x2 <= c2 - (w - 1) {
        return 0;
    }
    if x2 > c2 + (w - 1) {
        return 255;
    }
    // y = ((2x - c2) * 255 + 255 (w - 1)) / (2 (w - 1)), halves rounded up (value is non-negative)
    let num = (x2 - c2) * 255 + 255 * (w - 1);
    let den = 2 * (w - 1);
    ((2 * num + den) / (2 * den)) as u8
}

proptest! {
    #[test]
    fn matches_exact_rational(x in -5000i64..5000, c in -3000i64..3000, w in 2i64..5000) {
        prop_assert_eq!(voi(x as f64, c as f64, w as f64), voi_exact(x, c, w));
    }
}
