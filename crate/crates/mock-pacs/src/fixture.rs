use std::collections::{BTreeMap, HashSet};

use dicom_core::{dictionary, tags, uids, DataElement, DataSet, Tag, VR};
use serde::Deserialize;

/// Failure behaviours the mock can be told to exhibit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FaultPlan {
    /// The n-th C-STORE sub-operation (1-based, counted across all moves
    /// since the plan was installed) is reported failed without being sent.
    pub fail_nth_store: Option<u32>,
    /// C-FIND requests get no response until the plan changes.
    pub withhold_find_response: bool,
    /// Every association request is rejected.
    pub reject_association: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Destination {
    pub ae_title: String,
    pub host: String,
    pub port: u16,
}

#[derive(Debug, Clone, Default)]
pub struct Fixture {
    pub instances: Vec<DataSet>,
    pub ae_registry: BTreeMap<String, (String, u16)>,
    pub fault_plan: FaultPlan,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FixtureError {
    #[error("instance {index} lacks {tag}")]
    MissingAttribute { index: usize, tag: Tag },
    #[error("duplicate SOP Instance UID {0}")]
    DuplicateSopInstance(String),
    #[error("manifest: {0}")]
    Manifest(String),
}

/// Attributes every seeded instance must carry.
pub const REQUIRED: [Tag; 6] = [
    tags::PATIENT_ID,
    tags::STUDY_INSTANCE_UID,
    tags::SERIES_INSTANCE_UID,
    tags::SOP_INSTANCE_UID,
    tags::MODALITY,
    tags::INSTANCE_NUMBER,
];

pub const GRADIENT_SIZE: u16 = 16;

/// 16x16 8-bit MONOCHROME2 frame whose pixel (r, c) is r*16 + c.
pub fn add_gradient_pixels(ds: &mut DataSet) {
    let n = GRADIENT_SIZE;
    ds.insert(DataElement::u16s(tags::SAMPLES_PER_PIXEL, &[1]));
    ds.insert(DataElement::str(tags::PHOTOMETRIC_INTERPRETATION, VR::CS, "MONOCHROME2"));
    ds.insert(DataElement::u16s(tags::ROWS, &[n]));
    ds.insert(DataElement::u16s(tags::COLUMNS, &[n]));
    ds.insert(DataElement::u16s(tags::BITS_ALLOCATED, &[8]));
    ds.insert(DataElement::u16s(tags::BITS_STORED, &[8]));
    ds.insert(DataElement::u16s(tags::HIGH_BIT, &[7]));
    ds.insert(DataElement::u16s(tags::PIXEL_REPRESENTATION, &[0]));
    let pixels = (0..n * n).map(|v| v as u8).collect();
    ds.insert(DataElement::new(tags::PIXEL_DATA, VR::OB, pixels));
}

fn storage_class(modality: &str) -> &'static str {
    match modality {
        "CT" => uids::CT_IMAGE_STORAGE,
        "MR" => uids::MR_IMAGE_STORAGE,
        _ => uids::SECONDARY_CAPTURE_IMAGE_STORAGE,
    }
}

/// Instance attributes shared by the fixtures below, with gradient pixels.
pub fn instance(
    patient: (&str, &str),
    study_uid: &str,
    series: (&str, &str, u32),
    sop_uid: &str,
    instance_number: u32,
) -> DataSet {
    let (name, id) = patient;
    let (series_uid, modality, series_number) = series;
    let mut ds = DataSet::new();
    ds.put_str(tags::PATIENT_NAME, name);
    ds.put_str(tags::PATIENT_ID, id);
    ds.put_str(tags::STUDY_INSTANCE_UID, study_uid);
    ds.put_str(tags::SERIES_INSTANCE_UID, series_uid);
    ds.put_str(tags::SOP_INSTANCE_UID, sop_uid);
    ds.put_str(tags::SOP_CLASS_UID, storage_class(modality));
    ds.put_str(tags::MODALITY, modality);
    ds.put_str(tags::SERIES_NUMBER, &series_number.to_string());
    ds.put_str(tags::INSTANCE_NUMBER, &instance_number.to_string());
    add_gradient_pixels(&mut ds);
    ds
}

impl Fixture {
    pub fn empty() -> Self {
        Fixture::default()
    }

    /// Patient DOE^JOHN / P001 with study 1.2.3.1 (20240102): CT series
    /// 1.2.3.1.1 of three instances and MR series 1.2.3.1.2 of two.
    pub fn standard() -> Self {
        let mut instances = Vec::new();
        for (series_uid, modality, number, count) in [("1.2.3.1.1", "CT", 1, 3), ("1.2.3.1.2", "MR", 2, 2)] {
            for i in 1..=count {
                let mut ds = instance(
                    ("DOE^JOHN", "P001"),
                    "1.2.3.1",
                    (series_uid, modality, number),
                    &format!("{series_uid}.{i}"),
                    i,
                );
                ds.put_str(tags::PATIENT_BIRTH_DATE, "19700101");
                ds.put_str(tags::PATIENT_SEX, "M");
                ds.put_str(tags::STUDY_DATE, "20240102");
                ds.put_str(tags::STUDY_TIME, "101500");
                ds.put_str(tags::STUDY_ID, "1");
                ds.put_str(tags::ACCESSION_NUMBER, "ACC0001");
                ds.put_str(tags::STUDY_DESCRIPTION, "CHEST");
                ds.put_str(tags::SERIES_DESCRIPTION, &format!("{modality} SERIES"));
                instances.push(ds);
            }
        }
        Fixture {
            instances,
            ..Fixture::default()
        }
    }

    pub fn with_destination(mut self, ae_title: &str, host: &str, port: u16) -> Self {
        self.ae_registry
            .insert(ae_title.trim().to_string(), (host.to_string(), port));
        self
    }

    pub fn with_faults(mut self, plan: FaultPlan) -> Self {
        self.fault_plan = plan;
        self
    }

    pub fn validate(&self) -> Result<(), FixtureError> {
        let mut seen = HashSet::new();
        for (index, ds) in self.instances.iter().enumerate() {
            for tag in REQUIRED {
                if ds.get(tag).is_none_or(|e| e.is_empty()) {
                    return Err(FixtureError::MissingAttribute { index, tag });
                }
            }
            let uid = ds.string(tags::SOP_INSTANCE_UID).unwrap_or_default();
            if !seen.insert(uid.clone()) {
                return Err(FixtureError::DuplicateSopInstance(uid));
            }
        }
        Ok(())
    }

    /// Parses a TOML manifest:
    ///
    /// ```toml
    /// [faults]
    /// fail_nth_store = 2
    ///
    /// [[destination]]
    /// ae_title = "BRIDGE_STORE"
    /// host = "127.0.0.1"
    /// port = 11113
    ///
    /// [[instance]]
    /// pixels = "gradient"
    /// PatientID = "P001"
    /// StudyInstanceUID = "1.2.3.1"
    /// # ...any dictionary keyword or "(GGGG,EEEE)"
    /// ```
    pub fn from_manifest(text: &str) -> Result<Fixture, FixtureError> {
        let manifest: Manifest = toml::from_str(text).map_err(|e| FixtureError::Manifest(e.to_string()))?;
        let mut fixture = Fixture {
            fault_plan: manifest.faults,
            ..Fixture::default()
        };
        for d in manifest.destination {
            fixture = fixture.with_destination(&d.ae_title, &d.host, d.port);
        }
        for (index, entry) in manifest.instance.into_iter().enumerate() {
            let mut ds = DataSet::new();
            match entry.pixels.as_deref() {
                None | Some("none") => {}
                Some("gradient") => add_gradient_pixels(&mut ds),
                Some(other) => {
                    return Err(FixtureError::Manifest(format!("instance {index}: unknown pixels {other:?}")))
                }
            }
            for (name, value) in entry.attributes {
                let entry = dictionary::resolve(&name)
                    .ok_or_else(|| FixtureError::Manifest(format!("instance {index}: unknown attribute {name}")))?;
                let element = DataElement::from_text(entry.tag, entry.vr, &value).ok_or_else(|| {
                    FixtureError::Manifest(format!("instance {index}: bad {} value {value:?}", entry.keyword))
                })?;
                ds.insert(element);
            }
            if !ds.contains(tags::SOP_CLASS_UID) {
                let modality = ds.string(tags::MODALITY).unwrap_or_default();
                ds.put_str(tags::SOP_CLASS_UID, storage_class(&modality));
            }
            fixture.instances.push(ds);
        }
        fixture.validate()?;
        Ok(fixture)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    #[serde(default)]
    faults: FaultPlan,
    #[serde(default)]
    destination: Vec<Destination>,
    #[serde(default)]
    instance: Vec<ManifestInstance>,
}

#[derive(Debug, Deserialize)]
struct ManifestInstance {
    pixels: Option<String>,
    #[serde(flatten)]
    attributes: BTreeMap<String, String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_fixture_shape() {
        let f = Fixture::standard();
        f.validate().unwrap();
        assert_eq!(f.instances.len(), 5);
        let first = &f.instances[0];
        assert_eq!(first.string(tags::SOP_INSTANCE_UID).unwrap(), "1.2.3.1.1.1");
        let px = first.get(tags::PIXEL_DATA).unwrap().bytes().unwrap();
        assert_eq!(px.len(), 256);
        assert_eq!((px[0], px[17], px[255]), (0, 17, 255));
        assert_eq!(f.instances[4].string(tags::MODALITY).unwrap(), "MR");
    }

    #[test]
    fn duplicate_sop_is_rejected() {
        let mut f = Fixture::standard();
        let dup = f.instances[0].clone();
        f.instances.push(dup);
        assert_eq!(
            f.validate(),
            Err(FixtureError::DuplicateSopInstance("1.2.3.1.1.1".into()))
        );
    }

    #[test]
    fn missing_required_attribute() {
        let mut f = Fixture::standard();
        f.instances[1].remove(tags::INSTANCE_NUMBER);
        assert!(matches!(
            f.validate(),
            Err(FixtureError::MissingAttribute { index: 1, .. })
        ));
    }

    #[test]
    fn manifest_round_trip() {
        let text = r#"
            [faults]
            fail_nth_store = 2

            [[destination]]
            ae_title = "STORE"
            host = "127.0.0.1"
            port = 4242

            [[instance]]
            pixels = "gradient"
            PatientName = "ROE^JANE"
            PatientID = "P002"
            StudyInstanceUID = "1.2.9"
            SeriesInstanceUID = "1.2.9.1"
            SOPInstanceUID = "1.2.9.1.1"
            Modality = "CT"
            InstanceNumber = "1"
            "(0008,0090)" = "REF^DOC"
        "#;
        let f = Fixture::from_manifest(text).unwrap();
        assert_eq!(f.fault_plan.fail_nth_store, Some(2));
        assert_eq!(f.ae_registry["STORE"], ("127.0.0.1".to_string(), 4242));
        let ds = &f.instances[0];
        assert_eq!(ds.string(tags::REFERRING_PHYSICIAN_NAME).unwrap(), "REF^DOC");
        assert_eq!(ds.string(tags::SOP_CLASS_UID).unwrap(), uids::CT_IMAGE_STORAGE);
        assert_eq!(ds.int(tags::ROWS), Some(16));
    }

    #[test]
    fn manifest_errors() {
        assert!(Fixture::from_manifest("[[instance]]\nNoSuchThing = \"1\"").is_err());
        assert!(Fixture::from_manifest("[[instance]]\nPatientID = \"P1\"").is_err());
        assert!(Fixture::from_manifest("bogus = 1").is_err());
    }
}
