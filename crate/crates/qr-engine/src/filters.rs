//! Query filters and the identifiers built from them.

use chrono::NaiveDate;
use dicom_core::{dictionary, tags, DataElement, DataSet, Tag, VR};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct StudyFilters {
    pub study_date: Option<String>,
    pub study_time: Option<String>,
    pub study_id: Option<String>,
    pub referring_physician_name: Option<String>,
    pub accession_number: Option<String>,
    pub study_instance_uid: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct PatientFilters {
    pub patient_id: Option<String>,
    pub patient_name: Option<String>,
    pub sex: Option<String>,
    pub birth_date: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SeriesFilters {
    pub modality: Option<String>,
    pub series_instance_uid: Option<String>,
    pub series_number: Option<String>,
}

impl SeriesFilters {
    pub fn is_empty(&self) -> bool {
        populated(&self.modality).is_none()
            && populated(&self.series_instance_uid).is_none()
            && populated(&self.series_number).is_none()
    }
}

/// An extra attribute named by keyword or "(GGGG,EEEE)"; an empty value
/// only requests it back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CustomFilter {
    pub tag: String,
    #[serde(default)]
    pub value: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct QueryFilters {
    pub study: StudyFilters,
    pub patient: PatientFilters,
    pub series: SeriesFilters,
    pub custom: Vec<CustomFilter>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum QueryLevel {
    Study,
    Series,
    Image,
}

impl QueryLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            QueryLevel::Study => "STUDY",
            QueryLevel::Series => "SERIES",
            QueryLevel::Image => "IMAGE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FilterError {
    #[error("{0} level needs a study instance UID")]
    MissingStudyUid(&'static str),
    #[error("IMAGE level needs a series instance UID")]
    MissingSeriesUid,
    #[error("{field}: {value:?} is not a date or date range (YYYYMMDD, A-B, A-, -B)")]
    Date { field: &'static str, value: String },
    #[error("{field}: {value:?} is not a time or time range (HHMMSS[.ffffff])")]
    Time { field: &'static str, value: String },
    #[error("unknown attribute {0:?}")]
    UnknownTag(String),
    #[error("attribute {tag} ({vr}) cannot be used as a query key")]
    UnusableTag { tag: Tag, vr: VR },
    #[error("bad value {value:?} for {tag}")]
    BadValue { tag: Tag, value: String },
}

fn populated(v: &Option<String>) -> Option<&str> {
    v.as_deref().map(str::trim).filter(|s| !s.is_empty())
}

fn valid_date(s: &str) -> bool {
    s.len() == 8 && NaiveDate::parse_from_str(s, "%Y%m%d").is_ok()
}

fn valid_time(s: &str) -> bool {
    let (hms, frac) = match s.split_once('.') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    if !matches!(hms.len(), 2 | 4 | 6) || !hms.bytes().all(|b| b.is_ascii_digit()) {
        return false;
    }
    if let Some(f) = frac {
        if hms.len() != 6 || f.is_empty() || f.len() > 6 || !f.bytes().all(|b| b.is_ascii_digit()) {
            return false;
        }
    }
    let part = |i: usize| hms.get(i..i + 2).map(|p| p.parse::<u32>().unwrap());
    part(0).is_some_and(|h| h < 24) && part(2).is_none_or(|m| m < 60) && part(4).is_none_or(|s| s < 60)
}

fn valid_range(value: &str, single: fn(&str) -> bool) -> bool {
    match value.split_once('-') {
        None => single(value),
        Some((a, b)) => {
            (!a.is_empty() || !b.is_empty())
                && (a.is_empty() || single(a))
                && (b.is_empty() || single(b))
                && (a.is_empty() || b.is_empty() || a <= b)
        }
    }
}

/// Checks a DA value or range ("A-B", "A-", "-B").
pub fn validate_date(field: &'static str, value: &str) -> Result<(), FilterError> {
    if valid_range(value, valid_date) {
        Ok(())
    } else {
        Err(FilterError::Date { field, value: value.to_string() })
    }
}

pub fn validate_time(field: &'static str, value: &str) -> Result<(), FilterError> {
    if valid_range(value, valid_time) {
        Ok(())
    } else {
        Err(FilterError::Time { field, value: value.to_string() })
    }
}

/// Fields that get an implicit trailing `*` when exact matching is off.
const WILDCARDED: [Tag; 3] = [tags::PATIENT_NAME, tags::REFERRING_PHYSICIAN_NAME, tags::STUDY_DESCRIPTION];

fn with_wildcard(tag: Tag, value: &str, exact: bool) -> String {
    if !exact && WILDCARDED.contains(&tag) && !value.contains(['*', '?']) {
        format!("{value}*")
    } else {
        value.to_string()
    }
}

/// Return keys requested at each level when nothing filters on them.
pub const STUDY_COLUMNS: [Tag; 13] = [
    tags::STUDY_DATE,
    tags::STUDY_TIME,
    tags::ACCESSION_NUMBER,
    tags::REFERRING_PHYSICIAN_NAME,
    tags::STUDY_DESCRIPTION,
    tags::PATIENT_NAME,
    tags::PATIENT_ID,
    tags::PATIENT_BIRTH_DATE,
    tags::PATIENT_SEX,
    tags::STUDY_INSTANCE_UID,
    tags::STUDY_ID,
    tags::NUMBER_OF_STUDY_RELATED_SERIES,
    tags::NUMBER_OF_STUDY_RELATED_INSTANCES,
];

pub const SERIES_COLUMNS: [Tag; 5] = [
    tags::MODALITY,
    tags::SERIES_DESCRIPTION,
    tags::SERIES_INSTANCE_UID,
    tags::SERIES_NUMBER,
    tags::NUMBER_OF_SERIES_RELATED_INSTANCES,
];

pub const IMAGE_COLUMNS: [Tag; 3] = [tags::SOP_CLASS_UID, tags::SOP_INSTANCE_UID, tags::INSTANCE_NUMBER];

fn key(ds: &mut DataSet, tag: Tag, value: &str) {
    ds.put_str(tag, value);
}

/// A custom filter resolved to a dictionary attribute.
pub fn resolve_custom(custom: &CustomFilter) -> Result<DataElement, FilterError> {
    let entry = dictionary::resolve(custom.tag.trim()).ok_or_else(|| FilterError::UnknownTag(custom.tag.clone()))?;
    if matches!(entry.vr, VR::SQ | VR::OB | VR::OW | VR::UN) || entry.tag.group == 0x0000 || entry.tag.group == 0x0002 {
        return Err(FilterError::UnusableTag { tag: entry.tag, vr: entry.vr });
    }
    DataElement::from_text(entry.tag, entry.vr, custom.value.trim()).ok_or_else(|| FilterError::BadValue {
        tag: entry.tag,
        value: custom.value.clone(),
    })
}

/// Builds the C-FIND identifier for `level`.
pub fn build_identifier(
    filters: &QueryFilters,
    level: QueryLevel,
    exact_match: bool,
    study_uid: Option<&str>,
    series_uid: Option<&str>,
) -> Result<DataSet, FilterError> {
    let study_uid = study_uid.map(str::trim).filter(|s| !s.is_empty());
    let series_uid = series_uid.map(str::trim).filter(|s| !s.is_empty());
    let mut ds = DataSet::new();
    ds.put_str(tags::QUERY_RETRIEVE_LEVEL, level.as_str());

    match level {
        QueryLevel::Study => {
            for tag in STUDY_COLUMNS {
                ds.put_empty(tag);
            }
            let s = &filters.study;
            let p = &filters.patient;
            if let Some(v) = populated(&s.study_date) {
                validate_date("study_date", v)?;
            }
            if let Some(v) = populated(&s.study_time) {
                validate_time("study_time", v)?;
            }
            if let Some(v) = populated(&p.birth_date) {
                validate_date("birth_date", v)?;
            }
            let fields = [
                (tags::STUDY_DATE, &s.study_date),
                (tags::STUDY_TIME, &s.study_time),
                (tags::STUDY_ID, &s.study_id),
                (tags::REFERRING_PHYSICIAN_NAME, &s.referring_physician_name),
                (tags::ACCESSION_NUMBER, &s.accession_number),
                (tags::STUDY_INSTANCE_UID, &s.study_instance_uid),
                (tags::PATIENT_ID, &p.patient_id),
                (tags::PATIENT_NAME, &p.patient_name),
                (tags::PATIENT_SEX, &p.sex),
                (tags::PATIENT_BIRTH_DATE, &p.birth_date),
            ];
            for (tag, value) in fields {
                if let Some(v) = populated(value) {
                    key(&mut ds, tag, &with_wildcard(tag, v, exact_match));
                }
            }
            if let Some(uid) = study_uid {
                key(&mut ds, tags::STUDY_INSTANCE_UID, uid);
            }
            // a modality filter also narrows studies to those holding it
            if let Some(m) = populated(&filters.series.modality) {
                key(&mut ds, tags::MODALITIES_IN_STUDY, m);
            }
            for custom in &filters.custom {
                let element = resolve_custom(custom)?;
                let element = match element.to_str() {
                    Some(v) if element.vr.is_string() && !v.is_empty() => {
                        DataElement::str(element.tag, element.vr, &with_wildcard(element.tag, &v, exact_match))
                    }
                    _ => element,
                };
                ds.insert(element);
            }
        }
        QueryLevel::Series => {
            let study = study_uid.ok_or(FilterError::MissingStudyUid("SERIES"))?;
            key(&mut ds, tags::STUDY_INSTANCE_UID, study);
            for tag in SERIES_COLUMNS {
                ds.put_empty(tag);
            }
            let s = &filters.series;
            for (tag, value) in [
                (tags::MODALITY, &s.modality),
                (tags::SERIES_INSTANCE_UID, &s.series_instance_uid),
                (tags::SERIES_NUMBER, &s.series_number),
            ] {
                if let Some(v) = populated(value) {
                    key(&mut ds, tag, v);
                }
            }
            if let Some(uid) = series_uid {
                key(&mut ds, tags::SERIES_INSTANCE_UID, uid);
            }
        }
        QueryLevel::Image => {
            let study = study_uid.ok_or(FilterError::MissingStudyUid("IMAGE"))?;
            let series = series_uid.ok_or(FilterError::MissingSeriesUid)?;
            key(&mut ds, tags::STUDY_INSTANCE_UID, study);
            key(&mut ds, tags::SERIES_INSTANCE_UID, series);
            for tag in IMAGE_COLUMNS {
                ds.put_empty(tag);
            }
        }
    }
    Ok(ds)
}
