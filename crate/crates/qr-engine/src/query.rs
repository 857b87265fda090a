use std::collections::BTreeMap;
use std::thread;

use dicom_core::{dictionary, tags, uids, DataSet};
use dimse_net::{associate, Association};
use serde::{Deserialize, Serialize};

use crate::filters::{build_identifier, resolve_custom, FilterError, QueryFilters, QueryLevel};
use crate::station::{ClientConfig, StationConfig};
use crate::tree::{ResultTree, SeriesNode, StudyNode};

/// A station that could not be queried.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StationFailure {
    pub station: StationConfig,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct QueryOutcome {
    pub tree: ResultTree,
    pub errors: Vec<StationFailure>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QueryError {
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error("no stations to query")]
    NoTargets,
    #[error("every station failed: {}", .0.iter().map(|f| format!("{}: {}", f.station.name, f.message)).collect::<Vec<_>>().join("; "))]
    AllStationsFailed(Vec<StationFailure>),
}

pub(crate) fn find_all(assoc: &mut Association, identifier: &DataSet) -> Result<Vec<DataSet>, String> {
    let mut out = Vec::new();
    let result = assoc.c_find(identifier, |m| out.push(m)).map_err(|e| e.to_string())?;
    if result.status.is_success() {
        Ok(out)
    } else {
        Err(format!(
            "C-FIND failed with status {}{}",
            result.status,
            result.error_comment.map(|c| format!(": {c}")).unwrap_or_default()
        ))
    }
}

fn text(ds: &DataSet, tag: dicom_core::Tag) -> String {
    ds.string(tag).unwrap_or_default()
}

fn series_node(assoc: &mut Association, study_uid: &str, m: &DataSet) -> Result<SeriesNode, String> {
    let uid = text(m, tags::SERIES_INSTANCE_UID);
    let count = match m.int(tags::NUMBER_OF_SERIES_RELATED_INSTANCES) {
        Some(n) => n.max(0) as u32,
        None => {
            // not every PACS fills the count; ask for the instances instead
            let id = build_identifier(&QueryFilters::default(), QueryLevel::Image, true, Some(study_uid), Some(&uid))
                .map_err(|e| e.to_string())?;
            find_all(assoc, &id)?.len() as u32
        }
    };
    Ok(SeriesNode {
        series_instance_uid: uid,
        modality: text(m, tags::MODALITY),
        series_number: text(m, tags::SERIES_NUMBER),
        series_description: text(m, tags::SERIES_DESCRIPTION),
        instance_count: count,
        actions: Default::default(),
    })
}

/// STUDY-level find, then a SERIES-level find per matched study, on one
/// association to `station`.
pub fn query_station(
    station: &StationConfig,
    filters: &QueryFilters,
    exact_match: bool,
    client: &ClientConfig,
) -> Result<Vec<StudyNode>, String> {
    station.validate().map_err(|e| e.to_string())?;
    let study_id = build_identifier(filters, QueryLevel::Study, exact_match, None, None).map_err(|e| e.to_string())?;
    let custom: Vec<dicom_core::Tag> = filters
        .custom
        .iter()
        .filter_map(|c| resolve_custom(c).ok().map(|e| e.tag))
        .collect();
    let opts = client.options().with_abstract(uids::STUDY_ROOT_QR_FIND);
    let mut assoc = associate(&station.peer(), &opts).map_err(|e| e.to_string())?;

    let mut studies = Vec::new();
    for m in find_all(&mut assoc, &study_id)? {
        let study_uid = text(&m, tags::STUDY_INSTANCE_UID);
        if study_uid.is_empty() {
            continue;
        }
        let series_id = build_identifier(filters, QueryLevel::Series, exact_match, Some(&study_uid), None)
            .map_err(|e| e.to_string())?;
        let mut series = Vec::new();
        for s in find_all(&mut assoc, &series_id)? {
            series.push(series_node(&mut assoc, &study_uid, &s)?);
        }
        if series.is_empty() && !filters.series.is_empty() {
            continue;
        }
        let custom_values: BTreeMap<String, String> = custom
            .iter()
            .map(|&tag| {
                let value = m.get(tag).map(display_value).unwrap_or_default();
                (tag.to_string(), value)
            })
            .collect();
        studies.push(StudyNode {
            station: station.clone(),
            study_instance_uid: study_uid,
            study_date: text(&m, tags::STUDY_DATE),
            study_description: text(&m, tags::STUDY_DESCRIPTION),
            patient_name: text(&m, tags::PATIENT_NAME),
            patient_id: text(&m, tags::PATIENT_ID),
            accession_number: text(&m, tags::ACCESSION_NUMBER),
            custom_values,
            series,
            actions: Default::default(),
        });
    }
    let _ = assoc.release();
    Ok(studies)
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join("\\")
}

/// Text form of an element value as shown in result columns.
pub fn display_value(e: &dicom_core::DataElement) -> String {
    use dicom_core::VR;
    match e.vr {
        vr if vr.is_string() => e.to_str(),
        VR::US | VR::UL | VR::SS | VR::SL => e.ints().map(|v| join(&v)),
        VR::FL | VR::FD => e.floats().map(|v| join(&v)),
        VR::AT => e.tag_values().map(|v| join(&v)),
        _ => None,
    }
    .unwrap_or_default()
}

/// Queries every target concurrently and merges results in target order.
pub fn query_stations(
    targets: &[StationConfig],
    filters: &QueryFilters,
    exact_match: bool,
    client: &ClientConfig,
) -> Result<QueryOutcome, QueryError> {
    if targets.is_empty() {
        return Err(QueryError::NoTargets);
    }
    // fail on bad filters before touching the network
    build_identifier(filters, QueryLevel::Study, exact_match, None, None)?;
    for c in &filters.custom {
        resolve_custom(c)?;
    }

    let results: Vec<Result<Vec<StudyNode>, String>> = thread::scope(|s| {
        let handles: Vec<_> = targets
            .iter()
            .map(|st| s.spawn(move || query_station(st, filters, exact_match, client)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("query worker panicked".into())))
            .collect()
    });

    let mut outcome = QueryOutcome::default();
    for (station, result) in targets.iter().zip(results) {
        match result {
            Ok(studies) => outcome.tree.studies.extend(studies),
            Err(message) => {
                log::warn!("query of {} failed: {message}", station.name);
                outcome.errors.push(StationFailure {
                    station: station.clone(),
                    message,
                })
            }
        }
    }
    if outcome.errors.len() == targets.len() {
        return Err(QueryError::AllStationsFailed(outcome.errors));
    }
    Ok(outcome)
}

/// Keyword suggestions for a custom filter picker.
pub fn suggest_attributes(fragment: &str, limit: usize) -> Vec<&'static dictionary::DictEntry> {
    dictionary::search(fragment).take(limit).collect()
}
