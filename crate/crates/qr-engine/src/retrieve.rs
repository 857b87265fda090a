//! Study and series retrieval: SERIES find, IMAGE find, then one C-MOVE
//! per SOP instance.

use std::path::PathBuf;

use dicom_core::{tags, uids, DataSet};
use dimse_net::{associate, Association};
use serde::{Deserialize, Serialize};

use crate::filters::{build_identifier, QueryFilters, QueryLevel};
use crate::query::find_all;
use crate::station::{ClientConfig, StationConfig};
use crate::store::{instance_path, DestinationConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Study,
    Series,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesFiles {
    pub series_uid: String,
    pub files_written: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetrieveReport {
    pub scope: Scope,
    pub study_uid: String,
    pub series_uid: Option<String>,
    pub expected: u32,
    pub completed: u32,
    pub failed: u32,
    pub output_root: PathBuf,
    pub per_series: Vec<SeriesFiles>,
    /// Why the retrieval stopped before any transfer, if it did.
    pub error: Option<String>,
}

impl RetrieveReport {
    pub fn success(&self) -> bool {
        self.error.is_none() && self.failed == 0 && self.expected > 0 && self.completed == self.expected
    }

    pub fn files_written(&self) -> u32 {
        self.per_series.iter().map(|s| s.files_written).sum()
    }
}

/// Live counters handed to the progress callback after each transfer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Progress {
    pub completed: u32,
    pub failed: u32,
    pub expected: u32,
}

struct Instance {
    series: String,
    sop: String,
}

fn image_identifier(study: &str, series: &str, sop: &str) -> DataSet {
    let mut ds = DataSet::new();
    ds.put_str(tags::QUERY_RETRIEVE_LEVEL, "IMAGE");
    ds.put_str(tags::STUDY_INSTANCE_UID, study);
    ds.put_str(tags::SERIES_INSTANCE_UID, series);
    ds.put_str(tags::SOP_INSTANCE_UID, sop);
    ds
}

fn enumerate(
    assoc: &mut Association,
    study_uid: &str,
    series_uid: Option<&str>,
) -> Result<(Vec<String>, Vec<Instance>), String> {
    let series_id = build_identifier(&QueryFilters::default(), QueryLevel::Series, true, Some(study_uid), series_uid)
        .map_err(|e| e.to_string())?;
    let series: Vec<String> = find_all(assoc, &series_id)?
        .iter()
        .filter_map(|m| m.string(tags::SERIES_INSTANCE_UID))
        .filter(|u| !u.is_empty())
        .collect();
    if series.is_empty() {
        return Err(match series_uid {
            Some(s) => format!("series {s} not found under study {study_uid}"),
            None => format!("study {study_uid} not found or empty"),
        });
    }
    let mut instances = Vec::new();
    for s in &series {
        let image_id = build_identifier(&QueryFilters::default(), QueryLevel::Image, true, Some(study_uid), Some(s))
            .map_err(|e| e.to_string())?;
        for m in find_all(assoc, &image_id)? {
            if let Some(sop) = m.string(tags::SOP_INSTANCE_UID).filter(|u| !u.is_empty()) {
                instances.push(Instance { series: s.clone(), sop });
            }
        }
    }
    Ok((series, instances))
}

fn open(station: &StationConfig, client: &ClientConfig) -> dimse_net::Result<Association> {
    let opts = client
        .options()
        .with_abstract(uids::STUDY_ROOT_QR_FIND)
        .with_abstract(uids::STUDY_ROOT_QR_MOVE);
    associate(&station.peer(), &opts)
}

pub fn retrieve_study(
    station: &StationConfig,
    study_uid: &str,
    dest: &DestinationConfig,
    client: &ClientConfig,
    progress: &mut dyn FnMut(Progress),
) -> RetrieveReport {
    retrieve(station, study_uid, None, dest, client, progress)
}

pub fn retrieve_series(
    station: &StationConfig,
    study_uid: &str,
    series_uid: &str,
    dest: &DestinationConfig,
    client: &ClientConfig,
    progress: &mut dyn FnMut(Progress),
) -> RetrieveReport {
    retrieve(station, study_uid, Some(series_uid), dest, client, progress)
}

fn retrieve(
    station: &StationConfig,
    study_uid: &str,
    series_uid: Option<&str>,
    dest: &DestinationConfig,
    client: &ClientConfig,
    progress: &mut dyn FnMut(Progress),
) -> RetrieveReport {
    let mut report = RetrieveReport {
        scope: if series_uid.is_some() { Scope::Series } else { Scope::Study },
        study_uid: study_uid.to_string(),
        series_uid: series_uid.map(str::to_string),
        expected: 0,
        completed: 0,
        failed: 0,
        output_root: dest.output_root.clone(),
        per_series: Vec::new(),
        error: None,
    };

    let paths_ok = uids::is_valid_uid(study_uid) && series_uid.is_none_or(uids::is_valid_uid);
    if !paths_ok {
        report.error = Some("invalid study or series UID".into());
        return report;
    }
    let mut assoc = match open(station, client) {
        Ok(a) => a,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    let (series, instances) = match enumerate(&mut assoc, study_uid, series_uid) {
        Ok(found) => found,
        Err(e) => {
            report.error = Some(e);
            return report;
        }
    };
    report.expected = instances.len() as u32;
    if instances.is_empty() {
        report.error = Some("no instances to retrieve".into());
    }
    let mut live = Some(assoc);
    let mut tick = |r: &RetrieveReport| {
        progress(Progress {
            completed: r.completed,
            failed: r.failed,
            expected: r.expected,
        })
    };
    tick(&report);

    for inst in &instances {
        let path = instance_path(&dest.output_root, study_uid, &inst.series, &inst.sop);
        // a stale copy must not count for this run
        let _ = std::fs::remove_file(&path);
        if live.is_none() {
            live = open(station, client).map_err(|e| log::warn!("reconnect to {} failed: {e}", station.name)).ok();
        }
        let outcome = match live.as_mut() {
            Some(a) => a.c_move(&image_identifier(study_uid, &inst.series, &inst.sop), &dest.store_ae),
            None => {
                report.failed += 1;
                tick(&report);
                continue;
            }
        };
        match outcome {
            Ok(o) => {
                let done = u32::from(o.completed) + u32::from(o.warning);
                if done > 0 && o.failed == 0 {
                    report.completed += 1;
                } else {
                    report.failed += 1;
                }
            }
            Err(e) => {
                log::warn!("move of {} failed: {e}", inst.sop);
                report.failed += 1;
                if live.as_ref().is_none_or(|a| a.state() != dimse_net::AssociationState::Established) {
                    live = None;
                }
            }
        }
        tick(&report);
    }
    if let Some(mut a) = live {
        let _ = a.release();
    }

    report.per_series = series
        .iter()
        .map(|s| SeriesFiles {
            series_uid: s.clone(),
            files_written: instances
                .iter()
                .filter(|i| &i.series == s && instance_path(&dest.output_root, study_uid, s, &i.sop).is_file())
                .count() as u32,
        })
        .collect();
    report
}
