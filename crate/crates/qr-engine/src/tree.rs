use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::station::StationConfig;

/// Which row actions a client may offer for a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionState {
    pub retrieve_enabled: bool,
    pub preview_enabled: bool,
    pub open_enabled: bool,
    pub failed_mark: bool,
}

impl Default for ActionState {
    fn default() -> Self {
        ActionState {
            retrieve_enabled: true,
            preview_enabled: false,
            open_enabled: false,
            failed_mark: false,
        }
    }
}

impl ActionState {
    pub fn retrieve_started(&mut self) {
        self.retrieve_enabled = false;
    }

    pub fn retrieve_finished(&mut self, success: bool) {
        if success {
            *self = ActionState {
                retrieve_enabled: false,
                preview_enabled: true,
                open_enabled: true,
                failed_mark: false,
            };
        } else {
            self.retrieve_enabled = true;
            self.failed_mark = true;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesNode {
    pub series_instance_uid: String,
    pub modality: String,
    pub series_number: String,
    pub series_description: String,
    pub instance_count: u32,
    pub actions: ActionState,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyNode {
    pub station: StationConfig,
    pub study_instance_uid: String,
    pub study_date: String,
    pub study_description: String,
    pub patient_name: String,
    pub patient_id: String,
    pub accession_number: String,
    /// Custom return keys, by "(GGGG,EEEE)".
    pub custom_values: BTreeMap<String, String>,
    pub series: Vec<SeriesNode>,
    pub actions: ActionState,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ResultTree {
    pub studies: Vec<StudyNode>,
}

impl ResultTree {
    pub fn is_empty(&self) -> bool {
        self.studies.is_empty()
    }

    /// Studies that came from `station`, in tree order.
    pub fn from_station<'a>(&'a self, station: &'a StationConfig) -> impl Iterator<Item = &'a StudyNode> + 'a {
        self.studies.iter().filter(move |s| &s.station == station)
    }

    /// Plain-text rendering, one line per node.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for study in &self.studies {
            out.push_str(&format!(
                "{} [{}] {} {} {} {}\n",
                study.study_instance_uid,
                study.station.name,
                study.study_date,
                study.patient_id,
                study.patient_name,
                study.study_description
            ));
            for (k, v) in &study.custom_values {
                out.push_str(&format!("  {k} = {v}\n"));
            }
            for series in &study.series {
                out.push_str(&format!(
                    "  {} {} #{} {} ({} images)\n",
                    series.series_instance_uid,
                    series.modality,
                    series.series_number,
                    series.series_description,
                    series.instance_count
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_transitions() {
        let mut a = ActionState::default();
        assert!(a.retrieve_enabled && !a.preview_enabled && !a.open_enabled && !a.failed_mark);
        a.retrieve_started();
        assert!(!a.retrieve_enabled);
        a.retrieve_finished(false);
        assert!(a.retrieve_enabled && a.failed_mark && !a.preview_enabled);
        a.retrieve_started();
        a.retrieve_finished(true);
        assert!(!a.retrieve_enabled && a.preview_enabled && a.open_enabled && !a.failed_mark);
    }
}
