//! Attribute matching over the seeded instances.

use std::collections::BTreeSet;

use dicom_core::{tags, DataElement, DataSet, Tag, VR};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Study,
    Series,
    Image,
}

impl Level {
    pub fn parse(text: &str) -> Option<Level> {
        match text.trim() {
            "STUDY" => Some(Level::Study),
            "SERIES" => Some(Level::Series),
            "IMAGE" => Some(Level::Image),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Level::Study => "STUDY",
            Level::Series => "SERIES",
            Level::Image => "IMAGE",
        }
    }

    /// Attribute whose value identifies one entity at this level.
    pub fn unique_key(self) -> Tag {
        match self {
            Level::Study => tags::STUDY_INSTANCE_UID,
            Level::Series => tags::SERIES_INSTANCE_UID,
            Level::Image => tags::SOP_INSTANCE_UID,
        }
    }
}

/// One matched entity: the instance indices it covers and the response
/// identifier built for it.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub members: Vec<usize>,
    pub response: DataSet,
}

/// `*` matches any run of characters, `?` exactly one.
pub fn wildcard_match(pattern: &str, value: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let v: Vec<char> = value.chars().collect();
    let (mut pi, mut vi) = (0, 0);
    let mut star: Option<(usize, usize)> = None;
    while vi < v.len() {
        if pi < p.len() && (p[pi] == '?' || (p[pi] != '*' && p[pi] == v[vi])) {
            pi += 1;
            vi += 1;
        } else if pi < p.len() && p[pi] == '*' {
            star = Some((pi, vi));
            pi += 1;
        } else if let Some((sp, sv)) = star {
            pi = sp + 1;
            vi = sv + 1;
            star = Some((sp, sv + 1));
        } else {
            return false;
        }
    }
    p[pi..].iter().all(|&c| c == '*')
}

fn wildcard_vr(vr: VR) -> bool {
    matches!(vr, VR::AE | VR::CS | VR::LO | VR::LT | VR::PN | VR::SH | VR::ST)
}

fn in_range(range: &str, value: &str) -> bool {
    let (lo, hi) = range.split_once('-').expect("caller checked for '-'");
    let (lo, hi) = (lo.trim(), hi.trim());
    (lo.is_empty() || value >= lo) && (hi.is_empty() || value <= hi)
}

fn text(element: &DataElement) -> String {
    element.to_str().unwrap_or_default()
}

/// Whether `candidate` satisfies the matching key `key`.
pub fn key_matches(key: &DataElement, candidate: Option<&DataElement>) -> bool {
    if key.is_empty() || key.vr == VR::SQ {
        return true;
    }
    let Some(candidate) = candidate else {
        return false;
    };
    if !key.vr.is_string() {
        return key.bytes() == candidate.bytes();
    }
    let pattern = text(key);
    let value = text(candidate);
    match key.vr {
        VR::UI => pattern.split('\\').any(|uid| uid.trim_end_matches(['\0', ' ']) == value),
        VR::DA | VR::TM | VR::DT if pattern.contains('-') => in_range(&pattern, &value),
        vr => {
            let single = |v: &str| {
                if wildcard_vr(vr) && (pattern.contains('*') || pattern.contains('?')) {
                    wildcard_match(&pattern, v)
                } else {
                    pattern == v
                }
            };
            single(&value) || (value.contains('\\') && value.split('\\').any(single))
        }
    }
}

/// Attributes derived from the whole group rather than one instance.
fn computed(instances: &[DataSet], members: &[usize], level: Level) -> DataSet {
    let mut ds = DataSet::new();
    let count = members.len().to_string();
    match level {
        Level::Study => {
            let series: BTreeSet<String> = members
                .iter()
                .filter_map(|&i| instances[i].string(tags::SERIES_INSTANCE_UID))
                .collect();
            let modalities: BTreeSet<String> = members
                .iter()
                .filter_map(|&i| instances[i].string(tags::MODALITY))
                .collect();
            ds.insert(DataElement::str(tags::NUMBER_OF_STUDY_RELATED_SERIES, VR::IS, &series.len().to_string()));
            ds.insert(DataElement::str(tags::NUMBER_OF_STUDY_RELATED_INSTANCES, VR::IS, &count));
            ds.insert(DataElement::strs(tags::MODALITIES_IN_STUDY, VR::CS, &modalities.into_iter().collect::<Vec<_>>()));
        }
        Level::Series => {
            ds.insert(DataElement::str(tags::NUMBER_OF_SERIES_RELATED_INSTANCES, VR::IS, &count));
        }
        Level::Image => {}
    }
    ds
}

fn attribute<'a>(instance: &'a DataSet, extra: &'a DataSet, tag: Tag) -> Option<&'a DataElement> {
    extra.get(tag).or_else(|| instance.get(tag))
}

/// Entities at `level` with at least one member instance satisfying every
/// key of `identifier`, in order of first appearance among `instances`.
pub fn select(instances: &[DataSet], identifier: &DataSet, level: Level) -> Vec<Selection> {
    let unique = level.unique_key();
    let mut groups: Vec<(String, Vec<usize>)> = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        let Some(uid) = inst.string(unique) else { continue };
        match groups.iter_mut().find(|(u, _)| *u == uid) {
            Some((_, members)) => members.push(i),
            None => groups.push((uid, vec![i])),
        }
    }

    let keys: Vec<&DataElement> = identifier
        .iter()
        .filter(|e| e.tag.group != 0x0000 && e.tag != tags::QUERY_RETRIEVE_LEVEL && e.tag != tags::SPECIFIC_CHARACTER_SET)
        .collect();

    let mut out = Vec::new();
    for (_, members) in groups {
        let extra = computed(instances, &members, level);
        let hit = members.iter().copied().find(|&i| {
            keys.iter()
                .all(|k| key_matches(k, attribute(&instances[i], &extra, k.tag)))
        });
        let Some(first) = hit else { continue };
        let mut response = DataSet::new();
        response.insert(DataElement::str(tags::QUERY_RETRIEVE_LEVEL, VR::CS, level.as_str()));
        for k in &keys {
            let value = attribute(&instances[first], &extra, k.tag)
                .filter(|_| k.vr != VR::SQ)
                .cloned()
                .unwrap_or_else(|| DataElement::empty(k.tag, k.vr));
            response.insert(value);
        }
        out.push(Selection { members, response });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wildcards() {
        assert!(wildcard_match("DOE^*", "DOE^JOHN"));
        assert!(wildcard_match("*", ""));
        assert!(wildcard_match("D?E*", "DOE^JOHN"));
        assert!(wildcard_match("*JOHN", "DOE^JOHN"));
        assert!(wildcard_match("*O*N*", "DOE^JOHN"));
        assert!(!wildcard_match("DOE", "DOE^JOHN"));
        assert!(!wildcard_match("?", ""));
        assert!(!wildcard_match("doe*", "DOE^JOHN"));
    }

    #[test]
    fn date_ranges() {
        let key = |s: &str| DataElement::str(tags::STUDY_DATE, VR::DA, s);
        let v = DataElement::str(tags::STUDY_DATE, VR::DA, "20240102");
        assert!(key_matches(&key("20240101-20240131"), Some(&v)));
        assert!(key_matches(&key("20240102-20240102"), Some(&v)));
        assert!(key_matches(&key("20240101-"), Some(&v)));
        assert!(key_matches(&key("-20240102"), Some(&v)));
        assert!(!key_matches(&key("20240103-"), Some(&v)));
        assert!(!key_matches(&key("-20240101"), Some(&v)));
    }

    #[test]
    fn single_values_and_uid_lists() {
        let v = DataElement::str(tags::PATIENT_ID, VR::LO, "P001");
        assert!(key_matches(&DataElement::str(tags::PATIENT_ID, VR::LO, "P001 "), Some(&v)));
        assert!(!key_matches(&DataElement::str(tags::PATIENT_ID, VR::LO, "p001"), Some(&v)));
        assert!(!key_matches(&DataElement::str(tags::PATIENT_ID, VR::LO, "P00*"), None));
        assert!(key_matches(&DataElement::empty(tags::PATIENT_ID, VR::LO), None));

        let uid = DataElement::str(tags::STUDY_INSTANCE_UID, VR::UI, "1.2.3.1");
        let list = DataElement::str(tags::STUDY_INSTANCE_UID, VR::UI, "1.2.9\\1.2.3.1");
        assert!(key_matches(&list, Some(&uid)));
        let other = DataElement::str(tags::STUDY_INSTANCE_UID, VR::UI, "1.2.3.1*");
        assert!(!key_matches(&other, Some(&uid)));
    }
}
