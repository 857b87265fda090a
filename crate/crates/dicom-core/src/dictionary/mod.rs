//! Embedded subset of the public DICOM data dictionary.
//!
//! Covers the command group, file meta group, and the identification,
//! patient, relationship, image pixel and common acquisition attributes.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::tag::Tag;
use crate::vr::VR;

mod entries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DictEntry {
    pub tag: Tag,
    pub vr: VR,
    pub keyword: &'static str,
    pub value_multiplicity: &'static str,
}

impl DictEntry {
    pub(crate) const fn new(
        tag: Tag,
        vr: VR,
        keyword: &'static str,
        value_multiplicity: &'static str,
    ) -> Self {
        DictEntry {
            tag,
            vr,
            keyword,
            value_multiplicity,
        }
    }
}

/// Lookup key: a tag or a case-sensitive keyword.
#[derive(Debug, Clone, Copy)]
pub enum DictKey<'a> {
    Tag(Tag),
    Keyword(&'a str),
}

impl From<Tag> for DictKey<'_> {
    fn from(tag: Tag) -> Self {
        DictKey::Tag(tag)
    }
}

impl<'a> From<&'a str> for DictKey<'a> {
    fn from(keyword: &'a str) -> Self {
        DictKey::Keyword(keyword)
    }
}

fn by_keyword() -> &'static HashMap<&'static str, &'static DictEntry> {
    static INDEX: OnceLock<HashMap<&'static str, &'static DictEntry>> = OnceLock::new();
    INDEX.get_or_init(|| entries::ENTRIES.iter().map(|e| (e.keyword, e)).collect())
}

/// Finds the entry for a tag or keyword. Absence is `None`, never an error.
pub fn lookup<'a>(key: impl Into<DictKey<'a>>) -> Option<&'static DictEntry> {
    match key.into() {
        DictKey::Tag(tag) => entries::ENTRIES
            .binary_search_by(|e| e.tag.cmp(&tag))
            .ok()
            .map(|i| &entries::ENTRIES[i]),
        DictKey::Keyword(kw) => by_keyword().get(kw).copied(),
    }
}

/// VR used when decoding implicit-VR data. Group lengths are `UL`;
/// anything not in the dictionary is `UN`.
pub fn implicit_vr(tag: Tag) -> VR {
    if tag.is_group_length() {
        return VR::UL;
    }
    lookup(tag).map(|e| e.vr).unwrap_or(VR::UN)
}

/// Resolves user input that may be either a keyword or a tag literal.
pub fn resolve(name_or_tag: &str) -> Option<&'static DictEntry> {
    lookup(name_or_tag).or_else(|| name_or_tag.parse::<Tag>().ok().and_then(lookup))
}

/// All embedded entries in ascending tag order.
pub fn entries() -> &'static [DictEntry] {
    &entries::ENTRIES
}

/// Entries whose keyword contains `fragment` (case-insensitive), in tag order.
pub fn search(fragment: &str) -> impl Iterator<Item = &'static DictEntry> + '_ {
    let needle = fragment.to_ascii_lowercase();
    entries::ENTRIES
        .iter()
        .filter(move |e| e.keyword.to_ascii_lowercase().contains(&needle))
}
