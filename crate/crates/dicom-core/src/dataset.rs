use std::collections::btree_map::{self, BTreeMap};

use crate::dictionary;
use crate::element::DataElement;
use crate::tag::Tag;
use crate::vr::VR;

/// Elements keyed by tag; iteration is always in ascending tag order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DataSet {
    elements: BTreeMap<Tag, DataElement>,
}

impl DataSet {
    pub fn new() -> Self {
        DataSet::default()
    }

    /// Inserts an element, returning the one it replaced.
    pub fn insert(&mut self, element: DataElement) -> Option<DataElement> {
        self.elements.insert(element.tag, element)
    }

    /// Inserts a string value using the dictionary VR for `tag`
    /// (falling back to `LO` for tags outside the dictionary).
    pub fn put_str(&mut self, tag: Tag, value: &str) -> Option<DataElement> {
        let vr = dictionary::lookup(tag).map(|e| e.vr).unwrap_or(VR::LO);
        self.insert(DataElement::str(tag, vr, value))
    }

    pub fn put_empty(&mut self, tag: Tag) -> Option<DataElement> {
        self.put_str(tag, "")
    }

    pub fn with(mut self, element: DataElement) -> Self {
        self.insert(element);
        self
    }

    pub fn get(&self, tag: Tag) -> Option<&DataElement> {
        self.elements.get(&tag)
    }

    pub fn remove(&mut self, tag: Tag) -> Option<DataElement> {
        self.elements.remove(&tag)
    }

    pub fn contains(&self, tag: Tag) -> bool {
        self.elements.contains_key(&tag)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> btree_map::Values<'_, Tag, DataElement> {
        self.elements.values()
    }

    pub fn tags(&self) -> impl Iterator<Item = Tag> + '_ {
        self.elements.keys().copied()
    }

    /// Trimmed string value, `None` when absent or not a byte value.
    pub fn string(&self, tag: Tag) -> Option<String> {
        self.get(tag).and_then(DataElement::to_str)
    }

    /// First integer value, `None` when absent or unparsable.
    pub fn int(&self, tag: Tag) -> Option<i64> {
        self.get(tag)?.ints()?.first().copied()
    }

    pub fn float(&self, tag: Tag) -> Option<f64> {
        self.get(tag)?.floats()?.first().copied()
    }
}

impl FromIterator<DataElement> for DataSet {
    fn from_iter<I: IntoIterator<Item = DataElement>>(iter: I) -> Self {
        let mut ds = DataSet::new();
        for e in iter {
            ds.insert(e);
        }
        ds
    }
}

impl<'a> IntoIterator for &'a DataSet {
    type Item = &'a DataElement;
    type IntoIter = btree_map::Values<'a, Tag, DataElement>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl IntoIterator for DataSet {
    type Item = DataElement;
    type IntoIter = btree_map::IntoValues<Tag, DataElement>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.into_values()
    }
}
