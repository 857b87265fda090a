use std::cmp::Ordering;

use dicom_core::{tags, DataSet};

/// InstanceNumber ascending, missing numbers last, ties by SOPInstanceUID.
pub fn instance_order(a: &DataSet, b: &DataSet) -> Ordering {
    let key = |ds: &DataSet| {
        (
            ds.int(tags::INSTANCE_NUMBER).map_or((1, 0), |n| (0, n)),
            ds.string(tags::SOP_INSTANCE_UID).unwrap_or_default(),
        )
    };
    key(a).cmp(&key(b))
}

pub fn sort_instances<T>(items: &mut [T], dataset: impl Fn(&T) -> &DataSet) {
    items.sort_by(|a, b| instance_order(dataset(a), dataset(b)));
}
