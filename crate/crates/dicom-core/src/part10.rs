//! DICOM Part 10 files: 128-byte preamble, `DICM`, explicit-VR file meta
//! group, then the data set in the declared transfer syntax.

use crate::codec::{encode_dataset, encoded_len, parse_dataset, Reader, TransferSyntax};
use crate::dataset::DataSet;
use crate::element::DataElement;
use crate::error::{Error, Result};
use crate::tags;
use crate::uids;
use crate::vr::VR;

const PREAMBLE_LEN: usize = 128;
const MAGIC: &[u8; 4] = b"DICM";

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FileMeta {
    pub transfer_syntax_uid: String,
    pub media_storage_sop_class_uid: String,
    pub media_storage_sop_instance_uid: String,
    pub implementation_class_uid: String,
}

impl FileMeta {
    pub fn new(syntax: TransferSyntax, sop_class_uid: &str, sop_instance_uid: &str) -> Self {
        FileMeta {
            transfer_syntax_uid: syntax.uid().to_string(),
            media_storage_sop_class_uid: sop_class_uid.to_string(),
            media_storage_sop_instance_uid: sop_instance_uid.to_string(),
            implementation_class_uid: uids::IMPLEMENTATION_CLASS_UID.to_string(),
        }
    }

    pub fn transfer_syntax(&self) -> Result<TransferSyntax> {
        TransferSyntax::from_uid(&self.transfer_syntax_uid)
    }

    fn validate(&self) -> Result<()> {
        let fields = [
            ("TransferSyntaxUID", &self.transfer_syntax_uid),
            ("MediaStorageSOPClassUID", &self.media_storage_sop_class_uid),
            ("MediaStorageSOPInstanceUID", &self.media_storage_sop_instance_uid),
            ("ImplementationClassUID", &self.implementation_class_uid),
        ];
        for (name, value) in fields {
            if value.is_empty() {
                return Err(Error::EmptyMetaField(name));
            }
        }
        Ok(())
    }
}

/// Parses a Part 10 byte stream into its file meta and main data set.
pub fn read_part10_file(bytes: &[u8]) -> Result<(FileMeta, DataSet)> {
    if bytes.len() < PREAMBLE_LEN + MAGIC.len() || &bytes[PREAMBLE_LEN..PREAMBLE_LEN + 4] != MAGIC {
        return Err(Error::MissingMagic);
    }
    let start = PREAMBLE_LEN + MAGIC.len();
    let rest = &bytes[start..];
    let mut reader = Reader::new(rest, start, TransferSyntax::ExplicitVrLittleEndian);
    let mut meta_group = DataSet::new();
    while reader.peek_tag().is_some_and(|t| t.group == 0x0002) {
        meta_group.insert(reader.element(0)?);
    }
    let field = |tag| meta_group.string(tag).unwrap_or_default();
    let meta = FileMeta {
        transfer_syntax_uid: meta_group
            .string(tags::TRANSFER_SYNTAX_UID)
            .filter(|s| !s.is_empty())
            .ok_or(Error::MissingTransferSyntax)?,
        media_storage_sop_class_uid: field(tags::MEDIA_STORAGE_SOP_CLASS_UID),
        media_storage_sop_instance_uid: field(tags::MEDIA_STORAGE_SOP_INSTANCE_UID),
        implementation_class_uid: field(tags::IMPLEMENTATION_CLASS_UID),
    };
    let syntax = meta.transfer_syntax()?;
    let ds = parse_dataset(&rest[reader.position()..], syntax)?;
    Ok((meta, ds))
}

/// Serializes a Part 10 file. Group 0002 elements in `ds` are not written;
/// the meta group is generated from `meta`.
pub fn write_part10_file(meta: &FileMeta, ds: &DataSet) -> Result<Vec<u8>> {
    meta.validate()?;
    let syntax = meta.transfer_syntax()?;
    let explicit = TransferSyntax::ExplicitVrLittleEndian;

    let group: DataSet = [
        DataElement::new(tags::FILE_META_VERSION, VR::OB, vec![0x00, 0x01]),
        DataElement::str(tags::MEDIA_STORAGE_SOP_CLASS_UID, VR::UI, &meta.media_storage_sop_class_uid),
        DataElement::str(
            tags::MEDIA_STORAGE_SOP_INSTANCE_UID,
            VR::UI,
            &meta.media_storage_sop_instance_uid,
        ),
        DataElement::str(tags::TRANSFER_SYNTAX_UID, VR::UI, &meta.transfer_syntax_uid),
        DataElement::str(tags::IMPLEMENTATION_CLASS_UID, VR::UI, &meta.implementation_class_uid),
    ]
    .into_iter()
    .collect();
    let group_len: usize = group
        .iter()
        .map(|e| encoded_len(e, explicit))
        .sum::<Result<usize>>()?;
    let group = group.with(DataElement::u32s(tags::FILE_META_GROUP_LENGTH, &[group_len as u32]));

    let body: DataSet = ds.iter().filter(|e| e.tag.group != 0x0002).cloned().collect();

    let mut out = vec![0u8; PREAMBLE_LEN];
    out.extend_from_slice(MAGIC);
    out.extend(encode_dataset(&group, explicit)?);
    out.extend(encode_dataset(&body, syntax)?);
    Ok(out)
}
