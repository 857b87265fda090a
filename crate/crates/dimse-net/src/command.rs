//! DIMSE command sets (group 0000, always implicit VR little endian).

use dicom_core::{
    encode_dataset, parse_dataset, tags, uids, DataElement, DataSet, TransferSyntax, VR,
};

use crate::status::Status;

pub const C_STORE_RQ: u16 = 0x0001;
pub const C_FIND_RQ: u16 = 0x0020;
pub const C_MOVE_RQ: u16 = 0x0021;
pub const C_ECHO_RQ: u16 = 0x0030;
pub const RESPONSE_BIT: u16 = 0x8000;
pub const C_STORE_RSP: u16 = C_STORE_RQ | RESPONSE_BIT;
pub const C_FIND_RSP: u16 = C_FIND_RQ | RESPONSE_BIT;
pub const C_MOVE_RSP: u16 = C_MOVE_RQ | RESPONSE_BIT;
pub const C_ECHO_RSP: u16 = C_ECHO_RQ | RESPONSE_BIT;

/// `(0000,0800)` value meaning "no data set follows".
pub const NO_DATA_SET: u16 = 0x0101;
const DATA_SET_PRESENT: u16 = 0x0000;
const PRIORITY_MEDIUM: u16 = 0x0000;

/// A command set plus its optional data set, bound to a presentation context.
#[derive(Debug, Clone, PartialEq)]
pub struct DimseMessage {
    pub command: DataSet,
    pub data: Option<DataSet>,
    pub context_id: u8,
}

/// Sub-operation counters carried by C-MOVE responses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubOperations {
    pub remaining: Option<u16>,
    pub completed: u16,
    pub failed: u16,
    pub warning: u16,
}

impl DimseMessage {
    pub fn command_field(&self) -> Option<u16> {
        self.command.int(tags::COMMAND_FIELD).map(|v| v as u16)
    }

    pub fn message_id(&self) -> Option<u16> {
        self.command.int(tags::MESSAGE_ID).map(|v| v as u16)
    }

    pub fn responded_to(&self) -> Option<u16> {
        self.command
            .int(tags::MESSAGE_ID_BEING_RESPONDED_TO)
            .map(|v| v as u16)
    }

    pub fn status(&self) -> Option<Status> {
        self.command.int(tags::STATUS).map(|v| Status(v as u16))
    }

    pub fn sop_class(&self) -> Option<String> {
        self.command.string(tags::AFFECTED_SOP_CLASS_UID)
    }

    pub fn error_comment(&self) -> Option<String> {
        self.command.string(tags::ERROR_COMMENT).filter(|s| !s.is_empty())
    }

    pub fn sub_operations(&self) -> SubOperations {
        let count = |tag| self.command.int(tag).map(|v| v as u16);
        SubOperations {
            remaining: count(tags::NUMBER_OF_REMAINING_SUBOPERATIONS),
            completed: count(tags::NUMBER_OF_COMPLETED_SUBOPERATIONS).unwrap_or(0),
            failed: count(tags::NUMBER_OF_FAILED_SUBOPERATIONS).unwrap_or(0),
            warning: count(tags::NUMBER_OF_WARNING_SUBOPERATIONS).unwrap_or(0),
        }
    }

    /// `true` when `(0000,0800)` announces a data set.
    pub fn announces_data(&self) -> bool {
        command_has_data(&self.command)
    }
}

pub(crate) fn command_has_data(command: &DataSet) -> bool {
    command
        .int(tags::COMMAND_DATA_SET_TYPE)
        .is_some_and(|v| v as u16 != NO_DATA_SET)
}

/// Encodes a command set, computing `(0000,0000)` CommandGroupLength.
pub fn encode_command(command: &DataSet) -> Vec<u8> {
    let mut body = command.clone();
    body.remove(tags::COMMAND_GROUP_LENGTH);
    let encoded = encode_dataset(&body, TransferSyntax::ImplicitVrLittleEndian)
        .expect("command elements fit implicit VR");
    let length = DataElement::u32s(tags::COMMAND_GROUP_LENGTH, &[encoded.len() as u32]);
    let mut out = encode_dataset(&DataSet::new().with(length), TransferSyntax::ImplicitVrLittleEndian)
        .expect("group length encodes");
    out.extend(encoded);
    out
}

pub fn decode_command(bytes: &[u8]) -> dicom_core::Result<DataSet> {
    parse_dataset(bytes, TransferSyntax::ImplicitVrLittleEndian)
}

fn base(sop_class: &str, field: u16, has_data: bool) -> DataSet {
    DataSet::new()
        .with(DataElement::str(tags::AFFECTED_SOP_CLASS_UID, VR::UI, sop_class))
        .with(DataElement::u16s(tags::COMMAND_FIELD, &[field]))
        .with(DataElement::u16s(
            tags::COMMAND_DATA_SET_TYPE,
            &[if has_data { DATA_SET_PRESENT } else { NO_DATA_SET }],
        ))
}

fn request(sop_class: &str, field: u16, message_id: u16, has_data: bool) -> DataSet {
    base(sop_class, field, has_data).with(DataElement::u16s(tags::MESSAGE_ID, &[message_id]))
}

fn response(sop_class: &str, field: u16, responding_to: u16, status: Status, has_data: bool) -> DataSet {
    base(sop_class, field, has_data)
        .with(DataElement::u16s(tags::MESSAGE_ID_BEING_RESPONDED_TO, &[responding_to]))
        .with(DataElement::u16s(tags::STATUS, &[status.0]))
}

pub fn echo_rq(message_id: u16) -> DataSet {
    request(uids::VERIFICATION, C_ECHO_RQ, message_id, false)
}

pub fn echo_rsp(responding_to: u16, status: Status) -> DataSet {
    response(uids::VERIFICATION, C_ECHO_RSP, responding_to, status, false)
}

pub fn find_rq(message_id: u16, sop_class: &str) -> DataSet {
    request(sop_class, C_FIND_RQ, message_id, true)
        .with(DataElement::u16s(tags::PRIORITY, &[PRIORITY_MEDIUM]))
}

pub fn find_rsp(sop_class: &str, responding_to: u16, status: Status, has_data: bool) -> DataSet {
    response(sop_class, C_FIND_RSP, responding_to, status, has_data)
}

pub fn move_rq(message_id: u16, sop_class: &str, destination: &str) -> DataSet {
    request(sop_class, C_MOVE_RQ, message_id, true)
        .with(DataElement::u16s(tags::PRIORITY, &[PRIORITY_MEDIUM]))
        .with(DataElement::str(tags::MOVE_DESTINATION, VR::AE, destination))
}

pub fn move_rsp(sop_class: &str, responding_to: u16, status: Status, ops: SubOperations) -> DataSet {
    let mut ds = response(sop_class, C_MOVE_RSP, responding_to, status, false)
        .with(DataElement::u16s(tags::NUMBER_OF_COMPLETED_SUBOPERATIONS, &[ops.completed]))
        .with(DataElement::u16s(tags::NUMBER_OF_FAILED_SUBOPERATIONS, &[ops.failed]))
        .with(DataElement::u16s(tags::NUMBER_OF_WARNING_SUBOPERATIONS, &[ops.warning]));
    if let Some(remaining) = ops.remaining {
        ds.insert(DataElement::u16s(tags::NUMBER_OF_REMAINING_SUBOPERATIONS, &[remaining]));
    }
    ds
}

pub struct StoreRq<'a> {
    pub message_id: u16,
    pub sop_class: &'a str,
    pub sop_instance: &'a str,
    pub move_originator: Option<(&'a str, u16)>,
}

pub fn store_rq(rq: &StoreRq<'_>) -> DataSet {
    let mut ds = request(rq.sop_class, C_STORE_RQ, rq.message_id, true)
        .with(DataElement::u16s(tags::PRIORITY, &[PRIORITY_MEDIUM]))
        .with(DataElement::str(tags::AFFECTED_SOP_INSTANCE_UID, VR::UI, rq.sop_instance));
    if let Some((ae, id)) = rq.move_originator {
        ds.insert(DataElement::str(tags::MOVE_ORIGINATOR_AE_TITLE, VR::AE, ae));
        ds.insert(DataElement::u16s(tags::MOVE_ORIGINATOR_MESSAGE_ID, &[id]));
    }
    ds
}

pub fn store_rsp(sop_class: &str, sop_instance: &str, responding_to: u16, status: Status) -> DataSet {
    response(sop_class, C_STORE_RSP, responding_to, status, false)
        .with(DataElement::str(tags::AFFECTED_SOP_INSTANCE_UID, VR::UI, sop_instance))
}

/// Generic failure response for a request this peer cannot serve.
pub fn failure_rsp(request: &DimseMessage, status: Status, comment: Option<&str>) -> DataSet {
    let field = request.command_field().unwrap_or(0) | RESPONSE_BIT;
    let sop_class = request.sop_class().unwrap_or_default();
    let mut ds = response(&sop_class, field, request.message_id().unwrap_or(0), status, false);
    if let Some(c) = comment {
        ds.insert(DataElement::str(tags::ERROR_COMMENT, VR::LO, c));
    }
    ds
}
