//! Upper layer protocol data units.
//!
//! Every PDU is `type (1) | reserved (1) | length (4, big-endian) | body`.

use std::io::{self, Read, Write};

use dicom_core::uids;

pub const ASSOCIATE_RQ: u8 = 0x01;
pub const ASSOCIATE_AC: u8 = 0x02;
pub const ASSOCIATE_RJ: u8 = 0x03;
pub const P_DATA_TF: u8 = 0x04;
pub const RELEASE_RQ: u8 = 0x05;
pub const RELEASE_RP: u8 = 0x06;
pub const ABORT: u8 = 0x07;

pub const DEFAULT_MAX_PDU_LENGTH: u32 = 16384;
pub const PROTOCOL_VERSION: u16 = 0x0001;

/// Hard ceiling on an incoming PDU body, whatever its header claims.
const MAX_INCOMING_PDU: u32 = 64 * 1024 * 1024;

const ITEM_APPLICATION_CONTEXT: u8 = 0x10;
const ITEM_CONTEXT_RQ: u8 = 0x20;
const ITEM_CONTEXT_AC: u8 = 0x21;
const ITEM_ABSTRACT_SYNTAX: u8 = 0x30;
const ITEM_TRANSFER_SYNTAX: u8 = 0x40;
const ITEM_USER_INFO: u8 = 0x50;
const SUB_MAX_LENGTH: u8 = 0x51;
const SUB_IMPLEMENTATION_CLASS_UID: u8 = 0x52;
const SUB_IMPLEMENTATION_VERSION_NAME: u8 = 0x55;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PduError {
    #[error("unknown PDU type 0x{0:02X}")]
    UnknownType(u8),
    #[error("PDU needs {needed} bytes but only {available} are available")]
    Truncated { needed: usize, available: usize },
    #[error("malformed PDU: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProposedContext {
    pub id: u8,
    pub abstract_syntax: String,
    pub transfer_syntaxes: Vec<String>,
}

/// Presentation context negotiation outcome codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContextResult {
    Acceptance,
    UserRejection,
    NoReason,
    AbstractSyntaxNotSupported,
    TransferSyntaxesNotSupported,
    Other(u8),
}

impl ContextResult {
    pub fn code(self) -> u8 {
        match self {
            ContextResult::Acceptance => 0,
            ContextResult::UserRejection => 1,
            ContextResult::NoReason => 2,
            ContextResult::AbstractSyntaxNotSupported => 3,
            ContextResult::TransferSyntaxesNotSupported => 4,
            ContextResult::Other(c) => c,
        }
    }

    pub fn from_code(code: u8) -> Self {
        match code {
            0 => ContextResult::Acceptance,
            1 => ContextResult::UserRejection,
            2 => ContextResult::NoReason,
            3 => ContextResult::AbstractSyntaxNotSupported,
            4 => ContextResult::TransferSyntaxesNotSupported,
            c => ContextResult::Other(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextReply {
    pub id: u8,
    pub result: ContextResult,
    pub transfer_syntax: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UserItem {
    MaxLength(u32),
    ImplementationClassUid(String),
    ImplementationVersionName(String),
    /// Sub-items this implementation does not interpret, kept verbatim.
    Other { item_type: u8, data: Vec<u8> },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UserInfo {
    pub items: Vec<UserItem>,
}

impl UserInfo {
    pub fn new(max_length: u32, class_uid: &str, version_name: &str) -> Self {
        UserInfo {
            items: vec![
                UserItem::MaxLength(max_length),
                UserItem::ImplementationClassUid(class_uid.to_string()),
                UserItem::ImplementationVersionName(version_name.to_string()),
            ],
        }
    }

    pub fn max_length(&self) -> Option<u32> {
        self.items.iter().find_map(|i| match i {
            UserItem::MaxLength(v) => Some(*v),
            _ => None,
        })
    }

    pub fn implementation_class_uid(&self) -> Option<&str> {
        self.items.iter().find_map(|i| match i {
            UserItem::ImplementationClassUid(v) => Some(v.as_str()),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociateRq {
    pub protocol_version: u16,
    pub called_ae: String,
    pub calling_ae: String,
    pub application_context: String,
    pub presentation_contexts: Vec<ProposedContext>,
    pub user_info: UserInfo,
}

/// The AE title fields of an A-ASSOCIATE-AC are reserved but echo the
/// request's values on the wire; they are kept so re-encoding is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociateAc {
    pub protocol_version: u16,
    pub called_ae: String,
    pub calling_ae: String,
    pub application_context: String,
    pub presentation_contexts: Vec<ContextReply>,
    pub user_info: UserInfo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssociateRj {
    pub result: u8,
    pub source: u8,
    pub reason: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Abort {
    pub source: u8,
    pub reason: u8,
}

/// One presentation data value item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pdv {
    pub context_id: u8,
    pub is_command: bool,
    pub is_last: bool,
    pub data: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pdu {
    AssociateRq(AssociateRq),
    AssociateAc(AssociateAc),
    AssociateRj(AssociateRj),
    PData(Vec<Pdv>),
    ReleaseRq,
    ReleaseRp,
    Abort(Abort),
}

impl Pdu {
    pub fn pdu_type(&self) -> u8 {
        match self {
            Pdu::AssociateRq(_) => ASSOCIATE_RQ,
            Pdu::AssociateAc(_) => ASSOCIATE_AC,
            Pdu::AssociateRj(_) => ASSOCIATE_RJ,
            Pdu::PData(_) => P_DATA_TF,
            Pdu::ReleaseRq => RELEASE_RQ,
            Pdu::ReleaseRp => RELEASE_RP,
            Pdu::Abort(_) => ABORT,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Pdu::AssociateRq(_) => "A-ASSOCIATE-RQ",
            Pdu::AssociateAc(_) => "A-ASSOCIATE-AC",
            Pdu::AssociateRj(_) => "A-ASSOCIATE-RJ",
            Pdu::PData(_) => "P-DATA-TF",
            Pdu::ReleaseRq => "A-RELEASE-RQ",
            Pdu::ReleaseRp => "A-RELEASE-RP",
            Pdu::Abort(_) => "A-ABORT",
        }
    }
}

fn ae_field(title: &str) -> [u8; 16] {
    let mut field = [b' '; 16];
    for (dst, src) in field.iter_mut().zip(title.bytes()) {
        *dst = src;
    }
    field
}

fn push_item(out: &mut Vec<u8>, item_type: u8, content: &[u8]) {
    out.push(item_type);
    out.push(0);
    out.extend_from_slice(&(content.len() as u16).to_be_bytes());
    out.extend_from_slice(content);
}

fn encode_user_info(info: &UserInfo) -> Vec<u8> {
    let mut sub = Vec::new();
    for item in &info.items {
        match item {
            UserItem::MaxLength(v) => push_item(&mut sub, SUB_MAX_LENGTH, &v.to_be_bytes()),
            UserItem::ImplementationClassUid(v) => {
                push_item(&mut sub, SUB_IMPLEMENTATION_CLASS_UID, v.as_bytes())
            }
            UserItem::ImplementationVersionName(v) => {
                push_item(&mut sub, SUB_IMPLEMENTATION_VERSION_NAME, v.as_bytes())
            }
            UserItem::Other { item_type, data } => push_item(&mut sub, *item_type, data),
        }
    }
    sub
}

fn encode_association_header(
    out: &mut Vec<u8>,
    version: u16,
    called: &str,
    calling: &str,
    app_context: &str,
) {
    out.extend_from_slice(&version.to_be_bytes());
    out.extend_from_slice(&[0, 0]);
    out.extend_from_slice(&ae_field(called));
    out.extend_from_slice(&ae_field(calling));
    out.extend_from_slice(&[0; 32]);
    push_item(out, ITEM_APPLICATION_CONTEXT, app_context.as_bytes());
}

pub fn encode_pdu(pdu: &Pdu) -> Vec<u8> {
    let mut body = Vec::new();
    match pdu {
        Pdu::AssociateRq(rq) => {
            encode_association_header(
                &mut body,
                rq.protocol_version,
                &rq.called_ae,
                &rq.calling_ae,
                &rq.application_context,
            );
            for pc in &rq.presentation_contexts {
                let mut content = vec![pc.id, 0, 0, 0];
                push_item(&mut content, ITEM_ABSTRACT_SYNTAX, pc.abstract_syntax.as_bytes());
                for ts in &pc.transfer_syntaxes {
                    push_item(&mut content, ITEM_TRANSFER_SYNTAX, ts.as_bytes());
                }
                push_item(&mut body, ITEM_CONTEXT_RQ, &content);
            }
            push_item(&mut body, ITEM_USER_INFO, &encode_user_info(&rq.user_info));
        }
        Pdu::AssociateAc(ac) => {
            encode_association_header(
                &mut body,
                ac.protocol_version,
                &ac.called_ae,
                &ac.calling_ae,
                &ac.application_context,
            );
            for pc in &ac.presentation_contexts {
                let mut content = vec![pc.id, 0, pc.result.code(), 0];
                push_item(&mut content, ITEM_TRANSFER_SYNTAX, pc.transfer_syntax.as_bytes());
                push_item(&mut body, ITEM_CONTEXT_AC, &content);
            }
            push_item(&mut body, ITEM_USER_INFO, &encode_user_info(&ac.user_info));
        }
        Pdu::AssociateRj(rj) => body.extend_from_slice(&[0, rj.result, rj.source, rj.reason]),
        Pdu::PData(pdvs) => {
            for pdv in pdvs {
                let control = u8::from(pdv.is_command) | (u8::from(pdv.is_last) << 1);
                body.extend_from_slice(&(pdv.data.len() as u32 + 2).to_be_bytes());
                body.push(pdv.context_id);
                body.push(control);
                body.extend_from_slice(&pdv.data);
            }
        }
        Pdu::ReleaseRq | Pdu::ReleaseRp => body.extend_from_slice(&[0; 4]),
        Pdu::Abort(a) => body.extend_from_slice(&[0, 0, a.source, a.reason]),
    }
    let mut out = Vec::with_capacity(body.len() + 6);
    out.push(pdu.pdu_type());
    out.push(0);
    out.extend_from_slice(&(body.len() as u32).to_be_bytes());
    out.extend(body);
    out
}

fn malformed(msg: impl Into<String>) -> PduError {
    PduError::Malformed(msg.into())
}

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], PduError> {
        if self.buf.len() - self.pos < n {
            return Err(PduError::Truncated {
                needed: n,
                available: self.buf.len() - self.pos,
            });
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn done(&self) -> bool {
        self.pos >= self.buf.len()
    }

    /// Reads one `type | reserved | u16 length | content` item.
    fn item(&mut self) -> Result<(u8, &'a [u8]), PduError> {
        let head = self.take(4)?;
        let len = u16::from_be_bytes([head[2], head[3]]) as usize;
        Ok((head[0], self.take(len)?))
    }
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes)
        .trim_end_matches(['\0', ' '])
        .trim_start_matches(' ')
        .to_string()
}

fn decode_user_info(content: &[u8]) -> Result<UserInfo, PduError> {
    let mut cur = Cursor { buf: content, pos: 0 };
    let mut items = Vec::new();
    while !cur.done() {
        let (t, data) = cur.item()?;
        items.push(match t {
            SUB_MAX_LENGTH => {
                let b: [u8; 4] = data
                    .try_into()
                    .map_err(|_| malformed("maximum length sub-item must be 4 bytes"))?;
                UserItem::MaxLength(u32::from_be_bytes(b))
            }
            SUB_IMPLEMENTATION_CLASS_UID => UserItem::ImplementationClassUid(text(data)),
            SUB_IMPLEMENTATION_VERSION_NAME => UserItem::ImplementationVersionName(text(data)),
            other => UserItem::Other {
                item_type: other,
                data: data.to_vec(),
            },
        });
    }
    Ok(UserInfo { items })
}

struct AssociationFields {
    version: u16,
    called: String,
    calling: String,
    app_context: String,
    user_info: UserInfo,
}

fn decode_association<F>(body: &[u8], mut on_context: F) -> Result<AssociationFields, PduError>
where
    F: FnMut(u8, &[u8]) -> Result<(), PduError>,
{
    let mut cur = Cursor { buf: body, pos: 0 };
    let fixed = cur.take(68)?;
    let version = u16::from_be_bytes([fixed[0], fixed[1]]);
    let called = text(&fixed[4..20]);
    let calling = text(&fixed[20..36]);
    let mut app_context = None;
    let mut user_info = UserInfo::default();
    while !cur.done() {
        let (t, content) = cur.item()?;
        match t {
            ITEM_APPLICATION_CONTEXT => app_context = Some(text(content)),
            ITEM_USER_INFO => user_info = decode_user_info(content)?,
            ITEM_CONTEXT_RQ | ITEM_CONTEXT_AC => on_context(t, content)?,
            other => log::debug!("ignoring association item 0x{other:02X}"),
        }
    }
    Ok(AssociationFields {
        version,
        called,
        calling,
        app_context: app_context.ok_or_else(|| malformed("missing application context item"))?,
        user_info,
    })
}

/// Decodes exactly one PDU from the start of `bytes`; trailing bytes are an error.
pub fn decode_pdu(bytes: &[u8]) -> Result<Pdu, PduError> {
    if bytes.len() < 6 {
        return Err(PduError::Truncated {
            needed: 6,
            available: bytes.len(),
        });
    }
    let pdu_type = bytes[0];
    if !(ASSOCIATE_RQ..=ABORT).contains(&pdu_type) {
        return Err(PduError::UnknownType(pdu_type));
    }
    let length = u32::from_be_bytes([bytes[2], bytes[3], bytes[4], bytes[5]]) as usize;
    if bytes.len() - 6 < length {
        return Err(PduError::Truncated {
            needed: length,
            available: bytes.len() - 6,
        });
    }
    if bytes.len() - 6 > length {
        return Err(malformed(format!(
            "{} trailing bytes after PDU body",
            bytes.len() - 6 - length
        )));
    }
    decode_body(pdu_type, &bytes[6..])
}

fn decode_body(pdu_type: u8, body: &[u8]) -> Result<Pdu, PduError> {
    let fixed4 = |body: &[u8]| -> Result<[u8; 4], PduError> {
        body.try_into()
            .map_err(|_| malformed(format!("expected 4-byte body, got {}", body.len())))
    };
    match pdu_type {
        ASSOCIATE_RQ => {
            let mut contexts = Vec::new();
            let f = decode_association(body, |t, content| {
                if t != ITEM_CONTEXT_RQ {
                    return Err(malformed("accept context item in request"));
                }
                let mut cur = Cursor { buf: content, pos: 0 };
                let head = cur.take(4)?;
                let mut abstract_syntax = None;
                let mut transfer_syntaxes = Vec::new();
                while !cur.done() {
                    let (st, data) = cur.item()?;
                    match st {
                        ITEM_ABSTRACT_SYNTAX => abstract_syntax = Some(text(data)),
                        ITEM_TRANSFER_SYNTAX => transfer_syntaxes.push(text(data)),
                        other => return Err(malformed(format!("sub-item 0x{other:02X} in context"))),
                    }
                }
                contexts.push(ProposedContext {
                    id: head[0],
                    abstract_syntax: abstract_syntax
                        .ok_or_else(|| malformed("context without abstract syntax"))?,
                    transfer_syntaxes,
                });
                Ok(())
            })?;
            Ok(Pdu::AssociateRq(AssociateRq {
                protocol_version: f.version,
                called_ae: f.called,
                calling_ae: f.calling,
                application_context: f.app_context,
                presentation_contexts: contexts,
                user_info: f.user_info,
            }))
        }
        ASSOCIATE_AC => {
            let mut contexts = Vec::new();
            let f = decode_association(body, |t, content| {
                if t != ITEM_CONTEXT_AC {
                    return Err(malformed("request context item in accept"));
                }
                let mut cur = Cursor { buf: content, pos: 0 };
                let head = cur.take(4)?;
                let mut transfer_syntax = String::new();
                while !cur.done() {
                    let (st, data) = cur.item()?;
                    if st == ITEM_TRANSFER_SYNTAX {
                        transfer_syntax = text(data);
                    }
                }
                contexts.push(ContextReply {
                    id: head[0],
                    result: ContextResult::from_code(head[2]),
                    transfer_syntax,
                });
                Ok(())
            })?;
            Ok(Pdu::AssociateAc(AssociateAc {
                protocol_version: f.version,
                called_ae: f.called,
                calling_ae: f.calling,
                application_context: f.app_context,
                presentation_contexts: contexts,
                user_info: f.user_info,
            }))
        }
        ASSOCIATE_RJ => {
            let b = fixed4(body)?;
            Ok(Pdu::AssociateRj(AssociateRj {
                result: b[1],
                source: b[2],
                reason: b[3],
            }))
        }
        P_DATA_TF => {
            let mut pdvs = Vec::new();
            let mut pos = 0;
            while pos < body.len() {
                if body.len() - pos < 6 {
                    return Err(malformed("truncated PDV item header"));
                }
                let len = u32::from_be_bytes(body[pos..pos + 4].try_into().expect("4 bytes")) as usize;
                if len < 2 || body.len() - pos - 4 < len {
                    return Err(malformed(format!("PDV length {len} out of bounds")));
                }
                let control = body[pos + 5];
                pdvs.push(Pdv {
                    context_id: body[pos + 4],
                    is_command: control & 0x01 != 0,
                    is_last: control & 0x02 != 0,
                    data: body[pos + 6..pos + 4 + len].to_vec(),
                });
                pos += 4 + len;
            }
            Ok(Pdu::PData(pdvs))
        }
        RELEASE_RQ => fixed4(body).map(|_| Pdu::ReleaseRq),
        RELEASE_RP => fixed4(body).map(|_| Pdu::ReleaseRp),
        ABORT => {
            let b = fixed4(body)?;
            Ok(Pdu::Abort(Abort {
                source: b[2],
                reason: b[3],
            }))
        }
        other => Err(PduError::UnknownType(other)),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReadPduError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Pdu(#[from] PduError),
}

/// Reads one PDU from a stream.
pub fn read_pdu<R: Read>(reader: &mut R) -> Result<Pdu, ReadPduError> {
    let mut head = [0u8; 6];
    reader.read_exact(&mut head)?;
    if !(ASSOCIATE_RQ..=ABORT).contains(&head[0]) {
        return Err(PduError::UnknownType(head[0]).into());
    }
    let length = u32::from_be_bytes([head[2], head[3], head[4], head[5]]);
    if length > MAX_INCOMING_PDU {
        return Err(malformed(format!("PDU length {length} exceeds limit")).into());
    }
    let mut body = vec![0u8; length as usize];
    reader.read_exact(&mut body)?;
    Ok(decode_body(head[0], &body)?)
}

pub fn write_pdu<W: Write>(writer: &mut W, pdu: &Pdu) -> io::Result<()> {
    writer.write_all(&encode_pdu(pdu))?;
    writer.flush()
}

/// Splits one command or data set stream into P-DATA-TF PDUs, one PDV per
/// PDU, each PDU no longer than `max_pdu_length`. An empty payload still
/// yields a single final fragment.
pub fn fragment(context_id: u8, is_command: bool, payload: &[u8], max_pdu_length: u32) -> Vec<Pdu> {
    // PDV item header (length + context id + control) takes 6 bytes
    let chunk = (max_pdu_length as usize).saturating_sub(6).max(2);
    if payload.is_empty() {
        return vec![Pdu::PData(vec![Pdv {
            context_id,
            is_command,
            is_last: true,
            data: Vec::new(),
        }])];
    }
    let count = payload.len().div_ceil(chunk);
    payload
        .chunks(chunk)
        .enumerate()
        .map(|(i, data)| {
            Pdu::PData(vec![Pdv {
                context_id,
                is_command,
                is_last: i + 1 == count,
                data: data.to_vec(),
            }])
        })
        .collect()
}

/// Default A-ASSOCIATE-RQ fields for this implementation.
pub fn associate_rq(calling_ae: &str, called_ae: &str, contexts: Vec<ProposedContext>, max_pdu: u32) -> AssociateRq {
    AssociateRq {
        protocol_version: PROTOCOL_VERSION,
        called_ae: called_ae.to_string(),
        calling_ae: calling_ae.to_string(),
        application_context: uids::APPLICATION_CONTEXT.to_string(),
        presentation_contexts: contexts,
        user_info: UserInfo::new(
            max_pdu,
            uids::IMPLEMENTATION_CLASS_UID,
            uids::IMPLEMENTATION_VERSION_NAME,
        ),
    }
}
