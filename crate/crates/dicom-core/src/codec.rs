//! Native little-endian data set codecs (implicit and explicit VR).

use crate::dataset::DataSet;
use crate::dictionary;
use crate::element::{DataElement, Sequence, SequenceLength, Value};
use crate::error::{Error, Result};
use crate::tag::Tag;
use crate::tags;
use crate::uids;
use crate::vr::VR;

const UNDEFINED_LENGTH: u32 = 0xFFFF_FFFF;
const MAX_DEPTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransferSyntax {
    ImplicitVrLittleEndian,
    ExplicitVrLittleEndian,
}

impl TransferSyntax {
    pub const ALL: [TransferSyntax; 2] = [
        TransferSyntax::ImplicitVrLittleEndian,
        TransferSyntax::ExplicitVrLittleEndian,
    ];

    /// Trailing NUL padding on the UID is ignored.
    pub fn from_uid(uid: &str) -> Result<Self> {
        match uid.trim_end_matches(['\0', ' ']) {
            uids::IMPLICIT_VR_LITTLE_ENDIAN => Ok(TransferSyntax::ImplicitVrLittleEndian),
            uids::EXPLICIT_VR_LITTLE_ENDIAN => Ok(TransferSyntax::ExplicitVrLittleEndian),
            other => Err(Error::UnsupportedTransferSyntax(other.to_string())),
        }
    }

    pub fn uid(self) -> &'static str {
        match self {
            TransferSyntax::ImplicitVrLittleEndian => uids::IMPLICIT_VR_LITTLE_ENDIAN,
            TransferSyntax::ExplicitVrLittleEndian => uids::EXPLICIT_VR_LITTLE_ENDIAN,
        }
    }

    pub fn is_explicit(self) -> bool {
        self == TransferSyntax::ExplicitVrLittleEndian
    }
}

struct Header {
    tag: Tag,
    vr: VR,
    length: u32,
}

/// Cursor over an encoded data set. `base` is the absolute offset of
/// `buf[0]` so errors report positions in the caller's buffer.
pub(crate) struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
    base: usize,
    explicit: bool,
}

impl<'a> Reader<'a> {
    pub(crate) fn new(buf: &'a [u8], base: usize, syntax: TransferSyntax) -> Self {
        Reader {
            buf,
            pos: 0,
            base,
            explicit: syntax.is_explicit(),
        }
    }

    fn sub(&self, buf: &'a [u8], start: usize) -> Reader<'a> {
        Reader {
            buf,
            pos: 0,
            base: self.base + start,
            explicit: self.explicit,
        }
    }

    pub(crate) fn position(&self) -> usize {
        self.pos
    }

    pub(crate) fn is_at_end(&self) -> bool {
        self.pos >= self.buf.len()
    }

    fn remaining(&self) -> usize {
        self.buf.len() - self.pos
    }

    fn offset(&self) -> usize {
        self.base + self.pos
    }

    fn u16(&mut self) -> u16 {
        let v = u16::from_le_bytes([self.buf[self.pos], self.buf[self.pos + 1]]);
        self.pos += 2;
        v
    }

    fn u32(&mut self) -> u32 {
        let b = &self.buf[self.pos..self.pos + 4];
        self.pos += 4;
        u32::from_le_bytes([b[0], b[1], b[2], b[3]])
    }

    pub(crate) fn peek_tag(&self) -> Option<Tag> {
        if self.remaining() < 4 {
            return None;
        }
        let b = &self.buf[self.pos..];
        Some(Tag::new(
            u16::from_le_bytes([b[0], b[1]]),
            u16::from_le_bytes([b[2], b[3]]),
        ))
    }

    fn header(&mut self) -> Result<Header> {
        if self.remaining() < 8 {
            return Err(Error::Truncated {
                offset: self.offset(),
            });
        }
        let start = self.offset();
        let tag = Tag::new(self.u16(), self.u16());
        if tag.group == 0xFFFE {
            // items and delimiters never carry a VR
            return Ok(Header {
                tag,
                vr: VR::UN,
                length: self.u32(),
            });
        }
        if !self.explicit {
            let length = self.u32();
            let mut vr = dictionary::implicit_vr(tag);
            if length == UNDEFINED_LENGTH && vr == VR::UN {
                vr = VR::SQ;
            }
            return Ok(Header { tag, vr, length });
        }
        let code = [self.buf[self.pos], self.buf[self.pos + 1]];
        self.pos += 2;
        match VR::from_bytes(code) {
            Some(vr) if !vr.has_long_length() => Ok(Header {
                tag,
                vr,
                length: self.u16() as u32,
            }),
            known => {
                if self.remaining() < 6 {
                    return Err(Error::Truncated { offset: start });
                }
                self.pos += 2;
                Ok(Header {
                    tag,
                    vr: known.unwrap_or(VR::UN),
                    length: self.u32(),
                })
            }
        }
    }

    fn take(&mut self, tag: Tag, length: u32) -> Result<&'a [u8]> {
        if length as usize > self.remaining() {
            return Err(Error::LengthOverrun {
                tag,
                length,
                available: self.remaining(),
            });
        }
        let slice = &self.buf[self.pos..self.pos + length as usize];
        self.pos += length as usize;
        Ok(slice)
    }

    pub(crate) fn element(&mut self, depth: usize) -> Result<DataElement> {
        let start = self.offset();
        let Header { tag, vr, length } = self.header()?;
        if tag.group == 0xFFFE {
            return Err(Error::UnexpectedDelimiter { tag, offset: start });
        }
        if vr == VR::SQ {
            let sequence = self.sequence(tag, length, depth + 1)?;
            return Ok(DataElement::sequence(tag, sequence));
        }
        if length == UNDEFINED_LENGTH {
            return Err(Error::UndefinedLength { tag, vr });
        }
        if length % 2 == 1 {
            return Err(Error::OddLength { tag, length });
        }
        let bytes = self.take(tag, length)?.to_vec();
        Ok(DataElement {
            tag,
            vr,
            value: Value::Bytes(bytes),
        })
    }

    fn sequence(&mut self, tag: Tag, length: u32, depth: usize) -> Result<Sequence> {
        if depth > MAX_DEPTH {
            return Err(Error::NestingTooDeep(MAX_DEPTH));
        }
        let mut items = Vec::new();
        if length == UNDEFINED_LENGTH {
            loop {
                let at = self.offset();
                let h = self.header()?;
                match h.tag {
                    tags::SEQUENCE_DELIMITATION => break,
                    tags::ITEM => items.push(self.item(h.length, depth)?),
                    other => return Err(Error::UnexpectedDelimiter { tag: other, offset: at }),
                }
            }
            return Ok(Sequence {
                items,
                length: SequenceLength::Undefined,
            });
        }
        let start = self.pos;
        let body = self.take(tag, length)?;
        let mut inner = self.sub(body, start);
        while !inner.is_at_end() {
            let at = inner.offset();
            let h = inner.header()?;
            if h.tag != tags::ITEM {
                return Err(Error::UnexpectedDelimiter { tag: h.tag, offset: at });
            }
            items.push(inner.item(h.length, depth)?);
        }
        Ok(Sequence {
            items,
            length: SequenceLength::Defined,
        })
    }

    fn item(&mut self, length: u32, depth: usize) -> Result<DataSet> {
        let mut ds = DataSet::new();
        if length == UNDEFINED_LENGTH {
            loop {
                match self.peek_tag() {
                    Some(tags::ITEM_DELIMITATION) => {
                        self.header()?;
                        return Ok(ds);
                    }
                    Some(_) => {
                        ds.insert(self.element(depth)?);
                    }
                    None => {
                        return Err(Error::Truncated {
                            offset: self.offset(),
                        })
                    }
                }
            }
        }
        let start = self.pos;
        let body = self.take(tags::ITEM, length)?;
        let mut inner = self.sub(body, start);
        while !inner.is_at_end() {
            ds.insert(inner.element(depth)?);
        }
        Ok(ds)
    }
}

/// Decodes a data set. Elements may appear in any order; the result is
/// normalized to tag order.
pub fn parse_dataset(bytes: &[u8], syntax: TransferSyntax) -> Result<DataSet> {
    let mut reader = Reader::new(bytes, 0, syntax);
    let mut ds = DataSet::new();
    while !reader.is_at_end() {
        ds.insert(reader.element(0)?);
    }
    Ok(ds)
}

/// Encodes a data set in ascending tag order. Odd-length values are padded.
pub fn encode_dataset(ds: &DataSet, syntax: TransferSyntax) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    write_dataset(ds, syntax.is_explicit(), &mut out)?;
    Ok(out)
}

/// Encoded size of one element under `syntax`.
pub fn encoded_len(element: &DataElement, syntax: TransferSyntax) -> Result<usize> {
    let mut out = Vec::new();
    write_element(element, syntax.is_explicit(), &mut out)?;
    Ok(out.len())
}

fn write_dataset(ds: &DataSet, explicit: bool, out: &mut Vec<u8>) -> Result<()> {
    for element in ds {
        write_element(element, explicit, out)?;
    }
    Ok(())
}

fn write_tag(tag: Tag, out: &mut Vec<u8>) {
    out.extend_from_slice(&tag.group.to_le_bytes());
    out.extend_from_slice(&tag.element.to_le_bytes());
}

fn write_header(tag: Tag, vr: VR, length: u32, explicit: bool, out: &mut Vec<u8>) -> Result<()> {
    write_tag(tag, out);
    if !explicit {
        out.extend_from_slice(&length.to_le_bytes());
        return Ok(());
    }
    out.extend_from_slice(&vr.code());
    if vr.has_long_length() {
        out.extend_from_slice(&[0, 0]);
        out.extend_from_slice(&length.to_le_bytes());
    } else {
        let short = u16::try_from(length).map_err(|_| Error::ValueTooLong {
            tag,
            vr,
            length: length as usize,
        })?;
        out.extend_from_slice(&short.to_le_bytes());
    }
    Ok(())
}

fn write_element(element: &DataElement, explicit: bool, out: &mut Vec<u8>) -> Result<()> {
    match &element.value {
        Value::Bytes(bytes) => {
            let padded = bytes.len() + bytes.len() % 2;
            let length = u32::try_from(padded).map_err(|_| Error::ValueTooLong {
                tag: element.tag,
                vr: element.vr,
                length: padded,
            })?;
            write_header(element.tag, element.vr, length, explicit, out)?;
            out.extend_from_slice(bytes);
            if bytes.len() % 2 == 1 {
                out.push(element.vr.padding());
            }
        }
        Value::Sequence(seq) => {
            let undefined = seq.length == SequenceLength::Undefined;
            let mut body = Vec::new();
            for item in &seq.items {
                let mut content = Vec::new();
                write_dataset(item, explicit, &mut content)?;
                write_tag(tags::ITEM, &mut body);
                if undefined {
                    body.extend_from_slice(&UNDEFINED_LENGTH.to_le_bytes());
                    body.extend_from_slice(&content);
                    write_tag(tags::ITEM_DELIMITATION, &mut body);
                    body.extend_from_slice(&0u32.to_le_bytes());
                } else {
                    body.extend_from_slice(&(content.len() as u32).to_le_bytes());
                    body.extend_from_slice(&content);
                }
            }
            let length = if undefined {
                UNDEFINED_LENGTH
            } else {
                body.len() as u32
            };
            write_header(element.tag, VR::SQ, length, explicit, out)?;
            out.extend_from_slice(&body);
            if undefined {
                write_tag(tags::SEQUENCE_DELIMITATION, out);
                out.extend_from_slice(&0u32.to_le_bytes());
            }
        }
    }
    Ok(())
}
