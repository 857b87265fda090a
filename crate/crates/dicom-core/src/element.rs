use crate::dataset::DataSet;
use crate::tag::Tag;
use crate::vr::VR;

/// How a sequence and its items were (or will be) delimited on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SequenceLength {
    #[default]
    Defined,
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Sequence {
    pub items: Vec<DataSet>,
    pub length: SequenceLength,
}

impl Sequence {
    pub fn new(items: Vec<DataSet>) -> Self {
        Sequence {
            items,
            length: SequenceLength::Defined,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Bytes(Vec<u8>),
    Sequence(Sequence),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DataElement {
    pub tag: Tag,
    pub vr: VR,
    pub value: Value,
}

fn pad(mut bytes: Vec<u8>, vr: VR) -> Vec<u8> {
    if bytes.len() % 2 == 1 {
        bytes.push(vr.padding());
    }
    bytes
}

impl DataElement {
    /// Raw value; odd lengths are padded with the VR's padding byte.
    pub fn new(tag: Tag, vr: VR, bytes: Vec<u8>) -> Self {
        DataElement {
            tag,
            vr,
            value: Value::Bytes(pad(bytes, vr)),
        }
    }

    pub fn empty(tag: Tag, vr: VR) -> Self {
        DataElement::new(tag, vr, Vec::new())
    }

    pub fn str(tag: Tag, vr: VR, value: &str) -> Self {
        DataElement::new(tag, vr, value.as_bytes().to_vec())
    }

    pub fn strs<S: AsRef<str>>(tag: Tag, vr: VR, values: &[S]) -> Self {
        let joined = values.iter().map(|s| s.as_ref()).collect::<Vec<_>>().join("\\");
        DataElement::str(tag, vr, &joined)
    }

    pub fn u16s(tag: Tag, values: &[u16]) -> Self {
        DataElement::new(tag, VR::US, values.iter().flat_map(|v| v.to_le_bytes()).collect())
    }

    pub fn u32s(tag: Tag, values: &[u32]) -> Self {
        DataElement::new(tag, VR::UL, values.iter().flat_map(|v| v.to_le_bytes()).collect())
    }

    pub fn tags(tag: Tag, values: &[Tag]) -> Self {
        let bytes = values
            .iter()
            .flat_map(|t| {
                let [a, b] = t.group.to_le_bytes();
                let [c, d] = t.element.to_le_bytes();
                [a, b, c, d]
            })
            .collect();
        DataElement::new(tag, VR::AT, bytes)
    }

    /// Builds an element from its textual form: string VRs verbatim,
    /// binary numeric VRs from backslash-separated numbers, AT from
    /// backslash-separated tags. Returns `None` for bulk and sequence VRs
    /// or unparsable numbers.
    pub fn from_text(tag: Tag, vr: VR, text: &str) -> Option<Self> {
        fn nums<T: std::str::FromStr>(text: &str) -> Option<Vec<T>> {
            if text.trim().is_empty() {
                return Some(Vec::new());
            }
            text.split('\\').map(|v| v.trim().parse().ok()).collect()
        }
        let bytes: Vec<u8> = match vr {
            _ if vr.is_string() => return Some(DataElement::str(tag, vr, text)),
            VR::US => nums::<u16>(text)?.iter().flat_map(|v| v.to_le_bytes()).collect(),
            VR::SS => nums::<i16>(text)?.iter().flat_map(|v| v.to_le_bytes()).collect(),
            VR::UL => nums::<u32>(text)?.iter().flat_map(|v| v.to_le_bytes()).collect(),
            VR::SL => nums::<i32>(text)?.iter().flat_map(|v| v.to_le_bytes()).collect(),
            VR::FL => nums::<f32>(text)?.iter().flat_map(|v| v.to_le_bytes()).collect(),
            VR::FD => nums::<f64>(text)?.iter().flat_map(|v| v.to_le_bytes()).collect(),
            VR::AT => {
                let tags: Option<Vec<Tag>> = if text.trim().is_empty() {
                    Some(Vec::new())
                } else {
                    text.split('\\').map(|t| t.trim().parse().ok()).collect()
                };
                return Some(DataElement::tags(tag, &tags?));
            }
            _ => return None,
        };
        Some(DataElement::new(tag, vr, bytes))
    }

    pub fn sequence(tag: Tag, sequence: Sequence) -> Self {
        DataElement {
            tag,
            vr: VR::SQ,
            value: Value::Sequence(sequence),
        }
    }

    pub fn bytes(&self) -> Option<&[u8]> {
        match &self.value {
            Value::Bytes(b) => Some(b),
            Value::Sequence(_) => None,
        }
    }

    pub fn items(&self) -> Option<&[DataSet]> {
        match &self.value {
            Value::Sequence(s) => Some(&s.items),
            Value::Bytes(_) => None,
        }
    }

    /// Zero-length value (a universal-match key in a query identifier).
    pub fn is_empty(&self) -> bool {
        match &self.value {
            Value::Bytes(b) => b.is_empty(),
            Value::Sequence(s) => s.items.is_empty(),
        }
    }

    /// Whole string value with trailing padding (spaces, NULs) removed.
    /// Multi-valued content keeps its backslashes.
    pub fn to_str(&self) -> Option<String> {
        let bytes = self.bytes()?;
        let text = String::from_utf8_lossy(bytes);
        Some(text.trim_end_matches([' ', '\0']).to_string())
    }

    /// Individual values of a multi-valued string, each trimmed.
    pub fn strings(&self) -> Option<Vec<String>> {
        let whole = self.to_str()?;
        if whole.is_empty() {
            return Some(Vec::new());
        }
        Some(
            whole
                .split('\\')
                .map(|v| v.trim_matches([' ', '\0']).to_string())
                .collect(),
        )
    }

    /// Unsigned binary values (US or UL).
    pub fn uints(&self) -> Option<Vec<u32>> {
        let bytes = self.bytes()?;
        match self.vr {
            VR::US => Some(
                bytes
                    .chunks_exact(2)
                    .map(|c| u16::from_le_bytes([c[0], c[1]]) as u32)
                    .collect(),
            ),
            VR::UL => Some(
                bytes
                    .chunks_exact(4)
                    .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Integer values from binary (US, UL, SS, SL) or integer-string (IS) VRs.
    pub fn ints(&self) -> Option<Vec<i64>> {
        let bytes = self.bytes()?;
        match self.vr {
            VR::US | VR::UL => Some(self.uints()?.into_iter().map(i64::from).collect()),
            VR::SS => Some(
                bytes
                    .chunks_exact(2)
                    .map(|c| i16::from_le_bytes([c[0], c[1]]) as i64)
                    .collect(),
            ),
            VR::SL => Some(
                bytes
                    .chunks_exact(4)
                    .map(|c| i32::from_le_bytes([c[0], c[1], c[2], c[3]]) as i64)
                    .collect(),
            ),
            VR::IS => self
                .strings()?
                .iter()
                .map(|s| s.trim().parse::<i64>().ok())
                .collect(),
            _ => None,
        }
    }

    /// Real values from DS, IS, FL or FD, plus the integer binary VRs.
    pub fn floats(&self) -> Option<Vec<f64>> {
        let bytes = self.bytes()?;
        match self.vr {
            VR::DS | VR::IS => self
                .strings()?
                .iter()
                .map(|s| s.trim().parse::<f64>().ok())
                .collect(),
            VR::FL => Some(
                bytes
                    .chunks_exact(4)
                    .map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]]) as f64)
                    .collect(),
            ),
            VR::FD => Some(
                bytes
                    .chunks_exact(8)
                    .map(|c| f64::from_le_bytes(c.try_into().expect("chunk of 8")))
                    .collect(),
            ),
            _ => Some(self.ints()?.into_iter().map(|v| v as f64).collect()),
        }
    }

    pub fn tag_values(&self) -> Option<Vec<Tag>> {
        if self.vr != VR::AT {
            return None;
        }
        Some(
            self.bytes()?
                .chunks_exact(4)
                .map(|c| {
                    Tag::new(
                        u16::from_le_bytes([c[0], c[1]]),
                        u16::from_le_bytes([c[2], c[3]]),
                    )
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MODALITY: Tag = Tag::new(0x0008, 0x0060);

    #[test]
    fn odd_strings_are_padded() {
        let e = DataElement::str(MODALITY, VR::CS, "ABC");
        assert_eq!(e.bytes().unwrap(), b"ABC ");
        assert_eq!(e.to_str().unwrap(), "ABC");

        let uid = DataElement::str(Tag::new(0x0020, 0x000D), VR::UI, "1.2.3");
        assert_eq!(uid.bytes().unwrap(), b"1.2.3\0");
        assert_eq!(uid.to_str().unwrap(), "1.2.3");
    }

    #[test]
    fn multi_valued_strings() {
        let e = DataElement::strs(Tag::new(0x0008, 0x0008), VR::CS, &["ORIGINAL", "PRIMARY", "AXIAL"]);
        assert_eq!(e.bytes().unwrap(), b"ORIGINAL\\PRIMARY\\AXIAL");
        let odd = DataElement::strs(Tag::new(0x0008, 0x0008), VR::CS, &["A", "B"]);
        assert_eq!(odd.bytes().unwrap(), b"A\\B ");
        assert_eq!(e.strings().unwrap(), vec!["ORIGINAL", "PRIMARY", "AXIAL"]);
        assert_eq!(DataElement::empty(MODALITY, VR::CS).strings().unwrap(), Vec::<String>::new());
    }

    #[test]
    fn binary_accessors() {
        let rows = DataElement::u16s(Tag::new(0x0028, 0x0010), &[512, 7]);
        assert_eq!(rows.uints().unwrap(), vec![512, 7]);
        assert_eq!(rows.ints().unwrap(), vec![512, 7]);

        let ss = DataElement::new(Tag::new(0x0028, 0x0106), VR::SS, vec![0xFF, 0xFF]);
        assert_eq!(ss.ints().unwrap(), vec![-1]);

        let ds = DataElement::str(Tag::new(0x0028, 0x1050), VR::DS, "40\\-600.5");
        assert_eq!(ds.floats().unwrap(), vec![40.0, -600.5]);

        let is = DataElement::str(Tag::new(0x0020, 0x0013), VR::IS, " 12");
        assert_eq!(is.ints().unwrap(), vec![12]);

        let at = DataElement::tags(Tag::new(0x0020, 0x5000), &[Tag::new(0x0010, 0x0010)]);
        assert_eq!(at.bytes().unwrap(), &[0x10, 0, 0x10, 0]);
        assert_eq!(at.tag_values().unwrap(), vec![Tag::new(0x0010, 0x0010)]);
    }

    #[test]
    fn values_from_text() {
        let rows = DataElement::from_text(Tag::new(0x0028, 0x0010), VR::US, "16").unwrap();
        assert_eq!(rows.bytes().unwrap(), &[16, 0]);
        let ss = DataElement::from_text(Tag::new(0x0028, 0x0106), VR::SS, "-1\\2").unwrap();
        assert_eq!(ss.ints().unwrap(), vec![-1, 2]);
        let pn = DataElement::from_text(Tag::new(0x0010, 0x0010), VR::PN, "DOE^JOHN").unwrap();
        assert_eq!(pn.to_str().unwrap(), "DOE^JOHN");
        let at = DataElement::from_text(Tag::new(0x0020, 0x5000), VR::AT, "(0010,0010)").unwrap();
        assert_eq!(at.tag_values().unwrap(), vec![Tag::new(0x0010, 0x0010)]);
        assert!(DataElement::from_text(Tag::new(0x0028, 0x0010), VR::US, "x").is_none());
        assert!(DataElement::from_text(Tag::new(0x7FE0, 0x0010), VR::OB, "1").is_none());
        assert!(DataElement::from_text(Tag::new(0x0028, 0x0010), VR::US, "").unwrap().is_empty());
    }
}
