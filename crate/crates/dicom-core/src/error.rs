use crate::tag::Tag;
use crate::vr::VR;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("truncated element header at offset {offset}")]
    Truncated { offset: usize },
    #[error("element {tag} declares {length} bytes but only {available} remain")]
    LengthOverrun {
        tag: Tag,
        length: u32,
        available: usize,
    },
    #[error("element {tag} has odd length {length}")]
    OddLength { tag: Tag, length: u32 },
    #[error("undefined length is not supported for {tag} with VR {vr}")]
    UndefinedLength { tag: Tag, vr: VR },
    #[error("unexpected {tag} at offset {offset}")]
    UnexpectedDelimiter { tag: Tag, offset: usize },
    #[error("value of {tag} ({length} bytes) does not fit a 16-bit {vr} length field")]
    ValueTooLong { tag: Tag, vr: VR, length: usize },
    #[error("sequence nesting deeper than {0} levels")]
    NestingTooDeep(usize),
    #[error("missing DICM magic after preamble")]
    MissingMagic,
    #[error("file meta group has no transfer syntax UID")]
    MissingTransferSyntax,
    #[error("unsupported transfer syntax {0} (compressed or big-endian encodings are not handled)")]
    UnsupportedTransferSyntax(String),
    #[error("file meta field {0} is empty")]
    EmptyMetaField(&'static str),
}
