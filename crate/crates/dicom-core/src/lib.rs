//! DICOM data model and native codecs.
//!
//! Provides [`Tag`], [`VR`], [`DataElement`] and [`DataSet`], an embedded
//! data dictionary subset, implicit/explicit VR little-endian codecs and
//! Part 10 file reading and writing.

pub mod codec;
pub mod dataset;
pub mod dictionary;
pub mod element;
pub mod error;
pub mod part10;
pub mod tag;
pub mod tags;
pub mod uids;
pub mod vr;

pub use codec::{encode_dataset, parse_dataset, TransferSyntax};
pub use dataset::DataSet;
pub use dictionary::{lookup, DictEntry};
pub use element::{DataElement, Sequence, SequenceLength, Value};
pub use error::{Error, Result};
pub use part10::{read_part10_file, write_part10_file, FileMeta};
pub use tag::Tag;
pub use vr::VR;
