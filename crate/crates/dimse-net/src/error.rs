use std::io;

use crate::pdu::{PduError, ReadPduError};
use crate::status::Status;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot connect to {addr}: {source}")]
    Connect { addr: String, source: io::Error },
    #[error("timed out after {0:?} waiting for the peer")]
    Timeout(std::time::Duration),
    #[error("i/o error: {0}")]
    Io(#[source] io::Error),
    #[error(transparent)]
    Pdu(#[from] PduError),
    #[error("data set codec error: {0}")]
    Codec(#[from] dicom_core::Error),
    #[error("association rejected (result {result}, source {source_code}, reason {reason})")]
    Rejected {
        result: u8,
        source_code: u8,
        reason: u8,
    },
    #[error("association aborted (source {source_code}, reason {reason})")]
    Aborted { source_code: u8, reason: u8 },
    #[error("invalid AE title {0:?}: must be 1-16 printable characters")]
    InvalidAeTitle(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no accepted presentation context for {0}")]
    NoAcceptedContext(String),
    #[error("move destination unknown to the peer (status {status}){}", comment.as_deref().map(|c| format!(": {c}")).unwrap_or_default())]
    MoveDestinationUnknown {
        status: Status,
        comment: Option<String>,
    },
    #[error("protocol error: {0}")]
    Protocol(String),
    #[error("cannot bind {addr}: {source}")]
    Bind { addr: String, source: io::Error },
}

impl Error {
    pub(crate) fn from_io(err: io::Error, timeout: std::time::Duration) -> Self {
        match err.kind() {
            io::ErrorKind::WouldBlock | io::ErrorKind::TimedOut => Error::Timeout(timeout),
            _ => Error::Io(err),
        }
    }

    pub(crate) fn from_read(err: ReadPduError, timeout: std::time::Duration) -> Self {
        match err {
            ReadPduError::Io(e) => Error::from_io(e, timeout),
            ReadPduError::Pdu(e) => Error::Pdu(e),
        }
    }
}
