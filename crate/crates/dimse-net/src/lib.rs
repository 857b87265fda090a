//! DICOM upper layer and DIMSE messaging over TCP: a blocking SCU
//! (C-ECHO, C-FIND, C-MOVE, C-STORE) and a thread-per-association SCP.

mod association;
mod channel;
pub mod command;
mod error;
pub mod pdu;
mod scu;
mod server;
pub mod status;

pub use association::{
    associate, validate_ae_title, AssociateOptions, Association, AssociationState, Peer,
    PresentationContext, Timeouts, DEFAULT_CONNECT_TIMEOUT, DEFAULT_DIMSE_TIMEOUT, NATIVE_SYNTAXES,
};
pub use command::{DimseMessage, SubOperations};
pub use error::{Error, Result};
pub use scu::{FindResult, MoveOutcome};
pub use server::{
    serve, AssociateFilter, AssociationInfo, EchoHandler, FindHandler, FindReply, Handlers,
    MoveHandler, MoveReply, MoveRequest, ServerConfig, ServerHandle, StoreHandler, StoreRequest,
};
pub use status::{Status, StatusClass};
