//! Client operations on an established association.

use dicom_core::{tags, uids, DataSet};

use crate::association::{validate_ae_title, Association};
use crate::command::{self, DimseMessage, StoreRq, SubOperations};
use crate::error::{Error, Result};
use crate::status::Status;

/// Terminal outcome of a C-FIND.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FindResult {
    pub status: Status,
    pub matches: usize,
    pub error_comment: Option<String>,
}

/// Terminal outcome of a C-MOVE, with the final sub-operation counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveOutcome {
    pub remaining: u16,
    pub completed: u16,
    pub failed: u16,
    pub warning: u16,
    pub status: Status,
    pub error_comment: Option<String>,
}

impl Association {
    fn expect_response(&mut self, message_id: u16, field: u16) -> Result<DimseMessage> {
        let rsp = self.receive()?;
        if rsp.responded_to() != Some(message_id) {
            self.abort();
            return Err(Error::Protocol(format!(
                "response to message {:?}, expected {message_id}",
                rsp.responded_to()
            )));
        }
        if rsp.command_field() != Some(field) {
            self.abort();
            return Err(Error::Protocol(format!(
                "command field {:?}, expected 0x{field:04X}",
                rsp.command_field()
            )));
        }
        Ok(rsp)
    }

    fn status_of(&mut self, rsp: &DimseMessage) -> Result<Status> {
        match rsp.status() {
            Some(s) => Ok(s),
            None => {
                self.abort();
                Err(Error::Protocol("response without status".into()))
            }
        }
    }

    /// C-ECHO; requires an accepted Verification context.
    pub fn c_echo(&mut self) -> Result<Status> {
        self.ensure_established()?;
        let (ctx, _) = self.context_for(uids::VERIFICATION)?;
        let id = self.next_id();
        self.send(&DimseMessage {
            command: command::echo_rq(id),
            data: None,
            context_id: ctx,
        })?;
        let rsp = self.expect_response(id, command::C_ECHO_RSP)?;
        self.status_of(&rsp)
    }

    /// Study Root C-FIND. `on_match` runs once per pending response that
    /// carries an identifier.
    pub fn c_find(&mut self, identifier: &DataSet, mut on_match: impl FnMut(DataSet)) -> Result<FindResult> {
        self.ensure_established()?;
        if !identifier.contains(tags::QUERY_RETRIEVE_LEVEL) {
            return Err(Error::Precondition("identifier lacks QueryRetrieveLevel (0008,0052)".into()));
        }
        let (ctx, _) = self.context_for(uids::STUDY_ROOT_QR_FIND)?;
        let id = self.next_id();
        self.send(&DimseMessage {
            command: command::find_rq(id, uids::STUDY_ROOT_QR_FIND),
            data: Some(identifier.clone()),
            context_id: ctx,
        })?;
        let mut matches = 0;
        loop {
            let rsp = self.expect_response(id, command::C_FIND_RSP)?;
            let status = self.status_of(&rsp)?;
            if status.is_pending() {
                if let Some(data) = rsp.data {
                    matches += 1;
                    on_match(data);
                }
                continue;
            }
            return Ok(FindResult {
                status,
                matches,
                error_comment: rsp.error_comment(),
            });
        }
    }

    /// Study Root C-MOVE to `destination_ae`. Pending responses are drained;
    /// status 0xA801 is reported as [`Error::MoveDestinationUnknown`].
    pub fn c_move(&mut self, identifier: &DataSet, destination_ae: &str) -> Result<MoveOutcome> {
        self.c_move_with_progress(identifier, destination_ae, |_| {})
    }

    pub fn c_move_with_progress(
        &mut self,
        identifier: &DataSet,
        destination_ae: &str,
        mut on_pending: impl FnMut(SubOperations),
    ) -> Result<MoveOutcome> {
        self.ensure_established()?;
        if destination_ae.trim().is_empty() {
            return Err(Error::Precondition("move destination is empty".into()));
        }
        validate_ae_title(destination_ae).map_err(|e| Error::Precondition(e.to_string()))?;
        let (ctx, _) = self.context_for(uids::STUDY_ROOT_QR_MOVE)?;
        let id = self.next_id();
        self.send(&DimseMessage {
            command: command::move_rq(id, uids::STUDY_ROOT_QR_MOVE, destination_ae.trim()),
            data: Some(identifier.clone()),
            context_id: ctx,
        })?;
        let mut last = SubOperations::default();
        loop {
            let rsp = self.expect_response(id, command::C_MOVE_RSP)?;
            let status = self.status_of(&rsp)?;
            let ops = rsp.sub_operations();
            if status.is_pending() {
                last = ops;
                on_pending(ops);
                continue;
            }
            if status == Status::MOVE_DESTINATION_UNKNOWN {
                return Err(Error::MoveDestinationUnknown {
                    status,
                    comment: rsp.error_comment(),
                });
            }
            let has_counts = rsp.command.contains(tags::NUMBER_OF_COMPLETED_SUBOPERATIONS);
            let ops = if has_counts { ops } else { last };
            return Ok(MoveOutcome {
                remaining: ops.remaining.unwrap_or(0),
                completed: ops.completed,
                failed: ops.failed,
                warning: ops.warning,
                status,
                error_comment: rsp.error_comment(),
            });
        }
    }

    /// C-STORE of one instance, as issued by a move SCP for sub-operations.
    pub fn c_store(
        &mut self,
        sop_class: &str,
        sop_instance: &str,
        dataset: &DataSet,
        move_originator: Option<(&str, u16)>,
    ) -> Result<Status> {
        self.ensure_established()?;
        let (ctx, _) = self.context_for(sop_class)?;
        let id = self.next_id();
        self.send(&DimseMessage {
            command: command::store_rq(&StoreRq {
                message_id: id,
                sop_class,
                sop_instance,
                move_originator,
            }),
            data: Some(dataset.clone()),
            context_id: ctx,
        })?;
        let rsp = self.expect_response(id, command::C_STORE_RSP)?;
        self.status_of(&rsp)
    }
}
