//! Message-level I/O over an established association: fragmentation of
//! outgoing command/data sets and reassembly of incoming PDVs.

use std::collections::HashMap;
use std::io::{BufReader, Write};
use std::net::TcpStream;
use std::time::Duration;

use dicom_core::{encode_dataset, parse_dataset, TransferSyntax};

use crate::command::{command_has_data, decode_command, encode_command, DimseMessage};
use crate::error::{Error, Result};
use crate::pdu::{encode_pdu, fragment, read_pdu, Abort, Pdu};

/// Used when the peer announces a maximum PDU length of 0 (no limit).
const UNLIMITED_FALLBACK: u32 = 1 << 20;

pub(crate) enum Event {
    Message(DimseMessage),
    ReleaseRequested,
    Aborted(Abort),
}

pub(crate) struct Channel {
    reader: BufReader<TcpStream>,
    writer: TcpStream,
    peer_max_pdu: u32,
    syntaxes: HashMap<u8, TransferSyntax>,
    timeout: Duration,
}

impl Channel {
    pub(crate) fn new(
        stream: TcpStream,
        peer_max_pdu: u32,
        syntaxes: HashMap<u8, TransferSyntax>,
        timeout: Duration,
    ) -> Result<Self> {
        let writer = stream.try_clone().map_err(Error::Io)?;
        Ok(Channel {
            reader: BufReader::new(stream),
            writer,
            peer_max_pdu: if peer_max_pdu == 0 {
                UNLIMITED_FALLBACK
            } else {
                peer_max_pdu
            },
            syntaxes,
            timeout,
        })
    }

    pub(crate) fn stream(&self) -> &TcpStream {
        &self.writer
    }

    pub(crate) fn syntax(&self, context_id: u8) -> Option<TransferSyntax> {
        self.syntaxes.get(&context_id).copied()
    }

    pub(crate) fn send_pdu(&mut self, pdu: &Pdu) -> Result<()> {
        self.writer
            .write_all(&encode_pdu(pdu))
            .map_err(|e| Error::from_io(e, self.timeout))
    }

    pub(crate) fn read_pdu(&mut self) -> Result<Pdu> {
        read_pdu(&mut self.reader).map_err(|e| Error::from_read(e, self.timeout))
    }

    pub(crate) fn send_message(&mut self, msg: &DimseMessage) -> Result<()> {
        let syntax = self.syntax(msg.context_id).ok_or_else(|| {
            Error::Protocol(format!("presentation context {} not accepted", msg.context_id))
        })?;
        let command = encode_command(&msg.command);
        for pdu in fragment(msg.context_id, true, &command, self.peer_max_pdu) {
            self.send_pdu(&pdu)?;
        }
        if let Some(data) = &msg.data {
            let bytes = encode_dataset(data, syntax)?;
            for pdu in fragment(msg.context_id, false, &bytes, self.peer_max_pdu) {
                self.send_pdu(&pdu)?;
            }
        }
        Ok(())
    }

    pub(crate) fn next_event(&mut self) -> Result<Event> {
        let mut assembly = Reassembly::default();
        loop {
            match self.read_pdu()? {
                Pdu::PData(pdvs) => {
                    for pdv in pdvs {
                        if !self.syntaxes.contains_key(&pdv.context_id) {
                            return Err(Error::Protocol(format!(
                                "PDV on unaccepted presentation context {}",
                                pdv.context_id
                            )));
                        }
                        assembly.push(pdv.context_id, pdv.is_command, pdv.is_last, &pdv.data)?;
                    }
                    if let Some(raw) = assembly.take_complete()? {
                        let syntax = self.syntaxes[&raw.context_id];
                        let data = raw
                            .data
                            .map(|bytes| parse_dataset(&bytes, syntax))
                            .transpose()?;
                        return Ok(Event::Message(DimseMessage {
                            command: raw.command,
                            data,
                            context_id: raw.context_id,
                        }));
                    }
                }
                Pdu::ReleaseRq if assembly.is_idle() => return Ok(Event::ReleaseRequested),
                Pdu::Abort(a) => return Ok(Event::Aborted(a)),
                other => {
                    return Err(Error::Protocol(format!(
                        "unexpected {} during message exchange",
                        other.name()
                    )))
                }
            }
        }
    }
}

pub(crate) struct RawMessage {
    pub command: dicom_core::DataSet,
    pub data: Option<Vec<u8>>,
    pub context_id: u8,
}

/// Accumulates PDV fragments of a single message.
#[derive(Default)]
pub(crate) struct Reassembly {
    context_id: Option<u8>,
    command: Vec<u8>,
    command_done: Option<dicom_core::DataSet>,
    data: Vec<u8>,
    data_done: bool,
    started: bool,
}

impl Reassembly {
    pub(crate) fn is_idle(&self) -> bool {
        !self.started
    }

    pub(crate) fn push(&mut self, context_id: u8, is_command: bool, is_last: bool, bytes: &[u8]) -> Result<()> {
        self.started = true;
        match self.context_id {
            None => self.context_id = Some(context_id),
            Some(id) if id != context_id => {
                return Err(Error::Protocol("PDVs of one message span contexts".into()))
            }
            _ => {}
        }
        if is_command {
            if self.command_done.is_some() {
                return Err(Error::Protocol("command fragment after final fragment".into()));
            }
            self.command.extend_from_slice(bytes);
            if is_last {
                self.command_done = Some(decode_command(&self.command)?);
            }
        } else {
            match &self.command_done {
                None => return Err(Error::Protocol("data fragment before command".into())),
                Some(cmd) if !command_has_data(cmd) => {
                    return Err(Error::Protocol("data fragment for a command without data set".into()))
                }
                _ => {}
            }
            if self.data_done {
                return Err(Error::Protocol("data fragment after final fragment".into()));
            }
            self.data.extend_from_slice(bytes);
            self.data_done = is_last;
        }
        Ok(())
    }

    pub(crate) fn take_complete(&mut self) -> Result<Option<RawMessage>> {
        let Some(cmd) = &self.command_done else {
            return Ok(None);
        };
        let wants_data = command_has_data(cmd);
        if wants_data && !self.data_done {
            return Ok(None);
        }
        let done = std::mem::take(self);
        Ok(Some(RawMessage {
            command: done.command_done.expect("checked above"),
            data: wants_data.then_some(done.data),
            context_id: done.context_id.expect("set with first fragment"),
        }))
    }
}
