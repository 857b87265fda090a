use std::collections::HashMap;
use std::net::{TcpStream, ToSocketAddrs};
use std::time::Duration;

use dicom_core::{uids, TransferSyntax};

use crate::channel::{Channel, Event};
use crate::command::DimseMessage;
use crate::error::{Error, Result};
use crate::pdu::{
    Abort, AssociateRq, ContextResult, Pdu, ProposedContext, UserInfo, DEFAULT_MAX_PDU_LENGTH,
    PROTOCOL_VERSION,
};

pub const DEFAULT_CONNECT_TIMEOUT: Duration = Duration::from_secs(5);
pub const DEFAULT_DIMSE_TIMEOUT: Duration = Duration::from_secs(30);

/// Transfer syntaxes proposed and accepted by default, in preference order.
pub const NATIVE_SYNTAXES: [&str; 2] = [
    uids::IMPLICIT_VR_LITTLE_ENDIAN,
    uids::EXPLICIT_VR_LITTLE_ENDIAN,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Timeouts {
    pub connect: Duration,
    pub dimse: Duration,
}

impl Default for Timeouts {
    fn default() -> Self {
        Timeouts {
            connect: DEFAULT_CONNECT_TIMEOUT,
            dimse: DEFAULT_DIMSE_TIMEOUT,
        }
    }
}

/// A remote application entity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peer {
    pub host: String,
    pub port: u16,
    pub ae_title: String,
}

impl Peer {
    pub fn new(host: impl Into<String>, port: u16, ae_title: impl Into<String>) -> Self {
        Peer {
            host: host.into(),
            port,
            ae_title: ae_title.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationContext {
    pub id: u8,
    pub abstract_syntax: String,
    pub transfer_syntaxes: Vec<String>,
    pub accepted_syntax: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssociationState {
    Idle,
    Established,
    Released,
    Aborted,
}

#[derive(Debug, Clone)]
pub struct AssociateOptions {
    pub calling_ae: String,
    /// Abstract syntax with its proposed transfer syntaxes.
    pub contexts: Vec<(String, Vec<String>)>,
    pub timeouts: Timeouts,
    pub max_pdu_length: u32,
    pub implementation_class_uid: String,
    pub implementation_version_name: String,
}

impl AssociateOptions {
    pub fn new(calling_ae: impl Into<String>) -> Self {
        AssociateOptions {
            calling_ae: calling_ae.into(),
            contexts: Vec::new(),
            timeouts: Timeouts::default(),
            max_pdu_length: DEFAULT_MAX_PDU_LENGTH,
            implementation_class_uid: uids::IMPLEMENTATION_CLASS_UID.to_string(),
            implementation_version_name: uids::IMPLEMENTATION_VERSION_NAME.to_string(),
        }
    }

    /// Proposes `abstract_syntax` with the native transfer syntaxes.
    pub fn with_abstract(self, abstract_syntax: &str) -> Self {
        self.with_context(abstract_syntax, &NATIVE_SYNTAXES)
    }

    pub fn with_context(mut self, abstract_syntax: &str, transfer_syntaxes: &[&str]) -> Self {
        self.contexts.push((
            abstract_syntax.to_string(),
            transfer_syntaxes.iter().map(|s| s.to_string()).collect(),
        ));
        self
    }

    pub fn with_timeouts(mut self, timeouts: Timeouts) -> Self {
        self.timeouts = timeouts;
        self
    }
}

/// AE titles: 1 to 16 printable ASCII characters, no backslash,
/// not all spaces. Surrounding spaces are not significant.
pub fn validate_ae_title(title: &str) -> Result<()> {
    let ok = !title.trim().is_empty()
        && title.len() <= 16
        && title.bytes().all(|b| (0x20..0x7F).contains(&b) && b != b'\\');
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidAeTitle(title.to_string()))
    }
}

fn connect(host: &str, port: u16, timeout: Duration) -> Result<TcpStream> {
    let addr = format!("{host}:{port}");
    let targets = (host, port)
        .to_socket_addrs()
        .map_err(|source| Error::Connect {
            addr: addr.clone(),
            source,
        })?;
    let mut last = None;
    for target in targets {
        match TcpStream::connect_timeout(&target, timeout) {
            Ok(s) => return Ok(s),
            Err(e) => last = Some(e),
        }
    }
    Err(Error::Connect {
        addr,
        source: last.unwrap_or_else(|| std::io::Error::other("no addresses resolved")),
    })
}

/// An established client-side association.
pub struct Association {
    channel: Channel,
    calling_ae: String,
    called_ae: String,
    max_pdu_length: u32,
    peer_max_pdu_length: u32,
    contexts: Vec<PresentationContext>,
    state: AssociationState,
    next_message_id: u16,
    timeouts: Timeouts,
}

/// Opens a TCP connection and negotiates an association.
pub fn associate(peer: &Peer, options: &AssociateOptions) -> Result<Association> {
    validate_ae_title(&peer.ae_title)?;
    validate_ae_title(&options.calling_ae)?;
    if options.contexts.is_empty() {
        return Err(Error::Precondition("at least one presentation context is required".into()));
    }
    if options.contexts.len() > 128 {
        return Err(Error::Precondition("at most 128 presentation contexts".into()));
    }
    if options.timeouts.connect.is_zero() || options.timeouts.dimse.is_zero() {
        return Err(Error::Precondition("timeouts must be positive".into()));
    }

    let mut contexts: Vec<PresentationContext> = options
        .contexts
        .iter()
        .enumerate()
        .map(|(i, (abs, ts))| PresentationContext {
            id: (2 * i + 1) as u8,
            abstract_syntax: abs.clone(),
            transfer_syntaxes: ts.clone(),
            accepted_syntax: None,
        })
        .collect();

    let stream = connect(&peer.host, peer.port, options.timeouts.connect)?;
    let dimse = options.timeouts.dimse;
    stream.set_read_timeout(Some(dimse)).map_err(Error::Io)?;
    stream.set_write_timeout(Some(dimse)).map_err(Error::Io)?;
    let _ = stream.set_nodelay(true);

    let rq = AssociateRq {
        protocol_version: PROTOCOL_VERSION,
        called_ae: peer.ae_title.trim().to_string(),
        calling_ae: options.calling_ae.trim().to_string(),
        application_context: uids::APPLICATION_CONTEXT.to_string(),
        presentation_contexts: contexts
            .iter()
            .map(|c| ProposedContext {
                id: c.id,
                abstract_syntax: c.abstract_syntax.clone(),
                transfer_syntaxes: c.transfer_syntaxes.clone(),
            })
            .collect(),
        user_info: UserInfo::new(
            options.max_pdu_length,
            &options.implementation_class_uid,
            &options.implementation_version_name,
        ),
    };

    let mut channel = Channel::new(stream, 0, HashMap::new(), dimse)?;
    channel.send_pdu(&Pdu::AssociateRq(rq))?;
    let ac = match channel.read_pdu()? {
        Pdu::AssociateAc(ac) => ac,
        Pdu::AssociateRj(rj) => {
            return Err(Error::Rejected {
                result: rj.result,
                source_code: rj.source,
                reason: rj.reason,
            })
        }
        Pdu::Abort(a) => {
            return Err(Error::Aborted {
                source_code: a.source,
                reason: a.reason,
            })
        }
        other => return Err(Error::Protocol(format!("expected A-ASSOCIATE-AC, got {}", other.name()))),
    };

    let mut syntaxes = HashMap::new();
    for reply in &ac.presentation_contexts {
        let Some(ctx) = contexts.iter_mut().find(|c| c.id == reply.id) else {
            return Err(Error::Protocol(format!("accept names unknown context {}", reply.id)));
        };
        if reply.result != ContextResult::Acceptance {
            continue;
        }
        if !ctx.transfer_syntaxes.contains(&reply.transfer_syntax) {
            return Err(Error::Protocol(format!(
                "context {} accepted with unproposed syntax {}",
                reply.id, reply.transfer_syntax
            )));
        }
        if let Ok(ts) = TransferSyntax::from_uid(&reply.transfer_syntax) {
            ctx.accepted_syntax = Some(reply.transfer_syntax.clone());
            syntaxes.insert(ctx.id, ts);
        }
    }
    let peer_max = ac.user_info.max_length().unwrap_or(0);
    let stream = channel.stream().try_clone().map_err(Error::Io)?;
    let channel = Channel::new(stream, peer_max, syntaxes, dimse)?;

    log::debug!(
        "association {} -> {} established, {} of {} contexts accepted",
        options.calling_ae,
        peer.ae_title,
        contexts.iter().filter(|c| c.accepted_syntax.is_some()).count(),
        contexts.len()
    );
    Ok(Association {
        channel,
        calling_ae: options.calling_ae.trim().to_string(),
        called_ae: peer.ae_title.trim().to_string(),
        max_pdu_length: options.max_pdu_length,
        peer_max_pdu_length: peer_max,
        contexts,
        state: AssociationState::Established,
        next_message_id: 1,
        timeouts: options.timeouts,
    })
}

impl Association {
    pub fn state(&self) -> AssociationState {
        self.state
    }

    pub fn calling_ae(&self) -> &str {
        &self.calling_ae
    }

    pub fn called_ae(&self) -> &str {
        &self.called_ae
    }

    pub fn contexts(&self) -> &[PresentationContext] {
        &self.contexts
    }

    pub fn max_pdu_length(&self) -> u32 {
        self.max_pdu_length
    }

    pub fn peer_max_pdu_length(&self) -> u32 {
        self.peer_max_pdu_length
    }

    pub fn timeouts(&self) -> Timeouts {
        self.timeouts
    }

    /// Id and transfer syntax of the accepted context for `abstract_syntax`.
    pub fn accepted_context(&self, abstract_syntax: &str) -> Option<(u8, TransferSyntax)> {
        self.contexts
            .iter()
            .filter(|c| c.abstract_syntax == abstract_syntax)
            .find_map(|c| self.channel.syntax(c.id).map(|ts| (c.id, ts)))
    }

    pub(crate) fn ensure_established(&self) -> Result<()> {
        if self.state == AssociationState::Established {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "association is {:?}, not established",
                self.state
            )))
        }
    }

    pub(crate) fn context_for(&self, abstract_syntax: &str) -> Result<(u8, TransferSyntax)> {
        self.accepted_context(abstract_syntax)
            .ok_or_else(|| Error::NoAcceptedContext(abstract_syntax.to_string()))
    }

    /// Message id for the next request; starts at 1.
    pub(crate) fn next_id(&mut self) -> u16 {
        let id = self.next_message_id;
        self.next_message_id = self.next_message_id.checked_add(1).unwrap_or(1);
        id
    }

    pub fn send(&mut self, msg: &DimseMessage) -> Result<()> {
        self.ensure_established()?;
        let r = self.channel.send_message(msg);
        self.fail_on_error(r)
    }

    pub fn receive(&mut self) -> Result<DimseMessage> {
        self.ensure_established()?;
        let event = self.channel.next_event();
        match self.fail_on_error(event)? {
            Event::Message(m) => Ok(m),
            Event::Aborted(a) => {
                self.state = AssociationState::Aborted;
                Err(Error::Aborted {
                    source_code: a.source,
                    reason: a.reason,
                })
            }
            Event::ReleaseRequested => {
                self.abort();
                Err(Error::Protocol("peer requested release while a response was pending".into()))
            }
        }
    }

    /// Any transport or protocol failure leaves the association unusable.
    fn fail_on_error<T>(&mut self, r: Result<T>) -> Result<T> {
        if r.is_err() {
            self.abort();
        }
        r
    }

    /// Orderly release; waits (bounded by the DIMSE timeout) for the reply.
    pub fn release(&mut self) -> Result<()> {
        self.ensure_established()?;
        self.channel.send_pdu(&Pdu::ReleaseRq)?;
        loop {
            match self.channel.read_pdu() {
                Ok(Pdu::ReleaseRp) => break,
                Ok(Pdu::PData(_)) => continue,
                Ok(Pdu::Abort(_)) => {
                    self.state = AssociationState::Aborted;
                    return Ok(());
                }
                Ok(other) => {
                    self.abort();
                    return Err(Error::Protocol(format!("expected A-RELEASE-RP, got {}", other.name())));
                }
                Err(e) => {
                    self.abort();
                    return Err(e);
                }
            }
        }
        self.state = AssociationState::Released;
        let _ = self.channel.stream().shutdown(std::net::Shutdown::Both);
        Ok(())
    }

    pub fn abort(&mut self) {
        if self.state == AssociationState::Established {
            let _ = self.channel.send_pdu(&Pdu::Abort(Abort { source: 0, reason: 0 }));
            let _ = self.channel.stream().shutdown(std::net::Shutdown::Both);
        }
        self.state = AssociationState::Aborted;
    }
}

impl Drop for Association {
    fn drop(&mut self) {
        self.abort();
    }
}
