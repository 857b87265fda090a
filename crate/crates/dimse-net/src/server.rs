//! Thread-per-association SCP.

use std::collections::HashMap;
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::thread::{self, JoinHandle};
use std::time::Duration;

use dicom_core::{uids, DataSet, TransferSyntax};

use crate::association::{validate_ae_title, DEFAULT_DIMSE_TIMEOUT};
use crate::channel::{Channel, Event};
use crate::command::{self, DimseMessage, SubOperations};
use crate::error::{Error, Result};
use crate::pdu::{
    Abort, AssociateAc, AssociateRj, AssociateRq, ContextReply, ContextResult, Pdu, UserInfo,
    DEFAULT_MAX_PDU_LENGTH, PROTOCOL_VERSION,
};
use crate::status::Status;

const ACCEPT_POLL: Duration = Duration::from_millis(20);

#[derive(Debug, Clone)]
pub struct ServerConfig {
    pub ae_title: String,
    pub host: String,
    /// 0 picks an ephemeral port.
    pub port: u16,
    pub max_pdu_length: u32,
    /// Idle limit while waiting for the next PDU.
    pub dimse_timeout: Duration,
    /// Reject associations whose called AE differs from `ae_title`.
    pub check_called_ae: bool,
    pub implementation_class_uid: String,
    pub implementation_version_name: String,
}

impl ServerConfig {
    pub fn new(ae_title: impl Into<String>, host: impl Into<String>, port: u16) -> Self {
        ServerConfig {
            ae_title: ae_title.into(),
            host: host.into(),
            port,
            max_pdu_length: DEFAULT_MAX_PDU_LENGTH,
            dimse_timeout: DEFAULT_DIMSE_TIMEOUT,
            check_called_ae: true,
            implementation_class_uid: uids::IMPLEMENTATION_CLASS_UID.to_string(),
            implementation_version_name: uids::IMPLEMENTATION_VERSION_NAME.to_string(),
        }
    }
}

/// Who is on the other end of an association.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationInfo {
    pub calling_ae: String,
    pub called_ae: String,
    pub peer_addr: Option<SocketAddr>,
}

#[derive(Debug, Clone)]
pub struct FindReply {
    pub matches: Vec<DataSet>,
    pub status: Status,
    pub error_comment: Option<String>,
}

impl FindReply {
    pub fn success(matches: Vec<DataSet>) -> Self {
        FindReply {
            matches,
            status: Status::SUCCESS,
            error_comment: None,
        }
    }

    pub fn failure(status: Status, comment: impl Into<String>) -> Self {
        FindReply {
            matches: Vec::new(),
            status,
            error_comment: Some(comment.into()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MoveRequest {
    pub message_id: u16,
    pub destination: String,
    pub identifier: DataSet,
}

#[derive(Debug, Clone)]
pub struct MoveReply {
    pub status: Status,
    pub sub_operations: SubOperations,
    pub error_comment: Option<String>,
}

#[derive(Debug, Clone)]
pub struct StoreRequest {
    pub sop_class: String,
    pub sop_instance: String,
    pub transfer_syntax: TransferSyntax,
    pub move_originator: Option<(String, u16)>,
    pub dataset: DataSet,
}

pub type AssociateFilter = Arc<dyn Fn(&AssociateRq) -> Option<AssociateRj> + Send + Sync>;
pub type EchoHandler = Arc<dyn Fn(&AssociationInfo) -> Status + Send + Sync>;
pub type FindHandler = Arc<dyn Fn(&AssociationInfo, &DataSet) -> FindReply + Send + Sync>;
/// The callback reports progress; each call sends a pending response.
pub type MoveHandler =
    Arc<dyn Fn(&AssociationInfo, &MoveRequest, &mut dyn FnMut(SubOperations)) -> MoveReply + Send + Sync>;
pub type StoreHandler = Arc<dyn Fn(&AssociationInfo, &StoreRequest) -> Status + Send + Sync>;

/// Service callbacks. Verification is always offered; the other services
/// are offered only when a handler is present.
#[derive(Clone, Default)]
pub struct Handlers {
    pub on_associate: Option<AssociateFilter>,
    pub on_echo: Option<EchoHandler>,
    pub on_find: Option<FindHandler>,
    pub on_move: Option<MoveHandler>,
    pub on_store: Option<StoreHandler>,
}

impl Handlers {
    /// Verification only, answering every echo with success.
    pub fn echo_only() -> Self {
        Handlers {
            on_echo: Some(Arc::new(|_| Status::SUCCESS)),
            ..Handlers::default()
        }
    }

    fn is_empty(&self) -> bool {
        self.on_echo.is_none() && self.on_find.is_none() && self.on_move.is_none() && self.on_store.is_none()
    }

    fn supports(&self, abstract_syntax: &str) -> bool {
        match abstract_syntax {
            uids::VERIFICATION => true,
            uids::STUDY_ROOT_QR_FIND => self.on_find.is_some(),
            uids::STUDY_ROOT_QR_MOVE => self.on_move.is_some(),
            s => self.on_store.is_some() && s.starts_with(uids::STORAGE_PREFIX),
        }
    }
}

type Registry = Arc<Mutex<HashMap<u64, TcpStream>>>;

/// A running server. Dropping the handle stops it.
pub struct ServerHandle {
    local_addr: SocketAddr,
    stop: Arc<AtomicBool>,
    accept_thread: Option<JoinHandle<()>>,
    open: Registry,
}

impl ServerHandle {
    pub fn local_addr(&self) -> SocketAddr {
        self.local_addr
    }

    pub fn port(&self) -> u16 {
        self.local_addr.port()
    }

    /// Stops accepting and tears down open associations.
    pub fn shutdown(&mut self) {
        self.stop.store(true, Ordering::SeqCst);
        if let Some(t) = self.accept_thread.take() {
            let _ = t.join();
        }
        for (_, s) in self.open.lock().unwrap_or_else(|p| p.into_inner()).drain() {
            let _ = s.shutdown(std::net::Shutdown::Both);
        }
    }
}

impl Drop for ServerHandle {
    fn drop(&mut self) {
        self.shutdown();
    }
}

pub fn serve(config: ServerConfig, handlers: Handlers) -> Result<ServerHandle> {
    validate_ae_title(&config.ae_title)?;
    if handlers.is_empty() {
        return Err(Error::Precondition("a server needs at least one service handler".into()));
    }
    let addr = format!("{}:{}", config.host, config.port);
    let listener = TcpListener::bind(&addr).map_err(|source| Error::Bind {
        addr: addr.clone(),
        source,
    })?;
    listener.set_nonblocking(true).map_err(Error::Io)?;
    let local_addr = listener.local_addr().map_err(Error::Io)?;
    let stop = Arc::new(AtomicBool::new(false));
    let open: Registry = Arc::default();

    let accept_thread = {
        let stop = stop.clone();
        let open = open.clone();
        let config = Arc::new(config);
        thread::Builder::new()
            .name(format!("scp-{}", local_addr.port()))
            .spawn(move || accept_loop(listener, config, handlers, stop, open))
            .map_err(Error::Io)?
    };
    log::info!("listening on {local_addr}");
    Ok(ServerHandle {
        local_addr,
        stop,
        accept_thread: Some(accept_thread),
        open,
    })
}

fn accept_loop(
    listener: TcpListener,
    config: Arc<ServerConfig>,
    handlers: Handlers,
    stop: Arc<AtomicBool>,
    open: Registry,
) {
    let next_id = AtomicU64::new(0);
    while !stop.load(Ordering::SeqCst) {
        match listener.accept() {
            Ok((stream, peer)) => {
                let id = next_id.fetch_add(1, Ordering::Relaxed);
                if let Ok(clone) = stream.try_clone() {
                    open.lock().unwrap_or_else(|p| p.into_inner()).insert(id, clone);
                }
                let config = config.clone();
                let handlers = handlers.clone();
                let open = open.clone();
                let spawned = thread::Builder::new()
                    .name(format!("assoc-{peer}"))
                    .spawn(move || {
                        if let Err(e) = run_association(stream, peer, &config, &handlers) {
                            log::warn!("association with {peer} ended: {e}");
                        }
                        open.lock().unwrap_or_else(|p| p.into_inner()).remove(&id);
                    });
                if let Err(e) = spawned {
                    log::error!("cannot spawn association thread: {e}");
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::WouldBlock => thread::sleep(ACCEPT_POLL),
            Err(e) => {
                log::warn!("accept failed: {e}");
                thread::sleep(ACCEPT_POLL);
            }
        }
    }
}

fn negotiate(rq: &AssociateRq, handlers: &Handlers) -> (Vec<ContextReply>, HashMap<u8, TransferSyntax>) {
    let mut accepted = HashMap::new();
    let replies = rq
        .presentation_contexts
        .iter()
        .map(|pc| {
            let first = pc.transfer_syntaxes.first().cloned().unwrap_or_default();
            if !handlers.supports(&pc.abstract_syntax) {
                return ContextReply {
                    id: pc.id,
                    result: ContextResult::AbstractSyntaxNotSupported,
                    transfer_syntax: first,
                };
            }
            let chosen = pc
                .transfer_syntaxes
                .iter()
                .find_map(|uid| TransferSyntax::from_uid(uid).ok().map(|ts| (uid, ts)));
            match chosen {
                Some((uid, ts)) => {
                    accepted.insert(pc.id, ts);
                    ContextReply {
                        id: pc.id,
                        result: ContextResult::Acceptance,
                        transfer_syntax: uid.clone(),
                    }
                }
                None => ContextReply {
                    id: pc.id,
                    result: ContextResult::TransferSyntaxesNotSupported,
                    transfer_syntax: first,
                },
            }
        })
        .collect();
    (replies, accepted)
}

fn run_association(stream: TcpStream, peer: SocketAddr, config: &ServerConfig, handlers: &Handlers) -> Result<()> {
    stream.set_nonblocking(false).map_err(Error::Io)?;
    stream.set_read_timeout(Some(config.dimse_timeout)).map_err(Error::Io)?;
    stream.set_write_timeout(Some(config.dimse_timeout)).map_err(Error::Io)?;
    let _ = stream.set_nodelay(true);
    let mut setup = Channel::new(stream.try_clone().map_err(Error::Io)?, 0, HashMap::new(), config.dimse_timeout)?;

    let rq = match setup.read_pdu()? {
        Pdu::AssociateRq(rq) => rq,
        other => {
            let _ = setup.send_pdu(&Pdu::Abort(Abort { source: 2, reason: 2 }));
            return Err(Error::Protocol(format!("expected A-ASSOCIATE-RQ, got {}", other.name())));
        }
    };

    let rejection = if config.check_called_ae && rq.called_ae.trim() != config.ae_title.trim() {
        // permanent, service-user, called AE title not recognized
        Some(AssociateRj { result: 1, source: 1, reason: 7 })
    } else {
        handlers.on_associate.as_ref().and_then(|f| f(&rq))
    };
    if let Some(rj) = rejection {
        setup.send_pdu(&Pdu::AssociateRj(rj))?;
        return Ok(());
    }

    let (replies, syntaxes) = negotiate(&rq, handlers);
    let ac = AssociateAc {
        protocol_version: PROTOCOL_VERSION,
        called_ae: rq.called_ae.clone(),
        calling_ae: rq.calling_ae.clone(),
        application_context: uids::APPLICATION_CONTEXT.to_string(),
        presentation_contexts: replies,
        user_info: UserInfo::new(
            config.max_pdu_length,
            &config.implementation_class_uid,
            &config.implementation_version_name,
        ),
    };
    setup.send_pdu(&Pdu::AssociateAc(ac))?;

    let info = AssociationInfo {
        calling_ae: rq.calling_ae.trim().to_string(),
        called_ae: rq.called_ae.trim().to_string(),
        peer_addr: Some(peer),
    };
    let peer_max = rq.user_info.max_length().unwrap_or(0);
    let mut channel = Channel::new(stream, peer_max, syntaxes, config.dimse_timeout)?;
    log::debug!("accepted association from {} ({peer})", info.calling_ae);

    loop {
        let event = match channel.next_event() {
            Ok(e) => e,
            Err(e) => {
                let _ = channel.send_pdu(&Pdu::Abort(Abort { source: 2, reason: 0 }));
                return Err(e);
            }
        };
        match event {
            Event::Message(msg) => {
                let outcome = catch_unwind(AssertUnwindSafe(|| dispatch(&mut channel, &info, handlers, msg)));
                match outcome {
                    Ok(Ok(())) => {}
                    Ok(Err(e)) => {
                        let _ = channel.send_pdu(&Pdu::Abort(Abort { source: 2, reason: 0 }));
                        return Err(e);
                    }
                    Err(_) => {
                        let _ = channel.send_pdu(&Pdu::Abort(Abort { source: 2, reason: 0 }));
                        let _ = channel.stream().shutdown(std::net::Shutdown::Both);
                        return Err(Error::Protocol("service handler panicked".into()));
                    }
                }
            }
            Event::ReleaseRequested => {
                channel.send_pdu(&Pdu::ReleaseRp)?;
                return Ok(());
            }
            Event::Aborted(_) => return Ok(()),
        }
    }
}

fn reply(channel: &mut Channel, context_id: u8, command: DataSet, data: Option<DataSet>) -> Result<()> {
    channel.send_message(&DimseMessage {
        command,
        data,
        context_id,
    })
}

fn dispatch(channel: &mut Channel, info: &AssociationInfo, handlers: &Handlers, msg: DimseMessage) -> Result<()> {
    let ctx = msg.context_id;
    let id = msg.message_id().unwrap_or(0);
    let sop_class = msg.sop_class().unwrap_or_default();
    match msg.command_field() {
        Some(command::C_ECHO_RQ) => {
            let status = handlers.on_echo.as_ref().map_or(Status::SUCCESS, |f| f(info));
            reply(channel, ctx, command::echo_rsp(id, status), None)
        }
        Some(command::C_FIND_RQ) => {
            let (Some(handler), Some(identifier)) = (&handlers.on_find, &msg.data) else {
                let rsp = command::failure_rsp(&msg, Status::UNABLE_TO_PROCESS, Some("no identifier"));
                return reply(channel, ctx, rsp, None);
            };
            let result = handler(info, identifier);
            for m in result.matches {
                reply(channel, ctx, command::find_rsp(&sop_class, id, Status::PENDING, true), Some(m))?;
            }
            let mut rsp = command::find_rsp(&sop_class, id, result.status, false);
            if let Some(c) = result.error_comment {
                rsp.insert(dicom_core::DataElement::str(dicom_core::tags::ERROR_COMMENT, dicom_core::VR::LO, &c));
            }
            reply(channel, ctx, rsp, None)
        }
        Some(command::C_MOVE_RQ) => {
            let destination = msg
                .command
                .string(dicom_core::tags::MOVE_DESTINATION)
                .unwrap_or_default();
            let (Some(handler), Some(identifier)) = (&handlers.on_move, msg.data.clone()) else {
                let rsp = command::failure_rsp(&msg, Status::UNABLE_TO_PROCESS, Some("no identifier"));
                return reply(channel, ctx, rsp, None);
            };
            let request = MoveRequest {
                message_id: id,
                destination,
                identifier,
            };
            let mut send_error = None;
            let result = {
                let mut progress = |ops: SubOperations| {
                    if send_error.is_none() {
                        let rsp = command::move_rsp(&sop_class, id, Status::PENDING, ops);
                        if let Err(e) = reply(channel, ctx, rsp, None) {
                            send_error = Some(e);
                        }
                    }
                };
                handler(info, &request, &mut progress)
            };
            if let Some(e) = send_error {
                return Err(e);
            }
            let mut rsp = command::move_rsp(&sop_class, id, result.status, result.sub_operations);
            if let Some(c) = result.error_comment {
                rsp.insert(dicom_core::DataElement::str(dicom_core::tags::ERROR_COMMENT, dicom_core::VR::LO, &c));
            }
            reply(channel, ctx, rsp, None)
        }
        Some(command::C_STORE_RQ) => {
            let sop_instance = msg
                .command
                .string(dicom_core::tags::AFFECTED_SOP_INSTANCE_UID)
                .unwrap_or_default();
            let status = match (&handlers.on_store, msg.data.clone()) {
                (Some(handler), Some(dataset)) => {
                    let originator = msg
                        .command
                        .string(dicom_core::tags::MOVE_ORIGINATOR_AE_TITLE)
                        .map(|ae| {
                            let mid = msg.command.int(dicom_core::tags::MOVE_ORIGINATOR_MESSAGE_ID).unwrap_or(0);
                            (ae, mid as u16)
                        });
                    let request = StoreRequest {
                        sop_class: sop_class.clone(),
                        sop_instance: sop_instance.clone(),
                        transfer_syntax: channel.syntax(ctx).expect("message arrived on accepted context"),
                        move_originator: originator,
                        dataset,
                    };
                    handler(info, &request)
                }
                _ => Status::CANNOT_UNDERSTAND,
            };
            reply(channel, ctx, command::store_rsp(&sop_class, &sop_instance, id, status), None)
        }
        _ => {
            let rsp = command::failure_rsp(&msg, Status::UNRECOGNIZED_OPERATION, None);
            reply(channel, ctx, rsp, None)
        }
    }
}
