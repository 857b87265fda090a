//! In-memory PACS: C-ECHO, C-FIND and C-MOVE provider over a fixed set of
//! instances, issuing C-STORE sub-operations to registered destinations.

mod fixture;
pub mod matching;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, AtomicU32, Ordering};
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::Duration;

use dicom_core::{tags, DataSet};
use dimse_net::pdu::AssociateRj;
use dimse_net::{
    associate, serve, AssociateOptions, AssociationInfo, FindReply, Handlers, MoveReply,
    MoveRequest, Peer, ServerConfig, ServerHandle, Status, SubOperations,
};

pub use fixture::{add_gradient_pixels, instance, Destination, FaultPlan, Fixture, FixtureError, REQUIRED};
pub use matching::{select, Level, Selection};

pub const DEFAULT_AE_TITLE: &str = "MOCKPACS";

#[derive(Debug, thiserror::Error)]
pub enum SeedError {
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error(transparent)]
    Net(#[from] dimse_net::Error),
}

struct State {
    ae_title: String,
    instances: Vec<DataSet>,
    registry: Mutex<BTreeMap<String, (String, u16)>>,
    faults: Mutex<FaultPlan>,
    stores_attempted: AtomicU32,
    stopped: AtomicBool,
}

impl State {
    fn faults(&self) -> FaultPlan {
        self.faults.lock().unwrap_or_else(|p| p.into_inner()).clone()
    }
}

/// Matches `identifier` against the fixture at the level it names.
/// Returns `None` when (0008,0052) is absent or unknown.
pub fn find(instances: &[DataSet], identifier: &DataSet) -> Option<Vec<DataSet>> {
    let level = Level::parse(&identifier.string(tags::QUERY_RETRIEVE_LEVEL)?)?;
    Some(select(instances, identifier, level).into_iter().map(|s| s.response).collect())
}

/// Instances a move of `identifier` would transfer, in fixture order.
pub fn move_targets(instances: &[DataSet], identifier: &DataSet) -> Option<Vec<usize>> {
    let level = Level::parse(&identifier.string(tags::QUERY_RETRIEVE_LEVEL)?)?;
    let members: BTreeSet<usize> = select(instances, identifier, level)
        .into_iter()
        .flat_map(|s| s.members)
        .collect();
    Some(members.into_iter().collect())
}

/// A running mock PACS. Dropping it stops the listener.
pub struct MockPacs {
    server: ServerHandle,
    state: Arc<State>,
}

impl MockPacs {
    /// Seeds and starts listening on 127.0.0.1 with an ephemeral port.
    pub fn seed(fixture: Fixture) -> Result<MockPacs, SeedError> {
        Self::seed_with(fixture, ServerConfig::new(DEFAULT_AE_TITLE, "127.0.0.1", 0))
    }

    pub fn seed_with(fixture: Fixture, config: ServerConfig) -> Result<MockPacs, SeedError> {
        fixture.validate()?;
        let state = Arc::new(State {
            ae_title: config.ae_title.trim().to_string(),
            instances: fixture.instances,
            registry: Mutex::new(fixture.ae_registry),
            faults: Mutex::new(fixture.fault_plan),
            stores_attempted: AtomicU32::new(0),
            stopped: AtomicBool::new(false),
        });
        let server = serve(config, handlers(&state))?;
        Ok(MockPacs { server, state })
    }

    pub fn port(&self) -> u16 {
        self.server.port()
    }

    pub fn ae_title(&self) -> &str {
        &self.state.ae_title
    }

    /// Address of this mock as seen from the local host.
    pub fn peer(&self) -> Peer {
        Peer::new("127.0.0.1", self.port(), self.ae_title())
    }

    pub fn instances(&self) -> &[DataSet] {
        &self.state.instances
    }

    pub fn register_destination(&self, ae_title: &str, host: &str, port: u16) {
        self.state
            .registry
            .lock()
            .unwrap_or_else(|p| p.into_inner())
            .insert(ae_title.trim().to_string(), (host.to_string(), port));
    }

    /// Replaces the fault plan and restarts the store counter.
    pub fn set_fault_plan(&self, plan: FaultPlan) {
        let mut faults = self.state.faults.lock().unwrap_or_else(|p| p.into_inner());
        self.state.stores_attempted.store(0, Ordering::SeqCst);
        *faults = plan;
    }

    pub fn shutdown(&mut self) {
        self.state.stopped.store(true, Ordering::SeqCst);
        self.server.shutdown();
    }
}

impl Drop for MockPacs {
    fn drop(&mut self) {
        self.shutdown();
    }
}

fn handlers(state: &Arc<State>) -> Handlers {
    let on_associate = {
        let state = state.clone();
        Arc::new(move |_: &dimse_net::pdu::AssociateRq| {
            // permanent rejection by the service user, no reason given
            state.faults().reject_association.then_some(AssociateRj { result: 1, source: 1, reason: 1 })
        })
    };
    let on_find = {
        let state = state.clone();
        Arc::new(move |_: &AssociationInfo, identifier: &DataSet| {
            while state.faults().withhold_find_response && !state.stopped.load(Ordering::SeqCst) {
                thread::sleep(Duration::from_millis(25));
            }
            match find(&state.instances, identifier) {
                Some(matches) => FindReply::success(matches),
                None => FindReply::failure(Status::DATA_SET_MISMATCH, "missing or unknown QueryRetrieveLevel"),
            }
        })
    };
    let on_move = {
        let state = state.clone();
        Arc::new(
            move |info: &AssociationInfo, rq: &MoveRequest, progress: &mut dyn FnMut(SubOperations)| {
                execute_move(&state, info, rq, progress)
            },
        )
    };
    Handlers {
        on_associate: Some(on_associate),
        on_echo: Some(Arc::new(|_| Status::SUCCESS)),
        on_find: Some(on_find),
        on_move: Some(on_move),
        on_store: None,
    }
}

fn final_status(ops: &SubOperations) -> Status {
    match (ops.completed + ops.warning, ops.failed) {
        (_, 0) => Status::SUCCESS,
        (0, _) => Status::UNABLE_TO_PERFORM_SUB_OPERATIONS,
        _ => Status::SUB_OPERATIONS_FAILED,
    }
}

fn execute_move(
    state: &State,
    info: &AssociationInfo,
    rq: &MoveRequest,
    progress: &mut dyn FnMut(SubOperations),
) -> MoveReply {
    let destination = rq.destination.trim();
    let target = state
        .registry
        .lock()
        .unwrap_or_else(|p| p.into_inner())
        .get(destination)
        .cloned();
    let Some((host, port)) = target else {
        return MoveReply {
            status: Status::MOVE_DESTINATION_UNKNOWN,
            sub_operations: SubOperations::default(),
            error_comment: Some(format!("unknown destination {destination}")),
        };
    };
    let Some(members) = move_targets(&state.instances, &rq.identifier) else {
        return MoveReply {
            status: Status::DATA_SET_MISMATCH,
            sub_operations: SubOperations::default(),
            error_comment: Some("missing or unknown QueryRetrieveLevel".into()),
        };
    };
    let total = members.len() as u16;
    let mut ops = SubOperations {
        remaining: Some(total),
        ..SubOperations::default()
    };
    if members.is_empty() {
        return MoveReply {
            status: Status::SUCCESS,
            sub_operations: SubOperations { remaining: None, ..ops },
            error_comment: None,
        };
    }

    let classes: BTreeSet<String> = members
        .iter()
        .filter_map(|&i| state.instances[i].string(tags::SOP_CLASS_UID))
        .collect();
    let options = classes
        .iter()
        .fold(AssociateOptions::new(state.ae_title.as_str()), |o, c| o.with_abstract(c));
    let mut outbound = match associate(&Peer::new(host, port, destination), &options) {
        Ok(a) => Some(a),
        Err(e) => {
            log::warn!("cannot reach move destination {destination}: {e}");
            None
        }
    };

    let fail_nth = state.faults().fail_nth_store;
    for &i in &members {
        let ds = &state.instances[i];
        let attempt = state.stores_attempted.fetch_add(1, Ordering::SeqCst) + 1;
        let status = match outbound.as_mut() {
            _ if fail_nth == Some(attempt) => None,
            None => None,
            Some(a) => {
                let class = ds.string(tags::SOP_CLASS_UID).unwrap_or_default();
                let sop = ds.string(tags::SOP_INSTANCE_UID).unwrap_or_default();
                match a.c_store(&class, &sop, ds, Some((info.calling_ae.as_str(), rq.message_id))) {
                    Ok(s) => Some(s),
                    Err(e) => {
                        log::warn!("C-STORE of {sop} to {destination} failed: {e}");
                        outbound = None;
                        None
                    }
                }
            }
        };
        match status {
            Some(s) if s.is_success() => ops.completed += 1,
            Some(Status(0xB000 | 0xB006 | 0xB007)) => ops.warning += 1,
            _ => ops.failed += 1,
        }
        ops.remaining = Some(ops.remaining.unwrap_or(0) - 1);
        progress(ops);
    }
    if let Some(mut a) = outbound {
        let _ = a.release();
    }
    let status = final_status(&ops);
    MoveReply {
        status,
        sub_operations: SubOperations { remaining: None, ..ops },
        error_comment: (!status.is_success()).then(|| format!("{} of {total} sub-operations failed", ops.failed)),
    }
}
