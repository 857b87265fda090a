use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::{Duration, Instant};

use dicom_core::{tags, uids, DataElement, DataSet, VR};
use dimse_net::{
    associate, serve, AssociateOptions, AssociationState, Error, FindReply, Handlers, MoveReply,
    Peer, ServerConfig, ServerHandle, Status, StoreRequest, SubOperations, Timeouts,
};

fn find_identifier() -> DataSet {
    let mut ds = DataSet::new();
    ds.put_str(tags::QUERY_RETRIEVE_LEVEL, "STUDY");
    ds.put_empty(tags::STUDY_INSTANCE_UID);
    ds
}

fn start(handlers: Handlers) -> ServerHandle {
    serve(ServerConfig::new("PACS", "127.0.0.1", 0), handlers).unwrap()
}

fn peer(server: &ServerHandle) -> Peer {
    Peer::new("127.0.0.1", server.port(), "PACS")
}

fn qr_options() -> AssociateOptions {
    AssociateOptions::new("CLIENT")
        .with_abstract(uids::VERIFICATION)
        .with_abstract(uids::STUDY_ROOT_QR_FIND)
        .with_abstract(uids::STUDY_ROOT_QR_MOVE)
}

#[test]
fn echo_then_release() {
    let server = start(Handlers::echo_only());
    let mut a = associate(&peer(&server), &qr_options()).unwrap();
    assert_eq!(a.c_echo().unwrap(), Status::SUCCESS);
    assert_eq!(a.c_echo().unwrap(), Status::SUCCESS);
    a.release().unwrap();
    assert_eq!(a.state(), AssociationState::Released);
    assert!(matches!(a.c_echo(), Err(Error::Precondition(_))));
}

#[test]
fn find_streams_matches() {
    let handlers = Handlers {
        on_find: Some(Arc::new(|_, id: &DataSet| {
            let level = id.string(tags::QUERY_RETRIEVE_LEVEL).unwrap();
            FindReply::success(
                (1..=3)
                    .map(|i| {
                        let mut m = DataSet::new();
                        m.put_str(tags::QUERY_RETRIEVE_LEVEL, &level);
                        m.put_str(tags::STUDY_INSTANCE_UID, &format!("1.2.{i}"));
                        m
                    })
                    .collect(),
            )
        })),
        ..Handlers::echo_only()
    };
    let server = start(handlers);
    let mut a = associate(&peer(&server), &qr_options()).unwrap();
    let mut uids = Vec::new();
    let result = a
        .c_find(&find_identifier(), |m| uids.push(m.string(tags::STUDY_INSTANCE_UID).unwrap()))
        .unwrap();
    assert_eq!(result.status, Status::SUCCESS);
    assert_eq!(result.matches, 3);
    assert_eq!(uids, ["1.2.1", "1.2.2", "1.2.3"]);
    a.release().unwrap();
}

#[test]
fn find_without_level_is_rejected_locally() {
    let server = start(Handlers::echo_only());
    let mut a = associate(&peer(&server), &qr_options()).unwrap();
    assert!(matches!(a.c_find(&DataSet::new(), |_| {}), Err(Error::Precondition(_))));
    // the association is still usable
    assert_eq!(a.c_echo().unwrap(), Status::SUCCESS);
}

#[test]
fn unsupported_abstract_syntax_is_not_accepted() {
    let server = start(Handlers::echo_only());
    let mut a = associate(&peer(&server), &qr_options()).unwrap();
    assert!(a.accepted_context(uids::VERIFICATION).is_some());
    assert!(a.accepted_context(uids::STUDY_ROOT_QR_FIND).is_none());
    assert!(matches!(
        a.c_find(&find_identifier(), |_| {}),
        Err(Error::NoAcceptedContext(_))
    ));
}

#[test]
fn wrong_called_ae_is_rejected() {
    let server = start(Handlers::echo_only());
    let err = associate(&Peer::new("127.0.0.1", server.port(), "OTHER"), &qr_options()).err().unwrap();
    assert!(matches!(err, Error::Rejected { result: 1, source_code: 1, reason: 7 }));
}

#[test]
fn move_with_sub_operations() {
    // destination SCP receiving the sub-operation stores
    let stored = Arc::new(Mutex::new(Vec::new()));
    let store_server = {
        let stored = stored.clone();
        serve(
            ServerConfig::new("DEST", "127.0.0.1", 0),
            Handlers {
                on_store: Some(Arc::new(move |_, rq: &StoreRequest| {
                    stored.lock().unwrap().push((rq.sop_instance.clone(), rq.move_originator.clone()));
                    Status::SUCCESS
                })),
                ..Handlers::default()
            },
        )
        .unwrap()
    };
    let dest_port = store_server.port();
    let handlers = Handlers {
        on_move: Some(Arc::new(move |info, rq, progress| {
            assert_eq!(rq.destination, "DEST");
            let opts = AssociateOptions::new("PACS").with_abstract(uids::CT_IMAGE_STORAGE);
            let mut out = associate(&Peer::new("127.0.0.1", dest_port, "DEST"), &opts).unwrap();
            let mut ops = SubOperations { remaining: Some(2), ..Default::default() };
            for i in 1..=2 {
                let mut ds = DataSet::new();
                ds.put_str(tags::SOP_CLASS_UID, uids::CT_IMAGE_STORAGE);
                ds.put_str(tags::SOP_INSTANCE_UID, &format!("9.9.{i}"));
                let st = out
                    .c_store(uids::CT_IMAGE_STORAGE, &format!("9.9.{i}"), &ds, Some((&info.calling_ae, rq.message_id)))
                    .unwrap();
                assert!(st.is_success());
                ops.completed += 1;
                ops.remaining = Some(2 - i);
                progress(ops);
            }
            out.release().unwrap();
            MoveReply {
                status: Status::SUCCESS,
                sub_operations: SubOperations { remaining: None, ..ops },
                error_comment: None,
            }
        })),
        ..Handlers::echo_only()
    };
    let server = start(handlers);
    let mut a = associate(&peer(&server), &qr_options()).unwrap();
    let mut pendings = 0;
    let outcome = a
        .c_move_with_progress(&find_identifier(), "DEST", |_| pendings += 1)
        .unwrap();
    assert_eq!(outcome.status, Status::SUCCESS);
    assert_eq!((outcome.completed, outcome.failed, outcome.remaining), (2, 0, 0));
    assert_eq!(pendings, 2);
    let stored = stored.lock().unwrap();
    assert_eq!(stored.len(), 2);
    assert_eq!(stored[0].1, Some(("CLIENT".to_string(), 1)));
}

#[test]
fn unknown_move_destination_is_an_error() {
    let handlers = Handlers {
        on_move: Some(Arc::new(|_, _, _| MoveReply {
            status: Status::MOVE_DESTINATION_UNKNOWN,
            sub_operations: SubOperations::default(),
            error_comment: Some("who?".into()),
        })),
        ..Handlers::echo_only()
    };
    let server = start(handlers);
    let mut a = associate(&peer(&server), &qr_options()).unwrap();
    match a.c_move(&find_identifier(), "NOWHERE") {
        Err(Error::MoveDestinationUnknown { status, comment }) => {
            assert_eq!(status, Status::MOVE_DESTINATION_UNKNOWN);
            assert_eq!(comment.as_deref(), Some("who?"));
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(a.c_move(&find_identifier(), ""), Err(Error::Precondition(_))));
}

#[test]
fn withheld_response_times_out() {
    let handlers = Handlers {
        on_find: Some(Arc::new(|_, _: &DataSet| {
            thread::sleep(Duration::from_secs(3));
            FindReply::success(Vec::new())
        })),
        ..Handlers::echo_only()
    };
    let server = start(handlers);
    let opts = qr_options().with_timeouts(Timeouts {
        connect: Duration::from_secs(1),
        dimse: Duration::from_millis(300),
    });
    let mut a = associate(&peer(&server), &opts).unwrap();
    let started = Instant::now();
    let err = a.c_find(&find_identifier(), |_| {}).unwrap_err();
    assert!(matches!(err, Error::Timeout(_)), "{err:?}");
    assert!(started.elapsed() < Duration::from_secs(2));
    assert_eq!(a.state(), AssociationState::Aborted);
}

#[test]
fn refused_connection_reports_connect_error() {
    let port = {
        let l = std::net::TcpListener::bind("127.0.0.1:0").unwrap();
        l.local_addr().unwrap().port()
    };
    let err = associate(&Peer::new("127.0.0.1", port, "PACS"), &qr_options()).err().unwrap();
    assert!(matches!(err, Error::Connect { .. }), "{err:?}");
}

#[test]
fn handler_panic_only_kills_its_association() {
    let calls = Arc::new(AtomicUsize::new(0));
    let handlers = {
        let calls = calls.clone();
        Handlers {
            on_find: Some(Arc::new(move |_, _: &DataSet| {
                if calls.fetch_add(1, Ordering::SeqCst) == 0 {
                    panic!("boom");
                }
                FindReply::success(Vec::new())
            })),
            ..Handlers::default()
        }
    };
    let server = start(handlers);
    let mut first = associate(&peer(&server), &qr_options()).unwrap();
    let mut second = associate(&peer(&server), &qr_options()).unwrap();
    assert!(first.c_find(&find_identifier(), |_| {}).is_err());
    assert_eq!(second.c_find(&find_identifier(), |_| {}).unwrap().status, Status::SUCCESS);
    let mut third = associate(&peer(&server), &qr_options()).unwrap();
    assert_eq!(third.c_echo().unwrap(), Status::SUCCESS);
}

#[test]
fn concurrent_associations() {
    let handlers = Handlers {
        on_find: Some(Arc::new(|_, _: &DataSet| {
            thread::sleep(Duration::from_millis(200));
            FindReply::success(vec![find_identifier()])
        })),
        ..Handlers::echo_only()
    };
    let server = start(handlers);
    let p = peer(&server);
    let started = Instant::now();
    thread::scope(|s| {
        for _ in 0..8 {
            s.spawn(|| {
                let mut a = associate(&p, &qr_options()).unwrap();
                assert_eq!(a.c_find(&find_identifier(), |_| {}).unwrap().matches, 1);
                a.release().unwrap();
            });
        }
    });
    // serial handling would take 1.6 s
    assert!(started.elapsed() < Duration::from_millis(1200));
}

#[test]
fn large_data_set_is_fragmented_and_reassembled() {
    let received = Arc::new(Mutex::new(None));
    let handlers = {
        let received = received.clone();
        Handlers {
            on_store: Some(Arc::new(move |_, rq: &StoreRequest| {
                *received.lock().unwrap() = Some(rq.dataset.clone());
                Status::SUCCESS
            })),
            ..Handlers::default()
        }
    };
    let server = start(handlers);
    let opts = AssociateOptions::new("CLIENT").with_abstract(uids::SECONDARY_CAPTURE_IMAGE_STORAGE);
    let mut a = associate(&peer(&server), &opts).unwrap();
    let mut ds = DataSet::new();
    ds.put_str(tags::SOP_INSTANCE_UID, "1.2.3");
    ds.insert(DataElement::new(tags::PIXEL_DATA, VR::OB, (0..100_000u32).map(|i| i as u8).collect()));
    assert!(a
        .c_store(uids::SECONDARY_CAPTURE_IMAGE_STORAGE, "1.2.3", &ds, None)
        .unwrap()
        .is_success());
    assert_eq!(received.lock().unwrap().as_ref(), Some(&ds));
}

#[test]
fn server_without_handlers_is_refused() {
    let r = serve(ServerConfig::new("PACS", "127.0.0.1", 0), Handlers::default());
    assert!(matches!(r, Err(Error::Precondition(_))));
}

#[test]
fn shutdown_stops_listener() {
    let mut server = start(Handlers::echo_only());
    let p = peer(&server);
    server.shutdown();
    assert!(associate(&p, &qr_options()).is_err());
}
