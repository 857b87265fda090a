use std::path::Path;
use std::time::{Duration, Instant};

use dicom_core::{read_part10_file, tags, uids, DataSet, TransferSyntax};
use dimse_net::{Status, StoreRequest};
use mock_pacs::{FaultPlan, Fixture, MockPacs};
use qr_engine::*;

fn client() -> ClientConfig {
    ClientConfig::new("BRIDGE").with_timeouts(Duration::from_secs(2), Duration::from_secs(10))
}

fn station(pacs: &MockPacs, name: &str) -> StationConfig {
    StationConfig::new(name, pacs.ae_title(), "127.0.0.1", pacs.port())
}

fn closed_port() -> u16 {
    std::net::TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port()
}

fn by_patient(id: &str) -> QueryFilters {
    QueryFilters {
        patient: PatientFilters { patient_id: Some(id.into()), ..Default::default() },
        ..Default::default()
    }
}

struct Rig {
    pacs: MockPacs,
    scp: StoreScp,
    dest: DestinationConfig,
    _dir: tempfile::TempDir,
}

fn rig(fixture: Fixture) -> Rig {
    let dir = tempfile::tempdir().unwrap();
    let pacs = MockPacs::seed(fixture).unwrap();
    let scp = StoreScp::start_on(&DestinationConfig::new("BRIDGE_STORE", 0, dir.path()), "127.0.0.1").unwrap();
    pacs.register_destination("BRIDGE_STORE", "127.0.0.1", scp.port());
    let dest = DestinationConfig::new("BRIDGE_STORE", scp.port(), dir.path());
    Rig { pacs, scp, dest, _dir: dir }
}

fn dcm_files(root: &Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in std::fs::read_dir(&d).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|x| x == "dcm") {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

#[test]
fn echo_all_reports_each_station() {
    let pacs = MockPacs::seed(Fixture::standard()).unwrap();
    let stations = [station(&pacs, "mock"), StationConfig::new("down", "NOBODY", "127.0.0.1", closed_port())];
    let started = Instant::now();
    let statuses = echo_all(&stations, &client());
    assert!(started.elapsed() < Duration::from_secs(4));
    assert_eq!(statuses.iter().map(|s| s.reachable).collect::<Vec<_>>(), [true, false]);
    assert!(statuses[0].latency_ms.is_some());
    assert!(statuses[1].error.is_some());
    assert_eq!(statuses[1].station.name, "down");
}

#[test]
fn query_builds_study_series_tree() {
    let pacs = MockPacs::seed(Fixture::standard()).unwrap();
    let out = query_stations(&[station(&pacs, "mock")], &by_patient("P001"), false, &client()).unwrap();
    assert!(out.errors.is_empty());
    assert_eq!(out.tree.studies.len(), 1);
    let study = &out.tree.studies[0];
    assert_eq!(study.study_instance_uid, "1.2.3.1");
    assert_eq!(study.patient_name, "DOE^JOHN");
    assert_eq!(study.study_date, "20240102");
    assert_eq!(study.station.name, "mock");
    let series: Vec<_> = study.series.iter().map(|s| (s.series_instance_uid.as_str(), s.modality.as_str(), s.instance_count)).collect();
    assert_eq!(series, [("1.2.3.1.1", "CT", 3), ("1.2.3.1.2", "MR", 2)]);
    assert!(study.actions.retrieve_enabled && !study.actions.preview_enabled && !study.actions.open_enabled);
}

#[test]
fn instance_counts_agree_with_image_level_enumeration() {
    let pacs = MockPacs::seed(Fixture::standard()).unwrap();
    let out = query_stations(&[station(&pacs, "mock")], &QueryFilters::default(), false, &client()).unwrap();
    for study in &out.tree.studies {
        for s in &study.series {
            let id = build_identifier(&QueryFilters::default(), QueryLevel::Image, true, Some(&study.study_instance_uid), Some(&s.series_instance_uid)).unwrap();
            let direct = mock_pacs::find(pacs.instances(), &id).unwrap().len();
            assert_eq!(s.instance_count as usize, direct);
        }
    }
}

#[test]
fn filters_that_match_nothing() {
    let pacs = MockPacs::seed(Fixture::standard()).unwrap();
    let out = query_stations(&[station(&pacs, "mock")], &by_patient("NOPE"), false, &client()).unwrap();
    assert!(out.tree.is_empty() && out.errors.is_empty());

    let mr_only = QueryFilters {
        series: SeriesFilters { modality: Some("MR".into()), ..Default::default() },
        ..Default::default()
    };
    let out = query_stations(&[station(&pacs, "mock")], &mr_only, false, &client()).unwrap();
    assert_eq!(out.tree.studies[0].series.len(), 1);
    assert_eq!(out.tree.studies[0].series[0].modality, "MR");

    let us_only = QueryFilters {
        series: SeriesFilters { modality: Some("US".into()), ..Default::default() },
        ..Default::default()
    };
    assert!(query_stations(&[station(&pacs, "mock")], &us_only, false, &client()).unwrap().tree.is_empty());
}

#[test]
fn custom_return_values() {
    let mut fixture = Fixture::standard();
    for ds in &mut fixture.instances {
        ds.put_str(tags::REFERRING_PHYSICIAN_NAME, "REF^DOC");
    }
    let pacs = MockPacs::seed(fixture).unwrap();
    let filters = QueryFilters {
        custom: vec![CustomFilter { tag: "(0008,0090)".into(), value: "REF^DOC".into() }],
        ..Default::default()
    };
    let out = query_stations(&[station(&pacs, "mock")], &filters, false, &client()).unwrap();
    assert_eq!(out.tree.studies.len(), 1);
    assert_eq!(out.tree.studies[0].custom_values["(0008,0090)"], "REF^DOC");
    let miss = QueryFilters {
        custom: vec![CustomFilter { tag: "ReferringPhysicianName".into(), value: "OTHER".into() }],
        ..Default::default()
    };
    assert!(query_stations(&[station(&pacs, "mock")], &miss, true, &client()).unwrap().tree.is_empty());
}

fn second_fixture() -> Fixture {
    let instances = (1..=2)
        .map(|i| mock_pacs::instance(("ROE^JANE", "P002"), "1.2.4.1", ("1.2.4.1.1", "CT", 1), &format!("1.2.4.1.1.{i}"), i))
        .collect();
    Fixture { instances, ..Fixture::default() }
}

#[test]
fn query_all_keeps_station_provenance() {
    let a = MockPacs::seed(Fixture::standard()).unwrap();
    let b = MockPacs::seed(second_fixture()).unwrap();
    let stations = [station(&a, "A"), station(&b, "B")];
    let out = query_stations(&stations, &QueryFilters::default(), false, &client()).unwrap();
    let got: Vec<_> = out.tree.studies.iter().map(|s| (s.station.name.as_str(), s.study_instance_uid.as_str())).collect();
    assert_eq!(got, [("A", "1.2.3.1"), ("B", "1.2.4.1")]);
}

#[test]
fn one_station_down_yields_partial_results() {
    let a = MockPacs::seed(Fixture::standard()).unwrap();
    let mut b = MockPacs::seed(second_fixture()).unwrap();
    let stations = [station(&a, "A"), station(&b, "B")];
    let before = query_stations(&stations, &QueryFilters::default(), false, &client()).unwrap();
    b.shutdown();
    let after = query_stations(&stations, &QueryFilters::default(), false, &client()).unwrap();
    assert_eq!(after.errors.len(), 1);
    assert_eq!(after.errors[0].station.name, "B");
    let a_before: Vec<_> = before.tree.from_station(&stations[0]).collect();
    let a_after: Vec<_> = after.tree.from_station(&stations[0]).collect();
    assert_eq!(serde_json::to_vec(&a_before).unwrap(), serde_json::to_vec(&a_after).unwrap());
    assert_eq!(after.tree.from_station(&stations[1]).count(), 0);
}

#[test]
fn all_stations_failed() {
    let down = StationConfig::new("down", "X", "127.0.0.1", closed_port());
    assert!(matches!(
        query_stations(&[down], &QueryFilters::default(), false, &client()),
        Err(QueryError::AllStationsFailed(f)) if f.len() == 1
    ));
    assert!(matches!(query_stations(&[], &QueryFilters::default(), false, &client()), Err(QueryError::NoTargets)));
}

#[test]
fn bad_filters_fail_before_io() {
    let down = StationConfig::new("down", "X", "127.0.0.1", closed_port());
    let f = QueryFilters {
        study: StudyFilters { study_date: Some("yesterday".into()), ..Default::default() },
        ..Default::default()
    };
    assert!(matches!(query_stations(&[down], &f, false, &client()), Err(QueryError::Filter(_))));
}

#[test]
fn retrieve_study_writes_layout() {
    let r = rig(Fixture::standard());
    let mut ticks = Vec::new();
    let report = retrieve_study(&station(&r.pacs, "mock"), "1.2.3.1", &r.dest, &client(), &mut |p| ticks.push(p));
    assert!(report.success(), "{report:?}");
    assert_eq!((report.expected, report.completed, report.failed), (5, 5, 0));
    assert_eq!(report.files_written(), 5);
    assert_eq!(
        report.per_series,
        [
            SeriesFiles { series_uid: "1.2.3.1.1".into(), files_written: 3 },
            SeriesFiles { series_uid: "1.2.3.1.2".into(), files_written: 2 }
        ]
    );
    let files = dcm_files(&r.dest.output_root);
    assert_eq!(files.len(), 5);
    let expected_path = r.dest.output_root.join("1.2.3.1").join("1.2.3.1.1").join("1.2.3.1.1.2.dcm");
    assert!(files.contains(&expected_path));
    let (meta, ds) = read_part10_file(&std::fs::read(&expected_path).unwrap()).unwrap();
    assert_eq!(meta.media_storage_sop_instance_uid, "1.2.3.1.1.2");
    assert_eq!(meta.media_storage_sop_class_uid, uids::CT_IMAGE_STORAGE);
    assert_eq!(ds.string(tags::PATIENT_ID).unwrap(), "P001");
    // progress is monotone and ends at (5, 5)
    assert!(ticks.windows(2).all(|w| w[0].completed <= w[1].completed));
    assert_eq!(ticks.last().map(|p| (p.completed, p.expected)), Some((5, 5)));
}

#[test]
fn retrieve_series_and_repeat() {
    let r = rig(Fixture::standard());
    let st = station(&r.pacs, "mock");
    let first = retrieve_series(&st, "1.2.3.1", "1.2.3.1.1", &r.dest, &client(), &mut |_| {});
    assert_eq!((first.expected, first.completed, first.failed), (3, 3, 0));
    let bytes: Vec<_> = dcm_files(&r.dest.output_root).iter().map(|p| std::fs::read(p).unwrap()).collect();
    let second = retrieve_series(&st, "1.2.3.1", "1.2.3.1.1", &r.dest, &client(), &mut |_| {});
    assert_eq!(first, second);
    let again: Vec<_> = dcm_files(&r.dest.output_root).iter().map(|p| std::fs::read(p).unwrap()).collect();
    assert_eq!(bytes, again);
}

#[test]
fn retrieve_unknown_targets() {
    let r = rig(Fixture::standard());
    let st = station(&r.pacs, "mock");
    let study = retrieve_study(&st, "9.9.9", &r.dest, &client(), &mut |_| {});
    assert_eq!(study.expected, 0);
    assert!(!study.success() && study.error.is_some());
    let series = retrieve_series(&st, "1.2.3.1", "1.2.4.1.1", &r.dest, &client(), &mut |_| {});
    assert_eq!(series.expected, 0);
    assert!(!series.success());
    let traversal = retrieve_study(&st, "../etc", &r.dest, &client(), &mut |_| {});
    assert!(traversal.error.is_some());
}

#[test]
fn partial_failure_then_retry() {
    let r = rig(Fixture::standard().with_faults(FaultPlan { fail_nth_store: Some(2), ..FaultPlan::default() }));
    let st = station(&r.pacs, "mock");
    let report = retrieve_study(&st, "1.2.3.1", &r.dest, &client(), &mut |_| {});
    assert_eq!((report.expected, report.completed, report.failed), (5, 4, 1));
    assert!(!report.success());
    assert_eq!(report.files_written(), 4);
    assert_eq!(dcm_files(&r.dest.output_root).len(), 4);

    r.pacs.set_fault_plan(FaultPlan::default());
    let retry = retrieve_study(&st, "1.2.3.1", &r.dest, &client(), &mut |_| {});
    assert!(retry.success());
    assert_eq!(dcm_files(&r.dest.output_root).len(), 5);
}

#[test]
fn move_destination_not_registered() {
    let dir = tempfile::tempdir().unwrap();
    let pacs = MockPacs::seed(Fixture::standard()).unwrap();
    let dest = DestinationConfig::new("UNKNOWN_AE", 0, dir.path());
    let report = retrieve_series(&station(&pacs, "mock"), "1.2.3.1", "1.2.3.1.2", &dest, &client(), &mut |_| {});
    assert_eq!((report.expected, report.completed, report.failed), (2, 0, 2));
}

fn store_request(ds: DataSet) -> StoreRequest {
    StoreRequest {
        sop_class: uids::CT_IMAGE_STORAGE.into(),
        sop_instance: ds.string(tags::SOP_INSTANCE_UID).unwrap_or_default(),
        transfer_syntax: TransferSyntax::ExplicitVrLittleEndian,
        move_originator: None,
        dataset: ds,
    }
}

#[test]
fn store_sink_rules() {
    let dir = tempfile::tempdir().unwrap();
    let ds = Fixture::standard().instances[0].clone();
    let path = store_sink(dir.path(), &store_request(ds.clone())).unwrap();
    assert_eq!(path, instance_path(dir.path(), "1.2.3.1", "1.2.3.1.1", "1.2.3.1.1.1"));
    let (meta, back) = read_part10_file(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(meta.transfer_syntax_uid, uids::EXPLICIT_VR_LITTLE_ENDIAN);
    assert_eq!(back, ds);

    let mut missing = ds.clone();
    missing.remove(tags::SOP_INSTANCE_UID);
    let err = store_sink(dir.path(), &store_request(missing)).unwrap_err();
    assert_eq!(err.status(), Status::CANNOT_UNDERSTAND);

    // a file where the study directory should be makes the write fail
    let blocked = tempfile::tempdir().unwrap();
    std::fs::write(blocked.path().join("1.2.3.1"), b"x").unwrap();
    let err = store_sink(blocked.path(), &store_request(ds)).unwrap_err();
    assert_eq!(err.status(), Status::OUT_OF_RESOURCES);
    assert_eq!(dcm_files(blocked.path()).len(), 0);
}

#[test]
fn store_scp_survives_a_bad_instance() {
    let r = rig(Fixture::standard());
    let opts = dimse_net::AssociateOptions::new("PACS").with_abstract(uids::CT_IMAGE_STORAGE);
    let mut a = dimse_net::associate(&dimse_net::Peer::new("127.0.0.1", r.scp.port(), "BRIDGE_STORE"), &opts).unwrap();
    let mut bad = Fixture::standard().instances[0].clone();
    bad.remove(tags::STUDY_INSTANCE_UID);
    let st = a.c_store(uids::CT_IMAGE_STORAGE, "1.2.3.1.1.1", &bad, None).unwrap();
    assert_eq!(st, Status::CANNOT_UNDERSTAND);
    let good = Fixture::standard().instances[0].clone();
    assert!(a.c_store(uids::CT_IMAGE_STORAGE, "1.2.3.1.1.1", &good, None).unwrap().is_success());
    assert_eq!(dcm_files(&r.dest.output_root).len(), 1);
}
