mod common;

use std::time::Duration;

use axum::http::StatusCode;
use common::*;
use dicom_core::tags;
use mock_pacs::{FaultPlan, Fixture};
use serde_json::{json, Value};

fn with_referring(mut fixture: Fixture) -> Fixture {
    for ds in &mut fixture.instances {
        ds.put_str(tags::REFERRING_PHYSICIAN_NAME, "REF^DOC");
    }
    fixture
}

fn string_values(v: &Value) -> Vec<String> {
    match v {
        Value::String(s) => vec![s.clone()],
        Value::Array(a) => a.iter().flat_map(string_values).collect(),
        Value::Object(o) => o.values().flat_map(string_values).collect(),
        _ => Vec::new(),
    }
}

fn by_patient(id: &str) -> Value {
    json!({ "filters": { "patient": { "patient_id": id } } })
}

#[tokio::test]
async fn login_outcomes_share_one_shape() {
    let rig = rig(Fixture::empty());
    let ok = login(&rig.router, "admin", "password").await;
    assert_eq!(ok.status, StatusCode::OK);
    let session = ok.json();
    assert_eq!(session["token"].as_str().unwrap().len(), 64);
    assert_eq!(session["role"], "admin");

    let wrong = login(&rig.router, "admin", "wrong").await;
    let ghost = login(&rig.router, "ghost", "anything").await;
    assert_eq!(wrong.status, StatusCode::UNAUTHORIZED);
    assert_eq!(wrong.status, ghost.status);
    assert_eq!(wrong.bytes, ghost.bytes);
    assert_eq!(wrong.json()["code"], "authentication_failed");
}

#[tokio::test]
async fn user_store_holds_only_hashes() {
    let rig = rig(Fixture::empty());
    let admin = admin_token(&rig.router).await;
    let created = call(&rig.router, "POST", "/users", Some(&admin), Some(json!({"username": "tech1", "password": "tech-pass-1"}))).await;
    assert_eq!(created.status, StatusCode::CREATED);
    let record = created.json();
    assert_eq!(record["role"], "user");
    let hash = record["password_hash"].as_str().unwrap();
    assert!(hash.len() == 64 && hash.bytes().all(|b| b.is_ascii_hexdigit() && !b.is_ascii_uppercase()));

    let dup = call(&rig.router, "POST", "/users", Some(&admin), Some(json!({"username": "tech1", "password": "x"}))).await;
    assert_eq!(dup.status, StatusCode::CONFLICT);
    assert_eq!(dup.json()["code"], "conflict");

    let tech = login(&rig.router, "tech1", "tech-pass-1").await.json()["token"].as_str().unwrap().to_string();
    let denied = call(&rig.router, "POST", "/users", Some(&tech), Some(json!({"username": "tech2", "password": "y"}))).await;
    assert_eq!(denied.status, StatusCode::FORBIDDEN);
    assert!(rig.gateway.users().get("tech2").is_none());

    let store: Value = serde_json::from_slice(&std::fs::read(rig.gateway.users().path()).unwrap()).unwrap();
    let values = string_values(&store);
    for plaintext in ["password", "tech-pass-1"] {
        assert!(values.iter().all(|v| !v.contains(plaintext)), "{plaintext} stored");
    }
    assert!(values.contains(&"5e884898da28047151d0e56f8dc6292773603d0d6aabbdd62a11ef721d1542d8".to_string()));
}

fn concrete(path: &str) -> String {
    path.replace("{id}", "abc").replace("{study}", "1.2.3").replace("{series}", "1.2.3.1").replace("{name}", "img_0001.jpg")
}

#[tokio::test]
async fn every_protected_route_needs_a_live_session() {
    let rig = rig_with_ttl(Fixture::empty(), Duration::ZERO);
    let expired = admin_token(&rig.router).await;
    for (method, path) in gateway::PROTECTED_ROUTES {
        let path = concrete(path);
        for token in [None, Some("not-a-token"), Some(expired.as_str())] {
            let r = call(&rig.router, method, &path, token, Some(json!({}))).await;
            assert_eq!(r.status, StatusCode::UNAUTHORIZED, "{method} {path} with {token:?}");
            assert_eq!(r.json()["code"], "unauthenticated");
        }
    }
    let health = call(&rig.router, "GET", "/health", None, None).await;
    assert_eq!(health.status, StatusCode::OK);
    let unknown = call(&rig.router, "GET", "/nowhere", None, None).await;
    assert_eq!(unknown.status, StatusCode::NOT_FOUND);
    assert_eq!(unknown.json()["code"], "not_found");
}

#[tokio::test]
async fn protected_routes_answer_with_a_session() {
    let rig = rig(Fixture::empty());
    let token = admin_token(&rig.router).await;
    for (method, path) in gateway::PROTECTED_ROUTES {
        if *path == "/logout" {
            continue;
        }
        let r = call(&rig.router, method, &concrete(path), Some(&token), Some(json!({}))).await;
        assert_ne!(r.status, StatusCode::UNAUTHORIZED, "{method} {path}");
        assert_ne!(r.status, StatusCode::METHOD_NOT_ALLOWED, "{method} {path}");
    }
    let out = call(&rig.router, "POST", "/logout", Some(&token), None).await;
    assert_eq!(out.status, StatusCode::NO_CONTENT);
    assert_eq!(call(&rig.router, "GET", "/stations", Some(&token), None).await.status, StatusCode::UNAUTHORIZED);
}

#[tokio::test]
async fn stations_persist_and_verify() {
    let rig = rig(Fixture::empty());
    let token = admin_token(&rig.router).await;
    let bad = call(&rig.router, "POST", "/stations", Some(&token), Some(json!({"name": "x", "ae_title": "X", "host": "h", "port": 0}))).await;
    assert_eq!(bad.status, StatusCode::BAD_REQUEST);
    let dup = call(&rig.router, "POST", "/stations", Some(&token), Some(serde_json::to_value(&rig.station).unwrap())).await;
    assert_eq!(dup.status, StatusCode::CONFLICT);
    let other = json!({"name": "other", "ae_title": "OTHER", "host": "127.0.0.1", "port": closed_port()});
    assert_eq!(call(&rig.router, "POST", "/stations", Some(&token), Some(other.clone())).await.status, StatusCode::CREATED);

    let verify = call(&rig.router, "POST", "/stations/verify", Some(&token), None).await.json();
    let reachable: Vec<bool> = verify.as_array().unwrap().iter().map(|s| s["reachable"].as_bool().unwrap()).collect();
    assert_eq!(reachable, [true, false]);
    let one = call(&rig.router, "POST", "/stations/verify", Some(&token), Some(json!({"stations": [key(&rig.station)]}))).await.json();
    assert_eq!(one.as_array().unwrap().len(), 1);

    let settings_path = rig.dir.path().join("settings.json");
    let before = std::fs::read(&settings_path).unwrap();
    let listed = call(&rig.router, "GET", "/stations", Some(&token), None).await.json();
    drop(rig.router);
    drop(rig.gateway);
    let reopened = open(rig.dir.path(), Duration::from_secs(60));
    assert_eq!(serde_json::to_value(reopened.stations()).unwrap(), listed);
    assert_eq!(std::fs::read(&settings_path).unwrap(), before);

    let r = gateway::router(reopened);
    let token = admin_token(&r).await;
    let removed = call(&r, "DELETE", "/stations", Some(&token), Some(json!({"ae_title": "OTHER", "host": "127.0.0.1", "port": other["port"]}))).await;
    assert_eq!(removed.status, StatusCode::OK);
    assert_eq!(call(&r, "GET", "/stations", Some(&token), None).await.json().as_array().unwrap().len(), 1);
}

#[tokio::test]
async fn preferences_are_validated() {
    let rig = rig(Fixture::empty());
    let token = admin_token(&rig.router).await;
    let mut prefs = call(&rig.router, "GET", "/preferences", Some(&token), None).await.json();
    assert_eq!(prefs["exact_match"], false);
    prefs["exact_match"] = json!(true);
    let saved = call(&rig.router, "PUT", "/preferences", Some(&token), Some(prefs.clone())).await;
    assert_eq!(saved.status, StatusCode::OK);
    prefs["connect_timeout_s"] = json!(0);
    let rejected = call(&rig.router, "PUT", "/preferences", Some(&token), Some(prefs)).await;
    assert_eq!(rejected.status, StatusCode::BAD_REQUEST);
    assert_eq!(call(&rig.router, "GET", "/preferences", Some(&token), None).await.json()["exact_match"], true);
    let malformed = call(&rig.router, "PUT", "/preferences", Some(&token), Some(json!({"exact_match": "yes"}))).await;
    assert_eq!(malformed.status, StatusCode::BAD_REQUEST);
    assert_eq!(malformed.json()["code"], "validation");
}

#[tokio::test]
async fn query_returns_the_tree_document() {
    let rig = rig(with_referring(Fixture::standard()));
    let token = admin_token(&rig.router).await;
    let r = call(&rig.router, "POST", "/query", Some(&token), Some(by_patient("P001"))).await;
    assert_eq!(r.status, StatusCode::OK);
    let doc = r.json();
    let studies = doc["studies"].as_array().unwrap();
    assert_eq!(studies.len(), 1);
    let counts: Vec<u64> = studies[0]["series"].as_array().unwrap().iter().map(|s| s["instance_count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [3, 2]);
    assert_eq!(studies[0]["actions"], json!({"retrieve_enabled": true, "preview_enabled": false, "open_enabled": false, "failed_mark": false}));
    assert_eq!(studies[0]["station"]["name"], "mock");
    assert_eq!(doc["errors"], json!([]));

    let custom = json!({ "filters": { "custom": [{ "tag": "(0008,0090)", "value": "REF^DOC" }] } });
    let doc = call(&rig.router, "POST", "/query", Some(&token), Some(custom)).await.json();
    assert_eq!(doc["studies"].as_array().unwrap().len(), 1);
    assert_eq!(doc["studies"][0]["custom_values"]["(0008,0090)"], "REF^DOC");

    let bad = call(&rig.router, "POST", "/query", Some(&token), Some(json!({"filters": {"study": {"study_date": "2024-01-02"}}}))).await;
    assert_eq!(bad.status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn empty_archive_gives_empty_tree() {
    let rig = rig(Fixture::empty());
    let token = admin_token(&rig.router).await;
    let doc = call(&rig.router, "POST", "/query", Some(&token), Some(json!({}))).await.json();
    assert_eq!(doc["studies"], json!([]));
}

#[tokio::test]
async fn all_stations_down_is_a_gateway_error() {
    let mut rig = rig(Fixture::standard());
    let token = admin_token(&rig.router).await;
    rig.pacs.shutdown();
    let r = call(&rig.router, "POST", "/query", Some(&token), Some(by_patient("P001"))).await;
    assert_eq!(r.status, StatusCode::BAD_GATEWAY);
    let body = r.json();
    assert_eq!(body["code"], "all_stations_failed");
    assert_eq!(body["detail"][0]["station"]["name"], "mock");
}

#[tokio::test]
async fn retrieve_jobs_complete_and_fail_honestly() {
    let rig = rig(Fixture::standard());
    let token = admin_token(&rig.router).await;
    let root = rig.gateway.preferences().output_root;

    let rq = json!({"scope": "study", "study_uid": "1.2.3.1", "station": key(&rig.station)});
    let submitted = call(&rig.router, "POST", "/retrieve", Some(&token), Some(rq.clone())).await;
    assert_eq!(submitted.status, StatusCode::ACCEPTED);
    let id = submitted.json()["id"].as_str().unwrap().to_string();
    let job = wait_job(&rig.router, &token, &id, Duration::from_secs(20)).await;
    assert_eq!(job["state"], "completed");
    assert_eq!((job["progress"]["completed"].as_u64(), job["progress"]["expected"].as_u64()), (Some(5), Some(5)));
    assert_eq!(job["report"]["failed"], 0);
    assert_eq!(dcm_count(&root), 5);

    let series = json!({"scope": "series", "study_uid": "1.2.3.1", "series_uid": "1.2.3.1.2", "station": key(&rig.station)});
    let id = call(&rig.router, "POST", "/retrieve", Some(&token), Some(series)).await.json()["id"].as_str().unwrap().to_string();
    let job = wait_job(&rig.router, &token, &id, Duration::from_secs(20)).await;
    assert_eq!(job["state"], "completed");
    let written: u64 = job["report"]["per_series"].as_array().unwrap().iter().map(|s| s["files_written"].as_u64().unwrap()).sum();
    assert_eq!(written, 2);

    rig.pacs.set_fault_plan(FaultPlan { fail_nth_store: Some(2), ..Default::default() });
    let id = call(&rig.router, "POST", "/retrieve", Some(&token), Some(rq.clone())).await.json()["id"].as_str().unwrap().to_string();
    let job = wait_job(&rig.router, &token, &id, Duration::from_secs(20)).await;
    assert_eq!(job["state"], "failed");
    assert_eq!((job["report"]["completed"].as_u64(), job["report"]["failed"].as_u64()), (Some(4), Some(1)));
    assert_eq!(dcm_count(&root), 4);

    rig.pacs.set_fault_plan(FaultPlan::default());
    let again = call(&rig.router, "POST", "/retrieve", Some(&token), Some(rq)).await.json();
    assert_ne!(again["id"].as_str().unwrap(), id);
    let job = wait_job(&rig.router, &token, again["id"].as_str().unwrap(), Duration::from_secs(20)).await;
    assert_eq!(job["state"], "completed");
    assert_eq!(dcm_count(&root), 5);
}

#[tokio::test]
async fn duplicate_in_flight_submit_returns_same_job() {
    let rig = rig(Fixture::standard());
    let token = admin_token(&rig.router).await;
    rig.pacs.set_fault_plan(FaultPlan { withhold_find_response: true, ..Default::default() });
    let rq = json!({"scope": "study", "study_uid": "1.2.3.1", "station": key(&rig.station)});
    let a = call(&rig.router, "POST", "/retrieve", Some(&token), Some(rq.clone())).await;
    let b = call(&rig.router, "POST", "/retrieve", Some(&token), Some(rq)).await;
    assert_eq!(a.status, StatusCode::ACCEPTED);
    assert_eq!(b.status, StatusCode::OK);
    assert_eq!(a.json()["id"], b.json()["id"]);
    rig.pacs.set_fault_plan(FaultPlan::default());
    let job = wait_job(&rig.router, &token, a.json()["id"].as_str().unwrap(), Duration::from_secs(20)).await;
    assert_eq!(job["state"], "completed");
}

#[tokio::test]
async fn retrieve_request_errors() {
    let rig = rig(Fixture::standard());
    let token = admin_token(&rig.router).await;
    let unknown_station = json!({"scope": "study", "study_uid": "1.2.3.1", "station": {"ae_title": "X", "host": "h", "port": 1}});
    assert_eq!(call(&rig.router, "POST", "/retrieve", Some(&token), Some(unknown_station)).await.status, StatusCode::NOT_FOUND);
    let no_series = json!({"scope": "series", "study_uid": "1.2.3.1", "station": key(&rig.station)});
    assert_eq!(call(&rig.router, "POST", "/retrieve", Some(&token), Some(no_series)).await.status, StatusCode::BAD_REQUEST);
    assert_eq!(call(&rig.router, "GET", "/jobs/nope", Some(&token), None).await.status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn previews_follow_retrieval() {
    let rig = rig(Fixture::standard());
    let token = admin_token(&rig.router).await;
    let early = call(&rig.router, "GET", "/previews/1.2.3.1", Some(&token), None).await;
    assert_eq!(early.status, StatusCode::NOT_FOUND);
    assert_eq!(early.json()["code"], "not_retrieved");

    let rq = json!({"scope": "study", "study_uid": "1.2.3.1", "station": key(&rig.station)});
    let id = call(&rig.router, "POST", "/retrieve", Some(&token), Some(rq)).await.json()["id"].as_str().unwrap().to_string();
    assert_eq!(wait_job(&rig.router, &token, &id, Duration::from_secs(20)).await["state"], "completed");

    let study = call(&rig.router, "GET", "/previews/1.2.3.1", Some(&token), None).await;
    assert_eq!(study.status, StatusCode::OK);
    let doc = study.json();
    let lengths: Vec<usize> = doc["series"].as_array().unwrap().iter().map(|s| s["manifest"]["entries"].as_array().unwrap().len()).collect();
    assert_eq!(lengths, [3, 2]);
    let exports = rig.gateway.previews().exports();

    let again = call(&rig.router, "GET", "/previews/1.2.3.1/1.2.3.1.1", Some(&token), None).await;
    assert_eq!(again.json(), doc["series"][0]["manifest"]);
    assert_eq!(rig.gateway.previews().exports(), exports);

    let image = call(&rig.router, "GET", "/previews/1.2.3.1/1.2.3.1.1/img_0001.jpg", Some(&token), None).await;
    assert_eq!(image.status, StatusCode::OK);
    assert_eq!(image.content_type.as_deref(), Some("image/jpeg"));
    assert_eq!(&image.bytes[..2], &[0xFF, 0xD8]);
    let pgm = call(&rig.router, "GET", "/previews/1.2.3.1/1.2.3.1.1/img_0003.pgm", Some(&token), None).await;
    assert!(pgm.bytes.starts_with(b"P5"));
    let missing = call(&rig.router, "GET", "/previews/1.2.3.1/1.2.3.1.1/img_0009.jpg", Some(&token), None).await;
    assert_eq!(missing.status, StatusCode::NOT_FOUND);
    let sneaky = call(&rig.router, "GET", "/previews/1.2.3.1/1.2.3.1.1/manifest.json", Some(&token), None).await;
    assert_eq!(sneaky.status, StatusCode::NOT_FOUND);

    // a changed series directory invalidates the cached render
    let root = rig.gateway.preferences().output_root;
    std::fs::remove_file(root.join("1.2.3.1/1.2.3.1.1/1.2.3.1.1.3.dcm")).unwrap();
    let shrunk = call(&rig.router, "GET", "/previews/1.2.3.1/1.2.3.1.1", Some(&token), None).await.json();
    assert_eq!(shrunk["entries"].as_array().unwrap().len(), 2);
    assert_eq!(rig.gateway.previews().exports(), exports + 1);
}

#[tokio::test]
async fn dictionary_suggests_keywords() {
    let rig = rig(Fixture::empty());
    let token = admin_token(&rig.router).await;
    let hits = call(&rig.router, "GET", "/dictionary?q=Referring", Some(&token), None).await.json();
    let keywords: Vec<&str> = hits.as_array().unwrap().iter().map(|h| h["keyword"].as_str().unwrap()).collect();
    assert!(keywords.contains(&"ReferringPhysicianName"), "{keywords:?}");
    let entry = hits.as_array().unwrap().iter().find(|h| h["keyword"] == "ReferringPhysicianName").unwrap();
    assert_eq!(entry["tag"], "(0008,0090)");
    assert_eq!(entry["vr"], "PN");
    let limited = call(&rig.router, "GET", "/dictionary?q=a&limit=3", Some(&token), None).await.json();
    assert_eq!(limited.as_array().unwrap().len(), 3);
}
