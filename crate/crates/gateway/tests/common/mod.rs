#![allow(dead_code)]

use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::body::Body;
use axum::http::{header, Method, Request, StatusCode};
use axum::Router;
use gateway::{router, Gateway, GatewayConfig, StationKey};
use http_body_util::BodyExt;
use mock_pacs::{Fixture, MockPacs};
use qr_engine::StationConfig;
use serde_json::{json, Value};
use tower::ServiceExt;

pub const ADMIN_PASSWORD: &str = "password";

pub struct Rig {
    pub gateway: Arc<Gateway>,
    pub router: Router,
    pub pacs: MockPacs,
    pub station: StationConfig,
    pub dir: tempfile::TempDir,
}

pub fn config(dir: &std::path::Path, ttl: Duration) -> GatewayConfig {
    let mut config = GatewayConfig::new(dir);
    config.store_host = "127.0.0.1".into();
    config.store_port = 0;
    config.admin_password = Some(ADMIN_PASSWORD.into());
    config.session_ttl = ttl;
    config
}

pub fn open(dir: &std::path::Path, ttl: Duration) -> Arc<Gateway> {
    Arc::new(Gateway::open(config(dir, ttl)).unwrap().0)
}

/// Gateway in a temp dir with one mock PACS registered as a station and
/// the gateway's Store SCP registered at the mock.
pub fn rig(fixture: Fixture) -> Rig {
    rig_with_ttl(fixture, Duration::from_secs(600))
}

pub fn rig_with_ttl(fixture: Fixture, ttl: Duration) -> Rig {
    let dir = tempfile::tempdir().unwrap();
    let gateway = open(dir.path(), ttl);
    let pacs = MockPacs::seed(fixture).unwrap();
    pacs.register_destination(gateway.store_ae(), "127.0.0.1", gateway.store_port());
    let station = gateway
        .add_station(StationConfig::new("mock", pacs.ae_title(), "127.0.0.1", pacs.port()))
        .unwrap();
    let mut prefs = gateway.preferences();
    prefs.connect_timeout_s = 2;
    prefs.dimse_timeout_s = 10;
    gateway.set_preferences(prefs).unwrap();
    Rig { router: router(gateway.clone()), gateway, pacs, station, dir }
}

pub struct Reply {
    pub status: StatusCode,
    pub content_type: Option<String>,
    pub bytes: Vec<u8>,
}

impl Reply {
    pub fn json(&self) -> Value {
        serde_json::from_slice(&self.bytes).unwrap_or(Value::Null)
    }
}

pub async fn call(router: &Router, method: &str, path: &str, token: Option<&str>, body: Option<Value>) -> Reply {
    let mut rq = Request::builder().method(Method::from_bytes(method.as_bytes()).unwrap()).uri(path);
    if let Some(t) = token {
        rq = rq.header(header::AUTHORIZATION, format!("Bearer {t}"));
    }
    let body = match body {
        Some(v) => {
            rq = rq.header(header::CONTENT_TYPE, "application/json");
            Body::from(v.to_string())
        }
        None => Body::empty(),
    };
    let rsp = router.clone().oneshot(rq.body(body).unwrap()).await.unwrap();
    let status = rsp.status();
    let content_type = rsp.headers().get(header::CONTENT_TYPE).map(|v| v.to_str().unwrap().to_string());
    let bytes = rsp.into_body().collect().await.unwrap().to_bytes().to_vec();
    Reply { status, content_type, bytes }
}

pub async fn login(router: &Router, user: &str, password: &str) -> Reply {
    call(router, "POST", "/login", None, Some(json!({ "username": user, "password": password }))).await
}

pub async fn admin_token(router: &Router) -> String {
    let r = login(router, "admin", ADMIN_PASSWORD).await;
    assert_eq!(r.status, StatusCode::OK);
    r.json()["token"].as_str().unwrap().to_string()
}

pub fn key(station: &StationConfig) -> Value {
    serde_json::to_value(StationKey::from(station)).unwrap()
}

/// Polls GET /jobs/{id} until terminal; also checks progress never goes back.
pub async fn wait_job(router: &Router, token: &str, id: &str, limit: Duration) -> Value {
    let start = Instant::now();
    let mut last_completed = 0;
    loop {
        let job = call(router, "GET", &format!("/jobs/{id}"), Some(token), None).await.json();
        let completed = job["progress"]["completed"].as_u64().unwrap();
        assert!(completed >= last_completed, "progress went backwards");
        last_completed = completed;
        if matches!(job["state"].as_str(), Some("completed" | "failed")) || start.elapsed() > limit {
            return job;
        }
        tokio::time::sleep(Duration::from_millis(20)).await;
    }
}

pub fn dcm_count(root: &std::path::Path) -> usize {
    let mut n = 0;
    let mut stack = vec![root.to_path_buf()];
    while let Some(d) = stack.pop() {
        let Ok(entries) = std::fs::read_dir(&d) else { continue };
        for e in entries {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|x| x == "dcm") {
                n += 1;
            }
        }
    }
    n
}

/// A port with nothing listening.
pub fn closed_port() -> u16 {
    std::net::TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port()
}
