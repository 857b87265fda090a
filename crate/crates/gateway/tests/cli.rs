mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::{closed_port, dcm_count};
use mock_pacs::{Fixture, MockPacs};

fn bridge(data: &std::path::Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bridge"))
        .env_remove("BRIDGE_STORE_AE")
        .env_remove("BRIDGE_STORE_PORT")
        .env("BRIDGE_DATA_DIR", data)
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&bridge(dir.path(), &[])), 2);
    assert_eq!(code(&bridge(dir.path(), &["query", "--bogus"])), 2);
    // no saved stations and none named
    assert_eq!(code(&bridge(dir.path(), &["query", "--patient-id", "P001"])), 2);
    assert_eq!(code(&bridge(dir.path(), &["echo", "--station", "nameless"])), 2);
    assert_eq!(code(&bridge(dir.path(), &["echo", "--station", "AE@host:notaport"])), 2);
}

#[test]
fn echo_query_retrieve_preview() {
    let dir = tempfile::tempdir().unwrap();
    let pacs = MockPacs::seed(Fixture::standard()).unwrap();
    let store_port = closed_port();
    pacs.register_destination("BRIDGE_STORE", "127.0.0.1", store_port);
    let station = format!("MOCKPACS@127.0.0.1:{}", pacs.port());

    let echo = bridge(dir.path(), &["echo", "--station", &station]);
    assert_eq!(code(&echo), 0);
    assert!(stdout(&echo).contains("reachable"));
    let down = format!("DOWN@127.0.0.1:{}", closed_port());
    assert_eq!(code(&bridge(dir.path(), &["echo", "--station", &station, "--station", &down])), 1);

    let q = bridge(dir.path(), &["query", "--station", &station, "--patient-id", "P001"]);
    assert_eq!(code(&q), 0);
    let doc: serde_json::Value = serde_json::from_slice(&q.stdout).unwrap();
    assert_eq!(doc["studies"][0]["series"].as_array().unwrap().len(), 2);

    let text = bridge(dir.path(), &["query", "--station", &station, "--modality", "MR", "--format", "text"]);
    assert_eq!(code(&text), 0);
    assert!(stdout(&text).contains("1.2.3.1"));
    assert_eq!(code(&bridge(dir.path(), &["query", "--station", &station, "--study-date", "2024-01-02"])), 2);
    assert_eq!(code(&bridge(dir.path(), &["query", "--station", &station, "--custom", "NoSuchKeyword=1"])), 2);
    assert_eq!(code(&bridge(dir.path(), &["query", "--station", &down])), 1);

    let port = store_port.to_string();
    let r = bridge(dir.path(), &["--store-port", &port, "retrieve", "--station", &station, "--study", "1.2.3.1"]);
    assert_eq!(code(&r), 0, "{}", String::from_utf8_lossy(&r.stderr));
    assert_eq!(dcm_count(&dir.path().join("studies")), 5);

    let p = bridge(dir.path(), &["preview", "--study", "1.2.3.1"]);
    assert_eq!(code(&p), 0);
    let manifests: serde_json::Value = serde_json::from_slice(&p.stdout).unwrap();
    assert_eq!(manifests["1.2.3.1.1"]["entries"].as_array().unwrap().len(), 3);
    assert!(dir.path().join("previews/1.2.3.1/1.2.3.1.2/img_0002.pgm").is_file());
    assert_eq!(code(&bridge(dir.path(), &["preview", "--study", "9.9.9"])), 1);

    let missing = bridge(dir.path(), &["--store-port", &port, "retrieve", "--station", &station, "--study", "9.9.9"]);
    assert_eq!(code(&missing), 1);
}

#[test]
fn user_add() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&bridge(dir.path(), &["user-add", "--username", "tech1", "--password", "pw1"])), 0);
    assert_eq!(code(&bridge(dir.path(), &["user-add", "--username", "tech1", "--password", "pw2"])), 1);
    assert_eq!(code(&bridge(dir.path(), &["user-add", "--username", "tech2", "--password", ""])), 2);

    let mut child = Command::new(env!("CARGO_BIN_EXE_bridge"))
        .env("BRIDGE_DATA_DIR", dir.path())
        .args(["user-add", "--username", "tech3", "--role", "admin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"from-stdin\n").unwrap();
    assert!(child.wait().unwrap().success());
    let users = gateway::UserStore::open(&dir.path().join("users.json")).unwrap();
    assert_eq!(users.verify("tech3", "from-stdin").unwrap().role, gateway::Role::Admin);
    assert!(users.verify("tech1", "pw1").is_some());
}

struct Killed(std::process::Child);

impl Drop for Killed {
    fn drop(&mut self) {
        let _ = self.0.kill();
        let _ = self.0.wait();
    }
}

fn http(port: u16, request: &str) -> String {
    use std::io::Read;
    let mut s = std::net::TcpStream::connect(("127.0.0.1", port)).unwrap();
    s.write_all(request.as_bytes()).unwrap();
    let mut out = String::new();
    s.read_to_string(&mut out).unwrap();
    out
}

#[test]
fn serve_prints_generated_admin_password_once() {
    use std::io::{BufRead, BufReader};
    let dir = tempfile::tempdir().unwrap();
    let port = closed_port();
    let listen = format!("127.0.0.1:{port}");
    let start = || {
        Command::new(env!("CARGO_BIN_EXE_bridge"))
            .env("BRIDGE_DATA_DIR", dir.path())
            .env_remove("BRIDGE_ADMIN_PASSWORD")
            .env("RUST_LOG", "info")
            .args(["--store-port", "0", "serve", "--listen", &listen])
            .stdout(Stdio::null())
            .stderr(Stdio::piped())
            .spawn()
            .map(Killed)
            .unwrap()
    };
    let mut child = start();
    let lines = BufReader::new(child.0.stderr.take().unwrap()).lines();
    let announced = lines.map(|l| l.unwrap()).find(|l| l.contains("created user")).unwrap();
    let password = announced.rsplit(' ').next().unwrap().to_string();
    // wait for the listener
    let deadline = std::time::Instant::now() + std::time::Duration::from_secs(10);
    while std::net::TcpStream::connect(("127.0.0.1", port)).is_err() {
        assert!(std::time::Instant::now() < deadline, "gateway did not start");
        std::thread::sleep(std::time::Duration::from_millis(50));
    }
    let health = http(port, "GET /health HTTP/1.1\r\nHost: x\r\nConnection: close\r\n\r\n");
    assert!(health.starts_with("HTTP/1.1 200"), "{health}");
    let body = format!(r#"{{"username":"admin","password":"{password}"}}"#);
    let login = http(port, &format!(
        "POST /login HTTP/1.1\r\nHost: x\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    ));
    assert!(login.starts_with("HTTP/1.1 200"), "{login}");
    drop(child);

    let mut second = start();
    std::thread::sleep(std::time::Duration::from_millis(500));
    second.0.kill().unwrap();
    let mut err = String::new();
    std::io::Read::read_to_string(&mut second.0.stderr.take().unwrap(), &mut err).unwrap();
    assert!(!err.contains("created user"), "{err}");
}
