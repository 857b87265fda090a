use std::thread;
use std::time::{Duration, Instant};

use chrono::{DateTime, Utc};
use dicom_core::uids;
use dimse_net::{associate, validate_ae_title, AssociateOptions, Peer, Timeouts};
use serde::{Deserialize, Serialize};

/// A remote PACS node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StationConfig {
    pub name: String,
    pub ae_title: String,
    pub host: String,
    pub port: u16,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StationError {
    #[error("invalid AE title {0:?}")]
    AeTitle(String),
    #[error("host must not be empty")]
    Host,
    #[error("port must be between 1 and 65535")]
    Port,
}

impl StationConfig {
    pub fn new(name: &str, ae_title: &str, host: &str, port: u16) -> Self {
        StationConfig {
            name: name.to_string(),
            ae_title: ae_title.to_string(),
            host: host.to_string(),
            port,
        }
    }

    pub fn validate(&self) -> Result<(), StationError> {
        validate_ae_title(&self.ae_title).map_err(|_| StationError::AeTitle(self.ae_title.clone()))?;
        if self.host.trim().is_empty() {
            return Err(StationError::Host);
        }
        if self.port == 0 {
            return Err(StationError::Port);
        }
        Ok(())
    }

    /// Identity used for uniqueness: (AE title, host, port).
    pub fn key(&self) -> (String, String, u16) {
        (self.ae_title.trim().to_string(), self.host.trim().to_string(), self.port)
    }

    pub fn peer(&self) -> Peer {
        Peer::new(self.host.trim(), self.port, self.ae_title.trim())
    }
}

/// How this application presents itself to stations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClientConfig {
    pub calling_ae: String,
    pub timeouts: Timeouts,
}

impl ClientConfig {
    pub fn new(calling_ae: &str) -> Self {
        ClientConfig {
            calling_ae: calling_ae.to_string(),
            timeouts: Timeouts::default(),
        }
    }

    pub fn with_timeouts(mut self, connect: Duration, dimse: Duration) -> Self {
        self.timeouts = Timeouts { connect, dimse };
        self
    }

    pub(crate) fn options(&self) -> AssociateOptions {
        AssociateOptions::new(self.calling_ae.as_str()).with_timeouts(self.timeouts)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StationStatus {
    pub station: StationConfig,
    pub reachable: bool,
    pub checked_at: DateTime<Utc>,
    /// Round trip of association + echo, when reachable.
    pub latency_ms: Option<u64>,
    pub error: Option<String>,
}

/// One C-ECHO on a fresh association.
pub fn echo(station: &StationConfig, client: &ClientConfig) -> StationStatus {
    let started = Instant::now();
    let result = (|| {
        station.validate().map_err(|e| e.to_string())?;
        let opts = client.options().with_abstract(uids::VERIFICATION);
        let mut assoc = associate(&station.peer(), &opts).map_err(|e| e.to_string())?;
        let status = assoc.c_echo().map_err(|e| e.to_string())?;
        let _ = assoc.release();
        if status.is_success() {
            Ok(())
        } else {
            Err(format!("echo returned status {status}"))
        }
    })();
    StationStatus {
        station: station.clone(),
        reachable: result.is_ok(),
        checked_at: Utc::now(),
        latency_ms: result.is_ok().then(|| started.elapsed().as_millis() as u64),
        error: result.err(),
    }
}

/// Echoes every station concurrently; one status per station, in order.
pub fn echo_all(stations: &[StationConfig], client: &ClientConfig) -> Vec<StationStatus> {
    thread::scope(|s| {
        let handles: Vec<_> = stations
            .iter()
            .map(|st| s.spawn(move || echo(st, client)))
            .collect();
        handles
            .into_iter()
            .zip(stations)
            .map(|(h, st)| {
                h.join().unwrap_or_else(|_| StationStatus {
                    station: st.clone(),
                    reachable: false,
                    checked_at: Utc::now(),
                    latency_ms: None,
                    error: Some("echo worker panicked".into()),
                })
            })
            .collect()
    })
}
