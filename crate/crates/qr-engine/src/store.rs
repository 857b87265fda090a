//! Local Store SCP writing received instances as Part 10 files.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use dicom_core::{tags, uids, write_part10_file, DataSet, FileMeta};
use dimse_net::{serve, Handlers, ServerConfig, ServerHandle, Status, StoreRequest};

pub const DEFAULT_STORE_AE: &str = "BRIDGE_STORE";
pub const DEFAULT_STORE_PORT: u16 = 11113;

/// Where retrieved instances go: the AE title the PACS moves to, the port
/// the Store SCP listens on, and the root of the file layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DestinationConfig {
    pub store_ae: String,
    pub store_port: u16,
    pub output_root: PathBuf,
}

impl DestinationConfig {
    pub fn new(store_ae: &str, store_port: u16, output_root: impl Into<PathBuf>) -> Self {
        DestinationConfig {
            store_ae: store_ae.to_string(),
            store_port,
            output_root: output_root.into(),
        }
    }
}

/// `<root>/<study>/<series>/<sop>.dcm`
pub fn instance_path(root: &Path, study: &str, series: &str, sop: &str) -> PathBuf {
    root.join(study).join(series).join(format!("{sop}.dcm"))
}

#[derive(Debug, thiserror::Error)]
pub enum SinkError {
    #[error("instance lacks a valid {0}")]
    MissingUid(&'static str),
    #[error("cannot encode instance: {0}")]
    Encode(#[from] dicom_core::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl SinkError {
    pub fn status(&self) -> Status {
        match self {
            SinkError::MissingUid(_) | SinkError::Encode(_) => Status::CANNOT_UNDERSTAND,
            SinkError::Io { .. } => Status::OUT_OF_RESOURCES,
        }
    }
}

fn uid(ds: &DataSet, tag: dicom_core::Tag, name: &'static str) -> Result<String, SinkError> {
    ds.string(tag)
        .filter(|u| uids::is_valid_uid(u))
        .ok_or(SinkError::MissingUid(name))
}

/// Writes one received instance atomically under `root`.
pub fn store_sink(root: &Path, request: &StoreRequest) -> Result<PathBuf, SinkError> {
    let ds = &request.dataset;
    let sop = uid(ds, tags::SOP_INSTANCE_UID, "SOPInstanceUID")?;
    let series = uid(ds, tags::SERIES_INSTANCE_UID, "SeriesInstanceUID")?;
    let study = uid(ds, tags::STUDY_INSTANCE_UID, "StudyInstanceUID")?;
    let class = ds
        .string(tags::SOP_CLASS_UID)
        .filter(|u| uids::is_valid_uid(u))
        .unwrap_or_else(|| request.sop_class.clone());
    let meta = FileMeta::new(request.transfer_syntax, &class, &sop);
    let bytes = write_part10_file(&meta, ds)?;

    let path = instance_path(root, &study, &series, &sop);
    let dir = path.parent().expect("instance path has a parent");
    let io = |source| SinkError::Io { path: path.clone(), source };
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(&bytes).map_err(io)?;
    tmp.persist(&path).map_err(|e| io(e.error))?;
    Ok(path)
}

/// A running Store SCP. The output root can be changed while it runs.
pub struct StoreScp {
    server: ServerHandle,
    root: Arc<RwLock<PathBuf>>,
}

impl StoreScp {
    pub fn start(dest: &DestinationConfig) -> dimse_net::Result<StoreScp> {
        Self::start_on(dest, "0.0.0.0")
    }

    pub fn start_on(dest: &DestinationConfig, host: &str) -> dimse_net::Result<StoreScp> {
        let root = Arc::new(RwLock::new(dest.output_root.clone()));
        let sink_root = root.clone();
        let handlers = Handlers {
            on_echo: Some(Arc::new(|_| Status::SUCCESS)),
            on_store: Some(Arc::new(move |info, rq: &StoreRequest| {
                let root = sink_root.read().unwrap_or_else(|p| p.into_inner()).clone();
                match store_sink(&root, rq) {
                    Ok(path) => {
                        log::debug!("stored {} from {} at {}", rq.sop_instance, info.calling_ae, path.display());
                        Status::SUCCESS
                    }
                    Err(e) => {
                        log::warn!("rejecting {} from {}: {e}", rq.sop_instance, info.calling_ae);
                        e.status()
                    }
                }
            })),
            ..Handlers::default()
        };
        let server = serve(ServerConfig::new(dest.store_ae.as_str(), host, dest.store_port), handlers)?;
        Ok(StoreScp { server, root })
    }

    pub fn port(&self) -> u16 {
        self.server.port()
    }

    pub fn output_root(&self) -> PathBuf {
        self.root.read().unwrap_or_else(|p| p.into_inner()).clone()
    }

    pub fn set_output_root(&self, root: PathBuf) {
        *self.root.write().unwrap_or_else(|p| p.into_inner()) = root;
    }

    pub fn shutdown(&mut self) {
        self.server.shutdown();
    }
}
