use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Duration;

use axum::http::StatusCode;
use qr_engine::{
    echo_all, query_stations, retrieve_series, retrieve_study, DestinationConfig, QueryError, QueryFilters,
    RetrieveReport, Scope, StationConfig, StationFailure, StationStatus, StoreScp, StudyNode,
    DEFAULT_STORE_AE, DEFAULT_STORE_PORT,
};
use serde::{Deserialize, Serialize};

use crate::error::ApiError;
use crate::jobs::{JobManager, JobSpec, RetrieveJob, Runner, DEFAULT_WORKERS};
use crate::previews::{PreviewCache, StudyPreview};
use crate::sessions::{Session, SessionStore, DEFAULT_SESSION_TTL};
use crate::settings::{Preferences, SettingsStore, StationKey};
use crate::users::{Role, UserRecord, UserStore};

pub const USERS_FILE: &str = "users.json";
pub const SETTINGS_FILE: &str = "settings.json";

#[derive(Debug, Clone)]
pub struct GatewayConfig {
    pub data_dir: PathBuf,
    pub store_ae: String,
    /// 0 picks a free port.
    pub store_port: u16,
    pub store_host: String,
    pub session_ttl: Duration,
    pub workers: usize,
    pub admin_password: Option<String>,
}

impl GatewayConfig {
    pub fn new(data_dir: impl Into<PathBuf>) -> Self {
        GatewayConfig {
            data_dir: data_dir.into(),
            store_ae: DEFAULT_STORE_AE.into(),
            store_port: DEFAULT_STORE_PORT,
            store_host: "0.0.0.0".into(),
            session_ttl: DEFAULT_SESSION_TTL,
            workers: DEFAULT_WORKERS,
            admin_password: None,
        }
    }

    /// Reads BRIDGE_DATA_DIR, BRIDGE_STORE_AE, BRIDGE_STORE_PORT and
    /// BRIDGE_ADMIN_PASSWORD.
    pub fn from_env() -> Result<Self, String> {
        let mut config = GatewayConfig::new(std::env::var_os("BRIDGE_DATA_DIR").map_or("bridge-data".into(), PathBuf::from));
        if let Ok(ae) = std::env::var("BRIDGE_STORE_AE") {
            config.store_ae = ae;
        }
        if let Ok(port) = std::env::var("BRIDGE_STORE_PORT") {
            config.store_port = port.parse().map_err(|_| format!("BRIDGE_STORE_PORT {port:?} is not a port number"))?;
        }
        config.admin_password = std::env::var("BRIDGE_ADMIN_PASSWORD").ok().filter(|p| !p.is_empty());
        Ok(config)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum OpenError {
    #[error("cannot open {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot start the store SCP: {0}")]
    Store(#[from] dimse_net::Error),
    #[error(transparent)]
    Bootstrap(#[from] ApiError),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QueryRequest {
    /// All configured stations when absent.
    pub targets: Option<Vec<StationKey>>,
    pub filters: QueryFilters,
    /// Overrides the preference when set.
    pub exact_match: Option<bool>,
}

/// The tree document plus per-station failures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QueryResponse {
    pub studies: Vec<StudyNode>,
    pub errors: Vec<StationFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetrieveRequest {
    pub scope: Scope,
    pub study_uid: String,
    #[serde(default)]
    pub series_uid: Option<String>,
    pub station: StationKey,
}

pub struct Gateway {
    config: GatewayConfig,
    users: UserStore,
    sessions: SessionStore,
    settings: Arc<SettingsStore>,
    store: StoreScp,
    jobs: JobManager,
    previews: PreviewCache,
}

pub fn query_error(e: QueryError) -> ApiError {
    match e {
        QueryError::Filter(f) => ApiError::validation(f.to_string()),
        QueryError::NoTargets => ApiError::validation("no stations to query"),
        QueryError::AllStationsFailed(errors) => {
            ApiError::new(StatusCode::BAD_GATEWAY, "all_stations_failed", "every station failed").with_detail(errors)
        }
    }
}

fn run_retrieve(spec: &JobSpec, dest: &DestinationConfig, prefs: &Preferences, progress: &mut dyn FnMut(qr_engine::Progress)) -> RetrieveReport {
    let client = prefs.client(&dest.store_ae);
    match &spec.series_uid {
        Some(series) if spec.scope == Scope::Series => {
            retrieve_series(&spec.station, &spec.study_uid, series, dest, &client, progress)
        }
        _ => retrieve_study(&spec.station, &spec.study_uid, dest, &client, progress),
    }
}

impl Gateway {
    /// Opens the data directory, bootstraps the admin account and starts the
    /// Store SCP. Returns the generated admin password on first run when none
    /// was configured.
    pub fn open(config: GatewayConfig) -> Result<(Gateway, Option<String>), OpenError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| OpenError::Io { path, source }
        };
        std::fs::create_dir_all(&config.data_dir).map_err(io(&config.data_dir))?;
        let users_path = config.data_dir.join(USERS_FILE);
        let users = UserStore::open(&users_path).map_err(io(&users_path))?;
        let generated = users.bootstrap(config.admin_password.as_deref())?;
        let settings_path = config.data_dir.join(SETTINGS_FILE);
        let settings = Arc::new(
            SettingsStore::open(&settings_path, config.data_dir.join("studies")).map_err(io(&settings_path))?,
        );
        let output_root = settings.snapshot().preferences.output_root;
        let dest = DestinationConfig::new(&config.store_ae, config.store_port, output_root);
        let store = StoreScp::start_on(&dest, &config.store_host)?;

        let (runner_settings, store_ae, store_port) = (settings.clone(), config.store_ae.clone(), store.port());
        let runner: Runner = Arc::new(move |spec, progress| {
            let prefs = runner_settings.snapshot().preferences;
            let dest = DestinationConfig::new(&store_ae, store_port, prefs.output_root.clone());
            run_retrieve(spec, &dest, &prefs, progress)
        });
        let gateway = Gateway {
            users,
            sessions: SessionStore::new(config.session_ttl),
            previews: PreviewCache::new(config.data_dir.join("previews")),
            jobs: JobManager::new(config.workers, runner),
            settings,
            store,
            config,
        };
        Ok((gateway, generated))
    }

    pub fn config(&self) -> &GatewayConfig {
        &self.config
    }

    pub fn store_ae(&self) -> &str {
        &self.config.store_ae
    }

    pub fn store_port(&self) -> u16 {
        self.store.port()
    }

    pub fn users(&self) -> &UserStore {
        &self.users
    }

    pub fn previews(&self) -> &PreviewCache {
        &self.previews
    }

    pub fn login(&self, username: &str, password: &str) -> Result<Session, ApiError> {
        let user = self.users.verify(username, password).ok_or_else(ApiError::bad_credentials)?;
        Ok(self.sessions.issue(&user.username, user.role))
    }

    pub fn authenticate(&self, token: &str) -> Result<Session, ApiError> {
        self.sessions.validate(token).ok_or_else(ApiError::unauthenticated)
    }

    pub fn logout(&self, session: &Session) {
        self.sessions.revoke(&session.token);
    }

    pub fn create_user(&self, session: &Session, username: &str, password: &str, role: Role) -> Result<UserRecord, ApiError> {
        if session.role != Role::Admin {
            return Err(ApiError::forbidden("only the admin may register users"));
        }
        self.users.add(username, password, role)
    }

    pub fn stations(&self) -> Vec<StationConfig> {
        self.settings.snapshot().stations
    }

    pub fn add_station(&self, station: StationConfig) -> Result<StationConfig, ApiError> {
        self.settings.add_station(station)
    }

    pub fn remove_station(&self, key: &StationKey) -> Result<StationConfig, ApiError> {
        self.settings.remove_station(key)
    }

    fn resolve(&self, keys: Option<&[StationKey]>) -> Result<Vec<StationConfig>, ApiError> {
        let all = self.stations();
        match keys {
            None => Ok(all),
            Some(keys) => keys
                .iter()
                .map(|k| {
                    all.iter()
                        .find(|s| k.matches(s))
                        .cloned()
                        .ok_or_else(|| ApiError::not_found(format!("no station {}@{}:{}", k.ae_title, k.host, k.port)))
                })
                .collect(),
        }
    }

    pub fn verify_stations(&self, keys: Option<&[StationKey]>) -> Result<Vec<StationStatus>, ApiError> {
        let stations = self.resolve(keys)?;
        Ok(echo_all(&stations, &self.preferences().client(&self.config.store_ae)))
    }

    pub fn preferences(&self) -> Preferences {
        self.settings.snapshot().preferences
    }

    pub fn set_preferences(&self, prefs: Preferences) -> Result<Preferences, ApiError> {
        let saved = self.settings.set_preferences(prefs)?;
        self.store.set_output_root(saved.output_root.clone());
        Ok(saved)
    }

    pub fn query(&self, request: &QueryRequest) -> Result<QueryResponse, ApiError> {
        let targets = self.resolve(request.targets.as_deref())?;
        let prefs = self.preferences();
        let exact = request.exact_match.unwrap_or(prefs.exact_match);
        let outcome = query_stations(&targets, &request.filters, exact, &prefs.client(&self.config.store_ae))
            .map_err(query_error)?;
        Ok(QueryResponse { studies: outcome.tree.studies, errors: outcome.errors })
    }

    /// Returns the job and whether it was newly queued.
    pub fn submit_retrieve(&self, request: &RetrieveRequest) -> Result<(RetrieveJob, bool), ApiError> {
        let station = self
            .settings
            .find_station(&request.station)
            .ok_or_else(|| ApiError::not_found("no such station"))?;
        let series_uid = match (request.scope, &request.series_uid) {
            (Scope::Series, None) => return Err(ApiError::validation("series scope needs series_uid")),
            (Scope::Series, s) => s.clone(),
            (Scope::Study, _) => None,
        };
        Ok(self.jobs.submit(JobSpec {
            scope: request.scope,
            study_uid: request.study_uid.trim().to_string(),
            series_uid: series_uid.map(|s| s.trim().to_string()),
            station,
        }))
    }

    pub fn job(&self, id: &str) -> Result<RetrieveJob, ApiError> {
        self.jobs.get(id).ok_or_else(|| ApiError::not_found(format!("no job {id:?}")))
    }

    pub fn wait_job(&self, id: &str, timeout: Duration) -> Result<RetrieveJob, ApiError> {
        self.jobs.wait(id, timeout).ok_or_else(|| ApiError::not_found(format!("no job {id:?}")))
    }

    pub fn study_previews(&self, study: &str) -> Result<StudyPreview, ApiError> {
        self.previews.study(&self.preferences().output_root, study)
    }

    pub fn series_preview(&self, study: &str, series: &str) -> Result<preview::Manifest, ApiError> {
        self.previews.series(&self.preferences().output_root, study, series)
    }

    pub fn preview_image(&self, study: &str, series: &str, name: &str) -> Result<Vec<u8>, ApiError> {
        self.previews.image(&self.preferences().output_root, study, series, name)
    }
}
