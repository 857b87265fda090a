//! Gateway over the query/retrieve engine: users and sessions, persisted
//! stations and preferences, retrieval jobs, preview serving, and the HTTP API.

pub mod error;
pub mod http;
pub mod jobs;
pub mod persist;
pub mod previews;
pub mod service;
pub mod sessions;
pub mod settings;
pub mod users;

pub use error::ApiError;
pub use http::{router, serve, PROTECTED_ROUTES, PUBLIC_ROUTES};
pub use jobs::{JobManager, JobSpec, JobState, RetrieveJob, Runner};
pub use previews::{PreviewCache, SeriesPreview, StudyPreview};
pub use service::{Gateway, GatewayConfig, OpenError, QueryRequest, QueryResponse, RetrieveRequest};
pub use sessions::{Session, SessionStore};
pub use settings::{Preferences, Settings, SettingsStore, StationKey};
pub use users::{hash_password, Role, UserRecord, UserStore};
