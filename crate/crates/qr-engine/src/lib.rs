//! Query/retrieve orchestration across PACS stations: echo, identifier
//! construction, hierarchical query, per-image retrieval, and the local
//! Store SCP that receives moved instances.

mod filters;
mod query;
mod retrieve;
mod station;
mod store;
mod tree;

pub use filters::{
    build_identifier, resolve_custom, validate_date, validate_time, CustomFilter, FilterError,
    PatientFilters, QueryFilters, QueryLevel, SeriesFilters, StudyFilters, IMAGE_COLUMNS,
    SERIES_COLUMNS, STUDY_COLUMNS,
};
pub use query::{display_value, query_station, query_stations, suggest_attributes, QueryError, QueryOutcome, StationFailure};
pub use retrieve::{retrieve_series, retrieve_study, Progress, RetrieveReport, Scope, SeriesFiles};
pub use station::{echo, echo_all, ClientConfig, StationConfig, StationError, StationStatus};
pub use store::{
    instance_path, store_sink, DestinationConfig, SinkError, StoreScp, DEFAULT_STORE_AE,
    DEFAULT_STORE_PORT,
};
pub use tree::{ActionState, ResultTree, SeriesNode, StudyNode};
