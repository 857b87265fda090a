use std::collections::HashMap;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{FromRequest, Path, Query, Request, State};
use axum::http::{header, StatusCode};
use axum::middleware::{self, Next};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Extension, Json, Router};
use qr_engine::{suggest_attributes, StationConfig};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::ApiError;
use crate::previews::content_type;
use crate::service::{Gateway, QueryRequest, RetrieveRequest};
use crate::sessions::Session;
use crate::settings::{Preferences, StationKey};
use crate::users::Role;

type AppState = Arc<Gateway>;

/// Routes reachable without a session.
pub const PUBLIC_ROUTES: &[(&str, &str)] = &[("POST", "/login"), ("GET", "/health")];

/// Every other route; all sit behind the session check.
pub const PROTECTED_ROUTES: &[(&str, &str)] = &[
    ("POST", "/logout"),
    ("POST", "/users"),
    ("GET", "/stations"),
    ("POST", "/stations"),
    ("DELETE", "/stations"),
    ("POST", "/stations/verify"),
    ("GET", "/preferences"),
    ("PUT", "/preferences"),
    ("POST", "/query"),
    ("POST", "/retrieve"),
    ("GET", "/jobs/{id}"),
    ("GET", "/previews/{study}"),
    ("GET", "/previews/{study}/{series}"),
    ("GET", "/previews/{study}/{series}/{name}"),
    ("GET", "/dictionary"),
];

/// JSON body whose rejections use the error document.
pub struct JsonBody<T>(pub T);

impl<S: Send + Sync, T: DeserializeOwned> FromRequest<S> for JsonBody<T> {
    type Rejection = ApiError;

    async fn from_request(req: Request, state: &S) -> Result<Self, ApiError> {
        Json::<T>::from_request(req, state)
            .await
            .map(|Json(v)| JsonBody(v))
            .map_err(|e| ApiError::validation(e.body_text()))
    }
}

async fn blocking<T: Send + 'static>(f: impl FnOnce() -> Result<T, ApiError> + Send + 'static) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::internal(format!("worker failed: {e}")))?
}

async fn require_session(State(gw): State<AppState>, mut req: Request, next: Next) -> Result<Response, ApiError> {
    let token = req
        .headers()
        .get(header::AUTHORIZATION)
        .and_then(|v| v.to_str().ok())
        .and_then(|v| v.strip_prefix("Bearer "))
        .ok_or_else(ApiError::unauthenticated)?;
    let session = gw.authenticate(token.trim())?;
    req.extensions_mut().insert(session);
    Ok(next.run(req).await)
}

#[derive(Deserialize)]
struct Credentials {
    username: String,
    password: String,
}

async fn login(State(gw): State<AppState>, JsonBody(c): JsonBody<Credentials>) -> Result<Json<Session>, ApiError> {
    gw.login(&c.username, &c.password).map(Json)
}

async fn health() -> Json<serde_json::Value> {
    Json(serde_json::json!({ "status": "ok" }))
}

async fn logout(State(gw): State<AppState>, Extension(session): Extension<Session>) -> StatusCode {
    gw.logout(&session);
    StatusCode::NO_CONTENT
}

#[derive(Deserialize)]
struct NewUser {
    username: String,
    password: String,
    #[serde(default = "default_role")]
    role: Role,
}

fn default_role() -> Role {
    Role::User
}

async fn create_user(
    State(gw): State<AppState>,
    Extension(session): Extension<Session>,
    JsonBody(u): JsonBody<NewUser>,
) -> Result<impl IntoResponse, ApiError> {
    let record = gw.create_user(&session, &u.username, &u.password, u.role)?;
    Ok((StatusCode::CREATED, Json(record)))
}

async fn list_stations(State(gw): State<AppState>) -> Json<Vec<StationConfig>> {
    Json(gw.stations())
}

async fn add_station(State(gw): State<AppState>, JsonBody(s): JsonBody<StationConfig>) -> Result<impl IntoResponse, ApiError> {
    Ok((StatusCode::CREATED, Json(gw.add_station(s)?)))
}

async fn remove_station(State(gw): State<AppState>, JsonBody(k): JsonBody<StationKey>) -> Result<Json<StationConfig>, ApiError> {
    gw.remove_station(&k).map(Json)
}

#[derive(Deserialize, Default)]
struct VerifyRequest {
    #[serde(default)]
    stations: Option<Vec<StationKey>>,
}

async fn verify_stations(State(gw): State<AppState>, body: Bytes) -> Result<impl IntoResponse, ApiError> {
    let request: VerifyRequest = if body.iter().all(u8::is_ascii_whitespace) {
        VerifyRequest::default()
    } else {
        serde_json::from_slice(&body).map_err(|e| ApiError::validation(e.to_string()))?
    };
    blocking(move || gw.verify_stations(request.stations.as_deref())).await.map(Json)
}

async fn get_preferences(State(gw): State<AppState>) -> Json<Preferences> {
    Json(gw.preferences())
}

async fn put_preferences(State(gw): State<AppState>, JsonBody(p): JsonBody<Preferences>) -> Result<Json<Preferences>, ApiError> {
    blocking(move || gw.set_preferences(p)).await.map(Json)
}

async fn query(State(gw): State<AppState>, JsonBody(q): JsonBody<QueryRequest>) -> Result<impl IntoResponse, ApiError> {
    blocking(move || gw.query(&q)).await.map(Json)
}

async fn retrieve(State(gw): State<AppState>, JsonBody(r): JsonBody<RetrieveRequest>) -> Result<impl IntoResponse, ApiError> {
    let (job, created) = gw.submit_retrieve(&r)?;
    let status = if created { StatusCode::ACCEPTED } else { StatusCode::OK };
    Ok((status, Json(job)))
}

async fn job(State(gw): State<AppState>, Path(id): Path<String>) -> Result<impl IntoResponse, ApiError> {
    gw.job(&id).map(Json)
}

async fn study_previews(State(gw): State<AppState>, Path(study): Path<String>) -> Result<impl IntoResponse, ApiError> {
    blocking(move || gw.study_previews(&study)).await.map(Json)
}

async fn series_preview(
    State(gw): State<AppState>,
    Path((study, series)): Path<(String, String)>,
) -> Result<impl IntoResponse, ApiError> {
    blocking(move || gw.series_preview(&study, &series)).await.map(Json)
}

async fn preview_image(
    State(gw): State<AppState>,
    Path((study, series, name)): Path<(String, String, String)>,
) -> Result<impl IntoResponse, ApiError> {
    let kind = content_type(&name);
    let bytes = blocking(move || gw.preview_image(&study, &series, &name)).await?;
    Ok(([(header::CONTENT_TYPE, kind)], bytes))
}

#[derive(Serialize)]
struct DictionaryHit {
    tag: String,
    keyword: &'static str,
    vr: String,
    vm: &'static str,
}

async fn dictionary(Query(params): Query<HashMap<String, String>>) -> Result<Json<Vec<DictionaryHit>>, ApiError> {
    let q = params.get("q").map(String::as_str).unwrap_or("");
    let limit = match params.get("limit") {
        Some(l) => l.parse().map_err(|_| ApiError::validation("limit must be a positive integer"))?,
        None => 20,
    };
    Ok(Json(
        suggest_attributes(q, limit)
            .into_iter()
            .map(|e| DictionaryHit { tag: e.tag.to_string(), keyword: e.keyword, vr: e.vr.to_string(), vm: e.value_multiplicity })
            .collect(),
    ))
}

async fn fallback() -> ApiError {
    ApiError::not_found("no such route")
}

pub fn router(gateway: Arc<Gateway>) -> Router {
    let protected = Router::new()
        .route("/logout", post(logout))
        .route("/users", post(create_user))
        .route("/stations", get(list_stations).post(add_station).delete(remove_station))
        .route("/stations/verify", post(verify_stations))
        .route("/preferences", get(get_preferences).put(put_preferences))
        .route("/query", post(query))
        .route("/retrieve", post(retrieve))
        .route("/jobs/{id}", get(job))
        .route("/previews/{study}", get(study_previews))
        .route("/previews/{study}/{series}", get(series_preview))
        .route("/previews/{study}/{series}/{name}", get(preview_image))
        .route("/dictionary", get(dictionary))
        .route_layer(middleware::from_fn_with_state(gateway.clone(), require_session));
    Router::new()
        .route("/login", post(login))
        .route("/health", get(health))
        .merge(protected)
        .fallback(fallback)
        .with_state(gateway)
}

pub async fn serve(gateway: Arc<Gateway>, listener: tokio::net::TcpListener) -> std::io::Result<()> {
    axum::serve(listener, router(gateway))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
