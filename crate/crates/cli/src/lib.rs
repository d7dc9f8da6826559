//! HTTP front end for the play-session protocol.
//!
//! The routes are thin wrappers over [`SessionStore`]; every body, errors
//! included, is JSON tagged with the protocol version.

use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use cookquest::session::{
    CommandResult, CreateGame, Deleted, ErrorBody, GameCreated, GameView, SessionError,
    SessionStore, SubmitCommand, PROTOCOL_VERSION,
};

type Store = Arc<SessionStore>;

struct ApiError(StatusCode, ErrorBody);

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let status = match e {
            SessionError::NotFound(_) => StatusCode::NOT_FOUND,
            SessionError::Protocol(_) => StatusCode::BAD_REQUEST,
            SessionError::Generation(_) => StatusCode::UNPROCESSABLE_ENTITY,
        };
        ApiError(status, e.body())
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError(
            StatusCode::BAD_REQUEST,
            ErrorBody {
                protocol: PROTOCOL_VERSION,
                error: e.body_text(),
            },
        )
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(self.1)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

async fn create(
    State(store): State<Store>,
    body: Result<Json<CreateGame>, JsonRejection>,
) -> Result<(StatusCode, Json<GameCreated>), ApiError> {
    let Json(req) = body?;
    Ok((StatusCode::CREATED, Json(store.create(&req)?)))
}

async fn command(
    State(store): State<Store>,
    Path(id): Path<String>,
    body: Result<Json<SubmitCommand>, JsonRejection>,
) -> ApiResult<CommandResult> {
    let Json(req) = body?;
    Ok(Json(store.command(&id, &req)?))
}

async fn view(State(store): State<Store>, Path(id): Path<String>) -> ApiResult<GameView> {
    Ok(Json(store.view(&id)?))
}

async fn delete(State(store): State<Store>, Path(id): Path<String>) -> ApiResult<Deleted> {
    Ok(Json(store.delete(&id)?))
}

async fn fallback() -> ApiError {
    ApiError(
        StatusCode::NOT_FOUND,
        ErrorBody {
            protocol: PROTOCOL_VERSION,
            error: "no such endpoint".into(),
        },
    )
}

pub fn router(store: Store) -> Router {
    Router::new()
        .route("/games", post(create))
        .route("/games/{id}/command", post(command))
        .route("/games/{id}", get(view).delete(delete))
        .fallback(fallback)
        .with_state(store)
}
