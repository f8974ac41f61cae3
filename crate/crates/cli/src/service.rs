//! Read-only JSON service under `/v1`.

use std::collections::HashMap;
use std::net::SocketAddr;

use axum::extract::Query;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Json, Router};
use monofun::walker::WalkDirection;
use monofun::Direction;

use crate::api::{self, ApiError, ApiResult, FunctionQuery};

type Params = Query<HashMap<String, String>>;

pub fn router() -> Router {
    Router::new()
        .route("/v1/function", get(|Query(q): Params| async move { respond(function(&q)) }))
        .route(
            "/v1/parents",
            get(|Query(q): Params| async move { respond(neighbors(&q, Direction::Parent)) }),
        )
        .route(
            "/v1/children",
            get(|Query(q): Params| async move { respond(neighbors(&q, Direction::Child)) }),
        )
        .route("/v1/walk", get(|Query(q): Params| async move { respond(walk(&q)) }))
        .route("/v1/counts", get(|Query(q): Params| async move { respond(counts(&q)) }))
}

fn respond(result: ApiResult) -> Response {
    match result {
        Ok(body) => Json(body).into_response(),
        Err(e) => {
            let status =
                StatusCode::from_u16(e.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
            (status, Json(e.to_json())).into_response()
        }
    }
}

fn required<'a>(q: &'a HashMap<String, String>, key: &str) -> ApiResult<&'a str> {
    q.get(key)
        .map(String::as_str)
        .ok_or_else(|| ApiError::bad_request("missing_parameter", format!("missing query parameter '{key}'")))
}

fn number<T: std::str::FromStr>(q: &HashMap<String, String>, key: &str) -> ApiResult<Option<T>> {
    q.get(key)
        .map(|v| {
            v.parse()
                .map_err(|_| ApiError::bad_request("invalid_parameter", format!("'{key}' must be a non-negative integer, got {v:?}")))
        })
        .transpose()
}

fn function_query(q: &HashMap<String, String>) -> ApiResult<FunctionQuery> {
    Ok(FunctionQuery {
        text: required(q, "f")?.to_string(),
        p: number(q, "p")?,
        signs: q.get("signs").cloned(),
    })
}

fn function(q: &HashMap<String, String>) -> ApiResult {
    api::function_info(&function_query(q)?)
}

fn neighbors(q: &HashMap<String, String>, direction: Direction) -> ApiResult {
    api::neighbors(&function_query(q)?, direction)
}

fn walk(q: &HashMap<String, String>) -> ApiResult {
    let p = number(q, "p")?.ok_or_else(|| ApiError::bad_request("missing_parameter", "missing query parameter 'p'"))?;
    let dir: WalkDirection = q.get("dir").map_or(Ok(WalkDirection::Up), |d| d.parse())?;
    let seed = number(q, "seed")?.unwrap_or(0);
    api::walk(p, dir, seed)
}

fn counts(q: &HashMap<String, String>) -> ApiResult {
    let max_p = number(q, "maxp")?.unwrap_or(5);
    api::counts(max_p, false)
}

/// Binds `addr` and serves until the process is stopped.
pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router()).await
}
