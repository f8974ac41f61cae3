//! Request handlers shared by the HTTP service and the CLI's JSON output.
//!
//! Every handler is a pure function of its parameters, so the service and the
//! CLI produce the same bytes for the same query.

use monofun::oracle::{self, CountRow};
use monofun::walker::{random_walk_capped, WalkDirection, WALK_MAX_P};
use monofun::{
    immediate_children, immediate_parents, parse_function, render_function, true_set_size,
    Direction, Error, Function, NeighborResult, Sign, SignStructure, Style,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Largest dimension accepted for neighbour queries.
pub const NEIGHBOR_MAX_P: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApiError {
    #[serde(skip)]
    pub status: u16,
    pub code: String,
    pub message: String,
}

impl ApiError {
    pub fn bad_request(code: &str, message: impl Into<String>) -> Self {
        ApiError {
            status: 400,
            code: code.into(),
            message: message.into(),
        }
    }

    /// CLI exit code: 3 for capability limits, 2 for anything else.
    pub fn exit_code(&self) -> i32 {
        if self.status == 422 {
            3
        } else {
            2
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self })
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        ApiError {
            status: if e.is_capability() { 422 } else { 400 },
            code: e.code().into(),
            message: e.to_string(),
        }
    }
}

impl std::fmt::Display for ApiError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

pub type ApiResult<T = Value> = Result<T, ApiError>;

/// A function as given by a caller.
#[derive(Clone, Debug, Default)]
pub struct FunctionQuery {
    pub text: String,
    /// Inferred from the largest variable index when absent.
    pub p: Option<u32>,
    /// Sign pattern such as `++-`, merged with signs written in the text.
    pub signs: Option<String>,
}

impl FunctionQuery {
    pub fn new(text: impl Into<String>, p: Option<u32>) -> Self {
        FunctionQuery {
            text: text.into(),
            p,
            signs: None,
        }
    }

    pub fn resolve(&self) -> ApiResult<(Function, SignStructure)> {
        let p = match self.p {
            Some(p) => p,
            None => infer_dimension(&self.text).ok_or_else(|| {
                ApiError::bad_request("missing_parameter", "no variables found; pass p explicitly")
            })?,
        };
        let (f, parsed) = parse_function::<u64>(&self.text, p)?;
        let signs = match &self.signs {
            None => parsed,
            Some(pattern) => merge_signs(&parsed, &SignStructure::parse(pattern)?, p)?,
        };
        Ok((f, signs))
    }
}

/// Largest decimal number in the text.
pub fn infer_dimension(text: &str) -> Option<u32> {
    text.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<u32>().ok())
        .max()
        .filter(|&p| p > 0)
}

fn merge_signs(parsed: &SignStructure, given: &SignStructure, p: u32) -> ApiResult<SignStructure> {
    given.check_dimension(p)?;
    for var in 1..=p {
        if parsed.is_negative(var) && !given.is_negative(var) {
            return Err(Error::MixedSign { var }.into());
        }
    }
    Ok(given.clone())
}

pub fn rendering(f: &Function, signs: &SignStructure) -> ApiResult {
    Ok(json!({
        "sets": render_function(f, signs, Style::Sets)?,
        "expr": render_function(f, signs, Style::Expr)?,
    }))
}

fn sign_text(signs: &SignStructure) -> String {
    signs
        .signs()
        .iter()
        .map(|s| if *s == Sign::Negative { '-' } else { '+' })
        .collect()
}

/// `GET /v1/function`: validation and True-set size.
pub fn function_info(q: &FunctionQuery) -> ApiResult {
    let (f, signs) = q.resolve()?;
    Ok(json!({
        "p": f.p(),
        "valid": true,
        "function": f,
        "signs": sign_text(&signs),
        "rendering": rendering(&f, &signs)?,
        "trueSetSize": true_set_size(&f)?.to_string(),
    }))
}

pub fn neighbor_entry(n: &NeighborResult, signs: &SignStructure) -> ApiResult {
    Ok(json!({
        "function": n.neighbor,
        "rendering": rendering(&n.neighbor, signs)?,
        "rule": n.rule,
        "direction": n.direction,
        "trueSetDelta": n.rule_delta(),
    }))
}

/// Neighbours of the queried function, in canonical order.
pub fn compute_neighbors(q: &FunctionQuery, direction: Direction) -> ApiResult<(Function, SignStructure, Vec<NeighborResult>)> {
    let (f, signs) = q.resolve()?;
    if f.p() > NEIGHBOR_MAX_P {
        return Err(Error::Capability {
            what: format!("neighbour computation at p={}", f.p()),
            limit: u64::from(NEIGHBOR_MAX_P),
        }
        .into());
    }
    let list = match direction {
        Direction::Parent => immediate_parents(&f),
        Direction::Child => immediate_children(&f),
    };
    Ok((f, signs, list))
}

/// `GET /v1/parents` and `GET /v1/children`.
pub fn neighbors(q: &FunctionQuery, direction: Direction) -> ApiResult {
    let (f, signs, list) = compute_neighbors(q, direction)?;
    let entries = list
        .iter()
        .map(|n| neighbor_entry(n, &signs))
        .collect::<ApiResult<Vec<_>>>()?;
    Ok(json!({
        "p": f.p(),
        "function": f,
        "signs": sign_text(&signs),
        "rendering": rendering(&f, &signs)?,
        "direction": direction,
        "neighbors": entries,
    }))
}

/// `GET /v1/walk`: one seeded trace. Timing is left out so that responses
/// are reproducible.
pub fn walk(p: u32, direction: WalkDirection, seed: u64) -> ApiResult {
    let trace = random_walk_capped::<u64>(p, direction, seed, WALK_MAX_P)?;
    let signs = SignStructure::all_positive(p);
    let steps = trace
        .steps
        .iter()
        .map(|s| {
            Ok(json!({
                "from": s.from,
                "to": s.chosen.neighbor,
                "rule": s.chosen.rule,
                "trueSetDelta": s.chosen.rule_delta(),
                "counts": s.counts,
            }))
        })
        .collect::<ApiResult<Vec<_>>>()?;
    let rendering = trace
        .path()
        .into_iter()
        .map(|f| render_function(f, &signs, Style::Sets))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(json!({
        "p": p,
        "direction": direction,
        "seed": seed,
        "length": trace.len(),
        "counts": trace.counts(),
        "steps": steps,
        "rendering": rendering,
    }))
}

pub fn count_rows(max_p: u32, long: bool) -> ApiResult<Vec<CountRow>> {
    Ok(oracle::default_count_table(max_p, long)?)
}

pub fn counts_csv(rows: &[CountRow]) -> String {
    let mut out = String::from("p,M,N,enumerated\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.p,
            r.m,
            r.n,
            r.enumerated.map(|n| n.to_string()).unwrap_or_default()
        ));
    }
    out
}

/// `GET /v1/counts`. Enumeration runs up to p=5 (6 with `long`).
pub fn counts(max_p: u32, long: bool) -> ApiResult {
    let rows = count_rows(max_p, long)?;
    Ok(json!({
        "rows": rows,
        "rendering": counts_csv(&rows),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infers_dimension() {
        assert_eq!(infer_dimension("{1},{2,3}"), Some(3));
        assert_eq!(infer_dimension("x1 | x12"), Some(12));
        assert_eq!(infer_dimension("{}"), None);
    }

    #[test]
    fn sign_override() {
        let mut q = FunctionQuery::new("{1},{2,3}", Some(3));
        q.signs = Some("++-".into());
        let (_, s) = q.resolve().unwrap();
        assert_eq!(s.to_string(), "++-");

        let mut q = FunctionQuery::new("x1 | x2 & !x3", Some(3));
        q.signs = Some("+++".into());
        assert_eq!(q.resolve().unwrap_err().code, "mixed_sign");
        q.signs = Some("++".into());
        assert_eq!(q.resolve().unwrap_err().code, "dimension_mismatch");
    }

    #[test]
    fn error_status() {
        let e: ApiError = Error::NotCover { missing: vec![4] }.into();
        assert_eq!((e.status, e.exit_code()), (400, 2));
        let e = walk(12, WalkDirection::Up, 0).unwrap_err();
        assert_eq!((e.status, e.exit_code(), e.code.as_str()), (422, 3, "capability"));
    }
}
