//! Browser bindings: build a distant graph from a ring spec, count its
//! cliques, and tabulate Gaussian binomials. Every export takes and
//! returns JSON strings so the page needs no generated types.

use ringline::formulas::{matrix_point_count, qbinom, spec_clique_count};
use ringline::graph::{count_cliques, CensusOptions, Limits};
use ringline::rings::{spec_graph, RingSpec};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Graphs larger than this are not sent to the page for drawing.
pub const DRAW_LIMIT: usize = 1500;

/// Node budget for the in-page census; keeps the tab responsive.
pub const WEB_CENSUS_BUDGET: u64 = 20_000_000;

pub fn graph_json(spec_json: &str) -> Result<String, String> {
    let spec = RingSpec::from_json(spec_json).map_err(|e| e.to_string())?;
    let g = spec_graph(&spec, &Limits { max_vertices: DRAW_LIMIT }).map_err(|e| e.to_string())?;
    let edges: Vec<[usize; 2]> = if g.is_t() {
        vec![]
    } else {
        g.edges().into_iter().map(|(u, v)| [u, v]).collect()
    };
    Ok(json!({
        "is_t": g.is_t(),
        "vertices": g.n(),
        "labels": g.labels(),
        "edges": edges,
        "regular_degree": if g.is_t() { None } else { g.regular_degree() },
    })
    .to_string())
}

pub fn census_json(spec_json: &str, kmax: usize) -> Result<String, String> {
    let spec = RingSpec::from_json(spec_json).map_err(|e| e.to_string())?;
    let g = spec_graph(&spec, &Limits::default()).map_err(|e| e.to_string())?;
    let opts = CensusOptions::with_budget(WEB_CENSUS_BUDGET).workers(1);
    let census = count_cliques(&g, kmax, &opts).map_err(|e| e.to_string())?;
    let rows: Vec<_> = census
        .counts()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let formula = spec_clique_count(&spec, k).ok().map(|f| f.to_string());
            json!({ "k": k, "census": c.to_string(), "formula": formula })
        })
        .collect();
    Ok(json!({ "vertices": g.n(), "rows": rows }).to_string())
}

/// `[2m, m]_q` for `m = 0..=max_m`, as text and evaluated at `q`.
pub fn qbinom_json(max_m: usize, q: u64) -> String {
    let rows: Vec<_> = (0..=max_m)
        .map(|m| {
            let p = matrix_point_count(m);
            json!({ "m": m, "poly": p.to_string(), "value": p.eval_u64(q).to_string() })
        })
        .collect();
    json!({ "q": q, "rows": rows, "check": qbinom(2 * max_m, max_m) == matrix_point_count(max_m) }).to_string()
}

#[wasm_bindgen]
pub fn distant_graph(spec_json: &str) -> Result<String, JsError> {
    graph_json(spec_json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn clique_census(spec_json: &str, kmax: usize) -> Result<String, JsError> {
    census_json(spec_json, kmax).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn qbinom_table(max_m: usize, q: u32) -> String {
    qbinom_json(max_m, q as u64)
}
