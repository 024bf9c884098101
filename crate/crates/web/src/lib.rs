//! Browser bindings: each call takes text and returns a JSON document, so
//! the page stays plain JavaScript.

use wasm_bindgen::prelude::*;

use gengraph::graph::{export, ExportFormat, GenGraph};
use gengraph::tower::{self, Family, TowerParams};
use gengraph::{build_group, Caps, Error, GroupSpec};

/// Groups drawn in the browser stay small.
const WEB_ORDER: usize = 2_000;

fn caps() -> Caps {
    Caps {
        order: WEB_ORDER,
        ..Caps::default()
    }
}

fn group(spec: &str) -> Result<std::sync::Arc<gengraph::Group>, Error> {
    let spec: GroupSpec = spec.parse()?;
    build_group(&spec, &caps())
}

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

/// Summary of `Delta(G)`: order, `|V|`, components, diameter, degrees, `t`.
#[wasm_bindgen]
pub fn analyze(spec: &str) -> Result<String, JsError> {
    let g = group(spec).map_err(js)?;
    let report = gengraph::suites::analyze(&g, &caps()).map_err(js)?;
    Ok(serde_json::to_string(&report).expect("serializable"))
}

/// `Delta(G)` as `{"group","vertices","edges","isolated"}`.
#[wasm_bindgen]
pub fn delta_graph(spec: &str) -> Result<String, JsError> {
    let g = group(spec).map_err(js)?;
    let gen = GenGraph::new(&g).map_err(js)?;
    Ok(export(&gen, ExportFormat::Json))
}

/// Density of `V` along the `KleinCp3` tower over a comma-separated prime
/// list; large levels are counted through the characterization.
#[wasm_bindgen]
pub fn klein_density(primes: &str) -> Result<String, JsError> {
    let primes = gengraph::suites::parse_list(primes).map_err(js)?;
    let caps = Caps {
        order: 200,
        ..Caps::default()
    };
    let t = tower::build_tower(Family::KleinCp3, TowerParams::Primes(primes), &caps).map_err(js)?;
    let reports = (0..t.levels.len())
        .map(|k| tower::measure_v(&t, k, 0, &caps))
        .collect::<Result<Vec<_>, _>>()
        .map_err(js)?;
    Ok(serde_json::to_string(&reports).expect("serializable"))
}
