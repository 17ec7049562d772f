//! wasm-bindgen entry points for `www/index.html`. Every function returns a
//! JSON string; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use orbitframe::cli::json::encode_matrix;
use orbitframe::cli::{demo_comb, demo_dihedral, demo_fiberization, D3Model, Document, FiberInput, Settings};
use orbitframe::linalg::C64;
use orbitframe::{bracket, Result};

fn render(doc: Result<Document>) -> String {
    match doc {
        Ok(doc) => doc.to_json(),
        Err(e) => error(&e.to_string()),
    }
}

fn error(message: &str) -> String {
    json!({ "error": message }).to_string()
}

fn settings(seed: u64) -> Settings {
    Settings {
        seed,
        ..Settings::default()
    }
}

/// Riesz/frame analysis of `a delta_{g1} + b delta_{g2}` on `Z_n`.
#[wasm_bindgen]
pub fn comb_explorer(n: usize, g1: usize, g2: usize, a_re: f64, a_im: f64, b_re: f64, b_im: f64) -> String {
    render(demo_comb(
        n,
        g1,
        g2,
        C64::new(a_re, a_im),
        C64::new(b_re, b_im),
        &Settings::default(),
    ))
}

/// Self-brackets of the fixed, boundary and interior vectors of the D3
/// model, plus the certified demo report.
#[wasm_bindgen]
pub fn d3_brackets() -> String {
    let m = D3Model::new();
    let mut brackets = Vec::new();
    for (name, v) in [
        ("fixed", m.fixed()),
        ("boundary", m.boundary()),
        ("interior", m.interior()),
    ] {
        match bracket(&m.rep, &v, &v) {
            Ok(b) => brackets.push(json!({ "name": name, "matrix": encode_matrix(b.matrix()) })),
            Err(e) => return error(&e.to_string()),
        }
    }
    let labels: Vec<String> = (0..m.group.order()).map(|g| m.group.label(g)).collect();
    let report = match demo_dihedral(&Settings::default()) {
        Ok(doc) => serde_json::to_value(&doc).unwrap_or(Value::Null),
        Err(e) => return error(&e.to_string()),
    };
    json!({ "labels": labels, "brackets": brackets, "report": report }).to_string()
}

/// `values` is `random` or comma-separated `re` / `re:im` entries.
#[wasm_bindgen]
pub fn fiberization(n: usize, values: &str, seed: u64) -> String {
    match FiberInput::parse(values) {
        Ok(f) => render(demo_fiberization(n, &f, &settings(seed))),
        Err(e) => error(&e),
    }
}
