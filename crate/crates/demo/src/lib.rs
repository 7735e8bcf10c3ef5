//! Browser bindings for three interactive views: a code and its transfer,
//! an RSK pair with the promotion orbit of its recording tableau down to
//! a single cell, and a Plancherel shape histogram. Each export returns a
//! JSON string.

use std::collections::BTreeMap;

use serde::Serialize;
use wasm_bindgen::prelude::*;

use weylcode::graph::tableau_to_path;
use weylcode::rng::substream;
use weylcode::rsk::{self, StandardTableau};
use weylcode::triangular;
use weylcode::{RealPrefix, Shape};

const MAX_VALUES: usize = 64;
const MAX_PLANCHEREL_N: usize = 12;
const MAX_SAMPLES: usize = 200_000;

#[derive(Serialize)]
struct CodeView {
    x: Vec<f64>,
    t: Vec<usize>,
    ranks: Vec<usize>,
    special: Vec<bool>,
    d: Vec<usize>,
    transfer: Vec<usize>,
    estimate: f64,
}

#[derive(Serialize)]
struct RskView {
    p: rsk::RealTableau,
    q: StandardTableau,
    orbit: Vec<StandardTableau>,
    paths: Vec<Vec<Shape>>,
}

#[derive(Serialize)]
struct HistogramBar {
    shape: Shape,
    count: u64,
    frequency: f64,
    probability: f64,
}

fn parse_reals(text: &str) -> Result<RealPrefix, String> {
    let values = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| format!("not a number: {s}")))
        .collect::<Result<Vec<f64>, String>>()?;
    if values.len() > MAX_VALUES {
        return Err(format!("at most {MAX_VALUES} values"));
    }
    RealPrefix::new(values).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn code_view_json(text: &str) -> Result<String, String> {
    let x = parse_reals(text)?;
    let code = triangular::encode_prefix(&x);
    let profile = triangular::special_positions(&code);
    let transfer = if code.len() >= 2 {
        triangular::transfer(&code)
            .map_err(|e| e.to_string())?
            .into_inner()
    } else {
        Vec::new()
    };
    let estimate = triangular::estimate_first_coord(&code).map_err(|e| e.to_string())?;
    to_json(&CodeView {
        ranks: x.ranks(),
        x: x.into_values(),
        t: code.into_inner(),
        special: profile.mask,
        d: profile.d,
        transfer,
        estimate,
    })
}

pub fn rsk_view_json(text: &str) -> Result<String, String> {
    let x = parse_reals(text)?;
    let (p, q) = rsk::rsk_word(&x);
    let mut orbit = vec![q.clone()];
    while orbit.last().map_or(0, StandardTableau::size) > 1 {
        let next = rsk::promotion(orbit.last().unwrap()).map_err(|e| e.to_string())?;
        orbit.push(next);
    }
    let paths = orbit
        .iter()
        .map(|t| tableau_to_path(t).map(|p| p.into_vertices()))
        .collect::<weylcode::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    to_json(&RskView { p, q, orbit, paths })
}

pub fn plancherel_json(n: usize, samples: usize, seed: u64) -> Result<String, String> {
    if n == 0 || n > MAX_PLANCHEREL_N {
        return Err(format!("n must be between 1 and {MAX_PLANCHEREL_N}"));
    }
    if samples == 0 || samples > MAX_SAMPLES {
        return Err(format!("samples must be between 1 and {MAX_SAMPLES}"));
    }
    let mut rng = substream(seed, 0);
    let mut counts: BTreeMap<Shape, u64> = weylcode::shape::partitions(n)
        .into_iter()
        .map(|s| (s, 0))
        .collect();
    for _ in 0..samples {
        *counts
            .get_mut(&rsk::plancherel_sample_with(n, &mut rng))
            .expect("every sampled shape is a partition of n") += 1;
    }
    let mut bars: Vec<HistogramBar> = counts
        .into_iter()
        .map(|(shape, count)| HistogramBar {
            probability: rsk::plancherel_probability(&shape),
            frequency: count as f64 / samples as f64,
            shape,
            count,
        })
        .collect();
    bars.sort_by(|a, b| b.shape.cmp(&a.shape));
    to_json(&bars)
}

#[wasm_bindgen]
pub fn code_view(text: &str) -> Result<String, JsValue> {
    code_view_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn rsk_view(text: &str) -> Result<String, JsValue> {
    rsk_view_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn plancherel_histogram(n: usize, samples: usize, seed: u64) -> Result<String, JsValue> {
    plancherel_json(n, samples, seed).map_err(|e| JsValue::from_str(&e))
}
