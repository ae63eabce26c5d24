//! Browser bindings for boardnet.
//!
//! Each operation takes pasted text and returns JSON. The plain functions are
//! usable natively; the `#[wasm_bindgen]` wrappers expose them to the page.

use boardnet::cohesion::{line_multiplicity_distribution, slice_decomposition};
use boardnet::ingest::{parse_csv, parse_net, CsvInput, NetInput};
use boardnet::metrics::DensityVariant;
use boardnet::projection::project_events;
use boardnet::report::{analyze_one_mode, stats_from_degrees, stats_from_network, AnalysisOptions};
use boardnet::{AffiliationStats, NameNormalizer, OneModeNetwork};
use serde::Serialize;
use wasm_bindgen::prelude::*;

enum Parsed {
    Network(OneModeNetwork, Option<AffiliationStats>),
    Degrees(boardnet::ingest::DegreeSequence),
}

fn looks_like_net(text: &str) -> bool {
    text.lines()
        .map(str::trim_start)
        .find(|l| !l.is_empty() && !l.starts_with('%'))
        .is_some_and(|l| l.starts_with('*'))
}

fn parse(text: &str, case_fold: bool) -> Result<Parsed, String> {
    let normalizer = NameNormalizer::new(case_fold);
    let err = |e: boardnet::Error| e.to_string();
    Ok(if looks_like_net(text) {
        match parse_net(text, &normalizer).map_err(err)? {
            NetInput::TwoMode(boards, _) => Parsed::Network(project_events(&boards), Some(boards.stats())),
            NetInput::OneMode(net, _) => Parsed::Network(net, None),
        }
    } else {
        match parse_csv(text, &normalizer).map_err(err)? {
            CsvInput::Affiliations(boards, _) => {
                Parsed::Network(project_events(&boards), Some(boards.stats()))
            }
            CsvInput::Degrees(seq) => Parsed::Degrees(seq),
        }
    })
}

fn network(text: &str, case_fold: bool) -> Result<(OneModeNetwork, Option<AffiliationStats>), String> {
    match parse(text, case_fold)? {
        Parsed::Network(net, stats) => Ok((net, stats)),
        Parsed::Degrees(_) => Err("a degree sequence has no lines; use the degree statistics view".into()),
    }
}

/// Full analysis report for affiliation CSV or NET text.
pub fn analyze_text(text: &str, case_fold: bool) -> Result<String, String> {
    let (net, stats) = network(text, case_fold)?;
    analyze_one_mode(&net, stats, &AnalysisOptions::default())
        .map(|r| r.to_json())
        .map_err(|e| e.to_string())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SliceVertex<'a> {
    id: &'a str,
    degree: usize,
    component: usize,
}

#[derive(Serialize)]
struct SliceLine {
    source: usize,
    target: usize,
    value: u32,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SliceComponent<'a> {
    members: Vec<&'a str>,
    size: usize,
    edge_count: usize,
    density: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SliceView<'a> {
    threshold: u32,
    max_value: u32,
    vertices: Vec<SliceVertex<'a>>,
    lines: Vec<SliceLine>,
    components: Vec<SliceComponent<'a>>,
}

/// The m-slice at `m` with a component index per vertex, ready for drawing.
pub fn slice_text(text: &str, m: u32, case_fold: bool) -> Result<String, String> {
    let (net, _) = network(text, case_fold)?;
    let d = slice_decomposition(&net, m, DensityVariant::NoLoops).map_err(|e| e.to_string())?;
    let mut component_of = vec![0; net.vertex_count()];
    for (c, summary) in d.components.iter().enumerate() {
        for &v in &summary.members {
            component_of[v] = c;
        }
    }
    let ids = |members: &[usize]| members.iter().map(|&v| net.vertices()[v].id.as_str()).collect();
    let view = SliceView {
        threshold: m,
        max_value: line_multiplicity_distribution(&net).max_value,
        vertices: net
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| SliceVertex {
                id: &v.id,
                degree: d.sliced.degree(i),
                component: component_of[i],
            })
            .collect(),
        lines: d
            .sliced
            .edges()
            .iter()
            .map(|e| SliceLine {
                source: e.source,
                target: e.target,
                value: e.value,
            })
            .collect(),
        components: d
            .components
            .iter()
            .map(|c| SliceComponent {
                members: ids(&c.members),
                size: c.size,
                edge_count: c.edge_count,
                density: c.density,
            })
            .collect(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

/// Degree-level statistics; accepts a `journal,degree` table as well as
/// affiliation data.
pub fn degree_stats_text(text: &str) -> Result<String, String> {
    let opts = AnalysisOptions::default();
    match parse(text, false)? {
        Parsed::Degrees(seq) => stats_from_degrees(&seq, &opts)
            .map(|r| r.to_json())
            .map_err(|e| e.to_string()),
        Parsed::Network(net, stats) => Ok(stats_from_network(&net, stats, &opts).to_json()),
    }
}

#[wasm_bindgen]
pub fn analyze(text: &str, case_fold: bool) -> Result<String, JsError> {
    analyze_text(text, case_fold).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn slice(text: &str, m: u32, case_fold: bool) -> Result<String, JsError> {
    slice_text(text, m, case_fold).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn degree_stats(text: &str) -> Result<String, JsError> {
    degree_stats_text(text).map_err(|e| JsError::new(&e))
}
