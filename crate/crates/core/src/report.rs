//! Analysis pipeline and report rendering.
//!
//! [`analyze_two_mode`] runs projection, metrics and cohesion and gathers the
//! results in an [`AnalysisReport`], which serializes to the versioned JSON
//! schema and renders as three plain-text tables (degree distribution,
//! centrality, line multiplicity).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cohesion::{line_multiplicity_distribution, slice_decomposition, LineMultiplicityDistribution};
use crate::error::Result;
use crate::ingest::DegreeSequence;
use crate::metrics::{
    compute_metrics, degree_distribution, normalized_degree, rank_competition, ClosenessVariant,
    DegreeDistribution, DensityVariant, Direction, NetworkAggregates, VertexMetrics,
};
use crate::model::{AffiliationStats, OneModeNetwork, TwoModeNetwork};
use crate::projection::project_events;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub closeness: ClosenessVariant,
    pub density: DensityVariant,
    /// Density convention for slice components.
    pub component_density: DensityVariant,
    pub slices: Vec<u32>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            closeness: ClosenessVariant::ReachableOnly,
            density: DensityVariant::LoopsAllowed,
            component_density: DensityVariant::NoLoops,
            slices: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportOptions {
    pub closeness_variant: ClosenessVariant,
    pub density_variant: DensityVariant,
    pub component_density_variant: DensityVariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub source: String,
    pub target: String,
    pub value: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentReport {
    pub members: Vec<String>,
    pub size: usize,
    pub edge_count: usize,
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SliceReport {
    pub threshold: u32,
    pub edge_count: usize,
    pub edges: Vec<Link>,
    pub components: Vec<ComponentReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema: String,
    pub options: ReportOptions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affiliation: Option<AffiliationStats>,
    pub aggregates: NetworkAggregates,
    /// Density under the selected convention.
    pub density: f64,
    pub vertices: Vec<VertexMetrics>,
    pub degree_distribution: DegreeDistribution,
    pub line_multiplicity: LineMultiplicityDistribution,
    pub strongest_link: Option<Link>,
    pub slices: Vec<SliceReport>,
    pub notes: Vec<String>,
}

/// Degree-level figures only (`--stats-only`, or a bare degree sequence).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StatsReport {
    pub schema: String,
    pub options: ReportOptions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affiliation: Option<AffiliationStats>,
    pub aggregates: NetworkAggregates,
    pub density: f64,
    pub degree_distribution: DegreeDistribution,
    pub notes: Vec<String>,
}

fn report_options(opts: &AnalysisOptions) -> ReportOptions {
    ReportOptions {
        closeness_variant: opts.closeness,
        density_variant: opts.density,
        component_density_variant: opts.component_density,
    }
}

fn notes(aggregates: &NetworkAggregates) -> Vec<String> {
    let mut notes = vec![format!(
        "density: loops-allowed convention 2m/n^2 = {:.4}; no-loops convention 2m/(n(n-1)) = {:.4}; published figures may follow either",
        aggregates.density_loops_allowed, aggregates.density_no_loops
    )];
    if aggregates.betweenness_centralization.is_some() {
        notes.push(
            "betweennessCentralization: sum of (max - score) over normalized betweenness, divided by n-1"
                .into(),
        );
    }
    if aggregates.closeness_centralization.is_some() {
        notes.push(format!(
            "closenessCentralization: computed on the largest connected subnetwork ({} vertices)",
            aggregates.largest_component_size.unwrap_or(0)
        ));
    }
    notes
}

fn link(net: &OneModeNetwork, source: usize, target: usize, value: u32) -> Link {
    Link {
        source: net.vertices()[source].id.clone(),
        target: net.vertices()[target].id.clone(),
        value,
    }
}

/// Projects journals and analyses the resulting network.
pub fn analyze_two_mode(net: &TwoModeNetwork, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    analyze_one_mode(&project_events(net), Some(net.stats()), opts)
}

pub fn analyze_one_mode(
    net: &OneModeNetwork,
    affiliation: Option<AffiliationStats>,
    opts: &AnalysisOptions,
) -> Result<AnalysisReport> {
    let metrics = compute_metrics(net, opts.closeness);
    let slices = opts
        .slices
        .iter()
        .map(|&m| {
            let d = slice_decomposition(net, m, opts.component_density)?;
            Ok(SliceReport {
                threshold: m,
                edge_count: d.sliced.edge_count(),
                edges: d
                    .sliced
                    .edges()
                    .iter()
                    .map(|e| link(net, e.source, e.target, e.value))
                    .collect(),
                components: d
                    .components
                    .iter()
                    .map(|c| ComponentReport {
                        members: c.members.iter().map(|&v| net.vertices()[v].id.clone()).collect(),
                        size: c.size,
                        edge_count: c.edge_count,
                        density: c.density,
                    })
                    .collect(),
            })
        })
        .collect::<Result<_>>()?;

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION.into(),
        options: report_options(opts),
        affiliation,
        density: metrics.aggregates.density(opts.density),
        notes: notes(&metrics.aggregates),
        aggregates: metrics.aggregates,
        vertices: metrics.vertices,
        degree_distribution: degree_distribution(net),
        line_multiplicity: line_multiplicity_distribution(net),
        strongest_link: net
            .strongest_edge()
            .map(|e| link(net, e.source, e.target, e.value)),
        slices,
    })
}

pub fn stats_from_network(
    net: &OneModeNetwork,
    affiliation: Option<AffiliationStats>,
    opts: &AnalysisOptions,
) -> StatsReport {
    let aggregates = compute_metrics(net, opts.closeness).aggregates;
    StatsReport {
        schema: SCHEMA_VERSION.into(),
        options: report_options(opts),
        affiliation,
        density: aggregates.density(opts.density),
        notes: notes(&aggregates),
        aggregates,
        degree_distribution: degree_distribution(net),
    }
}

pub fn stats_from_degrees(seq: &DegreeSequence, opts: &AnalysisOptions) -> Result<StatsReport> {
    let aggregates = NetworkAggregates::from_degrees(&seq.degrees)?;
    Ok(StatsReport {
        schema: SCHEMA_VERSION.into(),
        options: report_options(opts),
        affiliation: None,
        density: aggregates.density(opts.density),
        notes: notes(&aggregates),
        aggregates,
        degree_distribution: DegreeDistribution::from_degrees(&seq.degrees),
    })
}

/// One row of the degree-only ranking table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeRankRow {
    pub vertex: String,
    pub degree: usize,
    pub normalized_degree: f64,
    pub rank: usize,
}

/// Degree, normalized degree and degree rank for a bare degree sequence.
pub fn degree_rows(seq: &DegreeSequence) -> Vec<DegreeRankRow> {
    let n = seq.degrees.len();
    let values: Vec<f64> = seq.degrees.iter().map(|&d| d as f64).collect();
    let ranks = rank_competition(&values, Direction::Descending);
    seq.names
        .iter()
        .zip(&seq.degrees)
        .zip(ranks)
        .map(|((name, &degree), rank)| DegreeRankRow {
            vertex: name.clone(),
            degree,
            normalized_degree: normalized_degree(degree, n),
            rank,
        })
        .collect()
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }

    /// Re-derives the degree-level aggregates from the vertex list and
    /// compares them with the aggregates block.
    pub fn check_consistency(&self) -> std::result::Result<(), String> {
        let degrees: Vec<usize> = self.vertices.iter().map(|v| v.degree).collect();
        let derived = NetworkAggregates::from_degrees(&degrees).map_err(|e| e.to_string())?;
        let a = &self.aggregates;
        let checks = [
            ("n", derived.n == a.n),
            ("m", derived.m == a.m),
            ("isolateCount", derived.isolate_count == a.isolate_count),
            ("meanDegree", derived.mean_degree == a.mean_degree),
            ("medianDegree", derived.median_degree == a.median_degree),
            ("sdDegreePopulation", derived.sd_degree_population == a.sd_degree_population),
            ("densityNoLoops", derived.density_no_loops == a.density_no_loops),
            ("densityLoopsAllowed", derived.density_loops_allowed == a.density_loops_allowed),
            ("degreeCentralization", derived.degree_centralization == a.degree_centralization),
            ("degreeDistribution", self.degree_distribution.total() == a.n),
            ("lineMultiplicity", self.line_multiplicity.total() == a.m),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            Some((field, _)) => Err(format!("{field} does not match the vertex list")),
            None => Ok(()),
        }
    }
}

impl StatsReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    DegreeDistribution,
    Centrality,
    LineMultiplicity,
}

#[derive(Clone, Copy)]
enum Align {
    Left,
    Right,
}

/// Columns padded to their widest cell, separated by two spaces.
fn layout(header: &[&str], align: &[Align], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut emit = |cells: &mut dyn Iterator<Item = &str>| {
        let mut line = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let pad = widths[i] - cell.chars().count();
            match align[i] {
                Align::Left => {
                    line.push_str(cell);
                    line.extend(std::iter::repeat_n(' ', pad));
                }
                Align::Right => {
                    line.extend(std::iter::repeat_n(' ', pad));
                    line.push_str(cell);
                }
            }
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    };
    emit(&mut header.iter().copied());
    for row in rows {
        emit(&mut row.iter().map(String::as_str));
    }
    out
}

fn real(x: f64) -> String {
    format!("{x:.3}")
}

pub fn render_degree_distribution(dist: &DegreeDistribution) -> String {
    let rows: Vec<Vec<String>> = dist
        .rows
        .iter()
        .map(|r| {
            vec![
                r.degree.to_string(),
                r.frequency.to_string(),
                real(r.relative_frequency),
                real(r.cumulative_relative_frequency),
            ]
        })
        .collect();
    layout(
        &["Degree", "Freq", "Freq%", "CumFreq"],
        &[Align::Right; 4],
        &rows,
    )
}

pub fn render_centrality(vertices: &[VertexMetrics]) -> String {
    let rows: Vec<Vec<String>> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| {
            vec![
                (i + 1).to_string(),
                v.label.clone().unwrap_or_else(|| v.vertex.clone()),
                v.degree.to_string(),
                real(v.normalized_degree),
                v.ranks.degree.to_string(),
                real(v.closeness),
                v.ranks.closeness.to_string(),
                real(v.betweenness),
                v.ranks.betweenness.to_string(),
            ]
        })
        .collect();
    let mut align = [Align::Right; 9];
    align[1] = Align::Left;
    layout(
        &[
            "Label",
            "Journal",
            "Degree",
            "NormDegree",
            "DegreeRank",
            "Closeness",
            "ClosenessRank",
            "Betweenness",
            "BetweennessRank",
        ],
        &align,
        &rows,
    )
}

/// Degree columns of the centrality table, for a bare degree sequence.
pub fn render_degree_ranking(rows: &[DegreeRankRow]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            vec![
                (i + 1).to_string(),
                r.vertex.clone(),
                r.degree.to_string(),
                real(r.normalized_degree),
                r.rank.to_string(),
            ]
        })
        .collect();
    let mut align = [Align::Right; 5];
    align[1] = Align::Left;
    layout(
        &["Label", "Journal", "Degree", "NormDegree", "DegreeRank"],
        &align,
        &cells,
    )
}

pub fn render_line_multiplicity(dist: &LineMultiplicityDistribution) -> String {
    let rows: Vec<Vec<String>> = dist
        .rows
        .iter()
        .map(|r| {
            vec![
                r.line_value.to_string(),
                r.frequency.to_string(),
                real(r.relative_frequency),
            ]
        })
        .collect();
    layout(&["LineValue", "Freq", "Freq%"], &[Align::Right; 3], &rows)
}

pub fn render_table(report: &AnalysisReport, which: Table) -> String {
    match which {
        Table::DegreeDistribution => render_degree_distribution(&report.degree_distribution),
        Table::Centrality => render_centrality(&report.vertices),
        Table::LineMultiplicity => render_line_multiplicity(&report.line_multiplicity),
    }
}
