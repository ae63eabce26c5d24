//! Centrality, centralization and degree statistics of a one-mode network.
//!
//! Distances treat the network as binary: line values are ignored and every
//! line has length 1. Betweenness uses one breadth-first search per source
//! with dependency back-propagation, accumulated in source order so results
//! are bit-for-bit reproducible.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::cohesion::weak_components;
use crate::error::{Error, Result};
use crate::model::OneModeNetwork;

/// Denominator used for density.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DensityVariant {
    /// `2m / (n(n-1))`
    NoLoops,
    /// `2m / n²`
    #[default]
    LoopsAllowed,
}

/// Closeness definition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ClosenessVariant {
    /// Reachable vertex count divided by the sum of their distances.
    #[default]
    #[serde(rename = "paper")]
    ReachableOnly,
    /// The above scaled by the reachable share `r / (n-1)`.
    ComponentNormalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Descending,
    Ascending,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeRow {
    pub degree: usize,
    pub frequency: usize,
    pub relative_frequency: f64,
    pub cumulative_relative_frequency: f64,
}

/// Frequency table of observed degrees, ascending.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DegreeDistribution {
    pub rows: Vec<DegreeRow>,
}

impl DegreeDistribution {
    pub fn from_degrees(degrees: &[usize]) -> Self {
        let n = degrees.len();
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable();
        let mut rows: Vec<DegreeRow> = Vec::new();
        let mut cumulative = 0usize;
        for chunk in sorted.chunk_by(|a, b| a == b) {
            cumulative += chunk.len();
            rows.push(DegreeRow {
                degree: chunk[0],
                frequency: chunk.len(),
                relative_frequency: chunk.len() as f64 / n as f64,
                cumulative_relative_frequency: cumulative as f64 / n as f64,
            });
        }
        DegreeDistribution { rows }
    }

    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.frequency).sum()
    }
}

pub fn degree_distribution(net: &OneModeNetwork) -> DegreeDistribution {
    DegreeDistribution::from_degrees(&net.degrees())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeStats {
    pub mean: f64,
    pub median: f64,
    /// Standard deviation with divisor `n`.
    pub sd_population: f64,
}

pub fn degree_stats(degrees: &[usize]) -> Result<DegreeStats> {
    if degrees.is_empty() {
        return Err(Error::Domain("degree statistics of an empty multiset".into()));
    }
    let n = degrees.len() as f64;
    let mean = degrees.iter().sum::<usize>() as f64 / n;
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let mid = sorted.len() / 2;
    let median = if sorted.len() % 2 == 1 {
        sorted[mid] as f64
    } else {
        (sorted[mid - 1] + sorted[mid]) as f64 / 2.0
    };
    let variance = degrees
        .iter()
        .map(|&d| (d as f64 - mean).powi(2))
        .sum::<f64>()
        / n;
    Ok(DegreeStats {
        mean,
        median,
        sd_population: variance.sqrt(),
    })
}

pub fn density_from_counts(n: usize, m: usize, variant: DensityVariant) -> f64 {
    let n = n as f64;
    let lines = 2.0 * m as f64;
    match variant {
        DensityVariant::NoLoops if n < 2.0 => 0.0,
        DensityVariant::NoLoops => lines / (n * (n - 1.0)),
        DensityVariant::LoopsAllowed if n < 1.0 => 0.0,
        DensityVariant::LoopsAllowed => lines / (n * n),
    }
}

pub fn density(net: &OneModeNetwork, variant: DensityVariant) -> f64 {
    density_from_counts(net.vertex_count(), net.edge_count(), variant)
}

fn check_vertex(net: &OneModeNetwork, v: usize) -> Result<()> {
    if v < net.vertex_count() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "vertex {v} is not in a network of {} vertices",
            net.vertex_count()
        )))
    }
}

fn bfs(net: &OneModeNetwork, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; net.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let next = dist[v].map(|d| d + 1);
        for &w in net.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn geodesic_distances(net: &OneModeNetwork, source: usize) -> Result<Vec<Option<usize>>> {
    check_vertex(net, source)?;
    Ok(bfs(net, source))
}

fn closeness_from_distances(dist: &[Option<usize>], variant: ClosenessVariant) -> f64 {
    let (reached, total) = dist
        .iter()
        .flatten()
        .filter(|&&d| d > 0)
        .fold((0usize, 0usize), |(r, s), &d| (r + 1, s + d));
    if reached == 0 {
        return 0.0;
    }
    let reachable_only = reached as f64 / total as f64;
    match variant {
        ClosenessVariant::ReachableOnly => reachable_only,
        ClosenessVariant::ComponentNormalized => {
            reached as f64 / (dist.len() - 1) as f64 * reachable_only
        }
    }
}

pub fn closeness_centrality(
    net: &OneModeNetwork,
    vertex: usize,
    variant: ClosenessVariant,
) -> Result<f64> {
    check_vertex(net, vertex)?;
    Ok(closeness_from_distances(&bfs(net, vertex), variant))
}

/// Closeness of every vertex, in vertex order.
pub fn closeness_all(net: &OneModeNetwork, variant: ClosenessVariant) -> Vec<f64> {
    (0..net.vertex_count())
        .map(|v| closeness_from_distances(&bfs(net, v), variant))
        .collect()
}

/// Unnormalized betweenness: for each vertex, the sum over unordered pairs
/// of other vertices of the share of their geodesics passing through it.
pub fn betweenness_raw(net: &OneModeNetwork) -> Vec<f64> {
    let n = net.vertex_count();
    let mut score = vec![0.0; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        sigma.fill(0.0);
        dist.fill(usize::MAX);
        delta.fill(0.0);
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in net.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }

        // Predecessors of w are the neighbours one hop closer to s.
        for &w in order.iter().rev() {
            for &v in net.neighbors(w) {
                if dist[v] != usize::MAX && dist[v] + 1 == dist[w] {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }

    // Each unordered pair was visited from both ends.
    score.iter_mut().for_each(|b| *b /= 2.0);
    score
}

/// Betweenness normalized by the number of pairs of other vertices,
/// `2B / ((n-1)(n-2))`; all zeros when `n < 3`.
pub fn betweenness_centrality(net: &OneModeNetwork) -> Vec<f64> {
    let n = net.vertex_count();
    if n < 3 {
        return vec![0.0; n];
    }
    let pairs = ((n - 1) * (n - 2)) as f64 / 2.0;
    betweenness_raw(net).into_iter().map(|b| b / pairs).collect()
}

/// Freeman degree centralization, `Σ(d_max - d_i) / ((n-1)(n-2))`.
pub fn degree_centralization(degrees: &[usize]) -> Result<f64> {
    let n = degrees.len();
    if n < 3 {
        return Err(Error::Domain(format!(
            "degree centralization needs at least 3 vertices, got {n}"
        )));
    }
    let max = degrees.iter().copied().max().unwrap_or(0);
    let spread: usize = degrees.iter().map(|&d| max - d).sum();
    Ok(spread as f64 / ((n - 1) * (n - 2)) as f64)
}

/// Freeman betweenness centralization over normalized scores,
/// `Σ(B'_max - B'_i) / (n-1)`.
pub fn betweenness_centralization(scores: &[f64]) -> Result<f64> {
    let n = scores.len();
    if n < 3 {
        return Err(Error::Domain(format!(
            "betweenness centralization needs at least 3 vertices, got {n}"
        )));
    }
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(scores.iter().map(|&b| max - b).sum::<f64>() / (n - 1) as f64)
}

/// Vertices of the largest connected part; ties go to the one met first.
pub fn largest_component(net: &OneModeNetwork) -> Vec<usize> {
    weak_components(net)
        .into_iter()
        .fold(Vec::new(), |best, c| if c.len() > best.len() { c } else { best })
}

/// Freeman closeness centralization of the largest connected subnetwork,
/// using closeness `(n'-1)/Σd`. Zero when that subnetwork has fewer than 3
/// vertices.
pub fn closeness_centralization(net: &OneModeNetwork) -> f64 {
    let component = largest_component(net);
    let k = component.len();
    if k < 3 {
        return 0.0;
    }
    let scores: Vec<f64> = component
        .iter()
        .map(|&v| {
            let total: usize = bfs(net, v).iter().flatten().sum();
            (k - 1) as f64 / total as f64
        })
        .collect();
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread: f64 = scores.iter().map(|&c| max - c).sum();
    spread * (2 * k - 3) as f64 / ((k - 1) * (k - 2)) as f64
}

/// Standard competition ranking ("1224"): ties share the best rank.
pub fn rank_competition(values: &[f64], direction: Direction) -> Vec<usize> {
    rank_competition_with_tolerance(values, direction, 0.0)
}

/// As [`rank_competition`], treating values within `tolerance` of each
/// other as tied. Used for floating-point scores that are equal in exact
/// arithmetic but may differ in the last bits.
pub fn rank_competition_with_tolerance(
    values: &[f64],
    direction: Direction,
    tolerance: f64,
) -> Vec<usize> {
    let better = |a: f64, b: f64| match direction {
        Direction::Descending => a > b + tolerance,
        Direction::Ascending => a < b - tolerance,
    };
    values
        .iter()
        .map(|&v| 1 + values.iter().filter(|&&w| better(w, v)).count())
        .collect()
}

/// Tolerance used when ranking closeness and betweenness scores.
pub const SCORE_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Ranks {
    pub degree: usize,
    pub closeness: usize,
    pub betweenness: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VertexMetrics {
    pub vertex: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub degree: usize,
    pub normalized_degree: f64,
    pub closeness: f64,
    pub betweenness: f64,
    pub ranks: Ranks,
}

/// Network-level figures. Fields that need the line structure (paths,
/// components) are `None` when only a degree sequence is known.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NetworkAggregates {
    pub n: usize,
    pub m: usize,
    pub density_no_loops: f64,
    pub density_loops_allowed: f64,
    pub mean_degree: f64,
    pub median_degree: f64,
    pub sd_degree_population: f64,
    pub degree_centralization: Option<f64>,
    pub betweenness_centralization: Option<f64>,
    pub closeness_centralization: Option<f64>,
    pub largest_component_size: Option<usize>,
    pub component_count: Option<usize>,
    pub isolate_count: usize,
}

impl NetworkAggregates {
    /// Everything that follows from the degree sequence alone.
    pub fn from_degrees(degrees: &[usize]) -> Result<Self> {
        let total: usize = degrees.iter().sum();
        if total % 2 == 1 {
            return Err(Error::Domain(format!("degree sum {total} is odd")));
        }
        let n = degrees.len();
        let m = total / 2;
        let stats = degree_stats(degrees).unwrap_or(DegreeStats {
            mean: 0.0,
            median: 0.0,
            sd_population: 0.0,
        });
        Ok(NetworkAggregates {
            n,
            m,
            density_no_loops: density_from_counts(n, m, DensityVariant::NoLoops),
            density_loops_allowed: density_from_counts(n, m, DensityVariant::LoopsAllowed),
            mean_degree: stats.mean,
            median_degree: stats.median,
            sd_degree_population: stats.sd_population,
            degree_centralization: degree_centralization(degrees).ok(),
            betweenness_centralization: None,
            closeness_centralization: None,
            largest_component_size: None,
            component_count: None,
            isolate_count: degrees.iter().filter(|&&d| d == 0).count(),
        })
    }

    pub fn density(&self, variant: DensityVariant) -> f64 {
        match variant {
            DensityVariant::NoLoops => self.density_no_loops,
            DensityVariant::LoopsAllowed => self.density_loops_allowed,
        }
    }
}

/// Per-vertex measures and network aggregates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub vertices: Vec<VertexMetrics>,
    pub aggregates: NetworkAggregates,
}

pub fn normalized_degree(degree: usize, n: usize) -> f64 {
    if n < 2 {
        0.0
    } else {
        degree as f64 / (n - 1) as f64
    }
}

pub fn compute_metrics(net: &OneModeNetwork, closeness_variant: ClosenessVariant) -> MetricsReport {
    let n = net.vertex_count();
    let degrees = net.degrees();
    let closeness = closeness_all(net, closeness_variant);
    let betweenness = betweenness_centrality(net);

    let degree_values: Vec<f64> = degrees.iter().map(|&d| d as f64).collect();
    let degree_ranks = rank_competition(&degree_values, Direction::Descending);
    let closeness_ranks =
        rank_competition_with_tolerance(&closeness, Direction::Descending, SCORE_TIE_TOLERANCE);
    let betweenness_ranks =
        rank_competition_with_tolerance(&betweenness, Direction::Descending, SCORE_TIE_TOLERANCE);

    let vertices = net
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| VertexMetrics {
            vertex: v.id.clone(),
            label: v.label.clone(),
            degree: degrees[i],
            normalized_degree: normalized_degree(degrees[i], n),
            closeness: closeness[i],
            betweenness: betweenness[i],
            ranks: Ranks {
                degree: degree_ranks[i],
                closeness: closeness_ranks[i],
                betweenness: betweenness_ranks[i],
            },
        })
        .collect();

    let components = weak_components(net);
    let mut aggregates =
        NetworkAggregates::from_degrees(&degrees).expect("handshake identity holds");
    aggregates.betweenness_centralization = betweenness_centralization(&betweenness).ok();
    aggregates.closeness_centralization = Some(closeness_centralization(net));
    aggregates.largest_component_size = Some(components.iter().map(Vec::len).max().unwrap_or(0));
    aggregates.component_count = Some(components.len());

    MetricsReport {
        vertices,
        aggregates,
    }
}
