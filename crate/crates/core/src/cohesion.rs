//! Valued-network analysis: line multiplicities, m-slices and their weak
//! components.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{density_from_counts, DensityVariant};
use crate::model::OneModeNetwork;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MultiplicityRow {
    pub line_value: u32,
    pub frequency: usize,
    pub relative_frequency: f64,
}

/// Frequency of each line value from 1 up to the largest observed value,
/// zero-frequency values included.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LineMultiplicityDistribution {
    pub rows: Vec<MultiplicityRow>,
    pub max_value: u32,
}

impl LineMultiplicityDistribution {
    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.frequency).sum()
    }
}

pub fn line_multiplicity_distribution(net: &OneModeNetwork) -> LineMultiplicityDistribution {
    let max_value = net.edges().iter().map(|e| e.value).max().unwrap_or(0);
    let mut counts = vec![0usize; max_value as usize];
    for e in net.edges() {
        counts[e.value as usize - 1] += 1;
    }
    let total = net.edge_count() as f64;
    let rows = counts
        .into_iter()
        .enumerate()
        .map(|(i, frequency)| MultiplicityRow {
            line_value: i as u32 + 1,
            frequency,
            relative_frequency: frequency as f64 / total,
        })
        .collect();
    LineMultiplicityDistribution { rows, max_value }
}

/// Keeps every vertex and only the lines valued at least `m`.
pub fn m_slice(net: &OneModeNetwork, m: u32) -> Result<OneModeNetwork> {
    if m == 0 {
        return Err(Error::Domain("slice threshold must be at least 1".into()));
    }
    Ok(net.filter_edges(|e| e.value >= m))
}

struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Maximal connected vertex sets, singletons included.
///
/// Components are listed in order of their first member; members are in
/// vertex order.
pub fn weak_components(net: &OneModeNetwork) -> Vec<Vec<usize>> {
    let n = net.vertex_count();
    let mut sets = DisjointSet::new(n);
    for e in net.edges() {
        sets.union(e.source, e.target);
    }
    let mut slot = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let root = sets.find(v);
        if slot[root] == usize::MAX {
            slot[root] = components.len();
            components.push(Vec::new());
        }
        components[slot[root]].push(v);
    }
    components
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentSummary {
    pub members: Vec<usize>,
    pub size: usize,
    pub edge_count: usize,
    pub density: f64,
}

/// Size, induced line count and density of `component` within `net`.
pub fn component_summary(
    net: &OneModeNetwork,
    component: &[usize],
    variant: DensityVariant,
) -> Result<ComponentSummary> {
    let n = net.vertex_count();
    let mut inside = vec![false; n];
    for &v in component {
        if v >= n {
            return Err(Error::Domain(format!(
                "vertex {v} is not in a network of {n} vertices"
            )));
        }
        inside[v] = true;
    }
    let mut members: Vec<usize> = component.to_vec();
    members.sort_unstable();
    members.dedup();
    let edge_count = net
        .edges()
        .iter()
        .filter(|e| inside[e.source] && inside[e.target])
        .count();
    let size = members.len();
    Ok(ComponentSummary {
        members,
        size,
        edge_count,
        density: density_from_counts(size, edge_count, variant),
    })
}

/// An m-slice together with its weak components.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceDecomposition {
    pub threshold: u32,
    pub sliced: OneModeNetwork,
    pub components: Vec<ComponentSummary>,
}

impl SliceDecomposition {
    /// Components with at least two members.
    pub fn nontrivial(&self) -> impl Iterator<Item = &ComponentSummary> {
        self.components.iter().filter(|c| c.size > 1)
    }
}

pub fn slice_decomposition(
    net: &OneModeNetwork,
    m: u32,
    variant: DensityVariant,
) -> Result<SliceDecomposition> {
    let sliced = m_slice(net, m)?;
    let components = weak_components(&sliced)
        .iter()
        .map(|c| component_summary(&sliced, c, variant))
        .collect::<Result<_>>()?;
    Ok(SliceDecomposition {
        threshold: m,
        sliced,
        components,
    })
}
