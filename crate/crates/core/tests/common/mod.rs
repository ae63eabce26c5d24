//! Brute-force oracles and generators shared by the integration tests.
//!
//! Nothing here calls the library's own BFS, Brandes or projection code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use boardnet::{EventId, OneModeNetwork, TwoModeNetwork, Vertex};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

pub const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{FIXTURES}/{name}")).expect("fixture exists")
}

/// Plain adjacency-matrix graph used by the oracles.
#[derive(Debug, Clone)]
pub struct SmallGraph {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl SmallGraph {
    pub fn from_pairs(n: usize, present: &[bool]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        for ((u, v), &on) in pairs.zip(present) {
            if on {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        SmallGraph { n, adj }
    }

    pub fn network(&self) -> OneModeNetwork {
        let vertices = (0..self.n).map(|i| Vertex::new(format!("v{i}"))).collect();
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    edges.push((u, v, 1));
                }
            }
        }
        OneModeNetwork::new(vertices, edges).unwrap()
    }

    /// Every simple path from `s` to `t`, as vertex sequences.
    pub fn simple_paths(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        fn walk(g: &SmallGraph, t: usize, path: &mut Vec<usize>, seen: &mut [bool], out: &mut Vec<Vec<usize>>) {
            let v = *path.last().unwrap();
            if v == t {
                out.push(path.clone());
                return;
            }
            for w in 0..g.n {
                if g.adj[v][w] && !seen[w] {
                    seen[w] = true;
                    path.push(w);
                    walk(g, t, path, seen, out);
                    path.pop();
                    seen[w] = false;
                }
            }
        }
        let mut out = Vec::new();
        let mut seen = vec![false; self.n];
        seen[s] = true;
        walk(self, t, &mut vec![s], &mut seen, &mut out);
        out
    }

    /// Shortest simple paths from `s` to `t` (empty when unreachable).
    pub fn geodesics(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let paths = self.simple_paths(s, t);
        let Some(best) = paths.iter().map(Vec::len).min() else {
            return Vec::new();
        };
        paths.into_iter().filter(|p| p.len() == best).collect()
    }

    pub fn distance(&self, s: usize, t: usize) -> Option<usize> {
        self.geodesics(s, t).first().map(|p| p.len() - 1)
    }

    /// Raw betweenness by enumerating geodesics of every unordered pair.
    pub fn betweenness_raw(&self) -> Vec<f64> {
        let mut score = vec![0.0; self.n];
        for s in 0..self.n {
            for t in s + 1..self.n {
                let geo = self.geodesics(s, t);
                if geo.is_empty() {
                    continue;
                }
                for (v, b) in score.iter_mut().enumerate() {
                    if v == s || v == t {
                        continue;
                    }
                    let through = geo.iter().filter(|p| p.contains(&v)).count();
                    *b += through as f64 / geo.len() as f64;
                }
            }
        }
        score
    }

    pub fn betweenness_normalized(&self) -> Vec<f64> {
        let n = self.n;
        if n < 3 {
            return vec![0.0; n];
        }
        self.betweenness_raw()
            .into_iter()
            .map(|b| 2.0 * b / ((n - 1) * (n - 2)) as f64)
            .collect()
    }

    /// Reachable count over distance sum; 0 for isolates.
    pub fn closeness_reachable(&self, v: usize) -> f64 {
        let d: Vec<usize> = (0..self.n)
            .filter(|&t| t != v)
            .filter_map(|t| self.distance(v, t))
            .collect();
        if d.is_empty() {
            0.0
        } else {
            d.len() as f64 / d.iter().sum::<usize>() as f64
        }
    }

    /// Connected components by transitive closure of the adjacency matrix.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut reach = self.adj.clone();
        for (v, row) in reach.iter_mut().enumerate() {
            row[v] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (v, row) in reach.iter().enumerate() {
            if !out.iter().any(|c| c.contains(&v)) {
                out.push((0..n).filter(|&w| row[w]).collect());
            }
        }
        out
    }

    /// Freeman closeness centralization of the largest component, from
    /// oracle distances.
    pub fn closeness_centralization(&self) -> f64 {
        let comps = self.components();
        let largest = comps
            .iter()
            .fold(&comps[0], |best, c| if c.len() > best.len() { c } else { best });
        let k = largest.len();
        if k < 3 {
            return 0.0;
        }
        let c: Vec<f64> = largest
            .iter()
            .map(|&v| {
                let total: usize = largest
                    .iter()
                    .filter(|&&t| t != v)
                    .map(|&t| self.distance(v, t).unwrap())
                    .sum();
                (k - 1) as f64 / total as f64
            })
            .collect();
        let max = c.iter().cloned().fold(f64::MIN, f64::max);
        c.iter().map(|x| max - x).sum::<f64>() * (2 * k - 3) as f64 / ((k - 1) * (k - 2)) as f64
    }
}

pub fn small_graph(max_n: usize) -> impl Strategy<Value = SmallGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.45), n * (n - 1) / 2)
            .prop_map(move |present| SmallGraph::from_pairs(n, &present))
    })
}

/// Graphs whose lines carry values in `1..=max_value`.
pub fn valued_network(max_n: usize, max_value: u32) -> impl Strategy<Value = OneModeNetwork> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            proptest::option::weighted(0.5, 1..=max_value),
            n * (n - 1) / 2,
        )
        .prop_map(move |values| {
            let vertices = (0..n).map(|i| Vertex::new(format!("j{i}"))).collect();
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if let Some(x) = values[k] {
                        edges.push((u, v, x));
                    }
                    k += 1;
                }
            }
            OneModeNetwork::new(vertices, edges).unwrap()
        })
    })
}

/// Boards as plain sets: `boards[e]` holds actor numbers.
#[derive(Debug, Clone)]
pub struct Boards {
    pub boards: Vec<BTreeSet<usize>>,
}

impl Boards {
    pub fn network(&self) -> TwoModeNetwork {
        let mut net = TwoModeNetwork::new();
        for (e, board) in self.boards.iter().enumerate() {
            net.add_event(EventId::new(&format!("E{e}")).unwrap());
            for a in board {
                net.affiliate(&format!("E{e}"), &format!("a{a}")).unwrap();
            }
        }
        net
    }

    /// Shared-member count of every event pair, element by element.
    pub fn brute_projection(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for e in 0..self.boards.len() {
            for f in e + 1..self.boards.len() {
                let mut shared = 0;
                for a in &self.boards[e] {
                    for b in &self.boards[f] {
                        if a == b {
                            shared += 1;
                        }
                    }
                }
                if shared > 0 {
                    out.push((e, f, shared));
                }
            }
        }
        out
    }
}

pub fn boards(max_events: usize, max_actors: usize) -> impl Strategy<Value = Boards> {
    (1..=max_events, 0..=max_actors).prop_flat_map(|(events, actors)| {
        proptest::collection::vec(
            proptest::collection::vec(proptest::bool::weighted(0.3), actors),
            events,
        )
        .prop_map(|matrix| Boards {
            boards: matrix
                .into_iter()
                .map(|row| row.into_iter().enumerate().filter(|(_, x)| *x).map(|(a, _)| a).collect())
                .collect(),
        })
    })
}

/// Draws `count` values from a strategy with a fixed seed.
pub fn sample<S: Strategy>(strategy: S, count: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..count)
        .map(|_| strategy.new_tree(&mut runner).unwrap().current())
        .collect()
}

/// Havel-Hakimi: a simple graph realizing `degrees`, if one exists.
pub fn realize_degree_sequence(names: &[String], degrees: &[usize]) -> Option<OneModeNetwork> {
    let mut remaining: Vec<(usize, usize)> = degrees.iter().copied().enumerate().collect();
    let mut edges = Vec::new();
    loop {
        remaining.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let (v, d) = remaining[0];
        if d == 0 {
            break;
        }
        if d >= remaining.len() {
            return None;
        }
        remaining[0].1 = 0;
        for slot in remaining.iter_mut().skip(1).take(d) {
            if slot.1 == 0 {
                return None;
            }
            slot.1 -= 1;
            edges.push((v, slot.0, 1));
        }
    }
    let vertices = names.iter().map(Vertex::new).collect();
    Some(OneModeNetwork::new(vertices, edges).unwrap())
}

/// A network on `n` vertices with `frequencies[k]` lines of value `k + 1`.
pub fn network_with_multiplicities(n: usize, frequencies: &[usize]) -> OneModeNetwork {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let values = frequencies
        .iter()
        .enumerate()
        .flat_map(|(k, &f)| std::iter::repeat_n(k as u32 + 1, f));
    let edges: Vec<_> = pairs.zip(values).map(|((u, v), x)| (u, v, x)).collect();
    assert_eq!(edges.len(), frequencies.iter().sum::<usize>(), "not enough pairs");
    let vertices = (0..n).map(|i| Vertex::new(format!("j{}", i + 1))).collect();
    OneModeNetwork::new(vertices, edges).unwrap()
}

pub fn fixture_degrees() -> (Vec<String>, Vec<usize>) {
    let seq = boardnet::ingest::parse_csv_degree_sequence(&fixture("table2_degrees.csv")).unwrap();
    (seq.names, seq.degrees)
}

/// Degree-rank column of the published centrality table, in row order.
pub const FIXTURE_DEGREE_RANKS: [usize; 61] = [
    10, 13, 23, 32, 38, 17, 32, 32, 17, 10, 5, 3, 21, 21, 52, 23, 52, 10, 28, 32, 1, 23, 38, 8,
    13, 5, 23, 13, 52, 45, 3, 13, 52, 38, 52, 52, 52, 5, 28, 17, 52, 28, 38, 52, 28, 17, 45, 1,
    32, 32, 23, 45, 45, 52, 8, 45, 38, 38, 45, 38, 45,
];

/// Published degree distribution: (degree, frequency, relative, cumulative).
pub const DEGREE_DISTRIBUTION_ROWS: [(usize, usize, f64, f64); 14] = [
    (0, 10, 0.164, 0.164),
    (1, 7, 0.115, 0.279),
    (2, 7, 0.115, 0.393),
    (3, 6, 0.098, 0.492),
    (5, 4, 0.066, 0.557),
    (6, 5, 0.082, 0.639),
    (7, 2, 0.033, 0.672),
    (8, 4, 0.066, 0.738),
    (9, 4, 0.066, 0.803),
    (10, 3, 0.049, 0.852),
    (12, 2, 0.033, 0.885),
    (13, 3, 0.049, 0.934),
    (14, 2, 0.033, 0.967),
    (16, 2, 0.033, 1.000),
];

/// Published line multiplicity frequencies for values 1..=16.
pub const LINE_VALUE_FREQUENCIES: [usize; 16] = [90, 33, 15, 8, 5, 7, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1];
