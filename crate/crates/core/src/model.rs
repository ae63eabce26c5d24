//! Two-mode affiliation networks and one-mode valued networks.
//!
//! A [`TwoModeNetwork`] records which actors (editors) sit on which events
//! (journal boards). Projecting it yields a [`OneModeNetwork`]: an undirected
//! graph whose line values count shared members.
//!
//! Both types keep ingestion order for their vertices so every derived report
//! iterates in a deterministic order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Canonicalizes raw identifiers before they are compared.
///
/// Identity is exact match after trimming surrounding whitespace and NFC
/// composition. Case folding is opt-in.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NameNormalizer {
    pub case_fold: bool,
}

impl NameNormalizer {
    pub fn new(case_fold: bool) -> Self {
        NameNormalizer { case_fold }
    }

    pub fn normalize(&self, raw: &str) -> Option<String> {
        let composed: String = raw.trim().nfc().collect();
        if composed.is_empty() {
            return None;
        }
        Some(if self.case_fold {
            composed.to_lowercase()
        } else {
            composed
        })
    }
}

macro_rules! identifier {
    ($(#[$meta:meta])* $name:ident, $what:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(String);

        impl $name {
            /// Trims and NFC-composes `raw`; fails when nothing is left.
            pub fn new(raw: &str) -> Result<Self> {
                Self::with_normalizer(raw, &NameNormalizer::default())
            }

            pub fn with_normalizer(raw: &str, normalizer: &NameNormalizer) -> Result<Self> {
                normalizer
                    .normalize(raw)
                    .map($name)
                    .ok_or_else(|| Error::Validation(concat!("empty ", $what, " identifier").into()))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl AsRef<str> for $name {
            fn as_ref(&self) -> &str {
                &self.0
            }
        }
    };
}

identifier!(
    /// An actor of the affiliation network (an editor).
    ActorId,
    "actor"
);
identifier!(
    /// An event of the affiliation network (a journal).
    EventId,
    "event"
);

/// An event together with its optional display name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    pub id: EventId,
    pub label: Option<String>,
}

/// Editors affiliated with journals.
///
/// Actors only come into existence through an affiliation, so there are no
/// orphan actors. Events may have empty boards. Event and actor identifiers
/// live in separate namespaces: an actor may share its text with an event.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoModeNetwork {
    events: Vec<Event>,
    actors: Vec<ActorId>,
    event_index: HashMap<EventId, usize>,
    actor_index: HashMap<ActorId, usize>,
    // Per event, member actor indices; per actor, event indices.
    boards: Vec<BTreeSet<usize>>,
    affiliations: Vec<BTreeSet<usize>>,
}

impl TwoModeNetwork {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers an event (possibly with an empty board) and returns its index.
    /// Re-adding an existing event returns the existing index.
    pub fn add_event(&mut self, event: EventId) -> usize {
        if let Some(&idx) = self.event_index.get(&event) {
            return idx;
        }
        let idx = self.events.len();
        self.event_index.insert(event.clone(), idx);
        self.events.push(Event {
            id: event,
            label: None,
        });
        self.boards.push(BTreeSet::new());
        idx
    }

    /// Sets the display name of an existing event.
    pub fn set_event_label(&mut self, event: usize, label: impl Into<String>) {
        self.events[event].label = Some(label.into());
    }

    fn add_actor(&mut self, actor: ActorId) -> usize {
        if let Some(&idx) = self.actor_index.get(&actor) {
            return idx;
        }
        let idx = self.actors.len();
        self.actor_index.insert(actor.clone(), idx);
        self.actors.push(actor);
        self.affiliations.push(BTreeSet::new());
        idx
    }

    /// Records that `actor` sits on the board of `event`.
    ///
    /// Returns `false` when the pair was already present (the call is then a
    /// no-op).
    pub fn add_affiliation(&mut self, event: EventId, actor: ActorId) -> bool {
        let e = self.add_event(event);
        let a = self.add_actor(actor);
        let fresh = self.boards[e].insert(a);
        self.affiliations[a].insert(e);
        fresh
    }

    /// Convenience wrapper validating raw identifiers.
    pub fn affiliate(&mut self, event: &str, actor: &str) -> Result<bool> {
        Ok(self.add_affiliation(EventId::new(event)?, ActorId::new(actor)?))
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn actors(&self) -> &[ActorId] {
        &self.actors
    }

    pub fn event_count(&self) -> usize {
        self.events.len()
    }

    pub fn actor_count(&self) -> usize {
        self.actors.len()
    }

    pub fn event_index(&self, id: &EventId) -> Option<usize> {
        self.event_index.get(id).copied()
    }

    pub fn actor_index(&self, id: &ActorId) -> Option<usize> {
        self.actor_index.get(id).copied()
    }

    /// Actor indices on the board of event `event`, ascending.
    pub fn members(&self, event: usize) -> &BTreeSet<usize> {
        &self.boards[event]
    }

    /// Event indices the actor `actor` is affiliated with, ascending.
    pub fn events_of(&self, actor: usize) -> &BTreeSet<usize> {
        &self.affiliations[actor]
    }

    /// Total number of seats (sum of board sizes).
    pub fn seats(&self) -> usize {
        self.boards.iter().map(BTreeSet::len).sum()
    }

    pub fn stats(&self) -> AffiliationStats {
        affiliation_stats(self)
    }
}

/// Seat and participation counts of an affiliation network.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AffiliationStats {
    pub seats: usize,
    pub actors: usize,
    pub events: usize,
    pub mean_seats_per_event: f64,
    pub mean_participation_rate: f64,
}

pub fn affiliation_stats(net: &TwoModeNetwork) -> AffiliationStats {
    let seats = net.seats();
    let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };
    AffiliationStats {
        seats,
        actors: net.actor_count(),
        events: net.event_count(),
        mean_seats_per_event: ratio(seats, net.event_count()),
        mean_participation_rate: ratio(seats, net.actor_count()),
    }
}

/// A vertex of a one-mode network.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Vertex {
    pub fn new(id: impl Into<String>) -> Self {
        Vertex {
            id: id.into(),
            label: None,
        }
    }

    /// The label when present, otherwise the identifier.
    pub fn display_name(&self) -> &str {
        self.label.as_deref().unwrap_or(&self.id)
    }
}

/// An undirected valued line. `source < target` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub value: u32,
}

/// Undirected valued graph; line value = shared-member count.
///
/// No self-loops, no duplicate pairs and every value is at least 1. Edges are
/// stored once, ordered by `(source, target)` in vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneModeNetwork {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl OneModeNetwork {
    /// Builds a network from vertices and `(u, v, value)` triples in any
    /// orientation.
    pub fn new(
        vertices: Vec<Vertex>,
        edges: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut seen_ids = HashMap::with_capacity(n);
        for (i, v) in vertices.iter().enumerate() {
            if v.id.trim().is_empty() {
                return Err(Error::Validation(format!("vertex {} has an empty id", i + 1)));
            }
            if seen_ids.insert(v.id.as_str(), i).is_some() {
                return Err(Error::Validation(format!("duplicate vertex id {:?}", v.id)));
            }
        }

        let mut lines = BTreeMap::new();
        for (u, v, value) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge {}-{} references a vertex outside 1..={n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop on vertex {}", u + 1)));
            }
            if value == 0 {
                return Err(Error::Validation(format!(
                    "edge {}-{} has value 0",
                    u + 1,
                    v + 1
                )));
            }
            let key = (u.min(v), u.max(v));
            if lines.insert(key, value).is_some() {
                return Err(Error::Validation(format!(
                    "duplicate edge {}-{}",
                    key.0 + 1,
                    key.1 + 1
                )));
            }
        }

        let edges: Vec<Edge> = lines
            .into_iter()
            .map(|((source, target), value)| Edge {
                source,
                target,
                value,
            })
            .collect();
        Ok(Self::from_sorted(vertices, edges))
    }

    /// `edges` must already be valid and sorted.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for e in &edges {
            adjacency[e.source].push(e.target);
            adjacency[e.target].push(e.source);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let net = OneModeNetwork {
            vertices,
            edges,
            adjacency,
        };
        debug_assert_eq!(
            net.degrees().iter().sum::<usize>(),
            2 * net.edge_count(),
            "handshake identity"
        );
        net
    }

    /// Network with the given vertex ids and no edges.
    pub fn empty<S: Into<String>>(ids: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(ids.into_iter().map(Vertex::new).collect(), std::iter::empty())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbours of `v` in ascending vertex order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    /// Value of the line between `u` and `v`, if any.
    pub fn value(&self, u: usize, v: usize) -> Option<u32> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|e| (e.source, e.target).cmp(&key))
            .ok()
            .map(|i| self.edges[i].value)
    }

    /// Same vertices, only the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> OneModeNetwork {
        let edges = self.edges.iter().copied().filter(|e| keep(e)).collect();
        Self::from_sorted(self.vertices.clone(), edges)
    }

    /// The line with the highest value; ties go to the first in edge order.
    pub fn strongest_edge(&self) -> Option<Edge> {
        self.edges
            .iter()
            .copied()
            .fold(None, |best: Option<Edge>, e| match best {
                Some(b) if b.value >= e.value => Some(b),
                _ => Some(e),
            })
    }
}
