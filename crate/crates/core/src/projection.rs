//! One-mode projections of an affiliation network.
//!
//! Events linked by shared actors (interlocking of events), or actors linked
//! by shared events (co-membership). Line value is the raw count of shared
//! members; pairs sharing nothing get no line.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::{Edge, OneModeNetwork, TwoModeNetwork, Vertex};

/// Journals linked by the editors they share.
pub fn project_events(net: &TwoModeNetwork) -> OneModeNetwork {
    let vertices = net
        .events()
        .iter()
        .map(|e| Vertex {
            id: e.id.as_str().to_owned(),
            label: e.label.clone(),
        })
        .collect();
    let groups = (0..net.actor_count()).map(|a| net.events_of(a));
    build(vertices, groups)
}

/// Editors linked by the journals they share.
pub fn project_actors(net: &TwoModeNetwork) -> OneModeNetwork {
    let vertices = net
        .actors()
        .iter()
        .map(|a| Vertex::new(a.as_str()))
        .collect();
    let groups = (0..net.event_count()).map(|e| net.members(e));
    build(vertices, groups)
}

/// Every group contributes one unit to each pair of its members.
fn build<'a>(
    vertices: Vec<Vertex>,
    groups: impl Iterator<Item = &'a BTreeSet<usize>>,
) -> OneModeNetwork {
    let mut counts: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for group in groups {
        let members: Vec<usize> = group.iter().copied().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                *counts.entry((u, v)).or_insert(0) += 1;
            }
        }
    }
    let edges = counts
        .into_iter()
        .map(|((source, target), value)| Edge {
            source,
            target,
            value,
        })
        .collect();
    OneModeNetwork::from_sorted(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boards(rows: &[(&str, &[&str])]) -> TwoModeNetwork {
        let mut net = TwoModeNetwork::new();
        for (event, members) in rows {
            net.add_event(crate::model::EventId::new(event).unwrap());
            for m in *members {
                net.affiliate(event, m).unwrap();
            }
        }
        net
    }

    #[test]
    fn overlapping_boards() {
        let net = boards(&[("J1", &["a", "b", "c"]), ("J2", &["b", "c", "d"]), ("J3", &["e"])]);
        let p = project_events(&net);
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.edge_count(), 1);
        assert_eq!(p.value(0, 1), Some(2));
        assert_eq!(p.degree(2), 0);
    }

    #[test]
    fn single_event_has_no_lines() {
        let p = project_events(&boards(&[("J1", &["a", "b"])]));
        assert_eq!((p.vertex_count(), p.edge_count()), (1, 0));
    }

    #[test]
    fn actors_sharing_two_boards() {
        let p = project_actors(&boards(&[("J1", &["a", "b"]), ("J2", &["a", "b"])]));
        assert_eq!(p.vertex_count(), 2);
        assert_eq!(p.value(0, 1), Some(2));
    }

    #[test]
    fn lone_actor_and_disjoint_boards() {
        let p = project_actors(&boards(&[("J1", &["a"])]));
        assert_eq!((p.vertex_count(), p.edge_count()), (1, 0));
        let p = project_actors(&boards(&[("J1", &["a"]), ("J2", &["b"])]));
        assert_eq!((p.vertex_count(), p.edge_count()), (2, 0));
    }

    #[test]
    fn empty_boards_become_isolates() {
        let net = boards(&[("J1", &["a"]), ("J2", &[]), ("J3", &["a"])]);
        let p = project_events(&net);
        assert_eq!(p.vertices()[1].id, "J2");
        assert_eq!(p.degree(1), 0);
        assert_eq!(p.value(0, 2), Some(1));
    }
}
