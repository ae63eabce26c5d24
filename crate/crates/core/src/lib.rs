//! Interlocking-board network analysis.
//!
//! Editors sitting on journal boards form a two-mode affiliation network.
//! This crate projects it onto a valued one-mode network of journals (line
//! value = number of shared editors) and measures it:
//!
//! * degree, closeness and betweenness centrality with competition ranks,
//!   plus Freeman centralization indices ([`metrics`]);
//! * line multiplicities, m-slices and their weak components ([`cohesion`]);
//! * CSV / NET readers and NET / CSV / DOT writers ([`ingest`], [`export`]);
//! * a JSON report and fixed-width tables ([`report`]).
//!
//! ```
//! use boardnet::{ingest, projection, metrics};
//!
//! let (boards, _) = ingest::parse_csv_affiliations("actor,event\na,J1\nb,J1\nb,J2\n").unwrap();
//! let journals = projection::project_events(&boards);
//! assert_eq!(journals.value(0, 1), Some(1));
//! let b = metrics::betweenness_centrality(&journals);
//! assert_eq!(b, vec![0.0, 0.0]);
//! ```

pub mod cohesion;
pub mod error;
pub mod export;
pub mod ingest;
pub mod metrics;
pub mod model;
pub mod projection;
pub mod report;

pub use error::{Error, Result};
pub use model::{
    affiliation_stats, ActorId, AffiliationStats, Edge, EventId, NameNormalizer, OneModeNetwork,
    TwoModeNetwork, Vertex,
};
