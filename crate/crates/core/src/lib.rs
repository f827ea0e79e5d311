//! Enumeration of maximal antagonistic k-plexes in undirected signed
//! graphs: a plex over all edges that splits into two camps, positive
//! edges inside a camp, negative edges across, each camp of size at least
//! `t` and itself a positive-edge k-plex.

pub mod colorbound;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod params;
pub mod preprocess;

pub use enumerate::{format_results, Algo, AntagonisticPlex, RunConfig, RunReport, SearchNode};
pub use error::{Error, Result};
pub use graph::{load_signed_edge_list, SignedGraph, VertexId};
pub use params::Params;
