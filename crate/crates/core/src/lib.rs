//! Solvers for partitioning undirected graphs into highly connected clusters
//! by minimum edge deletion, and for isolating a single highly connected
//! subgraph.
//!
//! A graph on `n` vertices is *highly connected* when its edge connectivity
//! exceeds `n / 2`, or equivalently when every vertex has degree greater than
//! `n / 2`. Singletons count as highly connected; `K2` does not unless
//! [`Convention::k2_is_hc`] is set.
//!
//! The crate provides:
//!
//! * [`hcd`]: exact `O*(2^n)` and parameterized `O*(3^k)` solvers for
//!   Highly Connected Deletion,
//! * [`phcd`]: the bounded-cluster-count variant via k-cut enumeration,
//! * [`subgraph`]: Seeded Highly Connected Edge Deletion and
//!   f-Isolated Highly Connected Subgraph,
//! * [`oracle`]: exhaustive reference solvers used for verification,
//! * [`io`]: the text graph format, fixtures and planted instances.

pub mod context;
pub mod error;
pub mod graph;
pub mod hcd;
pub mod io;
pub mod oracle;
pub mod phcd;
pub mod subgraph;
pub mod subset_conv;

pub use context::{Context, Convention, Stats, StatsSnapshot};
pub use error::{Error, Result};
pub use graph::{Cut, Graph, Partition, VertexSet};
