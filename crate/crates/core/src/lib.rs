//! Exact distance-based indices of simple graphs, the extremal families for
//! the Harary index under cut-vertex and connectivity constraints, and an
//! exhaustive small-order harness that checks those extremal claims.
//!
//! ```
//! use harary::{constructions::k_n1_r, metrics::harary_index, ExactRational};
//!
//! let g = k_n1_r(6, 2).unwrap();
//! assert_eq!(harary_index(&g), ExactRational::new(27, 2));
//! ```

pub mod connectivity;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod rational;
pub mod transforms;
pub mod verify;

pub use error::{GraphError, Result};
pub use graph::Graph;
pub use rational::ExactRational;
