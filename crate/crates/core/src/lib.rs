//! Exact algorithms for intersection graphs of pseudo-segments.
//!
//! The crate is organized bottom-up:
//!
//! * [`geom`]: exact rational predicates, polyline crossings and the
//!   pseudo-segment validator.
//! * [`graph`]: bitset graphs, densities, homogeneity tests, blow-ups and
//!   regularity partitions.
//! * [`separator`], [`cutting`], [`sweep`]: the geometric routes used for
//!   sparse families (curve separators, vertical cuttings, sweep selection).
//! * [`homog`]: exact and heuristic searches for complete/empty pairs.
//! * [`regularity`]: zooming, homogeneous regularity partitions, the
//!   density/mighty bridges and Rödl-type extraction through cotrees.
//! * [`topo`]: simple topological drawings, disjoint edges, odd crossings,
//!   bisection width and the edge-count bound.
//! * [`instances`], [`format`], [`svg`]: generators, the instance file
//!   format and figure output.

pub mod cutting;
pub mod error;
pub mod format;
pub mod geom;
pub mod graph;
pub mod homog;
pub mod instances;
pub mod regularity;
pub mod separator;
pub mod svg;
pub mod sweep;
pub mod topo;

pub use error::{Error, Result};
pub use geom::{CurveFamily, PolylineCurve, RPoint, Rational};
pub use graph::{PairStatus, SimpleGraph, VSet};
