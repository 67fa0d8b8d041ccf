//! Zooming, regularity partitions from mighty pairs and back, and the
//! strong-pair recursion with its cograph selection.

pub mod cotree;
pub mod partition;
pub mod rodl;
pub mod zoom;

pub use cotree::{cograph_clique_or_ind, cograph_depth, CographChoice, Cotree};
pub use partition::{
    mighty_from_partition, regularity_partition, PartitionOracle, RefinementState, RefinementTrace, RegularityBackend,
    RegularityOutcome, RoundTally,
};
pub use rodl::{rodl_extract, rodl_levels, RodlTrace};
pub use zoom::{density_to_complete, komlos_sos_zoom, mighty_from_density, DensityOracle, ZoomDensity, ZoomResult};

use num_rational::Rational64;

use crate::error::Result;
use crate::graph::{SimpleGraph, VSet};
use crate::homog::{mighty_pair, strong_pair, HomPair, MightyOutcome, OracleConfig};

/// Homogeneous pair between equal sides with a declared fraction `c`.
pub trait MightyOracle {
    fn c(&self) -> Rational64;
    fn mighty(&self, g: &SimpleGraph, a: &VSet, b: &VSet) -> Result<MightyOutcome>;
}

impl MightyOracle for OracleConfig {
    fn c(&self) -> Rational64 {
        self.c_target
    }

    fn mighty(&self, g: &SimpleGraph, a: &VSet, b: &VSet) -> Result<MightyOutcome> {
        mighty_pair(g, a, b, self, None)
    }
}

/// Homogeneous pair over a whole graph.
pub trait StrongOracle {
    fn strong(&self, g: &SimpleGraph) -> Result<HomPair>;
}

impl StrongOracle for OracleConfig {
    fn strong(&self, g: &SimpleGraph) -> Result<HomPair> {
        strong_pair(g, self)
    }
}
