//! Causal disc- and sphere-slices, their coloured midsections, and the
//! bijection between the two.
//!
//! * [`surface`]: coloured 2D cell complexes (candidate midsections).
//! * [`conditions`]: the membership conditions, with brute-force oracles.
//! * [`causal3d`]: coloured 3D simplicial complexes and slice validation.
//! * [`midsection`]: slice to midsection.
//! * [`reconstruct`]: midsection to slice, and the slice builders.
//! * [`enumerate`]: isomorph-free census of both sides.

pub mod causal3d;
pub mod conditions;
pub mod enumerate;
pub mod fixtures;
pub mod midsection;
pub mod reconstruct;
pub mod surface;
mod union_find;

pub use causal3d::{build_complex3, CVertex, Complex3, SliceKind};
pub use conditions::{membership, ConditionReport, MidsectionKind};
pub use surface::{build_complex, BuildError, Cell, CellKind, Colour, SurfaceComplex, Topology, TopologyClass, Vertex};
