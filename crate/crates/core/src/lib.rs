//! Cubulation of finite spaces with walls.
//!
//! Given a finite set of points and a family of bipartitions (walls), the
//! crate builds the median graph of coherent wall orientations
//! (ultrafilters), fills cubes over it to obtain the combinatorial cube
//! complex, and verifies the structural properties of the construction:
//! medianness, metric coincidence, span by the principal vertices, the
//! halfspace bijection, and idempotence on median graphs. Morphisms of wall
//! spaces push forward to median morphisms of the cubulations, and group
//! actions extend to graph automorphisms.

pub mod cubecomplex;
pub mod cubulation;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod morphism;
pub mod random;
pub mod ultrafilter;
pub mod verify;
pub mod wallspace;

pub use cubecomplex::{fill_cubes, Cube, CubeComplex};
pub use cubulation::{cubulate, enumerate_oracle, MedianGraph};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use morphism::{GroupAction, InducedMap, WallMap};
pub use ultrafilter::Orientation;
pub use verify::{Counterexample, Scope, VerificationReport};
pub use wallspace::{PointSet, RawWallSpace, WallSet, WallSpace};
