//! Knot projections on the sphere.

pub mod codec;
pub mod curve;
pub mod invariants;
pub mod moves;
pub mod reduction;
pub mod resolution;

pub use curve::{CanonicalKey, CurveError, Face, PlanarCurve, Sign, SignedGaussCode};
pub use moves::{MoveKind, MoveSite};
pub use resolution::{positive_resolution, KnotDiagram};
