//! Chamber machinery for hyperbolic lattices: exact-LP wall detection,
//! recursive face enumeration, primitive defining vectors.

pub mod brute;
pub mod chamber;
pub mod faces;
pub mod lp;

pub use chamber::{primitive_dual, Chamber, PointClass};
pub use faces::{face_lattice, Face, FaceLattice};
pub use lp::{defines_wall, minimize_homogeneous, WallVerdict};
