//! Borcherds chamber machinery over L26 = U ⊕ Leech: distinguished lattice
//! constants, Leech-vector roots, induced-chamber wall computation and
//! adjacency certificates.

pub mod data;
pub mod induced;
pub mod unimodular;

pub use induced::{induced_walls, verify_adjacent, InducedChamber, InducedError};
pub use unimodular::{build_l10, build_l26, e8_gram, leech_root, u_gram, L10, L26};
