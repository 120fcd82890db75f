//! Exact lattice arithmetic over the integers and rationals.
//!
//! Everything here works with row vectors: a lattice of rank `n` is `Z^n`
//! with a symmetric integer Gram matrix, vectors pair via `x * G * y^T`,
//! and isometries act from the right, `x -> x * M`.
//!
//! No floating point appears in any correctness-bearing path; the short
//! vector enumerator uses arbitrary-precision rational preprocessing and an
//! overflow-checked integer core with a big-integer fallback.

pub mod disc;
pub mod embed;
pub mod enumerate;
mod error;
pub mod lattice;
pub mod mat;
pub mod rat;
pub mod snf;

pub use disc::{disc_action, DiscAction, DiscriminantGroup};
pub use embed::PrimitiveEmbedding;
pub use enumerate::{
    norm_pairing_vectors, norm_pairing_vectors_multi, roots_between, short_vectors,
    PairingScanner, ShellCtx,
};
pub use error::LatticeError;
pub use lattice::{reflection, IntegerLattice, Isometry, SignatureKind};
pub use mat::{IMat, QMat, ZMat};
pub use rat::{rat, rat_i, Rat};
