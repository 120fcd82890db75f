//! Finite matrix groups over the two-element field, kernel generators via
//! the Reidemeister-Schreier method, and Salem-polynomial entropy analysis
//! of lattice isometries.

pub mod f2;
pub mod sims;

pub use f2::{mod2, standard_form, F2Mat, QuadraticForm};
pub use sims::{group_order, stabilizer_chain, StabilizerChain};
