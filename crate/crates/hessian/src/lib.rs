//! The general quartic Hessian K3 surface on the lattice side: the rank-16
//! Neron-Severi lattice, its distinguished chamber, the Enriques
//! involution, and the ten chamber-moving involutions.

pub mod external;
pub mod galpha;
pub mod indices;
pub mod involution;
pub mod sx;
pub mod walls;

use borcherds_engine::L26;
use lattice_core::Isometry;

pub use involution::{chamber_symmetries, enriques_involution, period_compatible};
pub use sx::{build_sx, SxLattice};
pub use walls::{build_dx, DxChamber, WallType};

/// Everything the quotient-surface side consumes, built and validated in
/// one pass.
pub struct HessianContext {
    pub sx: SxLattice,
    pub l26: L26,
    pub dx: DxChamber,
    pub symmetries: Vec<involution::ChamberSymmetry>,
    pub involution: involution::EnriquesInvolution,
    pub g_alphas: Vec<Isometry>,
    pub refl_e: Vec<Isometry>,
    pub refl_l: Vec<Isometry>,
}

impl HessianContext {
    pub fn build() -> Self {
        let sx = build_sx();
        let l26 = borcherds_engine::build_l26().expect("L26 data");
        let dx = build_dx(&sx, &l26);
        let symmetries = chamber_symmetries(&sx);
        let involution = enriques_involution(&sx, &symmetries);
        let g_alphas = galpha::g_alphas(&sx, &involution.g);
        let (refl_e, refl_l) = galpha::curve_reflections(&sx);
        HessianContext { sx, l26, dx, symmetries, involution, g_alphas, refl_e, refl_l }
    }

    /// Index of the wall cut by `v_alpha(alpha_idx)` in the chamber's wall
    /// list.
    pub fn v_alpha_wall_index(&self, alpha_idx: usize) -> usize {
        let v = self.sx.v_alpha(alpha_idx);
        let p = lattice_core::mat::qvec_mat(&v, &self.sx.lattice.gram);
        let prim = lattice_core::rat::primitive_integer_direction(&p).unwrap();
        self.dx
            .induced
            .chamber
            .pairings
            .iter()
            .position(|q| q == &prim)
            .expect("v_alpha is a wall")
    }
}
