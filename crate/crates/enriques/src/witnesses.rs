//! Lattice-side witnesses for the faithfulness of the automorphism action:
//! three disjoint curve walls, a degree-5 curve meeting each of them once,
//! and a fibration whose fiber meets that curve in twelve points.

use crate::context::EnriquesContext;
use crate::curves::CurveTable;
use crate::faces::FaceData;

pub const C0: [i64; 10] = [1, 1, -1, 1, 0, -1, -1, -1, -1, -1];
pub const FIBER_HALF: [i64; 10] = [2, 2, -6, -5, -9, -12, -9, -6, -4, -2];

pub struct WitnessReport {
    pub disjoint_ok: bool,
    pub c0_in_degree5: bool,
    pub c0_pairings_ok: bool,
    pub fiber_is_ideal_ray: bool,
    pub fiber_pairing: i64,
}

impl WitnessReport {
    pub fn all_ok(&self) -> bool {
        self.disjoint_ok
            && self.c0_in_degree5
            && self.c0_pairings_ok
            && self.fiber_is_ideal_ray
            && self.fiber_pairing == 12
    }
}

pub fn autinj_witnesses(
    ctx: &EnriquesContext,
    curves: &CurveTable,
    fd: &FaceData,
) -> WitnessReport {
    use hessian_k3::indices::{triple_index, TRIPLES};
    let c1 = &ctx.u_bar[triple_index(&[1, 2, 3])];
    let c2 = &ctx.u_bar[triple_index(&[1, 3, 4])];
    let c3 = &ctx.u_bar[triple_index(&[1, 3, 5])];
    let _ = TRIPLES;
    let disjoint_ok = ctx.sy.inner(c1, c2) == 0
        && ctx.sy.inner(c1, c3) == 0
        && ctx.sy.inner(c2, c3) == 0;

    let c0 = C0.to_vec();
    let c0_in_degree5 =
        curves.by_degree.get(&5).map(|l| l.binary_search(&c0).is_ok()).unwrap_or(false);
    let c0_pairings_ok = ctx.sy.inner(&c0, c1) == 1
        && ctx.sy.inner(&c0, c2) == 1
        && ctx.sy.inner(&c0, c3) == 1;

    let f = FIBER_HALF.to_vec();
    let mut fiber_is_ideal_ray = ctx.sy.inner(&f, &f) == 0;
    // the printed vector must be one of the ideal rays of the chamber
    let mut found = false;
    for face in fd.lattice.by_dim[1].values() {
        if face.ideal && face.ray.as_ref() == Some(&f) {
            found = true;
            break;
        }
    }
    fiber_is_ideal_ray &= found;
    let fiber_pairing = 2 * ctx.sy.inner(&c0, &f);

    WitnessReport { disjoint_ok, c0_in_degree5, c0_pairings_ok, fiber_is_ideal_ray, fiber_pairing }
}
