//! Walls of an induced chamber from a Weyl vector.
//!
//! For a primitive embedding of a hyperbolic lattice S into L26 (possibly
//! rescaling the form), the chamber induced by a Conway chamber with Weyl
//! vector w is cut out by the projections of the L26 roots r with
//! <r, w> = 1 whose projections have negative self-pairing. Each such root
//! splits as r = r_S + r_R over the duals of S and of its orthogonal
//! complement R; the finite enumeration runs over r_R with
//! -2 < <r_R, r_R> <= 0 and, for each, over r_S with prescribed norm and
//! pairing, keeping the pairs whose sum is integral in L26. Every wall
//! retains one witnessing root.

use chamber_engine::Chamber;
use lattice_core::mat::{qvec_mat, QMat};
use lattice_core::rat::{
    denom_lcm, is_int, primitive_integer_direction, rat_i, to_rat_vec, Rat,
};
use lattice_core::{IntegerLattice, Isometry, PairingScanner, PrimitiveEmbedding, ShellCtx};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InducedError {
    #[error("orthogonal complement has no roots; wall enumeration hypothesis fails")]
    RootlessComplement,
    #[error("weyl vector must pair to 1 with the witnessed roots (got {0})")]
    BadWitness(String),
}

pub struct InducedChamber {
    /// Wall-only chamber in the source lattice.
    pub chamber: Chamber,
    /// One witnessing L26 root per wall, aligned with `chamber.pairings`.
    pub witnesses: Vec<Vec<i64>>,
}

/// Compute the walls of the chamber of the source lattice induced by the
/// Conway chamber with the given Weyl vector.
pub fn induced_walls(
    emb: &PrimitiveEmbedding,
    weyl: &[i64],
) -> Result<InducedChamber, InducedError> {
    let own = &emb.source;
    let l26 = &emb.target;
    let s = emb.scale;

    // Orthogonal complement R with its dual form.
    let (r_lat, r_basis) = emb
        .complement_lattice(lattice_core::SignatureKind::NegativeDefinite)
        .expect("complement of a hyperbolic sublattice of L26 is negative definite");
    let r_roots = lattice_core::short_vectors(&r_lat, -2).expect("complement enumeration");
    if r_roots.is_empty() {
        return Err(InducedError::RootlessComplement);
    }
    let r_gram_inv = r_lat.gram_inv().clone();

    // Projections of the Weyl vector.
    let y_s = emb.project_i(weyl); // source coordinates
    let r_emb = PrimitiveEmbedding::new(r_lat.clone(), l26.clone(), r_basis.clone(), 1)
        .expect("complement embeds primitively");
    let y_r = r_emb.project_i(weyl); // complement coordinates

    // Dual form on pairing coordinates: z * G_e^{-1} * z^T with G_e = s*G.
    let g_emb_inv = {
        let mut m = own.gram_inv().clone();
        let f = Rat::new(1.into(), s.into());
        for x in m.a.iter_mut() {
            *x = x.clone() * &f;
        }
        m
    };
    // Functional z -> <r_S, pr_S(weyl)>_26 = z · y_s; clear denominators.
    let d_ell = denom_lcm(&y_s);
    let ell: Vec<i64> = y_s
        .iter()
        .map(|v| i64::try_from(&(v * Rat::from(d_ell.clone())).to_integer()).expect("ell fits"))
        .collect();
    let d_ell_q = Rat::from(d_ell);
    let scanner = PairingScanner::new(&g_emb_inv, &ell)
        .expect("projection functional must have definite kernel");

    // r_R candidates: 0 and every dual vector of norm in (-2, 0).
    let mut t_candidates: Vec<Vec<i64>> = vec![vec![0; r_lat.rank]];
    let ctx = ShellCtx::for_negdef(&r_gram_inv).expect("dual of definite lattice");
    let zero_center = vec![Rat::zero(); r_lat.rank];
    ctx.scan_ball(&zero_center, &rat_i(2), |t, q| {
        if !q.is_zero() && q < &rat_i(2) {
            t_candidates.push(t.to_vec());
        }
    });
    t_candidates.sort();

    // Enumerate candidate wall vectors with witnesses, keyed by the
    // primitive pairing direction.
    let mut candidates: BTreeMap<Vec<i64>, (Vec<Rat>, Vec<i64>)> = BTreeMap::new();
    let m_q = emb.matrix.to_q();
    for t in &t_candidates {
        let t_q = to_rat_vec(t);
        let n_r = {
            let row = QMat::from_rows(&[t_q.clone()]);
            row.mul(&r_gram_inv).mul(&row.transpose())[(0, 0)].clone()
        };
        let a = -rat_i(2) - &n_r; // target <r_S, r_S>_26, in [-2, 0)
        if !a.is_negative() {
            continue;
        }
        let b = rat_i(1)
            - t.iter().zip(&y_r).map(|(&ti, yi)| rat_i(ti) * yi).sum::<Rat>();
        if !(&b).is_positive() {
            // interior positivity: <r_S, pr_S w> must be positive on walls
            continue;
        }
        // r_R in L26 coordinates.
        let r_r_coords = {
            let row = QMat::from_rows(&[t_q]);
            let dual = row.mul(&r_gram_inv);
            qvec_mat(dual.row(0), &r_basis)
        };
        scanner.scan(&a, &(&b * &d_ell_q), |z| {
            // r_S in source then L26 coordinates.
            let zq = to_rat_vec(z);
            let v = {
                let row = QMat::from_rows(&[zq]);
                row.mul(&g_emb_inv).row(0).to_vec()
            };
            let v26 = {
                let row = QMat::from_rows(&[v.clone()]);
                row.mul(&m_q).row(0).to_vec()
            };
            let total: Vec<Rat> =
                v26.iter().zip(&r_r_coords).map(|(a, b)| a + b).collect();
            if !total.iter().all(is_int) {
                return; // glue condition fails: not an L26 vector
            }
            let witness: Vec<i64> = total
                .iter()
                .map(|x| i64::try_from(&x.to_integer()).expect("witness fits i64"))
                .collect();
            debug_assert_eq!(l26.inner(&witness, &witness), -2);
            debug_assert_eq!(l26.inner(&witness, weyl), 1);
            let key = lattice_core::rat::primitive_part(z).expect("nonzero wall vector");
            candidates.entry(key).or_insert((v, witness));
        });
    }

    // Interior point: the projection of the Weyl vector.
    let interior = primitive_integer_direction(&y_s).expect("weyl projects to nonzero");
    let defining: Vec<Vec<Rat>> = candidates.values().map(|(v, _)| v.clone()).collect();
    let full = Chamber::new(own, &defining, interior);
    let wall_idx = full.wall_indices();

    let mut wall_defining = Vec::new();
    let mut witnesses = Vec::new();
    for &i in &wall_idx {
        wall_defining.push(full.defining[i].clone());
        // Candidate keys are primitive parts of z = v * (s G); the chamber
        // key is the primitive part of v * G: same direction, same key.
        let key = full.pairings[i].clone();
        let (_, w) = candidates
            .get(&key)
            .unwrap_or_else(|| panic!("witness lookup failed for wall {i}"));
        witnesses.push(w.clone());
    }
    let chamber = Chamber::new(own, &wall_defining, full.interior.clone());
    // Chamber::new sorts by pairing covector; realign witnesses.
    let mut aligned = vec![Vec::new(); chamber.pairings.len()];
    for (v, w) in wall_defining.iter().zip(witnesses.iter()) {
        let p = qvec_mat(v, &own.gram);
        let prim = primitive_integer_direction(&p).unwrap();
        let pos = chamber.pairings.iter().position(|q| q == &prim).expect("wall present");
        aligned[pos] = w.clone();
    }
    Ok(InducedChamber { chamber, witnesses: aligned })
}

/// Adjacency certificate: `g` maps the chamber to the induced chamber
/// adjacent across the wall `v` exactly when `v^g = -v` and the image of
/// the interior point pairs positively with every other wall.
pub fn verify_adjacent(
    lat: &IntegerLattice,
    chamber: &Chamber,
    wall_index: usize,
    g: &Isometry,
) -> bool {
    assert!(wall_index < chamber.pairings.len(), "not a wall of the chamber");
    let v = &chamber.defining[wall_index];
    let vg = g.apply_q(v);
    let neg: Vec<Rat> = v.iter().map(|x| -x.clone()).collect();
    if vg != neg {
        return false;
    }
    let hg = g.apply(&chamber.interior);
    for (i, p) in chamber.pairings.iter().enumerate() {
        if i == wall_index {
            continue;
        }
        if lattice_core::mat::dot(p, &hg) <= 0 {
            return false;
        }
    }
    let _ = lat;
    true
}
