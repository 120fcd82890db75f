//! The chamber automorphism group, the Enriques involution, and its fixed
//! and anti-fixed sublattices.

use crate::indices::*;
use crate::sx::{SxLattice, RANK};
use borcherds_engine::data;
use lattice_core::disc::{disc_action, discriminant_group, DiscriminantGroup};
use lattice_core::mat::{IMat, QMat, ZMat};
use lattice_core::rat::to_rat_vec;
use lattice_core::snf;
use lattice_core::{IntegerLattice, Isometry};

/// An element of the chamber symmetry group: a permutation of {1..5}
/// optionally composed with the node/line switch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSymmetry {
    pub perm: [u8; 5],
    pub switched: bool,
    pub isometry: Isometry,
}

/// Matrix of the class map sending each node class to `e_img` and each
/// line class to `l_img` (class-table indices).
fn class_map_matrix(
    _sx: &SxLattice,
    e_img: impl Fn(usize) -> Vec<i64>,
    l_img: impl Fn(usize) -> Vec<i64>,
) -> IMat {
    let mut rows = Vec::with_capacity(RANK);
    for i in 0..10 {
        rows.push(e_img(i));
    }
    for bp in &BASIS_PAIRS {
        rows.push(l_img(pair_index(bp)));
    }
    IMat::from_rows(&rows)
}

/// The full order-240 symmetry group of the chamber: permutations of the
/// index set composed with the switch, realized as lattice isometries.
/// Every element fixes the interior point.
pub fn chamber_symmetries(sx: &SxLattice) -> Vec<ChamberSymmetry> {
    let mut out = Vec::new();
    for perm in all_permutations() {
        for switched in [false, true] {
            let e_img = |i: usize| -> Vec<i64> {
                let t = apply_perm_triple(&perm, &TRIPLES[i]);
                if switched {
                    sx.l_classes[pair_index(&complement(&t))].clone()
                } else {
                    sx.e_classes[triple_index(&t)].clone()
                }
            };
            let l_img = |j: usize| -> Vec<i64> {
                let p = apply_perm_pair(&perm, &PAIRS[j]);
                if switched {
                    sx.e_classes[triple_index(&complement_pair(&p))].clone()
                } else {
                    sx.l_classes[pair_index(&p)].clone()
                }
            };
            let m = class_map_matrix(sx, e_img, l_img);
            let iso = Isometry::new(&sx.lattice, m).expect("class permutation is an isometry");
            assert_eq!(iso.apply(&sx.h_x), sx.h_x, "chamber symmetries fix the interior point");
            out.push(ChamberSymmetry { perm, switched, isometry: iso });
        }
    }
    assert_eq!(out.len(), 240);
    // distinctness
    let mut mats: Vec<&IMat> = out.iter().map(|c| &c.isometry.m).collect();
    mats.sort_by_key(|m| m.a.clone());
    mats.dedup();
    assert_eq!(mats.len(), 240, "the 240 symmetries are distinct");
    out
}

/// The symmetries whose discriminant action is plus or minus the identity.
pub fn period_compatible(
    sx: &SxLattice,
    disc: &DiscriminantGroup,
    group: &[ChamberSymmetry],
) -> Vec<usize> {
    group
        .iter()
        .enumerate()
        .filter(|(_, g)| {
            disc_action(&sx.lattice, disc, &g.isometry).is_plus_minus_identity(disc)
        })
        .map(|(i, _)| i)
        .collect()
}

pub struct EnriquesInvolution {
    pub g: Isometry,
    /// Basis of the fixed sublattice (rows), chosen so its Gram matrix is
    /// twice the standard rank-10 even unimodular hyperbolic Gram matrix.
    pub plus_basis: IMat,
    /// Basis of the anti-fixed sublattice.
    pub minus_basis: IMat,
    pub minus: IntegerLattice,
    /// The 72 norm -4 vectors of the anti-fixed sublattice, in ambient
    /// coordinates.
    pub t_set: Vec<Vec<i64>>,
}

/// Build the Enriques involution from the shipped matrix, cross-check it
/// against the switch construction, and compute both eigenlattices.
pub fn enriques_involution(sx: &SxLattice, group: &[ChamberSymmetry]) -> EnriquesInvolution {
    let table = data::enriques_involution_matrix();
    let g = Isometry::new(&sx.lattice, table).expect("shipped involution is an isometry");
    assert!(g.compose(&g).is_identity(), "involution squares to the identity");

    // Must agree with the identity-permutation switch.
    let switch = group
        .iter()
        .find(|c| c.perm == [1, 2, 3, 4, 5] && c.switched)
        .expect("switch element present");
    assert_eq!(switch.isometry.m, g.m, "shipped matrix equals the switch construction");

    // Fixed sublattice: saturated kernel of (g - 1).
    let mut gm1 = ZMat::zero(RANK, RANK);
    let mut gp1 = ZMat::zero(RANK, RANK);
    for i in 0..RANK {
        for j in 0..RANK {
            let v = g.m[(i, j)];
            gm1[(i, j)] = num_bigint::BigInt::from(v - i64::from(i == j));
            gp1[(i, j)] = num_bigint::BigInt::from(v + i64::from(i == j));
        }
    }
    let plus_kernel = snf::left_kernel(&gm1).to_i().unwrap();
    let minus_kernel = snf::left_kernel(&gp1).to_i().unwrap();
    assert_eq!(plus_kernel.rows, 10);
    assert_eq!(minus_kernel.rows, 6);

    // The shipped basis must span the same sublattice and have Gram matrix
    // twice the standard one.
    let plus_basis = data::sx_plus_basis();
    for r in 0..10 {
        let row = plus_basis.row(r).to_vec();
        assert_eq!(g.apply(&row), row, "plus basis row fixed by the involution");
    }
    assert!(same_row_lattice(&plus_basis, &plus_kernel), "plus basis spans the fixed lattice");
    let plus_gram = plus_basis.mul(&sx.lattice.gram).mul(&plus_basis.transpose());
    let l10 = borcherds_engine::build_l10();
    let mut twice = l10.lattice.gram.clone();
    for x in twice.a.iter_mut() {
        *x *= 2;
    }
    assert_eq!(plus_gram, twice, "fixed lattice is the rank-10 lattice with doubled form");

    let minus_gram = minus_kernel.mul(&sx.lattice.gram).mul(&minus_kernel.transpose());
    let minus = IntegerLattice::negative_definite(minus_gram).expect("anti-fixed lattice");
    let disc_minus = discriminant_group(&minus);
    assert_eq!(disc_minus.order(), num_bigint::BigInt::from(192), "2^6 * 3");
    let shorts = lattice_core::short_vectors(&minus, -4).expect("enumeration");
    assert!(shorts.iter().all(|(_, n)| *n == -4), "anti-fixed lattice has no roots");
    let norm4: Vec<Vec<i64>> = shorts
        .iter()
        .map(|(y, _)| lattice_core::mat::vec_mat(y, &minus_kernel))
        .collect();
    assert_eq!(norm4.len(), 72);

    EnriquesInvolution {
        g,
        plus_basis,
        minus_basis: minus_kernel,
        minus,
        t_set: norm4,
    }
}

/// Do two full-rank integer row sets generate the same lattice?
fn same_row_lattice(a: &IMat, b: &IMat) -> bool {
    expressible(a, b) && expressible(b, a)
}

/// Every row of `a` is an integer combination of the rows of `b`.
fn expressible(a: &IMat, b: &IMat) -> bool {
    let bq = b.to_q();
    let bt = bq.transpose();
    let gram = bq.mul(&bt);
    for r in 0..a.rows {
        let row = QMat::from_rows(&[to_rat_vec(a.row(r))]);
        let rhs = bq.mul(&row.transpose());
        let Some(x) = gram.solve(&rhs) else { return false };
        if !x.is_integral() {
            return false;
        }
        // confirm the combination reproduces the row exactly
        let back = x.transpose().mul(&bq);
        if back != row {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sx::build_sx;

    #[test]
    fn involution_and_eigenlattices() {
        let sx = build_sx();
        let group = chamber_symmetries(&sx);
        let inv = enriques_involution(&sx, &group);
        assert_eq!(inv.t_set.len(), 72);
        for t in &inv.t_set {
            assert_eq!(sx.lattice.inner(t, t), -4);
            let img = inv.g.apply(t);
            let neg: Vec<i64> = t.iter().map(|&x| -x).collect();
            assert_eq!(img, neg, "t-vectors are anti-fixed");
        }
    }

    #[test]
    fn exactly_two_period_compatible() {
        let sx = build_sx();
        let disc = discriminant_group(&sx.lattice);
        let group = chamber_symmetries(&sx);
        let good = period_compatible(&sx, &disc, &group);
        assert_eq!(good.len(), 2);
        for &i in &good {
            let c = &group[i];
            // identity or the pure switch
            assert_eq!(c.perm, [1, 2, 3, 4, 5]);
        }
        // an explicit non-example: the transposition (1 2)
        let transposition = group
            .iter()
            .find(|c| c.perm == [2, 1, 3, 4, 5] && !c.switched)
            .unwrap();
        let act = disc_action(&sx.lattice, &disc, &transposition.isometry);
        assert!(!act.is_plus_minus_identity(&disc));
    }
}
