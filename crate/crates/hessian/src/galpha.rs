//! The ten chamber-moving involutions attached to the nodes, built from
//! their fixed eigenspaces, plus the reflections in the curve classes.

use crate::indices::*;
use crate::sx::{SxLattice, RANK};
use lattice_core::mat::{IMat, QMat};
use lattice_core::rat::rat_i;
use lattice_core::{reflection, Isometry};

/// Fixed-space basis of the involution attached to a node: the pulled-back
/// line system of the double plane through that node. One row per class:
/// the polarization minus the node, the three lines through the node, the
/// three sums of node pairs sharing those lines, and the three nodes on
/// the complementary line.
fn fixed_space_rows(sx: &SxLattice, alpha_idx: usize) -> IMat {
    let alpha = TRIPLES[alpha_idx];
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(10);
    let sub = |a: &[i64], b: &[i64]| -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    };
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    };
    rows.push(sub(&sx.h_q, &sx.e_classes[alpha_idx]));
    // pairs inside alpha, lex order
    let mut inner_pairs: Vec<[u8; 2]> = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let mut p = [alpha[i], alpha[j]];
            p.sort();
            inner_pairs.push(p);
        }
    }
    inner_pairs.sort();
    for p in &inner_pairs {
        rows.push(sx.l_classes[pair_index(p)].clone());
    }
    for p in &inner_pairs {
        // the two other triples containing p
        let others: Vec<usize> = TRIPLES
            .iter()
            .enumerate()
            .filter(|(i, t)| *i != alpha_idx && contains(t, p))
            .map(|(i, _)| i)
            .collect();
        assert_eq!(others.len(), 2);
        rows.push(add(&sx.e_classes[others[0]], &sx.e_classes[others[1]]));
    }
    let abar = complement(&alpha);
    let through: Vec<usize> = TRIPLES
        .iter()
        .enumerate()
        .filter(|(_, t)| contains(t, &abar))
        .map(|(i, _)| i)
        .collect();
    assert_eq!(through.len(), 3);
    for i in through {
        rows.push(sx.e_classes[i].clone());
    }
    IMat::from_rows(&rows)
}

/// The involution acting as +1 on the given row space and -1 on its
/// orthogonal complement: `2 G B^T (B G B^T)^{-1} B - 1`, which must come
/// out integral.
pub fn involution_from_fixed_space(sx: &SxLattice, basis: &IMat) -> Isometry {
    let b = basis.to_q();
    let g = sx.lattice.gram.to_q();
    let bgbt = b.mul(&g).mul(&b.transpose());
    let inv = bgbt.inverse().expect("fixed space is nondegenerate");
    let proj = g.mul(&b.transpose()).mul(&inv).mul(&b);
    let mut m = QMat::zero(RANK, RANK);
    for i in 0..RANK {
        for j in 0..RANK {
            let two = rat_i(2) * &proj[(i, j)];
            m[(i, j)] = two - rat_i(i64::from(i == j));
        }
    }
    let mi = m.to_i().expect("eigenspace data must give an integral matrix");
    Isometry::new(&sx.lattice, mi).expect("constructed involution is an isometry")
}

/// Build the ten node involutions, with their defining checks.
pub fn g_alphas(sx: &SxLattice, g_eps: &Isometry) -> Vec<Isometry> {
    (0..10)
        .map(|a| {
            let basis = fixed_space_rows(sx, a);
            assert_eq!(basis.to_q().rank(), 10, "fixed space has dimension 10");
            let g = involution_from_fixed_space(sx, &basis);
            assert!(g.compose(&g).is_identity());
            assert_eq!(
                g.compose(g_eps).m,
                g_eps.compose(&g).m,
                "node involution commutes with the Enriques involution"
            );
            let v = sx.v_alpha(a);
            let vg = g.apply_q(&v);
            let neg: Vec<_> = v.iter().map(|x| -x.clone()).collect();
            assert_eq!(vg, neg, "node involution flips its wall vector");
            g
        })
        .collect()
}

/// Reflections in the twenty curve classes, indexed (nodes, lines).
pub fn curve_reflections(sx: &SxLattice) -> (Vec<Isometry>, Vec<Isometry>) {
    let e: Vec<Isometry> = sx
        .e_classes
        .iter()
        .map(|c| reflection(&sx.lattice, c).expect("node class is a root"))
        .collect();
    let l: Vec<Isometry> = sx
        .l_classes
        .iter()
        .map(|c| reflection(&sx.lattice, c).expect("line class is a root"))
        .collect();
    (e, l)
}

/// The composite reflection in a node class and its complementary line
/// class; it commutes with the Enriques involution and restricts to the
/// quotient lattice.
pub fn paired_reflection(
    _sx: &SxLattice,
    refl_e: &[Isometry],
    refl_l: &[Isometry],
    alpha_idx: usize,
    g_eps: &Isometry,
) -> Isometry {
    let abar = complement(&TRIPLES[alpha_idx]);
    let s = refl_e[alpha_idx].compose(&refl_l[pair_index(&abar)]);
    assert_eq!(s.compose(g_eps).m, g_eps.compose(&s).m, "composite commutes");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::{chamber_symmetries, enriques_involution};
    use crate::sx::build_sx;

    #[test]
    fn galpha_basics() {
        let sx = build_sx();
        let group = chamber_symmetries(&sx);
        let inv = enriques_involution(&sx, &group);
        let gs = g_alphas(&sx, &inv.g);
        assert_eq!(gs.len(), 10);
    }

    #[test]
    fn reflections_negate_their_roots() {
        let sx = build_sx();
        let (re, rl) = curve_reflections(&sx);
        for (i, r) in re.iter().enumerate() {
            let img = r.apply(&sx.e_classes[i]);
            let neg: Vec<i64> = sx.e_classes[i].iter().map(|&x| -x).collect();
            assert_eq!(img, neg);
        }
        for (j, r) in rl.iter().enumerate() {
            let img = r.apply(&sx.l_classes[j]);
            let neg: Vec<i64> = sx.l_classes[j].iter().map(|&x| -x).collect();
            assert_eq!(img, neg);
        }
        // fixed hyperplane: a vector orthogonal to the root is fixed
        let r = &re[0];
        let x = &sx.e_classes[1];
        assert_eq!(sx.lattice.inner(x, &sx.e_classes[0]), 0);
        assert_eq!(r.apply(x), *x);
    }

    #[test]
    fn paired_reflection_commutes() {
        let sx = build_sx();
        let group = chamber_symmetries(&sx);
        let inv = enriques_involution(&sx, &group);
        let (re, rl) = curve_reflections(&sx);
        for a in 0..10 {
            let _ = paired_reflection(&sx, &re, &rl, a, &inv.g);
        }
    }
}
