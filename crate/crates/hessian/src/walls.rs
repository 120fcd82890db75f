//! The induced chamber of the K3 lattice and its 84 walls.

use crate::sx::SxLattice;
use borcherds_engine::{induced_walls, InducedChamber, L26};
use lattice_core::rat::{rat, rat_i, to_rat_vec, Rat};
use lattice_core::PrimitiveEmbedding;

/// Wall classification by the pair (pairing with the interior point,
/// self-pairing).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WallType {
    /// (1, -2): walls of the nef cone, cut by the twenty curve classes.
    Outer,
    /// (2, -1): the ten walls fixed by the Enriques involution.
    Invariant,
    /// (5, -2/3)
    InnerFive,
    /// (4, -2/3)
    InnerFour,
}

pub struct DxChamber {
    pub induced: InducedChamber,
    pub emb: PrimitiveEmbedding,
    /// Wall types aligned with `induced.chamber.pairings`.
    pub types: Vec<WallType>,
}

/// Validate the shipped embedding matrix against the lattice and build the
/// induced chamber with the standard Weyl vector.
pub fn build_dx(sx: &SxLattice, l26: &L26) -> DxChamber {
    let m = borcherds_engine::data::sx_embedding();
    let emb = PrimitiveEmbedding::new(sx.lattice.clone(), l26.lattice.clone(), m, 1)
        .expect("shipped embedding is isometric and primitive");

    // The interior point is the projection of the Weyl vector.
    let h = emb.project_i(&l26.w26);
    assert_eq!(h, to_rat_vec(&sx.h_x), "projection of the Weyl vector");

    let induced = induced_walls(&emb, &l26.w26).expect("complement has roots");
    assert_eq!(induced.chamber.interior, sx.h_x);

    let lat = &sx.lattice;
    let types: Vec<WallType> = induced
        .chamber
        .defining
        .iter()
        .map(|v| {
            let deg = lat.inner_iq(&sx.h_x, v);
            let norm = lat.inner_q(v, v);
            classify(&deg, &norm)
        })
        .collect();
    let dx = DxChamber { induced, emb, types };
    validate_dx(sx, &dx);
    dx
}

fn classify(deg: &Rat, norm: &Rat) -> WallType {
    if deg == &rat_i(1) && norm == &rat_i(-2) {
        WallType::Outer
    } else if deg == &rat_i(2) && norm == &rat_i(-1) {
        WallType::Invariant
    } else if deg == &rat_i(5) && norm == &rat(-2, 3) {
        WallType::InnerFive
    } else if deg == &rat_i(4) && norm == &rat(-2, 3) {
        WallType::InnerFour
    } else {
        panic!("unexpected wall signature ({deg}, {norm})")
    }
}

fn validate_dx(sx: &SxLattice, dx: &DxChamber) {
    let count = |t: &WallType| dx.types.iter().filter(|x| *x == t).count();
    assert_eq!(dx.types.len(), 84, "wall count");
    assert_eq!(count(&WallType::Outer), 20);
    assert_eq!(count(&WallType::Invariant), 10);
    assert_eq!(count(&WallType::InnerFive), 24);
    assert_eq!(count(&WallType::InnerFour), 30);

    // The outer walls are exactly the twenty curve classes.
    let mut outer: Vec<Vec<Rat>> = dx
        .induced
        .chamber
        .defining
        .iter()
        .zip(&dx.types)
        .filter(|(_, t)| **t == WallType::Outer)
        .map(|(v, _)| v.clone())
        .collect();
    let mut classes: Vec<Vec<Rat>> = sx
        .e_classes
        .iter()
        .chain(sx.l_classes.iter())
        .map(|c| to_rat_vec(c))
        .collect();
    outer.sort_by_key(rat_key);
    classes.sort_by_key(rat_key);
    assert_eq!(outer, classes, "outer walls are the node and line classes");

    // The invariant walls are exactly the ten v_alpha.
    let mut invariant: Vec<Vec<Rat>> = dx
        .induced
        .chamber
        .defining
        .iter()
        .zip(&dx.types)
        .filter(|(_, t)| **t == WallType::Invariant)
        .map(|(v, _)| v.clone())
        .collect();
    let mut valphas: Vec<Vec<Rat>> = (0..10).map(|a| sx.v_alpha(a)).collect();
    invariant.sort_by_key(rat_key);
    valphas.sort_by_key(rat_key);
    assert_eq!(invariant, valphas, "invariant walls are the v_alpha");

    // Inner walls carry no root multiple: k^2 * norm = -2 has no integer
    // solution for norms -1 and -2/3.
    for (v, t) in dx.induced.chamber.defining.iter().zip(&dx.types) {
        if *t == WallType::Outer {
            continue;
        }
        let norm = sx.lattice.inner_q(v, v);
        for k in 1i64..=4 {
            assert_ne!(rat_i(k * k) * &norm, rat_i(-2), "inner wall admits a root multiple");
        }
    }

    // Every wall keeps a witnessing root.
    for (i, w) in dx.induced.witnesses.iter().enumerate() {
        assert!(!w.is_empty(), "wall {i} lost its witness");
    }
}

fn rat_key(v: &Vec<Rat>) -> Vec<(num_bigint::BigInt, num_bigint::BigInt)> {
    v.iter().map(|x| (x.numer().clone(), x.denom().clone())).collect()
}
