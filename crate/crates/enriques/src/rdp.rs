//! Configurations of smooth rational curves contractible to rational
//! double points, classified up to automorphisms.
//!
//! For a non-ideal face F of the chamber, the contracted curve system is
//! the set of curve classes vanishing on F. A class orthogonal to F has
//! degree at most sqrt(2 * |N|) where N is the norm of the component of
//! the polarization orthogonal to the span of F, so a finite curve table
//! suffices and completeness is guaranteed by that bound. The
//! configurations are the maximal faces under "face of, with the same
//! curve system", grouped into equivalence classes.

use crate::ade::{classify_finite_component, components, AdeType};
use crate::context::EnriquesContext;
use crate::curves::CurveTable;
use crate::faces::FaceData;
use lattice_core::rat::{floor_sqrt, rat_i, to_rat_vec, Rat};
use lattice_core::mat::QMat;
use std::collections::BTreeMap;

/// Degree bound for curves orthogonal to a face: from the Cauchy-Schwarz
/// inequality in the negative-definite complement of the face span.
fn face_degree_bound(ctx: &EnriquesContext, span: &lattice_core::mat::IMat) -> i64 {
    let b = span.to_q();
    let g = ctx.sy.gram.to_q();
    let bgbt = b.mul(&g).mul(&b.transpose());
    let inv = bgbt.inverse().expect("face span is nondegenerate");
    let hq = QMat::from_rows(&[to_rat_vec(&ctx.h_y)]);
    let coef = hq.mul(&g).mul(&b.transpose()).mul(&inv);
    let h_f = coef.mul(&b);
    let norm_hf = h_f.mul(&g).mul(&h_f.transpose())[(0, 0)].clone();
    let perp = norm_hf - rat_i(10);
    assert!(perp >= Rat::from_integer(0.into()));
    i64::try_from(&floor_sqrt(&(perp * rat_i(2)))).expect("bound fits")
}

/// Largest curve degree any face can need.
pub fn rdp_degree_bound(ctx: &EnriquesContext, fd: &FaceData) -> i64 {
    let mut max = 0;
    for dim in 1..fd.lattice.rank {
        for face in fd.lattice.by_dim[dim].values() {
            if face.ideal {
                continue;
            }
            max = max.max(face_degree_bound(ctx, &face.span));
        }
    }
    max
}

pub struct RdpConfigurations {
    /// (ADE type, number of equivalence classes), sorted by descending
    /// rank then type.
    pub rows: Vec<(AdeType, usize)>,
    pub total_classes: usize,
}

pub fn rdp_configurations(
    ctx: &EnriquesContext,
    fd: &FaceData,
    curves: &CurveTable,
) -> RdpConfigurations {
    // R(F) per non-ideal face, keyed by (dim, active); empty systems are
    // recorded only for the inner-face consistency check.
    let mut systems: BTreeMap<(usize, u64), Vec<Vec<i64>>> = BTreeMap::new();
    for dim in 1..fd.lattice.rank {
        for (&active, face) in &fd.lattice.by_dim[dim] {
            if face.ideal {
                continue;
            }
            let bound = face_degree_bound(ctx, &face.span);
            assert!(
                curves.max_degree() >= bound,
                "curve table reaches degree {} but the face needs {bound}",
                curves.max_degree()
            );
            let mut sys: Vec<Vec<i64>> = Vec::new();
            'curve: for (_, r) in curves.up_to(bound) {
                for row in 0..face.span.rows {
                    if ctx.sy.inner(face.span.row(row), r) != 0 {
                        continue 'curve;
                    }
                }
                sys.push(r.clone());
            }
            if fd.is_outer(active) {
                assert!(!sys.is_empty(), "outer faces contract at least one curve");
            } else {
                assert!(sys.is_empty(), "inner faces contract no curve");
                continue;
            }
            sys.sort();
            systems.insert((dim, active), sys);
        }
    }

    // Group faces by curve system; keep the maximal ones. F is a face of
    // F' exactly when the active set of F contains that of F'.
    let mut by_system: BTreeMap<Vec<Vec<i64>>, Vec<(usize, u64)>> = BTreeMap::new();
    for (key, sys) in &systems {
        by_system.entry(sys.clone()).or_default().push(*key);
    }
    let mut maximal: Vec<(usize, u64, Vec<Vec<i64>>)> = Vec::new();
    for (sys, faces) in &by_system {
        for &(dim, active) in faces {
            let is_max = !faces.iter().any(|&(d2, a2)| {
                (d2, a2) != (dim, active) && a2 & active == a2 && a2 != active
            });
            if is_max {
                maximal.push((dim, active, sys.clone()));
            }
        }
    }

    // Equivalence classes of maximal faces, by type.
    let mut class_types: BTreeMap<(usize, u64), AdeType> = BTreeMap::new();
    for (dim, active, sys) in &maximal {
        let n = sys.len();
        let pairing = |i: usize, j: usize| ctx.sy.inner(&sys[i], &sys[j]);
        let mut t = AdeType::empty();
        for comp in components(&pairing, n) {
            let adj: Vec<Vec<usize>> = comp
                .iter()
                .map(|&v| {
                    comp.iter()
                        .enumerate()
                        .filter(|(_, &w)| {
                            w != v && {
                                let p = pairing(v, w);
                                assert!(
                                    p == 0 || p == 1,
                                    "curve system of a face must be simply laced"
                                );
                                p == 1
                            }
                        })
                        .map(|(idx, _)| idx)
                        .collect()
                })
                .collect();
            let (letter, rank) = classify_finite_component(&adj);
            t.push(letter, rank);
        }
        let rep = fd.rep_of(*dim, *active);
        match class_types.entry((*dim, rep)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(t);
            }
            std::collections::btree_map::Entry::Occupied(e) => {
                assert_eq!(e.get(), &t, "class members have the same type");
            }
        }
    }

    // Maximality is equivariant: every member of a counted class must be
    // maximal itself.
    let maximal_set: std::collections::BTreeSet<(usize, u64)> =
        maximal.iter().map(|(d, a, _)| (*d, *a)).collect();
    for (dim, rep) in class_types.keys() {
        for (member_rep, members) in fd.classes_of_dim(*dim) {
            if member_rep != *rep {
                continue;
            }
            for m in members {
                assert!(
                    maximal_set.contains(&(*dim, m)),
                    "class mixes maximal and non-maximal faces"
                );
            }
        }
    }

    let mut counts: BTreeMap<AdeType, usize> = BTreeMap::new();
    for t in class_types.values() {
        *counts.entry(t.clone()).or_default() += 1;
    }
    let mut rows: Vec<(AdeType, usize)> = counts.into_iter().collect();
    rows.sort_by(|a, b| b.0.rank().cmp(&a.0.rank()).then(a.0.cmp(&b.0)));
    let total_classes = rows.iter().map(|r| r.1).sum();
    RdpConfigurations { rows, total_classes }
}
