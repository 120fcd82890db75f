//! Elliptic fibrations from the ideal faces of the chamber.
//!
//! Each class of ideal rays gives one fibration up to automorphisms. The
//! reducible fibers are read off from the curve classes orthogonal to the
//! ray with degree below the fiber degree: their dual graph decomposes
//! into extended ADE diagrams, the radical of each component recovers the
//! multiplicities, and a component is a half fiber exactly when its
//! multiplicity-weighted class sum equals the primitive ray rather than
//! twice it.

use crate::ade::{classify_extended_component, components, AdeType};
use crate::context::EnriquesContext;
use crate::curves::CurveTable;
use crate::faces::FaceData;

pub struct Fibration {
    /// Primitive ray generator (class representative).
    pub ray: Vec<i64>,
    /// Degree of a full fiber with respect to the polarization.
    pub fiber_degree: i64,
    /// Types of the non-multiple reducible fibers.
    pub full: AdeType,
    /// Types of the halves of the multiple reducible fibers.
    pub half: AdeType,
    /// Number of ideal rays in the class.
    pub class_size: usize,
}

/// The largest fiber degree over all ideal-ray classes; curve classes up
/// to one less are needed to resolve every fibration.
pub fn max_fiber_degree(ctx: &EnriquesContext, fd: &FaceData) -> i64 {
    ideal_class_reps(fd)
        .into_iter()
        .map(|(key, _)| {
            let ray = fd.face(1, key).ray.as_ref().unwrap().clone();
            2 * ctx.sy.inner(&ray, &ctx.h_y)
        })
        .max()
        .expect("there are ideal faces")
}

/// Ideal-ray class representatives with their class sizes.
fn ideal_class_reps(fd: &FaceData) -> Vec<(u64, usize)> {
    let classes = fd.classes_of_dim(1);
    let mut out = Vec::new();
    for (rep, members) in classes {
        let ideal = fd.face(1, rep).ideal;
        // ideality is class-invariant
        for &m in &members {
            assert_eq!(fd.face(1, m).ideal, ideal);
        }
        if ideal {
            out.push((rep, members.len()));
        }
    }
    out
}

pub fn elliptic_fibrations(
    ctx: &EnriquesContext,
    fd: &FaceData,
    curves: &CurveTable,
) -> Vec<Fibration> {
    let reps = ideal_class_reps(fd);
    let total: usize = reps.iter().map(|(_, s)| s).sum();
    assert_eq!(total, 57, "ideal ray count");
    assert_eq!(reps.len(), 21, "ideal ray classes");

    let mut out = Vec::new();
    for (key, class_size) in reps {
        let ray = fd.face(1, key).ray.as_ref().unwrap().clone();
        let d_phi = 2 * ctx.sy.inner(&ray, &ctx.h_y);
        assert!(
            curves.max_degree() >= d_phi - 1,
            "curve table must reach degree {} for the fibration analysis",
            d_phi - 1
        );
        // curve classes in fibers: orthogonal to the ray, degree < d_phi
        let fiber_classes: Vec<&Vec<i64>> = curves
            .up_to(d_phi - 1)
            .into_iter()
            .filter(|(_, v)| ctx.sy.inner(v, &ray) == 0)
            .map(|(_, v)| v)
            .collect();
        let n = fiber_classes.len();
        let pairing = |i: usize, j: usize| ctx.sy.inner(fiber_classes[i], fiber_classes[j]);
        let mut full = AdeType::empty();
        let mut half = AdeType::empty();
        for comp in components(&pairing, n) {
            let k = comp.len();
            let mut gram = vec![vec![0i64; k]; k];
            for a in 0..k {
                for b in 0..k {
                    gram[a][b] = pairing(comp[a], comp[b]);
                }
            }
            let ext = classify_extended_component(&gram);
            // the weighted class sum must be the ray or twice the ray
            let mut sum = vec![0i64; ctx.sy.rank];
            for (a, &idx) in comp.iter().enumerate() {
                for (s, &x) in sum.iter_mut().zip(fiber_classes[idx]) {
                    *s += ext.multiplicities[a] * x;
                }
            }
            let twice: Vec<i64> = ray.iter().map(|&x| 2 * x).collect();
            let t_weight: i64 = comp
                .iter()
                .enumerate()
                .map(|(a, &idx)| ext.multiplicities[a] * ctx.sy.inner(fiber_classes[idx], &ctx.h_y))
                .sum();
            if sum == ray {
                assert_eq!(2 * t_weight, d_phi, "half fiber weight");
                half.push(ext.letter, ext.rank);
            } else if sum == twice {
                assert_eq!(t_weight, d_phi, "full fiber weight");
                full.push(ext.letter, ext.rank);
            } else {
                panic!("fiber component sums to neither the ray nor twice the ray");
            }
        }
        out.push(Fibration { ray, fiber_degree: d_phi, full, half, class_size });
    }
    out.sort_by(|a, b| (a.full.clone(), a.half.clone(), a.ray.clone()).cmp(&(
        b.full.clone(),
        b.half.clone(),
        b.ray.clone(),
    )));
    out
}

/// Aggregate fibrations into ([full, half] -> class count) rows.
pub fn fibration_table(fibs: &[Fibration]) -> Vec<(AdeType, AdeType, usize)> {
    let mut counts: std::collections::BTreeMap<(AdeType, AdeType), usize> =
        std::collections::BTreeMap::new();
    for f in fibs {
        *counts.entry((f.full.clone(), f.half.clone())).or_default() += 1;
    }
    counts.into_iter().map(|((a, b), c)| (a, b, c)).collect()
}
