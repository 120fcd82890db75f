//! Counting the rank-10 Weyl fundamental domains tiling the chamber.
//!
//! The positive cone is tessellated by the unions of the 10! Weyl chambers
//! sharing a common distinguished vertex-ray ("centers" of norm 10). The
//! walk starts at the polarization, which is such a center; each center
//! has 120 neighbours obtained by reflecting in the roots pairing 1 with
//! it, and a center contributes 10!/|W(D)| chambers, where D is the
//! Dynkin diagram of the chamber walls vanishing at it. Centers pairing
//! negatively with some wall contribute nothing and are not expanded.

use crate::context::EnriquesContext;
use lattice_core::mat::dot;
use lattice_core::Isometry;
use std::collections::{HashMap, HashSet, VecDeque};

const FACTORIAL_10: u64 = 3_628_800;

/// The 120 roots pairing 1 with the polarization, verified to be the
/// reflection orbit of the opposite simple root.
fn neighbour_roots(ctx: &EnriquesContext) -> Vec<Vec<i64>> {
    let l10 = borcherds_engine::build_l10();
    let sy = &ctx.sy;
    let h = &ctx.h_y;
    // pairings of the simple roots with the polarization: this is the
    // distinguished vertex of the fundamental domain, so only the first
    // root pairs nonzero
    for (i, e) in l10.simple_roots.iter().enumerate() {
        let p = sy.inner(e, h);
        if i == 0 {
            assert_eq!(p, 1, "polarization is the weight of the branch root");
        } else {
            assert_eq!(p, 0, "polarization vanishes on the chain roots");
        }
    }
    // roots orthogonal to the center: 90 of them, simply laced chain type
    let ortho = lattice_core::enumerate::lattice_norm_pairing(sy, h, -2, 0);
    assert_eq!(ortho.len(), 90, "root system at the center");

    // enumerated candidates: roots of pairing 1
    let enumerated = lattice_core::enumerate::lattice_norm_pairing(sy, h, -2, 1);
    assert_eq!(enumerated.len(), 120, "neighbour root count");

    // orbit of the branch root under the reflections of the chain roots
    let refls: Vec<Isometry> = l10.simple_roots[1..]
        .iter()
        .map(|r| lattice_core::reflection(sy, r).unwrap())
        .collect();
    let mut orbit: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = vec![l10.simple_roots[0].clone()];
    orbit.insert(queue[0].clone());
    while let Some(v) = queue.pop() {
        for s in &refls {
            let img = s.apply(&v);
            if orbit.insert(img.clone()) {
                queue.push(img);
            }
        }
    }
    let mut orbit: Vec<Vec<i64>> = orbit.into_iter().collect();
    orbit.sort();
    assert_eq!(orbit, enumerated, "orbit equals the degree-one root set");
    orbit
}

/// Weyl group order of a disjoint union of chain diagrams.
fn weyl_order_of_vanishing_walls(ctx: &EnriquesContext, v: &[i64]) -> u64 {
    let vanish: Vec<&Vec<i64>> = ctx
        .dy
        .pairings
        .iter()
        .enumerate()
        .filter(|(i, _)| ctx.wall_value(*i, v) == 0)
        .map(|(i, _)| ctx.wall_root(i))
        .collect();
    let n = vanish.len();
    let pairing = |i: usize, j: usize| ctx.sy.inner(vanish[i], vanish[j]);
    for i in 0..n {
        for j in 0..i {
            let p = pairing(i, j);
            assert!(p == 0 || p == 1, "vanishing walls must form a simply laced diagram");
        }
    }
    let mut order: u64 = 1;
    for comp in crate::ade::components(&pairing, n) {
        // must be a chain (type A)
        let k = comp.len();
        let mut deg = vec![0usize; k];
        for a in 0..k {
            for b in 0..k {
                if a != b && pairing(comp[a], comp[b]) == 1 {
                    deg[a] += 1;
                }
            }
        }
        assert!(deg.iter().all(|&d| d <= 2), "vanishing diagram must be a chain");
        let edges: usize = deg.iter().sum::<usize>() / 2;
        assert_eq!(edges, k - 1, "vanishing diagram must be a tree chain");
        order *= factorial(k as u64 + 1);
    }
    order
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Count the Weyl fundamental domains inside the chamber by the center
/// walk. Aborts if the frontier exceeds the cap.
pub fn vinberg_count(ctx: &EnriquesContext, cap: usize) -> u64 {
    let base_roots = neighbour_roots(ctx);
    let sy = &ctx.sy;

    let inside = |v: &[i64]| -> bool {
        ctx.dy.pairings.iter().all(|p| dot(p, v) >= 0)
    };
    assert!(inside(&ctx.h_y));

    // Each visited center carries the isometry transporting the base
    // center to it, so the neighbour roots transport along.
    let mut visited: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: VecDeque<(Vec<i64>, Isometry)> = VecDeque::new();
    visited.insert(ctx.h_y.clone(), ());
    queue.push_back((ctx.h_y.clone(), Isometry::identity(10)));

    let mut total: u64 = 0;
    while let Some((v, g)) = queue.pop_front() {
        total += FACTORIAL_10 / weyl_order_of_vanishing_walls(ctx, &v);
        // neighbours: reflections in the transported roots
        for u0 in &base_roots {
            let u = g.apply(u0);
            debug_assert_eq!(sy.inner(&u, &v), 1);
            let next: Vec<i64> = v.iter().zip(&u).map(|(a, b)| a + b).collect();
            if !inside(&next) || visited.contains_key(&next) {
                continue;
            }
            debug_assert_eq!(sy.inner(&next, &next), 10);
            let refl = lattice_core::reflection(sy, &u).expect("neighbour root");
            let g_next = g.compose(&refl);
            debug_assert_eq!(g_next.apply(&ctx.h_y), next);
            visited.insert(next.clone(), ());
            assert!(visited.len() <= cap, "center walk exceeded the cap {cap}");
            queue.push_back((next, g_next));
        }
    }
    total
}
