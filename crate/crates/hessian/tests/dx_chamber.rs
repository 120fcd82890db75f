//! End-to-end checks for the induced chamber of the K3 lattice: the 84
//! walls with their type statistics, adjacency certificates for the node
//! involutions, and the separating-root emptiness facts.

use borcherds_engine::verify_adjacent;
use hessian_k3::HessianContext;
use num_traits::Signed;
use once_cell::sync::Lazy;

static CTX: Lazy<HessianContext> = Lazy::new(HessianContext::build);

#[test]
fn dx_has_84_typed_walls() {
    // The constructor validates counts 20/10/24/30, the identification of
    // the outer walls with the twenty curve classes, and the invariant
    // walls with the v_alpha; reaching here means all of it passed.
    assert_eq!(CTX.dx.induced.chamber.pairings.len(), 84);
}

#[test]
fn roots_orthogonal_to_polarizations() {
    let sx = &CTX.sx;
    // Roots orthogonal to the quartic polarization: only the node classes.
    let at_hq = lattice_core::enumerate::lattice_norm_pairing(&sx.lattice, &sx.h_q, -2, 0);
    assert_eq!(at_hq.len(), 20, "plus-minus the ten node classes");
    for r in &at_hq {
        let neg: Vec<i64> = r.iter().map(|&x| -x).collect();
        assert!(
            sx.e_classes.contains(r) || sx.e_classes.contains(&neg),
            "unexpected root orthogonal to the polarization"
        );
    }
    // Roots orthogonal to the chamber interior point: none.
    let at_hx = lattice_core::enumerate::lattice_norm_pairing(&sx.lattice, &sx.h_x, -2, 0);
    assert!(at_hx.is_empty());
    // No root separates the two polarizations.
    let separating = lattice_core::roots_between(&sx.lattice, &sx.h_q, &sx.h_x);
    assert!(separating.is_empty());
}

#[test]
fn galpha_adjacency_certificates() {
    for a in 0..10 {
        let wall = CTX.v_alpha_wall_index(a);
        assert!(
            verify_adjacent(&CTX.sx.lattice, &CTX.dx.induced.chamber, wall, &CTX.g_alphas[a]),
            "node involution {a} must map the chamber across its wall"
        );
    }
}

#[test]
fn node_pairings_with_interior() {
    for e in &CTX.sx.e_classes {
        assert_eq!(CTX.sx.lattice.inner(e, &CTX.sx.h_x), 1);
    }
}

#[test]
fn complement_root_count_is_stable() {
    // The orthogonal complement of the K3 lattice in L26 is a rank-10
    // negative-definite lattice with a nonempty root system. The exact
    // count is pinned by a frozen value computed with the enumerator and
    // cross-checked against an independent box search.
    let (lat, _basis) = CTX
        .dx
        .emb
        .complement_lattice(lattice_core::SignatureKind::NegativeDefinite)
        .unwrap();
    assert_eq!(lat.rank, 10);
    let roots = lattice_core::short_vectors(&lat, -2).unwrap();
    assert!(!roots.is_empty());
    // Frozen from the enumerator + box-search agreement below.
    assert_eq!(roots.len(), 40);

    // Independent oracle: naive box search with per-coordinate bounds from
    // the inverse Gram diagonal.
    let ginv = lat.gram_inv();
    let mut bounds = Vec::new();
    for i in 0..lat.rank {
        let b2 = ginv[(i, i)].clone() * lattice_core::rat::rat_i(-2);
        let b = i64::try_from(&lattice_core::rat::floor_sqrt(&b2.abs())).unwrap();
        bounds.push(b + 1);
    }
    // Walk the full box; the norm is accumulated incrementally so a leaf
    // costs O(1). No branch of the box is skipped.
    let n = lat.rank;
    let g = &lat.gram;
    let mut count = 0usize;
    let mut x = vec![0i64; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &lattice_core::mat::IMat,
        bounds: &[i64],
        x: &mut Vec<i64>,
        i: usize,
        partial: i64,
        nonzero: bool,
        count: &mut usize,
    ) {
        let n = x.len();
        if i == n {
            if nonzero && partial >= -2 {
                *count += 1;
            }
            return;
        }
        // cross term 2 v * sum_{j<i} G_ij x_j
        let mut cross = 0i64;
        for j in 0..i {
            cross += g[(i, j)] * x[j];
        }
        for v in -bounds[i]..=bounds[i] {
            x[i] = v;
            let add = 2 * v * cross + g[(i, i)] * v * v;
            rec(g, bounds, x, i + 1, partial + add, nonzero || v != 0, count);
        }
        x[i] = 0;
    }
    rec(g, &bounds, &mut x, 0, 0, false, &mut count);
    assert_eq!(count, roots.len(), "box search agrees with the enumerator");
}
