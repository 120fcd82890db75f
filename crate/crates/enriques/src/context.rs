//! The quotient-surface setup: the rank-10 lattice with its chamber, wall
//! vectors, involution generators, reflections and chamber symmetries.

use chamber_engine::Chamber;
use hessian_k3::indices::*;
use hessian_k3::HessianContext;
use lattice_core::mat::{dot, vec_mat, IMat, QMat};
use lattice_core::rat::{rat_i, to_rat_vec, Rat};
use lattice_core::{reflection, IntegerLattice, Isometry};
use num_traits::Signed;

/// The twenty printed wall vectors, used as abort-on-mismatch check data:
/// first the ten curve-class walls, then the ten inner walls, both in the
/// lexicographic order of their labelling triples.
pub const PRINTED_U_WALLS: [[i64; 10]; 10] = [
    [0, 0, 1, 0, 1, 2, 1, 1, 0, 0],
    [0, 0, 1, 1, 1, 2, 2, 2, 1, 1],
    [0, 1, -2, -1, -2, -3, -2, -1, -1, -1],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 2, 2, 1, 1, 0],
    [1, 0, -2, -1, -3, -4, -3, -2, -1, -1],
    [0, 0, 1, 1, 2, 2, 1, 1, 1, 1],
    [0, 1, -2, -1, -2, -3, -3, -3, -2, -1],
    [1, 1, -5, -3, -6, -9, -7, -5, -3, -1],
    [1, 0, -2, -1, -2, -4, -3, -3, -2, -1],
];

pub const PRINTED_V_WALLS: [[i64; 10]; 10] = [
    [0, 1, -1, 0, -1, -2, -1, -1, 0, 0],
    [1, 1, -4, -3, -5, -8, -7, -5, -3, -2],
    [1, 0, -1, -1, -2, -2, -2, -2, -1, 0],
    [1, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, -4, -2, -5, -8, -7, -5, -4, -2],
    [0, 1, -1, -1, -1, -2, -1, -1, -1, 0],
    [1, 1, -4, -3, -6, -8, -6, -5, -4, -2],
    [1, 0, -1, -1, -1, -2, -1, 0, 0, 0],
    [0, 0, 2, 2, 3, 4, 3, 2, 1, 0],
    [0, 1, -1, -1, -2, -2, -2, -1, 0, 0],
];

pub const HY: [i64; 10] = [3, 3, -8, -5, -10, -15, -12, -9, -6, -3];

/// Which wall a chamber index refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallLabel {
    /// Curve-class wall for the given triple index.
    U(usize),
    /// Inner wall for the given triple index.
    V(usize),
}

pub struct EnriquesContext {
    pub k3: HessianContext,
    /// The rank-10 even unimodular hyperbolic lattice.
    pub sy: IntegerLattice,
    pub h_y: Vec<i64>,
    /// Basis of the fixed sublattice of the K3 lattice (rows), realizing
    /// the doubled-form identification.
    pub emb_plus: IMat,
    /// Curve-class wall vectors by triple index.
    pub u_bar: Vec<Vec<i64>>,
    /// Inner wall vectors by triple index.
    pub v_bar: Vec<Vec<i64>>,
    /// Involution generators by triple index.
    pub g_bar: Vec<Isometry>,
    /// Reflections in the curve-class walls, by triple index.
    pub sigma_bar: Vec<Isometry>,
    /// The chamber with its 20 walls.
    pub dy: Chamber,
    /// Label of each chamber wall, aligned with `dy.pairings`.
    pub wall_labels: Vec<WallLabel>,
    /// The 120 chamber symmetries.
    pub aut_dy: Vec<Isometry>,
    /// Liftability of a curve-class candidate by its coordinate parities.
    pub lift_lut: Vec<bool>,
}

/// Restrict an isometry of the K3 lattice preserving the fixed sublattice
/// to quotient coordinates.
fn restrict(emb: &IMat, g: &Isometry, sy: &IntegerLattice) -> Isometry {
    let e = emb.to_q();
    let eg = e.mul(&g.m.to_q());
    let eet = e.mul(&e.transpose());
    let sol = eet.solve(&eg.mul(&e.transpose()).transpose()).expect("restriction solve");
    // sol^T * E = E g
    let r = sol.transpose();
    assert_eq!(r.mul(&e), eg, "restriction must reproduce the action");
    let ri = r.to_i().expect("restriction is integral");
    Isometry::new(sy, ri).expect("restriction is an isometry")
}

/// Twice the orthogonal projection of a K3-lattice vector to quotient
/// coordinates.
fn twice_projection(k3: &HessianContext, emb: &IMat, v: &[Rat]) -> Vec<Rat> {
    // y = v G_X E^T (E G_X E^T)^{-1}, and E G_X E^T = 2 G_10.
    let e = emb.to_q();
    let gx = k3.sx.lattice.gram.to_q();
    let egxet = e.mul(&gx).mul(&e.transpose());
    let row = QMat::from_rows(&[v.to_vec()]);
    let rhs = row.mul(&gx).mul(&e.transpose());
    let sol = egxet.solve(&rhs.transpose()).expect("projection solve").transpose();
    sol.row(0).iter().map(|x| x * rat_i(2)).collect()
}

pub fn build_context() -> EnriquesContext {
    let k3 = HessianContext::build();
    let emb_plus = k3.involution.plus_basis.clone();
    let l10 = borcherds_engine::build_l10();
    let sy = l10.lattice.clone();

    // Factor-of-two contract on the whole basis.
    let prod = emb_plus.mul(&k3.sx.lattice.gram).mul(&emb_plus.transpose());
    let mut doubled = sy.gram.clone();
    for x in doubled.a.iter_mut() {
        *x *= 2;
    }
    assert_eq!(prod, doubled, "factor-of-two contract");

    let h_y = HY.to_vec();
    assert_eq!(sy.inner(&h_y, &h_y), 10);
    // h identifies across the quotient: h_y in K3 coordinates is h_x.
    assert_eq!(vec_mat(&h_y, &emb_plus), k3.sx.h_x, "interior points agree");

    // Wall vectors by projection, checked entry-for-entry against the
    // printed tables.
    let mut u_bar = Vec::new();
    let mut v_bar = Vec::new();
    for a in 0..10 {
        let e_cls = to_rat_vec(&k3.sx.e_classes[a]);
        let u = twice_projection(&k3, &emb_plus, &e_cls);
        let u: Vec<i64> = u
            .iter()
            .map(|x| {
                assert!(lattice_core::rat::is_int(x));
                i64::try_from(&x.to_integer()).unwrap()
            })
            .collect();
        assert_eq!(u, PRINTED_U_WALLS[a], "curve wall {a} disagrees with the printed table");
        // the complementary line class projects to the same wall
        let abar = complement(&TRIPLES[a]);
        let l_cls = to_rat_vec(&k3.sx.l_classes[pair_index(&abar)]);
        let u2 = twice_projection(&k3, &emb_plus, &l_cls);
        assert_eq!(
            u2,
            u.iter().map(|&x| rat_i(x)).collect::<Vec<_>>(),
            "node and complementary line project to the same wall"
        );
        u_bar.push(u);

        let v = twice_projection(&k3, &emb_plus, &k3.sx.v_alpha(a));
        let v: Vec<i64> = v
            .iter()
            .map(|x| {
                assert!(lattice_core::rat::is_int(x));
                i64::try_from(&x.to_integer()).unwrap()
            })
            .collect();
        assert_eq!(v, PRINTED_V_WALLS[a], "inner wall {a} disagrees with the printed table");
        v_bar.push(v);
    }

    // Pairing tables.
    for a in 0..10 {
        assert_eq!(sy.inner(&u_bar[a], &h_y), 1);
        assert_eq!(sy.inner(&v_bar[a], &h_y), 2);
        for b in 0..10 {
            let inter = intersection_size(&TRIPLES[a], &TRIPLES[b]);
            let uu = match inter {
                3 => -2,
                1 => 1,
                _ => 0,
            };
            let vv = match inter {
                3 => -2,
                2 => 1,
                _ => 0,
            };
            assert_eq!(sy.inner(&u_bar[a], &u_bar[b]), uu, "u-pairing ({a},{b})");
            assert_eq!(sy.inner(&v_bar[a], &v_bar[b]), vv, "v-pairing ({a},{b})");
            assert_eq!(sy.inner(&u_bar[a], &v_bar[b]), if a == b { 2 } else { 0 });
        }
    }
    // h_y is the sum of the curve walls.
    let mut sum = vec![0i64; 10];
    for u in &u_bar {
        for (s, x) in sum.iter_mut().zip(u) {
            *s += x;
        }
    }
    assert_eq!(sum, h_y);

    // The chamber: intersect the K3 chamber with the quotient space, i.e.
    // project its 84 defining vectors and keep the negative-norm images.
    let mut defs: Vec<Vec<Rat>> = Vec::new();
    for v in &k3.dx.induced.chamber.defining {
        let p = twice_projection(&k3, &emb_plus, v);
        let norm = sy.inner_q(&p, &p);
        if norm.is_negative() {
            defs.push(p);
        }
    }
    let pre = Chamber::new(&sy, &defs, h_y.clone());
    let dy = pre.walls_of(&sy);
    assert_eq!(dy.pairings.len(), 20, "the chamber has 10 + 10 walls");

    // Label every wall.
    let mut wall_labels = Vec::new();
    for p in &dy.pairings {
        // pairing covector p = w * G, so w = p * G^{-1}
        let w = {
            let row = QMat::from_rows(&[to_rat_vec(p)]);
            let sol = row.mul(sy.gram_inv());
            let v: Vec<i64> = sol
                .row(0)
                .iter()
                .map(|x| i64::try_from(&x.to_integer()).unwrap())
                .collect();
            v
        };
        let label = if let Some(i) = u_bar.iter().position(|u| *u == w) {
            WallLabel::U(i)
        } else if let Some(i) = v_bar.iter().position(|v| *v == w) {
            WallLabel::V(i)
        } else {
            panic!("wall {w:?} is neither a curve wall nor an inner wall");
        };
        wall_labels.push(label);
    }
    for a in 0..10 {
        assert!(wall_labels.contains(&WallLabel::U(a)));
        assert!(wall_labels.contains(&WallLabel::V(a)));
    }

    // Generators and reflections.
    let g_bar: Vec<Isometry> = (0..10)
        .map(|a| {
            let g = restrict(&emb_plus, &k3.g_alphas[a], &sy);
            assert!(g.compose(&g).is_identity());
            // eigenvalue-1 multiplicity 6
            let mut m = g.m.to_q();
            for i in 0..10 {
                let v = m[(i, i)].clone() - rat_i(1);
                m[(i, i)] = v;
            }
            assert_eq!(m.rank(), 4, "involution has a 6-dimensional fixed space");
            g
        })
        .collect();
    let sigma_bar: Vec<Isometry> = (0..10)
        .map(|a| {
            let paired = hessian_k3::galpha::paired_reflection(
                &k3.sx,
                &k3.refl_e,
                &k3.refl_l,
                a,
                &k3.involution.g,
            );
            let s = restrict(&emb_plus, &paired, &sy);
            let direct = reflection(&sy, &u_bar[a]).expect("curve wall is a root");
            assert_eq!(s.m, direct.m, "restricted composite equals the direct reflection");
            s
        })
        .collect();

    // Adjacency certificates across every wall.
    for (idx, label) in wall_labels.iter().enumerate() {
        let ok = match label {
            WallLabel::V(a) => borcherds_engine::verify_adjacent(&sy, &dy, idx, &g_bar[*a]),
            WallLabel::U(a) => borcherds_engine::verify_adjacent(&sy, &dy, idx, &sigma_bar[*a]),
        };
        assert!(ok, "adjacency certificate fails at wall {idx}");
    }

    let aut_dy = chamber_symmetry_group(&sy, &h_y, &u_bar, &v_bar);
    let lift_lut = build_lift_lut(&k3, &emb_plus);

    EnriquesContext {
        k3,
        sy,
        h_y,
        emb_plus,
        u_bar,
        v_bar,
        g_bar,
        sigma_bar,
        dy,
        wall_labels,
        aut_dy,
        lift_lut,
    }
}

/// The full symmetry group of the chamber: label-preserving permutations
/// of the twenty walls realized by lattice isometries. Computed by
/// backtracking over the wall pairing graph, so the count 120 is a
/// completeness statement, not an input.
fn chamber_symmetry_group(
    sy: &IntegerLattice,
    h_y: &[i64],
    u_bar: &[Vec<i64>],
    v_bar: &[Vec<i64>],
) -> Vec<Isometry> {
    let verts: Vec<Vec<i64>> = u_bar.iter().chain(v_bar.iter()).cloned().collect();
    let n = verts.len();
    let pair = |i: usize, j: usize| sy.inner(&verts[i], &verts[j]);
    let mut pairs = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            pairs[i][j] = pair(i, j);
        }
    }
    // backtracking over graph automorphisms
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn bt(
        k: usize,
        n: usize,
        pairs: &Vec<Vec<i64>>,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == n {
            out.push(img.clone());
            return;
        }
        for cand in 0..n {
            if used[cand] || pairs[cand][cand] != pairs[k][k] {
                continue;
            }
            let ok = (0..k).all(|j| pairs[img[j]][cand] == pairs[j][k]);
            if ok {
                img[k] = cand;
                used[cand] = true;
                bt(k + 1, n, pairs, img, used, out);
                used[cand] = false;
                img[k] = usize::MAX;
            }
        }
    }
    bt(0, n, &pairs, &mut img, &mut used, &mut perms);

    // Each graph automorphism determines a linear map on a spanning subset;
    // keep those that are integral isometries mapping every wall correctly.
    let vert_mat = IMat::from_rows(&verts);
    let vq = vert_mat.to_q();
    // choose 10 independent rows
    let mut base_rows = Vec::new();
    let mut probe: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        let mut test = probe.clone();
        test.push(to_rat_vec(&verts[i]));
        if QMat::from_rows(&test).rank() == test.len() {
            probe = test;
            base_rows.push(i);
            if base_rows.len() == 10 {
                break;
            }
        }
    }
    assert_eq!(base_rows.len(), 10, "walls span the lattice");
    let b = QMat::from_rows(&base_rows.iter().map(|&i| to_rat_vec(&verts[i])).collect::<Vec<_>>());
    let b_inv = b.inverse().expect("independent rows");

    let mut out = Vec::new();
    for perm in &perms {
        let b_img = QMat::from_rows(
            &base_rows.iter().map(|&i| to_rat_vec(&verts[perm[i]])).collect::<Vec<_>>(),
        );
        let m = b_inv.mul(&b_img);
        let Some(mi) = m.to_i() else { continue };
        let Ok(iso) = Isometry::new(sy, mi) else { continue };
        // must realize the permutation on all twenty walls
        let all_match =
            (0..n).all(|i| iso.apply(&verts[i]) == verts[perm[i]]);
        if !all_match {
            continue;
        }
        assert_eq!(iso.apply(h_y), h_y, "chamber symmetry fixes the polarization");
        out.push(iso);
    }
    assert_eq!(out.len(), 120, "the chamber symmetry group has order 120");
    let _ = vq;
    out
}

/// Liftability of a candidate curve class by parity: the class, moved into
/// the K3 lattice, must differ from some norm -4 anti-invariant vector by
/// twice a lattice vector. Only the coordinate parities matter, so a
/// 1024-entry table decides it.
fn build_lift_lut(k3: &HessianContext, emb_plus: &IMat) -> Vec<bool> {
    use std::collections::BTreeSet;
    let mut t_parities: BTreeSet<u16> = BTreeSet::new();
    for t in &k3.involution.t_set {
        let mut bits = 0u16;
        for (i, &x) in t.iter().enumerate() {
            if x.rem_euclid(2) == 1 {
                bits |= 1 << i;
            }
        }
        t_parities.insert(bits);
    }
    let mut lut = vec![false; 1024];
    for (pat, entry) in lut.iter_mut().enumerate() {
        let y: Vec<i64> = (0..10).map(|i| ((pat >> i) & 1) as i64).collect();
        let img = vec_mat(&y, emb_plus);
        let mut bits = 0u16;
        for (i, &x) in img.iter().enumerate() {
            if x.rem_euclid(2) == 1 {
                bits |= 1 << i;
            }
        }
        *entry = t_parities.contains(&bits);
    }
    lut
}

impl EnriquesContext {
    pub fn is_liftable(&self, y: &[i64]) -> bool {
        let mut pat = 0usize;
        for (i, &x) in y.iter().enumerate() {
            if x.rem_euclid(2) == 1 {
                pat |= 1 << i;
            }
        }
        self.lift_lut[pat]
    }

    /// Chamber wall index of an inner wall by triple index.
    pub fn v_wall_index(&self, alpha: usize) -> usize {
        self.wall_labels
            .iter()
            .position(|l| *l == WallLabel::V(alpha))
            .expect("inner wall present")
    }

    pub fn u_wall_index(&self, alpha: usize) -> usize {
        self.wall_labels
            .iter()
            .position(|l| *l == WallLabel::U(alpha))
            .expect("curve wall present")
    }

    /// Pairing of a wall (by chamber index) with a vector.
    pub fn wall_value(&self, wall: usize, x: &[i64]) -> i64 {
        dot(&self.dy.pairings[wall], x)
    }

    /// The wall vector (a root of the lattice) behind a chamber wall index.
    pub fn wall_root(&self, wall: usize) -> &Vec<i64> {
        match self.wall_labels[wall] {
            WallLabel::U(a) => &self.u_bar[a],
            WallLabel::V(a) => &self.v_bar[a],
        }
    }
}

