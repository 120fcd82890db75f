//! Recursive face enumeration for a chamber, by descending induction on
//! dimension.
//!
//! A face is stored through a saturated primitive integer basis of its
//! linear span plus the set of defining vectors vanishing on that span.
//! Faces are keyed by the saturated active set; the construction checks
//! `dim = n - rank(active covectors)` on every face, which is exactly the
//! condition making that key faithful, and aborts if it ever fails.

use crate::chamber::Chamber;
use crate::lp::defines_wall;
use lattice_core::mat::{dot, IMat, QMat};
use lattice_core::rat::{primitive_part, rat_i, Rat};
use lattice_core::snf;
use lattice_core::IntegerLattice;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct Face {
    pub dim: usize,
    /// Primitive basis (rows) of the saturated span lattice.
    pub span: IMat,
    /// Bitset over the chamber's wall list: walls vanishing on the span.
    pub active: u64,
    /// Sign-fixed primitive generator, dimension-1 faces only.
    pub ray: Option<Vec<i64>>,
    /// Dimension-1 face on the boundary of the positive cone.
    pub ideal: bool,
}

pub struct FaceLattice {
    pub rank: usize,
    /// Pairing covectors of the chamber walls, shared by all faces.
    pub walls: Vec<Vec<i64>>,
    /// `by_dim[k]` holds the k-dimensional faces keyed by active set,
    /// for k = 1..rank-1.
    pub by_dim: Vec<BTreeMap<u64, Face>>,
}

impl FaceLattice {
    pub fn faces_of_dim(&self, k: usize) -> impl Iterator<Item = &Face> {
        self.by_dim[k].values()
    }

    pub fn count(&self, k: usize) -> usize {
        self.by_dim[k].len()
    }

    /// Recompute the saturated active set of an integer span under the
    /// chamber's wall list.
    pub fn active_of_span(&self, span: &IMat) -> u64 {
        active_bits(&self.walls, span)
    }
}

fn active_bits(walls: &[Vec<i64>], span: &IMat) -> u64 {
    let mut bits = 0u64;
    'walls: for (i, w) in walls.iter().enumerate() {
        for r in 0..span.rows {
            if dot(span.row(r), w) != 0 {
                continue 'walls;
            }
        }
        bits |= 1 << i;
    }
    bits
}

fn rank_of_active(walls: &[Vec<i64>], bits: u64) -> usize {
    let rows: Vec<Vec<Rat>> = walls
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, w)| w.iter().map(|&x| rat_i(x)).collect())
        .collect();
    if rows.is_empty() {
        return 0;
    }
    QMat::from_rows(&rows).rank()
}

/// Enumerate the faces of every dimension `1..rank-1` of a chamber whose
/// defining set is exactly its wall set.
///
/// Each level fans out over the faces of the previous one in parallel;
/// spans are Hermite-normalized, so the result is identical no matter how
/// the work is scheduled.
pub fn face_lattice(lat: &IntegerLattice, chamber: &Chamber) -> FaceLattice {
    use rayon::prelude::*;
    let n = lat.rank;
    assert!(chamber.pairings.len() <= 64, "wall bitset limited to 64 walls");
    let walls = chamber.pairings.clone();
    let mut by_dim: Vec<BTreeMap<u64, Face>> = vec![BTreeMap::new(); n.max(1)];

    // The chamber itself seeds the recursion as a pseudo-face of dim n.
    let top = Face { dim: n, span: IMat::identity(n), active: 0, ray: None, ideal: false };
    let mut frontier: Vec<Face> = vec![top];

    for dim in (1..n).rev() {
        let batches: Vec<Vec<Face>> = frontier
            .par_iter()
            .map(|face| children_of(lat, &walls, face))
            .collect();
        let mut next: BTreeMap<u64, Face> = BTreeMap::new();
        for batch in batches {
            for child in batch {
                next.entry(child.active).or_insert(child);
            }
        }
        by_dim[dim] = next;
        frontier = by_dim[dim].values().cloned().collect();
    }

    FaceLattice { rank: n, walls, by_dim }
}

/// The walls of one face, as faces of one dimension lower.
fn children_of(lat: &IntegerLattice, walls: &[Vec<i64>], face: &Face) -> Vec<Face> {
    let k = face.dim;
    assert!(k >= 2, "children_of needs dim >= 2");
    let b = &face.span;

    // Restrict each non-active wall to span coordinates and primitivize.
    // forms[j] = (covector, representative wall index)
    let mut seen: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (i, w) in walls.iter().enumerate() {
        if face.active >> i & 1 == 1 {
            continue;
        }
        let c: Vec<i64> = (0..k).map(|r| dot(b.row(r), w)).collect();
        let prim = primitive_part(&c)
            .expect("saturation failure: non-active wall vanishes on span");
        seen.entry(prim).or_insert(i);
    }
    let forms: Vec<Vec<i64>> = seen.keys().cloned().collect();
    // Distinct-half-space assumption: no opposite pair may appear, or the
    // face would have empty interior in its span.
    for f in &forms {
        let neg: Vec<i64> = f.iter().map(|&x| -x).collect();
        assert!(
            !seen.contains_key(&neg),
            "degenerate face: opposite restricted half-spaces {f:?}"
        );
    }

    let rat_forms: Vec<Vec<Rat>> =
        forms.iter().map(|f| f.iter().map(|&x| rat_i(x)).collect()).collect();

    let mut out = Vec::new();
    for (j, form) in forms.iter().enumerate() {
        if !defines_wall(&rat_forms, j).is_wall() {
            continue;
        }
        // span of the child: kernel of the restricted form inside the span.
        let col = {
            let mut m = lattice_core::mat::ZMat::zero(k, 1);
            for r in 0..k {
                m[(r, 0)] = num_bigint::BigInt::from(form[r]);
            }
            m
        };
        let ker = snf::left_kernel(&col).to_i().expect("kernel fits i64");
        debug_assert_eq!(ker.rows, k - 1);
        let sub_span = ker.mul(b);
        // Saturate, then Hermite-normalize so the basis depends only on
        // the face, not on which parent produced it.
        let saturated = snf::hnf_rows(&snf::saturate_rows(&sub_span.to_z()))
            .to_i()
            .expect("saturated span fits i64");
        let active = active_bits(walls, &saturated);
        let rank_act = rank_of_active(walls, active);
        assert_eq!(
            lat.rank - (k - 1),
            rank_act,
            "face-identity invariant failed: dim {} active rank {}",
            k - 1,
            rank_act
        );
        let mut child =
            Face { dim: k - 1, span: saturated, active, ray: None, ideal: false };
        if k - 1 == 1 {
            finish_ray(lat, walls, &mut child);
        }
        out.push(child);
    }
    out
}

/// Fix the sign of a 1-dimensional face's generator so it lies in the
/// chamber, and decide whether it is ideal.
fn finish_ray(lat: &IntegerLattice, walls: &[Vec<i64>], face: &mut Face) {
    let mut r = face.span.row(0).to_vec();
    let mut pos = 0usize;
    let mut neg = 0usize;
    for (i, w) in walls.iter().enumerate() {
        if face.active >> i & 1 == 1 {
            continue;
        }
        let v = dot(&r, w);
        assert!(v != 0, "saturation failure on ray");
        if v > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    assert!(
        pos == 0 || neg == 0,
        "ray not contained in the chamber: mixed pairing signs"
    );
    if neg > 0 {
        for x in r.iter_mut() {
            *x = -*x;
        }
    }
    let norm = lat.inner(&r, &r);
    assert!(norm >= 0, "one-dimensional face leaves the closed positive cone");
    face.ideal = norm == 0;
    face.ray = Some(r);
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_core::rat::to_rat_vec;

    fn hyperbolic3() -> IntegerLattice {
        // U + <-2>
        IntegerLattice::hyperbolic(IMat::from_rows(&[
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![0, 0, -2],
        ]))
        .unwrap()
    }

    #[test]
    fn simplicial_cone_faces() {
        let lat = hyperbolic3();
        // Cone over the null rays (1,0,0), (0,1,0), (1,1,1): the facet
        // pairing covectors are (0,0,1), (0,1,-1), (1,0,-1), so the
        // defining vectors are those times G^{-1}.
        let ginv = lat.gram_inv();
        let covectors = [vec![0i64, 0, 1], vec![0, 1, -1], vec![1, 0, -1]];
        let defining: Vec<Vec<lattice_core::rat::Rat>> = covectors
            .iter()
            .map(|c| QMat::from_rows(&[to_rat_vec(c)]).mul(ginv).row(0).to_vec())
            .collect();
        let chamber = Chamber::new(&lat, &defining, vec![2, 2, 1]);
        let walls = chamber.walls_of(&lat);
        assert_eq!(walls.pairings.len(), 3);
        let fl = face_lattice(&lat, &walls);
        assert_eq!(fl.count(2), 3);
        assert_eq!(fl.count(1), 3);
        // all three spanning rays are null, hence ideal
        for f in fl.faces_of_dim(1) {
            let r = f.ray.as_ref().unwrap();
            assert_eq!(lat.inner(r, r), 0);
            assert!(f.ideal);
        }
    }
}
