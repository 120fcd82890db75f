//! Faces of the chamber and their equivalence classes.
//!
//! A face is outer when it lies in some curve-class wall. Two faces are
//! adjacent-equivalent when the involution of an inner wall containing one
//! carries it to the other; the full equivalence is the transitive
//! closure, computed by breadth-first search over those moves. Every face
//! stores the word of generators carrying it onto its class
//! representative, and the word is re-verified on construction.

use crate::context::{EnriquesContext, WallLabel};
use chamber_engine::{face_lattice, FaceLattice};
use lattice_core::mat::IMat;
use std::collections::{BTreeMap, VecDeque};

pub struct FaceData {
    pub lattice: FaceLattice,
    /// Bitmask of curve-class walls among the chamber's 20.
    pub outer_mask: u64,
    /// For each dimension, face keys in canonical order.
    pub keys_by_dim: Vec<Vec<u64>>,
    /// Class representative per (dim, active).
    class_rep: BTreeMap<(usize, u64), u64>,
    /// Word of generator indices mapping the face onto its representative
    /// (applied left to right).
    witness: BTreeMap<(usize, u64), Vec<usize>>,
    /// Per-dimension counts: (outer faces, inner faces, outer classes,
    /// inner classes).
    pub table: Vec<(usize, usize, usize, usize)>,
}

impl FaceData {
    pub fn face(&self, dim: usize, active: u64) -> &chamber_engine::Face {
        &self.lattice.by_dim[dim][&active]
    }

    pub fn is_outer(&self, active: u64) -> bool {
        active & self.outer_mask != 0
    }

    pub fn rep_of(&self, dim: usize, active: u64) -> u64 {
        self.class_rep[&(dim, active)]
    }

    pub fn witness_word(&self, dim: usize, active: u64) -> &[usize] {
        &self.witness[&(dim, active)]
    }

    /// All classes of a dimension: representative -> members.
    pub fn classes_of_dim(&self, dim: usize) -> BTreeMap<u64, Vec<u64>> {
        let mut out: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &key in &self.keys_by_dim[dim] {
            out.entry(self.class_rep[&(dim, key)]).or_default().push(key);
        }
        out
    }

    /// Inner walls (chamber indices) containing a face.
    pub fn inner_walls_of(&self, ctx: &EnriquesContext, active: u64) -> Vec<usize> {
        ctx.wall_labels
            .iter()
            .enumerate()
            .filter(|(w, l)| matches!(l, WallLabel::V(_)) && active >> *w & 1 == 1)
            .map(|(w, _)| w)
            .collect()
    }
}

/// Image of a face span under an isometry, as the active set of the image
/// face.
pub fn image_active(fl: &FaceLattice, span: &IMat, g: &lattice_core::Isometry) -> u64 {
    let img = span.mul(&g.m);
    fl.active_of_span(&img)
}

pub fn compute_faces(ctx: &EnriquesContext) -> FaceData {
    let fl = face_lattice(&ctx.sy, &ctx.dy);
    let mut outer_mask = 0u64;
    for (i, label) in ctx.wall_labels.iter().enumerate() {
        if matches!(label, WallLabel::U(_)) {
            outer_mask |= 1 << i;
        }
    }

    let mut keys_by_dim: Vec<Vec<u64>> = vec![Vec::new(); fl.rank];
    for dim in 1..fl.rank {
        keys_by_dim[dim] = fl.by_dim[dim].keys().copied().collect();
    }

    let mut class_rep: BTreeMap<(usize, u64), u64> = BTreeMap::new();
    let mut witness: BTreeMap<(usize, u64), Vec<usize>> = BTreeMap::new();
    let mut table = vec![(0usize, 0usize, 0usize, 0usize); fl.rank];

    for dim in 1..fl.rank {
        let mut reps_outer = 0usize;
        let mut reps_inner = 0usize;
        for &start in &keys_by_dim[dim] {
            if class_rep.contains_key(&(dim, start)) {
                continue;
            }
            // BFS of the class from its smallest member encountered first.
            // `word` maps a face onto `start` (generators applied left to
            // right); the representative is fixed as `start`.
            let mut queue = VecDeque::new();
            queue.push_back(start);
            class_rep.insert((dim, start), start);
            witness.insert((dim, start), Vec::new());
            let mut members = vec![start];
            while let Some(cur) = queue.pop_front() {
                let span = fl.by_dim[dim][&cur].span.clone();
                for (w, label) in ctx.wall_labels.iter().enumerate() {
                    let WallLabel::V(alpha) = label else { continue };
                    if cur >> w & 1 == 0 {
                        continue;
                    }
                    let img = image_active(&fl, &span, &ctx.g_bar[*alpha]);
                    assert!(
                        fl.by_dim[dim].contains_key(&img),
                        "involution image of a face must be a face"
                    );
                    if class_rep.contains_key(&(dim, img)) {
                        continue;
                    }
                    // img^{g_alpha} = cur, so img maps to start via
                    // alpha then cur's word.
                    let mut word = vec![*alpha];
                    word.extend_from_slice(&witness[&(dim, cur)]);
                    class_rep.insert((dim, img), start);
                    witness.insert((dim, img), word);
                    members.push(img);
                    queue.push_back(img);
                }
            }
            // class-invariance of outer-ness + witness verification
            let start_outer = start & outer_mask != 0;
            for &m in &members {
                assert_eq!(m & outer_mask != 0, start_outer, "class mixes outer and inner");
                let mut span = fl.by_dim[dim][&m].span.clone();
                for &a in &witness[&(dim, m)] {
                    span = span.mul(&ctx.g_bar[a].m);
                }
                assert_eq!(
                    fl.active_of_span(&span),
                    start,
                    "witness word fails to reach the representative"
                );
            }
            if start_outer {
                reps_outer += 1;
            } else {
                reps_inner += 1;
            }
        }
        for &key in &keys_by_dim[dim] {
            if key & outer_mask != 0 {
                table[dim].0 += 1;
            } else {
                table[dim].1 += 1;
            }
        }
        table[dim].2 = reps_outer;
        table[dim].3 = reps_inner;
    }

    FaceData { lattice: fl, outer_mask, keys_by_dim, class_rep, witness, table }
}
