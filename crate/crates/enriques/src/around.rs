//! The finite group of chamber images containing a fixed non-ideal face.
//!
//! Breadth-first search seeded at the identity: from an element g whose
//! chamber image contains the face F, pull F back into the base chamber,
//! list the inner walls through the pullback, and step through each of
//! their involutions. The search closes because only finitely many
//! chambers contain a non-ideal face.

use crate::context::EnriquesContext;
use crate::faces::FaceData;
use lattice_core::mat::IMat;
use lattice_core::Isometry;
use std::collections::{BTreeSet, VecDeque};

/// All isometries in the chamber group whose chamber contains the given
/// face (by dimension and active set). The face must not be ideal.
pub fn group_around_face(
    ctx: &EnriquesContext,
    fd: &FaceData,
    dim: usize,
    active: u64,
    cap: usize,
) -> Vec<Isometry> {
    let face = fd.face(dim, active);
    assert!(!face.ideal, "the group around an ideal face is infinite");
    let span = face.span.clone();

    let n = ctx.sy.rank;
    let id = Isometry::identity(n);
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out: Vec<(Isometry, Isometry)> = Vec::new(); // (g, g^{ -1})
    let key = |m: &IMat| m.a.clone();
    seen.insert(key(&id.m));
    out.push((id.clone(), id));
    let mut queue: VecDeque<usize> = VecDeque::new();
    queue.push_back(0);

    while let Some(idx) = queue.pop_front() {
        let (g_cur, g_inv) = out[idx].clone();
        // Pull the face back into the base chamber.
        let pullback = span.mul(&g_inv.m);
        let pull_active = fd.lattice.active_of_span(&pullback);
        assert!(
            fd.lattice.by_dim[dim].contains_key(&pull_active),
            "pullback of the face must be a face of the base chamber"
        );
        for w in fd.inner_walls_of(ctx, pull_active) {
            let crate::context::WallLabel::V(alpha) = ctx.wall_labels[w] else {
                unreachable!()
            };
            // next = g(alpha) * g  (right action: apply g(alpha) first)
            let step = &ctx.g_bar[alpha];
            let next = step.compose(&g_cur);
            if seen.insert(key(&next.m)) {
                assert!(out.len() < cap, "group around face exceeded cap {cap}");
                let next_inv = g_inv.compose(step); // (s g)^{-1} = g^{-1} s
                out.push((next, next_inv));
                queue.push_back(out.len() - 1);
            }
        }
    }
    out.into_iter().map(|(g, _)| g).collect()
}
