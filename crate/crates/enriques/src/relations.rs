//! Defining relations of the chamber group from the 8-dimensional inner
//! faces.
//!
//! Around each 8-dimensional inner face the chambers form a closed cycle;
//! walking it spells a relator word in the wall involutions. Together with
//! the involution relations of the ten generators these words present the
//! group.

use crate::context::{EnriquesContext, WallLabel};
use crate::faces::FaceData;
use hessian_k3::indices::{intersection_size, TRIPLES};
use lattice_core::Isometry;

#[derive(Clone, Debug)]
pub struct Relator {
    /// Generator indices, applied left to right; the product is the
    /// identity.
    pub word: Vec<usize>,
    /// The two inner walls of the originating face.
    pub face_walls: (usize, usize),
}

pub struct Relations {
    /// One relator per 8-dimensional inner face.
    pub relators: Vec<Relator>,
    /// Pairs with singleton intersection: commuting squares.
    pub commuting_pairs: Vec<(usize, usize)>,
    /// Triples over a common pair: hexagons.
    pub hexagon_triples: Vec<(usize, usize, usize)>,
}

/// Walk the chamber cycle around an 8-dimensional inner face and return
/// the relator word.
fn walk_cycle(ctx: &EnriquesContext, fd: &FaceData, active: u64) -> Vec<usize> {
    let dim = 8;
    let face = fd.face(dim, active);
    let inner = fd.inner_walls_of(ctx, active);
    assert_eq!(inner.len(), 2, "an 8-dimensional inner face lies in exactly two walls");
    for w in 0..ctx.wall_labels.len() {
        if active >> w & 1 == 1 {
            assert!(inner.contains(&w), "both walls through an inner face are inner");
        }
    }

    let alpha_of = |w: usize| -> usize {
        match ctx.wall_labels[w] {
            WallLabel::V(a) => a,
            WallLabel::U(_) => unreachable!("inner wall expected"),
        }
    };
    let mut word: Vec<usize> = Vec::new();
    let mut g = Isometry::identity(ctx.sy.rank);
    let mut g_inv = g.clone();
    let mut prev_alpha: Option<usize> = None;
    loop {
        // Pull the face back into the base chamber and pick the fresh wall.
        let pullback = face.span.mul(&g_inv.m);
        let pb_active = fd.lattice.active_of_span(&pullback);
        let walls = fd.inner_walls_of(ctx, pb_active);
        assert_eq!(walls.len(), 2);
        let alphas: Vec<usize> = walls.into_iter().map(alpha_of).collect();
        let next = match prev_alpha {
            None => alphas[0],
            Some(p) => {
                let fresh: Vec<usize> = alphas.iter().copied().filter(|&a| a != p).collect();
                assert_eq!(fresh.len(), 1, "cycle step must leave through the other wall");
                fresh[0]
            }
        };
        word.push(next);
        let step = &ctx.g_bar[next];
        g = step.compose(&g);
        g_inv = g_inv.compose(step);
        prev_alpha = Some(next);
        if g.is_identity() {
            break;
        }
        assert!(word.len() < 64, "chamber cycle failed to close");
    }
    word
}

/// Extract the full relator list and classify it.
pub fn defining_relations(ctx: &EnriquesContext, fd: &FaceData) -> Relations {
    // Generators are involutions; that is the first family of relations.
    for g in &ctx.g_bar {
        assert!(g.compose(g).is_identity());
    }

    let mut relators = Vec::new();
    let mut commuting = std::collections::BTreeSet::new();
    let mut hexagons = std::collections::BTreeSet::new();
    let keys: Vec<u64> = fd.keys_by_dim[8]
        .iter()
        .copied()
        .filter(|k| !fd.is_outer(*k))
        .collect();
    assert_eq!(keys.len(), 45, "ten-choose-two inner faces in dimension 8");
    for active in keys {
        let word = walk_cycle(ctx, fd, active);
        // verify: the word multiplies to the identity
        let mut prod = Isometry::identity(ctx.sy.rank);
        for &a in &word {
            prod = ctx.g_bar[a].compose(&prod);
        }
        assert!(prod.is_identity(), "relator word must evaluate to the identity");

        let inner = fd.inner_walls_of(ctx, active);
        let a0 = match ctx.wall_labels[inner[0]] {
            WallLabel::V(a) => a,
            _ => unreachable!(),
        };
        let a1 = match ctx.wall_labels[inner[1]] {
            WallLabel::V(a) => a,
            _ => unreachable!(),
        };
        let inter = intersection_size(&TRIPLES[a0], &TRIPLES[a1]);
        match inter {
            1 => {
                assert_eq!(word.len(), 4, "singleton intersection gives a square");
                let pair = (a0.min(a1), a0.max(a1));
                commuting.insert(pair);
                // word is an alternation of the two generators
                let set: std::collections::BTreeSet<usize> = word.iter().copied().collect();
                assert_eq!(set, [a0, a1].into_iter().collect());
            }
            2 => {
                assert_eq!(word.len(), 6, "pair intersection gives a hexagon");
                let set: std::collections::BTreeSet<usize> = word.iter().copied().collect();
                assert_eq!(set.len(), 3, "hexagon involves three generators");
                let v: Vec<usize> = set.into_iter().collect();
                // the three triples share a common pair
                let mut common: Vec<u8> = TRIPLES[v[0]].to_vec();
                common.retain(|x| TRIPLES[v[1]].contains(x) && TRIPLES[v[2]].contains(x));
                assert_eq!(common.len(), 2, "hexagon triples share a pair");
                hexagons.insert((v[0], v[1], v[2]));
            }
            other => panic!("unexpected wall intersection pattern {other}"),
        }
        relators.push(Relator { word, face_walls: (inner[0], inner[1]) });
    }

    Relations {
        relators,
        commuting_pairs: commuting.into_iter().collect(),
        hexagon_triples: hexagons.into_iter().collect(),
    }
}
