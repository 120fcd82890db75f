//! Schreier-Sims stabilizer chain for groups of F2 matrices acting on the
//! 1024 points of F2^10, base points in lexicographic order.

use crate::f2::{F2Mat, POINTS};
use std::collections::HashMap;

struct Level {
    base: u16,
    /// orbit point -> transversal element carrying base to it
    transversal: HashMap<u16, F2Mat>,
    gens: Vec<F2Mat>,
}

pub struct StabilizerChain {
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.transversal.len() as u128).product()
    }

    /// Strip an element through the chain; identity residue means
    /// membership.
    pub fn contains(&self, g: &F2Mat) -> bool {
        let mut cur = *g;
        for level in &self.levels {
            let img = cur.apply(level.base);
            let Some(t) = level.transversal.get(&img) else { return false };
            cur = cur.mul(&t.inverse());
        }
        cur.is_identity()
    }
}

/// Deterministic Schreier-Sims: build the chain by processing every
/// Schreier generator at every level until closure.
pub fn stabilizer_chain(generators: &[F2Mat]) -> StabilizerChain {
    let mut chain = StabilizerChain { levels: Vec::new() };
    for g in generators {
        extend(&mut chain, 0, *g);
    }
    chain
}

pub fn group_order(generators: &[F2Mat]) -> u128 {
    stabilizer_chain(generators).order()
}

fn extend(chain: &mut StabilizerChain, level: usize, g: F2Mat) {
    if g.is_identity() {
        return;
    }
    if level == chain.levels.len() {
        // first moved point in lexicographic order
        let base = (0..POINTS as u16)
            .find(|&p| g.apply(p) != p)
            .expect("non-identity element moves a point");
        let mut transversal = HashMap::new();
        transversal.insert(base, F2Mat::identity());
        chain.levels.push(Level { base, transversal, gens: Vec::new() });
    }
    // sift: if g stays inside the current transversal structure, push the
    // residue further down; otherwise register it as a new generator
    let (base, known) = {
        let l = &chain.levels[level];
        (l.base, l.transversal.get(&g.apply(l.base)).copied())
    };
    match known {
        Some(t) => {
            let residue = g.mul(&t.inverse());
            if !residue.is_identity() {
                extend(chain, level + 1, residue);
            }
        }
        None => {
            chain.levels[level].gens.push(g);
            close_orbit(chain, level);
        }
    }
    let _ = base;
}

/// Recompute the orbit/transversal at a level and sift all Schreier
/// generators.
fn close_orbit(chain: &mut StabilizerChain, level: usize) {
    loop {
        let (base, gens) = {
            let l = &chain.levels[level];
            (l.base, l.gens.clone())
        };
        // rebuild orbit
        let mut frontier: Vec<u16> = chain.levels[level].transversal.keys().copied().collect();
        frontier.sort();
        let mut schreier: Vec<F2Mat> = Vec::new();
        while let Some(p) = frontier.pop() {
            let t = chain.levels[level].transversal[&p];
            for g in &gens {
                let img = g.apply(p);
                let tg = t.mul(g);
                match chain.levels[level].transversal.get(&img) {
                    None => {
                        chain.levels[level].transversal.insert(img, tg);
                        frontier.push(img);
                    }
                    Some(u) => {
                        let s = tg.mul(&u.inverse());
                        if !s.is_identity() {
                            schreier.push(s);
                        }
                    }
                }
            }
            let _ = base;
        }
        if schreier.is_empty() {
            return;
        }
        for s in schreier {
            extend(chain, level + 1, s);
        }
        // new deeper generators cannot invalidate this level's orbit, but
        // this level's generator list may have grown via recursion
        if chain.levels[level].gens.len() == gens.len() {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_generators_give_trivial_group() {
        assert_eq!(group_order(&[]), 1);
    }

    #[test]
    fn single_transvection() {
        // x -> x + <x, e2> e1 style map of order 2
        let mut m = F2Mat::identity();
        m.rows[1] |= 1; // e2 -> e2 + e1
        assert_eq!(group_order(&[m]), 2);
        let chain = stabilizer_chain(&[m]);
        assert!(chain.contains(&m));
        assert!(chain.contains(&F2Mat::identity()));
        let mut other = F2Mat::identity();
        other.rows[2] |= 1;
        assert!(!chain.contains(&other));
    }

    #[test]
    fn permutation_group_order() {
        // permutation matrices on 3 of the coordinates generate S3 (order 6)
        let swap = |a: usize, b: usize| {
            let mut m = F2Mat::identity();
            m.rows.swap(a, b);
            m
        };
        assert_eq!(group_order(&[swap(0, 1), swap(1, 2)]), 6);
        // full symmetric group on the 10 coordinates
        let gens: Vec<F2Mat> = (0..9).map(|i| swap(i, i + 1)).collect();
        assert_eq!(group_order(&gens), 3628800);
    }
}
