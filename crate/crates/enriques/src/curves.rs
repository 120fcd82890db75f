//! Smooth rational curve classes by degree.
//!
//! For each degree d, the candidates are the norm -2 vectors of degree d
//! that lift to the K3 side (a parity condition against the 72 anti-fixed
//! norm -4 vectors), and a candidate is a curve class exactly when it does
//! not pair negatively with a curve class of smaller degree. The
//! enumeration runs once per degree through a shared scanner; the lift
//! test is a table lookup, and the reducibility filter runs against the
//! accumulated classes with early exit.

use crate::context::EnriquesContext;
use lattice_core::mat::vec_mat;
use lattice_core::rat::rat_i;
use lattice_core::PairingScanner;
use std::collections::BTreeMap;

pub struct CurveTable {
    /// Curve classes by degree, each list lexicographically sorted.
    pub by_degree: BTreeMap<i64, Vec<Vec<i64>>>,
}

impl CurveTable {
    pub fn count(&self, d: i64) -> usize {
        self.by_degree.get(&d).map(|v| v.len()).unwrap_or(0)
    }

    pub fn max_degree(&self) -> i64 {
        self.by_degree.keys().max().copied().unwrap_or(0)
    }

    /// All classes with degree at most `d_max`, with degrees, ascending.
    pub fn up_to(&self, d_max: i64) -> Vec<(i64, &Vec<i64>)> {
        let mut out = Vec::new();
        for (&d, list) in &self.by_degree {
            if d > d_max {
                break;
            }
            for v in list {
                out.push((d, v));
            }
        }
        out
    }
}

/// Compute all curve classes of degree 1..=d_max.
pub fn rational_curves(ctx: &EnriquesContext, d_max: i64) -> CurveTable {
    let sy = &ctx.sy;
    let ell = vec_mat(&ctx.h_y, &sy.gram);
    let scanner =
        PairingScanner::new(&sy.gram.to_q(), &ell).expect("degree functional has definite kernel");

    // Accumulated curves as pairing covectors for the filter.
    let mut known_cov: Vec<Vec<i64>> = Vec::new();
    let mut by_degree: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();

    for d in 1..=d_max {
        let mut found: Vec<Vec<i64>> = Vec::new();
        scanner.scan(&rat_i(-2), &rat_i(d), |v| {
            if !ctx.is_liftable(v) {
                return;
            }
            // reducibility: a negative pairing against any smaller-degree
            // curve class disqualifies the candidate
            for cov in &known_cov {
                if lattice_core::mat::dot(cov, v) < 0 {
                    return;
                }
            }
            found.push(v.to_vec());
        });
        found.sort();
        for v in &found {
            known_cov.push(vec_mat(v, &sy.gram));
        }
        by_degree.insert(d, found);
    }
    CurveTable { by_degree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::build_context;

    #[test]
    fn low_degrees() {
        let ctx = build_context();
        let curves = rational_curves(&ctx, 6);
        // degree-1 classes are exactly the ten curve walls
        let mut u = ctx.u_bar.clone();
        u.sort();
        assert_eq!(curves.by_degree[&1], u);
        assert_eq!(curves.count(2), 0);
        assert_eq!(curves.count(3), 0);
        assert_eq!(curves.count(4), 0);
        assert_eq!(curves.count(5), 10);
        assert_eq!(curves.count(6), 0);
        for (_, list) in &curves.by_degree {
            for v in list {
                assert_eq!(ctx.sy.inner(v, v), -2);
            }
        }
    }
}
