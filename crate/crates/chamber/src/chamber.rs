//! Chambers in the positive cone of a hyperbolic lattice: canonical
//! defining vectors, wall extraction, point classification.

use crate::lp::defines_wall;
use lattice_core::mat::qvec_mat;
use lattice_core::rat::{primitive_integer_direction, rat_i, Rat};
use lattice_core::IntegerLattice;
use num_traits::{Signed, Zero};

/// A chamber `{ x : <v, x> >= 0 for all v in defining }` with a certified
/// interior point. Defining vectors are stored as primitive dual vectors in
/// pairing coordinates: `pairing[i] = v * G`, an integer primitive row, so
/// `<v, x> = pairing · x`.
#[derive(Clone, Debug)]
pub struct Chamber {
    pub rank: usize,
    /// Primitive integer pairing covectors, one per defining half-space,
    /// deduplicated and sorted.
    pub pairings: Vec<Vec<i64>>,
    /// The defining vectors themselves (rational lattice coordinates),
    /// aligned with `pairings`.
    pub defining: Vec<Vec<Rat>>,
    pub interior: Vec<i64>,
}

/// Where a point sits relative to a chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointClass {
    Interior,
    /// Indices of the defining vectors vanishing on the point.
    Boundary(Vec<usize>),
    Outside,
}

impl Chamber {
    /// Build a chamber from rational defining vectors. Each vector is
    /// replaced by the primitive dual vector cutting the same half-space;
    /// exact duplicates merge. Positive-proportional pairs therefore cannot
    /// survive, which is the distinct-half-space requirement for the wall
    /// algorithm. The interior point must pair strictly positively with
    /// every defining vector.
    pub fn new(lat: &IntegerLattice, defining: &[Vec<Rat>], interior: Vec<i64>) -> Self {
        assert!(lat.inner(&interior, &interior) > 0, "interior point must have positive norm");
        let mut seen = std::collections::BTreeSet::new();
        let mut pairings = Vec::new();
        for v in defining {
            let p = qvec_mat(v, &lat.gram);
            let prim = primitive_integer_direction(&p).expect("zero defining vector");
            if seen.insert(prim.clone()) {
                pairings.push(prim);
            }
        }
        pairings.sort();
        let ginv = lat.gram_inv();
        let defining: Vec<Vec<Rat>> = pairings
            .iter()
            .map(|p| {
                let pq: Vec<Rat> = p.iter().map(|&x| rat_i(x)).collect();
                let row = lattice_core::mat::QMat::from_rows(&[pq]);
                row.mul(ginv).row(0).to_vec()
            })
            .collect();
        for p in &pairings {
            let val = lattice_core::mat::dot(p, &interior);
            assert!(val > 0, "interior point is not interior: pairing {p:?} gives {val}");
        }
        Chamber { rank: lat.rank, pairings, defining, interior }
    }

    /// The primitive defining vectors of actual walls, by the exact LP
    /// test, as indices into `pairings`.
    pub fn wall_indices(&self) -> Vec<usize> {
        let forms: Vec<Vec<Rat>> = self
            .pairings
            .iter()
            .map(|p| p.iter().map(|&x| rat_i(x)).collect())
            .collect();
        (0..forms.len()).filter(|&i| defines_wall(&forms, i).is_wall()).collect()
    }

    /// Minimal chamber: keep only the walls. Returns the reduced chamber
    /// and the wall pairing covectors.
    pub fn walls_of(&self, lat: &IntegerLattice) -> Chamber {
        let idx = self.wall_indices();
        let defining: Vec<Vec<Rat>> = idx.iter().map(|&i| self.defining[i].clone()).collect();
        Chamber::new(lat, &defining, self.interior.clone())
    }

    /// Classify a rational point against the defining set.
    pub fn classify_point(&self, x: &[Rat]) -> PointClass {
        let mut active = Vec::new();
        for (i, p) in self.pairings.iter().enumerate() {
            let mut acc = Rat::zero();
            for j in 0..x.len() {
                if p[j] != 0 && !x[j].is_zero() {
                    acc += rat_i(p[j]) * &x[j];
                }
            }
            if acc.is_negative() {
                return PointClass::Outside;
            }
            if acc.is_zero() {
                active.push(i);
            }
        }
        if active.is_empty() {
            PointClass::Interior
        } else {
            PointClass::Boundary(active)
        }
    }

    pub fn classify_point_i(&self, x: &[i64]) -> PointClass {
        let xq: Vec<Rat> = x.iter().map(|&v| rat_i(v)).collect();
        self.classify_point(&xq)
    }
}

/// The canonical primitive dual vector cutting the same positive half-space
/// as `v` (nonzero rational lattice coordinates).
pub fn primitive_dual(lat: &IntegerLattice, v: &[Rat]) -> Vec<Rat> {
    let p = qvec_mat(v, &lat.gram);
    let prim = primitive_integer_direction(&p).expect("primitive_dual of zero vector");
    let pq: Vec<Rat> = prim.iter().map(|&x| rat_i(x)).collect();
    let row = lattice_core::mat::QMat::from_rows(&[pq]);
    row.mul(lat.gram_inv()).row(0).to_vec()
}

