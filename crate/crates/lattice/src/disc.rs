//! Discriminant groups of even lattices and the action of isometries on
//! them.
//!
//! For a lattice `L` with Gram matrix `G`, an element of the dual is a
//! rational row vector `v` with `v * G` integral, and the discriminant
//! group is `L^∨ / L`. Writing `y = v * G ∈ Z^n` and taking the Smith form
//! `S = U G V`, the class of `v` is read off from `y * V` modulo the
//! invariant factors.

use crate::lattice::{IntegerLattice, Isometry};
use crate::mat::{qvec_mat, QMat};
use crate::rat::{is_int, Rat};
use crate::snf;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    /// Invariant factors > 1, in divisibility order.
    pub invariant_factors: Vec<BigInt>,
    /// Dual-vector representatives of the cyclic generators (coordinates
    /// with respect to the lattice basis).
    pub generator_reps: Vec<Vec<Rat>>,
    /// Discriminant form values q(gen_i) in Q/2Z, normalized to [0, 2).
    pub q_values: Vec<Rat>,
    /// Pairings <gen_i, gen_j> in Q/Z, normalized to [0, 1).
    pub pairings: QMat,
    /// Column transform of the Smith form of the Gram matrix, used to read
    /// off class coordinates.
    v_transform: QMat,
    /// All diagonal entries of the Smith form (including 1s).
    full_diag: Vec<BigInt>,
}

fn mod_norm(x: &Rat, modulus: i64) -> Rat {
    let m = Rat::from(BigInt::from(modulus));
    let q = (x / &m).floor();
    x - q * m
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    /// Class coordinates of a dual vector: one residue per nontrivial
    /// invariant factor.
    pub fn class_coords(&self, lat: &IntegerLattice, dual: &[Rat]) -> Vec<BigInt> {
        let y = qvec_mat(dual, &lat.gram);
        assert!(y.iter().all(is_int), "vector is not in the dual lattice");
        let yv = {
            let row = QMat::from_rows(&[y]);
            row.mul(&self.v_transform)
        };
        let mut out = Vec::new();
        for (i, d) in self.full_diag.iter().enumerate() {
            if d > &BigInt::one() {
                let c = yv[(0, i)].to_integer();
                out.push(c.mod_floor(d));
            }
        }
        out
    }
}

/// Discriminant group of an even lattice via the Smith normal form of its
/// Gram matrix.
pub fn discriminant_group(lat: &IntegerLattice) -> DiscriminantGroup {
    let g = lat.gram.to_z();
    let s = snf::smith(&g);
    assert_eq!(s.rank, lat.rank, "gram matrix must be nondegenerate");
    let v_inv_q = s.v_inv.to_q();
    let gen_mat = v_inv_q.mul(lat.gram_inv());

    let mut invariant_factors = Vec::new();
    let mut generator_reps: Vec<Vec<Rat>> = Vec::new();
    for (i, d) in s.diag.iter().enumerate() {
        if d > &BigInt::one() {
            invariant_factors.push(d.clone());
            generator_reps.push(gen_mat.row(i).to_vec());
        }
    }
    let k = generator_reps.len();
    let mut q_values = Vec::with_capacity(k);
    let mut pairings = QMat::zero(k, k);
    for i in 0..k {
        q_values.push(mod_norm(&lat.inner_q(&generator_reps[i], &generator_reps[i]), 2));
        for j in 0..k {
            pairings[(i, j)] = mod_norm(&lat.inner_q(&generator_reps[i], &generator_reps[j]), 1);
        }
    }
    // sanity: |L^∨/L| = |det G|
    let order: BigInt = invariant_factors.iter().product();
    assert_eq!(order, lat.det().abs(), "discriminant order must equal |det|");

    DiscriminantGroup {
        invariant_factors,
        generator_reps,
        q_values,
        pairings,
        v_transform: s.v.to_q(),
        full_diag: s.diag,
    }
}

/// The action of an isometry on the discriminant group, as a matrix of
/// residues: row i holds the class coordinates of `gen_i ^ g`.
#[derive(Clone, Debug)]
pub struct DiscAction {
    pub matrix: Vec<Vec<BigInt>>,
}

pub fn disc_action(lat: &IntegerLattice, disc: &DiscriminantGroup, g: &Isometry) -> DiscAction {
    let matrix = disc
        .generator_reps
        .iter()
        .map(|rep| disc.class_coords(lat, &g.apply_q(rep)))
        .collect();
    DiscAction { matrix }
}

impl DiscAction {
    /// True when the action is `+id` or `-id` on the whole group.
    pub fn is_plus_minus_identity(&self, disc: &DiscriminantGroup) -> bool {
        let k = disc.invariant_factors.len();
        let check = |sign: i64| -> bool {
            for i in 0..k {
                for j in 0..k {
                    let want = if i == j {
                        (BigInt::from(sign)).mod_floor(&disc.invariant_factors[j])
                    } else {
                        BigInt::zero()
                    };
                    if self.matrix[i][j] != want {
                        return false;
                    }
                }
            }
            true
        };
        check(1) || check(-1)
    }

    pub fn is_identity(&self, disc: &DiscriminantGroup) -> bool {
        let k = disc.invariant_factors.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                let want =
                    if i == j { BigInt::one().mod_floor(&disc.invariant_factors[j]) } else { BigInt::zero() };
                self.matrix[i][j] == want
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::reflection;
    use crate::mat::IMat;

    #[test]
    fn unimodular_is_trivial() {
        let u = IntegerLattice::hyperbolic(IMat::from_rows(&[vec![0, 1], vec![1, 0]])).unwrap();
        let d = discriminant_group(&u);
        assert!(d.invariant_factors.is_empty());
        assert_eq!(d.order(), BigInt::one());
    }

    #[test]
    fn a1_scaled() {
        // <-4>: discriminant group Z/4 with q(gen) = -1/4 mod 2Z = 7/4
        let lat = IntegerLattice::negative_definite(IMat::from_rows(&[vec![-4]])).unwrap();
        let d = discriminant_group(&lat);
        assert_eq!(d.invariant_factors, vec![BigInt::from(4)]);
        assert_eq!(d.q_values[0], crate::rat::rat(7, 4));
    }

    #[test]
    fn q_values_reflection_invariant() {
        // A2(1) negative definite: disc group Z/3
        let lat = IntegerLattice::negative_definite(IMat::from_rows(&[
            vec![-2, 1],
            vec![1, -2],
        ]))
        .unwrap();
        let d = discriminant_group(&lat);
        assert_eq!(d.invariant_factors, vec![BigInt::from(3)]);
        let s = reflection(&lat, &[1, 0]).unwrap();
        for rep in &d.generator_reps {
            let img = s.apply_q(rep);
            let q_before = mod_norm(&lat.inner_q(rep, rep), 2);
            let q_after = mod_norm(&lat.inner_q(&img, &img), 2);
            assert_eq!(q_before, q_after);
        }
        // the reflection acts as -id ∘ (swap)… on Z/3 it is ±1
        let act = disc_action(&lat, &d, &s);
        assert!(act.is_plus_minus_identity(&d));
    }
}
