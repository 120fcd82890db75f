//! Even lattices, their pairings, isometries and reflections.

use crate::error::LatticeError;
use crate::mat::{qvec_mat, vec_mat, IMat, QMat};
use crate::rat::{rat_i, Rat};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureKind {
    /// Signature (1, n-1).
    Hyperbolic,
    /// Signature (0, n).
    NegativeDefinite,
}

/// A free Z-module of finite rank with a nondegenerate even symmetric
/// integer Gram matrix. Vectors are rows in basis coordinates.
#[derive(Clone, Debug)]
pub struct IntegerLattice {
    pub rank: usize,
    pub gram: IMat,
    pub kind: SignatureKind,
    gram_inv: QMat,
}

impl IntegerLattice {
    pub fn new(gram: IMat, kind: SignatureKind) -> Result<Self, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        let rank = gram.rows;
        for i in 0..rank {
            if gram[(i, i)] % 2 != 0 {
                return Err(LatticeError::NotEven);
            }
        }
        let gq = gram.to_q();
        let Some(gram_inv) = gq.inverse() else {
            return Err(LatticeError::Degenerate);
        };
        let (pos, neg, zero) = gq.inertia();
        debug_assert_eq!(zero, 0);
        let ok = match kind {
            SignatureKind::Hyperbolic => pos == 1 && neg == rank - 1,
            SignatureKind::NegativeDefinite => pos == 0 && neg == rank,
        };
        if !ok {
            return Err(LatticeError::SignatureMismatch {
                expected: match kind {
                    SignatureKind::Hyperbolic => "(1, n-1)",
                    SignatureKind::NegativeDefinite => "(0, n)",
                },
                pos,
                neg,
            });
        }
        Ok(IntegerLattice { rank, gram, kind, gram_inv })
    }

    pub fn hyperbolic(gram: IMat) -> Result<Self, LatticeError> {
        Self::new(gram, SignatureKind::Hyperbolic)
    }

    pub fn negative_definite(gram: IMat) -> Result<Self, LatticeError> {
        Self::new(gram, SignatureKind::NegativeDefinite)
    }

    pub fn gram_inv(&self) -> &QMat {
        &self.gram_inv
    }

    /// Exact pairing of two integer vectors.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        assert_eq!(x.len(), self.rank, "inner: x has wrong length");
        assert_eq!(y.len(), self.rank, "inner: y has wrong length");
        let gy = vec_mat(y, &self.gram);
        crate::mat::dot(x, &gy)
    }

    /// Exact pairing of two rational vectors.
    pub fn inner_q(&self, x: &[Rat], y: &[Rat]) -> Rat {
        assert_eq!(x.len(), self.rank);
        assert_eq!(y.len(), self.rank);
        let gy = qvec_mat(y, &self.gram);
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if !x[i].is_zero() && !gy[i].is_zero() {
                acc += &x[i] * &gy[i];
            }
        }
        acc
    }

    /// Mixed pairing: integer vector against rational vector.
    pub fn inner_iq(&self, x: &[i64], y: &[Rat]) -> Rat {
        let xq: Vec<Rat> = x.iter().map(|&v| rat_i(v)).collect();
        self.inner_q(&xq, y)
    }

    /// Membership of a rational vector in the dual lattice: the pairing with
    /// every basis vector must be an integer, i.e. `coords * gram` integral.
    pub fn in_dual(&self, coords: &[Rat]) -> bool {
        qvec_mat(coords, &self.gram).iter().all(|x| crate::rat::is_int(x))
    }

    pub fn det(&self) -> num_bigint::BigInt {
        self.gram.to_z().det()
    }
}

/// An isometry of a lattice, acting on row vectors from the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub m: IMat,
}

impl Isometry {
    pub fn new(lat: &IntegerLattice, m: IMat) -> Result<Self, LatticeError> {
        if m.rows != lat.rank || m.cols != lat.rank {
            return Err(LatticeError::DimensionMismatch { expected: lat.rank, got: m.rows });
        }
        let g = &lat.gram;
        let prod = m.mul(g).mul(&m.transpose());
        if &prod != g {
            return Err(LatticeError::NotIsometry);
        }
        Ok(Isometry { m })
    }

    pub fn identity(n: usize) -> Self {
        Isometry { m: IMat::identity(n) }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        vec_mat(v, &self.m)
    }

    pub fn apply_q(&self, v: &[Rat]) -> Vec<Rat> {
        qvec_mat(v, &self.m)
    }

    /// Composition: `x^(self * other) = (x^self)^other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry { m: self.m.mul(&other.m) }
    }

    /// Exact inverse (integral because the determinant is a unit).
    pub fn inverse(&self) -> Isometry {
        let inv = self
            .m
            .to_q()
            .inverse()
            .expect("isometry is invertible")
            .to_i()
            .expect("inverse of an isometry is integral");
        Isometry { m: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.m == IMat::identity(self.m.rows)
    }

    pub fn det(&self) -> i64 {
        i64::try_from(&self.m.to_z().det()).expect("isometry determinant is ±1")
    }
}

/// Reflection in a root `r` (a vector with self-pairing -2):
/// `x -> x + <x, r> r`.
pub fn reflection(lat: &IntegerLattice, r: &[i64]) -> Result<Isometry, LatticeError> {
    if lat.inner(r, r) != -2 {
        return Err(LatticeError::NotRoot);
    }
    let n = lat.rank;
    let mut m = IMat::zero(n, n);
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        let c = lat.inner(&e, r);
        for j in 0..n {
            let v = e[j] as i128 + c as i128 * r[j] as i128;
            m[(i, j)] = i64::try_from(v).expect("reflection overflow");
        }
    }
    Isometry::new(lat, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u_lattice() -> IntegerLattice {
        IntegerLattice::hyperbolic(IMat::from_rows(&[vec![0, 1], vec![1, 0]])).unwrap()
    }

    #[test]
    fn inner_bilinear_zero() {
        let u = u_lattice();
        assert_eq!(u.inner(&[0, 0], &[3, 5]), 0);
        assert_eq!(u.inner(&[1, 1], &[1, 1]), 2);
    }

    #[test]
    fn odd_diagonal_rejected() {
        let g = IMat::from_rows(&[vec![1, 0], vec![0, -2]]);
        assert!(IntegerLattice::hyperbolic(g).is_err());
    }

    #[test]
    fn signature_checked() {
        let g = IMat::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert!(IntegerLattice::hyperbolic(g.clone()).is_err());
        assert!(IntegerLattice::negative_definite(g).is_err());
        let neg = IMat::from_rows(&[vec![-2, 1], vec![1, -2]]);
        assert!(IntegerLattice::negative_definite(neg).is_ok());
    }

    #[test]
    fn reflection_negates_root_and_fixes_perp() {
        // A1 + A1 inside a rank-2 negative definite lattice
        let lat = IntegerLattice::negative_definite(IMat::from_rows(&[vec![-2, 0], vec![0, -2]]))
            .unwrap();
        let s = reflection(&lat, &[1, 0]).unwrap();
        assert_eq!(s.apply(&[1, 0]), vec![-1, 0]);
        assert_eq!(s.apply(&[0, 1]), vec![0, 1]);
        assert!(s.compose(&s).is_identity());
    }

    #[test]
    fn non_root_rejected() {
        let lat = IntegerLattice::negative_definite(IMat::from_rows(&[vec![-4]])).unwrap();
        assert!(reflection(&lat, &[1]).is_err());
    }
}
