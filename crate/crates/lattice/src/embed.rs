//! Primitive embeddings of lattices, orthogonal projections and
//! complements.

use crate::error::LatticeError;
use crate::lattice::{IntegerLattice, SignatureKind};
use crate::mat::{qvec_mat, IMat, QMat};
use crate::rat::Rat;
use crate::snf;

/// An isometric embedding `source -> target` given by a basis matrix acting
/// on row coordinates, possibly rescaling the form: the rows `M` satisfy
/// `M * G_target * M^T = scale * G_source`. Primitivity means the image is
/// a direct summand, equivalently all invariant factors of `M` are 1.
#[derive(Clone, Debug)]
pub struct PrimitiveEmbedding {
    pub source: IntegerLattice,
    pub target: IntegerLattice,
    pub matrix: IMat,
    pub scale: i64,
    /// `(scale * G_source)^{-1}`, cached for projections.
    emb_gram_inv: QMat,
}

impl PrimitiveEmbedding {
    pub fn new(
        source: IntegerLattice,
        target: IntegerLattice,
        matrix: IMat,
        scale: i64,
    ) -> Result<Self, LatticeError> {
        if matrix.rows != source.rank || matrix.cols != target.rank {
            return Err(LatticeError::DimensionMismatch {
                expected: source.rank,
                got: matrix.rows,
            });
        }
        let prod = matrix.mul(&target.gram).mul(&matrix.transpose());
        let mut scaled = source.gram.clone();
        for x in scaled.a.iter_mut() {
            *x = x.checked_mul(scale).expect("scale overflow");
        }
        if prod != scaled {
            return Err(LatticeError::NotIsometric);
        }
        let facs = snf::invariant_factors(&matrix.to_z());
        if !facs.iter().all(|f| f == &num_bigint::BigInt::from(1)) {
            return Err(LatticeError::NotPrimitive);
        }
        let emb_gram_inv = scaled.to_q().inverse().ok_or(LatticeError::Degenerate)?;
        Ok(PrimitiveEmbedding { source, target, matrix, scale, emb_gram_inv })
    }

    /// Push a rational source vector into target coordinates.
    pub fn push(&self, v: &[Rat]) -> Vec<Rat> {
        qvec_mat(v, &self.matrix)
    }

    pub fn push_i(&self, v: &[i64]) -> Vec<i64> {
        crate::mat::vec_mat(v, &self.matrix)
    }

    /// Orthogonal projection of a rational target vector onto the source,
    /// in source coordinates: the unique `w` with
    /// `<w, s>_emb = <v, i(s)>_target` for every source vector `s`,
    /// where `<,>_emb = scale * <,>_source`.
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        let vg = qvec_mat(v, &self.target.gram);
        let vgmt = qvec_mat(&vg, &self.matrix.transpose());
        let row = QMat::from_rows(&[vgmt]);
        row.mul(&self.emb_gram_inv).row(0).to_vec()
    }

    /// Projection scaled to the source's own form: pairing of the result
    /// with `s` under `<,>_source` equals `<v, i(s)>_target / scale`.
    pub fn project_i(&self, v: &[i64]) -> Vec<Rat> {
        let vq: Vec<Rat> = v.iter().map(|&x| crate::rat::rat_i(x)).collect();
        self.project(&vq)
    }

    /// Basis (rows, in target coordinates) of the orthogonal complement of
    /// the image, together with its Gram matrix. The complement of a
    /// primitive sublattice is saturated automatically.
    pub fn complement(&self) -> (IMat, IMat) {
        let gmt = self.target.gram.mul(&self.matrix.transpose()).to_z();
        let ker = snf::left_kernel(&gmt);
        let basis = ker.to_i().expect("complement basis fits i64");
        let gram = basis.mul(&self.target.gram).mul(&basis.transpose());
        (basis, gram)
    }

    /// Complement as a lattice with the stated signature kind.
    pub fn complement_lattice(&self, kind: SignatureKind) -> Result<(IntegerLattice, IMat), LatticeError> {
        let (basis, gram) = self.complement();
        let lat = IntegerLattice::new(gram, kind)?;
        Ok((lat, basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i, to_rat_vec};

    fn u_plus_a1() -> IntegerLattice {
        IntegerLattice::hyperbolic(IMat::from_rows(&[
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![0, 0, -2],
        ]))
        .unwrap()
    }

    #[test]
    fn embedding_validation() {
        let big = u_plus_a1();
        let small = IntegerLattice::hyperbolic(IMat::from_rows(&[vec![0, 1], vec![1, 0]])).unwrap();
        let m = IMat::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let emb = PrimitiveEmbedding::new(small.clone(), big.clone(), m, 1).unwrap();
        let (basis, gram) = emb.complement();
        assert_eq!(basis.rows, 1);
        assert_eq!(gram[(0, 0)], -2);

        // non-primitive: image of index 2
        let m2 = IMat::from_rows(&[vec![2, 0, 0], vec![0, 2, 0]]);
        let small4 = IntegerLattice::hyperbolic(IMat::from_rows(&[vec![0, 4], vec![4, 0]])).unwrap();
        assert!(matches!(
            PrimitiveEmbedding::new(small4, big, m2, 1),
            Err(LatticeError::NotPrimitive)
        ));
    }

    #[test]
    fn projection_restricted_to_image_is_identity() {
        let big = u_plus_a1();
        let small = IntegerLattice::hyperbolic(IMat::from_rows(&[vec![0, 1], vec![1, 0]])).unwrap();
        let m = IMat::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let emb = PrimitiveEmbedding::new(small, big, m, 1).unwrap();
        let x = to_rat_vec(&[3, -2]);
        let pushed = emb.push(&x);
        assert_eq!(emb.project(&pushed), x);
        // a vector in the complement projects to zero
        let z = to_rat_vec(&[0, 0, 1]);
        assert_eq!(emb.project(&z), vec![rat_i(0), rat_i(0)]);
    }

    #[test]
    fn complement_of_everything_is_zero() {
        let u = IntegerLattice::hyperbolic(IMat::from_rows(&[vec![0, 1], vec![1, 0]])).unwrap();
        let emb =
            PrimitiveEmbedding::new(u.clone(), u.clone(), IMat::identity(2), 1).unwrap();
        let (basis, _gram) = emb.complement();
        assert_eq!(basis.rows, 0);
    }
}
