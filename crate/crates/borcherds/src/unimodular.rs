//! The even unimodular hyperbolic lattices of rank 10 and 26, with their
//! distinguished Weyl vectors and root data.

use crate::data;
use lattice_core::mat::IMat;
use lattice_core::{short_vectors, IntegerLattice, LatticeError, SignatureKind};

/// Gram matrix of the hyperbolic plane.
pub fn u_gram() -> IMat {
    IMat::from_rows(&[vec![0, 1], vec![1, 0]])
}

/// Negative-definite E8 with the chain e2-...-e8 and e1 attached to e4.
pub fn e8_gram() -> IMat {
    let mut g = IMat::zero(8, 8);
    for i in 0..8 {
        g[(i, i)] = -2;
    }
    let mut join = |a: usize, b: usize| {
        g[(a, b)] = 1;
        g[(b, a)] = 1;
    };
    join(0, 3);
    for i in 1..7 {
        join(i, i + 1);
    }
    g
}

fn direct_sum(a: &IMat, b: &IMat) -> IMat {
    let n = a.rows + b.rows;
    let mut g = IMat::zero(n, n);
    for i in 0..a.rows {
        for j in 0..a.cols {
            g[(i, j)] = a[(i, j)];
        }
    }
    for i in 0..b.rows {
        for j in 0..b.cols {
            g[(a.rows + i, a.cols + j)] = b[(i, j)];
        }
    }
    g
}

/// L10 = U ⊕ E8 with the ten Vinberg chamber roots and the Weyl vector.
pub struct L10 {
    pub lattice: IntegerLattice,
    /// The ten simple roots e1..e10 of the Vinberg chamber (e1..e8 are the
    /// E8 basis, e9 and e10 the two extra root vectors).
    pub simple_roots: Vec<Vec<i64>>,
    pub w10: Vec<i64>,
}

pub fn build_l10() -> L10 {
    let gram = direct_sum(&u_gram(), &e8_gram());
    let lattice = IntegerLattice::hyperbolic(gram).expect("L10 gram");
    let mut simple_roots = Vec::new();
    for i in 0..8 {
        let mut e = vec![0i64; 10];
        e[2 + i] = 1;
        simple_roots.push(e);
    }
    simple_roots.push(vec![1, 0, -3, -2, -4, -6, -5, -4, -3, -2]);
    simple_roots.push(vec![-1, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
    let w10 = vec![31, 30, -68, -46, -91, -135, -110, -84, -57, -29];
    let l10 = L10 { lattice, simple_roots, w10 };
    validate_l10(&l10);
    l10
}

fn validate_l10(l: &L10) {
    assert_eq!(l.lattice.det(), num_bigint::BigInt::from(-1), "L10 must be unimodular");
    for r in &l.simple_roots {
        assert_eq!(l.lattice.inner(r, r), -2, "simple roots must be roots");
    }
    assert_eq!(l.lattice.inner(&l.w10, &l.w10), 1240);
    // The ten roots pairing 1 with w10 are exactly the simple roots.
    let found = lattice_core::enumerate::lattice_norm_pairing(&l.lattice, &l.w10, -2, 1);
    let mut expected = l.simple_roots.clone();
    expected.sort();
    assert_eq!(found, expected, "degree-1 roots of the Weyl vector");
    // Dynkin shape: e1 joins e4; e(i) joins e(i+1) for i = 2..9.
    for i in 0..10 {
        for j in 0..i {
            let p = l.lattice.inner(&l.simple_roots[i], &l.simple_roots[j]);
            let adjacent = (j == 0 && i == 3) || (j >= 1 && i == j + 1);
            assert_eq!(p, i64::from(adjacent), "Dynkin pairing ({i},{j})");
        }
    }
}

/// L26 = U ⊕ Leech with the Weyl vector w26 = f1.
pub struct L26 {
    pub lattice: IntegerLattice,
    pub leech: IntegerLattice,
    /// Row basis of the Leech lattice inside the ambient R^24.
    pub leech_basis: IMat,
    pub w26: Vec<i64>,
}

pub fn build_l26() -> Result<L26, LatticeError> {
    let basis = data::leech_basis();
    // Gram under -(x·y)/8.
    let mut gram = IMat::zero(24, 24);
    for i in 0..24 {
        for j in 0..24 {
            let dot = lattice_core::mat::dot(basis.row(i), basis.row(j));
            assert_eq!(dot % 8, 0, "Leech basis pairing not divisible by 8");
            gram[(i, j)] = -dot / 8;
        }
    }
    let leech = IntegerLattice::new(gram.clone(), SignatureKind::NegativeDefinite)?;
    assert_eq!(leech.det(), num_bigint::BigInt::from(1), "Leech must be unimodular");
    // No roots: the minimum is -4.
    let roots = short_vectors(&leech, -2)?;
    assert!(roots.is_empty(), "Leech lattice has no vectors of norm >= -2");

    let full = direct_sum(&u_gram(), &gram);
    let lattice = IntegerLattice::hyperbolic(full)?;
    let mut w26 = vec![0i64; 26];
    w26[0] = 1;
    assert_eq!(lattice.inner(&w26, &w26), 0);
    Ok(L26 { lattice, leech, leech_basis: basis, w26 })
}

/// The root of L26 attached to a Leech vector: for `lam` with square-norm
/// `n`, the vector `(-n/2 - 1) f1 + f2 + lam`, of norm -2 and pairing 1
/// with the Weyl vector f1.
pub fn leech_root(l26: &L26, lam: &[i64]) -> Vec<i64> {
    assert_eq!(lam.len(), 24);
    let n = l26.leech.inner(lam, lam);
    let mut r = vec![0i64; 26];
    r[0] = -n / 2 - 1;
    r[1] = 1;
    r[2..].copy_from_slice(lam);
    debug_assert_eq!(l26.lattice.inner(&r, &r), -2);
    debug_assert_eq!(l26.lattice.inner(&r, &l26.w26), 1);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l10_data() {
        let l = build_l10();
        assert_eq!(l.lattice.inner(&l.w10, &l.w10), 1240);
    }

    #[test]
    fn leech_and_l26() {
        let l26 = build_l26().unwrap();
        // zero Leech vector
        let r0 = leech_root(&l26, &[0; 24]);
        assert_eq!(r0[0], -1);
        assert_eq!(r0[1], 1);
        assert_eq!(l26.lattice.inner(&r0, &r0), -2);
        // first basis vector has norm -8, so the f1 coefficient is 3
        let mut lam1 = vec![0i64; 24];
        lam1[0] = 1;
        assert_eq!(l26.leech.inner(&lam1, &lam1), -8);
        let r1 = leech_root(&l26, &lam1);
        assert_eq!(r1[0], 3);
        assert_eq!(l26.lattice.inner(&r1, &r1), -2);
        // 2 f1 + f2 pairs positively with sampled Leech roots
        let mut interior = vec![0i64; 26];
        interior[0] = 2;
        interior[1] = 1;
        for k in 0..24 {
            let mut lam = vec![0i64; 24];
            lam[k] = 1;
            let r = leech_root(&l26, &lam);
            assert!(l26.lattice.inner(&interior, &r) > 0);
        }
    }
}
