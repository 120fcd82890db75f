//! The rank-16 Neron-Severi lattice of the resolved quartic Hessian
//! surface, its 20 distinguished curve classes, and the polarizations.

use crate::indices::*;
use lattice_core::mat::{IMat, QMat};
use lattice_core::rat::{rat_i, to_rat_vec, Rat};
use lattice_core::IntegerLattice;
use serde::Deserialize;

pub const RANK: usize = 16;

#[derive(Deserialize)]
struct HessianConstants {
    version: u32,
    h_q: Vec<i64>,
}

fn h_q_data() -> Vec<i64> {
    let text = match std::env::var("LATTICE_DATA_DIR") {
        Ok(dir) => std::fs::read_to_string(std::path::Path::new(&dir).join("hessian_constants.json"))
            .expect("reading hessian_constants.json"),
        Err(_) => include_str!("../../../data/hessian_constants.json").to_string(),
    };
    let parsed: HessianConstants = serde_json::from_str(&text).expect("hessian constants");
    assert_eq!(parsed.version, 1);
    assert_eq!(parsed.h_q.len(), RANK);
    parsed.h_q
}

/// The lattice together with all 20 curve classes in basis coordinates.
pub struct SxLattice {
    pub lattice: IntegerLattice,
    /// Node classes, indexed like `TRIPLES`.
    pub e_classes: Vec<Vec<i64>>,
    /// Line classes, indexed like `PAIRS`.
    pub l_classes: Vec<Vec<i64>>,
    /// Hyperplane class of the quartic.
    pub h_q: Vec<i64>,
    /// Interior point of the chamber; also the sum of all 20 classes.
    pub h_x: Vec<i64>,
}

/// Pairing required between a node class and a line class.
fn e_l_pairing(t: &[u8; 3], p: &[u8; 2]) -> i64 {
    i64::from(contains(t, p))
}

/// Build the Gram matrix on the fixed basis of ten node classes and six
/// line classes, reconstruct the four remaining line classes, and check
/// all pairing relations.
pub fn build_sx() -> SxLattice {
    // Basis labels: 0..10 node classes (lex triples), 10..16 line classes
    // in the order of BASIS_PAIRS.
    let mut gram = IMat::zero(RANK, RANK);
    for i in 0..10 {
        gram[(i, i)] = -2;
    }
    for j in 0..6 {
        gram[(10 + j, 10 + j)] = -2;
        for i in 0..10 {
            let v = e_l_pairing(&TRIPLES[i], &BASIS_PAIRS[j]);
            gram[(i, 10 + j)] = v;
            gram[(10 + j, i)] = v;
        }
    }
    let lattice = IntegerLattice::hyperbolic(gram).expect("S_X gram");
    assert_eq!(lattice.det(), num_bigint::BigInt::from(-48), "det(S_X) = -2^4 * 3");

    let e_classes: Vec<Vec<i64>> = (0..10)
        .map(|i| {
            let mut v = vec![0i64; RANK];
            v[i] = 1;
            v
        })
        .collect();

    let mut l_classes: Vec<Vec<i64>> = vec![Vec::new(); 10];
    for (j, p) in BASIS_PAIRS.iter().enumerate() {
        let mut v = vec![0i64; RANK];
        v[10 + j] = 1;
        l_classes[pair_index(p)] = v;
    }
    // The other four line classes: unique solutions of the pairing
    // conditions against the sixteen basis classes.
    for p in &DERIVED_PAIRS {
        let mut rhs = vec![Rat::from_integer(0.into()); RANK];
        for (i, t) in TRIPLES.iter().enumerate() {
            rhs[i] = rat_i(e_l_pairing(t, p));
        }
        for (j, bp) in BASIS_PAIRS.iter().enumerate() {
            rhs[10 + j] = rat_i(if bp == p { -2 } else { 0 });
        }
        let sol = QMat::from_rows(&[rhs]).mul(lattice.gram_inv());
        let v: Vec<i64> = sol
            .row(0)
            .iter()
            .map(|x| {
                assert!(lattice_core::rat::is_int(x), "derived line class must be integral");
                i64::try_from(&x.to_integer()).unwrap()
            })
            .collect();
        l_classes[pair_index(p)] = v;
    }

    // Full pairing profile across all 20 classes.
    for (i, t) in TRIPLES.iter().enumerate() {
        for (i2, t2) in TRIPLES.iter().enumerate() {
            let want = if i == i2 { -2 } else { 0 };
            assert_eq!(lattice.inner(&e_classes[i], &e_classes[i2]), want);
            let _ = (t, t2);
        }
        for (j, p) in PAIRS.iter().enumerate() {
            assert_eq!(lattice.inner(&e_classes[i], &l_classes[j]), e_l_pairing(t, p));
        }
    }
    for (j, _) in PAIRS.iter().enumerate() {
        for (j2, _) in PAIRS.iter().enumerate() {
            let want = if j == j2 { -2 } else { 0 };
            assert_eq!(lattice.inner(&l_classes[j], &l_classes[j2]), want);
        }
    }

    let h_q = h_q_data();
    assert_eq!(lattice.inner(&h_q, &h_q), 4, "square of the hyperplane class");
    for e in &e_classes {
        assert_eq!(lattice.inner(&h_q, e), 0, "nodes are contracted");
    }
    for l in &l_classes {
        assert_eq!(lattice.inner(&h_q, l), 1, "lines have degree one");
    }

    // h_X = sum of all twenty classes.
    let mut h_x = vec![0i64; RANK];
    for c in e_classes.iter().chain(l_classes.iter()) {
        for (a, b) in h_x.iter_mut().zip(c) {
            *a += b;
        }
    }
    assert_eq!(lattice.inner(&h_x, &h_x), 20);

    SxLattice { lattice, e_classes, l_classes, h_q, h_x }
}

impl SxLattice {
    /// The unique dual vector pairing to delta with the node classes and
    /// to the complementary-pair indicator with the line classes.
    pub fn v_alpha(&self, alpha_idx: usize) -> Vec<Rat> {
        let alpha = &TRIPLES[alpha_idx];
        let abar = complement(alpha);
        let mut rhs = vec![Rat::from_integer(0.into()); RANK];
        for i in 0..10 {
            rhs[i] = rat_i(i64::from(i == alpha_idx));
        }
        for (j, bp) in BASIS_PAIRS.iter().enumerate() {
            rhs[10 + j] = rat_i(i64::from(*bp == abar));
        }
        let sol = QMat::from_rows(&[rhs]).mul(self.lattice.gram_inv());
        let v = sol.row(0).to_vec();
        // remaining conditions: pairings with the non-basis line classes
        for p in &DERIVED_PAIRS {
            let want = rat_i(i64::from(*p == abar));
            let lc = to_rat_vec(&self.l_classes[pair_index(p)]);
            assert_eq!(self.lattice.inner_q(&v, &lc), want);
        }
        assert_eq!(self.lattice.inner_q(&v, &v), rat_i(-1));
        assert_eq!(self.lattice.inner_iq(&self.h_x, &v), rat_i(2));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sx_builds_and_validates() {
        let sx = build_sx();
        assert_eq!(sx.lattice.rank, 16);
        assert_eq!(
            sx.h_q,
            vec![-1, 1, 1, -1, -1, 1, 1, 1, 3, 1, 2, 0, 0, 2, 2, -2]
        );
        assert_eq!(
            sx.h_x,
            vec![-3, 2, 2, -3, -3, 2, 2, 2, 7, 2, 5, 0, 0, 5, 5, -5]
        );
    }

    #[test]
    fn v_alpha_profile() {
        let sx = build_sx();
        for a in 0..10 {
            let v = sx.v_alpha(a);
            for (i, e) in sx.e_classes.iter().enumerate() {
                let want = rat_i(i64::from(i == a));
                assert_eq!(sx.lattice.inner_q(&v, &to_rat_vec(e)), want);
            }
        }
    }

    #[test]
    fn discriminant_shape() {
        let sx = build_sx();
        let d = lattice_core::disc::discriminant_group(&sx.lattice);
        // (Z/2)^4 x (Z/3)
        let mut facs: Vec<i64> =
            d.invariant_factors.iter().map(|f| i64::try_from(f).unwrap()).collect();
        facs.sort();
        assert_eq!(facs, vec![2, 2, 2, 6]);
    }
}
