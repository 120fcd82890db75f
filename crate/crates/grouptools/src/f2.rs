//! 10x10 matrices over the two-element field, acting on row vectors, and
//! the even quadratic form they must preserve.

use lattice_core::mat::IMat;

/// Row-major bit matrix: `rows[i]` holds row i, bit j = entry (i, j).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct F2Mat {
    pub rows: [u16; 10],
}

pub const DIM: usize = 10;
pub const POINTS: usize = 1 << DIM;
const MASK: u16 = (1 << DIM) - 1;

impl F2Mat {
    pub fn identity() -> Self {
        let mut rows = [0u16; 10];
        for (i, r) in rows.iter_mut().enumerate() {
            *r = 1 << i;
        }
        F2Mat { rows }
    }

    pub fn from_integer_matrix(m: &IMat) -> Self {
        assert_eq!((m.rows, m.cols), (10, 10));
        let mut rows = [0u16; 10];
        for i in 0..10 {
            for j in 0..10 {
                if m[(i, j)].rem_euclid(2) == 1 {
                    rows[i] |= 1 << j;
                }
            }
        }
        F2Mat { rows }
    }

    /// Row vector times matrix: xor of the rows selected by the bits.
    pub fn apply(&self, v: u16) -> u16 {
        let mut out = 0u16;
        let mut bits = v & MASK;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            out ^= self.rows[i];
            bits &= bits - 1;
        }
        out
    }

    pub fn mul(&self, other: &F2Mat) -> F2Mat {
        let mut rows = [0u16; 10];
        for i in 0..10 {
            rows[i] = other.apply(self.rows[i]);
        }
        F2Mat { rows }
    }

    pub fn is_identity(&self) -> bool {
        *self == F2Mat::identity()
    }

    /// Multiplicative order (the matrix must be invertible).
    pub fn order(&self, cap: u64) -> u64 {
        let mut p = *self;
        let mut n = 1;
        while !p.is_identity() {
            p = p.mul(self);
            n += 1;
            assert!(n <= cap, "order exceeds cap");
        }
        n
    }

    pub fn inverse(&self) -> F2Mat {
        // Gauss-Jordan over F2 on [self | I].
        let mut a = self.rows;
        let mut inv = F2Mat::identity().rows;
        for col in 0..10 {
            let piv = (col..10)
                .find(|&r| a[r] >> col & 1 == 1)
                .expect("matrix not invertible over F2");
            a.swap(col, piv);
            inv.swap(col, piv);
            for r in 0..10 {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        F2Mat { rows: inv }
    }
}

/// The quadratic form on F2^10 induced by halving the even self-pairing of
/// the rank-10 unimodular hyperbolic lattice.
pub struct QuadraticForm {
    /// q-values for all 1024 points.
    pub values: Vec<bool>,
}

pub fn standard_form() -> QuadraticForm {
    let l10 = borcherds_engine::build_l10();
    let mut values = vec![false; POINTS];
    for (pat, value) in values.iter_mut().enumerate() {
        let x: Vec<i64> = (0..10).map(|i| ((pat >> i) & 1) as i64).collect();
        let n = l10.lattice.inner(&x, &x);
        assert_eq!(n.rem_euclid(2), 0);
        *value = (n / 2).rem_euclid(2) == 1;
    }
    let q = QuadraticForm { values };
    // plus type: 2^9 + 2^4 isotropic vectors
    assert_eq!(q.isotropic_count(), (1 << 9) + (1 << 4), "form must have plus type");
    q
}

impl QuadraticForm {
    pub fn isotropic_count(&self) -> usize {
        self.values.iter().filter(|v| !**v).count()
    }

    pub fn preserved_by(&self, m: &F2Mat) -> bool {
        (0..POINTS as u16).all(|v| self.values[v as usize] == self.values[m.apply(v) as usize])
    }
}

/// Reduce an integral isometry mod 2 and check it preserves the form.
pub fn mod2(q: &QuadraticForm, m: &IMat) -> F2Mat {
    let f = F2Mat::from_integer_matrix(m);
    assert!(q.preserved_by(&f), "reduction does not preserve the quadratic form");
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_inverse() {
        let id = F2Mat::identity();
        assert!(id.is_identity());
        assert_eq!(id.inverse(), id);
        let q = standard_form();
        assert!(q.preserved_by(&id));
    }

    #[test]
    fn apply_is_linear() {
        let mut m = F2Mat::identity();
        m.rows[0] = 0b11;
        for a in 0..32u16 {
            for b in 0..32u16 {
                assert_eq!(m.apply(a ^ b), m.apply(a) ^ m.apply(b));
            }
        }
        let inv = m.inverse();
        assert!(m.mul(&inv).is_identity());
    }
}
