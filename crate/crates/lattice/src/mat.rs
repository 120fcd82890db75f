//! Dense matrices over `i64`, `BigInt` and `BigRational`.
//!
//! The `i64` flavour is the working type; products widen through `i128` and
//! panic on a narrowing overflow rather than wrap. Algorithms that can grow
//! intermediate entries (determinants, Smith form, solving) run over the
//! arbitrary-precision types.

use crate::rat::{rat_i, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<BigInt>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Rat>,
}

impl fmt::Debug for IMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", &self.a[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, a: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            a.extend_from_slice(row);
        }
        IMat { rows: r, cols: c, a }
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IMat {
        let mut t = IMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self[(i, k)];
                if x == 0 {
                    continue;
                }
                let x = x as i128;
                for j in 0..other.cols {
                    let acc = out[(i, j)] as i128 + x * other[(k, j)] as i128;
                    out[(i, j)] = i64::try_from(acc).expect("i64 overflow in matrix product");
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn to_z(&self) -> ZMat {
        ZMat { rows: self.rows, cols: self.cols, a: self.a.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn to_q(&self) -> QMat {
        QMat { rows: self.rows, cols: self.cols, a: self.a.iter().map(|&x| rat_i(x)).collect() }
    }
}

/// Row vector times matrix, exact in i128 with checked narrowing.
pub fn vec_mat(v: &[i64], m: &IMat) -> Vec<i64> {
    assert_eq!(v.len(), m.rows, "vector/matrix shape mismatch");
    let mut out = vec![0i64; m.cols];
    for (k, &x) in v.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as i128;
        for j in 0..m.cols {
            let acc = out[j] as i128 + x * m[(k, j)] as i128;
            out[j] = i64::try_from(acc).expect("i64 overflow in vec*mat");
        }
    }
    out
}

/// Rational row vector times integer matrix.
pub fn qvec_mat(v: &[Rat], m: &IMat) -> Vec<Rat> {
    assert_eq!(v.len(), m.rows);
    let mut out = vec![Rat::zero(); m.cols];
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for j in 0..m.cols {
            if m[(k, j)] != 0 {
                out[j] += x * rat_i(m[(k, j)]);
            }
        }
    }
    out
}

pub fn dot(v: &[i64], w: &[i64]) -> i64 {
    assert_eq!(v.len(), w.len());
    let mut acc: i128 = 0;
    for i in 0..v.len() {
        acc += v[i] as i128 * w[i] as i128;
    }
    i64::try_from(acc).expect("i64 overflow in dot product")
}

impl std::ops::Index<(usize, usize)> for IMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.a[i * self.cols + j]
    }
}
impl std::ops::IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.a[i * self.cols + j]
    }
}

impl ZMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ZMat { rows, cols, a: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn mul(&self, other: &ZMat) -> ZMat {
        assert_eq!(self.cols, other.rows);
        let mut out = ZMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other[(k, j)].is_zero() {
                        let p = &self[(i, k)] * &other[(k, j)];
                        out[(i, j)] += p;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> ZMat {
        let mut t = ZMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Bareiss fraction-free determinant.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.a.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                match (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j)) / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = at(&m, k, k);
        }
        sign * at(&m, n - 1, n - 1)
    }

    pub fn to_q(&self) -> QMat {
        QMat { rows: self.rows, cols: self.cols, a: self.a.iter().map(|x| Rat::from(x.clone())).collect() }
    }

    pub fn to_i(&self) -> Option<IMat> {
        let mut a = Vec::with_capacity(self.a.len());
        for x in &self.a {
            a.push(i64::try_from(x).ok()?);
        }
        Some(IMat { rows: self.rows, cols: self.cols, a })
    }
}

impl std::ops::Index<(usize, usize)> for ZMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.a[i * self.cols + j]
    }
}
impl std::ops::IndexMut<(usize, usize)> for ZMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.a[i * self.cols + j]
    }
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, a: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            a.extend_from_slice(row);
        }
        QMat { rows: r, cols: c, a }
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other[(k, j)].is_zero() {
                        let p = &self[(i, k)] * &other[(k, j)];
                        out[(i, j)] += p;
                    }
                }
            }
        }
        out
    }

    /// Solve `self * x = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &QMat) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let m = rhs.cols;
        let mut aug = QMat::zero(n, n + m);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..m {
                aug[(i, n + j)] = rhs[(i, j)].clone();
            }
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !aug[(r, col)].is_zero())?;
            if piv != col {
                for j in 0..n + m {
                    let tmp = aug[(piv, j)].clone();
                    aug[(piv, j)] = aug[(col, j)].clone();
                    aug[(col, j)] = tmp;
                }
            }
            let inv = aug[(col, col)].clone().recip();
            for j in col..n + m {
                let v = &aug[(col, j)] * &inv;
                aug[(col, j)] = v;
            }
            for r in 0..n {
                if r != col && !aug[(r, col)].is_zero() {
                    let f = aug[(r, col)].clone();
                    for j in col..n + m {
                        let v = &aug[(r, j)] - &f * &aug[(col, j)];
                        aug[(r, j)] = v;
                    }
                }
            }
        }
        let mut x = QMat::zero(n, m);
        for i in 0..n {
            for j in 0..m {
                x[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<QMat> {
        self.solve(&QMat::identity(self.rows))
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if piv != row {
                for j in 0..m.cols {
                    let tmp = m[(piv, j)].clone();
                    m[(piv, j)] = m[(row, j)].clone();
                    m[(row, j)] = tmp;
                }
            }
            for r in row + 1..m.rows {
                if !m[(r, col)].is_zero() {
                    let f = &m[(r, col)] / &m[(row, col)];
                    for j in col..m.cols {
                        let v = &m[(r, j)] - &f * &m[(row, j)];
                        m[(r, j)] = v;
                    }
                }
            }
            rank += 1;
            row += 1;
        }
        rank
    }

    /// Inertia (p, n, z) of a symmetric matrix by congruence reduction.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut pos = 0;
        let mut neg = 0;
        let mut zero = 0;
        let mut idx: Vec<usize> = (0..n).collect();
        while !idx.is_empty() {
            // Prefer a nonzero diagonal entry.
            if let Some(&i) = idx.iter().find(|&&i| !m[(i, i)].is_zero()) {
                if m[(i, i)].is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                let d = m[(i, i)].clone();
                let others: Vec<usize> = idx.iter().copied().filter(|&j| j != i).collect();
                for &r in &others {
                    if m[(r, i)].is_zero() {
                        continue;
                    }
                    let f = &m[(r, i)] / &d;
                    for &c in &others {
                        let v = &m[(r, c)] - &f * &m[(i, c)];
                        m[(r, c)] = v;
                    }
                }
                for &r in &others {
                    m[(r, i)] = Rat::zero();
                    m[(i, r)] = Rat::zero();
                }
                idx.retain(|&j| j != i);
            } else if let Some((i, j)) = {
                let mut found = None;
                'outer: for (a, &i) in idx.iter().enumerate() {
                    for &j in idx.iter().skip(a + 1) {
                        if !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                found
            } {
                // Hyperbolic pair: contributes one positive and one negative.
                // Replace row/col i by i+j to bring a nonzero onto the diagonal.
                let cols: Vec<usize> = idx.clone();
                for &c in &cols {
                    let v = &m[(i, c)] + &m[(j, c)];
                    m[(i, c)] = v;
                }
                for &r in &cols {
                    let v = &m[(r, i)] + &m[(r, j)];
                    m[(r, i)] = v;
                }
                // Now m[(i,i)] = 2*m_old[(i,j)] != 0; loop continues.
                continue;
            } else {
                zero += idx.len();
                break;
            }
        }
        (pos, neg, zero)
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|x| x.denom() == &BigInt::from(1))
    }

    pub fn to_i(&self) -> Option<IMat> {
        if !self.is_integral() {
            return None;
        }
        let mut a = Vec::with_capacity(self.a.len());
        for x in &self.a {
            a.push(i64::try_from(&x.to_integer()).ok()?);
        }
        Some(IMat { rows: self.rows, cols: self.cols, a })
    }
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.a[i * self.cols + j]
    }
}
impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.a[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn det_small() {
        let m = IMat::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.to_z().det(), BigInt::from(-1));
        let m = IMat::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(m.to_z().det(), BigInt::from(3));
    }

    #[test]
    fn solve_and_inverse() {
        let m = QMat::from_rows(&[vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(2, 1)]]);
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv);
        assert_eq!(prod, QMat::identity(2));
    }

    #[test]
    fn inertia_hyperbolic() {
        let u = QMat::from_rows(&[vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]]);
        assert_eq!(u.inertia(), (1, 1, 0));
        let d = QMat::from_rows(&[vec![rat(-2, 1), rat(0, 1)], vec![rat(0, 1), rat(-2, 1)]]);
        assert_eq!(d.inertia(), (0, 2, 0));
    }
}
