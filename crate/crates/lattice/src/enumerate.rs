//! Short-vector enumeration for definite forms, exact throughout.
//!
//! The context holds an LDL^T decomposition of a positive-definite rational
//! form. A scan clears denominators once, producing an integer-valued
//! objective `sum_i e_i Z_i^2` over integer affine forms `Z_i`, and walks
//! the standard Fincke-Pohst tree. The walk runs over checked `i128`; if
//! any step would overflow it is rerun over `BigInt`. Both walks visit
//! leaves in identical order, so results never depend on the path taken.

use crate::error::LatticeError;
use crate::lattice::IntegerLattice;
use crate::mat::{QMat, ZMat};
use crate::rat::{denom_lcm, floor_int, rat_i, Rat};
use crate::snf;
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// LDL^T data for a positive-definite rational form.
pub struct ShellCtx {
    n: usize,
    /// Diagonal `d_i > 0`.
    d: Vec<Rat>,
    /// `lfac[i][k]` for `k > i`: the factor of `y_k` in the i-th recentred
    /// coordinate `z_i = y_i + sum_{k>i} lfac[i][k] y_k`.
    lfac: Vec<Vec<Rat>>,
}

impl ShellCtx {
    /// Decompose a symmetric positive-definite matrix. Returns `None` when
    /// the form is not positive definite.
    pub fn new(form: &QMat) -> Option<Self> {
        assert_eq!(form.rows, form.cols);
        let n = form.rows;
        // Lower-triangular unit L and diagonal d with form = L d L^T.
        let mut l = vec![vec![Rat::zero(); n]; n];
        let mut d = vec![Rat::zero(); n];
        for j in 0..n {
            let mut dj = form[(j, j)].clone();
            for k in 0..j {
                dj -= &l[j][k] * &l[j][k] * &d[k];
            }
            if !dj.is_positive() {
                return None;
            }
            d[j] = dj;
            l[j][j] = Rat::one();
            for i in j + 1..n {
                let mut v = form[(i, j)].clone();
                for k in 0..j {
                    v -= &l[i][k] * &l[j][k] * &d[k];
                }
                l[i][j] = v / &d[j];
            }
        }
        // z_i = y_i + sum_{k>i} L[k][i] y_k
        let mut lfac = vec![Vec::new(); n];
        for i in 0..n {
            lfac[i] = (0..n).map(|k| if k > i { l[k][i].clone() } else { Rat::zero() }).collect();
        }
        Some(ShellCtx { n, d, lfac })
    }

    /// Positive-definite form attached to a negative-definite Gram matrix.
    pub fn for_negdef(gram: &QMat) -> Option<Self> {
        let mut neg = gram.clone();
        for x in neg.a.iter_mut() {
            *x = -x.clone();
        }
        Self::new(&neg)
    }

    /// Visit every `x ∈ Z^n` with `Q(x + center) ≤ bound`; the callback
    /// receives the exact value.
    pub fn scan_ball(&self, center: &[Rat], bound: &Rat, mut f: impl FnMut(&[i64], &Rat)) {
        if bound.is_negative() {
            return;
        }
        let prep = self.prepare(center, bound, None);
        let scale = Rat::from(prep.scale.clone());
        prep.run(&mut |x, s| {
            let val = Rat::from(s.clone()) / &scale;
            f(x, &val)
        });
    }

    /// Visit every `x ∈ Z^n` with `Q(x + center)` exactly equal to `target`.
    pub fn scan_shell(&self, center: &[Rat], target: &Rat, mut f: impl FnMut(&[i64])) {
        if target.is_negative() {
            return;
        }
        let scale_probe = {
            let m = self.common_denominator(center);
            let lq = denom_lcm(&self.d);
            &lq * &m * &m * &m * &m
        };
        let scaled = target * Rat::from(scale_probe);
        if !crate::rat::is_int(&scaled) {
            return;
        }
        let prep = self.prepare(center, target, Some(scaled.to_integer()));
        prep.run(&mut |x, _| f(x));
    }

    fn common_denominator(&self, center: &[Rat]) -> BigInt {
        let mut m = denom_lcm(center);
        for row in &self.lfac {
            m = m.lcm(&denom_lcm(row));
        }
        m
    }

    fn prepare(&self, center: &[Rat], bound: &Rat, target: Option<BigInt>) -> Prep {
        assert_eq!(center.len(), self.n);
        let n = self.n;
        let m = self.common_denominator(center);
        let lq = denom_lcm(&self.d);
        let m2 = &m * &m;
        let scale = &lq * &m2 * &m2;

        // e_i = d_i * Lq
        let e: Vec<BigInt> =
            self.d.iter().map(|di| (di * Rat::from(lq.clone())).to_integer()).collect();
        // U[i][k] = M * lfac[i][k]
        let u: Vec<Vec<BigInt>> = self
            .lfac
            .iter()
            .map(|row| row.iter().map(|x| (x * Rat::from(m.clone())).to_integer()).collect())
            .collect();
        // C[i] = M * c_i
        let c: Vec<BigInt> =
            center.iter().map(|x| (x * Rat::from(m.clone())).to_integer()).collect();
        let b_scaled = floor_int(&(bound * Rat::from(scale.clone())));
        Prep { n, m, m2, e, u, c, b_scaled, target, scale }
    }
}

struct Prep {
    n: usize,
    m: BigInt,
    m2: BigInt,
    e: Vec<BigInt>,
    u: Vec<Vec<BigInt>>,
    c: Vec<BigInt>,
    b_scaled: BigInt,
    target: Option<BigInt>,
    scale: BigInt,
}

impl Prep {
    fn run(&self, f: &mut dyn FnMut(&[i64], &BigInt)) {
        if self.n == 0 {
            let zero = BigInt::zero();
            let ok = match &self.target {
                Some(t) => t.is_zero(),
                None => !self.b_scaled.is_negative(),
            };
            if ok {
                f(&[], &zero);
            }
            return;
        }
        if self.b_scaled.is_negative() {
            return;
        }
        let mut walker_i128 = Walker::<i128>::new(self);
        match walker_i128.as_mut().map(|w| w.recurse(self.n - 1, f)) {
            Some(Ok(())) => {}
            _ => {
                // Overflow in the fast path: rerun exactly over BigInt.
                let mut walker = Walker::<BigInt>::new(self).expect("BigInt walker always builds");
                walker.recurse(self.n - 1, f).expect("BigInt walk cannot overflow");
            }
        }
    }
}

/// Integer arithmetic used by the tree walk; `i128` is checked, `BigInt`
/// never fails.
trait WalkInt: Clone + Ord + Sized {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn to_i64(&self) -> Option<i64>;
    fn zilch() -> Self;
    fn add_chk(&self, o: &Self) -> Option<Self>;
    fn sub_chk(&self, o: &Self) -> Option<Self>;
    fn mul_chk(&self, o: &Self) -> Option<Self>;
    fn mul_i64(&self, o: i64) -> Option<Self>;
    fn div_floor_(&self, o: &Self) -> Self;
    fn isqrt_(&self) -> Self;
    fn is_negative_(&self) -> bool;
    fn rem_(&self, o: &Self) -> Self;
}

impl WalkInt for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn to_i64(&self) -> Option<i64> {
        i64::try_from(*self).ok()
    }
    fn zilch() -> Self {
        0
    }
    fn add_chk(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub_chk(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul_chk(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn mul_i64(&self, o: i64) -> Option<Self> {
        self.checked_mul(o as i128)
    }
    fn div_floor_(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn isqrt_(&self) -> Self {
        Roots::sqrt(self)
    }
    fn is_negative_(&self) -> bool {
        *self < 0
    }
    fn rem_(&self, o: &Self) -> Self {
        Integer::mod_floor(self, o)
    }
}

impl WalkInt for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn to_i64(&self) -> Option<i64> {
        i64::try_from(self).ok()
    }
    fn zilch() -> Self {
        num_traits::Zero::zero()
    }
    fn add_chk(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub_chk(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_chk(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn mul_i64(&self, o: i64) -> Option<Self> {
        Some(self * BigInt::from(o))
    }
    fn div_floor_(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn isqrt_(&self) -> Self {
        Roots::sqrt(self)
    }
    fn is_negative_(&self) -> bool {
        self.is_negative()
    }
    fn rem_(&self, o: &Self) -> Self {
        Integer::mod_floor(self, o)
    }
}

#[derive(Debug)]
struct Overflow;

struct Walker<T: WalkInt> {
    n: usize,
    m: T,
    m2: T,
    e: Vec<T>,
    u: Vec<Vec<T>>,
    c: Vec<T>,
    b: T,
    target: Option<T>,
    /// `g[k] = M x_k + C_k` for the currently fixed suffix.
    g: Vec<T>,
    /// Partial sums `S_i` of the fixed suffix.
    s: Vec<T>,
    x: Vec<i64>,
}

impl<T: WalkInt> Walker<T> {
    fn new(p: &Prep) -> Option<Self> {
        let conv = |v: &BigInt| T::from_big(v);
        let e: Option<Vec<T>> = p.e.iter().map(conv).collect();
        let c: Option<Vec<T>> = p.c.iter().map(conv).collect();
        let u: Option<Vec<Vec<T>>> =
            p.u.iter().map(|row| row.iter().map(conv).collect::<Option<Vec<T>>>()).collect();
        Some(Walker {
            n: p.n,
            m: conv(&p.m)?,
            m2: conv(&p.m2)?,
            e: e?,
            u: u?,
            c: c?,
            b: conv(&p.b_scaled)?,
            target: match &p.target {
                Some(t) => Some(conv(t)?),
                None => None,
            },
            g: vec![T::zilch(); p.n],
            s: vec![T::zilch(); p.n + 1],
            x: vec![0; p.n],
        })
    }

    fn t_offset(&self, level: usize) -> Option<T> {
        // T_i = M*C_i + sum_{k>i} U[i][k] * G_k
        let mut t = self.m.mul_chk(&self.c[level])?;
        for k in level + 1..self.n {
            let term = self.u[level][k].mul_chk(&self.g[k])?;
            t = t.add_chk(&term)?;
        }
        Some(t)
    }

    fn recurse(&mut self, level: usize, f: &mut dyn FnMut(&[i64], &BigInt)) -> Result<(), Overflow> {
        let t = self.t_offset(level).ok_or(Overflow)?;
        let s_here = self.s[level + 1].clone();
        let rem = self.b.sub_chk(&s_here).ok_or(Overflow)?;
        debug_assert!(!rem.is_negative_());

        if level == 0 {
            if let Some(target) = self.target.clone() {
                // Solve e_0 * Z^2 = target - S exactly.
                let need = target.sub_chk(&s_here).ok_or(Overflow)?;
                if need.is_negative_() {
                    return Ok(());
                }
                if !need.rem_(&self.e[0]).to_big().is_zero() {
                    return Ok(());
                }
                let z2 = need.div_floor_(&self.e[0]);
                let z = z2.isqrt_();
                if z.mul_chk(&z).ok_or(Overflow)? != z2 {
                    return Ok(());
                }
                let mut zs = vec![z.clone()];
                let neg = T::zilch().sub_chk(&z).ok_or(Overflow)?;
                if neg != z {
                    zs.insert(0, neg);
                }
                for zv in zs {
                    // x = (Z - T)/M^2 when divisible
                    let num = zv.sub_chk(&t).ok_or(Overflow)?;
                    if num.rem_(&self.m2).to_big().is_zero() {
                        let x0 = num.div_floor_(&self.m2).to_i64().ok_or(Overflow)?;
                        self.x[0] = x0;
                        f(&self.x, &target.to_big());
                    }
                }
                return Ok(());
            }
        }

        // integer range: |M^2 x + T| <= isqrt(rem / e_level)
        let s_bound = rem.div_floor_(&self.e[level]).isqrt_();
        let hi = s_bound.sub_chk(&t).ok_or(Overflow)?.div_floor_(&self.m2);
        let lo_num = s_bound.add_chk(&t).ok_or(Overflow)?;
        let lo = T::zilch().sub_chk(&lo_num.div_floor_(&self.m2)).ok_or(Overflow)?;
        let lo = lo.to_i64().ok_or(Overflow)?;
        let hi = hi.to_i64().ok_or(Overflow)?;

        for xv in lo..=hi {
            let mxt = self.m2.mul_i64(xv).ok_or(Overflow)?;
            let z = mxt.add_chk(&t).ok_or(Overflow)?;
            let term = self.e[level].mul_chk(&z.mul_chk(&z).ok_or(Overflow)?).ok_or(Overflow)?;
            let s_new = s_here.add_chk(&term).ok_or(Overflow)?;
            if s_new > self.b {
                continue;
            }
            self.x[level] = xv;
            if level == 0 {
                f(&self.x, &s_new.to_big());
            } else {
                self.g[level] = self.m.mul_i64(xv).ok_or(Overflow)?.add_chk(&self.c[level]).ok_or(Overflow)?;
                self.s[level] = s_new;
                self.recurse(level - 1, f)?;
            }
        }
        Ok(())
    }
}

/// All nonzero `v` in a negative-definite lattice with `<v, v> >= min_norm`,
/// with their norms, ordered lexicographically. Closed under negation.
pub fn short_vectors(
    lat: &IntegerLattice,
    min_norm: i64,
) -> Result<Vec<(Vec<i64>, i64)>, LatticeError> {
    if lat.kind != crate::lattice::SignatureKind::NegativeDefinite {
        return Err(LatticeError::NotNegativeDefinite);
    }
    if min_norm >= 0 {
        return Err(LatticeError::BadNormBound);
    }
    let ctx = ShellCtx::for_negdef(&lat.gram.to_q()).ok_or(LatticeError::NotNegativeDefinite)?;
    let center = vec![Rat::zero(); lat.rank];
    let bound = rat_i(-min_norm);
    let mut out = Vec::new();
    ctx.scan_ball(&center, &bound, |x, val| {
        if x.iter().any(|&c| c != 0) {
            let norm = -i64::try_from(&val.to_integer()).expect("norm fits i64");
            out.push((x.to_vec(), norm));
        }
    });
    out.sort();
    Ok(out)
}

/// All integer vectors `x` with `x F x^T = norm` and `x · ell_j = pairing_j`
/// for each constraint. The restriction of the symmetric form `F` to the
/// common kernel of the functionals must be negative definite.
pub fn norm_pairing_vectors_multi(
    form: &QMat,
    ells: &[Vec<i64>],
    norm: &Rat,
    pairings: &[Rat],
) -> Vec<Vec<i64>> {
    assert_eq!(ells.len(), pairings.len());
    let n = form.rows;
    for ell in ells {
        assert_eq!(ell.len(), n);
    }
    // Integer particular solution x0 with x0 · ell_j = pairing_j.
    if pairings.iter().any(|p| !crate::rat::is_int(p)) {
        return Vec::new();
    }
    let p_ints: Vec<BigInt> = pairings.iter().map(|p| p.to_integer()).collect();
    let k = ells.len();
    let mut a = ZMat::zero(n, k);
    for (j, ell) in ells.iter().enumerate() {
        for i in 0..n {
            a[(i, j)] = BigInt::from(ell[i]);
        }
    }
    let sm = snf::smith(&a);
    // x A = p  <=>  (x U^{-1}) S = p V; z_i = (pV)_i / d_i
    let pv: Vec<BigInt> = (0..k)
        .map(|j| (0..k).map(|i| &p_ints[i] * &sm.v[(i, j)]).sum())
        .collect();
    let mut z = vec![BigInt::zero(); n];
    for i in 0..n.min(k) {
        if i < sm.rank {
            let (q, r) = pv[i].div_mod_floor(&sm.diag[i]);
            if !r.is_zero() {
                return Vec::new();
            }
            z[i] = q;
        } else if !pv[i].is_zero() {
            return Vec::new();
        }
    }
    for item in pv.iter().take(k).skip(n) {
        if !item.is_zero() {
            return Vec::new();
        }
    }
    // x0 = z U
    let zrow = ZMat { rows: 1, cols: n, a: z };
    let x0_big = zrow.mul(&sm.u);
    let x0: Vec<i64> = (0..n)
        .map(|j| i64::try_from(&x0_big[(0, j)]).expect("particular solution fits i64"))
        .collect();

    // Kernel of the functionals.
    let ker = snf::left_kernel(&a);
    let kdim = ker.rows;
    let ker_i = ker.to_i().expect("kernel basis fits i64");

    // Complete the square on x = x0 + y * K.
    let ker_q = ker_i.to_q();
    let gk = ker_q.mul(form).mul(&ker_q.transpose());
    let x0_q = QMat::from_rows(&[crate::rat::to_rat_vec(&x0)]);
    let mvec = ker_q.mul(form).mul(&x0_q.transpose()); // kdim x 1
    let n0 = x0_q.mul(form).mul(&x0_q.transpose())[(0, 0)].clone();
    let center_col = match gk.solve(&mvec) {
        Some(c) => c,
        None => panic!("degenerate restriction in norm_pairing_vectors"),
    };
    let center: Vec<Rat> = (0..kdim).map(|i| center_col[(i, 0)].clone()).collect();
    let cg = QMat::from_rows(&[center.clone()]);
    let shift = cg.mul(&gk).mul(&cg.transpose())[(0, 0)].clone();
    // (y + c) G_K (y + c)^T = norm - n0 + shift
    let target_neg = norm - &n0 + &shift;
    let Some(ctx) = ShellCtx::for_negdef(&gk) else {
        panic!("restriction to pairing kernel is not negative definite");
    };
    let mut out = Vec::new();
    ctx.scan_shell(&center, &(-target_neg), |y| {
        let mut x = x0.clone();
        for (i, &yi) in y.iter().enumerate() {
            for j in 0..n {
                x[j] = x[j]
                    .checked_add(yi.checked_mul(ker_i[(i, j)]).expect("overflow"))
                    .expect("overflow");
            }
        }
        out.push(x);
    });
    out.sort();
    out
}

/// Single-constraint version: all `x` with `x F x^T = norm`, `x · ell = b`.
pub fn norm_pairing_vectors(form: &QMat, ell: &[i64], norm: &Rat, b: &Rat) -> Vec<Vec<i64>> {
    norm_pairing_vectors_multi(form, &[ell.to_vec()], norm, &[b.clone()])
}

/// Exact size reduction of a basis of a definite lattice, given through
/// its ambient form: pairwise Lagrange steps plus norm-sorting swaps until
/// stable. This only re-coordinatizes the walk of the enumeration tree
/// (outputs are identical sets); its point is keeping the cleared
/// denominators of the LDL data small enough for the fast integer walker.
pub fn size_reduce_rows(rows: &crate::mat::IMat, form: &QMat) -> crate::mat::IMat {
    let k = rows.rows;
    if k <= 1 {
        return rows.clone();
    }
    let mut basis: Vec<Vec<i64>> = (0..k).map(|i| rows.row(i).to_vec()).collect();
    let gram_of = |b: &Vec<Vec<i64>>| -> QMat {
        let m = crate::mat::IMat::from_rows(b).to_q();
        m.mul(form).mul(&m.transpose())
    };
    let mut g = gram_of(&basis);
    let abs = |r: &Rat| if r < &Rat::zero() { -r.clone() } else { r.clone() };
    for _round in 0..64 {
        let mut changed = false;
        // sort by |norm| ascending (stable), keeping the Gram in sync
        for i in 0..k {
            for j in 0..k.saturating_sub(1) {
                if abs(&g[(j + 1, j + 1)]) < abs(&g[(j, j)]) {
                    basis.swap(j, j + 1);
                    g = gram_of(&basis);
                    changed = true;
                }
            }
            let _ = i;
        }
        // size reduction
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let mu = (&g[(i, j)] / &g[(j, j)]).round();
                if !mu.is_zero() {
                    let m = i64::try_from(&mu.to_integer()).expect("reduction step fits");
                    for c in 0..basis[i].len() {
                        basis[i][c] = basis[i][c]
                            .checked_sub(m.checked_mul(basis[j][c]).expect("overflow"))
                            .expect("overflow");
                    }
                    g = gram_of(&basis);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    crate::mat::IMat::from_rows(&basis)
}

/// Reusable enumerator for a fixed symmetric form and a fixed integer
/// functional: all the kernel and LDL work happens once, and each `scan`
/// call only pays for the tree walk. Everything depending on the pairing
/// target is linear or quadratic in it and is precomputed accordingly.
pub struct PairingScanner {
    ell_gcd: i64,
    /// Integer solution of `x1 · ell = ell_gcd`.
    x1: Vec<i64>,
    ker: crate::mat::IMat,
    ctx: ShellCtx,
    /// Center direction: center(b) = (b / g) * c1.
    c1: Vec<Rat>,
    /// Norm correction: target(b, a) = -(a + (b/g)^2 * corr).
    corr: Rat,
    n: usize,
}

impl PairingScanner {
    /// `form` restricted to the kernel of `ell` must be negative definite.
    pub fn new(form: &QMat, ell: &[i64]) -> Option<Self> {
        let n = form.rows;
        assert_eq!(ell.len(), n);
        let (g, x1) = snf::ext_gcd_vec(ell);
        assert!(g != 0, "zero functional");
        let col = {
            let mut m = ZMat::zero(n, 1);
            for i in 0..n {
                m[(i, 0)] = BigInt::from(ell[i]);
            }
            m
        };
        let raw_ker = snf::left_kernel(&col).to_i().expect("kernel fits i64");
        let ker = size_reduce_rows(&raw_ker, form);
        let ker_q = ker.to_q();
        let gk = ker_q.mul(form).mul(&ker_q.transpose());
        let ctx = ShellCtx::for_negdef(&gk)?;
        // m(b) = K F x0^T with x0 = (b/g) x1; linear in b.
        let x1_q = QMat::from_rows(&[crate::rat::to_rat_vec(&x1)]);
        let w1 = ker_q.mul(form).mul(&x1_q.transpose());
        let c1_col = gk.solve(&w1).expect("restriction nondegenerate");
        let c1: Vec<Rat> = (0..ker.rows).map(|i| c1_col[(i, 0)].clone()).collect();
        // corr = shift1 - n1 where shift1 = c1 G_K c1^T, n1 = x1 F x1^T
        let c1_row = QMat::from_rows(&[c1.clone()]);
        let shift1 = c1_row.mul(&gk).mul(&c1_row.transpose())[(0, 0)].clone();
        let n1 = x1_q.mul(form).mul(&x1_q.transpose())[(0, 0)].clone();
        let corr = shift1 - n1;
        Some(PairingScanner { ell_gcd: g, x1, ker, ctx, c1, corr, n })
    }

    /// Visit all `x` with `x F x^T = norm` and `x · ell = pairing`.
    pub fn scan(&self, norm: &Rat, pairing: &Rat, mut f: impl FnMut(&[i64])) {
        if !crate::rat::is_int(pairing) {
            return;
        }
        let b = pairing.to_integer();
        let (q, r) = b.div_mod_floor(&BigInt::from(self.ell_gcd));
        if !r.is_zero() {
            return;
        }
        let Ok(scale) = i64::try_from(&q) else { return };
        let x0: Vec<i64> = self
            .x1
            .iter()
            .map(|&v| v.checked_mul(scale).expect("particular solution overflow"))
            .collect();
        let bg = Rat::from(q);
        let center: Vec<Rat> = self.c1.iter().map(|c| c * &bg).collect();
        let target = -(norm + &bg * &bg * &self.corr);
        let n = self.n;
        let ker = &self.ker;
        let mut x = vec![0i64; n];
        self.ctx.scan_shell(&center, &target, |y| {
            x.copy_from_slice(&x0);
            for (i, &yi) in y.iter().enumerate() {
                if yi == 0 {
                    continue;
                }
                for j in 0..n {
                    x[j] = x[j]
                        .checked_add(yi.checked_mul(ker[(i, j)]).expect("overflow"))
                        .expect("overflow");
                }
            }
            f(&x);
        });
    }

    /// Collect-and-sort variant.
    pub fn collect(&self, norm: &Rat, pairing: &Rat) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        self.scan(norm, pairing, |x| out.push(x.to_vec()));
        out.sort();
        out
    }
}

/// Roots separating two positive-norm vectors of a hyperbolic lattice:
/// `{ r : <r,r> = -2, <r,h_plus> > 0, <r,h_minus> < 0 }`.
///
/// Finiteness comes from the nonnegativity of the determinant of the Gram
/// matrix of `(h_plus, h_minus, r)`, which bounds the pairing pairs (a, b).
pub fn roots_between(lat: &IntegerLattice, h_plus: &[i64], h_minus: &[i64]) -> Vec<Vec<i64>> {
    let p = lat.inner(h_plus, h_plus);
    let q = lat.inner(h_minus, h_minus);
    let m = lat.inner(h_plus, h_minus);
    assert!(p > 0 && q > 0, "both vectors must have positive norm");
    assert!(m > 0, "vectors must lie in a common positive cone");
    let disc = (m as i128) * (m as i128) - (p as i128) * (q as i128);
    assert!(disc > 0, "span must be hyperbolic");

    let gram_q = lat.gram.to_q();
    let ell_p: Vec<i64> = crate::mat::vec_mat(h_plus, &lat.gram);
    let ell_m: Vec<i64> = crate::mat::vec_mat(h_minus, &lat.gram);

    let mut out = Vec::new();
    // a range: q a^2 + 2 m a + (p + 2 p q - 2 m^2) <= 0
    let mut a: i64 = 1;
    loop {
        let lhs = (q as i128) * (a as i128) * (a as i128)
            + 2 * (m as i128) * (a as i128)
            + (p as i128 + 2 * (p as i128) * (q as i128) - 2 * (m as i128) * (m as i128));
        if lhs > 0 {
            break;
        }
        // b range: p b^2 - 2 m a b + (q a^2 + 2 p q - 2 m^2) <= 0, b <= -1
        let mut b: i64 = -1;
        loop {
            let d = (p as i128) * (b as i128) * (b as i128)
                - 2 * (m as i128) * (a as i128) * (b as i128)
                + ((q as i128) * (a as i128) * (a as i128)
                    + 2 * (p as i128) * (q as i128)
                    - 2 * (m as i128) * (m as i128));
            if d > 0 {
                break;
            }
            let found = norm_pairing_vectors_multi(
                &gram_q,
                &[ell_p.clone(), ell_m.clone()],
                &rat_i(-2),
                &[rat_i(a), rat_i(b)],
            );
            out.extend(found);
            b -= 1;
        }
        a += 1;
    }
    out.sort();
    out
}

/// Enumeration matching the spec of `enumerate_negdef`: complete list of
/// nonzero vectors with norm at least `min_norm` in lexicographic order.
pub fn enumerate_negdef(
    lat: &IntegerLattice,
    min_norm: i64,
) -> Result<Vec<(Vec<i64>, i64)>, LatticeError> {
    short_vectors(lat, min_norm)
}

/// Helper for the common pattern `x G x^T = norm`, `<x, h> = b` inside an
/// integer lattice (the functional is `G h^T`).
pub fn lattice_norm_pairing(lat: &IntegerLattice, h: &[i64], norm: i64, b: i64) -> Vec<Vec<i64>> {
    let ell = crate::mat::vec_mat(h, &lat.gram);
    norm_pairing_vectors(&lat.gram.to_q(), &ell, &rat_i(norm), &rat_i(b))
}

/// Dual-lattice variant: vectors `z` (dual coordinates, so the underlying
/// dual vector is `z G^{-1}`) with `z G^{-1} z^T = norm` and pairing
/// `<z G^{-1}, h> = z · h^T = b`.
pub fn dual_norm_pairing(lat: &IntegerLattice, h: &[i64], norm: &Rat, b: &Rat) -> Vec<Vec<i64>> {
    norm_pairing_vectors(lat.gram_inv(), h, norm, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IntegerLattice;
    use crate::mat::IMat;
    use crate::rat::rat;

    fn negdef(rows: &[Vec<i64>]) -> IntegerLattice {
        IntegerLattice::negative_definite(IMat::from_rows(rows)).unwrap()
    }

    #[test]
    fn rank_one_root_pair() {
        let lat = negdef(&[vec![-2]]);
        let v = short_vectors(&lat, -2).unwrap();
        assert_eq!(v, vec![(vec![-1], -2), (vec![1], -2)]);
    }

    #[test]
    fn a2_roots() {
        let lat = negdef(&[vec![-2, 1], vec![1, -2]]);
        let v = short_vectors(&lat, -2).unwrap();
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|(_, n)| *n == -2));
        // closed under negation
        for (x, _) in &v {
            let neg: Vec<i64> = x.iter().map(|&c| -c).collect();
            assert!(v.iter().any(|(y, _)| y == &neg));
        }
    }

    #[test]
    fn tighter_bound_is_subset() {
        let lat = negdef(&[vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]);
        let all = short_vectors(&lat, -8).unwrap();
        let tight = short_vectors(&lat, -4).unwrap();
        for item in &tight {
            assert!(all.contains(item));
        }
        assert!(tight.len() < all.len());
    }

    /// Independent oracle: box search with coordinate bounds from the
    /// inverse Gram diagonal.
    fn box_search(lat: &IntegerLattice, min_norm: i64) -> Vec<(Vec<i64>, i64)> {
        let n = lat.rank;
        let ginv = lat.gram_inv();
        // |x_i| <= sqrt(|min_norm| * |(G^{-1})_{ii}|), computed exactly
        let mut bounds = Vec::new();
        for i in 0..n {
            let gii = ginv[(i, i)].clone();
            let bound_sq = Rat::from(BigInt::from(-min_norm)) * gii.abs();
            let b = i64::try_from(&crate::rat::floor_sqrt(&bound_sq)).unwrap();
            bounds.push(b + 1);
        }
        let mut out = Vec::new();
        let mut x = vec![0i64; n];
        fn rec(
            lat: &IntegerLattice,
            bounds: &[i64],
            x: &mut Vec<i64>,
            i: usize,
            min_norm: i64,
            out: &mut Vec<(Vec<i64>, i64)>,
        ) {
            if i == x.len() {
                if x.iter().any(|&c| c != 0) {
                    let norm = lat.inner(x, x);
                    if norm >= min_norm {
                        out.push((x.clone(), norm));
                    }
                }
                return;
            }
            for v in -bounds[i]..=bounds[i] {
                x[i] = v;
                rec(lat, bounds, x, i + 1, min_norm, out);
            }
            x[i] = 0;
        }
        rec(lat, &bounds, &mut x, 0, min_norm, &mut out);
        out.sort();
        out
    }

    #[test]
    fn agrees_with_box_search() {
        let lats = vec![
            negdef(&[vec![-2, 1], vec![1, -2]]),
            negdef(&[vec![-4, 0], vec![0, -6]]),
            negdef(&[vec![-2, 1, 0], vec![1, -4, 1], vec![0, 1, -2]]),
            negdef(&[
                vec![-2, 1, 0, 0],
                vec![1, -2, 1, 0],
                vec![0, 1, -2, 1],
                vec![0, 0, 1, -2],
            ]),
        ];
        for lat in &lats {
            for bound in [-2, -6, -10] {
                let fast = short_vectors(lat, bound).unwrap();
                let slow = box_search(lat, bound);
                assert_eq!(fast, slow, "mismatch at bound {bound}");
            }
        }
    }

    #[test]
    fn pairing_enumeration_vs_filter() {
        // hyperbolic U + A1: find norm -2 vectors of given degree
        let lat = IntegerLattice::hyperbolic(IMat::from_rows(&[
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![0, 0, -2],
        ]))
        .unwrap();
        let h = vec![1, 1, 0]; // norm 2
        for d in 0..5 {
            let fast = lattice_norm_pairing(&lat, &h, -2, d);
            // oracle: box search over a crude range
            let mut slow = Vec::new();
            for a in -12i64..=12 {
                for b in -12i64..=12 {
                    for c in -12i64..=12 {
                        let x = vec![a, b, c];
                        if lat.inner(&x, &x) == -2 && lat.inner(&x, &h) == d {
                            slow.push(x);
                        }
                    }
                }
            }
            slow.sort();
            assert_eq!(fast, slow, "degree {d}");
        }
    }

    #[test]
    fn pairing_scanner_matches_one_shot() {
        let lat = IntegerLattice::hyperbolic(IMat::from_rows(&[
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![0, 0, -2],
        ]))
        .unwrap();
        let h = vec![2, 1, 0];
        let ell = crate::mat::vec_mat(&h, &lat.gram);
        let scanner = PairingScanner::new(&lat.gram.to_q(), &ell).unwrap();
        for d in -2i64..6 {
            let fast = scanner.collect(&rat_i(-2), &rat_i(d));
            let slow = norm_pairing_vectors(&lat.gram.to_q(), &ell, &rat_i(-2), &rat_i(d));
            assert_eq!(fast, slow, "d={d}");
        }
    }

    #[test]
    fn shell_scan_with_rational_center() {
        // x^2 target around center 1/2: (x + 1/2)^2 = 9/4  => x = 1, -2
        let form = QMat::from_rows(&[vec![rat(1, 1)]]);
        let ctx = ShellCtx::new(&form).unwrap();
        let mut hits = Vec::new();
        ctx.scan_shell(&[rat(1, 2)], &rat(9, 4), |x| hits.push(x[0]));
        hits.sort();
        assert_eq!(hits, vec![-2, 1]);
    }
}
