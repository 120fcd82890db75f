//! Reference enumerator for small pointed cones, used by the test suites
//! as an independent oracle against the LP route.
//!
//! Works directly from the definition: candidate extreme rays are kernels
//! of (n-1)-subsets of the forms, faces are intersections of facet sets.

use lattice_core::mat::{dot, QMat, ZMat};
use lattice_core::rat::{primitive_part, rat_i, Rat};
use lattice_core::snf;
use std::collections::BTreeSet;

/// Extreme rays of the pointed cone `{ x : f · x >= 0 }`, as primitive
/// integer vectors with canonical sign.
pub fn extreme_rays(forms: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = forms.first().map(|f| f.len()).unwrap_or(0);
    assert!(n >= 2);
    let m = forms.len();
    let mut rays: BTreeSet<Vec<i64>> = BTreeSet::new();
    let subsets = choose(m, n - 1);
    for sub in subsets {
        let mat = ZMat {
            rows: n,
            cols: n - 1,
            a: {
                let mut a = Vec::new();
                for r in 0..n {
                    for &i in &sub {
                        a.push(num_bigint::BigInt::from(forms[i][r]));
                    }
                }
                a
            },
        };
        let ker = snf::left_kernel(&mat);
        if ker.rows != 1 {
            continue;
        }
        let cand: Vec<i64> = (0..n)
            .map(|j| i64::try_from(&ker[(0, j)]).expect("ray fits i64"))
            .collect();
        for dir in [1i64, -1] {
            let r: Vec<i64> = cand.iter().map(|&x| x * dir).collect();
            if forms.iter().all(|f| dot(f, &r) >= 0) {
                if let Some(p) = primitive_part(&r) {
                    rays.insert(p);
                }
            }
        }
    }
    // An extreme ray must saturate n-1 independent forms; candidates that
    // are not extreme (interior to a higher face) are eliminated by the
    // rank test below.
    rays.into_iter()
        .filter(|r| {
            let active: Vec<Vec<Rat>> = forms
                .iter()
                .filter(|f| dot(f, r) == 0)
                .map(|f| f.iter().map(|&x| rat_i(x)).collect())
                .collect();
            !active.is_empty() && QMat::from_rows(&active).rank() == n - 1
        })
        .collect()
}

/// Indices of forms that cut facets: the rays they contain span a
/// hyperplane.
pub fn facet_indices(forms: &[Vec<i64>], rays: &[Vec<i64>]) -> Vec<usize> {
    let n = forms[0].len();
    (0..forms.len())
        .filter(|&i| {
            let on: Vec<Vec<Rat>> = rays
                .iter()
                .filter(|r| dot(&forms[i], r) == 0)
                .map(|r| r.iter().map(|&x| rat_i(x)).collect())
                .collect();
            on.len() >= n - 1 && QMat::from_rows(&on).rank() == n - 1
        })
        .collect()
}

/// Face counts by dimension (1..n-1), from the facet-intersection
/// description of the face lattice of a pointed cone.
pub fn face_counts(forms: &[Vec<i64>], rays: &[Vec<i64>]) -> Vec<usize> {
    let n = forms[0].len();
    let m = forms.len();
    assert!(m <= 20, "brute force face counts limited to 20 forms");
    let mut ray_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 1u32..(1 << m) {
        let on_rays: Vec<usize> = (0..rays.len())
            .filter(|&ri| {
                (0..m).all(|fi| mask >> fi & 1 == 0 || dot(&forms[fi], &rays[ri]) == 0)
            })
            .collect();
        if !on_rays.is_empty() {
            ray_sets.insert(on_rays);
        }
    }
    let mut counts = vec![0usize; n];
    for rs in &ray_sets {
        let rows: Vec<Vec<Rat>> =
            rs.iter().map(|&ri| rays[ri].iter().map(|&x| rat_i(x)).collect()).collect();
        let dim = QMat::from_rows(&rows).rank();
        if dim >= 1 && dim < n {
            counts[dim] += 1;
        }
    }
    counts
}

fn choose(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}
