//! Exact rational simplex for the homogeneous wall-detection problem.
//!
//! A linear form `f0` defines a wall of the cone `{ x : f(x) >= 0 for all
//! f in F \ {f0} }` exactly when minimizing `f0` over that cone is
//! unbounded below. The problem is homogeneous, so the minimum is 0 or
//! -infinity; we run primal simplex from the (fully degenerate) zero
//! vertex with Bland's rule, which cannot cycle. Each answer is certified:
//! unboundedness by an explicit improving ray, boundedness by an explicit
//! Farkas combination expressing f0 over the constraints.

use lattice_core::rat::Rat;
use num_traits::{Signed, Zero};

/// Outcome of one wall-detection LP, with its certificate.
#[derive(Debug)]
pub enum WallVerdict {
    /// A ray `x` with `A x >= 0` and `f0(x) < 0`: `f0` cuts a wall.
    Wall(Vec<Rat>),
    /// Multipliers `lambda >= 0` with `f0 = sum lambda_i a_i`: redundant.
    Redundant(Vec<Rat>),
}

impl WallVerdict {
    pub fn is_wall(&self) -> bool {
        matches!(self, WallVerdict::Wall(_))
    }
}

/// Decide whether `min c·x` subject to `a·x >= 0` for `a` in `constraints`
/// is unbounded below. All data exact rationals.
pub fn minimize_homogeneous(constraints: &[Vec<Rat>], c: &[Rat]) -> WallVerdict {
    let n = c.len();
    let m = constraints.len();
    for a in constraints {
        assert_eq!(a.len(), n, "constraint dimension mismatch");
    }
    // Variables: y (n), z (n) with x = y - z, slacks s (m).
    // Rows: a_i · (y - z) - s_i = 0.  Initial basis: slacks.
    let cols = 2 * n + m;
    // tableau[r][j]: coefficient of variable j in the expression of basic
    // variable r (all right-hand sides are and stay zero).
    // Row form: s_r = sum_j T[r][j] * x_j over nonbasic columns.
    // We store the full matrix in "dictionary" form: B^{-1} N as usual,
    // starting from s = A y - A z, i.e. T[r] = (a_r, -a_r, 0...0) with the
    // basic s_r column implicit.
    let mut tab: Vec<Vec<Rat>> = (0..m)
        .map(|r| {
            let mut row = vec![Rat::zero(); cols];
            for j in 0..n {
                row[j] = constraints[r][j].clone();
                row[n + j] = -constraints[r][j].clone();
            }
            row[2 * n + r] = Rat::zero();
            row
        })
        .collect();
    // reduced costs of nonbasic variables; objective = c·y - c·z
    let mut cost: Vec<Rat> = {
        let mut v = vec![Rat::zero(); cols];
        for j in 0..n {
            v[j] = c[j].clone();
            v[n + j] = -c[j].clone();
        }
        v
    };
    // basic[r] = variable index of the basic variable in row r
    let mut basic: Vec<usize> = (0..m).map(|r| 2 * n + r).collect();
    let mut in_basis = vec![false; cols];
    for &b in &basic {
        in_basis[b] = true;
    }

    let pivot_limit = 20_000 + 50 * (cols + m);
    let mut pivots = 0usize;
    loop {
        // Bland: entering = smallest-index nonbasic with negative cost.
        let Some(enter) = (0..cols).find(|&j| !in_basis[j] && cost[j].is_negative()) else {
            // Optimal with value 0: extract Farkas multipliers from the
            // reduced costs of the slack columns. In the dictionary,
            // s_i-column reduced cost equals lambda_i with
            // c = sum lambda_i a_i.
            let lambda: Vec<Rat> = (0..m)
                .map(|i| {
                    if in_basis[2 * n + i] {
                        Rat::zero()
                    } else {
                        cost[2 * n + i].clone()
                    }
                })
                .collect();
            // Certificate check: lambda >= 0 and sum lambda_i a_i = c.
            for l in &lambda {
                assert!(!l.is_negative(), "negative Farkas multiplier");
            }
            for j in 0..n {
                let mut acc = Rat::zero();
                for i in 0..m {
                    if !lambda[i].is_zero() {
                        acc += &lambda[i] * &constraints[i][j];
                    }
                }
                assert_eq!(acc, c[j], "Farkas certificate failed");
            }
            return WallVerdict::Redundant(lambda);
        };

        // The dictionary stores x_basic[r] = sum_j tab[r][j] x_j with all
        // right-hand sides zero, so increasing the entering variable is
        // blocked exactly by rows with a negative column entry (every
        // eligible ratio is zero). Bland picks the blocking row whose
        // basic variable has the smallest index.
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if tab[r][enter].is_negative() {
                match leave {
                    None => leave = Some(r),
                    Some(lr) => {
                        if basic[r] < basic[lr] {
                            leave = Some(r);
                        }
                    }
                }
            }
        }
        let Some(lr) = leave else {
            // Unbounded: the entering variable can grow forever. Build the
            // ray: enter = 1, basics follow their dictionary rows.
            let mut x_ray = vec![Rat::zero(); n];
            let assign = |x_ray: &mut Vec<Rat>, var: usize, val: Rat| {
                if var < n {
                    x_ray[var] += val;
                } else if var < 2 * n {
                    x_ray[var - n] -= val;
                }
            };
            assign(&mut x_ray, enter, Rat::from_integer(1.into()));
            for r in 0..m {
                if !tab[r][enter].is_zero() {
                    let val = tab[r][enter].clone();
                    assign(&mut x_ray, basic[r], val);
                }
            }
            // Certificate check: A x >= 0 and c·x < 0.
            for a in constraints {
                let mut acc = Rat::zero();
                for j in 0..n {
                    if !x_ray[j].is_zero() {
                        acc += &a[j] * &x_ray[j];
                    }
                }
                assert!(!acc.is_negative(), "ray certificate violates a constraint");
            }
            let mut obj = Rat::zero();
            for j in 0..n {
                if !x_ray[j].is_zero() {
                    obj += &c[j] * &x_ray[j];
                }
            }
            assert!(obj.is_negative(), "ray certificate does not improve the objective");
            return WallVerdict::Wall(x_ray);
        };

        // Pivot: variable `enter` becomes basic in row lr, `basic[lr]` leaves.
        // Row lr reads x_leave = sum_j tab[lr][j] x_j; solving for x_enter:
        //   x_enter = (1/p) x_leave - sum_{j != enter} (tab[lr][j]/p) x_j.
        pivots += 1;
        assert!(pivots <= pivot_limit, "simplex pivot limit exceeded (cycling?)");
        let leave_var = basic[lr];
        let piv = tab[lr][enter].clone();
        let mut new_row = vec![Rat::zero(); cols];
        for j in 0..cols {
            if j != enter && !tab[lr][j].is_zero() {
                new_row[j] = -&tab[lr][j] / &piv;
            }
        }
        new_row[leave_var] = Rat::from_integer(1.into()) / &piv;
        // Substitute the expression for x_enter into every other row.
        for r in 0..m {
            if r == lr || tab[r][enter].is_zero() {
                continue;
            }
            let factor = tab[r][enter].clone();
            for j in 0..cols {
                if !new_row[j].is_zero() {
                    let add = &factor * &new_row[j];
                    tab[r][j] += add;
                }
            }
            tab[r][enter] = Rat::zero();
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for j in 0..cols {
                if !new_row[j].is_zero() {
                    let add = &factor * &new_row[j];
                    cost[j] += add;
                }
            }
            cost[enter] = Rat::zero();
        }
        tab[lr] = new_row;
        basic[lr] = enter;
        in_basis[enter] = true;
        in_basis[leave_var] = false;
    }
}

/// Algorithm-style entry point: does `forms[f0]` define a wall of the cone
/// cut out by the remaining forms?
pub fn defines_wall(forms: &[Vec<Rat>], f0: usize) -> WallVerdict {
    let constraints: Vec<Vec<Rat>> = forms
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != f0)
        .map(|(_, f)| f.clone())
        .collect();
    minimize_homogeneous(&constraints, &forms[f0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_core::rat::rat_i;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat_i(x)).collect()
    }

    #[test]
    fn quadrant_walls() {
        // Cone x >= 0, y >= 0 in the plane: both forms are walls.
        let forms = vec![v(&[1, 0]), v(&[0, 1])];
        assert!(defines_wall(&forms, 0).is_wall());
        assert!(defines_wall(&forms, 1).is_wall());
    }

    #[test]
    fn redundant_form_detected() {
        // x + y >= 0 is implied by x >= 0, y >= 0.
        let forms = vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        assert!(defines_wall(&forms, 0).is_wall());
        assert!(defines_wall(&forms, 1).is_wall());
        assert!(!defines_wall(&forms, 2).is_wall());
    }

    #[test]
    fn redundancy_in_three_dimensions() {
        let forms = vec![
            v(&[1, 0, 0]),
            v(&[0, 1, 0]),
            v(&[0, 0, 1]),
            v(&[1, 2, 3]),
            v(&[-1, 1, 5]), // wall: can go negative while others hold
        ];
        assert!(!defines_wall(&forms, 3).is_wall());
        assert!(defines_wall(&forms, 4).is_wall());
    }

    #[test]
    fn lower_dimensional_cone() {
        // x >= 0, -x >= 0 forces x = 0; y-form is still a wall of the
        // degenerate cone in the plane.
        let forms = vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1])];
        assert!(defines_wall(&forms, 2).is_wall());
    }
}
