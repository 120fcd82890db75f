//! Small helpers around `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rat = BigRational;

/// Rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

pub fn is_int(r: &Rat) -> bool {
    r.denom() == &BigInt::from(1)
}

/// Floor of a rational as a `BigInt`.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Exact floor of the square root of a non-negative rational.
pub fn floor_sqrt(r: &Rat) -> BigInt {
    assert!(!r.is_negative(), "floor_sqrt of negative rational");
    // floor(sqrt(p/q)) = isqrt(floor(p/q)) for p, q > 0.
    let q = r.numer().div_floor(r.denom());
    q.sqrt()
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denom_lcm(rs: &[Rat]) -> BigInt {
    let mut l = BigInt::from(1);
    for r in rs {
        l = l.lcm(r.denom());
    }
    l
}

/// Content (gcd) of an integer vector; zero vector has content zero.
pub fn content(v: &[i64]) -> i64 {
    let mut g: i64 = 0;
    for &x in v {
        g = gcd_i64(g, x.abs());
        if g == 1 {
            return 1;
        }
    }
    g
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Divide an integer vector by its content, preserving direction.
/// Returns `None` for the zero vector.
pub fn primitive_part(v: &[i64]) -> Option<Vec<i64>> {
    let c = content(v);
    if c == 0 {
        return None;
    }
    Some(v.iter().map(|&x| x / c).collect())
}

/// Scale a rational vector by the positive factor that makes it a primitive
/// integer vector. Returns `None` for the zero vector.
pub fn primitive_integer_direction(v: &[Rat]) -> Option<Vec<i64>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let l = denom_lcm(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    let out: Vec<i64> = ints
        .iter()
        .map(|x| {
            let q = x / &g;
            i64::try_from(&q).expect("primitive direction exceeds i64")
        })
        .collect();
    Some(out)
}

pub fn to_rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_i(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_sqrt_exact() {
        assert_eq!(floor_sqrt(&rat(49, 1)), BigInt::from(7));
        assert_eq!(floor_sqrt(&rat(50, 1)), BigInt::from(7));
        assert_eq!(floor_sqrt(&rat(1, 2)), BigInt::from(0));
        assert_eq!(floor_sqrt(&rat(9, 4)), BigInt::from(1));
        assert_eq!(floor_sqrt(&rat(9, 1)), BigInt::from(3));
    }

    #[test]
    fn primitive_direction() {
        let v = vec![rat(2, 3), rat(-4, 3)];
        assert_eq!(primitive_integer_direction(&v).unwrap(), vec![1, -2]);
        assert_eq!(primitive_integer_direction(&[rat_i(0)]), None);
        let w = vec![rat_i(6), rat_i(-9)];
        assert_eq!(primitive_integer_direction(&w).unwrap(), vec![2, -3]);
    }
}
