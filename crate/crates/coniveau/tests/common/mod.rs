//! Shared oracle helpers for the integration tests. Everything here is an
//! independent computation route: no lattice, series or lambda machinery
//! from the crate is reused beyond plain polynomial arithmetic.

#![allow(dead_code)]

use coniveau::{int, Int, Polynomial};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Coefficients of `prod (1 + f_i t)` up to `t^order`, as polynomials.
pub fn split_product_series(factors: &[Polynomial], order: usize, arity: usize) -> Vec<Polynomial> {
    let mut coeffs = vec![Polynomial::zero(arity); order + 1];
    coeffs[0] = Polynomial::one(arity);
    for f in factors {
        for k in (1..=order).rev() {
            let bumped = coeffs[k - 1].mul(f);
            coeffs[k] = coeffs[k].add(&bumped);
        }
    }
    coeffs
}

/// The elementary symmetric polynomial `e_i` of the variables
/// `offset .. offset + count` inside an `arity`-variable ring.
pub fn elementary(arity: usize, offset: usize, count: usize, i: usize) -> Polynomial {
    if i == 0 {
        return Polynomial::one(arity);
    }
    if i > count {
        return Polynomial::zero(arity);
    }
    let vars: Vec<Polynomial> = (0..count)
        .map(|k| Polynomial::variable(arity, offset + k))
        .collect();
    let series = split_product_series(&vars, i, arity);
    series[i].clone()
}

/// Remainder of a univariate polynomial (dense i64 coefficients, ascending)
/// under long division by a monic divisor.
pub fn long_division_remainder(mut p: Vec<i64>, divisor: &[i64]) -> Vec<i64> {
    let d = divisor.len() - 1;
    assert_eq!(divisor[d], 1, "divisor must be monic");
    while p.len() > d {
        let lead = *p.last().unwrap();
        let shift = p.len() - 1 - d;
        if lead != 0 {
            for (i, c) in divisor.iter().enumerate() {
                p[shift + i] -= lead * c;
            }
        }
        p.pop();
    }
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Exact membership of `v` in the group generated by linearly independent
/// `gens`, by rational Gaussian elimination with i128 fractions. Entirely
/// separate from the Hermite-normal-form route.
pub fn rational_membership(gens: &[Vec<i64>], v: &[i64]) -> bool {
    #[derive(Clone, Copy)]
    struct Frac {
        num: i128,
        den: i128,
    }
    fn gcd(a: i128, b: i128) -> i128 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a.max(1)
    }
    impl Frac {
        fn new(num: i128, den: i128) -> Frac {
            assert!(den != 0);
            let sign = if den < 0 { -1 } else { 1 };
            let g = gcd(num, den);
            Frac {
                num: sign * num / g,
                den: sign * den / g,
            }
        }
        fn from_int(n: i64) -> Frac {
            Frac {
                num: n as i128,
                den: 1,
            }
        }
        fn is_zero(self) -> bool {
            self.num == 0
        }
        fn sub(self, o: Frac) -> Frac {
            Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
        }
        fn mul(self, o: Frac) -> Frac {
            Frac::new(self.num * o.num, self.den * o.den)
        }
        fn div(self, o: Frac) -> Frac {
            Frac::new(self.num * o.den, self.den * o.num)
        }
    }

    // Solve c * G = v by eliminating on the transposed system.
    let r = gens.len();
    let m = v.len();
    // rows: one equation per ambient coordinate; columns: c_1..c_r | v.
    let mut rows: Vec<Vec<Frac>> = (0..m)
        .map(|j| {
            let mut row: Vec<Frac> = gens.iter().map(|g| Frac::from_int(g[j])).collect();
            row.push(Frac::from_int(v[j]));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..r {
        let Some(found) = (pivot_row..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let p = rows[pivot_row][col];
        for i in 0..m {
            if i != pivot_row && !rows[i][col].is_zero() {
                let factor = rows[i][col].div(p);
                for k in col..=r {
                    let t = rows[pivot_row][k].mul(factor);
                    rows[i][k] = rows[i][k].sub(t);
                }
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    // Inconsistent rows mean v is outside the rational span.
    for i in pivot_row..m {
        if !rows[i][r].is_zero() {
            return false;
        }
    }
    // Independent generators: the solution is unique; membership needs it
    // integral.
    for &(row, col) in &pivots {
        let c = rows[row][r].div(rows[row][col]);
        if c.den != 1 {
            return false;
        }
    }
    true
}

/// A random dense coordinate vector with entries in `[-bound, bound]`.
pub fn random_coords(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<Int> {
    (0..len).map(|_| int(rng.gen_range(-bound..=bound))).collect()
}
