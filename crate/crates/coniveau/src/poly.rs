//! Multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! A `Polynomial` is a sparse map from exponent vectors to nonzero
//! coefficients over a fixed arity (number of variables). Terms are kept in
//! graded lexicographic order: total degree first, then lexicographic with
//! the earliest variable most significant. No zero coefficient is ever
//! stored and exponents are non-negative by construction.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Zero;

use crate::Int;

/// Exponent vector over a fixed, ordered variable list.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// The empty product (all exponents zero).
    pub fn unit(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// The single variable `idx`.
    pub fn variable(arity: usize, idx: usize) -> Self {
        let mut e = vec![0; arity];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Weighted degree with one weight per variable.
    pub fn weight(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.arity() == other.arity() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Int>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Int::from(1))
    }

    pub fn constant(arity: usize, c: Int) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(arity), c);
        }
        p
    }

    pub fn variable(arity: usize, idx: usize) -> Self {
        Self::from_monomial(Monomial::variable(arity, idx), Int::from(1))
    }

    pub fn from_monomial(m: Monomial, c: Int) -> Self {
        let mut p = Self::zero(m.arity());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    /// Coefficient of the empty monomial.
    pub fn constant_coefficient(&self) -> Int {
        self.terms
            .get(&Monomial::unit(self.arity))
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub(crate) fn insert_term(&mut self, m: Monomial, c: Int) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Monomial, Int> {
        self.terms
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = Polynomial::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.arity);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Substitute one polynomial per variable. Images must share an arity,
    /// which becomes the arity of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.arity, "one image per variable");
        let out_arity = images.first().map_or(0, Polynomial::arity);
        let mut out = Polynomial::zero(out_arity);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(out_arity, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Reinterpret over a wider variable list, sending variable `i` to
    /// variable `offset + i`.
    pub fn shift_variables(&self, new_arity: usize, offset: usize) -> Polynomial {
        let mut out = Polynomial::zero(new_arity);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_arity];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[offset + i] = e;
            }
            out.insert_term(Monomial::from_exponents(exps), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn graded_lex_order() {
        // x^2 > x*y > y^2 > x > y > 1 over [x, y]
        let m = |a, b| Monomial::from_exponents(vec![a, b]);
        assert!(m(2, 0) > m(1, 1));
        assert!(m(1, 1) > m(0, 2));
        assert!(m(0, 2) > m(1, 0));
        assert!(m(1, 0) > m(0, 1));
        assert!(m(0, 1) > m(0, 0));
    }

    #[test]
    fn arithmetic_basics() {
        let x = Polynomial::variable(2, 0);
        let y = Polynomial::variable(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        let expected = x.pow(2).sub(&y.pow(2));
        assert_eq!(p, expected);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn substitution() {
        let x = Polynomial::variable(1, 0);
        let p = x.pow(2).add(&Polynomial::one(1));
        let img = Polynomial::variable(2, 1).add(&Polynomial::constant(2, int(1)));
        let q = p.substitute(&[img.clone()]);
        assert_eq!(q, img.pow(2).add(&Polynomial::one(2)));
    }
}
