//! Truncated formal power series with ring-element coefficients.
//!
//! A `TruncatedSeries` of order `T` stores coefficients for degrees `0..=T`;
//! every arithmetic result is re-truncated to the same order. Inversion
//! requires the constant coefficient to be the unit or its negative.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{QuotientRing, RingElement};
use crate::{int, Int};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<RingElement>,
}

impl TruncatedSeries {
    pub fn zero(order: usize, ring: &QuotientRing) -> Self {
        TruncatedSeries {
            coeffs: vec![ring.zero(); order + 1],
        }
    }

    pub fn one(order: usize, ring: &QuotientRing) -> Self {
        let mut s = Self::zero(order, ring);
        s.coeffs[0] = ring.one();
        s
    }

    /// Build from explicit coefficients, padding with zeros or truncating.
    pub fn from_coefficients(order: usize, mut coeffs: Vec<RingElement>, ring: &QuotientRing) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(ring.zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &RingElement {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn set_coefficient(&mut self, k: usize, v: RingElement) {
        self.coeffs[k] = v;
    }

    pub fn add(&self, other: &Self, ring: &QuotientRing) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| ring.add(&self.coeffs[k], &other.coeffs[k]))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn mul(&self, other: &Self, ring: &QuotientRing) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![ring.zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = ring.mul(&self.coeffs[i], &other.coeffs[j]);
                coeffs[i + j] = ring.add(&coeffs[i + j], &prod);
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse up to the truncation order. The constant term
    /// must be 1 or -1.
    pub fn inverse(&self, ring: &QuotientRing) -> Result<Self> {
        let unit = match self.coeffs[0].as_constant() {
            Some(c) if c == int(1) => int(1),
            Some(c) if c == int(-1) => int(-1),
            _ => {
                return Err(Error::Division(
                    "series inverse needs constant coefficient 1 or -1".into(),
                ))
            }
        };
        let order = self.order();
        let mut inv = vec![ring.zero(); order + 1];
        inv[0] = ring.constant(unit.clone());
        for n in 1..=order {
            let mut acc = ring.zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let prod = ring.mul(&self.coeffs[k], &inv[n - k]);
                acc = ring.add(&acc, &prod);
            }
            // b_n = u * (-sum) where u = a_0^{-1} = a_0 for a_0 = +-1
            inv[n] = ring.scale(&ring.neg(&acc), &unit);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Formal derivative; the result has order one less.
    pub fn derivative(&self, ring: &QuotientRing) -> Self {
        let order = self.order();
        if order == 0 {
            return Self::zero(0, ring);
        }
        let coeffs = (1..=order)
            .map(|k| ring.scale(&self.coeffs[k], &Int::from(k)))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Integer power, with negative exponents via inversion.
    pub fn pow_int(&self, e: i64, ring: &QuotientRing) -> Result<Self> {
        let base = if e < 0 { self.inverse(ring)? } else { self.clone() };
        let mut out = Self::one(self.order(), ring);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base, ring);
        }
        Ok(out)
    }

    /// Substitute `t -> t / (1 - t)`, the change of variable taking the
    /// lambda generating series to the gamma generating series.
    pub fn substitute_gamma(&self, ring: &QuotientRing) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        // s = t/(1-t) = t + t^2 + ... computed honestly from the inverse.
        let mut one_minus_t = Self::one(order, ring);
        one_minus_t.coeffs[1] = ring.constant(int(-1));
        let geometric = one_minus_t.inverse(ring)?;
        let mut s = Self::zero(order, ring);
        for k in 1..=order {
            s.coeffs[k] = geometric.coeffs[k - 1].clone();
        }
        // Horner-style accumulation of sum a_k s^k.
        let mut out = Self::zero(order, ring);
        out.coeffs[0] = self.coeffs[0].clone();
        let mut s_pow = Self::one(order, ring);
        for k in 1..=order {
            s_pow = s_pow.mul(&s, ring);
            if self.coeffs[k].is_zero() {
                continue;
            }
            let scaled = s_pow.scale_elem(&self.coeffs[k], ring);
            out = out.add(&scaled, ring);
        }
        Ok(out)
    }

    fn scale_elem(&self, c: &RingElement, ring: &QuotientRing) -> Self {
        let coeffs = self.coeffs.iter().map(|a| ring.mul(a, c)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &Int, ring: &QuotientRing) -> Self {
        let coeffs = self.coeffs.iter().map(|a| ring.scale(a, c)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].as_constant().map_or(false, |c| c.is_one())
            && self.coeffs[1..].iter().all(RingElement::is_zero)
    }
}

/// `a * b` truncated to the smaller order (free-function form).
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries, ring: &QuotientRing) -> TruncatedSeries {
    a.mul(b, ring)
}

/// Inverse up to truncation order.
pub fn series_inverse(a: &TruncatedSeries, ring: &QuotientRing) -> Result<TruncatedSeries> {
    a.inverse(ring)
}

/// Formal derivative.
pub fn series_derivative(a: &TruncatedSeries, ring: &QuotientRing) -> TruncatedSeries {
    a.derivative(ring)
}

/// Substitute `t -> t/(1-t)`.
pub fn series_substitute_gamma(a: &TruncatedSeries, ring: &QuotientRing) -> Result<TruncatedSeries> {
    a.substitute_gamma(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::ring::nilpotent_line_ring;

    fn line_series(ring: &QuotientRing, order: usize) -> TruncatedSeries {
        // 1 + L t with L the ring generator
        let mut s = TruncatedSeries::one(order, ring);
        s.set_coefficient(1, ring.variable(0));
        s
    }

    #[test]
    fn inverse_of_line_series() {
        // (1 + Lt)^{-1} = 1 - Lt + L^2 t^2 - L^3 t^3 at order 3
        let ring = nilpotent_line_ring("L", 8).unwrap();
        let s = line_series(&ring, 3);
        let inv = s.inverse(&ring).unwrap();
        let l = Polynomial::variable(1, 0);
        for k in 0..=3 {
            let expected = ring
                .element(l.pow(k as u32).scale(&int(if k % 2 == 0 { 1 } else { -1 })))
                .unwrap();
            assert_eq!(inv.coefficient(k), &expected);
        }
        assert!(s.mul(&inv, &ring).is_one());
    }

    #[test]
    fn inverse_of_one() {
        let ring = QuotientRing::integers();
        let one = TruncatedSeries::one(5, &ring);
        assert!(one.inverse(&ring).unwrap().is_one());
    }

    #[test]
    fn derivative_shifts_down() {
        // d/dt (1 + x t^2) = 2x t
        let ring = nilpotent_line_ring("x", 5).unwrap();
        let mut s = TruncatedSeries::one(3, &ring);
        s.set_coefficient(2, ring.variable(0));
        let d = s.derivative(&ring);
        assert!(d.coefficient(0).is_zero());
        assert_eq!(d.coefficient(1), &ring.scale(&ring.variable(0), &int(2)));
        assert!(d.coefficient(2).is_zero());
    }

    #[test]
    fn gamma_substitution_geometric() {
        // 1 + x t |-> 1 + x(t + t^2 + ...)
        let ring = nilpotent_line_ring("x", 9).unwrap();
        let s = line_series(&ring, 5);
        let g = s.substitute_gamma(&ring).unwrap();
        for k in 1..=5 {
            assert_eq!(g.coefficient(k), &ring.variable(0), "coefficient {k}");
        }
        // 1 -> 1
        let one = TruncatedSeries::one(5, &ring);
        assert!(one.substitute_gamma(&ring).unwrap().is_one());
        // integer-coefficient check: 1 + t has all-ones image
        let zring = QuotientRing::integers();
        let mut s = TruncatedSeries::one(6, &zring);
        s.set_coefficient(1, zring.one());
        let g = s.substitute_gamma(&zring).unwrap();
        for k in 0..=6 {
            assert_eq!(g.coefficient(k), &zring.one(), "coefficient {k}");
        }
    }

    #[test]
    fn non_unit_constant_rejected() {
        let ring = QuotientRing::integers();
        let mut s = TruncatedSeries::one(3, &ring);
        s.set_coefficient(0, ring.constant(int(2)));
        assert!(matches!(s.inverse(&ring), Err(Error::Division(_))));
    }
}
