//! Quotient rings presented by confluent monomial rewrite systems.
//!
//! A `QuotientRing` owns an ordered variable list and a set of rewrite rules
//! `leading monomial -> replacement` where every replacement monomial is
//! strictly smaller in the graded lexicographic order, so reduction
//! terminates and normal forms are unique. Graded rings of infinite rank
//! (the truncated universal rings) carry per-variable weights and a weight
//! bound instead: monomials above the bound are discarded.
//!
//! `RingElement` stores the unique reduced representative of its class.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::Int;

/// A single rewrite rule: `lead` rewrites to `replacement`.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lead: Monomial,
    pub replacement: Polynomial,
}

/// A finitely presented quotient of an integer polynomial ring.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    vars: Vec<String>,
    rules: Vec<RewriteRule>,
    weights: Vec<u32>,
    truncation: Option<u32>,
    basis: Option<Vec<Monomial>>,
}

/// An element of a quotient ring, kept in normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    poly: Polynomial,
}

impl RingElement {
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// The value if the element is a constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<Int> {
        if self.poly.is_constant() {
            Some(self.poly.constant_coefficient())
        } else {
            None
        }
    }
}

const BASIS_LIMIT: usize = 200_000;

impl QuotientRing {
    /// A polynomial quotient with unit weights and no truncation.
    pub fn new(vars: Vec<String>, rules: Vec<RewriteRule>) -> Result<Self> {
        let weights = vec![1; vars.len()];
        Self::build(vars, rules, weights, None)
    }

    /// A weight-graded ring truncated above `bound`: any monomial of weight
    /// exceeding the bound is treated as zero.
    pub fn with_truncation(
        vars: Vec<String>,
        rules: Vec<RewriteRule>,
        weights: Vec<u32>,
        bound: u32,
    ) -> Result<Self> {
        Self::build(vars, rules, weights, Some(bound))
    }

    /// The ring of integers (no variables).
    pub fn integers() -> Self {
        Self::new(Vec::new(), Vec::new()).expect("trivial presentation")
    }

    fn build(
        vars: Vec<String>,
        rules: Vec<RewriteRule>,
        weights: Vec<u32>,
        truncation: Option<u32>,
    ) -> Result<Self> {
        let arity = vars.len();
        if weights.len() != arity {
            return Err(Error::Input("one weight per variable required".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Input("variable weights must be positive".into()));
        }
        for (i, name) in vars.iter().enumerate() {
            if vars[..i].contains(name) {
                return Err(Error::Input(format!("duplicate variable name {name}")));
            }
        }
        for rule in &rules {
            if rule.lead.arity() != arity || rule.replacement.arity() != arity {
                return Err(Error::Input("rule arity mismatch".into()));
            }
            if rule.lead.is_unit() {
                return Err(Error::Input("rule leading monomial must be non-constant".into()));
            }
            for (m, _) in rule.replacement.terms() {
                if m >= &rule.lead {
                    return Err(Error::Input(
                        "rewrite rule must strictly decrease the term order".into(),
                    ));
                }
            }
        }
        let mut ring = QuotientRing {
            vars,
            rules,
            weights,
            truncation,
            basis: None,
        };
        ring.basis = ring.enumerate_basis();
        Ok(ring)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    fn keeps(&self, m: &Monomial) -> bool {
        match self.truncation {
            Some(bound) => m.weight(&self.weights) <= bound as u64,
            None => true,
        }
    }

    /// Reduce a polynomial to its unique normal form.
    pub fn reduce(&self, p: Polynomial) -> Polynomial {
        let mut work = p.into_terms();
        let mut out = Polynomial::zero(self.arity());
        while let Some((mono, coeff)) = work.pop_last() {
            if coeff.is_zero() {
                continue;
            }
            if !self.keeps(&mono) {
                continue;
            }
            match self.rules.iter().find(|r| r.lead.divides(&mono)) {
                Some(rule) => {
                    let q = rule.lead.quotient_of(&mono);
                    for (rm, rc) in rule.replacement.terms() {
                        let m = q.mul(rm);
                        let c = &coeff * rc;
                        insert(&mut work, m, c);
                    }
                }
                None => out.insert_term(mono, coeff),
            }
        }
        out
    }

    /// Normal-form an arbitrary polynomial into a ring element.
    pub fn element(&self, p: Polynomial) -> Result<RingElement> {
        if p.arity() != self.arity() {
            return Err(Error::Input(format!(
                "polynomial has {} variables, ring has {}",
                p.arity(),
                self.arity()
            )));
        }
        Ok(RingElement {
            poly: self.reduce(p),
        })
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            poly: Polynomial::zero(self.arity()),
        }
    }

    pub fn one(&self) -> RingElement {
        RingElement {
            poly: Polynomial::one(self.arity()),
        }
    }

    pub fn constant(&self, c: Int) -> RingElement {
        let p = Polynomial::constant(self.arity(), c);
        RingElement {
            poly: self.reduce(p),
        }
    }

    pub fn variable(&self, idx: usize) -> RingElement {
        let p = Polynomial::variable(self.arity(), idx);
        RingElement {
            poly: self.reduce(p),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            poly: self.reduce(a.poly.add(&b.poly)),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            poly: self.reduce(a.poly.sub(&b.poly)),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement {
            poly: a.poly.neg(),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            poly: self.reduce(a.poly.mul(&b.poly)),
        }
    }

    pub fn scale(&self, a: &RingElement, c: &Int) -> RingElement {
        RingElement {
            poly: a.poly.scale(c),
        }
    }

    pub fn pow(&self, a: &RingElement, k: u32) -> RingElement {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    /// Evaluate a polynomial in `assign.len()` formal variables at ring
    /// elements. Used to instantiate universal polynomials.
    pub fn eval_poly(&self, p: &Polynomial, assign: &[RingElement]) -> Result<RingElement> {
        if p.arity() != assign.len() {
            return Err(Error::Input(format!(
                "evaluation needs {} assignments, got {}",
                p.arity(),
                assign.len()
            )));
        }
        // Cache powers of each assigned element as they are needed.
        let mut powers: Vec<Vec<RingElement>> = assign.iter().map(|a| vec![a.clone()]).collect();
        let mut acc = self.zero();
        for (m, c) in p.terms() {
            let mut term = self.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() < e as usize {
                    let next = self.mul(powers[i].last().unwrap(), &assign[i]);
                    powers[i].push(next);
                }
                term = self.mul(&term, &powers[i][e as usize - 1]);
                if term.is_zero() {
                    break;
                }
            }
            acc = self.add(&acc, &term);
        }
        Ok(acc)
    }

    /// The normal-form monomial basis, when finite.
    pub fn basis(&self) -> Result<&[Monomial]> {
        self.basis
            .as_deref()
            .ok_or_else(|| Error::Input("ring has an infinite basis and no truncation".to_string()))
    }

    /// Coordinates of an element over the finite basis.
    pub fn coordinates(&self, x: &RingElement) -> Result<Vec<Int>> {
        let basis = self.basis()?;
        let mut coords = vec![Int::zero(); basis.len()];
        for (m, c) in x.poly.terms() {
            match basis.binary_search_by(|b| b.cmp(m)) {
                Ok(i) => coords[i] = c.clone(),
                Err(_) => {
                    return Err(Error::Internal(
                        "normal form contains a non-basis monomial".into(),
                    ))
                }
            }
        }
        Ok(coords)
    }

    pub fn from_coordinates(&self, coords: &[Int]) -> Result<RingElement> {
        let basis = self.basis()?;
        if coords.len() != basis.len() {
            return Err(Error::Input(format!(
                "expected {} coordinates, got {}",
                basis.len(),
                coords.len()
            )));
        }
        let mut p = Polynomial::zero(self.arity());
        for (m, c) in basis.iter().zip(coords) {
            p.insert_term(m.clone(), c.clone());
        }
        Ok(RingElement { poly: p })
    }

    fn per_var_cap(&self, i: usize) -> Option<u32> {
        let rule_cap = self
            .rules
            .iter()
            .filter_map(|r| {
                let lead = &r.lead;
                let pure = lead
                    .exponents()
                    .iter()
                    .enumerate()
                    .all(|(j, &e)| j == i || e == 0);
                if pure && lead.exponent(i) > 0 {
                    Some(lead.exponent(i))
                } else {
                    None
                }
            })
            .min();
        let weight_cap = self.truncation.map(|b| b / self.weights[i] + 1);
        match (rule_cap, weight_cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        }
    }

    fn enumerate_basis(&self) -> Option<Vec<Monomial>> {
        let arity = self.arity();
        let mut caps = Vec::with_capacity(arity);
        for i in 0..arity {
            caps.push(self.per_var_cap(i)?);
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; arity];
        loop {
            let m = Monomial::from_exponents(exps.clone());
            if self.keeps(&m) && !self.rules.iter().any(|r| r.lead.divides(&m)) {
                out.push(m);
                if out.len() > BASIS_LIMIT {
                    return None;
                }
            }
            // odometer over the cap box
            let mut i = 0;
            loop {
                if i == arity {
                    out.sort();
                    return Some(out);
                }
                if exps[i] < caps[i] {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }
}

fn insert(map: &mut BTreeMap<Monomial, Int>, m: Monomial, c: Int) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
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

/// Reduce `p` to its unique representative in `ring`.
pub fn normal_form(p: Polynomial, ring: &QuotientRing) -> Result<RingElement> {
    ring.element(p)
}

/// Presentation of Z[h]/((h - 1)^k): the single rule rewrites h^k.
pub(crate) fn nilpotent_line_ring(var: &str, k: u32) -> Result<QuotientRing> {
    // (h - 1)^k = 0, so h^k rewrites to h^k - (h - 1)^k.
    let h = Polynomial::variable(1, 0);
    let relation = h.sub(&Polynomial::one(1)).pow(k);
    let lead = Monomial::from_exponents(vec![k]);
    let replacement = Polynomial::from_monomial(lead.clone(), Int::from(1)).sub(&relation);
    QuotientRing::new(vec![var.to_string()], vec![RewriteRule { lead, replacement }])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn p2_ring() -> QuotientRing {
        nilpotent_line_ring("h", 3).unwrap()
    }

    #[test]
    fn normal_form_cubic() {
        // Oracle: long division of h^3 by (h-1)^3 leaves 3h^2 - 3h + 1.
        let ring = p2_ring();
        let h = Polynomial::variable(1, 0);
        let nf = ring.element(h.pow(3)).unwrap();
        let expected = ring
            .element(
                h.pow(2)
                    .scale(&int(3))
                    .sub(&h.scale(&int(3)))
                    .add(&Polynomial::one(1)),
            )
            .unwrap();
        assert_eq!(nf, expected);
    }

    #[test]
    fn normal_form_zero_and_relation() {
        let ring = p2_ring();
        assert!(ring.element(Polynomial::zero(1)).unwrap().is_zero());
        let h = Polynomial::variable(1, 0);
        let rel = h.sub(&Polynomial::one(1)).pow(3);
        assert!(ring.element(rel).unwrap().is_zero());
    }

    #[test]
    fn normal_form_idempotent() {
        let ring = p2_ring();
        let h = Polynomial::variable(1, 0);
        let p = h.pow(5).add(&h.pow(2).scale(&int(-4)));
        let once = ring.element(p).unwrap();
        let twice = ring.element(once.poly().clone()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let ring = p2_ring();
        assert!(ring.element(Polynomial::variable(2, 1)).is_err());
    }

    #[test]
    fn basis_of_p2() {
        let ring = p2_ring();
        let basis = ring.basis().unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[0], Monomial::unit(1));
        assert_eq!(basis[2], Monomial::from_exponents(vec![2]));
    }

    #[test]
    fn weight_truncation_drops_heavy_monomials() {
        let ring = QuotientRing::with_truncation(
            vec!["u".into(), "v".into()],
            Vec::new(),
            vec![1, 2],
            3,
        )
        .unwrap();
        let u = Polynomial::variable(2, 0);
        let v = Polynomial::variable(2, 1);
        // u * v has weight 3, u^2 * v has weight 4 and must vanish.
        let kept = ring.element(u.mul(&v)).unwrap();
        assert!(!kept.is_zero());
        let dropped = ring.element(u.pow(2).mul(&v)).unwrap();
        assert!(dropped.is_zero());
        assert_eq!(ring.basis().unwrap().len(), 6); // 1, u, u^2, u^3, v, uv
    }
}
