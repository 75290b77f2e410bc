//! Presented augmented lambda-rings.
//!
//! A model owns a quotient ring together with lambda data for each
//! generator:
//!
//! * `Split` — a line class with `lambda_t(g) = 1 + g t` and rank 1;
//! * `FreeLambda` — a free generator of bounded rank `r`, with the symbols
//!   `lambda^1(g) .. lambda^r(g)` as independent ring variables and
//!   `lambda^k(g) = 0` above the bound;
//! * `FreeGamma` — a free generator presented by reduced gamma symbols
//!   `gamma^k(g - eps(g))`, the presentation under which the gamma
//!   filtration of the universal rings is the weight filtration.
//!
//! The lambda operations of arbitrary elements are computed structurally:
//! sums map to series products, integer multiples to series powers, and
//! monomials fold through the universal product and composition
//! polynomials. Models are immutable once built; the universal-polynomial
//! table is filled at construction and shared read-only.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::ring::{QuotientRing, RingElement};
use crate::series::TruncatedSeries;
use crate::universal::UniversalTable;
use crate::{binomial, binomial_int, int, Int};

/// Lambda data attached to a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaData {
    Split,
    FreeLambda { rank_bound: u32 },
    FreeGamma { bound: Option<u32> },
}

#[derive(Clone, Debug)]
pub struct GeneratorSpec {
    pub name: String,
    pub data: LambdaData,
    pub augmentation: i64,
}

impl GeneratorSpec {
    pub fn split(name: &str) -> Self {
        GeneratorSpec {
            name: name.into(),
            data: LambdaData::Split,
            augmentation: 1,
        }
    }

    pub fn free_lambda(name: &str, rank_bound: u32) -> Self {
        GeneratorSpec {
            name: name.into(),
            data: LambdaData::FreeLambda { rank_bound },
            augmentation: 0,
        }
    }

    pub fn free_gamma(name: &str, bound: Option<u32>, augmentation: i64) -> Self {
        GeneratorSpec {
            name: name.into(),
            data: LambdaData::FreeGamma { bound },
            augmentation,
        }
    }
}

/// A presented augmented lambda-ring.
#[derive(Clone, Debug)]
pub struct LambdaRingModel {
    ring: QuotientRing,
    gens: Vec<GeneratorSpec>,
    /// Ring variable -> (generator index, symbol index k).
    var_owner: Vec<(usize, u32)>,
    var_eps: Vec<Int>,
    table: UniversalTable,
}

const MAX_SERIES_ORDER: usize = 40;
const MAX_SERIES_COEFF: i64 = 100_000;

impl LambdaRingModel {
    /// Treat every variable of an existing presentation as a split line
    /// class. This is the shape of all scheme models.
    pub fn split_from_ring(ring: QuotientRing) -> Result<Self> {
        let gens: Vec<GeneratorSpec> = ring
            .var_names()
            .iter()
            .map(|n| GeneratorSpec::split(n))
            .collect();
        let var_owner = (0..ring.arity()).map(|i| (i, 1)).collect();
        let var_eps = vec![int(1); ring.arity()];
        let model = LambdaRingModel {
            ring,
            gens,
            var_owner,
            var_eps,
            table: UniversalTable::empty(),
        };
        model.validate_rule_augmentations()?;
        Ok(model)
    }

    /// Build a free model from generator specifications. `truncation` is the
    /// total gamma-weight bound and is required as soon as some generator is
    /// unbounded; `order_hint` sizes the universal-polynomial table.
    pub fn free(
        gens: Vec<GeneratorSpec>,
        truncation: Option<u32>,
        order_hint: u32,
    ) -> Result<Self> {
        let mut vars = Vec::new();
        let mut weights = Vec::new();
        let mut var_owner = Vec::new();
        let mut var_eps = Vec::new();
        let mut max_symbol = 1u32;
        for (gi, gen) in gens.iter().enumerate() {
            match gen.data {
                LambdaData::Split => {
                    if truncation.is_some() {
                        return Err(Error::Input(
                            "split generators are not allowed in weight-truncated rings".into(),
                        ));
                    }
                    if gen.augmentation != 1 {
                        return Err(Error::Input("split generators have augmentation 1".into()));
                    }
                    vars.push(gen.name.clone());
                    weights.push(1);
                    var_owner.push((gi, 1));
                    var_eps.push(int(1));
                }
                LambdaData::FreeLambda { rank_bound } => {
                    if truncation.is_some() {
                        return Err(Error::Input(
                            "rank-bounded lambda generators are not allowed in weight-truncated rings"
                                .into(),
                        ));
                    }
                    if rank_bound == 0 {
                        return Err(Error::Input("rank bound must be positive".into()));
                    }
                    if gen.augmentation < 0 || gen.augmentation > rank_bound as i64 {
                        return Err(Error::Input(format!(
                            "augmentation of {} must lie in 0..={rank_bound}",
                            gen.name
                        )));
                    }
                    for k in 1..=rank_bound {
                        vars.push(format!("{}{}", gen.name, k));
                        weights.push(k);
                        var_owner.push((gi, k));
                        var_eps.push(binomial_int(&int(gen.augmentation), k));
                    }
                    max_symbol = max_symbol.max(rank_bound);
                }
                LambdaData::FreeGamma { bound } => {
                    let count = match (bound, truncation) {
                        (Some(b), Some(t)) => b.min(t),
                        (Some(b), None) => b,
                        (None, Some(t)) => t,
                        (None, None) => {
                            return Err(Error::Input(format!(
                                "unbounded generator {} requires a weight truncation",
                                gen.name
                            )))
                        }
                    };
                    if count == 0 {
                        return Err(Error::Input("gamma bound must be positive".into()));
                    }
                    for k in 1..=count {
                        vars.push(format!("{}{}", gen.name, k));
                        weights.push(k);
                        var_owner.push((gi, k));
                        var_eps.push(int(0));
                    }
                    max_symbol = max_symbol.max(count);
                }
            }
        }
        let ring = match truncation {
            Some(t) => QuotientRing::with_truncation(vars, Vec::new(), weights, t)?,
            None => QuotientRing::new(vars, Vec::new())?,
        };
        let table = UniversalTable::with_caps(order_hint, order_hint, max_symbol)?;
        Ok(LambdaRingModel {
            ring,
            gens,
            var_owner,
            var_eps,
            table,
        })
    }

    fn validate_rule_augmentations(&self) -> Result<()> {
        for rule in self.ring.rules() {
            let lead = self.eps_of_poly(&Polynomial::from_monomial(rule.lead.clone(), int(1)));
            let repl = self.eps_of_poly(&rule.replacement);
            if lead != repl {
                return Err(Error::Load(
                    "presentation relation is not compatible with the augmentation".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    pub fn table(&self) -> &UniversalTable {
        &self.table
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// The generator itself as a ring element.
    pub fn generator_element(&self, gi: usize) -> RingElement {
        match self.gens[gi].data {
            LambdaData::Split | LambdaData::FreeLambda { .. } => {
                let v = self.first_var_of(gi);
                self.ring.variable(v)
            }
            LambdaData::FreeGamma { .. } => {
                let v = self.first_var_of(gi);
                let var = self.ring.variable(v);
                self.ring
                    .add(&var, &self.ring.constant(int(self.gens[gi].augmentation)))
            }
        }
    }

    fn first_var_of(&self, gi: usize) -> usize {
        self.var_owner
            .iter()
            .position(|&(g, k)| g == gi && k == 1)
            .expect("generator owns a first symbol")
    }

    /// The ring morphism to the integers sending a class to its rank.
    pub fn augmentation(&self, x: &RingElement) -> Int {
        self.eps_of_poly(x.poly())
    }

    fn eps_of_poly(&self, p: &Polynomial) -> Int {
        let mut acc = int(0);
        for (m, c) in p.terms() {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if self.var_eps[i].is_zero() {
                    term = int(0);
                    break;
                }
                for _ in 0..e {
                    term *= &self.var_eps[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// The series `lambda_t(x)` truncated at `order`.
    pub fn lambda_series(&self, x: &RingElement, order: usize) -> Result<TruncatedSeries> {
        if order < 1 {
            return Err(Error::Input("series truncation order must be at least 1".into()));
        }
        if order > MAX_SERIES_ORDER {
            return Err(Error::Input(format!(
                "series order {order} exceeds the supported bound {MAX_SERIES_ORDER}"
            )));
        }
        let ring = &self.ring;
        let mut seeds: Vec<Option<TruncatedSeries>> = vec![None; ring.arity()];
        let mut result = TruncatedSeries::one(order, ring);
        for (mono, coeff) in x.poly().terms() {
            let base = self.monomial_lambda_series(mono, order, &mut seeds)?;
            let c = coeff.to_i64().filter(|c| c.abs() <= MAX_SERIES_COEFF).ok_or_else(|| {
                Error::Input("coefficient too large for a lambda series".into())
            })?;
            let powered = base.pow_int(c, ring)?;
            result = result.mul(&powered, ring);
        }
        Ok(result)
    }

    /// `lambda^n(x)`, the n-th coefficient of the lambda series.
    pub fn lambda_op(&self, x: &RingElement, n: u32) -> Result<RingElement> {
        if n == 0 {
            return Ok(self.ring.one());
        }
        let series = self.lambda_series(x, n as usize)?;
        Ok(series.coefficient(n as usize).clone())
    }

    fn monomial_lambda_series(
        &self,
        mono: &Monomial,
        order: usize,
        seeds: &mut Vec<Option<TruncatedSeries>>,
    ) -> Result<TruncatedSeries> {
        let ring = &self.ring;
        if mono.is_unit() {
            // lambda_t(1) = 1 + t
            let mut s = TruncatedSeries::one(order, ring);
            s.set_coefficient(1, ring.one());
            return Ok(s);
        }
        let all_split = mono
            .exponents()
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || matches!(self.gens[self.var_owner[i].0].data, LambdaData::Split));
        if all_split {
            // A product of line classes is a line class.
            let class = ring.element(Polynomial::from_monomial(mono.clone(), int(1)))?;
            let mut s = TruncatedSeries::one(order, ring);
            s.set_coefficient(1, class);
            return Ok(s);
        }
        let mut acc: Option<TruncatedSeries> = None;
        for (i, &e) in mono.exponents().iter().enumerate() {
            for _ in 0..e {
                if seeds[i].is_none() {
                    seeds[i] = Some(self.variable_lambda_series(i, order)?);
                }
                let seed = seeds[i].as_ref().unwrap();
                acc = Some(match acc {
                    None => seed.clone(),
                    Some(s) => self.lambda_of_product(&s, seed, order)?,
                });
            }
        }
        Ok(acc.expect("non-unit monomial has at least one factor"))
    }

    /// `lambda_t(u*v)` from the series of the factors, coefficient by
    /// coefficient through the universal product polynomials.
    fn lambda_of_product(
        &self,
        a: &TruncatedSeries,
        b: &TruncatedSeries,
        order: usize,
    ) -> Result<TruncatedSeries> {
        let ring = &self.ring;
        let mut out = TruncatedSeries::one(order, ring);
        for n in 1..=order {
            let poly = self.table.product(n as u32)?;
            let mut assign = Vec::with_capacity(2 * n);
            for k in 1..=n {
                assign.push(a.coefficient(k).clone());
            }
            for k in 1..=n {
                assign.push(b.coefficient(k).clone());
            }
            out.set_coefficient(n, ring.eval_poly(&poly, &assign)?);
        }
        Ok(out)
    }

    /// `lambda_t` of a single ring variable.
    fn variable_lambda_series(&self, var: usize, order: usize) -> Result<TruncatedSeries> {
        let ring = &self.ring;
        let (gi, k) = self.var_owner[var];
        match self.gens[gi].data {
            LambdaData::Split => {
                let mut s = TruncatedSeries::one(order, ring);
                s.set_coefficient(1, ring.variable(var));
                Ok(s)
            }
            LambdaData::FreeLambda { rank_bound } => {
                let symbols = self.lambda_symbols_free_lambda(gi, rank_bound, order * k as usize);
                self.compose_series(k, &symbols, order)
            }
            LambdaData::FreeGamma { .. } => {
                // gamma^k(g') = sum_i C(k-1, i-1) lambda^i(g'), so the series
                // is a product of composition series.
                let symbols = self.lambda_symbols_free_gamma(gi, order * k as usize);
                let mut acc = TruncatedSeries::one(order, ring);
                for i in 1..=k {
                    let c = binomial(k as u64 - 1, i as u64 - 1)
                        .to_i64()
                        .ok_or_else(|| Error::Internal("binomial overflow".into()))?;
                    if c == 0 {
                        continue;
                    }
                    let s = self.compose_series(i, &symbols, order)?;
                    acc = acc.mul(&s.pow_int(c, ring)?, ring);
                }
                Ok(acc)
            }
        }
    }

    /// `lambda_t(lambda^i(z))` given the lambda symbols of `z`.
    fn compose_series(
        &self,
        i: u32,
        symbols: &[RingElement],
        order: usize,
    ) -> Result<TruncatedSeries> {
        let ring = &self.ring;
        let mut out = TruncatedSeries::one(order, ring);
        for n in 1..=order {
            let poly = self.table.compose(n as u32, i)?;
            let need = (n as u32 * i) as usize;
            let assign = &symbols[..need];
            out.set_coefficient(n, ring.eval_poly(&poly, assign)?);
        }
        Ok(out)
    }

    /// `lambda^j(g)` for a rank-bounded free generator: the ring variable for
    /// `j` within the bound, zero above it.
    fn lambda_symbols_free_lambda(&self, gi: usize, rank_bound: u32, upto: usize) -> Vec<RingElement> {
        let first = self.first_var_of(gi);
        (1..=upto)
            .map(|j| {
                if j <= rank_bound as usize {
                    self.ring.variable(first + j - 1)
                } else {
                    self.ring.zero()
                }
            })
            .collect()
    }

    /// `lambda^j(g - eps(g))` for a gamma-presented generator, through the
    /// triangular transform between lambda and gamma symbols.
    fn lambda_symbols_free_gamma(&self, gi: usize, upto: usize) -> Vec<RingElement> {
        let first = self.first_var_of(gi);
        let available = self
            .var_owner
            .iter()
            .filter(|&&(g, _)| g == gi)
            .count();
        (1..=upto)
            .map(|j| {
                let mut acc = self.ring.zero();
                for l in 1..=j.min(available) {
                    let sign = if (j - l) % 2 == 0 { 1 } else { -1 };
                    let c = binomial(j as u64 - 1, (j - l) as u64) * int(sign);
                    let term = self.ring.scale(&self.ring.variable(first + l - 1), &c);
                    acc = self.ring.add(&acc, &term);
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::nilpotent_line_ring;

    fn p2_model() -> LambdaRingModel {
        LambdaRingModel::split_from_ring(nilpotent_line_ring("h", 3).unwrap()).unwrap()
    }

    #[test]
    fn split_line_series() {
        let m = p2_model();
        let h = m.generator_element(0);
        let s = m.lambda_series(&h, 4).unwrap();
        assert_eq!(s.coefficient(1), &h);
        for k in 2..=4 {
            assert!(s.coefficient(k).is_zero(), "lambda^{k} of a line class");
        }
    }

    #[test]
    fn lambda_of_sum_of_lines() {
        // lambda_t(L1 + L2) = (1 + L1 t)(1 + L2 t); lambda^2 = L1 L2
        let ring = QuotientRing::new(vec!["a".into(), "b".into()], Vec::new()).unwrap();
        let m = LambdaRingModel::split_from_ring(ring).unwrap();
        let a = m.generator_element(0);
        let b = m.generator_element(1);
        let x = m.ring().add(&a, &b);
        assert_eq!(m.lambda_op(&x, 2).unwrap(), m.ring().mul(&a, &b));
        assert!(m.lambda_op(&x, 3).unwrap().is_zero());
    }

    #[test]
    fn lambda_of_h_minus_one() {
        // In Z[h]/((h-1)^3): lambda^2(h - 1) = 1 - h.
        let m = p2_model();
        let h = m.generator_element(0);
        let x = m.ring().sub(&h, &m.ring().one());
        let l2 = m.lambda_op(&x, 2).unwrap();
        assert_eq!(l2, m.ring().sub(&m.ring().one(), &h));
    }

    #[test]
    fn lambda_of_negative_line() {
        // lambda_t(-L) = (1 + L t)^{-1}
        let m = p2_model();
        let h = m.generator_element(0);
        let x = m.ring().neg(&h);
        let s = m.lambda_series(&x, 3).unwrap();
        for k in 0..=3 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let expected = m.ring().scale(&m.ring().pow(&h, k as u32), &int(sign));
            assert_eq!(s.coefficient(k), &expected);
        }
    }

    #[test]
    fn additivity_into_products() {
        // lambda_t(x + y) = lambda_t(x) lambda_t(y) on a free model.
        let m = LambdaRingModel::free(
            vec![
                GeneratorSpec::free_lambda("x", 2),
                GeneratorSpec::free_lambda("y", 2),
            ],
            None,
            6,
        )
        .unwrap();
        let x = m.generator_element(0);
        let y = m.generator_element(1);
        let lhs = m.lambda_series(&m.ring().add(&x, &y), 5).unwrap();
        let rhs = m
            .lambda_series(&x, 5)
            .unwrap()
            .mul(&m.lambda_series(&y, 5).unwrap(), m.ring());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_bound_kills_high_lambdas() {
        let m = LambdaRingModel::free(vec![GeneratorSpec::free_lambda("g", 3)], None, 6).unwrap();
        let g = m.generator_element(0);
        for k in 4..=7 {
            assert!(m.lambda_op(&g, k).unwrap().is_zero(), "lambda^{k}");
        }
        assert!(!m.lambda_op(&g, 3).unwrap().is_zero());
    }

    #[test]
    fn augmentation_examples() {
        let m = p2_model();
        let h = m.generator_element(0);
        assert_eq!(m.augmentation(&h), int(1));
        let x = m.ring().sub(&h, &m.ring().one());
        assert_eq!(m.augmentation(&x), int(0));
        // eps(lambda^2(x)) = C(eps(x), 2) with eps(x) = 4
        let four = m.ring().constant(int(4));
        let l2 = m.lambda_op(&four, 2).unwrap();
        assert_eq!(m.augmentation(&l2), int(6));
    }

    #[test]
    fn gamma_presented_rank_bound() {
        // For a gamma-bounded generator g' with augmentation d, the shifted
        // class N = g' carries lambda^k(N) = 0 for k > d.
        let m = LambdaRingModel::free(
            vec![GeneratorSpec::free_gamma("N", Some(2), 2)],
            None,
            6,
        )
        .unwrap();
        let n = m.generator_element(0);
        assert_eq!(m.augmentation(&n), int(2));
        for k in 3..=6 {
            assert!(m.lambda_op(&n, k).unwrap().is_zero(), "lambda^{k}(N)");
        }
        assert!(!m.lambda_op(&n, 2).unwrap().is_zero());
    }
}
