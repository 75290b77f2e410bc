//! Derived operations: gamma, Adams, and the divided operations relative to
//! a rank-bounded class N.
//!
//! Adams operations are computed by the integer-exact Newton recursion
//! `-n lambda^n(x) = sum_{i=1..n} (-1)^i psi_i(x) lambda^{n-i}(x)`; the
//! logarithmic-derivative generating function is kept as an independent
//! cross-check.
//!
//! The divided operation `lambda^n(N, x)` is the exact quotient of
//! `lambda^n(x * lambda_{-1}(N))` by `lambda_{-1}(N)`. In the gamma-presented
//! universal rings `lambda_{-1}(N)` is (up to sign) a single variable and the
//! division is plain monomial division. In a general model the in-ring
//! quotient is only defined modulo the annihilator of `lambda_{-1}(N)`, so
//! the operation is computed in a truncated universal ring and specialized
//! along the lambda-morphism sending the universal generators to `N - d` and
//! `x - eps(x)`; this is exact as soon as the truncation weight exceeds the
//! nilpotency degree of the target's augmentation ideal.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lambda::{GeneratorSpec, LambdaRingModel};
use crate::poly::{Monomial, Polynomial};
use crate::ring::RingElement;
use crate::series::TruncatedSeries;
use crate::int;

/// `gamma^n(x)`: the n-th coefficient of `lambda_{t/(1-t)}(x)`.
pub fn gamma_op(model: &LambdaRingModel, x: &RingElement, n: u32) -> Result<RingElement> {
    if n == 0 {
        return Ok(model.ring().one());
    }
    let series = model.lambda_series(x, n as usize)?;
    let gamma = series.substitute_gamma(model.ring())?;
    Ok(gamma.coefficient(n as usize).clone())
}

/// The full gamma series up to `order`.
pub fn gamma_series(
    model: &LambdaRingModel,
    x: &RingElement,
    order: usize,
) -> Result<TruncatedSeries> {
    let series = model.lambda_series(x, order)?;
    series.substitute_gamma(model.ring())
}

/// `psi_n(x)` by the inductive Newton recursion.
pub fn adams_op(model: &LambdaRingModel, x: &RingElement, n: u32) -> Result<RingElement> {
    if n < 1 {
        return Err(Error::Input("Adams operations are defined for n >= 1".into()));
    }
    let ring = model.ring();
    let lambda = model.lambda_series(x, n as usize)?;
    let mut psi: Vec<RingElement> = Vec::with_capacity(n as usize + 1);
    psi.push(ring.zero()); // unused index 0
    for k in 1..=n as usize {
        // (-1)^k psi_k = -k lambda^k - sum_{i=1..k-1} (-1)^i psi_i lambda^{k-i}
        let mut acc = ring.scale(lambda.coefficient(k), &int(-(k as i64)));
        for i in 1..k {
            let term = ring.mul(&psi[i], lambda.coefficient(k - i));
            let signed = if i % 2 == 0 { term } else { ring.neg(&term) };
            acc = ring.sub(&acc, &signed);
        }
        if k % 2 != 0 {
            acc = ring.neg(&acc);
        }
        psi.push(acc);
    }
    Ok(psi.pop().expect("n >= 1"))
}

/// `psi_n(x)` read off the generating function
/// `-t lambda'(x) / lambda(x) = sum psi_n(x) (-t)^n`; an independent route
/// against the recursion.
pub fn adams_op_via_series(model: &LambdaRingModel, x: &RingElement, n: u32) -> Result<RingElement> {
    if n < 1 {
        return Err(Error::Input("Adams operations are defined for n >= 1".into()));
    }
    let ring = model.ring();
    let order = n as usize;
    let lambda = model.lambda_series(x, order)?;
    let mut numerator = TruncatedSeries::zero(order, ring);
    for k in 1..=order {
        numerator.set_coefficient(k, ring.scale(lambda.coefficient(k), &int(-(k as i64))));
    }
    let ratio = numerator.mul(&lambda.inverse(ring)?, ring);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok(ring.scale(ratio.coefficient(order), &int(sign)))
}

/// Denominator variants for the divided Adams generating function.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PsiDenominator {
    /// `lambda_t(x)`.
    LambdaOfX,
    /// The divided series `sum lambda^k(N, x) t^k`.
    DividedSeries,
    /// `lambda_t(x * lambda_{-1}(N))`, the variant equivalent to dividing
    /// `psi_n(x * lambda_{-1}(N))` exactly by `lambda_{-1}(N)`.
    ProductSeries,
}

impl PsiDenominator {
    pub const ALL: [PsiDenominator; 3] = [
        PsiDenominator::LambdaOfX,
        PsiDenominator::DividedSeries,
        PsiDenominator::ProductSeries,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PsiDenominator::LambdaOfX => "lambda(x)",
            PsiDenominator::DividedSeries => "lambda(N,x)",
            PsiDenominator::ProductSeries => "lambda(x*lambda_-1(N))",
        }
    }
}

enum DividedMode {
    /// `lambda_{-1}(N)` is a signed constant (d = 0).
    Constant { sign: i64 },
    /// `lambda_{-1}(N)` is `sign * v` for a single ring variable `v`
    /// (gamma-presented universal rings).
    MonomialVar { var: usize, sign: i64 },
    /// The model is an honest polynomial ring (a domain), so the exact
    /// quotient is unique and found by leading-term division.
    PolyDivision,
    /// Compute in a truncated universal ring and specialize.
    Specialize(Box<SpecializeEngine>),
}

struct SpecializeEngine {
    universal: LambdaRingModel,
    ctx: DividedContext,
    /// Images of the universal N-symbols `gamma^m(N - d)` in the outer model.
    n_images: Vec<RingElement>,
    truncation: u32,
}

/// A rank-bounded class N together with everything needed to evaluate the
/// divided operations against it.
pub struct DividedContext {
    n_class: RingElement,
    rank_bound: u32,
    lambda_minus_one: RingElement,
    mode: DividedMode,
}

impl DividedContext {
    /// Validate the class and prepare the evaluation strategy.
    ///
    /// `weight_cap` bounds the gamma-weight beyond which products of
    /// augmentation-zero classes vanish in this model (the dimension, for
    /// scheme models); it is required whenever the model itself is not a
    /// gamma-presented truncated ring.
    pub fn new(
        model: &LambdaRingModel,
        n_class: RingElement,
        rank_bound: u32,
        weight_cap: Option<u32>,
    ) -> Result<Self> {
        let ring = model.ring();
        let d = rank_bound;
        // lambda^k(N) must vanish above the bound.
        for k in d + 1..=d + 2 {
            if !model.lambda_op(&n_class, k)?.is_zero() {
                return Err(Error::Input(format!(
                    "lambda^{k} of the class does not vanish above the declared bound {d}"
                )));
            }
        }
        // lambda_{-1}(N) and the normalization check
        // lambda_{-1}(N) = (-1)^d gamma^d(N - d).
        let mut lam_minus_one = ring.one();
        if d > 0 {
            let series = model.lambda_series(&n_class, d as usize)?;
            lam_minus_one = ring.zero();
            for k in 0..=d as usize {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                lam_minus_one =
                    ring.add(&lam_minus_one, &ring.scale(series.coefficient(k), &int(sign)));
            }
            let reduced = ring.sub(&n_class, &ring.constant(int(d as i64)));
            let top_gamma = gamma_op(model, &reduced, d)?;
            let expected = ring.scale(&top_gamma, &int(if d % 2 == 0 { 1 } else { -1 }));
            if lam_minus_one != expected {
                return Err(Error::Input(
                    "lambda_-1(N) does not match (-1)^d gamma^d(N - d); the class is not rank-bounded"
                        .into(),
                ));
            }
        }
        let mode = Self::pick_mode(model, &n_class, d, &lam_minus_one, weight_cap)?;
        Ok(DividedContext {
            n_class,
            rank_bound: d,
            lambda_minus_one: lam_minus_one,
            mode,
        })
    }

    pub fn class(&self) -> &RingElement {
        &self.n_class
    }

    pub fn rank_bound(&self) -> u32 {
        self.rank_bound
    }

    pub fn lambda_minus_one(&self) -> &RingElement {
        &self.lambda_minus_one
    }

    fn pick_mode(
        model: &LambdaRingModel,
        n_class: &RingElement,
        d: u32,
        lam: &RingElement,
        weight_cap: Option<u32>,
    ) -> Result<DividedMode> {
        if d == 0 {
            return Ok(DividedMode::Constant { sign: 1 });
        }
        // A degenerate lambda_-1(N) (a constant other than a unit, e.g. zero
        // for a rank-one class equal to 1) leaves any in-ring division
        // meaningless; only the universal route defines the operation then.
        let degenerate = match lam.as_constant() {
            Some(c) => match c.to_i64() {
                Some(1) | Some(-1) => {
                    return Ok(DividedMode::Constant {
                        sign: c.to_i64().expect("unit"),
                    })
                }
                _ => true,
            },
            None => false,
        };
        if !degenerate {
            // A single-variable monomial of exponent one divides exactly.
            if model.ring().truncation().is_some() && lam.poly().term_count() == 1 {
                let (mono, coeff) = lam.poly().terms().next().expect("nonzero");
                let vars: Vec<usize> = mono
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, _)| i)
                    .collect();
                if vars.len() == 1 && mono.exponent(vars[0]) == 1 {
                    if let Some(sign) = coeff.to_i64().filter(|s| s.abs() == 1) {
                        return Ok(DividedMode::MonomialVar { var: vars[0], sign });
                    }
                }
            }
            // In a plain polynomial ring the exact quotient is unique.
            if model.ring().rules().is_empty() && model.ring().truncation().is_none() {
                return Ok(DividedMode::PolyDivision);
            }
        }
        // Quotient rings have zero divisors, so in-ring division is only
        // defined modulo the annihilator; fall back to the universal ring.
        let cap = weight_cap.ok_or_else(|| {
            Error::Input(
                "divided operations on this model need a weight cap for the universal ring".into(),
            )
        })?;
        let truncation = cap + d;
        let universal = universal_divided_model(d, truncation, 6)?;
        let n_gen = universal.generator_element(0);
        let ctx = DividedContext::new(&universal, n_gen, d, None)?;
        let reduced = model
            .ring()
            .sub(n_class, &model.ring().constant(int(d as i64)));
        let mut n_images = Vec::with_capacity(d as usize);
        for m in 1..=d {
            n_images.push(gamma_op(model, &reduced, m)?);
        }
        Ok(DividedMode::Specialize(Box::new(SpecializeEngine {
            universal,
            ctx,
            n_images,
            truncation,
        })))
    }
}

/// The free model on `N` (gamma bound `d`, augmentation `d`) and one
/// unbounded augmentation-zero generator `x`, truncated by gamma weight.
pub fn universal_divided_model(d: u32, truncation: u32, order_hint: u32) -> Result<LambdaRingModel> {
    let mut gens = Vec::new();
    if d > 0 {
        gens.push(GeneratorSpec::free_gamma("N", Some(d), d as i64));
    }
    gens.push(GeneratorSpec::free_gamma("x", None, 0));
    LambdaRingModel::free(gens, Some(truncation), order_hint)
}

/// `lambda^n(N, x)`: the exact quotient of `lambda^n(x lambda_{-1}(N))` by
/// `lambda_{-1}(N)`.
pub fn divided_lambda(
    model: &LambdaRingModel,
    ctx: &DividedContext,
    x: &RingElement,
    n: u32,
) -> Result<RingElement> {
    let ring = model.ring();
    if n == 0 {
        return Ok(ring.one());
    }
    match &ctx.mode {
        DividedMode::Constant { sign } => {
            let y = ring.scale(x, &int(*sign));
            let lam = model.lambda_op(&y, n)?;
            Ok(ring.scale(&lam, &int(*sign)))
        }
        DividedMode::MonomialVar { var, sign } => {
            let y = ring.mul(x, &ctx.lambda_minus_one);
            let lam = model.lambda_op(&y, n)?;
            let quotient = divide_by_variable(lam.poly(), *var)?;
            let q = ring.element(quotient)?;
            Ok(ring.scale(&q, &int(*sign)))
        }
        DividedMode::PolyDivision => {
            let y = ring.mul(x, &ctx.lambda_minus_one);
            let lam = model.lambda_op(&y, n)?;
            let quotient = divide_exact(lam.poly(), ctx.lambda_minus_one.poly())?;
            ring.element(quotient)
        }
        DividedMode::Specialize(engine) => {
            let uring = engine.universal.ring();
            let c = model.augmentation(x);
            let x_reduced = ring.sub(x, &ring.constant(c.clone()));
            // x maps to (the universal x) + eps(x).
            let x_univ = uring.add(
                &engine
                    .universal
                    .generator_element(engine.universal.generators().len() - 1),
                &uring.constant(c),
            );
            let q_univ = divided_lambda(&engine.universal, &engine.ctx, &x_univ, n)?;
            // Specialize gamma symbols of N - d and of x - eps(x).
            let mut assign = engine.n_images.clone();
            for p in 1..=engine.truncation {
                assign.push(gamma_op(model, &x_reduced, p)?);
            }
            ring.eval_poly(q_univ.poly(), &assign)
        }
    }
}

fn divide_by_variable(p: &Polynomial, var: usize) -> Result<Polynomial> {
    let mut out = Polynomial::zero(p.arity());
    for (m, c) in p.terms() {
        if m.exponent(var) == 0 {
            return Err(Error::Divisibility(format!(
                "term is not divisible by the divisor variable {var}"
            )));
        }
        let mut exps: Vec<u32> = m.exponents().to_vec();
        exps[var] -= 1;
        out.insert_term(Monomial::from_exponents(exps), c.clone());
    }
    Ok(out)
}

/// Exact division of polynomials over the integers by a divisor with unit
/// leading coefficient; fails if a remainder survives.
fn divide_exact(p: &Polynomial, divisor: &Polynomial) -> Result<Polynomial> {
    let lead = divisor
        .leading_monomial()
        .ok_or_else(|| Error::Division("division by the zero polynomial".into()))?
        .clone();
    let lead_coeff = divisor
        .terms()
        .last()
        .map(|(_, c)| c.clone())
        .expect("nonzero divisor");
    let unit = lead_coeff
        .to_i64()
        .filter(|c| c.abs() == 1)
        .ok_or_else(|| Error::Division("divisor leading coefficient must be a unit".into()))?;
    let mut rem = p.clone();
    let mut quotient = Polynomial::zero(p.arity());
    while let Some(rlm) = rem.leading_monomial().cloned() {
        if !lead.divides(&rlm) {
            return Err(Error::Divisibility(
                "leading term is not divisible by the divisor".into(),
            ));
        }
        let rc = rem
            .terms()
            .last()
            .map(|(_, c)| c.clone())
            .expect("nonzero remainder");
        let factor = Polynomial::from_monomial(lead.quotient_of(&rlm), rc * int(unit));
        quotient = quotient.add(&factor);
        rem = rem.sub(&factor.mul(divisor));
    }
    Ok(quotient)
}

/// The divided series `1 + sum_{k>=1} lambda^k(N, x) t^k`.
pub fn divided_lambda_series(
    model: &LambdaRingModel,
    ctx: &DividedContext,
    x: &RingElement,
    order: usize,
) -> Result<TruncatedSeries> {
    let ring = model.ring();
    let mut s = TruncatedSeries::one(order, ring);
    for k in 1..=order {
        s.set_coefficient(k, divided_lambda(model, ctx, x, k as u32)?);
    }
    Ok(s)
}

/// `psi_n(N, x)` with the denominator variant that satisfies the
/// pushforward identity (`ProductSeries`).
pub fn divided_adams(
    model: &LambdaRingModel,
    ctx: &DividedContext,
    x: &RingElement,
    n: u32,
) -> Result<RingElement> {
    divided_adams_with(model, ctx, x, n, PsiDenominator::ProductSeries)
}

/// `psi_n(N, x)` extracted from
/// `-t d/dt lambda(N, x) / D = sum psi_n(N, x) (-t)^n`
/// with the denominator `D` chosen by `variant`.
pub fn divided_adams_with(
    model: &LambdaRingModel,
    ctx: &DividedContext,
    x: &RingElement,
    n: u32,
    variant: PsiDenominator,
) -> Result<RingElement> {
    if n < 1 {
        return Err(Error::Input("divided Adams operations need n >= 1".into()));
    }
    let ring = model.ring();
    let order = n as usize;
    let divided = divided_lambda_series(model, ctx, x, order)?;
    let mut numerator = TruncatedSeries::zero(order, ring);
    for k in 1..=order {
        numerator.set_coefficient(k, ring.scale(divided.coefficient(k), &int(-(k as i64))));
    }
    let denominator = match variant {
        PsiDenominator::LambdaOfX => model.lambda_series(x, order)?,
        PsiDenominator::DividedSeries => divided.clone(),
        PsiDenominator::ProductSeries => {
            let y = ring.mul(x, &ctx.lambda_minus_one);
            model.lambda_series(&y, order)?
        }
    };
    let ratio = numerator.mul(&denominator.inverse(ring)?, ring);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok(ring.scale(ratio.coefficient(order), &int(sign)))
}
