//! Executable checks, one per congruence or containment statement, each
//! returning pass/fail with a reproducible witness on failure.
//!
//! Congruence checks run over the lattice basis of each filtration level
//! plus seeded random short sums of basis elements: the checked operations
//! are not additive, so basis-only testing would under-test them. The
//! universal-ring check distinguishes a first-class `Inconclusive` status,
//! since a too-small truncation cannot decide membership.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{hyperplane_embedding, SchemeModel};
use crate::error::{Error, Result};
use crate::expr::render_polynomial;
use crate::filtration::Filtration;
use crate::lambda::LambdaRingModel;
use crate::ops::{
    adams_op, divided_adams_with, divided_lambda, gamma_op, universal_divided_model,
    DividedContext, PsiDenominator,
};
use crate::ring::RingElement;
use crate::{factorial, int, Int};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Inconclusive => "inconclusive",
        }
    }
}

/// A failing element, printed in the expression grammar so that it can be
/// re-checked through the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub expression: String,
    pub expected_level: u32,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_id: String,
    pub model: String,
    pub params: String,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    /// Wall time; filled by the caller (the core is clock-free).
    pub millis: u64,
}

impl CheckReport {
    fn pass(check_id: &str, model: &str, params: String) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            model: model.to_string(),
            params,
            status: CheckStatus::Pass,
            witness: None,
            millis: 0,
        }
    }

    fn fail(check_id: &str, model: &str, params: String, witness: Witness) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            model: model.to_string(),
            params,
            status: CheckStatus::Fail,
            witness: Some(witness),
            millis: 0,
        }
    }
}

/// Bounds shared by the model-level checks.
#[derive(Clone, Copy, Debug)]
pub struct CheckBounds {
    pub max_n: u32,
    pub max_q: Option<u32>,
    pub sum_samples: u32,
    pub seed: u64,
}

impl Default for CheckBounds {
    fn default() -> Self {
        CheckBounds {
            max_n: 4,
            max_q: None,
            sum_samples: 3,
            seed: 42,
        }
    }
}

impl CheckBounds {
    fn q_cap(&self, dimension: u32) -> u32 {
        self.max_q.unwrap_or(dimension).min(dimension)
    }

    fn params(&self, dimension: u32) -> String {
        format!(
            "max_n={} max_q={} samples={} seed={}",
            self.max_n,
            self.q_cap(dimension),
            self.sum_samples,
            self.seed
        )
    }
}

fn witness_for(
    scheme: &SchemeModel,
    element: &RingElement,
    expected_level: u32,
    detail: String,
) -> Witness {
    Witness {
        expression: render_polynomial(element.poly(), scheme.model.ring()),
        expected_level,
        detail,
    }
}

/// Basis elements of a filtration level plus seeded short random sums.
fn level_elements(
    scheme: &SchemeModel,
    filtration: &Filtration,
    q: u32,
    bounds: &CheckBounds,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<RingElement>> {
    let ring = scheme.model.ring();
    let lattice = filtration.level(q as i64);
    let mut out = Vec::new();
    for row in lattice.basis() {
        out.push(ring.from_coordinates(row)?);
    }
    let rank = lattice.rank();
    if rank > 0 {
        let coeffs = [1i64, -1, 2, -2];
        for _ in 0..bounds.sum_samples {
            let mut acc = ring.zero();
            for _ in 0..3 {
                let row = &lattice.basis()[rng.gen_range(0..rank)];
                let c = coeffs[rng.gen_range(0..coeffs.len())];
                let elem = ring.from_coordinates(row)?;
                acc = ring.add(&acc, &ring.scale(&elem, &int(c)));
            }
            if !acc.is_zero() {
                out.push(acc);
            }
        }
    }
    Ok(out)
}

/// Ideal property and `Fil^p * Fil^q <= Fil^{p+q}` for the gamma filtration.
pub fn check_gamma_ring_axioms(scheme: &SchemeModel, bounds: &CheckBounds) -> Result<CheckReport> {
    let id = "gamma-ring-axioms";
    let dim = scheme.dimension;
    let params = bounds.params(dim);
    let ring = scheme.model.ring();
    let filt = scheme.gamma_filtration(dim + 1)?;
    let basis = crate::filtration::basis_elements(&scheme.model)?;
    let q_cap = bounds.q_cap(dim);
    for q in 1..=q_cap {
        for row in filt.level(q as i64).basis() {
            let x = ring.from_coordinates(row)?;
            // Multiplication by any ring basis element stays in the level.
            for b in &basis {
                let prod = ring.mul(&x, b);
                if !filt.member(&scheme.model, &prod, q as i64)? {
                    let w = witness_for(
                        scheme,
                        &prod,
                        q,
                        format!("ideal property fails at level {q}"),
                    );
                    return Ok(CheckReport::fail(id, &scheme.name, params, w));
                }
            }
        }
    }
    for p in 1..=q_cap {
        for q in p..=q_cap {
            if p + q > dim + 1 {
                continue;
            }
            for row_p in filt.level(p as i64).basis() {
                let x = ring.from_coordinates(row_p)?;
                for row_q in filt.level(q as i64).basis() {
                    let y = ring.from_coordinates(row_q)?;
                    let prod = ring.mul(&x, &y);
                    if !filt.member(&scheme.model, &prod, (p + q) as i64)? {
                        let w = witness_for(
                            scheme,
                            &prod,
                            p + q,
                            format!("product of levels {p} and {q} misses level {}", p + q),
                        );
                        return Ok(CheckReport::fail(id, &scheme.name, params, w));
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass(id, &scheme.name, params))
}

/// Products of catalogued cycle classes land in the summed level, and the
/// codimension-one case holds for arbitrary sampled elements.
pub fn check_top_multiplicativity(
    scheme: &SchemeModel,
    bounds: &CheckBounds,
) -> Result<CheckReport> {
    let id = "top-multiplicativity";
    let dim = scheme.dimension;
    let params = bounds.params(dim);
    let ring = scheme.model.ring();
    let filt = scheme.top_filtration(dim + 1)?;
    for a in &scheme.cycles {
        if a.codim == 0 {
            continue;
        }
        for b in &scheme.cycles {
            if b.codim == 0 {
                continue;
            }
            let prod = ring.mul(&a.class, &b.class);
            let level = a.codim + b.codim;
            if !filt.member(&scheme.model, &prod, level as i64)? {
                let w = witness_for(
                    scheme,
                    &prod,
                    level,
                    format!(
                        "product of `{}` (codim {}) and `{}` (codim {}) misses level {level}",
                        a.label, a.codim, b.label, b.codim
                    ),
                );
                return Ok(CheckReport::fail(id, &scheme.name, params, w));
            }
        }
    }
    // Unconditional codimension-one case on sampled elements.
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let fil1 = level_elements(scheme, &filt, 1, bounds, &mut rng)?;
    for q in 1..=bounds.q_cap(dim) {
        for row in filt.level(q as i64).basis() {
            let y = ring.from_coordinates(row)?;
            for x in &fil1 {
                let prod = ring.mul(x, &y);
                if !filt.member(&scheme.model, &prod, q as i64 + 1)? {
                    let w = witness_for(
                        scheme,
                        &prod,
                        q + 1,
                        format!("level-1 times level-{q} product misses level {}", q + 1),
                    );
                    return Ok(CheckReport::fail(id, &scheme.name, params, w));
                }
            }
        }
    }
    Ok(CheckReport::pass(id, &scheme.name, params))
}

/// `psi_n(x) - n^q x` falls one level deeper, for every level element.
pub fn check_adams_congruence(scheme: &SchemeModel, bounds: &CheckBounds) -> Result<CheckReport> {
    let id = "adams-coniveau-congruence";
    let dim = scheme.dimension;
    let params = bounds.params(dim);
    let ring = scheme.model.ring();
    let filt = scheme.top_filtration(dim + 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for q in 1..=bounds.q_cap(dim) {
        let elements = level_elements(scheme, &filt, q, bounds, &mut rng)?;
        for x in &elements {
            for n in 1..=bounds.max_n {
                let psi = adams_op(&scheme.model, x, n)?;
                let scale = Int::from(n).pow(q);
                let diff = ring.sub(&psi, &ring.scale(x, &scale));
                if !filt.member(&scheme.model, &diff, q as i64 + 1)? {
                    let w = witness_for(
                        scheme,
                        x,
                        q + 1,
                        format!("psi_{n}(x) - {n}^{q} x misses level {}", q + 1),
                    );
                    return Ok(CheckReport::fail(id, &scheme.name, params, w));
                }
            }
        }
    }
    Ok(CheckReport::pass(id, &scheme.name, params))
}

/// `psi_n(x) + (-1)^n n lambda^n(x)` falls one level deeper.
pub fn check_adams_nlambda(scheme: &SchemeModel, bounds: &CheckBounds) -> Result<CheckReport> {
    let id = "adams-nlambda-congruence";
    let dim = scheme.dimension;
    let params = bounds.params(dim);
    let ring = scheme.model.ring();
    let filt = scheme.top_filtration(dim + 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for q in 1..=bounds.q_cap(dim) {
        let elements = level_elements(scheme, &filt, q, bounds, &mut rng)?;
        for x in &elements {
            for n in 1..=bounds.max_n {
                let psi = adams_op(&scheme.model, x, n)?;
                let lam = scheme.model.lambda_op(x, n)?;
                let sign = int(if n % 2 == 0 { 1 } else { -1 }) * int(n as i64);
                let combo = ring.add(&psi, &ring.scale(&lam, &sign));
                if !filt.member(&scheme.model, &combo, q as i64 + 1)? {
                    let w = witness_for(
                        scheme,
                        x,
                        q + 1,
                        format!("psi_{n}(x) + (-1)^{n} {n} lambda^{n}(x) misses level {}", q + 1),
                    );
                    return Ok(CheckReport::fail(id, &scheme.name, params, w));
                }
            }
        }
    }
    Ok(CheckReport::pass(id, &scheme.name, params))
}

/// `gamma^q(x) - (-1)^{q-1} (q-1)! x` falls one level deeper.
pub fn check_gamma_eigenvalue(scheme: &SchemeModel, bounds: &CheckBounds) -> Result<CheckReport> {
    let id = "gamma-eigenvalue";
    let dim = scheme.dimension;
    let params = bounds.params(dim);
    let ring = scheme.model.ring();
    let filt = scheme.top_filtration(dim + 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for q in 1..=bounds.q_cap(dim) {
        let elements = level_elements(scheme, &filt, q, bounds, &mut rng)?;
        for x in &elements {
            let g = gamma_op(&scheme.model, x, q)?;
            let sign = if (q - 1) % 2 == 0 { 1 } else { -1 };
            let scale = factorial(q as u64 - 1) * int(sign);
            let diff = ring.sub(&g, &ring.scale(x, &scale));
            if !filt.member(&scheme.model, &diff, q as i64 + 1)? {
                let w = witness_for(
                    scheme,
                    x,
                    q + 1,
                    format!(
                        "gamma^{q}(x) - (-1)^{} ({}!) x misses level {}",
                        q - 1,
                        q - 1,
                        q + 1
                    ),
                );
                return Ok(CheckReport::fail(id, &scheme.name, params, w));
            }
        }
    }
    Ok(CheckReport::pass(id, &scheme.name, params))
}

/// The factorial multiple of the coniveau level is contained in the gamma
/// level: `(d-1)! (d-2)! .. (q-1)! Fil^q_top <= Fil^q_gamma`.
pub fn check_torsion_bound(scheme: &SchemeModel) -> Result<CheckReport> {
    let id = "factorial-torsion-bound";
    let dim = scheme.dimension;
    let params = format!("max_q={dim}");
    let ring = scheme.model.ring();
    let gamma = scheme.gamma_filtration(dim + 1)?;
    let top = scheme.top_filtration(dim + 1)?;
    for q in 1..=dim {
        let factor = torsion_factor(dim, q);
        for row in top.level(q as i64).basis() {
            let x = ring.from_coordinates(row)?;
            let scaled = ring.scale(&x, &factor);
            if !gamma.member(&scheme.model, &scaled, q as i64)? {
                let w = witness_for(
                    scheme,
                    &x,
                    q,
                    format!("{factor} * x misses gamma level {q}"),
                );
                return Ok(CheckReport::fail(id, &scheme.name, params, w));
            }
        }
    }
    Ok(CheckReport::pass(id, &scheme.name, params))
}

/// `(d-1)! (d-2)! ... (q-1)!`.
pub fn torsion_factor(dimension: u32, q: u32) -> Int {
    let mut acc = Int::one();
    let mut j = q as i64 - 1;
    while j <= dimension as i64 - 1 {
        if j >= 0 {
            acc *= factorial(j as u64);
        }
        j += 1;
    }
    acc
}

/// Graded ranks agree over the rationals and the graded comparison map is
/// surjective after factorial scaling.
pub fn check_gr_rank_iso(scheme: &SchemeModel) -> Result<CheckReport> {
    let id = "graded-rank-isomorphism";
    let dim = scheme.dimension;
    let params = format!("max_q={}", dim + 1);
    let ring = scheme.model.ring();
    let gamma = scheme.gamma_filtration(dim + 1)?;
    let top = scheme.top_filtration(dim + 1)?;
    for q in 0..=dim + 1 {
        let rg = gamma.graded(q)?.free_rank;
        let rt = top.graded(q)?.free_rank;
        if rg != rt {
            let w = Witness {
                expression: "0".to_string(),
                expected_level: q,
                detail: format!("graded ranks differ at q = {q}: gamma {rg}, top {rt}"),
            };
            return Ok(CheckReport::fail(id, &scheme.name, params, w));
        }
    }
    // Surjectivity after scaling: the factorial multiple of every coniveau
    // basis element lies in Fil^q_gamma + Fil^{q+1}_top.
    for q in 1..=dim {
        let factor = torsion_factor(dim, q);
        let target = gamma.level(q as i64).sum(top.level(q as i64 + 1))?;
        for row in top.level(q as i64).basis() {
            let x = ring.from_coordinates(row)?;
            let scaled = ring.coordinates(&ring.scale(&x, &factor))?;
            if !target.contains(&scaled)? {
                let w = witness_for(
                    scheme,
                    &x,
                    q,
                    format!("{factor} * x misses gamma level {q} modulo deeper coniveau"),
                );
                return Ok(CheckReport::fail(id, &scheme.name, params, w));
            }
        }
    }
    Ok(CheckReport::pass(id, &scheme.name, params))
}

/// Both filtrations are stable under lambda and gamma operations, and
/// `gamma^n` with `n > q` falls one level deeper.
pub fn check_lambda_ideal(scheme: &SchemeModel, bounds: &CheckBounds) -> Result<CheckReport> {
    let id = "lambda-ideal";
    let dim = scheme.dimension;
    let params = bounds.params(dim);
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let gamma = scheme.gamma_filtration(dim + 1)?;
    let top = scheme.top_filtration(dim + 1)?;
    for filt in [&gamma, &top] {
        let name = filt.kind.label();
        for q in 1..=bounds.q_cap(dim) {
            let elements = level_elements(scheme, filt, q, bounds, &mut rng)?;
            for x in &elements {
                for n in 1..=bounds.max_n {
                    let lam = scheme.model.lambda_op(x, n)?;
                    if !filt.member(&scheme.model, &lam, q as i64)? {
                        let w = witness_for(
                            scheme,
                            x,
                            q,
                            format!("lambda^{n}(x) leaves {name} level {q}"),
                        );
                        return Ok(CheckReport::fail(id, &scheme.name, params, w));
                    }
                    let gam = gamma_op(&scheme.model, x, n)?;
                    if !filt.member(&scheme.model, &gam, q as i64)? {
                        let w = witness_for(
                            scheme,
                            x,
                            q,
                            format!("gamma^{n}(x) leaves {name} level {q}"),
                        );
                        return Ok(CheckReport::fail(id, &scheme.name, params, w));
                    }
                    if n > q && !filt.member(&scheme.model, &gam, q as i64 + 1)? {
                        let w = witness_for(
                            scheme,
                            x,
                            q + 1,
                            format!("gamma^{n}(x) with n > {q} misses {name} level {}", q + 1),
                        );
                        return Ok(CheckReport::fail(id, &scheme.name, params, w));
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass(id, &scheme.name, params))
}

/// One instance of the universal congruence
/// `lambda^n(N, x) + (-1)^n n^{q+d-1} x in Fil^{q+1}_gamma` in the
/// weight-truncated universal ring.
pub fn check_universal_congruence(
    d: u32,
    q: u32,
    n: u32,
    truncation: Option<u32>,
) -> Result<CheckReport> {
    let id = "universal-divided-congruence";
    if d == 0 && q == 0 {
        return Err(Error::Input(
            "the universal congruence needs d + q >= 1".into(),
        ));
    }
    if n < 1 {
        return Err(Error::Input("the universal congruence needs n >= 1".into()));
    }
    let t_w = truncation.unwrap_or(q + d + 2);
    let model_name = format!("universal(d={d})");
    let params = format!("q={q} n={n} truncation={t_w}");
    let universal = universal_divided_model(d, t_w, n.max(4))?;
    let ring = universal.ring();
    let n_class = if d > 0 {
        universal.generator_element(0)
    } else {
        ring.zero()
    };
    let ctx = DividedContext::new(&universal, n_class, d, None)?;
    // Reliable weight after dividing by the weight-d class.
    let reliable = t_w.saturating_sub(d);

    let elements = universal_test_elements(&universal, d, q, t_w)?;
    let mut inconclusive = false;
    let scale = int(if n % 2 == 0 { 1 } else { -1 }) * Int::from(n).pow(q + d - 1);
    for x in &elements {
        let lam = divided_lambda(&universal, &ctx, x, n)?;
        let combo = ring.add(&lam, &ring.scale(x, &scale));
        // Monomials of weight <= reliable are trustworthy; any such monomial
        // of weight <= q breaks the congruence.
        let weights = ring.weights();
        let mut min_weight: Option<u64> = None;
        for (m, _) in combo.poly().terms() {
            let w = m.weight(weights);
            min_weight = Some(min_weight.map_or(w, |b: u64| b.min(w)));
        }
        if let Some(w) = min_weight {
            if w <= q as u64 && w <= reliable as u64 {
                let witness = Witness {
                    expression: render_polynomial(x.poly(), ring),
                    expected_level: q + 1,
                    detail: format!(
                        "lambda^{n}(N, x) + (-1)^{n} {n}^{} x has a monomial of weight {w}",
                        q + d - 1
                    ),
                };
                return Ok(CheckReport::fail(id, &model_name, params, witness));
            }
        }
        if reliable < q {
            inconclusive = true;
        }
    }
    let mut report = CheckReport::pass(id, &model_name, params);
    if inconclusive {
        report.status = CheckStatus::Inconclusive;
    }
    Ok(report)
}

/// Test elements of gamma-weight at least `q`: the pure monomials of weight
/// exactly `q` in the symbols of x, a mixed monomial when N-symbols exist,
/// and short signed sums.
fn universal_test_elements(
    universal: &LambdaRingModel,
    d: u32,
    q: u32,
    t_w: u32,
) -> Result<Vec<RingElement>> {
    let ring = universal.ring();
    let weights = ring.weights();
    let mut out = Vec::new();
    if q == 0 {
        let x1 = universal.generator_element(universal.generators().len() - 1);
        out.push(ring.one());
        out.push(ring.add(&x1, &ring.one()));
        return Ok(out);
    }
    // Monomials of weight exactly q over all ring variables (x-symbols and,
    // when d > 0, gamma symbols of N - d).
    let basis = ring.basis()?;
    let mut monomials: Vec<RingElement> = Vec::new();
    for m in basis {
        if m.weight(weights) == q as u64 && !m.is_unit() {
            monomials.push(ring.element(crate::poly::Polynomial::from_monomial(
                m.clone(),
                int(1),
            ))?);
        }
    }
    let _ = (d, t_w);
    out.extend(monomials.iter().cloned());
    if monomials.len() >= 2 {
        out.push(ring.add(&monomials[0], &monomials[1]));
        out.push(ring.sub(&monomials[0], &monomials[1]));
    }
    if let (Some(a), Some(b)) = (monomials.first(), monomials.get(2)) {
        out.push(ring.add(&ring.scale(a, &int(2)), b));
    }
    Ok(out)
}

/// The pushforward identities along a hyperplane embedding: the lambda
/// version exactly, and the divided Adams version for whichever denominator
/// variant satisfies it (exactly one must).
pub fn check_divided_pushforward(n: u32, bounds: &CheckBounds) -> Result<CheckReport> {
    let id = "divided-pushforward";
    let emb = hyperplane_embedding(n)?;
    let model_name = format!("{} -> {}", emb.source.name, emb.target.name);
    let params = format!("max_n={}", bounds.max_n);
    let source = &emb.source.model;
    let target = &emb.target.model;
    let ctx = DividedContext::new(
        source,
        emb.conormal.clone(),
        emb.codim,
        Some(emb.source.dimension),
    )?;
    let source_basis = crate::filtration::basis_elements(source)?;
    // Lambda version: lambda^k(i_* y) = i_* lambda^k(N, y).
    for y in &source_basis {
        let pushed = emb.push(y)?;
        for k in 1..=bounds.max_n {
            let lhs = target.lambda_op(&pushed, k)?;
            let divided = divided_lambda(source, &ctx, y, k)?;
            let rhs = emb.push(&divided)?;
            if lhs != rhs {
                let w = Witness {
                    expression: render_polynomial(y.poly(), source.ring()),
                    expected_level: k,
                    detail: format!("lambda^{k}(i_* y) != i_* lambda^{k}(N, y)"),
                };
                return Ok(CheckReport::fail(id, &model_name, params, w));
            }
        }
    }
    // Adams version per denominator variant.
    let mut satisfied: Vec<PsiDenominator> = Vec::new();
    for variant in PsiDenominator::ALL {
        let mut holds = true;
        'outer: for y in &source_basis {
            let pushed = emb.push(y)?;
            for k in 1..=bounds.max_n {
                let lhs = adams_op(target, &pushed, k)?;
                let divided = divided_adams_with(source, &ctx, y, k, variant)?;
                let rhs = emb.push(&divided)?;
                if lhs != rhs {
                    holds = false;
                    break 'outer;
                }
            }
        }
        if holds {
            satisfied.push(variant);
        }
    }
    let labels: Vec<&str> = satisfied.iter().map(|v| v.label()).collect();
    let params = format!("{params} psi_variant={}", labels.join(","));
    if satisfied.len() == 1 {
        Ok(CheckReport::pass(id, &model_name, params))
    } else {
        let w = Witness {
            expression: "1".to_string(),
            expected_level: 0,
            detail: format!(
                "expected exactly one denominator variant to satisfy the Adams identity, found {}",
                labels.len()
            ),
        };
        Ok(CheckReport::fail(id, &model_name, params, w))
    }
}

/// Selection of checks runnable against one scheme model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    GammaAxioms,
    TopMultiplicativity,
    AdamsCongruence,
    AdamsNLambda,
    GammaEigenvalue,
    TorsionBound,
    GrRankIso,
    LambdaIdeal,
    DividedPushforward,
}

impl Suite {
    pub fn from_name(name: &str) -> Result<Suite> {
        Ok(match name {
            "all" => Suite::All,
            "gamma-axioms" => Suite::GammaAxioms,
            "multiplicativity" => Suite::TopMultiplicativity,
            "adams" => Suite::AdamsCongruence,
            "adams-nlambda" => Suite::AdamsNLambda,
            "gamma-eigenvalue" => Suite::GammaEigenvalue,
            "torsion" => Suite::TorsionBound,
            "gr-rank" => Suite::GrRankIso,
            "lambda-ideal" => Suite::LambdaIdeal,
            "pushforward" => Suite::DividedPushforward,
            other => {
                return Err(Error::Input(format!(
                    "unknown suite `{other}`; expected one of all, gamma-axioms, multiplicativity, \
                     adams, adams-nlambda, gamma-eigenvalue, torsion, gr-rank, lambda-ideal, \
                     pushforward, universal"
                )))
            }
        })
    }
}

/// Run the selected checks against a scheme model. Reports come back sorted
/// by check id.
pub fn run_suite(
    scheme: &SchemeModel,
    suite: Suite,
    bounds: &CheckBounds,
) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::GammaAxioms {
        reports.push(check_gamma_ring_axioms(scheme, bounds)?);
    }
    if all || suite == Suite::TopMultiplicativity {
        reports.push(check_top_multiplicativity(scheme, bounds)?);
    }
    if all || suite == Suite::AdamsCongruence {
        reports.push(check_adams_congruence(scheme, bounds)?);
    }
    if all || suite == Suite::AdamsNLambda {
        reports.push(check_adams_nlambda(scheme, bounds)?);
    }
    if all || suite == Suite::GammaEigenvalue {
        reports.push(check_gamma_eigenvalue(scheme, bounds)?);
    }
    if all || suite == Suite::TorsionBound {
        reports.push(check_torsion_bound(scheme)?);
    }
    if all || suite == Suite::GrRankIso {
        reports.push(check_gr_rank_iso(scheme)?);
    }
    if all || suite == Suite::LambdaIdeal {
        reports.push(check_lambda_ideal(scheme, bounds)?);
    }
    if suite == Suite::DividedPushforward
        || (all && matches!(&scheme.factor_dims, Some(d) if d.len() == 1 && d[0] >= 1))
    {
        match &scheme.factor_dims {
            Some(dims) if dims.len() == 1 && dims[0] >= 1 => {
                reports.push(check_divided_pushforward(dims[0], bounds)?);
            }
            _ => {
                return Err(Error::Input(
                    "the pushforward check needs a single projective-space model".into(),
                ))
            }
        }
    }
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(reports)
}

/// Run the universal congruence over a parameter grid.
pub fn run_universal_suite(
    max_d: u32,
    max_q: u32,
    max_n: u32,
    truncation: Option<u32>,
) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for d in 0..=max_d {
        for q in 0..=max_q {
            if d + q == 0 {
                continue;
            }
            for n in 1..=max_n {
                reports.push(check_universal_congruence(d, q, n, truncation)?);
            }
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin, projective_space, CycleClass};

    #[test]
    fn projective_line_adams_congruence() {
        let scheme = projective_space(1).unwrap();
        let bounds = CheckBounds {
            max_n: 3,
            ..CheckBounds::default()
        };
        let report = check_adams_congruence(&scheme, &bounds).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
    }

    #[test]
    fn plane_suite_passes() {
        let scheme = builtin("P2").unwrap();
        let reports = run_suite(&scheme, Suite::All, &CheckBounds::default()).unwrap();
        assert!(reports.len() >= 9);
        for r in &reports {
            assert_eq!(r.status, CheckStatus::Pass, "{}: {:?}", r.check_id, r.witness);
        }
        // Determinism: identical inputs yield identical reports.
        let again = run_suite(&scheme, Suite::All, &CheckBounds::default()).unwrap();
        for (a, b) in reports.iter().zip(&again) {
            assert_eq!(a.check_id, b.check_id);
            assert_eq!(a.status, b.status);
            assert_eq!(a.params, b.params);
            assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn universal_congruence_small() {
        // d = 1, q = 1, n = 2 at the default truncation passes decisively.
        let report = check_universal_congruence(1, 1, 2, None).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        // n = 1 is the trivial identity lambda^1(N,x) = x.
        let report = check_universal_congruence(1, 1, 1, None).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
    }

    #[test]
    fn universal_congruence_inconclusive_when_truncated_too_low() {
        // truncation below q + d leaves the membership undecidable.
        let report = check_universal_congruence(2, 2, 2, Some(3)).unwrap();
        assert_eq!(report.status, CheckStatus::Inconclusive);
    }

    #[test]
    fn doctored_cycle_class_fails_with_witness() {
        // Declaring h - 1 as a codimension-2 cycle poisons the coniveau
        // filtration; the Adams congruence must fail and the witness must
        // reproduce through the membership test.
        let mut scheme = projective_space(2).unwrap();
        let ring = scheme.model.ring();
        let h = ring.variable(0);
        let bogus = ring.sub(&h, &ring.one());
        scheme.cycles.push(CycleClass {
            codim: 2,
            label: "bogus".into(),
            class: bogus,
        });
        let report = check_adams_congruence(&scheme, &CheckBounds::default()).unwrap();
        assert_eq!(report.status, CheckStatus::Fail);
        let witness = report.witness.expect("failing check carries a witness");
        let parsed = crate::expr::parse_polynomial(&witness.expression, scheme.model.ring()).unwrap();
        let elem = scheme.model.ring().element(parsed).unwrap();
        assert!(!elem.is_zero());
    }

    #[test]
    fn pushforward_identities_on_the_plane() {
        let report = check_divided_pushforward(2, &CheckBounds::default()).unwrap();
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.witness);
        assert!(report.params.contains("lambda(x*lambda_-1(N))"), "{}", report.params);
    }
}
