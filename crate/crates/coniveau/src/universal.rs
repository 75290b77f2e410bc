//! Universal polynomials for the lambda-ring axioms.
//!
//! `universal_product_poly(n)` is the integer polynomial P_n with
//! `lambda^n(x*y) = P_n(lambda^1 x .. lambda^n x; lambda^1 y .. lambda^n y)`,
//! and `universal_compose_poly(n, m)` expresses `lambda^n(lambda^m(x))` in
//! `lambda^1(x) .. lambda^{nm}(x)`. Both are the unique symmetric-function
//! identities obtained by splitting x and y into formal line factors.
//!
//! The expansion is computed in the power-sum basis, where the product
//! alphabet and plethysm act by `p_k -> p_k(X) p_k(Y)` and `p_j -> p_{jk}`,
//! and converted back to the elementary basis with Newton's identities.
//! Intermediate coefficients are rational; the results are integral, which
//! is asserted.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::Int;

/// Which lambda-ring axiom a universal polynomial encodes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UniversalKind {
    /// `lambda^n(x*y)`; the expression has `2n` variables, the first `n`
    /// standing for `lambda^i(x)` and the rest for `lambda^i(y)`.
    Product { n: u32 },
    /// `lambda^n(lambda^m(x))`; the expression has `n*m` variables standing
    /// for `lambda^1(x) .. lambda^{nm}(x)`.
    Compose { n: u32, m: u32 },
}

#[derive(Clone, Debug)]
pub struct UniversalPolynomial {
    pub kind: UniversalKind,
    pub expr: Polynomial,
}

/// Largest supported total degree `n*m` for composition polynomials.
pub const COMPOSE_DEGREE_CAP: u64 = 32;
const EAGER_DEGREE_CAP: u64 = 18;

/// Sparse polynomial with rational coefficients, used only while working in
/// the power-sum basis.
#[derive(Clone, Debug)]
struct RatPoly {
    arity: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl RatPoly {
    fn zero(arity: usize) -> Self {
        RatPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    fn one(arity: usize) -> Self {
        let mut p = Self::zero(arity);
        p.terms.insert(Monomial::unit(arity), BigRational::one());
        p
    }

    fn insert(&mut self, m: Monomial, c: BigRational) {
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

    fn add_scaled(&mut self, other: &RatPoly, c: &BigRational) {
        for (m, k) in &other.terms {
            self.insert(m.clone(), k * c);
        }
    }

    fn add_scaled_int(&mut self, other: &Polynomial, c: &BigRational) {
        for (m, k) in other.terms() {
            self.insert(m.clone(), BigRational::from_integer(k.clone()) * c);
        }
    }

    fn mul(&self, other: &RatPoly) -> RatPoly {
        let mut out = RatPoly::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    fn scale(&self, c: &BigRational) -> RatPoly {
        let mut out = RatPoly::zero(self.arity);
        for (m, k) in &self.terms {
            out.insert(m.clone(), k * c);
        }
        out
    }

    /// Plethysm shift `p_j -> p_{j*k}` into a wider variable range.
    fn stretch(&self, k: u32, new_arity: usize) -> RatPoly {
        let mut out = RatPoly::zero(new_arity);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_arity];
            for (j, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let target = (j + 1) * k as usize - 1;
                    exps[target] += e;
                }
            }
            out.insert(Monomial::from_exponents(exps), c.clone());
        }
        out
    }

    fn into_int_poly(self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in self.terms {
            if !c.is_integer() {
                return Err(Error::Internal(
                    "universal polynomial has a non-integral coefficient".into(),
                ));
            }
            out.insert_term(m, c.to_integer());
        }
        Ok(out)
    }
}

/// `e_k` in the power-sum basis over `p_1..p_arity` (Newton's identities).
fn elementary_in_power_sums(k: u32, arity: usize) -> Vec<RatPoly> {
    // Returns e_0..e_k.
    let mut es: Vec<RatPoly> = vec![RatPoly::one(arity)];
    for j in 1..=k {
        let mut acc = RatPoly::zero(arity);
        for i in 1..=j {
            let p_i = RatPoly {
                arity,
                terms: BTreeMap::from([(
                    Monomial::variable(arity, i as usize - 1),
                    BigRational::one(),
                )]),
            };
            let sign = if (i - 1) % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            acc.add_scaled(&es[(j - i) as usize].mul(&p_i), &sign);
        }
        let inv_j = BigRational::new(Int::one(), Int::from(j));
        es.push(acc.scale(&inv_j));
    }
    es
}

/// `p_k` in the elementary basis over `e_1..e_arity`; entries above the
/// arity are zero, matching a split element of bounded rank.
fn power_sums_in_elementary(k: u32, arity: usize) -> Vec<Polynomial> {
    // Returns p_0 (unused, set to 0) and p_1..p_k.
    let e = |i: u32| -> Polynomial {
        if i == 0 {
            Polynomial::one(arity)
        } else if (i as usize) <= arity {
            Polynomial::variable(arity, i as usize - 1)
        } else {
            Polynomial::zero(arity)
        }
    };
    let mut ps: Vec<Polynomial> = vec![Polynomial::zero(arity)];
    for j in 1..=k {
        let mut acc = Polynomial::zero(arity);
        for i in 1..j {
            let term = e(i).mul(&ps[(j - i) as usize]);
            acc = if (i - 1) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        let lead = e(j).scale(&Int::from(j));
        acc = if (j - 1) % 2 == 0 { acc.add(&lead) } else { acc.sub(&lead) };
        ps.push(acc);
    }
    ps
}

/// The polynomial rule for `lambda^n` of a product.
pub fn universal_product_poly(n: u32) -> Result<UniversalPolynomial> {
    let expr = product_expr(n)?;
    Ok(UniversalPolynomial {
        kind: UniversalKind::Product { n },
        expr,
    })
}

/// The polynomial rule for `lambda^n(lambda^m(x))`.
pub fn universal_compose_poly(n: u32, m: u32) -> Result<UniversalPolynomial> {
    if n == 0 || m == 0 {
        return Err(Error::Input("composition indices must be positive".into()));
    }
    let expr = compose_expr(n, m)?;
    Ok(UniversalPolynomial {
        kind: UniversalKind::Compose { n, m },
        expr,
    })
}

fn product_expr(n: u32) -> Result<Polynomial> {
    let arity = 2 * n as usize;
    if n == 0 {
        return Ok(Polynomial::one(0));
    }
    let half = n as usize;
    let es = elementary_in_power_sums(n, half);
    let ps = power_sums_in_elementary(n, half);
    let mut acc = RatPoly::zero(arity);
    for (mono, coeff) in &es[n as usize].terms {
        // p_lambda over the product alphabet: p_k -> p_k(X) p_k(Y)
        let mut term = Polynomial::one(arity);
        for (j, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let px = ps[j + 1].shift_variables(arity, 0);
            let py = ps[j + 1].shift_variables(arity, half);
            term = term.mul(&px.mul(&py).pow(e));
        }
        acc.add_scaled_int(&term, coeff);
    }
    acc.into_int_poly()
}

fn compose_expr(n: u32, m: u32) -> Result<Polynomial> {
    let degree = n as u64 * m as u64;
    if degree > COMPOSE_DEGREE_CAP {
        return Err(Error::Input(format!(
            "composition degree {degree} exceeds the supported cap {COMPOSE_DEGREE_CAP}"
        )));
    }
    let arity = (n * m) as usize;
    if m == 1 {
        return Ok(Polynomial::variable(n as usize, n as usize - 1));
    }
    if n == 1 {
        return Ok(Polynomial::variable(arity, m as usize - 1));
    }
    let outer = elementary_in_power_sums(n, n as usize);
    let inner = elementary_in_power_sums(m, m as usize);
    // Plethysm in the power-sum basis: p_k[e_m] stretches every p_j to p_{jk}.
    let mut plethysm = RatPoly::zero(arity);
    for (mono, coeff) in &outer[n as usize].terms {
        let mut term = RatPoly::one(arity);
        for (j, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pk_of_em = inner[m as usize].stretch(j as u32 + 1, arity);
            for _ in 0..e {
                term = term.mul(&pk_of_em);
            }
        }
        plethysm.add_scaled(&term, coeff);
    }
    // Back to the elementary basis.
    let ps = power_sums_in_elementary((n * m) as u32, arity);
    let mut acc = RatPoly::zero(arity);
    for (mono, coeff) in &plethysm.terms {
        let mut term = Polynomial::one(arity);
        for (j, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            term = term.mul(&ps[j + 1].pow(e));
        }
        acc.add_scaled_int(&term, coeff);
    }
    acc.into_int_poly()
}

/// Memo table for universal polynomials. Entries are filled once at model
/// construction (single writer) and shared read-only afterwards; indices
/// beyond the precomputed caps are recomputed on the fly.
#[derive(Clone, Debug, Default)]
pub struct UniversalTable {
    product: Vec<Polynomial>,
    compose: BTreeMap<(u32, u32), Polynomial>,
}

impl UniversalTable {
    pub fn empty() -> Self {
        UniversalTable::default()
    }

    /// Precompute products to `product_cap` and compositions `(k, i)` with
    /// `k <= order_cap`, `i <= symbol_cap` and small total degree.
    pub fn with_caps(product_cap: u32, order_cap: u32, symbol_cap: u32) -> Result<Self> {
        let mut product = Vec::new();
        for n in 0..=product_cap {
            product.push(product_expr(n)?);
        }
        let mut compose = BTreeMap::new();
        for k in 2..=order_cap.max(1) {
            for i in 2..=symbol_cap.max(1) {
                if k as u64 * i as u64 <= EAGER_DEGREE_CAP {
                    compose.insert((k, i), compose_expr(k, i)?);
                }
            }
        }
        Ok(UniversalTable { product, compose })
    }

    pub fn product(&self, n: u32) -> Result<Cow<'_, Polynomial>> {
        match self.product.get(n as usize) {
            Some(p) => Ok(Cow::Borrowed(p)),
            None => Ok(Cow::Owned(product_expr(n)?)),
        }
    }

    pub fn compose(&self, n: u32, m: u32) -> Result<Cow<'_, Polynomial>> {
        if n == 1 || m == 1 {
            return Ok(Cow::Owned(compose_expr(n, m)?));
        }
        match self.compose.get(&(n, m)) {
            Some(p) => Ok(Cow::Borrowed(p)),
            None => Ok(Cow::Owned(compose_expr(n, m)?)),
        }
    }
}
