//! Oracle-backed spot checks: every expected value here is produced by an
//! independent computation route and frozen against the implementation.

mod common;

use coniveau::catalog::{builtin, hyperplane_embedding, projective_space};
use coniveau::lambda::{GeneratorSpec, LambdaRingModel};
use coniveau::ops::{adams_op, divided_lambda, gamma_op, gamma_series, DividedContext};
use coniveau::universal::{universal_compose_poly, universal_product_poly};
use coniveau::{binomial, int, Polynomial, QuotientRing, TruncatedSeries};
use common::{elementary, long_division_remainder, split_product_series};

#[test]
fn normal_form_matches_long_division() {
    // Z[h]/((h-1)^3); oracle: long division by h^3 - 3h^2 + 3h - 1.
    let scheme = projective_space(2).unwrap();
    let ring = scheme.model.ring();
    let divisor = [-1i64, 3, -3, 1];
    let samples: Vec<Vec<i64>> = vec![
        vec![0, 0, 0, 1],             // h^3
        vec![5, -2, 0, 0, 7],         // 7h^4 - 2h + 5
        vec![1, -3, 3, -1],           // (h-1)^3 -> 0
        vec![0, 0, 0, 0, 0, 1],       // h^5
    ];
    for coeffs in samples {
        let mut p = Polynomial::zero(1);
        for (k, &c) in coeffs.iter().enumerate() {
            p = p.add(&Polynomial::variable(1, 0).pow(k as u32).scale(&int(c)));
        }
        let nf = ring.element(p).unwrap();
        let rem = long_division_remainder(coeffs.clone(), &divisor);
        let mut expected = Polynomial::zero(1);
        for (k, &c) in rem.iter().enumerate() {
            expected = expected.add(&Polynomial::variable(1, 0).pow(k as u32).scale(&int(c)));
        }
        assert_eq!(nf.poly(), &expected, "normal form of {coeffs:?}");
    }
}

#[test]
fn gamma_substitution_matches_binomial_formula() {
    // [t^n] a(t/(1-t)) = sum_k C(n-1, k-1) a_k, checked on a generic series.
    let ring = QuotientRing::new(vec!["a".into(), "b".into()], Vec::new()).unwrap();
    let mut series = TruncatedSeries::one(6, &ring);
    series.set_coefficient(1, ring.variable(0));
    series.set_coefficient(2, ring.variable(1));
    series.set_coefficient(3, ring.mul(&ring.variable(0), &ring.variable(1)));
    let image = series.substitute_gamma(&ring).unwrap();
    for n in 1..=6usize {
        let mut expected = ring.zero();
        for k in 1..=n {
            let c = binomial(n as u64 - 1, k as u64 - 1);
            expected = ring.add(&expected, &ring.scale(series.coefficient(k), &c));
        }
        assert_eq!(image.coefficient(n), &expected, "coefficient {n}");
    }
}

#[test]
fn universal_product_agrees_with_split_expansion() {
    // Evaluate P_n at e_i(xi), e_i(eta) for three split variables per side
    // and compare with the coefficient of t^n in prod (1 + xi_i eta_j t).
    let arity = 6;
    let mut factors = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            factors.push(Polynomial::variable(arity, i).mul(&Polynomial::variable(arity, 3 + j)));
        }
    }
    for n in 0..=4u32 {
        let series = split_product_series(&factors, n as usize, arity);
        let poly = universal_product_poly(n).unwrap().expr;
        let mut images = Vec::new();
        for i in 1..=n as usize {
            images.push(elementary(arity, 0, 3, i));
        }
        for i in 1..=n as usize {
            images.push(elementary(arity, 3, 3, i));
        }
        let evaluated = poly.substitute(&images);
        assert_eq!(evaluated, series[n as usize], "product polynomial at n = {n}");
    }
}

#[test]
fn universal_compose_agrees_with_split_expansion() {
    // lambda^n(lambda^m(x)) on a rank-3 split x: the inner lambda^m is the
    // sum of the C(3, m) products over m-subsets, each itself a line.
    let arity = 3;
    for m in 1..=4u32 {
        let mut subset_products = Vec::new();
        let idx = [0, 1, 2];
        // enumerate m-subsets of {0,1,2}
        for mask in 1u32..8 {
            if mask.count_ones() == m {
                let mut f = Polynomial::one(arity);
                for &i in &idx {
                    if mask & (1 << i) != 0 {
                        f = f.mul(&Polynomial::variable(arity, i));
                    }
                }
                subset_products.push(f);
            }
        }
        for n in 1..=4u32 {
            let series = split_product_series(&subset_products, n as usize, arity);
            let poly = universal_compose_poly(n, m).unwrap().expr;
            let images: Vec<Polynomial> = (1..=(n * m) as usize)
                .map(|i| elementary(arity, 0, 3, i))
                .collect();
            let evaluated = poly.substitute(&images);
            assert_eq!(
                evaluated, series[n as usize],
                "composition polynomial at n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn gamma_series_reconstruction() {
    // gamma_t(x) from gamma_op coefficients equals the substituted series.
    let scheme = builtin("P3").unwrap();
    let ring = scheme.model.ring();
    let h = ring.variable(0);
    let x = ring.sub(&ring.mul(&h, &h), &ring.constant(int(1)));
    let series = gamma_series(&scheme.model, &x, 4).unwrap();
    for n in 0..=4u32 {
        assert_eq!(
            series.coefficient(n as usize),
            &gamma_op(&scheme.model, &x, n).unwrap()
        );
    }
}

#[test]
fn divided_lambda_defining_relation_in_catalog_model() {
    // lambda^n(N, y) * lambda_-1(N) = lambda^n(y * lambda_-1(N)) holds after
    // specialization into the hyperplane source ring.
    let emb = hyperplane_embedding(3).unwrap();
    let source = &emb.source.model;
    let ring = source.ring();
    let ctx = DividedContext::new(source, emb.conormal.clone(), 1, Some(emb.source.dimension))
        .unwrap();
    let h = ring.variable(0);
    for y in [ring.one(), h.clone(), ring.sub(&h, &ring.one())] {
        for n in 1..=4u32 {
            let q = divided_lambda(source, &ctx, &y, n).unwrap();
            let prod = ring.mul(&y, ctx.lambda_minus_one());
            let lhs = source.lambda_op(&prod, n).unwrap();
            let rhs = ring.mul(&q, ctx.lambda_minus_one());
            assert_eq!(lhs, rhs, "defining relation at n = {n}");
        }
    }
}

#[test]
fn adams_on_shifted_line_classes() {
    // psi_n(1 + (h-1)) on P^4 has the closed form h^n; exercise larger n
    // through both the free-lambda and split paths.
    let scheme = projective_space(4).unwrap();
    let ring = scheme.model.ring();
    let h = ring.variable(0);
    for n in 1..=6u32 {
        assert_eq!(adams_op(&scheme.model, &h, n).unwrap(), ring.pow(&h, n));
    }
    // In the free model with one rank-2 generator the Newton recursion gives
    // psi_2(g) = g^2 - 2 lambda^2(g) with independent lambda symbols.
    let free = LambdaRingModel::free(vec![GeneratorSpec::free_lambda("g", 2)], None, 6).unwrap();
    let g = free.generator_element(0);
    let psi2 = adams_op(&free, &g, 2).unwrap();
    let l2 = free.lambda_op(&g, 2).unwrap();
    let expected = free.ring().sub(&free.ring().mul(&g, &g), &free.ring().scale(&l2, &int(2)));
    assert_eq!(psi2, expected);
}
