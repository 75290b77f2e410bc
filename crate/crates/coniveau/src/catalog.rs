//! Concrete scheme models: projective spaces, their products, and
//! hyperplane embeddings with catalogued pushforward data.
//!
//! The Grothendieck ring of projective n-space is presented as
//! `Z[h]/((h-1)^{n+1})` with `h` a split line class; `h` is invertible
//! because `h - 1` is nilpotent, and `h^{-1}` is stored as the normal form
//! of the finite geometric series rather than as an extra variable. The
//! codimension-q cycle class is `(1 - h^{-1})^q`, the class cut out by a
//! linear subspace. Products combine factor presentations and multiply
//! their cycle classes.
//!
//! Models can also be loaded from a declarative description; every
//! catalogued invariant (augmentations, nilpotency degree, projection
//! formula, conormal bounds) is checked at load time.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expr::parse_polynomial;
use crate::filtration::{basis_elements, module_closure, Filtration};
use crate::lambda::LambdaRingModel;
use crate::lattice::IntegerLattice;
use crate::poly::{Monomial, Polynomial};
use crate::ring::{QuotientRing, RewriteRule, RingElement};
use crate::{int, Int};

/// Highest supported projective dimension for a single factor.
pub const MAX_PROJECTIVE_DIM: u32 = 12;

/// A labelled class supported in a given codimension.
#[derive(Clone, Debug)]
pub struct CycleClass {
    pub codim: u32,
    pub label: String,
    pub class: RingElement,
}

/// A catalogued regular closed embedding with pushforward data.
#[derive(Clone, Debug)]
pub struct ClosedEmbedding {
    pub label: String,
    pub source: SchemeModel,
    pub target: SchemeModel,
    pub codim: u32,
    /// Image of each source basis monomial.
    pub pushforward: Vec<RingElement>,
    /// Image of each target ring variable, as a source element.
    pub pullback: Vec<RingElement>,
    /// Class of the conormal sheaf in the source, rank-bounded by `codim`.
    pub conormal: RingElement,
}

/// A lambda-ring model of a scheme with catalogued cycle classes.
#[derive(Clone, Debug)]
pub struct SchemeModel {
    pub name: String,
    pub dimension: u32,
    pub model: LambdaRingModel,
    pub cycles: Vec<CycleClass>,
    pub embeddings: Vec<ClosedEmbedding>,
    /// Dimensions of projective factors, when the model is a product of
    /// projective spaces with one line generator per factor; enables the
    /// closed-form filtration.
    pub factor_dims: Option<Vec<u32>>,
}

impl SchemeModel {
    pub fn gamma_filtration(&self, max_q: u32) -> Result<Filtration> {
        Filtration::gamma(&self.model, self.dimension, max_q)
    }

    pub fn top_filtration(&self, max_q: u32) -> Result<Filtration> {
        let pairs: Vec<(u32, RingElement)> = self
            .cycles
            .iter()
            .map(|c| (c.codim, c.class.clone()))
            .collect();
        Filtration::coniveau(&self.model, self.dimension, &pairs, max_q)
    }

    /// Closed form of the coniveau level for products of projective spaces:
    /// the span of all products of powers of `h_i - 1` of total degree at
    /// least `q`.
    pub fn known_top_lattice(&self, q: u32) -> Result<Option<IntegerLattice>> {
        let Some(dims) = &self.factor_dims else {
            return Ok(None);
        };
        let ring = self.model.ring();
        let rank = ring.basis()?.len();
        if q == 0 {
            return Ok(Some(IntegerLattice::full(rank)));
        }
        let classes: Vec<RingElement> = (0..dims.len())
            .map(|i| ring.sub(&ring.variable(i), &ring.one()))
            .collect();
        let mut gens: Vec<Vec<Int>> = Vec::new();
        let mut exps = vec![0u32; dims.len()];
        loop {
            let total: u32 = exps.iter().sum();
            if total >= q {
                let mut elem = ring.one();
                for (i, &e) in exps.iter().enumerate() {
                    elem = ring.mul(&elem, &ring.pow(&classes[i], e));
                }
                if !elem.is_zero() {
                    gens.push(ring.coordinates(&elem)?);
                }
            }
            let mut i = 0;
            loop {
                if i == dims.len() {
                    let lattice = IntegerLattice::from_generators(rank, gens)?;
                    return Ok(Some(lattice));
                }
                if exps[i] < dims[i] {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Check the catalogued invariants; called on loaded descriptions.
    pub fn validate(&self) -> Result<()> {
        let ring = self.model.ring();
        for cycle in &self.cycles {
            if cycle.codim > self.dimension {
                return Err(Error::Load(format!(
                    "cycle `{}` has codimension {} above the dimension {}",
                    cycle.label, cycle.codim, self.dimension
                )));
            }
            if cycle.class.is_zero() {
                return Err(Error::Load(format!("cycle `{}` is the zero class", cycle.label)));
            }
            if cycle.codim >= 1 && !self.model.augmentation(&cycle.class).is_zero() {
                return Err(Error::Load(format!(
                    "cycle `{}` of codimension {} has nonzero augmentation",
                    cycle.label, cycle.codim
                )));
            }
        }
        // The augmentation ideal is nilpotent of degree exactly the dimension.
        let degree = self.augmentation_nilpotency()?;
        if degree != self.dimension {
            return Err(Error::Load(format!(
                "augmentation ideal has nilpotency degree {degree}, expected the dimension {}",
                self.dimension
            )));
        }
        for emb in &self.embeddings {
            validate_embedding(emb)?;
        }
        let _ = ring;
        Ok(())
    }

    /// Largest k with (ker eps)^k nonzero.
    fn augmentation_nilpotency(&self) -> Result<u32> {
        let ring = self.model.ring();
        let rank = ring.basis()?.len();
        let eps_row: Vec<Int> = basis_elements(&self.model)?
            .iter()
            .map(|e| self.model.augmentation(e))
            .collect();
        let kernel_rows = crate::lattice::integer_kernel(&[eps_row], rank);
        let kernel: Vec<RingElement> = kernel_rows
            .iter()
            .map(|v| ring.from_coordinates(v))
            .collect::<Result<_>>()?;
        let basis_elems = basis_elements(&self.model)?;
        let mut power = IntegerLattice::from_generators(
            rank,
            kernel.iter().map(|e| ring.coordinates(e)).collect::<Result<_>>()?,
        )?;
        power = module_closure(&self.model, power, &basis_elems)?;
        let mut degree = 0;
        while !power.is_zero() {
            degree += 1;
            if degree > rank as u32 + 1 {
                return Err(Error::Internal("augmentation ideal fails to nilpotate".into()));
            }
            let mut next_gens: Vec<Vec<Int>> = Vec::new();
            for row in power.basis() {
                let elem = ring.from_coordinates(row)?;
                for k in &kernel {
                    let prod = ring.mul(&elem, k);
                    if !prod.is_zero() {
                        next_gens.push(ring.coordinates(&prod)?);
                    }
                }
            }
            let next = IntegerLattice::from_generators(rank, next_gens)?;
            power = module_closure(&self.model, next, &basis_elems)?;
        }
        Ok(degree)
    }
}

impl ClosedEmbedding {
    /// Additive pushforward along the embedding.
    pub fn push(&self, x: &RingElement) -> Result<RingElement> {
        let coords = self.source.model.ring().coordinates(x)?;
        let ring = self.target.model.ring();
        let mut acc = ring.zero();
        for (c, image) in coords.iter().zip(&self.pushforward) {
            if !c.is_zero() {
                acc = ring.add(&acc, &ring.scale(image, c));
            }
        }
        Ok(acc)
    }

    /// Ring pullback determined by the images of the target generators.
    pub fn pull(&self, s: &RingElement) -> Result<RingElement> {
        let images: Vec<Polynomial> = self.pullback.iter().map(|e| e.poly().clone()).collect();
        let substituted = s.poly().substitute(&images);
        self.source.model.ring().element(substituted)
    }
}

/// The inverse of a unit of the form `1 + nilpotent`, by the finite
/// geometric series.
pub fn unit_inverse(ring: &QuotientRing, x: &RingElement) -> Result<RingElement> {
    let u = ring.sub(&ring.one(), x);
    let mut acc = ring.one();
    let mut p = u.clone();
    let mut guard = 0usize;
    while !p.is_zero() {
        acc = ring.add(&acc, &p);
        p = ring.mul(&p, &u);
        guard += 1;
        if guard > 1_000 {
            return Err(Error::Input("element is not of the form 1 + nilpotent".into()));
        }
    }
    let check = ring.mul(x, &acc);
    if check != ring.one() {
        return Err(Error::Internal("geometric series failed to invert the unit".into()));
    }
    Ok(acc)
}

/// The model of projective n-space.
pub fn projective_space(n: u32) -> Result<SchemeModel> {
    if n > MAX_PROJECTIVE_DIM {
        return Err(Error::Input(format!(
            "projective dimension {n} exceeds the configured cap {MAX_PROJECTIVE_DIM}"
        )));
    }
    let ring = crate::ring::nilpotent_line_ring("h", n + 1)?;
    let model = LambdaRingModel::split_from_ring(ring)?;
    let ring = model.ring();
    let h = ring.variable(0);
    let h_inv = unit_inverse(ring, &h)?;
    let hyperplane = ring.sub(&ring.one(), &h_inv);
    let mut cycles = Vec::new();
    for q in 0..=n {
        let class = ring.pow(&hyperplane, q);
        let label = if q == 0 {
            "fundamental class".to_string()
        } else {
            format!("linear subspace of codim {q}")
        };
        cycles.push(CycleClass {
            codim: q,
            label,
            class,
        });
    }
    Ok(SchemeModel {
        name: format!("P{n}"),
        dimension: n,
        model,
        cycles,
        embeddings: Vec::new(),
        factor_dims: Some(vec![n]),
    })
}

/// The product of two models.
pub fn product_model(a: &SchemeModel, b: &SchemeModel) -> Result<SchemeModel> {
    product_of(&[a.clone(), b.clone()])
}

/// The product of a list of models; zero-dimensional factors are dropped.
pub fn product_of(factors: &[SchemeModel]) -> Result<SchemeModel> {
    let kept: Vec<&SchemeModel> = factors.iter().filter(|f| f.dimension > 0).collect();
    match kept.len() {
        0 => return projective_space(0),
        1 => return Ok(kept[0].clone()),
        _ => {}
    }
    // Combined variable list, renaming on collision.
    let mut names: Vec<String> = Vec::new();
    let mut offsets = Vec::new();
    let all_names: Vec<&String> = kept
        .iter()
        .flat_map(|f| f.model.ring().var_names().iter())
        .collect();
    let collide = all_names
        .iter()
        .enumerate()
        .any(|(i, n)| all_names[..i].contains(n));
    for (fi, f) in kept.iter().enumerate() {
        offsets.push(names.len());
        for v in f.model.ring().var_names() {
            let name = if collide { format!("{v}{}", fi + 1) } else { v.clone() };
            if names.contains(&name) {
                return Err(Error::Input(format!(
                    "variable name collision `{name}` in product model"
                )));
            }
            names.push(name);
        }
    }
    let arity = names.len();
    let mut rules = Vec::new();
    for (fi, f) in kept.iter().enumerate() {
        for rule in f.model.ring().rules() {
            let mut exps = vec![0u32; arity];
            for (i, &e) in rule.lead.exponents().iter().enumerate() {
                exps[offsets[fi] + i] = e;
            }
            rules.push(RewriteRule {
                lead: Monomial::from_exponents(exps),
                replacement: rule.replacement.shift_variables(arity, offsets[fi]),
            });
        }
    }
    let ring = QuotientRing::new(names, rules)?;
    let model = LambdaRingModel::split_from_ring(ring)?;
    let ring = model.ring();

    // Cycle classes: products of one class per factor.
    let mut cycles: Vec<CycleClass> = vec![CycleClass {
        codim: 0,
        label: "fundamental class".to_string(),
        class: ring.one(),
    }];
    let mut combos: Vec<(u32, String, RingElement)> = vec![(0, String::new(), ring.one())];
    for (fi, f) in kept.iter().enumerate() {
        let mut next = Vec::new();
        for (codim, label, class) in &combos {
            for cyc in &f.cycles {
                let lifted = ring.element(cyc.class.poly().shift_variables(arity, offsets[fi]))?;
                let product = ring.mul(class, &lifted);
                if product.is_zero() {
                    continue;
                }
                let label = if cyc.codim == 0 {
                    label.clone()
                } else if label.is_empty() {
                    format!("{} [{}]", cyc.label, f.name)
                } else {
                    format!("{label} * {} [{}]", cyc.label, f.name)
                };
                next.push((codim + cyc.codim, label, product));
            }
        }
        combos = next;
    }
    for (codim, label, class) in combos {
        if codim == 0 {
            continue;
        }
        cycles.push(CycleClass {
            codim,
            label,
            class,
        });
    }

    let dimension = kept.iter().map(|f| f.dimension).sum();
    let factor_dims = kept
        .iter()
        .map(|f| f.factor_dims.clone())
        .collect::<Option<Vec<_>>>()
        .map(|v| v.concat());
    let name = kept
        .iter()
        .map(|f| f.name.clone())
        .collect::<Vec<_>>()
        .join("x");
    Ok(SchemeModel {
        name,
        dimension,
        model,
        cycles,
        embeddings: Vec::new(),
        factor_dims,
    })
}

/// The hyperplane embedding of projective (n-1)-space in projective n-space.
pub fn hyperplane_embedding(n: u32) -> Result<ClosedEmbedding> {
    if n < 1 {
        return Err(Error::Input("hyperplane embeddings need n >= 1".into()));
    }
    let source = projective_space(n - 1)?;
    let target = projective_space(n)?;
    let tring = target.model.ring();
    let sring = source.model.ring();
    let h = tring.variable(0);
    let h_inv = unit_inverse(tring, &h)?;
    let koszul = tring.sub(&tring.one(), &h_inv);
    // i_*(h_Y^k) = h^k (1 - h^{-1}) for every basis power.
    let mut pushforward = Vec::new();
    for k in 0..n {
        pushforward.push(tring.mul(&tring.pow(&h, k), &koszul));
    }
    let h_source = sring.variable(0);
    let conormal = unit_inverse(sring, &h_source)?;
    let emb = ClosedEmbedding {
        label: format!("hyperplane P{} in P{n}", n - 1),
        source,
        target,
        codim: 1,
        pushforward,
        pullback: vec![h_source],
        conormal,
    };
    validate_embedding(&emb)?;
    Ok(emb)
}

/// Load-time checks shared by the builtin and described embeddings.
pub fn validate_embedding(emb: &ClosedEmbedding) -> Result<()> {
    let sring = emb.source.model.ring();
    let tring = emb.target.model.ring();
    if emb.pushforward.len() != sring.basis()?.len() {
        return Err(Error::Load(
            "pushforward table must cover the source basis".into(),
        ));
    }
    if emb.pullback.len() != tring.arity() {
        return Err(Error::Load(
            "pullback must assign an image to every target generator".into(),
        ));
    }
    // Pullback must be a lambda-morphism on generators: split classes map
    // to classes with vanishing higher lambda operations and rank one.
    for (gi, image) in emb.pullback.iter().enumerate() {
        if emb.source.model.augmentation(image) != int(1) {
            return Err(Error::Load(format!(
                "pullback of generator {gi} does not have rank one"
            )));
        }
        for k in 2..=3u32 {
            if !emb.source.model.lambda_op(image, k)?.is_zero() {
                return Err(Error::Load(format!(
                    "pullback of generator {gi} is not a line class"
                )));
            }
        }
    }
    // Conormal class is rank-bounded by the codimension.
    for k in emb.codim + 1..=emb.codim + 2 {
        if !emb.source.model.lambda_op(&emb.conormal, k)?.is_zero() {
            return Err(Error::Load(format!(
                "conormal class admits a nonzero lambda^{k} above the codimension"
            )));
        }
    }
    // Projection formula on basis pairs.
    let source_basis = basis_elements(&emb.source.model)?;
    let target_basis = basis_elements(&emb.target.model)?;
    for s in &target_basis {
        let pulled = emb.pull(s)?;
        for x in &source_basis {
            let lhs = emb.push(&sring.mul(&pulled, x))?;
            let rhs = tring.mul(s, &emb.push(x)?);
            if lhs != rhs {
                return Err(Error::Load(
                    "projection formula fails on a basis pair".into(),
                ));
            }
        }
    }
    // The pushforward of the unit is supported in codimension >= codim.
    let unit_image = emb.push(&sring.one())?;
    let top = emb.target.top_filtration(emb.codim + 1)?;
    if !top.member(&emb.target.model, &unit_image, emb.codim as i64)? {
        return Err(Error::Load(
            "pushforward of the source unit misses the expected coniveau level".into(),
        ));
    }
    Ok(())
}

/// Parse a builtin model name: `P<n>` or a product like `P2xP1`.
pub fn builtin(name: &str) -> Result<SchemeModel> {
    let parts: Vec<&str> = name.split(['x', 'X']).collect();
    let mut factors = Vec::new();
    for part in &parts {
        let trimmed = part.trim();
        let dim = trimmed
            .strip_prefix(['P', 'p'])
            .and_then(|d| d.parse::<u32>().ok())
            .ok_or_else(|| {
                Error::Input(format!(
                    "unknown model `{name}`; builtin names look like P3 or P2xP1"
                ))
            })?;
        factors.push(projective_space(dim)?);
    }
    if factors.len() == 1 {
        return Ok(factors.pop().expect("one factor"));
    }
    product_of(&factors)
}

/// Names of the catalogued verification models of dimension at most 5.
pub fn builtin_suite() -> Vec<&'static str> {
    vec![
        "P1", "P2", "P3", "P4", "P5", "P1xP1", "P1xP2", "P1xP3", "P2xP2",
    ]
}

// ---- Declarative descriptions ----

/// One generator of a described model; the presentation relation is
/// `(g - 1)^relation_degree = 0`, i.e. a factor of dimension
/// `relation_degree - 1`.
#[derive(Clone, Debug)]
pub struct GeneratorDescription {
    pub name: String,
    pub relation_degree: u32,
}

#[derive(Clone, Debug)]
pub struct CycleDescription {
    pub codim: u32,
    pub label: String,
    pub expr: String,
}

#[derive(Clone, Debug)]
pub struct PushforwardEntry {
    /// A source basis monomial, in the expression grammar.
    pub from: String,
    /// Its image in the target, in the expression grammar.
    pub to: String,
}

#[derive(Clone, Debug)]
pub struct EmbeddingDescription {
    /// Builtin name of the target model.
    pub target: String,
    pub codim: u32,
    pub pushforward: Vec<PushforwardEntry>,
    /// Images of the target generators, in source variables; defaults to
    /// the positional generator correspondence when empty.
    pub pullback: Vec<String>,
    pub conormal: String,
}

/// A declarative model description (the JSON-facing schema lives in the
/// companion crate; this is its validated in-memory form).
#[derive(Clone, Debug)]
pub struct ModelDescription {
    pub name: String,
    pub dimension: u32,
    pub generators: Vec<GeneratorDescription>,
    pub cycles: Vec<CycleDescription>,
    pub embeddings: Vec<EmbeddingDescription>,
}

/// Build and validate a scheme model from its description.
pub fn load_model(description: &ModelDescription) -> Result<SchemeModel> {
    if description.generators.is_empty() {
        return Err(Error::Load("a model needs at least one generator".into()));
    }
    let mut names = Vec::new();
    let mut rules = Vec::new();
    let arity = description.generators.len();
    let mut dim_sum = 0u32;
    for (i, gen) in description.generators.iter().enumerate() {
        if gen.relation_degree < 1 {
            return Err(Error::Load(format!(
                "generator `{}` needs a positive relation degree",
                gen.name
            )));
        }
        dim_sum += gen.relation_degree - 1;
        names.push(gen.name.clone());
        let g = Polynomial::variable(arity, i);
        let relation = g.sub(&Polynomial::one(arity)).pow(gen.relation_degree);
        let lead = Monomial::variable(arity, i).pow(gen.relation_degree);
        let replacement = Polynomial::from_monomial(lead.clone(), int(1)).sub(&relation);
        rules.push(RewriteRule { lead, replacement });
    }
    if dim_sum != description.dimension {
        return Err(Error::Load(format!(
            "declared dimension {} does not match the presentation (sum of relation degrees minus one is {dim_sum})",
            description.dimension
        )));
    }
    let ring = QuotientRing::new(names, rules).map_err(|e| Error::Load(format!("{e}")))?;
    let model = LambdaRingModel::split_from_ring(ring)?;

    let mut cycles = Vec::new();
    for cyc in &description.cycles {
        let poly = parse_polynomial(&cyc.expr, model.ring())
            .map_err(|e| Error::Load(format!("cycle `{}`: {e}", cyc.label)))?;
        let class = model.ring().element(poly)?;
        cycles.push(CycleClass {
            codim: cyc.codim,
            label: cyc.label.clone(),
            class,
        });
    }

    let mut scheme = SchemeModel {
        name: description.name.clone(),
        dimension: description.dimension,
        model,
        cycles,
        embeddings: Vec::new(),
        factor_dims: None,
    };

    for emb in &description.embeddings {
        let target = builtin(&emb.target)?;
        let built = build_embedding(&scheme, target, emb)?;
        scheme.embeddings.push(built);
    }
    scheme.validate()?;
    Ok(scheme)
}

fn build_embedding(
    scheme: &SchemeModel,
    target: SchemeModel,
    desc: &EmbeddingDescription,
) -> Result<ClosedEmbedding> {
    let sring = scheme.model.ring();
    let tring = target.model.ring();
    let basis = sring.basis()?;
    let mut pushforward = vec![None; basis.len()];
    for entry in &desc.pushforward {
        let from = sring.element(parse_polynomial(&entry.from, sring)?)?;
        let index = basis
            .iter()
            .position(|m| {
                from.poly().term_count() == 1
                    && from.poly().terms().next().map(|(mm, c)| (mm, c))
                        == Some((m, &int(1)))
            })
            .ok_or_else(|| {
                Error::Load(format!(
                    "pushforward key `{}` is not a source basis monomial",
                    entry.from
                ))
            })?;
        let to = tring.element(parse_polynomial(&entry.to, tring)?)?;
        pushforward[index] = Some(to);
    }
    let pushforward: Vec<RingElement> = pushforward
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                Error::Load(format!("pushforward table misses source basis monomial {i}"))
            })
        })
        .collect::<Result<_>>()?;
    let pullback: Vec<RingElement> = if desc.pullback.is_empty() {
        if tring.arity() != sring.arity() {
            return Err(Error::Load(
                "positional pullback needs matching generator counts; specify one explicitly"
                    .into(),
            ));
        }
        (0..sring.arity()).map(|i| sring.variable(i)).collect()
    } else {
        desc.pullback
            .iter()
            .map(|e| Ok(sring.element(parse_polynomial(e, sring)?)?))
            .collect::<Result<_>>()?
    };
    let conormal = sring.element(parse_polynomial(&desc.conormal, sring)?)?;
    Ok(ClosedEmbedding {
        label: format!("{} in {}", scheme.name, target.name),
        source: scheme_without_embeddings(scheme),
        target,
        codim: desc.codim,
        pushforward,
        pullback,
        conormal,
    })
}

fn scheme_without_embeddings(scheme: &SchemeModel) -> SchemeModel {
    SchemeModel {
        name: scheme.name.clone(),
        dimension: scheme.dimension,
        model: scheme.model.clone(),
        cycles: scheme.cycles.clone(),
        embeddings: Vec::new(),
        factor_dims: scheme.factor_dims.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_model() {
        let p0 = projective_space(0).unwrap();
        assert_eq!(p0.dimension, 0);
        assert_eq!(p0.model.ring().basis().unwrap().len(), 1);
        assert_eq!(p0.cycles.len(), 1);
    }

    #[test]
    fn projective_line_basis() {
        let p1 = projective_space(1).unwrap();
        assert_eq!(p1.model.ring().basis().unwrap().len(), 2);
        // (h-1)^2 = 0
        let ring = p1.model.ring();
        let h = ring.variable(0);
        let u = ring.sub(&h, &ring.one());
        assert!(ring.mul(&u, &u).is_zero());
    }

    #[test]
    fn hyperplane_class_is_one_minus_h_inverse() {
        // In P^2 the codimension-1 cycle is (h-1) - (h-1)^2.
        let p2 = projective_space(2).unwrap();
        let ring = p2.model.ring();
        let h = ring.variable(0);
        let u = ring.sub(&h, &ring.one());
        let expected = ring.sub(&u, &ring.mul(&u, &u));
        assert_eq!(p2.cycles[1].class, expected);
        // Cycle classes are killed by the augmentation and nonzero up to n.
        for cyc in &p2.cycles {
            if cyc.codim >= 1 {
                assert!(p2.model.augmentation(&cyc.class).is_zero());
            }
            assert!(!cyc.class.is_zero());
        }
    }

    #[test]
    fn cycle_powers_vanish_beyond_dimension() {
        let p3 = projective_space(3).unwrap();
        let ring = p3.model.ring();
        let c1 = &p3.cycles[1].class;
        assert!(!ring.pow(c1, 3).is_zero());
        assert!(ring.pow(c1, 4).is_zero());
    }

    #[test]
    fn product_of_lines() {
        let p1 = projective_space(1).unwrap();
        let m = product_model(&p1, &p1).unwrap();
        assert_eq!(m.dimension, 2);
        assert_eq!(m.model.ring().basis().unwrap().len(), 4);
        assert_eq!(m.model.ring().var_names(), &["h1".to_string(), "h2".to_string()]);
        assert_eq!(m.name, "P1xP1");
        // One cycle of codim 0, two of codim 1, one of codim 2.
        let counts = |q: u32| m.cycles.iter().filter(|c| c.codim == q).count();
        assert_eq!(counts(0), 1);
        assert_eq!(counts(1), 2);
        assert_eq!(counts(2), 1);
        // The augmentation is multiplicative across factors.
        let ring = m.model.ring();
        let h1 = ring.variable(0);
        let h2 = ring.variable(1);
        assert_eq!(m.model.augmentation(&ring.mul(&h1, &h2)), int(1));
    }

    #[test]
    fn product_with_point_is_identity() {
        let p2 = projective_space(2).unwrap();
        let p0 = projective_space(0).unwrap();
        let m = product_model(&p2, &p0).unwrap();
        assert_eq!(m.name, "P2");
        assert_eq!(m.dimension, 2);
    }

    #[test]
    fn hyperplane_pushforward_values() {
        let emb = hyperplane_embedding(2).unwrap();
        let tring = emb.target.model.ring();
        let h = tring.variable(0);
        let u = tring.sub(&h, &tring.one());
        // i_*(1) = 1 - h^{-1} = (h-1) - (h-1)^2 in P^2.
        let expected = tring.sub(&u, &tring.mul(&u, &u));
        assert_eq!(emb.push(&emb.source.model.ring().one()).unwrap(), expected);
        // i_*(h_Y) = h - 1.
        let h_y = emb.source.model.ring().variable(0);
        assert_eq!(emb.push(&h_y).unwrap(), u);
        // Projection formula spot check: i_*(i^*(h) * 1) = h * i_*(1).
        let pulled = emb.pull(&h).unwrap();
        let lhs = emb.push(&pulled).unwrap();
        let rhs = tring.mul(&h, &emb.push(&emb.source.model.ring().one()).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conormal_is_a_line_class() {
        let emb = hyperplane_embedding(3).unwrap();
        for k in 2..=4 {
            assert!(emb
                .source
                .model
                .lambda_op(&emb.conormal, k)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("P3").unwrap().name, "P3");
        assert_eq!(builtin("P2xP1").unwrap().dimension, 3);
        assert!(builtin("Q7").is_err());
    }

    #[test]
    fn load_model_roundtrip_and_validation() {
        let desc = ModelDescription {
            name: "plane".into(),
            dimension: 2,
            generators: vec![GeneratorDescription {
                name: "h".into(),
                relation_degree: 3,
            }],
            cycles: vec![
                CycleDescription {
                    codim: 0,
                    label: "fundamental".into(),
                    expr: "1".into(),
                },
                CycleDescription {
                    codim: 1,
                    label: "hyperplane".into(),
                    // 1 - h^{-1} = (h-1) - (h-1)^2
                    expr: "(h-1) - (h-1)^2".into(),
                },
                CycleDescription {
                    codim: 2,
                    label: "point".into(),
                    expr: "(h-1)^2".into(),
                },
            ],
            embeddings: vec![],
        };
        let scheme = load_model(&desc).unwrap();
        assert_eq!(scheme.dimension, 2);

        // A cycle with nonzero augmentation is rejected.
        let mut bad = desc.clone();
        bad.cycles[1].expr = "h".into();
        let err = load_model(&bad).unwrap_err();
        assert!(matches!(err, Error::Load(_)));

        // A dimension mismatch is rejected.
        let mut bad = desc;
        bad.dimension = 3;
        assert!(matches!(load_model(&bad), Err(Error::Load(_))));
    }
}
