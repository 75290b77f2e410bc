//! The gamma and coniveau filtrations as integer lattices.
//!
//! Levels live in the coordinate module of a finite-basis model. The gamma
//! level `q` is generated by all products `gamma^{i_1}(x_1) ... gamma^{i_p}(x_p)`
//! over a basis of the augmentation kernel with total weight at least `q`;
//! the total weight is capped at the dimension, where the higher levels
//! vanish, and every enumerated product of weight above the cap is asserted
//! to reduce to zero in the ring. The coniveau level `q` is the module
//! closure of the catalogued cycle classes of codimension at least `q`.
//! Both chains are decreasing by construction of the generating sets.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lambda::LambdaRingModel;
use crate::lattice::{quotient_invariants, IntegerLattice, QuotientInvariants};
use crate::ops::gamma_op;
use crate::ring::RingElement;
use crate::Int;

/// One level of a decreasing filtration.
#[derive(Clone, Debug)]
pub struct FiltrationLevel {
    pub q: u32,
    pub lattice: IntegerLattice,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiltrationKind {
    Gamma,
    Coniveau,
}

impl FiltrationKind {
    pub fn label(self) -> &'static str {
        match self {
            FiltrationKind::Gamma => "gamma",
            FiltrationKind::Coniveau => "top",
        }
    }
}

/// A decreasing chain of integer lattices indexed by `q = 0..=max_q`.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub kind: FiltrationKind,
    levels: Vec<FiltrationLevel>,
    dimension: u32,
}

impl Filtration {
    /// The gamma filtration of a model of the given dimension.
    pub fn gamma(model: &LambdaRingModel, dimension: u32, max_q: u32) -> Result<Self> {
        let ring = model.ring();
        let basis = ring.basis()?;
        let rank = basis.len();
        let top = max_q.max(dimension + 1);

        // Z-basis of ker(eps).
        let eps_row: Vec<Int> = (0..rank)
            .map(|i| {
                let mut coords = vec![Int::from(0); rank];
                coords[i] = Int::from(1);
                let elem = ring.from_coordinates(&coords).expect("basis vector");
                model.augmentation(&elem)
            })
            .collect();
        let kernel = crate::lattice::integer_kernel(&[eps_row], rank);
        let kernel_elems: Vec<RingElement> = kernel
            .iter()
            .map(|v| ring.from_coordinates(v).expect("kernel vector"))
            .collect();

        // gamma powers of the kernel basis, up to the dimension cap.
        let cap = dimension.max(1);
        let mut gamma_powers = Vec::with_capacity(kernel_elems.len());
        for x in &kernel_elems {
            let mut powers = Vec::with_capacity(cap as usize);
            for i in 1..=cap {
                powers.push(gamma_op(model, x, i)?);
            }
            gamma_powers.push(powers);
        }

        // All products of gamma powers with total weight <= cap, recorded
        // with their weight; products of weight cap + 1 must vanish.
        let mut products: Vec<(u64, RingElement)> = Vec::new();
        enumerate_gamma_products(
            ring,
            &gamma_powers,
            0,
            cap as u64 + 1,
            0,
            &ring.one(),
            &mut products,
        );
        for (w, elem) in &products {
            if *w > cap as u64 && !elem.is_zero() {
                return Err(Error::Internal(format!(
                    "gamma product of weight {w} above the dimension does not vanish; \
                     the model violates the vanishing assumption"
                )));
            }
        }

        let basis_elems = basis_elements(model)?;
        let mut levels = Vec::with_capacity(top as usize + 1);
        levels.push(FiltrationLevel {
            q: 0,
            lattice: IntegerLattice::full(rank),
        });
        for q in 1..=top {
            let lattice = if q > dimension {
                IntegerLattice::zero(rank)
            } else {
                let gens: Vec<Vec<Int>> = products
                    .iter()
                    .filter(|(w, e)| *w >= q as u64 && !e.is_zero())
                    .map(|(_, e)| ring.coordinates(e))
                    .collect::<Result<_>>()?;
                let lattice = IntegerLattice::from_generators(rank, gens)?;
                module_closure(model, lattice, &basis_elems)?
            };
            levels.push(FiltrationLevel { q, lattice });
        }
        let filtration = Filtration {
            kind: FiltrationKind::Gamma,
            levels,
            dimension,
        };
        filtration.check_chain()?;
        Ok(filtration)
    }

    /// The coniveau filtration generated by labelled cycle classes, given as
    /// `(codimension, class)` pairs.
    pub fn coniveau(
        model: &LambdaRingModel,
        dimension: u32,
        cycles: &[(u32, RingElement)],
        max_q: u32,
    ) -> Result<Self> {
        if cycles.is_empty() {
            return Err(Error::Input("coniveau filtration requires cycle classes".into()));
        }
        let ring = model.ring();
        let rank = ring.basis()?.len();
        let top = max_q.max(dimension + 1);
        let basis_elems = basis_elements(model)?;
        let mut levels = Vec::with_capacity(top as usize + 1);
        levels.push(FiltrationLevel {
            q: 0,
            lattice: IntegerLattice::full(rank),
        });
        for q in 1..=top {
            let lattice = if q > dimension {
                IntegerLattice::zero(rank)
            } else {
                let gens: Vec<Vec<Int>> = cycles
                    .iter()
                    .filter(|(codim, _)| *codim >= q)
                    .map(|(_, c)| ring.coordinates(c))
                    .collect::<Result<_>>()?;
                let lattice = IntegerLattice::from_generators(rank, gens)?;
                module_closure(model, lattice, &basis_elems)?
            };
            levels.push(FiltrationLevel { q, lattice });
        }
        let filtration = Filtration {
            kind: FiltrationKind::Coniveau,
            levels,
            dimension,
        };
        filtration.check_chain()?;
        Ok(filtration)
    }

    fn check_chain(&self) -> Result<()> {
        for w in self.levels.windows(2) {
            if !w[1].lattice.is_sublattice_of(&w[0].lattice)? {
                return Err(Error::Internal(format!(
                    "filtration level {} is not contained in level {}",
                    w[1].q, w[0].q
                )));
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn max_q(&self) -> u32 {
        self.levels.last().map_or(0, |l| l.q)
    }

    pub fn levels(&self) -> &[FiltrationLevel] {
        &self.levels
    }

    /// The lattice at level `q`; everything at or below zero is the full
    /// module and everything above the computed range is zero.
    pub fn level(&self, q: i64) -> &IntegerLattice {
        if q <= 0 {
            return &self.levels[0].lattice;
        }
        let idx = (q as usize).min(self.levels.len() - 1);
        let level = &self.levels[idx];
        debug_assert!(
            level.q as i64 == q || level.lattice.is_zero(),
            "levels beyond the computed range must be zero"
        );
        &level.lattice
    }

    /// Exact membership of an element in level `q`.
    pub fn member(&self, model: &LambdaRingModel, x: &RingElement, q: i64) -> Result<bool> {
        let coords = model.ring().coordinates(x)?;
        self.level(q).contains(&coords)
    }

    /// Invariants of the graded piece `Fil^q / Fil^{q+1}`.
    pub fn graded(&self, q: u32) -> Result<QuotientInvariants> {
        let ambient = self.level(q as i64);
        let sub = self.level(q as i64 + 1);
        quotient_invariants(ambient, sub).map_err(|e| match e {
            Error::Input(m) => Error::Internal(format!("graded piece at q = {q}: {m}")),
            other => other,
        })
    }
}

/// Exact membership of `x` in a single filtration level.
pub fn filtration_member(
    model: &LambdaRingModel,
    level: &IntegerLattice,
    x: &RingElement,
) -> Result<bool> {
    let coords = model.ring().coordinates(x)?;
    level.contains(&coords)
}

pub(crate) fn basis_elements(model: &LambdaRingModel) -> Result<Vec<RingElement>> {
    let ring = model.ring();
    let rank = ring.basis()?.len();
    (0..rank)
        .map(|i| {
            let mut coords = vec![Int::from(0); rank];
            coords[i] = Int::from(1);
            ring.from_coordinates(&coords)
        })
        .collect()
}

/// Close a lattice under multiplication by the ring basis until it
/// stabilizes; the HNF determinant chain makes termination finite.
pub(crate) fn module_closure(
    model: &LambdaRingModel,
    mut lattice: IntegerLattice,
    basis_elems: &[RingElement],
) -> Result<IntegerLattice> {
    let ring = model.ring();
    loop {
        let mut new_rows: Vec<Vec<Int>> = Vec::new();
        for row in lattice.basis() {
            let elem = ring.from_coordinates(row)?;
            for b in basis_elems {
                let prod = ring.mul(&elem, b);
                if prod.is_zero() {
                    continue;
                }
                let coords = ring.coordinates(&prod)?;
                if !lattice.contains(&coords)? {
                    new_rows.push(coords);
                }
            }
        }
        if new_rows.is_empty() {
            return Ok(lattice);
        }
        let mut rows: Vec<Vec<Int>> = lattice.basis().to_vec();
        rows.extend(new_rows);
        lattice = IntegerLattice::from_generators(lattice.ambient_rank(), rows)?;
    }
}

/// Depth-first enumeration of products of gamma powers of the kernel basis.
/// `gamma_powers[j][i-1]` is `gamma^i` of the j-th kernel element; products
/// are collected with their total weight, up to `budget`.
fn enumerate_gamma_products(
    ring: &crate::ring::QuotientRing,
    gamma_powers: &[Vec<RingElement>],
    from: usize,
    budget: u64,
    weight: u64,
    acc: &RingElement,
    out: &mut Vec<(u64, RingElement)>,
) {
    if weight > 0 {
        out.push((weight, acc.clone()));
    }
    if acc.is_zero() {
        return;
    }
    for j in from..gamma_powers.len() {
        for (i, power) in gamma_powers[j].iter().enumerate() {
            let w = i as u64 + 1;
            if weight + w > budget {
                break;
            }
            let next = ring.mul(acc, power);
            enumerate_gamma_products(ring, gamma_powers, j, budget, weight + w, &next, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::nilpotent_line_ring;

    fn proj_model(n: u32) -> LambdaRingModel {
        LambdaRingModel::split_from_ring(nilpotent_line_ring("h", n + 1).unwrap()).unwrap()
    }

    fn h_minus_one_power(model: &LambdaRingModel, k: u32) -> RingElement {
        let h = model.generator_element(0);
        let x = model.ring().sub(&h, &model.ring().one());
        model.ring().pow(&x, k)
    }

    #[test]
    fn projective_line_gamma() {
        // Fil^1 = Z (h - 1), Fil^2 = 0.
        let m = proj_model(1);
        let f = Filtration::gamma(&m, 1, 2).unwrap();
        let x = h_minus_one_power(&m, 1);
        assert!(f.member(&m, &x, 1).unwrap());
        assert_eq!(f.level(1).rank(), 1);
        assert!(f.level(2).is_zero());
        assert_eq!(f.level(0).rank(), 2);
    }

    #[test]
    fn projective_plane_gamma_level_two() {
        // Fil^2 = Z (h - 1)^2.
        let m = proj_model(2);
        let f = Filtration::gamma(&m, 2, 3).unwrap();
        let x2 = h_minus_one_power(&m, 2);
        let expected = IntegerLattice::from_generators(
            3,
            vec![m.ring().coordinates(&x2).unwrap()],
        )
        .unwrap();
        assert_eq!(f.level(2), &expected);
        let x1 = h_minus_one_power(&m, 1);
        assert!(!f.member(&m, &x1, 2).unwrap());
        assert!(f.member(&m, &m.ring().zero(), 2).unwrap());
    }

    #[test]
    fn gamma_level_one_is_augmentation_kernel() {
        let m = proj_model(3);
        let f = Filtration::gamma(&m, 3, 4).unwrap();
        // Every basis difference h^k - 1 lies in level 1 and spans it.
        for k in 1..=3u32 {
            let h = m.generator_element(0);
            let x = m.ring().sub(&m.ring().pow(&h, k), &m.ring().one());
            assert!(f.member(&m, &x, 1).unwrap());
        }
        assert_eq!(f.level(1).rank(), 3);
        assert!(!f.member(&m, &m.ring().one(), 1).unwrap());
    }

    #[test]
    fn coniveau_from_cycles() {
        // Projective plane with cycle classes (1 - h^{-1})^q; the level-1
        // closure is the span of (h-1) and (h-1)^2.
        let m = proj_model(2);
        let ring = m.ring();
        let h = m.generator_element(0);
        // h^{-1} = 1 - (h-1) + (h-1)^2 here.
        let u = ring.sub(&h, &ring.one());
        let hinv = ring.add(
            &ring.sub(&ring.one(), &u),
            &ring.mul(&u, &u),
        );
        assert!(ring.mul(&h, &hinv).as_constant().is_some());
        let c1 = ring.sub(&ring.one(), &hinv);
        let c2 = ring.mul(&c1, &c1);
        let cycles = vec![(0, ring.one()), (1, c1.clone()), (2, c2.clone())];
        let f = Filtration::coniveau(&m, 2, &cycles, 3).unwrap();
        assert!(f.member(&m, &c1, 1).unwrap());
        assert!(f.member(&m, &ring.mul(&u, &u), 2).unwrap());
        assert!(!f.member(&m, &u, 2).unwrap());
        assert!(f.level(3).is_zero());
        // graded pieces of the projective plane are Z in degrees 0..=2
        for q in 0..=2 {
            let g = f.graded(q).unwrap();
            assert_eq!(g.free_rank, 1, "rank of graded piece {q}");
            assert!(g.torsion.is_empty());
        }
        let g = f.graded(3).unwrap();
        assert!(g.is_trivial());
    }
}
