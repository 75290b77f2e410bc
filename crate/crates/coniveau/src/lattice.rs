//! Integer lattices in Hermite normal form and abelian-group invariants.
//!
//! A lattice is stored as a row-style HNF basis: pivot entries positive,
//! entries above each pivot reduced into `[0, pivot)`, zero rows dropped.
//! The form is canonical, so two generator sets span the same lattice
//! exactly when their bases compare equal. Membership, coordinates,
//! kernels and Smith invariants are all exact over the integers.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Int;

/// A subgroup of Z^ambient with canonical HNF basis rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerLattice {
    ambient: usize,
    basis: Vec<Vec<Int>>,
}

/// Invariants of a finitely generated abelian quotient group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientInvariants {
    /// Rank of the free part.
    pub free_rank: usize,
    /// Nontrivial torsion orders, each dividing the next.
    pub torsion: Vec<Int>,
}

impl QuotientInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl IntegerLattice {
    /// The zero lattice.
    pub fn zero(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: Vec::new(),
        }
    }

    /// All of Z^ambient.
    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut row = vec![Int::zero(); ambient];
                row[i] = Int::from(1);
                row
            })
            .collect();
        IntegerLattice { ambient, basis }
    }

    /// The lattice generated by the given vectors.
    pub fn from_generators(ambient: usize, generators: Vec<Vec<Int>>) -> Result<Self> {
        for g in &generators {
            if g.len() != ambient {
                return Err(Error::Input(format!(
                    "generator of length {} in ambient rank {}",
                    g.len(),
                    ambient
                )));
            }
        }
        let basis = hermite_normal_form(generators, ambient);
        Ok(IntegerLattice { ambient, basis })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    /// Exact membership test.
    pub fn contains(&self, v: &[Int]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Coefficients of `v` over the basis rows, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[Int]) -> Result<Option<Vec<Int>>> {
        if v.len() != self.ambient {
            return Err(Error::Input(format!(
                "vector of length {} in ambient rank {}",
                v.len(),
                self.ambient
            )));
        }
        let mut w: Vec<Int> = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let c = pivot_column(row).expect("basis rows are nonzero");
            let p = &row[c];
            if !w[c].mod_floor(p).is_zero() {
                return Ok(None);
            }
            let q = w[c].div_floor(p);
            if !q.is_zero() {
                for (wi, ri) in w.iter_mut().zip(row) {
                    *wi -= &q * ri;
                }
            }
            coords.push(q);
        }
        if w.iter().all(Zero::is_zero) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    /// Smallest lattice containing both.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::Input("ambient rank mismatch in lattice sum".into()));
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_generators(self.ambient, rows)
    }

    /// Containment test via membership of every basis row.
    pub fn is_sublattice_of(&self, other: &Self) -> Result<bool> {
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn pivot_column(row: &[Int]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Row-style Hermite normal form; returns the canonical nonzero rows.
pub fn hermite_normal_form(mut rows: Vec<Vec<Int>>, cols: usize) -> Vec<Vec<Int>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut pivot_row = 0;
    for col in 0..cols {
        // Euclidean elimination below the current pivot row.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(b) if rows[i][col].abs() < rows[b][col].abs() => Some(i),
                    keep => keep,
                };
            }
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[pivot_row][col]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &q * &rows[pivot_row][j];
                        rows[i][j] -= t;
                    }
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < rows.len() && !rows[pivot_row][col].is_zero() {
            if rows[pivot_row][col].is_negative() {
                for x in rows[pivot_row].iter_mut() {
                    *x = -x.clone();
                }
            }
            // Reduce the entries above the pivot into [0, pivot).
            for i in 0..pivot_row {
                let q = rows[i][col].div_floor(&rows[pivot_row][col]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &q * &rows[pivot_row][j];
                        rows[i][j] -= t;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Basis of the right kernel `{ x : A x = 0 }` of an integer matrix given
/// as rows of length `cols`.
pub fn integer_kernel(matrix: &[Vec<Int>], cols: usize) -> Vec<Vec<Int>> {
    let m = matrix.len();
    // Row-reduce [A^T | I]; rows whose A^T-part vanishes record kernel vectors.
    let mut rows: Vec<Vec<Int>> = (0..cols)
        .map(|i| {
            let mut row: Vec<Int> = matrix.iter().map(|r| r[i].clone()).collect();
            let mut id = vec![Int::zero(); cols];
            id[i] = Int::from(1);
            row.extend(id);
            row
        })
        .collect();
    rows = hermite_normal_form(rows, m + cols);
    let mut kernel = Vec::new();
    for row in rows {
        if row[..m].iter().all(Zero::is_zero) {
            kernel.push(row[m..].to_vec());
        }
    }
    kernel
}

/// Diagonal of the Smith normal form: nonnegative invariants d1 | d2 | ...
/// (zeros excluded), one per nonzero elementary divisor.
pub fn smith_invariants(matrix: &[Vec<Int>]) -> Vec<Int> {
    let nr = matrix.len();
    let nc = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Int>> = matrix.to_vec();
    let mut out = Vec::new();
    let mut k = 0;
    while k < nr && k < nc {
        // Find the nonzero entry of smallest magnitude in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in k..nr {
            for j in k..nc {
                if a[i][j].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some((i, j)),
                    Some((bi, bj)) if a[i][j].abs() < a[bi][bj].abs() => Some((i, j)),
                    keep => keep,
                };
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(k, bi);
        for row in a.iter_mut() {
            row.swap(k, bj);
        }
        // Clear row and column k; restart if a remainder pops up.
        let mut clean = true;
        for i in k + 1..nr {
            if a[i][k].is_zero() {
                continue;
            }
            let q = a[i][k].div_floor(&a[k][k]);
            for j in k..nc {
                let t = &q * &a[k][j];
                a[i][j] -= t;
            }
            if !a[i][k].is_zero() {
                clean = false;
            }
        }
        for j in k + 1..nc {
            if a[k][j].is_zero() {
                continue;
            }
            let q = a[k][j].div_floor(&a[k][k]);
            for i in k..nr {
                let t = &q * &a[i][k];
                a[i][j] -= t;
            }
            if !a[k][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility pass: fold in any entry the pivot does not divide.
        let mut fixed = true;
        'scan: for i in k + 1..nr {
            for j in k + 1..nc {
                if !a[i][j].mod_floor(&a[k][k].abs()).is_zero() {
                    let row = a[i].clone();
                    for (x, y) in a[k].iter_mut().zip(row) {
                        *x += y;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        out.push(a[k][k].abs());
        k += 1;
    }
    out
}

/// Invariants of `ambient / sub`. Fails unless `sub` is contained in
/// `ambient`.
pub fn quotient_invariants(
    ambient: &IntegerLattice,
    sub: &IntegerLattice,
) -> Result<QuotientInvariants> {
    if ambient.ambient_rank() != sub.ambient_rank() {
        return Err(Error::Input("ambient rank mismatch in quotient".into()));
    }
    let mut relation = Vec::with_capacity(sub.rank());
    for row in sub.basis() {
        match ambient.coordinates(row)? {
            Some(c) => relation.push(c),
            None => {
                return Err(Error::Input(
                    "quotient requires the subgroup to be contained in the ambient lattice".into(),
                ))
            }
        }
    }
    let free_rank = ambient.rank() - sub.rank();
    if relation.is_empty() {
        return Ok(QuotientInvariants {
            free_rank,
            torsion: Vec::new(),
        });
    }
    let torsion = smith_invariants(&relation)
        .into_iter()
        .filter(|d| d.abs() > Int::from(1))
        .collect();
    Ok(QuotientInvariants { free_rank, torsion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn membership_examples() {
        let l = IntegerLattice::from_generators(2, vecs(&[&[2, 0], &[0, 3]])).unwrap();
        assert!(l.contains(&[int(2), int(3)]).unwrap());
        assert!(!l.contains(&[int(1), int(0)]).unwrap());
        assert!(l.contains(&[int(0), int(0)]).unwrap());
    }

    #[test]
    fn hnf_frozen_example() {
        let l = IntegerLattice::from_generators(2, vecs(&[&[1, 1], &[0, 2]])).unwrap();
        assert_eq!(l.basis(), &vecs(&[&[1, 1], &[0, 2]])[..]);
    }

    #[test]
    fn hnf_is_canonical_for_regenerated_sets() {
        let a = IntegerLattice::from_generators(3, vecs(&[&[2, 1, 0], &[0, 3, 1], &[2, 4, 1]]))
            .unwrap();
        // Same lattice from sums and negations of the generators.
        let b = IntegerLattice::from_generators(
            3,
            vecs(&[&[2, 4, 1], &[-2, -1, 0], &[2, 1, 0], &[0, 3, 1]]),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_examples() {
        // Z^2 / <(2,0),(0,3)> = Z/6 (smith of diag(2,3) is diag(1,6))
        let full = IntegerLattice::full(2);
        let sub = IntegerLattice::from_generators(2, vecs(&[&[2, 0], &[0, 3]])).unwrap();
        let q = quotient_invariants(&full, &sub).unwrap();
        assert_eq!(q.free_rank, 0);
        assert_eq!(q.torsion, vec![int(6)]);

        // quotient by the full lattice is trivial
        let q = quotient_invariants(&full, &full).unwrap();
        assert!(q.is_trivial());

        // quotient by zero in Z^3 has free rank 3
        let full3 = IntegerLattice::full(3);
        let q = quotient_invariants(&full3, &IntegerLattice::zero(3)).unwrap();
        assert_eq!(q.free_rank, 3);
        assert!(q.torsion.is_empty());
    }

    #[test]
    fn non_containment_rejected() {
        let amb = IntegerLattice::from_generators(2, vecs(&[&[2, 0]])).unwrap();
        let sub = IntegerLattice::from_generators(2, vecs(&[&[1, 0]])).unwrap();
        assert!(quotient_invariants(&amb, &sub).is_err());
    }

    #[test]
    fn kernel_of_functional() {
        // kernel of (1, 1, 1) : Z^3 -> Z
        let a = vecs(&[&[1, 1, 1]]);
        let cols = 3;
        let k = integer_kernel(&a, cols);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: Int = v.iter().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn smith_small_matrices() {
        // gcd of entries 1, determinant 6
        assert_eq!(smith_invariants(&vecs(&[&[2, 0], &[0, 3]])), vec![int(1), int(6)]);
        // gcd 2, determinant 60
        assert_eq!(smith_invariants(&vecs(&[&[6, 0], &[0, 10]])), vec![int(2), int(30)]);
        // rank-deficient
        assert_eq!(smith_invariants(&vecs(&[&[2, 4], &[1, 2]])), vec![int(1)]);
    }

    #[test]
    fn lattice_sum() {
        // <(2,0)> + <(0,2),(1,1)> is the even-coordinate-sum sublattice.
        let a = IntegerLattice::from_generators(2, vecs(&[&[2, 0]])).unwrap();
        let b = IntegerLattice::from_generators(2, vecs(&[&[0, 2], &[1, 1]])).unwrap();
        let s = a.sum(&b).unwrap();
        assert_eq!(s.basis(), &vecs(&[&[1, 1], &[0, 2]])[..]);
        let t = s.sum(&IntegerLattice::from_generators(2, vecs(&[&[1, 0]])).unwrap()).unwrap();
        assert_eq!(t, IntegerLattice::full(2));
    }
}
