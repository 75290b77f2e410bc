//! Exact computer algebra for augmented lambda-rings presented over the
//! integers: Adams and gamma operations, divided operations relative to a
//! rank-bounded class, and the gamma/coniveau filtrations realized as
//! integer lattices in the coordinate module of a finitely presented model.
//!
//! Everything is computed over arbitrary-precision integers; there is no
//! floating point anywhere. The crate is `no_std` (alloc only); IO, file
//! formats and the command line live in the companion `coniveau-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod error;
pub mod expr;
pub mod filtration;
pub mod lambda;
pub mod lattice;
pub mod ops;
pub mod poly;
pub mod ring;
pub mod series;
pub mod universal;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{quotient_invariants, IntegerLattice, QuotientInvariants};
pub use poly::{Monomial, Polynomial};
pub use ring::{normal_form, QuotientRing, RewriteRule, RingElement};
pub use series::TruncatedSeries;

/// Arbitrary-precision integer used for every coefficient in the crate.
pub type Int = num_bigint::BigInt;

/// Shorthand for building an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Binomial coefficient over non-negative arguments; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::from(0);
    }
    let mut acc = Int::from(1);
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Generalized binomial `z (z-1) .. (z-k+1) / k!` for integer `z`, matching
/// the coefficientwise expansion of `(1+t)^z`.
pub fn binomial_int(z: &Int, k: u32) -> Int {
    let mut num = Int::from(1);
    for i in 0..k {
        num *= z - int(i as i64);
    }
    num / factorial(k as u64)
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::from(1);
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}
