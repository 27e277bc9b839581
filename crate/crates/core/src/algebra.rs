//! Structure objects for the monoids and groups the algorithms run over.
//!
//! Elements are plain values; the operations live on a separate structure
//! object so that one element type can carry several structures (and so
//! that finite Cayley tables can hand out bare indices as elements).

use std::fmt::Debug;

use crate::perm::FinPerm;

pub trait Monoid {
    type Elem: Clone + PartialEq + Debug;

    fn one(&self) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Left-to-right product of a sequence; the empty product is the identity.
    fn product<'a, I>(&self, elems: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut acc = self.one();
        for e in elems {
            acc = self.mul(&acc, e);
        }
        acc
    }

    fn pow(&self, a: &Self::Elem, n: u64) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// Marker for monoids in which `ab = ac` implies `b = c`, and `ba = ca`
/// implies `b = c`.
pub trait Cancellative: Monoid {}

pub trait Group: Cancellative {
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// Sym_ω(ℕ), the finitary symmetric group, with left-to-right composition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SymOmega;

impl Monoid for SymOmega {
    type Elem = FinPerm;

    fn one(&self) -> FinPerm {
        FinPerm::identity()
    }

    fn mul(&self, a: &FinPerm, b: &FinPerm) -> FinPerm {
        a.compose(b)
    }

    fn is_one(&self, a: &FinPerm) -> bool {
        a.is_identity()
    }
}

impl Cancellative for SymOmega {}

impl Group for SymOmega {
    fn inv(&self, a: &FinPerm) -> FinPerm {
        a.invert()
    }
}

/// (ℕ, +): cancellative, but without inverses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AdditiveNaturals;

impl Monoid for AdditiveNaturals {
    type Elem = u64;

    fn one(&self) -> u64 {
        0
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a + b
    }
}

impl Cancellative for AdditiveNaturals {}
