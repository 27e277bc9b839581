//! Semigroup and group polynomials in one variable.
//!
//! A semigroup word `a₀ x a₁ … x aₙ` is stored as its coefficient sequence;
//! a group word additionally carries one sign per occurrence of `x`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Group, Monoid};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            other => Err(format!("sign must be 1 or -1, got {other}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// `a₀ x a₁ … x aₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SemigroupWordRepr<E>")]
#[serde(bound(deserialize = "E: Deserialize<'de>"))]
pub struct SemigroupWord<E> {
    coeffs: Vec<E>,
}

#[derive(Deserialize)]
struct SemigroupWordRepr<E> {
    coeffs: Vec<E>,
}

impl<E> TryFrom<SemigroupWordRepr<E>> for SemigroupWord<E> {
    type Error = Error;

    fn try_from(r: SemigroupWordRepr<E>) -> Result<Self> {
        Self::new(r.coeffs)
    }
}

impl<E> SemigroupWord<E> {
    pub fn new(coeffs: Vec<E>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self { coeffs })
    }

    pub fn constant(a: E) -> Self {
        Self { coeffs: vec![a] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }
}

impl<E: Clone + PartialEq> SemigroupWord<E> {
    pub fn eval<M: Monoid<Elem = E>>(&self, monoid: &M, x: &E) -> E {
        let mut acc = self.coeffs[0].clone();
        for c in &self.coeffs[1..] {
            acc = monoid.mul(&acc, x);
            acc = monoid.mul(&acc, c);
        }
        acc
    }

    /// The word for `(x)u·(x)v`: coefficient lists concatenated with the
    /// boundary coefficients multiplied together.
    pub fn fuse<M: Monoid<Elem = E>>(&self, other: &Self, monoid: &M) -> Self {
        let mut coeffs = self.coeffs.clone();
        let last = coeffs.pop().expect("non-empty word");
        coeffs.push(monoid.mul(&last, &other.coeffs[0]));
        coeffs.extend(other.coeffs[1..].iter().cloned());
        Self { coeffs }
    }
}

/// `a₀ x^{ε₁} a₁ … x^{εₙ} aₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupWordRepr<E>")]
#[serde(bound(deserialize = "E: Deserialize<'de>"))]
pub struct GroupWord<E> {
    coeffs: Vec<E>,
    signs: Vec<Sign>,
}

#[derive(Deserialize)]
struct GroupWordRepr<E> {
    coeffs: Vec<E>,
    #[serde(default)]
    signs: Vec<Sign>,
}

impl<E> TryFrom<GroupWordRepr<E>> for GroupWord<E> {
    type Error = Error;

    fn try_from(r: GroupWordRepr<E>) -> Result<Self> {
        Self::new(r.coeffs, r.signs)
    }
}

impl<E> GroupWord<E> {
    pub fn new(coeffs: Vec<E>, signs: Vec<Sign>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyWord);
        }
        if signs.len() + 1 != coeffs.len() {
            return Err(Error::SignCount { coeffs: coeffs.len(), signs: signs.len() });
        }
        Ok(Self { coeffs, signs })
    }

    pub fn degree(&self) -> usize {
        self.signs.len()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }
}

impl<E: Clone + PartialEq> GroupWord<E> {
    pub fn eval<G: Group<Elem = E>>(&self, group: &G, x: &E) -> E {
        let x_inv = group.inv(x);
        let mut acc = self.coeffs[0].clone();
        for (c, s) in self.coeffs[1..].iter().zip(&self.signs) {
            let xs = match s {
                Sign::Pos => x,
                Sign::Neg => &x_inv,
            };
            acc = group.mul(&acc, xs);
            acc = group.mul(&acc, c);
        }
        acc
    }

    /// The word evaluating to `((x)w)⁻¹` for every `x`.
    pub fn formal_inverse<G: Group<Elem = E>>(&self, group: &G) -> Self {
        Self {
            coeffs: self.coeffs.iter().rev().map(|c| group.inv(c)).collect(),
            signs: self.signs.iter().rev().map(|s| s.flip()).collect(),
        }
    }

    fn count(&self, sign: Sign) -> usize {
        self.signs.iter().filter(|&&s| s == sign).count()
    }
}

/// The pair `(f, g)` standing for the set `{x : (x)f ≠ (x)g}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(deserialize = "E: Deserialize<'de> + Clone + PartialEq"))]
pub struct IneqPair<E> {
    pub lhs: SemigroupWord<E>,
    pub rhs: SemigroupWord<E>,
}

impl<E: Clone + PartialEq> IneqPair<E> {
    pub fn holds<M: Monoid<Elem = E>>(&self, monoid: &M, x: &E) -> bool {
        self.lhs.eval(monoid, x) != self.rhs.eval(monoid, x)
    }
}

/// Membership in a finite intersection of subbasic sets.
pub fn basic_set_membership<M: Monoid>(pairs: &[IneqPair<M::Elem>], monoid: &M, x: &M::Elem) -> bool {
    pairs.iter().all(|p| p.holds(monoid, x))
}

/// Rewrites the group inequation `(x)w ≠ 1` as a semigroup inequation
/// `(x)u ≠ (x)v` with the same solution set in every group, preserving the
/// total degree.
///
/// If inverted occurrences are the majority, `w` is replaced by its formal
/// inverse. With no inverted occurrence left the pair is `(w, 1)`. Otherwise
/// exactly one remains (for degree at most 3), `w = p·x⁻¹·q`, and since
/// `p x⁻¹ q = 1 ⟺ q p x⁻¹ = 1 ⟺ q p = x` the pair is `(q⊙p, x)`.
pub fn group_ineq_to_semigroup_pair<G: Group>(w: &GroupWord<G::Elem>, group: &G) -> Result<IneqPair<G::Elem>> {
    let (pos, neg) = (w.count(Sign::Pos), w.count(Sign::Neg));
    if pos > 0 && neg > 0 && w.degree() >= 4 {
        return Err(Error::IrreducibleSignature(w.degree()));
    }
    let w = if neg > pos { w.formal_inverse(group) } else { w.clone() };
    let Some(split) = w.signs.iter().position(|&s| s == Sign::Neg) else {
        return Ok(IneqPair {
            lhs: SemigroupWord { coeffs: w.coeffs },
            rhs: SemigroupWord::constant(group.one()),
        });
    };
    debug_assert_eq!(w.count(Sign::Neg), 1);
    // p = a₀ x … x a_split, q = a_{split+1} x … x aₙ
    let p = SemigroupWord { coeffs: w.coeffs[..=split].to_vec() };
    let q = SemigroupWord { coeffs: w.coeffs[split + 1..].to_vec() };
    Ok(IneqPair {
        lhs: q.fuse(&p, group),
        rhs: SemigroupWord { coeffs: vec![group.one(), group.one()] },
    })
}
