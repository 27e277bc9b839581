//! Normal forms in the countable abelian group `G = ⊕ₖ F/Nₖ`.
//!
//! `F` is free abelian on `x₀, x₁, …` and `Nₖ` is generated by the `k`-th
//! powers of the even-indexed generators, so in `Gₖ = F/Nₖ` even-indexed
//! exponents live in `ℤ/k` while odd-indexed ones stay in `ℤ`. `N₀` is
//! trivial.
//!
//! On the test set `T_m = {xₙNₘ placed at coordinate m}` equations `a·xᵖ = 1`
//! with `p < m` have finitely many solutions, while `xᵐ = 1` holds on every
//! even-indexed point.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Cancellative, Group, Monoid};
use crate::error::{Error, Result};

/// Element of the free abelian group: generator index ↦ non-zero exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeAbelianWord {
    exps: BTreeMap<usize, i64>,
}

impl FreeAbelianWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_exponents<I: IntoIterator<Item = (usize, i64)>>(exps: I) -> Self {
        let mut w = Self::new();
        for (n, e) in exps {
            *w.exps.entry(n).or_default() += e;
        }
        w.exps.retain(|_, e| *e != 0);
        w
    }

    pub fn exponent(&self, n: usize) -> i64 {
        self.exps.get(&n).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<usize, i64> {
        &self.exps
    }
}

/// Element of `Gₖ` in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GkElement {
    k: usize,
    exps: BTreeMap<usize, i64>,
}

/// Brings `w` into normal form in `Gₖ`.
pub fn gk_normalize(k: usize, w: &FreeAbelianWord) -> GkElement {
    GkElement::normalized(k, w.exps.iter().map(|(&n, &e)| (n, e)))
}

fn reduce(k: usize, n: usize, e: i64) -> i64 {
    if k >= 1 && n.is_multiple_of(2) {
        e.rem_euclid(k as i64)
    } else {
        e
    }
}

impl GkElement {
    pub fn normalized<I: IntoIterator<Item = (usize, i64)>>(k: usize, exps: I) -> Self {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (n, e) in exps {
            *acc.entry(n).or_default() += e;
        }
        let exps = acc
            .into_iter()
            .map(|(n, e)| (n, reduce(k, n, e)))
            .filter(|&(_, e)| e != 0)
            .collect();
        Self { k, exps }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn exponent(&self, n: usize) -> i64 {
        self.exps.get(&n).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<usize, i64> {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }
}

/// A finitely supported element of `⊕ₖ Gₖ`; only non-identity coordinates
/// are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GElementRepr", into = "GElementRepr")]
pub struct GElement {
    components: BTreeMap<usize, GkElement>,
}

#[derive(Serialize, Deserialize)]
struct GElementRepr {
    components: Vec<(usize, Vec<(usize, i64)>)>,
}

impl TryFrom<GElementRepr> for GElement {
    type Error = String;

    fn try_from(r: GElementRepr) -> Result<Self, String> {
        let mut seen = std::collections::BTreeSet::new();
        for (k, _) in &r.components {
            if !seen.insert(*k) {
                return Err(format!("component {k} listed twice"));
            }
        }
        Ok(GElement::from_components(r.components))
    }
}

impl From<GElement> for GElementRepr {
    fn from(g: GElement) -> Self {
        GElementRepr {
            components: g
                .components
                .into_iter()
                .map(|(k, c)| (k, c.exps.into_iter().collect()))
                .collect(),
        }
    }
}

impl GElement {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds an element from `(k, [(n, e), …])` lists, normalizing each
    /// coordinate.
    pub fn from_components<I, J>(components: I) -> Self
    where
        I: IntoIterator<Item = (usize, J)>,
        J: IntoIterator<Item = (usize, i64)>,
    {
        let mut g = Self::identity();
        for (k, exps) in components {
            let c = GkElement::normalized(k, exps);
            g = g.mul(&Self::single(c));
        }
        g
    }

    /// The element that is `c` at coordinate `c.k()` and trivial elsewhere.
    pub fn single(c: GkElement) -> Self {
        let mut components = BTreeMap::new();
        if !c.is_identity() {
            components.insert(c.k, c);
        }
        Self { components }
    }

    pub fn component(&self, k: usize) -> Option<&GkElement> {
        self.components.get(&k)
    }

    pub fn components(&self) -> impl Iterator<Item = &GkElement> {
        self.components.values()
    }

    pub fn is_identity(&self) -> bool {
        self.components.is_empty()
    }

    pub fn mul(&self, other: &GElement) -> GElement {
        let mut components = self.components.clone();
        for (&k, c) in &other.components {
            let merged = match components.get(&k) {
                Some(mine) => GkElement::normalized(k, mine.exps.iter().chain(&c.exps).map(|(&n, &e)| (n, e))),
                None => c.clone(),
            };
            if merged.is_identity() {
                components.remove(&k);
            } else {
                components.insert(k, merged);
            }
        }
        GElement { components }
    }

    pub fn inv(&self) -> GElement {
        let components = self
            .components
            .iter()
            .map(|(&k, c)| (k, GkElement::normalized(k, c.exps.iter().map(|(&n, &e)| (n, -e)))))
            .collect();
        GElement { components }
    }

    /// `self^e` for any integer `e`.
    pub fn pow(&self, e: i64) -> GElement {
        let components = self
            .components
            .iter()
            .map(|(&k, c)| (k, GkElement::normalized(k, c.exps.iter().map(|(&n, &x)| (n, x * e)))))
            .filter(|(_, c)| !c.is_identity())
            .collect();
        GElement { components }
    }
}

pub fn g_mul(u: &GElement, v: &GElement) -> GElement {
    u.mul(v)
}

pub fn g_inv(u: &GElement) -> GElement {
    u.inv()
}

pub fn g_eq(u: &GElement, v: &GElement) -> bool {
    u == v
}

/// `G` as a structure object.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SeparatingGroup;

impl Monoid for SeparatingGroup {
    type Elem = GElement;

    fn one(&self) -> GElement {
        GElement::identity()
    }

    fn mul(&self, a: &GElement, b: &GElement) -> GElement {
        a.mul(b)
    }

    fn is_one(&self, a: &GElement) -> bool {
        a.is_identity()
    }

    fn pow(&self, a: &GElement, n: u64) -> GElement {
        a.pow(n as i64)
    }
}

impl Cancellative for SeparatingGroup {}

impl Group for SeparatingGroup {
    fn inv(&self, a: &GElement) -> GElement {
        a.inv()
    }
}

/// The point of `T_m` equal to `xₙNₘ` at coordinate `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TmPoint {
    pub m: usize,
    pub n: usize,
}

impl TmPoint {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroComponent);
        }
        Ok(Self { m, n })
    }

    pub fn element(&self) -> GElement {
        GElement::single(GkElement::normalized(self.m, [(self.n, 1)]))
    }
}

/// `a·xᵖ`.
pub fn eval_ax_p(a: &GElement, p: u64, x: &GElement) -> GElement {
    a.mul(&x.pow(p as i64))
}

/// Indices `n ≤ bound` with `a·(xₙNₘ)ᵖ = 1`, read off from the exponents of
/// `a` instead of evaluating.
///
/// `a` has to vanish off coordinate `m`; writing `h` for its coordinate `m`,
/// an odd `n` solves iff `h = xₙ^{-p}` exactly, and an even `n` solves iff
/// `h` is supported on `{n}` with `h(n) + p ≡ 0 (mod m)`.
pub fn solve_on_tm(a: &GElement, p: u64, m: usize, bound: usize) -> Result<Vec<usize>> {
    if m == 0 {
        return Err(Error::ZeroComponent);
    }
    if a.components.keys().any(|&k| k != m) {
        return Ok(Vec::new());
    }
    let h = a.component(m).map(|c| &c.exps);
    let exp = |n: usize| h.and_then(|h| h.get(&n)).copied().unwrap_or(0);
    let support_within = |n: usize| h.is_none_or(|h| h.keys().all(|&k| k == n));
    let p = p as i64;
    Ok((0..=bound)
        .filter(|&n| {
            support_within(n)
                && if n % 2 == 1 {
                    exp(n) + p == 0
                } else {
                    (exp(n) + p).rem_euclid(m as i64) == 0
                }
        })
        .collect())
}

/// Indices `n ≤ bound` with `a·(xₙNₘ)ᵖ = 1`, found by evaluating at every
/// point.
pub fn solve_on_tm_brute(a: &GElement, p: u64, m: usize, bound: usize) -> Result<Vec<usize>> {
    if m == 0 {
        return Err(Error::ZeroComponent);
    }
    Ok((0..=bound)
        .filter(|&n| eval_ax_p(a, p, &TmPoint { m, n }.element()).is_identity())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "indices")]
pub enum SolutionBound {
    /// Every solution on `T_m` has one of these generator indices.
    FiniteCandidates(Vec<usize>),
    /// Every even index is a solution.
    AllEven,
}

/// A finite set of indices containing every solution of `a·xᵖ = 1` on
/// `T_m`, unless the equation is `xᵖ = 1` with `m | p`, which holds on all
/// even-indexed points.
pub fn finiteness_bound(a: &GElement, p: u64, m: usize) -> Result<SolutionBound> {
    if m == 0 {
        return Err(Error::ZeroComponent);
    }
    if a.is_identity() && p.is_multiple_of(m as u64) {
        return Ok(SolutionBound::AllEven);
    }
    let letters = a.component(m).map(|c| c.exps.keys().copied().collect()).unwrap_or_default();
    Ok(SolutionBound::FiniteCandidates(letters))
}

/// Rewrites `a·xⁿ` with a negative exponent as `a⁻¹·x^{|n|}`; both are
/// different from `1` at exactly the same points.
pub fn commutative_reduce<G: Group>(group: &G, a: &G::Elem, n: i64) -> (G::Elem, u64) {
    if n >= 0 {
        (a.clone(), n as u64)
    } else {
        (group.inv(a), n.unsigned_abs())
    }
}
