//! Exhaustive ground truth on small finite groups.
//!
//! Groups are Cayley tables over `0..order`, subsets of the carrier are
//! bitmasks, and the subbasic families of the bounded Zariski topologies are
//! enumerated outright.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Cancellative, Group, Monoid};
use crate::error::{Error, Result};
use crate::words::{group_ineq_to_semigroup_pair, GroupWord, Sign};

/// Largest carrier a [`SetFamily`] can describe.
pub const MAX_ORDER: usize = 24;
/// Limit on the number of polynomials enumerated per side.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;
/// Limit on the number of open sets materialized by [`topology_close`].
pub const TOPOLOGY_LIMIT: usize = 1 << 20;

pub const BUILTIN_NAMES: [&str; 7] = ["Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S4"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    id: usize,
}

impl FiniteGroupTable {
    /// Validates a Cayley table (closure, associativity, identity, inverses).
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let order = table.len();
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidTable(format!("order {order} outside 1..={MAX_ORDER}")));
        }
        if table.iter().any(|row| row.len() != order || row.iter().any(|&v| v >= order)) {
            return Err(Error::InvalidTable("table is not a square over 0..order".into()));
        }
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        let at = |a: usize, b: usize| mul[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::InvalidTable(format!("({a}{b}){c} ≠ {a}({b}{c})")));
                    }
                }
            }
        }
        let id = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::InvalidTable("no identity".into()))?;
        let inv = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == id && at(b, a) == id)
                    .ok_or_else(|| Error::InvalidTable(format!("{a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { name: name.into(), order, mul, inv, id })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(format!("Z{n}"), table)
    }

    /// `S_n` on the permutations of `0..n` in lexicographic order (index 0
    /// is the identity), composed left to right.
    pub fn symmetric(n: usize) -> Result<Self> {
        let perms = lexicographic_permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&p.iter().map(|&i| q[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        Self::new(format!("S{n}"), table)
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "Z2" => Self::cyclic(2),
            "Z3" => Self::cyclic(3),
            "Z4" => Self::cyclic(4),
            "Z5" => Self::cyclic(5),
            "Z6" => Self::cyclic(6),
            "S3" => Self::symmetric(3),
            "S4" => Self::symmetric(4),
            other => Err(Error::UnknownGroup(other.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.id
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(&a, &b) == self.mul(&b, &a)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn full_mask(&self) -> u32 {
        full_mask(self.order)
    }
}

fn full_mask(order: usize) -> u32 {
    if order == 32 {
        u32::MAX
    } else {
        (1u32 << order) - 1
    }
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

impl Monoid for FiniteGroupTable {
    type Elem = usize;

    fn one(&self) -> usize {
        self.id
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.mul[a * self.order + b]
    }
}

impl Cancellative for FiniteGroupTable {}

impl Group for FiniteGroupTable {
    fn inv(&self, a: &usize) -> usize {
        self.inv[*a]
    }
}

/// A deduplicated collection of subsets of `0..order`, each a bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    order: usize,
    sets: BTreeSet<u32>,
}

impl SetFamily {
    pub fn new(order: usize, sets: impl IntoIterator<Item = u32>) -> Self {
        Self { order, sets: sets.into_iter().collect() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn sets(&self) -> &BTreeSet<u32> {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: u32) -> bool {
        self.sets.contains(&set)
    }
}

/// Value tables of one-variable functions on the carrier.
type FunctionTable = Vec<u8>;

fn guard(order: usize, degree: usize, sign_patterns: bool) -> Result<()> {
    let mut size = (order as u128).saturating_pow(degree as u32 + 1);
    if sign_patterns {
        size = size.saturating_mul(1u128 << degree.min(64));
    }
    if size > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { size, limit: ENUMERATION_LIMIT });
    }
    Ok(())
}

fn mask_where(order: usize, mut pred: impl FnMut(usize) -> bool) -> u32 {
    (0..order).filter(|&x| pred(x)).fold(0, |m, x| m | (1 << x))
}

/// Distinct functions `x ↦ a₀ x a₁ … x aₙ` with `n ≤ degree`.
fn semigroup_functions(g: &FiniteGroupTable, degree: usize) -> BTreeSet<FunctionTable> {
    let mut level: BTreeSet<FunctionTable> = g.elements().map(|c| vec![c as u8; g.order]).collect();
    let mut all = level.clone();
    for _ in 0..degree {
        level = extend_level(g, &level, &[Sign::Pos]);
        all.extend(level.iter().cloned());
    }
    all
}

/// Distinct functions `x ↦ x^{ε₁} a₁ … x^{εₙ} aₙ` with `1 ≤ n ≤ degree`.
fn leading_one_functions(g: &FiniteGroupTable, degree: usize, signs: &[Sign]) -> BTreeSet<FunctionTable> {
    let mut level: BTreeSet<FunctionTable> = BTreeSet::from([vec![g.id as u8; g.order]]);
    let mut all = BTreeSet::new();
    for _ in 0..degree {
        level = extend_level(g, &level, signs);
        all.extend(level.iter().cloned());
    }
    all
}

/// `{ x ↦ f(x) x^ε c }` over all `f` in `level`, signs `ε` and coefficients `c`.
fn extend_level(g: &FiniteGroupTable, level: &BTreeSet<FunctionTable>, signs: &[Sign]) -> BTreeSet<FunctionTable> {
    let mut next = BTreeSet::new();
    for f in level {
        for &s in signs {
            let fx: Vec<usize> = g
                .elements()
                .map(|x| {
                    let xs = if s == Sign::Pos { x } else { g.inv(&x) };
                    g.mul(&(f[x] as usize), &xs)
                })
                .collect();
            for c in g.elements() {
                next.insert(fx.iter().map(|&v| g.mul(&v, &c) as u8).collect());
            }
        }
    }
    next
}

/// All sets `{x : f(x) ≠ g(x)}` for semigroup polynomials `f, g` of degree
/// at most `degree`.
///
/// Multiplying both sides by constants on the left and right does not change
/// the set, so `g` is taken with first and last coefficient `1`.
pub fn semigroup_family(g: &FiniteGroupTable, degree: usize) -> Result<SetFamily> {
    guard(g.order, degree, false)?;
    let all = semigroup_functions(g, degree);
    let one = vec![g.id as u8; g.order];
    let mut normalized = BTreeSet::from([one.clone()]);
    if degree > 0 {
        let mut heads = leading_one_functions(g, degree - 1, &[Sign::Pos]);
        heads.insert(one);
        normalized.extend(heads.iter().map(|h| (0..g.order).map(|x| g.mul(&(h[x] as usize), &x) as u8).collect()));
    }
    let mut sets = BTreeSet::new();
    for f in &all {
        for h in &normalized {
            sets.insert(mask_where(g.order, |x| f[x] != h[x]));
        }
    }
    Ok(SetFamily { order: g.order, sets })
}

/// All sets `{x : w(x) ≠ 1}` for group polynomials `w` of degree at most
/// `degree`.
///
/// Conjugating by the leading coefficient does not change the set, so words
/// of positive degree are taken with leading coefficient `1`.
pub fn group_family(g: &FiniteGroupTable, degree: usize) -> Result<SetFamily> {
    guard(g.order, degree, true)?;
    let mut sets: BTreeSet<u32> = g.elements().map(|c| if c == g.id { 0 } else { g.full_mask() }).collect();
    for h in leading_one_functions(g, degree, &[Sign::Pos, Sign::Neg]) {
        sets.insert(mask_where(g.order, |x| h[x] as usize != g.id));
    }
    Ok(SetFamily { order: g.order, sets })
}

/// The topology generated by `family` as a subbasis, listed in full.
///
/// On a finite carrier every point `x` has a smallest open neighbourhood
/// `U_x`, the intersection of the subbasic sets containing it; the open sets
/// are exactly the unions of these.
pub fn topology_close(family: &SetFamily) -> Result<SetFamily> {
    let order = family.order;
    if order > MAX_ORDER {
        return Err(Error::TooLarge { size: order as u128, limit: MAX_ORDER as u128 });
    }
    let full = full_mask(order);
    let neighbourhoods = minimal_neighbourhoods(family);
    let mut opens = BTreeSet::from([0u32, full]);
    let mut frontier = vec![0u32];
    while let Some(o) = frontier.pop() {
        for &u in &neighbourhoods {
            let next = o | u;
            if opens.insert(next) {
                if opens.len() > TOPOLOGY_LIMIT {
                    return Err(Error::TooLarge { size: opens.len() as u128, limit: TOPOLOGY_LIMIT as u128 });
                }
                frontier.push(next);
            }
        }
    }
    Ok(SetFamily { order, sets: opens })
}

/// `U_x` for every point: the intersection of the sets of `family`
/// containing `x` (the whole carrier if there are none).
pub fn minimal_neighbourhoods(family: &SetFamily) -> Vec<u32> {
    let full = full_mask(family.order);
    (0..family.order)
        .map(|x| family.sets.iter().filter(|&&s| s & (1 << x) != 0).fold(full, |acc, &s| acc & s))
        .collect()
}

/// Whether the topology generated by `coarse` is contained in the one
/// generated by `fine`, decided on minimal neighbourhoods without listing
/// open sets.
pub fn topology_subset(coarse: &SetFamily, fine: &SetFamily) -> Result<bool> {
    if coarse.order != fine.order {
        return Err(Error::CarrierMismatch(coarse.order, fine.order));
    }
    let (c, f) = (minimal_neighbourhoods(coarse), minimal_neighbourhoods(fine));
    Ok(c.iter().zip(&f).all(|(&u, &v)| v & !u == 0))
}

/// Whether every set of `small` belongs to `large`.
pub fn family_subset(small: &SetFamily, large: &SetFamily) -> Result<bool> {
    if small.order != large.order {
        return Err(Error::CarrierMismatch(small.order, large.order));
    }
    Ok(small.sets.is_subset(&large.sets))
}

/// Outcome of checking the degree-preserving reduction of group inequations
/// on every word of bounded degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCheck {
    pub words: u64,
    pub points: u64,
    pub mismatches: Vec<GroupWord<usize>>,
}

/// Compares `{x : w(x) ≠ 1}` with the inequality set of the reduced pair for
/// every group word over `g` of degree at most `degree` (every coefficient
/// tuple, every sign pattern).
pub fn check_reduction(g: &FiniteGroupTable, degree: usize) -> Result<ReductionCheck> {
    guard(g.order, degree, true)?;
    let mut out = ReductionCheck { words: 0, points: 0, mismatches: Vec::new() };
    for n in 0..=degree {
        for signs in 0u32..(1 << n) {
            let signs: Vec<Sign> =
                (0..n).map(|i| if signs & (1 << i) != 0 { Sign::Neg } else { Sign::Pos }).collect();
            let mut coeffs = vec![0usize; n + 1];
            loop {
                let w = GroupWord::new(coeffs.clone(), signs.clone()).expect("well-formed word");
                let pair = group_ineq_to_semigroup_pair(&w, g)?;
                out.words += 1;
                for x in g.elements() {
                    out.points += 1;
                    if (w.eval(g, &x) != g.id) != pair.holds(g, &x) {
                        out.mismatches.push(w);
                        break;
                    }
                }
                if !odometer(&mut coeffs, g.order) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Advances `digits` as a base-`base` counter; false after the last value.
fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}
