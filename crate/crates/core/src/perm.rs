//! Finitely supported permutations of the naturals and finite partial bijections.
//!
//! Functions are written on the right of their arguments and composed left to
//! right: `p.compose(&q)` first applies `p`, then `q`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the countable set being permuted.
pub type Point = usize;

/// A permutation of ℕ moving only finitely many points.
///
/// Only moved points are stored, sorted by point, so structural equality is
/// equality of permutations.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(Point, Point)>", into = "Vec<(Point, Point)>")]
pub struct FinPerm {
    moved: Vec<(Point, Point)>,
}

impl FinPerm {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a permutation from `(point, image)` pairs. Fixed points may be
    /// listed and are dropped; the pairs must describe a bijection of the
    /// listed points onto themselves.
    pub fn from_pairs<I: IntoIterator<Item = (Point, Point)>>(pairs: I) -> Result<Self> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateDomain(w[0].0));
            }
        }
        let mut images: Vec<Point> = pairs.iter().map(|&(_, y)| y).collect();
        images.sort_unstable();
        for w in images.windows(2) {
            if w[0] == w[1] {
                return Err(Error::NotInjective(w[0]));
            }
        }
        if pairs.iter().map(|&(x, _)| x).ne(images.iter().copied()) {
            return Err(Error::NotAPermutation);
        }
        pairs.retain(|&(x, y)| x != y);
        Ok(Self { moved: pairs })
    }

    /// The transposition swapping `a` and `b` (identity if they coincide).
    pub fn transposition(a: Point, b: Point) -> Self {
        if a == b {
            return Self::identity();
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Self { moved: vec![(lo, hi), (hi, lo)] }
    }

    /// The cycle `points[0] ↦ points[1] ↦ … ↦ points[0]`.
    pub fn cycle(points: &[Point]) -> Result<Self> {
        let n = points.len();
        Self::from_pairs((0..n).map(|i| (points[i], points[(i + 1) % n])))
    }

    /// `(x)p`.
    pub fn apply(&self, x: Point) -> Point {
        match self.moved.binary_search_by_key(&x, |&(p, _)| p) {
            Ok(i) => self.moved[i].1,
            Err(_) => x,
        }
    }

    /// The product `pq`: first `self`, then `other`.
    pub fn compose(&self, other: &FinPerm) -> FinPerm {
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        let mut moved = Vec::with_capacity(self.moved.len() + other.moved.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.moved, &other.moved);
        while i < a.len() || j < b.len() {
            let x = match (a.get(i), b.get(j)) {
                (Some(&(p, _)), Some(&(q, _))) if p == q => {
                    i += 1;
                    j += 1;
                    p
                }
                (Some(&(p, _)), Some(&(q, _))) if p < q => {
                    i += 1;
                    p
                }
                (Some(&(p, _)), None) => {
                    i += 1;
                    p
                }
                (_, Some(&(q, _))) => {
                    j += 1;
                    q
                }
                (None, None) => unreachable!(),
            };
            let y = other.apply(self.apply(x));
            if y != x {
                moved.push((x, y));
            }
        }
        FinPerm { moved }
    }

    pub fn invert(&self) -> FinPerm {
        let mut moved: Vec<_> = self.moved.iter().map(|&(x, y)| (y, x)).collect();
        moved.sort_unstable();
        FinPerm { moved }
    }

    /// The points moved by the permutation, in increasing order.
    pub fn support(&self) -> BTreeSet<Point> {
        self.moved.iter().map(|&(x, _)| x).collect()
    }

    pub fn support_len(&self) -> usize {
        self.moved.len()
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }

    /// Moved points with their images, sorted by point.
    pub fn pairs(&self) -> &[(Point, Point)] {
        &self.moved
    }

    /// Disjoint cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &(start, _) in &self.moved {
            if !seen.insert(start) {
                continue;
            }
            let mut cycle = vec![start];
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl TryFrom<Vec<(Point, Point)>> for FinPerm {
    type Error = Error;

    fn try_from(pairs: Vec<(Point, Point)>) -> Result<Self> {
        Self::from_pairs(pairs)
    }
}

impl From<FinPerm> for Vec<(Point, Point)> {
    fn from(p: FinPerm) -> Self {
        p.moved
    }
}

impl fmt::Display for FinPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FinPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite injective partial map on ℕ.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(Point, Point)>", into = "Vec<(Point, Point)>")]
pub struct PartialBijection {
    forward: BTreeMap<Point, Point>,
    backward: BTreeMap<Point, Point>,
}

impl PartialBijection {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Point, Point)>>(pairs: I) -> Result<Self> {
        let mut b = Self::new();
        for (x, y) in pairs {
            b.insert(x, y)?;
        }
        Ok(b)
    }

    /// Adds `x ↦ y`, keeping the map injective.
    pub fn insert(&mut self, x: Point, y: Point) -> Result<()> {
        if self.forward.contains_key(&x) {
            return Err(Error::DuplicateDomain(x));
        }
        if self.backward.contains_key(&y) {
            return Err(Error::NotInjective(y));
        }
        self.forward.insert(x, y);
        self.backward.insert(y, x);
        Ok(())
    }

    pub fn get(&self, x: Point) -> Option<Point> {
        self.forward.get(&x).copied()
    }

    pub fn preimage(&self, y: Point) -> Option<Point> {
        self.backward.get(&y).copied()
    }

    pub fn in_domain(&self, x: Point) -> bool {
        self.forward.contains_key(&x)
    }

    pub fn in_image(&self, y: Point) -> bool {
        self.backward.contains_key(&y)
    }

    pub fn domain(&self) -> impl Iterator<Item = Point> + '_ {
        self.forward.keys().copied()
    }

    pub fn image(&self) -> impl Iterator<Item = Point> + '_ {
        self.backward.keys().copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.forward.iter().map(|(&x, &y)| (x, y))
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Whether `g` agrees with this map on its whole domain.
    pub fn is_restriction_of(&self, g: &FinPerm) -> bool {
        self.pairs().all(|(x, y)| g.apply(x) == y)
    }

    /// Extends to a permutation by closing every maximal chain
    /// `x₀ ↦ x₁ ↦ … ↦ x_r` (with `x₀` outside the image and `x_r` outside the
    /// domain) with `x_r ↦ x₀`. Cycles already present are kept as they are.
    pub fn extend(&self) -> FinPerm {
        let mut pairs: Vec<(Point, Point)> = self.pairs().collect();
        for start in self.domain().filter(|&x| !self.in_image(x)) {
            let mut end = start;
            while let Some(next) = self.get(end) {
                end = next;
            }
            pairs.push((end, start));
        }
        FinPerm::from_pairs(pairs).expect("chain closure yields a permutation")
    }
}

impl TryFrom<Vec<(Point, Point)>> for PartialBijection {
    type Error = Error;

    fn try_from(pairs: Vec<(Point, Point)>) -> Result<Self> {
        Self::from_pairs(pairs)
    }
}

impl From<PartialBijection> for Vec<(Point, Point)> {
    fn from(b: PartialBijection) -> Self {
        b.forward.into_iter().collect()
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.forward.iter()).finish()
    }
}
