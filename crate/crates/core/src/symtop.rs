//! Finite checks behind the pointwise-convergence topology on Sym(X).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{FinPerm, Point};

/// `U_{x,y} = {f : (x)f = y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubbasicSet {
    pub x: Point,
    pub y: Point,
}

impl SubbasicSet {
    pub fn contains(&self, f: &FinPerm) -> bool {
        f.apply(self.x) == self.y
    }
}

pub fn in_u(s: SubbasicSet, f: &FinPerm) -> bool {
    s.contains(f)
}

/// The transposition `φ_{x,y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Transposition {
    x: Point,
    y: Point,
}

impl Transposition {
    pub fn new(x: Point, y: Point) -> Result<Self> {
        if x == y {
            return Err(Error::InvalidPair(x));
        }
        Ok(Self { x, y })
    }

    pub fn to_perm(&self) -> FinPerm {
        FinPerm::transposition(self.x, self.y)
    }
}

/// Whether `φ_{x,y}` commutes with `f`.
pub fn stab_by_commutation(f: &FinPerm, x: Point, y: Point) -> Result<bool> {
    let phi = Transposition::new(x, y)?.to_perm();
    Ok(phi.compose(f) == f.compose(&phi))
}

/// Whether `f` maps `{x, y}` onto itself.
pub fn stabilizes_pair(f: &FinPerm, x: Point, y: Point) -> bool {
    let (fx, fy) = (f.apply(x), f.apply(y));
    (fx == x && fy == y) || (fx == y && fy == x)
}

/// Writes `g` as `φ f h⁻¹` with `φ` and `h` fixing `x`, for `f` and `g`
/// both moving `x`.
///
/// `h` is the transposition of `(x)g` and `(x)f` (or the identity when they
/// agree), and `φ = g h f⁻¹`.
pub fn maximal_decompose(f: &FinPerm, g: &FinPerm, x: Point) -> Result<(FinPerm, FinPerm)> {
    let (fx, gx) = (f.apply(x), g.apply(x));
    if fx == x {
        return Err(Error::Fixed(x));
    }
    if gx == x {
        return Err(Error::Fixed(x));
    }
    let h = FinPerm::transposition(gx, fx);
    let phi = g.compose(&h).compose(&f.invert());
    Ok((phi, h))
}
