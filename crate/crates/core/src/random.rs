//! Seeded generators for the property checks and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::SymOmega;
use crate::perm::FinPerm;
use crate::ragged::{normalize, MatrixPair, NormalForm};
use crate::sepgroup::{GElement, GkElement};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform permutation of `{0, …, support - 1}`.
pub fn random_perm<R: Rng>(rng: &mut R, support: usize) -> FinPerm {
    let mut image: Vec<usize> = (0..support).collect();
    image.shuffle(rng);
    FinPerm::from_pairs(image.into_iter().enumerate()).expect("a shuffle is a bijection")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairShape {
    pub max_rows: usize,
    pub max_degree: usize,
    pub support: usize,
}

impl Default for PairShape {
    fn default() -> Self {
        Self { max_rows: 4, max_degree: 3, support: 8 }
    }
}

/// Random pair of ragged matrices over `Sym(ω)`.
///
/// Half the entries come from a small palette (identity plus three fixed
/// permutations) so that leading entries collide often enough to exercise
/// cancellation.
pub fn random_pair<R: Rng>(rng: &mut R, shape: PairShape) -> MatrixPair<FinPerm> {
    let mut palette = vec![FinPerm::identity()];
    palette.extend((0..3).map(|_| random_perm(rng, shape.support)));
    let rows = rng.random_range(1..=shape.max_rows.max(1));
    let side = |rng: &mut R| -> Vec<Vec<FinPerm>> {
        (0..rows)
            .map(|_| {
                let deg = rng.random_range(0..=shape.max_degree);
                (0..=deg)
                    .map(|_| {
                        if rng.random_bool(0.5) {
                            palette[rng.random_range(0..palette.len())].clone()
                        } else {
                            random_perm(rng, shape.support)
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let a = side(rng);
    let b = side(rng);
    MatrixPair::from_rows(a, b).expect("row counts agree")
}

/// Random pair that normalizes (with adjuster `(0 1)`) to a proper pair;
/// returns the normalized pair.
pub fn random_proper_pair<R: Rng>(rng: &mut R, shape: PairShape) -> MatrixPair<FinPerm> {
    let adjuster = FinPerm::transposition(0, 1);
    loop {
        let pair = random_pair(rng, shape);
        if let Ok(NormalForm::Proper(p)) = normalize(&pair, &SymOmega, &adjuster) {
            return p;
        }
    }
}

/// Random element of `G` with components `k ≤ 6`, generators `n ≤ 20` and
/// exponents in `[-5, 5]`.
///
/// With probability one half the element is instead `xₙ^{-p}` (odd `n`) or
/// a multiple-of-`m` shift of it (even `n`) at coordinate `m`, so that the
/// equation `a·xᵖ = 1` has solutions on `T_m`.
pub fn random_g_element<R: Rng>(rng: &mut R, m: usize, p: u64) -> GElement {
    if rng.random_bool(0.5) {
        let n = rng.random_range(0..=20usize);
        let e = if n % 2 == 1 {
            -(p as i64)
        } else {
            -(p as i64) + m as i64 * rng.random_range(-2..=2i64)
        };
        return GElement::single(GkElement::normalized(m, [(n, e)]));
    }
    let count = rng.random_range(0..=3usize);
    GElement::from_components((0..count).map(|_| {
        let k = rng.random_range(0..=6usize);
        let letters = rng.random_range(1..=3usize);
        let exps: Vec<(usize, i64)> =
            (0..letters).map(|_| (rng.random_range(0..=20usize), rng.random_range(-5..=5i64))).collect();
        (k, exps)
    }))
}
