//! Explicit points in basic open sets of the semigroup Zariski topology of a
//! permutation group with no algebraicity.
//!
//! Given a normalized pair `(A, B)` the construction grows a finite partial
//! bijection `x` one pair at a time. For each row `i` a separator `mᵢ` with
//! `(mᵢ)a_{i,0} ≠ (mᵢ)b_{i,0}` is fixed, and the rows are evaluated at `mᵢ`
//! as far as `x` allows. Whenever an evaluation gets stuck at a point `q`
//! outside the domain of `x`, `q` is sent to a fresh point chosen away from
//! `(T)P`, where `T` collects every point seen so far and `P` is the finite
//! set of products of at most two entries and their inverses. That choice
//! keeps the partial evaluations of the two sides of every row apart, so any
//! extension of the final `x` lies in `N_{A,B}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::SymOmega;
use crate::error::{Error, Result};
use crate::perm::{FinPerm, PartialBijection, Point};
use crate::ragged::MatrixPair;

/// What the construction needs to know about the ambient permutation group.
pub trait GroupOracle {
    /// Whether `b` extends to an element of the group.
    fn extendable(&self, b: &PartialBijection) -> bool;

    /// A point `a ∉ forbidden` such that `b ∪ {(q, a)}` is extendable, or
    /// `None` if the oracle cannot produce one.
    fn choose_image(&self, b: &PartialBijection, q: Point, forbidden: &BTreeSet<Point>) -> Option<Point>;

    /// A group element extending `b`.
    fn complete(&self, b: &PartialBijection) -> FinPerm;
}

/// The oracle for Sym_ω(ℕ): every finite injective partial map extends.
#[derive(Debug, Clone, Copy, Default)]
pub struct SymOmegaOracle;

pub fn symw_oracle() -> SymOmegaOracle {
    SymOmegaOracle
}

impl GroupOracle for SymOmegaOracle {
    fn extendable(&self, _b: &PartialBijection) -> bool {
        true
    }

    /// Smallest point outside `forbidden` and the image of `b`.
    fn choose_image(&self, b: &PartialBijection, q: Point, forbidden: &BTreeSet<Point>) -> Option<Point> {
        if b.in_domain(q) {
            return None;
        }
        (0..).find(|a| !forbidden.contains(a) && !b.in_image(*a))
    }

    fn complete(&self, b: &PartialBijection) -> FinPerm {
        b.extend()
    }
}

/// For each row, the smallest point where the two leading entries differ.
pub fn pick_separators(pair: &MatrixPair<FinPerm>) -> Result<Vec<Point>> {
    pair.a()
        .rows()
        .iter()
        .zip(pair.b().rows())
        .enumerate()
        .map(|(i, (ra, rb))| {
            let (a0, b0) = (&ra[0], &rb[0]);
            a0.support()
                .union(&b0.support())
                .copied()
                .find(|&m| a0.apply(m) != b0.apply(m))
                .ok_or(Error::NotNormalized(i))
        })
        .collect()
}

/// `P = {1} ∪ C ∪ C⁻¹ ∪ CC ∪ CC⁻¹ ∪ C⁻¹C ∪ C⁻¹C⁻¹` where `C` is the set of
/// entries of the pair.
pub fn forbidden_set(pair: &MatrixPair<FinPerm>) -> BTreeSet<FinPerm> {
    let letters = letters(pair);
    let mut out = BTreeSet::from([FinPerm::identity()]);
    for f in &letters {
        out.insert(f.clone());
        for g in &letters {
            out.insert(f.compose(g));
        }
    }
    out
}

/// `C ∪ C⁻¹`.
fn letters(pair: &MatrixPair<FinPerm>) -> BTreeSet<FinPerm> {
    pair.entries().flat_map(|c| [c.clone(), c.invert()]).collect()
}

/// `(T)P` computed pointwise as `T ∪ (T)D ∪ ((T)D)D` with `D = C ∪ C⁻¹`,
/// which avoids forming the products in `P`.
fn forbidden_points<'a, I>(points: I, letters: &[FinPerm]) -> BTreeSet<Point>
where
    I: IntoIterator<Item = &'a Point>,
{
    let base: BTreeSet<Point> = points.into_iter().copied().collect();
    let step = |from: &BTreeSet<Point>| -> BTreeSet<Point> {
        from.iter().flat_map(|&t| letters.iter().map(move |f| f.apply(t))).collect()
    };
    let once = step(&base);
    let twice = step(&once);
    base.into_iter().chain(once).chain(twice).collect()
}

/// How far a row evaluates at a point under a partial map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialEval {
    /// Largest `p` with `(m) r₀ x r₁ … x r_p` defined.
    pub progress: usize,
    /// That value.
    pub value: Point,
}

/// Evaluates `(m) r₀ x r₁ x … x r_d` as far as `x` is defined.
pub fn partial_eval(row: &[FinPerm], x: &PartialBijection, m: Point) -> PartialEval {
    let mut value = row[0].apply(m);
    for (p, r) in row[1..].iter().enumerate() {
        match x.get(value) {
            Some(y) => value = r.apply(y),
            None => return PartialEval { progress: p, value },
        }
    }
    PartialEval { progress: row.len() - 1, value }
}

/// All defined prefix values `(m) r₀ x … x r_l` for `l = 0, …, progress`.
pub fn prefix_values(row: &[FinPerm], x: &PartialBijection, m: Point) -> Vec<Point> {
    let mut out = vec![row[0].apply(m)];
    for r in &row[1..] {
        match x.get(*out.last().expect("non-empty")) {
            Some(y) => out.push(r.apply(y)),
            None => break,
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// An `A` row was stuck.
    Alpha,
    /// Every `A` row evaluates fully, but a `B` row was stuck.
    Beta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessStep {
    pub case: Side,
    pub row: usize,
    /// The pair `(q, q')` added to the partial map.
    pub added: (Point, Point),
    /// Progress of every `A` row after the step.
    pub progress_a: Vec<usize>,
    /// Progress of every `B` row after the step.
    pub progress_b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTrace {
    pub separators: Vec<Point>,
    /// `|P|`; the set itself is available from [`forbidden_set`].
    pub forbidden_products: usize,
    pub steps: Vec<WitnessStep>,
    /// The partial map at the end of the loop.
    pub partial: PartialBijection,
    #[serde(rename = "final")]
    pub element: FinPerm,
}

impl WitnessTrace {
    /// The partial maps `x₀ ⊆ x₁ ⊆ …` in order, `x₀ = ∅`.
    pub fn partial_maps(&self) -> Vec<PartialBijection> {
        let mut x = PartialBijection::new();
        let mut out = vec![x.clone()];
        for s in &self.steps {
            x.insert(s.added.0, s.added.1).expect("trace pairs are injective");
            out.push(x.clone());
        }
        out
    }
}

/// Builds an element of `N_{A,B}` for a normalized pair.
pub fn construct_witness<O: GroupOracle>(
    pair: &MatrixPair<FinPerm>,
    oracle: &O,
) -> Result<(FinPerm, WitnessTrace)> {
    pair.check_normalized()?;
    let separators = pick_separators(pair)?;
    let letters: Vec<FinPerm> = letters(pair).into_iter().collect();
    let forbidden_products = forbidden_set(pair).len();
    let (rows_a, rows_b) = (pair.a().rows(), pair.b().rows());

    let mut x = PartialBijection::new();
    let mut steps = Vec::new();
    loop {
        let eval_a: Vec<PartialEval> =
            rows_a.iter().zip(&separators).map(|(r, &m)| partial_eval(r, &x, m)).collect();
        let eval_b: Vec<PartialEval> =
            rows_b.iter().zip(&separators).map(|(r, &m)| partial_eval(r, &x, m)).collect();
        if let Some(last) = steps.last_mut() {
            let last: &mut WitnessStep = last;
            last.progress_a = eval_a.iter().map(|e| e.progress).collect();
            last.progress_b = eval_b.iter().map(|e| e.progress).collect();
        }

        let stuck = |evals: &[PartialEval], rows: &[Vec<FinPerm>]| {
            evals.iter().zip(rows).position(|(e, r)| e.progress < r.len() - 1)
        };
        let (case, row, q) = match stuck(&eval_a, rows_a) {
            Some(j) => (Side::Alpha, j, eval_a[j].value),
            None => match stuck(&eval_b, rows_b) {
                Some(j) => (Side::Beta, j, eval_b[j].value),
                None => break,
            },
        };

        let mut t: BTreeSet<Point> = x.domain().chain(x.image()).collect();
        t.insert(q);
        t.extend(separators.iter().copied());
        let forbidden = forbidden_points(&t, &letters);
        let q_image = oracle.choose_image(&x, q, &forbidden).ok_or(Error::OracleExhausted(q))?;
        if forbidden.contains(&q_image) {
            return Err(Error::OracleExhausted(q));
        }
        x.insert(q, q_image).map_err(|_| Error::OracleExhausted(q))?;
        if !oracle.extendable(&x) {
            return Err(Error::OracleExhausted(q));
        }
        steps.push(WitnessStep { case, row, added: (q, q_image), progress_a: vec![], progress_b: vec![] });
    }

    let element = oracle.complete(&x);
    let trace = WitnessTrace { separators, forbidden_products, steps, partial: x, element: element.clone() };
    Ok((element, trace))
}

/// A common point of two basic open sets, found as a witness for the
/// stacked pair.
pub fn intersect_witness<O: GroupOracle>(
    first: &MatrixPair<FinPerm>,
    second: &MatrixPair<FinPerm>,
    oracle: &O,
) -> Result<(FinPerm, WitnessTrace)> {
    construct_witness(&first.stack(second), oracle)
}

/// Whether no point `(y)f` with `y` in the image of `x` and `f ∈ P` is a
/// separator.
pub fn separators_avoid_image(pair: &MatrixPair<FinPerm>, separators: &[Point], x: &PartialBijection) -> bool {
    let letters: Vec<FinPerm> = letters(pair).into_iter().collect();
    let image: Vec<Point> = x.image().collect();
    let reach = forbidden_points(&image, &letters);
    separators.iter().all(|m| !reach.contains(m))
}

/// Whether, for every row, all defined prefix evaluations of the `A` side
/// differ from all defined prefix evaluations of the `B` side.
pub fn prefixes_disjoint(pair: &MatrixPair<FinPerm>, separators: &[Point], x: &PartialBijection) -> bool {
    pair.a().rows().iter().zip(pair.b().rows()).zip(separators).all(|((ra, rb), &m)| {
        let left = prefix_values(ra, x, m);
        let right = prefix_values(rb, x, m);
        left.iter().all(|l| !right.contains(l))
    })
}

/// Checks a witness against the pair by full evaluation in Sym_ω.
pub fn verify_witness(pair: &MatrixPair<FinPerm>, g: &FinPerm) -> bool {
    pair.membership(&SymOmega, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: usize, b: usize) -> FinPerm {
        FinPerm::transposition(a, b)
    }

    fn id() -> FinPerm {
        FinPerm::identity()
    }

    fn perm(pairs: &[(usize, usize)]) -> FinPerm {
        FinPerm::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn commutator_with(c: FinPerm) -> MatrixPair<FinPerm> {
        MatrixPair::from_rows(vec![vec![c.clone(), id()]], vec![vec![id(), c]]).unwrap()
    }

    #[test]
    fn separators_examples() {
        assert_eq!(pick_separators(&commutator_with(t(0, 1))).unwrap(), vec![0]);
        let p = MatrixPair::from_rows(vec![vec![t(3, 4), id()]], vec![vec![t(3, 5), id()]]).unwrap();
        assert_eq!(pick_separators(&p).unwrap(), vec![3]);
        let p = MatrixPair::from_rows(vec![vec![t(3, 4), id()]], vec![vec![t(3, 4)]]).unwrap();
        assert_eq!(pick_separators(&p), Err(Error::NotNormalized(0)));
    }

    #[test]
    fn forbidden_set_examples() {
        let p = MatrixPair::from_rows(vec![vec![id(), id()]], vec![vec![id()]]).unwrap();
        assert_eq!(forbidden_set(&p), BTreeSet::from([id()]));
        assert_eq!(forbidden_set(&commutator_with(t(0, 1))), BTreeSet::from([id(), t(0, 1)]));
        let p = MatrixPair::from_rows(vec![vec![t(0, 1)]], vec![vec![t(1, 2), id()]]).unwrap();
        assert!(forbidden_set(&p).contains(&perm(&[(0, 2), (1, 0), (2, 1)])));
    }

    #[test]
    fn commutator_trace() {
        let p = commutator_with(t(0, 1));
        let (g, trace) = construct_witness(&p, &symw_oracle()).unwrap();
        assert_eq!(trace.separators, vec![0]);
        assert_eq!(trace.steps.len(), 2);
        assert_eq!((trace.steps[0].case, trace.steps[0].added), (Side::Alpha, (1, 2)));
        assert_eq!((trace.steps[1].case, trace.steps[1].added), (Side::Beta, (0, 3)));
        assert_eq!(g, perm(&[(0, 3), (3, 0), (1, 2), (2, 1)]));
        // (0)(0 1)g = 2, (0)g(0 1) = 3
        assert_eq!(g.apply(t(0, 1).apply(0)), 2);
        assert_eq!(t(0, 1).apply(g.apply(0)), 3);
        assert!(verify_witness(&p, &g));
    }

    #[test]
    fn left_translate_row() {
        let sigma = perm(&[(0, 1), (1, 2), (2, 0)]);
        let p = MatrixPair::from_rows(vec![vec![sigma, id()]], vec![vec![id(), id()]]).unwrap();
        let (g, _) = construct_witness(&p, &symw_oracle()).unwrap();
        assert!(verify_witness(&p, &g));
        assert!(verify_witness(&p, &id()));
    }

    #[test]
    fn rejects_unnormalized() {
        let p = MatrixPair::from_rows(vec![vec![t(0, 1)]], vec![vec![t(0, 1)]]).unwrap();
        assert_eq!(construct_witness(&p, &symw_oracle()).unwrap_err(), Error::NotNormalized(0));
    }

    #[test]
    fn intersection_of_two_commutator_sets() {
        let p1 = commutator_with(t(0, 1));
        let p2 = commutator_with(perm(&[(0, 1), (1, 2), (2, 0)]));
        let (g, trace) = intersect_witness(&p1, &p2, &symw_oracle()).unwrap();
        assert!(verify_witness(&p1, &g) && verify_witness(&p2, &g));
        assert!(trace.steps.len() <= p1.stack(&p2).total_degree());
        let (g1, _) = intersect_witness(&p1, &p1, &symw_oracle()).unwrap();
        assert!(verify_witness(&p1, &g1));
    }

    #[test]
    fn oracle_examples() {
        let o = symw_oracle();
        assert_eq!(o.choose_image(&PartialBijection::new(), 5, &BTreeSet::from([0, 1])), Some(2));
        let b = PartialBijection::from_pairs([(1, 2)]).unwrap();
        assert_eq!(o.choose_image(&b, 0, &BTreeSet::from([0, 1, 2])), Some(3));
        assert_eq!(o.choose_image(&b, 1, &BTreeSet::new()), None);
        assert!(o.extendable(&b));
    }

    #[test]
    fn pointwise_forbidden_points_match_products() {
        let p = MatrixPair::from_rows(
            vec![vec![t(0, 1), perm(&[(1, 2), (2, 3), (3, 1)])], vec![t(4, 6)]],
            vec![vec![id(), t(2, 5)], vec![t(5, 6), t(0, 4)]],
        )
        .unwrap();
        let letters: Vec<FinPerm> = letters(&p).into_iter().collect();
        let pset = forbidden_set(&p);
        let t_set: BTreeSet<Point> = [0, 2, 3, 7, 11].into();
        let brute: BTreeSet<Point> = t_set.iter().flat_map(|&x| pset.iter().map(move |f| f.apply(x))).collect();
        assert_eq!(forbidden_points(&t_set, &letters), brute);
    }

    #[test]
    fn trace_counters_grow() {
        let p = commutator_with(perm(&[(0, 1), (1, 2), (2, 0)])).stack(&commutator_with(t(0, 1)));
        let (_, trace) = construct_witness(&p, &symw_oracle()).unwrap();
        let mut prev_a = vec![0; p.num_rows()];
        let mut prev_b = vec![0; p.num_rows()];
        for s in &trace.steps {
            assert!(s.progress_a.iter().zip(&prev_a).all(|(n, o)| n >= o));
            assert!(s.progress_b.iter().zip(&prev_b).all(|(n, o)| n >= o));
            let (now, before) = match s.case {
                Side::Alpha => (s.progress_a[s.row], prev_a[s.row]),
                Side::Beta => (s.progress_b[s.row], prev_b[s.row]),
            };
            assert!(now > before);
            prev_a = s.progress_a.clone();
            prev_b = s.progress_b.clone();
        }
    }
}
