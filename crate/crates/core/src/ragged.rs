//! Ragged matrices and the basic open sets `N_{A,B}` of the semigroup
//! Zariski topology.
//!
//! Row `i` of a ragged matrix `R` with entries `r_{i,0}, …, r_{i,d}` stands
//! for the polynomial `r_{i,0} x r_{i,1} … x r_{i,d}`. A pair `(A, B)` with
//! the same number of rows denotes the set of `x` at which `Ax` and `Bx`
//! differ in every row.

use serde::{Deserialize, Serialize};

use crate::algebra::{Cancellative, Monoid};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<E>>", into = "Vec<Vec<E>>")]
#[serde(bound(serialize = "E: Serialize + Clone", deserialize = "E: Deserialize<'de>"))]
pub struct RaggedMatrix<E> {
    rows: Vec<Vec<E>>,
}

impl<E> RaggedMatrix<E> {
    pub fn new(rows: Vec<Vec<E>>) -> Result<Self> {
        if rows.is_empty() || rows.iter().any(Vec::is_empty) {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Degree of the polynomial in row `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].len() - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.len() - 1)
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.rows.iter().flatten()
    }
}

impl<E: Clone> RaggedMatrix<E> {
    /// `R_i(x) = r_{i,0} x r_{i,1} … x r_{i,d}`.
    pub fn row_eval<M: Monoid<Elem = E>>(&self, monoid: &M, i: usize, x: &E) -> Result<E> {
        let row = self
            .rows
            .get(i)
            .ok_or(Error::IndexOutOfRange { index: i, rows: self.rows.len() })?;
        Ok(eval_row(monoid, row, x))
    }
}

pub(crate) fn eval_row<M: Monoid>(monoid: &M, row: &[M::Elem], x: &M::Elem) -> M::Elem {
    let mut acc = row[0].clone();
    for c in &row[1..] {
        acc = monoid.mul(&acc, x);
        acc = monoid.mul(&acc, c);
    }
    acc
}

impl<E> TryFrom<Vec<Vec<E>>> for RaggedMatrix<E> {
    type Error = Error;

    fn try_from(rows: Vec<Vec<E>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl<E> From<RaggedMatrix<E>> for Vec<Vec<E>> {
    fn from(m: RaggedMatrix<E>) -> Self {
        m.rows
    }
}

/// Two ragged matrices with the same number of rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixPairRepr<E>")]
#[serde(bound(serialize = "E: Serialize + Clone", deserialize = "E: Deserialize<'de>"))]
pub struct MatrixPair<E> {
    #[serde(rename = "A")]
    a: RaggedMatrix<E>,
    #[serde(rename = "B")]
    b: RaggedMatrix<E>,
}

#[derive(Deserialize)]
#[serde(bound(deserialize = "E: Deserialize<'de>"))]
struct MatrixPairRepr<E> {
    #[serde(rename = "A")]
    a: RaggedMatrix<E>,
    #[serde(rename = "B")]
    b: RaggedMatrix<E>,
}

impl<E> TryFrom<MatrixPairRepr<E>> for MatrixPair<E> {
    type Error = Error;

    fn try_from(r: MatrixPairRepr<E>) -> Result<Self> {
        Self::new(r.a, r.b)
    }
}

impl<E> MatrixPair<E> {
    pub fn new(a: RaggedMatrix<E>, b: RaggedMatrix<E>) -> Result<Self> {
        if a.num_rows() != b.num_rows() {
            return Err(Error::RowMismatch { a: a.num_rows(), b: b.num_rows() });
        }
        Ok(Self { a, b })
    }

    pub fn from_rows(a: Vec<Vec<E>>, b: Vec<Vec<E>>) -> Result<Self> {
        Self::new(RaggedMatrix::new(a)?, RaggedMatrix::new(b)?)
    }

    pub fn a(&self) -> &RaggedMatrix<E> {
        &self.a
    }

    pub fn b(&self) -> &RaggedMatrix<E> {
        &self.b
    }

    pub fn num_rows(&self) -> usize {
        self.a.num_rows()
    }

    /// `(k, d_{A,0}, …, d_{A,k-1}, d_{B,0}, …, d_{B,k-1})`, compared
    /// lexicographically.
    pub fn signature(&self) -> Vec<usize> {
        signature_of(&self.a.rows, &self.b.rows)
    }

    /// `Σᵢ (d_{A,i} + d_{B,i})`.
    pub fn total_degree(&self) -> usize {
        self.a.degrees().chain(self.b.degrees()).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.a.entries().chain(self.b.entries())
    }
}

impl<E: PartialEq> MatrixPair<E> {
    /// Checks that every row has positive degree on at least one side and
    /// distinct leading entries; reports the first offending row.
    pub fn check_normalized(&self) -> Result<()> {
        for (i, (ra, rb)) in self.a.rows.iter().zip(&self.b.rows).enumerate() {
            if (ra.len() == 1 && rb.len() == 1) || ra[0] == rb[0] {
                return Err(Error::NotNormalized(i));
            }
        }
        Ok(())
    }

    pub fn is_normalized(&self) -> bool {
        self.check_normalized().is_ok()
    }
}

impl<E: Clone + PartialEq> MatrixPair<E> {
    pub fn membership<M: Monoid<Elem = E>>(&self, monoid: &M, x: &E) -> bool {
        self.a
            .rows
            .iter()
            .zip(&self.b.rows)
            .all(|(ra, rb)| eval_row(monoid, ra, x) != eval_row(monoid, rb, x))
    }

    /// Rows of `self` followed by rows of `other`; the resulting set is the
    /// intersection of the two.
    pub fn stack(&self, other: &Self) -> Self {
        let mut a = self.a.rows.clone();
        a.extend(other.a.rows.iter().cloned());
        let mut b = self.b.rows.clone();
        b.extend(other.b.rows.iter().cloned());
        Self { a: RaggedMatrix { rows: a }, b: RaggedMatrix { rows: b } }
    }
}

fn signature_of<E>(a: &[Vec<E>], b: &[Vec<E>]) -> Vec<usize> {
    std::iter::once(a.len())
        .chain(a.iter().map(|r| r.len() - 1))
        .chain(b.iter().map(|r| r.len() - 1))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "pair")]
#[serde(bound(serialize = "E: Serialize + Clone", deserialize = "E: Deserialize<'de>"))]
pub enum NormalForm<E> {
    /// No element satisfies the inequations.
    Empty,
    /// Every element satisfies the inequations.
    Full,
    Proper(MatrixPair<E>),
}

impl<E: Clone + PartialEq> NormalForm<E> {
    pub fn contains<M: Monoid<Elem = E>>(&self, monoid: &M, x: &E) -> bool {
        match self {
            NormalForm::Empty => false,
            NormalForm::Full => true,
            NormalForm::Proper(p) => p.membership(monoid, x),
        }
    }

    pub fn proper(&self) -> Option<&MatrixPair<E>> {
        match self {
            NormalForm::Proper(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RewriteKind {
    /// Equal leading coefficients, both degrees positive: left-cancel `a x`.
    Cancel,
    /// Both sides constant and different: the row always holds.
    DeleteRow,
    /// Equal leading coefficients, left side constant: multiply both sides
    /// on the right by the adjuster.
    AdjustLeft,
    /// Mirror image of [`RewriteKind::AdjustLeft`].
    AdjustRight,
}

impl RewriteKind {
    /// Cancellation and deletion shrink the signature; adjustments keep it
    /// and instead settle the row they touch.
    pub fn shrinks_signature(self) -> bool {
        matches!(self, RewriteKind::Cancel | RewriteKind::DeleteRow)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteStep {
    pub row: usize,
    pub kind: RewriteKind,
    /// Signature after the step.
    pub signature: Vec<usize>,
    /// Rows whose leading entries still coincide after the step.
    pub unsettled: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "E: Serialize + Clone", deserialize = "E: Deserialize<'de>"))]
pub struct Normalization<E> {
    pub initial_signature: Vec<usize>,
    /// Rows of the input whose leading entries coincide.
    pub initial_unsettled: usize,
    pub steps: Vec<RewriteStep>,
    pub form: NormalForm<E>,
}

impl<E> Normalization<E> {
    /// Whether `(signature, unsettled)` decreases lexicographically at every
    /// step, with cancellations and deletions shrinking the signature itself.
    pub fn measure_decreases(&self) -> bool {
        let mut prev = (&self.initial_signature, self.initial_unsettled);
        for s in &self.steps {
            let ok = if s.kind.shrinks_signature() {
                s.signature < *prev.0
            } else {
                s.signature == *prev.0 && s.unsettled < prev.1
            };
            if !ok {
                return false;
            }
            prev = (&s.signature, s.unsettled);
        }
        true
    }
}

pub fn normalize<M: Cancellative>(
    pair: &MatrixPair<M::Elem>,
    monoid: &M,
    adjuster: &M::Elem,
) -> Result<NormalForm<M::Elem>> {
    normalize_traced(pair, monoid, adjuster).map(|n| n.form)
}

/// Rewrites `pair` into an equivalent pair in which every row has positive
/// degree on some side and distinct leading entries, or decides that the set
/// is empty or everything.
///
/// Rows are handled in ascending order. A row with equal leading entries is
/// left-cancelled while both sides have positive degree; when one side
/// becomes constant, both sides are multiplied on the right by `adjuster`
/// (the constant side absorbs it into its only entry, the other side into
/// its last), which separates the leading entries. Rows with two constant
/// sides are deleted when the constants differ and make the whole set empty
/// when they agree.
pub fn normalize_traced<M: Cancellative>(
    pair: &MatrixPair<M::Elem>,
    monoid: &M,
    adjuster: &M::Elem,
) -> Result<Normalization<M::Elem>> {
    if monoid.is_one(adjuster) {
        return Err(Error::InvalidAdjuster);
    }
    let mut a = pair.a.rows.clone();
    let mut b = pair.b.rows.clone();
    let initial_signature = signature_of(&a, &b);
    let mut steps = Vec::new();
    let mut unsettled = a.iter().zip(&b).filter(|(ra, rb)| ra[0] == rb[0]).count();
    let initial_unsettled = unsettled;

    let mut i = 0;
    'rows: while i < a.len() {
        loop {
            let (da, db) = (a[i].len() - 1, b[i].len() - 1);
            let kind = if a[i][0] != b[i][0] {
                if da == 0 && db == 0 {
                    a.remove(i);
                    b.remove(i);
                    steps.push(RewriteStep {
                        row: i,
                        kind: RewriteKind::DeleteRow,
                        signature: signature_of(&a, &b),
                        unsettled,
                    });
                    continue 'rows;
                }
                break;
            } else if da == 0 && db == 0 {
                return Ok(Normalization { initial_signature, initial_unsettled, steps, form: NormalForm::Empty });
            } else if da > 0 && db > 0 {
                a[i].remove(0);
                b[i].remove(0);
                if a[i][0] != b[i][0] {
                    unsettled -= 1;
                }
                RewriteKind::Cancel
            } else if da == 0 {
                a[i][0] = monoid.mul(&a[i][0], adjuster);
                let last = b[i].last_mut().expect("non-empty row");
                *last = monoid.mul(last, adjuster);
                unsettled -= 1;
                RewriteKind::AdjustLeft
            } else {
                b[i][0] = monoid.mul(&b[i][0], adjuster);
                let last = a[i].last_mut().expect("non-empty row");
                *last = monoid.mul(last, adjuster);
                unsettled -= 1;
                RewriteKind::AdjustRight
            };
            steps.push(RewriteStep { row: i, kind, signature: signature_of(&a, &b), unsettled });
        }
        i += 1;
    }

    let form = if a.is_empty() {
        NormalForm::Full
    } else {
        NormalForm::Proper(MatrixPair { a: RaggedMatrix { rows: a }, b: RaggedMatrix { rows: b } })
    };
    Ok(Normalization { initial_signature, initial_unsettled, steps, form })
}
