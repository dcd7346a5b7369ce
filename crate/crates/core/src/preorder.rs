//! Preorders on a shape's points and the order topology they induce.

use thiserror::Error;

use crate::part::Part;
use crate::shape::{Shape, ShapeError};
use crate::topology::{union_closure, Topology};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreorderError {
    #[error("relation is not reflexive: `{point}` is not related to itself")]
    NotReflexive { point: String },
    #[error("relation is not transitive: {q} <= {p} and {p} <= {r}, but {q} <= {r} is missing")]
    NotTransitive { q: String, p: String, r: String },
    #[error("relation matrix must be {expected}x{expected}, got {rows} rows of width {cols}")]
    BadDimensions {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A reflexive and transitive relation `q ⪯ p` on the points of a shape.
///
/// Stored row-wise as down-set masks: bit `q` of `below[p]` is set exactly
/// when `q ⪯ p`, so `below[p]` is already the minimal open part of `p` in
/// the induced topology.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    shape: Shape,
    below: Vec<u32>,
}

impl Preorder {
    /// The identity preorder: every point related only to itself.
    pub fn identity(shape: &Shape) -> Self {
        let below = (0..shape.point_count()).map(|p| 1u32 << p).collect();
        Preorder {
            shape: shape.clone(),
            below,
        }
    }

    /// The complete preorder: every pair related in both directions.
    pub fn complete(shape: &Shape) -> Self {
        let full = shape.full().bits();
        Preorder {
            shape: shape.clone(),
            below: vec![full; shape.point_count()],
        }
    }

    /// Smallest preorder containing the given `q ⪯ p` label pairs: the
    /// reflexive-transitive closure. Idempotent, and monotone in the pair
    /// set. Covering-pair lists are the expected input.
    pub fn closure_from_pairs<Q, P>(shape: &Shape, pairs: &[(Q, P)]) -> Result<Self, PreorderError>
    where
        Q: AsRef<str>,
        P: AsRef<str>,
    {
        let mut index_pairs = Vec::with_capacity(pairs.len());
        for (q, p) in pairs {
            index_pairs.push((shape.resolve(q.as_ref())?, shape.resolve(p.as_ref())?));
        }
        Self::closure_from_index_pairs(shape, &index_pairs)
    }

    /// Index-pair variant of [`Preorder::closure_from_pairs`].
    pub fn closure_from_index_pairs(
        shape: &Shape,
        pairs: &[(usize, usize)],
    ) -> Result<Self, PreorderError> {
        let n = shape.point_count();
        let mut below: Vec<u32> = (0..n).map(|p| 1u32 << p).collect();
        for &(q, p) in pairs {
            shape.check_index(q)?;
            shape.check_index(p)?;
            below[p] |= 1u32 << q;
        }
        warshall(&mut below);
        Ok(Preorder {
            shape: shape.clone(),
            below,
        })
    }

    /// Builds a preorder from `q ⪯ p` label pairs that must already be
    /// reflexively and transitively closed; no closure is applied.
    pub fn strict_from_pairs<Q, P>(shape: &Shape, pairs: &[(Q, P)]) -> Result<Self, PreorderError>
    where
        Q: AsRef<str>,
        P: AsRef<str>,
    {
        let n = shape.point_count();
        let mut below = vec![0u32; n];
        for (q, p) in pairs {
            let q = shape.resolve(q.as_ref())?;
            let p = shape.resolve(p.as_ref())?;
            below[p] |= 1u32 << q;
        }
        validate(shape, &below)?;
        Ok(Preorder {
            shape: shape.clone(),
            below,
        })
    }

    /// Builds a preorder from an `n`x`n` boolean matrix with `rel[q][p]`
    /// meaning `q ⪯ p`. The matrix must already be reflexive and
    /// transitive.
    pub fn from_matrix(shape: &Shape, rel: &[Vec<bool>]) -> Result<Self, PreorderError> {
        let n = shape.point_count();
        let cols = rel.first().map_or(0, Vec::len);
        if rel.len() != n || rel.iter().any(|row| row.len() != n) {
            return Err(PreorderError::BadDimensions {
                expected: n,
                rows: rel.len(),
                cols,
            });
        }
        let mut below = vec![0u32; n];
        for (q, row) in rel.iter().enumerate() {
            for (p, &related) in row.iter().enumerate() {
                if related {
                    below[p] |= 1u32 << q;
                }
            }
        }
        validate(shape, &below)?;
        Ok(Preorder {
            shape: shape.clone(),
            below,
        })
    }

    pub(crate) fn from_below_unchecked(shape: Shape, below: Vec<u32>) -> Self {
        debug_assert!(validate(&shape, &below).is_ok());
        Preorder { shape, below }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// True when `q ⪯ p`. Panics if either index is out of range.
    pub fn le(&self, q: usize, p: usize) -> bool {
        assert!(q < self.below.len() && p < self.below.len());
        self.below[p] >> q & 1 == 1
    }

    /// All points `q` with `q ⪯ p`.
    pub fn down_set(&self, p: usize) -> Part {
        Part::from_bits(self.below[p])
    }

    /// All points `q` with `p ⪯ q`.
    pub fn up_set(&self, p: usize) -> Part {
        let bits = (0..self.below.len())
            .filter(|&q| self.le(p, q))
            .fold(0u32, |acc, q| acc | 1 << q);
        Part::from_bits(bits)
    }

    /// True when the preorder is also antisymmetric, i.e. a partial order.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.below.len();
        (0..n).all(|p| (p + 1..n).all(|q| !(self.le(q, p) && self.le(p, q))))
    }

    /// All related ordered pairs `(q, p)` with `q ⪯ p`, in index order.
    pub fn related_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.below.len();
        let mut pairs = Vec::new();
        for q in 0..n {
            for p in 0..n {
                if self.le(q, p) {
                    pairs.push((q, p));
                }
            }
        }
        pairs
    }

    /// The order topology induced by this preorder: the down-set of each
    /// point becomes its minimal open part, and the opens are all unions of
    /// those parts together with the empty part. Inverse of
    /// [`Topology::to_preorder`].
    pub fn to_topology(&self) -> Topology {
        let mut basis: Vec<Part> = self.below.iter().map(|&m| Part::from_bits(m)).collect();
        basis.push(Part::EMPTY);
        let opens = union_closure(&basis);
        Topology::from_opens_unchecked(self.shape.clone(), opens)
    }
}

/// In-place reflexive-transitive closure of down-set rows.
fn warshall(below: &mut [u32]) {
    for (p, row) in below.iter_mut().enumerate() {
        *row |= 1 << p;
    }
    for k in 0..below.len() {
        let row_k = below[k];
        for row in below.iter_mut() {
            if *row >> k & 1 == 1 {
                *row |= row_k;
            }
        }
    }
}

/// Checks reflexivity and transitivity, reporting the first witness.
fn validate(shape: &Shape, below: &[u32]) -> Result<(), PreorderError> {
    let n = shape.point_count();
    debug_assert_eq!(below.len(), n);
    for (p, &row) in below.iter().enumerate() {
        if row >> p & 1 == 0 {
            return Err(PreorderError::NotReflexive {
                point: shape.label(p).to_owned(),
            });
        }
    }
    // q in below[p] forces below[q] ⊆ below[p]; a stray bit r is the witness
    // q <= p, r <= q without r <= p, reported in matrix orientation.
    for p in 0..n {
        for q in Part::from_bits(below[p]).members() {
            let missing = below[q] & !below[p];
            if missing != 0 {
                let r = missing.trailing_zeros() as usize;
                return Err(PreorderError::NotTransitive {
                    q: shape.label(r).to_owned(),
                    p: shape.label(q).to_owned(),
                    r: shape.label(p).to_owned(),
                });
            }
        }
    }
    Ok(())
}
