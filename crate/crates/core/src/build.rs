//! Topology builders from external descriptions: directed graphs,
//! derivation traces, and basis relation matrices.

use thiserror::Error;

use crate::preorder::{Preorder, PreorderError};
use crate::shape::{Shape, ShapeError};
use crate::topology::Topology;

/// The order topology of a directed graph over the shape's points.
///
/// An edge `(p, q)` puts `q ⪯ p`; the preorder is the reflexive-transitive
/// closure of those reversed pairs. Self-loops are accepted and redundant,
/// since reflexivity supplies them anyway.
pub fn topology_from_graph<P, Q>(shape: &Shape, edges: &[(P, Q)]) -> Result<Topology, PreorderError>
where
    P: AsRef<str>,
    Q: AsRef<str>,
{
    let reversed: Vec<(&str, &str)> = edges
        .iter()
        .map(|(p, q)| (q.as_ref(), p.as_ref()))
        .collect();
    Ok(Preorder::closure_from_pairs(shape, &reversed)?.to_topology())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("step {index} does not increase on the previous step {previous}")]
    NonMonotoneStepIndex { index: usize, previous: usize },
    #[error("step {step}: child {label} equals the step's parent")]
    ChildEqualsParent { step: usize, label: String },
}

/// One rule application: `rule` applied to `parent` generated `children`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub index: usize,
    pub rule: String,
    pub parent: String,
    pub children: Vec<String>,
}

/// An ordered record of rule applications, as emitted by a set-grammar
/// interpreter. Step indices must strictly increase and no step may list
/// its parent among its children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTrace {
    steps: Vec<DerivationStep>,
}

impl DerivationTrace {
    pub fn new(steps: Vec<DerivationStep>) -> Result<Self, DerivationError> {
        for pair in steps.windows(2) {
            if pair[1].index <= pair[0].index {
                return Err(DerivationError::NonMonotoneStepIndex {
                    index: pair[1].index,
                    previous: pair[0].index,
                });
            }
        }
        for step in &steps {
            if let Some(child) = step.children.iter().find(|&c| *c == step.parent) {
                return Err(DerivationError::ChildEqualsParent {
                    step: step.index,
                    label: child.clone(),
                });
            }
        }
        Ok(DerivationTrace { steps })
    }

    pub fn steps(&self) -> &[DerivationStep] {
        &self.steps
    }
}

/// The order topology of a derivation trace: each step contributes
/// `parent ⪯ child` for every child, and the preorder is the
/// reflexive-transitive closure of those pairs — so ancestors across steps
/// end up below their descendants. Points the trace never mentions stay
/// related only to themselves.
pub fn topology_from_derivation(
    shape: &Shape,
    trace: &DerivationTrace,
) -> Result<Topology, PreorderError> {
    let mut pairs: Vec<(&str, &str)> = Vec::new();
    for step in trace.steps() {
        for child in &step.children {
            pairs.push((step.parent.as_str(), child.as_str()));
        }
    }
    Ok(Preorder::closure_from_pairs(shape, &pairs)?.to_topology())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error(
        "matrix must be {labels}x{labels} to match its basis, got {rows} rows of width {cols}"
    )]
    NonSquare {
        labels: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix entries must be 0 or 1, got {value} at row {row}, column {col}")]
    BadEntry { row: usize, col: usize, value: u8 },
    #[error("matrix is not reflexive: diagonal entry for {label} is 0")]
    NotReflexive { label: String },
    #[error("matrix is not antisymmetric: {a} <= {b} and {b} <= {a} hold together")]
    NotAntisymmetric { a: String, b: String },
    #[error("matrix is not transitive: {a} <= {b} and {b} <= {c}, but {a} <= {c} is missing")]
    NotTransitive { a: String, b: String, c: String },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A 0/1 matrix recording the partial order among the basis elements of a
/// point-free shape's topology. Entry `m[i][j] = 1` means `b_i ⪯ b_j`
/// (row below column). Construction validates squareness, entries, and
/// the partial-order laws, so a held value is always a valid input for
/// [`topology_from_relation_matrix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMatrix {
    shape: Shape,
    entries: Vec<Vec<u8>>,
}

impl RelationMatrix {
    pub fn new<I, S>(labels: I, entries: Vec<Vec<u8>>) -> Result<Self, MatrixError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let shape = Shape::new(labels)?;
        let k = shape.point_count();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.len() != k || entries.iter().any(|row| row.len() != k) {
            return Err(MatrixError::NonSquare {
                labels: k,
                rows: entries.len(),
                cols,
            });
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &value) in row.iter().enumerate() {
                if value > 1 {
                    return Err(MatrixError::BadEntry {
                        row: i,
                        col: j,
                        value,
                    });
                }
            }
        }
        for (i, row) in entries.iter().enumerate() {
            if row[i] == 0 {
                return Err(MatrixError::NotReflexive {
                    label: shape.label(i).to_owned(),
                });
            }
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, later_row) in entries.iter().enumerate().skip(i + 1) {
                if row[j] == 1 && later_row[i] == 1 {
                    return Err(MatrixError::NotAntisymmetric {
                        a: shape.label(i).to_owned(),
                        b: shape.label(j).to_owned(),
                    });
                }
            }
        }
        for (i, row_i) in entries.iter().enumerate() {
            for (j, &via) in row_i.iter().enumerate() {
                if via == 0 {
                    continue;
                }
                for (l, &onward) in entries[j].iter().enumerate() {
                    if onward == 1 && row_i[l] == 0 {
                        return Err(MatrixError::NotTransitive {
                            a: shape.label(i).to_owned(),
                            b: shape.label(j).to_owned(),
                            c: shape.label(l).to_owned(),
                        });
                    }
                }
            }
        }
        Ok(RelationMatrix { shape, entries })
    }

    /// The basis-element names, doubling as point labels of the output
    /// topology's shape.
    pub fn labels(&self) -> &[String] {
        self.shape.labels()
    }

    pub fn dimension(&self) -> usize {
        self.shape.point_count()
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }
}

/// The order topology of a relation matrix: basis elements become the
/// points of a fresh shape, `m[i][j] = 1` becomes `b_i ⪯ b_j`, and the
/// induced topology follows. Validation at construction makes this
/// infallible, and antisymmetry makes the result T0.
pub fn topology_from_relation_matrix(matrix: &RelationMatrix) -> Topology {
    let k = matrix.dimension();
    let mut below = vec![0u32; k];
    for (i, row) in matrix.entries.iter().enumerate() {
        for (j, &entry) in row.iter().enumerate() {
            if entry == 1 {
                below[j] |= 1 << i;
            }
        }
    }
    Preorder::from_below_unchecked(matrix.shape.clone(), below).to_topology()
}
