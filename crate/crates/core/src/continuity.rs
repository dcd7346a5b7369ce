//! Point maps between shapes and the continuity check.

use thiserror::Error;

use crate::part::Part;
use crate::shape::{Shape, ShapeError};
use crate::topology::Topology;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuityError {
    #[error("assignment covers {got} points but the source shape has {expected}")]
    WrongAssignmentLength { expected: usize, got: usize },
    #[error("image index {index} out of range for a target shape with {count} points")]
    ImageOutOfRange { index: usize, count: usize },
    #[error("point `{0}` is assigned more than once")]
    ConflictingAssignment(String),
    #[error("no assignment for source point `{0}`")]
    MissingAssignment(String),
    #[error("map endpoints do not match the given topologies")]
    ShapeMismatch,
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A total assignment of source points to target points, the candidate for
/// a continuity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMap {
    source: Shape,
    target: Shape,
    assignment: Vec<usize>,
}

impl PointMap {
    /// Builds a map from the image index of each source point in order.
    pub fn new(
        source: &Shape,
        target: &Shape,
        assignment: Vec<usize>,
    ) -> Result<Self, ContinuityError> {
        if assignment.len() != source.point_count() {
            return Err(ContinuityError::WrongAssignmentLength {
                expected: source.point_count(),
                got: assignment.len(),
            });
        }
        if let Some(&bad) = assignment.iter().find(|&&i| i >= target.point_count()) {
            return Err(ContinuityError::ImageOutOfRange {
                index: bad,
                count: target.point_count(),
            });
        }
        Ok(PointMap {
            source: source.clone(),
            target: target.clone(),
            assignment,
        })
    }

    /// Builds a map from `(source label, target label)` pairs; the pairs
    /// must cover every source point exactly once.
    pub fn from_label_pairs<S, T>(
        source: &Shape,
        target: &Shape,
        pairs: &[(S, T)],
    ) -> Result<Self, ContinuityError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut assignment: Vec<Option<usize>> = vec![None; source.point_count()];
        for (from, to) in pairs {
            let from_idx = source.resolve(from.as_ref())?;
            let to_idx = target.resolve(to.as_ref())?;
            if assignment[from_idx].is_some() {
                return Err(ContinuityError::ConflictingAssignment(
                    from.as_ref().to_owned(),
                ));
            }
            assignment[from_idx] = Some(to_idx);
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(p, image)| {
                image.ok_or_else(|| ContinuityError::MissingAssignment(source.label(p).to_owned()))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        Ok(PointMap {
            source: source.clone(),
            target: target.clone(),
            assignment,
        })
    }

    pub fn source(&self) -> &Shape {
        &self.source
    }

    pub fn target(&self) -> &Shape {
        &self.target
    }

    /// Image index of source point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.assignment[p]
    }

    /// Source points whose image lies in `part`.
    pub fn preimage(&self, part: Part) -> Part {
        let bits = self
            .assignment
            .iter()
            .enumerate()
            .filter(|&(_, &image)| part.contains(image))
            .fold(0u32, |acc, (p, _)| acc | 1 << p);
        Part::from_bits(bits)
    }
}

/// True when the preimage of every open of `target` is open in `source`.
/// Equivalent to the map preserving the induced preorders, which the test
/// suite asserts exhaustively on small shapes.
pub fn is_continuous(
    map: &PointMap,
    source: &Topology,
    target: &Topology,
) -> Result<bool, ContinuityError> {
    if map.source() != source.shape() || map.target() != target.shape() {
        return Err(ContinuityError::ShapeMismatch);
    }
    Ok(target
        .opens()
        .iter()
        .all(|&open| source.contains_open(map.preimage(open))))
}
