//! Shapes: ordered finite sets of labeled points.

use thiserror::Error;

use crate::part::Part;

/// Hard cap on the number of points in a shape. Parts are bit masks, and
/// operations that build whole topologies may touch up to `2^n` parts, so
/// the width is kept small.
pub const MAX_POINTS: usize = 16;

/// Tokens that would collide with the text formats if allowed as labels.
const RESERVED_LABELS: [&str; 4] = ["0", "->", "<=", "=>"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("label list is empty")]
    EmptyLabelList,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("malformed label `{label}`: {reason}")]
    MalformedLabel { label: String, reason: &'static str },
    #[error("{n} points exceed the supported maximum of {max}")]
    TooManyPoints { n: usize, max: usize },
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("point index {index} out of range for a shape with {count} points")]
    PointOutOfRange { index: usize, count: usize },
}

/// An ordered finite set of distinct point labels. Label order is fixed at
/// construction and defines the point indices `0..n-1`; all other types in
/// this crate identify points by those indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    labels: Vec<String>,
}

fn check_label(label: &str) -> Result<(), ShapeError> {
    let malformed = |reason| ShapeError::MalformedLabel {
        label: label.to_owned(),
        reason,
    };
    if label.is_empty() {
        return Err(malformed("labels must be non-empty"));
    }
    if !label.chars().all(|c| c.is_ascii_graphic()) {
        return Err(malformed(
            "labels must be printable ASCII without whitespace",
        ));
    }
    if label.contains('#') {
        return Err(malformed("`#` starts a comment in the text formats"));
    }
    if RESERVED_LABELS.contains(&label) {
        return Err(malformed("label is reserved by the text formats"));
    }
    Ok(())
}

impl Shape {
    /// Builds a shape from an ordered list of distinct labels.
    pub fn new<I, S>(labels: I) -> Result<Self, ShapeError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(ShapeError::EmptyLabelList);
        }
        if labels.len() > MAX_POINTS {
            return Err(ShapeError::TooManyPoints {
                n: labels.len(),
                max: MAX_POINTS,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            check_label(label)?;
            if labels[..i].contains(label) {
                return Err(ShapeError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Shape { labels })
    }

    pub fn point_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of the point at `index`. Panics if the index is out of range.
    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a label, reporting the unknown label on failure.
    pub fn resolve(&self, label: &str) -> Result<usize, ShapeError> {
        self.index_of(label)
            .ok_or_else(|| ShapeError::UnknownPoint(label.to_owned()))
    }

    /// The part containing every point of the shape.
    pub fn full(&self) -> Part {
        Part::from_bits((1u32 << self.point_count()) - 1)
    }

    /// The one-point part for `index`.
    pub fn singleton(&self, index: usize) -> Result<Part, ShapeError> {
        self.check_index(index)?;
        Ok(Part::from_bits(1u32 << index))
    }

    pub fn check_index(&self, index: usize) -> Result<(), ShapeError> {
        if index < self.point_count() {
            Ok(())
        } else {
            Err(ShapeError::PointOutOfRange {
                index,
                count: self.point_count(),
            })
        }
    }

    /// True when `part` only uses points of this shape.
    pub fn contains_part(&self, part: Part) -> bool {
        part.is_subset_of(self.full())
    }

    pub fn part_from_labels<I, S>(&self, labels: I) -> Result<Part, ShapeError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u32;
        for label in labels {
            bits |= 1u32 << self.resolve(label.as_ref())?;
        }
        Ok(Part::from_bits(bits))
    }

    pub fn part_from_indices<I>(&self, indices: I) -> Result<Part, ShapeError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u32;
        for index in indices {
            self.check_index(index)?;
            bits |= 1u32 << index;
        }
        Ok(Part::from_bits(bits))
    }

    /// Labels of the members of `part`, in index order.
    pub fn part_labels(&self, part: Part) -> Vec<&str> {
        part.members().map(|i| self.label(i)).collect()
    }

    /// Complement of `part` within this shape.
    pub fn complement(&self, part: Part) -> Part {
        self.full().minus(part)
    }

    /// Renders a part for diagnostics: `{p1,p3}`, or `0` for the empty part.
    pub fn part_string(&self, part: Part) -> String {
        if part.is_empty() {
            "0".to_owned()
        } else {
            format!("{{{}}}", self.part_labels(part).join(","))
        }
    }
}
