//! Topologies: validated families of open parts over a shape.

use thiserror::Error;

use crate::part::Part;
use crate::preorder::Preorder;
use crate::shape::Shape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("part {part} uses points outside the shape")]
    PartNotInShape { part: String },
    #[error("family does not contain the empty part")]
    MissingEmptyPart,
    #[error("family does not contain the full part")]
    MissingFullPart,
    #[error("family is not closed under union: {left} + {right} = {union} is missing")]
    NotClosedUnderUnion {
        left: String,
        right: String,
        union: String,
    },
    #[error(
        "family is not closed under intersection: {left} . {right} = {intersection} is missing"
    )]
    NotClosedUnderIntersection {
        left: String,
        right: String,
        intersection: String,
    },
    #[error("point index {index} out of range for a shape with {count} points")]
    UnknownPoint { index: usize, count: usize },
}

/// Outcome of checking the three topology axioms on a family of parts,
/// with the first witness pair for each failed closure axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub has_empty: bool,
    pub has_full: bool,
    pub union_failure: Option<(Part, Part)>,
    pub intersection_failure: Option<(Part, Part)>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.has_empty
            && self.has_full
            && self.union_failure.is_none()
            && self.intersection_failure.is_none()
    }
}

/// Deduplicates and sorts a family into the canonical part order.
fn canonicalize(mut parts: Vec<Part>) -> Vec<Part> {
    parts.sort();
    parts.dedup();
    parts
}

/// Checks the topology axioms on `family` over `shape`. The family must
/// already be shape-bound; duplicates are ignored. Witnesses are the first
/// failing pair in canonical scan order.
pub fn axiom_report(shape: &Shape, family: &[Part]) -> AxiomReport {
    let parts = canonicalize(family.to_vec());
    let full = shape.full();
    let mut report = AxiomReport {
        has_empty: parts.contains(&Part::EMPTY),
        has_full: parts.contains(&full),
        union_failure: None,
        intersection_failure: None,
    };
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            if report.union_failure.is_none() && parts.binary_search(&a.union(b)).is_err() {
                report.union_failure = Some((a, b));
            }
            if report.intersection_failure.is_none()
                && parts.binary_search(&a.intersection(b)).is_err()
            {
                report.intersection_failure = Some((a, b));
            }
            if report.union_failure.is_some() && report.intersection_failure.is_some() {
                return report;
            }
        }
    }
    report
}

/// All unions of subcollections of `elements`, including the empty union.
/// The result is deduplicated and canonically ordered.
///
/// Enumerating subcollections directly keeps the cost at `2^k` for `k`
/// distinct elements; the families generated here come from bases, so `k`
/// is at most one more than the point count.
pub fn union_closure(elements: &[Part]) -> Vec<Part> {
    let distinct: Vec<Part> = {
        let mut v = elements.to_vec();
        v.sort();
        v.dedup();
        v.retain(|p| !p.is_empty());
        v
    };
    let k = distinct.len();
    assert!(k <= 24, "union closure over too many generators");
    let mut unions = vec![0u32; 1 << k];
    for sub in 1usize..(1 << k) {
        let low = sub.trailing_zeros() as usize;
        unions[sub] = unions[sub & (sub - 1)] | distinct[low].bits();
    }
    canonicalize(unions.into_iter().map(Part::from_bits).collect())
}

/// A topology on a shape: a family of parts containing the empty and full
/// parts and closed under pairwise union and intersection. The family is
/// held deduplicated in canonical order, so equal topologies compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Topology {
    shape: Shape,
    opens: Vec<Part>,
}

impl Topology {
    /// Validates `family` as a topology over `shape`.
    pub fn from_parts<I>(shape: &Shape, family: I) -> Result<Self, TopologyError>
    where
        I: IntoIterator<Item = Part>,
    {
        let parts: Vec<Part> = family.into_iter().collect();
        if let Some(&bad) = parts.iter().find(|p| !shape.contains_part(**p)) {
            return Err(TopologyError::PartNotInShape {
                part: format!("{:#b}", bad.bits()),
            });
        }
        let report = axiom_report(shape, &parts);
        if !report.has_empty {
            return Err(TopologyError::MissingEmptyPart);
        }
        if !report.has_full {
            return Err(TopologyError::MissingFullPart);
        }
        let name = |p: Part| shape.part_string(p);
        if let Some((a, b)) = report.union_failure {
            return Err(TopologyError::NotClosedUnderUnion {
                left: name(a),
                right: name(b),
                union: name(a.union(b)),
            });
        }
        if let Some((a, b)) = report.intersection_failure {
            return Err(TopologyError::NotClosedUnderIntersection {
                left: name(a),
                right: name(b),
                intersection: name(a.intersection(b)),
            });
        }
        Ok(Topology {
            shape: shape.clone(),
            opens: canonicalize(parts),
        })
    }

    /// Used by constructions that produce families known to be closed.
    pub(crate) fn from_opens_unchecked(shape: Shape, opens: Vec<Part>) -> Self {
        debug_assert!(axiom_report(&shape, &opens).is_valid());
        Topology {
            shape,
            opens: canonicalize(opens),
        }
    }

    /// The two-open topology containing only the empty and full parts.
    pub fn indiscrete(shape: &Shape) -> Self {
        let opens = canonicalize(vec![Part::EMPTY, shape.full()]);
        Topology {
            shape: shape.clone(),
            opens,
        }
    }

    /// The topology in which all `2^n` parts are open.
    pub fn discrete(shape: &Shape) -> Self {
        let n = shape.point_count();
        let opens = (0..1u32 << n).map(Part::from_bits).collect();
        Topology {
            shape: shape.clone(),
            opens: canonicalize(opens),
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Open parts in canonical order.
    pub fn opens(&self) -> &[Part] {
        &self.opens
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    pub fn contains_open(&self, part: Part) -> bool {
        self.opens.binary_search(&part).is_ok()
    }

    /// The smallest open part containing the point `p`: the intersection of
    /// all open parts that contain it. Closure under finite intersection
    /// makes the result itself open.
    pub fn minimal_open_part(&self, p: usize) -> Result<Part, TopologyError> {
        let n = self.shape.point_count();
        if p >= n {
            return Err(TopologyError::UnknownPoint { index: p, count: n });
        }
        let min = self
            .opens
            .iter()
            .filter(|open| open.contains(p))
            .fold(self.shape.full(), |acc, &open| acc.intersection(open));
        debug_assert!(self.contains_open(min));
        Ok(min)
    }

    /// The preorder induced by this topology: `q ⪯ p` iff `q` lies in the
    /// minimal open part of `p`. Inverse of [`Preorder::to_topology`].
    pub fn to_preorder(&self) -> Preorder {
        let n = self.shape.point_count();
        let below: Vec<u32> = (0..n)
            .map(|p| self.minimal_open_part(p).expect("index in range").bits())
            .collect();
        Preorder::from_below_unchecked(self.shape.clone(), below)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape3() -> Shape {
        Shape::new(["p1", "p2", "p3"]).unwrap()
    }

    #[test]
    fn indiscrete_family_is_valid() {
        let s = shape3();
        let t = Topology::from_parts(&s, [Part::EMPTY, s.full()]).unwrap();
        assert_eq!(t.open_count(), 2);
        assert_eq!(t, Topology::indiscrete(&s));
    }

    #[test]
    fn discrete_family_is_valid() {
        let s = shape3();
        let all: Vec<Part> = (0..8u32).map(Part::from_bits).collect();
        let t = Topology::from_parts(&s, all).unwrap();
        assert_eq!(t.open_count(), 8);
        assert_eq!(t, Topology::discrete(&s));
    }

    #[test]
    fn union_gap_reported_with_witness() {
        let s = shape3();
        let family = vec![
            Part::EMPTY,
            s.part_from_labels(["p1"]).unwrap(),
            s.part_from_labels(["p2"]).unwrap(),
            s.full(),
        ];
        let err = Topology::from_parts(&s, family).unwrap_err();
        assert_eq!(
            err,
            TopologyError::NotClosedUnderUnion {
                left: "{p1}".into(),
                right: "{p2}".into(),
                union: "{p1,p2}".into(),
            }
        );
    }

    #[test]
    fn intersection_gap_reported_with_witness() {
        let s = shape3();
        let family = vec![
            Part::EMPTY,
            s.part_from_labels(["p1", "p2"]).unwrap(),
            s.part_from_labels(["p2", "p3"]).unwrap(),
            s.full(),
        ];
        let err = Topology::from_parts(&s, family).unwrap_err();
        assert_eq!(
            err,
            TopologyError::NotClosedUnderIntersection {
                left: "{p1,p2}".into(),
                right: "{p2,p3}".into(),
                intersection: "{p2}".into(),
            }
        );
    }

    #[test]
    fn missing_extremes_reported() {
        let s = shape3();
        let err = Topology::from_parts(&s, [s.full()]).unwrap_err();
        assert_eq!(err, TopologyError::MissingEmptyPart);
        let err = Topology::from_parts(&s, [Part::EMPTY]).unwrap_err();
        assert_eq!(err, TopologyError::MissingFullPart);
    }

    #[test]
    fn duplicates_are_dropped() {
        let s = shape3();
        let t = Topology::from_parts(&s, [Part::EMPTY, Part::EMPTY, s.full(), s.full()]).unwrap();
        assert_eq!(t.open_count(), 2);
    }

    #[test]
    fn foreign_part_rejected() {
        let s = shape3();
        let wide = Shape::new(["a", "b", "c", "d"]).unwrap();
        let bad = wide.full();
        assert!(matches!(
            Topology::from_parts(&s, [Part::EMPTY, bad, s.full()]).unwrap_err(),
            TopologyError::PartNotInShape { .. }
        ));
    }

    #[test]
    fn minimal_open_in_discrete_is_singleton() {
        let s = shape3();
        let t = Topology::discrete(&s);
        for p in 0..3 {
            assert_eq!(t.minimal_open_part(p).unwrap(), s.singleton(p).unwrap());
        }
        assert!(matches!(
            t.minimal_open_part(3).unwrap_err(),
            TopologyError::UnknownPoint { index: 3, count: 3 }
        ));
    }

    #[test]
    fn union_closure_generates_all_subcollection_unions() {
        let s = shape3();
        let a = s.part_from_labels(["p1"]).unwrap();
        let b = s.part_from_labels(["p2"]).unwrap();
        let generated = union_closure(&[a, b, Part::EMPTY]);
        assert_eq!(generated, canonicalize(vec![Part::EMPTY, a, b, a.union(b)]));
    }
}
