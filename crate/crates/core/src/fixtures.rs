//! Shared unit-test fixtures.

use crate::preorder::Preorder;
use crate::shape::Shape;
use crate::topology::Topology;

pub(crate) fn six_point_shape() -> Shape {
    Shape::new(["p1", "p2", "p3", "p4", "p5", "p6"]).unwrap()
}

/// Covering pairs of the six-point running example: p4 sits below p3 and
/// p6, the two chains rejoin at p2. Closure yields 17 related pairs and an
/// 11-open topology.
pub(crate) fn six_point_covers() -> Vec<(&'static str, &'static str)> {
    vec![
        ("p4", "p6"),
        ("p4", "p3"),
        ("p6", "p5"),
        ("p3", "p1"),
        ("p1", "p2"),
        ("p5", "p2"),
    ]
}

pub(crate) fn six_point_preorder() -> Preorder {
    Preorder::closure_from_pairs(&six_point_shape(), &six_point_covers()).unwrap()
}

pub(crate) fn six_point_topology() -> Topology {
    six_point_preorder().to_topology()
}
